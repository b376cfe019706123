import pytest

from parastat.algebra import (
    HAMILTONIAN,
    LABELS,
    MIN_LABELS,
    OSCILLATOR_BASIS,
    SUB_LABELS,
    AlgebraSpec,
    NotClosed,
    UnknownLabel,
    build_hamiltonian,
    build_oscillators,
    catalog,
    closure_check,
    energy_shift,
    graded_bracket,
    jacobi_check,
    oscillator_relations,
)
from parastat.gmatrix import GradedMatrix
from parastat.grading import preset
from parastat.poly import LAMBDA

F = build_oscillators("fermionic")
P = build_oscillators("parafermionic")
ZERO4 = GradedMatrix.zero(OSCILLATOR_BASIS)
I4 = GradedMatrix.identity(OSCILLATOR_BASIS)


def anti(a, b):
    return a @ b + b @ a


def comm(a, b):
    return a @ b - b @ a


def test_fermionic_relations_by_hand():
    assert anti(F.a1, F.a2d) == ZERO4
    assert anti(F.a1, F.a2) == ZERO4
    assert anti(F.a1d, F.a2d) == ZERO4
    assert anti(F.a1, F.a1d) == I4 and anti(F.a2, F.a2d) == I4
    assert comm(F.a1, F.a2d) != ZERO4


def test_parafermionic_relations_by_hand():
    assert comm(P.a1, P.a2d) == ZERO4
    assert comm(P.a1d, P.a2d) == ZERO4
    assert anti(P.a1, P.a1d) == I4 and anti(P.a2, P.a2d) == I4
    assert anti(P.a1, P.a2d) != ZERO4


def test_sets_differ_only_in_third_group():
    # feed the parafermionic operators through the fermionic relation list
    mixed = F.__class__("fermionic", -1, P.a1, P.a1d, P.a2, P.a2d, P.c)
    failing = [i for i, (_, lhs, rhs) in enumerate(oscillator_relations(mixed)) if lhs != rhs]
    n = len(oscillator_relations(F))
    assert failing == list(range(n - 4, n))


def test_epsilon_and_sectors():
    assert F.epsilon == -1 and P.epsilon == 1
    assert F.a1 == P.a1 and F.a2 != P.a2
    for o in (F, P):
        assert str(o.a1.grade) == str(o.a1d.grade) == "10"
        assert str(o.a2.grade) == str(o.a2d.grade) == "01"
        assert str(o.c.grade) == "00"
        for m in o.creation():
            assert (m @ m).is_zero()


def test_hamiltonian():
    h = build_hamiltonian()
    assert h == GradedMatrix.diagonal([0, LAMBDA, 1, LAMBDA + 1], OSCILLATOR_BASIS)
    for o in (F, P):
        assert o.a1d @ o.a1 + (o.a2d @ o.a2).scale(LAMBDA) == h
        vac = [1, 0, 0, 0]
        a1v, a2v, a3v = (m.apply(vac) for m in o.creation())
        assert h.apply(vac) == [0] * 4
        assert h.apply(a1v) == a1v
        assert h.apply(a2v) == [LAMBDA * x for x in a2v]
        assert h.apply(a3v) == [(LAMBDA + 1) * x for x in a3v]
        assert o.a1.apply(vac) == [0] * 4 and o.a2.apply(vac) == [0] * 4


def test_bracket_examples():
    la = preset("LA")
    f3 = F.a1d @ F.a2d
    p3 = P.a1d @ P.a2d
    assert graded_bracket(F.a1d, F.a2d, la) == f3.scale(2)
    assert graded_bracket(P.a1d, P.a2d, la).is_zero()
    assert graded_bracket(P.a1d, P.a2d, preset("CLA")) == p3.scale(2)
    h = build_hamiltonian()
    for name in ("LA", "LS", "CLA", "CLS"):
        assert graded_bracket(h, F.a1d, preset(name)) == F.a1d


def test_catalog_structure_relations():
    fcls = catalog("fCLS_min")
    g = fcls.generators
    assert graded_bracket(g["f1+"], g["f2+"], fcls.form) == g["f3+"].scale(2)
    assert graded_bracket(g["f1+"], g["f3+"], fcls.form).is_zero()
    pcla = catalog("pCLA_min")
    g = pcla.generators
    assert graded_bracket(g["p1+"], g["p2+"], pcla.form) == g["p3+"].scale(2)


def test_catalog_shapes():
    assert len(LABELS) == 12
    for label in MIN_LABELS:
        spec = catalog(label)
        assert sorted(spec.sectors()) == ["00", "01", "10", "11"]
        assert all(len(v) == 1 for v in spec.sectors().values())
        for name in spec.primitives:
            if name != HAMILTONIAN:
                assert energy_shift(spec, name) in (1, LAMBDA, LAMBDA + 1)
    for label in SUB_LABELS:
        spec = catalog(label)
        assert "11" not in spec.sectors()
        assert len(spec.generators) == 3
        assert spec.metadata["enveloping_only"].startswith(label[0] + "3+")
    sub = catalog("pCLS_sub")
    assert set(sub.primitives) == {HAMILTONIAN, "p1+", "p2+"}
    with pytest.raises(UnknownLabel):
        catalog("fLA_sub")


def test_all_labels_close_and_satisfy_jacobi():
    for label in LABELS:
        spec = catalog(label)
        report = closure_check(spec)
        assert report.closed and report.relations_ok
        assert jacobi_check(spec.generators, spec.form).ok


def test_closure_structure_constants():
    consts = closure_check(catalog("fLA_min")).structure_constants
    nonzero = {k: v for k, v in consts.items() if HAMILTONIAN not in k and v}
    assert nonzero == {("f1+", "f2+"): {"f3+": 2}}
    consts = closure_check(catalog("fLS_sub")).structure_constants
    assert not any(v for k, v in consts.items() if HAMILTONIAN not in k)


def test_wrong_form_passes_jacobi_but_flags_relations():
    good = catalog("fCLS_min")
    wrong = AlgebraSpec("fCLS_min", preset("LA"), good.generators, good.primitives, good.relations)
    assert jacobi_check(wrong.generators, wrong.form).ok
    assert closure_check(wrong).mismatches


def test_jacobi_triple_of_one_generator():
    a = F.a1d
    report = jacobi_check([a, a, a], preset("CLS"))
    assert report.ok and report.triples_checked == 27


def test_two_generator_and_open_specs():
    h = build_hamiltonian()
    small = AlgebraSpec("toy", preset("LA"), {HAMILTONIAN: h, "f1+": F.a1d}, (HAMILTONIAN, "f1+"))
    assert closure_check(small).closed
    open_spec = AlgebraSpec("toy", preset("LA"), {"f1+": F.a1d, "f2+": F.a2d}, ("f1+", "f2+"))
    with pytest.raises(NotClosed) as err:
        closure_check(open_spec)
    assert err.value.pair == ("f1+", "f2+")


def test_metadata_aliases():
    assert catalog("pLA_sub").metadata["alias"] == "fLA_sub"
    assert catalog("fCLA_sub").metadata["alias"] == "pCLA_sub"
    assert catalog("fCLA_min").metadata["classification"].startswith("A8")
