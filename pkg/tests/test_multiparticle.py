import pytest

from _helpers import DIMS, EXPECTED, GOLDEN, SPACES, ray

from parastat.algebra import HAMILTONIAN, LABELS, OSCILLATOR_BASIS, build_oscillators, catalog
from parastat.gmatrix import GradedMatrix, graded_kron
from parastat.grading import preset
from parastat.multiparticle import (
    SPACE_ALIASES,
    NotPrimitive,
    StateRay,
    all_energies,
    coassociativity_check,
    coproduct_iterates,
    fingerprint,
    lift_primitive,
    lift_word,
    pauli_coefficient,
    space,
    vacuum2,
)
from parastat.poly import LAMBDA

@pytest.mark.parametrize("label", SPACES)
def test_rays_match_table(label):
    hs = space(label)
    assert hs.dim == DIMS[label]
    got = {}
    for e, r in hs.basis:
        got.setdefault(e, []).append(r)
    assert got == EXPECTED[label]  # includes order: beta before alpha at l+1


@pytest.mark.parametrize("label", SPACES)
def test_golden_file(label):
    assert space(label).format() == (GOLDEN / f"hilbert_{label}.txt").read_text()


@pytest.mark.parametrize("label", SPACES)
def test_rays_are_orthogonal_eigenvectors(label):
    spec = catalog(SPACE_ALIASES.get(label, label))
    h2 = lift_primitive(spec.generators[HAMILTONIAN], spec.form)
    hs = space(label)
    for k, (e, r) in enumerate(hs.basis):
        assert h2.apply(r.coords) == [e * c for c in r.coords]
        for _, s in hs.basis[:k]:
            assert r.inner(s) == 0


def test_f_and_p_minimal_spaces_coincide():
    for x in ("LA", "LS", "CLA", "CLS"):
        assert space(f"f{x}_min").same_rays(space(f"p{x}_min"))


def test_fingerprints():
    assert str(fingerprint(space("LS_min"))) == "{0:1, 1:1, l:1, l+1:2, l+2:1, 2*l+1:1, 2*l+2:1}"
    assert str(fingerprint(space("fLS_sub"))) == "{0:1, 1:1, l:1, l+1:1}"
    fp = fingerprint(space("fCLA_sub"))
    assert len(fp.entries) == 9 and all(m == 1 for _, m in fp.entries)
    for label in SPACES:
        assert fingerprint(space(label)).multiplicity("l+1") == (2 if label.endswith("_min") else 1)


def test_state_ray_canonical_form():
    assert StateRay.of([0, -2, 4]) == StateRay((0, 1, -2))
    assert str(ray(4, -7, 10, 13)) == "w4-w7+w10+w13"
    assert ray(12, 15).norm_sq == 2
    with pytest.raises(ValueError):
        StateRay((0, -1))


def test_lift_examples():
    f = catalog("fLS_min")
    h = f.generators[HAMILTONIAN]
    i4 = GradedMatrix.identity(OSCILLATOR_BASIS)
    lifted = lift_primitive(h, f.form)
    diag = [h.entries[i][i] + h.entries[k][k] for i in range(4) for k in range(4)]
    assert lifted == GradedMatrix.diagonal(diag, lifted.basis)
    assert lift_primitive(i4, f.form) == GradedMatrix.identity(lifted.basis).scale(2)
    f1 = f.generators["f1+"]
    assert (lift_primitive(f1, f.form) @ lift_primitive(f1, f.form)).is_zero()


def test_lift_word():
    spec = catalog("fLS_min")
    w12 = lift_word(spec, ["f1+", "f2+"])
    w3 = lift_word(spec, ["f3+"])
    assert w12 != w3
    assert w3 == lift_primitive(spec.generators["f3+"], spec.form)
    assert lift_word(catalog("fCLS_min"), ["f1+", "f1+"]).is_zero()
    with pytest.raises(NotPrimitive):
        lift_word(catalog("fLS_sub"), ["f3+"])


def test_pauli_coefficients():
    f1 = catalog("fLA_min").generators["f1+"]
    expected = {"LA": 2, "CLA": 2, "LS": 0, "CLS": 0}
    for name, k in expected.items():
        assert pauli_coefficient(f1, preset(name)) == k


def test_vacuum():
    assert vacuum2() == ray(1)
    spec = catalog("pLA_min")
    assert lift_primitive(spec.generators[HAMILTONIAN], spec.form).apply(vacuum2().coords) == [0] * 16
    for kind in ("fermionic", "parafermionic"):
        o = build_oscillators(kind)
        assert all(x == 0 for x in lift_primitive(o.a1, preset("CLS")).apply(vacuum2().coords))


def test_coassociativity_all_specs():
    for label in LABELS:
        report = coassociativity_check(catalog(label))
        assert report.ok, report.failures


def test_coproduct_iterates_identity_and_hamiltonian():
    spec = catalog("fCLA_min")
    i4 = GradedMatrix.identity(OSCILLATOR_BASIS)
    left, right = coproduct_iterates(i4, spec.form)
    assert left == right == GradedMatrix.identity(left.basis).scale(3)
    h = spec.generators[HAMILTONIAN]
    left, _ = coproduct_iterates(h, spec.form)
    d = [h.entries[i][i] for i in range(4)]
    expect = [d[i] + d[j] + d[k] for i in range(4) for j in range(4) for k in range(4)]
    assert left == GradedMatrix.diagonal(expect, left.basis)


def test_all_energies():
    assert [str(e) for e in all_energies()] == ["0", "1", "2", "l", "l+1", "l+2", "2*l", "2*l+1", "2*l+2"]
    assert LAMBDA + 2 in all_energies()


def test_kron_of_creations_is_not_the_lift():
    spec = catalog("fLA_min")
    f1 = spec.generators["f1+"]
    assert graded_kron(f1, f1, spec.form) != lift_primitive(f1, spec.form)
