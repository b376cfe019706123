"""Oscillator realizations, graded brackets and the twelve spectrum-generating algebras.

The single-particle space is 4-dimensional with basis v1..v4. Two pairs of
oscillators act on it: fermionic ``f`` (epsilon = -1) and Z2xZ2-graded
parafermionic ``p`` (epsilon = +1). They share the first oscillator and differ
by one sign in the second. The Hamiltonian is

    H_min = a1^dag a1 + l a2^dag a2 = diag(0, l, 1, l + 1)

for either kind, so v3 carries energy 1 and v2 energy l.

Each catalog entry pairs one kind of oscillator with one of the four preset
sign forms. Its structure constants are stored as data and checked against
the matrices when the entry is first built.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import linalg
from .grading import BilinearForm, GradeWord, koszul_sign, preset
from .gmatrix import BasisGrading, DimMismatch, GradedMatrix
from .poly import LAMBDA, ZERO, PolyScalar, as_poly

__all__ = [
    "OSCILLATOR_BASIS",
    "OscillatorSet",
    "build_oscillators",
    "oscillator_relations",
    "build_hamiltonian",
    "graded_bracket",
    "JacobiReport",
    "jacobi_check",
    "Relation",
    "AlgebraSpec",
    "LABELS",
    "MIN_LABELS",
    "SUB_LABELS",
    "UnknownLabel",
    "NotClosed",
    "catalog",
    "ClosureReport",
    "closure_check",
    "HAMILTONIAN",
]

# v1 = vacuum (00), v2 = a2^dag v1 (01), v3 = a1^dag v1 (10), v4 (11).
# With this grading a1, a1^dag sit in sector 10 and a2, a2^dag in sector 01.
OSCILLATOR_BASIS = BasisGrading.of("00", "01", "10", "11")

HAMILTONIAN = "H_min"


class UnknownLabel(KeyError):
    pass


class NotClosed(ValueError):
    def __init__(self, label, left, right):
        super().__init__(f"{label}: bracket ({left}, {right}) leaves the span of the generators")
        self.pair = (left, right)


def _kron2(a, b):
    return [[a[i][j] * b[k][l] for j in range(2) for l in range(2)] for i in range(2) for k in range(2)]


_BETA = [[0, 1], [0, 0]]
_GAMMA = [[0, 0], [1, 0]]
_X = [[1, 0], [0, -1]]
_I2 = [[1, 0], [0, 1]]


def _epsilon_matrices(eps: int):
    """The explicit 4x4 forms; a1 is shared, a2 carries the sign eps."""
    a1 = [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]
    a2 = [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, eps], [0, 0, 0, 0]]
    return a1, a2


@dataclass(frozen=True)
class OscillatorSet:
    kind: str  # "fermionic" or "parafermionic"
    epsilon: int
    a1: GradedMatrix
    a1d: GradedMatrix
    a2: GradedMatrix
    a2d: GradedMatrix
    c: GradedMatrix

    @property
    def prefix(self) -> str:
        return "f" if self.kind == "fermionic" else "p"

    def creation(self) -> tuple[GradedMatrix, GradedMatrix, GradedMatrix]:
        """a1^dag, a2^dag and the composite a3^dag = a1^dag a2^dag."""
        return self.a1d, self.a2d, self.a1d @ self.a2d


def _anti(a, b):
    return a @ b + b @ a


def _comm(a, b):
    return a @ b - b @ a


def oscillator_relations(osc: OscillatorSet) -> list[tuple[str, GradedMatrix, GradedMatrix]]:
    """(name, lhs, rhs) for every defining relation of the oscillator superalgebra.

    The third group uses anticommutators for fermions and commutators for
    parafermions; the first two groups are common.
    """
    n = osc.prefix
    z = GradedMatrix.zero(OSCILLATOR_BASIS)
    ops = {f"{n}1": osc.a1, f"{n}1+": osc.a1d, f"{n}2": osc.a2, f"{n}2+": osc.a2d, "c": osc.c}
    rel = []
    for k in (f"{n}1", f"{n}2", f"{n}1+", f"{n}2+"):
        rel.append((f"{{{k},{k}}}=0", _anti(ops[k], ops[k]), z))
    rel.append((f"{{{n}1,{n}1+}}=c", _anti(osc.a1, osc.a1d), osc.c))
    rel.append((f"{{{n}2,{n}2+}}=c", _anti(osc.a2, osc.a2d), osc.c))
    for k, m in ops.items():
        rel.append((f"[c,{k}]=0", _comm(osc.c, m), z))
    third, sym = (_anti, "{}") if osc.kind == "fermionic" else (_comm, "[]")
    for x, y in itertools.product((f"{n}1", f"{n}1+"), (f"{n}2", f"{n}2+")):
        rel.append((f"{sym[0]}{x},{y}{sym[1]}=0", third(ops[x], ops[y]), z))
    return rel


@functools.lru_cache(maxsize=None)
def build_oscillators(kind: str) -> OscillatorSet:
    """Tensor-product realization of the fermionic or parafermionic pair."""
    if kind not in ("fermionic", "parafermionic"):
        raise ValueError(f"kind must be 'fermionic' or 'parafermionic', not {kind!r}")
    eps = -1 if kind == "fermionic" else 1
    second = _X if kind == "fermionic" else _I2
    raw = {
        "a1": _kron2(_BETA, _I2),
        "a1d": _kron2(_GAMMA, _I2),
        "a2": _kron2(second, _BETA),
        "a2d": _kron2(second, _GAMMA),
    }
    e1, e2 = _epsilon_matrices(eps)
    assert raw["a1"] == e1 and raw["a2"] == e2, "epsilon form disagrees with tensor form"
    grades = {"a1": "10", "a1d": "10", "a2": "01", "a2d": "01"}
    mats = {k: GradedMatrix(v, OSCILLATOR_BASIS, grades[k]) for k, v in raw.items()}
    osc = OscillatorSet(kind, eps, c=GradedMatrix.identity(OSCILLATOR_BASIS), **mats)
    for name, lhs, rhs in oscillator_relations(osc):
        assert lhs == rhs, f"{kind} relation {name} fails"
    return osc


@functools.lru_cache(maxsize=None)
def build_hamiltonian() -> GradedMatrix:
    """H_min = diag(0, l, 1, l+1), checked against both oscillator factorizations."""
    h = None
    for kind in ("fermionic", "parafermionic"):
        o = build_oscillators(kind)
        hk = o.a1d @ o.a1 + (o.a2d @ o.a2).scale(LAMBDA)
        assert h is None or hk == h, "fermionic and parafermionic H_min differ"
        h = hk
    assert h == GradedMatrix.diagonal([0, LAMBDA, 1, LAMBDA + 1], OSCILLATOR_BASIS)
    return h


def graded_bracket(a: GradedMatrix, b: GradedMatrix, form: BilinearForm) -> GradedMatrix:
    """``a b - (-1)^<grade a, grade b> b a``."""
    if a.dim != b.dim:
        raise DimMismatch(f"cannot bracket {a.dim}x{a.dim} with {b.dim}x{b.dim}")
    ab, ba = a @ b, b @ a
    return ab - ba if koszul_sign(form, a.grade, b.grade) > 0 else ab + ba


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    triples_checked: int
    failure: tuple[str, str, str] | None = None


def _named(generators) -> list[tuple[str, GradedMatrix]]:
    if isinstance(generators, Mapping):
        return list(generators.items())
    return [(f"g{i}", g) for i, g in enumerate(generators)]


def jacobi_check(generators, form: BilinearForm) -> JacobiReport:
    """Evaluate the graded Jacobi sum on every ordered triple of generators."""
    gens = _named(generators)
    count = 0
    for (na, a), (nb, b), (nc, c) in itertools.product(gens, repeat=3):
        al, be, ga = a.grade, b.grade, c.grade
        s = (
            graded_bracket(a, graded_bracket(b, c, form), form).scale(koszul_sign(form, ga, al))
            + graded_bracket(b, graded_bracket(c, a, form), form).scale(koszul_sign(form, al, be))
            + graded_bracket(c, graded_bracket(a, b, form), form).scale(koszul_sign(form, be, ga))
        )
        count += 1
        if not s.is_zero():
            return JacobiReport(False, count, (na, nb, nc))
    return JacobiReport(True, count)


@dataclass(frozen=True)
class Relation:
    """A tabulated structure relation: ``(left, right) = sum coeff * name``.

    ``bracket`` is "[]" for a commutator and "{}" for an anticommutator; it
    must agree with the form's sign for the two sectors.
    """

    left: str
    right: str
    bracket: str
    rhs: tuple[tuple[str, PolyScalar], ...] = ()

    def __str__(self):
        lhs = f"{self.bracket[0]}{self.left},{self.right}{self.bracket[1]}"
        if not self.rhs:
            return f"{lhs}=0"
        return lhs + "=" + "+".join(f"({c})*{n}" if c != 1 else n for n, c in self.rhs)


@dataclass(frozen=True)
class AlgebraSpec:
    label: str
    form: BilinearForm
    generators: Mapping[str, GradedMatrix]
    primitives: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    kind: str | None = None
    metadata: Mapping[str, str] = field(default_factory=dict)

    @property
    def is_minimal(self) -> bool:
        return self.label.endswith("_min")

    def sectors(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for name, g in self.generators.items():
            out.setdefault(str(g.grade), []).append(name)
        return out


# label -> (kind, form name, minimal?)
_SPECS = {
    "fLA_min": ("fermionic", "LA", True),
    "fLS_min": ("fermionic", "LS", True),
    "fCLA_min": ("fermionic", "CLA", True),
    "fCLS_min": ("fermionic", "CLS", True),
    "pLA_min": ("parafermionic", "LA", True),
    "pLS_min": ("parafermionic", "LS", True),
    "pCLA_min": ("parafermionic", "CLA", True),
    "pCLS_min": ("parafermionic", "CLS", True),
    "fLS_sub": ("fermionic", "LS", False),
    "fCLA_sub": ("fermionic", "CLA", False),
    "pLA_sub": ("parafermionic", "LA", False),
    "pCLS_sub": ("parafermionic", "CLS", False),
}
LABELS = tuple(_SPECS)
MIN_LABELS = tuple(k for k, v in _SPECS.items() if v[2])
SUB_LABELS = tuple(k for k, v in _SPECS.items() if not v[2])


def _r(left, right, bracket, *rhs):
    return Relation(left, right, bracket, tuple((n, as_poly(c)) for n, c in rhs))


# Creation-operator relations with x standing for f or p; 1, 2, 3 index the
# creation operators. The H_min relations are common to every label.
_CREATION_RELATIONS = {
    "fLA_min": [("1", "2", "[]", ("3", 2)), ("1", "3", "[]"), ("2", "3", "[]")],
    "fLS_min": [
        ("1", "1", "{}"), ("2", "2", "{}"), ("1", "2", "{}"),
        ("1", "3", "[]"), ("2", "3", "[]"),
    ],
    "fCLA_min": [("1", "2", "{}"), ("2", "3", "{}"), ("3", "1", "{}")],
    "fCLS_min": [
        ("1", "1", "{}"), ("2", "2", "{}"), ("1", "2", "[]", ("3", 2)),
        ("1", "3", "{}"), ("2", "3", "{}"),
    ],
    "pLA_min": [("1", "2", "[]"), ("2", "3", "[]"), ("3", "1", "[]")],
    "pLS_min": [
        ("1", "1", "{}"), ("2", "2", "{}"), ("1", "2", "{}", ("3", 2)),
        ("1", "3", "[]"), ("2", "3", "[]"),
    ],
    "pCLA_min": [("1", "2", "{}", ("3", 2)), ("1", "3", "{}"), ("2", "3", "{}")],
    "pCLS_min": [
        ("1", "1", "{}"), ("2", "2", "{}"), ("1", "2", "[]"),
        ("1", "3", "{}"), ("2", "3", "{}"),
    ],
    # subalgebras: the 3-generator restrictions, all creation brackets vanish
    "fLS_sub": [("1", "1", "{}"), ("2", "2", "{}"), ("1", "2", "{}")],
    "fCLA_sub": [("1", "2", "{}")],
    "pLA_sub": [("1", "2", "[]")],
    "pCLS_sub": [("1", "1", "{}"), ("2", "2", "{}"), ("1", "2", "[]")],
}

# Identification with an external classification of minimal color Lie
# (super)algebras; informational only.
_CLASSIFICATION = {
    "fCLA_min": "A8 with y=l, z=l+1",
    "pCLA_min": "A6 with x=(l-1)/(2*(l+1))",
    "fCLS_min": "S21 with y=l",
    "pCLS_min": "S18 with y=l, z=l+1",
}
# Alternative spellings of the 9-dimensional pair that occur in the literature.
_ALIASES = {"pLA_sub": "fLA_sub", "fCLA_sub": "pCLA_sub"}


def _relations_for(label: str) -> tuple[Relation, ...]:
    x = label[0]
    name = {"1": f"{x}1+", "2": f"{x}2+", "3": f"{x}3+"}
    rels = [
        _r(HAMILTONIAN, name["1"], "[]", (name["1"], 1)),
        _r(HAMILTONIAN, name["2"], "[]", (name["2"], LAMBDA)),
    ]
    if label.endswith("_min"):
        rels.append(_r(HAMILTONIAN, name["3"], "[]", (name["3"], LAMBDA + 1)))
    for item in _CREATION_RELATIONS[label]:
        a, b, br, *rhs = item
        rels.append(_r(name[a], name[b], br, *[(name[n], c) for n, c in rhs]))
    return tuple(rels)


@functools.lru_cache(maxsize=None)
def catalog(label: str) -> AlgebraSpec:
    """One of the twelve spectrum-generating algebras, with relations verified."""
    try:
        kind, form_name, minimal = _SPECS[label]
    except KeyError:
        raise UnknownLabel(f"unknown algebra {label!r}; choose from {LABELS}") from None
    osc = build_oscillators(kind)
    x = osc.prefix
    c1, c2, c3 = osc.creation()
    gens = {HAMILTONIAN: build_hamiltonian(), f"{x}1+": c1, f"{x}2+": c2}
    if minimal:
        gens[f"{x}3+"] = c3
    meta = {"oscillators": kind, "form": form_name}
    if label in _CLASSIFICATION:
        meta["classification"] = _CLASSIFICATION[label]
    if label in _ALIASES:
        meta["alias"] = _ALIASES[label]
    if not minimal:
        meta["enveloping_only"] = f"{x}3+ = {x}1+ {x}2+"
    spec = AlgebraSpec(
        label=label,
        form=preset(form_name),
        generators=gens,
        primitives=tuple(gens),
        relations=_relations_for(label),
        kind=kind,
        metadata=meta,
    )
    report = closure_check(spec)
    assert report.relations_ok, f"{label}: {report.mismatches}"
    return spec


def _solve_combination(target: GradedMatrix, gens: Sequence[GradedMatrix]):
    """Coefficients c_k in Q[l] with target = sum c_k g_k, or None.

    Unknowns are the Q-coefficients of each c_k up to deg(target); matching
    every power of l in every entry gives a linear system over Q.
    """
    if target.is_zero():
        return [ZERO] * len(gens)
    deg = max(x.degree for _, _, x in target.nonzeros())
    gdeg = max((x.degree for g in gens for _, _, x in g.nonzeros()), default=0)
    top = deg + gdeg
    positions = sorted({(i, j) for g in [target, *gens] for i, j, _ in g.nonzeros()})
    unknowns = [(k, d) for k in range(len(gens)) for d in range(deg + 1)]
    rows, rhs = [], []
    for i, j in positions:
        entries = [g.entries[i][j] for g in gens]
        t = target.entries[i][j]
        for p in range(top + 1):
            rows.append([entries[k].coeff(p - d) if p >= d else 0 for k, d in unknowns])
            rhs.append(t.coeff(p))
    if not unknowns:
        return None
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return None
    coeffs = []
    for k in range(len(gens)):
        coeffs.append(PolyScalar([sol[unknowns.index((k, d))] for d in range(deg + 1)]))
    return coeffs


@dataclass(frozen=True)
class ClosureReport:
    label: str
    closed: bool
    structure_constants: Mapping[tuple[str, str], Mapping[str, PolyScalar]]
    mismatches: tuple[str, ...] = ()

    @property
    def relations_ok(self) -> bool:
        return self.closed and not self.mismatches


def closure_check(spec: AlgebraSpec) -> ClosureReport:
    """Express every pairwise bracket in the span of the generators.

    Raises NotClosed on the first bracket that leaves the span. Tabulated
    relations stored on the spec are compared with the computed structure
    constants; disagreements are listed in ``mismatches``.
    """
    names = list(spec.generators)
    mats = [spec.generators[n] for n in names]
    consts = {}
    for (na, a), (nb, b) in itertools.combinations_with_replacement(zip(names, mats), 2):
        br = graded_bracket(a, b, spec.form)
        cands = [k for k, g in enumerate(mats) if g.grade == br.grade]
        sol = _solve_combination(br, [mats[k] for k in cands])
        if sol is None:
            raise NotClosed(spec.label, na, nb)
        consts[na, nb] = {names[k]: c for k, c in zip(cands, sol) if c}
    mismatches = []
    for rel in spec.relations:
        a, b = spec.generators[rel.left], spec.generators[rel.right]
        expect_sym = "{}" if spec.form(a.grade, b.grade) else "[]"
        if rel.bracket != expect_sym:
            mismatches.append(f"{rel}: form gives {expect_sym[0]}{expect_sym[1]} bracket")
            continue
        lhs = graded_bracket(a, b, spec.form)
        rhs = GradedMatrix.zero(a.basis, lhs.grade)
        for n, c in rel.rhs:
            rhs = rhs + spec.generators[n].scale(c)
        if lhs != rhs:
            mismatches.append(str(rel))
    return ClosureReport(spec.label, True, consts, tuple(mismatches))


def grade_of(spec: AlgebraSpec, name: str) -> GradeWord:
    return spec.generators[name].grade


def energy_shift(spec: AlgebraSpec, name: str) -> PolyScalar:
    """e with [H_min, g] = e g for a creation generator g."""
    h = spec.generators[HAMILTONIAN]
    g = spec.generators[name]
    sol = _solve_combination(graded_bracket(h, g, spec.form), [g])
    if sol is None:
        raise ValueError(f"{name} is not an eigen-operator of H_min")
    return sol[0]
