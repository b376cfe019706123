"""Two-particle sector: braided coproduct, induced Hilbert spaces, spectra.

The coproduct of a primitive g is ``g x 1 + 1 x g`` with the braided tensor
product, realized on V x V (basis w1..w16, w_{4(i-1)+k} = v_i x v_k) through
:func:`~parastat.gmatrix.graded_kron`. The Hilbert space of an algebra is the
orbit of the two-particle vacuum w1 under lifted words in its primitives.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import HAMILTONIAN, OSCILLATOR_BASIS, AlgebraSpec, catalog
from .grading import BilinearForm
from .gmatrix import GradedMatrix, graded_kron
from .poly import PolyScalar, as_poly, parse_poly

__all__ = [
    "StateRay",
    "w",
    "HilbertSpace2",
    "SpectrumFingerprint",
    "NotPrimitive",
    "NotEigenvector",
    "TWO_PARTICLE_BASIS",
    "SPACE_ALIASES",
    "lift_primitive",
    "lift_word",
    "pauli_coefficient",
    "vacuum2",
    "hilbert_space",
    "space",
    "fingerprint",
    "CoassociativityReport",
    "coassociativity_check",
    "MAX_WORD_LENGTH",
    "all_energies",
    "coproduct_iterates",
]

TWO_PARTICLE_BASIS = OSCILLATOR_BASIS.tensor(OSCILLATOR_BASIS)
MAX_WORD_LENGTH = 4

# f- and p-built minimal algebras induce the same space; the bare names use f.
SPACE_ALIASES = {
    "LA_min": "fLA_min",
    "LS_min": "fLS_min",
    "CLA_min": "fCLA_min",
    "CLS_min": "fCLS_min",
}


class NotPrimitive(ValueError):
    pass


class NotEigenvector(ArithmeticError):
    pass


def _energy(x) -> PolyScalar:
    p = parse_poly(x) if isinstance(x, str) else as_poly(x)
    if p is NotImplemented:
        raise TypeError(f"{x!r} is not an energy")
    return p


def w(j: int) -> int:
    """0-based coordinate of the basis vector w_j (j counted from 1)."""
    if not 1 <= j <= 16:
        raise ValueError(f"w_{j} is not a two-particle basis vector")
    return j - 1


@dataclass(frozen=True, order=True)
class StateRay:
    """A ray stored as coprime integers whose first nonzero entry is positive."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if linalg.primitive_integer_vector(self.coords) != tuple(self.coords):
            raise ValueError(f"{self.coords} is not in canonical form; use StateRay.of")

    @classmethod
    def of(cls, vector: Sequence) -> "StateRay":
        return cls(linalg.primitive_integer_vector(vector))

    @classmethod
    def from_terms(cls, dim: int, terms: dict[int, int]) -> "StateRay":
        """From ``{j: coefficient}`` with 1-based w indices."""
        v = [0] * dim
        for j, c in terms.items():
            v[j - 1] = c
        return cls.of(v)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def norm_sq(self) -> int:
        return sum(c * c for c in self.coords)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c)

    def inner(self, other: "StateRay") -> int:
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def __str__(self):
        out = ""
        for i, c in enumerate(self.coords):
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if out else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out += f"{sign}{mag}w{i + 1}"
        return out


def lift_primitive(g: GradedMatrix, form: BilinearForm) -> GradedMatrix:
    """Coproduct image ``g x 1 + 1 x g`` of a primitive element."""
    one = GradedMatrix.identity(g.basis)
    return graded_kron(g, one, form) + graded_kron(one, g, form)


def lift_word(spec: AlgebraSpec, word: Sequence[str]) -> GradedMatrix:
    """Coproduct image of a product of primitives, leftmost factor first."""
    if not word:
        raise ValueError("empty word")
    for name in word:
        if name not in spec.primitives:
            raise NotPrimitive(f"{name} is not a primitive element of {spec.label}")
    out = None
    for name in word:
        m = _lifted(spec, name)
        out = m if out is None else out @ m
    return out


def _lifted(spec: AlgebraSpec, name: str) -> GradedMatrix:
    return lift_primitive(spec.generators[name], spec.form)


def pauli_coefficient(g: GradedMatrix, form: BilinearForm) -> PolyScalar:
    """Factor k with ``lift(g)^2 = k * (g x g)`` for a nilpotent homogeneous g."""
    if not (g @ g).is_zero():
        raise ValueError("pauli_coefficient needs a nilpotent operator (g^2 = 0)")
    k = as_poly(1 + (-1) ** form(g.grade, g.grade))
    lifted = lift_primitive(g, form)
    assert lifted @ lifted == graded_kron(g, g, form).scale(k)
    return k


def vacuum2() -> StateRay:
    return StateRay.from_terms(16, {1: 1})


def _apply(m: GradedMatrix, vec: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * len(vec)
    for i, j, x in m.nonzeros():
        if vec[j]:
            out[i] += x.constant_value() * vec[j]
    return out


def _energy_of(h2: GradedMatrix, vec: Sequence[Fraction]) -> PolyScalar:
    hv = h2.apply(vec)
    i = next(k for k, x in enumerate(vec) if x)
    e = hv[i] * (1 / Fraction(vec[i]))
    for k, x in enumerate(vec):
        if hv[k] != e * x:
            raise NotEigenvector(f"orbit vector {vec} is not an eigenvector of H^(2)")
    return e


@dataclass(frozen=True)
class HilbertSpace2:
    label: str
    basis: tuple[tuple[PolyScalar, StateRay], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def rays(self, energy=None) -> list[StateRay]:
        if energy is None:
            return [r for _, r in self.basis]
        e = _energy(energy)
        return [r for en, r in self.basis if en == e]

    def energies(self) -> list[PolyScalar]:
        return [e for e, _ in self.basis]

    def same_rays(self, other: "HilbertSpace2") -> bool:
        return self.basis == other.basis

    def format(self) -> str:
        """One line per ray: ``E=<poly> : <16 integer coefficients>``."""
        return "".join(
            f"E={e} : {' '.join(str(c) for c in r.coords)}\n" for e, r in self.basis
        )


def hilbert_space(spec: AlgebraSpec | str) -> HilbertSpace2:
    """Orbit of the two-particle vacuum under the lifted primitive words.

    Words over the creation primitives up to MAX_WORD_LENGTH are applied to w1;
    H_min only rescales eigenvectors so it contributes nothing new. Orbit
    vectors are grouped by H^(2) eigenvalue, reduced to row echelon form,
    orthogonalized within each level and stored as canonical rays. Levels are
    ordered by energy; rays within a level keep the echelon (pivot) order.
    """
    if isinstance(spec, str):
        return space(spec)
    h2 = _lifted(spec, HAMILTONIAN)
    creators = [n for n in spec.primitives if n != HAMILTONIAN]
    lifted = [_lifted(spec, n) for n in creators]
    for m in lifted:
        assert m.is_constant(), "creation operators must have constant entries"

    vac = [Fraction(c) for c in vacuum2().coords]

    def orbit(max_len):
        out = []
        for length in range(max_len + 1):
            for word in itertools.product(range(len(lifted)), repeat=length):
                v = vac
                for k in reversed(word):
                    v = _apply(lifted[k], v)
                    if not any(v):
                        break
                if any(v):
                    out.append(v)
        return out

    vectors = orbit(MAX_WORD_LENGTH)
    span, _ = linalg.rref(vectors)
    longer, _ = linalg.rref(vectors + orbit(MAX_WORD_LENGTH + 1)[len(vectors):])
    assert len(longer) == len(span), "words longer than the bound enlarge the orbit"

    levels: dict[PolyScalar, list] = {}
    for v in vectors:
        levels.setdefault(_energy_of(h2, v), []).append(v)
    basis = []
    for e in sorted(levels, key=PolyScalar.sort_key):
        red, _ = linalg.rref(levels[e])
        for v in linalg.gram_schmidt(red):
            basis.append((e, StateRay.of(v)))
    assert len(basis) == len(span)
    return HilbertSpace2(spec.label, tuple(basis))


@functools.lru_cache(maxsize=None)
def space(label: str) -> HilbertSpace2:
    """Cached Hilbert space of a catalog label (or LA_min, LS_min, CLA_min, CLS_min)."""
    spec = catalog(SPACE_ALIASES.get(label, label))
    hs = hilbert_space(spec)
    return HilbertSpace2(label, hs.basis)


@dataclass(frozen=True)
class SpectrumFingerprint:
    entries: tuple[tuple[PolyScalar, int], ...]

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, energy) -> int:
        e = _energy(energy)
        return next((m for en, m in self.entries if en == e), 0)

    def __contains__(self, energy) -> bool:
        return self.multiplicity(energy) > 0

    def energies(self) -> list[PolyScalar]:
        return [e for e, _ in self.entries]

    def __str__(self):
        return "{" + ", ".join(f"{e}:{m}" for e, m in self.entries) + "}"


def fingerprint(hs: HilbertSpace2) -> SpectrumFingerprint:
    counts: dict[PolyScalar, int] = {}
    for e, _ in hs.basis:
        counts[e] = counts.get(e, 0) + 1
    return SpectrumFingerprint(
        tuple((e, counts[e]) for e in sorted(counts, key=PolyScalar.sort_key))
    )


@dataclass(frozen=True)
class CoassociativityReport:
    label: str
    ok: bool
    checked: tuple[str, ...]
    failures: tuple[str, ...] = ()


def coproduct_iterates(g: GradedMatrix, form: BilinearForm) -> tuple[GradedMatrix, GradedMatrix]:
    """(Delta x 1) Delta(g) and (1 x Delta) Delta(g) as 3-particle matrices."""
    one = GradedMatrix.identity(g.basis)
    one2 = GradedMatrix.identity(g.basis.tensor(g.basis))

    def k(a, b):
        return graded_kron(a, b, form)

    left = k(k(g, one), one) + k(k(one, g), one) + k(one2, g)
    right = k(g, one2) + k(one, k(g, one)) + k(one, k(one, g))
    return left, right


def coassociativity_check(spec: AlgebraSpec) -> CoassociativityReport:
    failures = []
    for name in spec.primitives:
        left, right = coproduct_iterates(spec.generators[name], spec.form)
        if left != right:
            failures.append(name)
    return CoassociativityReport(spec.label, not failures, spec.primitives, tuple(failures))


@functools.lru_cache(maxsize=None)
def all_energies() -> tuple[PolyScalar, ...]:
    """Every energy level occurring in any two-particle space."""
    levels = {e for lbl in SPACE_ALIASES for e in space(lbl).energies()}
    return tuple(sorted(levels, key=PolyScalar.sort_key))
