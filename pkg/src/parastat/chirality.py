"""Yes/no projection measurements that separate sign-differing eigenvectors.

Two rays u, v can be told apart by a complementary pair of hermitian
projectors (P_u u = u, P_u v = 0, P_v = 1 - P_u on their span) exactly when
they are orthogonal. :func:`discriminate` decides this by the inner product;
:func:`brute_force_projector_oracle` decides it independently by polynomial
elimination over a fully general symmetric matrix.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .gmatrix import GradedMatrix, sector_pattern
from .multiparticle import TWO_PARTICLE_BASIS, StateRay, space
from .poly import PolyScalar, as_poly, parse_poly

__all__ = [
    "Pair",
    "PAIRS",
    "SIGN_PAIRS",
    "Projector",
    "Discriminable",
    "Indistinguishable",
    "Observable2",
    "ChiralityError",
    "NoSignDifference",
    "DegenerateLevel",
    "LevelNotPresent",
    "ZeroVector",
    "DimTooLarge",
    "PatternViolation",
    "NotEigenstate",
    "OBSERVABLE_PATTERN",
    "sign_pair",
    "discriminate",
    "brute_force_projector_oracle",
    "embed_observable",
    "measure",
    "parse_level",
]


class ChiralityError(ValueError):
    pass


class NoSignDifference(ChiralityError):
    pass


class DegenerateLevel(ChiralityError):
    pass


class LevelNotPresent(ChiralityError):
    pass


class ZeroVector(ChiralityError):
    pass


class DimTooLarge(ChiralityError):
    pass


class PatternViolation(ChiralityError):
    pass


class NotEigenstate(ChiralityError):
    pass


@dataclass(frozen=True)
class Pair:
    """Two Hilbert spaces with equal spectra: ordinary statistics vs colored."""

    name: str
    ordinary: str
    colored: str
    dim: int
    # spectrum-generating algebras realizing each side
    ordinary_algebras: tuple[str, ...]
    colored_algebras: tuple[str, ...]

    @property
    def members(self) -> tuple[str, ...]:
        return self.ordinary_algebras + self.colored_algebras


PAIRS = {
    p.name: p
    for p in (
        Pair("fLS_sub/pCLS_sub", "fLS_sub", "pCLS_sub", 4, ("fLS_sub",), ("pCLS_sub",)),
        Pair("LS_min/CLS_min", "LS_min", "CLS_min", 8,
             ("fLS_min", "pLS_min"), ("fCLS_min", "pCLS_min")),
        Pair("fCLA_sub/pLA_sub", "pLA_sub", "fCLA_sub", 9, ("pLA_sub",), ("fCLA_sub",)),
        Pair("LA_min/CLA_min", "LA_min", "CLA_min", 10,
             ("fLA_min", "pLA_min"), ("fCLA_min", "pCLA_min")),
    )
}
SIGN_PAIRS = ("LS_min/CLS_min", "fCLA_sub/pLA_sub", "LA_min/CLA_min")


def parse_level(text) -> PolyScalar:
    """Accept ``l+2``, ``lambda+2``, ``2l+1`` and the like."""
    return text if isinstance(text, PolyScalar) else parse_poly(str(text))


def _pair(pair) -> Pair:
    if isinstance(pair, Pair):
        return pair
    try:
        return PAIRS[pair]
    except KeyError:
        raise ChiralityError(f"unknown pair {pair!r}; choose from {tuple(PAIRS)}") from None


def sign_pair(pair, level) -> tuple[StateRay, StateRay]:
    """(ordinary ray, colored ray) at a nondegenerate level where they differ."""
    p = _pair(pair)
    e = parse_level(level)
    rays = []
    for label in (p.ordinary, p.colored):
        at = space(label).rays(e)
        if not at:
            raise LevelNotPresent(f"E={e} does not occur in {label}")
        if len(at) > 1:
            raise DegenerateLevel(f"E={e} has multiplicity {len(at)} in {label}")
        rays.append(at[0])
    if rays[0] == rays[1]:
        raise NoSignDifference(f"{p.name} share the E={e} eigenvector {rays[0]}")
    return rays[0], rays[1]


def _vec(x) -> tuple[Fraction, ...]:
    coords = x.coords if isinstance(x, StateRay) else x
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class Projector:
    """Rational symmetric idempotent acting on the coordinates ``support``."""

    matrix: tuple[tuple[Fraction, ...], ...]
    support: tuple[int, ...]

    def __post_init__(self):
        m = self.matrix
        k = len(self.support)
        assert len(m) == k and all(len(r) == k for r in m)
        assert all(m[i][j] == m[j][i] for i in range(k) for j in range(k)), "not symmetric"
        assert _matmul(m, m) == m, "not idempotent"

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        v = _vec(vector)
        out = list(v)
        restricted = [v[i] for i in self.support]
        for a, i in enumerate(self.support):
            out[i] = sum((self.matrix[a][b] * restricted[b] for b in range(len(restricted))),
                         Fraction(0))
        # coordinates outside the support are annihilated
        supp = set(self.support)
        return tuple(x if i in supp else Fraction(0) for i, x in enumerate(out))


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def _rank_one(v: Sequence[Fraction], support) -> Projector:
    r = [v[i] for i in support]
    nsq = sum(x * x for x in r)
    return Projector(tuple(tuple(a * b / nsq for b in r) for a in r), tuple(support))


@dataclass(frozen=True)
class Discriminable:
    p_plus: Projector
    p_minus: Projector


@dataclass(frozen=True)
class Indistinguishable:
    overlap_sq: Fraction

    @property
    def overlap(self):
        """|<u,v>| / (|u| |v|); a Fraction when it is rational, else a float."""
        q = self.overlap_sq
        n, d = isqrt(q.numerator), isqrt(q.denominator)
        if n * n == q.numerator and d * d == q.denominator:
            return Fraction(n, d)
        return float(q) ** 0.5


def discriminate(u, v) -> Discriminable | Indistinguishable:
    """Projectors separating u from v, or the reason none exist.

    Orthogonal rays get ``P_plus = u u^T/<u,u>`` and ``P_minus = v v^T/<v,v>``
    on the joint support. Otherwise P_plus v = 0 and P_plus u = u would put v
    in a range orthogonal to one containing u while <u,v> != 0.
    """
    a, b = _vec(u), _vec(v)
    if len(a) != len(b):
        raise ChiralityError("rays live in spaces of different dimension")
    if not any(a) or not any(b):
        raise ZeroVector("cannot discriminate the zero vector")
    ip = sum((x * y for x, y in zip(a, b)), Fraction(0))
    if ip:
        nn = sum(x * x for x in a) * sum(y * y for y in b)
        return Indistinguishable(ip * ip / nn)
    support = tuple(i for i in range(len(a)) if a[i] or b[i])
    pu, pv = _rank_one(a, support), _rank_one(b, support)
    # complementary pair on span{u, v}
    assert pu.apply(a) == a and pu.apply(b) == tuple(Fraction(0) for _ in b)
    assert pv.apply(b) == b and pv.apply(a) == tuple(Fraction(0) for _ in a)
    zero = tuple(tuple(Fraction(0) for _ in support) for _ in support)
    assert _matmul(pu.matrix, pv.matrix) == zero and _matmul(pv.matrix, pu.matrix) == zero
    for x in (a, b):
        s = tuple(p + q for p, q in zip(pu.apply(x), pv.apply(x)))
        assert s == x
    return Discriminable(pu, pv)


def brute_force_projector_oracle(u, v, max_dim: int = 4) -> bool:
    """Does a symmetric projector with P u = u and P v = 0 exist?

    Entries of a general symmetric matrix are unknowns. The linear conditions
    P u = u, P v = 0 are solved first; idempotence then becomes a polynomial
    system in the remaining parameters, which is inconsistent iff its
    Groebner basis is {1}.
    """
    from sympy import QQ
    from sympy.polys.groebnertools import groebner
    from sympy.polys.orderings import grevlex
    from sympy.polys.rings import ring
    from sympy.polys.solvers import solve_lin_sys

    a, b = _vec(u), _vec(v)
    if len(a) > max_dim:
        raise DimTooLarge(f"oracle limited to dimension {max_dim}, got {len(a)}")
    if not any(a) or not any(b):
        raise ZeroVector("cannot discriminate the zero vector")
    n = len(a)
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    r, *gens = ring([f"p_{i}_{j}" for i, j in cells], QQ, grevlex)
    var = dict(zip(cells, gens))
    p = [[var[min(i, j), max(i, j)] for j in range(n)] for i in range(n)]

    def times(m, x):
        return [sum((m[i][k] * QQ(x[k].numerator, x[k].denominator) for k in range(n)), r.zero)
                for i in range(n)]

    linear = [pu - QQ(x.numerator, x.denominator) for pu, x in zip(times(p, a), a)] + times(p, b)
    sol = solve_lin_sys([e for e in linear if e], r, _raw=True)
    if sol is None:
        return False
    # substitute the solved unknowns; the rest stay free
    sub = {g: r(sol[g]) if g in sol else g for g in gens}
    p = [[sub[x] for x in row] for row in p]
    sq = [[sum((p[i][k] * p[k][j] for k in range(n)), r.zero) - p[i][j] for j in range(n)]
          for i in range(n)]
    eqs = [e for row in sq for e in row if e]
    if not eqs:
        return True
    basis = groebner(eqs, r)
    return not (len(basis) == 1 and basis[0] == r.one)


@functools.lru_cache(maxsize=None)
def _observable_pattern() -> frozenset[tuple[int, int]]:
    rows = [
        "*0000*0000*0000*",
        "0*00*000000*00*0",
        "00*0000**0000*00",
        "000*00*00*00*000",
        "0*00*000000*00*0",
        "*0000*0000*0000*",
        "000*00*00*00*000",
        "00*0000**0000*00",
        "00*0000**0000*00",
        "000*00*00*00*000",
        "*0000*0000*0000*",
        "0*00*000000*00*0",
        "000*00*00*00*000",
        "00*0000**0000*00",
        "0*00*000000*00*0",
        "*0000*0000*0000*",
    ]
    return frozenset((i, j) for i, r in enumerate(rows) for j, ch in enumerate(r) if ch == "*")


OBSERVABLE_PATTERN = _observable_pattern()


@dataclass(frozen=True)
class Observable2:
    matrix: GradedMatrix

    def __post_init__(self):
        m = self.matrix
        assert m.dim == 16 and str(m.grade) == "00"
        assert all(m.entries[i][j] == m.entries[j][i] for i in range(16) for j in range(16))
        assert {(i, j) for i, j, _ in m.nonzeros()} <= OBSERVABLE_PATTERN


def embed_observable(p: Projector, support: Sequence[int] | None = None) -> Observable2:
    """Place a projector on the given 0-based two-particle coordinates; zero elsewhere."""
    support = tuple(p.support if support is None else support)
    if len(support) != len(p.matrix):
        raise ChiralityError("support size does not match the projector")
    if any(not 0 <= i < 16 for i in support):
        raise ChiralityError(f"support {support} outside the 16 two-particle coordinates")
    data = {}
    for a, i in enumerate(support):
        for b, j in enumerate(support):
            x = p.matrix[a][b]
            if x:
                if (i, j) not in OBSERVABLE_PATTERN:
                    raise PatternViolation(
                        f"entry (w{i + 1}, w{j + 1}) is outside the 00-graded observable pattern"
                    )
                data[i, j] = x
    rows = [[as_poly(data.get((i, j), 0)) for j in range(16)] for i in range(16)]
    assert OBSERVABLE_PATTERN == sector_pattern(TWO_PARTICLE_BASIS, "00")
    return Observable2(GradedMatrix(rows, TWO_PARTICLE_BASIS, "00"))


def measure(state: StateRay, obs: Observable2) -> int:
    """Outcome (1 + eps)/2 of the projection on an eigenstate: 1 or 0."""
    v = [Fraction(c) for c in state.coords]
    out = obs.matrix.apply(v)
    out = [x.constant_value() for x in out]
    if not any(out):
        return 0
    if out == v:
        return 1
    raise NotEigenstate(f"{state} is not an eigenstate of the observable")
