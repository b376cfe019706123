"""Homogeneous square matrices over Q[l] and their graded tensor products.

A :class:`GradedMatrix` remembers the grading of its representation space
(:class:`BasisGrading`) and its own sector. Entry (i, j) may be nonzero only
when ``grade(v_i) + grade(v_j)`` equals the matrix grade; this is checked on
every construction.

:func:`graded_kron` realizes the braided tensor product as an ordinary
matrix. The Koszul sign ``(-1)^<grade B, grade v_j>`` is attached to column
j of the left factor, so plain matrix multiplication of two images obeys

    (A x B)(C x D) = (-1)^<grade B, grade C> (AC) x (BD).
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .grading import ArityMismatch, BilinearForm, GradeWord, word
from .poly import ONE, ZERO, PolyScalar, as_poly, parse_poly

__all__ = [
    "BasisGrading",
    "STANDARD_BASIS",
    "GradedMatrix",
    "GradedMatrixError",
    "InhomogeneousMatrix",
    "ZeroMatrix",
    "DimMismatch",
    "GradeMismatch",
    "OutOfRegime",
    "NonLinearEnergy",
    "sector_pattern",
    "infer_grade",
    "mat_multiply",
    "graded_kron",
    "dagger",
    "evaluate",
    "collision_set",
    "format_matrix",
    "parse_matrix",
]


class GradedMatrixError(ValueError):
    pass


class InhomogeneousMatrix(GradedMatrixError):
    def __init__(self, first, second):
        (i, j, a), (k, l, b) = first, second
        super().__init__(
            f"entry ({i},{j}) lies in sector {a} but entry ({k},{l}) lies in sector {b}"
        )
        self.positions = ((i, j), (k, l))


class ZeroMatrix(GradedMatrixError):
    pass


class DimMismatch(GradedMatrixError):
    pass


class GradeMismatch(GradedMatrixError):
    pass


class NonLinearEnergy(GradedMatrixError):
    pass


class OutOfRegime(UserWarning):
    """Evaluation point l0 <= 1, where the model's spectrum is not ordered."""


@dataclass(frozen=True)
class BasisGrading:
    grades: tuple[GradeWord, ...]

    @classmethod
    def of(cls, *words) -> "BasisGrading":
        return cls(tuple(word(w) for w in words))

    @property
    def dim(self) -> int:
        return len(self.grades)

    @property
    def n(self) -> int:
        return self.grades[0].n

    def tensor(self, other: "BasisGrading") -> "BasisGrading":
        """Grading of the product basis, ordered (i, k) -> i * dim(other) + k."""
        return BasisGrading(tuple(a + b for a in self.grades for b in other.grades))

    def __getitem__(self, i) -> GradeWord:
        return self.grades[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.grades)) + ")"


# V = V_00 + V_10 + V_01 + V_11, one basis vector per sector in this order
STANDARD_BASIS = BasisGrading.of("00", "10", "01", "11")


def sector_pattern(basis: BasisGrading, grade) -> frozenset[tuple[int, int]]:
    g = word(grade)
    return frozenset(
        (i, j)
        for i, a in enumerate(basis.grades)
        for j, b in enumerate(basis.grades)
        if a + b == g
    )


def _to_rows(entries) -> tuple[tuple[PolyScalar, ...], ...]:
    rows = []
    for r in entries:
        row = []
        for x in r:
            p = as_poly(x)
            if p is NotImplemented:
                raise TypeError(f"unsupported matrix entry {x!r}")
            row.append(p)
        rows.append(tuple(row))
    return tuple(rows)


def infer_grade(entries, basis: BasisGrading = STANDARD_BASIS) -> GradeWord:
    """The unique sector containing every nonzero entry."""
    rows = _to_rows(entries)
    if len(rows) != basis.dim or any(len(r) != basis.dim for r in rows):
        raise DimMismatch(f"entries are not {basis.dim}x{basis.dim}")
    seen = None
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if not x:
                continue
            g = basis[i] + basis[j]
            if seen is None:
                seen = (i, j, g)
            elif g != seen[2]:
                raise InhomogeneousMatrix(seen, (i, j, g))
    if seen is None:
        raise ZeroMatrix("the zero matrix has no intrinsic grade; assign one")
    return seen[2]


class GradedMatrix:
    """Dense homogeneous matrix over Q[l] acting on a graded space."""

    __slots__ = ("entries", "grade", "basis", "_nz")

    def __init__(self, entries, basis: BasisGrading = STANDARD_BASIS, grade=None):
        rows = _to_rows(entries)
        if grade is None:
            grade = infer_grade(rows, basis)
        grade = word(grade)
        if grade.n != basis.n:
            raise ArityMismatch(f"grade {grade} does not match basis arity {basis.n}")
        if len(rows) != basis.dim or any(len(r) != basis.dim for r in rows):
            raise DimMismatch(f"entries are not {basis.dim}x{basis.dim}")
        nz = []
        for i, r in enumerate(rows):
            row_nz = []
            gi = basis[i]
            for j, x in enumerate(r):
                if x:
                    if gi + basis[j] != grade:
                        raise InhomogeneousMatrix(
                            (i, j, gi + basis[j]), (i, j, grade)
                        )
                    row_nz.append((j, x))
            nz.append(tuple(row_nz))
        self.entries = rows
        self.grade = grade
        self.basis = basis
        self._nz = tuple(nz)

    @classmethod
    def _trusted(cls, rows, basis, grade, nz):
        m = object.__new__(cls)
        m.entries, m.basis, m.grade, m._nz = rows, basis, grade, nz
        return m

    @classmethod
    def _from_sparse(cls, data: dict, basis: BasisGrading, grade: GradeWord):
        """Build from {(i, j): poly} with nonzero values already in sector ``grade``."""
        d = basis.dim
        rows = [[ZERO] * d for _ in range(d)]
        nz = [[] for _ in range(d)]
        for (i, j), x in sorted(data.items()):
            if x:
                rows[i][j] = x
                nz[i].append((j, x))
        return cls._trusted(
            tuple(map(tuple, rows)), basis, grade, tuple(map(tuple, nz))
        )

    @classmethod
    def identity(cls, basis: BasisGrading = STANDARD_BASIS) -> "GradedMatrix":
        return cls._from_sparse(
            {(i, i): ONE for i in range(basis.dim)}, basis, GradeWord.zero(basis.n)
        )

    @classmethod
    def zero(cls, basis: BasisGrading = STANDARD_BASIS, grade="00") -> "GradedMatrix":
        return cls._from_sparse({}, basis, word(grade))

    @classmethod
    def diagonal(cls, values: Sequence, basis: BasisGrading = STANDARD_BASIS):
        return cls(
            [[values[i] if i == j else 0 for j in range(basis.dim)] for i in range(basis.dim)],
            basis,
            GradeWord.zero(basis.n),
        )

    @property
    def dim(self) -> int:
        return self.basis.dim

    def nonzeros(self) -> Iterable[tuple[int, int, PolyScalar]]:
        for i, row in enumerate(self._nz):
            for j, x in row:
                yield i, j, x

    def is_zero(self) -> bool:
        return not any(self._nz)

    def is_constant(self) -> bool:
        return all(x.is_constant() for _, _, x in self.nonzeros())

    def _sparse(self) -> dict:
        return {(i, j): x for i, j, x in self.nonzeros()}

    # -- arithmetic -------------------------------------------------------

    def _check_compatible(self, other: "GradedMatrix"):
        if self.basis != other.basis:
            raise DimMismatch(
                f"matrices act on different spaces: {self.basis} vs {other.basis}"
            )

    def __add__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check_compatible(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.grade != other.grade:
            raise GradeMismatch(f"cannot add grade {self.grade} to grade {other.grade}")
        acc = self._sparse()
        for i, j, x in other.nonzeros():
            acc[i, j] = acc.get((i, j), ZERO) + x
        return GradedMatrix._from_sparse(acc, self.basis, self.grade)

    def __neg__(self):
        return GradedMatrix._from_sparse(
            {k: -x for k, x in self._sparse().items()}, self.basis, self.grade
        )

    def __sub__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "GradedMatrix":
        c = as_poly(c)
        if c is NotImplemented:
            raise TypeError("scalar must be a PolyScalar or rational")
        return GradedMatrix._from_sparse(
            {k: c * x for k, x in self._sparse().items()}, self.basis, self.grade
        )

    def __rmul__(self, c):
        if isinstance(c, GradedMatrix):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, c):
        if isinstance(c, GradedMatrix):
            return NotImplemented
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, GradedMatrix):
            return mat_multiply(self, other)
        return NotImplemented

    def apply(self, vector: Sequence) -> list[PolyScalar]:
        """Matrix times a column vector of polynomials or rationals."""
        if len(vector) != self.dim:
            raise DimMismatch(f"vector of length {len(vector)} for a {self.dim}x{self.dim} matrix")
        vec = [as_poly(x) for x in vector]
        out = []
        for row in self._nz:
            acc = ZERO
            for j, x in row:
                if vec[j]:
                    acc = acc + x * vec[j]
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        if self.basis != other.basis or self._nz != other._nz:
            return False
        return self.grade == other.grade or self.is_zero()

    def __hash__(self):
        return hash((self.basis, self._nz))

    def __repr__(self):
        return f"GradedMatrix(dim={self.dim}, grade={self.grade})"

    def __str__(self):
        return format_matrix(self)


def mat_multiply(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """Ordinary product; the grade of the result is grade(a) + grade(b)."""
    if a.dim != b.dim:
        raise DimMismatch(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    a._check_compatible(b)
    acc: dict = {}
    bnz = b._nz
    for i, row in enumerate(a._nz):
        for k, x in row:
            for j, y in bnz[k]:
                key = (i, j)
                acc[key] = acc.get(key, ZERO) + x * y
    grade = a.grade + b.grade
    out = GradedMatrix._from_sparse(acc, a.basis, grade)
    if __debug__:
        _assert_homogeneous(out)
    return out


def _assert_homogeneous(m: GradedMatrix):
    for i, j, _ in m.nonzeros():
        assert m.basis[i] + m.basis[j] == m.grade, (i, j, m.grade)


def graded_kron(a: GradedMatrix, b: GradedMatrix, form: BilinearForm) -> GradedMatrix:
    """Braided tensor product realized on the product basis.

    Entry ((i, k), (j, l)) is ``(-1)^<grade b, grade v_j> a[i, j] b[k, l]``.
    """
    if form.n != a.grade.n or form.n != b.grade.n:
        raise ArityMismatch(f"form arity {form.n} does not match matrix gradings")
    db = b.dim
    col_sign = [-1 if form(b.grade, g) else 1 for g in a.basis.grades]
    acc = {}
    bnz = list(b.nonzeros())
    for i, j, x in a.nonzeros():
        xs = x if col_sign[j] > 0 else -x
        for k, l, y in bnz:
            acc[i * db + k, j * db + l] = xs * y
    out = GradedMatrix._from_sparse(acc, a.basis.tensor(b.basis), a.grade + b.grade)
    if __debug__:
        _assert_homogeneous(out)
    return out


def dagger(a: GradedMatrix) -> GradedMatrix:
    """Transpose; l is a real parameter so no conjugation is needed."""
    return GradedMatrix._from_sparse(
        {(j, i): x for i, j, x in a.nonzeros()}, a.basis, a.grade
    )


def evaluate(a: GradedMatrix, lam0) -> tuple[tuple[Fraction, ...], ...]:
    """Substitute l = lam0 in every entry. Warns with OutOfRegime if lam0 <= 1."""
    lam0 = Fraction(lam0)
    if lam0 <= 1:
        warnings.warn(
            f"l0 = {lam0} is outside the regime l > 1", OutOfRegime, stacklevel=2
        )
    return tuple(tuple(x(lam0) for x in row) for row in a.entries)


def collision_set(energies: Iterable) -> set[Fraction]:
    """Rational values of l where two distinct listed energies coincide."""
    es = []
    for e in energies:
        p = as_poly(e)
        if p.degree > 1:
            raise NonLinearEnergy(f"energy {p} has degree {p.degree} > 1")
        if p not in es:
            es.append(p)
    out = set()
    for p, q in itertools.combinations(es, 2):
        d = p - q
        # d = c0 + c1 l with (c0, c1) != (0, 0)
        if d.degree == 1:
            out.add(-d.coeff(0) / d.coeff(1))
    return out


def format_matrix(a: GradedMatrix) -> str:
    """Row-major table preceded by a header with the grading information."""
    cells = [[str(x) for x in row] for row in a.entries]
    width = max(len(c) for row in cells for c in row)
    lines = [f"dim={a.dim} grade={a.grade} basis={','.join(map(str, a.basis.grades))}"]
    lines += [" ".join(c.rjust(width) for c in row) for row in cells]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> GradedMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = dict(tok.split("=", 1) for tok in lines[0].split())
    basis = BasisGrading.of(*header["basis"].split(","))
    rows = [[parse_poly(tok) for tok in ln.split()] for ln in lines[1:]]
    if int(header["dim"]) != len(rows):
        raise DimMismatch("header dimension does not match the table")
    return GradedMatrix(rows, basis, header["grade"])
