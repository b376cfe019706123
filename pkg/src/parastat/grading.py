"""Z2^n grading words and the symmetric bilinear sign forms built on them.

A form assigns a bit <a, b> to every pair of grading words. It must be
symmetric and additive in each argument (the Leibniz condition). The bit
decides whether the graded bracket of sectors a and b is a commutator (0)
or an anticommutator (1). For n = 2 there are four admissible forms,
available by name through :func:`preset`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

__all__ = [
    "GradeWord",
    "BilinearForm",
    "StatisticsClass",
    "GradingError",
    "NotSymmetric",
    "LeibnizViolation",
    "ArityMismatch",
    "UnknownPreset",
    "all_words",
    "make_form",
    "preset",
    "PRESET_NAMES",
    "classify",
    "koszul_sign",
    "format_form",
    "parse_form",
]


class GradingError(ValueError):
    pass


class NotSymmetric(GradingError):
    def __init__(self, alpha, beta):
        super().__init__(f"<{alpha},{beta}> != <{beta},{alpha}>")
        self.alpha, self.beta = alpha, beta


class LeibnizViolation(GradingError):
    def __init__(self, alpha, beta, gamma):
        super().__init__(
            f"<{alpha},{beta}+{gamma}> != <{alpha},{beta}> + <{alpha},{gamma}> mod 2"
        )
        self.alpha, self.beta, self.gamma = alpha, beta, gamma


class ArityMismatch(GradingError):
    pass


class UnknownPreset(GradingError, KeyError):
    pass


@dataclass(frozen=True, order=True)
class GradeWord:
    """An element of Z2^n written as a bit string, e.g. ``GradeWord.parse("10")``."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits or any(b not in (0, 1) for b in self.bits):
            raise GradingError(f"invalid grading bits {self.bits!r}")

    @classmethod
    def parse(cls, text: str) -> "GradeWord":
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def zero(cls, n: int) -> "GradeWord":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.bits)

    def is_zero(self) -> bool:
        return not any(self.bits)

    def __add__(self, other: "GradeWord") -> "GradeWord":
        if self.n != other.n:
            raise ArityMismatch(f"cannot add {self} and {other}")
        return GradeWord(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __str__(self):
        return "".join(map(str, self.bits))

    def __repr__(self):
        return f"GradeWord('{self}')"


def word(w) -> GradeWord:
    return w if isinstance(w, GradeWord) else GradeWord.parse(str(w))


def all_words(n: int) -> list[GradeWord]:
    """All n-bit words, first bit fastest: 00, 10, 01, 11 for n = 2."""
    return [GradeWord(tuple((k >> i) & 1 for i in range(n))) for k in range(2**n)]


class StatisticsClass(enum.Enum):
    COLOR_LIE_ALGEBRA = "ColorLieAlgebra"
    COLOR_LIE_SUPERALGEBRA = "ColorLieSuperalgebra"


@dataclass(frozen=True)
class BilinearForm:
    n: int
    table: Mapping[tuple[GradeWord, GradeWord], int] = field(repr=False)
    name: str | None = None

    def __call__(self, alpha, beta) -> int:
        a, b = word(alpha), word(beta)
        if a.n != self.n or b.n != self.n:
            raise ArityMismatch(f"words {a}, {b} do not have arity {self.n}")
        return self.table[a, b]

    def rows(self) -> list[list[int]]:
        ws = all_words(self.n)
        return [[self.table[a, b] for b in ws] for a in ws]

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.n == other.n and self.rows() == other.rows()

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, self.rows()))))


def make_form(n: int, entries, name: str | None = None) -> BilinearForm:
    """Validate and build a form.

    ``entries`` is either a mapping from word pairs (``GradeWord`` or bit
    strings) to bits, or a 2^n x 2^n nested sequence with rows and columns
    in :func:`all_words` order.
    """
    ws = all_words(n)
    if isinstance(entries, Mapping):
        table = {(word(a), word(b)): v for (a, b), v in entries.items()}
    else:
        rows = [list(r) for r in entries]
        if len(rows) != len(ws) or any(len(r) != len(ws) for r in rows):
            raise GradingError(f"expected a {len(ws)}x{len(ws)} table")
        table = {(a, b): rows[i][j] for i, a in enumerate(ws) for j, b in enumerate(ws)}
    for a, b in itertools.product(ws, ws):
        if (a, b) not in table:
            raise GradingError(f"entry <{a},{b}> is missing")
        if table[a, b] not in (0, 1):
            raise GradingError(f"entry <{a},{b}> = {table[a, b]!r} is not a bit")
    if any(k[0].n != n or k[1].n != n for k in table):
        raise ArityMismatch(f"table contains words not of arity {n}")
    for a, b in itertools.combinations_with_replacement(ws, 2):
        if table[a, b] != table[b, a]:
            raise NotSymmetric(a, b)
    for a, b, c in itertools.product(ws, ws, ws):
        if table[a, b + c] != table[a, b] ^ table[a, c]:
            raise LeibnizViolation(a, b, c)
    return BilinearForm(n, dict(table), name)


_PRESET_ROWS = {
    # rows/columns ordered 00, 10, 01, 11
    "LA": ((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)),
    "LS": ((0, 0, 0, 0), (0, 1, 1, 0), (0, 1, 1, 0), (0, 0, 0, 0)),
    "CLA": ((0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0)),
    "CLS": ((0, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 1), (0, 1, 1, 0)),
}
PRESET_NAMES = tuple(_PRESET_ROWS)


def preset(name: str) -> BilinearForm:
    """One of the four n = 2 forms: ``LA``, ``LS``, ``CLA`` or ``CLS``."""
    try:
        rows = _PRESET_ROWS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {PRESET_NAMES}") from None
    return make_form(2, rows, name=name)


def classify(form: BilinearForm) -> StatisticsClass:
    if any(form.table[a, a] for a in all_words(form.n)):
        return StatisticsClass.COLOR_LIE_SUPERALGEBRA
    return StatisticsClass.COLOR_LIE_ALGEBRA


def koszul_sign(form: BilinearForm, alpha, beta) -> int:
    return -1 if form(alpha, beta) else 1


def format_form(form: BilinearForm) -> str:
    ws = all_words(form.n)
    lines = [f"n={form.n}"]
    lines += [f"{a}{b} {form.table[a, b]}" for a in ws for b in ws]
    return "\n".join(lines) + "\n"


def parse_form(text: str | Iterable[str], name: str | None = None) -> BilinearForm:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    lines = [ln.strip() for ln in lines if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise GradingError("form text must start with 'n=<arity>'")
    n = int(lines[0][2:])
    entries = {}
    for ln in lines[1:]:
        pair, bit = ln.split()
        if len(pair) != 2 * n:
            raise ArityMismatch(f"line {ln!r} does not hold two {n}-bit words")
        entries[pair[:n], pair[n:]] = int(bit)
    return make_form(n, entries, name=name)
