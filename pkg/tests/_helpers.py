"""Shared generators and hand-transcribed reference data for the tests."""

import random
from pathlib import Path

from parastat.gmatrix import STANDARD_BASIS, GradedMatrix, sector_pattern
from parastat.grading import all_words
from parastat.multiparticle import StateRay
from parastat.poly import parse_poly

WORDS2 = all_words(2)
GOLDEN = Path(__file__).parent / "golden"
SPACES = ("fLS_sub", "pCLS_sub", "fCLA_sub", "pLA_sub", "LS_min", "CLS_min", "LA_min", "CLA_min")


def random_homogeneous(rng: random.Random, basis=STANDARD_BASIS, grade=None, lo=-3, hi=3):
    """Homogeneous matrix with small integer entries in a random sector pattern."""
    g = grade if grade is not None else rng.choice(WORDS2)
    pattern = sector_pattern(basis, g)
    rows = [[0] * basis.dim for _ in range(basis.dim)]
    for i, j in pattern:
        rows[i][j] = rng.randint(lo, hi)
    return GradedMatrix(rows, basis, g)


def ray(*terms):
    """ray(4, -7, 10, 13) -> w4 - w7 + w10 + w13."""
    return StateRay.from_terms(16, {abs(t): (1 if t > 0 else -1) for t in terms})


# Named eigenvectors, transcribed by hand from the two-particle eigenvector table.
PSI = {
    "0": ray(1),
    "1": ray(3, 9),
    "l": ray(2, 5),
    "a+": ray(7, 10),
    "a-": ray(7, -10),
    "beta": ray(4, 13),
    "2": ray(11),
    "2l": ray(6),
    "l+2;+": ray(12, 15),
    "l+2;-": ray(12, -15),
    "2l+1;+": ray(8, 14),
    "2l+1;-": ray(8, -14),
    "2l+2": ray(16),
}
MIXED_MINUS = ray(4, -7, 10, 13)
MIXED_PLUS = ray(4, 7, 10, 13)

E = parse_poly
COMMON6 = {E("0"): [PSI["0"]], E("1"): [PSI["1"]], E("l"): [PSI["l"]],
           E("2"): [PSI["2"]], E("2l"): [PSI["2l"]], E("2l+2"): [PSI["2l+2"]]}
CORE5 = {E("0"): [PSI["0"]], E("1"): [PSI["1"]], E("l"): [PSI["l"]], E("2l+2"): [PSI["2l+2"]]}


def _table(base, **extra):
    out = {k: list(v) for k, v in base.items()}
    for k, v in extra.items():
        out.setdefault(E(k.replace("_", "+")), []).extend(v)
    return out


EXPECTED = {
    "fLS_sub": {E("0"): [PSI["0"]], E("1"): [PSI["1"]], E("l"): [PSI["l"]], E("l+1"): [MIXED_MINUS]},
    "pCLS_sub": {E("0"): [PSI["0"]], E("1"): [PSI["1"]], E("l"): [PSI["l"]], E("l+1"): [MIXED_PLUS]},
    "fCLA_sub": _table(COMMON6, l_1=[MIXED_MINUS], l_2=[PSI["l+2;-"]], **{"2l_1": [PSI["2l+1;-"]]}),
    "pLA_sub": _table(COMMON6, l_1=[MIXED_PLUS], l_2=[PSI["l+2;+"]], **{"2l_1": [PSI["2l+1;+"]]}),
    "LS_min": _table(CORE5, l_1=[PSI["beta"], PSI["a-"]], l_2=[PSI["l+2;+"]], **{"2l_1": [PSI["2l+1;+"]]}),
    "CLS_min": _table(CORE5, l_1=[PSI["beta"], PSI["a+"]], l_2=[PSI["l+2;-"]], **{"2l_1": [PSI["2l+1;-"]]}),
    "LA_min": _table({**CORE5, E("2"): [PSI["2"]], E("2l"): [PSI["2l"]]},
                     l_1=[PSI["beta"], PSI["a+"]], l_2=[PSI["l+2;+"]], **{"2l_1": [PSI["2l+1;+"]]}),
    "CLA_min": _table({**CORE5, E("2"): [PSI["2"]], E("2l"): [PSI["2l"]]},
                      l_1=[PSI["beta"], PSI["a-"]], l_2=[PSI["l+2;-"]], **{"2l_1": [PSI["2l+1;-"]]}),
}
DIMS = {"fLS_sub": 4, "pCLS_sub": 4, "LS_min": 8, "CLS_min": 8,
        "fCLA_sub": 9, "pLA_sub": 9, "LA_min": 10, "CLA_min": 10}


def criterion(number: int, title: str):
    """Tag an acceptance test so the session summary can report it."""

    def mark(fn):
        fn.acceptance = (number, title)
        return fn

    return mark
