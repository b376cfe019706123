"""Exact polynomials in the formal energy parameter ``l`` (lambda) over Q.

Every matrix entry and every energy in the package is a ``PolyScalar``.
Coefficients are stored low degree first as ``Fraction`` objects and kept in
canonical form (no trailing zeros), so equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["PolyScalar", "LAMBDA", "ZERO", "ONE", "parse_poly", "as_poly"]

_TERM = re.compile(r"([+-]?)([^+-]+)")
_MONO = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?l(?:\^(\d+))?$")
_CONST = re.compile(r"^\d+(?:/\d+)?$")


class PolyScalar:
    """Element of Q[l], immutable and hashable."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already canonical Fractions
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "PolyScalar":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic -------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return PolyScalar._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and not out[-1]:
            out.pop()
        return PolyScalar._raw(tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            s = b[0]
            return PolyScalar._raw(tuple(c * s for c in a))
        if len(a) == 1:
            s = a[0]
            return PolyScalar._raw(tuple(c * s for c in b))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("PolyScalar", self.coeffs))
        return self._hash

    def sort_key(self, at=3):
        """Order by value at a generic point, ties broken by coefficients."""
        return (self(at), self.degree, self.coeffs[::-1])

    # -- text -------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "l" if k == 1 else f"l^{k}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        return f"PolyScalar('{self}')"


def as_poly(x):
    if isinstance(x, PolyScalar):
        return x
    if isinstance(x, (int, Rational)):
        return PolyScalar._raw((Fraction(x),)) if x else ZERO
    return NotImplemented


def parse_poly(text: str) -> PolyScalar:
    """Inverse of ``str(PolyScalar)``; also accepts ``lambda`` and ``2l``."""
    s = text.replace(" ", "").replace("lambda", "l")
    if not s:
        raise ValueError("empty polynomial string")
    s = re.sub(r"(\d)l", r"\1*l", s)
    if "".join(m.group(0) for m in _TERM.finditer(s)) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for sign, body in _TERM.findall(s):
        neg = sign == "-"
        if _CONST.match(body):
            deg, c = 0, Fraction(body)
        else:
            m = _MONO.match(body)
            if not m:
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            deg = int(m.group(2)) if m.group(2) else 1
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + (-c if neg else c)
    top = max(coeffs)
    return PolyScalar([coeffs.get(k, 0) for k in range(top + 1)])


ZERO = PolyScalar()
ONE = PolyScalar((1,))
LAMBDA = PolyScalar((0, 1))
