"""Exact one-variable Laurent polynomials with integer coefficients."""

from __future__ import annotations

import re
from functools import reduce as _fold
from math import gcd
from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "A"):
        self.coeffs = {int(k): int(v) for k, v in (coeffs or {}).items() if v}
        self.var = var

    @classmethod
    def const(cls, c: int, var: str = "A") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, k: int, c: int = 1, var: str = "A") -> "LaurentPoly":
        return cls({k: c}, var)

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], low: int = 0, var: str = "A") -> "LaurentPoly":
        return cls({low + k: c for k, c in enumerate(coeffs)}, var)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1 or abs(next(iter(self.coeffs.values()))) != 1:
                raise ValueError("only unit monomials can be inverted")
            (e, c), = self.coeffs.items()
            return LaurentPoly({e * k: c ** -k}, self.var)
        out = LaurentPoly.const(1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def high(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()}, self.var)

    def is_unit_monomial(self) -> bool:
        return len(self.coeffs) == 1 and abs(next(iter(self.coeffs.values()))) == 1

    def evaluate(self, x, modulus: int | None = None):
        if modulus is not None:
            total = 0
            for e, c in self.coeffs.items():
                total += c * pow(x, e, modulus)
            return total % modulus
        from fractions import Fraction

        return sum(c * Fraction(x) ** e for e, c in self.coeffs.items())

    def normalized(self) -> "LaurentPoly":
        """Shift to lowest exponent 0 and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        p = self.shift(-self.low)
        return -p if p.coeffs[p.high] < 0 else p

    def content(self) -> int:
        return _fold(gcd, (abs(c) for c in self.coeffs.values()), 0)

    def dense(self) -> list[int]:
        """Coefficients from ``low`` to ``high``."""
        if not self.coeffs:
            return []
        return [self.coeffs.get(k, 0) for k in range(self.low, self.high + 1)]

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r}, var={self.var!r})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: LaurentPoly) -> str:
    if not p.coeffs:
        return "0"
    out = []
    for k in sorted(p.coeffs, reverse=True):
        c = p.coeffs[k]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = p.var if k == 1 else f"{p.var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


_TERM = re.compile(r"([+-]?)\s*(\d+)?\s*\*?\s*(?:([A-Za-z])(?:\^(-?\d+))?)?")


def parse_poly(text: str, var: str = "A") -> LaurentPoly:
    """Parse the text form, e.g. ``-A^6 - A^4 + A^2 + 3 + A^-2``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return LaurentPoly({}, var)
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            var = m.group(3)
            k = int(m.group(4)) if m.group(4) else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * c
        pos = m.end()
    return LaurentPoly(coeffs, var)


# --- polynomial gcd over Z[t] ---------------------------------------------------


def _prim(p: LaurentPoly) -> LaurentPoly:
    c = p.content()
    return LaurentPoly({k: v // c for k, v in p.coeffs.items()}, p.var) if c > 1 else p


def _pseudo_rem(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    # a, b polynomials with low >= 0; returns lc(b)^k * a mod b
    lb, db = b.coeffs[b.high], b.high
    r = a
    while r.coeffs and r.high >= db:
        lr, dr = r.coeffs[r.high], r.high
        r = r * lb - b * LaurentPoly.monomial(dr - db, lr, a.var)
    return r


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """gcd in Z[t, t^-1], returned normalized (defined up to units +-t^k)."""
    a, b = a.normalized(), b.normalized()
    if not a.coeffs:
        return b
    if not b.coeffs:
        return a
    cont = gcd(a.content(), b.content())
    a, b = _prim(a), _prim(b)
    if a.high < b.high:
        a, b = b, a
    while b.coeffs:
        r = _pseudo_rem(a, b)
        a, b = b, (_prim(r).normalized() if r.coeffs else r)
    return (_prim(a) * cont).normalized()


def poly_gcd_all(polys: Iterable[LaurentPoly], var: str = "t") -> LaurentPoly:
    out = LaurentPoly({}, var)
    for p in polys:
        out = poly_gcd(out, p)
    return out
