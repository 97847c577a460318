"""Fox calculus, elementary ideals, and a bounded ideal-equality test.

All generators are sent to ``t`` after differentiation, which is the
abelianization of any presentation whose relators have total exponent sum
zero (in particular every Wirtinger presentation).
"""

from __future__ import annotations

import enum
from itertools import combinations
from math import gcd
from typing import Sequence

from ..errors import NotWirtinger
from ..homology import IntMatrix, solve_integer
from ..wirtinger import WirtingerData
from ..words import Presentation, Word
from .laurent import LaurentPoly

PolyMatrix = list[list[LaurentPoly]]


def _zero() -> LaurentPoly:
    return LaurentPoly({}, "t")


def fox_row(r: Word, generators: Sequence[str]) -> list[LaurentPoly]:
    """Abelianized Fox derivatives of one relator, one entry per generator."""
    index = {g: k for k, g in enumerate(generators)}
    acc: list[dict[int, int]] = [{} for _ in generators]
    s = 0
    for name, e in r.letters:
        col = acc[index[name]]
        if e > 0:
            col[s] = col.get(s, 0) + 1
        else:
            col[s - 1] = col.get(s - 1, 0) - 1
        s += e
    return [LaurentPoly(c, "t") for c in acc]


def fox_alexander_matrix(p: Presentation | WirtingerData) -> PolyMatrix:
    """Relators x generators matrix of abelianized Fox derivatives."""
    if isinstance(p, WirtingerData):
        p = p.presentation
    for k, r in enumerate(p.relators):
        if sum(e for _, e in r.letters) != 0:
            raise NotWirtinger(f"relator {k + 1} has nonzero total exponent sum")
    return [fox_row(r, p.generators) for r in p.relators]


def poly_det(m: PolyMatrix) -> LaurentPoly:
    """Determinant by Laplace expansion along rows, memoized on column sets."""
    n = len(m)
    if n == 0:
        return LaurentPoly.const(1, "t")
    memo: dict[tuple[int, ...], LaurentPoly] = {}

    def det(row: int, cols: tuple[int, ...]) -> LaurentPoly:
        if row == n:
            return LaurentPoly.const(1, "t")
        if cols in memo:
            return memo[cols]
        total = _zero()
        for k, c in enumerate(cols):
            entry = m[row][c]
            if entry.is_zero():
                continue
            minor = det(row + 1, cols[:k] + cols[k + 1:])
            term = entry * minor
            total = total + (term if k % 2 == 0 else -term)
        memo[cols] = total
        return total

    return det(0, tuple(range(n)))


def minors(m: PolyMatrix, size: int, cols: Sequence[int] | None = None) -> list[LaurentPoly]:
    rows = len(m)
    cols = list(range(len(m[0]) if m else 0)) if cols is None else list(cols)
    if size <= 0:
        return [LaurentPoly.const(1, "t")]
    if size > rows or size > len(cols):
        return [_zero()]
    out = []
    for rs in combinations(range(rows), size):
        for cs in combinations(cols, size):
            out.append(poly_det([[m[r][c] for c in cs] for r in rs]))
    return out


def elementary_ideal_generators(
    m: PolyMatrix, k: int = 1, n_generators: int | None = None, drop: int = 0
) -> list[LaurentPoly]:
    """Generators of the ``k``-th elementary ideal, normalized and deduplicated.

    For ``k >= 1`` the ``(n-k)``-minors are taken after deleting column
    ``drop``, the redundant column of a Wirtinger matrix.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    n = n_generators if n_generators is not None else (len(m[0]) if m else 0)
    cols = list(range(n))
    if k >= 1 and n:
        cols.remove(drop)
    polys = minors(m, n - k, cols)
    out: list[LaurentPoly] = []
    for p in polys:
        q = p.normalized()
        if q not in out:
            out.append(q)
    nonzero = [q for q in out if not q.is_zero()]
    return nonzero or [_zero()]


# --- bounded ideal comparison -----------------------------------------------------


class IdealComparison(enum.Enum):
    EQUAL = "equal"
    UNKNOWN = "unknown"
    UNEQUAL = "unequal"


def _as_poly(p: LaurentPoly) -> LaurentPoly:
    return p.shift(-p.low) if not p.is_zero() else p


def find_combination(
    f: LaurentPoly, gens: Sequence[LaurentPoly], bound: int
) -> tuple[int, list[LaurentPoly]] | None:
    """Find ``shift`` and ``c_i`` (degree ``<= bound``) with ``sum c_i g_i = t^shift f``.

    A hit proves ``f`` lies in the ideal of ``Z[t, t^-1]`` generated by ``gens``.
    """
    if f.is_zero():
        return 0, [_zero() for _ in gens]
    f = _as_poly(f)
    gens = [_as_poly(g) for g in gens if not g.is_zero()]
    if not gens:
        return None
    width = bound + 1
    top = bound + max(g.high for g in gens)
    for shift in range(bound + 1):
        target = f.shift(shift)
        height = max(top, target.high) + 1
        rows = [[0] * (width * len(gens)) for _ in range(height)]
        for gi, g in enumerate(gens):
            for d in range(width):
                for e, c in g.coeffs.items():
                    rows[e + d][gi * width + d] += c
        b = [target.coeffs.get(k, 0) for k in range(height)]
        x = solve_integer(IntMatrix.from_rows(rows, width * len(gens)), b)
        if x is not None:
            coeffs = [
                LaurentPoly({d: x[gi * width + d] for d in range(width)}, "t") for gi in range(len(gens))
            ]
            return shift, coeffs
    return None


def ideal_contains(gens: Sequence[LaurentPoly], f: LaurentPoly, bound: int) -> bool:
    return find_combination(f, gens, bound) is not None


def _image_generator(gens: Sequence[LaurentPoly], a: int, m: int) -> int:
    """Generator of the image ideal in Z/m under ``t -> a`` (``a`` a unit mod m)."""
    g = m
    for p in gens:
        g = gcd(g, p.evaluate(a, m))
    return g


def _image_over_z(gens: Sequence[LaurentPoly], a: int) -> int:
    g = 0
    for p in gens:
        g = gcd(g, int(p.evaluate(a)))
    return g


def unequal_witness(
    gens1: Sequence[LaurentPoly], gens2: Sequence[LaurentPoly], max_modulus: int = 30
) -> str | None:
    """A ring map ``Z[t^+-1] -> R`` separating the two ideals, if a small one exists."""
    for a in (1, -1):
        g1, g2 = _image_over_z(gens1, a), _image_over_z(gens2, a)
        if g1 != g2:
            return f"t -> {a} over Z: ({g1}) vs ({g2})"
    for m in range(2, max_modulus + 1):
        for a in range(1, m):
            if gcd(a, m) != 1:
                continue
            g1, g2 = _image_generator(gens1, a, m), _image_generator(gens2, a, m)
            if g1 != g2:
                return f"t -> {a} mod {m}: ({g1}) vs ({g2})"
    return None


def ideal_equal_bounded(
    gens1: Sequence[LaurentPoly], gens2: Sequence[LaurentPoly], degree_bound: int
) -> IdealComparison:
    """Two-way bounded membership test, tri-state.

    ``EQUAL`` is proved by explicit combinations; ``UNEQUAL`` by a ring map
    separating the ideals; ``UNKNOWN`` otherwise.
    """
    if unequal_witness(gens1, gens2) is not None:
        return IdealComparison.UNEQUAL
    if all(ideal_contains(gens2, f, degree_bound) for f in gens1) and all(
        ideal_contains(gens1, f, degree_bound) for f in gens2
    ):
        return IdealComparison.EQUAL
    return IdealComparison.UNKNOWN
