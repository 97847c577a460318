"""Exact integer linear algebra and homology of presentation 2-complexes.

The one-vertex 2-complex of a presentation has one 1-cell per generator and
one 2-cell per relator.  Its cellular boundary ``d2`` is the matrix of
exponent sums (generators x relators) and ``d1`` is zero, so
``H1 = coker d2`` and ``H2 = ker d2`` (always free).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotCyclicDef0, SpanCheckFailed
from .words import Presentation


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "IntMatrix":
        rows = [[int(x) for x in line.split()] for line in text.splitlines() if line.strip()]
        return cls.from_rows(rows)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("square matrix required")
    n = m.rows
    a = [list(r) for r in m.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SmithForm:
    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.S[i, i] for i in range(min(self.S.rows, self.S.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Return ``(S, U, V)`` with ``U @ m @ V == S``, U and V unimodular.

    ``S`` is diagonal with nonnegative entries and ``S[i,i] | S[i+1,i+1]``.
    Pivots are chosen by least absolute value to limit entry growth.
    """
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        if q:
            a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        if q:
            for r in a:
                r[dst] -= q * r[src]
            for r in v:
                r[dst] -= q * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                add_row(i, t, a[i][t] // p)
                dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                add_col(j, t, a[t][j] // p)
                dirty |= a[t][j] != 0
            if dirty:
                continue
            # enforce divisibility against the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SmithForm(
        IntMatrix.from_rows(a, cols),
        IntMatrix.from_rows(u, rows),
        IntMatrix.from_rows(v, cols),
    )


def kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """A Z-basis of ``{x : m x = 0}``."""
    snf = smith_normal_form(m)
    r = snf.rank
    return [snf.V.column(j) for j in range(r, m.cols)]


def solve_integer(m: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """Some integer ``x`` with ``m x = b``, or ``None`` if there is none."""
    snf = smith_normal_form(m)
    c = snf.U.apply(b)
    y = [0] * m.cols
    for i, ci in enumerate(c):
        d = snf.S[i, i] if i < min(m.rows, m.cols) else 0
        if d == 0:
            if ci:
                return None
        elif ci % d:
            return None
        else:
            y[i] = ci // d
    return snf.V.apply(y)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank + Z/d1 + ... + Z/dk`` with ``d1 | d2 | ...`` and each ``di >= 2``."""

    rank: int
    torsion: tuple[int, ...] = field(default=())

    def __post_init__(self):
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion must form a divisibility chain")

    def is_infinite_cyclic(self) -> bool:
        return self.rank == 1 and not self.torsion

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        if not parts:
            return "0"
        if self.rank > 1 and not self.torsion:
            return f"Z^{self.rank}"
        return " + ".join(parts)


def cokernel(m: IntMatrix) -> AbelianGroup:
    snf = smith_normal_form(m)
    diag = snf.diagonal
    return AbelianGroup(m.rows - snf.rank, tuple(d for d in diag if d > 1))


def boundary_matrix(p: Presentation) -> IntMatrix:
    """Generators x relators matrix of exponent sums."""
    rows = [[r.exponent_sum(g) for r in p.relators] for g in p.generators]
    return IntMatrix.from_rows(rows, len(p.relators))


def homology_of_presentation_complex(p: Presentation) -> tuple[AbelianGroup, AbelianGroup]:
    d2 = boundary_matrix(p)
    snf = smith_normal_form(d2)
    h1 = AbelianGroup(d2.rows - snf.rank, tuple(d for d in snf.diagonal if d > 1))
    h2 = AbelianGroup(d2.cols - snf.rank)
    return h1, h2


@dataclass(frozen=True)
class PontryaginCheck:
    vector: tuple[int, ...]
    kernel_basis: tuple[tuple[int, ...], ...]


def pontryagin_generator(w) -> PontryaginCheck:
    """Check that the all-ones relator vector spans ``ker d2``.

    ``w`` must be a cyclic deficiency-0 :class:`~vknots.wirtinger.WirtingerData`.
    """
    if not (w.deficiency == 0 and w.is_cyclic()):
        raise NotCyclicDef0("cyclic deficiency-0 Wirtinger presentation required")
    d2 = boundary_matrix(w.presentation)
    ones = (1,) * d2.cols
    basis = kernel_basis(d2)
    if any(d2.apply(ones)) or len(basis) != 1:
        raise SpanCheckFailed(f"kernel has rank {len(basis)}; all-ones image {d2.apply(ones)}")
    k = basis[0]
    if k != ones and k != tuple(-x for x in ones):
        raise SpanCheckFailed(f"kernel generator {k} is not +-(1,...,1)")
    return PontryaginCheck(ones, tuple(basis))
