"""Kauffman bracket of a Gauss diagram by state sum.

The circle is cut at its ``2n`` endpoints into segments; segment ``k`` runs
from endpoint ``k`` to endpoint ``k+1``.  At a chord with endpoints at
positions ``p`` and ``q`` the two smoothings reconnect the four incident
segment ends:

* oriented smoothing (follows the strand direction):
  ``seg(p-1) -- seg(q)`` and ``seg(q-1) -- seg(p)``;
* unoriented smoothing: ``seg(p-1) -- seg(q-1)`` and ``seg(p) -- seg(q)``.

The A-smoothing is the oriented one at a positive chord and the unoriented
one at a negative chord.  With this choice a positive kink contributes
``-A^3`` and the values agree with the planar state sum on classical codes.
"""

from __future__ import annotations

from ..errors import StateSpaceTooLarge
from ..gauss import GaussDiagram
from .laurent import LaurentPoly

MAX_CHORDS = 20


def _count_loops(size: int, joins: list[tuple[int, int]]) -> int:
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    loops = size
    for a, b in joins:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            loops -= 1
    return loops


def _smoothing_joins(size: int, p: int, q: int, oriented: bool) -> tuple[tuple[int, int], ...]:
    prev_p, prev_q = (p - 1) % size, (q - 1) % size
    if oriented:
        return (prev_p, q), (prev_q, p)
    return (prev_p, prev_q), (p, q)


def state_loop_counts(d: GaussDiagram) -> dict[tuple[int, int], int]:
    """Map ``(#A, loops)`` to the number of states with those values."""
    n = d.n
    if n > MAX_CHORDS:
        raise StateSpaceTooLarge(f"{n} chords exceed the state-sum limit of {MAX_CHORDS}")
    size = 2 * n
    pos = d.positions()
    options = []
    for c in range(1, n + 1):
        p, q = pos[c]["O"], pos[c]["U"]
        positive = d.sign(c) > 0
        a_joins = _smoothing_joins(size, p, q, oriented=positive)
        b_joins = _smoothing_joins(size, p, q, oriented=not positive)
        options.append((a_joins, b_joins))
    counts: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        joins = []
        a = 0
        for k, (aj, bj) in enumerate(options):
            if state >> k & 1:
                joins.extend(bj)
            else:
                joins.extend(aj)
                a += 1
        key = (a, _count_loops(size, joins))
        counts[key] = counts.get(key, 0) + 1
    return counts


def delta() -> LaurentPoly:
    return LaurentPoly({2: -1, -2: -1})


def bracket(d: GaussDiagram) -> LaurentPoly:
    """``sum over states A^(#A - #B) delta^(loops - 1)``, with ``<empty> = 1``."""
    if d.n == 0:
        return LaurentPoly.const(1)
    n = d.n
    dl = delta()
    powers: dict[int, LaurentPoly] = {}
    total = LaurentPoly()
    for (a, loops), mult in sorted(state_loop_counts(d).items()):
        if loops - 1 not in powers:
            powers[loops - 1] = dl ** (loops - 1)
        total = total + powers[loops - 1] * LaurentPoly.monomial(a - (n - a), mult)
    return total


def normalized_polynomial(d: GaussDiagram) -> LaurentPoly:
    """``(-A^3)^(-writhe) <D>``, invariant under every move."""
    w = d.writhe
    return LaurentPoly.monomial(-3 * w, (-1) ** (w % 2)) * bracket(d)
