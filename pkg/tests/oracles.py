"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from itertools import combinations, product
from math import gcd

from vknots.gauss import GaussDiagram
from vknots.invariants.laurent import LaurentPoly

# Planar diagram codes: X[a,b,c,d] with a the incoming under edge, labels
# counterclockwise.  Positive crossing iff b == d + 1 (mod 2n).
PD = {
    "trefoil": [(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)],
    "figure_eight": [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)],
    "unknot_r1": [(1, 1, 2, 2)],
}


def _components(pairs, labels) -> int:
    parent = {x: x for x in labels}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    return len({find(x) for x in labels})


def pd_bracket(pd) -> LaurentPoly:
    """Kauffman bracket with the A-smoothing joining (a,b) and (c,d)."""
    labels = {x for x in sum(pd, ())}
    delta = LaurentPoly({2: -1, -2: -1})
    total = LaurentPoly()
    for state in product((0, 1), repeat=len(pd)):
        pairs = []
        for (a, b, c, d), s in zip(pd, state):
            pairs += [(a, b), (c, d)] if s == 0 else [(a, d), (b, c)]
        loops = _components(pairs, labels)
        na = state.count(0)
        total = total + LaurentPoly.monomial(na - (len(pd) - na)) * delta ** (loops - 1)
    return total


def pd_sign(x, size: int) -> int:
    a, b, c, d = x
    if b == d % size + 1:
        return 1
    if d == b % size + 1:
        return -1
    raise ValueError(f"cannot orient crossing {x}")


def pd_to_gauss(pd) -> GaussDiagram:
    """Walk edges 1..2n; record each crossing where an edge ends."""
    size = 2 * len(pd)
    seq = []
    signs = {}
    for k in range(1, size + 1):
        for cid, x in enumerate(pd, start=1):
            a, b, c, d = x
            sign = pd_sign(x, size)
            over_in = d if sign > 0 else b
            if k == a:
                seq.append((cid, "U"))
            elif k == over_in:
                seq.append((cid, "O"))
            else:
                continue
            signs[cid] = sign
    return GaussDiagram.from_sequence(seq, signs)


def brute_colorings(w, n: int) -> int:
    """Try every labeling of the generators by Z/n."""
    gens = w.generators
    count = 0
    for labels in product(range(n), repeat=len(gens)):
        col = dict(zip(gens, labels))
        ok = True
        for s in w.shapes:
            c = col[gens[s.j]]
            for name, _ in s.w.letters:
                c = (2 * col[name] - c) % n
            if c != col[gens[s.i]]:
                ok = False
                break
        count += ok
    return count


def brute_homs(p, g) -> int:
    """Count generator-image tuples killing every relator."""
    count = 0
    for imgs in product(range(g.order), repeat=len(p.generators)):
        env = dict(zip(p.generators, imgs))
        ok = True
        for r in p.relators:
            x = g.identity
            for name, e in r.letters:
                y = env[name]
                x = g.mul(x, y if e > 0 else g.inv(y))
            if x != g.identity:
                ok = False
                break
        count += ok
    return count


def _det(m):
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for k in range(n):
        if m[0][k]:
            minor = [row[:k] + row[k + 1:] for row in m[1:]]
            total += (-1) ** k * m[0][k] * _det(minor)
    return total


def determinantal_divisors(m) -> list[int]:
    """gcd of all k-minors, k = 1..min(rows, cols)."""
    rows, cols = len(m), len(m[0]) if m else 0
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, _det([[m[r][c] for c in cs] for r in rs]))
        out.append(g)
    return out
