"""Wirtinger presentations and the transforms that make them realizable.

A Wirtinger relator has the shape ``t_i^-1 t_j^w``, read as a directed edge
``j -> i`` labelled ``w`` in the conjugacy graph.  The transforms here only
ever use two moves on relators, both of which keep the presented group:

* inversion: ``t_i = t_j^w``  <=>  ``t_j = t_i^(w^-1)``;
* rerouting: from ``t_i = t_j^w1`` and ``t_j = t_k^w2`` replace the first by
  ``t_i = t_k^(w2 w1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    InternalGraphInvariantViolation,
    NonzeroExponentSum,
    NotChainForm,
    NotConjugate,
    NotCyclic,
    NotWirtingerShape,
    WrongDeficiency,
)
from .words import Presentation, Word


@dataclass(frozen=True)
class Shape:
    """Relator ``t_i^-1 t_j^w`` as generator indices ``i``, ``j`` and conjugator ``w``."""

    i: int
    j: int
    w: Word

    def relator(self, gens) -> Word:
        ti = Word.gen(gens[self.i])
        tj = Word.gen(gens[self.j])
        return ti.inverse() * tj.conjugate(self.w)

    def inverted(self) -> "Shape":
        return Shape(self.j, self.i, self.w.inverse())


@dataclass(frozen=True)
class WirtingerData:
    generators: tuple[str, ...]
    shapes: tuple[Shape, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "shapes", tuple(self.shapes))

    @cached_property
    def presentation(self) -> Presentation:
        return Presentation(self.generators, tuple(s.relator(self.generators) for s in self.shapes))

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.shapes)

    @property
    def relator_shape(self) -> tuple[tuple[int, int, Word], ...]:
        return tuple((s.i, s.j, s.w) for s in self.shapes)

    def gen(self, k: int) -> Word:
        return Word.gen(self.generators[k])

    def is_cyclic(self) -> bool:
        n = len(self.generators)
        return len(self.shapes) == n and all(
            s.j == k and s.i == (k + 1) % n for k, s in enumerate(self.shapes)
        )

    def is_chain(self) -> bool:
        n = len(self.generators)
        return len(self.shapes) == n - 1 and all(
            s.j == k and s.i == k + 1 for k, s in enumerate(self.shapes)
        )

    def is_realizable(self) -> bool:
        return self.is_cyclic() and all(len(s.w) == 1 for s in self.shapes)

    def conjugators(self) -> tuple[Word, ...]:
        return tuple(s.w for s in self.shapes)

    def rename(self, names) -> "WirtingerData":
        """Rename generators positionally (conjugator letters follow)."""
        mapping = dict(zip(self.generators, names))
        shapes = tuple(
            Shape(s.i, s.j, Word._from_reduced(tuple((mapping[g], e) for g, e in s.w)))
            for s in self.shapes
        )
        return WirtingerData(tuple(names), shapes)

    def __str__(self):
        return str(self.presentation)


def conjugacy_graph(w: WirtingerData) -> list[tuple[int, int, Word]]:
    """Directed edges ``(j, i, w)`` for each relator ``t_i = t_j^w``."""
    return [(s.j, s.i, s.w) for s in w.shapes]


def _components(n: int, shapes) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in shapes:
        parent[find(s.i)] = find(s.j)
    return len({find(x) for x in range(n)})


def _match_conjugate(c: Word, gens: dict[str, int]):
    """If ``c == v^-1 g v`` (reduced) for a generator ``g``, return ``(g, v)``."""
    L = len(c)
    if L % 2 == 0:
        return None
    h = L // 2
    g, e = c.letters[h]
    if e != 1 or g not in gens:
        return None
    left = Word._from_reduced(c.letters[:h])
    right = Word._from_reduced(c.letters[h + 1:])
    if left.inverse() != right:
        return None
    return gens[g], right


def match_shape(r: Word, generators) -> Shape | None:
    """Find ``(i, j, w)`` with ``reduce(t_i^-1 t_j^w) == r``, if any."""
    index = {g: k for k, g in enumerate(generators)}
    order = list(range(len(generators)))
    if r.letters and r.letters[0][1] == -1 and r.letters[0][0] in index:
        first = index[r.letters[0][0]]
        order.remove(first)
        order.insert(0, first)
    for i in order:
        c = Word.gen(generators[i]) * r
        hit = _match_conjugate(c, index)
        if hit is not None:
            j, v = hit
            return Shape(i, j, v)
    return None


def recognize(p: Presentation) -> WirtingerData:
    shapes = []
    for k, r in enumerate(p.relators):
        s = match_shape(r, p.generators)
        if s is None:
            raise NotWirtingerShape(f"relator {k + 1} ({r}) is not of the form t_i^-1 t_j^w")
        shapes.append(s)
    if p.generators and _components(len(p.generators), shapes) != 1:
        raise NotConjugate("conjugacy graph is disconnected: generators are not all conjugate")
    return WirtingerData(p.generators, tuple(shapes))


def double_last_relator(w: WirtingerData) -> WirtingerData:
    if w.deficiency != 1:
        raise WrongDeficiency(f"deficiency 1 required, got {w.deficiency}")
    if not w.shapes:
        # single generator, no relators: a trivial self-relator keeps the group
        return WirtingerData(w.generators, (Shape(0, 0, Word.identity()),))
    return WirtingerData(w.generators, w.shapes + (w.shapes[-1],))


def _reroute(edge: Shape, via: Shape) -> Shape:
    """``edge: t_i = t_j^w1`` and ``via: t_j = t_k^w2`` give ``t_i = t_k^(w2 w1)``."""
    if via.i != edge.j:
        raise InternalGraphInvariantViolation("reroute through a non-adjacent edge")
    return Shape(edge.i, via.j, via.w * edge.w)


def _find_cycle(n: int, shapes) -> list[int]:
    """Indices of the edges on the unique cycle of a connected betti-1 graph."""
    alive = set(range(len(shapes)))
    while True:
        degree = [0] * n
        for e in alive:
            degree[shapes[e].i] += 1
            degree[shapes[e].j] += 1
        leaves = [e for e in sorted(alive) if degree[shapes[e].i] == 1 or degree[shapes[e].j] == 1]
        if not leaves:
            break
        alive.difference_update(leaves)
    if not alive:
        raise InternalGraphInvariantViolation("graph has no cycle")
    return sorted(alive)


def _order_cycle(shapes, cycle_edges) -> list[Shape]:
    """Orient the cycle edges head-to-tail, following the first edge's direction."""
    remaining = list(cycle_edges)
    first = shapes[remaining.pop(0)]
    path = [first]
    while remaining:
        cur = path[-1].i
        for idx, e in enumerate(remaining):
            s = shapes[e]
            if s.j == cur:
                path.append(s)
                break
            if s.i == cur:
                path.append(s.inverted())
                break
        else:
            raise InternalGraphInvariantViolation("cycle edges do not close up")
        remaining.pop(idx)
    if path[-1].i != path[0].j:
        raise InternalGraphInvariantViolation("cycle does not close")
    return path


def to_cyclic(w: WirtingerData) -> WirtingerData:
    """Rewrite a deficiency-0 Wirtinger presentation into cyclic form.

    Generators come out in cycle order starting from the first input
    generator; relator ``k`` is ``t_{k+1}^-1 t_k^{w_k}`` (indices mod n).
    """
    n = len(w.generators)
    if w.deficiency != 0:
        raise WrongDeficiency(f"deficiency 0 required (double a relator first), got {w.deficiency}")
    if n == 0 or _components(n, w.shapes) != 1:
        raise InternalGraphInvariantViolation("conjugacy graph must be connected")
    shapes = list(w.shapes)
    cycle = _order_cycle(shapes, _find_cycle(n, shapes))
    on_cycle = {s.j for s in cycle}
    tree = [s for k, s in enumerate(shapes) if k not in set(_find_cycle(n, shapes))]
    while len(on_cycle) < n:
        for idx, s in enumerate(tree):
            if (s.i in on_cycle) != (s.j in on_cycle):
                break
        else:
            raise InternalGraphInvariantViolation("vertex unreachable from the cycle")
        tree.pop(idx)
        b = s if s.j in on_cycle else s.inverted()  # k -> v, t_v = t_k^b
        k, v = b.j, b.i
        pos = next(p for p, c in enumerate(cycle) if c.j == k)
        a = cycle[pos]  # k -> m, t_m = t_k^a
        rerouted = _reroute(a, b.inverted())  # v -> m with label b^-1 a
        cycle[pos:pos + 1] = [b, rerouted]
        on_cycle.add(v)
    start = next(p for p, c in enumerate(cycle) if c.j == 0) if any(c.j == 0 for c in cycle) else 0
    cycle = cycle[start:] + cycle[:start]
    order = [c.j for c in cycle]
    if sorted(order) != list(range(n)):
        raise InternalGraphInvariantViolation("cycle does not visit every generator once")
    new_index = {old: k for k, old in enumerate(order)}
    gens = tuple(w.generators[old] for old in order)
    out = tuple(Shape(new_index[c.i], new_index[c.j], c.w) for c in cycle)
    result = WirtingerData(gens, out)
    if not result.is_cyclic():
        raise InternalGraphInvariantViolation("result is not cyclic")
    return result


def to_chain(w: WirtingerData) -> WirtingerData:
    """Rewrite a deficiency-1 Wirtinger presentation (a tree) into chain form
    ``t_{k+1} = t_k^{w_k}``, k = 1..n-1, by the same rerouting move."""
    n = len(w.generators)
    if w.deficiency != 1:
        raise WrongDeficiency(f"deficiency 1 required, got {w.deficiency}")
    if n == 0 or _components(n, w.shapes) != 1:
        raise InternalGraphInvariantViolation("conjugacy graph must be connected")
    path_vertices = [0]
    path: list[Shape] = []  # path[k]: path_vertices[k] -> path_vertices[k+1]
    tree = list(w.shapes)
    while len(path_vertices) < n:
        on = set(path_vertices)
        for idx, s in enumerate(tree):
            if (s.i in on) != (s.j in on):
                break
        else:
            raise InternalGraphInvariantViolation("tree is not connected")
        tree.pop(idx)
        b = s if s.j in on else s.inverted()
        k, v = b.j, b.i
        pos = path_vertices.index(k)
        if pos == len(path):
            path.append(b)
        else:
            a = path[pos]
            path[pos:pos + 1] = [b, _reroute(a, b.inverted())]
        path_vertices.insert(pos + 1, v)
    new_index = {old: k for k, old in enumerate(path_vertices)}
    gens = tuple(w.generators[old] for old in path_vertices)
    result = WirtingerData(gens, tuple(Shape(new_index[s.i], new_index[s.j], s.w) for s in path))
    if not result.is_chain():
        raise InternalGraphInvariantViolation("result is not a chain")
    return result


def _fresh_names(taken: set[str], base: str, count: int) -> list[str]:
    out = []
    k = 1
    while len(out) < count:
        name = f"{base}_{k}"
        if name not in taken:
            out.append(name)
            taken.add(name)
        k += 1
    return out


def to_realizable(w: WirtingerData) -> WirtingerData:
    """Split every conjugator into single letters by inserting generators.

    For ``t_{j+1} = t_j^(x1 ... xL)`` new generators ``s_1..s_{L-1}`` with
    ``s_1 = t_j^x1``, ``s_k = s_{k-1}^xk`` and ``t_{j+1} = s_{L-1}^xL`` are
    spliced into the cycle after ``t_j``.  An empty conjugator becomes
    ``t_j`` itself.
    """
    if not w.is_cyclic():
        raise NotCyclic("cyclic Wirtinger presentation required")
    taken = set(w.generators)
    gens: list[str] = []
    letters: list[Word] = []  # conjugator of the edge leaving gens[k]
    for k, s in enumerate(w.shapes):
        src = w.generators[k]
        word = s.w if s.w else Word.gen(src)
        extra = _fresh_names(taken, src, len(word) - 1)
        chain = [src] + extra
        for name, letter in zip(chain, word.letters):
            gens.append(name)
            letters.append(Word._from_reduced((letter,)))
    n = len(gens)
    shapes = tuple(Shape((k + 1) % n, k, letters[k]) for k in range(n))
    return WirtingerData(tuple(gens), shapes)


def with_longitude_relator(w: WirtingerData, longitude: Word | None = None) -> WirtingerData:
    """Close a chain ``t_{k+1} = t_k^{w_k}`` with the relator
    ``t_1^-1 l^-1 w_1..w_{n-1} t_n w_{n-1}^-1..w_1^-1 l``.

    The result is cyclic of deficiency 0, presents the same group whenever
    ``l`` commutes with ``t_1`` there (the caller's obligation), and its
    realization has longitude ``l``.
    """
    if not w.is_chain():
        raise NotChainForm("chain form t_{k+1} = t_k^{w_k} required")
    lam = longitude or Word.identity()
    bad = {g: lam.exponent_sum(g) for g in lam.generators() if lam.exponent_sum(g)}
    if bad:
        raise NonzeroExponentSum(f"longitude has nonzero exponent sums {bad}")
    unknown = lam.generators() - set(w.generators)
    if unknown:
        raise NotChainForm(f"longitude uses unknown generators {sorted(unknown)}")
    prod = Word.identity()
    for s in w.shapes:
        prod = prod * s.w
    closing = Shape(0, len(w.generators) - 1, prod.inverse() * lam)
    return WirtingerData(w.generators, w.shapes + (closing,))


def cyclic_rotation_match(a: WirtingerData, b: WirtingerData) -> int | None:
    """Rotation ``r`` such that ``a``'s generator ``k`` playing ``b``'s generator
    ``k + r`` maps every shape of ``a`` onto ``b`` exactly, or ``None``."""
    if not (a.is_cyclic() and b.is_cyclic()) or len(a.generators) != len(b.generators):
        return None
    n = len(a.generators)
    for r in range(n):
        mapping = {a.generators[k]: b.generators[(k + r) % n] for k in range(n)}
        ok = True
        for k in range(n):
            sa, sb = a.shapes[k], b.shapes[(k + r) % n]
            renamed = tuple((mapping[g], e) for g, e in sa.w)
            if renamed != sb.w.letters:
                ok = False
                break
        if ok:
            return r
    return None


def chain_from_cyclic(w: WirtingerData) -> WirtingerData:
    """Drop the last relator of a cyclic presentation (it may be redundant)."""
    if not w.is_cyclic():
        raise NotCyclic("cyclic Wirtinger presentation required")
    return WirtingerData(w.generators, w.shapes[:-1])


def prepare_cyclic(w: WirtingerData) -> WirtingerData:
    """Deficiency 0 or 1 in, cyclic out (doubling the last relator if needed)."""
    if w.deficiency == 1:
        w = double_last_relator(w)
    if w.deficiency != 0:
        raise WrongDeficiency(f"deficiency 0 or 1 required, got {w.deficiency}")
    return w if w.is_cyclic() else to_cyclic(w)

