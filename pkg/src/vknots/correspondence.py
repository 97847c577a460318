"""The dictionary between Gauss diagrams and Wirtinger presentations.

Arcs of a diagram run between consecutive U endpoints (arrowheads).  Arc
``t1`` starts at the first U endpoint at or after the basepoint, and the
arcs are numbered in circle order.  Relator ``k`` (0-based) belongs to the
chord whose head ends arc ``t_{k+1}``, so every extracted presentation is
cyclic: ``t_{k+2} = t_{k+1}^(a^e)`` with ``a`` the tail arc and ``e`` the sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, permutations, product
from typing import Callable, Iterator, Sequence

from .errors import BadSplice, NotCyclic, NotRealizableForm, TraceFailure, UnknownArc
from .gauss import GaussDiagram
from .wirtinger import Shape, WirtingerData, cyclic_rotation_match
from .words import Word, reduce


def arc_names(d: GaussDiagram) -> tuple[str, ...]:
    return tuple(f"t{k + 1}" for k in range(max(1, d.n)))


def _arc_index(d: GaussDiagram) -> tuple[list[int], list[int]]:
    """U positions in circle order and, for each position, the arc containing it."""
    heads = [p for p, (_, r) in enumerate(d.endpoints) if r == "U"]
    arc_of = [0] * len(d.endpoints)
    k = len(heads) - 1  # positions before the first head lie on the last arc
    nxt = 0
    for p in range(len(d.endpoints)):
        if nxt < len(heads) and heads[nxt] == p:
            k = nxt
            nxt += 1
        arc_of[p] = k
    return heads, arc_of


def group_of_diagram(d: GaussDiagram) -> WirtingerData:
    if d.n == 0:
        return WirtingerData(("t",), ())
    names = arc_names(d)
    heads, arc_of = _arc_index(d)
    pos = d.positions()
    n = d.n
    shapes = []
    for k in range(n):
        head = heads[(k + 1) % n]
        chord = d.endpoints[head][0]
        tail_arc = arc_of[pos[chord]["O"]]
        shapes.append(Shape((k + 1) % n, k, Word.gen(names[tail_arc], d.sign(chord))))
    return WirtingerData(names, tuple(shapes))


@dataclass(frozen=True)
class PeripheralData:
    meridian: str
    longitude: Word
    framing_p: int


def longitude_of_diagram(d: GaussDiagram, start_arc: str | int = "t1") -> PeripheralData:
    """Read the longitude once around the circle from the start of ``start_arc``."""
    if d.n == 0:
        if start_arc not in ("t", "t1", 0, 1):
            raise UnknownArc(f"unknown arc {start_arc!r}")
        return PeripheralData("t", Word.identity(), 0)
    w = group_of_diagram(d)
    if isinstance(start_arc, int):
        k = start_arc - 1
        if not 0 <= k < d.n:
            raise UnknownArc(f"arc index {start_arc} out of range 1..{d.n}")
    else:
        if start_arc not in w.generators:
            raise UnknownArc(f"unknown arc {start_arc!r}")
        k = w.generators.index(start_arc)
    n = d.n
    letters = []
    for step in range(n):
        letters.extend(w.shapes[(k + step) % n].w.letters)
    p = d.writhe
    meridian = w.generators[k]
    lon = reduce(letters) * Word.gen(meridian, -p)
    return PeripheralData(meridian, lon, p)


# --- realization ----------------------------------------------------------------


@dataclass(frozen=True)
class Realization:
    diagram: GaussDiagram
    tail_order: tuple[tuple[int, ...], ...]  # per arc: relator indices of its tails, in order


def _require_realizable(w: WirtingerData) -> None:
    if not w.is_realizable():
        raise NotRealizableForm("cyclic presentation with one-letter conjugators required")


def _tails_per_arc(w: WirtingerData) -> list[list[int]]:
    index = {g: k for k, g in enumerate(w.generators)}
    tails: list[list[int]] = [[] for _ in w.generators]
    for k, s in enumerate(w.shapes):
        (g, _), = s.w.letters
        tails[index[g]].append(k)
    return tails


def _build(w: WirtingerData, tail_order: Sequence[Sequence[int]]) -> Realization:
    n = len(w.generators)
    seq = []
    signs = {}
    for k, s in enumerate(w.shapes):
        signs[k + 1] = s.w.letters[0][1]
    for arc in range(n):
        seq.append((n if arc == 0 else arc, "U"))  # head of the relator ending the previous arc
        seq.extend((k + 1, "O") for k in tail_order[arc])
    return Realization(GaussDiagram.from_sequence(seq, signs), tuple(tuple(t) for t in tail_order))


def default_policy(tails: list[int]) -> list[int]:
    return sorted(tails)


def realize_presentation(
    w: WirtingerData, policy: Callable[[list[int]], Sequence[int]] = default_policy
) -> Realization:
    """Place ``n`` heads on the circle and one chord per relator.

    Relator ``k`` (``t_{k+2} = t_{k+1}^(t_a^e)``) becomes a chord of sign
    ``e`` with its tail on arc ``t_a`` and its head at the end of arc
    ``t_{k+1}``.  ``policy`` orders the tails sharing an arc.
    """
    _require_realizable(w)
    tails = _tails_per_arc(w)
    order = [list(policy(list(t))) for t in tails]
    for given, chosen in zip(tails, order):
        if sorted(given) != sorted(chosen):
            raise NotRealizableForm("tail-order policy must permute the tails of each arc")
    return _build(w, order)


def enumerate_realizations(w: WirtingerData, cap: int | None = None) -> list[Realization]:
    _require_realizable(w)
    tails = _tails_per_arc(w)
    combos: Iterator = product(*(permutations(t) for t in tails))
    if cap is not None:
        combos = islice(combos, cap)
    return [_build(w, order) for order in combos]


# --- connected sums --------------------------------------------------------------


@dataclass(frozen=True)
class Splice:
    """Relator indices whose basepoint-arc letter lies before the cut point."""

    before1: frozenset[int] = frozenset()
    before2: frozenset[int] = frozenset()


def splice_for_gaps(r1: Realization, gap1: int, r2: Realization, gap2: int) -> Splice:
    """Splice data for cutting realized diagrams at gaps on their first arcs."""
    out = []
    for r, gap in ((r1, gap1), (r2, gap2)):
        first = r.tail_order[0]
        if not 1 <= gap <= len(first) + 1:
            raise BadSplice(f"gap {gap} is not on the first arc (allowed 1..{len(first) + 1})")
        out.append(frozenset(first[: gap - 1]))
    return Splice(*out)


def _swap_base(word: Word, old: str, new: str) -> Word:
    return Word._from_reduced(tuple((new if g == old else g, e) for g, e in word.letters))


def connected_sum_presentation(w1: WirtingerData, w2: WirtingerData, splice: Splice = Splice()) -> WirtingerData:
    """Presentation of the based connected sum, cut on arcs ``t_1`` and ``s_1``.

    Generators are ``t_1..t_n, s_1..s_m``; the head ending ``t_n`` now starts
    ``s_1`` and the head ending ``s_m`` starts ``t_1``.  Letters ``t_1`` in the
    relators listed by ``splice.before1`` become ``s_1`` (and symmetrically).
    """
    for w in (w1, w2):
        if not w.is_cyclic():
            raise NotCyclic("both summands must be cyclic")
    if set(w1.generators) & set(w2.generators):
        raise BadSplice("summands must use disjoint generator names")
    n, m = len(w1.generators), len(w2.generators)
    t1, s1 = w1.generators[0], w2.generators[0]
    for before, w, base in ((splice.before1, w1, t1), (splice.before2, w2, s1)):
        for k in before:
            if not 0 <= k < len(w.shapes) or base not in w.shapes[k].w.generators():
                raise BadSplice(f"relator {k} has no {base} letter to move")
    shapes = []
    for k, s in enumerate(w1.shapes):
        u = _swap_base(s.w, t1, s1) if k in splice.before1 else s.w
        target = k + 1 if k < n - 1 else n  # last relator now starts s_1
        shapes.append(Shape(target, k, u))
    for k, s in enumerate(w2.shapes):
        v = _swap_base(s.w, s1, t1) if k in splice.before2 else s.w
        target = n + k + 1 if k < m - 1 else 0
        shapes.append(Shape(target, n + k, v))
    return WirtingerData(w1.generators + w2.generators, tuple(shapes))


def same_cyclic_presentation(a: WirtingerData, b: WirtingerData) -> bool:
    return cyclic_rotation_match(a, b) is not None


# --- peripheral commutation -------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    """``t_{k+1}^-1 t_1^{W_k}`` written as a product of relator conjugates.

    ``factors`` lists ``(relator index, conjugator c)`` meaning ``c^-1 r c``.
    """

    k: int
    prefix: Word
    factors: tuple[tuple[int, Word], ...]


@dataclass(frozen=True)
class PeripheralTrace:
    steps: tuple[TraceStep, ...]
    longitude: Word
    commutator_factors: tuple[tuple[int, Word], ...]


def _expand(factors, relators) -> Word:
    out = Word.identity()
    for idx, c in factors:
        out = out * relators[idx].conjugate(c)
    return out


def verify_peripheral_commutation(d: GaussDiagram) -> PeripheralTrace:
    """Certify ``[t_1, longitude] = 1`` by explicit free-group identities.

    Substituting ``t_{k+1} = t_k^{w_k}`` around the cycle gives
    ``t_1 = t_1^{w_1 ... w_n}``.  Each step is checked as an exact identity
    in the free group: ``t_{k+1}^-1 t_1^{W_k} = r_k (t_k^-1 t_1^{W_{k-1}})^{w_k}``.
    """
    if d.n == 0:
        raise TraceFailure("diagram has no chords")
    w = group_of_diagram(d)
    rels = w.presentation.relators
    n = len(w.generators)
    t1 = w.gen(0)
    prefix = Word.identity()
    factors: tuple[tuple[int, Word], ...] = ()
    steps = []
    for k, s in enumerate(w.shapes):
        prefix = prefix * s.w
        factors = ((k, Word.identity()),) + tuple((i, c * s.w) for i, c in factors)
        target = w.gen((k + 1) % n).inverse() * t1.conjugate(prefix)
        if _expand(factors, rels) != target:
            raise TraceFailure(f"substitution step {k + 1} does not hold in the free group")
        steps.append(TraceStep(k + 1, prefix, factors))
    p = d.writhe
    lon = prefix * t1 ** (-p)
    comm = t1.inverse() * lon.inverse() * t1 * lon
    conj = t1 ** (-p)
    comm_factors = tuple((i, c * conj) for i, c in factors)
    if _expand(comm_factors, rels) != comm:
        raise TraceFailure("commutator certificate does not reduce to [t1, l]")
    if lon != longitude_of_diagram(d).longitude:
        raise TraceFailure("trace longitude disagrees with the diagram's longitude")
    return PeripheralTrace(tuple(steps), lon, comm_factors)
