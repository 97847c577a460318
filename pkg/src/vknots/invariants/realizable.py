"""Longitude images realizable by surjections onto a finite group.

For a finite group ``G`` and a weight-one element ``mu`` the realizable set
is ``G' cap Z(mu)``.  :func:`realizable_set` computes that closed form from
the table; :func:`empirical_realizable_search` collects longitude images of
actual diagrams, which must always land inside it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..correspondence import group_of_diagram, longitude_of_diagram
from ..errors import BudgetExceeded, NotWeightOne
from ..gauss import GaussDiagram, all_diagrams, connected_sum, mirror_reverse, random_diagram
from .groups import FiniteGroup
from .homs import enumerate_homs, evaluate


def realizable_set(g: FiniteGroup, mu: int, require_weight_one: bool = False) -> frozenset[int]:
    """``G' cap Z(mu)``, checked to be a subgroup.

    Raises :class:`NotWeightOne` only when ``require_weight_one`` is set and
    ``mu`` does not normally generate ``g``; otherwise the closed form is
    returned regardless (see :func:`weight_one_note`).
    """
    if require_weight_one and not g.is_weight_one(mu):
        raise NotWeightOne(f"{g.names[mu]} does not normally generate {g.name}")
    out = g.commutator_subgroup() & g.centralizer(mu)
    if not g.is_subgroup(out):
        raise AssertionError("G' cap Z(mu) is not a subgroup")
    return out


def weight_one_note(g: FiniteGroup, mu: int) -> str | None:
    if g.is_weight_one(mu):
        return None
    closure = g.normal_closure([mu])
    return (
        f"{g.names[mu]} is not of weight one in {g.name} (normal closure has order "
        f"{len(closure)} of {g.order}); no knot group surjects with meridian -> {g.names[mu]}"
    )


@dataclass
class SearchResult:
    found: set[int] = field(default_factory=set)
    witnesses: dict[int, str] = field(default_factory=dict)  # element -> diagram code
    diagrams_checked: int = 0
    exhausted: bool = False  # True when the budget ran out before the corpus did


def seed_corpus(max_chords: int = 3):
    for n in range(max_chords + 1):
        yield from all_diagrams(n)


def _candidates(max_chords: int, rng: random.Random, extra_random: int):
    corpus = list(seed_corpus(max_chords))
    yield from corpus
    for d in corpus:
        yield mirror_reverse(d)
    for _ in range(extra_random):
        n = rng.randint(max_chords + 1, max_chords + 3)
        yield random_diagram(n, rng)


def longitude_images(d: GaussDiagram, g: FiniteGroup, mu: int, surjective: bool = True) -> set[int]:
    """Longitude images over homs with ``t1 -> mu`` (onto ``g`` if ``surjective``)."""
    w = group_of_diagram(d)
    lon = longitude_of_diagram(d).longitude
    hs = enumerate_homs(w, g, fix={w.generators[0]: mu}, surjective_only=surjective)
    return {evaluate(lon, hs.images(h), g) for h in hs.homs}


def empirical_realizable_search(
    g: FiniteGroup,
    mu: int,
    budget: int = 2000,
    seed: int = 0,
    max_chords: int = 3,
    extra_random: int = 500,
) -> SearchResult:
    """Search small diagrams, their mirror-reverses, random diagrams and
    connected sums of earlier witnesses for surjections with meridian ``mu``.

    ``budget`` bounds the number of diagrams examined.  Every recorded
    image is recomputed from its witness diagram before it is accepted.
    """
    rng = random.Random(seed)
    res = SearchResult()
    witness_diagrams: dict[int, GaussDiagram] = {}

    def examine(d: GaussDiagram) -> bool:
        if res.diagrams_checked >= budget:
            res.exhausted = True
            return False
        res.diagrams_checked += 1
        try:
            images = longitude_images(d, g, mu)
        except BudgetExceeded:
            return True
        for x in images - res.found:
            if x in longitude_images(d, g, mu):
                res.found.add(x)
                res.witnesses[x] = d.code()
                witness_diagrams[x] = d
        return True

    for d in _candidates(max_chords, rng, extra_random):
        if not examine(d):
            return res
    # products: a based connected sum realizes the product of longitudes
    frontier = list(witness_diagrams.items())
    for x, d1 in frontier:
        for y, d2 in list(witness_diagrams.items()):
            if g.mul(x, y) in res.found:
                continue
            if not examine(connected_sum(d1, 0, d2, 0)):
                return res
    return res
