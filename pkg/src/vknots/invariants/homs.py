"""Homomorphisms from finitely presented groups to finite groups.

Backtracking over generator images.  For Wirtinger presentations all
generators are conjugate, so their images are drawn from one conjugacy class
and each relator ``t_i = t_j^w`` propagates images once ``t_j`` and the
letters of ``w`` are known.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from ..errors import BudgetExceeded, NotWirtingerShape, NotConjugate, UnknownGroup
from ..wirtinger import WirtingerData, recognize
from ..words import Presentation, Word
from .groups import FiniteGroup

DEFAULT_BUDGET = 2_000_000

Hom = tuple[int, ...]


def evaluate(word: Word, images: dict[str, int], g: FiniteGroup) -> int:
    x = g.identity
    for name, e in word.letters:
        y = images[name]
        x = g.mul(x, y if e > 0 else g.inv(y))
    return x


@dataclass(frozen=True)
class HomSet:
    presentation: Presentation
    group: FiniteGroup
    homs: tuple[Hom, ...]

    def __len__(self):
        return len(self.homs)

    def images(self, hom: Hom) -> dict[str, int]:
        return dict(zip(self.presentation.generators, hom))

    def image_of(self, word: Word) -> list[int]:
        return [evaluate(word, self.images(h), self.group) for h in self.homs]


def _as_wirtinger(p) -> WirtingerData | None:
    if isinstance(p, WirtingerData):
        return p
    try:
        return recognize(p)
    except (NotWirtingerShape, NotConjugate):
        return None


class _Search:
    def __init__(self, p: Presentation, g: FiniteGroup, w: WirtingerData | None, budget: int):
        self.p, self.g, self.w = p, g, w
        self.names = p.generators
        self.index = {name: k for k, name in enumerate(self.names)}
        self.budget = budget
        self.nodes = 0
        self.found: list[Hom] = []
        self.relators = [self.compile(r) for r in p.relators]
        # relators checked as soon as all their generators are assigned
        self.rel_gens = [{k for k, _ in r} for r in self.relators]
        if w is not None:
            self.shapes = [(s.i, s.j, self.compile(s.w)) for s in w.shapes]

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(
                f"homomorphism search exceeded {self.budget} nodes", partial=list(self.found)
            )

    def compile(self, word: Word) -> list[tuple[int, int]]:
        return [(self.index[name], e) for name, e in word.letters]

    def value(self, word: list[tuple[int, int]], img: list[int | None]) -> int | None:
        table, inv = self.g.table, self.g.inverses
        x = self.g.identity
        for k, e in word:
            y = img[k]
            if y is None:
                return None
            x = table[x][y if e > 0 else inv[y]]
        return x

    def propagate(self, img: list[int | None]) -> bool:
        if self.w is None:
            return True
        g = self.g
        conj = g.conj_table
        changed = True
        while changed:
            changed = False
            for i, j, word in self.shapes:
                c = self.value(word, img)
                if c is None:
                    continue
                ti, tj = img[i], img[j]
                if tj is not None:
                    want = conj[tj][c]
                    if ti is None:
                        img[i] = want
                        changed = True
                    elif ti != want:
                        return False
                elif ti is not None:
                    img[j] = g.mul(g.mul(c, ti), g.inv(c))
                    changed = True
        return True

    def consistent(self, img: list[int | None]) -> bool:
        for r, gens in zip(self.relators, self.rel_gens):
            if all(img[k] is not None for k in gens) and self.value(r, img) != self.g.identity:
                return False
        return True

    def run(self, img: list[int | None], domain: Sequence[int]):
        self.tick()
        img = list(img)
        if not self.propagate(img):
            return
        free = next((k for k, x in enumerate(img) if x is None), None)
        # propagation already enforces every Wirtinger relator once it is fully assigned
        if (self.w is None or free is None) and not self.consistent(img):
            return
        if free is None:
            self.found.append(tuple(img))  # type: ignore[arg-type]
            return
        for x in domain:
            img[free] = x
            self.run(img, domain)
        img[free] = None


def enumerate_homs(
    p: Presentation | WirtingerData,
    g: FiniteGroup,
    fix: dict[str, int] | None = None,
    surjective_only: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> HomSet:
    """All homomorphisms ``p -> g``, optionally with some generator images fixed.

    ``fix`` maps generator names to element indices (typically the meridian).
    Raises :class:`BudgetExceeded` (with the partial list) past ``budget``
    search nodes.
    """
    w = _as_wirtinger(p)
    pres = w.presentation if isinstance(p, WirtingerData) else p
    search = _Search(pres, g, w, budget)
    fix = dict(fix or {})
    for name in fix:
        if name not in search.index:
            raise UnknownGroup(f"cannot fix unknown generator {name!r}")
    start: list[int | None] = [None] * len(pres.generators)
    for name, x in fix.items():
        start[search.index[name]] = x
    if not pres.generators:
        search.found.append(())
    elif w is not None:
        if fix:
            classes = [g.conjugacy_class(next(iter(fix.values())))]
        else:
            classes = g.conjugacy_classes()
        for cls in classes:
            domain = sorted(cls)
            if start[0] is None and not fix:
                for x in domain:
                    seed = list(start)
                    seed[0] = x
                    search.run(seed, domain)
            else:
                search.run(start, domain)
    else:
        search.run(start, range(g.order))
    homs = sorted(set(search.found))
    if surjective_only:
        homs = [h for h in homs if len(g.generated(h)) == g.order]
    return HomSet(pres, g, tuple(homs))


def count_homs(p, g: FiniteGroup, **kwargs) -> int:
    w = None if kwargs else _as_wirtinger(p)
    if w is None or not w.generators:
        return len(enumerate_homs(p, g, **kwargs))
    # conjugation permutes the homs, so one representative per class suffices
    search = _Search(w.presentation, g, w, kwargs.get("budget", DEFAULT_BUDGET))
    total = 0
    for c in g.conjugacy_classes():
        before = len(search.found)
        search.run([min(c)] + [None] * (len(w.generators) - 1), sorted(c))
        total += len(c) * (len(search.found) - before)
    return total


def hom_fingerprint(p, groups: Sequence[FiniteGroup]) -> tuple[int, ...]:
    return tuple(count_homs(p, g) for g in groups)


def longitude_class_fingerprint(p, longitude: Word, groups: Sequence[FiniteGroup], meridian: str):
    """Per group: multiset of (meridian class, longitude class) pairs over all homs.

    Conjugacy classes are recorded by their smallest element index so the
    fingerprint survives moves that conjugate the longitude.
    """
    out = []
    for g in groups:
        hs = enumerate_homs(p, g)
        k = hs.presentation.generators.index(meridian)
        lon = hs.image_of(longitude)
        pairs = Counter(
            (min(g.conjugacy_class(h[k])), min(g.conjugacy_class(x))) for h, x in zip(hs.homs, lon)
        )
        out.append(tuple(sorted(pairs.items())))
    return tuple(out)
