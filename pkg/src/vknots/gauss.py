"""Gauss diagrams: encoding, validation, mirror/reverse and based connected sum.

A diagram is a cyclic sequence of chord endpoints read counterclockwise from
the basepoint.  Each chord has an ``O`` endpoint (arrowtail, over-crossing)
and a ``U`` endpoint (arrowhead, under-crossing) and a sign.  Chord ids are
always renumbered ``1..n`` by first appearance, so two diagrams compare equal
exactly when their canonical codes agree.

Gaps: gap ``g`` is the chord-free point immediately before endpoint ``g``
(between endpoints ``g-1`` and ``g``, cyclically); gap 0 is the basepoint.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import BadSyntax, DuplicateRole, GapOutOfRange, OddOccurrence, SignMismatch

Endpoint = tuple[int, str]  # (chord id, "O" | "U")

_TOKEN = re.compile(r"([OU])([1-9][0-9]*)([+-])")


@dataclass(frozen=True)
class Chord:
    id: int
    sign: int
    head_pos: int  # position of the U endpoint
    tail_pos: int  # position of the O endpoint


@dataclass(frozen=True, eq=True)
class GaussDiagram:
    endpoints: tuple[Endpoint, ...]
    signs: tuple[int, ...]  # signs[id - 1]

    def __post_init__(self):
        _validate(self.endpoints, dict(enumerate(self.signs, start=1)))
        if _canonical_ids(self.endpoints) != self.endpoints:
            raise ValueError("endpoints are not in canonical numbering; use from_sequence()")

    @classmethod
    def from_sequence(cls, endpoints: Sequence[Endpoint], signs: dict[int, int]) -> "GaussDiagram":
        """Build a diagram from arbitrary ids, renumbering them canonically."""
        endpoints = tuple((int(c), r) for c, r in endpoints)
        _validate(endpoints, signs)
        relabel: dict[int, int] = {}
        for c, _ in endpoints:
            relabel.setdefault(c, len(relabel) + 1)
        new = tuple((relabel[c], r) for c, r in endpoints)
        new_signs = [0] * len(relabel)
        for old, nid in relabel.items():
            new_signs[nid - 1] = signs[old]
        return cls(new, tuple(new_signs))

    @classmethod
    def empty(cls) -> "GaussDiagram":
        return cls((), ())

    @property
    def n(self) -> int:
        return len(self.signs)

    def __len__(self):
        return len(self.endpoints)

    def sign(self, chord: int) -> int:
        return self.signs[chord - 1]

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def positions(self) -> dict[int, dict[str, int]]:
        out: dict[int, dict[str, int]] = {}
        for k, (c, r) in enumerate(self.endpoints):
            out.setdefault(c, {})[r] = k
        return out

    @property
    def chords(self) -> tuple[Chord, ...]:
        pos = self.positions()
        return tuple(
            Chord(c, self.signs[c - 1], pos[c]["U"], pos[c]["O"]) for c in range(1, self.n + 1)
        )

    def rotate(self, k: int) -> "GaussDiagram":
        """Move the basepoint forward by ``k`` endpoints."""
        if not self.endpoints:
            return self
        k %= len(self.endpoints)
        seq = self.endpoints[k:] + self.endpoints[:k]
        return GaussDiagram.from_sequence(seq, dict(enumerate(self.signs, start=1)))

    def code(self) -> str:
        return serialize_gauss_code(self)

    def __str__(self):
        return self.code()


def _validate(endpoints, signs) -> None:
    seen: dict[int, list[str]] = {}
    for c, r in endpoints:
        if r not in ("O", "U"):
            raise BadSyntax(f"bad role {r!r}")
        if c < 1:
            raise BadSyntax(f"chord id must be >= 1, got {c}")
        seen.setdefault(c, []).append(r)
    for c, roles in seen.items():
        if len(roles) == 2 and roles[0] == roles[1]:
            raise DuplicateRole(f"chord {c} appears twice as {roles[0]}")
        if len(roles) != 2:
            raise OddOccurrence(f"chord {c} appears {len(roles)} time(s)")
        if signs.get(c) not in (1, -1):
            raise SignMismatch(f"chord {c} has no valid sign")
    if set(signs) - set(seen):
        raise OddOccurrence(f"signs given for absent chords {sorted(set(signs) - set(seen))}")


def _canonical_ids(endpoints):
    relabel: dict[int, int] = {}
    for c, _ in endpoints:
        relabel.setdefault(c, len(relabel) + 1)
    return tuple((relabel[c], r) for c, r in endpoints)


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse ``O1+ U2- ...`` into a validated, canonically numbered diagram."""
    endpoints: list[Endpoint] = []
    signs: dict[int, int] = {}
    pos = 0
    for tok in text.split():
        pos = text.index(tok, pos)
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise BadSyntax(f"bad token {tok!r}", pos)
        role, cid, sgn = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
        if cid in signs and signs[cid] != sgn:
            raise SignMismatch(f"chord {cid} carries both signs")
        signs[cid] = sgn
        endpoints.append((cid, role))
        pos += len(tok)
    return GaussDiagram.from_sequence(endpoints, signs)


def serialize_gauss_code(d: GaussDiagram) -> str:
    return " ".join(f"{r}{c}{'+' if d.sign(c) > 0 else '-'}" for c, r in d.endpoints)


def mirror_reverse(d: GaussDiagram) -> GaussDiagram:
    """Reverse the circle orientation and negate every chord sign."""
    signs = {c: -s for c, s in enumerate(d.signs, start=1)}
    return GaussDiagram.from_sequence(tuple(reversed(d.endpoints)), signs)


def _check_gap(d: GaussDiagram, gap: int) -> None:
    size = len(d.endpoints)
    if size == 0:
        if gap != 0:
            raise GapOutOfRange(f"gap {gap} out of range for the empty diagram (only 0)")
    elif not 0 <= gap < size:
        raise GapOutOfRange(f"gap {gap} out of range [0, {size})")


def connected_sum(d1: GaussDiagram, p1: int, d2: GaussDiagram, p2: int) -> GaussDiagram:
    """Based connected sum: cut both circles at the given gaps and splice.

    The result reads ``d1`` from gap ``p1`` once around, then ``d2`` from
    gap ``p2`` once around.
    """
    _check_gap(d1, p1)
    _check_gap(d2, p2)
    shift = d1.n
    seq1 = d1.endpoints[p1:] + d1.endpoints[:p1]
    seq2 = tuple((c + shift, r) for c, r in d2.endpoints[p2:] + d2.endpoints[:p2])
    signs = {c: s for c, s in enumerate(d1.signs, start=1)}
    signs.update({c + shift: s for c, s in enumerate(d2.signs, start=1)})
    return GaussDiagram.from_sequence(seq1 + seq2, signs)


def gaps(d: GaussDiagram) -> range:
    return range(max(1, len(d.endpoints)))


def random_diagram(n: int, rng: random.Random) -> GaussDiagram:
    """Uniformly shuffled endpoints with random arrow directions and signs."""
    endpoints = [(c, r) for c in range(1, n + 1) for r in ("O", "U")]
    rng.shuffle(endpoints)
    signs = {c: rng.choice((1, -1)) for c in range(1, n + 1)}
    return GaussDiagram.from_sequence(endpoints, signs)


def all_diagrams(n: int):
    """Every canonically numbered diagram with ``n`` chords (with basepoint)."""
    from itertools import permutations, product

    if n == 0:
        yield GaussDiagram.empty()
        return
    seen = set()
    slots = [(c, r) for c in range(1, n + 1) for r in ("O", "U")]
    for perm in permutations(slots):
        canon = _canonical_ids(perm)
        if canon in seen:
            continue
        seen.add(canon)
        for signs in product((1, -1), repeat=n):
            yield GaussDiagram(canon, signs)
