"""Reidemeister moves on Gauss diagrams and a bounded simplifier.

Move catalogue (positions index ``D.endpoints``, gaps follow :mod:`vknots.gauss`):

``R1_remove``  site ``(p,)``: a chord whose endpoints sit at ``p`` and ``p+1``.
``R1_add``     site ``(g,)``: insert a chord with adjacent endpoints at gap ``g``.
               variant bit 0: sign (0 -> +, 1 -> -); bit 1: U endpoint first.
``R2_remove``  site ``(p, q)``: two chords of opposite sign whose O endpoints
               occupy ``p, p+1`` and whose U endpoints occupy ``q, q+1``.
``R2_add``     site ``(g, h)``: insert the O pair at gap ``g`` and the U pair at
               gap ``h``.  variant bit 0: sign of the first O endpoint's chord;
               bit 1: U pair in reversed order (antiparallel strands); bit 2
               (only when ``g == h``): U pair placed before the O pair.
``R3``         site ``(a, b, c)``: three chords ``x, y, z`` of a common sign
               forming a braid-like triangle on three segments starting at
               ``a, b, c``.  Variant 1 (all positive): segment A carries the
               tails of x and y, B carries the head of x and the tail of z,
               C carries the heads of y and z.  Variant 2 (all negative) is
               its mirror: every O/U role swapped.  The move reverses the
               order of the two endpoints on each segment.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .errors import InapplicableMove
from .gauss import GaussDiagram

KINDS = ("R1_add", "R1_remove", "R2_add", "R2_remove", "R3")


@dataclass(frozen=True, order=True)
class Move:
    kind: str
    variant: int
    site: tuple[int, ...]

    def __str__(self):
        return " ".join([self.kind, str(self.variant), *map(str, self.site)])


def parse_move(line: str) -> Move:
    parts = line.split()
    if len(parts) < 3 or parts[0] not in KINDS:
        raise InapplicableMove(f"bad move line {line!r}")
    return Move(parts[0], int(parts[1]), tuple(int(x) for x in parts[2:]))


def format_move_log(moves) -> str:
    return "\n".join(str(m) for m in moves)


def parse_move_log(text: str) -> list[Move]:
    return [parse_move(line) for line in text.splitlines() if line.strip()]


def _signs(d: GaussDiagram) -> dict[int, int]:
    return dict(enumerate(d.signs, start=1))


def _insert(seq, inserts: dict[int, list]) -> list:
    out = []
    for k, ep in enumerate(seq):
        out.extend(inserts.get(k, ()))
        out.append(ep)
    if not seq:
        out.extend(inserts.get(0, ()))
    return out


def _r1_removals(d: GaussDiagram) -> list[Move]:
    size = len(d.endpoints)
    out = []
    for p in range(size):
        q = (p + 1) % size
        if size == 2 and p == 1:
            break  # the single chord of a kink is adjacent on both sides
        if p != q and d.endpoints[p][0] == d.endpoints[q][0]:
            out.append(Move("R1_remove", 0, (p,)))
    return out


def _r2_removals(d: GaussDiagram) -> list[Move]:
    size = len(d.endpoints)
    if size < 4:
        return []
    pos = d.positions()
    out = []
    for p in range(size):
        p1 = (p + 1) % size
        (a, ra), (b, rb) = d.endpoints[p], d.endpoints[p1]
        if ra != "O" or rb != "O" or a == b or d.sign(a) == d.sign(b):
            continue
        ua, ub = pos[a]["U"], pos[b]["U"]
        if (ua + 1) % size == ub:
            out.append(Move("R2_remove", 0, (p, ua)))
        elif (ub + 1) % size == ua:
            out.append(Move("R2_remove", 0, (p, ub)))
    return out


def _r3_roles(variant: int):
    # (chord, segment) -> role for the triangle x: A->B, y: A->C, z: B->C
    o, u = ("O", "U") if variant == 1 else ("U", "O")
    return {("x", "A"): o, ("x", "B"): u, ("y", "A"): o, ("y", "C"): u, ("z", "B"): o, ("z", "C"): u}


def _r3_sites(d: GaussDiagram) -> list[Move]:
    size = len(d.endpoints)
    if d.n < 3:
        return []
    pos = d.positions()
    out = set()
    for variant, sign in ((1, 1), (2, -1)):
        roles = _r3_roles(variant)
        chords = [c for c in range(1, d.n + 1) if d.sign(c) == sign]
        for x, y, z in permutations(chords, 3):
            name = {"x": x, "y": y, "z": z}
            at = {(k, s): pos[name[k]][r] for (k, s), r in roles.items()}
            pairs = (
                (at["x", "A"], at["y", "A"]),
                (at["x", "B"], at["z", "B"]),
                (at["y", "C"], at["z", "C"]),
            )
            if all((p + 1) % size == q for p, q in pairs):
                out.add(Move("R3", variant, tuple(p for p, _ in pairs)))
            elif all((q + 1) % size == p for p, q in pairs):
                out.add(Move("R3", variant, tuple(q for _, q in pairs)))
    return sorted(out)


def enumerate_moves(d: GaussDiagram) -> list[Move]:
    """Every applicable move on ``d``, in a fixed deterministic order."""
    moves = _r1_removals(d) + _r2_removals(d)
    gap_range = range(max(1, len(d.endpoints)))
    for g in gap_range:
        for v in range(4):
            moves.append(Move("R1_add", v, (g,)))
    for g in gap_range:
        for h in gap_range:
            for v in range(8 if g == h else 4):
                moves.append(Move("R2_add", v, (g, h)))
    moves.extend(_r3_sites(d))
    return moves


def removal_moves(d: GaussDiagram) -> list[Move]:
    return _r1_removals(d) + _r2_removals(d)


def apply_move(d: GaussDiagram, m: Move) -> GaussDiagram:
    size = len(d.endpoints)
    seq = list(d.endpoints)
    signs = _signs(d)
    if m.kind == "R1_remove":
        (p,) = m.site
        q = (p + 1) % size if size else 0
        if not (0 <= p < size) or p == q or seq[p][0] != seq[q][0]:
            raise InapplicableMove(f"{m}: no isolated chord at {p}")
        c = seq[p][0]
        signs.pop(c)
        return GaussDiagram.from_sequence([e for e in seq if e[0] != c], signs)
    if m.kind == "R1_add":
        (g,) = m.site
        _check_gaps(d, m, g)
        if not 0 <= m.variant < 4:
            raise InapplicableMove(f"{m}: bad variant")
        c = d.n + 1
        signs[c] = -1 if m.variant & 1 else 1
        pair = [(c, "U"), (c, "O")] if m.variant & 2 else [(c, "O"), (c, "U")]
        return GaussDiagram.from_sequence(_insert(seq, {g: pair}), signs)
    if m.kind == "R2_remove":
        if Move("R2_remove", 0, m.site) not in _r2_removals(d) or m.variant != 0:
            raise InapplicableMove(f"{m}: no second-move bigon at {m.site}")
        p, _ = m.site
        a, b = seq[p][0], seq[(p + 1) % size][0]
        signs.pop(a)
        signs.pop(b)
        return GaussDiagram.from_sequence([e for e in seq if e[0] not in (a, b)], signs)
    if m.kind == "R2_add":
        g, h = m.site
        _check_gaps(d, m, g, h)
        if not 0 <= m.variant < (8 if g == h else 4):
            raise InapplicableMove(f"{m}: bad variant")
        a, b = d.n + 1, d.n + 2
        signs[a] = -1 if m.variant & 1 else 1
        signs[b] = -signs[a]
        opair = [(a, "O"), (b, "O")]
        upair = [(b, "U"), (a, "U")] if m.variant & 2 else [(a, "U"), (b, "U")]
        if g == h:
            block = upair + opair if m.variant & 4 else opair + upair
            inserts = {g: block}
        else:
            inserts = {g: opair, h: upair}
        return GaussDiagram.from_sequence(_insert(seq, inserts), signs)
    if m.kind == "R3":
        if m not in _r3_sites(d):
            raise InapplicableMove(f"{m}: no third-move triangle at {m.site}")
        for p in m.site:
            q = (p + 1) % size
            seq[p], seq[q] = seq[q], seq[p]
        return GaussDiagram.from_sequence(seq, signs)
    raise InapplicableMove(f"unknown move kind {m.kind!r}")


def _check_gaps(d: GaussDiagram, m: Move, *gaps: int) -> None:
    limit = max(1, len(d.endpoints))
    for g in gaps:
        if not 0 <= g < limit:
            raise InapplicableMove(f"{m}: gap {g} out of range")


def replay(d: GaussDiagram, moves) -> GaussDiagram:
    for m in moves:
        d = apply_move(d, m)
    return d


# --- simplifier ---------------------------------------------------------------


def _greedy(d: GaussDiagram, budget: int, log: list[Move]) -> tuple[GaussDiagram, int]:
    while budget > 0:
        options = [(apply_move(d, m).code(), m) for m in removal_moves(d)]
        if not options:
            break
        _, m = min(options)
        d = apply_move(d, m)
        log.append(m)
        budget -= 1
    return d, budget


def _detour_moves(d: GaussDiagram) -> list[Move]:
    return [m for m in enumerate_moves(d) if m.kind in ("R3", "R1_add", "R2_add")]


def simplify_with_log(
    d: GaussDiagram, budget: int, max_nodes: int = 20000
) -> tuple[GaussDiagram, list[Move]]:
    """Reduce chord count by greedy removals plus bounded BFS detours.

    Every applied move (detours included) is charged to ``budget``.  Returns
    the final diagram and the replayable move log.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    log: list[Move] = []
    d, budget = _greedy(d, budget, log)
    while budget > 1 and d.n > 0:
        found = _bfs_reduction(d, budget, max_nodes)
        if found is None:
            break
        for m in found:
            d = apply_move(d, m)
            log.append(m)
        budget -= len(found)
        d, budget = _greedy(d, budget, log)
    return d, log


def _bfs_reduction(d: GaussDiagram, budget: int, max_nodes: int):
    """Shortest detour (then one removal) that lowers the chord count."""
    start_n = d.n
    frontier = deque([(d, [])])
    seen = {d}
    nodes = 0
    while frontier:
        cur, path = frontier.popleft()
        if len(path) + 1 > budget:
            continue
        removals = sorted((apply_move(cur, m).code(), m) for m in removal_moves(cur))
        for code, m in removals:
            nxt = apply_move(cur, m)
            if nxt.n < start_n:
                return path + [m]
        # detours never grow beyond two extra chords
        candidates = []
        for m in _detour_moves(cur) + [m for _, m in removals]:
            nxt = apply_move(cur, m)
            if nxt.n > start_n + 2 or nxt in seen:
                continue
            candidates.append((nxt.code(), m, nxt))
        for _, m, nxt in sorted(candidates):
            seen.add(nxt)
            nodes += 1
            if nodes > max_nodes:
                return None
            frontier.append((nxt, path + [m]))
    return None


def simplify(d: GaussDiagram, budget: int) -> GaussDiagram:
    return simplify_with_log(d, budget)[0]

