"""Finite groups given by multiplication tables, plus a small catalogue."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from ..errors import UnknownGroup


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int = field(init=False)
    inverses: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n = len(self.names)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("table must be square and match the element names")
        if len(set(self.names)) != n:
            raise ValueError("element names must be distinct")
        ident = next((e for e in range(n) if all(self.table[e][x] == x for x in range(n))), None)
        if ident is None or any(self.table[x][ident] != x for x in range(n)):
            raise ValueError("table has no two-sided identity")
        inv = []
        for x in range(n):
            y = next((y for y in range(n) if self.table[x][y] == ident), None)
            if y is None or self.table[y][x] != ident:
                raise ValueError(f"element {self.names[x]} has no inverse")
            inv.append(y)
        if n <= 24:
            t = self.table
            for a in range(n):
                for b in range(n):
                    ab = t[a][b]
                    for c in range(n):
                        if t[ab][c] != t[a][t[b][c]]:
                            raise ValueError("table is not associative")
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inverses", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def element(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownGroup(f"{self.name} has no element named {name!r}") from None

    def conj(self, a: int, v: int) -> int:
        """``a^v = v^-1 a v``."""
        return self.mul(self.mul(self.inv(v), a), v)

    @cached_property
    def conj_table(self) -> tuple[tuple[int, ...], ...]:
        """``conj_table[a][v] == conj(a, v)``."""
        n = self.order
        return tuple(tuple(self.conj(a, v) for v in range(n)) for a in range(n))

    def commutator(self, a: int, b: int) -> int:
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        out = {self.identity}
        frontier = [self.identity]
        gens = list(set(gens))
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return frozenset(out)

    def normal_closure(self, gens: Iterable[int]) -> frozenset[int]:
        conjugates = {self.conj(g, v) for g in gens for v in range(self.order)}
        return self.generated(conjugates)

    def is_weight_one(self, g: int) -> bool:
        return len(self.normal_closure([g])) == self.order

    def commutator_subgroup(self) -> frozenset[int]:
        n = self.order
        return self.generated({self.commutator(a, b) for a in range(n) for b in range(n)})

    def centralizer(self, g: int) -> frozenset[int]:
        return frozenset(x for x in range(self.order) if self.mul(x, g) == self.mul(g, x))

    def center(self) -> frozenset[int]:
        return frozenset.intersection(*(self.centralizer(g) for g in range(self.order)))

    def conjugacy_class(self, g: int) -> frozenset[int]:
        return frozenset(self.conj(g, v) for v in range(self.order))

    def conjugacy_classes(self) -> list[frozenset[int]]:
        return list(self._classes)

    @cached_property
    def _classes(self) -> tuple[frozenset[int], ...]:
        seen: set[int] = set()
        out = []
        for g in range(self.order):
            if g not in seen:
                c = self.conjugacy_class(g)
                seen |= c
                out.append(c)
        return tuple(out)

    def is_subgroup(self, s: Iterable[int]) -> bool:
        s = set(s)
        return (
            self.identity in s
            and all(self.inv(a) in s for a in s)
            and all(self.mul(a, b) in s for a in s for b in s)
        )

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def format_set(self, elements: Iterable[int]) -> str:
        return "{" + ", ".join(self.names[e] for e in sorted(elements)) + "}"

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def from_closure(
    name: str,
    generators: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    label: Callable[[Hashable], str] = str,
) -> FiniteGroup:
    """Close ``generators`` under ``mul`` and tabulate the result."""
    elements = [identity]
    index = {identity: 0}
    k = 0
    while k < len(elements):
        for g in generators:
            y = mul(elements[k], g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
        k += 1
    # sort for stable indexing: identity first, then by label
    rest = sorted(elements[1:], key=lambda e: (len(label(e)), label(e)))
    elements = [identity] + rest
    index = {e: k for k, e in enumerate(elements)}
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    return FiniteGroup(name, tuple(label(e) for e in elements), table)


def from_table(name: str, table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroup:
    n = len(table)
    names = tuple(names) if names is not None else tuple(str(k) for k in range(n))
    return FiniteGroup(name, names, tuple(tuple(int(x) for x in r) for r in table))


def load_table_file(path: str) -> FiniteGroup:
    """First line: order ``n``; then ``n`` rows of ``n`` element indices."""
    with open(path) as fh:
        lines = [ln.split() for ln in fh if ln.strip()]
    n = int(lines[0][0])
    rows = lines[1:1 + n]
    if len(rows) != n:
        raise ValueError(f"expected {n} table rows, found {len(rows)}")
    return from_table(path, [[int(x) for x in r] for r in rows])


# --- constructors ----------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    return from_closure(f"Z{n}", [1 % n], lambda a, b: (a + b) % n, 0)


def _perm_mul(p, q):
    # apply p first, then q (right action, matching u^v = v^-1 u v)
    return tuple(q[p[i]] for i in range(len(p)))


def cycle_notation(p: Sequence[int]) -> str:
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        out.append("(" + "".join(str(c + 1) for c in cyc) + ")")
    return "".join(out) or "e"


def _perm_from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> tuple[int, ...]:
    p = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a - 1] = b - 1
    return tuple(p)


def permutation_group(name: str, degree: int, gens: Sequence[Sequence[Sequence[int]]]) -> FiniteGroup:
    perms = [_perm_from_cycles(degree, g) for g in gens]
    return from_closure(name, perms, _perm_mul, tuple(range(degree)), cycle_notation)


def symmetric(k: int) -> FiniteGroup:
    gens = [[(1, 2)], [tuple(range(1, k + 1))]] if k > 1 else []
    return permutation_group(f"S{k}", k, gens)


def alternating4() -> FiniteGroup:
    return permutation_group("A4", 4, [[(1, 2, 3)], [(1, 2), (3, 4)]])


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of a regular ``n``-gon, order ``2n`` (``n >= 3``)."""
    if n < 3:
        raise UnknownGroup("dihedral groups here need n >= 3; use Z2 or Z2xZ2")
    refl = [(i, n + 2 - i) for i in range(2, n + 1) if i < n + 2 - i]
    return permutation_group(f"D{n}", n, [[tuple(range(1, n + 1))], refl])


_QUAT = {  # unit products: (x, y) -> (sign, unit)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion() -> FiniteGroup:
    def mul(a, b):
        s, u = _QUAT[a[1], b[1]]
        return (a[0] * b[0] * s, u)

    def label(e):
        return ("-" if e[0] < 0 else "") + e[1]

    return from_closure("Q8", [(1, "i"), (1, "j")], mul, (1, "1"), label)


def product(*factors: int) -> FiniteGroup:
    """Direct product of cyclic groups, elements named ``(a,b,...)``."""
    ns = tuple(factors)
    gens = [tuple(int(i == k) for i in range(len(ns))) for k in range(len(ns))]
    return from_closure(
        "x".join(f"Z{n}" for n in ns),
        gens,
        lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, ns)),
        (0,) * len(ns),
        lambda e: "(" + ",".join(map(str, e)) + ")",
    )


def dicyclic3() -> FiniteGroup:
    """``Z3 x| Z4`` with the generator of Z4 inverting Z3 (order 12)."""

    def mul(a, b):
        return ((a[0] + (-1) ** a[1] * b[0]) % 3, (a[1] + b[1]) % 4)

    return from_closure("Dic3", [(1, 0), (0, 1)], mul, (0, 0), lambda e: f"({e[0]},{e[1]})")


def _catalogue() -> dict[str, Callable[[], FiniteGroup]]:
    out: dict[str, Callable[[], FiniteGroup]] = {}
    for n in range(1, 13):
        out[f"Z{n}"] = lambda n=n: cyclic(n)
    for n in range(3, 7):
        out[f"D{n}"] = lambda n=n: dihedral(n)
    out.update(
        {
            "S3": lambda: symmetric(3),
            "S4": lambda: symmetric(4),
            "A4": alternating4,
            "Q8": quaternion,
            "Dic3": dicyclic3,
            "Z2xZ2": lambda: product(2, 2),
            "Z4xZ2": lambda: product(4, 2),
            "Z2xZ2xZ2": lambda: product(2, 2, 2),
            "Z3xZ3": lambda: product(3, 3),
            "Z2xZ6": lambda: product(2, 6),
        }
    )
    return out


CATALOGUE = _catalogue()


def group_by_name(name: str) -> FiniteGroup:
    try:
        return CATALOGUE[name]()
    except KeyError:
        raise UnknownGroup(f"unknown group {name!r}; known: {', '.join(sorted(CATALOGUE))}") from None


# One representative per isomorphism type.
_SMALL = {
    1: ["Z1"], 2: ["Z2"], 3: ["Z3"], 4: ["Z4", "Z2xZ2"], 5: ["Z5"], 6: ["Z6", "S3"], 7: ["Z7"],
    8: ["Z8", "Z4xZ2", "Z2xZ2xZ2", "D4", "Q8"], 9: ["Z9", "Z3xZ3"], 10: ["Z10", "D5"],
    11: ["Z11"], 12: ["Z12", "Z2xZ6", "A4", "D6", "Dic3"],
}


def groups_up_to(order: int) -> list[FiniteGroup]:
    """Every group of order ``<= order`` up to isomorphism (``order <= 12``)."""
    if order > 12:
        raise UnknownGroup("the small-group list stops at order 12")
    return [group_by_name(name) for k in range(1, order + 1) for name in _SMALL[k]]
