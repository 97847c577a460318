"""Free-group words, presentations, and the presentation text grammar.

Grammar (whitespace-insensitive)::

    presentation := "gens:" name+ ";" "rels:" [relator ("," relator)*]
    relator      := word | word "=" word          # l = r is stored as l^-1 r
    word         := atom+
    atom         := base ["^" exponent]
    exponent     := ["-"] int | base ["^" exponent]   # right-associative
    base         := name | "1" | "(" word ")" | "[" word "," word "]"

``u^v`` is the conjugate ``v^-1 u v`` and ``[u,v]`` is ``u^-1 v^-1 u v``.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadSyntax, UndeclaredGenerator

Letter = tuple[str, int]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def reduce(letters: Iterable[Letter]) -> "Word":
    """Freely reduce a raw letter sequence (exponents must be +1/-1)."""
    stack: list[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +-1, got {e}")
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return Word._from_reduced(tuple(stack))


@dataclass(frozen=True)
class Word:
    """A freely reduced word. Construct with :func:`reduce` or :meth:`gen`."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for k in range(len(self.letters) - 1):
            (g, e), (h, f) = self.letters[k], self.letters[k + 1]
            if g == h and e == -f:
                raise ValueError("Word letters must be freely reduced; use reduce()")

    @classmethod
    def _from_reduced(cls, letters):
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "Word":
        return cls._from_reduced(((name, 1 if exp > 0 else -1),) * abs(exp))

    @classmethod
    def identity(cls) -> "Word":
        return cls._from_reduced(())

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return reduce(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word._from_reduced(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        out = Word.identity()
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugate(self, v: "Word") -> "Word":
        """``self^v = v^-1 self v``."""
        return reduce(v.inverse().letters + self.letters + v.letters)

    def exponent_sum(self, g: str) -> int:
        return sum(e for h, e in self.letters if h == g)

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def __str__(self):
        return format_word(self)


def commutator(u: Word, v: Word) -> Word:
    return reduce(u.inverse().letters + v.inverse().letters + u.letters + v.letters)


def exponent_sum(w: Word, g: str) -> int:
    return w.exponent_sum(g)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    parts = []
    k = 0
    letters = w.letters
    while k < len(letters):
        g, e = letters[k]
        run = 1
        while k + run < len(letters) and letters[k + run] == (g, e):
            run += 1
        power = run * e
        parts.append(g if power == 1 else f"{g}^{power}")
        k += run
    return " ".join(parts)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        for name in self.generators:
            if not NAME_RE.fullmatch(name):
                raise ValueError(f"bad generator name {name!r}")
        declared = set(self.generators)
        for r in self.relators:
            missing = r.generators() - declared
            if missing:
                raise UndeclaredGenerator(f"undeclared generator(s) {sorted(missing)}")

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    def __str__(self):
        return format_presentation(self)


def format_presentation(p: Presentation) -> str:
    rels = ", ".join(format_word(r) for r in p.relators)
    head = f"gens: {' '.join(p.generators)} ; rels:"
    return f"{head} {rels}" if rels else head


# --- parser -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<kw>gens:|rels:)|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<int>-?\d+)|(?P<sym>[()\[\]^,=;]))"
)


_WS = re.compile(r"\s*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _WS.match(text, pos)
        pos = m.end()
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise BadSyntax(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, generators: Sequence[str] | None):
        self.tokens = _tokenize(text)
        self.k = 0
        self.generators = None if generators is None else set(generators)

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.k]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value or kind
            raise BadSyntax(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.k += 1
        return tok

    def at(self, kind, value=None):
        tok = self.tokens[self.k]
        return tok[0] == kind and (value is None or tok[1] == value)

    def starts_base(self):
        tok = self.peek()
        return tok[0] == "name" or (tok[0] == "int" and tok[1] == "1") or tok[1] in ("(", "[")

    def word(self) -> Word:
        if not self.starts_base():
            tok = self.peek()
            raise BadSyntax(f"expected a word, found {tok[1] or 'end of input'!r}", tok[2])
        w = Word.identity()
        while self.starts_base():
            w = w * self.atom()
        return w

    def atom(self) -> Word:
        b = self.base()
        if self.at("sym", "^"):
            self.take()
            b = self.exponent(b)
        return b

    def exponent(self, b: Word) -> Word:
        if self.at("int"):
            return b ** int(self.take()[1])
        v = self.base()
        if self.at("sym", "^"):
            self.take()
            v = self.exponent(v)
        return b.conjugate(v)

    def base(self) -> Word:
        kind, value, pos = self.peek()
        if kind == "name":
            self.take()
            if self.generators is not None and value not in self.generators:
                raise UndeclaredGenerator(f"undeclared generator {value!r} at position {pos}")
            return Word.gen(value)
        if kind == "int" and value == "1":
            self.take()
            return Word.identity()
        if value == "(":
            self.take()
            w = self.word()
            self.take("sym", ")")
            return w
        if value == "[":
            self.take()
            u = self.word()
            self.take("sym", ",")
            v = self.word()
            self.take("sym", "]")
            return commutator(u, v)
        raise BadSyntax(f"unexpected token {value or 'end of input'!r}", pos)

    def relator(self) -> Word:
        lhs = self.word()
        if self.at("sym", "="):
            self.take()
            rhs = self.word()
            return lhs.inverse() * rhs
        return lhs

    def presentation(self) -> Presentation:
        self.take("kw", "gens:")
        gens = []
        while self.at("name"):
            gens.append(self.take()[1])
        if not gens:
            raise BadSyntax("at least one generator required", self.peek()[2])
        if len(set(gens)) != len(gens):
            raise BadSyntax("duplicate generator name", self.peek()[2])
        self.take("sym", ";")
        self.take("kw", "rels:")
        self.generators = set(gens)
        rels = []
        if not self.at("end"):
            rels.append(self.relator())
            while self.at("sym", ","):
                self.take()
                rels.append(self.relator())
        self.take("end")
        return Presentation(tuple(gens), tuple(rels))


def _strip_comments(text: str) -> str:
    return "\n".join("" if line.lstrip().startswith("#") else line for line in text.splitlines())


def parse_presentation(text: str) -> Presentation:
    return _Parser(_strip_comments(text), None).presentation()


def parse_word(text: str, generators: Sequence[str] | None = None) -> Word:
    """Parse a single word; names are checked against ``generators`` if given."""
    p = _Parser(text, generators)
    if p.at("end"):
        return Word.identity()
    w = p.word()
    p.take("end")
    return w
