"""Finite presentations and their text/JSON formats.

Text grammar (whitespace ignored)::

    presentation := "<" names ("|" relations?)? ">"
    names        := letter ("," letter)*
    relations    := relation ("," relation)*
    relation     := word ("=" word)?
    word         := factor*
    factor       := atom ("^" ["-"] digits)?
    atom         := letter | LETTER | "(" word ")" | "[" word "," word "]"

Generators are single lowercase letters; an uppercase letter is the
inverse of its lowercase generator.  ``[u,v]`` is ``u v u^-1 v^-1`` and a
relation ``u = v`` becomes the relator ``u v^-1``.

JSON mirror::

    {"generators": ["a", "b"], "relators": [[1, 2, -1, -2], "a^2"]}

where each relator is either a signed 1-based index list or a word string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .words import Word, commutator, free_reduce, inverse, mul, power


class PresentationSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        if n < 1:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generators)) != n:
            raise ValueError("duplicate generator names")
        rels = []
        for r in self.relators:
            for g in r:
                if g == 0 or abs(g) > n:
                    raise ValueError(f"generator index {g} out of range 1..{n}")
            r = free_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        return _Parser(text).presentation()

    def word(self, text: str) -> Word:
        """Parse a word over this presentation's generator names."""
        p = _Parser(text, self.generators)
        w = p.word()
        p.expect_end()
        return w

    def format_word(self, w: Sequence[int]) -> str:
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.generators[abs(w[i]) - 1]
            e = (j - i) * (1 if w[i] > 0 else -1)
            parts.append(name if e == 1 else f"{name}^{e}")
            i = j
        return "".join(parts)

    def __str__(self) -> str:
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"<{','.join(self.generators)} | {rels}>"

    def to_json(self) -> dict:
        return {"generators": list(self.generators),
                "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_json(cls, data) -> "Presentation":
        if isinstance(data, str):
            data = json.loads(data)
        gens = tuple(data["generators"])
        rels = []
        for r in data.get("relators", []):
            if isinstance(r, str):
                p = _Parser(r, gens)
                rels.extend(p.relation())
                p.expect_end()
            else:
                rels.append(tuple(int(g) for g in r))
        return cls(gens, tuple(rels))


class _Parser:
    def __init__(self, text: str, generators: Sequence[str] | None = None):
        self.s = "".join(text.split())
        self.i = 0
        self.index = None if generators is None else {g: k + 1 for k, g in enumerate(generators)}

    def error(self, msg: str):
        raise PresentationSyntaxError(f"{msg} at position {self.i} in {self.s!r}")

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def expect_end(self):
        if self.i != len(self.s):
            self.error("trailing input")

    def presentation(self) -> Presentation:
        self.take("<")
        names = [self.letter()]
        while self.peek() == ",":
            self.i += 1
            names.append(self.letter())
        if any(not n.islower() for n in names):
            self.error("generator names must be lowercase letters")
        self.index = {g: k + 1 for k, g in enumerate(names)}
        if len(self.index) != len(names):
            self.error("duplicate generator")
        rels: list[Word] = []
        if self.peek() == "|":
            self.i += 1
            if self.peek() != ">":
                rels.extend(self.relation())
                while self.peek() == ",":
                    self.i += 1
                    rels.extend(self.relation())
        self.take(">")
        self.expect_end()
        return Presentation(tuple(names), tuple(rels))

    def letter(self) -> str:
        ch = self.peek()
        if not ch.isalpha():
            self.error("expected a letter")
        self.i += 1
        return ch

    def relation(self) -> list[Word]:
        lhs = self.word()
        if self.peek() == "=":
            self.i += 1
            rhs = self.word()
            return [mul(lhs, inverse(rhs))]
        return [lhs]

    def word(self) -> Word:
        out: Word = ()
        while self.peek() and (self.peek().isalpha() or self.peek() in "(["):
            out = mul(out, self.factor())
        return out

    def factor(self) -> Word:
        ch = self.peek()
        if ch == "(":
            self.i += 1
            w = self.word()
            self.take(")")
        elif ch == "[":
            self.i += 1
            u = self.word()
            self.take(",")
            v = self.word()
            self.take("]")
            w = commutator(u, v)
        else:
            name = self.letter()
            k = self.index.get(name.lower()) if self.index else None
            if k is None:
                self.error(f"unknown generator {name!r}")
            w = (k,) if name.islower() else (-k,)
        if self.peek() == "^":
            self.i += 1
            sign = 1
            if self.peek() == "-":
                sign = -1
                self.i += 1
            start = self.i
            while self.peek().isdigit():
                self.i += 1
            if start == self.i:
                self.error("expected an exponent")
            w = power(w, sign * int(self.s[start:self.i]))
        return w
