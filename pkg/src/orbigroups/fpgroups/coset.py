"""Todd-Coxeter coset enumeration, Felsch strategy.

The undefined entry of least (coset, column) is always filled next and
every new table entry is followed by a full scan of the relator cycles
passing through it, so the enumeration is deterministic.  Coincidences are
processed with a union-find over coset numbers.  The finished table is
renumbered in breadth-first order from the subgroup coset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation
from .words import Word, cyclic_reduce, free_reduce, inverse

COMPLETE = "complete"
EXCEEDED = "exceeded"

# hard cap on total definitions, as a multiple of the live-coset budget
_DEFINITION_FACTOR = 64


class EnumerationExceeded(RuntimeError):
    """The coset budget was exhausted before the table closed."""


def _col(g: int) -> int:
    return 2 * (g - 1) if g > 0 else 2 * (-g - 1) + 1


@dataclass(frozen=True)
class CosetTable:
    """Action of the generators on the cosets of a subgroup.

    ``rows[i][_col(g)]`` is the coset ``i . g``; row 0 is the subgroup.
    Incomplete (exceeded) tables carry no rows.
    """

    ngens: int
    rows: tuple[tuple[int, ...], ...]
    status: str
    subgroup: tuple[Word, ...] = ()
    defined: int = 0

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    @property
    def index(self) -> int:
        if not self.complete:
            raise EnumerationExceeded("coset enumeration did not complete")
        return len(self.rows)

    def act(self, coset: int, w: Sequence[int]) -> int:
        for g in w:
            coset = self.rows[coset][_col(g)]
        return coset

    def permutation(self, g: int) -> tuple[int, ...]:
        """Image of every coset under generator ``g`` (signed, 1-based)."""
        c = _col(g)
        return tuple(row[c] for row in self.rows)

    def to_json(self) -> dict:
        out = {"status": self.status, "defined": self.defined}
        if self.complete:
            out["index"] = len(self.rows)
            out["table"] = [list(r) for r in self.rows]
        return out


class _Enumerator:
    def __init__(self, P: Presentation, max_cosets: int):
        self.n = P.generator_count
        self.letters = [g for i in range(1, self.n + 1) for g in (i, -i)]
        self.max_cosets = max_cosets
        self.max_defined = _DEFINITION_FACTOR * max_cosets + 64
        self.table: list[list[int | None]] = [[None] * (2 * self.n)]
        self.parent = [0]
        self.live = 1
        self.defined = 1
        self.deductions: list[tuple[int, int]] = []
        cycles: dict[int, list[Word]] = {g: [] for g in self.letters}
        seen = set()
        for r in P.relators:
            r = cyclic_reduce(r)
            for w in (r, inverse(r)):
                for k in range(len(w)):
                    rot = w[k:] + w[:k]
                    if rot and rot not in seen:
                        seen.add(rot)
                        cycles[rot[0]].append(rot)
        self.cycles = cycles

    # union-find
    def rep(self, k: int) -> int:
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def get(self, a: int, g: int):
        return self.table[a][_col(g)]

    def set_edge(self, a: int, g: int, b: int):
        self.table[a][_col(g)] = b
        self.table[b][_col(-g)] = a
        self.deductions.append((a, g))

    def define(self, a: int, g: int) -> int:
        if self.live >= self.max_cosets or self.defined >= self.max_defined:
            raise EnumerationExceeded
        b = len(self.table)
        self.table.append([None] * (2 * self.n))
        self.parent.append(b)
        self.live += 1
        self.defined += 1
        self.set_edge(a, g, b)
        return b

    def scan(self, a: int, w: Word, fill: bool = False):
        r = len(w)
        f, i = a, 0
        b, j = a, r - 1
        while True:
            while i <= j and self.get(f, w[i]) is not None:
                f = self.get(f, w[i])
                i += 1
            if i > j:
                if f != a:
                    self.coincidence(f, a)
                return
            while j >= i and self.get(b, -w[j]) is not None:
                b = self.get(b, -w[j])
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self.set_edge(f, w[i], b)
                return
            if not fill:
                return
            self.define(f, w[i])

    def merge(self, k: int, l: int, queue: list[int]):
        k, l = self.rep(k), self.rep(l)
        if k != l:
            lo, hi = min(k, l), max(k, l)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a: int, b: int):
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            c = queue[i]
            i += 1
            for g in self.letters:
                d = self.get(c, g)
                if d is None:
                    continue
                self.table[d][_col(-g)] = None
                mu, nu = self.rep(c), self.rep(d)
                if self.get(mu, g) is not None:
                    self.merge(nu, self.get(mu, g), queue)
                elif self.get(nu, -g) is not None:
                    self.merge(mu, self.get(nu, -g), queue)
                else:
                    self.set_edge(mu, g, nu)

    def process_deductions(self):
        while self.deductions:
            a, g = self.deductions.pop()
            if self.parent[a] != a:
                continue
            for w in self.cycles[g]:
                self.scan(a, w)
                if self.parent[a] != a:
                    break
            b = self.get(a, g) if self.parent[a] == a else None
            if b is None or self.parent[b] != b:
                continue
            for w in self.cycles[-g]:
                self.scan(b, w)
                if self.parent[b] != b:
                    break

    def run(self, subgroup: Sequence[Word]):
        for w in subgroup:
            if w:
                self.scan(0, w, fill=True)
                self.process_deductions()
        a = 0
        while a < len(self.table):
            for g in self.letters:
                if self.parent[a] != a:
                    break
                if self.table[a][_col(g)] is None:
                    self.define(a, g)
                    self.process_deductions()
            a += 1

    def standardized(self) -> tuple[tuple[int, ...], ...]:
        order = [0]
        number = {0: 0}
        k = 0
        while k < len(order):
            a = order[k]
            k += 1
            for c in range(2 * self.n):
                b = self.rep(self.table[a][c])
                if b not in number:
                    number[b] = len(order)
                    order.append(b)
        return tuple(tuple(number[self.rep(self.table[a][c])] for c in range(2 * self.n))
                     for a in order)


def coset_enumerate(P: Presentation, subgroup_gens: Sequence[Sequence[int]] = (),
                    max_cosets: int = 100_000) -> CosetTable:
    """Enumerate the cosets of ``<subgroup_gens>`` in the group ``P``.

    ``max_cosets`` bounds the number of simultaneously live cosets.  When
    it is hit the returned table has status ``"exceeded"``; that is a
    normal outcome (the index may be infinite), not an error.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    subgroup = [free_reduce(w) for w in subgroup_gens]
    for w in subgroup:
        for g in w:
            if abs(g) > P.generator_count:
                raise ValueError(f"subgroup generator uses index {g} out of range")
    e = _Enumerator(P, max_cosets)
    try:
        e.run(subgroup)
    except EnumerationExceeded:
        return CosetTable(P.generator_count, (), EXCEEDED, tuple(subgroup), e.defined)
    return CosetTable(P.generator_count, e.standardized(), COMPLETE, tuple(subgroup), e.defined)


def group_order(P: Presentation, max_cosets: int = 100_000) -> int | None:
    """Order of a finite group, or ``None`` when the budget runs out."""
    t = coset_enumerate(P, (), max_cosets)
    return t.index if t.complete else None
