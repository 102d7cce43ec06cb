"""Permutation groups small enough to enumerate element by element.

Permutations are tuples ``p`` with ``p[i]`` the image of point ``i``
(points are 0-based).  Products act on the right: ``mul(p, q)`` applies
``p`` first, matching the right action of coset tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coset import CosetTable, EnumerationExceeded

Perm = tuple[int, ...]

DEFAULT_ORDER_BOUND = 10**6


class OrderBoundExceeded(RuntimeError):
    pass


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


def comm(p: Perm, q: Perm) -> Perm:
    """``p q p^-1 q^-1`` in the right-action convention."""
    return mul(mul(mul(p, q), inv(p)), inv(q))


def from_cycles(n: int, *cycles: Sequence[int]) -> Perm:
    out = list(range(n))
    for c in cycles:
        for a, b in zip(c, list(c[1:]) + [c[0]]):
            out[a] = b
    return tuple(out)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[Perm, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise ValueError("generator is not a permutation of the points")


def closure(gens: Iterable[Perm], degree: int,
            bound: int = DEFAULT_ORDER_BOUND, start: set[Perm] | None = None) -> set[Perm]:
    """All products of ``gens``; ``start`` may hold an already-closed subgroup."""
    gens = [g for g in gens]
    elements = set(start) if start else {identity(degree)}
    queue = list(elements)
    while queue:
        x = queue.pop()
        for g in gens:
            y = mul(x, g)
            if y not in elements:
                elements.add(y)
                if len(elements) > bound:
                    raise OrderBoundExceeded(f"group order exceeds {bound}")
                queue.append(y)
    return elements


class _Subgroup:
    """A subgroup held as generators plus its full element set."""

    def __init__(self, gens: list[Perm], degree: int, bound: int):
        self.degree = degree
        self.bound = bound
        self.gens: list[Perm] = []
        self.elements = {identity(degree)}
        for g in gens:
            self.add(g)

    def add(self, g: Perm) -> bool:
        if g in self.elements:
            return False
        self.gens.append(g)
        self.elements = closure(self.gens, self.degree, self.bound, start=self.elements)
        return True

    @property
    def order(self) -> int:
        return len(self.elements)


def normal_closure(seeds: Iterable[Perm], conjugators: Sequence[Perm], degree: int,
                   bound: int = DEFAULT_ORDER_BOUND) -> _Subgroup:
    """Smallest subgroup containing ``seeds`` and stable under ``conjugators``."""
    N = _Subgroup([], degree, bound)
    todo = list(seeds)
    while todo:
        x = todo.pop()
        if N.add(x):
            for h in conjugators:
                todo.append(mul(mul(inv(h), x), h))
    # every generator of N had its conjugates processed, so N is normal
    return N


def commutator_subgroup(A: Sequence[Perm], B: Sequence[Perm], ambient: Sequence[Perm],
                        degree: int, bound: int = DEFAULT_ORDER_BOUND) -> _Subgroup:
    """``[<A>, <B>]`` for ``<A>``, ``<B>`` normal in ``<ambient>``."""
    seeds = [comm(a, b) for a in A for b in B]
    return normal_closure(seeds, list(ambient), degree, bound)


@dataclass(frozen=True)
class GroupAnalysis:
    order: int
    derived_series: tuple[int, ...]
    is_abelian: bool
    is_metabelian: bool
    nilpotency_class: int | None

    @property
    def is_perfect(self) -> bool:
        return len(self.derived_series) >= 2 and self.derived_series[1] == self.order

    def to_json(self) -> dict:
        return {"order": self.order, "derived_series": list(self.derived_series),
                "is_abelian": self.is_abelian, "is_metabelian": self.is_metabelian,
                "nilpotency_class": self.nilpotency_class}


def derived_series(G: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> list[_Subgroup]:
    """``G >= G' >= G'' >= ...`` until it reaches 1 or stops shrinking."""
    H = _Subgroup(list(G.generators), G.degree, bound)
    series = [H]
    while H.order > 1:
        D = commutator_subgroup(H.gens, H.gens, H.gens, G.degree, bound)
        series.append(D)
        if D.order == H.order:
            break
        H = D
    return series


def analyze(G: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> GroupAnalysis:
    series = derived_series(G, bound)
    order = series[0].order
    orders = tuple(s.order for s in series)
    abelian = order == 1 or orders[1] == 1
    metabelian = abelian or (len(orders) > 2 and orders[2] == 1)
    # lower central series
    gens = series[0].gens
    gamma = series[0]
    cls: int | None = 0
    while gamma.order > 1:
        nxt = commutator_subgroup(gamma.gens, gens, gens, G.degree, bound)
        if nxt.order == gamma.order:
            cls = None
            break
        cls += 1
        gamma = nxt
    return GroupAnalysis(order, orders, abelian, metabelian, cls)


def regular_representation(t: CosetTable) -> PermGroup:
    """Permutation action of the generators on the cosets of the trivial subgroup."""
    if not t.complete:
        raise EnumerationExceeded("regular representation needs a complete table")
    if any(t.subgroup):
        raise ValueError("table was not enumerated over the trivial subgroup")
    return PermGroup(t.index, tuple(t.permutation(g) for g in range(1, t.ngens + 1)))
