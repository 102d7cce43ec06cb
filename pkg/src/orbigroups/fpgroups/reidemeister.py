"""Reidemeister-Schreier rewriting from a complete coset table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coset import CosetTable, coset_enumerate, EnumerationExceeded
from .presentation import Presentation
from .snf import AbelianInvariants, abelianization
from .words import Word, free_reduce

# verify_subgroup_claim asks for this much headroom over the claimed index
SAFETY_FACTOR = 8


@dataclass(frozen=True)
class SubgroupPresentation:
    presentation: Presentation
    # (coset, positive generator) -> Schreier generator index (1-based)
    schreier: dict[tuple[int, int], int]
    table: CosetTable

    def rewrite(self, w: Sequence[int], coset: int = 0) -> Word:
        """Rewrite ``t_coset * w * t_end^-1`` in the Schreier generators."""
        out = []
        c = coset
        for g in w:
            if g > 0:
                s = self.schreier.get((c, g))
                if s:
                    out.append(s)
                c = self.table.act(c, (g,))
            else:
                c = self.table.act(c, (g,))
                s = self.schreier.get((c, -g))
                if s:
                    out.append(-s)
        return free_reduce(out)


def schreier_presentation(P: Presentation, table: CosetTable) -> SubgroupPresentation:
    """Presentation of the subgroup whose coset table is ``table``.

    The transversal is the breadth-first spanning tree of the table; every
    non-tree edge ``(coset, generator)`` becomes a Schreier generator and
    every relator conjugated to every coset becomes a relator.
    """
    if not table.complete:
        raise EnumerationExceeded("Reidemeister-Schreier needs a complete coset table")
    n = P.generator_count
    tree: set[tuple[int, int]] = set()
    seen = {0}
    for a in range(table.index):
        for g in (x for i in range(1, n + 1) for x in (i, -i)):
            b = table.act(a, (g,))
            if b not in seen:
                seen.add(b)
                # store the tree edge as a positive edge
                tree.add((a, g) if g > 0 else (b, -g))
    schreier: dict[tuple[int, int], int] = {}
    for a in range(table.index):
        for g in range(1, n + 1):
            if (a, g) not in tree:
                schreier[(a, g)] = len(schreier) + 1
    # a spanning tree has index-1 edges, so there are index*(n-1)+1 >= 1 generators
    names = tuple(f"s{k}" for k in range(1, len(schreier) + 1))
    sp = SubgroupPresentation(Presentation(names, ()), schreier, table)
    rels = [sp.rewrite(r, a) for a in range(table.index) for r in P.relators]
    return SubgroupPresentation(Presentation(names, tuple(rels)), schreier, table)


def subgroup_abelianization(P: Presentation, gens: Sequence[Sequence[int]],
                            max_cosets: int = 100_000) -> tuple[int, AbelianInvariants]:
    """Index of ``<gens>`` and the abelian invariants of the subgroup."""
    t = coset_enumerate(P, gens, max_cosets)
    if not t.complete:
        raise EnumerationExceeded(f"coset enumeration exceeded {max_cosets} cosets")
    return t.index, abelianization(schreier_presentation(P, t).presentation)


def verify_subgroup_claim(P: Presentation, gens: Sequence[Sequence[int]], claimed_index: int,
                          claimed_abelian_rank: int | None = None,
                          max_cosets: int = 100_000) -> bool:
    """Check that ``<gens>`` has index ``claimed_index`` in ``P``.

    With ``claimed_abelian_rank`` the subgroup's abelianization must also
    need exactly that many generators.
    """
    if claimed_index < 1:
        raise ValueError("claimed_index must be positive")
    if claimed_index * SAFETY_FACTOR > max_cosets:
        raise EnumerationExceeded("claimed index too large for the coset budget")
    t = coset_enumerate(P, gens, max_cosets)
    if not t.complete:
        raise EnumerationExceeded(f"coset enumeration exceeded {max_cosets} cosets")
    if t.index != claimed_index:
        return False
    if claimed_abelian_rank is None:
        return True
    inv = abelianization(schreier_presentation(P, t).presentation)
    return inv.rank == claimed_abelian_rank
