"""Smith normal form over the integers and abelian invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .presentation import Presentation
from .words import exponent_sums


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k``."""

    torsion: tuple[int, ...] = field(default=())
    free_rank: int = 0

    def __post_init__(self):
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def rank(self) -> int:
        return len(self.torsion) + self.free_rank

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "1"


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, divisibility-sorted.

    Pivots are the nonzero entries of least absolute value, ties broken by
    row-major position.  Works on a copy with Python integers.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (pivot is None or abs(v) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the remaining block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # a smaller remainder exists in the pivot row/column: move it to the pivot
            best = (t, t)
            for i in range(t + 1, rows):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t + 1, cols):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            bi, bj = best
            a[t], a[bi] = a[bi], a[t]
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariants_from_matrix(matrix: Sequence[Sequence[int]], ncols: int) -> AbelianInvariants:
    """Invariants of ``Z^ncols`` modulo the row span of ``matrix``."""
    diag = smith_diagonal(matrix) if matrix else []
    # the diagonal is already a divisibility chain; sort defensively
    diag.sort()
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(torsion, ncols - len(diag))


def relation_matrix(P: Presentation) -> list[list[int]]:
    return [exponent_sums(r, P.generator_count) for r in P.relators]


def abelianization(P: Presentation) -> AbelianInvariants:
    return invariants_from_matrix(relation_matrix(P), P.generator_count)


def order_of_torsion(inv: AbelianInvariants) -> int:
    n = 1
    for d in inv.torsion:
        n *= d
    return n


__all__ = ["AbelianInvariants", "abelianization", "invariants_from_matrix",
           "relation_matrix", "smith_diagonal", "order_of_torsion"]
