"""Words in a free group.

A word is a tuple of nonzero integers: ``+i`` is the i-th generator
(1-based) and ``-i`` its inverse.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def free_reduce(w: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for g in w:
        if g == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse(w: Sequence[int]) -> Word:
    return tuple(-g for g in reversed(w))


def power(w: Sequence[int], n: int) -> Word:
    if n < 0:
        return free_reduce(inverse(w) * (-n))
    return free_reduce(tuple(w) * n)


def mul(*ws: Sequence[int]) -> Word:
    out: list[int] = []
    for w in ws:
        out.extend(w)
    return free_reduce(out)


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    return mul(u, v, inverse(u), inverse(v))


def exponent_sums(w: Sequence[int], ngens: int) -> list[int]:
    row = [0] * ngens
    for g in w:
        row[abs(g) - 1] += 1 if g > 0 else -1
    return row
