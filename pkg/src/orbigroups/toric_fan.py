"""Complete fans in the plane and the surfaces they define.

All arithmetic is over the integers or :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Sequence

Ray = tuple[int, int]

SMOOTH = "Smooth"


class FanError(ValueError):
    """Rays that do not form a complete fan, or a degenerate cone."""


def det(v: Ray, w: Ray) -> int:
    return v[0] * w[1] - v[1] * w[0]


def _half(v: Ray) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(v: Ray, w: Ray) -> int:
    hv, hw = _half(v), _half(w)
    if hv != hw:
        return hv - hw
    d = det(v, w)
    return -1 if d > 0 else (1 if d < 0 else 0)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def is_primitive(v: Ray) -> bool:
    return gcd(v[0], v[1]) == 1


@dataclass(frozen=True)
class Fan2D:
    """Rays in counterclockwise order, starting from the lexicographically smallest."""

    rays: tuple[Ray, ...]

    def __post_init__(self):
        rays = [tuple(int(c) for c in r) for r in self.rays]
        if len(rays) < 3:
            raise FanError("a complete fan needs at least three rays")
        for r in rays:
            if len(r) != 2 or not is_primitive(r):
                raise FanError(f"ray {r} is not a primitive vector")
        rays.sort(key=cmp_to_key(_angle_cmp))
        for i, v in enumerate(rays):
            w = rays[(i + 1) % len(rays)]
            if det(v, w) <= 0:
                raise FanError(f"rays {v} and {w} do not span a strictly convex cone")
        start = rays.index(min(rays))
        object.__setattr__(self, "rays", tuple(rays[start:] + rays[:start]))

    def __len__(self) -> int:
        return len(self.rays)

    def cones(self) -> list[tuple[Ray, Ray]]:
        r = self.rays
        return [(r[i], r[(i + 1) % len(r)]) for i in range(len(r))]

    @property
    def picard_rank(self) -> int:
        return len(self.rays) - 2

    def is_smooth(self) -> bool:
        return all(det(v, w) == 1 for v, w in self.cones())

    def position(self, ray: Sequence[int]) -> int:
        ray = tuple(ray)
        if ray not in self.rays:
            raise FanError(f"{ray} is not a ray of the fan")
        return self.rays.index(ray)

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.rays]}

    @classmethod
    def from_json(cls, data) -> "Fan2D":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(tuple(tuple(r) for r in data["rays"]))
        except (KeyError, TypeError) as exc:
            raise FanError(f"malformed fan: {exc}") from exc


P2 = Fan2D(((1, 0), (0, 1), (-1, -1)))


def hirzebruch(n: int) -> Fan2D:
    return Fan2D(((1, 0), (0, 1), (-1, n), (0, -1)))


def weighted_projective_plane(w0: int, w1: int, w2: int) -> Fan2D:
    """Fan of ``P(w0, w1, w2)`` for pairwise coprime weights."""
    if gcd(w0, w1) != 1 or gcd(w0, w2) != 1 or gcd(w1, w2) != 1:
        raise FanError("weights must be pairwise coprime")
    # v0 = (1, 0)-like basis with w0 v0 + w1 v1 + w2 v2 = 0
    _, s, t = _ext_gcd(w1, w2)
    # choose v1, v2 with w1 v1 + w2 v2 = -w0 (1, 0) and det(v1, v2) = w0
    v1 = (-w0 * s, w2)
    v2 = (-w0 * t, -w1)
    return Fan2D(((1, 0), v1, v2))


# cones


@dataclass(frozen=True)
class ConeReport:
    index: int
    cyclic_type: tuple[int, int]
    label: str

    def to_json(self) -> dict:
        return {"index": self.index, "cyclic_type": list(self.cyclic_type), "label": self.label}


def cone_index(v: Ray, w: Ray) -> int:
    d = det(v, w)
    if d == 0:
        raise FanError(f"degenerate cone spanned by {v} and {w}")
    return abs(d)


def _model_map(v: Ray, w: Ray) -> tuple[tuple[int, int], tuple[int, int], int, int]:
    """Rows of ``B`` in SL2(Z) sending the cone onto the model ``<(0,1), (n,-q)>``.

    The model is listed clockwise, so ``B`` sends the counterclockwise-second
    ray to ``(0, 1)`` and the other one to ``(n, -q)`` with ``0 <= q < n``.
    """
    if det(v, w) > 0:
        v, w = w, v
    n = cone_index(v, w)
    _, s, t = _ext_gcd(v[0], v[1])
    r1 = (v[1], -v[0])
    r2 = (s, t)
    y = r2[0] * w[0] + r2[1] * w[1]
    # shear r2 -> r2 + k r1 so that -y lands in [0, n)
    k = (-y % n - (-y)) // n
    r2 = (r2[0] - k * r1[0], r2[1] - k * r1[1])
    q = -(r2[0] * w[0] + r2[1] * w[1])
    return r1, r2, n, q


def cyclic_type(v: Ray, w: Ray) -> tuple[int, int]:
    """``(n, q)`` with the cone isomorphic to the model ``<(0,1), (n,-q)>``.

    A smooth cone has type ``(1, 0)``.
    """
    _, _, n, q = _model_map(v, w)
    return n, q


def cone_label(n: int, q: int) -> str:
    if n == 1:
        return SMOOTH
    if q == n - 1:
        return f"A_{n - 1}"
    if q == 1:
        return f"C_{n}"
    return f"Other({n},{q})"


def cone_report(v: Ray, w: Ray) -> ConeReport:
    n, q = cyclic_type(v, w)
    return ConeReport(n, (n, q), cone_label(n, q))


def cone_table(f: Fan2D) -> list[dict]:
    return [{"rays": [list(v), list(w)], **cone_report(v, w).to_json()} for v, w in f.cones()]


def star_subdivide(f: Fan2D, v: Sequence[int]) -> Fan2D:
    v = tuple(v)
    if not is_primitive(v):
        raise FanError(f"{v} is not primitive")
    if v in f.rays:
        raise FanError(f"{v} is already a ray of the fan")
    return Fan2D(f.rays + (v,))


# Hirzebruch-Jung


def hj_continued_fraction(n: int, q: int) -> list[int]:
    """``n/q = b1 - 1/(b2 - 1/...)`` with all ``b_i >= 2``."""
    if n == 1:
        return []
    out = []
    a, b = n, q
    while b:
        c = -(-a // b)
        out.append(c)
        a, b = b, c * b - a
    return out


def hj_resolve(v: Ray, w: Ray) -> list[tuple[Ray, int]]:
    """Rays of the minimal resolution inside the cone, listed from ``v`` towards ``w``."""
    ccw = det(v, w) > 0
    r1, r2, n, q = _model_map(v, w)
    bs = hj_continued_fraction(n, q)
    # inverse of B (rows r1, r2; det 1)
    d = r1[0] * r2[1] - r1[1] * r2[0]

    def back(u: Ray) -> Ray:
        x, y = u
        return ((r2[1] * x - r1[1] * y) // d, (-r2[0] * x + r1[0] * y) // d)

    prev, cur = (0, 1), (1, 0)
    out = []
    for b in bs:
        out.append((back(cur), -b))
        prev, cur = cur, (b * cur[0] - prev[0], b * cur[1] - prev[1])
    # the chain starts next to the ray sent to (0, 1), the ccw-second one
    return out[::-1] if ccw else out


def resolve_fan(f: Fan2D) -> Fan2D:
    rays = list(f.rays)
    for v, w in f.cones():
        rays.extend(r for r, _ in hj_resolve(v, w))
    return Fan2D(tuple(rays))


# intersection numbers


def _solve(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(M)
    A = [row[:] + [rhs[i]] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        for r in range(n):
            if r != c and A[r][c] != 0:
                factor = A[r][c] / A[c][c]
                A[r] = [a - factor * b for a, b in zip(A[r], A[c])]
    return [A[i][n] / A[i][i] for i in range(n)]


def _chain_correction(chain: list[int], end_at_start: bool) -> Fraction:
    """Contribution to ``D^2`` of a curve meeting one end of an exceptional chain.

    ``chain`` lists the self-intersections; the curve meets ``chain[0]`` if
    ``end_at_start`` else ``chain[-1]``.
    """
    s = len(chain)
    if not s:
        return Fraction(0)
    M = [[Fraction(0)] * s for _ in range(s)]
    for i, e in enumerate(chain):
        M[i][i] = Fraction(e)
        if i + 1 < s:
            M[i][i + 1] = M[i + 1][i] = Fraction(1)
    e = [Fraction(0)] * s
    e[0 if end_at_start else s - 1] = Fraction(-1)
    a = _solve(M, e)
    return a[0] if end_at_start else a[-1]


def self_intersection(f: Fan2D, i: int) -> Fraction:
    """``D_i^2`` for the invariant curve of the ``i``-th ray.

    Computed on the minimal resolution, where ``v_{i-1} + v_{i+1} = -D^2 v_i``,
    then pushed down through the exceptional chains on either side.
    """
    r = f.rays
    v = r[i % len(r)]
    left, right = r[(i - 1) % len(r)], r[(i + 1) % len(r)]
    chain_l = hj_resolve(left, v)
    chain_r = hj_resolve(v, right)
    near_l = chain_l[-1][0] if chain_l else left
    near_r = chain_r[0][0] if chain_r else right
    # strict transform: near_l + near_r = b v
    s = (near_l[0] + near_r[0], near_l[1] + near_r[1])
    b = s[0] // v[0] if v[0] else s[1] // v[1]
    strict = Fraction(-b)
    return (strict
            + _chain_correction([e for _, e in chain_l], end_at_start=False)
            + _chain_correction([e for _, e in chain_r], end_at_start=True))


def self_intersections(f: Fan2D) -> list[Fraction]:
    return [self_intersection(f, i) for i in range(len(f))]


# complexity


@dataclass(frozen=True)
class BoundarySum:
    picard_rank: int
    coeff_sum: Fraction

    @classmethod
    def toric_boundary(cls, f: Fan2D) -> "BoundarySum":
        return cls(f.picard_rank, Fraction(len(f)))

    def to_json(self) -> dict:
        c = self.coeff_sum
        return {"picard_rank": self.picard_rank,
                "coeff_sum": str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"}


def complexity(b: BoundarySum, dim: int = 2) -> tuple[Fraction, bool]:
    """``rho + dim - |Delta|`` and whether it falls below 1 (toric flag)."""
    c = b.picard_rank + dim - Fraction(b.coeff_sum)
    return c, c < 1


# recognition


def _normal_form(rays: Sequence[Ray]) -> tuple[Ray, ...]:
    """Lexicographically least image of a ccw ray list under GL2(Z) and rotation."""
    best = None
    for seq in (list(rays), [(x, -y) for x, y in reversed(rays)]):
        for i in range(len(seq)):
            rot = seq[i:] + seq[:i]
            v, w = rot[0], rot[1]
            _, s, t = _ext_gcd(v[0], v[1])
            # B v = (1, 0), det B = 1
            r1, r2 = (s, t), (-v[1], v[0])
            d = r2[0] * w[0] + r2[1] * w[1]
            x = r1[0] * w[0] + r1[1] * w[1]
            k = (x - x % d) // d
            r1 = (r1[0] - k * r2[0], r1[1] - k * r2[1])
            img = tuple((r1[0] * a + r1[1] * b, r2[0] * a + r2[1] * b) for a, b in rot)
            if best is None or img < best:
                best = img
    return best


def lattice_equivalent(f: Fan2D, g: Fan2D) -> bool:
    return len(f) == len(g) and _normal_form(f.rays) == _normal_form(g.rays)


def weights(f: Fan2D) -> tuple[int, int, int]:
    """Sorted weights ``(w_i)`` with ``sum w_i v_i = 0`` for a three-ray fan."""
    a, b, c = f.rays
    w = [det(b, c), det(c, a), det(a, b)]
    g = gcd(*w)
    return tuple(sorted(x // g for x in w))


def recognize(f: Fan2D) -> str:
    if len(f) == 3:
        w = weights(f)
        if w == (1, 1, 1) and lattice_equivalent(f, P2):
            return "P2"
        if w[:2] == (1, 1) and lattice_equivalent(f, weighted_projective_plane(1, 1, w[2])):
            return f"P(1,1,{w[2]})"
        if w == (1, 2, 3) and lattice_equivalent(f, weighted_projective_plane(1, 2, 3)):
            return "P(1,2,3)"
    elif len(f) == 4 and f.is_smooth():
        n = max(abs(s) for s in self_intersections(f))
        if lattice_equivalent(f, hirzebruch(int(n))):
            return f"Sigma_{int(n)}"
    return "Unrecognized"


def smooth_fans(max_rays: int) -> list[Fan2D]:
    """P2, Sigma_0..Sigma_3 and every iterated smooth blow-up with at most ``max_rays`` rays."""
    seen: dict[tuple, Fan2D] = {}
    todo = [P2] + [hirzebruch(n) for n in range(4)]
    while todo:
        f = todo.pop()
        if f.rays in seen:
            continue
        seen[f.rays] = f
        if len(f) < max_rays:
            for v, w in f.cones():
                todo.append(star_subdivide(f, (v[0] + w[0], v[1] + w[1])))
    return list(seen.values())


__all__ = [
    "Ray", "Fan2D", "ConeReport", "BoundarySum", "FanError", "SMOOTH", "P2", "hirzebruch",
    "weighted_projective_plane", "det", "cone_index", "cyclic_type", "cone_label", "cone_report",
    "cone_table", "star_subdivide", "hj_continued_fraction", "hj_resolve", "resolve_fan",
    "self_intersection", "self_intersections", "complexity", "recognize", "lattice_equivalent",
    "weights", "smooth_fans",
]
