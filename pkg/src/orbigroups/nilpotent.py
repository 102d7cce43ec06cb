"""Arithmetic in the class-2 groups ``H_k = <a,b,c | [a,b] = c^k, c central>``.

Elements are kept in the normal form ``a^x b^y c^z``.  Moving ``b^y`` past
``a^x`` costs ``c^(-k x y)``, which gives the product law::

    (x1, y1, z1) (x2, y2, z2) = (x1 + x2, y1 + y2, z1 + z2 - k x2 y1)

The same group is often written with the central generator first,
``<a,b,c | [a,b] = [a,c] = 1, [b,c] = a^k>``; ``CENTRAL_FIRST_RELABELING``
maps those names onto the ones used here.

The module also carries the finite quotients ``G_{m,k} = H_k / <c^m>``,
the minimal-index search for abelian normal subgroups of ``G_{m,k}``, and
small verification gadgets for the index-4N, 144N and 8N subgroup
constructions used for extensions of ``Z^2``-by-finite groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Sequence

from .fpgroups import Presentation, coset_enumerate, subgroup_abelianization
from .fpgroups.reidemeister import verify_subgroup_claim

# names in <a,b,c | [a,b]=[a,c]=1, [b,c]=a^k>  ->  names used here
CENTRAL_FIRST_RELABELING = {"a": "c", "b": "a", "c": "b"}


class ParameterMismatch(ValueError):
    pass


@dataclass(frozen=True)
class HeisenbergElement:
    k: int
    x: int = 0
    y: int = 0
    z: int = 0

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return h_mul(self, other)

    def __pow__(self, n: int) -> "HeisenbergElement":
        return h_pow(self, n)

    def __str__(self) -> str:
        return f"{self.x},{self.y},{self.z}"

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    @classmethod
    def parse(cls, k: int, text: str) -> "HeisenbergElement":
        parts = [int(p) for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected an 'x,y,z' triple, got {text!r}")
        return cls(k, *parts)


def generators(k: int) -> tuple[HeisenbergElement, HeisenbergElement, HeisenbergElement]:
    return HeisenbergElement(k, 1, 0, 0), HeisenbergElement(k, 0, 1, 0), HeisenbergElement(k, 0, 0, 1)


def identity(k: int) -> HeisenbergElement:
    return HeisenbergElement(k)


def _same_k(u: HeisenbergElement, v: HeisenbergElement) -> int:
    if u.k != v.k:
        raise ParameterMismatch(f"elements of H_{u.k} and H_{v.k} cannot be combined")
    return u.k


def h_mul(u: HeisenbergElement, v: HeisenbergElement) -> HeisenbergElement:
    k = _same_k(u, v)
    return HeisenbergElement(k, u.x + v.x, u.y + v.y, u.z + v.z - k * v.x * u.y)


def h_inverse(u: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement(u.k, -u.x, -u.y, -u.z - u.k * u.x * u.y)


def h_pow(u: HeisenbergElement, n: int) -> HeisenbergElement:
    if n < 0:
        return h_pow(h_inverse(u), -n)
    result, base = identity(u.k), u
    while n:
        if n & 1:
            result = h_mul(result, base)
        base = h_mul(base, base)
        n >>= 1
    return result


def h_commutator(u: HeisenbergElement, v: HeisenbergElement) -> HeisenbergElement:
    """``u v u^-1 v^-1``; always ``(0, 0, k (x1 y2 - x2 y1))``."""
    _same_k(u, v)
    return h_mul(h_mul(u, v), h_mul(h_inverse(u), h_inverse(v)))


def evaluate(word: Sequence[int], k: int) -> HeisenbergElement:
    """Product of a word in ``a=1, b=2, c=3`` (negative for inverses)."""
    gens = generators(k)
    out = identity(k)
    for g in word:
        e = gens[abs(g) - 1]
        out = h_mul(out, e if g > 0 else h_inverse(e))
    return out


def rewrite_normal_form(word: Sequence[int], k: int) -> tuple[int, int, int]:
    """Collect a word into ``a^x b^y c^z`` by string rewriting.

    Rules: cancel ``g g^-1``; ``c^e g -> g c^e``; ``b^e a^d -> a^d b^e c^(-k e d)``.
    Nothing here uses the closed-form product law.
    """
    w = list(word)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(w) - 1:
            p, q = w[i], w[i + 1]
            if p == -q:
                del w[i:i + 2]
                changed = True
                i = max(i - 1, 0)
                continue
            if abs(p) == 3 and abs(q) != 3:
                w[i], w[i + 1] = q, p
                changed = True
            elif abs(p) == 2 and abs(q) == 1:
                e = 1 if p > 0 else -1
                d = 1 if q > 0 else -1
                n = -k * e * d
                w[i:i + 2] = [q, p] + [3 if n > 0 else -3] * abs(n)
                changed = True
            i += 1
    x = sum(1 if g > 0 else -1 for g in w if abs(g) == 1)
    y = sum(1 if g > 0 else -1 for g in w if abs(g) == 2)
    z = sum(1 if g > 0 else -1 for g in w if abs(g) == 3)
    return (x, y, z)


def words(max_len: int) -> Iterator[tuple[int, ...]]:
    """All words of length ``<= max_len`` over ``a, b, c`` and inverses."""
    letters = (1, -1, 2, -2, 3, -3)
    level: list[tuple[int, ...]] = [()]
    yield ()
    for _ in range(max_len):
        level = [w + (g,) for w in level for g in letters]
        yield from level


def heisenberg_presentation(k: int) -> Presentation:
    return Presentation.parse(f"<a,b,c | [a,b]c^{-k}, [a,c], [b,c]>")


# finite quotients G_{m,k} = H_k / <c^m>

@dataclass(frozen=True)
class QuotientElement:
    k: int
    m: int
    x: int
    y: int
    z: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")
        object.__setattr__(self, "z", self.z % self.m)


def project(u: HeisenbergElement, m: int) -> QuotientElement:
    return QuotientElement(u.k, m, u.x, u.y, u.z)


def quotient_mul(u: QuotientElement, v: QuotientElement) -> QuotientElement:
    if (u.k, u.m) != (v.k, v.m):
        raise ParameterMismatch("elements of different quotients")
    return QuotientElement(u.k, u.m, u.x + v.x, u.y + v.y, u.z + v.z - u.k * v.x * u.y)


def quotient_commutator(u: QuotientElement, v: QuotientElement) -> QuotientElement:
    c = h_commutator(HeisenbergElement(u.k, u.x, u.y, u.z), HeisenbergElement(v.k, v.x, v.y, v.z))
    return project(c, u.m)


@dataclass(frozen=True)
class LatticeSubgroupDatum:
    """Subgroup of ``G_{m,k}`` generated by ``<c>`` and lifts of the basis rows."""

    basis: tuple[tuple[int, int], tuple[int, int]]
    includes_center: bool = True

    def __post_init__(self):
        if self.det == 0:
            raise ValueError("basis must be nonsingular")

    @property
    def det(self) -> int:
        (p, q), (r, s) = self.basis
        return p * s - q * r

    @property
    def index(self) -> int:
        return abs(self.det)

    def contains_exponents(self, x: int, y: int) -> bool:
        (p, q), (r, s) = self.basis
        d = self.det
        # solve (x, y) = u (p, q) + v (r, s) over the integers
        u_num = x * s - y * r
        v_num = y * p - x * q
        return u_num % d == 0 and v_num % d == 0

    def to_json(self) -> dict:
        return {"basis": [list(r) for r in self.basis], "includes_center": self.includes_center,
                "index": self.index}


def hnf_bases(det: int) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    """Every index-``det`` sublattice of ``Z^2`` once, as ``[[d1, 0], [e, d2]]``."""
    for d1 in range(1, det + 1):
        if det % d1:
            continue
        d2 = det // d1
        for e in range(d1):
            yield ((d1, 0), (e, d2))


def is_abelian_lattice_subgroup(datum: LatticeSubgroupDatum, m: int, k: int) -> bool:
    (p, q), (r, s) = datum.basis
    u = QuotientElement(k, m, p, q, 0)
    v = QuotientElement(k, m, r, s, 0)
    return quotient_commutator(u, v).z == 0


def is_normal_lattice_subgroup(datum: LatticeSubgroupDatum, m: int, k: int) -> bool:
    """Conjugates of the generators by ``a`` and ``b`` stay in the subgroup."""
    a, b = HeisenbergElement(k, 1, 0, 0), HeisenbergElement(k, 0, 1, 0)
    gens = [HeisenbergElement(k, *row, 0) for row in datum.basis] + [HeisenbergElement(k, 0, 0, 1)]
    for g in gens:
        for h in (a, b, h_inverse(a), h_inverse(b)):
            conj = h_mul(h_mul(h, g), h_inverse(h))
            if not datum.contains_exponents(conj.x, conj.y):
                return False
    return True


def min_abelian_normal_index(m: int, k: int, det_bound: int | None = None
                             ) -> tuple[int, LatticeSubgroupDatum]:
    """Smallest index of an abelian normal subgroup of ``G_{m,k}`` containing ``<c>``.

    Sublattices are scanned by increasing determinant and then in Hermite
    normal form order; a lattice qualifies when its two lifted generators
    commute, i.e. ``m | k * det``.  The answer is a computed quantity and
    always satisfies ``index >= sqrt(m/|k|)``.
    """
    if k == 0:
        raise ValueError("k = 0 gives an abelian group; the search is degenerate")
    if m < 1:
        raise ValueError("m must be positive")
    if det_bound is None:
        det_bound = 4 * m
    if det_bound < m:
        raise ValueError("det_bound must be at least m")
    for d in range(1, det_bound + 1):
        for basis in hnf_bases(d):
            datum = LatticeSubgroupDatum(basis)
            if is_abelian_lattice_subgroup(datum, m, k):
                return d, datum
    raise AssertionError("unreachable: the index-m lattice diag(1, m) always qualifies")


def sqrt_lower_bound(m: int, k: int) -> int:
    """``ceil(sqrt(m / |k|))`` in exact integer arithmetic."""
    k = abs(k)
    l = isqrt(m // k)
    while l * l * k < m:
        l += 1
    while l > 0 and (l - 1) ** 2 * k >= m:
        l -= 1
    return l


@dataclass(frozen=True)
class VirtualAbelianWitness:
    """For every ``l >= 1``, ``[a^l, b^l] = c^(k l^2)`` is nontrivial."""

    k: int

    def at(self, l: int) -> HeisenbergElement:
        a, b, _ = generators(self.k)
        return h_commutator(h_pow(a, l), h_pow(b, l))

    def to_json(self, samples: int = 5) -> dict:
        return {"rule": "[a^l,b^l] = c^(k*l^2)", "k": self.k,
                "samples": {str(l): str(self.at(l)) for l in range(1, samples + 1)}}


def is_virtually_abelian(k: int) -> tuple[bool, VirtualAbelianWitness | None]:
    """``H_k`` is virtually abelian iff ``k == 0``.

    A finite-index subgroup contains ``a^l`` and ``b^l`` for some ``l >= 1``
    and their commutator ``c^(k l^2)`` has infinite order when ``k != 0``.
    """
    if k == 0:
        return True, None
    w = VirtualAbelianWitness(k)
    for l in range(1, 6):
        assert w.at(l).triple == (0, 0, k * l * l)
    return False, w


# subgroup constructions for extensions 1 -> K -> G -> Q -> 1, Q containing Z^2


def lemma_42_gadget(k: int, N: int = 1) -> dict:
    """Preimage of ``(2Z)^2`` inside ``H_k -> Z^2``.

    ``Q = Z^2`` is modelled with its index-``N`` lattice ``Z x NZ``, so the
    subgroup is ``<a^2, b^(2N), c>``.
    """
    if N < 1:
        raise ValueError("N must be positive")
    a, b, c = generators(k)
    datum = LatticeSubgroupDatum(((2, 0), (0, 2 * N)))
    comm = h_commutator(h_pow(a, 2), h_pow(b, 2 * N))
    P = heisenberg_presentation(k)
    table = coset_enumerate(P, [P.word("a^2"), P.word(f"b^{2 * N}"), P.word("c")], 10_000)
    return {
        "k": k,
        "N": N,
        "subgroup": f"<a^2, b^{2 * N}, c>",
        "basis": [list(r) for r in datum.basis],
        "index": datum.index,
        "index_by_coset_enumeration": table.index,
        "commutator": str(comm),
        "heisenberg_parameter": comm.z,
        "ok": datum.index == 4 * N == table.index and comm.triple == (0, 0, 4 * N * k),
    }


KLEIN_KERNEL_K = "<s,t,b,c | s^2, t^2, [s,t], [b,s], [b,t], [c,s], [c,t], [b,c]s^-1>"


def _k43_mul(u, v):
    # normal form s^i t^j b^x c^y with c^y b^x = b^x c^y s^(x y)
    i1, j1, x1, y1 = u
    i2, j2, x2, y2 = v
    return ((i1 + i2 + y1 * x2) % 2, (j1 + j2) % 2, x1 + x2, y1 + y2)


def _k43_inv(u):
    i, j, x, y = u
    return ((i + x * y) % 2, j, -x, -y)


def _k43_pow(u, n):
    out = (0, 0, 0, 0)
    for _ in range(abs(n)):
        out = _k43_mul(out, u if n > 0 else _k43_inv(u))
    return out


def lemma_43_gadget(N: int = 1) -> dict:
    """Subgroup ``<s, t, b^2, c^2>`` of the group ``K`` (preimage of ``(6Z)^2``).

    ``K`` has index ``36 N`` in ``G`` and the subgroup index 4 in ``K``,
    giving the total ``144 N``.
    """
    if N < 1:
        raise ValueError("N must be positive")
    K = Presentation.parse(KLEIN_KERNEL_K)
    gens = [K.word(w) for w in ("s", "t", "b^2", "c^2")]
    claim = verify_subgroup_claim(K, gens, 4, 4)
    index, inv = subgroup_abelianization(K, gens)
    s, t = (1, 0, 0, 0), (0, 1, 0, 0)
    b2, c2 = _k43_pow((0, 0, 1, 0), 2), _k43_pow((0, 0, 0, 1), 2)
    comm = _k43_mul(_k43_mul(b2, c2), _k43_mul(_k43_inv(b2), _k43_inv(c2)))
    klein = {(i, j, 0, 0) for i in range(2) for j in range(2)}
    klein_closed = all(_k43_mul(p, q) in klein for p in klein for q in klein)
    return {
        "N": N,
        "presentation": KLEIN_KERNEL_K,
        "subgroup": "<s, t, b^2, c^2>",
        "index_in_K": index,
        "index_in_G": 36 * N * index,
        "subgroup_abelianization": inv.to_json(),
        "subgroup_rank": inv.rank,
        "commutator_b2_c2": list(comm),
        "s_t_klein_four": klein_closed and _k43_mul(s, s) == (0, 0, 0, 0)
        and _k43_mul(t, t) == (0, 0, 0, 0) and _k43_mul(s, t) == _k43_mul(t, s),
        "ok": claim and index == 4 and inv.rank == 4 and comm == (0, 0, 0, 0),
    }


DIHEDRAL_KERNEL_G = "<z,s,b,c | s^2, szs^-1z, bzb^-1z, [c,z], [b,s], [c,s], [b,c]>"


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _dinf_mul(u, v):
    # z^n s^e in Z x| Z/2 with s z s^-1 = z^-1
    n1, e1 = u
    n2, e2 = v
    return (n1 + _sign(e1) * n2, (e1 + e2) % 2)


def _g44_mul(u, v):
    # (z^n s^e, b^x c^y); b inverts z and fixes s, c acts trivially
    n1, e1, x1, y1 = u
    n2, e2, x2, y2 = v
    n, e = _dinf_mul((n1, e1), (_sign(x1) * n2, e2))
    return (n, e, x1 + x2, y1 + y2)


def _g44_inv(u):
    n, e, x, y = u
    # (d, v)^-1 = (b^-x d^-1 b^x, -v); reflections are involutions
    dn, de = (-n, 0) if e == 0 else (n, 1)
    return (_sign(x) * dn, de, -x, -y)


def lemma_44_gadget() -> dict:
    """Index-8 Heisenberg-style subgroup for a kernel ``Z x| Z/2``.

    The model is ``G = D_inf x| Z^2`` with kernel ``<z, s>``, ``s z s^-1 = z^-1``,
    ``b`` inverting ``z`` and ``c`` acting trivially.  The subgroup is the
    preimage ``<z, b^2, c^2>`` of the free part of ``S = <s, b^2, c^2>``.
    Because ``s`` inverts ``z`` while acting trivially modulo ``z`` on that
    preimage, its Heisenberg parameter is forced to be 0.
    """
    G = Presentation.parse(DIHEDRAL_KERNEL_G)
    gens = [G.word(w) for w in ("z", "b^2", "c^2")]
    index, inv = subgroup_abelianization(G, gens)
    s_index = coset_enumerate(G, [G.word(w) for w in ("z", "s", "b^2", "c^2")], 1000).index
    b2, c2 = (0, 0, 2, 0), (0, 0, 0, 2)
    comm = _g44_mul(_g44_mul(b2, c2), _g44_mul(_g44_inv(b2), _g44_inv(c2)))
    # automorphisms of D_inf: inversion and the shift s -> s z, on generators z, s
    autos = {"inversion": {"z": (-1, 0), "s": (0, 1)}, "shift": {"z": (1, 0), "s": (1, 1)}}
    characteristic = True
    for images in autos.values():
        zi, si = images["z"], images["s"]
        characteristic &= zi[1] == 0  # z goes into <z>
        characteristic &= _dinf_mul(si, si) == (0, 0)
        characteristic &= _dinf_mul(_dinf_mul(si, zi), _dinf_mul(si, zi)) == (0, 0)
    conj_b = _g44_mul(_g44_mul((0, 0, 1, 0), (1, 0, 0, 0)), _g44_inv((0, 0, 1, 0)))
    conj_c = _g44_mul(_g44_mul((0, 0, 0, 1), (1, 0, 0, 0)), _g44_inv((0, 0, 0, 1)))
    characteristic &= conj_b[1:] == (0, 0, 0) and conj_c[1:] == (0, 0, 0)
    return {
        "presentation": DIHEDRAL_KERNEL_G,
        "subgroup": "<z, b^2, c^2>",
        "index": index,
        "index_of_S_preimage": s_index,
        "subgroup_abelianization": inv.to_json(),
        "commutator_b2_c2": list(comm),
        "commutator_in_Z": comm[1:] == (0, 0, 0),
        "heisenberg_parameter": comm[0],
        "Z_characteristic": characteristic,
        "ok": index == 8 and s_index == 4 and comm[1:] == (0, 0, 0) and characteristic,
    }


__all__ = [
    "CENTRAL_FIRST_RELABELING", "HeisenbergElement", "LatticeSubgroupDatum",
    "ParameterMismatch", "QuotientElement", "VirtualAbelianWitness", "evaluate", "generators",
    "h_commutator", "h_inverse", "h_mul", "h_pow", "hnf_bases", "heisenberg_presentation",
    "identity", "is_abelian_lattice_subgroup", "is_normal_lattice_subgroup",
    "is_virtually_abelian", "lemma_42_gadget", "lemma_43_gadget", "lemma_44_gadget",
    "min_abelian_normal_index", "project", "quotient_commutator", "quotient_mul",
    "rewrite_normal_form", "sqrt_lower_bound", "words",
]
