"""Pairs ``(C, Gamma)`` on a rational or elliptic curve.

Coefficients are exact :class:`fractions.Fraction` values.  A standard
coefficient is ``1 - 1/m`` for an orbifold index ``m >= 1``, or ``1`` for
the index :data:`INFINITY`.

Classification of pairs of non-positive degree with standard coefficients:

* **Elliptic** - degree 0 and no point of coefficient 1;
* **Toric** - some N-complement has a point of coefficient 1;
* **Sporadic** - everything else, which forces ``(1/2, 2/3, 1 - 1/n)``
  with ``n`` in ``{3, 4, 5}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from .fpgroups import (AbelianInvariants, EnumerationExceeded, Presentation, abelianization,
                       analyze, coset_enumerate, regular_representation)
from .fpgroups.words import Word, free_reduce, inverse


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()
OrbifoldIndex = Union[int, _Infinity]

TORIC, ELLIPTIC, SPORADIC = "Toric", "Elliptic", "Sporadic"

# the five elliptic families, keyed by sorted coefficients (genus 0)
ELLIPTIC_FAMILIES = {
    (Fraction(1, 2),) * 4: "(1/2,1/2,1/2,1/2)",
    (Fraction(2, 3),) * 3: "(2/3,2/3,2/3)",
    (Fraction(1, 2), Fraction(2, 3), Fraction(5, 6)): "(1/2,2/3,5/6)",
    (Fraction(1, 2), Fraction(3, 4), Fraction(3, 4)): "(1/2,3/4,3/4)",
}
ELLIPTIC_CURVE_FAMILY = "(E,0)"

# degree of the cyclic cover by an elliptic curve, and the images of the
# point loops in Z/degree (same order as the sorted coefficients)
ELLIPTIC_COVERS = {
    "(E,0)": (1, ()),
    "(1/2,1/2,1/2,1/2)": (2, (1, 1, 1, 1)),
    "(2/3,2/3,2/3)": (3, (1, 1, 1)),
    "(1/2,2/3,5/6)": (6, (3, 2, 1)),
    "(1/2,3/4,3/4)": (4, (2, 1, 1)),
}

SPORADIC_ORDERS = {(2, 3, 3): 12, (2, 3, 4): 24, (2, 3, 5): 60}
SPORADIC_NAMES = {(2, 3, 3): "A4", (2, 3, 4): "S4", (2, 3, 5): "A5"}

# complements are searched over these N first
PREFERRED_N = (1, 2, 3, 4, 6)
MAX_N = 60


class PreconditionError(ValueError):
    """Input outside an operation's domain (non-standard coefficient, positive degree...)."""


def as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or 'p/q' string")
    return Fraction(q)


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class StdCoeff:
    orbifold_index: OrbifoldIndex

    def __post_init__(self):
        m = self.orbifold_index
        if m is not INFINITY and (not isinstance(m, int) or m < 1):
            raise ValueError(f"orbifold index must be a positive integer or INFINITY, got {m!r}")

    @property
    def value(self) -> Fraction:
        if self.orbifold_index is INFINITY:
            return Fraction(1)
        return 1 - Fraction(1, self.orbifold_index)

    @classmethod
    def from_value(cls, q) -> "StdCoeff":
        q = as_fraction(q)
        if not is_standard(q):
            raise PreconditionError(f"{q} is not a standard coefficient")
        return standard_approximation(q)


def is_standard(q) -> bool:
    q = as_fraction(q)
    if q == 1:
        return True
    if not 0 <= q < 1:
        return False
    return (1 / (1 - q)).denominator == 1


def orbifold_index(q) -> OrbifoldIndex:
    return StdCoeff.from_value(q).orbifold_index


def standard_approximation(q) -> StdCoeff:
    """Largest ``1 - 1/m <= q`` over ``m`` in ``N u {inf}``."""
    q = as_fraction(q)
    if not 0 <= q <= 1:
        raise PreconditionError(f"coefficient {q} outside [0, 1]")
    if q == 1:
        return StdCoeff(INFINITY)
    return StdCoeff(int(1 / (1 - q)))


@dataclass(frozen=True)
class CurveDivisor:
    genus: int
    points: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        if self.genus not in (0, 1):
            raise PreconditionError("only rational (genus 0) and elliptic (genus 1) curves")
        pts = tuple((str(lbl), as_fraction(c)) for lbl, c in self.points)
        labels = [lbl for lbl, _ in pts]
        if len(set(labels)) != len(labels):
            raise PreconditionError("point labels must be distinct")
        for lbl, c in pts:
            if not 0 <= c <= 1:
                raise PreconditionError(f"coefficient {c} of {lbl!r} outside [0, 1]")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, genus: int, coeffs: Iterable, labels: Iterable[str] | None = None) -> "CurveDivisor":
        coeffs = [as_fraction(c) for c in coeffs]
        labels = list(labels) if labels is not None else [f"p{i}" for i in range(1, len(coeffs) + 1)]
        return cls(genus, tuple(zip(labels, coeffs)))

    def canonical(self) -> "CurveDivisor":
        """Drop zero-coefficient points."""
        return CurveDivisor(self.genus, tuple(p for p in self.points if p[1] != 0))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(c for _, c in self.points)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lbl for lbl, _ in self.points)

    def is_standard(self) -> bool:
        return all(is_standard(c) for c in self.coeffs)

    def to_json(self) -> dict:
        return {"genus": self.genus,
                "points": [{"label": lbl, "coeff": format_fraction(c)} for lbl, c in self.points]}

    @classmethod
    def from_json(cls, data) -> "CurveDivisor":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            genus = int(data["genus"])
            points = tuple((str(p.get("label", f"p{i}")), Fraction(str(p["coeff"])))
                           for i, p in enumerate(data.get("points", []), 1))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed curve divisor: {exc}") from exc
        return cls(genus, points)


def pair_degree(D: CurveDivisor) -> Fraction:
    """Degree of ``K_C + D``."""
    return 2 * D.genus - 2 + sum(D.coeffs, Fraction(0))


def _require_standard(D: CurveDivisor):
    for lbl, c in D.points:
        if not is_standard(c):
            raise PreconditionError(f"coefficient {c} of {lbl!r} is not standard")


def _require_domain(D: CurveDivisor):
    _require_standard(D)
    if pair_degree(D) > 0:
        raise PreconditionError(f"degree {pair_degree(D)} of K_C + D is positive")


# complements


@dataclass(frozen=True)
class ComplementCertificate:
    N: int
    gamma_plus: CurveDivisor

    def to_json(self) -> dict:
        return {"N": self.N, "gamma_plus": self.gamma_plus.to_json()}


def _candidate_ns(D: CurveDivisor) -> list[int]:
    L = lcm(*(c.denominator for c in D.coeffs)) if D.points else 1
    divisors = {d for d in range(1, min(L, MAX_N) + 1) if L % d == 0}
    return sorted(set(PREFERRED_N) | divisors)


def _fresh_labels(existing: Iterable[str]):
    taken = set(existing)
    i = 1
    while True:
        lbl = f"new{i}"
        if lbl not in taken:
            yield lbl
        i += 1


def _ceil_to(c: Fraction, N: int) -> Fraction:
    return Fraction(-((-c.numerator * N) // c.denominator), N)


def _complement_at(D: CurveDivisor, N: int, require_coeff_one: bool) -> CurveDivisor | None:
    target = 2 - 2 * D.genus
    raised = [_ceil_to(c, N) for c in D.coeffs]
    new: list[Fraction] = []
    if require_coeff_one:
        if D.genus == 1:
            return None
        # raise the point that is cheapest to push to 1, or add one
        best = None
        for i, r in enumerate(raised):
            if best is None or r > raised[best]:
                best = i
        if best is not None and raised[best] > 0:
            raised[best] = Fraction(1)
        else:
            new.append(Fraction(1))
    total = sum(raised, Fraction(0)) + sum(new, Fraction(0))
    if total > target:
        return None
    gap = target - total
    while gap > 0:
        step = min(Fraction(1), gap)
        new.append(step)
        gap -= step
    labels = _fresh_labels(D.labels)
    pts = tuple(zip(D.labels, raised)) + tuple((next(labels), c) for c in new)
    return CurveDivisor(D.genus, pts)


def find_complement(D: CurveDivisor, require_coeff_one: bool = False) -> ComplementCertificate | None:
    """N-complement with the least N in the search set, or ``None``.

    N runs over ``1, 2, 3, 4, 6`` and the divisors (up to 60) of the lcm of
    the denominators.  Existing coefficients are rounded up to multiples of
    ``1/N``; the remaining degree is made up with new points.
    """
    D = D.canonical()
    _require_domain(D)
    for N in _candidate_ns(D):
        gp = _complement_at(D, N, require_coeff_one)
        if gp is not None:
            return ComplementCertificate(N, gp)
    return None


def coeff_one_complement_exists(D: CurveDivisor) -> bool:
    """Closed-form test: ``min_p (deg D - D(p)) <= 1`` over old and new points (genus 0)."""
    D = D.canonical()
    if D.genus == 1:
        return False
    total = sum(D.coeffs, Fraction(0))
    return min([total - c for c in D.coeffs] + [total]) <= 1


def is_complement(D: CurveDivisor, cert: ComplementCertificate) -> bool:
    """Check the certificate conditions directly."""
    gp = cert.gamma_plus
    if gp.genus != D.genus or pair_degree(gp) != 0:
        return False
    got = dict(gp.points)
    for lbl, c in D.points:
        if got.get(lbl, Fraction(0)) < c:
            return False
    return all(0 <= c <= 1 and (c * cert.N).denominator == 1 for c in gp.coeffs)


# trichotomy


@dataclass(frozen=True)
class CurvePairClass:
    """``payload``: the complement witness (Toric), the family name (Elliptic)
    or the sorted orbifold indices ``(2, 3, n)`` (Sporadic)."""

    kind: str
    payload: object

    @property
    def certificate(self) -> ComplementCertificate | None:
        return self.payload if self.kind == TORIC else None

    def to_json(self) -> dict:
        if self.kind == SPORADIC:
            payload = list(self.payload)
        elif self.kind == TORIC:
            payload = self.payload.to_json()
        else:
            payload = self.payload
        return {"kind": self.kind, "payload": payload, "label": str(self)}

    def __str__(self) -> str:
        if self.kind == SPORADIC:
            return "Sporadic({},{},{})".format(*self.payload)
        if self.kind == ELLIPTIC:
            return f"Elliptic{self.payload}"
        return f"Toric(N={self.payload.N})"


def _indices(D: CurveDivisor) -> list[OrbifoldIndex]:
    return [orbifold_index(c) for c in D.coeffs]


def classify_trichotomy(D: CurveDivisor) -> CurvePairClass:
    D = D.canonical()
    _require_domain(D)
    if pair_degree(D) == 0 and all(c < 1 for c in D.coeffs):
        if D.genus == 1:
            return CurvePairClass(ELLIPTIC, ELLIPTIC_CURVE_FAMILY)
        return CurvePairClass(ELLIPTIC, ELLIPTIC_FAMILIES[tuple(sorted(D.coeffs))])
    cert = find_complement(D, require_coeff_one=True)
    if cert is not None:
        return CurvePairClass(TORIC, cert)
    triple = tuple(sorted(_indices(D)))
    if triple not in SPORADIC_ORDERS:
        raise AssertionError(f"unexpected sporadic configuration {triple}")
    return CurvePairClass(SPORADIC, triple)


# orbifold fundamental groups


@dataclass(frozen=True)
class OrbifoldPresentation:
    presentation: Presentation
    point_loops: dict[str, str] = field(default_factory=dict)

    @property
    def generators(self) -> tuple[str, ...]:
        return self.presentation.generators

    @property
    def relators(self) -> tuple[Word, ...]:
        return self.presentation.relators

    def loop(self, label: str) -> Word:
        return (self.presentation.generators.index(self.point_loops[label]) + 1,)

    def to_json(self) -> dict:
        return {"presentation": str(self.presentation), "point_loops": dict(self.point_loops),
                **self.presentation.to_json()}


def orbifold_presentation(D: CurveDivisor) -> OrbifoldPresentation:
    """``<g_1..g_r | g_1...g_r, g_i^m_i>`` (genus 0) or with ``[a,b]`` prepended (genus 1).

    A genus-0 divisor with no points gives the trivial group ``<g | g>``.
    """
    D = D.canonical()
    _require_standard(D)
    r = len(D.points)
    loops = [f"g{i}" for i in range(1, r + 1)]
    if D.genus == 0:
        if r == 0:
            return OrbifoldPresentation(Presentation(("g",), ((1,),)), {})
        names = tuple(loops)
        offset = 0
        product: Word = tuple(range(1, r + 1))
    else:
        names = ("a", "b", *loops)
        offset = 2
        product = (1, 2, -1, -2) + tuple(range(3, r + 3))
    rels = [product]
    for i, m in enumerate(_indices(D)):
        if m is not INFINITY and m > 1:
            rels.append((offset + i + 1,) * m)
    return OrbifoldPresentation(Presentation(names, tuple(rels)),
                                dict(zip(D.labels, loops)))


def kernel_generators(ngens: int, images: list[int], d: int) -> list[Word]:
    """Schreier generators of the kernel of ``F(ngens) -> Z/d``, ``g_i -> images[i]``."""
    units = [i for i, v in enumerate(images) if _unit(v, d)]
    if d == 1:
        return [(i,) for i in range(1, ngens + 1)]
    if not units:
        raise ValueError("no generator maps onto a generator of Z/d")
    t = units[0] + 1
    u_inv = pow(images[units[0]], -1, d)
    out = []
    for j in range(d):
        for i, v in enumerate(images):
            j2 = (j + v * u_inv) % d
            w = free_reduce((t,) * j + (i + 1,) + inverse((t,) * j2))
            if w and w not in out:
                out.append(w)
    return out


def _unit(v: int, d: int) -> bool:
    from math import gcd
    return gcd(v, d) == 1


@dataclass(frozen=True)
class CoverSubgroup:
    """Finite-index subgroup of the orbifold group cut out by the abelianization cover."""

    orbifold: OrbifoldPresentation
    generators: tuple[Word, ...]
    degree: int


def abelianization_cover(D: CurveDivisor) -> tuple[int, CurveDivisor]:
    """Degree and target pair of the cover for the maximal normal abelian subgroup."""
    D = D.canonical()
    cls = classify_trichotomy(D)
    if cls.kind == SPORADIC:
        return SPORADIC_ORDERS[cls.payload], CurveDivisor(0)
    if cls.kind == ELLIPTIC:
        return ELLIPTIC_COVERS[cls.payload][0], CurveDivisor(1)
    halves = [lbl for lbl, c in D.points if c == Fraction(1, 2)]
    if len(D.points) == 3 and len(halves) == 2:
        (lbl, c), = [(lbl, c) for lbl, c in D.points if lbl not in halves]
        return 2, CurveDivisor(0, ((f"{lbl}'1", c), (f"{lbl}'2", c)))
    return 1, D


def cover_subgroup(D: CurveDivisor) -> CoverSubgroup:
    """Generators of the subgroup matching :func:`abelianization_cover`."""
    D = D.canonical()
    cls = classify_trichotomy(D)
    op = orbifold_presentation(D)
    n = op.presentation.generator_count
    if cls.kind == SPORADIC:
        return CoverSubgroup(op, (), SPORADIC_ORDERS[cls.payload])
    if cls.kind == ELLIPTIC:
        d, sorted_images = ELLIPTIC_COVERS[cls.payload]
        if D.genus == 1:
            return CoverSubgroup(op, tuple((i,) for i in range(1, n + 1)), 1)
        order = sorted(range(len(D.points)), key=lambda i: D.coeffs[i])
        images = [0] * n
        for pos, i in enumerate(order):
            images[i] = sorted_images[pos]
        return CoverSubgroup(op, tuple(kernel_generators(n, images, d)), d)
    degree, _ = abelianization_cover(D)
    if degree == 2:
        images = [1 if c == Fraction(1, 2) else 0 for c in D.coeffs]
        return CoverSubgroup(op, tuple(kernel_generators(n, images, 2)), 2)
    return CoverSubgroup(op, tuple((i,) for i in range(1, n + 1)), 1)


# group identification


@dataclass(frozen=True)
class GroupIdentification:
    name: str
    order: int | None
    abelianization: AbelianInvariants
    derived_series: tuple[int, ...] | None = None
    consistent: bool = True
    note: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "order": self.order,
                "abelianization": self.abelianization.to_json(),
                "derived_series": None if self.derived_series is None else list(self.derived_series),
                "consistent": self.consistent, "note": self.note}


def _finite_cyclic_or_dihedral(order: int, P: Presentation, max_cosets: int) -> str | None:
    G = regular_representation(coset_enumerate(P, (), max_cosets))
    from .fpgroups.perm import closure, inv, mul
    elements = closure(G.generators, G.degree)
    ident = tuple(range(G.degree))

    def elt_order(g):
        k, x = 1, g
        while x != ident:
            x = mul(x, g)
            k += 1
        return k

    if any(elt_order(g) == order for g in elements):
        return f"Z/{order}"
    if order % 2 == 0:
        n = order // 2
        for r in sorted(elements):
            if elt_order(r) != n:
                continue
            rot = closure([r], G.degree)
            for s in sorted(elements):
                if s not in rot and elt_order(s) == 2 and mul(mul(s, r), s) == inv(r):
                    return f"D{n}"
    return None


def identify_group(D: CurveDivisor, max_cosets: int = 100_000) -> GroupIdentification:
    """Name the orbifold group up to order and derived-series fingerprint.

    Toric pairs are checked against the cyclic-or-dihedral description;
    a mismatch is reported through ``consistent=False``, never hidden.
    """
    D = D.canonical()
    cls = classify_trichotomy(D)
    op = orbifold_presentation(D)
    P = op.presentation
    ab = abelianization(P)
    if cls.kind == ELLIPTIC:
        d = ELLIPTIC_COVERS[cls.payload][0]
        name = "Z^2" if d == 1 else f"Z^2 x| Z/{d}"
        return GroupIdentification(name, None, ab)
    table = coset_enumerate(P, (), max_cosets)
    if cls.kind == SPORADIC:
        order = table.index
        fp = analyze(regular_representation(table)).derived_series
        expected = SPORADIC_ORDERS[cls.payload]
        return GroupIdentification(SPORADIC_NAMES[cls.payload], order, ab, fp,
                                   consistent=order == expected)
    if table.complete:
        order = table.index
        fp = analyze(regular_representation(table)).derived_series
        name = _finite_cyclic_or_dihedral(order, P, max_cosets)
        if name is None:
            return GroupIdentification(f"order {order}", order, ab, fp, consistent=False,
                                       note="finite toric group is neither cyclic nor dihedral")
        return GroupIdentification(name, order, ab, fp)
    # infinite toric groups only arise for degree-0 toric pairs
    idx = sorted(_indices(D), key=lambda m: (m is INFINITY, m if m is not INFINITY else 0))
    if idx == [INFINITY, INFINITY]:
        return GroupIdentification("Z", None, ab)
    if idx == [2, 2, INFINITY]:
        return GroupIdentification("D_inf", None, ab)
    return GroupIdentification("infinite", None, ab, consistent=False,
                               note="enumeration did not close on an unexpected configuration")


def enumerate_standard_pairs(max_denominator: int = 30) -> Iterable[CurveDivisor]:
    """Every genus-0 standard divisor with denominators <= bound and degree <= 0.

    Points are unlabelled, so each multiset of coefficients appears once.
    """
    values = [Fraction(1)] + [1 - Fraction(1, m) for m in range(2, max_denominator + 1)]
    values.sort(reverse=True)

    def rec(start: int, remaining: Fraction, chosen: list[Fraction]):
        yield CurveDivisor.of(0, chosen)
        for i in range(start, len(values)):
            v = values[i]
            if v <= remaining:
                yield from rec(i, remaining - v, chosen + [v])

    yield from rec(0, Fraction(2), [])


__all__ = [
    "INFINITY", "TORIC", "ELLIPTIC", "SPORADIC", "ELLIPTIC_FAMILIES", "SPORADIC_ORDERS",
    "StdCoeff", "CurveDivisor", "CurvePairClass", "ComplementCertificate",
    "OrbifoldPresentation", "CoverSubgroup", "GroupIdentification", "PreconditionError",
    "standard_approximation", "is_standard", "orbifold_index", "pair_degree",
    "classify_trichotomy", "find_complement", "coeff_one_complement_exists", "is_complement",
    "orbifold_presentation", "abelianization_cover", "cover_subgroup", "kernel_generators",
    "identify_group", "enumerate_standard_pairs", "EnumerationExceeded",
]
