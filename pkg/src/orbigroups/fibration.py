"""Coefficient bookkeeping for surfaces fibred over curves.

Covers adjunction to a curve, the base pair of a fibration with multiple
fibers, compatibility of ramified covers, and a lookup table of structure
certificates for the orbifold fundamental group of a Mori fiber space
``f: (X, Delta) -> (C, Delta_C)`` indexed by the types of the general fiber
and of the base.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .curve_pairs import (ELLIPTIC, SPORADIC, TORIC, CurvePairClass, PreconditionError,
                          as_fraction, format_fraction, is_standard, standard_approximation)
from .fpgroups import Presentation


def _unit_interval(name: str, q: Fraction):
    if not 0 <= q <= 1:
        raise PreconditionError(f"{name} = {q} outside [0, 1]")


def _positive(name: str, m) -> int:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise PreconditionError(f"{name} must be a positive integer, got {m!r}")
    return m


@dataclass(frozen=True)
class AdjunctionPointDatum:
    """A point ``P`` of a curve ``S`` with the boundary components ``B_j`` through it."""

    m_P: int
    contributions: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        _positive("m_P", self.m_P)
        out = []
        for b, mult in self.contributions:
            b = as_fraction(b)
            _unit_interval("b_j", b)
            out.append((b, _positive("m_jP", mult)))
        object.__setattr__(self, "contributions", tuple(out))

    def to_json(self) -> dict:
        return {"m_P": self.m_P,
                "contributions": [{"b": format_fraction(b), "mult": m} for b, m in self.contributions]}

    @classmethod
    def from_json(cls, data) -> "AdjunctionPointDatum":
        data = json.loads(data) if isinstance(data, str) else data
        return cls(int(data["m_P"]), tuple((Fraction(str(c["b"])), int(c["mult"]))
                                           for c in data.get("contributions", [])))


@dataclass(frozen=True)
class FibrationFiberDatum:
    """Fiber over ``p`` of multiplicity ``m_p`` carrying vertical coefficient ``a_p``."""

    m_p: int
    a_p: Fraction

    def __post_init__(self):
        _positive("m_p", self.m_p)
        a = as_fraction(self.a_p)
        _unit_interval("a_p", a)
        if not is_standard(a):
            raise PreconditionError(f"a_p = {a} is not a standard coefficient")
        object.__setattr__(self, "a_p", a)

    def to_json(self) -> dict:
        return {"m_p": self.m_p, "a_p": format_fraction(self.a_p)}


@dataclass(frozen=True)
class CoverCoeffDatum:
    """Ramification ``m`` over a point; ``b`` downstairs, ``a`` upstairs."""

    m: int
    b: Fraction
    a: Fraction

    def __post_init__(self):
        _positive("m", self.m)
        for name in ("b", "a"):
            q = as_fraction(getattr(self, name))
            _unit_interval(name, q)
            object.__setattr__(self, name, q)

    def to_json(self) -> dict:
        return {"m": self.m, "b": format_fraction(self.b), "a": format_fraction(self.a)}


def adjunction_coefficient(d: AdjunctionPointDatum) -> Fraction:
    """``1 - 1/m_P + sum_j m_jP b_j / m_P``."""
    return 1 - Fraction(1, d.m_P) + sum((mult * b for b, mult in d.contributions), Fraction(0)) / d.m_P


def base_pair_coefficient(f: FibrationFiberDatum) -> Fraction:
    """``delta(p) = 1 - (1 - a_p)/m_p``."""
    return 1 - (1 - f.a_p) / f.m_p


def check_compatible(c: CoverCoeffDatum) -> bool:
    b_st = standard_approximation(c.b).value
    a_st = standard_approximation(c.a).value
    return c.m * (1 - b_st) == 1 - a_st


def ramification_pullback(b, m: int) -> Fraction:
    """Coefficient ``m b - (m - 1)`` upstairs of a point with coefficient ``b``."""
    b = as_fraction(b)
    _unit_interval("b", b)
    _positive("m", m)
    a = m * b - (m - 1)
    if not 0 <= a <= 1:
        raise PreconditionError(f"pullback coefficient {a} outside [0, 1]: inconsistent cover datum")
    return a


# structure certificates

ABELIAN = "Abelian"
HEISENBERG_QUOTIENT = "HeisenbergQuotient"
ABELIAN_OR_HEISENBERG = "AbelianOrHeisenbergQuotient"

CERTIFICATE_TABLE_VERSION = 1


@dataclass(frozen=True)
class CertificateRow:
    case_label: str
    fiber: str
    base: str
    subgroup_kind: str
    rank_bound: int | None
    index_bound: int
    citation: str


@dataclass(frozen=True)
class StructureCertificate:
    case_label: str
    subgroup_kind: str
    rank_bound: int | None
    index_bound: int
    citation: str
    table_version: int = CERTIFICATE_TABLE_VERSION
    heisenberg_k: int | None = None

    @property
    def kind_label(self) -> str:
        if self.subgroup_kind == HEISENBERG_QUOTIENT:
            return self.subgroup_kind
        return f"{self.subgroup_kind}({self.rank_bound})"

    def to_json(self) -> dict:
        out = {"case_label": self.case_label, "subgroup_kind": self.kind_label,
               "rank_bound": self.rank_bound, "index_bound": self.index_bound,
               "citation": self.citation, "table_version": self.table_version}
        if self.heisenberg_k is not None:
            out["heisenberg_k"] = self.heisenberg_k
        return out


ANY = "*"
NON_ELLIPTIC = "non-elliptic"

# first matching row wins
CERTIFICATE_TABLE: tuple[CertificateRow, ...] = (
    CertificateRow(
        "elliptic-fiber/elliptic-base", ELLIPTIC, ELLIPTIC, ABELIAN, 4, 3840,
        "fiber of elliptic type: the pair is klt Calabi-Yau with standard coefficients, "
        "so the klt bound gives a normal abelian subgroup of rank at most 4 and index at most 3840"),
    CertificateRow(
        "sporadic-fiber/elliptic-base", SPORADIC, ELLIPTIC, ABELIAN, 2, 360,
        "fiber of sporadic type over an elliptic base: the pair splits as fiber times base "
        "up to a cover of index at most 6, giving a normal abelian subgroup of rank 2 and index at most 360"),
    CertificateRow(
        "toric-fiber/elliptic-base", TORIC, ELLIPTIC, HEISENBERG_QUOTIENT, None, 864,
        "fiber of toric type over an elliptic base: a normal subgroup of index at most 864 "
        "that is a quotient of a Heisenberg-style group H_k"),
    CertificateRow(
        "elliptic-fiber/other-base", ELLIPTIC, NON_ELLIPTIC, ABELIAN_OR_HEISENBERG, 4, 7200,
        "equimultiple fibration with fiber of elliptic type: a normal subgroup of index at most 7200 "
        "that is abelian of rank at most 4, or a quotient of a Heisenberg-style group H_k"),
    CertificateRow(
        "residually-finite", ANY, NON_ELLIPTIC, ABELIAN, 2, 7200,
        "neither fiber nor base of elliptic type: the group is residually finite and every "
        "compatible cover is rationally connected, so the Cremona bound J(2) = 7200 gives a normal "
        "abelian subgroup of rank at most 2 and index at most 7200"),
)


def _matches(pattern: str, kind: str) -> bool:
    if pattern == ANY:
        return True
    if pattern == NON_ELLIPTIC:
        return kind != ELLIPTIC
    return pattern == kind


def _kind(c) -> str:
    kind = c.kind if isinstance(c, CurvePairClass) else str(c)
    if kind not in (TORIC, ELLIPTIC, SPORADIC):
        raise PreconditionError(f"unknown pair type {kind!r}")
    return kind


def nori_certificate(fiber, base, heisenberg_k: int | None = None) -> StructureCertificate:
    """Structure certificate for the fibration with the given fiber and base types.

    ``fiber`` and ``base`` are :class:`CurvePairClass` values or bare kind
    names.  ``heisenberg_k`` is carried through only for Heisenberg rows.
    """
    fk, bk = _kind(fiber), _kind(base)
    for row in CERTIFICATE_TABLE:
        if _matches(row.fiber, fk) and _matches(row.base, bk):
            k = heisenberg_k if row.subgroup_kind != ABELIAN else None
            return StructureCertificate(row.case_label, row.subgroup_kind, row.rank_bound,
                                        row.index_bound, row.citation, heisenberg_k=k)
    raise AssertionError(f"certificate table has no row for ({fk}, {bk})")


# the two bundle examples


def bundle_pi1(k: int) -> Presentation:
    """Orbifold group of a P^1-bundle over an elliptic curve with its two sections, twist ``k``."""
    return Presentation.parse(f"<a,b,c | [a,b]c^{-k}, [a,c], [b,c]>")


def bundle_quotient_pi1(k: int, m: int) -> Presentation:
    """:func:`bundle_pi1` with the central generator of order ``m``."""
    _positive("m", m)
    return Presentation.parse(f"<a,b,c | [a,b]c^{-k}, [a,c], [b,c], c^{m}>")


__all__ = [
    "AdjunctionPointDatum", "FibrationFiberDatum", "CoverCoeffDatum", "StructureCertificate",
    "CertificateRow", "CERTIFICATE_TABLE", "CERTIFICATE_TABLE_VERSION", "ABELIAN",
    "HEISENBERG_QUOTIENT", "ABELIAN_OR_HEISENBERG", "adjunction_coefficient",
    "base_pair_coefficient", "check_compatible", "ramification_pullback", "nori_certificate",
    "bundle_pi1", "bundle_quotient_pi1",
]
