"""Replayable verification suites, one per family of computations.

Each suite recomputes its quantities from scratch and compares them with
frozen expected values.  ``run_suite("all")`` runs everything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import curve_pairs as cp
from . import fibration as fib
from . import nilpotent as nil
from . import toric_fan as tf
from .fpgroups import (AbelianInvariants, PermGroup, abelianization, analyze, coset_enumerate,
                       from_cycles, subgroup_abelianization)
from .fpgroups.perm import closure, inv, mul

F = Fraction


@dataclass
class SuiteResult:
    name: str
    checks: list[tuple[str, bool, object]] = field(default_factory=list)

    def check(self, description: str, ok: bool, detail: object = None):
        self.checks.append((description, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed,
                "checks": [{"check": d, "passed": ok, **({"detail": x} if x is not None else {})}
                           for d, ok, x in self.checks]}


# builders shared with the tests


def a5_wreath_z2() -> PermGroup:
    """``(A5 x A5) x| Z/2`` acting on two blocks of five points."""
    return PermGroup(10, (from_cycles(10, (0, 1, 2, 3, 4)), from_cycles(10, (0, 1, 2)),
                          from_cycles(10, (0, 5), (1, 6), (2, 7), (3, 8), (4, 9))))


def a5_wreath_normal_subgroups() -> dict[str, PermGroup]:
    left = (from_cycles(10, (0, 1, 2, 3, 4)), from_cycles(10, (0, 1, 2)))
    right = (from_cycles(10, (5, 6, 7, 8, 9)), from_cycles(10, (5, 6, 7)))
    return {"A5x1": PermGroup(10, left), "1xA5": PermGroup(10, right),
            "A5xA5": PermGroup(10, left + right)}


SPORADIC_TRIPLES = {
    (F(1, 2), F(2, 3), F(2, 3)): 12,
    (F(1, 2), F(2, 3), F(3, 4)): 24,
    (F(1, 2), F(2, 3), F(4, 5)): 60,
}

ELLIPTIC_DEGREES = {
    (F(1, 2),) * 4: 2,
    (F(2, 3),) * 3: 3,
    (F(1, 2), F(2, 3), F(5, 6)): 6,
    (F(1, 2), F(3, 4), F(3, 4)): 4,
}

CERTIFICATE_GOLDEN = {
    ("Elliptic", "Elliptic"): ("Abelian(4)", 3840),
    ("Sporadic", "Elliptic"): ("Abelian(2)", 360),
    ("Toric", "Elliptic"): ("HeisenbergQuotient", 864),
    ("Elliptic", "Toric"): ("AbelianOrHeisenbergQuotient(4)", 7200),
    ("Elliptic", "Sporadic"): ("AbelianOrHeisenbergQuotient(4)", 7200),
    ("Toric", "Toric"): ("Abelian(2)", 7200),
    ("Toric", "Sporadic"): ("Abelian(2)", 7200),
    ("Sporadic", "Toric"): ("Abelian(2)", 7200),
    ("Sporadic", "Sporadic"): ("Abelian(2)", 7200),
}


def suite_trichotomy(max_denominator: int = 30, max_cosets: int = 100_000) -> SuiteResult:
    r = SuiteResult("trichotomy")
    sporadic = set()
    mismatched = []
    count = 0
    for D in cp.enumerate_standard_pairs(max_denominator):
        count += 1
        cls = cp.classify_trichotomy(D)
        toric_search = cp.find_complement(D, require_coeff_one=True) is not None
        if (cls.kind == cp.TORIC) != toric_search or toric_search != cp.coeff_one_complement_exists(D):
            mismatched.append([str(c) for c in D.coeffs])
        if cls.kind == cp.SPORADIC:
            sporadic.add(tuple(sorted(D.coeffs)))
    r.check(f"classified {count} divisors", count > 0, count)
    r.check("sporadic set", sporadic == set(SPORADIC_TRIPLES),
            sorted([str(c) for c in t] for t in sporadic))
    r.check("toric iff coefficient-1 complement", not mismatched, mismatched[:5])
    for coeffs, order in SPORADIC_TRIPLES.items():
        P = cp.orbifold_presentation(cp.CurveDivisor.of(0, coeffs)).presentation
        t = coset_enumerate(P, (), max_cosets)
        got = t.index if t.complete else None
        r.check(f"order of triangle group {[str(c) for c in coeffs]}", got == order, got)
    return r


def suite_elliptic(max_cosets: int = 100_000) -> SuiteResult:
    r = SuiteResult("elliptic")
    for coeffs, degree in ELLIPTIC_DEGREES.items():
        D = cp.CurveDivisor.of(0, coeffs)
        got, target = cp.abelianization_cover(D)
        r.check(f"cover degree {[str(c) for c in coeffs]}", got == degree and target.genus == 1, got)
        sub = cp.cover_subgroup(D)
        index, inv = subgroup_abelianization(sub.orbifold.presentation, sub.generators, max_cosets)
        r.check(f"index-{degree} subgroup is Z^2", index == degree and inv == AbelianInvariants((), 2),
                {"index": index, "abelianization": str(inv)})
        r.check("free rank 0 downstairs", abelianization(sub.orbifold.presentation).free_rank == 0)
    return r


def suite_heisenberg() -> SuiteResult:
    r = SuiteResult("heisenberg")
    bad = []
    for k in range(-5, 6):
        a, b, _ = nil.generators(k)
        for m in range(1, 21):
            got = nil.h_commutator(nil.h_pow(a, m), nil.h_pow(b, m)).triple
            if got != (0, 0, k * m * m):
                bad.append((k, m, got))
    r.check("[a^m, b^m] = c^(k m^2) for 1<=m<=20, -5<=k<=5", not bad, bad[:5])
    return r


def suite_oracle(max_len: int = 6) -> SuiteResult:
    r = SuiteResult("oracle")
    for k in range(-2, 4):
        bad = [w for w in nil.words(max_len) if nil.evaluate(w, k).triple != nil.rewrite_normal_form(w, k)]
        r.check(f"closed form = rewriting on words of length <= {max_len}, k={k}", not bad, bad[:3])
    return r


def suite_lattice() -> SuiteResult:
    r = SuiteResult("lattice")
    low = []
    for k in (1, 2, 3):
        for m in range(1, 37):
            idx, _ = nil.min_abelian_normal_index(m, k)
            if idx < nil.sqrt_lower_bound(m, k):
                low.append((m, k, idx))
    r.check("index >= ceil(sqrt(m/k)) for m <= 36, k in 1..3", not low, low)
    got = [nil.min_abelian_normal_index(m, 1)[0] for m in (1, 4, 9, 16)]
    r.check("k=1, m=1,4,9,16 (derived)", got == [1, 4, 9, 16], got)
    return r


def suite_gadgets() -> SuiteResult:
    r = SuiteResult("gadgets")
    for k in range(1, 6):
        g = nil.lemma_42_gadget(k, 1)
        r.check(f"index 4, parameter 4k for k={k}",
                g["ok"] and g["index"] == 4 and g["heisenberg_parameter"] == 4 * k,
                {"index": g["index"], "parameter": g["heisenberg_parameter"]})
    g = nil.lemma_43_gadget(1)
    r.check("<s,t,b^2,c^2> has index 4 in K, abelian rank 4",
            g["ok"] and g["index_in_K"] == 4 and g["subgroup_rank"] == 4,
            {"index_in_K": g["index_in_K"], "abelian_rank": g["subgroup_rank"]})
    g = nil.lemma_44_gadget()
    r.check("index 8 subgroup", g["ok"] and g["index"] == 8, g["index"])
    return r


def suite_cremona() -> SuiteResult:
    r = SuiteResult("cremona")
    G = a5_wreath_z2()
    a = analyze(G)
    r.check("order 7200", a.order == 7200, a.order)
    r.check("derived subgroup of order 3600 is perfect",
            a.derived_series[1:] == (3600, 3600), list(a.derived_series))
    subgroups = a5_wreath_normal_subgroups()
    # the factors are normal in A5 x A5, which is normal in G
    ambient = {"A5x1": subgroups["A5xA5"], "1xA5": subgroups["A5xA5"], "A5xA5": G}
    for name, H in subgroups.items():
        h = analyze(H)
        elements = closure(H.generators, H.degree)
        normal = all(mul(mul(inv(g), x), g) in elements
                     for g in ambient[name].generators for x in H.generators)
        r.check(f"{name} is normal and not metabelian", not h.is_metabelian and normal,
                list(h.derived_series))
    return r


def suite_fans() -> SuiteResult:
    r = SuiteResult("fans")
    f = tf.Fan2D(((1, 0), (0, 1), (-2, -3)))
    r.check("P(1,2,3) cone indices", sorted(c.index for c in map(lambda c: tf.cone_report(*c), f.cones())) == [1, 2, 3])
    g = tf.star_subdivide(f, (0, -1))
    idx = sorted(tf.cone_report(*c).index for c in g.cones())
    r.check("subdivision by (0,-1)", idx == [1, 1, 2, 2], idx)
    c3 = tf.hj_resolve((1, 0), (-1, 3))
    r.check("C_3 resolves to one -3 curve", [e for _, e in c3] == [-3], c3)
    a2 = tf.hj_resolve((1, 0), (1, 3))
    r.check("A_2 resolves to (-2,-2)", [e for _, e in a2] == [-2, -2], a2)
    s2 = tf.hirzebruch(2)
    r.check("Sigma_2 section", tf.self_intersection(s2, s2.position((0, 1))) == -2)
    bad = [x.rays for x in tf.smooth_fans(8) if sum(tf.self_intersections(x)) != 12 - 3 * len(x)]
    r.check("sum D_i^2 = 12 - 3r on smooth fans with <= 8 rays", not bad, bad[:3])
    return r


def suite_coefficients() -> SuiteResult:
    r = SuiteResult("coefficients")
    for n in (3, 4, 5):
        triple = [fib.adjunction_coefficient(fib.AdjunctionPointDatum(m)) for m in (2, 3, n)]
        r.check(f"({2},{3},{n}) adjunction triple", triple == [F(1, 2), F(2, 3), 1 - F(1, n)],
                [str(t) for t in triple])
    lifted = [
        (fib.AdjunctionPointDatum(2, ((F(1, 3), 1),)), F(2, 3)),
        (fib.AdjunctionPointDatum(3, ((F(1, 4), 1),)), F(3, 4)),
        (fib.AdjunctionPointDatum(5, ((F(1, 6), 1),)), F(5, 6)),
    ]
    r.check("complement lifts through singular points",
            all(fib.adjunction_coefficient(d) == v for d, v in lifted))
    std = [F(0)] + [1 - F(1, m) for m in range(2, 13)] + [F(1)]
    closure_ok = all(cp.is_standard(fib.base_pair_coefficient(fib.FibrationFiberDatum(m, a)))
                     for m in range(1, 13) for a in std)
    r.check("base pair coefficients stay standard", closure_ok)
    ident_ok = all(fib.check_compatible(fib.CoverCoeffDatum(1, b, a)) ==
                   (cp.standard_approximation(a) == cp.standard_approximation(b))
                   for a in std for b in std)
    r.check("m = 1 compatibility is equality of standard parts", ident_ok)
    round_trip = True
    for m in range(1, 13):
        for b in std:
            try:
                a = fib.ramification_pullback(b, m)
            except cp.PreconditionError:
                continue
            if cp.is_standard(a) and not fib.check_compatible(fib.CoverCoeffDatum(m, b, a)):
                round_trip = False
    r.check("pullback then compatibility", round_trip)
    return r


def suite_bundles() -> SuiteResult:
    r = SuiteResult("bundles")
    for k in range(0, 9):
        inv = abelianization(fib.bundle_pi1(k))
        expected = AbelianInvariants((), 3) if k == 0 else AbelianInvariants((k,) if k > 1 else (), 2)
        r.check(f"bundle_pi1({k}) abelianization", inv == expected, str(inv))
        va, witness = nil.is_virtually_abelian(k)
        r.check(f"virtually abelian iff k = 0 (k={k})", va == (k == 0))
        if witness is not None:
            r.check(f"witness [a^l,b^l] = c^(k l^2) (k={k})",
                    all(witness.at(l).triple == (0, 0, k * l * l) for l in range(1, 6)))
    for (fiber, base), (kind, bound) in CERTIFICATE_GOLDEN.items():
        cert = fib.nori_certificate(fiber, base)
        r.check(f"certificate ({fiber}, {base})",
                (cert.kind_label, cert.index_bound) == (kind, bound) and bool(cert.citation),
                cert.to_json())
    return r


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "trichotomy": suite_trichotomy,
    "elliptic": suite_elliptic,
    "heisenberg": suite_heisenberg,
    "oracle": suite_oracle,
    "lattice": suite_lattice,
    "gadgets": suite_gadgets,
    "cremona": suite_cremona,
    "fans": suite_fans,
    "coefficients": suite_coefficients,
    "bundles": suite_bundles,
}


def run_suite(name: str) -> list[SuiteResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name]()]
