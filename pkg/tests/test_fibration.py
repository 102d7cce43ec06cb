from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbigroups.curve_pairs import (ELLIPTIC, SPORADIC, TORIC, CurveDivisor, PreconditionError,
                                    classify_trichotomy, find_complement, is_standard,
                                    standard_approximation)
from orbigroups.fibration import (CERTIFICATE_TABLE, AdjunctionPointDatum, CoverCoeffDatum,
                                  FibrationFiberDatum, StructureCertificate,
                                  adjunction_coefficient, base_pair_coefficient, bundle_pi1,
                                  bundle_quotient_pi1, check_compatible, nori_certificate,
                                  ramification_pullback)
from orbigroups.fpgroups import AbelianInvariants, abelianization
from orbigroups.nilpotent import (QuotientElement, generators, h_commutator, h_mul,
                                  min_abelian_normal_index, project)

standard = st.integers(1, 40).map(lambda m: 1 - F(1, m))
unit = st.fractions(0, 1, max_denominator=40)


# adjunction

def test_adjunction_examples():
    assert adjunction_coefficient(AdjunctionPointDatum(3)) == F(2, 3)
    assert adjunction_coefficient(AdjunctionPointDatum(1, ((F(1), 1),))) == 1
    assert adjunction_coefficient(AdjunctionPointDatum(2, ((F(1, 2), 1),))) == F(3, 4)


@pytest.mark.parametrize("points, triple", [
    # a T2 point, a T3 point and a curve of coefficient 2/3 through a smooth point
    ([AdjunctionPointDatum(2), AdjunctionPointDatum(3),
      AdjunctionPointDatum(1, ((F(2, 3), 1),))], (F(1, 2), F(2, 3), F(2, 3))),
    ([AdjunctionPointDatum(2), AdjunctionPointDatum(3), AdjunctionPointDatum(4)],
     (F(1, 2), F(2, 3), F(3, 4))),
    # 3/4 also arises from a T2 point met by a curve of coefficient 1/2
    ([AdjunctionPointDatum(2), AdjunctionPointDatum(3),
      AdjunctionPointDatum(2, ((F(1, 2), 1),))], (F(1, 2), F(2, 3), F(3, 4))),
    ([AdjunctionPointDatum(2), AdjunctionPointDatum(3), AdjunctionPointDatum(5)],
     (F(1, 2), F(2, 3), F(4, 5))),
])
def test_sporadic_configurations_from_adjunction(points, triple):
    coeffs = tuple(adjunction_coefficient(p) for p in points)
    assert coeffs == triple
    assert classify_trichotomy(CurveDivisor.of(0, coeffs)).kind == SPORADIC


@pytest.mark.parametrize("m_P, c, before, after, N", [
    (2, F(1, 3), F(1, 2), F(2, 3), 3),
    (3, F(1, 4), F(2, 3), F(3, 4), 4),
    (5, F(1, 6), F(4, 5), F(5, 6), 6),
])
def test_complements_lift_through_adjunction(m_P, c, before, after, N):
    # raising one coefficient of the curve is achieved by a curve of coefficient c through the point
    assert adjunction_coefficient(AdjunctionPointDatum(m_P)) == before
    assert adjunction_coefficient(AdjunctionPointDatum(m_P, ((c, 1),))) == after
    assert c * N == 1


def test_sporadic_complements_match_lifted_coefficients():
    for n, N in ((3, 3), (4, 4), (5, 6)):
        D = CurveDivisor.of(0, (F(1, 2), F(2, 3), 1 - F(1, n)))
        assert find_complement(D, require_coeff_one=False).N == N


@given(st.integers(1, 12), st.lists(st.tuples(standard, st.integers(1, 4)), max_size=3))
def test_adjunction_of_standard_data_is_standard_when_at_most_one(m, contribs):
    value = adjunction_coefficient(AdjunctionPointDatum(m, tuple(contribs)))
    if value <= 1:
        assert is_standard(value)


def test_adjunction_rejects_bad_input():
    with pytest.raises(PreconditionError):
        AdjunctionPointDatum(0)
    with pytest.raises(PreconditionError):
        AdjunctionPointDatum(2, ((F(3, 2), 1),))
    with pytest.raises(PreconditionError):
        AdjunctionPointDatum(2, ((F(1, 2), 0),))


def test_adjunction_json_round_trip():
    d = AdjunctionPointDatum(3, ((F(1, 2), 2),))
    assert AdjunctionPointDatum.from_json(d.to_json()) == d
    assert d.to_json() == {"m_P": 3, "contributions": [{"b": "1/2", "mult": 2}]}


# multiple fibers

def test_base_pair_examples():
    assert base_pair_coefficient(FibrationFiberDatum(1, F(2, 3))) == F(2, 3)
    assert base_pair_coefficient(FibrationFiberDatum(2, F(0))) == F(1, 2)
    assert base_pair_coefficient(FibrationFiberDatum(2, F(1, 2))) == F(3, 4)


def test_fibration_over_three_quarters_and_two_thirds():
    # a double fiber with coefficient 1/2 and a triple fiber with coefficient 0
    base = (base_pair_coefficient(FibrationFiberDatum(2, F(1, 2))),
            base_pair_coefficient(FibrationFiberDatum(3, F(0))))
    assert base == (F(3, 4), F(2, 3))
    assert classify_trichotomy(CurveDivisor.of(0, base)).kind == TORIC


@given(st.integers(1, 50), standard)
def test_base_pair_closure(m, a):
    delta = base_pair_coefficient(FibrationFiberDatum(m, a))
    assert is_standard(delta)
    assert delta >= a


def test_fiber_coefficient_must_be_standard():
    with pytest.raises(PreconditionError):
        FibrationFiberDatum(2, F(3, 5))


# covers

def test_compatibility_examples():
    assert check_compatible(CoverCoeffDatum(2, F(3, 4), F(1, 2)))
    assert check_compatible(CoverCoeffDatum(3, F(2, 3), F(0)))
    assert not check_compatible(CoverCoeffDatum(2, F(1, 2), F(1, 2)))


@given(unit, unit)
def test_trivial_cover_compatibility(b, a):
    expected = standard_approximation(a) == standard_approximation(b)
    assert check_compatible(CoverCoeffDatum(1, b, a)) == expected


def test_pullback_examples():
    for m in range(1, 10):
        assert ramification_pullback(F(1), m) == 1
    assert ramification_pullback(F(3, 4), 2) == F(1, 2)
    with pytest.raises(PreconditionError):
        ramification_pullback(F(1, 2), 3)


@given(standard, st.integers(1, 12))
def test_pullback_round_trip(b, m):
    try:
        a = ramification_pullback(b, m)
    except PreconditionError:
        assert m * b - (m - 1) < 0
        return
    if is_standard(a):
        assert check_compatible(CoverCoeffDatum(m, b, a))


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        ramification_pullback(0.75, 2)


# structure certificates

CLASSES = (TORIC, ELLIPTIC, SPORADIC)

GOLDEN = {
    (ELLIPTIC, ELLIPTIC): ("Abelian(4)", 3840),
    (SPORADIC, ELLIPTIC): ("Abelian(2)", 360),
    (TORIC, ELLIPTIC): ("HeisenbergQuotient", 864),
    (ELLIPTIC, TORIC): ("AbelianOrHeisenbergQuotient(4)", 7200),
    (ELLIPTIC, SPORADIC): ("AbelianOrHeisenbergQuotient(4)", 7200),
    (TORIC, TORIC): ("Abelian(2)", 7200),
    (TORIC, SPORADIC): ("Abelian(2)", 7200),
    (SPORADIC, TORIC): ("Abelian(2)", 7200),
    (SPORADIC, SPORADIC): ("Abelian(2)", 7200),
}


@pytest.mark.parametrize("fiber", CLASSES)
@pytest.mark.parametrize("base", CLASSES)
def test_certificate_grid(fiber, base):
    c = nori_certificate(fiber, base)
    assert isinstance(c, StructureCertificate)
    assert (c.kind_label, c.index_bound) == GOLDEN[fiber, base]
    assert c.rank_bound is None or c.rank_bound <= 4
    assert c.citation


def test_certificate_accepts_classifications():
    fiber = classify_trichotomy(CurveDivisor.of(0, (F(1, 2), F(2, 3), F(3, 4))))
    base = classify_trichotomy(CurveDivisor.of(1, ()))
    c = nori_certificate(fiber, base)
    assert c.case_label == "sporadic-fiber/elliptic-base" and c.index_bound == 360


def test_certificate_table_bounds():
    assert {row.index_bound for row in CERTIFICATE_TABLE} == {360, 864, 3840, 7200}
    assert len({row.case_label for row in CERTIFICATE_TABLE}) == len(CERTIFICATE_TABLE)


def test_heisenberg_parameter_is_carried_only_when_given():
    assert nori_certificate(TORIC, ELLIPTIC).heisenberg_k is None
    c = nori_certificate(TORIC, ELLIPTIC, heisenberg_k=3)
    assert c.heisenberg_k == 3 and c.to_json()["heisenberg_k"] == 3
    assert nori_certificate(SPORADIC, ELLIPTIC, heisenberg_k=3).heisenberg_k is None


def test_certificate_rejects_unknown_kind():
    with pytest.raises(PreconditionError):
        nori_certificate("Hyperbolic", ELLIPTIC)


# bundle groups

@pytest.mark.parametrize("k", range(-6, 7))
def test_bundle_abelianization(k):
    expected = AbelianInvariants((), 3) if k == 0 else AbelianInvariants((abs(k),) if abs(k) > 1 else (), 2)
    assert abelianization(bundle_pi1(k)) == expected


def test_bundle_group_is_two_step_nilpotent():
    for k in (0, 1, 6):
        gens = generators(k)
        for u in gens:
            for v in gens:
                c = h_commutator(u, v)
                assert all(h_mul(c, g) == h_mul(g, c) for g in gens)


def test_quotient_bundle_examples():
    assert abelianization(bundle_quotient_pi1(1, 1)) == AbelianInvariants((), 2)
    assert min_abelian_normal_index(4, 1)[0] == 4
    a, b, _ = generators(2)
    assert project(h_commutator(a ** 2, b ** 2), 8) == QuotientElement(2, 8, 0, 0, 0)
    with pytest.raises(PreconditionError):
        bundle_quotient_pi1(1, 0)
