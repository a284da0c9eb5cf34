import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lebesgue.enumeration import enumerate_P, enumerate_Q
from lebesgue.polynomial import Poly
from lebesgue.qseries import (
    TruncatedSeries,
    gaussian_binomial,
    lebesgue_lhs,
    lebesgue_rhs,
    pochhammer,
    series_add,
    series_inverse,
    series_mul,
    verify_identity,
)

A = Poly.symbol("a")


def S(order, coeffs):
    return TruncatedSeries(order, {e: Poly.wrap(c) for e, c in coeffs.items()})


def test_mul_difference_of_squares():
    x = S(3, {0: 1, 1: 1})
    y = S(3, {0: 1, 1: -1})
    assert x * y == S(3, {0: 1, 2: -1})


def test_mul_identity_element():
    x = S(3, {0: 1, 2: 5, 3: -2})
    assert series_mul(x, TruncatedSeries.one(3)) == x


def test_mul_with_symbol_coefficients():
    x = S(3, {0: 1, 1: A})
    y = S(3, {0: 1, 2: A})
    assert x * y == S(3, {0: 1, 1: A, 2: A, 3: A * A})


def test_add_and_order_mismatch():
    assert series_add(S(3, {1: 2}), S(3, {1: 3, 2: 1})) == S(3, {1: 5, 2: 1})
    with pytest.raises(ValueError, match="mismatched truncation orders"):
        series_add(S(3, {}), S(4, {}))


def test_truncation_drops_high_terms():
    x = S(3, {2: 1})
    assert (x * x).coeffs == {}  # q^4 falls off at order 3


def test_inverse_geometric():
    assert series_inverse(S(3, {0: 1, 1: -1})) == S(3, {0: 1, 1: 1, 2: 1, 3: 1})
    assert series_inverse(TruncatedSeries.one(5)) == TruncatedSeries.one(5)


def test_inverse_two_factor_product():
    x = pochhammer(1, 1, 4, count=2)  # (1-q)(1-q^2)
    assert x.inverse() == S(4, {0: 1, 1: 1, 2: 2, 3: 2, 4: 3})


def test_inverse_requires_unit_constant():
    with pytest.raises(ValueError, match="constant term"):
        S(3, {0: 2}).inverse()
    with pytest.raises(ValueError, match="constant term"):
        S(3, {1: 1}).inverse()
    with pytest.raises(ValueError, match="constant term"):
        S(3, {0: A}).inverse()


@settings(max_examples=100)
@given(
    st.lists(st.integers(-9, 9), min_size=0, max_size=20),
    st.sampled_from([1, -1]),
)
def test_inverse_times_self_is_one(tail, c0):
    coeffs = {0: Poly.const(c0)}
    coeffs.update({i + 1: Poly.const(c) for i, c in enumerate(tail) if c})
    x = TruncatedSeries(20, coeffs)
    assert x * x.inverse() == TruncatedSeries.one(20)


def test_inverse_with_symbolic_coefficients():
    x = pochhammer(-A, 1, 10, count=3)  # (1+aq)(1+aq^2)(1+aq^3)
    assert x * x.inverse() == TruncatedSeries.one(10)


def test_pochhammer_examples():
    two = pochhammer(-A, 1, 3, count=2)
    assert two == S(3, {0: 1, 1: A, 2: A, 3: A * A})
    assert pochhammer(1, 1, 4, count=2) == S(4, {0: 1, 1: -1, 2: -1, 3: 1})
    # (-q;q)_inf counts partitions with distinct parts
    assert pochhammer(-1, 1, 5) == S(5, {0: 1, 1: 1, 2: 1, 3: 2, 4: 2, 5: 3})


def test_pochhammer_zero_count_and_errors():
    assert pochhammer(-A, 1, 5, count=0) == TruncatedSeries.one(5)
    with pytest.raises(ValueError, match="shift >= 1"):
        pochhammer(-A, 0, 5)
    with pytest.raises(ValueError, match="step"):
        pochhammer(-A, 1, 5, step=0)
    with pytest.raises(ValueError, match="count"):
        pochhammer(-A, 1, 5, count=-1)


@pytest.mark.parametrize("m", range(4))
@pytest.mark.parametrize("n", range(4))
def test_pochhammer_splitting_rule(m, n):
    # (c;q)_{m+n} = (c;q)_m * (c q^m;q)_n with c = -a q
    whole = pochhammer(-A, 1, 20, count=m + n)
    split = pochhammer(-A, 1, 20, count=m) * pochhammer(-A, 1 + m, 20, count=n)
    assert whole == split


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1, 10) == S(10, {0: 1, 1: 1})
    assert gaussian_binomial(4, 2, 10) == S(10, {0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert gaussian_binomial(5, 0, 10) == TruncatedSeries.one(10)
    with pytest.raises(ValueError, match="0 <= n <= L"):
        gaussian_binomial(3, 4, 10)
    with pytest.raises(ValueError, match="0 <= n <= L"):
        gaussian_binomial(3, -1, 10)


def test_gaussian_binomial_symmetry_and_counts():
    for L in range(9):
        for n in range(L + 1):
            g = gaussian_binomial(L, n, 20)
            assert g == gaussian_binomial(L, L - n, 20)
            total = sum(p.coeff_sum() for p in g.coeffs.values())
            assert total == math.comb(L, n)


def test_gaussian_binomial_base_step():
    assert gaussian_binomial(2, 1, 10, step=2) == S(10, {0: 1, 2: 1})


def test_lebesgue_sides_spot_coefficients():
    lhs, rhs = lebesgue_lhs(6), lebesgue_rhs(6)
    for side in (lhs, rhs):
        assert side.coefficient(0) == Poly.const(1)
        assert side.coefficient(2) == Poly.const(1) + A
        assert side.coefficient(4) == Poly.const(2) + A * 2


def test_lebesgue_sides_agree_with_enumeration():
    lhs, rhs = lebesgue_lhs(12), lebesgue_rhs(12)
    for n in range(13):
        p_poly = Poly()
        for pair in enumerate_P(n):
            p_poly = p_poly + Poly.symbol("a", pair.beta.length)
        q_poly = Poly()
        for pair in enumerate_Q(n):
            q_poly = q_poly + Poly.symbol("a", pair.nu.length)
        assert lhs.coefficient(n) == p_poly
        assert rhs.coefficient(n) == q_poly


@pytest.mark.parametrize("name", ["lebesgue", "rv", "fu"])
def test_identities_hold_at_modest_order(name):
    report = verify_identity(name, 15)
    assert report.equal, report.difference_text()


def test_rowell_identity_small_cases():
    report = verify_identity("rowell", 20, 1)
    assert report.equal
    from lebesgue.qseries import rowell_lhs, rowell_rhs

    expected = S(20, {0: 1, 1: 1, 2: A})
    assert rowell_lhs(20, 1) == expected
    assert rowell_rhs(20, 1) == expected
    assert rowell_lhs(20, 0) == TruncatedSeries.one(20)
    assert rowell_rhs(20, 0) == TruncatedSeries.one(20)


def test_verify_identity_errors():
    with pytest.raises(ValueError, match="unknown identity"):
        verify_identity("nope", 10)
    with pytest.raises(ValueError, match="rowell requires"):
        verify_identity("rowell", 10)
    with pytest.raises(ValueError, match="cap"):
        verify_identity("lebesgue", 41)


def test_first_difference_reports_lowest_mismatch():
    x = S(5, {0: 1, 2: A})
    y = S(5, {0: 1, 2: A + 1, 3: 7})
    assert x.first_difference(y) == (2, (), 0, 1)
    assert x.first_difference(x) is None


def test_text_form():
    assert S(5, {0: 1, 1: 1, 2: A}).text() == "1 + q + a*q^2"
    assert S(5, {0: -1, 3: A * A * -2}).text() == "-1 - 2*a^2*q^3"
    assert TruncatedSeries.zero(4).text() == "0"
    assert S(5, {0: A}).text() == "a"


def test_json_form():
    obj = S(3, {0: 1, 2: A * 3}).to_json_obj()
    assert obj == {
        "order": 3,
        "terms": [
            {"q": 0, "monomial": {}, "coeff": 1},
            {"q": 2, "monomial": {"a": 1}, "coeff": 3},
        ],
    }
