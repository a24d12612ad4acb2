import math
from fractions import Fraction

import pytest

from penney_perms.analytic import (
    A,
    B,
    SeriesMethod,
    Verdict,
    closed_form_kind,
    closed_form_prob,
    eval_P,
    eval_P_prime,
    expected_F_iota,
    expected_I,
    expected_T,
    geometric_tail,
    hit_time_pmf,
    masses,
    monotone_length,
    prob_precedes,
    prob_via_EF,
    quadrature_self_test,
    variance_T,
)
from penney_perms.enumeration import CountTable, b_sequence, a_sequence
from penney_perms.errors import (
    ComparablePatternsError,
    EmptyCountTableError,
    UnsupportedError,
)
from penney_perms.perm_core import Permutation, VincularPattern

P = Permutation.parse

LENGTH_THREE_RACES = {
    ("123", "213"): 0.412,
    ("123", "231"): 0.550,
    ("123", "312"): 0.342,
    ("132", "213"): 0.461,
    ("132", "231"): 0.476,
}


def test_expected_T_of_12_is_e():
    value = expected_T(P("12"))
    assert value.method == SeriesMethod.CLOSED_FORM
    assert str(value).startswith("2.718281828 (closed-form)")


def test_monotone_and_132_expectations():
    assert expected_T(P("123")).value == pytest.approx(7.924367, abs=1e-5)
    assert expected_T(P("321")).value == pytest.approx(7.924367, abs=1e-5)
    assert expected_T(P("132")).value == pytest.approx(6.9264, abs=1e-3)
    assert expected_T(P("231")).value == pytest.approx(expected_T(P("132")).value)


def test_variances():
    assert variance_T(P("123")).value == pytest.approx(27.981, abs=1e-2)
    assert variance_T(P("132")).value == pytest.approx(17.147, abs=1e-2)
    assert variance_T(P("12")).value == pytest.approx(3 * math.e - math.e**2, abs=1e-9)


def test_classical_pattern_series(counter):
    value = expected_T(VincularPattern.parse("1-2-3"), method="series", N=9, counter=counter)
    # Catalan numbers over n!, summed to n=9
    assert value.value == pytest.approx(5.0836, abs=1e-3)
    assert value.value + 2 * value.error_estimate > 5.091 - 1e-3


def test_series_agrees_with_closed_form(counter):
    for text in ("123", "132"):
        closed = expected_T(P(text))
        series = expected_T(P(text), method="series", N=11, counter=counter)
        assert series.method == SeriesMethod.SERIES_TRUNCATION
        # positive terms, so the truncated sum stays below and the tail estimate covers the gap
        assert series.value < closed.value
        assert closed.value - series.value <= 1.5 * series.error_estimate + 1e-3


def test_monotone_closed_form_for_longer_patterns():
    assert eval_P(P("1234")).value == pytest.approx(29.9802, abs=1e-3)
    assert eval_P(P("1234")).value == pytest.approx(eval_P(P("4321")).value)


def test_closed_form_kind():
    assert closed_form_kind(P("123")) == "monotone"
    assert closed_form_kind(P("312")) == "132"
    assert closed_form_kind(P("1324")) is None
    assert monotone_length(P("4321")) == 4
    assert monotone_length(VincularPattern.parse("1-23")) is None


def test_expected_T_without_closed_form():
    with pytest.raises(UnsupportedError):
        expected_T(P("1324"))
    with pytest.raises(UnsupportedError):
        expected_T(P("123"), method="magic")


def test_vincular_series(counter):
    bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]
    value = expected_T(VincularPattern.parse("1-23"), method="series", N=9, counter=counter)
    assert value.value == pytest.approx(math.fsum(b / math.factorial(n) for n, b in enumerate(bell)))
    # the Bell egf at 1 is e^(e-1)
    assert value.value < math.exp(math.e - 1) < value.value + 2 * value.error_estimate


def test_eval_P_on_empty_table():
    with pytest.raises(EmptyCountTableError):
        eval_P(CountTable("avoiders", "123", {}))
    with pytest.raises(EmptyCountTableError):
        eval_P_prime(CountTable("avoiders", "123", {0: 1}))


def test_geometric_tail():
    assert geometric_tail([1.0, 0.5, 0.25, 0.125]) == pytest.approx(0.125)
    assert geometric_tail([1.0, 2.0, 4.0]) == math.inf
    assert geometric_tail([0.0, 1.0]) == math.inf


def test_quadrature_self_test():
    assert quadrature_self_test()


def test_hit_time_pmf(counter):
    pmf = hit_time_pmf(P("123"), 6, counter)
    assert pmf[1] == 0 and pmf[2] == 0
    assert pmf[3] == Fraction(1, 6)
    assert pmf[4] == Fraction(5, 6) - Fraction(17, 24)
    assert sum(pmf.values()) == 1 - Fraction(349, 720)


def test_expected_I_fast_paths():
    forward, _ = expected_F_iota(3)
    assert expected_I(P("123"), P("21")).value == pytest.approx(forward.value)
    assert expected_I(P("21"), P("123")).value == pytest.approx(
        math.sqrt(3) * math.tan(math.sqrt(3) / 2 + math.pi / 6) - 3
    )


def test_expected_I_to_itself():
    value = expected_I(P("132"), P("132"))
    assert value.value == 6.0
    assert value.method == SeriesMethod.CLOSED_FORM


def test_expected_I_series(counter):
    series = expected_I(P("123"), P("132"), N=11, counter=counter)
    assert series.method == SeriesMethod.SERIES_TRUNCATION
    assert series.value > 0


def test_expected_I_rejects_comparable():
    with pytest.raises(ComparablePatternsError):
        expected_I(P("123"), P("12"))


def test_expected_F_iota():
    forward, backward = expected_F_iota(3)
    assert forward.value == pytest.approx(6 * (math.e - 2.5))
    assert backward.value == pytest.approx(6.5093, abs=1e-3)


def test_prob_via_EF():
    assert prob_via_EF(P("123"), P("21")).value == pytest.approx(1 / 6, abs=1e-9)
    assert prob_via_EF(P("21"), P("123")).value == pytest.approx(5 / 6, abs=1e-9)
    assert prob_via_EF(P("1234"), P("21")).value == pytest.approx(1 / 24, abs=1e-6)
    with pytest.raises(UnsupportedError):
        prob_via_EF(P("132"), P("21"))


def test_closed_form_probabilities():
    assert A(1.0).value == pytest.approx(0.41255, abs=1e-4)
    assert closed_form_prob(P("123"), P("213")).value == pytest.approx(A(1.0).value)
    assert closed_form_prob(P("321"), P("231")).value == pytest.approx(A(1.0).value)
    assert closed_form_prob(P("213"), P("123")).value == pytest.approx(1 - A(1.0).value)
    assert closed_form_prob(P("132"), P("231")).value == pytest.approx(
        (math.e**2 - 2 * math.e - 1) / 2
    )
    assert closed_form_prob(P("123"), P("321")).value == 0.5
    assert closed_form_prob(P("123"), P("21")).value == pytest.approx(1 / 6)
    with pytest.raises(UnsupportedError):
        closed_form_prob(P("1324"), P("2143"))


def test_egfs_match_recurrences():
    b, a = b_sequence(40), a_sequence(40)
    assert B(1.0).value == pytest.approx(
        math.fsum(b[n] / math.factorial(n) for n in range(41)), abs=1e-8
    )
    assert A(1.0).value == pytest.approx(
        math.fsum(a[n] / math.factorial(n) for n in range(41)), abs=1e-8
    )


def test_masses_are_consistent():
    sigma_mass, tau_mass, undecided = masses([0, 0, 0, 1], [0, 0, 0, 1], 4, 3)
    assert (sigma_mass, tau_mass, undecided) == (Fraction(1, 6), Fraction(1, 6), Fraction(2, 3))
    with pytest.raises(AssertionError):
        masses([0, 0, 0, 1], [0, 0, 0, 1], 3, 3)


@pytest.mark.parametrize("pair, value", sorted(LENGTH_THREE_RACES.items()))
def test_length_three_probabilities(shared_counter, pair, value):
    estimate = prob_precedes(P(pair[0]), P(pair[1]), N=12, counter=shared_counter)
    low, high = estimate.interval
    assert float(low) - 5e-4 <= value <= float(high) + 5e-4
    assert abs(estimate.estimate - value) < 2e-3


def test_132_vs_231_mass(shared_counter):
    estimate = prob_precedes(P("132"), P("231"), N=12, counter=shared_counter)
    assert abs(float(estimate.sigma_mass) - (math.e**2 - 2 * math.e - 1) / 2) < 1e-3


def test_123_vs_312_favours_tau(shared_counter):
    estimate = prob_precedes(P("123"), P("312"), N=11, counter=shared_counter)
    assert estimate.verdict == Verdict.TAU_CERTIFIED
    assert estimate.favours == "tau"
    assert estimate.estimate == pytest.approx(0.342, abs=2e-3)


@pytest.mark.parametrize("pair", [("123", "132"), ("213", "231"), ("123", "321")])
def test_length_three_ties_are_exact(shared_counter, pair):
    estimate = prob_precedes(P(pair[0]), P(pair[1]), N=10, counter=shared_counter)
    assert estimate.verdict == Verdict.TIE_CERTIFIED_BY_COUNTS
    assert estimate.exact == Fraction(1, 2)
    assert estimate.favours is None
    assert estimate.sigma_mass == estimate.tau_mass


def test_swapped_estimate(shared_counter):
    estimate = prob_precedes(P("123"), P("231"), N=10, counter=shared_counter)
    swapped = estimate.swapped()
    assert swapped.sigma == P("231")
    assert swapped.sigma_mass == estimate.tau_mass
    assert swapped.estimate == pytest.approx(1 - estimate.estimate)
    assert estimate.to_json()["verdict"] == estimate.verdict.value


def test_prob_precedes_rejects_comparable(counter):
    with pytest.raises(ComparablePatternsError):
        prob_precedes(P("123"), P("12"), N=5, counter=counter)
