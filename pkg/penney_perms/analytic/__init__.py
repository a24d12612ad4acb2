from .series import (
    SeriesMethod,
    SeriesValue,
    closed_form_kind,
    eval_P,
    eval_P_prime,
    gaussian_integral,
    geometric_tail,
    log_derivative_123,
    monotone_length,
    quadrature_self_test,
    series_sum,
    shifted_gaussian_integral,
    simpson_integral,
)
from .expectations import (
    CLOSED_FORM,
    SERIES,
    expected_F_iota,
    expected_I,
    expected_T,
    hit_time_pmf,
    prob_via_EF,
    variance_T,
)
from .closed_forms import A, B, closed_form_prob
from .probability import ProbEstimate, Verdict, masses, prob_precedes

__all__ = [
    "SeriesMethod",
    "SeriesValue",
    "closed_form_kind",
    "eval_P",
    "eval_P_prime",
    "gaussian_integral",
    "geometric_tail",
    "log_derivative_123",
    "monotone_length",
    "quadrature_self_test",
    "series_sum",
    "shifted_gaussian_integral",
    "simpson_integral",
    "CLOSED_FORM",
    "SERIES",
    "expected_F_iota",
    "expected_I",
    "expected_T",
    "hit_time_pmf",
    "prob_via_EF",
    "variance_T",
    "A",
    "B",
    "closed_form_prob",
    "ProbEstimate",
    "Verdict",
    "masses",
    "prob_precedes",
]
