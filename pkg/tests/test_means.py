"""Power means: quadrature against closed forms, symmetry, error taxonomy."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rhiconst.core import (
    DataError,
    DomainError,
    ExponentPair,
    Interval,
    NumericError,
    QuadratureError,
)
from rhiconst.means import (
    AffinePower,
    EvenExtensionView,
    ExpDecay,
    Monotonicity,
    PowerLaw,
    SampledTable,
    mean_ratio,
    power_mean_closed,
    quad_mean,
    table_from_csv,
)

# M_r(x^g, (0,b)) = b^g / (g r + 1)^(1/r); the frozen values below are that
# formula evaluated by hand.
M_NEG2_X04_0_2 = 0.5901018770673837  # 2^0.4 * sqrt(0.2)
RATIO_ID_1_2 = 1.0183501544346312  # sqrt(7/3) / (3/2)
CUBIC_ID_1_4 = 2.769829128377232  # (255/12)^(1/3)


def test_linear_mean_matches_closed_form():
    m = quad_mean(PowerLaw(1.0), Interval(0.0, 1.0), 1.0)
    assert math.isclose(m.value, 0.5, rel_tol=1e-12)
    assert m.abs_error_estimate <= 1e-10 * (1.0 + m.value)


def test_singular_mean_matches_closed_form():
    m = quad_mean(PowerLaw(0.4), Interval(0.0, 2.0), -2.0)
    assert math.isclose(m.value, M_NEG2_X04_0_2, rel_tol=1e-10)
    assert math.isclose(
        power_mean_closed(0.4, -2.0, 2.0), M_NEG2_X04_0_2, rel_tol=1e-14
    )


def test_mean_ratio_of_identity_on_unit_offset_interval():
    r = mean_ratio(PowerLaw(1.0), Interval(1.0, 2.0), ExponentPair(1.0, 2.0))
    assert math.isclose(r, RATIO_ID_1_2, rel_tol=1e-9)


@given(
    gamma=st.floats(-0.45, 3.0),
    lam=st.floats(0.1, 10.0),
    b=st.floats(0.2, 5.0),
)
def test_scale_covariance(gamma, lam, b):
    # M(x^g, (0, lam*b)) = lam^g * M(x^g, (0, b)) for any order.
    m1 = quad_mean(PowerLaw(gamma), Interval(0.0, b), 2.0)
    m2 = quad_mean(PowerLaw(gamma), Interval(0.0, lam * b), 2.0)
    assert math.isclose(m2.value, lam**gamma * m1.value, rel_tol=1e-8)


@given(
    gamma=st.floats(0.05, 2.0),
    lo=st.floats(0.1, 2.0),
    width=st.floats(0.1, 3.0),
)
def test_means_are_monotone_in_order(gamma, lo, width):
    pair = ExponentPair(1.0, 2.5)
    r = mean_ratio(PowerLaw(gamma), Interval(lo, lo + width), pair)
    assert r >= 1.0 - 1e-9


def test_even_extension_mirror_symmetry():
    view = EvenExtensionView(AffinePower(1.0, 1.0, 1.0))
    a = quad_mean(view, Interval(-0.3, 0.8), 2.0)
    b = quad_mean(view, Interval(-0.8, 0.3), 2.0)
    assert math.isclose(a.value, b.value, rel_tol=1e-10)


def test_even_extension_evaluates_by_reflection():
    view = EvenExtensionView(PowerLaw(2.0))
    x = np.array([-3.0, -1.0, 1.0, 3.0])
    assert np.allclose(view.evaluate(x), [9.0, 1.0, 1.0, 9.0])


def test_table_tracks_sampled_function():
    xs = np.linspace(1.0, 4.0, 301)
    tbl = SampledTable(xs, xs.copy(), Monotonicity.INCREASING)
    m = quad_mean(tbl, Interval(1.0, 4.0), 3.0)
    assert math.isclose(m.value, CUBIC_ID_1_4, rel_tol=1e-4)


def test_table_declared_monotonicity_is_checked():
    xs = np.array([1.0, 2.0, 3.0])
    with pytest.raises(DataError):
        SampledTable(xs, np.array([1.0, 5.0, 2.0]), Monotonicity.INCREASING)
    with pytest.raises(DataError):
        SampledTable(xs, np.array([5.0, 1.0, 2.0]), Monotonicity.DECREASING)


def test_table_refuses_extrapolation():
    xs = np.linspace(1.0, 2.0, 11)
    tbl = SampledTable(xs, xs.copy())
    with pytest.raises(DataError):
        quad_mean(tbl, Interval(0.5, 1.5), 1.0)


def test_zero_values_break_negative_orders():
    xs = np.array([1.0, 2.0, 3.0])
    tbl = SampledTable(xs, np.array([1.0, 0.0, 2.0]))
    assert not tbl.strictly_positive
    with pytest.raises(DomainError):
        quad_mean(tbl, Interval(1.0, 3.0), -1.0)


def test_non_summable_origin_is_rejected():
    f = PowerLaw(-0.6)
    with pytest.raises(DomainError):
        quad_mean(f, Interval(0.0, 1.0), 2.0)  # x^-1.2 at the origin
    assert quad_mean(f, Interval(1.0, 2.0), 2.0).value > 0.0


def test_closed_form_rejects_non_summable():
    with pytest.raises(DomainError):
        power_mean_closed(0.5, -2.0, 1.0)


def test_quadrature_budget_exhaustion():
    with pytest.raises(QuadratureError):
        quad_mean(PowerLaw(-0.99), Interval(0.0, 1.0), 1.0, tol=1e-13, max_levels=2)


def test_mean_overflow_is_reported():
    with pytest.raises(NumericError):
        quad_mean(ExpDecay(1.0), Interval(0.0, 1000.0), -2.0)


def test_subnormal_integral_is_refused():
    # f^2 = e^(-2x) spans only subnormal magnitudes on this interval; the
    # panel sums there are rounding noise and must not become a mean.
    with pytest.raises(NumericError):
        quad_mean(ExpDecay(1.0), Interval(368.0, 1368.0), 2.0)


def test_mean_order_validation():
    with pytest.raises(DomainError):
        quad_mean(PowerLaw(1.0), Interval(0.0, 1.0), 0.0)
    with pytest.raises(DomainError):
        quad_mean(PowerLaw(1.0), Interval(0.0, 1.0), math.inf)
    with pytest.raises(DomainError):
        quad_mean(PowerLaw(1.0), Interval(0.0, 1.0), 1.0, tol=2.0)


def test_describe_strings_round_trip_the_parameters():
    assert PowerLaw(0.5).describe() == "pow:gamma=0.5"
    assert AffinePower(2.0, 3.0, 0.5).describe() == "affpow:a=2,gamma=3,c=0.5"
    assert ExpDecay(1.5).describe() == "expdecay:lambda=1.5"


def test_table_from_csv_round_trip(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("x,f\n1.0,2.0\n2.0,3.0\n3.0,5.5\n")
    tbl = table_from_csv(str(path), Monotonicity.INCREASING)
    assert tbl.domain == (1.0, 3.0)
    assert tbl.monotonicity is Monotonicity.INCREASING
    assert np.allclose(tbl.fs, [2.0, 3.0, 5.5])


@pytest.mark.parametrize(
    "body",
    [
        "a,b\n1.0,2.0\n",  # wrong header
        "x,f\n1.0\n",  # missing column
        "x,f\none,2.0\n",  # non-numeric
        "x,f\n",  # no data rows
    ],
)
def test_table_from_csv_rejects_malformed_input(tmp_path, body):
    path = tmp_path / "bad.csv"
    path.write_text(body)
    with pytest.raises(DataError):
        table_from_csv(str(path))


def test_table_from_csv_missing_file():
    with pytest.raises(DataError):
        table_from_csv("/nonexistent/table.csv")
