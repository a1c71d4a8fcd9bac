# SPDX-FileCopyrightText: Copyright (c) 2025 degenerate-cauchy contributors. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Tests for truncated power series."""

import random
from fractions import Fraction
from math import factorial

import pytest

from degenerate_cauchy.algebra.bipoly import LAMBDA, ONE, X, ZERO, BiPoly
from degenerate_cauchy.algebra.series import (
    CoefficientIndexError,
    CompositionError,
    NonInvertibleLeadError,
    Ring,
    Series,
    SeriesDomainError,
    ValuationError,
    build_E,
    build_L,
    series_coeff,
    series_compose,
    series_exp,
    series_log1p,
    series_pow_lin,
    series_ratio,
    series_scale,
)
from degenerate_cauchy.sequences.generators import (
    SequenceId,
    egf_extract,
    falling_factorial,
    gf_for,
)


def _random_series(rng: random.Random, order: int) -> Series:
    """A rational series without constant term."""
    coeffs = [Fraction(0)] + [
        Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order)
    ]
    return Series(tuple(coeffs))


def test_series_infers_ring():
    assert Series((1, 2)).ring is Ring.RATIONAL
    assert Series((ONE, 2)).ring is Ring.POLYNOMIAL
    assert Series((ONE, 2)).coeffs[1] == 2


def test_binary_operations_use_the_smaller_order():
    f = Series.variable(5)
    g = Series.constant(1, 3)
    assert (f + g).order == 3
    assert (f * g).order == 3


def test_ratio_t_over_log1p():
    t = Series.variable(5)
    quotient = series_ratio(t, series_log1p(t))
    assert quotient.order == 4
    assert quotient.coeffs[:4] == (
        Fraction(1),
        Fraction(1, 2),
        Fraction(-1, 12),
        Fraction(1, 24),
    )
    assert egf_extract(quotient, 2) == Fraction(-1, 6)


def test_ratio_errors():
    t = Series.variable(4)
    with pytest.raises(ValuationError):
        series_ratio(Series.constant(1, 4), t)
    with pytest.raises(ValuationError):
        series_ratio(t, Series.zero(4))
    with pytest.raises(NonInvertibleLeadError):
        series_ratio(t, series_scale(t, X))


def test_ratio_then_multiply_recovers_dividend():
    rng = random.Random(7)
    f = _random_series(rng, 8) + Series.constant(3, 8)
    g = _random_series(rng, 8) + Series.constant(-2, 8)
    assert (series_ratio(f, g) * g).coeffs == f.coeffs


def test_exp_of_t_has_unit_egf_values():
    exp_t = series_exp(Series.variable(10))
    assert all(egf_extract(exp_t, n) == 1 for n in range(11))


def test_transcendental_domain_errors():
    shifted = Series.variable(3) + Series.constant(1, 3)
    with pytest.raises(SeriesDomainError):
        series_exp(shifted)
    with pytest.raises(SeriesDomainError):
        series_log1p(shifted)
    with pytest.raises(SeriesDomainError):
        series_pow_lin(shifted, 2)
    with pytest.raises(CompositionError):
        series_compose(Series.variable(3), shifted)


def test_coefficient_bounds():
    f = Series.variable(2)
    assert series_coeff(f, 1) == 1
    with pytest.raises(CoefficientIndexError):
        series_coeff(f, 3)
    with pytest.raises(CoefficientIndexError):
        f.coeff(-1)
    with pytest.raises(CoefficientIndexError):
        f.truncate(5)


def test_build_L_and_build_E_coefficients():
    assert build_L(2).coeffs == (ZERO, ONE, -LAMBDA / 2)
    assert build_E(3).coeffs == (ZERO, ONE, LAMBDA / 2, LAMBDA**2 / 6)
    assert build_L(3).evaluate(lambda_value=0).coeffs == (0, 1, 0, 0)


def test_L_and_E_are_compositional_inverses():
    order = 32
    identity = Series.variable(order, Ring.POLYNOMIAL)
    assert series_compose(build_L(order), build_E(order)).coeffs == identity.coeffs
    assert series_compose(build_E(order), build_L(order)).coeffs == identity.coeffs


def test_pow_lin_with_symbolic_exponent_gives_binomials():
    order = 6
    powered = series_pow_lin(Series.variable(order), X)
    for n in range(order + 1):
        assert powered.coeffs[n] == falling_factorial(n) / factorial(n)


def test_power_matches_repeated_product():
    f = Series((1, 2, 3, 4))
    assert (f**3).coeffs == (f * f * f).coeffs
    assert (f**0).coeffs == (1, 0, 0, 0)


@pytest.mark.parametrize("seed", range(6))
def test_exp_and_log1p_are_mutually_inverse(seed):
    rng = random.Random(seed)
    order = rng.randint(1, 12)
    g = _random_series(rng, order)
    assert series_log1p(series_exp(g) - Series.constant(1, order)).coeffs == g.coeffs
    assert (series_exp(series_log1p(g)) - Series.constant(1, order)).coeffs == g.coeffs


@pytest.mark.parametrize("seed", range(6))
def test_pow_lin_is_additive_in_the_exponent(seed):
    rng = random.Random(100 + seed)
    order = rng.randint(1, 12)
    g = _random_series(rng, order)
    a = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
    b = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
    product = series_pow_lin(g, a) * series_pow_lin(g, b)
    assert product.coeffs == series_pow_lin(g, a + b).coeffs


def test_pow_lin_symbolic_exponent_additivity():
    t = Series.variable(6)
    product = series_pow_lin(t, X) * series_pow_lin(t, LAMBDA)
    assert product.coeffs == series_pow_lin(t, X + LAMBDA).coeffs


def test_operator_overloads_delegate():
    t = Series.variable(4)
    assert (t / t).coeffs == (1, 0, 0, 0)
    assert (build_L(4)(build_E(4))).coeffs == Series.variable(4, Ring.POLYNOMIAL).coeffs
    assert (2 * t).coeffs == (0, 2, 0, 0, 0)
    assert str(Series((1, 0, Fraction(1, 2)))) == "(1)*t^0 + (1/2)*t^2 + O(t^3)"


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("valuation", [0, 1, 2])
def test_multiply_then_ratio_recovers_factor(seed, valuation):
    rng = random.Random(200 + seed)
    order = 10
    f = _random_series(rng, order) + Series.constant(rng.randint(-9, 9), order)
    unit = _random_series(rng, order) + Series.constant(rng.choice([-3, -1, 2, 5]), order)
    g = unit * Series.variable(order) ** valuation
    quotient = series_ratio(f * g, g)
    assert quotient.order == order - valuation
    assert quotient.coeffs == f.coeffs[: order - valuation + 1]


def test_multiply_then_ratio_over_polynomial_coefficients():
    order = 6
    f = series_pow_lin(Series.variable(order), X)
    g = build_L(order + 1) / Series.variable(order + 1)
    assert series_ratio(f * g, g).coeffs == f.coeffs


EXPONENTS = [ONE, X, X + 1, LAMBDA]


@pytest.mark.parametrize("base", ["t", "L"])
@pytest.mark.parametrize("a", EXPONENTS, ids=str)
@pytest.mark.parametrize("b", EXPONENTS, ids=str)
def test_pow_lin_additivity_over_named_exponents(base, a, b):
    order = 8
    g = Series.variable(order) if base == "t" else build_L(order)
    product = series_pow_lin(g, a) * series_pow_lin(g, b)
    assert product.coeffs == series_pow_lin(g, a + b).coeffs


GF_SEQUENCES = [
    "cauchy_poly",
    "cauchy_num",
    "bernoulli",
    "bernoulli_higher:0",
    "bernoulli_higher:3",
    "degen_bernoulli",
    "degen_cauchy_star",
    "degen_cauchy2",
    "daehee",
    "daehee_higher:2",
]


@pytest.mark.parametrize("text", GF_SEQUENCES)
def test_generating_functions_have_no_negative_degrees(text):
    gf = gf_for(SequenceId.parse(text), 12)
    assert gf.order == 12
    for coeff in gf.coeffs:
        for (lambda_degree, x_degree), value in BiPoly.coerce(coeff):
            assert lambda_degree >= 0 and x_degree >= 0
            assert value != 0
