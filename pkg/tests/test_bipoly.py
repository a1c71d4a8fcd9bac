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
"""Tests for the polynomial ring Q[l, x]."""

import random
from fractions import Fraction

import pytest

from degenerate_cauchy.algebra.bipoly import (
    LAMBDA,
    ONE,
    X,
    ZERO,
    BiPoly,
    NegativeDegreeError,
    poly_arith,
    poly_eval,
)
from degenerate_cauchy.algebra.rational import ExactRingError, RationalDivisionError

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


BOUND = 10**6


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-BOUND, BOUND), rng.randint(1, BOUND))


def _random_poly(rng: random.Random) -> BiPoly:
    """Up to 8 terms, degree <= 8 in each generator."""
    return BiPoly(
        {
            (rng.randint(0, 8), rng.randint(0, 8)): _random_rational(rng)
            for _ in range(rng.randint(0, 8))
        }
    )


def test_zero_coefficients_are_dropped():
    p = BiPoly({(0, 0): 0, (1, 2): Fraction(3, 4)})
    assert len(p) == 1
    assert (X - X).is_zero()
    assert str(ZERO) == "0"


def test_negative_degree_rejected():
    with pytest.raises(NegativeDegreeError):
        BiPoly.monomial(-1, 0)


@pytest.mark.parametrize(
    ("poly", "text"),
    [
        (X + HALF, "x + 1/2"),
        (HALF + HALF * LAMBDA, "1/2 + 1/2*l"),
        (-SIXTH - SIXTH * LAMBDA**2, "-1/6 - 1/6*l^2"),
        (HALF * X**2 - Fraction(1, 12), "1/2*x^2 - 1/12"),
        (X + (LAMBDA + 1) / 2, "x + 1/2 + 1/2*l"),
        (-LAMBDA * X, "-l*x"),
        (ONE, "1"),
    ],
)
def test_canonical_rendering(poly, text):
    assert str(poly) == text


def test_ring_operations():
    assert (X + 1) * (X - 1) == X**2 - 1
    assert (LAMBDA + X) ** 2 == LAMBDA**2 + 2 * LAMBDA * X + X**2
    assert 3 - X == -(X - 3)
    assert (2 * X) / 4 == HALF * X
    assert X**0 == ONE


def test_division_by_zero():
    with pytest.raises(RationalDivisionError):
        X / 0


def test_equality_with_rationals():
    assert ONE == 1
    assert BiPoly.constant(HALF) == HALF
    assert X != 0
    assert hash(BiPoly.constant(HALF)) == hash(HALF)


def test_evaluate_partial_and_full():
    p = X**2 * LAMBDA + 3 * X - LAMBDA
    assert p.evaluate(lambda_value=0) == 3 * X
    assert p.evaluate(x_value=1) == 3 + ZERO
    assert p.evaluate(lambda_value=2, x_value=HALF) == Fraction(1, 2) + Fraction(3, 2) - 2
    assert isinstance(p.evaluate(lambda_value=2, x_value=HALF), Fraction)
    assert poly_eval(p, lambda_value=1) == X**2 + 3 * X - 1


def test_compose_x():
    assert (X**2).compose_x(X + 1) == X**2 + 2 * X + 1
    assert (LAMBDA * X).compose_x(X - LAMBDA) == LAMBDA * X - LAMBDA**2
    assert BiPoly.constant(5).compose_x(X + 1) == 5


def test_degrees():
    p = LAMBDA**3 * X + X**2
    assert p.degree_lambda() == 3
    assert p.degree_x() == 2
    assert ZERO.degree_x() == -1


def test_poly_arith():
    assert poly_arith("add", X, ONE) == X + 1
    assert poly_arith("sub", X, X).is_zero()
    assert poly_arith("mul", X, LAMBDA) == BiPoly.monomial(1, 1)
    with pytest.raises(ExactRingError):
        poly_arith("div", X, ONE)


@pytest.mark.parametrize("seed", range(10))
def test_ring_axioms_on_random_polynomials(seed):
    rng = random.Random(seed)
    p, q, r = _random_poly(rng), _random_poly(rng), _random_poly(rng)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p + (-p) == ZERO
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)


@pytest.mark.parametrize("seed", range(20))
def test_evaluation_is_a_ring_homomorphism(seed):
    rng = random.Random(1000 + seed)
    p, q = _random_poly(rng), _random_poly(rng)
    a, b = _random_rational(rng), _random_rational(rng)
    assert poly_eval(p * q, a, b) == poly_eval(p, a, b) * poly_eval(q, a, b)
    assert poly_eval(p + q, a, b) == poly_eval(p, a, b) + poly_eval(q, a, b)
    assert poly_eval(p * q, lambda_value=a) == poly_eval(p, lambda_value=a) * poly_eval(
        q, lambda_value=a
    )
    assert poly_eval(p * q, x_value=b) == poly_eval(p, x_value=b) * poly_eval(q, x_value=b)
