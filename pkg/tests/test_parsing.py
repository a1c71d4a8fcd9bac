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
"""Tests for the rendered polynomial parser."""

from fractions import Fraction

import pytest

from degenerate_cauchy.algebra.bipoly import LAMBDA, X, BiPoly
from degenerate_cauchy.algebra.parsing import PolynomialSyntaxError, parse_bipoly


@pytest.mark.parametrize(
    "poly",
    [
        X + Fraction(1, 2),
        -Fraction(1, 6) - Fraction(1, 6) * LAMBDA**2,
        Fraction(1, 2) * X**2 - Fraction(1, 12),
        -LAMBDA * X**3 + 7 * LAMBDA**2 - 1,
        BiPoly(),
    ],
)
def test_parse_inverts_rendering(poly):
    if poly.is_zero():
        assert parse_bipoly("0") == poly
    else:
        assert parse_bipoly(str(poly)) == poly


def test_parse_accepts_loose_spacing():
    assert parse_bipoly("x+1/2") == X + Fraction(1, 2)
    assert parse_bipoly("-3/4*l*x^2") == -Fraction(3, 4) * LAMBDA * X**2


@pytest.mark.parametrize("text", ["x +", "y", "1/0", "2**x", "", "l^"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_bipoly(text)
