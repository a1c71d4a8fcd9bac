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
"""Tests for the exact rational scalars."""

from fractions import Fraction

import pytest

from degenerate_cauchy.algebra.rational import (
    ArithKind,
    ExactRingError,
    RationalConstructionError,
    RationalDivisionError,
    as_rational,
    parse_rational,
    rat_arith,
    rat_make,
    render_rational,
)


@pytest.mark.parametrize(
    ("num", "den", "expected"),
    [
        (2, 4, Fraction(1, 2)),
        (3, -6, Fraction(-1, 2)),
        (0, 7, Fraction(0)),
        (10**40, 10**39, Fraction(10)),
    ],
)
def test_rat_make_is_canonical(num, den, expected):
    value = rat_make(num, den)
    assert value == expected
    assert value.denominator > 0


def test_rat_make_rejects_zero_denominator():
    with pytest.raises(RationalConstructionError):
        rat_make(1, 0)


@pytest.mark.parametrize("bad", [1.5, True, "3"])
def test_rat_make_rejects_non_integers(bad):
    with pytest.raises(RationalConstructionError):
        rat_make(bad, 1)


def test_as_rational_refuses_floats():
    with pytest.raises(RationalConstructionError):
        as_rational(0.5)
    assert as_rational(3) == Fraction(3)


def test_rat_arith():
    half, third = Fraction(1, 2), Fraction(1, 3)
    assert rat_arith(ArithKind.ADD, half, third) == Fraction(5, 6)
    assert rat_arith("sub", half, third) == Fraction(1, 6)
    assert rat_arith("mul", half, third) == Fraction(1, 6)
    assert rat_arith("div", half, third) == Fraction(3, 2)


def test_rat_arith_division_by_zero():
    with pytest.raises(RationalDivisionError) as excinfo:
        rat_arith("div", Fraction(1), Fraction(0))
    assert isinstance(excinfo.value, ZeroDivisionError)
    assert isinstance(excinfo.value, ExactRingError)


@pytest.mark.parametrize(
    ("text", "expected"),
    [("1/2", Fraction(1, 2)), ("-4/6", Fraction(-2, 3)), ("7", Fraction(7)), (" 0/1 ", Fraction(0))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1/", "a/b", "1/0", "0.5", "--1"])
def test_parse_rational_rejects(text):
    with pytest.raises(RationalConstructionError):
        parse_rational(text)


def test_render_rational():
    assert render_rational(Fraction(-2, 4)) == "-1/2"
    assert render_rational(Fraction(6, 3)) == "2"
    assert render_rational(0) == "0"
