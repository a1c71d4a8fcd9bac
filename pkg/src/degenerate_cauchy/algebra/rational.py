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
"""Exact rational scalars.

The scalar field is :class:`fractions.Fraction`, which already keeps the
canonical form (reduced, positive denominator, zero as 0/1). This module adds
the checked constructors and the textual format shared by every other module.

1. rat_make: Build a canonical rational from a numerator and a denominator.
2. rat_arith: Field arithmetic selected by an ArithKind.
3. parse_rational: Parse the "p/q" / "p" rendering back into a Rational.
4. render_rational: Canonical "p/q" / "p" rendering.
"""

import logging
import re
from enum import Enum
from fractions import Fraction
from numbers import Rational as _RationalABC

logger = logging.getLogger(__name__)

Rational = Fraction

_RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


# ============================================================================
# Custom Exceptions
# ============================================================================


class ExactRingError(ArithmeticError):
    """Base exception for the exact scalar and polynomial rings."""

    pass


class RationalConstructionError(ExactRingError, ValueError):
    """Raised when a rational cannot be built from the given parts."""

    pass


class RationalDivisionError(ExactRingError, ZeroDivisionError):
    """Raised on division by an exact zero."""

    pass


class ArithKind(str, Enum):
    """Binary operations understood by rat_arith and poly_arith."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def as_rational(value: int | Fraction) -> Rational:
    """Coerce an exact scalar (int or Fraction) to a Rational.

    Floats are refused: every value in this package must be exact.
    """
    if isinstance(value, bool) or not isinstance(value, _RationalABC):
        raise RationalConstructionError(
            f"Expected an exact integer or rational, got {type(value).__name__}"
        )
    return Fraction(value)


def rat_make(num: int, den: int = 1) -> Rational:
    """Build the canonical rational num/den.

    Args:
        num: Arbitrary precision integer numerator.
        den: Non-zero arbitrary precision integer denominator.

    Returns:
        Rational: Reduced form with a positive denominator.

    Raises:
        RationalConstructionError: If den is zero or a part is not an integer.
    """
    for part_name, part in (("numerator", num), ("denominator", den)):
        if isinstance(part, bool) or not isinstance(part, int):
            raise RationalConstructionError(f"{part_name} must be an integer")
    if den == 0:
        raise RationalConstructionError("denominator must be non-zero")
    return Fraction(num, den)


def rat_arith(kind: ArithKind | str, a: Rational, b: Rational) -> Rational:
    """Exact field arithmetic on two rationals."""
    kind = ArithKind(kind)
    a, b = as_rational(a), as_rational(b)
    if kind is ArithKind.ADD:
        return a + b
    if kind is ArithKind.SUB:
        return a - b
    if kind is ArithKind.MUL:
        return a * b
    if b == 0:
        raise RationalDivisionError(f"cannot divide {render_rational(a)} by zero")
    return a / b


def parse_rational(text: str) -> Rational:
    """Parse "p/q" or "p" (optional leading minus) into a canonical Rational.

    Raises:
        RationalConstructionError: If the text is not of that shape or q is 0.
    """
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise RationalConstructionError(
            f"'{text}' is not a rational of the form p/q or p"
        )
    num, den = match.groups()
    return rat_make(int(num), int(den) if den is not None else 1)


def render_rational(value: Rational) -> str:
    """Render as "p/q" with q > 0, or "p" when q = 1."""
    return str(as_rational(value))
