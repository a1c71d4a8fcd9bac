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
"""Truncated formal power series in t.

A Series of order N holds the plain coefficients c_0 ... c_N of
sum c_n t^n + O(t^(N+1)) over either Q (Fraction coefficients) or Q[l, x]
(BiPoly coefficients). Binary operations return the smaller of the two orders.

Arithmetic:
1. series_arith: add / sub / mul (truncated Cauchy convolution).
2. series_ratio: f / g by long division after cancelling t^valuation(g).
3. series_compose: f(g(t)) by Horner's scheme.

Transcendental operations (argument must vanish at t = 0):
4. series_log1p: log(1 + g).
5. series_exp: exp(g).
6. series_pow_lin: (1 + g)^a = exp(a * log(1 + g)) for a ring element a.

Access and builders:
7. series_coeff: The plain coefficient c_n.
8. build_L: (1/l) log(1 + l t), coefficients in Q[l].
9. build_E: (1/l) (exp(l t) - 1), coefficients in Q[l].
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from degenerate_cauchy.algebra.bipoly import ONE, ZERO, BiPoly
from degenerate_cauchy.algebra.rational import ArithKind, as_rational

logger = logging.getLogger(__name__)

Coefficient = BiPoly | Fraction


# ============================================================================
# Custom Exceptions
# ============================================================================


class SeriesError(ArithmeticError):
    """Base exception for truncated power series operations."""

    pass


class ValuationError(SeriesError):
    """Raised when a quotient would need negative powers of t."""

    pass


class NonInvertibleLeadError(SeriesError):
    """Raised when the leading coefficient of a divisor is not a rational."""

    pass


class CompositionError(SeriesError):
    """Raised when the inner series of a composition has a constant term."""

    pass


class SeriesDomainError(SeriesError, ValueError):
    """Raised when exp / log1p / pow_lin get an argument with g(0) != 0."""

    pass


class CoefficientIndexError(SeriesError, IndexError):
    """Raised when a coefficient beyond the truncation order is requested."""

    pass


class Ring(str, Enum):
    """Coefficient rings a Series can live over."""

    RATIONAL = "QQ"
    POLYNOMIAL = "QQ[l,x]"

    @property
    def zero(self) -> Coefficient:
        return ZERO if self is Ring.POLYNOMIAL else Fraction(0)

    @property
    def one(self) -> Coefficient:
        return ONE if self is Ring.POLYNOMIAL else Fraction(1)

    def lift(self, value: Coefficient | int) -> Coefficient:
        if self is Ring.POLYNOMIAL:
            return BiPoly.coerce(value)
        if isinstance(value, BiPoly):
            if not value.is_constant():
                raise SeriesError(f"{value} is not a rational coefficient")
            return value.constant_term()
        return as_rational(value)


def ring_of(value: Coefficient | int) -> Ring:
    return Ring.POLYNOMIAL if isinstance(value, BiPoly) else Ring.RATIONAL


@dataclass(frozen=True)
class Series:
    """Plain coefficients c_0 ... c_N of a truncated power series in t."""

    coeffs: tuple[Coefficient, ...]
    ring: Ring | None = None

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        ring = self.ring
        if ring is None:
            ring = (
                Ring.POLYNOMIAL
                if any(isinstance(c, BiPoly) for c in self.coeffs)
                else Ring.RATIONAL
            )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(ring.lift(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int, ring: Ring = Ring.RATIONAL) -> "Series":
        return cls((ring.zero,) * (order + 1), ring)

    @classmethod
    def constant(
        cls, value: Coefficient | int, order: int, ring: Ring | None = None
    ) -> "Series":
        ring = ring or ring_of(value)
        return cls((ring.lift(value),) + (ring.zero,) * order, ring)

    @classmethod
    def variable(cls, order: int, ring: Ring = Ring.RATIONAL) -> "Series":
        """The series t itself."""
        coeffs = [ring.zero] * (order + 1)
        if order >= 1:
            coeffs[1] = ring.one
        return cls(tuple(coeffs), ring)

    def valuation(self) -> int | None:
        """Index of the first non-zero coefficient, None for the zero series."""
        for index, coeff in enumerate(self.coeffs):
            if coeff:
                return index
        return None

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise CoefficientIndexError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return Series(self.coeffs[: order + 1], self.ring)

    def to_ring(self, ring: Ring) -> "Series":
        if ring is self.ring:
            return self
        return Series(self.coeffs, ring)

    def map(self, fn) -> "Series":
        return Series(tuple(fn(c) for c in self.coeffs))

    def evaluate(self, lambda_value=None, x_value=None) -> "Series":
        """Substitute rationals for l and/or x in every coefficient."""
        if self.ring is Ring.RATIONAL or (lambda_value is None and x_value is None):
            return self
        return self.map(lambda c: c.evaluate(lambda_value, x_value))

    def coeff(self, n: int) -> Coefficient:
        return series_coeff(self, n)

    def __add__(self, other: "Series") -> "Series":
        return series_arith(ArithKind.ADD, self, other)

    def __sub__(self, other: "Series") -> "Series":
        return series_arith(ArithKind.SUB, self, other)

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs), self.ring)

    def __mul__(self, other: "Series | Coefficient | int") -> "Series":
        if isinstance(other, Series):
            return series_arith(ArithKind.MUL, self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: "Series") -> "Series":
        return series_ratio(self, other)

    def __pow__(self, exponent: int) -> "Series":
        return series_power(self, exponent)

    def __call__(self, inner: "Series") -> "Series":
        return series_compose(self, inner)

    def __str__(self) -> str:
        terms = [f"({c})*t^{n}" for n, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.order + 1})"


def _unify(f: Series, g: Series) -> tuple[Ring, tuple, tuple]:
    if f.ring is g.ring:
        return f.ring, f.coeffs, g.coeffs
    ring = Ring.POLYNOMIAL
    return ring, f.to_ring(ring).coeffs, g.to_ring(ring).coeffs


def _convolve(a: tuple, b: tuple, order: int, ring: Ring) -> tuple:
    out = [ring.zero] * (order + 1)
    nonzero_b = [(j, cb) for j, cb in enumerate(b[: order + 1]) if cb]
    for i, ca in enumerate(a[: order + 1]):
        if not ca:
            continue
        for j, cb in nonzero_b:
            if i + j > order:
                break
            out[i + j] = out[i + j] + ca * cb
    return tuple(out)


def series_arith(kind: ArithKind | str, f: Series, g: Series) -> Series:
    """add / sub / mul of two series, truncated to the smaller order."""
    kind = ArithKind(kind)
    ring, a, b = _unify(f, g)
    order = min(f.order, g.order)
    if kind is ArithKind.ADD:
        return Series(tuple(a[n] + b[n] for n in range(order + 1)), ring)
    if kind is ArithKind.SUB:
        return Series(tuple(a[n] - b[n] for n in range(order + 1)), ring)
    if kind is ArithKind.MUL:
        return Series(_convolve(a, b, order, ring), ring)
    raise SeriesError("use series_ratio for division")


def series_scale(f: Series, scalar: Coefficient | int) -> Series:
    """Multiply every coefficient by a ring element."""
    ring = Ring.POLYNOMIAL if isinstance(scalar, BiPoly) else f.ring
    f = f.to_ring(ring)
    scalar = ring.lift(scalar)
    return Series(tuple(c * scalar for c in f.coeffs), ring)


def series_power(f: Series, exponent: int) -> Series:
    """Non-negative integer power by repeated squaring."""
    if exponent < 0:
        raise SeriesError("negative series powers are not supported, use series_ratio")
    result = Series.constant(1, f.order, f.ring)
    base = f
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


def series_ratio(f: Series, g: Series) -> Series:
    """Exact quotient f / g.

    Requires valuation(g) <= valuation(f) and a rational leading coefficient
    of g. The result has order min(order(f), order(g)) - valuation(g).

    Raises:
        ValuationError: If the quotient is not a power series or g is zero.
        NonInvertibleLeadError: If the leading coefficient of g involves l or x.
    """
    ring, a, b = _unify(f, g)
    shift = g.valuation()
    if shift is None:
        raise ValuationError("division by the zero series")
    f_valuation = f.valuation()
    if f_valuation is not None and shift > f_valuation:
        raise ValuationError(
            f"valuation of the divisor ({shift}) exceeds that of the dividend "
            f"({f_valuation})"
        )
    order = min(f.order, g.order) - shift
    if order < 0:
        raise ValuationError(
            f"divisor valuation {shift} leaves no known coefficient of the quotient"
        )
    lead = b[shift]
    if isinstance(lead, BiPoly):
        if not lead.is_constant():
            raise NonInvertibleLeadError(
                f"leading coefficient {lead} of the divisor is not a unit"
            )
        lead = lead.constant_term()
    inverse = 1 / lead
    numer = a[shift : shift + order + 1]
    denom = b[shift : shift + order + 1]
    nonzero_denom = [(k, d) for k, d in enumerate(denom) if k and d]
    quotient: list[Coefficient] = []
    for n in range(order + 1):
        acc = numer[n]
        for k, d in nonzero_denom:
            if k > n:
                break
            acc = acc - d * quotient[n - k]
        quotient.append(acc * inverse)
    return Series(tuple(quotient), ring)


def series_compose(f: Series, g: Series) -> Series:
    """f(g(t)) truncated to the smaller order, by Horner's scheme.

    Raises:
        CompositionError: If g(0) != 0.
    """
    if g.coeffs[0]:
        raise CompositionError(f"inner series has constant term {g.coeffs[0]}")
    ring, a, b = _unify(f, g)
    order = min(f.order, g.order)
    inner = Series(b[: order + 1], ring)
    result = Series.constant(a[order], order, ring)
    for k in range(order - 1, -1, -1):
        product = result * inner
        result = Series((product.coeffs[0] + a[k],) + product.coeffs[1:], ring)
    return result


def _require_no_constant(g: Series, name: str) -> None:
    if g.coeffs[0]:
        raise SeriesDomainError(
            f"{name} needs an argument without constant term, got {g.coeffs[0]}"
        )


def series_log1p(g: Series) -> Series:
    """log(1 + g) for g(0) = 0.

    Uses (1 + g) h' = g', i.e. n h_n = n g_n - sum_{k=1}^{n-1} k h_k g_{n-k}.
    """
    _require_no_constant(g, "log1p")
    ring, coeffs = g.ring, g.coeffs
    h: list[Coefficient] = [ring.zero]
    for n in range(1, g.order + 1):
        acc = coeffs[n] * n
        for k in range(1, n):
            if h[k] and coeffs[n - k]:
                acc = acc - h[k] * coeffs[n - k] * k
        h.append(acc / n)
    return Series(tuple(h), ring)


def series_exp(g: Series) -> Series:
    """exp(g) for g(0) = 0.

    Uses h' = g' h, i.e. n h_n = sum_{k=1}^{n} k g_k h_{n-k}.
    """
    _require_no_constant(g, "exp")
    ring, coeffs = g.ring, g.coeffs
    weighted = [(k, coeffs[k] * k) for k in range(1, g.order + 1) if coeffs[k]]
    h: list[Coefficient] = [ring.one]
    for n in range(1, g.order + 1):
        acc = ring.zero
        for k, kg in weighted:
            if k > n:
                break
            acc = acc + kg * h[n - k]
        h.append(acc / n)
    return Series(tuple(h), ring)


def series_pow_lin(g: Series, a: Coefficient | int) -> Series:
    """(1 + g)^a as exp(a * log1p(g)); a may be any ring element."""
    _require_no_constant(g, "pow_lin")
    return series_exp(series_scale(series_log1p(g), a))


def series_coeff(f: Series, n: int) -> Coefficient:
    """The plain coefficient c_n.

    Raises:
        CoefficientIndexError: If n is negative or beyond the truncation order.
    """
    if n < 0 or n > f.order:
        raise CoefficientIndexError(
            f"coefficient {n} is not known for a series of order {f.order}"
        )
    return f.coeffs[n]


def build_L(order: int) -> Series:  # pylint: disable=invalid-name
    """(1/l) log(1 + l t): c_0 = 0, c_n = (-l)^(n-1) / n."""
    if order < 0:
        raise SeriesError("order must be non-negative")
    coeffs = [ZERO] + [
        BiPoly.monomial(n - 1, 0, Fraction((-1) ** (n - 1), n))
        for n in range(1, order + 1)
    ]
    return Series(tuple(coeffs), Ring.POLYNOMIAL)


def build_E(order: int) -> Series:  # pylint: disable=invalid-name
    """(1/l) (exp(l t) - 1): c_0 = 0, c_n = l^(n-1) / n!."""
    if order < 0:
        raise SeriesError("order must be non-negative")
    coeffs = [ZERO] + [
        BiPoly.monomial(n - 1, 0, Fraction(1, factorial(n)))
        for n in range(1, order + 1)
    ]
    return Series(tuple(coeffs), Ring.POLYNOMIAL)
