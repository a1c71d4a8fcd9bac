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
"""The bivariate polynomial ring Q[l, x].

A BiPoly is a sparse map from monomial exponents (i, j), meaning l^i * x^j, to
non-zero rational coefficients. Values are immutable; every operation returns a
new canonical polynomial.

1. BiPoly: The ring element, with operator overloads for +, -, *, ** and
   division by a non-zero rational.
2. poly_arith: add / sub / mul selected by an ArithKind.
3. poly_eval: Partial or full substitution of rational values for l and x.
4. LAMBDA, X, ZERO, ONE: The generators and constants of the ring.
"""

import logging
from collections.abc import Iterator, Mapping
from fractions import Fraction
from numbers import Rational as _RationalABC

from degenerate_cauchy.algebra.rational import (
    ArithKind,
    ExactRingError,
    Rational,
    RationalDivisionError,
    as_rational,
    render_rational,
)

logger = logging.getLogger(__name__)

Monomial = tuple[int, int]
Scalar = int | Fraction

LAMBDA_NAME = "l"
X_NAME = "x"


class NegativeDegreeError(ExactRingError, ValueError):
    """Raised when a monomial with a negative exponent is requested."""

    pass


def _display_order(monomial: Monomial) -> tuple[int, int]:
    # l-degree ascending, x-degree descending: "x + 1/2", "1/2 + 1/2*l"
    return monomial[0], -monomial[1]


def _render_monomial(monomial: Monomial) -> str:
    factors = []
    for name, power in ((LAMBDA_NAME, monomial[0]), (X_NAME, monomial[1])):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    return "*".join(factors)


class BiPoly:
    """An element of Q[l, x] in sparse canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for (i, j), coeff in (terms or {}).items():
            if i < 0 or j < 0:
                raise NegativeDegreeError(
                    f"monomial l^{i}*x^{j} is outside Q[l, x]"
                )
            coeff = as_rational(coeff)
            if coeff:
                clean[(int(i), int(j))] = coeff
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: dict[Monomial, Fraction]) -> "BiPoly":
        poly = cls.__new__(cls)
        poly._terms = {key: value for key, value in terms.items() if value}
        return poly

    @classmethod
    def constant(cls, value: Scalar) -> "BiPoly":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, lambda_degree: int, x_degree: int, coeff: Scalar = 1) -> "BiPoly":
        return cls({(lambda_degree, x_degree): coeff})

    @classmethod
    def coerce(cls, value: "BiPoly | Scalar") -> "BiPoly":
        """Lift a scalar into the ring; polynomials pass through unchanged."""
        if isinstance(value, BiPoly):
            return value
        return cls.constant(value)

    # ------------------------------------------------------------------
    # Inspection

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in the deterministic display order."""
        return sorted(self._terms.items(), key=lambda item: _display_order(item[0]))

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, lambda_degree: int, x_degree: int) -> Fraction:
        return self._terms.get((lambda_degree, x_degree), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(key == (0, 0) for key in self._terms)

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    def degree_lambda(self) -> int:
        """Largest l-exponent; -1 for the zero polynomial."""
        return max((i for i, _ in self._terms), default=-1)

    def degree_x(self) -> int:
        """Largest x-exponent; -1 for the zero polynomial."""
        return max((j for _, j in self._terms), default=-1)

    # ------------------------------------------------------------------
    # Ring operations

    def __add__(self, other: "BiPoly | Scalar") -> "BiPoly":
        if not isinstance(other, BiPoly | int | Fraction):
            return NotImplemented
        other = BiPoly.coerce(other)
        acc = dict(self._terms)
        for key, value in other._terms.items():
            acc[key] = acc.get(key, 0) + value
        return BiPoly._from_clean(acc)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._from_clean({key: -value for key, value in self._terms.items()})

    def __sub__(self, other: "BiPoly | Scalar") -> "BiPoly":
        if not isinstance(other, BiPoly | int | Fraction):
            return NotImplemented
        return self + (-BiPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "BiPoly":
        return BiPoly.coerce(other) - self

    def __mul__(self, other: "BiPoly | Scalar") -> "BiPoly":
        if isinstance(other, BiPoly):
            acc: dict[Monomial, Fraction] = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    key = (i1 + i2, j1 + j2)
                    acc[key] = acc.get(key, 0) + c1 * c2
            return BiPoly._from_clean(acc)
        if isinstance(other, int | Fraction):
            scalar = as_rational(other)
            return BiPoly._from_clean(
                {key: value * scalar for key, value in self._terms.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "BiPoly":
        if isinstance(other, BiPoly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_term()
        if not isinstance(other, int | Fraction):
            return NotImplemented
        if other == 0:
            raise RationalDivisionError(f"cannot divide {self} by zero")
        return self * (1 / as_rational(other))

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise NegativeDegreeError("negative powers leave Q[l, x]")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Substitution

    def evaluate(
        self,
        lambda_value: Scalar | None = None,
        x_value: Scalar | None = None,
    ) -> "BiPoly | Fraction":
        """Substitute rational values for l and/or x.

        A partial substitution returns a BiPoly in the remaining generator; a
        full substitution returns a Rational.
        """
        lam = None if lambda_value is None else as_rational(lambda_value)
        xv = None if x_value is None else as_rational(x_value)
        acc: dict[Monomial, Fraction] = {}
        for (i, j), coeff in self._terms.items():
            if lam is not None:
                coeff, i = coeff * lam**i, 0
            if xv is not None:
                coeff, j = coeff * xv**j, 0
            acc[(i, j)] = acc.get((i, j), 0) + coeff
        result = BiPoly._from_clean(acc)
        if lam is not None and xv is not None:
            return result.constant_term()
        return result

    def compose_x(self, replacement: "BiPoly") -> "BiPoly":
        """Return p(l, q(l, x)) by Horner's scheme in x."""
        replacement = BiPoly.coerce(replacement)
        by_x: dict[int, dict[Monomial, Fraction]] = {}
        for (i, j), coeff in self._terms.items():
            by_x.setdefault(j, {})[(i, 0)] = coeff
        result = ZERO
        for j in range(self.degree_x(), -1, -1):
            result = result * replacement + BiPoly._from_clean(by_x.get(j, {}))
        return result

    # ------------------------------------------------------------------
    # Comparison and rendering

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, _RationalABC) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (monomial, coeff) in enumerate(self.terms()):
            magnitude = abs(coeff)
            body = _render_monomial(monomial)
            if not body:
                text = render_rational(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{render_rational(magnitude)}*{body}"
            if index == 0:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f" - {text}" if coeff < 0 else f" + {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"BiPoly('{self}')"


ZERO = BiPoly()
ONE = BiPoly.constant(1)
LAMBDA = BiPoly.monomial(1, 0)
X = BiPoly.monomial(0, 1)


def poly_arith(kind: ArithKind | str, p: BiPoly, q: BiPoly) -> BiPoly:
    """Exact ring arithmetic; division is not a ring operation here."""
    kind = ArithKind(kind)
    p, q = BiPoly.coerce(p), BiPoly.coerce(q)
    if kind is ArithKind.ADD:
        return p + q
    if kind is ArithKind.SUB:
        return p - q
    if kind is ArithKind.MUL:
        return p * q
    raise ExactRingError("poly_arith supports add, sub and mul only")


def poly_eval(
    p: BiPoly,
    lambda_value: Rational | None = None,
    x_value: Rational | None = None,
) -> BiPoly | Rational:
    """Evaluate p at the given values; see BiPoly.evaluate."""
    return BiPoly.coerce(p).evaluate(lambda_value=lambda_value, x_value=x_value)
