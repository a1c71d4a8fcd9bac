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
"""Registry of identities between the degenerate Cauchy family and its relatives.

Notation in the statements: C_{n,l}(x) is the degenerate Cauchy polynomial of
the second kind, C*_{n,l}(x) the degenerate Cauchy polynomial, C_n(x) the Cauchy
polynomial, B_n^(r)(x) the higher-order Bernoulli polynomial, D_n^(r) the
higher-order Daehee number, S1 / S2 the Stirling numbers. A symbol written
without (x) is the number, i.e. its value at x = 0.

Entries whose printed form is known to be wrong carry a second, corrected
variant. Every side is a pure function of n returning an element of Q[l, x].
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from degenerate_cauchy.algebra.bipoly import LAMBDA, ONE, X, ZERO, BiPoly
from degenerate_cauchy.sequences import (
    bernoulli_higher,
    cauchy_poly,
    daehee,
    daehee_higher,
    degen_cauchy2,
    degen_cauchy_star,
    falling_factorial,
    stirling1,
    stirling2,
)

logger = logging.getLogger(__name__)

PRINTED = "printed"
CORRECTED = "corrected"

Side = Callable[[int], BiPoly]


class IdentityRegistryError(LookupError):
    """Raised for an identity id or variant label that is not registered."""

    pass


@dataclass(frozen=True)
class IdentityVariant:
    label: str
    lhs: Side
    rhs: Side


@dataclass(frozen=True)
class IdentitySpec:
    """One registered identity and its variants, printed form first."""

    id: str
    statement: str
    variants: tuple[IdentityVariant, ...]
    n_start: int = 0

    @property
    def labels(self) -> list[str]:
        return [variant.label for variant in self.variants]

    def variant(self, label: str) -> IdentityVariant:
        """Look up a variant; single-variant entries answer every label."""
        if len(self.variants) == 1 and label in (PRINTED, CORRECTED):
            return self.variants[0]
        for variant in self.variants:
            if variant.label == label:
                return variant
        raise IdentityRegistryError(
            f"identity {self.id} has no variant '{label}'; "
            f"available: {', '.join(self.labels)}"
        )

    def select(self, selection: str) -> list[IdentityVariant]:
        """Variants for "printed", "corrected" or "both"."""
        if selection == "both":
            return list(self.variants)
        return [self.variant(selection)]


# ----------------------------------------------------------------------------
# Building blocks


def _at_x(value: BiPoly, x_value: int) -> BiPoly:
    return BiPoly.coerce(value.evaluate(x_value=x_value))


def _second_kind_number(n: int) -> BiPoly:
    return _at_x(degen_cauchy2(n), 0)


def _star_number(n: int) -> BiPoly:
    return _at_x(degen_cauchy_star(n), 0)


def _cauchy_number(n: int) -> BiPoly:
    return _at_x(cauchy_poly(n), 0)


def _lambda_power(k: int) -> BiPoly:
    return LAMBDA**k


def _sum(terms) -> BiPoly:
    total = ZERO
    for term in terms:
        total = total + term
    return total


# ----------------------------------------------------------------------------
# Sides


def _thm1_lhs(n: int) -> BiPoly:
    return _sum(
        degen_cauchy2(m) * _lambda_power(n - m) * stirling2(n, m)
        for m in range(n + 1)
    )


def _thm1_rhs(n: int) -> BiPoly:
    return _sum(
        cauchy_poly(n - m) * _lambda_power(m) * Fraction(comb(n, m), m + 1)
        for m in range(n + 1)
    )


def _thm2_lhs(n: int) -> BiPoly:
    return _sum(
        cauchy_poly(m) * _lambda_power(n - m) * stirling1(n, m)
        for m in range(n + 1)
    )


def _thm2_rhs(n: int) -> BiPoly:
    return _sum(
        degen_cauchy2(m)
        * (-LAMBDA) ** (n - m)
        * Fraction(factorial(n - m) * comb(n, m), n - m + 1)
        for m in range(n + 1)
    )


def _thm3_rhs(constant_term: Side) -> Side:
    def rhs(n: int) -> BiPoly:
        return _sum(
            falling_factorial(m)
            * constant_term(n - k)
            * _lambda_power(k - m)
            * (comb(n, k) * stirling1(k, m))
            for k in range(n + 1)
            for m in range(k + 1)
        )

    return rhs


def _thm4_lhs(n: int) -> BiPoly:
    if n == 0:
        return _second_kind_number(0)
    return _sum(
        _second_kind_number(n - m)
        * _lambda_power(m - k)
        * (comb(n, m) * factorial(k - 1) * (-1) ** (k - 1) * stirling1(m, k))
        for m in range(1, n + 1)
        for k in range(1, m + 1)
    )


def _thm4_rhs(n: int) -> BiPoly:
    return ONE if n <= 1 else ZERO


def _thm5_rhs(bernoulli_term: Side) -> Side:
    def rhs(n: int) -> BiPoly:
        return _sum(
            bernoulli_term(n - m) * _star_number(m) * _lambda_power(n - m) * comb(n, m)
            for m in range(n + 1)
        )

    return rhs


def _diagonal_bernoulli_number(k: int) -> BiPoly:
    return _at_x(bernoulli_higher(k, k), 0)


def _diagonal_bernoulli_at_one(k: int) -> BiPoly:
    return _at_x(bernoulli_higher(k, k), 1)


def _thm6_rhs(n: int) -> BiPoly:
    return _sum(
        _second_kind_number(m) * _lambda_power(n - m) * (comb(n, m) * daehee(n - m))
        for m in range(n + 1)
    )


def _thm7_rhs(n: int) -> BiPoly:
    shifted = degen_cauchy2(n + 1)
    return (_at_x(shifted, 1) - _at_x(shifted, 0)) / (n + 1)


def _thm8_lhs(n: int) -> BiPoly:
    shifted = degen_cauchy_star(n + 1)
    return (_at_x(shifted, 1) - _at_x(shifted, 0)) / (n + 1)


def _thm8_rhs(with_lambda_power: bool) -> Side:
    def rhs(n: int) -> BiPoly:
        return _sum(
            _second_kind_number(k)
            * (_lambda_power(n - k) if with_lambda_power else ONE)
            * (comb(n, k) * daehee_higher(n - k, 2))
            for k in range(n + 1)
        )

    return rhs


def _eq3_rhs(n: int) -> BiPoly:
    return bernoulli_higher(n, n).compose_x(X + 1)


def _eq9_rhs(inner: Callable[[int, int], BiPoly]) -> Side:
    def rhs(m: int) -> BiPoly:
        return _sum(
            inner(m, n) * _lambda_power(m - n) * stirling2(m, n)
            for n in range(m + 1)
        )

    return rhs


def _eq10_rhs(m: int) -> BiPoly:
    return _sum(
        bernoulli_higher(n, n).compose_x(X + 1) * _lambda_power(m - n) * stirling1(m, n)
        for n in range(m + 1)
    )


def _limit_lhs(n: int) -> BiPoly:
    return BiPoly.coerce(degen_cauchy2(n).evaluate(lambda_value=0))


# ----------------------------------------------------------------------------
# Registry


def _single(lhs: Side, rhs: Side) -> tuple[IdentityVariant, ...]:
    return (IdentityVariant(PRINTED, lhs, rhs),)


_REGISTRY: tuple[IdentitySpec, ...] = (
    IdentitySpec(
        id="eq3",
        statement="C_n(x) = B_n^(n)(x+1)",
        variants=_single(cauchy_poly, _eq3_rhs),
    ),
    IdentitySpec(
        id="eq9",
        statement="C_m(x) = sum_n C*_{n,l}(x) l^(m-n) S2(m,n)",
        variants=(
            IdentityVariant(
                PRINTED,
                cauchy_poly,
                _eq9_rhs(lambda m, n: _star_number(m)),
            ),
            IdentityVariant(
                CORRECTED,
                cauchy_poly,
                _eq9_rhs(lambda m, n: degen_cauchy_star(n)),
            ),
        ),
    ),
    IdentitySpec(
        id="eq10",
        statement="C*_{m,l}(x) = sum_n B_n^(n)(x+1) l^(m-n) S1(m,n)",
        variants=_single(degen_cauchy_star, _eq10_rhs),
    ),
    IdentitySpec(
        id="thm1",
        statement=(
            "sum_m l^(n-m) C_{m,l}(x) S2(n,m) = "
            "sum_m binom(n,m) C_{n-m}(x) l^m / (m+1)"
        ),
        variants=_single(_thm1_lhs, _thm1_rhs),
    ),
    IdentitySpec(
        id="thm2",
        statement=(
            "sum_m C_m(x) l^(n-m) S1(n,m) = "
            "sum_m (n-m)!/(n-m+1) binom(n,m) (-l)^(n-m) C_{m,l}(x)"
        ),
        variants=_single(_thm2_lhs, _thm2_rhs),
    ),
    IdentitySpec(
        id="thm3",
        statement=(
            "C_{n,l}(x) = sum_k sum_m binom(n,k) (x)_m C_{n-k,l} l^(k-m) S1(k,m)"
        ),
        variants=(
            IdentityVariant(PRINTED, degen_cauchy2, _thm3_rhs(_cauchy_number)),
            IdentityVariant(CORRECTED, degen_cauchy2, _thm3_rhs(_second_kind_number)),
        ),
    ),
    IdentitySpec(
        id="thm4",
        statement=(
            "C_{0,l} = 1 and sum_m sum_k binom(n,m) C_{n-m,l} (k-1)! (-1)^(k-1) "
            "l^(m-k) S1(m,k) = [n = 1] for n >= 1"
        ),
        variants=_single(_thm4_lhs, _thm4_rhs),
    ),
    IdentitySpec(
        id="thm5",
        statement="C_{n,l} = sum_m binom(n,m) l^(n-m) B_{n-m}^(n-m)(1) C*_{m,l}",
        variants=(
            IdentityVariant(
                PRINTED, _second_kind_number, _thm5_rhs(_diagonal_bernoulli_number)
            ),
            IdentityVariant(
                CORRECTED, _second_kind_number, _thm5_rhs(_diagonal_bernoulli_at_one)
            ),
        ),
    ),
    IdentitySpec(
        id="thm6",
        statement="C*_{n,l} = sum_m binom(n,m) l^(n-m) D_{n-m} C_{m,l}",
        variants=_single(_star_number, _thm6_rhs),
    ),
    IdentitySpec(
        id="thm7",
        statement="C*_{n,l} = (C_{n+1,l}(1) - C_{n+1,l}) / (n+1)",
        variants=_single(_star_number, _thm7_rhs),
    ),
    IdentitySpec(
        id="thm8",
        statement=(
            "(C*_{n+1,l}(1) - C*_{n+1,l}) / (n+1) = "
            "sum_k binom(n,k) C_{k,l} l^(n-k) D_{n-k}^(2)"
        ),
        variants=(
            IdentityVariant(PRINTED, _thm8_lhs, _thm8_rhs(with_lambda_power=False)),
            IdentityVariant(CORRECTED, _thm8_lhs, _thm8_rhs(with_lambda_power=True)),
        ),
    ),
    IdentitySpec(
        id="limit_lambda0",
        statement="C_{n,l}(x) at l = 0 equals C_n(x)",
        variants=_single(_limit_lhs, cauchy_poly),
    ),
)

_BY_ID = {spec.id: spec for spec in _REGISTRY}


def list_identities() -> list[IdentitySpec]:
    """Every registered identity, in registry order."""
    return list(_REGISTRY)


def get_identity(identity_id: str) -> IdentitySpec:
    try:
        return _BY_ID[identity_id]
    except KeyError as e:
        raise IdentityRegistryError(
            f"unknown identity '{identity_id}'; expected one of: "
            f"{', '.join(_BY_ID)}"
        ) from e
