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
"""Generating functions and exact values of the named sequences.

Every sequence a_n defined by sum a_n t^n / n! is read off its generating
function with egf_extract (n! times the plain coefficient). The generating
functions are built only from t, L = (1/l) log(1 + l t) and the series engine,
so all values are genuine polynomials in l and x.

Generating functions (each returns the first `order` + 1 plain coefficients):
1. cauchy_gf:             t / log(1+t) * (1+t)^x
2. bernoulli_higher_gf:   (t / (e^t - 1))^r * e^(x t)
3. degen_bernoulli_gf:    t / (e^L - 1) * e^(x L)
4. degen_cauchy_star_gf:  L / log(1+L) * (1+L)^x
5. degen_cauchy2_gf:      t / log(1+L) * (1+L)^x
6. daehee_gf:             (log(1+t) / t)^r

Values:
7. cauchy_poly, cauchy_num, bernoulli_higher, degen_bernoulli,
   degen_cauchy_star, degen_cauchy2, daehee, daehee_higher, falling_factorial
8. sequence_value / sequence_table: Values addressed by SequenceId, optionally
   specialized at rational l and x.
"""

import logging
import threading
import time
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from degenerate_cauchy.algebra.bipoly import ONE, X, BiPoly
from degenerate_cauchy.algebra.series import (
    Series,
    build_L,
    series_coeff,
    series_exp,
    series_log1p,
    series_pow_lin,
    series_ratio,
    series_scale,
)
from degenerate_cauchy.sequences.stirling import (
    stirling1,
    stirling1_row,
    stirling2,
    stirling2_row,
)

logger = logging.getLogger(__name__)


# ============================================================================
# Custom Exceptions
# ============================================================================


class SequenceError(ValueError):
    """Base exception for sequence lookups."""

    pass


class UnknownSequenceError(SequenceError):
    """Raised for a sequence name or parameter that is not supported."""

    pass


class SequenceIndexError(SequenceError):
    """Raised for a negative sequence index."""

    pass


# ============================================================================
# Sequence identifiers
# ============================================================================


class SequenceTag(str, Enum):
    """Named sequences. Tags marked (param) take an integer after a colon."""

    CAUCHY_POLY = "cauchy_poly"
    CAUCHY_NUM = "cauchy_num"
    BERNOULLI = "bernoulli"
    BERNOULLI_HIGHER = "bernoulli_higher"  # (param) order r >= 0
    DEGEN_BERNOULLI = "degen_bernoulli"
    DEGEN_CAUCHY_STAR = "degen_cauchy_star"
    DEGEN_CAUCHY2 = "degen_cauchy2"
    STIRLING1 = "stirling1"  # (param) column k >= 0
    STIRLING2 = "stirling2"  # (param) column k >= 0
    STIRLING1_ROW = "stirling1_row"
    STIRLING2_ROW = "stirling2_row"
    DAEHEE = "daehee"
    DAEHEE_HIGHER = "daehee_higher"  # (param) order r >= 1
    FALLING_FACTORIAL = "falling_factorial"


_REQUIRED_PARAM_MINIMUM = {
    SequenceTag.BERNOULLI_HIGHER: 0,
    SequenceTag.DAEHEE_HIGHER: 1,
    SequenceTag.STIRLING1: 0,
    SequenceTag.STIRLING2: 0,
}
_ROW_TAGS = {
    SequenceTag.STIRLING1: SequenceTag.STIRLING1_ROW,
    SequenceTag.STIRLING2: SequenceTag.STIRLING2_ROW,
}


@dataclass(frozen=True)
class SequenceId:
    """A named sequence together with its integer parameter, if any."""

    tag: SequenceTag
    param: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "tag", SequenceTag(self.tag))
        minimum = _REQUIRED_PARAM_MINIMUM.get(self.tag)
        if minimum is not None:
            if self.param is None or self.param < minimum:
                hint = f"e.g. {self.tag.value}:{max(minimum, 1)}"
                if self.tag in _ROW_TAGS:
                    hint += f", or {_ROW_TAGS[self.tag].value} for the row polynomial"
                raise UnknownSequenceError(
                    f"{self.tag.value} needs an integer parameter >= {minimum}, {hint}"
                )
        elif self.param is not None:
            raise UnknownSequenceError(f"{self.tag.value} takes no parameter")

    @classmethod
    def parse(cls, text: str) -> "SequenceId":
        """Parse "name" or "name:param"."""
        name, _, param_text = text.strip().partition(":")
        try:
            tag = SequenceTag(name)
        except ValueError as e:
            known = ", ".join(t.value for t in SequenceTag)
            raise UnknownSequenceError(
                f"unknown sequence '{name}'; expected one of: {known}"
            ) from e
        param = None
        if param_text:
            try:
                param = int(param_text)
            except ValueError as e:
                raise UnknownSequenceError(
                    f"sequence parameter must be an integer, got '{param_text}'"
                ) from e
        return cls(tag, param)

    @property
    def name(self) -> str:
        if self.param is None:
            return self.tag.value
        return f"{self.tag.value}:{self.param}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SequenceValue:
    """The exact value of sequence `seq` at index `n`."""

    seq: SequenceId
    n: int
    value: BiPoly


# ============================================================================
# Generating functions
# ============================================================================


def egf_extract(f: Series, n: int) -> BiPoly:
    """n! times the plain coefficient of t^n."""
    return BiPoly.coerce(series_coeff(f, n) * factorial(n))


def _check_order(order: int) -> None:
    if order < 0:
        raise SequenceIndexError(f"series order must be non-negative, got {order}")


def cauchy_gf(order: int) -> Series:
    """t / log(1+t) * (1+t)^x."""
    _check_order(order)
    t = Series.variable(order + 1)
    return series_ratio(t, series_log1p(t)) * series_pow_lin(t, X)


def bernoulli_higher_gf(r: int, order: int) -> Series:
    """(t / (e^t - 1))^r * e^(x t)."""
    _check_order(order)
    t = Series.variable(order + 1)
    expm1 = series_exp(t) - Series.constant(1, order + 1)
    base = series_ratio(t, expm1)
    return base**r * series_exp(series_scale(t, X))


def degen_bernoulli_gf(order: int) -> Series:
    """t / ((1 + l t)^(1/l) - 1) * (1 + l t)^(x/l), with (1 + l t)^(1/l) = e^L."""
    _check_order(order)
    t = Series.variable(order + 1)
    big_l = build_L(order + 1)
    expm1 = series_exp(big_l) - Series.constant(1, order + 1)
    return series_ratio(t, expm1) * series_exp(series_scale(big_l, X))


def degen_cauchy_star_gf(order: int) -> Series:
    """L / log(1+L) * (1+L)^x."""
    _check_order(order)
    big_l = build_L(order + 1)
    return series_ratio(big_l, series_log1p(big_l)) * series_pow_lin(big_l, X)


def degen_cauchy2_gf(order: int) -> Series:
    """t / log(1+L) * (1+L)^x."""
    _check_order(order)
    t = Series.variable(order + 1)
    big_l = build_L(order + 1)
    return series_ratio(t, series_log1p(big_l)) * series_pow_lin(big_l, X)


def daehee_gf(order: int, r: int = 1) -> Series:
    """(log(1+t) / t)^r."""
    _check_order(order)
    t = Series.variable(order + 1)
    return series_ratio(series_log1p(t), t) ** r


def gf_for(seq_id: SequenceId, order: int) -> Series:
    """Generating function of a GF-backed sequence, with coefficients 0..order.

    Raises:
        UnknownSequenceError: For sequences defined without a generating
            function here (Stirling triangles, falling factorials).
    """
    tag = seq_id.tag
    if tag in (SequenceTag.CAUCHY_POLY, SequenceTag.CAUCHY_NUM):
        gf = cauchy_gf(order)
        return gf.evaluate(x_value=0) if tag is SequenceTag.CAUCHY_NUM else gf
    if tag is SequenceTag.BERNOULLI:
        return bernoulli_higher_gf(1, order)
    if tag is SequenceTag.BERNOULLI_HIGHER:
        return bernoulli_higher_gf(seq_id.param, order)
    if tag is SequenceTag.DEGEN_BERNOULLI:
        return degen_bernoulli_gf(order)
    if tag is SequenceTag.DEGEN_CAUCHY_STAR:
        return degen_cauchy_star_gf(order)
    if tag is SequenceTag.DEGEN_CAUCHY2:
        return degen_cauchy2_gf(order)
    if tag is SequenceTag.DAEHEE:
        return daehee_gf(order)
    if tag is SequenceTag.DAEHEE_HIGHER:
        return daehee_gf(order, seq_id.param)
    raise UnknownSequenceError(f"{seq_id} has no generating function")


# ============================================================================
# Tables
# ============================================================================


def falling_factorial(n: int) -> BiPoly:
    """(x)_n = x (x-1) ... (x-n+1); (x)_0 = 1."""
    if n < 0:
        raise SequenceIndexError(f"falling factorial index must be >= 0, got {n}")
    result = ONE
    for i in range(n):
        result = result * (X - i)
    return result


def _row_polynomial(row: list[int]) -> BiPoly:
    return BiPoly({(0, k): value for k, value in enumerate(row)})


def _compute_table(seq_id: SequenceId, n_max: int) -> list[BiPoly]:
    tag = seq_id.tag
    if tag is SequenceTag.FALLING_FACTORIAL:
        return [falling_factorial(n) for n in range(n_max + 1)]
    if tag in (SequenceTag.STIRLING1_ROW, SequenceTag.STIRLING2_ROW):
        row = stirling1_row if tag is SequenceTag.STIRLING1_ROW else stirling2_row
        return [_row_polynomial(row(n)) for n in range(n_max + 1)]
    if tag in (SequenceTag.STIRLING1, SequenceTag.STIRLING2):
        entry = stirling1 if tag is SequenceTag.STIRLING1 else stirling2
        return [BiPoly.constant(entry(n, seq_id.param)) for n in range(n_max + 1)]
    gf = gf_for(seq_id, n_max)
    return [egf_extract(gf, n) for n in range(n_max + 1)]


class SequenceTables:
    """Per-sequence value tables, recomputed at a larger order when needed.

    The value at index n does not depend on the truncation order once the order
    is at least n, so a longer table always serves shorter requests.
    """

    def __init__(self, compute: Callable[[SequenceId, int], list[BiPoly]]):
        self._compute = compute
        self._tables: dict[SequenceId, list[BiPoly]] = {}
        self._locks: dict[SequenceId, threading.Lock] = {}
        self._guard = threading.Lock()

    def _lock_for(self, seq_id: SequenceId) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(seq_id, threading.Lock())

    def get(self, seq_id: SequenceId, n: int) -> BiPoly:
        if n < 0:
            raise SequenceIndexError(f"{seq_id}: index must be >= 0, got {n}")
        table = self._tables.get(seq_id)
        if table is None or n >= len(table):
            with self._lock_for(seq_id):
                table = self._tables.get(seq_id)
                if table is None or n >= len(table):
                    started = time.perf_counter()
                    table = self._compute(seq_id, n)
                    self._tables[seq_id] = table
                    logger.debug(
                        f"{seq_id} table computed up to n={n} in "
                        f"{time.perf_counter() - started:.3f}s"
                    )
        return table[n]

    def clear(self) -> None:
        with self._guard:
            self._tables.clear()


SEQUENCE_TABLES = SequenceTables(_compute_table)


def _value(tag: SequenceTag, n: int, param: int | None = None) -> BiPoly:
    return SEQUENCE_TABLES.get(SequenceId(tag, param), n)


def cauchy_poly(n: int) -> BiPoly:
    """C_n(x)."""
    return _value(SequenceTag.CAUCHY_POLY, n)


def cauchy_num(n: int) -> Fraction:
    """C_n = C_n(0)."""
    return _value(SequenceTag.CAUCHY_NUM, n).constant_term()


def bernoulli_higher(n: int, r: int) -> BiPoly:
    """B_n^(r)(x); r = 0 gives x^n."""
    return _value(SequenceTag.BERNOULLI_HIGHER, n, r)


def degen_bernoulli(n: int) -> BiPoly:
    """beta_{n,l}(x)."""
    return _value(SequenceTag.DEGEN_BERNOULLI, n)


def degen_cauchy_star(n: int) -> BiPoly:
    """C*_{n,l}(x)."""
    return _value(SequenceTag.DEGEN_CAUCHY_STAR, n)


def degen_cauchy2(n: int) -> BiPoly:
    """C_{n,l}(x), the degenerate Cauchy polynomial of the second kind."""
    return _value(SequenceTag.DEGEN_CAUCHY2, n)


def daehee(n: int) -> Fraction:
    """D_n."""
    return _value(SequenceTag.DAEHEE, n).constant_term()


def daehee_higher(n: int, r: int) -> Fraction:
    """D_n^(r)."""
    return _value(SequenceTag.DAEHEE_HIGHER, n, r).constant_term()


def sequence_value(
    seq_id: SequenceId,
    n: int,
    lambda_value: Fraction | None = None,
    x_value: Fraction | None = None,
) -> SequenceValue:
    """The value at n, with l and/or x optionally replaced by rationals."""
    value = SEQUENCE_TABLES.get(seq_id, n)
    if lambda_value is not None or x_value is not None:
        value = BiPoly.coerce(value.evaluate(lambda_value, x_value))
    return SequenceValue(seq=seq_id, n=n, value=value)


def sequence_table(
    seq_id: SequenceId,
    n_max: int,
    lambda_value: Fraction | None = None,
    x_value: Fraction | None = None,
) -> list[SequenceValue]:
    """Values for n = 0 ... n_max."""
    if n_max < 0:
        raise SequenceIndexError(f"n_max must be >= 0, got {n_max}")
    # warm the table once at the largest index
    SEQUENCE_TABLES.get(seq_id, n_max)
    return [
        sequence_value(seq_id, n, lambda_value, x_value) for n in range(n_max + 1)
    ]
