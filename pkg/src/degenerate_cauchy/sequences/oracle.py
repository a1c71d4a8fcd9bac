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
"""Independent cross-checks for the Cauchy-type sequences.

None of these paths divides by log(1 + t); they start from the integral
representation int_0^1 (1 + u)^(x + y) dy instead.

1. cauchy_poly:       int_0^1 (x+y)_n dy, expanding (x+y)_n in y.
2. degen_cauchy_star: n! [t^n] of sum_m (int_0^1 (x+y)_m dy) / m! * L^m.
3. degen_cauchy2:     (t / L) times the series of 2.
"""

import logging
from dataclasses import dataclass
from math import factorial

from degenerate_cauchy.algebra.bipoly import ONE, X, ZERO, BiPoly
from degenerate_cauchy.algebra.series import (
    Ring,
    Series,
    build_L,
    series_ratio,
    series_scale,
)
from degenerate_cauchy.sequences.generators import (
    SequenceId,
    SequenceIndexError,
    SequenceTables,
    SequenceTag,
    UnknownSequenceError,
    egf_extract,
)

logger = logging.getLogger(__name__)

ORACLE_TAGS = (
    SequenceTag.CAUCHY_POLY,
    SequenceTag.DEGEN_CAUCHY_STAR,
    SequenceTag.DEGEN_CAUCHY2,
)


@dataclass(frozen=True)
class AuxPoly:
    """A polynomial in the integration variable y with Q[l, x] coefficients.

    coeffs[j] multiplies y^j; trailing zero coefficients are dropped.
    """

    coeffs: tuple[BiPoly, ...] = ()

    def __post_init__(self):
        coeffs = [BiPoly.coerce(c) for c in self.coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def linear(cls, constant: BiPoly, slope: BiPoly = ONE) -> "AuxPoly":
        """constant + slope * y."""
        return cls((constant, slope))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "AuxPoly") -> "AuxPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        padded_a = self.coeffs + (ZERO,) * (size - len(self.coeffs))
        padded_b = other.coeffs + (ZERO,) * (size - len(other.coeffs))
        return AuxPoly(tuple(a + b for a, b in zip(padded_a, padded_b, strict=True)))

    def __mul__(self, other: "AuxPoly") -> "AuxPoly":
        if not self.coeffs or not other.coeffs:
            return AuxPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return AuxPoly(tuple(out))

    def integrate_unit(self) -> BiPoly:
        """int_0^1 p(y) dy, using int_0^1 y^j dy = 1/(j+1)."""
        total = ZERO
        for j, coeff in enumerate(self.coeffs):
            total = total + coeff / (j + 1)
        return total


def shifted_falling_factorial(m: int) -> AuxPoly:
    """(x+y)_m by repeated multiplication of the factors (x + y - i)."""
    if m < 0:
        raise SequenceIndexError(f"falling factorial index must be >= 0, got {m}")
    result = AuxPoly((ONE,))
    for i in range(m):
        result = result * AuxPoly.linear(X - i)
    return result


def integral_cauchy_values(n_max: int) -> list[BiPoly]:
    """int_0^1 (x+y)_n dy for n = 0 ... n_max."""
    values = []
    product = AuxPoly((ONE,))
    for n in range(n_max + 1):
        if n:
            product = product * AuxPoly.linear(X - (n - 1))
        values.append(product.integrate_unit())
    return values


def star_oracle_series(order: int) -> Series:
    """sum_m (int_0^1 (x+y)_m dy) / m! * L^m, truncated at t^order."""
    big_l = build_L(order)
    total = Series.zero(order, Ring.POLYNOMIAL)
    power = Series.constant(1, order, Ring.POLYNOMIAL)
    for m, integral in enumerate(integral_cauchy_values(order)):
        total = total + series_scale(power, integral / factorial(m))
        power = power * big_l
    return total


def second_kind_oracle_series(order: int) -> Series:
    """(t / L) * star_oracle_series, truncated at t^order."""
    t = Series.variable(order + 1)
    return series_ratio(t, build_L(order + 1)) * star_oracle_series(order)


def _oracle_table(seq_id: SequenceId, n_max: int) -> list[BiPoly]:
    if seq_id.tag is SequenceTag.CAUCHY_POLY:
        return integral_cauchy_values(n_max)
    if seq_id.tag is SequenceTag.DEGEN_CAUCHY_STAR:
        series = star_oracle_series(n_max)
    else:
        series = second_kind_oracle_series(n_max)
    return [egf_extract(series, n) for n in range(n_max + 1)]


_ORACLE_TABLES = SequenceTables(_oracle_table)


def oracle_value(seq_id: SequenceId | str, n: int) -> BiPoly:
    """The value at n computed without the generating-function path.

    Raises:
        UnknownSequenceError: For sequences without an oracle.
    """
    if isinstance(seq_id, str):
        seq_id = SequenceId.parse(seq_id)
    if seq_id.tag not in ORACLE_TAGS:
        supported = ", ".join(tag.value for tag in ORACLE_TAGS)
        raise UnknownSequenceError(
            f"no oracle for {seq_id}; oracles exist for: {supported}"
        )
    return _ORACLE_TABLES.get(seq_id, n)
