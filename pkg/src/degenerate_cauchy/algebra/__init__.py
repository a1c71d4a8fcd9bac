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
"""Exact coefficient rings and truncated power series."""

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
from degenerate_cauchy.algebra.parsing import PolynomialSyntaxError, parse_bipoly
from degenerate_cauchy.algebra.rational import (
    ArithKind,
    ExactRingError,
    Rational,
    RationalConstructionError,
    RationalDivisionError,
    parse_rational,
    rat_arith,
    rat_make,
    render_rational,
)
from degenerate_cauchy.algebra.series import (
    CoefficientIndexError,
    CompositionError,
    NonInvertibleLeadError,
    Ring,
    Series,
    SeriesDomainError,
    SeriesError,
    ValuationError,
    build_E,
    build_L,
    series_arith,
    series_coeff,
    series_compose,
    series_exp,
    series_log1p,
    series_pow_lin,
    series_power,
    series_ratio,
)
