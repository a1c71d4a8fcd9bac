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
"""Exact generators for the named sequences and their independent oracles."""

from degenerate_cauchy.sequences.generators import (
    SEQUENCE_TABLES,
    SequenceError,
    SequenceId,
    SequenceIndexError,
    SequenceTables,
    SequenceTag,
    SequenceValue,
    UnknownSequenceError,
    bernoulli_higher,
    bernoulli_higher_gf,
    cauchy_gf,
    cauchy_num,
    cauchy_poly,
    daehee,
    daehee_gf,
    daehee_higher,
    degen_bernoulli,
    degen_bernoulli_gf,
    degen_cauchy2,
    degen_cauchy2_gf,
    degen_cauchy_star,
    degen_cauchy_star_gf,
    egf_extract,
    falling_factorial,
    gf_for,
    sequence_table,
    sequence_value,
)
from degenerate_cauchy.sequences.oracle import (
    AuxPoly,
    integral_cauchy_values,
    oracle_value,
    shifted_falling_factorial,
)
from degenerate_cauchy.sequences.stirling import (
    stirling1,
    stirling1_row,
    stirling2,
    stirling2_row,
)

__all__ = [
    "SEQUENCE_TABLES",
    "AuxPoly",
    "SequenceError",
    "SequenceId",
    "SequenceIndexError",
    "SequenceTables",
    "SequenceTag",
    "SequenceValue",
    "UnknownSequenceError",
    "bernoulli_higher",
    "bernoulli_higher_gf",
    "cauchy_gf",
    "cauchy_num",
    "cauchy_poly",
    "daehee",
    "daehee_gf",
    "daehee_higher",
    "degen_bernoulli",
    "degen_bernoulli_gf",
    "degen_cauchy2",
    "degen_cauchy2_gf",
    "degen_cauchy_star",
    "degen_cauchy_star_gf",
    "egf_extract",
    "falling_factorial",
    "gf_for",
    "integral_cauchy_values",
    "oracle_value",
    "sequence_table",
    "sequence_value",
    "shifted_falling_factorial",
    "stirling1",
    "stirling1_row",
    "stirling2",
    "stirling2_row",
]
