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
"""Tests for the identity registry."""

import pytest

from degenerate_cauchy.algebra.bipoly import LAMBDA, X
from degenerate_cauchy.identity_suite import (
    CORRECTED,
    PRINTED,
    IdentityRegistryError,
    get_identity,
    list_identities,
)

REGISTERED = [
    "eq3",
    "eq9",
    "eq10",
    "thm1",
    "thm2",
    "thm3",
    "thm4",
    "thm5",
    "thm6",
    "thm7",
    "thm8",
    "limit_lambda0",
]


def test_registry_contents():
    assert sorted(spec.id for spec in list_identities()) == sorted(REGISTERED)


@pytest.mark.parametrize("identity_id", ["thm3", "thm5", "thm8", "eq9"])
def test_corrected_entries_have_both_variants(identity_id):
    assert get_identity(identity_id).labels == [PRINTED, CORRECTED]


def test_single_variant_entries():
    spec = get_identity("thm7")
    assert spec.labels == [PRINTED]
    assert spec.variant(CORRECTED) is spec.variant(PRINTED)
    assert spec.select("both") == [spec.variant(PRINTED)]


def test_unknown_entries():
    with pytest.raises(IdentityRegistryError):
        get_identity("thm99")
    with pytest.raises(IdentityRegistryError):
        get_identity("thm3").variant("guessed")
    with pytest.raises(LookupError):
        get_identity("")


def test_every_entry_has_a_statement():
    assert all(spec.statement and spec.n_start == 0 for spec in list_identities())


def test_thm1_sides_at_one():
    variant = get_identity("thm1").variant(PRINTED)
    expected = X + (LAMBDA + 1) / 2
    assert variant.lhs(1) == expected
    assert variant.rhs(1) == expected


def test_thm7_sides_at_zero():
    variant = get_identity("thm7").variant(PRINTED)
    assert variant.lhs(0) == 1
    assert variant.rhs(0) == 1


def test_thm5_printed_sides_at_one():
    variant = get_identity("thm5").variant(PRINTED)
    assert variant.lhs(1) == (LAMBDA + 1) / 2
    assert variant.rhs(1) == (1 - LAMBDA) / 2


def test_thm4_is_a_delta_sequence():
    sides = get_identity("thm4").variant(PRINTED)
    assert sides.lhs(0) == 1
    assert sides.lhs(1) == 1
    for n in range(2, 11):
        assert sides.lhs(n).is_zero(), n
