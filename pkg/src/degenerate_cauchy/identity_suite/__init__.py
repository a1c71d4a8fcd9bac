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
"""Identity registry and exact verifier."""

from degenerate_cauchy.identity_suite.registry import (
    CORRECTED,
    PRINTED,
    IdentityRegistryError,
    IdentitySpec,
    IdentityVariant,
    get_identity,
    list_identities,
)
from degenerate_cauchy.identity_suite.verifier import (
    FailureWitness,
    IdentityReport,
    IdentityResult,
    reports_to_json,
    suite_passed,
    verify_all,
    verify_identity,
)

__all__ = [
    "CORRECTED",
    "PRINTED",
    "FailureWitness",
    "IdentityRegistryError",
    "IdentityReport",
    "IdentityResult",
    "IdentitySpec",
    "IdentityVariant",
    "get_identity",
    "list_identities",
    "reports_to_json",
    "suite_passed",
    "verify_all",
    "verify_identity",
]
