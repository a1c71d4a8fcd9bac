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
"""Exact verification of registered identities.

1. verify_identity: Check one identity for n = n_start ... n_max.
2. verify_all: Check every identity, concurrently, reports in registry order.
3. suite_passed: True iff every identity has a variant passing at every n.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from degenerate_cauchy.algebra.bipoly import BiPoly
from degenerate_cauchy.identity_suite.registry import (
    IdentityRegistryError,
    IdentitySpec,
    IdentityVariant,
    get_identity,
    list_identities,
)

logger = logging.getLogger(__name__)

VariantSelection = Literal["printed", "corrected", "both"]


class IdentityResult(BaseModel):
    """Outcome at a single index."""

    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(ge=0, description="Index checked")
    passed: bool = Field(alias="pass", description="LHS - RHS is the zero polynomial")


class FailureWitness(BaseModel):
    """The first failing index and the full difference LHS - RHS."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int = Field(ge=0, description="First failing index")
    diff: BiPoly = Field(description="LHS - RHS at that index")

    @field_serializer("diff")
    def serialize_diff(self, diff: BiPoly) -> str:
        return str(diff)


class IdentityReport(BaseModel):
    """Per-index results of one identity variant."""

    id: str = Field(description="Registry id of the identity")
    variant: str = Field(description="Variant label, printed or corrected")
    n_max: int = Field(ge=0, description="Largest index checked")
    results: list[IdentityResult] = Field(default=[], description="Ascending in n")
    first_failure: FailureWitness | None = Field(
        default=None, description="Smallest failing index, if any"
    )

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def _specialize(
    value: BiPoly, lambda_value: Fraction | None, x_value: Fraction | None
) -> BiPoly:
    if lambda_value is None and x_value is None:
        return value
    return BiPoly.coerce(value.evaluate(lambda_value, x_value))


def _check_variant(
    spec: IdentitySpec,
    variant: IdentityVariant,
    n_max: int,
    lambda_value: Fraction | None,
    x_value: Fraction | None,
) -> IdentityReport:
    started = time.perf_counter()
    diffs: dict[int, BiPoly] = {}
    # largest n first: the sequence tables then grow only once
    for n in range(n_max, spec.n_start - 1, -1):
        lhs = _specialize(BiPoly.coerce(variant.lhs(n)), lambda_value, x_value)
        rhs = _specialize(BiPoly.coerce(variant.rhs(n)), lambda_value, x_value)
        diffs[n] = lhs - rhs

    results = [
        IdentityResult(n=n, passed=diffs[n].is_zero())
        for n in range(spec.n_start, n_max + 1)
    ]
    first_failure = next(
        (FailureWitness(n=r.n, diff=diffs[r.n]) for r in results if not r.passed),
        None,
    )
    logger.debug(
        f"{spec.id}/{variant.label} checked up to n={n_max} in "
        f"{time.perf_counter() - started:.3f}s"
    )
    return IdentityReport(
        id=spec.id,
        variant=variant.label,
        n_max=n_max,
        results=results,
        first_failure=first_failure,
    )


def verify_identity(
    identity_id: str,
    n_max: int,
    variant: VariantSelection = "both",
    lambda_value: Fraction | None = None,
    x_value: Fraction | None = None,
) -> list[IdentityReport]:
    """Check an identity exactly for every n in [n_start, n_max].

    Sides are compared as elements of Q[l, x], after substituting
    `lambda_value` / `x_value` when given. The printed variant comes first.

    Raises:
        IdentityRegistryError: For an unknown id or variant selection.
        ValueError: If n_max is below the identity's first index.
    """
    spec = get_identity(identity_id)
    if variant not in ("printed", "corrected", "both"):
        raise IdentityRegistryError(
            f"variant must be printed, corrected or both, got '{variant}'"
        )
    if n_max < spec.n_start:
        raise ValueError(f"{spec.id}: n_max must be >= {spec.n_start}, got {n_max}")
    return [
        _check_variant(spec, selected, n_max, lambda_value, x_value)
        for selected in spec.select(variant)
    ]


def verify_all(
    n_max: int,
    variant: VariantSelection = "both",
    workers: int = 4,
    lambda_value: Fraction | None = None,
    x_value: Fraction | None = None,
) -> list[IdentityReport]:
    """Check every registered identity; reports come back in registry order."""
    specs = [spec for spec in list_identities() if spec.n_start <= n_max]
    started = time.perf_counter()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = [
            executor.submit(
                verify_identity, spec.id, n_max, variant, lambda_value, x_value
            )
            for spec in specs
        ]
        reports = [report for future in futures for report in future.result()]

    failed = sorted({r.id for r in reports if not r.passed})
    logger.info(
        f"Verified {len(specs)} identities up to n={n_max} in "
        f"{time.perf_counter() - started:.2f}s; variants with failures: "
        f"{', '.join(failed) or 'none'}"
    )
    return reports


def suite_passed(reports: list[IdentityReport]) -> bool:
    """True iff each identity id has at least one fully passing variant."""
    status: dict[str, bool] = {}
    for report in reports:
        status[report.id] = status.get(report.id, False) or report.passed
    return all(status.values())


def reports_to_json(reports: list[IdentityReport]) -> list[dict]:
    """JSON-ready dicts with the `pass` alias."""
    return [report.model_dump(by_alias=True, mode="json") for report in reports]


__all__ = [
    "FailureWitness",
    "IdentityRegistryError",
    "IdentityReport",
    "IdentityResult",
    "reports_to_json",
    "suite_passed",
    "verify_all",
    "verify_identity",
]
