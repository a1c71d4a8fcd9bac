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
"""Memoized Stirling number triangles.

1. stirling1: Signed Stirling numbers of the first kind, (x)_n = sum_k S1(n,k) x^k.
2. stirling2: Stirling numbers of the second kind, x^n = sum_k S2(n,k) (x)_k.
"""

import logging
import threading
from collections.abc import Callable

logger = logging.getLogger(__name__)

# row recurrence: (previous row, n of previous row) -> next row
RowStep = Callable[[list[int], int], list[int]]


class StirlingTriangle:
    """A triangle of integers grown row by row on demand.

    Rows are appended under a lock, so concurrent readers always see complete
    rows and the cache stays invisible to callers.
    """

    def __init__(self, name: str, step: RowStep):
        self.name = name
        self._step = step
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def _ensure(self, n: int) -> None:
        if n < len(self._rows):
            return
        with self._lock:
            start = len(self._rows)
            for m in range(start - 1, n):
                self._rows.append(self._step(self._rows[m], m))
            if n >= start:
                logger.debug(f"{self.name} triangle grown to row {n}")

    def row(self, n: int) -> list[int]:
        """Entries S(n, 0) ... S(n, n)."""
        if n < 0:
            raise ValueError(f"{self.name}: row index must be non-negative, got {n}")
        self._ensure(n)
        return list(self._rows[n])

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError(
                f"{self.name}: indices must be non-negative, got ({n}, {k})"
            )
        if k > n:
            return 0
        self._ensure(n)
        return self._rows[n][k]


def _first_kind_step(row: list[int], n: int) -> list[int]:
    # S1(n+1, k) = S1(n, k-1) - n * S1(n, k)
    padded = row + [0]
    return [(padded[k - 1] if k else 0) - n * padded[k] for k in range(n + 2)]


def _second_kind_step(row: list[int], n: int) -> list[int]:
    # S2(n+1, k) = k * S2(n, k) + S2(n, k-1)
    padded = row + [0]
    return [k * padded[k] + (padded[k - 1] if k else 0) for k in range(n + 2)]


_FIRST_KIND = StirlingTriangle("stirling1", _first_kind_step)
_SECOND_KIND = StirlingTriangle("stirling2", _second_kind_step)


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind S1(n, k); 0 when k > n."""
    return _FIRST_KIND(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S2(n, k); 0 when k > n."""
    return _SECOND_KIND(n, k)


def stirling1_row(n: int) -> list[int]:
    return _FIRST_KIND.row(n)


def stirling2_row(n: int) -> list[int]:
    return _SECOND_KIND.row(n)
