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
"""Shared pytest fixtures."""

import os

import pytest


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Run every test without configuration leaking in from the shell."""
    for name in list(os.environ):
        if name.startswith("DCL_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.delenv("LOGLEVEL", raising=False)
