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
"""The definition of the application configuration."""

from degenerate_cauchy.utils.configuration_wizard import (
    ConfigWizard,
    configclass,
    configfield,
)


@configclass
class VerificationConfig(ConfigWizard):
    """Configuration for the identity verifier.

    :cvar workers: Thread pool size used when every identity is verified.
    :cvar default_n_max: Largest index checked when none is requested.
    """

    workers: int = configfield(
        "workers",
        default=4,
        help_txt="Number of identities verified concurrently",
    )
    default_n_max: int = configfield(
        "default_n_max",
        default=8,
        env_name="DCL_VERIFICATION_DEFAULT_N_MAX",
        help_txt="Largest index checked by `dcl verify` without --n-max",
    )


@configclass
class TableConfig(ConfigWizard):
    """Configuration for emitted sequence tables."""

    default_format: str = configfield(
        "default_format",
        default="csv",
        env_name="DCL_TABLE_DEFAULT_FORMAT",
        help_txt="Table format used without --format, csv or json",
    )


@configclass
class AppConfig(ConfigWizard):
    """Configuration class for the application.

    :cvar max_order: Cap applied to every requested index or series order.
    :cvar verification: The configuration of the identity verifier.
    :cvar table: The configuration of sequence tables.
    """

    max_order: int = configfield(
        "max_order",
        default=0,
        env_name="DCL_MAX_ORDER",
        help_txt="Largest index or series order computed, 0 for no cap",
    )
    verification: VerificationConfig = configfield(
        "verification",
        env=False,
        help_txt="The configuration of the identity verifier.",
        default=VerificationConfig(),
    )
    table: TableConfig = configfield(
        "table",
        env=False,
        help_txt="The configuration of sequence tables.",
        default=TableConfig(),
    )
