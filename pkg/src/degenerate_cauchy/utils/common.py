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
"""Helpers shared by the command line front end.

1. get_config: Parse the application configuration.
2. clamp_order: Apply the configured max_order cap to a requested order.
3. parse_rational_option: Parse a "p/q" option value, or "sym" for symbolic.
"""

import logging
import os
from fractions import Fraction

from degenerate_cauchy.algebra.rational import parse_rational
from degenerate_cauchy.utils import configuration
from degenerate_cauchy.utils.configuration_wizard import ConfigWizard

logger = logging.getLogger(__name__)

SYMBOLIC = "sym"


def get_config() -> "ConfigWizard":
    """Parse the application configuration.

    Raises:
        ConfigurationError: If a DCL_* variable holds a value of the wrong type.
        RuntimeError: If DCL_CONFIG_FILE cannot be read or holds invalid values.
    """
    config_file = os.environ.get("DCL_CONFIG_FILE", "/dev/null")
    config = configuration.AppConfig.from_file(config_file)
    if config:
        return config
    raise RuntimeError(
        f"Unable to load configuration from DCL_CONFIG_FILE={config_file}."
    )


def clamp_order(requested: int, max_order: int, what: str = "n_max") -> int:
    """Clamp `requested` to `max_order`; a cap of 0 or less means no cap."""
    if max_order > 0 and requested > max_order:
        logger.warning(
            f"Requested {what}={requested} exceeds DCL_MAX_ORDER={max_order}; "
            f"clamping to {max_order}"
        )
        return max_order
    return requested


def parse_rational_option(text: str | None) -> Fraction | None:
    """None for an absent or symbolic value, otherwise the exact rational."""
    if text is None or text.strip() == SYMBOLIC:
        return None
    return parse_rational(text)
