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
"""Helpers for declaring configuration read from a file and the environment.

Configuration classes are frozen dataclasses built on the JSON and YAML wizards
of `dataclass-wizard`. A value is taken, in increasing priority, from the field
default, the JSON or YAML configuration file, and an environment variable named
DCL_<SECTION>_<FIELD> (or the field's custom `env_name`).
"""

import json
import logging
import os
from collections.abc import Callable
from dataclasses import _MISSING_TYPE, dataclass
from typing import Any, Optional, TextIO

import yaml
from dataclass_wizard import (
    JSONWizard,
    LoadMeta,
    YAMLWizard,
    errors,
    fromdict,
    json_field,
)
from dataclass_wizard.models import JSONField
from dataclass_wizard.utils.string_conv import to_camel_case

configclass = dataclass(frozen=True)
ENV_BASE = "DCL"
_LOGGER = logging.getLogger(__name__)

EnvVar = tuple[str, tuple[str, ...], type]


# ============================================================================
# Custom Exceptions
# ============================================================================


class ConfigurationError(RuntimeError):
    """Raised when an environment variable holds a value of the wrong type."""

    pass


def _check_env_value(var_name: str, raw: str, value: Any, var_type: type) -> None:
    if var_type is str or not isinstance(var_type, type):
        return
    if isinstance(value, bool) and var_type is not bool:
        value = raw
    if not isinstance(value, var_type):
        raise ConfigurationError(
            f"{var_name}={raw!r} is not a valid {var_type.__name__}"
        )


def configfield(
    name: str,
    *,
    env: bool = True,
    env_name: str | None = None,
    help_txt: str = "",
    **kwargs: Any,
) -> JSONField:
    """Declare a configuration field stored under the camel-cased `name`.

    :param name: The snake_case field name.
    :param env: Whether an environment variable may override the value.
    :param env_name: Environment variable to use instead of the derived one.
    :param help_txt: One line shown by `dcl config`.
    :param kwargs: Passed through to `dataclass_wizard.json_field`.
    :raises TypeError: If the provided name is not a string.
    """
    if not isinstance(name, str):
        raise TypeError("Provided name must be a string.")

    meta = kwargs.get("metadata", {})
    meta["env"] = env
    meta["env_name"] = env_name
    meta["help"] = help_txt
    kwargs["metadata"] = meta
    return json_field(to_camel_case(name), **kwargs)


class ConfigWizard(JSONWizard, YAMLWizard):  # type: ignore[misc] # dataclass-wizard doesn't provide stubs
    """Base class for configuration sections."""

    # pylint: disable=arguments-differ,arguments-renamed

    @classmethod
    def _fields(cls, env_parent: str):
        for val in cls.__dataclass_fields__.values():  # pylint: disable=no-member
            jsonname = val.json.keys[0]
            envname = jsonname.upper()
            full_envname = val.metadata.get("env_name") or (
                f"{ENV_BASE}{env_parent}_{envname}"
            )
            yield val, jsonname, envname, full_envname, hasattr(val.type, "envvars")

    @classmethod
    def print_help(
        cls,
        help_printer: Callable[[str], Any],
        *,
        env_parent: str | None = None,
        json_parent: tuple[str, ...] | None = None,
    ) -> None:
        """Write every field with its default, type and environment variable."""
        env_parent = env_parent or ""
        json_parent = json_parent or ()
        indent = len(json_parent) * 2

        for val, jsonname, envname, full_envname, embedded in cls._fields(env_parent):
            if embedded:
                default = ""
            elif not isinstance(val.default_factory, _MISSING_TYPE):
                default = val.default_factory()
            elif isinstance(val.default, _MISSING_TYPE):
                default = "NO-DEFAULT-VALUE"
            else:
                default = val.default
            help_printer(f"{' ' * indent}{jsonname}: {default}\n")

            comment_indent = indent + 2 if embedded else indent
            if val.metadata.get("help"):
                help_printer(f"{' ' * comment_indent}# {val.metadata['help']}\n")
            if not embedded:
                typestr = getattr(val.type, "__name__", None) or str(val.type)
                help_printer(f"{' ' * indent}# Type: {typestr}\n")
                if val.metadata.get("env", True):
                    help_printer(f"{' ' * indent}# ENV Variable: {full_envname}\n")

            if embedded:
                val.type.print_help(
                    help_printer,
                    env_parent=f"{env_parent}_{envname}",
                    json_parent=json_parent + (jsonname,),
                )

    @classmethod
    def envvars(
        cls,
        env_parent: str | None = None,
        json_parent: tuple[str, ...] | None = None,
    ) -> list[EnvVar]:
        """(environment variable, path in the config tree, type) per field."""
        env_parent = env_parent or ""
        json_parent = json_parent or ()
        output: list[EnvVar] = []

        for val, jsonname, envname, full_envname, embedded in cls._fields(env_parent):
            if embedded:
                output += val.type.envvars(
                    env_parent=f"{env_parent}_{envname}",
                    json_parent=json_parent + (jsonname,),
                )
            elif val.metadata.get("env", True):
                output.append((full_envname, json_parent + (jsonname,), val.type))
        return output

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ConfigWizard":
        """Build the configuration from a dict, then apply environment overrides.

        :raises RuntimeError: If the configuration data is not a dictionary.
        :raises ConfigurationError: If an environment variable cannot be read as
            the type of its field; the message names the variable.
        """
        if not data:
            data = {}
        if not isinstance(data, dict):
            raise RuntimeError("Configuration data is not a dictionary.")

        for var_name, conf_path, var_type in cls.envvars():
            raw_value = os.environ.get(var_name)
            if raw_value:
                var_value = try_json_load(raw_value)
                _check_env_value(var_name, raw_value, var_value, var_type)
                update_dict(data, conf_path, var_value, overwrite=True)
                _LOGGER.debug(
                    "Found EnvVar Config - %s:%s = %s",
                    var_name,
                    str(var_type),
                    repr(var_value),
                )

        LoadMeta(key_transform="CAMEL").bind_to(cls)
        return fromdict(cls, data)

    @classmethod
    def from_file(cls, filepath: str) -> Optional["ConfigWizard"]:
        """Load the configuration from a JSON or YAML file.

        :returns: The configuration, or None if the file is unreadable or invalid.
        """
        try:
            with open(filepath, encoding="utf-8") as file:
                data = read_json_or_yaml(file)
        except FileNotFoundError:
            _LOGGER.error("The configuration file cannot be found.")
            return None
        except PermissionError:
            _LOGGER.error(
                "Permission denied when trying to read the configuration file."
            )
            return None
        except ValueError as err:
            _LOGGER.error(
                "Configuration file must be valid JSON or YAML. The following errors occured:\n%s",
                str(err),
            )
            return None

        try:
            return cls.from_dict(data or {})
        except errors.MissingFields as err:
            _LOGGER.error("Configuration is missing required fields: \n%s", str(err))
        except errors.ParseError as err:
            _LOGGER.error("Invalid configuration value provided:\n%s", str(err))
        return None


def read_json_or_yaml(stream: TextIO) -> dict[str, Any]:
    """Parse a seekable stream as JSON, falling back to YAML.

    :raises ValueError: If the stream is not seekable or neither parser accepts it.
    """
    if not stream.seekable():
        raise ValueError("The provided stream must be seekable.")

    try:
        return json.loads(stream.read())
    except ValueError as json_err:
        stream.seek(0)
        try:
            return yaml.safe_load(stream.read())
        except (yaml.error.YAMLError, ValueError) as yaml_err:
            raise ValueError(
                f"JSON Parser Errors:\n{json_err}\n\nYAML Parser Errors:\n{yaml_err}"
            ) from yaml_err


def try_json_load(value: str) -> Any:
    """Parse the value as JSON, returning it unchanged when that fails."""
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        return value


def update_dict(
    data: dict[str, Any],
    path: tuple[str, ...],
    value: Any,
    overwrite: bool = False,
) -> None:
    """Set `value` at the nested key `path`, creating intermediate dicts.

    Existing values are kept unless `overwrite` is set.
    """
    target = data
    for key in path[:-1]:
        if not target.get(key):
            target[key] = {}
        if not isinstance(target.get(key), dict):
            return
        target = target[key]
    if overwrite or path[-1] not in target:
        target[path[-1]] = value
