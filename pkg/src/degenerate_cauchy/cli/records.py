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
"""Records emitted by `dcl table` and their CSV / JSON renderings.

1. OutputRecord: One row of a sequence table.
2. render_table: Records to CSV (header n,lambda,x,value) or JSON text.
3. read_table: Emitted CSV / JSON text back to records.
"""

import csv
import io
import json
import logging
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from degenerate_cauchy.algebra.parsing import parse_bipoly
from degenerate_cauchy.algebra.rational import parse_rational, render_rational
from degenerate_cauchy.sequences.generators import SequenceValue
from degenerate_cauchy.utils.common import SYMBOLIC

logger = logging.getLogger(__name__)

TableFormat = Literal["csv", "json"]
CSV_HEADER = ["n", "lambda", "x", "value"]


class TableFormatError(ValueError):
    """Raised when table text cannot be read back."""

    pass


def _render_parameter(value: Fraction | None) -> str:
    return SYMBOLIC if value is None else render_rational(value)


class OutputRecord(BaseModel):
    """One table row; `value` is the canonical rendering of an element of Q[l, x]."""

    model_config = ConfigDict(populate_by_name=True)

    seq: str = Field(default="", description="Sequence id, e.g. bernoulli_higher:2")
    n: int = Field(ge=0, description="Sequence index")
    lambda_: str = Field(
        default=SYMBOLIC, alias="lambda", description='"sym" or a rational p/q'
    )
    x: str = Field(default=SYMBOLIC, description='"sym" or a rational p/q')
    value: str = Field(description="Canonical rendering of the value")

    @field_validator("lambda_", "x")
    @classmethod
    def validate_parameter(cls, value: str) -> str:
        """Normalize a parameter to "sym" or a reduced p/q."""
        value = value.strip()
        if value == SYMBOLIC:
            return value
        return render_rational(parse_rational(value))

    @field_validator("value")
    @classmethod
    def validate_value(cls, value: str) -> str:
        """Re-render the value canonically."""
        return str(parse_bipoly(value))

    @classmethod
    def from_value(
        cls,
        sequence_value: SequenceValue,
        lambda_value: Fraction | None = None,
        x_value: Fraction | None = None,
    ) -> "OutputRecord":
        return cls(
            seq=sequence_value.seq.name,
            n=sequence_value.n,
            lambda_=_render_parameter(lambda_value),
            x=_render_parameter(x_value),
            value=str(sequence_value.value),
        )


def render_table(records: list[OutputRecord], fmt: TableFormat = "csv") -> str:
    """Render records deterministically; the text ends with a newline."""
    if fmt == "json":
        payload = [record.model_dump(by_alias=True) for record in records]
        return json.dumps(payload, indent=2) + "\n"
    if fmt != "csv":
        raise TableFormatError(f"unknown table format '{fmt}'")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow([record.n, record.lambda_, record.x, record.value])
    return buffer.getvalue()


def _first_error(error: ValidationError) -> str:
    detail = error.errors()[0]
    location = ".".join(str(part) for part in detail["loc"])
    return f"{location}: {detail['msg']}" if location else detail["msg"]


def read_table(
    text: str, fmt: TableFormat = "csv", seq: str = ""
) -> list[OutputRecord]:
    """Parse text produced by render_table.

    CSV rows carry no sequence id; `seq` is attached to every record instead.

    Raises:
        TableFormatError: If the header, row shape, JSON layout or any field is
            invalid. Messages name the CSV line or the JSON record index.
    """
    if fmt == "json":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise TableFormatError(f"table is not valid JSON: {e}") from e
        if not isinstance(payload, list):
            raise TableFormatError("a JSON table must be a list of records")
        records = []
        for index, item in enumerate(payload):
            try:
                records.append(OutputRecord.model_validate(item))
            except ValidationError as e:
                raise TableFormatError(f"record {index}: {_first_error(e)}") from e
        return records
    if fmt != "csv":
        raise TableFormatError(f"unknown table format '{fmt}'")

    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != CSV_HEADER:
        raise TableFormatError(f"CSV header must be {','.join(CSV_HEADER)}")
    records = []
    for line_number, row in enumerate(rows[1:], start=2):
        if len(row) != len(CSV_HEADER):
            raise TableFormatError(
                f"line {line_number}: expected {len(CSV_HEADER)} fields, got {len(row)}"
            )
        n, lambda_text, x_text, value = row
        try:
            records.append(
                OutputRecord(
                    seq=seq, n=int(n), lambda_=lambda_text, x=x_text, value=value
                )
            )
        except ValidationError as e:
            raise TableFormatError(f"line {line_number}: {_first_error(e)}") from e
        except ValueError as e:
            raise TableFormatError(
                f"line {line_number}: index must be an integer, got '{n}'"
            ) from e
    return records
