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
"""Command line front end, installed as `dcl`.

Subcommands:
1. table:  Values of a sequence for n = 0 ... n_max as CSV or JSON.
2. series: Plain coefficients c_0 ... c_N of a generating function.
3. verify: Exact verification of one or every registered identity.
4. list:   The identity registry.
5. config: Every configuration field with its environment variable.

Exit codes: 0 on success, 1 when an identity has no fully passing variant,
2 on usage errors (unknown names, malformed values, unwritable output).
"""

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from degenerate_cauchy.algebra.rational import ExactRingError
from degenerate_cauchy.algebra.series import Series, SeriesError, build_E, build_L
from degenerate_cauchy.cli.records import OutputRecord, render_table
from degenerate_cauchy.identity_suite import (
    IdentityRegistryError,
    IdentityReport,
    list_identities,
    reports_to_json,
    suite_passed,
    verify_all,
    verify_identity,
)
from degenerate_cauchy.sequences import (
    SequenceError,
    SequenceId,
    UnknownSequenceError,
    gf_for,
    sequence_table,
)
from degenerate_cauchy.utils.common import (
    clamp_order,
    get_config,
    parse_rational_option,
)
from degenerate_cauchy.utils.configuration import AppConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_USAGE = 2

# generating functions addressable by `dcl series` besides the sequence ids
SERIES_ALIASES = {"cauchy": "cauchy_poly"}
SERIES_BUILDERS = {"L": build_L, "E": build_E}


class UsageError(ValueError):
    """Raised for command line input that cannot be acted on."""

    pass


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from e
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _add_specialization_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lambda",
        dest="lambda_value",
        default="sym",
        help='Rational p/q substituted for l, or "sym" (default)',
    )
    parser.add_argument(
        "--x",
        dest="x_value",
        default="sym",
        help='Rational p/q substituted for x, or "sym" (default)',
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcl",
        description="Exact tables and identity checks for degenerate Cauchy polynomials.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    table = subparsers.add_parser("table", help="Tabulate a sequence")
    table.add_argument("--seq", required=True, help="Sequence id, e.g. degen_cauchy2")
    table.add_argument("--n-max", type=_non_negative, required=True)
    _add_specialization_flags(table)
    table.add_argument("--format", choices=["csv", "json"], default=None)
    table.add_argument("--out", default=None, help="Write to this path, not stdout")

    series = subparsers.add_parser("series", help="Print generating function coefficients")
    series.add_argument(
        "--name",
        required=True,
        help="cauchy, bernoulli_higher:r, degen_bernoulli, degen_cauchy_star, "
        "degen_cauchy2, daehee, daehee_higher:r, L or E",
    )
    series.add_argument("--order", type=_non_negative, required=True)
    _add_specialization_flags(series)

    verify = subparsers.add_parser("verify", help="Verify registered identities")
    verify.add_argument("--identity", default=None, help="Registry id; default all")
    verify.add_argument("--n-max", type=_non_negative, default=None)
    verify.add_argument(
        "--variants", choices=["printed", "corrected", "both"], default="both"
    )
    verify.add_argument("--format", choices=["text", "json"], default="text")
    _add_specialization_flags(verify)

    subparsers.add_parser("list", help="List the identity registry")
    subparsers.add_parser("config", help="Describe the configuration fields")
    return parser


def _specializations(args: argparse.Namespace) -> tuple[Fraction | None, Fraction | None]:
    try:
        return (
            parse_rational_option(args.lambda_value),
            parse_rational_option(args.x_value),
        )
    except ExactRingError as e:
        raise UsageError(str(e)) from e


def cmd_table(args: argparse.Namespace, config: AppConfig) -> tuple[int, str]:
    seq_id = SequenceId.parse(args.seq)
    lambda_value, x_value = _specializations(args)
    n_max = clamp_order(args.n_max, config.max_order)
    records = [
        OutputRecord.from_value(value, lambda_value, x_value)
        for value in sequence_table(seq_id, n_max, lambda_value, x_value)
    ]
    text = render_table(records, args.format or config.table.default_format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as f:
                f.write(text)
        except OSError as e:
            raise UsageError(f"cannot write {args.out}: {e.strerror}") from e
        logger.info(f"Wrote {len(records)} rows of {seq_id} to {args.out}")
        return EXIT_OK, ""
    return EXIT_OK, text


def _named_series(name: str, order: int) -> Series:
    if name in SERIES_BUILDERS:
        return SERIES_BUILDERS[name](order)
    seq_id = SequenceId.parse(SERIES_ALIASES.get(name, name))
    try:
        return gf_for(seq_id, order)
    except UnknownSequenceError as e:
        raise UsageError(f"'{name}' is not a generating function") from e


def cmd_series(args: argparse.Namespace, config: AppConfig) -> tuple[int, str]:
    lambda_value, x_value = _specializations(args)
    order = clamp_order(args.order, config.max_order, what="order")
    series = _named_series(args.name, order).evaluate(lambda_value, x_value)
    return EXIT_OK, "".join(f"{coeff}\n" for coeff in series.coeffs)


def _render_text_report(report: IdentityReport) -> str:
    if report.first_failure is None:
        return f"{report.id:<14} {report.variant:<10} PASS  n<={report.n_max}\n"
    failure = report.first_failure
    return (
        f"{report.id:<14} {report.variant:<10} FAIL  n={failure.n} "
        f"diff={failure.diff}\n"
    )


def cmd_verify(args: argparse.Namespace, config: AppConfig) -> tuple[int, str]:
    lambda_value, x_value = _specializations(args)
    n_max = args.n_max
    if n_max is None:
        n_max = config.verification.default_n_max
    n_max = clamp_order(n_max, config.max_order)

    if args.identity:
        reports = verify_identity(
            args.identity, n_max, args.variants, lambda_value, x_value
        )
    else:
        reports = verify_all(
            n_max,
            args.variants,
            workers=config.verification.workers,
            lambda_value=lambda_value,
            x_value=x_value,
        )

    if args.format == "json":
        text = json.dumps(reports_to_json(reports), indent=2) + "\n"
    else:
        text = "".join(_render_text_report(report) for report in reports)
    code = EXIT_OK if suite_passed(reports) else EXIT_IDENTITY_FAILED
    return code, text


def cmd_list(args: argparse.Namespace, config: AppConfig) -> tuple[int, str]:
    lines = [
        f"{spec.id}\t{','.join(spec.labels)}\t{spec.statement}\n"
        for spec in list_identities()
    ]
    return EXIT_OK, "".join(lines)


def cmd_config(args: argparse.Namespace, config: AppConfig) -> tuple[int, str]:
    chunks: list[str] = []
    AppConfig.print_help(chunks.append)
    return EXIT_OK, "".join(chunks)


COMMANDS = {
    "table": cmd_table,
    "series": cmd_series,
    "verify": cmd_verify,
    "list": cmd_list,
    "config": cmd_config,
}


def main(argv: list[str] | None = None) -> int:
    """Run the command line; returns the exit code."""
    logging.basicConfig(level=os.environ.get("LOGLEVEL", "WARNING").upper())
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = get_config()
        code, text = COMMANDS[args.command](args, config)
    except (
        UsageError,
        SequenceError,
        IdentityRegistryError,
        ExactRingError,
        SeriesError,
        RuntimeError,
        ValueError,
    ) as e:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"dcl {args.command}: error: {e}\n")
        return EXIT_USAGE

    sys.stdout.write(text)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
