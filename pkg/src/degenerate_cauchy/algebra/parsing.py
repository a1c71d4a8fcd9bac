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
"""Parser for the textual form of Q[l, x] elements.

Accepts the canonical rendering produced by BiPoly.__str__ (and any sum of
signed terms of the same shape), so emitted tables can be read back.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Any

from lark import Lark, Token, Transformer, UnexpectedInput
from lark.exceptions import VisitError

from degenerate_cauchy.algebra.bipoly import LAMBDA_NAME, ONE, BiPoly
from degenerate_cauchy.algebra.rational import RationalConstructionError, rat_make

logger = logging.getLogger(__name__)

_GRAMMAR_PARSER = None


class PolynomialSyntaxError(ValueError):
    """Raised when text is not a rendered element of Q[l, x]."""

    pass


def get_grammar_parser() -> Lark:
    """Get the cached Lark parser, reading the grammar file once."""
    global _GRAMMAR_PARSER
    if _GRAMMAR_PARSER is None:
        grammar_file = Path(__file__).parent / "poly_grammar.lark"
        with open(grammar_file, encoding="utf-8") as f:
            grammar_content = f.read()
        _GRAMMAR_PARSER = Lark(grammar_content, parser="lalr", lexer="basic")
    return _GRAMMAR_PARSER


class BiPolyTransformer(Transformer):
    """Folds a parse tree into a BiPoly."""

    def start(self, args: list[Any]) -> BiPoly:
        total = args[0]
        for sign, term in zip(args[1::2], args[2::2], strict=True):
            total = total - term if sign == "-" else total + term
        return total

    def first_term(self, args: list[Any]) -> BiPoly:
        if len(args) == 2:
            return -args[1]
        return args[0]

    def sign(self, args: list[Token]) -> str:
        return str(args[0])

    def scaled(self, args: list[Any]) -> BiPoly:
        coeff, monomial = args
        return monomial * coeff

    def constant(self, args: list[Any]) -> BiPoly:
        return BiPoly.constant(args[0])

    def unit(self, args: list[Any]) -> BiPoly:
        return args[0]

    def coeff(self, args: list[Token]) -> Fraction:
        den = int(args[1]) if len(args) > 1 else 1
        return rat_make(int(args[0]), den)

    def monomial(self, args: list[BiPoly]) -> BiPoly:
        result = ONE
        for factor in args:
            result = result * factor
        return result

    def factor(self, args: list[Token]) -> BiPoly:
        power = int(args[1]) if len(args) > 1 else 1
        if str(args[0]) == LAMBDA_NAME:
            return BiPoly.monomial(power, 0)
        return BiPoly.monomial(0, power)


def _get_error_context(text: str, error: UnexpectedInput) -> str:
    pos = getattr(error, "pos_in_stream", None)
    if pos is None:
        return f"'{text}'"
    start = max(0, pos - 10)
    return f"column {pos}: '{text[start:pos + 10]}'"


def parse_bipoly(text: str) -> BiPoly:
    """Parse rendered polynomial text such as "-1/6 - 1/6*l^2".

    Raises:
        PolynomialSyntaxError: If the text does not follow the grammar.
    """
    if not isinstance(text, str) or not text.strip():
        raise PolynomialSyntaxError("polynomial text must be a non-empty string")
    try:
        tree = get_grammar_parser().parse(text)
        return BiPolyTransformer().transform(tree)
    except UnexpectedInput as e:
        raise PolynomialSyntaxError(
            f"Invalid polynomial syntax at {_get_error_context(text, e)}"
        ) from e
    except VisitError as e:
        if isinstance(e.orig_exc, RationalConstructionError):
            raise PolynomialSyntaxError(
                f"Invalid coefficient in '{text}': {e.orig_exc}"
            ) from e.orig_exc
        raise
