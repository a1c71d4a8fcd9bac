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
"""Tests for the `dcl` command line."""

import json

import pytest

from degenerate_cauchy.cli.main import main
from degenerate_cauchy.cli.records import (
    OutputRecord,
    TableFormatError,
    read_table,
    render_table,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_csv(capsys):
    code, out, _ = run(
        capsys, "table", "--seq", "degen_cauchy2", "--n-max", "2", "--x", "0/1", "--format", "csv"
    )
    assert code == 0
    assert out == (
        "n,lambda,x,value\n"
        "0,sym,0,1\n"
        "1,sym,0,1/2 + 1/2*l\n"
        "2,sym,0,-1/6 - 1/6*l^2\n"
    )


def test_table_daehee_values(capsys):
    code, out, _ = run(capsys, "table", "--seq", "daehee", "--n-max", "1")
    assert code == 0
    assert [line.split(",")[-1] for line in out.splitlines()[1:]] == ["1", "-1/2"]


def test_table_json(capsys):
    code, out, _ = run(
        capsys, "table", "--seq", "bernoulli_higher:2", "--n-max", "1", "--lambda", "1", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == [
        {"seq": "bernoulli_higher:2", "n": 0, "lambda": "1", "x": "sym", "value": "1"},
        {"seq": "bernoulli_higher:2", "n": 1, "lambda": "1", "x": "sym", "value": "x - 1"},
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--seq", "nosuch", "--n-max", "2"],
        ["table", "--seq", "daehee", "--n-max", "-1"],
        ["table", "--seq", "daehee", "--n-max", "2", "--x", "half"],
        ["series", "--name", "stirling1:1", "--order", "2"],
        ["series", "--name", "nosuch", "--order", "2"],
        ["verify", "--identity", "thm99", "--n-max", "2"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_unwritable_output_path(capsys, tmp_path):
    target = tmp_path / "missing" / "table.csv"
    code, _, err = run(capsys, "table", "--seq", "daehee", "--n-max", "2", "--out", str(target))
    assert code == 2
    assert "cannot write" in err


@pytest.mark.parametrize(
    ("name", "order", "expected"),
    [
        ("L", "2", ["0", "1", "-1/2*l"]),
        ("E", "3", ["0", "1", "1/2*l", "1/6*l^2"]),
        ("cauchy", "2", ["1", "x + 1/2", "1/2*x^2 - 1/12"]),
        ("daehee", "2", ["1", "-1/2", "1/3"]),
    ],
)
def test_series(capsys, name, order, expected):
    code, out, _ = run(capsys, "series", "--name", name, "--order", order)
    assert code == 0
    assert out.splitlines() == expected


def test_series_specialized(capsys):
    code, out, _ = run(capsys, "series", "--name", "L", "--order", "3", "--lambda", "2")
    assert code == 0
    assert out.splitlines() == ["0", "1", "-1", "4/3"]


def test_verify_single_identity_json(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "thm7", "--n-max", "8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 1
    report = payload[0]
    assert report["id"] == "thm7"
    assert report["n_max"] == 8
    assert all(result["pass"] for result in report["results"])
    assert report["first_failure"] is None


def test_verify_printed_only_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "1", "--variants", "printed")
    assert code == 1
    assert "thm3" in out and "FAIL" in out


def test_verify_both_exits_0_and_records_printed_failures(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "1", "--variants", "both", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    thm5 = [r for r in payload if r["id"] == "thm5"]
    assert [r["variant"] for r in thm5] == ["printed", "corrected"]
    assert thm5[0]["first_failure"] == {"n": 1, "diff": "l"}


def test_verify_uses_configured_default_n_max(capsys, monkeypatch):
    monkeypatch.setenv("DCL_VERIFICATION_DEFAULT_N_MAX", "3")
    code, out, _ = run(capsys, "verify", "--identity", "thm1", "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["n_max"] == 3


def test_max_order_clamps_requests(capsys, monkeypatch):
    monkeypatch.setenv("DCL_MAX_ORDER", "1")
    code, out, _ = run(capsys, "table", "--seq", "cauchy_num", "--n-max", "5")
    assert code == 0
    assert out.splitlines() == ["n,lambda,x,value", "0,sym,sym,1", "1,sym,sym,1/2"]


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert lines[0].startswith("eq3\tprinted\t")
    assert any(line.startswith("thm3\tprinted,corrected\t") for line in lines)


def test_config(capsys):
    code, out, _ = run(capsys, "config")
    assert code == 0
    assert "DCL_VERIFICATION_WORKERS" in out


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_table_round_trip(capsys, tmp_path, fmt):
    target = tmp_path / f"table.{fmt}"
    code, out, _ = run(
        capsys, "table", "--seq", "degen_cauchy2", "--n-max", "6", "--format", fmt, "--out", str(target)
    )
    assert code == 0
    assert out == ""
    text = target.read_text(encoding="utf-8")
    records = read_table(text, fmt, seq="degen_cauchy2")
    assert len(records) == 7
    assert render_table(records, fmt) == text


def test_read_table_rejects_bad_input():
    with pytest.raises(TableFormatError):
        read_table("a,b\n1,2\n", "csv")
    with pytest.raises(TableFormatError):
        read_table("{}", "json")
    with pytest.raises(TableFormatError):
        read_table("n,lambda,x,value\n1,sym\n", "csv")


def test_output_record_normalizes_fields():
    record = OutputRecord(n=1, lambda_="2/4", x="sym", value="1/2+x")
    assert record.lambda_ == "1/2"
    assert record.value == "x + 1/2"
    assert record.model_dump(by_alias=True)["lambda"] == "1/2"


@pytest.mark.parametrize(
    "text, fmt, where",
    [
        ("n,lambda,x,value\nabc,sym,sym,1\n", "csv", "line 2"),
        ("n,lambda,x,value\n0,sym,sym,1\n1,sym,sym,x +\n", "csv", "line 3"),
        ("n,lambda,x,value\n0,one,sym,1\n", "csv", "line 2"),
        ('[{"n": 0, "lambda": "sym", "x": "sym", "value": "1"}, {"n": "two"}]', "json", "record 1"),
        ("[7]", "json", "record 0"),
    ],
)
def test_read_table_reports_bad_fields_as_format_errors(text, fmt, where):
    with pytest.raises(TableFormatError, match=where):
        read_table(text, fmt)


def test_bare_stirling_table_exits_2_with_hint(capsys):
    code, out, err = run(capsys, "table", "--seq", "stirling1", "--n-max", "3")
    assert code == 2
    assert out == ""
    assert "stirling1_row" in err
    code, out, _ = run(capsys, "table", "--seq", "stirling1:1", "--n-max", "3")
    assert code == 0
    assert [line.split(",")[-1] for line in out.splitlines()[1:]] == ["0", "1", "-1", "2"]


def test_malformed_max_order_exits_2_naming_the_variable(capsys, monkeypatch):
    monkeypatch.setenv("DCL_MAX_ORDER", "abc")
    code, out, err = run(capsys, "list")
    assert code == 2
    assert out == ""
    assert "DCL_MAX_ORDER='abc'" in err
