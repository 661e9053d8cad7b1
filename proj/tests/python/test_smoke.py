# Copyright 2026 The zdsolve Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib
import subprocess
from fractions import Fraction

import pytest

import zdsolve

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schema" / "report.schema.json").read_text())
GOLDEN = ROOT / "tests" / "golden"


def validate(report):
    jsonschema = pytest.importorskip("jsonschema")
    jsonschema.Draft202012Validator(SCHEMA).validate(report)


def contains(pair, value):
    lo, hi = zdsolve.interval(pair)
    return lo <= value <= hi


def test_dyadic():
    assert zdsolve.dyadic("-5*2^-3") == Fraction(-5, 8)
    assert zdsolve.dyadic("3*2^4") == 48


def test_solve_circle_and_line():
    r = zdsolve.solve("x1^2 + x2^2 - 1\nx1 - x2", precision=32, check=True)
    validate(r)
    assert r["count"] == 2
    signs = set()
    for sol in r["solutions"]:
        x, y = sol
        lo, hi = zdsolve.interval(x["re"])
        assert hi - lo < Fraction(1, 2**31)
        # x^2 = 1/2 on the real line
        assert (2 * lo * lo - 1) * (2 * hi * hi - 1) <= 0
        assert contains(x["im"], 0) and contains(y["im"], 0)
        signs.add(lo > 0)
    assert signs == {True, False}


def test_solve_drops_infinity():
    r = zdsolve.solve("x1*x2 - 1\nx2 - 1", precision=20)
    validate(r)
    assert r["count"] == 1
    assert r["infinity"]["dropped"] == 1
    for coord in r["solutions"][0]:
        assert contains(coord["re"], 1)


def test_roots_and_eliminate():
    r = zdsolve.roots("x^3 - x^2", precision=16)
    validate(r)
    assert [root["multiplicity"] for root in r["roots"]] == [2, 1]
    e = zdsolve.eliminate("x1^2 + x2^2 - 5\nx2^2 - 1", form=[1, 0])
    validate(e)
    assert e["polynomial"] == ["16", "0", "-8", "0", "1"]
    assert e["strong"] == "certified-strong"


def test_slf_and_grid_sep():
    s = zdsolve.slf("x1^2 - x1\nx2^2 - x2", block=9)
    validate(s)
    assert s["oracle_calls"] >= 3
    assert s["family"]["block_length"] == 9
    g = zdsolve.grid_sep((GOLDEN / "inputs" / "pair.txt").read_text(), block=5)
    validate(g)
    assert g["block_length"] == 5


def test_errors():
    with pytest.raises(zdsolve.ParseError):
        zdsolve.solve("x1 ** 2")
    with pytest.raises(zdsolve.InputError):
        zdsolve.solve("x1 - 1\nx2 - 1\nx1 + x2")
    with pytest.raises(zdsolve.PositiveDimensionalError):
        zdsolve.solve("vars 2\nx1 - x2\n2*x1 - 2*x2")
    with pytest.raises(ValueError):
        zdsolve.run("factor", "x")
    assert issubclass(zdsolve.ParseError, zdsolve.Error)


def test_matches_golden_reports():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    checked = 0
    for case in cases:
        args = case["args"]
        if "text" in args or "--timing" in args:
            continue
        options = {}
        it = iter(args[1:])
        for flag in it:
            if flag == "--check":
                options["check"] = True
            elif flag == "--form":
                options["form"] = [int(c) for c in next(it).split(",")]
            else:
                options[flag[2:]] = int(next(it))
        text = (GOLDEN / "inputs" / case["input"]).read_text()
        got = zdsolve.run(args[0], text, **options)
        expected = json.loads((GOLDEN / "expected" / (case["name"] + ".json")).read_text())
        assert got == expected, case["name"]
        validate(got)
        checked += 1
    assert checked >= 10


@pytest.mark.skipif("ZDSOLVE_CLI" not in os.environ, reason="CLI path not set")
def test_cli_agrees_with_module():
    path = GOLDEN / "inputs" / "conics.txt"
    out = subprocess.run([os.environ["ZDSOLVE_CLI"], "solve", str(path)],
                         capture_output=True, check=True, text=True).stdout
    assert json.loads(out) == zdsolve.solve(path.read_text())
