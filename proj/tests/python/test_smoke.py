# Copyright 2026 The profitshare Authors
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
from fractions import Fraction
from pathlib import Path

import pytest

import profitshare as ps

ROOT = Path(os.environ.get("PROFITSHARE_SOURCE_DIR", Path(__file__).resolve().parents[2]))


def test_version():
    assert ps.__version__ == "0.1.0"


def test_valuations_are_exact():
    v = ps.Valuation.additive([Fraction(1, 3), Fraction(1, 2)])
    assert v([1, 2]) == Fraction(5, 6)
    assert v.marginal([1], 2) == Fraction(1, 2)
    cover = ps.Valuation.coverage(3, [([1, 2], 1), ([2, 3], 1), ([1, 3], 1)])
    assert cover([1]) == 2
    assert cover.validate()["submodular"] is True
    squares = ps.Valuation.table(2, [0, 1, 1, 4])
    report = squares.validate()
    assert report["submodular"] is False
    assert report["violations"][0]["I"] == []
    assert report["violations"][0]["J"] == [1]


def test_two_party_tight_game_prices():
    game = ps.two_party_tight_game(3)
    assert game.payoffs([1, 2, 2]) == [Fraction(1, 3), Fraction(1, 2), Fraction(1, 2)]
    report = game.prices()
    assert report["poa"] == "3/2"
    assert report["pos"] == "1"
    trace = game.run([1, 1, 1])
    assert len(trace["steps"]) == 1
    assert trace["final_state"] == [2, 1, 1]
    assert game.classify([1, 2, 2])["is_nash"] is True


def test_labor_union_file_runs_n_steps():
    game, start = ps.load_game(str(ROOT / "data" / "lu_unaffiliated.json"))
    trace = game.run(start, selector="roundrobin")
    assert len(trace["steps"]) == game.n
    assert trace["converged"]
    _, total = game.improvement_profile(trace["final_state"])
    assert total == 0


def test_errors_map_to_python_exceptions():
    game = ps.two_party_tight_game(3, ps.Scheme.FAIR_VALUE)
    with pytest.raises(ps.NoOpMove):
        game.apply_move([1, 1, 1], 1, 1)
    with pytest.raises(ValueError):
        ps.parse_game({"n": 2, "m": 3, "scheme": "fair_value", "valuations": []})


def test_cli_entry_point():
    code, out, _ = ps.run_cli(["prices", str(ROOT / "data" / "prop6_n3.json"), "--json"])
    assert code == 0
    assert json.loads(out)["report"]["poa"] == "3/2"
