import json
import subprocess
import sys
from fractions import Fraction as F

import pytest
from hypothesis import given

from avgiv.cli import ParseError, main, parse_number
from avgiv.exact import make_exact, sqrt
from conftest import field_values


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2/3", F(2, 3)),
        ("-4/6", F(-2, 3)),
        ("1/2*sqrt(2)", sqrt(2) / 2),
        ("1+1/3*sqrt(5)", 1 + sqrt(5) / 3),
        (" 1 - sqrt( 5 ) ", 1 - sqrt(5)),
        ("1+-1/3*sqrt(5)", 1 - sqrt(5) / 3),
        ("sqrt(8)", 2 * sqrt(2)),
        ("sqrt(9)", 3),
        ("-1*sqrt(2)", -sqrt(2)),
    ],
)
def test_parse_number(text, expected):
    assert parse_number(text) == expected


@pytest.mark.parametrize("text", ["", "1/", "abc", "1.5", "sqrt(-2)", "2*", "1+2", "--1", "1/0"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_number(text)


@given(field_values())
def test_format_round_trip(vals):
    (x,) = vals
    assert parse_number(str(x)) == x


def test_member(capsys):
    code, doc = run_json(capsys, "member", "--alphabet", "0,1", "--pi", "4/5")
    assert code == 0
    assert doc["command"] == "member" and doc["alphabet"] == ["0", "1"]
    assert doc["result"]["member"] is True and doc["result"]["t"] == 5


def test_witness(capsys):
    code, doc = run_json(capsys, "witness", "--alphabet", "0,1", "--pi", "7/10")
    w = doc["result"]["witness"]
    assert code == 0
    assert w == {"prefix": ["0"], "tail": "1", "step": 3, "below": "2/3", "above": "3/4"}


def test_witness_not_skippable(capsys):
    _, doc = run_json(capsys, "witness", "--alphabet", "0,1/2,1", "--pi", "5/6")
    assert doc["result"]["witness"] == "not_skippable"


def test_ivset(capsys):
    code, doc = run_json(capsys, "ivset", "--alphabet", "0,1/3,1/2,1", "--count", "3")
    assert code == 0
    assert doc["result"]["M"] == 6
    assert doc["result"]["elements"] == ["5/6", "11/12", "17/18"]


def test_ivset_empty_and_dvset(capsys):
    _, doc = run_json(capsys, "ivset", "--alphabet", "0,1/2*sqrt(2),1")
    assert doc["result"]["empty"] is True and doc["result"]["elements"] == []
    _, doc = run_json(capsys, "dvset", "--alphabet", "0,1", "--count", "3")
    assert doc["result"]["elements"] == ["1/2", "1/3", "1/4"]


def test_oracle_and_horizon(capsys, monkeypatch):
    code, doc = run_json(capsys, "oracle", "--alphabet", "0,1", "--pi", "7/10", "--max-n", "10")
    assert code == 0
    assert doc["result"]["found"] and doc["result"]["counts"] == [1, 2] and doc["result"]["n"] == 3
    code, doc = run_json(capsys, "oracle", "--alphabet", "0,1", "--pi", "4/5", "--strict")
    assert code == 4 and doc["result"]["found"] is False
    code, _ = run_json(capsys, "oracle", "--alphabet", "0,1", "--pi", "4/5")
    assert code == 0
    monkeypatch.setenv("AVGIV_MAX_N", "2")
    code, doc = run_json(capsys, "oracle", "--alphabet", "0,1", "--pi", "7/10", "--strict")
    assert code == 4 and doc["result"]["max_n"] == 2


def test_simulate(capsys):
    _, doc = run_json(capsys, "simulate", "--sequence", "0", "--tail", "1/2",
                      "--pi", "1/3", "--horizon", "4")
    r = doc["result"]
    assert r["averages"] == ["0", "1/4", "1/3", "3/8"]
    assert r["events"] == [{"kind": "hit", "step": 3}]
    assert r["first_upcross"] == {"kind": "hit", "step": 3}
    _, doc = run_json(capsys, "simulate", "--sequence", "1,0,0", "--pi", "2/5")
    # averages 1, 1/2, 1/3
    assert doc["result"]["events"] == [{"kind": "skip_down", "step": 2}]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["member", "--alphabet", "0,1", "--pi", "2"], 3),
        (["member", "--alphabet", "1,0", "--pi", "1/2"], 3),
        (["member", "--alphabet", "0", "--pi", "1/2"], 3),
        (["member", "--alphabet", "0,1/2*sqrt(2),1", "--pi", "1/2*sqrt(3)"], 3),
        (["member", "--alphabet", "0,1", "--pi", "1/0"], 2),
        (["member", "--alphabet", "0,x", "--pi", "1/2"], 2),
        (["simulate", "--sequence", "0,1", "--horizon", "5"], 3),
        (["simulate", "--sequence", "0,2", "--alphabet", "0,1"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert capsys.readouterr().err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["member", "--alphabet", "0,1"])
    assert exc.value.code == 2


def test_json_numbers_reparse(capsys):
    _, doc = run_json(capsys, "witness", "--alphabet", "0,1/2*sqrt(2),1", "--pi", "4/5")
    w = doc["result"]["witness"]
    for text in w["prefix"] + [w["tail"], w["below"], w["above"]]:
        assert str(parse_number(text)) == text
    assert parse_number(w["above"]) == make_exact(F(1, 2), F(1, 4), 2)


def test_json_deterministic(capsys):
    argv = ["ivset", "--alphabet", "0,1/3,1/2,1", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "avgiv", "member", "--alphabet", "0,1", "--pi", "4/5"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "t = 5" in proc.stdout
