"""Command-line behavior: parsing rules, exit codes, JSON stability."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from zerosum.cli import SplitMix64, main, parse_indices, parse_raw_sequence

CLI = [sys.executable, "-m", "zerosum.cli"]


def run_cli(*args):
    return subprocess.run(CLI + list(args), capture_output=True, text=True)


def run_json(capsys, *args):
    code = main(list(args) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_splitmix64_reference_values():
    # First three outputs for seed 1234567; fixed by the documented algorithm.
    rng = SplitMix64(1234567)
    got = [rng.next64() for _ in range(3)]
    assert got == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_splitmix64_below_advances_state():
    a = SplitMix64(42)
    b = SplitMix64(42)
    seq_a = [a.below(10) for _ in range(8)]
    seq_b = [b.below(10) for _ in range(8)]
    assert seq_a == seq_b
    assert a.below(1) == 0


def test_parse_raw_sequence_rank1_commas():
    assert parse_raw_sequence("1,1,1,1", rank=1) == [[1], [1], [1], [1]]
    assert parse_raw_sequence("0;1;2", rank=1) == [[0], [1], [2]]
    assert parse_raw_sequence("-3", rank=1) == [[-3]]


def test_parse_raw_sequence_rank2():
    assert parse_raw_sequence("1,0;0,1;1,1;1,0", rank=2) == [
        [1, 0],
        [0, 1],
        [1, 1],
        [1, 0],
    ]
    # A single inline element for a rank-2 group needs no separator.
    assert parse_raw_sequence("1,0", rank=2) == [[1, 0]]


def test_parse_raw_sequence_from_file(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("1,0\n\n0,1\n1,1\n1,0\n")
    assert parse_raw_sequence(str(path), rank=2) == [[1, 0], [0, 1], [1, 1], [1, 0]]


def test_parse_raw_sequence_rejects_junk():
    from zerosum import InputError

    with pytest.raises(InputError):
        parse_raw_sequence("", rank=1)
    with pytest.raises(InputError):
        parse_raw_sequence("1,x,3", rank=1)
    with pytest.raises(InputError):
        parse_indices("1,two")


def test_solve_json_shape(capsys):
    code, doc = run_json(capsys, "solve", "--group", "4", "--seq", "1,1,1,1")
    assert code == 0
    assert doc["exit_code"] == 0
    assert doc["results"]["indices"] == [1, 2, 3, 4]
    assert doc["results"]["ord_cost"] == 4
    assert doc["results"]["verified"] is True
    assert "moves" not in doc


def test_solve_trace_includes_moves(capsys):
    code, doc = run_json(capsys, "solve", "--group", "4", "--seq", "1,1,1,1", "--trace")
    assert code == 0
    assert len(doc["moves"]) == 3
    assert doc["moves"][0] == {
        "vertex_divisor": 4,
        "prime": 2,
        "weight": 2,
        "consumed": [1, 2],
        "selected": [1, 2],
        "new_id": 5,
    }


def test_solve_multi_factor(capsys):
    code, doc = run_json(capsys, "solve", "--group", "2,2", "--seq", "1,0;0,1;1,1;1,0")
    assert code == 0
    assert len(doc["results"]["indices"]) <= 2


def test_solve_zero_element(capsys):
    code, doc = run_json(capsys, "solve", "--group", "5", "--seq", "0,1,2,3,4")
    assert code == 0
    assert doc["results"]["indices"] == [1]


def test_solve_from_file(tmp_path, capsys):
    path = tmp_path / "seq.txt"
    path.write_text("1\n1\n1\n1\n")
    code, doc = run_json(capsys, "solve", "--group", "4", "--seq", str(path))
    assert code == 0
    assert doc["results"]["indices"] == [1, 2, 3, 4]


def test_solve_cyclic_examples(capsys):
    code, doc = run_json(capsys, "solve-cyclic", "--n", "4", "--seq", "1,1,1,1")
    assert code == 0
    assert doc["results"]["indices"] == [1, 2, 3, 4]
    assert doc["results"]["gcd_sum"] == 4

    code, doc = run_json(capsys, "solve-cyclic", "--n", "3", "--seq", "0,5,7")
    assert code == 0
    assert doc["results"]["indices"] == [1]

    code, doc = run_json(capsys, "solve-cyclic", "--n", "6", "--seq", "2,3,2,3,2,3")
    assert code == 0
    assert doc["results"]["gcd_sum"] <= 6
    assert doc["results"]["residue_sum_mod_n"] == 0


def test_solve_cyclic_accepts_any_integers(capsys):
    # '=' keeps argparse from reading the leading minus as an option.
    code, doc = run_json(capsys, "solve-cyclic", "--n", "5", "--seq=-7,23,104,-1,0")
    assert code == 0
    assert doc["results"]["gcd_sum"] <= 5


def test_verify_round_trip(capsys):
    code, doc = run_json(
        capsys, "verify", "--group", "2,2", "--seq", "1,0;0,1;1,1;1,0", "--indices", "1,4"
    )
    assert code == 0
    assert doc["results"]["passed"] is True


def test_verify_order_condition_fails(capsys):
    code, doc = run_json(
        capsys, "verify", "--group", "2,2", "--seq", "1,0;0,1;1,1;1,0", "--indices", "1,2,3"
    )
    assert code == 1
    assert doc["results"]["passed"] is False
    assert doc["results"]["failures"]


def test_oracle_exit_codes(capsys):
    code, doc = run_json(capsys, "oracle", "--group", "4", "--seq", "1,1,1")
    assert code == 1
    assert doc["results"]["feasible"] is False

    code, doc = run_json(capsys, "oracle", "--group", "6", "--seq", "2,3,2,3,2,3")
    assert code == 0
    assert doc["results"]["min_cost"] == 6
    assert doc["results"]["qualifies"] is True


def test_pebbling_number_cli(capsys):
    for spec, expect in (("cube:2,2", 4), ("lattice:4", 4), ("path:3", 3)):
        code, doc = run_json(capsys, "pebbling-number", "--graph", spec)
        assert code == 0
        assert doc["results"]["pebbling_number"] == expect
        assert doc["results"]["witness_unsolvable"] is True


def test_davenport_cli(capsys):
    for group, expect in (("6", 6), ("2,2", 3), ("1", 1)):
        code, doc = run_json(capsys, "davenport", "--group", group)
        assert code == 0
        assert doc["results"]["davenport"] == expect
    code, doc = run_json(capsys, "davenport", "--group", "2,2", "--weighted")
    assert code == 0
    assert doc["results"]["davenport"] == 4


def test_stress_zero_trials_is_vacuous(capsys):
    code, doc = run_json(capsys, "stress", "--group", "2,2,2", "--trials", "0", "--seed", "7")
    assert code == 0
    assert doc["results"]["trials"] == 0
    assert doc["results"]["failed"] == 0


def test_stress_small_battery(capsys):
    code, doc = run_json(capsys, "stress", "--group", "12", "--trials", "40", "--seed", "7")
    assert code == 0
    assert doc["results"]["passed"] == 40
    assert doc["results"]["oracle_checked"] == 40


def test_stress_json_is_byte_identical(capsys):
    args = ["stress", "--group", "2,2,2", "--trials", "25", "--seed", "11", "--json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second


def test_solve_json_is_byte_identical(capsys):
    seq = ";".join(f"{i % 9},{(i * 5) % 3}" for i in range(27))
    args = ["solve", "--group", "9,3", "--seq", seq, "--json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second


def test_exit_code_input_errors(capsys):
    assert main(["solve", "--group", "x", "--seq", "1"]) == 2
    capsys.readouterr()
    assert main(["solve", "--group", "4", "--seq", "1,1,1"]) == 2
    capsys.readouterr()
    assert main(["verify", "--group", "4", "--seq", "1,1,1,1", "--indices", "9"]) == 2
    capsys.readouterr()
    assert main(["pebbling-number", "--graph", "torus:2"]) == 2
    capsys.readouterr()
    assert main(["pebbling-number", "--graph", "cube:1,2"]) == 2
    capsys.readouterr()
    assert main(["davenport", "--group", "32"]) == 2
    capsys.readouterr()
    assert main(["stress", "--group", "4", "--trials", "-1"]) == 2
    capsys.readouterr()


def test_argparse_failures_map_to_input_error(capsys):
    assert main([]) == 2
    capsys.readouterr()
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
    assert main(["solve", "--group", "4"]) == 2
    capsys.readouterr()
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_subprocess_entry_points():
    done = run_cli("solve", "--group", "4", "--seq", "1,1,1,1")
    assert done.returncode == 0
    assert "verify: PASS" in done.stdout
    assert "elapsed" in done.stdout

    done = run_cli("oracle", "--group", "4", "--seq", "1,1,1")
    assert done.returncode == 1
    assert "infeasible" in done.stdout

    done = run_cli("solve", "--group", "4", "--seq", "nope")
    assert done.returncode == 2
    assert "input error" in done.stderr


def test_console_script_installed():
    done = subprocess.run(
        ["zerosum", "solve", "--group", "2,2", "--seq", "1,0;0,1;1,1;1,0", "--json"],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0
    doc = json.loads(done.stdout)
    assert doc["results"]["verified"] is True
