import json

import pytest

from hwbcirc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_oracle_prints_published_table(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split()[1:] == ["000", "100", "010", "110",
                                    "001", "101", "011", "111"]
    assert lines[1].split()[1:] == ["000", "010", "001", "101",
                                    "100", "011", "110", "111"]


def test_synth_then_verify_quantum_n2(tmp_path, capsys):
    path = tmp_path / "c.hwbc"
    code, _, _ = run_cli(capsys, "synth", "--method", "quantum", "--n", "2",
                         "--out", str(path))
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", "--circuit", str(path),
                           "--n", "2", "--mode", "unitary")
    assert code == 0
    report = json.loads(out)
    assert report["mode"] == "unitary" and report["max_deviation"] <= 1e-8


def test_synth_then_verify_each_method(tmp_path, capsys):
    cases = [
        (["--method", "ancilla", "--n", "6"], ["--n", "6", "--mode", "exhaustive"]),
        (["--method", "ancilla-free", "--n", "5"], ["--n", "5", "--mode", "exhaustive"]),
        (["--method", "ancilla-free", "--n", "6", "--lower", "nct"],
         ["--n", "6", "--mode", "sample:200"]),
        (["--method", "quantum", "--n", "3", "--lower", "clifford-rz"],
         ["--n", "3", "--mode", "unitary"]),
    ]
    for synth_args, verify_args in cases:
        path = tmp_path / "x.hwbc"
        code, _, _ = run_cli(capsys, "synth", *synth_args, "--out", str(path))
        assert code == 0
        code, _, _ = run_cli(capsys, "verify", "--circuit", str(path), *verify_args)
        assert code == 0, (synth_args, verify_args)


def test_verify_failure_exit_code(tmp_path, capsys):
    path = tmp_path / "wrong.hwbc"
    path.write_text("hwbc 1\n"
                    "wires 3 kind reversible ancillas 0 direction right\n"
                    "NOT 0\n")
    code, out, err = run_cli(capsys, "verify", "--circuit", str(path),
                             "--n", "3", "--mode", "exhaustive")
    assert code == 1
    assert "counterexample" in json.loads(out)
    assert "FAILED" in err


def test_malformed_file_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.hwbc"
    path.write_text("hwbc 1\nwires 3 kind reversible\n")
    code, _, err = run_cli(capsys, "verify", "--circuit", str(path), "--n", "3")
    assert code == 2
    assert "line 2" in err


def test_unknown_flag_exit_2(capsys):
    code, _, _ = run_cli(capsys, "oracle", "--n", "3", "--frobnicate")
    assert code == 2


def test_stats_command(tmp_path, capsys):
    path = tmp_path / "c.hwbc"
    run_cli(capsys, "synth", "--method", "ancilla", "--n", "7", "--out", str(path))
    code, out, _ = run_cli(capsys, "stats", "--circuit", str(path))
    assert code == 0
    stats = json.loads(out)
    assert stats["wires"] == 11 and stats["ancillas"] == 4
    assert stats["total"] == sum(stats["gates_by_kind"].values())


def test_synth_stats_flag(capsys):
    code, out, _ = run_cli(capsys, "synth", "--method", "ancilla-free",
                           "--n", "5", "--stats")
    assert code == 0
    json_start = out.index("{")
    stats = json.loads(out[json_start:])
    assert {"c5_count", "program_lengths", "depth_per_bit", "total_gates"} <= set(stats)


def test_synth_output_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.hwbc", tmp_path / "b.hwbc"
    run_cli(capsys, "synth", "--method", "quantum", "--n", "4", "--out", str(a))
    run_cli(capsys, "synth", "--method", "quantum", "--n", "4", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_sampled_verify_is_seed_deterministic(tmp_path, capsys):
    path = tmp_path / "c.hwbc"
    run_cli(capsys, "synth", "--method", "ancilla", "--n", "9", "--out", str(path))
    outs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "verify", "--circuit", str(path),
                               "--n", "9", "--mode", "sample:64", "--seed", "99")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
