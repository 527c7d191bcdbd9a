import csv
import json
import subprocess
import sys

import pytest

from cdawg_arrays.cli import main, parse_range, UsageError

EXAMPLE_BODY = b"aabaababb"


@pytest.fixture
def example(tmp_path):
    path = tmp_path / "ex.txt"
    path.write_bytes(EXAMPLE_BODY)
    return path


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("args, body", [
    (["--family", "thue-morse", "--order", "3"], b"01101001"),
    (["--family", "fibonacci", "--order", "1"], b"a"),
    (["--family", "fibonacci", "--order", "5"], b"abaababa"),
    (["--family", "random", "--len", "0"], b""),
])
def test_generate(tmp_path, capsys, args, body):
    out = tmp_path / "t.txt"
    code, _, _ = run(["generate", *args, "--out", out], capsys)
    assert code == 0
    assert out.read_bytes() == body


def test_generate_random_is_seeded(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for p in (a, b):
        run(["generate", "--family", "random", "--len", "500", "--sigma", "4", "--seed", "3",
             "--out", p], capsys)
    assert a.read_bytes() == b.read_bytes() and len(a.read_bytes()) == 500


def test_generate_missing_order(tmp_path, capsys):
    code, _, err = run(["generate", "--family", "thue-morse", "--out", tmp_path / "x"], capsys)
    assert code == 2 and "--order" in err


def test_convert_rlbwt(example, capsys):
    code, out, _ = run(["convert", example, "--to", "rlbwt"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# rlbwt n=10 runs=6"
    assert len(lines[1:]) == 6


def test_convert_lz_parse(example, capsys):
    code, out, _ = run(["convert", example, "--to", "lz-parse"], capsys)
    assert code == 0
    assert out.splitlines()[1:] == ["1\t1", "2\t1", "3\t1", "4\t4", "8\t1", "9\t1", "10\t1"]


def test_convert_modes_are_byte_identical(example, capsys, tmp_path):
    for target in ("rlbwt", "plcp", "lpf", "irr-plcp", "lex-parse", "lz-parse"):
        a, b = tmp_path / f"{target}.text", tmp_path / f"{target}.free"
        run(["convert", example, "--to", target, "--out", a], capsys)
        run(["convert", example, "--to", target, "--mode", "text-free", "--out", b], capsys)
        assert a.read_bytes() == b.read_bytes()


def test_convert_plcp_dense_and_sparse(example, capsys):
    _, dense, _ = run(["convert", example, "--to", "plcp"], capsys)
    assert dense.splitlines() == ["# plcp n=10", "0", "1", "1", "4", "3", "2", "2", "1", "0", "0"]
    _, sparse, _ = run(["convert", example, "--to", "lpf", "--sparse"], capsys)
    assert sparse.startswith("# glpf order=pos n=10 entries=")


def test_build_then_convert_from_graph(example, capsys, tmp_path):
    g = tmp_path / "g.json"
    assert run(["build", example, "--out", g], capsys)[0] == 0
    _, direct, _ = run(["convert", example, "--to", "irr-plcp"], capsys)
    _, via, _ = run(["convert", "--graph", g, "--to", "irr-plcp"], capsys)
    _, free, _ = run(["convert", "--graph", g, "--mode", "text-free", "--to", "irr-plcp"], capsys)
    assert direct == via == free


def test_text_mode_needs_text_in_graph(example, capsys, tmp_path):
    g = tmp_path / "g.json"
    run(["build", example, "--mode", "text-free", "--out", g], capsys)
    code, _, _ = run(["convert", "--graph", g, "--to", "rlbwt"], capsys)
    assert code == 2
    assert run(["convert", "--graph", g, "--mode", "text-free", "--to", "rlbwt"], capsys)[0] == 0


def test_verify_passes(example, capsys):
    code, out, _ = run(["verify", example], capsys)
    assert code == 0
    assert "FAIL" not in out and "PASS" in out


def test_verify_reports_corrupted_graph(example, capsys, tmp_path):
    g = tmp_path / "g.json"
    run(["build", example, "--out", g], capsys)
    doc = json.loads(g.read_text())
    doc["edge_records"][0][2] += 1
    g.write_text(json.dumps(doc))
    code, out, _ = run(["verify", example, "--graph", g], capsys)
    assert code == 1
    assert "FAIL" in out and "graph:path-lengths" in out


def test_convert_rejects_corrupted_graph(example, capsys, tmp_path):
    g = tmp_path / "g.json"
    run(["build", example, "--out", g], capsys)
    doc = json.loads(g.read_text())
    doc["n"] += 1
    g.write_text(json.dumps(doc))
    code, _, err = run(["convert", "--graph", g, "--to", "rlbwt"], capsys)
    assert code == 1 and "path-count" in err


def test_input_with_sentinel_byte(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"ab\x00c")
    code, _, err = run(["convert", bad, "--to", "rlbwt"], capsys)
    assert code == 2 and err


def test_missing_input(tmp_path, capsys):
    code, _, _ = run(["convert", tmp_path / "nope.txt", "--to", "rlbwt"], capsys)
    assert code == 2
    code, _, _ = run(["convert", "--to", "rlbwt"], capsys)
    assert code == 2


def test_verify_oracle_cap(example, capsys):
    code, _, err = run(["verify", example, "--oracle-max-n", "5"], capsys)
    assert code == 2 and "oracle" in err


def test_size_cap(example, capsys):
    code, _, _ = run(["convert", example, "--to", "rlbwt", "--max-n", "5"], capsys)
    assert code == 2


def test_bench_csv(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    assert run(["bench", "--family", "thue-morse", "--order-range", "3..9", "--out", out], capsys)[0] == 0
    rows = list(csv.DictReader(out.open()))
    assert [int(r["order"]) for r in rows] == list(range(3, 10))
    for row in rows:
        e = int(row["e_R"])
        assert int(row["r"]) <= e and int(row["z"]) <= e
        assert int(row["n"]) == 2 ** int(row["order"]) + 1
        for key, value in row.items():
            if key.startswith("visits_"):
                assert int(value) <= 2 * e


def test_bench_is_deterministic(capsys):
    _, a, _ = run(["bench", "--family", "fibonacci", "--order-range", "2..12"], capsys)
    _, b, _ = run(["bench", "--family", "fibonacci", "--order-range", "2..12"], capsys)
    assert a == b and a.startswith("family,order,n,e_R")


@pytest.mark.parametrize("value, want", [("3..5", range(3, 6)), ("4", range(4, 5)), ("2:3", range(2, 4))])
def test_parse_range(value, want):
    assert parse_range(value) == want


@pytest.mark.parametrize("value", ["5..3", "x"])
def test_parse_range_rejects(value):
    with pytest.raises(UsageError):
        parse_range(value)


def test_module_entry_point(example):
    proc = subprocess.run([sys.executable, "-m", "cdawg_arrays", "convert", str(example), "--to", "rlbwt"],
                          capture_output=True, check=True)
    assert proc.stdout.startswith(b"# rlbwt n=10 runs=6")
