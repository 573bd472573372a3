import pytest

from lacodes.cli import main
from lacodes.io import read_code_file


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_generate_verify_round_trip(tmp_path, capsys):
    code_path = tmp_path / "c.code"
    rc, _, _ = run(capsys, "generate", "--n", "16", "--seed", "1", "--mode", "la3",
                   "--out", str(code_path))
    assert rc == 0
    words, n, complete = read_code_file(code_path)
    assert n == 16 and complete and len(words) == 2048
    rc, out, _ = run(capsys, "verify", str(code_path))
    assert rc == 0
    assert "extended_perfect=1" in out


def test_generate_deterministic(tmp_path, capsys):
    a = tmp_path / "a.code"
    b = tmp_path / "b.code"
    for p in (a, b):
        rc, _, _ = run(capsys, "generate", "--n", "16", "--seed", "7", "--out", str(p))
        assert rc == 0
    assert a.read_bytes() == b.read_bytes()


def test_generate_identity_tree_is_top_code(tmp_path, capsys):
    from lacodes.scaffold import hamming_code

    path = tmp_path / "h.code"
    rc, _, _ = run(capsys, "generate", "--n", "16", "--seed", "1", "--mode", "la2",
                   "--tree", "identity", "--out", str(path))
    assert rc == 0
    assert read_code_file(path)[0] == hamming_code(16)


def test_generate_identity_la3_fails_validation(tmp_path, capsys):
    rc, _, err = run(capsys, "generate", "--n", "16", "--mode", "la3",
                     "--tree", "identity", "--out", str(tmp_path / "x.code"))
    assert rc == 1
    assert "degenerate" in err


def test_generate_from_tree_file(tmp_path, capsys):
    code1 = tmp_path / "c1.code"
    tree1 = tmp_path / "c1.tree"
    run(capsys, "generate", "--n", "16", "--seed", "3", "--out", str(code1),
        "--tree-out", str(tree1))
    code2 = tmp_path / "c2.code"
    rc, _, _ = run(capsys, "generate", "--n", "16", "--tree", str(tree1),
                   "--out", str(code2))
    assert rc == 0
    assert code1.read_bytes() == code2.read_bytes()


def test_verify_failure_exit_code(tmp_path, capsys):
    path = tmp_path / "t.code"
    run(capsys, "generate", "--n", "16", "--seed", "2", "--out", str(path))
    lines = path.read_text().splitlines()
    path.write_text("\n".join([lines[0].replace("complete=1", "complete=0")] + lines[1:-1]) + "\n")
    rc, out, _ = run(capsys, "verify", str(path))
    assert rc == 1
    assert "omega_covers_odd=0" in out


def test_verify_malformed_exit_code(tmp_path, capsys):
    path = tmp_path / "junk.code"
    path.write_text("not a header\n")
    rc, _, err = run(capsys, "verify", str(path))
    assert rc == 2
    assert err


def test_analyze_reports_rank_kernel(tmp_path, capsys):
    path = tmp_path / "c.code"
    run(capsys, "generate", "--n", "16", "--seed", "4", "--out", str(path))
    rc, out, _ = run(capsys, "analyze", str(path))
    assert rc == 0
    assert "rank=13" in out and "rank_deficiency=2" in out
    assert "kernel_dimension=" in out


def test_puncture_command(tmp_path, capsys):
    from lacodes.analysis import verify_perfect

    path = tmp_path / "c.code"
    out_path = tmp_path / "c.punct"
    run(capsys, "generate", "--n", "16", "--seed", "5", "--out", str(path))
    rc, _, _ = run(capsys, "puncture", str(path), "--out", str(out_path))
    assert rc == 0
    header, *body = out_path.read_text().splitlines()
    assert header == "n=15 complete=1"
    assert verify_perfect([int(s, 2) for s in body], 15)


def test_puncture_rejects_broken_code(tmp_path, capsys):
    path = tmp_path / "t.code"
    run(capsys, "generate", "--n", "16", "--seed", "2", "--out", str(path))
    lines = path.read_text().splitlines()
    path.write_text("\n".join([lines[0].replace("complete=1", "complete=0")] + lines[1:-1]) + "\n")
    rc, _, err = run(capsys, "puncture", str(path), "--out", str(tmp_path / "o"))
    assert rc == 1 and "not an extended 1-perfect" in err


def test_count_exact(capsys):
    rc, out, _ = run(capsys, "count", "--n", "16", "--what", "exact")
    assert rc == 0
    assert "15692092416000000" in out
    assert "2^53.80" in out


def test_count_all(capsys):
    rc, out, _ = run(capsys, "count", "--n", "16", "--what", "all")
    assert rc == 0
    for key in ("exact", "upper", "reps t=3", "vasilev", "noneq_extended",
                "asymptotic k=2"):
        assert key in out


def test_count_rejects_small_n(capsys):
    rc, _, err = run(capsys, "count", "--n", "8", "--what", "exact")
    assert rc == 2 and err


def test_generate_requires_big_for_32(tmp_path, capsys):
    rc, _, err = run(capsys, "generate", "--n", "32", "--out", str(tmp_path / "x"))
    assert rc == 2
    assert "--big" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generate"])  # missing --out
    assert exc.value.code == 2


def test_report_command(tmp_path, capsys):
    code_path = tmp_path / "c.code"
    run(capsys, "generate", "--n", "16", "--seed", "6", "--out", str(code_path))
    out_dir = tmp_path / "rep"
    rc, out, _ = run(capsys, "report", "--out-dir", str(out_dir),
                     "--lengths", "16", "32", "--code", str(code_path))
    assert rc == 0
    for name in ("bounds.csv", "bounds.png", "code_report.txt", "weights.csv",
                 "weights.png"):
        assert (out_dir / name).stat().st_size > 0
    assert "rank=13" in (out_dir / "code_report.txt").read_text()
