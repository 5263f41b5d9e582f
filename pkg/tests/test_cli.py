import io
import subprocess
import sys

import pytest

from ecbench.bench import (
    TIMING_COLUMNS, BenchConfig, emit_csv, emit_markdown, parse_csv, run_bench, table_rows,
)
from ecbench.cli import main
from ecbench.errors import ConfigError


def run_cli(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_table_default(capsys):
    code, out, _ = run_cli(["table"], capsys)
    assert code == 0
    assert "| binary | - | 80 | 160 | 0 |" in out
    assert "| complement_window | 3 | 40 | 157 | 7 |" in out
    assert "| complement_window | 5 | 27 | 155 | 31 |" in out
    assert "| complement_window | 10 | 15 | 150 | 1023 |" in out


def test_table_rows():
    rows = {(r.scheme, r.w): r for r in table_rows(160, [3, 5, 10])}
    assert (rows["binary", None].point_adds, rows["binary", None].point_doubles) == (80, 160)
    assert (rows["wnaf", 3].point_adds, rows["wnaf", 3].point_doubles, rows["wnaf", 3].precomp) == (40, 161, 3)


def test_bench_csv_roundtrip_and_baseline():
    cfg = BenchConfig(coords=["jacobian", "edwards"], recodings=["binary", "complement_window"], widths=[3],
                      scalars=3, seed=5, timing=True)
    rows = run_bench(cfg)
    assert [r.label for r in rows] == ["jacobian/binary", "jacobian/complement_window/w=3",
                                       "edwards/binary", "edwards/complement_window/w=3"]
    assert rows[0].mult_improvement_pct == 0.0 and rows[0].time_improvement_pct == 0.0
    assert parse_csv(emit_csv(rows)) == rows
    cw = rows[1]
    assert (cw.model_pa, cw.model_pd, cw.model_precomp) == (40, 157, 7)
    assert cw.point_double == 3 * 157
    assert cw.field_inv == 3
    assert "| secp160r1 | jacobian/binary |" in emit_markdown(rows)


def test_bench_deterministic(capsys):
    argv = ["bench", "--coord", "jacobian,inverted_edwards", "--recode", "naf,wnaf", "--w", "3,4",
            "--scalars", "4", "--seed", "9"]
    _, first, _ = run_cli(argv, capsys)
    _, second, _ = run_cli(argv, capsys)
    assert first == second
    assert not any(col in first.splitlines()[0] for col in TIMING_COLUMNS)


def test_bench_timing_columns(capsys):
    code, out, _ = run_cli(["bench", "--coord", "ld", "--recode", "binary", "--scalars", "2", "--timing",
                            "--format", "csv"], capsys)
    assert code == 0
    header = out.splitlines()[0].split(",")
    assert all(c in header for c in TIMING_COLUMNS)
    row = parse_csv(out)[0]
    assert row.mean_ms > 0 and row.mult_improvement_pct is None


def test_bench_with_config_file(tmp_path, capsys):
    path = tmp_path / "w.cfg"
    path.write_text("model = weierstrass\np = 23\na = 1\nb = 1\ngx = 3\ngy = 10\nn = 28\nh = 1\n")
    code, out, _ = run_cli(["bench", "--config", str(path), "--recode", "naf", "--scalars", "3",
                            "--bits", "4"], capsys)
    assert code == 0
    assert parse_csv(out)[0].coord == "jacobian"


def test_config_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("model = weierstrass\np = 23\na = 1\nb = 2\ngx = 3\ngy = 10\nn = 28\nh = 1\n")
    code, _, err = run_cli(["bench", "--config", str(bad)], capsys)
    assert code == 2 and "generator-on-curve" in err
    code, _, err = run_cli(["bench", "--config", "toy_w23", "--coord", "ld"], capsys)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--coord", "affine"])
    assert exc.value.code == 2
    with pytest.raises(ConfigError):
        BenchConfig(widths=[1])


def test_verify_config_suite(tmp_path, capsys):
    code, out, _ = run_cli(["verify", "--suite", "config"], capsys)
    assert code == 0 and out.startswith("PASS config")
    bad = tmp_path / "bad.cfg"
    bad.write_text("model = weierstrass\np = 23\na = 1\nb = 2\ngx = 3\ngy = 10\nn = 28\nh = 1\n")
    code, out, _ = run_cli(["verify", "--suite", "config", "--config", str(bad)], capsys)
    assert code == 1
    assert "FAIL config" in out and "generator-on-curve" in out


def test_verify_fast_suites(capsys):
    code, out, _ = run_cli(["verify", "--suite", "fields", "--suite", "toy"], capsys)
    assert code == 0
    assert out.count("PASS") == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ecbench.cli", "table", "--m", "160", "--w", "5",
                           "--format", "csv"], capture_output=True, text=True, check=True)
    assert "complement_window,5,27,155,31" in proc.stdout
