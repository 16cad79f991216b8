import csv
import io
import json

import pytest

from sparsecurve import bounds
from sparsecurve.cli import COLUMNS, main, parse_system
from sparsecurve.errors import ParseError, ZeroF
from sparsecurve.intersect import CurveSystem, count_solutions
from sparsecurve.poly import parse_sparse


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def rows_of(text):
    lines = text.splitlines()
    assert lines[0].startswith("# sparsecurve-report v1 ")
    return list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))


def test_count_line_circle(tmp_path, capsys):
    f = write(tmp_path, "f.txt", "1 0 1\n-1 1 0\n")
    g = write(tmp_path, "g.txt", "1 2 0\n1 0 2\n-2 0 0\n")
    status, out, _ = run(capsys, "--mode", "count", "--f", f, "--g", g)
    assert status == 0
    (row,) = rows_of(out)
    assert row["count"] == "2"
    assert int(row["bound"]) == bounds.paper_bound_general(1, 3)
    assert row["bound_ok"] == "true"


def test_bounds_grid(capsys):
    status, out, _ = run(capsys, "--mode", "bounds", "--dmax", "2", "--tmax", "2")
    assert status == 0
    rows = rows_of(out)
    assert len(rows) == 4
    row = next(r for r in rows if r["d"] == "2" and r["t"] == "2")
    assert row["paper_general"] == "95" and row["optm"] == "6" and row["bezout"] == "4"


def test_verify_seed_42(capsys):
    status, out, _ = run(capsys, "--mode", "verify", "--seed", "42", "--n", "10",
                         "--dmax", "2", "--tmax", "3")
    rows = rows_of(out)
    assert status == 0 and len(rows) == 10
    assert all(r[k] == "true" for r in rows for k in r if k.endswith("_ok"))
    assert [r["instance"] for r in rows] == [str(i) for i in range(10)]


def test_rows_replay_standalone(capsys):
    _, out, _ = run(capsys, "--mode", "verify", "--seed", "3", "--n", "5", "--dmax", "3")
    for r in rows_of(out):
        F = parse_sparse(r["F_terms"].replace("; ", "\n")).to_dense()
        G = parse_sparse(r["G_terms"].replace("; ", "\n"))
        rep = count_solutions(CurveSystem(F, G))
        assert str(rep.total if rep.is_finite else "infinite") == r["count"]


@pytest.mark.parametrize("mode", ["verify", "bounds", "derivcheck", "wronskcheck", "count"])
def test_deterministic_and_json_mirrors_csv(tmp_path, capsys, mode):
    a, b, j = (str(tmp_path / n) for n in ("a.csv", "b.csv", "a.json"))
    common = ["--mode", mode, "--seed", "17", "--n", "4", "--dmax", "2", "--tmax", "3"]
    assert main(common + ["--out", a]) == 0
    assert main(common + ["--out", b]) == 0
    assert main(common + ["--out", j, "--format", "json"]) == 0
    assert open(a, "rb").read() == open(b, "rb").read()
    doc = json.load(open(j))
    assert doc["version"] == 1 and doc["mode"] == mode and doc["columns"] == COLUMNS[mode]
    csv_rows = rows_of(open(a).read())
    assert len(doc["rows"]) == len(csv_rows)
    for jr, cr in zip(doc["rows"], csv_rows):
        assert list(jr) == list(cr) == COLUMNS[mode]


def test_workers_do_not_change_output(tmp_path):
    a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    common = ["--mode", "verify", "--seed", "8", "--n", "6", "--dmax", "2"]
    assert main(common + ["--out", a]) == 0
    assert main(common + ["--out", b, "--workers", "3"]) == 0
    assert open(a).read() == open(b).read()


def test_derivcheck_rows(capsys):
    status, out, _ = run(capsys, "--mode", "derivcheck")
    rows = rows_of(out)
    assert status == 0 and len(rows) == 16
    assert all(float(r["rel_error"]) <= 1e-6 for r in rows)


def test_parse_system(tmp_path):
    f = write(tmp_path, "f.txt", "# line\n1/3 0 1\n-1 1 0\n")
    g = write(tmp_path, "g.txt", "1 5 0\n-1 0 0\n")
    sys_ = parse_system(f, g)
    assert sys_.d == 1 and sys_.t == 2 and sys_.F.coefficient(0, 1) == parse_sparse("1/3 0 1").coeffs[0]
    empty = write(tmp_path, "e.txt", "# nothing\n")
    with pytest.raises(ZeroF, match="two sparse equations"):
        parse_system(empty, g)
    bad = write(tmp_path, "bad.txt", "1 0\n")
    with pytest.raises(ParseError):
        parse_system(bad, g)


def test_exit_codes(tmp_path, capsys):
    g = write(tmp_path, "g.txt", "1 1 0\n")
    empty = write(tmp_path, "e.txt", "")
    status, _, err = run(capsys, "--f", empty, "--g", g)
    assert status == 2 and "two sparse equations" in err
    bad = write(tmp_path, "bad.txt", "1.5 0 1\n")
    status, _, err = run(capsys, "--f", bad, "--g", g)
    assert status == 2 and "line 1" in err
    big = write(tmp_path, "big.txt", "1 0 1\n-1 1 0\n")
    huge = write(tmp_path, "huge.txt", "1 100000 0\n-1 0 0\n")
    status, _, err = run(capsys, "--f", big, "--g", huge)
    assert status == 2 and "budget" in err
    status, _, _ = run(capsys, "--f", str(tmp_path / "missing.txt"), "--g", g)
    assert status == 3
    status, _, _ = run(capsys, "--mode", "verify", "--n", "0")
    assert status == 2


def test_failure_rows_set_exit_status(monkeypatch, capsys):
    from sparsecurve import checks
    real = checks.verify_instance

    def broken(sys_, budget=64):
        row = real(sys_, budget)
        row["agree_ok"] = False
        return row

    monkeypatch.setattr(checks, "verify_instance", broken)
    status, out, _ = run(capsys, "--mode", "verify", "--n", "2", "--dmax", "2")
    assert status == 1
    assert all(r["agree_ok"] == "false" and r["F_terms"] for r in rows_of(out))
