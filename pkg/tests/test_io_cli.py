import json
import math
import subprocess
import sys

import pytest
from hypothesis import given

from snzeros import io as sio
from snzeros.asymptotics import report
from snzeros.characters import centralizer_size, full_table
from snzeros.cli import main
from snzeros.sampler import SeedSpec, estimate_zero_types
from snzeros.verify import run_suite
from snzeros.zeros import census

from .strategies import partitions


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@given(partitions(max_n=40))
def test_partition_labels_round_trip(lam):
    assert sio.parse_partition(sio.partition_label(lam)) == lam


def test_partition_labels():
    assert sio.partition_label((3, 1)) == "3,1"
    assert sio.partition_label(()) == ""
    for bad in ("1,2", "0", "a", "3,,1"):
        with pytest.raises(sio.FormatError):
            sio.parse_partition(bad)


def test_decimal_ratio():
    assert sio.decimal_ratio(3, 25) == "0.12"
    assert sio.decimal_ratio(1, 3) == "0.33333333333333333333"


def test_census_round_trip():
    cs = [census(n, with_characters=n < 9) for n in range(1, 12)]
    assert sio.load_census_json(sio.dump_census_json(cs)) == cs
    assert sio.load_census_csv(sio.dump_census_csv(cs)) == cs


def test_table_round_trip_and_orthogonality():
    t = full_table(6)
    back = sio.load_table_csv(sio.dump_table_csv(t))
    assert back == t
    for j, mu in enumerate(back.order):
        for k in range(len(back.order)):
            s = sum(row[j] * row[k] for row in back.values)
            assert s == (centralizer_size(mu) if j == k else 0)


def test_report_round_trip():
    for n in (16, 50000, 100000):
        r = report(n)
        assert sio.load_report_json(sio.dump_report_json(r)) == r
    big = json.loads(sio.dump_report_json(report(100000)))["report"]
    assert big["hr_estimate_classic"] == "inf"


def test_estimates_and_verify_round_trip():
    e = estimate_zero_types(12, 50, SeedSpec(-3, 5))
    assert sio.load_estimates_json(sio.dump_estimates_json(e)) == e
    v = run_suite("cores", 8, 3)
    assert sio.load_verify_json(sio.dump_verify_json(v)) == v


def test_schema_checks():
    with pytest.raises(sio.FormatError):
        sio.load_census_json('{"schema_version": 99, "kind": "census"}')
    with pytest.raises(sio.FormatError):
        sio.load_census_json("not json")
    with pytest.raises(sio.FormatError):
        sio.load_report_json(sio.dump_census_json([census(2)]))


def test_cli_census(capsys):
    code, out, _ = run(["census", "--n", "4", "--with-characters"], capsys)
    assert code == 0
    c = json.loads(out)["census"][0]
    assert (c["z1"], c["z2"], c["z3"], c["z_total"]) == ("3", "3", "3", "4")
    assert c["conditions"]["union"] == "3"
    assert c["proportions"]["z_total"] == "0.16"
    code, out, _ = run(["census", "--n", "1"], capsys)
    c = json.loads(out)["census"][0]
    assert all(c[k] == "0" for k in ("z1", "z2", "z3", "z_poly"))


def test_cli_census_csv_range(capsys):
    code, out, _ = run(["census", "--n", "2:6", "--format", "csv"], capsys)
    assert code == 0
    rows = sio.load_census_csv(out)
    assert [r.n for r in rows] == [2, 3, 4, 5, 6]


def test_cli_workers_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["census", "--n", "12", "--workers", "1", "-o", str(a)]) == 0
    assert main(["census", "--n", "12", "--workers", "8", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_table(capsys):
    code, out, _ = run(["table", "--n", "2"], capsys)
    assert code == 0
    assert out.splitlines()[1:] == ["2,1,1", '"1,1",-1,1']
    code, out, _ = run(["table", "--n", "5"], capsys)
    t = sio.load_table_csv(out)
    assert all(v == 1 for v in t.values[t.order.index((5,))])


def test_cli_predict(capsys):
    code, out, _ = run(["predict", "--n", "50000"], capsys)
    r = json.loads(out)["report"]
    assert code == 0
    assert abs(r["leading"] - 0.18485) < 1e-4
    assert abs(r["refined"] - 0.13) < 0.005
    assert set(r) == set(report(16).to_dict())


def test_cli_sample_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["sample", "--n", "2000", "--samples", "300", "--seed", "1"]
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["-o", str(b), "--workers", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
    e = sio.load_estimates_json(a.read_text())
    assert e.seed == SeedSpec(1, 0) and e.n == 2000 and e.method == "deferred"


def test_cli_progress_goes_to_stderr(capsys):
    code, out, err = run(["sample", "--n", "10", "--samples", "5", "--progress"], capsys)
    assert code == 0 and "5/5 pairs" in err
    json.loads(out)


def test_cli_verify(capsys):
    code, out, _ = run(["verify", "--suite", "han", "--nmax", "24"], capsys)
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, _ = run(["verify", "--suite", "props", "--nmax", "12", "--tmax", "5"], capsys)
    assert code == 0


def test_cli_verify_failure_exit(monkeypatch, capsys):
    import snzeros.verify as v

    def broken(nmax, tmax):
        return 5, v._fail(3, 2, 1, 4, 5)

    monkeypatch.setitem(v._RUNNERS, "cores", broken)
    code, out, err = run(["verify", "--suite", "cores", "--nmax", "4"], capsys)
    assert code == 3
    assert "(3, 2, 1)" in err
    assert json.loads(out)["failure"]["n"] == 3


def test_cli_guard_exit(capsys):
    code, out, _ = run(["census", "--n", "40"], capsys)
    assert code == 2
    err = json.loads(out)
    assert err["error"] == "guard" and err["kind"] == "error"
    code, _, _ = run(["table", "--n", "30"], capsys)
    assert code == 2
    code, _, _ = run(["predict", "--n", "3"], capsys)
    assert code == 2


def test_cli_io_exit(tmp_path, capsys):
    code, out, _ = run(["census", "--n", "3", "-o", str(tmp_path / "missing" / "x.json")], capsys)
    assert code == 4
    assert json.loads(out)["error"] == "io"


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "snzeros.cli", "census", "--n", "3"], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["schema_version"] == sio.SCHEMA_VERSION


def test_report_without_exact_count(monkeypatch):
    import snzeros.asymptotics as asy

    exact = asy.log_partition_count(5000)
    monkeypatch.setattr(asy, "P_EXACT_LIMIT", 1000)
    r = asy.report(5000)
    assert r.p_exact is None
    assert r.log_p_exact == pytest.approx(exact, rel=1e-14)
    text = sio.dump_report_json(r)
    assert json.loads(text)["report"]["p_exact"] is None
    assert sio.load_report_json(text) == r


def test_huge_counts_serialize():
    r = report(2 * 10**7)
    # about 5000 decimal digits, past the default int-to-str cap
    assert r.p_exact.bit_length() > 15000
    assert sio.load_report_json(sio.dump_report_json(r)).p_exact == r.p_exact
