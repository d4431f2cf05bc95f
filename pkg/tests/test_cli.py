import csv
import io
import json

import numpy as np
import pytest

from gcheb import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_poly_example(capsys):
    code, out, _ = run(capsys, "poly", "--a", "1", "--z", "0.5", "--nmax", "2")
    assert code == 0
    assert out.splitlines()[0] == "n,re,im"
    r = rows(out)
    assert [float(x["re"]) for x in r] == [1.0, 1.0, 0.0]


def test_measure_atoms(capsys):
    code, out, _ = run(capsys, "measure", "--a", "2", "--grid", "1001")
    assert code == 0
    r = rows(out)
    dens = [x for x in r if x["kind"] == "density"]
    at = [x for x in r if x["kind"] == "atom"]
    assert len(dens) == 1001
    assert len(at) == 2
    assert np.allclose(sorted(float(x["lambda"]) for x in at), [-2 / np.sqrt(3), 2 / np.sqrt(3)])
    assert np.allclose([float(x["value"]) for x in at], 1 / 3)


def test_json_complex(capsys):
    code, out, _ = run(capsys, "scatter", "--a", "1.4142135623730951", "--grid=0.7071067811865476:0.7071067811865476:1", "--format", "json")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["s"]["re"] == pytest.approx(0, abs=1e-12)
    assert rec["s"]["im"] == pytest.approx(-1)


def test_csv_splits_complex(capsys):
    _, out, _ = run(capsys, "scatter", "--a", "2", "--grid", "3")
    assert out.splitlines()[0].startswith("lambda,s_re,s_im,xi,")


def test_roundtrip_floats(capsys):
    _, out, _ = run(capsys, "moments", "--a", "1.3", "--nmax", "10")
    from gcheb import spectral

    vals = [float(x["moment"]) for x in rows(out)]
    assert vals == list(spectral.moment_coeffs(1.3, 10))


def test_tracked_nan_becomes_null(capsys):
    code, out, _ = run(capsys, "ssf", "--a", "2", "--grid=1:1:1", "--tracked", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["xi_closed"] == 1.0 and rec["xi_tracked"] is None


def test_exit_codes(capsys):
    assert run(capsys, "poly", "--a", "-1", "--z", "0.5", "--nmax", "2")[0] == 2
    code, _, err = run(capsys, "resolvent", "--a", "1", "--z", "1", "--n", "0", "--m", "0")
    assert code == 3 and "singular" in err
    assert run(capsys, "recover", "--coeffs", "1,x")[0] == 2
    assert run(capsys, "verify", "--suite", "99")[0] == 2


def test_verify_failure_exit(capsys, monkeypatch):
    from gcheb import verify

    def bad(**_):
        res = verify.SuiteResult(1, "forced failure")
        res.checks.append(verify.Check.below("x", 1.0, 0.5))
        return res

    monkeypatch.setitem(verify.SUITES, 1, bad)
    code, out, err = run(capsys, "verify", "--suite", "1")
    assert code == 4
    assert "[FAIL]" in err and "false" in out


def test_verify_pass(capsys):
    code, out, err = run(capsys, "verify", "--suite", "12")
    assert code == 0
    assert "[PASS] criterion 12" in err


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "trace", "--a", "2", "--nmax", "4", "--output", str(path))
    assert code == 0 and out == ""
    r = rows(path.read_text())
    assert float(r[2]["trace_difference"]) == pytest.approx(1.5)


def test_deterministic(capsys):
    args = ("scatter", "--a", "1.7", "--grid", "25", "--format", "json")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("GCHEB_THREADS", "1")
    assert run(capsys, "resonances", "--a", "0.5")[0] == 0
    monkeypatch.setenv("GCHEB_THREADS", "zero")
    assert run(capsys, "resonances", "--a", "0.5")[0] == 2


def test_jost_and_recover(capsys):
    _, out, _ = run(capsys, "jost", "--a-seq", "0.3,0.5", "--b-seq", "0.2,-0.1")
    coeffs = [complex(float(x["coeff_re"]), float(x["coeff_im"])) for x in rows(out)]
    assert len(coeffs) == 5
    text = ",".join(repr(c.real) for c in coeffs)
    _, out, _ = run(capsys, "recover", "--coeffs", text)
    r = rows(out)
    a = [float(x["value"]) for x in r if x["kind"] == "a"]
    b = [float(x["value"]) for x in r if x["kind"] == "b"]
    assert np.allclose(a, [0.3, 0.5]) and np.allclose(b, [0.2, -0.1])
