import json
import os

import pytest

from bettilab.cli import build_parser, derive_seed, main, rng_for


def run_cli(argv, tmp_path, capsys):
    code = main(argv + ["--run-store", str(tmp_path)])
    out = capsys.readouterr().out
    return code, out


def test_seed_derivation_is_stable():
    assert derive_seed(7, "points:0") == derive_seed(7, "points:0")
    assert derive_seed(7, "points:0") != derive_seed(7, "points:1")
    a = rng_for(3, "x").integers(0, 1 << 30, size=4)
    b = rng_for(3, "x").integers(0, 1 << 30, size=4)
    assert (a == b).all()


def test_predict_command(tmp_path, capsys):
    code, out = run_cli(["predict", "--g", "0", "--r", "3", "--d", "3",
                         "--gamma", "20"], tmp_path, capsys)
    assert code == 0
    assert "u=7" in out and "2 3 0 -1" in out
    assert "run record:" in out


def test_mrc_check_twisted_cubic(tmp_path, capsys):
    code, out = run_cli(["mrc-check", "--curve", "twisted-cubic", "--gamma",
                         "20", "--seed", "7", "--primes", "2"], tmp_path, capsys)
    assert code == 0
    assert "MRC: pass" in out and "agreement: True" in out


def test_chow_command(tmp_path, capsys):
    code, out = run_cli(["chow", "--curve", "twisted-cubic", "--samples", "25",
                         "--seed", "1"], tmp_path, capsys)
    assert code == 0
    assert "agreement: ok" in out and "strand composition zero: True" in out


def test_splitting_monomial(tmp_path, capsys):
    code, out = run_cli(["splitting", "--curve", "monomial", "--exponents",
                         "5,4,1,0"], tmp_path, capsys)
    assert code == 0
    assert "UNBALANCED" in out and "(1, 1, 3)" in out


def test_oracle_compare(tmp_path, capsys):
    code, out = run_cli(["oracle-compare", "--r", "2", "--gamma", "8",
                         "--instances", "3", "--primes", "2"], tmp_path, capsys)
    assert code == 0
    assert "MISMATCH" not in out


def test_gonal_command(tmp_path, capsys):
    code, out = run_cli(["gonal", "--g", "2", "--r", "2", "--gamma", "12",
                         "--samples", "2", "--seed", "3"], tmp_path, capsys)
    assert code == 0
    assert "differences exact on all samples: True" in out


def test_property_r_command(tmp_path, capsys):
    code, out = run_cli(["property-r", "--g", "2", "--r", "2", "--i", "1",
                         "--trials", "20", "--seed", "5"], tmp_path, capsys)
    assert code == 0
    assert "generic-vanishing frequency" in out


def test_run_records_byte_identical(tmp_path, capsys):
    argv = ["predict", "--g", "0", "--r", "2", "--d", "2", "--gamma", "7"]
    run_cli(argv, tmp_path, capsys)
    files = sorted(os.listdir(tmp_path))
    first = (tmp_path / files[0]).read_bytes()
    run_cli(argv, tmp_path, capsys)
    files2 = sorted(os.listdir(tmp_path))
    assert files == files2  # same content hash, no new file
    assert (tmp_path / files2[0]).read_bytes() == first
    record = json.loads(first)
    assert record["command"] == "predict" and "version" in record


def test_csv_format(tmp_path, capsys):
    code, out = run_cli(["betti", "--curve", "rnc", "--r", "2", "--gamma", "7",
                         "--format", "csv"], tmp_path, capsys)
    assert code == 0
    assert out.splitlines()[0].startswith("j,b0,b1,b2")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        build_parser().parse_args(["predict", "--g", "0"])  # missing required
    assert err.value.code == 2


def test_no_store(tmp_path, capsys):
    code = main(["predict", "--g", "0", "--r", "2", "--d", "2", "--gamma", "7",
                 "--no-store"])
    out = capsys.readouterr().out
    assert code == 0 and "run record:" not in out
