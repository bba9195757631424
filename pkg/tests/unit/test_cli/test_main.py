"""Tests for the fracsym command line."""

import json

import numpy as np
import pytest

from fracsym.cli import io
from fracsym.cli.main import EXIT_DOMAIN, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, main, symmetry_record
from fracsym.fkdvb.params import FkdvbParams
from fracsym.fraccore.compare import probe_points
from fracsym.fraccore.parsing import parse_bivariate, parse_gp

DEFAULT_ORDERS = ["--p", "0.5", "--q", "0.3", "--r", "1.7"]


class TestDeriv:
    def test_exact_expression(self, capsys):
        assert main(["deriv", "--expr", "t^0.5", "--order", "0.5"]) == EXIT_OK
        assert capsys.readouterr().out == "0.88622692545\n"

    def test_exact_integral(self, capsys):
        assert main(["deriv", "--expr", "2*t", "--order", "1", "--integral"]) == EXIT_OK
        assert capsys.readouterr().out == "1*t^2\n"

    def test_sampled_input(self, tmp_path):
        grid = np.linspace(0.0, 1.0, 65)
        source, target = tmp_path / "f.csv", tmp_path / "d.csv"
        io.write_table(source, ("t", "f"), np.column_stack([grid, grid]))
        assert main(["deriv", "--input", str(source), "--order", "0.5", "--output", str(target)]) == EXIT_OK
        table = io.read_table(target)
        assert table.columns == ("t", "f", "flag")
        assert table.metadata["scheme"] == "pt"
        assert "reduced accuracy" in table.metadata["flag"]
        t, f, flag = table.column("t"), table.column("f"), table.column("flag")
        trusted = (flag == 0) & (t > 0.2)
        np.testing.assert_allclose(f[trusted], 2.0 * np.sqrt(t[trusted] / np.pi), rtol=1e-3)

    def test_needs_one_source(self, capsys):
        assert main(["deriv", "--order", "0.5"]) == EXIT_USAGE
        assert "exactly one of --expr and --input" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["deriv", "--input", str(tmp_path / "nope.csv"), "--order", "0.5"]) == EXIT_USAGE

    def test_bad_expression(self):
        assert main(["deriv", "--expr", "t^^2", "--order", "0.5"]) == EXIT_USAGE

    def test_negative_order(self):
        assert main(["deriv", "--expr", "t", "--order", "-0.5"]) == EXIT_DOMAIN


class TestSymmetry:
    def test_default_orders(self, capsys):
        assert main(["symmetry", *DEFAULT_ORDERS]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "generator: (0.5, 1.7, -0.7)"
        assert lines[1] == "branch: q<r"
        assert lines[-1] == "equivariance exponent: -1.55"

    def test_json_record(self, tmp_path):
        path = tmp_path / "sym.json"
        assert main(["symmetry", "--p", "0.5", "--q", "0.5", "--r", "0.5", "--json", str(path)]) == EXIT_OK
        record = json.loads(path.read_text())
        assert record["branch"] == "q=r"
        assert record["generator"]["gamma"] == 0.0
        assert record["invariants"]["w"] == "u"

    def test_record_matches_solver(self):
        record = symmetry_record(FkdvbParams(0.8, 0.2, 0.9))
        assert record["generator"]["alpha"] == pytest.approx(0.8)

    def test_integer_orders(self, capsys):
        assert main(["symmetry", "--p", "1", "--q", "0.3", "--r", "1.7"]) == EXIT_DOMAIN
        assert "domain error" in capsys.readouterr().err

    def test_missing_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["symmetry", "--p", "0.5"])
        assert info.value.code == EXIT_USAGE


class TestReduceAndVerify:
    def test_loose_tolerance_converges(self, tmp_path):
        path = tmp_path / "cand.json"
        args = ["reduce", *DEFAULT_ORDERS, "--basis", "3", "--colloc", "12", "--tol", "1e10", "--out", str(path)]
        assert main(args) == EXIT_OK
        record = io.read_record(path)
        assert record["converged"] is True
        assert len(record["coefficients"]) == 3

    def test_unreachable_tolerance_exits_numerical(self, tmp_path, capsys):
        path = tmp_path / "cand.json"
        args = ["reduce", *DEFAULT_ORDERS, "--basis", "3", "--colloc", "12", "--tol", "1e-30", "--out", str(path)]
        assert main(args) == EXIT_NUMERICAL
        assert "did not converge" in capsys.readouterr().err
        # the candidate is still written
        assert io.read_record(path)["converged"] is False

    def test_normalize_flag(self, capsys):
        args = ["reduce", *DEFAULT_ORDERS, "--basis", "2", "--colloc", "8", "--normalize", "1.0,0", "--tol", "1"]
        assert main(args) == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert record["normalization"] == {"z_ref": 1.0, "w0": 0.0}
        assert record["coefficients"] == [0.0, 0.0]

    def test_bad_normalize_flag(self):
        assert main(["reduce", *DEFAULT_ORDERS, "--normalize", "1.0"]) == EXIT_USAGE

    def test_verify_writes_residual(self, tmp_path):
        candidate, out = tmp_path / "cand.json", tmp_path / "res.csv"
        main(["reduce", *DEFAULT_ORDERS, "--basis", "3", "--colloc", "12", "--tol", "1e10", "--out", str(candidate)])
        args = ["--threads", "2", "verify", "--candidate", str(candidate), "--grid", "0.2,1,33,0.2,1,33"]
        assert main([*args, "--out", str(out)]) == EXIT_OK
        table = io.read_table(out)
        assert table.columns == ("x1", "x2", "R", "flag")
        assert np.all(table.column("x1") >= 0.2)
        assert np.all(table.column("x2") >= 0.2)
        assert np.all(np.isfinite(table.column("R")))
        assert float(table.metadata["linf"]) >= 0.0
        assert table.metadata["flag"] == "1 marks boundary-stencil or singular nodes"
        assert set(np.unique(table.column("flag"))) <= {0.0, 1.0}

    def test_verify_grid_flag(self, tmp_path):
        assert main(["verify", "--candidate", str(tmp_path / "c.json"), "--grid", "0,1,33"]) == EXIT_USAGE
        assert main(["verify", "--candidate", str(tmp_path / "c.json"), "--grid", "1,0.5,33,0,1,33"]) == EXIT_DOMAIN

    @pytest.mark.parametrize(
        "record",
        [
            {"params": {"p": 0.5, "q": 0.3, "r": 1.7}},
            {"params": {"p": 0.5, "q": 0.3, "r": 1.7}, "domain": "0.2,2", "basis": []},
            [1, 2, 3],
        ],
    )
    def test_verify_rejects_malformed_candidate(self, tmp_path, capsys, record):
        candidate = tmp_path / "cand.json"
        candidate.write_text(json.dumps(record), encoding="utf-8")
        args = ["verify", "--candidate", str(candidate), "--grid", "0.2,1,33,0.2,1,33"]
        assert main(args) == EXIT_USAGE
        err = capsys.readouterr().err
        assert "candidate record" in err
        assert "Traceback" not in err

    def test_bad_thread_count(self):
        assert main(["--threads", "0", "symmetry", *DEFAULT_ORDERS]) == EXIT_USAGE


class TestEk:
    def test_integral_expression(self, capsys):
        assert main(["ek", "--c", "2", "--a", "0.5", "--b", "2", "--expr", "y^0.5"]) == EXIT_OK
        [term] = parse_gp(capsys.readouterr().out, "y").terms
        assert term.coeff == pytest.approx(0.8111738878, rel=1e-9)
        assert term.exponent == 0.5

    def test_derivative_expression(self, capsys):
        assert main(["ek", "--diff", "--c", "0.5", "--a", "0.5", "--b", "2", "--expr", "y^0.5"]) == EXIT_OK
        [term] = parse_gp(capsys.readouterr().out, "y").terms
        assert term.coeff == pytest.approx(0.3379891, rel=1e-6)

    def test_divergent_without_continuation(self, capsys):
        args = ["ek", "--c", "0.1", "--a", "0.5", "--b", "1", "--expr", "y^0.5"]
        assert main(args) == EXIT_DOMAIN
        assert "continuation" in capsys.readouterr().err
        assert main([*args, "--continuation"]) == EXIT_OK
        assert "continued exponents: 0.5" in capsys.readouterr().err

    def test_tabulated_input(self, tmp_path):
        y = np.linspace(0.0, 4.0, 101)
        source, target = tmp_path / "f.csv", tmp_path / "k.csv"
        io.write_table(source, ("y", "f"), np.column_stack([y, np.sqrt(y)]))
        args = ["ek", "--c", "2", "--a", "0.5", "--b", "2", "--input", str(source), "--growth", "0.5"]
        assert main([*args, "--output", str(target)]) == EXIT_OK
        table = io.read_table(target)
        points, values = table.column("y"), table.column("f")
        assert points[0] > 0
        far = points >= 1.0
        np.testing.assert_allclose(values[far], 0.8111738878 * np.sqrt(points[far]), rtol=1e-3)

    def test_decreasing_input(self, tmp_path):
        source = tmp_path / "f.csv"
        io.write_table(source, ("y", "f"), np.array([[2.0, 1.0], [1.0, 1.0]]))
        assert main(["ek", "--c", "2", "--a", "0.5", "--b", "2", "--input", str(source)]) == EXIT_USAGE


class TestProlongCheck:
    def test_single_order(self, capsys):
        args = ["prolong-check", "--p", "0.5", "--field", "1,0,0", "--u", "x1^0.5"]
        assert main(args) == EXIT_OK
        value_line, deviation_line = capsys.readouterr().out.splitlines()
        [(coeff, _, _)] = parse_bivariate(value_line).triples
        assert coeff == pytest.approx(-0.4431134627, rel=1e-9)
        assert float(deviation_line.split(":")[1]) <= 1e-8

    def test_mixed_order(self, capsys):
        args = ["prolong-check", "--p", "0.5", "--q", "0.5", "--field", "1,1,0", "--u", "x1^0.5*x2^0.5"]
        assert main(args) == EXIT_OK
        value_line, _ = capsys.readouterr().out.splitlines()
        x1, x2 = probe_points()
        np.testing.assert_allclose(parse_bivariate(value_line).evaluate(x1, x2), -np.pi / 4, rtol=1e-9)

    def test_field_needs_three_values(self):
        assert main(["prolong-check", "--p", "0.5", "--field", "1,0", "--u", "x1"]) == EXIT_USAGE
