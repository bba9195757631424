"""The command line from symmetry to a verified candidate."""

import json

import numpy as np
import pytest

from fracsym.cli import io
from fracsym.cli.main import EXIT_OK, main
from fracsym.fkdvb.params import FkdvbParams
from fracsym.fkdvb.residual import residual
from fracsym.fraccore.grid import UniformGrid1D
from fracsym.reduce.reconstruct import reconstruct
from fracsym.reduce.solver import ReducedSolutionCandidate

ORDERS = ["--p", "0.5", "--q", "0.3", "--r", "1.7"]


def run_verify(candidate, out, threads: int) -> str:
    args = ["--threads", str(threads), "verify", "--candidate", str(candidate)]
    assert main([*args, "--grid", "0.25,1,41,0.25,1,41", "--out", str(out)]) == EXIT_OK
    return out.read_text()


class TestCliPipeline:
    def test_symmetry_reduce_verify(self, tmp_path):
        sym = tmp_path / "sym.json"
        assert main(["symmetry", *ORDERS, "--json", str(sym)]) == EXIT_OK
        assert json.loads(sym.read_text())["generator"]["beta"] == pytest.approx(1.7)

        candidate = tmp_path / "cand.json"
        assert main(["reduce", *ORDERS, "--out", str(candidate)]) == EXIT_OK
        record = io.read_record(candidate)
        assert record["converged"] is True
        assert record["residual_norm"] <= 1e-6
        assert len(record["coefficients"]) == 10

        first = run_verify(candidate, tmp_path / "r1.csv", threads=1)
        second = run_verify(candidate, tmp_path / "r8.csv", threads=8)
        assert first == second

    def test_verify_matches_library_residual(self, tmp_path):
        candidate = tmp_path / "cand.json"
        main(["reduce", *ORDERS, "--basis", "4", "--colloc", "12", "--tol", "1e10", "--out", str(candidate)])
        run_verify(candidate, tmp_path / "r.csv", threads=2)
        table = io.read_table(tmp_path / "r.csv")

        restored = ReducedSolutionCandidate.from_record(io.read_record(candidate))
        grid = UniformGrid1D.span(0.0, 1.0, 41)
        res = residual(reconstruct(restored, None, grid, grid), FkdvbParams(0.5, 0.3, 1.7), n_workers=1)
        x1, x2 = res.mesh()
        box = (x1 >= 0.25) & (x2 >= 0.25)
        np.testing.assert_array_equal(table.column("R"), np.asarray(res.samples)[box])
        np.testing.assert_array_equal(table.column("flag"), res.reduced_accuracy[box].astype(float))
