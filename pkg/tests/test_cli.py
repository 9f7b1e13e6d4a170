"""CLI round trips, exit codes, and report reproducibility."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from extremal.cli import main, parse_property_spec
from extremal.core import read_family
from extremal.measures import rho
from extremal.shifting import CrossTIntersecting, RhoAtMost, TIntersecting


def run_cli(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "extremal.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


class TestPropertySpec:
    def test_atoms(self):
        p = parse_property_spec("intersecting&rho<=2/3", slots=1)
        kinds = {type(a) for a in p.children}
        assert kinds == {TIntersecting, RhoAtMost}

    def test_cross_and_slots(self):
        p = parse_property_spec("cross(0,1,t=1)&rho<=1/2", slots=2)
        assert sum(isinstance(a, CrossTIntersecting) for a in p.children) == 1
        assert sum(isinstance(a, RhoAtMost) for a in p.children) == 2

    def test_empty_spec(self):
        assert parse_property_spec("", slots=1).children == ()

    def test_bad_atom(self):
        with pytest.raises(ValueError):
            parse_property_spec("bogus(1)", slots=1)


class TestConstructMeasure:
    def test_construct_fano_and_measure(self, tmp_path):
        out = tmp_path / "fano.txt"
        assert main(["construct", "--id", "fano", "--out", str(out)]) == 0
        fam = read_family(out)
        assert len(fam) == 7
        assert main(["measure", str(out)]) == 0

    def test_construct_star(self, tmp_path):
        out = tmp_path / "star.txt"
        assert main(["construct", "--id", "star", "--params", "4,2,1", "--out", str(out)]) == 0
        assert read_family(out).sets() == [(1, 2), (1, 3), (1, 4)]

    def test_construct_triangle(self, tmp_path):
        out = tmp_path / "tri.txt"
        assert main(["construct", "--id", "triangle", "--params", "6,3", "--out", str(out)]) == 0
        assert len(read_family(out)) == 10

    def test_construct_pair_writes_two_files(self, tmp_path):
        out = tmp_path / "pair.txt"
        assert main(["construct", "--id", "ex_1_8", "--params", "10,4", "--out", str(out)]) == 0
        assert len(read_family(tmp_path / "pair.anchored.txt")) == 55
        assert len(read_family(tmp_path / "pair.crossing.txt")) == 85

    def test_round_trip_measure_matches_library(self, tmp_path, capsys):
        out = tmp_path / "tri.txt"
        main(["construct", "--id", "triangle", "--params", "6,3", "--out", str(out)])
        capsys.readouterr()
        assert main(["--format", "json", "measure", str(out)]) == 0
        prof = json.loads(capsys.readouterr().out)
        fam = read_family(out)
        assert prof["rho"] == f"{rho(fam).numerator}/{rho(fam).denominator}"
        assert prof["size"] == 10


class TestShiftCommand:
    def test_unconstrained_shift(self, tmp_path):
        fam_file = tmp_path / "f.txt"
        fam_file.write_text("4 2\n2,3\n", encoding="utf-8")
        prefix = tmp_path / "out"
        assert main(["shift", str(fam_file), "--out-prefix", str(prefix)]) == 0
        shifted = read_family(f"{prefix}.0.txt")
        assert shifted.sets() == [(1, 2)]
        trace = json.loads(Path(f"{prefix}.trace.json").read_text(encoding="utf-8"))
        assert trace["resistant"] == []

    def test_guarded_shift_reports_resistant(self, tmp_path):
        fam_file = tmp_path / "f.txt"
        fam_file.write_text("4 2\n1,2\n3,4\n", encoding="utf-8")
        prefix = tmp_path / "out"
        assert main(["shift", str(fam_file), "--prop", "rho<=1/2",
                     "--out-prefix", str(prefix)]) == 0
        shifted = read_family(f"{prefix}.0.txt")
        assert shifted.sets() == [(1, 2), (3, 4)]
        trace = json.loads(Path(f"{prefix}.trace.json").read_text(encoding="utf-8"))
        assert [1, 3] in trace["resistant"]

    def test_property_fails_on_input_exit_2(self, tmp_path):
        fam_file = tmp_path / "f.txt"
        fam_file.write_text("4 2\n1,2\n3,4\n", encoding="utf-8")
        assert main(["shift", str(fam_file), "--prop", "intersecting"]) == 2


class TestLexShadow:
    def test_lex(self, capsys):
        assert main(["lex", "--n", "4", "--k", "2", "--m", "3"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines() == ["4 2", "1,2", "1,3", "1,4"]

    def test_shadow(self, tmp_path, capsys):
        fam_file = tmp_path / "f.txt"
        fam_file.write_text("3 3\n1,2,3\n", encoding="utf-8")
        assert main(["shadow", str(fam_file)]) == 0
        out = capsys.readouterr().out
        assert out.splitlines() == ["3 2", "1,2", "1,3", "2,3"]


class TestVerifyCommand:
    def test_exhaustive_exit_zero(self, tmp_path):
        report = tmp_path / "r.json"
        rc = main(["verify", "--id", "KATONA", "--exhaustive", "n=5,k=2,t=1,l=1",
                   "--out", str(report)])
        assert rc == 0
        payload = json.loads(report.read_text(encoding="utf-8"))
        assert payload["result"]["totals"]["fail"] == 0
        assert payload["result"]["extras"]["equality"] == 10

    def test_sample_uses_default_recipe(self, tmp_path):
        report = tmp_path / "r.json"
        rc = main(["verify", "--id", "PROP_1_3", "--sample", "count=50,seed=9",
                   "--out", str(report)])
        assert rc == 0
        payload = json.loads(report.read_text(encoding="utf-8"))
        assert payload["result"]["totals"]["fail"] == 0

    def test_rerun_reproduces(self, tmp_path):
        report = tmp_path / "r.json"
        main(["verify", "--id", "PROP_1_3", "--sample", "count=50,seed=9",
              "--out", str(report)])
        payload = json.loads(report.read_text(encoding="utf-8"))
        rerun_out = tmp_path / "r2.json"
        rc = main(["verify", "--rerun", str(report), "--out", str(rerun_out)])
        assert rc == 0
        again = json.loads(rerun_out.read_text(encoding="utf-8"))
        assert json.dumps(payload["result"], sort_keys=True) == json.dumps(
            again["result"], sort_keys=True
        )

    def test_invalid_invocation_exit_2(self):
        assert main(["verify", "--id", "KATONA"]) == 2
        assert main(["verify", "--id", "NOPE", "--sample", "count=5"]) == 2

    def test_budget_refusal_exit_2(self):
        assert main(["--budget", "100", "verify", "--id", "KATONA",
                     "--exhaustive", "n=5,k=2,t=1,l=1"]) == 2


class TestVerifyFailExit:
    def test_fail_yields_exit_1(self, tmp_path):
        from extremal.verify import REGISTRY
        from extremal.verify.registry import Statement

        sid = "_CLI_FALSE_TEST"
        REGISTRY[sid] = Statement(
            sid, "family",
            hypothesis=lambda i: True,
            conclusion=lambda i: len(i.families[0]) == 0,
            description="synthetic",
        )
        try:
            report = tmp_path / "r.json"
            rc = main(["verify", "--id", sid, "--exhaustive", "n=4,k=2",
                       "--out", str(report)])
            assert rc == 1
            payload = json.loads(report.read_text(encoding="utf-8"))
            assert payload["result"]["totals"]["fail"] == 1
            assert payload["result"]["witnesses"]
        finally:
            del REGISTRY[sid]


class TestSearchCommand:
    def test_search_triangle(self, capsys):
        rc = main(["search", "n=5", "k=2", "--prop", "intersecting&rho<=2/3"])
        assert rc == 0
        out = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert out["max_size"] == 3 and out["complete"]

    def test_search_needs_dims(self):
        assert main(["search", "--prop", "intersecting"]) == 2


class TestSubprocessEntry:
    def test_module_invocation(self, tmp_path):
        proc = run_cli(["construct", "--id", "fano"], cwd=tmp_path)
        assert proc.returncode == 0
        assert "size=7" in proc.stdout
