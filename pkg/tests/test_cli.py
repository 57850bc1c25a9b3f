"""Command line: subcommands, exit codes and the JSON run report."""

import json

import pytest
from typer.testing import CliRunner

from theorykit.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, app, run

runner = CliRunner()


@pytest.fixture
def casestudy_path(fixtures_dir):
    return str(fixtures_dir / "casestudy.thy")


@pytest.fixture
def implications_path(fixtures_dir):
    return str(fixtures_dir / "implications.thy")


def invoke(*args):
    return runner.invoke(app, [str(a) for a in args])


class TestCheck:
    def test_valid_file(self, casestudy_path):
        result = invoke("check", casestudy_path)
        assert result.exit_code == EXIT_OK
        assert "valid: 3 type(s), 5 variable(s), 3 construct(s), 4 hypothesis(es)" in result.stdout
        assert "P6: RD = True -> !(CL > (Eventual, Low))" in result.stdout
        assert "time: " in result.stdout

    def test_diagnostics_are_located(self, fixtures_dir):
        path = fixtures_dir / "broken.thy"
        result = invoke("check", path)
        assert result.exit_code == EXIT_ERROR
        assert f"{path}:3:10: error: unknown type Flag" in result.output
        assert f"{path}:6:20: error: unknown variable SI2" in result.output

    def test_missing_file(self, tmp_path):
        result = invoke("check", tmp_path / "absent.thy")
        assert result.exit_code == EXIT_ERROR
        assert "cannot read file" in result.output

    def test_json_report(self, casestudy_path):
        result = invoke("check", casestudy_path, "--json", "--no-timing")
        assert result.exit_code == EXIT_OK
        report = json.loads(result.stdout)
        assert report["command"] == "check"
        assert report["verdict"] == "valid"
        assert report["input_digest"].startswith("sha256:")
        assert report["timing_ms"] is None
        assert report["diagnostics"] == []
        assert [h["id"] for h in report["artifacts"]["document"]["hypotheses"]] == ["P1", "P2", "P6", "P10"]

    def test_no_timing(self, casestudy_path):
        result = invoke("check", casestudy_path, "--no-timing")
        assert result.exit_code == EXIT_OK
        assert not result.stdout.rstrip().splitlines()[-1].startswith("time:")


class TestEntail:
    def test_entailed(self, casestudy_path):
        result = invoke("entail", casestudy_path, "--query", "OS > 5 -> !(SI = True)")
        assert result.exit_code == EXIT_OK
        assert result.stdout.splitlines()[0] == "yes"
        assert "(input)" in result.stdout

    def test_not_entailed(self, casestudy_path):
        result = invoke("entail", casestudy_path, "-q", "OS > 5")
        assert result.exit_code == EXIT_NEGATIVE
        assert result.stdout.splitlines()[0] == "no"
        assert "saturated after" in result.stdout

    def test_bad_query(self, casestudy_path):
        result = invoke("entail", casestudy_path, "-q", "OS >")
        assert result.exit_code == EXIT_ERROR
        assert "query:1:" in result.output

    def test_clause_cap_must_be_positive(self, casestudy_path):
        result = invoke("entail", casestudy_path, "-q", "OS > 5", "--max-clauses", "0")
        assert result.exit_code == EXIT_ERROR

    def test_json_report(self, casestudy_path):
        result = invoke("entail", casestudy_path, "-q", "RD = True -> !(SI = True)", "--json", "--no-timing")
        report = json.loads(result.stdout)
        assert report["verdict"] is False
        assert report["artifacts"]["query"] == "RD = True -> !(SI = True)"
        assert "trace" in report["artifacts"]
        assert result.exit_code == EXIT_NEGATIVE


class TestGraphCommands:
    def test_closure(self, casestudy_path):
        result = invoke("closure", casestudy_path, "--matrix")
        assert result.exit_code == EXIT_OK
        assert "derived 1 implication(s):" in result.stdout
        assert "  OS > 5 -> !(RD = True)" in result.stdout
        assert "closure matrix:" in result.stdout

    def test_closure_methods_agree(self, implications_path):
        outputs = [invoke("closure", implications_path, "--method", m, "--no-timing").stdout for m in ("matrix", "fw")]
        assert outputs[0] == outputs[1]

    def test_unknown_method(self, implications_path):
        result = invoke("closure", implications_path, "--method", "dijkstra")
        assert result.exit_code == EXIT_ERROR

    def test_not_an_implication_theory(self, fixtures_dir):
        result = invoke("closure", fixtures_dir / "determinant.thy")
        assert result.exit_code == EXIT_ERROR
        assert "not of the form literal -> literal" in result.output

    def test_reduce(self, casestudy_path, tmp_path):
        dot = tmp_path / "reduction.dot"
        result = invoke("reduce", casestudy_path, "--dot", dot)
        assert result.exit_code == EXIT_OK
        assert "kept 3 hypothesis(es):" in result.stdout
        assert "  P10 (derivable)" in result.stdout
        assert dot.read_text(encoding="utf-8").startswith("digraph theory {")

    def test_reduce_json(self, casestudy_path):
        result = invoke("reduce", casestudy_path, "--json", "--no-timing")
        report = json.loads(result.stdout)
        assert report["verdict"] == ["P1", "P2", "P6"]
        assert report["artifacts"]["removed"] == [{"id": "P10", "reason": "derivable"}]


class TestMinimize:
    def test_default_order(self, casestudy_path):
        result = invoke("minimize", casestudy_path)
        assert result.exit_code == EXIT_OK
        assert "kept 3 hypothesis(es):" in result.stdout
        assert "removed 1 hypothesis(es): P10" in result.stdout

    def test_explicit_order(self, casestudy_path):
        result = invoke("minimize", casestudy_path, "--order", "P10,1", "--json", "--no-timing")
        report = json.loads(result.stdout)
        assert report["artifacts"]["removed"] == ["P10"]

    @pytest.mark.parametrize("order", ["P99", "1,1", "9"])
    def test_bad_order(self, casestudy_path, order):
        result = invoke("minimize", casestudy_path, "--order", order)
        assert result.exit_code == EXIT_ERROR


class TestExport:
    def test_dot(self, implications_path):
        result = invoke("export", implications_path, "--format", "dot", "--graph", "reduction")
        assert result.exit_code == EXIT_OK
        assert "digraph theory {" in result.stdout

    def test_kb(self, implications_path):
        result = invoke("export", implications_path, "-f", "kb")
        assert result.exit_code == EXIT_OK
        assert "r :- q." in result.stdout

    def test_kb_needs_horn_clauses(self, casestudy_path):
        result = invoke("export", casestudy_path, "-f", "kb")
        assert result.exit_code == EXIT_ERROR
        assert "goal clause" in result.output

    def test_json_to_file(self, casestudy_path, tmp_path):
        out = tmp_path / "dump.json"
        result = invoke("export", casestudy_path, "-f", "json", "--out", out)
        assert result.exit_code == EXIT_OK
        dump = json.loads(out.read_text(encoding="utf-8"))
        assert len(dump["hypotheses"]) == 4

    @pytest.mark.parametrize("args", [("-f", "xml"), ("-f", "dot", "--graph", "other")])
    def test_bad_arguments(self, implications_path, args):
        result = invoke("export", implications_path, *args)
        assert result.exit_code == EXIT_ERROR


class TestOracle:
    def test_satisfiable(self, implications_path):
        result = invoke("oracle", implications_path)
        assert result.exit_code == EXIT_OK
        assert result.stdout.splitlines()[0] == "satisfiable"

    def test_unsatisfiable(self, tmp_path):
        path = tmp_path / "contradiction.thy"
        path.write_text("type T = bool\natom P : T\nprop a: P\nprop b: !P\n", encoding="utf-8")
        result = invoke("oracle", path)
        assert result.exit_code == EXIT_NEGATIVE
        assert result.stdout.splitlines()[0] == "unsatisfiable"

    def test_queries(self, implications_path):
        assert invoke("oracle", implications_path, "-q", "P -> Q").exit_code == EXIT_OK
        assert invoke("oracle", implications_path, "-q", "Q -> P").exit_code == EXIT_NEGATIVE


def test_run_returns_the_exit_code(implications_path):
    assert run(["oracle", implications_path, "-q", "Q -> P", "--no-timing"]) == EXIT_NEGATIVE
    assert run(["check", implications_path, "--no-timing"]) == EXIT_OK
