import json
from pathlib import Path

import pytest

from okbodies import fixtures as FX
from okbodies.cli import main
from okbodies.ioformats import canonical_dumps, instance_from_obj, load_json

REPO_FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="module")
def corpus(tmp_path_factory):
    root = tmp_path_factory.mktemp("corpus")
    FX.write_corpus(root)
    return root


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestComputeVerbs:
    def test_body_plane_degree2(self, corpus, capsys):
        code, out, err = run(capsys, "body",
                             "--model", corpus / "models/plane.json",
                             "--divisor", corpus / "models/d2.json",
                             "--flag", corpus / "models/std_flag.json")
        assert code == 0
        body = json.loads(out)["body"]
        assert body["vertices"] == [["0", "0"], ["0", "2"], ["2", "0"]]

    def test_zariski_and_vol(self, corpus, capsys):
        code, out, _ = run(capsys, "zariski",
                           "--model", corpus / "models/blown_up_plane_surface.json",
                           "--divisor", corpus / "models/d_2h_plus_e.json")
        assert code == 0
        rep = json.loads(out)
        assert rep["positive"] == ["2", "0"] and rep["negative"] == ["0", "1"]
        code, out, _ = run(capsys, "vol",
                           "--model", corpus / "models/blown_up_plane_surface.json",
                           "--divisor", corpus / "models/d_2h_plus_e.json")
        assert code == 0 and json.loads(out)["volume"] == "4"

    def test_dims(self, corpus, capsys):
        code, out, _ = run(capsys, "dims",
                           "--model", corpus / "models/plane.json",
                           "--divisor", corpus / "models/d2.json")
        assert code == 0
        assert json.loads(out)["kappa"] == 2

    def test_limbody(self, corpus, capsys):
        code, out, _ = run(capsys, "limbody",
                           "--model", corpus / "models/blown_up_plane_surface.json",
                           "--divisor", corpus / "models/d_2h_plus_e.json",
                           "--flag", "-")
        # '-' is not a file; expect a clean input error, not a traceback
        assert code == 2

    def test_oracle_compare(self, corpus, capsys):
        code, out, _ = run(capsys, "oracle-compare",
                           "--model", corpus / "models/plane.json",
                           "--divisor", corpus / "models/d2.json",
                           "--flag", corpus / "models/std_flag.json",
                           "--m", "7")
        assert code == 0
        rep = json.loads(out)
        assert rep["contained"] and rep["margin"] == "0"


class TestCheckVerb:
    def test_exit_codes(self, corpus, capsys):
        cases = [
            ("thm1_3", "prod_line_line", 0),
            ("cor3_5", "prod_line_line", 0),
            ("thm1_1", "g2xg2", 0),
            ("thm1_1", "ex41", 0),
            ("thm1_2", "ex42", 2),       # base canonical class is not big
            ("cor3_5", "ex42_toric_surrogate", 2),
            ("lemma3_1", "prod_plane_line", 0),
            ("rem3_6", "ex41", 0),
        ]
        for check, inst, expected in cases:
            code, out, err = run(capsys, "check", check, "--instance",
                                 corpus / f"instances/{inst}.json")
            assert code == expected, (check, inst, err)

    def test_report_fields(self, corpus, capsys):
        code, out, _ = run(capsys, "check", "thm1_3", "--instance",
                           corpus / "instances/prod_line_line.json")
        rep = json.loads(out)
        assert rep["verdict"] == "strict" and rep["margin"] == "0"
        assert rep["lhs"]["vertices"] and rep["rhs"]["vertices"]
        assert rep["digest"]

    def test_check_all(self, corpus, capsys):
        code, out, err = run(capsys, "check", "--all", corpus / "instances")
        assert code == 0  # no verdict is "fails" on the shipped corpus
        reports = json.loads(out)
        assert len(reports) == 6 * len(FX.ALL_INSTANCES)
        assert all(r["verdict"] in ("holds", "strict", "hypotheses-not-met")
                   for r in reports)

    def test_unknown_check(self, corpus, capsys):
        code, _, err = run(capsys, "check", "thm9_9", "--instance",
                           corpus / "instances/g2xg2.json")
        assert code == 2 and "unknown check" in err


class TestScalingSearchVerb:
    def test_ex42(self, corpus, capsys):
        code, out, _ = run(capsys, "scaling-search", "--instance",
                           corpus / "instances/ex42.json",
                           "--grid-step", "1/2", "--bound", "2")
        assert code == 0
        rep = json.loads(out)
        assert rep["minimal_alpha_for_unit"] == "2"
        assert ["2", "1", "1"] in rep["feasible"]
        assert ["1", "1", "1"] not in rep["feasible"]


class TestPlots:
    def test_csv_and_svg(self, corpus, capsys, tmp_path):
        body_file = tmp_path / "body.json"
        code, out, _ = run(capsys, "body",
                           "--model", corpus / "models/plane.json",
                           "--divisor", corpus / "models/d2.json",
                           "--flag", corpus / "models/std_flag.json",
                           "--out", body_file)
        assert code == 0
        code, out, _ = run(capsys, "emit-plot", "--body", body_file,
                           "--format", "csv")
        assert code == 0 and out.splitlines()[0] == "x1,x2"
        assert len(out.strip().splitlines()) == 4  # header + 3 vertices
        svg_file = tmp_path / "body.svg"
        code, _, _ = run(capsys, "emit-plot", "--body", body_file,
                         "--format", "svg", "--out", svg_file)
        assert code == 0 and svg_file.read_text().startswith("<svg")

    def test_point_body_single_row(self, capsys, tmp_path):
        body_file = tmp_path / "pt.json"
        body_file.write_text(json.dumps(
            {"ambient_dim": 2, "vertices": [["1", "0"]]}))
        code, out, _ = run(capsys, "emit-plot", "--body", body_file,
                           "--format", "csv")
        assert code == 0 and out.strip().splitlines()[1:] == ["1,0"]


class TestValidateVerb:
    def test_ok(self, corpus, capsys):
        code, _, err = run(capsys, "validate",
                           "--instance", corpus / "instances/ex41.json")
        assert code == 0

    def test_malformed_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "validate", "--instance", bad)
        assert code == 2 and "malformed JSON" in err

    def test_inconsistent_model(self, capsys, tmp_path):
        bad = tmp_path / "model.json"
        bad.write_text(json.dumps({"kind": "toric", "dim": 2,
                                   "rays": [[1, 0], [0, 1], [-1, -1]],
                                   "max_cones": [[0, 1], [1, 2]]}))
        code, _, err = run(capsys, "validate", "--model", bad)
        assert code == 2 and "complete" in err

    def test_float_rejected(self, capsys, tmp_path):
        bad = tmp_path / "div.json"
        bad.write_text(json.dumps({"coeffs": [0.5, 1, 1]}))
        code, _, err = run(capsys, "validate", "--divisor", bad)
        assert code == 2 and "p/q" in err


class TestCorpusOnDisk:
    """The committed fixture corpus must match the builders byte for byte."""

    @pytest.mark.skipif(not REPO_FIXTURES.exists(),
                        reason="fixture corpus not present")
    def test_instances_match_builders(self):
        for name, builder in FX.ALL_INSTANCES.items():
            path = REPO_FIXTURES / "instances" / f"{name}.json"
            assert path.read_text() == canonical_dumps(builder().to_obj())

    @pytest.mark.skipif(not REPO_FIXTURES.exists(),
                        reason="fixture corpus not present")
    def test_instances_parse_and_roundtrip(self):
        for path in sorted((REPO_FIXTURES / "instances").glob("*.json")):
            obj = load_json(str(path))
            fs = instance_from_obj(obj, str(path))
            assert canonical_dumps(fs.to_obj()) == path.read_text()
