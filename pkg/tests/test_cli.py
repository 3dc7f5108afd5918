import json
from pathlib import Path

import pytest

from sectionring.cli import (build_config, canonical_json, emit_report,
                             main, masked_document, parse_config_file,
                             run_pipeline)
from sectionring.errors import ConfigError

DATA = Path(__file__).parent / "data"

G2_VALUES = {"p": 101, "f": [1, 1, 0, 0, 0, 1], "seed": 0}


@pytest.fixture(scope="module")
def g2_doc():
    return run_pipeline(build_config(G2_VALUES))


def test_config_file_roundtrip(tmp_path):
    cfg_path = tmp_path / "run.cfg"
    cfg_path.write_text(
        "# reference curve\n"
        "p = 101\n"
        "f = [1, 1, 0, 0, 0, 1]\n"
        "seed = 3\n"
        "strong = true\n"
        "out = cert.json\n",
        encoding="utf-8")
    cfg = build_config(parse_config_file(cfg_path))
    assert cfg.p == 101
    assert cfg.f_coeffs == [1, 1, 0, 0, 0, 1]
    assert cfg.seed == 3
    assert cfg.strong_divisor_check is True
    assert cfg.output_path == "cert.json"
    assert cfg.degree_bound == 6 and cfg.window == 4  # defaults


def test_config_rejections():
    with pytest.raises(ConfigError):
        build_config({"p": 101})  # f missing
    with pytest.raises(ConfigError):
        build_config({"p": 101, "f": [1, 1, 0, 0, 0, 1], "window": 5})
    with pytest.raises(ConfigError):
        build_config({"p": 101, "f": [1, 1, 0, 0, 0, 1], "degree_bound": 2})
    with pytest.raises(ConfigError):
        build_config({"p": 101, "f": "zzz"})
    with pytest.raises(ConfigError):
        build_config({"p": 101, "f": [1, 1, 0, 0, 0, 1], "mystery": 1})


def test_even_degree_f_is_config_error(capsys):
    # full pipeline entry: exit code 2, no certificate
    code = main(["run", "--prime", "101", "--f", "[1,0,0,0,1]"])
    assert code == 2
    assert "config error" in capsys.readouterr().err


def test_run_pipeline_passes(g2_doc):
    assert g2_doc["verdict"] == "PASS"
    assert g2_doc["failed_stage"] is None
    assert g2_doc["curve"]["genus"] == 2
    assert g2_doc["divisor_certificate"]["h0"] == 2
    assert g2_doc["artinian"]["socle_dim"] == 2
    assert g2_doc["resolution"]["betti"] == [2, 2, 2, 2, 2]
    # every windowed block says so
    assert g2_doc["resolution"]["complex"]["windowed"]
    assert g2_doc["resolution"]["ext"]["windowed"]
    assert g2_doc["artinian"]["total_reflexivity"]["windowed"] is False


def test_determinism_byte_identical(g2_doc):
    doc2 = run_pipeline(build_config(dict(G2_VALUES)))
    a = canonical_json(masked_document(g2_doc))
    b = canonical_json(masked_document(doc2))
    assert a == b


def test_emit_report_writes_canonical_bytes(tmp_path, g2_doc):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    emit_report(g2_doc, p1)
    emit_report(g2_doc, p2)
    assert p1.read_bytes() == p2.read_bytes()
    parsed = json.loads(p1.read_text())
    assert parsed["verdict"] in ("PASS", "FAIL")
    assert "timings" in parsed


def test_golden_file_demo_g2(g2_doc):
    golden = json.loads((DATA / "demo_g2_golden.json").read_text())
    assert (canonical_json(masked_document(g2_doc))
            == canonical_json(masked_document(golden)))


def test_cli_validate(capsys):
    assert main(["validate", "--prime", "101", "--f", "1,1,0,0,0,1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["genus"] == 2 and out["valid"]


def test_cli_search(capsys):
    assert main(["search", "--prime", "101", "--f", "[1,1,0,0,0,1]",
                 "--seed", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["h0"] == 2 and out["h1"] == 0 and out["base_point_free"]


def test_cli_build(capsys):
    assert main(["build", "--prime", "101", "--f", "[1,1,0,0,0,1]"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dims"]["R"] == [1, 5, 11, 17, 23, 29, 35]


def test_cli_run_and_exit_codes(tmp_path, capsys):
    out = tmp_path / "cert.json"
    code = main(["run", "--prime", "101", "--f", "[1,1,0,0,0,1]",
                 "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["verdict"] == "PASS"
    assert "PASS" in capsys.readouterr().out


def test_cli_demo_preset_overridable(tmp_path):
    out = tmp_path / "demo.json"
    code = main(["demo-g2", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["config"]["f"] == [1, 1, 0, 0, 0, 1]
    assert doc["config"]["seed"] == 0
    assert doc["verdict"] == "PASS"


def test_cli_demo_g3(tmp_path):
    out = tmp_path / "demo3.json"
    assert main(["demo-g3", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["verdict"] == "PASS"
    assert doc["curve"]["genus"] == 3
    assert doc["graded_model"]["hilbert"]["numerator"] == [1, 4, 3]
    assert doc["artinian"]["model"]["hilbert_vector"] == [1, 4, 3]


def test_cli_verify_prints_document(capsys):
    code = main(["verify", "--prime", "101", "--f", "[1,1,0,0,0,1]"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "PASS"


def test_pipeline_on_non_reference_curve():
    # small prime, different coefficients: nothing is tuned to the demos
    doc = run_pipeline(build_config({"p": 37, "f": [23, 8, 12, 23, 31, 1],
                                     "seed": 1}))
    assert doc["verdict"] == "PASS"
    assert doc["curve"]["genus"] == 2
    assert doc["artinian"]["model"]["hilbert_vector"] == [1, 3, 2]


def test_fail_document_names_stage(tmp_path):
    # genus-3 curve over GF(11) with only 3 rational places: search must fail
    out = tmp_path / "fail.json"
    code = main(["run", "--prime", "11", "--f", "[8,2,8,0,0,0,0,1]",
                 "--out", str(out)])
    assert code == 1
    doc = json.loads(out.read_text())
    assert doc["verdict"] == "FAIL"
    assert doc["failed_stage"] == "search"
    assert "TooFewPoints" in doc["error"]
