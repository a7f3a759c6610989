"""Command-line exit codes, documents and report serialization."""

import json
import logging

import pytest

from bourbaki_degree.algebra.fields import FieldSpec
from bourbaki_degree.cli.documents import dump, input_hash, load_document, render_text
from bourbaki_degree.cli.main import EXIT_INVARIANT, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, main
from bourbaki_degree.cli.pool import ordered_map
from bourbaki_degree.cli.selftest import check_pencil, pencil_failures, run_selftest, sample_rng
from bourbaki_degree.core.config import get_settings
from bourbaki_degree.core.errors import UsageError
from bourbaki_degree.core.models import InputDocument

from tests.conftest import D2B1_ROWS, QUADRICS


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def d2b1_doc(tmp_path):
    return _write(tmp_path, "d2b1.json", {"n": 4, "field": "QQ", "mode": "matrix", "rows": D2B1_ROWS})


@pytest.fixture
def quadrics_doc(tmp_path):
    return _write(tmp_path, "quadrics.json", {"n": 4, "mode": "ideal", "gens": list(QUADRICS)})


# ============================================================================
# Documents
# ============================================================================


def test_document_requires_mode_payload():
    with pytest.raises(ValueError, match="requires 'rows'"):
        InputDocument(n=4, mode="matrix", gens=["x1", "x2", "x3"])


def test_document_rejects_mixed_payloads():
    with pytest.raises(ValueError, match="does not take"):
        InputDocument(n=4, mode="ideal", gens=["x1", "x2", "x3"], pair=["x1", "x2"])


def test_document_rejects_unknown_keys(tmp_path):
    path = _write(tmp_path, "bad.json", {"n": 4, "mode": "ideal", "gens": ["x1"] * 3, "extra": 1})
    with pytest.raises(UsageError):
        load_document(path)


def test_missing_document(tmp_path):
    with pytest.raises(UsageError, match="cannot read"):
        load_document(tmp_path / "missing.json")


def test_input_hash_ignores_formatting(tmp_path):
    a = load_document(_write(tmp_path, "a.json", {"n": 4, "mode": "matrix", "rows": D2B1_ROWS}))
    b = load_document(
        _write(tmp_path, "b.json", {"rows": D2B1_ROWS, "mode": "matrix", "n": 4, "field": "QQ"})
    )
    assert input_hash(a) == input_hash(b)


def test_ordered_map_keeps_input_order():
    assert ordered_map(lambda x: x * x, range(20), threads=4) == [x * x for x in range(20)]


def test_sample_rng_is_replayable():
    assert sample_rng(1, "matrices", 3).random() == sample_rng(1, "matrices", 3).random()
    assert sample_rng(1, "matrices", 3).random() != sample_rng(1, "matrices", 4).random()


# ============================================================================
# analyze / equi / oracle
# ============================================================================


def test_analyze_d2b1(d2b1_doc, capsys):
    assert main(["analyze", d2b1_doc]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["report"]["bour"] == 2
    assert document["provenance"]["field"] == "QQ"
    assert document["report"]["betti_q"][0] == {"i": 0, "degree": -1, "rank": 2}


def test_analyze_is_deterministic(d2b1_doc, capsys):
    main(["analyze", d2b1_doc])
    first = capsys.readouterr().out
    main(["analyze", d2b1_doc])
    assert capsys.readouterr().out == first


def test_analyze_with_every_option(d2b1_doc, capsys):
    code = main(
        ["analyze", d2b1_doc, "--row-wise", "--distribution", "--oracle", "3", "--compare-field", "Fp:32003"]
    )
    assert code == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["row_wise"]["e_f"] == 0
    assert document["emax"]["condition_holds"] is False
    assert document["distribution"]["regular_sequence"] is True
    assert document["comparison"]["differences"] == []
    assert len(document["oracle"]) == 5


def test_analyze_over_prime_field(d2b1_doc, capsys):
    assert main(["analyze", d2b1_doc, "--field", "Fp:32003"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["report"]["field"] == "Fp:32003"
    assert document["report"]["bour"] == 2


def test_analyze_pretty(d2b1_doc, capsys):
    assert main(["analyze", d2b1_doc, "--pretty"]) == EXIT_OK
    out = capsys.readouterr().out
    assert any(line.startswith("Bour") and line.rstrip().endswith("2") for line in out.splitlines())


def test_analyze_writes_file(d2b1_doc, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["analyze", d2b1_doc, "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["report"]["bour"] == 2


def test_rank_one_document_exits_2(tmp_path, capsys):
    rows = [["x1", "x2", "0", "x3"], ["2*x1", "2*x2", "0", "2*x3"]]
    path = _write(tmp_path, "rank.json", {"n": 4, "mode": "matrix", "rows": rows})
    assert main(["analyze", path]) == EXIT_VALIDATION
    assert "rank" in capsys.readouterr().err


def test_parse_error_exits_1(tmp_path, capsys):
    rows = [["x1", "x2", "0", "x9"], ["0", "x1", "x2", "x4"]]
    path = _write(tmp_path, "parse.json", {"n": 4, "mode": "matrix", "rows": rows})
    assert main(["analyze", path]) == EXIT_USAGE
    assert "position" in capsys.readouterr().err


def test_bad_field_exits_1(d2b1_doc):
    assert main(["analyze", d2b1_doc, "--field", "Fp:10"]) == EXIT_USAGE


def test_equi_quadrics(quadrics_doc, capsys):
    assert main(["equi", quadrics_doc]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["equigenerated"]["bour"] == 2
    assert document["equigenerated"]["deg_RJ"] == 2
    assert document["report"]["bour"] == 2


def test_equi_rejects_matrix_documents(d2b1_doc):
    assert main(["equi", d2b1_doc]) == EXIT_USAGE


def test_jacobian_document(tmp_path, capsys):
    path = _write(
        tmp_path,
        "pencil.json",
        {
            "n": 4,
            "mode": "jacobian",
            "pair": ["x1^2 + x2^2 + x3*x4", "x1*x2 + x2*x3 + x4^2"],
            "options": {"distribution": True},
        },
    )
    assert main(["analyze", path]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["mode"] == "jacobian"
    assert document["distribution"]["regular_sequence"] is True


def test_oracle_command(d2b1_doc, capsys):
    assert main(["oracle", d2b1_doc, "--max-degree", "3"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert [r["degree"] for r in rows] == [-1, 0, 1, 2, 3]
    assert [r["kernel_dim"] for r in rows[:4]] == [0, 0, 0, 5]


# ============================================================================
# kw-catalog / selftest / parser
# ============================================================================


def test_kw_catalog_only(capsys):
    assert main(["kw-catalog", "--verify", "--only", "D2B1"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert [row["name"] for row in result["rows"]] == ["D2B1"]
    assert result["rows"][0]["computed"]["bour"] == 2


def test_kw_catalog_pretty(capsys):
    assert main(["kw-catalog", "--only", "D2B1", "--pretty"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].split()[:4] == ["D2B1", "D2|B1", "4", "2"]


def test_kw_catalog_unknown_entry():
    assert main(["kw-catalog", "--only", "nope"]) == EXIT_USAGE


def test_selftest_injected_fault(capsys):
    assert main(["selftest", "--samples", "1", "--seed", "3", "--inject-fault"]) == EXIT_INVARIANT
    err = capsys.readouterr().err
    assert "selftest seed 3" in err
    assert "[3-matrices-0] injected fault" in err


@pytest.mark.slow
def test_selftest_passes(capsys):
    assert main(["selftest", "--samples", "3", "--seed", "11"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert [s["name"] for s in report["suites"]] == ["matrices", "quadric-triples", "pencils"]


def test_selftest_report_model():
    report = run_selftest(samples=0, seed=5)
    assert report.passed
    assert dump(report) == dump(run_selftest(samples=0, seed=5))


def test_missing_subcommand_exits_1():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == EXIT_USAGE


def test_unknown_flag_exits_1(d2b1_doc):
    with pytest.raises(SystemExit) as info:
        main(["analyze", d2b1_doc, "--bogus"])
    assert info.value.code == EXIT_USAGE


def test_render_text_lists_invariants(d2b1_doc):
    from bourbaki_degree.cli.main import build_report

    text = render_text(build_report(load_document(d2b1_doc), FieldSpec()))
    assert "Hilb(Q)" in text
    assert "0 -> R(-4) -> R^4(-3) -> R^5(-2) -> R^4 -> R^2(1)" in text


# ============================================================================
# Settings-driven defaults
# ============================================================================


def test_compare_field_defaults_to_secondary_prime(d2b1_doc, capsys, monkeypatch):
    assert main(["analyze", d2b1_doc, "--compare-field"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["comparison"]["field"] == "Fp:31991"

    monkeypatch.setenv("BOURBAKI_SECONDARY_PRIME", "101")
    get_settings.cache_clear()
    assert main(["analyze", d2b1_doc, "--compare-field"]) == EXIT_OK
    comparison = json.loads(capsys.readouterr().out)["comparison"]
    assert comparison == {"field": "Fp:101", "differences": []}


def test_bare_field_flag_uses_configured_prime(d2b1_doc, capsys, monkeypatch):
    monkeypatch.setenv("BOURBAKI_PRIME", "101")
    get_settings.cache_clear()
    assert main(["analyze", d2b1_doc, "--field", "Fp"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["report"]["field"] == "Fp:101"


def test_kw_catalog_second_prime(capsys):
    assert main(["kw-catalog", "--verify", "--only", "D2B1", "--second-prime"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["diff"] == []


def test_kw_catalog_bad_second_prime(monkeypatch):
    monkeypatch.setenv("BOURBAKI_SECONDARY_PRIME", "91")
    get_settings.cache_clear()
    assert main(["kw-catalog", "--only", "D2B1", "--second-prime"]) == EXIT_USAGE


def test_debug_setting_forces_debug_logging(monkeypatch, capsys):
    monkeypatch.setenv("BOURBAKI_DEBUG", "true")
    get_settings.cache_clear()
    assert main(["kw-catalog", "--only", "D2B1"]) == EXIT_OK
    assert logging.getLogger().level == logging.DEBUG

    assert main(["--log-level", "error", "kw-catalog", "--only", "D2B1"]) == EXIT_OK
    assert logging.getLogger().level == logging.ERROR


# ============================================================================
# Pencil checks
# ============================================================================


def test_seeded_pencil_passes():
    assert check_pencil(sample_rng(1, "pencils", 0), FieldSpec()) == []


def test_pencil_with_common_factor_is_not_regular():
    failures = pencil_failures("x1*x2", "x1*x3", FieldSpec())
    assert any("not a regular sequence" in line for line in failures)


def test_dependent_pencil_is_rejected():
    f = "x1^2 + x2^2 + x3*x4"
    g = "2*x1^2 + 2*x2^2 + 2*x3*x4"
    assert pencil_failures(f, g, FieldSpec()) == ["Jacobian matrix rejected: rank"]
