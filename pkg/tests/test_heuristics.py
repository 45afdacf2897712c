"""Heuristic rules, threshold config loading, and monotonicity."""

import random
from dataclasses import replace

import pytest

from drtools.errors import ConfigError
from drtools.heuristics import (
    DEFAULT_THRESHOLDS,
    ThresholdConfig,
    evaluate,
    load_thresholds,
)
from drtools.reporting import build_report
from conftest import random_model


def _report(rng_seed=1):
    return build_report(random_model(random.Random(rng_seed)))


def _make_report(model):
    return build_report(model)


def _findings_by_rule(findings):
    by_rule = {}
    for f in findings:
        by_rule.setdefault(f.rule_id, []).append(f)
    return by_rule


# -- rules -------------------------------------------------------------------


def test_empty_report_no_findings():
    from drtools.model import SourceModel

    report = _make_report(SourceModel("empty"))
    assert evaluate(report) == []


def test_h1_namespace_crowding(corpus_report):
    cfg = replace(DEFAULT_THRESHOLDS, noc_high=6)
    findings = [f for f in evaluate(corpus_report, cfg) if f.rule_id == "H1"]
    assert len(findings) == 1
    f = findings[0]
    assert f.context == "namespace"
    assert f.target == "shapes"
    assert [(e.metric, e.value, e.threshold) for e in f.evidence] == [("NOC", 6, 6)]


def test_h1_below_threshold_silent(corpus_report):
    cfg = replace(DEFAULT_THRESHOLDS, noc_high=7)
    assert [f for f in evaluate(corpus_report, cfg) if f.rule_id == "H1"] == []


def test_h3_long_methods_shape(corpus_report):
    # Checks has SLOC 15 and a single method: ratio 15 >= 10
    cfg = replace(DEFAULT_THRESHOLDS, sloc_type_high=15, avg_mloc_high=10)
    h3 = [f for f in evaluate(corpus_report, cfg) if f.rule_id == "H3"]
    assert [f.target for f in h3] == ["app.util.Checks"]
    # H2 advisory enrichment rides along on type findings
    metrics = [e.metric for e in h3[0].evidence]
    for name in ("WMC", "DEP", "I-DEP", "NOM", "NPM"):
        assert name in metrics


def test_h3_requires_both_conditions(corpus_report):
    cfg = replace(DEFAULT_THRESHOLDS, sloc_type_high=15, avg_mloc_high=16)
    assert [f for f in evaluate(corpus_report, cfg) if f.rule_id == "H3"] == []


def test_h4_complex_class(corpus_report):
    cfg = replace(DEFAULT_THRESHOLDS, sloc_type_high=20, wmc_high=9, nom_low=3)
    h4 = [f for f in evaluate(corpus_report, cfg) if f.rule_id == "H4"]
    assert [f.target for f in h4] == ["app.util.Numbers"]
    ops = {e.metric: e.op for e in h4[0].evidence if e.threshold is not None}
    assert ops["NOM"] == "<="


def test_h5_deep_nesting(corpus_report):
    h5 = [f for f in evaluate(corpus_report) if f.rule_id == "H5"]
    assert [f.target for f in h5] == ["app.util.Checks.deep(int n)"]


def test_h5_below_threshold(corpus_report):
    cfg = replace(DEFAULT_THRESHOLDS, nbd_high=6)
    assert [f for f in evaluate(corpus_report, cfg) if f.rule_id == "H5"] == []


def test_h6_unstable_namespace(corpus_report):
    cfg = replace(DEFAULT_THRESHOLDS, ce_high=2)
    h6 = [f for f in evaluate(corpus_report, cfg) if f.rule_id == "H6"]
    assert [f.target for f in h6] == ["app"]


def test_findings_sorted_by_rule_then_target(corpus_report):
    cfg = ThresholdConfig(
        noc_high=1, sloc_type_high=1, avg_mloc_high=1, wmc_high=1,
        nom_low=99, nbd_high=1, ce_high=1, cyclo_method_high=1,
    )
    findings = evaluate(corpus_report, cfg)
    keys = [(f.rule_id, f.target) for f in findings]
    assert keys == sorted(keys)
    assert len(findings) > 10


def test_evidence_values_violate_their_thresholds(corpus_report):
    cfg = ThresholdConfig(
        noc_high=2, sloc_type_high=5, avg_mloc_high=2, wmc_high=2,
        nom_low=3, nbd_high=2, ce_high=1, cyclo_method_high=1,
    )
    for f in evaluate(corpus_report, cfg):
        for e in f.evidence:
            if e.threshold is None:
                continue
            if e.op == ">=":
                assert e.value >= e.threshold
            else:
                assert e.value <= e.threshold


def test_evaluation_is_pure(corpus_report):
    assert evaluate(corpus_report) == evaluate(corpus_report)


# -- monotonicity ------------------------------------------------------------

_RAISE_TIGHTENS = (
    "noc_high", "sloc_type_high", "avg_mloc_high", "wmc_high", "nbd_high", "ce_high",
)


def test_raising_high_thresholds_never_adds_findings():
    rng = random.Random(31)
    for seed in range(15):
        report = build_report(random_model(random.Random(seed)))
        base_cfg = ThresholdConfig(
            noc_high=3, sloc_type_high=40, avg_mloc_high=8, wmc_high=10,
            nom_low=4, nbd_high=3, ce_high=2,
        )
        base = len(evaluate(report, base_cfg))
        for name in _RAISE_TIGHTENS:
            looser = replace(base_cfg, **{name: getattr(base_cfg, name) * (1 + rng.random())})
            assert len(evaluate(report, looser)) <= base


def test_lowering_nom_low_never_adds_findings():
    for seed in range(15):
        report = build_report(random_model(random.Random(seed)))
        base_cfg = ThresholdConfig(
            noc_high=3, sloc_type_high=40, avg_mloc_high=8, wmc_high=10,
            nom_low=4, nbd_high=3, ce_high=2,
        )
        base = len(evaluate(report, base_cfg))
        tighter = replace(base_cfg, nom_low=2)
        assert len(evaluate(report, tighter)) <= base


# -- config loading ----------------------------------------------------------


def test_load_defaults_when_no_path():
    assert load_thresholds(None) == DEFAULT_THRESHOLDS


def test_load_key_value_overrides(tmp_path):
    path = tmp_path / "thresholds.conf"
    path.write_text("# review profile\nnbd_high = 3\nwmc_high = 30\n")
    cfg = load_thresholds(path)
    assert cfg.nbd_high == 3
    assert cfg.wmc_high == 30
    assert cfg.noc_high == DEFAULT_THRESHOLDS.noc_high


def test_load_json_overrides(tmp_path):
    path = tmp_path / "thresholds.json"
    path.write_text('{"nbd_high": 4, "ce_high": 12}')
    cfg = load_thresholds(path)
    assert cfg.nbd_high == 4
    assert cfg.ce_high == 12


def test_negative_threshold_rejected(tmp_path):
    path = tmp_path / "t.conf"
    path.write_text("nbd_high = -1\n")
    with pytest.raises(ConfigError):
        load_thresholds(path)


def test_unknown_keys_listed_in_error(tmp_path):
    path = tmp_path / "t.conf"
    path.write_text("bogus_key = 3\nwmc_high = nope\n")
    with pytest.raises(ConfigError) as err:
        load_thresholds(path)
    assert "bogus_key" in str(err.value)
    assert "wmc_high" in str(err.value)


def test_missing_file_is_config_error(tmp_path):
    with pytest.raises(ConfigError):
        load_thresholds(tmp_path / "absent.conf")


def test_malformed_line_is_config_error(tmp_path):
    path = tmp_path / "t.conf"
    path.write_text("nbd_high 3\n")
    with pytest.raises(ConfigError):
        load_thresholds(path)
