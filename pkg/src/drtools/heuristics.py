"""Threshold-driven analysis heuristics over a computed metrics report.

Six rules point reviewers at suspicious elements: crowded namespaces (H1),
long-method and complex-class shapes at type level (H3/H4), deep nesting at
method level (H5), and unstable namespace coupling (H6). H2 is advisory
rather than a predicate: any type flagged by H3/H4 carries its WMC, DEP,
I-DEP, NOM and NPM as context so the reviewer sees past raw size.

The default threshold values are deliberately conservative picks from the
usual metrics literature (e.g. 10 for method complexity, nesting depth 5)
and every one can be overridden from a config file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

from .errors import ConfigError
from .model import namespace_label, qualified_name


@dataclass(frozen=True)
class ThresholdConfig:
    noc_high: float = 20
    sloc_type_high: float = 100
    avg_mloc_high: float = 20
    wmc_high: float = 50
    nom_low: float = 10
    nbd_high: float = 5
    ce_high: float = 20
    cyclo_method_high: float = 10  # used for report/chart coloring, not a rule

    def validate(self) -> "ThresholdConfig":
        bad = [f.name for f in fields(self) if getattr(self, f.name) <= 0]
        if bad:
            raise ConfigError(f"thresholds must be positive: {', '.join(sorted(bad))}")
        return self


DEFAULT_THRESHOLDS = ThresholdConfig()

_THRESHOLD_KEYS = frozenset(f.name for f in fields(ThresholdConfig))


@dataclass(frozen=True)
class Evidence:
    """One (metric, value, threshold) triple backing a finding.

    ``threshold`` is None for advisory context values that are attached for
    review but do not themselves violate anything.
    """

    metric: str
    value: float
    threshold: float | None = None
    op: str = ">="

    def render(self) -> str:
        value = _fmt_num(self.value)
        if self.threshold is None:
            return f"{self.metric}={value}"
        return f"{self.metric}={value} ({self.op} {_fmt_num(self.threshold)})"


@dataclass(frozen=True)
class HeuristicFinding:
    rule_id: str  # H1..H6
    context: str  # namespace | type | method | coupling
    target: str
    evidence: tuple[Evidence, ...]
    message: str


def _fmt_num(v) -> str:
    if isinstance(v, Fraction):
        return f"{float(v):.2f}" if v.denominator != 1 else str(v.numerator)
    if isinstance(v, float):
        return f"{v:.2f}" if v != int(v) else str(int(v))
    return str(v)


def evaluate(report, cfg: ThresholdConfig | None = None) -> list[HeuristicFinding]:
    """Apply all rules to a metrics report; deterministic (rule, target) order."""
    cfg = cfg if cfg is not None else DEFAULT_THRESHOLDS
    findings: list[HeuristicFinding] = []

    for row in report.namespaces:
        if row.noc >= cfg.noc_high:
            findings.append(
                HeuristicFinding(
                    "H1",
                    "namespace",
                    namespace_label(row.namespace),
                    (Evidence("NOC", row.noc, cfg.noc_high),),
                    f"namespace holds {row.noc} types: look for a promiscuous "
                    "package that wants splitting",
                )
            )

    for row in report.types:
        target = qualified_name(row.namespace, row.type_name)
        context_evidence = (
            Evidence("WMC", row.wmc),
            Evidence("DEP", row.dep),
            Evidence("I-DEP", row.i_dep),
            Evidence("NOM", row.nom),
            Evidence("NPM", row.npm),
        )
        avg_mloc = Fraction(row.sloc, max(row.nom, 1))
        if row.sloc >= cfg.sloc_type_high and avg_mloc >= cfg.avg_mloc_high:
            findings.append(
                HeuristicFinding(
                    "H3",
                    "type",
                    target,
                    (
                        Evidence("SLOC", row.sloc, cfg.sloc_type_high),
                        Evidence("SLOC/NOM", avg_mloc, cfg.avg_mloc_high),
                    )
                    + context_evidence,
                    f"large type with few methods (on average {float(avg_mloc):.1f} "
                    "lines each): likely long methods",
                )
            )
        if (
            row.sloc >= cfg.sloc_type_high
            and row.wmc >= cfg.wmc_high
            and row.nom <= cfg.nom_low
        ):
            findings.append(
                HeuristicFinding(
                    "H4",
                    "type",
                    target,
                    (
                        Evidence("SLOC", row.sloc, cfg.sloc_type_high),
                        Evidence("WMC", row.wmc, cfg.wmc_high),
                        Evidence("NOM", row.nom, cfg.nom_low, op="<="),
                    )
                    + context_evidence,
                    "large and complex but with few methods: likely a complex class",
                )
            )

    for row in report.methods:
        if row.nbd >= cfg.nbd_high:
            findings.append(
                HeuristicFinding(
                    "H5",
                    "method",
                    row.qualified,
                    (Evidence("NBD", row.nbd, cfg.nbd_high),),
                    f"deeply nested (depth {row.nbd}): hard to read and test",
                )
            )

    for row in report.namespace_coupling:
        if row.ce >= cfg.ce_high:
            findings.append(
                HeuristicFinding(
                    "H6",
                    "coupling",
                    namespace_label(row.namespace),
                    (Evidence("CE", row.ce, cfg.ce_high),),
                    f"depends on {row.ce} outside types: changes elsewhere "
                    "will keep forcing changes here",
                )
            )

    findings.sort(key=lambda f: (f.rule_id, f.target))
    return findings


_KV_LINE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+?)\s*$")


def load_thresholds(path: str | Path | None = None) -> ThresholdConfig:
    """Load thresholds from ``key = value`` lines or a JSON object.

    Missing path means all defaults; a present file overrides only the keys
    it names. Unknown keys, unparsable values, or non-positive numbers are
    configuration errors.
    """
    if path is None:
        return DEFAULT_THRESHOLDS
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise ConfigError(f"cannot read threshold file {path}: {err.strerror or err}") from err

    stripped = text.lstrip()
    overrides: dict[str, float] = {}
    bad_keys: list[str] = []
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except ValueError as err:
            raise ConfigError(f"threshold file {path} is not valid JSON: {err}") from err
        if not isinstance(data, dict):
            raise ConfigError(f"threshold file {path} must hold a JSON object")
        items = list(data.items())
    else:
        items = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            m = _KV_LINE.match(line)
            if m is None:
                raise ConfigError(
                    f"threshold file {path}:{lineno}: expected 'key = value', got {line!r}"
                )
            items.append((m.group(1), m.group(2)))

    for key, raw in items:
        if key not in _THRESHOLD_KEYS:
            bad_keys.append(key)
            continue
        try:
            value = float(raw)
        except (TypeError, ValueError):
            bad_keys.append(key)
            continue
        overrides[key] = value
    if bad_keys:
        raise ConfigError(
            f"threshold file {path}: invalid or unknown keys: {', '.join(sorted(bad_keys))}"
        )
    return replace(DEFAULT_THRESHOLDS, **overrides).validate()
