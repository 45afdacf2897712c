"""Report assembly: contextual sorting, top-N filtering, pretty/CSV/JSON.

Each context has a default multi-key sort (size and complexity first, the
element name as the final tie-break) so output order is total and stable.
CSV and JSON always carry the full data set; only the pretty renderer
applies ``--top``, which keeps the machine-readable outputs filterable by
downstream consumers such as the visualization dashboard.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from operator import attrgetter
from pathlib import Path

from . import __version__
from .depgraph import (
    DependencyReport,
    NamespaceCoupling,
    TypeCoupling,
    build_graph,
    dependency_report,
    namespace_coupling,
    type_coupling_rows,
)
from .errors import ConfigError
from .heuristics import HeuristicFinding, ThresholdConfig, evaluate
from .metrics import (
    MethodMetrics,
    NamespaceMetrics,
    SummaryMetrics,
    TypeMetrics,
    compute_method_metrics,
    compute_namespace_metrics,
    compute_type_metrics,
    summary,
)
from .model import SourceModel, namespace_label

CONTEXTS = (
    "summary",
    "namespaces",
    "types",
    "methods",
    "coupling",
    "type-coupling",
    "dependencies",
    "cycles",
    "findings",
)


@dataclass
class MetricsReport:
    """Everything one analysis run produced, already in context sort order."""

    project_name: str
    summary: SummaryMetrics
    namespaces: list[NamespaceMetrics]
    types: list[TypeMetrics]
    methods: list[MethodMetrics]
    namespace_coupling: list[NamespaceCoupling]
    type_coupling: list[TypeCoupling]
    dependencies: DependencyReport
    findings: list[HeuristicFinding] = field(default_factory=list)
    tool_version: str = __version__
    generated_at: str | None = None


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


# ---------------------------------------------------------------------------
# sorting / filtering
# ---------------------------------------------------------------------------

_SORTABLE_COLUMNS: dict[str, frozenset[str]] = {
    "namespaces": frozenset(("noc", "nac")),
    "types": frozenset(
        ("sloc", "nom", "npm", "wmc", "dep", "i_dep", "fan_in", "fan_out", "noa")
    ),
    "methods": frozenset(("mloc", "cyclo", "calls", "nbd", "param")),
    "namespace_coupling": frozenset(("ca", "ce", "instability", "abstractness", "distance")),
    "type_coupling": frozenset(("dep", "i_dep", "fan_in", "fan_out")),
}

DEFAULT_SORTS: dict[str, tuple[tuple[str, str], ...]] = {
    "namespaces": (("noc", "desc"),),
    "types": (("sloc", "desc"), ("wmc", "desc"), ("nom", "desc")),
    "methods": (("cyclo", "desc"), ("nbd", "desc"), ("mloc", "desc"), ("calls", "desc")),
    "namespace_coupling": (("distance", "desc"), ("ce", "desc")),
    "type_coupling": (("i_dep", "desc"), ("fan_in", "desc")),
}


def _element_name(context: str, row) -> str:
    if context in ("namespaces", "namespace_coupling"):
        return namespace_label(row.namespace)
    if context == "types" or context == "type_coupling":
        return row.qualified
    return row.qualified  # methods


def sort_context(rows, context, spec=None):
    """Sort rows of one context; the element name always breaks ties.

    ``spec`` is an optional list of (column, "asc"|"desc") overriding the
    context default; unknown columns or directions are configuration errors.
    """
    columns = _SORTABLE_COLUMNS.get(context)
    if columns is None:
        raise ConfigError(f"unknown sortable context {context!r}")
    chain = tuple(spec) if spec is not None else DEFAULT_SORTS[context]
    for column, direction in chain:
        if column not in columns:
            raise ConfigError(f"unknown sort column {column!r} for context {context!r}")
        if direction not in ("asc", "desc"):
            raise ConfigError(f"unknown sort direction {direction!r}")
    out = sorted(rows, key=lambda r: _element_name(context, r))
    for column, direction in reversed(chain):
        out.sort(key=attrgetter(column), reverse=direction == "desc")
    return out


def take_top(rows, n: int):
    """First ``n`` rows of an already sorted context."""
    if n < 0:
        raise ValueError("top must be non-negative")
    return list(rows[:n])


# ---------------------------------------------------------------------------
# pipeline
# ---------------------------------------------------------------------------


def build_report(
    model: SourceModel,
    thresholds: ThresholdConfig | None = None,
    generated_at: str | None = None,
) -> MetricsReport:
    """Run metrics, dependency analysis, and heuristics over a model."""
    type_rows = sort_context(compute_type_metrics(model), "types")
    graph = build_graph(model)
    report = MetricsReport(
        project_name=model.project_name,
        summary=summary(model),
        namespaces=sort_context(compute_namespace_metrics(model), "namespaces"),
        types=type_rows,
        methods=sort_context(compute_method_metrics(model), "methods"),
        namespace_coupling=sort_context(
            namespace_coupling(model, graph), "namespace_coupling"
        ),
        type_coupling=sort_context(type_coupling_rows(type_rows), "type_coupling"),
        dependencies=dependency_report(model, graph),
        generated_at=generated_at,
    )
    report.findings = evaluate(report, thresholds)
    return report


# ---------------------------------------------------------------------------
# value rendering
# ---------------------------------------------------------------------------


def _dec(value) -> str:
    """Two-decimal rendering for means and ratios."""
    return f"{float(value):.2f}"


def _json_num(value):
    if isinstance(value, Fraction):
        as_float = round(float(value), 2)
        return int(as_float) if as_float == int(as_float) and value.denominator == 1 else as_float
    if isinstance(value, float):
        return round(value, 2)
    return value


_SUMMARY_FIELDS = (
    ("total_namespaces", False),
    ("total_types", False),
    ("mean_types_per_namespace", True),
    ("total_sloc", False),
    ("mean_sloc_per_type", True),
    ("total_methods", False),
    ("mean_methods_per_type", True),
    ("total_cyclo", False),
    ("mean_cyclo_per_type", True),
)

_SUMMARY_LABELS = {
    "total_namespaces": "Namespaces",
    "total_types": "Types",
    "mean_types_per_namespace": "Types per namespace",
    "total_sloc": "Total SLOC",
    "mean_sloc_per_type": "SLOC per type",
    "total_methods": "Methods",
    "mean_methods_per_type": "Methods per type",
    "total_cyclo": "Total complexity",
    "mean_cyclo_per_type": "Complexity per type",
}


def _namespace_cells(r: NamespaceMetrics) -> list[str]:
    return [namespace_label(r.namespace), str(r.noc), str(r.nac)]


def _type_cells(r: TypeMetrics) -> list[str]:
    return [
        namespace_label(r.namespace),
        r.type_name,
        str(r.sloc),
        str(r.nom),
        str(r.npm),
        str(r.wmc),
        str(r.dep),
        str(r.i_dep),
        str(r.fan_in),
        str(r.fan_out),
        str(r.noa),
    ]


def _method_cells(r: MethodMetrics) -> list[str]:
    return [
        namespace_label(r.namespace),
        r.type_name,
        r.signature,
        str(r.mloc),
        str(r.cyclo),
        str(r.calls),
        str(r.nbd),
        str(r.param),
    ]


def _coupling_cells(r: NamespaceCoupling) -> list[str]:
    return [
        namespace_label(r.namespace),
        str(r.ca),
        str(r.ce),
        _dec(r.instability),
        _dec(r.abstractness),
        _dec(r.distance),
    ]


def _type_coupling_cells(r: TypeCoupling) -> list[str]:
    return [
        namespace_label(r.namespace),
        r.type_name,
        str(r.dep),
        str(r.i_dep),
        str(r.fan_in),
        str(r.fan_out),
    ]


# ---------------------------------------------------------------------------
# pretty
# ---------------------------------------------------------------------------

def _title(name: str, shown: int, total: int) -> str:
    if shown < total:
        return f"== {name} (top {shown} of {total}) =="
    return f"== {name} ({total}) =="


def _table(headers: list[str], rows: list[list[str]], numeric_from: int) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    header_cells = [
        h.ljust(widths[i]) if i < numeric_from else h.rjust(widths[i])
        for i, h in enumerate(headers)
    ]
    lines.append("  " + "  ".join(header_cells).rstrip())
    for row in rows:
        cells = [
            cell.ljust(widths[i]) if i < numeric_from else cell.rjust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  " + "  ".join(cells).rstrip())
    return lines


def render_pretty(report: MetricsReport, contexts=None, top: int | None = None) -> str:
    """Human-readable, column-aligned report for the requested contexts."""
    selected = set(contexts) if contexts else set(CONTEXTS)
    out: list[str] = [f"Project: {report.project_name}"]
    if report.generated_at:
        out.append(f"Generated: {report.generated_at}")
    out.append("")

    def top_rows(rows):
        return (take_top(rows, top), len(rows)) if top is not None else (list(rows), len(rows))

    if "summary" in selected:
        out.append("== Summary ==")
        label_width = max(len(v) for v in _SUMMARY_LABELS.values())
        values = {
            name: (_dec(getattr(report.summary, name)) if is_mean else str(getattr(report.summary, name)))
            for name, is_mean in _SUMMARY_FIELDS
        }
        value_width = max(len(v) for v in values.values())
        for name, _ in _SUMMARY_FIELDS:
            out.append(f"  {_SUMMARY_LABELS[name].ljust(label_width)}  {values[name].rjust(value_width)}")
        out.append("")

    if "namespaces" in selected:
        rows, total = top_rows(report.namespaces)
        out.append(_title("Namespaces", len(rows), total))
        out.extend(_table(["NAMESPACE", "NOC", "NAC"], [_namespace_cells(r) for r in rows], 1))
        out.append("")

    if "types" in selected:
        rows, total = top_rows(report.types)
        out.append(_title("Types", len(rows), total))
        out.extend(
            _table(
                ["NAMESPACE", "TYPE", "SLOC", "NOM", "NPM", "WMC", "DEP", "I-DEP", "FAN-IN", "FAN-OUT", "NOA"],
                [_type_cells(r) for r in rows],
                2,
            )
        )
        out.append("")

    if "methods" in selected:
        rows, total = top_rows(report.methods)
        out.append(_title("Methods", len(rows), total))
        out.extend(
            _table(
                ["NAMESPACE", "TYPE", "METHOD", "MLOC", "CYCLO", "CALLS", "NBD", "PARAM"],
                [_method_cells(r) for r in rows],
                3,
            )
        )
        out.append("")

    if "coupling" in selected:
        rows, total = top_rows(report.namespace_coupling)
        out.append(_title("Namespace coupling", len(rows), total))
        out.extend(
            _table(
                ["NAMESPACE", "CA", "CE", "I", "A", "D"],
                [_coupling_cells(r) for r in rows],
                1,
            )
        )
        out.append("")

    if "type-coupling" in selected:
        rows, total = top_rows(report.type_coupling)
        out.append(_title("Type coupling", len(rows), total))
        out.extend(
            _table(
                ["NAMESPACE", "TYPE", "DEP", "I-DEP", "FAN-IN", "FAN-OUT"],
                [_type_coupling_cells(r) for r in rows],
                2,
            )
        )
        out.append("")

    if "dependencies" in selected:
        ext_rows, ext_total = top_rows(report.dependencies.external)
        out.append(_title("External dependencies", len(ext_rows), ext_total))
        out.extend(
            _table(
                ["TYPE", "DEPENDS ON"],
                [[r.type_name, ", ".join(r.depends_on)] for r in ext_rows],
                2,
            )
        )
        out.append("")
        int_rows, int_total = top_rows(report.dependencies.internal)
        out.append(_title("Internal dependencies", len(int_rows), int_total))
        out.extend(
            _table(
                ["TYPE", "DEPENDS ON"],
                [[r.type_name, ", ".join(r.depends_on)] for r in int_rows],
                2,
            )
        )
        out.append("")

    if "cycles" in selected:
        cycles = report.dependencies.cycles
        out.append(f"== Cyclic dependencies ({len(cycles)}) ==")
        if cycles:
            for members in cycles:
                out.append("  " + " <-> ".join(members))
        else:
            out.append("  (none)")
        out.append("")

    if "findings" in selected:
        out.append(f"== Findings ({len(report.findings)}) ==")
        if report.findings:
            for f in report.findings:
                evidence = "; ".join(e.render() for e in f.evidence)
                out.append(f"  [{f.rule_id}] {f.context} {f.target}: {f.message} [{evidence}]")
        else:
            out.append("  (none)")
        out.append("")

    return "\n".join(out).rstrip("\n") + "\n"


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

CSV_FILES = (
    "summary.csv",
    "namespaces.csv",
    "types.csv",
    "methods.csv",
    "namespace-coupling.csv",
    "type-coupling.csv",
    "dependencies.csv",
    "findings.csv",
)


def _csv_text(headers: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def csv_documents(report: MetricsReport) -> dict[str, str]:
    """The eight CSV documents keyed by file name."""
    summary_rows = [
        [name, _dec(getattr(report.summary, name)) if is_mean else str(getattr(report.summary, name))]
        for name, is_mean in _SUMMARY_FIELDS
    ]
    dep_rows = []
    for entry in report.dependencies.internal:
        for target in entry.depends_on:
            dep_rows.append([entry.type_name, target, "internal"])
    for entry in report.dependencies.external:
        for target in entry.depends_on:
            dep_rows.append([entry.type_name, target, "external"])
    dep_rows.sort(key=lambda r: (r[0], r[1]))
    finding_rows = [
        [f.rule_id, f.context, f.target, "; ".join(e.render() for e in f.evidence), f.message]
        for f in report.findings
    ]
    return {
        "summary.csv": _csv_text(["metric", "value"], summary_rows),
        "namespaces.csv": _csv_text(
            ["namespace", "noc", "nac"], [_namespace_cells(r) for r in report.namespaces]
        ),
        "types.csv": _csv_text(
            ["namespace", "type", "sloc", "nom", "npm", "wmc", "dep", "i_dep", "fan_in", "fan_out", "noa"],
            [_type_cells(r) for r in report.types],
        ),
        "methods.csv": _csv_text(
            ["namespace", "type", "method", "mloc", "cyclo", "calls", "nbd", "param"],
            [_method_cells(r) for r in report.methods],
        ),
        "namespace-coupling.csv": _csv_text(
            ["namespace", "ca", "ce", "instability", "abstractness", "distance"],
            [_coupling_cells(r) for r in report.namespace_coupling],
        ),
        "type-coupling.csv": _csv_text(
            ["namespace", "type", "dep", "i_dep", "fan_in", "fan_out"],
            [_type_coupling_cells(r) for r in report.type_coupling],
        ),
        "dependencies.csv": _csv_text(["from_type", "to_type", "kind"], dep_rows),
        "findings.csv": _csv_text(
            ["rule", "context", "target", "evidence", "message"], finding_rows
        ),
    }


def render_csv(report: MetricsReport, output_dir) -> list[Path]:
    """Write the eight CSV files into ``output_dir``; returns their paths."""
    out_dir = Path(output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, text in csv_documents(report).items():
        path = out_dir / name
        path.write_text(text, encoding="utf-8")
        paths.append(path)
    return paths


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def report_to_dict(report: MetricsReport) -> dict:
    """The JSON document structure (plain data, two-decimal means)."""
    return {
        "project": report.project_name,
        "generated_at": report.generated_at,
        "summary": {
            name: _json_num(getattr(report.summary, name)) for name, _ in _SUMMARY_FIELDS
        },
        "namespaces": [
            {"namespace": namespace_label(r.namespace), "noc": r.noc, "nac": r.nac}
            for r in report.namespaces
        ],
        "types": [
            {
                "namespace": namespace_label(r.namespace),
                "type": r.type_name,
                "sloc": r.sloc,
                "nom": r.nom,
                "npm": r.npm,
                "wmc": r.wmc,
                "dep": r.dep,
                "i_dep": r.i_dep,
                "fan_in": r.fan_in,
                "fan_out": r.fan_out,
                "noa": r.noa,
            }
            for r in report.types
        ],
        "methods": [
            {
                "namespace": namespace_label(r.namespace),
                "type": r.type_name,
                "method": r.signature,
                "mloc": r.mloc,
                "cyclo": r.cyclo,
                "calls": r.calls,
                "nbd": r.nbd,
                "param": r.param,
            }
            for r in report.methods
        ],
        "namespace_coupling": [
            {
                "namespace": namespace_label(r.namespace),
                "ca": r.ca,
                "ce": r.ce,
                "instability": _json_num(r.instability),
                "abstractness": _json_num(r.abstractness),
                "distance": _json_num(r.distance),
            }
            for r in report.namespace_coupling
        ],
        "type_coupling": [
            {
                "namespace": namespace_label(r.namespace),
                "type": r.type_name,
                "dep": r.dep,
                "i_dep": r.i_dep,
                "fan_in": r.fan_in,
                "fan_out": r.fan_out,
            }
            for r in report.type_coupling
        ],
        "dependencies": {
            "external": [
                {"type": e.type_name, "depends_on": list(e.depends_on)}
                for e in report.dependencies.external
            ],
            "internal": [
                {"type": e.type_name, "depends_on": list(e.depends_on)}
                for e in report.dependencies.internal
            ],
            "cycles": [list(c) for c in report.dependencies.cycles],
        },
        "findings": [
            {
                "rule": f.rule_id,
                "context": f.context,
                "target": f.target,
                "evidence": [
                    {
                        "metric": e.metric,
                        "value": _json_num(e.value),
                        "threshold": _json_num(e.threshold) if e.threshold is not None else None,
                        "op": e.op,
                    }
                    for e in f.evidence
                ],
                "message": f.message,
            }
            for f in report.findings
        ],
    }


def json_document(report: MetricsReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=False) + "\n"


def render_json(report: MetricsReport, output_path) -> Path:
    """Write the report as a single JSON document."""
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json_document(report), encoding="utf-8")
    return path
