"""Metric computation over a resolved SourceModel.

Four row contexts come out of here: project summary, per-namespace,
per-type, and per-method. All means are kept as exact rationals and only
rendered to two decimals by the reporting layer, so summary consistency
(totals vs. means) holds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import INTERNAL, EXTERNAL, MethodDecl, SourceModel, TypeDecl, qualified_name


@dataclass(frozen=True)
class SummaryMetrics:
    total_namespaces: int
    total_types: int
    mean_types_per_namespace: Fraction
    total_sloc: int
    mean_sloc_per_type: Fraction
    total_methods: int
    mean_methods_per_type: Fraction
    total_cyclo: int
    mean_cyclo_per_type: Fraction


@dataclass(frozen=True)
class NamespaceMetrics:
    namespace: str
    noc: int  # types in the namespace
    nac: int  # abstract classes + interfaces


@dataclass(frozen=True)
class TypeMetrics:
    namespace: str
    type_name: str
    sloc: int
    nom: int
    npm: int
    wmc: int
    dep: int
    i_dep: int
    fan_in: int
    fan_out: int
    noa: int

    @property
    def qualified(self) -> str:
        return qualified_name(self.namespace, self.type_name)


@dataclass(frozen=True)
class MethodMetrics:
    namespace: str
    type_name: str
    signature: str
    mloc: int
    cyclo: int
    calls: int
    nbd: int
    param: int

    @property
    def qualified(self) -> str:
        return f"{qualified_name(self.namespace, self.type_name)}.{self.signature}"


def cyclo(method: MethodDecl) -> int:
    """McCabe complexity: 1 + decision points (1 for bodyless methods)."""
    return 1 + method.decision_points


def _internal_deps(decl: TypeDecl) -> set[str]:
    return {r.resolved for r in decl.referenced_types if r.resolution == INTERNAL and r.resolved}


def _external_deps(decl: TypeDecl) -> set[str]:
    return {r.resolved for r in decl.referenced_types if r.resolution == EXTERNAL and r.resolved}


def compute_type_metrics(model: SourceModel) -> list[TypeMetrics]:
    """TypeMetrics for every type, in deterministic model order."""
    entries = model.internal_types()
    fan_in: dict[str, set[str]] = {
        qualified_name(ns, decl.name): set() for ns, decl in entries
    }
    for ns, decl in entries:
        own = qualified_name(ns, decl.name)
        for target in _internal_deps(decl):
            if target != own and target in fan_in:
                fan_in[target].add(own)

    rows: list[TypeMetrics] = []
    for ns, decl in entries:
        own = qualified_name(ns, decl.name)
        internal = _internal_deps(decl) - {own}
        rows.append(
            TypeMetrics(
                namespace=ns,
                type_name=decl.name,
                sloc=decl.source_lines,
                nom=len(decl.methods),
                npm=sum(1 for m in decl.methods if m.is_public),
                wmc=sum(cyclo(m) for m in decl.methods),
                dep=len(_external_deps(decl)),
                i_dep=len(internal),
                fan_in=len(fan_in[own]),
                fan_out=len(internal),
                noa=len(decl.fields_decl),
            )
        )
    return rows


def type_metrics(model: SourceModel, decl: TypeDecl) -> TypeMetrics:
    """The TypeMetrics row for one type of the model."""
    for row in compute_type_metrics(model):
        if model.lookup(row.qualified) is decl:
            return row
    raise ValueError(f"type {decl.name!r} is not part of the model")


def compute_namespace_metrics(model: SourceModel) -> list[NamespaceMetrics]:
    rows = []
    for ns_name in sorted(model.namespaces):
        ns = model.namespaces[ns_name]
        rows.append(
            NamespaceMetrics(
                namespace=ns_name,
                noc=len(ns.types),
                nac=sum(1 for t in ns.types.values() if t.is_abstract),
            )
        )
    return rows


def namespace_metrics(model: SourceModel, namespace: str) -> NamespaceMetrics:
    for row in compute_namespace_metrics(model):
        if row.namespace == namespace:
            return row
    raise ValueError(f"namespace {namespace!r} is not part of the model")


def compute_method_metrics(model: SourceModel) -> list[MethodMetrics]:
    rows = []
    for ns, decl in model.internal_types():
        for m in decl.methods:
            rows.append(
                MethodMetrics(
                    namespace=ns,
                    type_name=decl.name,
                    signature=m.signature,
                    mloc=m.body_lines,
                    cyclo=cyclo(m),
                    calls=m.invocation_count,
                    nbd=m.max_block_depth,
                    param=m.params,
                )
            )
    return rows


def _mean(total: int, count: int) -> Fraction:
    return Fraction(total, count) if count else Fraction(0)


def summary(model: SourceModel) -> SummaryMetrics:
    """Project totals plus per-namespace/per-type means (exact rationals)."""
    entries = model.internal_types()
    n_namespaces = len(model.namespaces)
    n_types = len(entries)
    total_sloc = sum(decl.source_lines for _, decl in entries)
    total_methods = sum(len(decl.methods) for _, decl in entries)
    total_cyclo = sum(cyclo(m) for _, decl in entries for m in decl.methods)
    return SummaryMetrics(
        total_namespaces=n_namespaces,
        total_types=n_types,
        mean_types_per_namespace=_mean(n_types, n_namespaces),
        total_sloc=total_sloc,
        mean_sloc_per_type=_mean(total_sloc, n_types),
        total_methods=total_methods,
        mean_methods_per_type=_mean(total_methods, n_types),
        total_cyclo=total_cyclo,
        mean_cyclo_per_type=_mean(total_cyclo, n_types),
    )
