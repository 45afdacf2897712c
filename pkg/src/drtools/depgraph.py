"""Dependency graphs, namespace coupling, and cycle detection.

The graph covers project types only: one node per internal type, one edge
per distinct internal reference, self-loops excluded. Namespace coupling
follows the classic afferent/efferent formulation with instability
I = CE/(CA+CE), abstractness A = NAC/NOC, and distance D = |A+I-1|, all
kept as exact rationals until rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import INTERNAL, EXTERNAL, SourceModel, qualified_name


@dataclass(frozen=True)
class DependencyGraph:
    nodes: tuple[str, ...]  # internal fully-qualified names, sorted
    edges: tuple[tuple[str, str], ...]  # deduplicated, sorted, no self-loops

    def successors(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {node: [] for node in self.nodes}
        for src, dst in self.edges:
            adj[src].append(dst)
        return adj


@dataclass(frozen=True)
class NamespaceCoupling:
    namespace: str
    ca: int
    ce: int
    instability: Fraction
    abstractness: Fraction
    distance: Fraction


@dataclass(frozen=True)
class TypeCoupling:
    namespace: str
    type_name: str
    dep: int
    i_dep: int
    fan_in: int
    fan_out: int

    @property
    def qualified(self) -> str:
        return qualified_name(self.namespace, self.type_name)


@dataclass(frozen=True)
class TypeDependencies:
    type_name: str  # fully qualified
    depends_on: tuple[str, ...]  # sorted


@dataclass(frozen=True)
class DependencyReport:
    external: tuple[TypeDependencies, ...]
    internal: tuple[TypeDependencies, ...]
    cycles: tuple[tuple[str, ...], ...]


def build_graph(model: SourceModel) -> DependencyGraph:
    """One node per internal type, one edge per distinct internal reference."""
    nodes = []
    edges = set()
    for ns, decl in model.internal_types():
        own = qualified_name(ns, decl.name)
        nodes.append(own)
    node_set = set(nodes)
    for ns, decl in model.internal_types():
        own = qualified_name(ns, decl.name)
        for ref in decl.referenced_types:
            if ref.resolution == INTERNAL and ref.resolved and ref.resolved != own:
                if ref.resolved in node_set:
                    edges.add((own, ref.resolved))
    return DependencyGraph(tuple(sorted(nodes)), tuple(sorted(edges)))


def _namespace_of(fqn: str) -> str:
    return fqn.rpartition(".")[0]


def namespace_coupling(model: SourceModel, graph: DependencyGraph) -> list[NamespaceCoupling]:
    """CA/CE/I/A/D per namespace, namespace name ascending.

    CA counts the outside types that reference into the namespace; CE counts
    the outside types it references. Isolated namespaces take I = 0.
    """
    afferent: dict[str, set[str]] = {ns: set() for ns in model.namespaces}
    efferent: dict[str, set[str]] = {ns: set() for ns in model.namespaces}
    for src, dst in graph.edges:
        src_ns = _namespace_of(src)
        dst_ns = _namespace_of(dst)
        if src_ns == dst_ns:
            continue
        afferent[dst_ns].add(src)
        efferent[src_ns].add(dst)

    rows = []
    for ns_name in sorted(model.namespaces):
        ns = model.namespaces[ns_name]
        ca = len(afferent[ns_name])
        ce = len(efferent[ns_name])
        noc = len(ns.types)
        nac = sum(1 for t in ns.types.values() if t.is_abstract)
        instability = Fraction(ce, ca + ce) if ca + ce else Fraction(0)
        abstractness = Fraction(nac, noc) if noc else Fraction(0)
        distance = abs(abstractness + instability - 1)
        rows.append(
            NamespaceCoupling(ns_name, ca, ce, instability, abstractness, distance)
        )
    return rows


def type_coupling_rows(type_metrics_rows) -> list[TypeCoupling]:
    """The coupling view of the per-type rows (same values, fewer columns)."""
    return [
        TypeCoupling(r.namespace, r.type_name, r.dep, r.i_dep, r.fan_in, r.fan_out)
        for r in type_metrics_rows
    ]


def detect_cycles(graph: DependencyGraph) -> list[tuple[str, ...]]:
    """Strongly connected components with >= 2 members.

    Members are sorted by name; components are sorted by their smallest
    member. Iterative Tarjan, so deep graphs cannot overflow the stack.
    """
    adj = graph.successors()
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = [0]
    components: list[tuple[str, ...]] = []

    for root in graph.nodes:
        if root in index:
            continue
        work: list[tuple[str, int]] = [(root, 0)]
        while work:
            node, child_idx = work.pop()
            if child_idx == 0:
                index[node] = lowlink[node] = counter[0]
                counter[0] += 1
                stack.append(node)
                on_stack.add(node)
            recurse = False
            children = adj[node]
            for k in range(child_idx, len(children)):
                child = children[k]
                if child not in index:
                    work.append((node, k + 1))
                    work.append((child, 0))
                    recurse = True
                    break
                if child in on_stack:
                    lowlink[node] = min(lowlink[node], index[child])
            if recurse:
                continue
            if lowlink[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                if len(component) >= 2:
                    components.append(tuple(sorted(component)))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
    components.sort(key=lambda c: c[0])
    return components


def dependency_report(model: SourceModel, graph: DependencyGraph) -> DependencyReport:
    """Per-type external and internal dependency listings plus cycles."""
    external: list[TypeDependencies] = []
    internal: list[TypeDependencies] = []
    for ns, decl in model.internal_types():
        own = qualified_name(ns, decl.name)
        ext = sorted(
            {r.resolved for r in decl.referenced_types if r.resolution == EXTERNAL and r.resolved}
        )
        internal_deps = sorted(
            {
                r.resolved
                for r in decl.referenced_types
                if r.resolution == INTERNAL and r.resolved and r.resolved != own
            }
        )
        if ext:
            external.append(TypeDependencies(own, tuple(ext)))
        if internal_deps:
            internal.append(TypeDependencies(own, tuple(internal_deps)))
    cycles = tuple(detect_cycles(graph))
    return DependencyReport(tuple(external), tuple(internal), cycles)
