"""Dependency graph, Martin coupling, and cycle detection."""

import random
from fractions import Fraction

from drtools.depgraph import (
    DependencyGraph,
    build_graph,
    dependency_report,
    detect_cycles,
    namespace_coupling,
)
from drtools.model import SourceModel, TypeDecl, TypeRef
from conftest import brute_force_sccs, random_graph, random_model


def _graph(nodes, edges):
    return DependencyGraph(tuple(sorted(nodes)), tuple(sorted(edges)))


def _model_with_edges(spec):
    """spec: {'a.X': ['b.Y', ...]} builds a resolved model."""
    model = SourceModel("p")
    for fqn in spec:
        ns, _, name = fqn.rpartition(".")
        model.add_type(ns, TypeDecl(name=name))
    for fqn, targets in spec.items():
        decl = model.lookup(fqn)
        decl.referenced_types = [TypeRef.internal(t, t) for t in targets]
    return model


def test_build_graph_no_refs():
    model = _model_with_edges({"a.X": [], "a.Y": []})
    graph = build_graph(model)
    assert graph.nodes == ("a.X", "a.Y")
    assert graph.edges == ()


def test_build_graph_edges():
    model = _model_with_edges({"a.X": ["a.Y", "b.Z"], "a.Y": [], "b.Z": []})
    graph = build_graph(model)
    assert len(graph.nodes) == 3
    assert graph.edges == (("a.X", "a.Y"), ("a.X", "b.Z"))


def test_self_loop_excluded():
    model = _model_with_edges({"a.X": ["a.X"]})
    graph = build_graph(model)
    assert graph.nodes == ("a.X",)
    assert graph.edges == ()


def test_coupling_single_edge():
    model = _model_with_edges({"a.X": ["b.Y"], "b.Y": []})
    rows = {r.namespace: r for r in namespace_coupling(model, build_graph(model))}
    b = rows["b"]
    assert (b.ca, b.ce) == (1, 0)
    assert b.instability == 0
    assert b.abstractness == 0
    assert b.distance == 1
    a = rows["a"]
    assert (a.ca, a.ce) == (0, 1)
    assert a.instability == 1
    assert a.distance == 0


def test_coupling_isolated_concrete_namespace():
    model = _model_with_edges({"a.X": []})
    row = namespace_coupling(model, build_graph(model))[0]
    assert (row.ca, row.ce) == (0, 0)
    assert row.instability == 0
    assert row.abstractness == 0
    assert row.distance == 1


def test_coupling_pure_interfaces_on_main_sequence():
    model = SourceModel("p")
    model.add_type("api", TypeDecl(name="Service", kind="interface"))
    model.add_type("impl", TypeDecl(name="ServiceImpl"))
    model.lookup("impl.ServiceImpl").referenced_types = [
        TypeRef.internal("Service", "api.Service")
    ]
    rows = {r.namespace: r for r in namespace_coupling(model, build_graph(model))}
    api = rows["api"]
    assert (api.ca, api.ce) == (1, 0)
    assert api.abstractness == 1
    assert api.instability == 0
    assert api.distance == 0


def test_detect_cycles_acyclic():
    graph = _graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert detect_cycles(graph) == []


def test_detect_cycles_two_node():
    graph = _graph(["X", "Y"], [("X", "Y"), ("Y", "X")])
    assert detect_cycles(graph) == [("X", "Y")]


def test_detect_cycles_three_node_with_isolated():
    graph = _graph(["W", "X", "Y", "Z"], [("X", "Y"), ("Y", "Z"), ("Z", "X")])
    assert detect_cycles(graph) == [("X", "Y", "Z")]
    assert brute_force_sccs(graph.nodes, graph.edges) == [("X", "Y", "Z")]


def test_detect_cycles_deterministic_order():
    graph = _graph(
        ["m", "n", "a", "b"],
        [("m", "n"), ("n", "m"), ("a", "b"), ("b", "a")],
    )
    assert detect_cycles(graph) == [("a", "b"), ("m", "n")]


def test_cycles_match_brute_force_on_random_graphs():
    rng = random.Random(19)
    for _ in range(300):
        nodes, edges = random_graph(rng)
        graph = _graph(nodes, edges)
        assert detect_cycles(graph) == brute_force_sccs(nodes, edges)


def test_corpus_cycles(corpus_model):
    cycles = detect_cycles(build_graph(corpus_model))
    assert cycles == [
        ("app.model.Edge", "app.model.Node"),
        ("shapes.Alpha", "shapes.Beta", "shapes.Gamma"),
    ]


def test_ca_ce_duality_on_random_models():
    rng = random.Random(23)
    for _ in range(50):
        model = random_model(rng)
        graph = build_graph(model)
        rows = namespace_coupling(model, graph)
        cross = [
            (src, dst)
            for src, dst in graph.edges
            if src.rpartition(".")[0] != dst.rpartition(".")[0]
        ]
        # every cross-namespace edge contributes its source to CA of the
        # target namespace and its target to CE of the source namespace
        ca_members = {ns.namespace: set() for ns in rows}
        ce_members = {ns.namespace: set() for ns in rows}
        for src, dst in cross:
            ca_members[dst.rpartition(".")[0]].add(src)
            ce_members[src.rpartition(".")[0]].add(dst)
        for row in rows:
            assert row.ca == len(ca_members[row.namespace])
            assert row.ce == len(ce_members[row.namespace])


def test_distance_recomputes_exactly_on_random_models():
    rng = random.Random(29)
    for _ in range(50):
        model = random_model(rng)
        for row in namespace_coupling(model, build_graph(model)):
            assert isinstance(row.distance, Fraction)
            assert row.distance == abs(row.abstractness + row.instability - 1)
            assert 0 <= row.instability <= 1
            assert 0 <= row.abstractness <= 1
            assert 0 <= row.distance <= 1


def test_dependency_report_listings(corpus_model):
    report = dependency_report(corpus_model, build_graph(corpus_model))
    internal = {e.type_name: e.depends_on for e in report.internal}
    assert internal["app.Main"] == ("app.model.Item", "app.util.Strings")
    external = {e.type_name: e.depends_on for e in report.external}
    assert external["app.util.Numbers"] == (
        "java.lang.Integer",
        "java.lang.NumberFormatException",
        "java.lang.String",
    )
    assert len(report.cycles) == 2
