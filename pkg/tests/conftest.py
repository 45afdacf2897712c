"""Shared fixtures and random-input generators for the test suite."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from drtools.java import scan_project
from drtools.model import FieldDecl, MethodDecl, SourceModel, TypeDecl, TypeRef, qualified_name
from drtools.reporting import build_report

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"
EXPECTED = FIXTURES / "expected"


@pytest.fixture(scope="session")
def corpus_model():
    model, diagnostics = scan_project(str(CORPUS))
    assert diagnostics == [], [str(d) for d in diagnostics]
    return model


@pytest.fixture(scope="session")
def corpus_report(corpus_model):
    return build_report(corpus_model)


def random_model(rng: random.Random, max_namespaces: int = 8, max_types: int = 30) -> SourceModel:
    """A random but structurally valid resolved model."""
    n_ns = rng.randint(1, max_namespaces)
    namespaces = [f"ns{chr(ord('a') + i)}" for i in range(n_ns)]
    model = SourceModel("random")
    declared: list[tuple[str, TypeDecl]] = []
    for k in range(rng.randint(1, max_types)):
        ns = rng.choice(namespaces)
        kind = rng.choice(("class", "class", "class", "interface", "enum"))
        methods = [
            MethodDecl(
                name=f"m{j}",
                is_public=rng.random() < 0.6,
                params=rng.randint(0, 4),
                body_lines=rng.randint(1, 40),
                decision_points=rng.randint(0, 12),
                max_block_depth=rng.randint(1, 7),
                invocation_count=rng.randint(0, 15),
                signature=f"m{j}()",
            )
            for j in range(rng.randint(0, 5))
        ]
        fields = [FieldDecl(f"f{j}", TypeRef("int")) for j in range(rng.randint(0, 4))]
        decl = TypeDecl(
            name=f"T{k}",
            kind=kind,
            is_abstract=kind == "interface" or rng.random() < 0.25,
            fields_decl=fields,
            methods=methods,
            source_lines=rng.randint(1, 200),
        )
        model.add_type(ns, decl)
        declared.append((ns, decl))

    for ns, decl in declared:
        own = qualified_name(ns, decl.name)
        refs: dict[TypeRef, None] = {}
        for _ in range(rng.randint(0, min(6, len(declared)))):
            tns, tdecl = rng.choice(declared)
            target = qualified_name(tns, tdecl.name)
            if target != own:
                refs.setdefault(TypeRef.internal(target, target), None)
        if rng.random() < 0.5:
            ext = f"ext.E{rng.randint(0, 5)}"
            refs.setdefault(TypeRef.external(ext, ext), None)
            model.external_refs.add(ext)
        decl.referenced_types = list(refs)
    return model


def random_graph(rng: random.Random, max_nodes: int = 10):
    """Random digraph (nodes, edges) without self-loops."""
    n = rng.randint(0, max_nodes)
    nodes = tuple(f"n{i:02d}" for i in range(n))
    edges = set()
    if n >= 2:
        for _ in range(rng.randint(0, n * 2)):
            a, b = rng.sample(nodes, 2)
            edges.add((a, b))
    return nodes, tuple(sorted(edges))


def brute_force_sccs(nodes, edges):
    """Mutual-reachability components of size >= 2, by exhaustive search."""
    succ = {n: set() for n in nodes}
    for a, b in edges:
        succ[a].add(b)

    def reachable(start):
        seen = set()
        stack = [start]
        while stack:
            cur = stack.pop()
            for nxt in succ[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    reach = {n: reachable(n) for n in nodes}
    assigned = set()
    components = []
    for n in sorted(nodes):
        if n in assigned:
            continue
        members = {n} | {m for m in nodes if m in reach[n] and n in reach[m]}
        assigned |= members
        if len(members) >= 2:
            components.append(tuple(sorted(members)))
    components.sort(key=lambda c: c[0])
    return components
