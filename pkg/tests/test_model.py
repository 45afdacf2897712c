"""SourceModel construction contracts."""

import random

import pytest

from drtools.errors import ModelError
from drtools.model import SourceModel, TypeDecl, TypeRef, namespace_label
from conftest import random_model


def _decl(name, **kwargs):
    return TypeDecl(name=name, **kwargs)


def test_insert_into_fresh_namespace():
    model = SourceModel("p")
    model.add_type("a", _decl("Foo"))
    assert len(model.namespaces) == 1
    assert len(model.namespaces["a"].types) == 1


def test_duplicate_type_name_rejected_naming_both_sites():
    model = SourceModel("p")
    model.add_type("a", _decl("Foo", origin="first/Foo.java"))
    with pytest.raises(ModelError) as err:
        model.add_type("a", _decl("Foo", origin="second/Foo.java"))
    assert "first/Foo.java" in str(err.value)
    assert "second/Foo.java" in str(err.value)


def test_same_simple_name_allowed_across_namespaces():
    model = SourceModel("p")
    model.add_type("a", _decl("Foo"))
    model.add_type("b", _decl("Foo"))
    assert len(model.namespaces) == 2
    assert len(model.internal_types()) == 2


def test_internal_types_empty_model():
    assert SourceModel("p").internal_types() == []


def test_internal_types_sorted_by_namespace_then_name():
    model = SourceModel("p")
    model.add_type("b", _decl("X"))
    model.add_type("a", _decl("Y"))
    assert [(ns, t.name) for ns, t in model.internal_types()] == [("a", "Y"), ("b", "X")]

    model2 = SourceModel("p")
    model2.add_type("a", _decl("B"))
    model2.add_type("a", _decl("A"))
    assert [(ns, t.name) for ns, t in model2.internal_types()] == [("a", "A"), ("a", "B")]


def test_construction_is_order_insensitive():
    rng = random.Random(7)
    for _ in range(25):
        decls = [
            (f"ns{rng.randint(0, 3)}", _decl(f"T{i}", source_lines=rng.randint(1, 9)))
            for i in range(rng.randint(1, 12))
        ]
        m1 = SourceModel("p")
        for ns, d in decls:
            m1.add_type(ns, d)
        shuffled = decls[:]
        rng.shuffle(shuffled)
        m2 = SourceModel("p")
        for ns, d in shuffled:
            m2.add_type(ns, d)
        assert m1 == m2
        assert m1.internal_types() == m2.internal_types()


def test_internal_refs_round_trip(corpus_model):
    for ns, decl in corpus_model.internal_types():
        for ref in decl.referenced_types:
            if ref.resolution == "internal":
                assert corpus_model.lookup(ref.resolved) is not None


def test_random_models_round_trip_internal_refs():
    rng = random.Random(11)
    for _ in range(20):
        model = random_model(rng)
        for ns, decl in model.internal_types():
            for ref in decl.referenced_types:
                if ref.resolution == "internal":
                    assert model.lookup(ref.resolved) is not None


def test_default_namespace_label():
    assert namespace_label("") == "<default>"
    assert namespace_label("app") == "app"


def test_interface_kind_forces_abstract():
    assert TypeDecl(name="I", kind="interface").is_abstract is True


def test_unknown_kind_rejected():
    with pytest.raises(ModelError):
        TypeDecl(name="X", kind="module")


def test_lookup_default_namespace():
    model = SourceModel("p")
    model.add_type("", _decl("Lone"))
    assert model.lookup("Lone") is not None
    assert model.lookup("missing.Lone") is None
