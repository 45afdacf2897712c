"""Language-neutral in-memory model of an analyzed project.

A frontend (currently the Java one) produces a :class:`SourceModel`; the
metrics engine and the dependency analysis consume it. Supporting another
language means producing this model from its sources -- nothing downstream
changes.

Construction is single-writer. Once a frontend has finished building and
resolving a model it must be treated as immutable; all consumers only read.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ModelError

# Default (unnamed) packages are stored under the empty name and printed
# with this label so report rows stay non-empty.
DEFAULT_NAMESPACE_LABEL = "<default>"

TYPE_KINDS = ("class", "interface", "enum", "annotation", "record")

INTERNAL = "internal"
EXTERNAL = "external"
UNRESOLVED = "unresolved"


def namespace_label(name: str) -> str:
    return name or DEFAULT_NAMESPACE_LABEL


def qualified_name(namespace: str, type_name: str) -> str:
    return f"{namespace}.{type_name}" if namespace else type_name


@dataclass(frozen=True)
class TypeRef:
    """A type name as written in source, plus how it was resolved.

    ``resolution`` is one of ``internal`` (resolved to a project type,
    ``resolved`` holds its fully-qualified name), ``external`` (``resolved``
    holds the best-known name, e.g. ``java.lang.String`` or a raw simple
    name), or ``unresolved`` (ambiguous; ``resolved`` is None).
    """

    raw_name: str
    resolution: str = UNRESOLVED
    resolved: str | None = None

    @staticmethod
    def internal(raw_name: str, fqn: str) -> "TypeRef":
        return TypeRef(raw_name, INTERNAL, fqn)

    @staticmethod
    def external(raw_name: str, best_name: str | None = None) -> "TypeRef":
        return TypeRef(raw_name, EXTERNAL, best_name if best_name is not None else raw_name)

    @staticmethod
    def unresolved(raw_name: str) -> "TypeRef":
        return TypeRef(raw_name, UNRESOLVED, None)


@dataclass(frozen=True)
class FieldDecl:
    name: str
    declared_type: TypeRef


@dataclass
class MethodDecl:
    """One method or constructor with its raw per-method counts.

    The counts (``decision_points``, ``max_block_depth``,
    ``invocation_count``, ``body_lines``) are produced by the frontend; the
    metrics engine only combines them. ``max_block_depth`` is 0 for
    abstract/bodyless methods and >= 1 otherwise.
    """

    name: str
    is_public: bool = False
    is_constructor: bool = False
    params: int = 0
    body_lines: int = 0
    decision_points: int = 0
    max_block_depth: int = 0
    invocation_count: int = 0
    signature: str = ""
    has_body: bool = True

    def __post_init__(self) -> None:
        if not self.signature:
            self.signature = f"{self.name}()"


@dataclass
class TypeDecl:
    """A named top-level type. Nested and anonymous classes are folded in."""

    name: str
    kind: str = "class"
    is_abstract: bool = False
    fields_decl: list[FieldDecl] = field(default_factory=list)
    methods: list[MethodDecl] = field(default_factory=list)
    referenced_types: list[TypeRef] = field(default_factory=list)
    source_lines: int = 1
    origin: str | None = None  # file the declaration came from, for error messages

    def __post_init__(self) -> None:
        if self.kind not in TYPE_KINDS:
            raise ModelError(f"unknown type kind {self.kind!r} for {self.name}")
        if self.kind == "interface":
            self.is_abstract = True


@dataclass
class NamespaceDecl:
    name: str
    types: dict[str, TypeDecl] = field(default_factory=dict)


@dataclass
class SourceModel:
    project_name: str
    namespaces: dict[str, NamespaceDecl] = field(default_factory=dict)
    external_refs: set[str] = field(default_factory=set)

    def add_type(self, namespace: str, decl: TypeDecl) -> "SourceModel":
        """Insert ``decl`` into ``namespace``, creating the namespace on demand.

        Raises :class:`ModelError` if the namespace already holds a type with
        the same simple name, naming both declaration sites.
        """
        ns = self.namespaces.get(namespace)
        if ns is None:
            ns = NamespaceDecl(namespace)
            self.namespaces[namespace] = ns
        existing = ns.types.get(decl.name)
        if existing is not None:
            raise ModelError(
                f"duplicate type {qualified_name(namespace, decl.name)!r}: "
                f"declared in {existing.origin or '<unknown>'} "
                f"and again in {decl.origin or '<unknown>'}"
            )
        ns.types[decl.name] = decl
        return self

    def internal_types(self) -> list[tuple[str, TypeDecl]]:
        """All (namespace, type) pairs, namespace then type name ascending."""
        out: list[tuple[str, TypeDecl]] = []
        for ns_name in sorted(self.namespaces):
            ns = self.namespaces[ns_name]
            for type_name in sorted(ns.types):
                out.append((ns_name, ns.types[type_name]))
        return out

    def lookup(self, fqn: str) -> TypeDecl | None:
        """Find a type by fully-qualified name; default-package types have no dot."""
        ns_name, _, simple = fqn.rpartition(".")
        ns = self.namespaces.get(ns_name)
        if ns is None:
            return None
        return ns.types.get(simple)

    def __eq__(self, other: object) -> bool:
        # Equality ignores insertion order: two models built from the same
        # declarations in any order compare equal.
        if not isinstance(other, SourceModel):
            return NotImplemented
        return (
            self.project_name == other.project_name
            and self.external_refs == other.external_refs
            and {n: ns.types for n, ns in self.namespaces.items()}
            == {n: ns.types for n, ns in other.namespaces.items()}
        )
