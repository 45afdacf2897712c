"""Project scanning and classpath-free name resolution.

``scan_project`` walks a directory tree, parses every ``.java`` file, merges
the units into one SourceModel, and resolves type references. Resolution
works from source alone: single-type imports, same-package types, wildcard
imports of project packages, and a built-in ``java.lang`` name table. There
is deliberately no classpath or jar handling.
"""

from __future__ import annotations

import os

from ..errors import Diagnostic, ModelError
from ..model import SourceModel, TypeRef, qualified_name
from .parser import CompilationUnit, parse_unit

SKIPPED_DIR_NAMES = frozenset(("target", "build", "out", ".git"))

# Simple names importable from java.lang without an import statement.
JAVA_LANG_TYPES = frozenset(
    """Appendable AutoCloseable Boolean Byte CharSequence Character Class
    ClassCastException ClassLoader ClassNotFoundException CloneNotSupportedException
    Cloneable Comparable Deprecated Double Enum Error Exception Float
    FunctionalInterface IllegalAccessException IllegalArgumentException
    IllegalStateException IndexOutOfBoundsException Integer InterruptedException
    Iterable Long Math NegativeArraySizeException NoSuchFieldException
    NoSuchMethodException NullPointerException Number NumberFormatException
    Object OutOfMemoryError Override Process ProcessBuilder Readable Record
    ReflectiveOperationException Runnable Runtime RuntimeException SafeVarargs
    SecurityException Short StackOverflowError StackTraceElement StrictMath
    String StringBuffer StringBuilder StringIndexOutOfBoundsException
    SuppressWarnings System Thread ThreadLocal Throwable
    UnsupportedOperationException ArithmeticException
    ArrayIndexOutOfBoundsException ArrayStoreException AssertionError Void""".split()
)


def scan_project(root_path: str) -> tuple[SourceModel, list[Diagnostic]]:
    """Analyze every ``.java`` file under ``root_path`` into one model.

    Hidden directories and build-output directories (``target``, ``build``,
    ``out``, ``.git``) are skipped. Unreadable or unparsable files produce
    diagnostics; a missing root raises.
    """
    if not os.path.isdir(root_path):
        raise FileNotFoundError(f"source root not found or not a directory: {root_path}")

    java_files: list[str] = []
    for dirpath, dirnames, filenames in os.walk(root_path):
        dirnames[:] = sorted(
            d for d in dirnames if not d.startswith(".") and d not in SKIPPED_DIR_NAMES
        )
        for name in filenames:
            if name.endswith(".java"):
                java_files.append(os.path.join(dirpath, name))
    java_files.sort()

    project_name = os.path.basename(os.path.abspath(root_path))
    model = SourceModel(project_name)
    diagnostics: list[Diagnostic] = []
    units: list[CompilationUnit] = []
    for path in java_files:
        try:
            with open(path, encoding="utf-8", errors="replace") as fh:
                text = fh.read()
        except OSError as err:
            diagnostics.append(Diagnostic(path, 0, f"unreadable file: {err.strerror or err}"))
            continue
        unit = parse_unit(path, text)
        diagnostics.extend(unit.diagnostics)
        units.append(unit)
        for decl in unit.declared_types:
            try:
                model.add_type(unit.package_name, decl)
            except ModelError as err:
                diagnostics.append(Diagnostic(path, 0, str(err)))

    resolve_references(model, units, diagnostics)
    return model, diagnostics


def resolve_references(
    model: SourceModel,
    units: list[CompilationUnit],
    diagnostics: list[Diagnostic] | None = None,
) -> SourceModel:
    """Resolve every raw type reference in ``model`` using unit imports.

    A simple name is internal iff a single-type import maps it to a project
    type, a type of that name lives in the same namespace, or exactly one
    wildcard import targets a project namespace containing it. Two matching
    wildcard namespaces make it unresolved (plus a diagnostic). ``java.lang``
    names and everything else resolve external. Self-references are dropped.
    """
    if diagnostics is None:
        diagnostics = []
    fqn_index: dict[str, bool] = {}
    for ns_name, decl in model.internal_types():
        fqn_index[qualified_name(ns_name, decl.name)] = True

    for unit in units:
        ns_name = unit.package_name
        ns = model.namespaces.get(ns_name)
        if ns is None:
            continue
        single: dict[str, str] = {}
        wildcard_project: list[str] = []
        for imp in unit.imports:
            if imp.static:
                continue
            if imp.wildcard:
                if imp.name in model.namespaces:
                    wildcard_project.append(imp.name)
            else:
                simple = imp.name.rpartition(".")[2]
                single.setdefault(simple, imp.name)

        for decl in unit.declared_types:
            if ns.types.get(decl.name) is not decl:
                continue  # duplicate loser; its references don't count
            own_fqn = qualified_name(ns_name, decl.name)
            resolved: dict[TypeRef, None] = {}
            for ref in decl.referenced_types:
                new_ref = _resolve_name(
                    ref.raw_name, ns_name, single, wildcard_project, fqn_index, model
                )
                if new_ref is None:
                    diagnostics.append(
                        Diagnostic(
                            unit.file_path,
                            0,
                            f"ambiguous reference {ref.raw_name!r} in {own_fqn}: "
                            "multiple wildcard imports match",
                        )
                    )
                    new_ref = TypeRef.unresolved(ref.raw_name)
                if new_ref.resolution == "internal" and new_ref.resolved == own_fqn:
                    continue  # self-reference: never an edge
                resolved.setdefault(new_ref, None)
            decl.referenced_types = list(resolved)
            for ref in decl.referenced_types:
                if ref.resolution == "external" and ref.resolved:
                    model.external_refs.add(ref.resolved)
    return model


def _resolve_name(
    raw: str,
    own_ns: str,
    single: dict[str, str],
    wildcard_project: list[str],
    fqn_index: dict[str, bool],
    model: SourceModel,
) -> TypeRef | None:
    """Resolve one raw name; None signals an ambiguous wildcard match."""
    if "." in raw:
        if raw in fqn_index:
            return TypeRef.internal(raw, raw)
        return TypeRef.external(raw)
    mapped = single.get(raw)
    if mapped is not None:
        if mapped in fqn_index:
            return TypeRef.internal(raw, mapped)
        return TypeRef.external(raw, mapped)
    same_ns = qualified_name(own_ns, raw)
    if same_ns in fqn_index:
        return TypeRef.internal(raw, same_ns)
    matches = [
        ns for ns in wildcard_project if qualified_name(ns, raw) in fqn_index
    ]
    if len(matches) == 1:
        return TypeRef.internal(raw, qualified_name(matches[0], raw))
    if len(matches) > 1:
        return None
    if raw in JAVA_LANG_TYPES:
        return TypeRef.external(raw, f"java.lang.{raw}")
    return TypeRef.external(raw)
