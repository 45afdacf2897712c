"""Structural parser for single Java compilation units.

This is not a full grammar: it recognizes exactly the structure the metrics
need (packages, imports, type/member declarations, and the token patterns
inside method bodies that contribute decision points, nesting, invocations,
and type references). Anything it cannot make sense of structurally aborts
the unit with a diagnostic; analysis of the rest of the project continues.

Counting rules implemented here:

* decision points: ``if``, ``for`` (both forms), ``while``, ``do``, each
  ``case`` keyword, ``catch``, the ternary ``?`` and each ``&&``/``||``.
* nested block depth: the method body is depth 1; every brace block except
  array initializers adds one. Anonymous-class and lambda bodies count.
* invocations: one per method-invocation expression; ``new`` does not count.
* type references: extends/implements clauses, field types, parameter and
  return types, local-variable declarations, constructor calls, and
  static-access qualifiers. Primitives, ``var``, and type variables never
  produce a reference; annotations are not counted as references.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import Diagnostic
from ..model import FieldDecl, MethodDecl, TypeDecl, TypeRef
from .lexer import (
    IDENT,
    KEYWORD,
    KIND,
    LINE,
    LITERAL_KEYWORDS,
    NUMBER,
    OP,
    PRIMITIVE_TYPES,
    STRING,
    TEXT,
    Token,
    tokenize,
)
from .sloc import LineIndex

MODIFIER_KEYWORDS = frozenset(
    """public private protected static abstract final native synchronized
    transient volatile strictfp default""".split()
)

# Contextual (non-keyword) modifiers introduced by newer Java versions.
CONTEXTUAL_MODIFIERS = frozenset(("sealed",))

# Names that never produce a type reference even when they appear in a
# type position.
NON_REFERENCE_NAMES = frozenset(("var",))

_DECISION_KEYWORDS = frozenset(("if", "for", "while", "do", "case", "catch"))
_EXPRESSION_END_OPS = frozenset((")", "]"))
_ARRAY_INIT_PREV = frozenset(("=", ",", "{", "[", "]"))
_DECL_TRIGGER_PREV = frozenset((";", "{", "}"))
_DECL_PAREN_KEYWORDS = frozenset(("for", "catch", "try"))
_DECL_CONFIRM = frozenset(("=", ";", ":", ",", ")"))


@dataclass(frozen=True)
class ImportDecl:
    name: str  # "a.b.C", or the package "a.b" for wildcard imports
    wildcard: bool = False
    static: bool = False


@dataclass
class CompilationUnit:
    file_path: str
    package_name: str = ""
    imports: list[ImportDecl] = field(default_factory=list)
    declared_types: list[TypeDecl] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)


class _SyntaxError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(message)
        self.line = line
        self.message = message


class _Collector:
    """Accumulates members of one top-level type (nested types fold in)."""

    def __init__(self) -> None:
        self.fields: list[FieldDecl] = []
        self.methods: list[MethodDecl] = []
        self.refs: dict[str, None] = {}  # ordered de-dup of raw type names

    def add_ref(self, raw: str, excluded: frozenset[str]) -> None:
        if not raw or raw in NON_REFERENCE_NAMES or raw in excluded:
            return
        self.refs.setdefault(raw, None)


def _is_type_like(name: str) -> bool:
    # Heuristic for expression positions: type names start uppercase and,
    # unlike SCREAMING_SNAKE constants, contain a lowercase letter (short
    # names like "A" or "IO" pass unconditionally).
    if not name or not name[0].isupper():
        return False
    return len(name) <= 2 or any(c.islower() for c in name)


class _Parser:
    def __init__(self, file_path: str, tokens: list[Token], lines: LineIndex):
        self.path = file_path
        self.toks = tokens
        self.n = len(tokens)
        self.i = 0
        self.lines = lines

    # -- token stream helpers ------------------------------------------------

    def peek(self, ahead: int = 0) -> Token | None:
        j = self.i + ahead
        return self.toks[j] if j < self.n else None

    def at_op(self, text: str, ahead: int = 0) -> bool:
        t = self.peek(ahead)
        return t is not None and t[KIND] == OP and t[TEXT] == text

    def at_kw(self, text: str, ahead: int = 0) -> bool:
        t = self.peek(ahead)
        return t is not None and t[KIND] == KEYWORD and t[TEXT] == text

    def at_ident(self, ahead: int = 0) -> bool:
        t = self.peek(ahead)
        return t is not None and t[KIND] == IDENT

    def line(self) -> int:
        t = self.peek()
        return t[LINE] if t is not None else (self.toks[-1][LINE] if self.toks else 1)

    def fail(self, message: str) -> None:
        raise _SyntaxError(self.line(), message)

    def expect_op(self, text: str) -> Token:
        if not self.at_op(text):
            self.fail(f"expected {text!r}")
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_ident(self, what: str) -> str:
        if not self.at_ident():
            self.fail(f"expected {what}")
        name = self.toks[self.i][TEXT]
        self.i += 1
        return name

    def dotted_name(self) -> str:
        parts = [self.expect_ident("name")]
        while self.at_op(".") and self.at_ident(1):
            self.i += 1
            parts.append(self.toks[self.i][TEXT])
            self.i += 1
        return ".".join(parts)

    def skip_annotation(self) -> None:
        # at '@': @Name(.Name)* with optional balanced argument list
        self.i += 1
        if self.at_kw("interface"):  # caller deals with @interface declarations
            self.i -= 1
            return
        if not self.at_ident():
            self.fail("expected annotation name")
        self.dotted_name()
        if self.at_op("("):
            self.skip_balanced("(", ")")

    def skip_balanced(self, open_text: str, close_text: str) -> None:
        depth = 0
        while self.i < self.n:
            t = self.toks[self.i]
            self.i += 1
            if t[KIND] == OP:
                if t[TEXT] == open_text:
                    depth += 1
                elif t[TEXT] == close_text:
                    depth -= 1
                    if depth == 0:
                        return
        self.fail(f"unbalanced {open_text!r}")

    # -- generics ------------------------------------------------------------

    def parse_type_params(self) -> list[str]:
        """At '<' of a declaration: return declared parameter names, skip bounds."""
        names: list[str] = []
        depth = 0
        expecting_name = False
        while self.i < self.n:
            t = self.toks[self.i]
            self.i += 1
            if t[KIND] == OP:
                text = t[TEXT]
                if text == "<":
                    depth += 1
                    expecting_name = depth == 1
                    continue
                if text in (">", ">=",):
                    depth -= 1
                elif text == ">>":
                    depth -= 2
                elif text == ">>>":
                    depth -= 3
                elif text == "," and depth == 1:
                    expecting_name = True
                    continue
                if depth <= 0:
                    return names
            elif t[KIND] == IDENT and expecting_name and depth == 1:
                names.append(t[TEXT])
                expecting_name = False
        self.fail("unterminated type parameter list")
        return names

    def skip_generic_args(self, collector: _Collector, excluded: frozenset[str]) -> None:
        """At '<' of a type use: consume the argument section, collecting the
        type names written inside it as references."""
        depth = 0
        while self.i < self.n:
            t = self.toks[self.i]
            if t[KIND] == OP:
                text = t[TEXT]
                self.i += 1
                if text == "<":
                    depth += 1
                elif text in (">", ">="):
                    depth -= 1
                elif text == ">>":
                    depth -= 2
                elif text == ">>>":
                    depth -= 3
                if depth <= 0:
                    return
            elif t[KIND] == IDENT:
                prev = self.toks[self.i - 1]
                if prev[KIND] == OP and prev[TEXT] == ".":
                    self.i += 1
                    continue
                collector.add_ref(self.dotted_name(), excluded)
            else:
                self.i += 1
        self.fail("unterminated type argument list")

    def parse_type_use(
        self, collector: _Collector, excluded: frozenset[str], collect: bool = True
    ) -> str | None:
        """Parse a type written in a declaration position; return its raw name.

        Primitives, ``void`` and ``var`` return their text but are never
        recorded as references.
        """
        t = self.peek()
        if t is None:
            self.fail("expected type")
        if t[KIND] == KEYWORD and t[TEXT] in PRIMITIVE_TYPES:
            self.i += 1
            raw = t[TEXT]
        elif t[KIND] == IDENT:
            raw = self.dotted_name()
            if self.at_op("<"):
                self.skip_generic_args(collector, excluded)
            if collect:
                collector.add_ref(raw, excluded)
        else:
            self.fail("expected type")
            return None
        while self.at_op("[") :
            self.i += 1
            self.expect_op("]")
        return raw

    # -- compilation unit ----------------------------------------------------

    def parse_unit(self) -> tuple[str, list[ImportDecl], list[TypeDecl]]:
        package = ""
        imports: list[ImportDecl] = []
        types: list[TypeDecl] = []
        while self.at_op("@"):
            mark = self.i
            self.skip_annotation()
            if self.i == mark:
                break
        if self.at_kw("package"):
            self.i += 1
            package = self.dotted_name()
            self.expect_op(";")
        while self.at_kw("import"):
            self.i += 1
            is_static = False
            if self.at_kw("static"):
                is_static = True
                self.i += 1
            name = self.dotted_name()
            wildcard = False
            if self.at_op(".") and self.at_op("*", 1):
                wildcard = True
                self.i += 2
            self.expect_op(";")
            imports.append(ImportDecl(name, wildcard, is_static))
        while self.i < self.n:
            if self.at_op(";"):
                self.i += 1
                continue
            decl = self.parse_type_decl(top_level=True)
            if decl is not None:
                types.append(decl)
        return package, imports, types

    # -- type declarations ---------------------------------------------------

    def _parse_modifiers(self) -> tuple[set[str], int | None]:
        """Consume modifiers and annotations; return (modifiers, start line).

        The start line is the line of the first non-annotation token, i.e.
        where the declaration's signature span begins.
        """
        modifiers: set[str] = set()
        start_line: int | None = None
        while True:
            t = self.peek()
            if t is None:
                return modifiers, start_line
            if t[KIND] == OP and t[TEXT] == "@" and not self.at_kw("interface", 1):
                self.skip_annotation()
                continue
            if t[KIND] == KEYWORD and t[TEXT] in MODIFIER_KEYWORDS:
                modifiers.add(t[TEXT])
                if start_line is None:
                    start_line = t[LINE]
                self.i += 1
                continue
            if t[KIND] == IDENT and t[TEXT] in CONTEXTUAL_MODIFIERS:
                modifiers.add(t[TEXT])
                if start_line is None:
                    start_line = t[LINE]
                self.i += 1
                continue
            if (
                t[KIND] == IDENT
                and t[TEXT] == "non"
                and self.at_op("-", 1)
                and self.peek(2) is not None
                and self.peek(2)[TEXT] == "sealed"
            ):
                modifiers.add("non-sealed")
                if start_line is None:
                    start_line = t[LINE]
                self.i += 3
                continue
            return modifiers, start_line

    def _peek_type_kind(self) -> str | None:
        t = self.peek()
        if t is None:
            return None
        if t[KIND] == KEYWORD and t[TEXT] in ("class", "interface", "enum"):
            return t[TEXT]
        if t[KIND] == OP and t[TEXT] == "@" and self.at_kw("interface", 1):
            return "annotation"
        if (
            t[KIND] == IDENT
            and t[TEXT] == "record"
            and self.at_ident(1)
            and (self.at_op("(", 2) or self.at_op("<", 2))
        ):
            return "record"
        return None

    def parse_type_decl(
        self,
        top_level: bool,
        collector: _Collector | None = None,
        excluded: frozenset[str] = frozenset(),
    ) -> TypeDecl | None:
        modifiers, start_line = self._parse_modifiers()
        kind = self._peek_type_kind()
        if kind is None:
            self.fail("expected type declaration")
        if start_line is None:
            start_line = self.line()
        self.i += 2 if kind == "annotation" else 1
        name = self.expect_ident("type name")

        nested = collector is not None
        coll = collector if collector is not None else _Collector()
        type_params: list[str] = []
        if self.at_op("<"):
            type_params = self.parse_type_params()
        scope = frozenset(excluded | set(type_params))

        if kind == "record" and self.at_op("("):
            self._parse_record_header(coll, scope)
        while True:
            if self.at_kw("extends") or self.at_kw("implements"):
                self.i += 1
                self._parse_type_list(coll, scope, collect=True)
            elif self.at_ident() and self.peek()[TEXT] == "permits":
                self.i += 1
                self._parse_type_list(coll, scope, collect=False)
            else:
                break

        end_line = self._parse_type_body(kind, name, coll, scope)

        if nested:
            return None
        is_abstract = "abstract" in modifiers or kind == "interface"
        decl = TypeDecl(
            name=name,
            kind=kind,
            is_abstract=is_abstract,
            fields_decl=coll.fields,
            methods=coll.methods,
            referenced_types=[TypeRef(raw) for raw in coll.refs],
            source_lines=max(1, self.lines.count_span(start_line, end_line)),
            origin=self.path,
        )
        return decl

    def _parse_type_list(
        self, coll: _Collector, excluded: frozenset[str], collect: bool
    ) -> None:
        while True:
            self.parse_type_use(coll, excluded, collect=collect)
            if self.at_op(","):
                self.i += 1
                continue
            return

    def _parse_record_header(self, coll: _Collector, excluded: frozenset[str]) -> None:
        # Record components behave like final instance fields.
        self.expect_op("(")
        while not self.at_op(")"):
            while self.at_op("@"):
                self.skip_annotation()
            raw = self.parse_type_use(coll, excluded)
            while self.at_op("."):
                self.i += 1  # varargs dots
            comp = self.expect_ident("record component name")
            coll.fields.append(FieldDecl(comp, TypeRef(raw or "")))
            if self.at_op(","):
                self.i += 1
        self.expect_op(")")

    def _parse_type_body(
        self, kind: str, type_name: str, coll: _Collector, excluded: frozenset[str]
    ) -> int:
        """Parse '{ members }'; return the line of the closing brace."""
        self.expect_op("{")
        if kind == "enum":
            self._parse_enum_constants(coll, excluded)
        while self.i < self.n:
            if self.at_op("}"):
                end = self.toks[self.i][LINE]
                self.i += 1
                return end
            self._parse_member(kind, type_name, coll, excluded)
        self.fail("unterminated type body")
        return 0

    def _parse_enum_constants(self, coll: _Collector, excluded: frozenset[str]) -> None:
        while self.i < self.n:
            while self.at_op("@"):
                self.skip_annotation()
            if self.at_op(";"):
                self.i += 1
                return
            if self.at_op("}"):
                return
            self.expect_ident("enum constant")
            if self.at_op("("):
                self._scan_statements(coll, excluded, mode="parens")
            if self.at_op("{"):
                # Constant class body: members fold into the enum type.
                self._parse_constant_body(coll, excluded)
            if self.at_op(","):
                self.i += 1
                continue

    def _parse_constant_body(self, coll: _Collector, excluded: frozenset[str]) -> None:
        self.expect_op("{")
        while self.i < self.n:
            if self.at_op("}"):
                self.i += 1
                return
            self._parse_member("class", "", coll, excluded)
        self.fail("unterminated enum constant body")

    # -- members ---------------------------------------------------------

    def _parse_member(
        self, kind: str, type_name: str, coll: _Collector, excluded: frozenset[str]
    ) -> None:
        if self.at_op(";"):
            self.i += 1
            return
        modifiers, start_line = self._parse_modifiers()

        nested_kind = self._peek_type_kind()
        if nested_kind is not None:
            self.parse_type_decl(top_level=False, collector=coll, excluded=excluded)
            return

        if self.at_op("{"):  # instance or static initializer block
            self._scan_statements(coll, excluded, mode="block")
            return

        if start_line is None:
            start_line = self.line()

        method_params: list[str] = []
        if self.at_op("<"):
            method_params = self.parse_type_params()
        scope = frozenset(excluded | set(method_params)) if method_params else excluded

        # Constructor: bare name directly followed by '(' (or a record's
        # compact constructor: name directly followed by '{').
        if self.at_ident() and self.at_op("(", 1):
            name = self.expect_ident("constructor name")
            self._parse_method(
                name, modifiers, kind, start_line, coll, scope, is_constructor=True
            )
            return
        if kind == "record" and self.at_ident() and self.at_op("{", 1):
            # Compact canonical constructor: name directly followed by a body.
            name = self.expect_ident("constructor name")
            dp, nbd, calls, end_line = self._scan_statements(coll, scope, mode="block")
            self.coll_add_method(
                coll, name, f"{name}()", modifiers, kind,
                "public" in modifiers, 0, start_line, end_line,
                dp, nbd, calls, True,
            )
            coll.methods[-1].is_constructor = True
            return

        raw_type = self.parse_type_use(coll, scope)
        name = self.expect_ident("member name")
        if self.at_op("("):
            self._parse_method(
                name, modifiers, kind, start_line, coll, scope, is_constructor=False
            )
            return
        self._parse_field_declarators(raw_type, name, coll, scope)

    def _parse_field_declarators(
        self, raw_type: str | None, first_name: str, coll: _Collector, excluded: frozenset[str]
    ) -> None:
        declared = TypeRef(raw_type or "")
        name = first_name
        while True:
            while self.at_op("["):
                self.i += 1
                self.expect_op("]")
            coll.fields.append(FieldDecl(name, declared))
            if self.at_op("="):
                self.i += 1
                self._scan_statements(coll, excluded, mode="initializer")
            if self.at_op(","):
                self.i += 1
                name = self.expect_ident("field name")
                continue
            self.expect_op(";")
            return

    def _signature_text(self, name: str, param_tokens: list[Token]) -> str:
        parts: list[str] = []
        prev: Token | None = None
        for t in param_tokens:
            wordlike = t[KIND] in (IDENT, KEYWORD, NUMBER)
            if parts and (
                (wordlike and prev is not None and (prev[KIND] in (IDENT, KEYWORD, NUMBER) or prev[TEXT] in (")", "]", ">")))
                or (prev is not None and prev[TEXT] == ",")
            ):
                parts.append(" ")
            parts.append(t[TEXT])
            prev = t
        return f"{name}({''.join(parts)})"

    def _parse_method(
        self,
        name: str,
        modifiers: set[str],
        kind: str,
        start_line: int,
        coll: _Collector,
        excluded: frozenset[str],
        is_constructor: bool,
    ) -> None:
        param_start = self.i + 1
        params = self._parse_params(coll, excluded)
        param_tokens = self.toks[param_start : self.i - 1]
        signature = self._signature_text(name, param_tokens)

        while self.at_op("["):  # archaic array-dims-after-params syntax
            self.i += 1
            self.expect_op("]")
        if self.at_kw("throws"):
            self.i += 1
            while True:
                self.dotted_name()
                if self.at_op("<"):
                    self.skip_generic_args(_Collector(), excluded)
                if self.at_op(","):
                    self.i += 1
                    continue
                break
        if self.at_kw("default"):  # annotation member default value
            self.i += 1
            self._scan_statements(coll, excluded, mode="initializer")

        is_public = "public" in modifiers or (
            kind in ("interface", "annotation")
            and not ({"private", "protected"} & modifiers)
        )

        if self.at_op("{"):
            dp, nbd, calls, end_line = self._scan_statements(coll, excluded, mode="block")
            self.coll_add_method(
                coll, name, signature, modifiers, kind, is_public, params,
                start_line, end_line, dp, nbd, calls, True,
            )
        else:
            end_line = self.line()
            if not self.at_op(";"):
                self.fail("expected method body or ';'")
            self.i += 1
            self.coll_add_method(
                coll, name, signature, modifiers, kind, is_public, params,
                start_line, end_line, 0, 0, 0, False,
            )
        if is_constructor:
            coll.methods[-1].is_constructor = True

    def coll_add_method(
        self,
        coll: _Collector,
        name: str,
        signature: str,
        modifiers: set[str],
        kind: str,
        is_public: bool,
        params: int,
        start_line: int,
        end_line: int,
        dp: int,
        nbd: int,
        calls: int,
        has_body: bool,
    ) -> None:
        coll.methods.append(
            MethodDecl(
                name=name,
                is_public=is_public,
                is_constructor=False,
                params=params,
                body_lines=max(1, self.lines.count_span(start_line, end_line)),
                decision_points=dp,
                max_block_depth=nbd if has_body else 0,
                invocation_count=calls,
                signature=signature,
                has_body=has_body,
            )
        )

    def _parse_params(self, coll: _Collector, excluded: frozenset[str]) -> int:
        self.expect_op("(")
        count = 0
        while not self.at_op(")"):
            while self.at_op("@"):
                self.skip_annotation()
            if self.at_kw("final"):
                self.i += 1
                continue
            self.parse_type_use(coll, excluded)
            while self.at_op("."):
                self.i += 1  # varargs '...'
            if self.at_kw("this"):  # receiver parameter
                self.i += 1
            else:
                self.expect_ident("parameter name")
            while self.at_op("["):
                self.i += 1
                self.expect_op("]")
            count += 1
            if self.at_op(","):
                self.i += 1
        self.expect_op(")")
        return count

    # -- statement/expression scanning ------------------------------------

    def _scan_statements(
        self, coll: _Collector, excluded: frozenset[str], mode: str
    ) -> tuple[int, int, int, int]:
        """Scan a statement region, collecting counts and type references.

        mode "block": positioned at '{'; consumes through the matching '}'.
        mode "parens": positioned at '('; consumes through the matching ')'.
        mode "initializer": consumes an expression up to a ',' or ';' at
        depth 0 (the terminator is not consumed).

        Returns (decision_points, max_block_depth, invocations, end_line).
        """
        toks = self.toks
        dp = 0
        calls = 0
        block_depth = 0
        max_block = 0
        brace_stack: list[bool] = []
        paren_depth = 0
        bracket_depth = 0
        pending_dos: list[int] = []  # block depths of 'do' awaiting their 'while'
        prev: Token | None = None
        prev2: Token | None = None
        end_line = self.line()

        if mode == "block":
            prev = self.expect_op("{")
            brace_stack.append(True)
            block_depth = 1
            max_block = 1
        elif mode == "parens":
            prev = self.expect_op("(")
            paren_depth = 1

        while self.i < self.n:
            t = toks[self.i]
            kind_t = t[KIND]
            text = t[TEXT]

            if kind_t == OP:
                if text == "{":
                    is_block = not (
                        prev is not None
                        and prev[KIND] == OP
                        and prev[TEXT] in _ARRAY_INIT_PREV
                    )
                    brace_stack.append(is_block)
                    if is_block:
                        block_depth += 1
                        if block_depth > max_block:
                            max_block = block_depth
                elif text == "}":
                    if not brace_stack:
                        if mode == "initializer":
                            break  # malformed; let the caller's expect fail
                        self.fail("unbalanced '}'")
                    if brace_stack.pop():
                        block_depth -= 1
                    if mode == "block" and not brace_stack:
                        end_line = t[LINE]
                        self.i += 1
                        return dp, max_block, calls, end_line
                elif text == "(":
                    paren_depth += 1
                elif text == ")":
                    paren_depth -= 1
                    if mode == "parens" and paren_depth == 0:
                        self.i += 1
                        return dp, max_block, calls, t[LINE]
                elif text == "[":
                    bracket_depth += 1
                elif text == "]":
                    bracket_depth -= 1
                elif text in ("&&", "||"):
                    dp += 1
                elif text == "?":
                    if prev is not None and (
                        prev[KIND] in (IDENT, NUMBER, STRING)
                        or (prev[KIND] == OP and prev[TEXT] in _EXPRESSION_END_OPS)
                        or (prev[KIND] == KEYWORD and prev[TEXT] in LITERAL_KEYWORDS)
                    ):
                        dp += 1
                elif mode == "initializer" and paren_depth == 0 and bracket_depth == 0 and not brace_stack:
                    if text in (",", ";"):
                        return dp, max_block, calls, t[LINE]
                prev2 = prev
                prev = t
                self.i += 1
                continue

            if kind_t == KEYWORD:
                if text in _DECISION_KEYWORDS:
                    if text == "do":
                        pending_dos.append(block_depth)
                        dp += 1
                    elif text == "while" and pending_dos and pending_dos[-1] == block_depth:
                        pending_dos.pop()  # the closing 'while' of a do-loop
                    else:
                        dp += 1
                elif text == "new":
                    prev2 = prev
                    prev = t
                    self.i += 1
                    self._scan_new_expression(coll, excluded)
                    continue
                prev2 = prev
                prev = t
                self.i += 1
                continue

            if kind_t == IDENT:
                last, call_inc = self._scan_ident(coll, excluded, prev, prev2)
                calls += call_inc
                prev2 = prev
                prev = last
                continue

            prev2 = prev
            prev = t
            self.i += 1

        if mode == "initializer":
            return dp, max_block, calls, end_line
        self.fail("unexpected end of file in body")
        return dp, max_block, calls, end_line

    def _scan_new_expression(self, coll: _Collector, excluded: frozenset[str]) -> None:
        """After a 'new' keyword: record the constructed type."""
        t = self.peek()
        if t is None:
            return
        if t[KIND] == KEYWORD:  # primitive array creation
            self.i += 1
            return
        if t[KIND] != IDENT:
            return
        raw = self.dotted_name()
        coll.add_ref(raw, excluded)
        if self.at_op("<"):
            self.skip_generic_args(coll, excluded)

    def _scan_ident(
        self,
        coll: _Collector,
        excluded: frozenset[str],
        prev: Token | None,
        prev2: Token | None,
    ) -> tuple[Token, int]:
        """Handle an identifier inside a statement region.

        Counts invocations (identifier directly followed by '('), records
        local-variable declaration types and static-access qualifiers.
        Returns the last token consumed and the invocation increment.
        """
        toks = self.toks
        tok = toks[self.i]
        prev_text = prev[TEXT] if prev is not None else None
        prev_kind = prev[KIND] if prev is not None else None

        nxt = self.peek(1)
        if nxt is not None and nxt[KIND] == OP and nxt[TEXT] == "(":
            # A method declaration (inside an anonymous/local class) has a
            # type or annotation directly before the name; an invocation
            # never does.
            decl_like = (
                prev_kind == IDENT
                or (prev_kind == KEYWORD and (prev_text in PRIMITIVE_TYPES or prev_text == "case"))
                or (prev_kind == OP and prev_text == "@")
            )
            self.i += 1
            return tok, 0 if decl_like else 1

        if prev_kind == OP and prev_text in (".", "@"):
            self.i += 1
            return tok, 0

        # Read the whole dotted chain; stop before a segment that is a call.
        chain = [tok[TEXT]]
        self.i += 1
        while self.at_op(".") and self.at_ident(1) and not self.at_op("(", 2):
            self.i += 1
            chain.append(toks[self.i][TEXT])
            self.i += 1
        member_follows = self.at_op(".") and self.at_ident(1)

        # Possible local declaration: TYPE name followed by = ; : , or )
        triggered = (prev_kind == OP and prev_text in _DECL_TRIGGER_PREV) or (
            prev_kind == OP
            and prev_text == "("
            and prev2 is not None
            and prev2[KIND] == KEYWORD
            and prev2[TEXT] in _DECL_PAREN_KEYWORDS
        )
        if (
            triggered
            and not member_follows
            and self._try_declaration(coll, excluded, chain)
        ):
            return toks[self.i - 1], 0

        self._add_qualifier_ref(coll, excluded, chain, member_follows)
        return toks[self.i - 1], 0

    def _try_declaration(
        self, coll: _Collector, excluded: frozenset[str], chain: list[str]
    ) -> bool:
        """After reading a chain at a declaration position, try to confirm
        ``Type name`` (with optional generics/arrays/union types). Commits
        references and consumes through the declared name on success."""
        mark = self.i
        pending = _Collector()
        if self.at_op("<"):
            if not self._try_generic_skip(pending, excluded):
                self.i = mark
                return False
        while self.at_op("[") and self.at_op("]", 1):
            self.i += 2
        union_chains: list[str] = []
        while self.at_op("|"):  # multi-catch union type
            self.i += 1
            if not self.at_ident():
                self.i = mark
                return False
            union_chains.append(self.dotted_name())
        if not self.at_ident():
            self.i = mark
            return False
        name_tok = self.peek(1)
        if name_tok is None or name_tok[KIND] != OP or name_tok[TEXT] not in _DECL_CONFIRM:
            self.i = mark
            return False
        # Confirmed declaration.
        coll.add_ref(".".join(chain), excluded)
        for raw in union_chains:
            coll.add_ref(raw, excluded)
        for raw in pending.refs:
            coll.add_ref(raw, excluded)
        self.i += 1  # consume declared name
        return True

    def _try_generic_skip(self, pending: _Collector, excluded: frozenset[str]) -> bool:
        """Attempt to consume a balanced generic section at '<'. On failure
        (it runs into a statement boundary) restore the position."""
        mark = self.i
        depth = 0
        budget = 400
        while self.i < self.n and budget:
            budget -= 1
            t = self.toks[self.i]
            if t[KIND] == OP:
                text = t[TEXT]
                if text == "<":
                    depth += 1
                elif text in (">", ">="):
                    depth -= 1
                elif text == ">>":
                    depth -= 2
                elif text == ">>>":
                    depth -= 3
                elif text in (";", "{", "}", ")"):
                    break
                self.i += 1
                if depth <= 0:
                    return True
                continue
            if t[KIND] == IDENT:
                prev = self.toks[self.i - 1]
                if not (prev[KIND] == OP and prev[TEXT] == "."):
                    pending.add_ref(self.dotted_name(), excluded)
                    continue
            self.i += 1
        self.i = mark
        return False

    def _add_qualifier_ref(
        self,
        coll: _Collector,
        excluded: frozenset[str],
        chain: list[str],
        member_follows: bool,
    ) -> None:
        """``A.member`` or ``pkg.path.Type.member``: record the qualifier type.

        When ``member_follows`` the whole chain is the qualifier (the member
        was a call and stayed outside the chain); otherwise the last segment
        is the accessed member and only the prefix can name a type.
        """
        limit = len(chain) if member_follows else len(chain) - 1
        if limit <= 0:
            return
        if _is_type_like(chain[0]):
            coll.add_ref(chain[0], excluded)
            return
        for idx in range(1, limit):
            if _is_type_like(chain[idx]):
                coll.add_ref(".".join(chain[: idx + 1]), excluded)
                return


def parse_unit(file_path: str, source_text: str) -> CompilationUnit:
    """Parse one Java source file into a compilation unit.

    A syntax error skips the whole unit: the result carries no types and one
    diagnostic, and project analysis continues with the other files.
    """
    tokens, lex_diags = tokenize(source_text)
    unit = CompilationUnit(file_path)
    unit.diagnostics.extend(Diagnostic(file_path, line, msg) for line, msg in lex_diags)
    parser = _Parser(file_path, tokens, LineIndex(tokens))
    try:
        package, imports, types = parser.parse_unit()
    except _SyntaxError as err:
        return CompilationUnit(
            file_path,
            diagnostics=unit.diagnostics
            + [Diagnostic(file_path, err.line, f"syntax error: {err.message}")],
        )
    unit.package_name = package
    unit.imports = imports
    unit.declared_types = types
    return unit
