"""Single-pass Java lexer.

One compiled regex drives the whole scan, so large projects tokenize at
C speed. Comments and whitespace are consumed but not emitted; string,
char, and text-block literals come out as single tokens, which is what
makes the SLOC counter and the parser immune to comment markers or braces
hiding inside literals.
"""

from __future__ import annotations

import re

# Token kinds.
IDENT = 0
KEYWORD = 1
NUMBER = 2
STRING = 3
OP = 4

# Token tuple layout: (kind, text, line, end_line). Plain tuples keep the
# per-token overhead low; index via these constants.
KIND = 0
TEXT = 1
LINE = 2
END_LINE = 3

Token = tuple  # (kind, text, line, end_line)

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

PRIMITIVE_TYPES = frozenset(
    "boolean byte char double float int long short void".split()
)

# Literal keywords that can end an expression (relevant to `?:` detection).
LITERAL_KEYWORDS = frozenset(("true", "false", "null", "this"))

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>[ \t\r\f\x0b]+)
    | (?P<nl>\n)
    | (?P<lc>//[^\n]*)
    | (?P<bc>/\*(?:[^*]|\*(?!/))*\*/)
    | (?P<bcopen>/\*.*)
    | (?P<tb>\"\"\"(?:[^"\\]|\\.|"(?!""))*\"\"\")
    | (?P<str>"(?:[^"\\\n]|\\.)*")
    | (?P<strbad>"[^\n]*)
    | (?P<chr>'(?:[^'\\\n]|\\.)*')
    | (?P<chrbad>'[^\n]*)
    | (?P<num>\.?\d(?:[eEpP][+-]|[\w.])*)
    | (?P<id>[A-Za-z_$][A-Za-z0-9_$¡-￿]*)
    | (?P<op>>>>=|>>>|>>=|<<=|->|::|\+\+|--|&&|\|\||<<|>>|[-+*/%&|^!=<>]=|==|\W)
    """,
    re.VERBOSE | re.DOTALL,
)

# Literal token groups all map to STRING: downstream only cares that they
# are expression-valued atoms.
_LITERAL_GROUPS = {"tb", "str", "strbad", "chr", "chrbad"}


def tokenize(text: str) -> tuple[list[Token], list[tuple[int, str]]]:
    """Lex ``text`` into code tokens plus (line, message) diagnostics.

    Comments and blanks are dropped. Every physical line covered by an
    emitted token (multi-line text blocks included) is a code line.
    """
    tokens: list[Token] = []
    diagnostics: list[tuple[int, str]] = []
    line = 1
    append = tokens.append
    for m in _TOKEN_RE.finditer(text):
        group = m.lastgroup
        if group == "nl":
            line += 1
            continue
        if group == "ws":
            continue
        value = m.group()
        newlines = value.count("\n")
        if group == "lc":
            continue
        if group == "bc":
            line += newlines
            continue
        if group == "bcopen":
            diagnostics.append((line, "unterminated block comment"))
            line += newlines
            continue
        end_line = line + newlines
        if group == "id":
            kind = KEYWORD if value in KEYWORDS else IDENT
            append((kind, value, line, end_line))
        elif group == "num":
            append((NUMBER, value, line, end_line))
        elif group in _LITERAL_GROUPS:
            append((STRING, value, line, end_line))
        else:  # op
            append((OP, value, line, end_line))
        line = end_line
    return tokens, diagnostics
