"""Java frontend: turns a tree of ``.java`` files into a SourceModel.

The pipeline is lexical scanning (comment/string aware), structural parsing
of declarations, and a final classpath-free name-resolution pass. Everything
works from source text alone; no compiler, classpath, or bytecode involved.
"""

from .parser import CompilationUnit, ImportDecl, parse_unit
from .project import resolve_references, scan_project
from .sloc import count_sloc

__all__ = [
    "CompilationUnit",
    "ImportDecl",
    "count_sloc",
    "parse_unit",
    "resolve_references",
    "scan_project",
]
