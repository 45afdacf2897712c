"""Lightweight source-code metrics for Java projects.

Scans a source tree, computes size/complexity/coupling metrics in seven
contexts, evaluates threshold-based analysis heuristics, and renders
pretty/CSV/JSON reports.
"""

__version__ = "0.1.0"
