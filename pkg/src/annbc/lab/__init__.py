"""Exhaustive theorem checking over finite rings."""

from .core import TheoremReport
from .report import load_reports, markdown_summary, write_reports
from .search import TARGETS, search_counterexamples
from .suite import SuiteConfig, run_checker, run_suite, theorem_ids

__all__ = ["TARGETS", "SuiteConfig", "TheoremReport", "load_reports", "markdown_summary",
           "run_checker", "run_suite", "search_counterexamples", "theorem_ids", "write_reports"]
