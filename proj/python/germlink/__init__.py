"""Exact invariants of the real germs conj(xy)(x^p + y^q) + z^r."""

from _germlink import (
    GermlinkError,
    analyze,
    analyze_markdown,
    chi_milnor,
    ncf,
    plumbing_dot,
    seifert_invariants,
)

__all__ = [
    "GermlinkError",
    "analyze",
    "analyze_markdown",
    "chi_milnor",
    "ncf",
    "plumbing_dot",
    "seifert_invariants",
]
