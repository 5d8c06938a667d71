"""Exact induced matching toolkit (C++ core)."""

from ._core import (
    Error,
    Graph,
    ParseError,
    TooLarge,
    audit,
    brute_ds,
    brute_im,
    brute_is,
    brute_mm,
    brute_vc,
    classify_tight,
    decompose,
    fixture,
    gen_random,
    generate,
    is_factor_critical,
    konig_cover,
    load_instance,
    matching_number,
    maximum_matching,
    parameters,
    read_instance,
    recognize_cameron_walker,
    reduce,
    reduce_dominating_set,
    reduce_multicolored_is,
    solve,
    solve_simple,
    verify_induced_matching,
    write_instance,
)

__all__ = [
    "Error",
    "Graph",
    "ParseError",
    "TooLarge",
    "audit",
    "brute_ds",
    "brute_im",
    "brute_is",
    "brute_mm",
    "brute_vc",
    "classify_tight",
    "decompose",
    "fixture",
    "gen_random",
    "generate",
    "is_factor_critical",
    "konig_cover",
    "load_instance",
    "matching_number",
    "maximum_matching",
    "parameters",
    "read_instance",
    "recognize_cameron_walker",
    "reduce",
    "reduce_dominating_set",
    "reduce_multicolored_is",
    "solve",
    "solve_simple",
    "verify_induced_matching",
    "write_instance",
]
