"""Exact hook statistics of self-conjugate partitions.

Thin wrapper over the C++ extension: partitions and their hooks, the
Littlewood t-core/t-quotient decomposition, truncated q-series closed forms,
and the identity-verification suite.
"""

from ._hooklab import (
    LittlewoodImage,
    Partition,
    ScSplit,
    ScType,
    a_star_formula,
    a_star_oracle,
    a_star_series,
    a_star_table,
    compose,
    count_distinct_odd,
    count_self_conjugate,
    decode,
    decompose,
    encode,
    gen1_series,
    h_star_series,
    han_series,
    is_t_core,
    partitions,
    sc_core_series,
    sc_hook_series,
    sc_reassemble,
    sc_series,
    sc_split,
    self_conjugate_partitions,
    t_core,
    verify,
    verify_sc_properties,
)

__version__ = "0.1.0"

__all__ = [
    "LittlewoodImage",
    "Partition",
    "ScSplit",
    "ScType",
    "a_star_formula",
    "a_star_oracle",
    "a_star_series",
    "a_star_table",
    "compose",
    "count_distinct_odd",
    "count_self_conjugate",
    "decode",
    "decompose",
    "encode",
    "gen1_series",
    "h_star_series",
    "han_series",
    "is_t_core",
    "partitions",
    "sc_core_series",
    "sc_hook_series",
    "sc_reassemble",
    "sc_series",
    "sc_split",
    "self_conjugate_partitions",
    "t_core",
    "verify",
    "verify_sc_properties",
]
