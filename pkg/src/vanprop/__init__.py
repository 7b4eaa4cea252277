"""Exact vanishing-element proportions for symmetric, alternating and small finite groups."""
from .partitions import Partition, conjugate, hook_data, r_core, r_cores
from .symchars import alt_table, mn_value, sym_table
from .vanishing import THRESHOLD, candidate_types, pv_alt, pv_sym, verify_symmetric_minimum

__all__ = [
    "Partition", "conjugate", "hook_data", "r_core", "r_cores",
    "alt_table", "mn_value", "sym_table",
    "THRESHOLD", "candidate_types", "pv_alt", "pv_sym", "verify_symmetric_minimum",
]
