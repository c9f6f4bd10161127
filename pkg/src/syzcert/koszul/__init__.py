"""Koszul-cohomology engine for monomially presented graded rings."""

from .complex import (
    BettiStrip,
    BudgetExceeded,
    Field,
    KoszulCell,
    NpStatus,
    NpVerdict,
    Soundness,
    betti_strip,
    differential_virtual_size,
    euler_characteristic,
    koszul_cell,
    koszul_differential,
    koszul_dim,
    koszul_value,
    parse_field,
    property_np,
)
from .linalg import BACKEND, rank_exact, rank_fp, rank_fp_multi, random_primes
from .rings import (
    GradedRingPresentation,
    load_ring,
    parse_ring_spec,
    parse_ring_text,
    scroll_ring,
    veronese_ring,
)

__all__ = [
    "BACKEND",
    "BettiStrip",
    "BudgetExceeded",
    "Field",
    "GradedRingPresentation",
    "KoszulCell",
    "NpStatus",
    "NpVerdict",
    "Soundness",
    "betti_strip",
    "differential_virtual_size",
    "euler_characteristic",
    "koszul_cell",
    "koszul_differential",
    "koszul_dim",
    "koszul_value",
    "load_ring",
    "parse_field",
    "parse_ring_spec",
    "parse_ring_text",
    "property_np",
    "random_primes",
    "rank_exact",
    "rank_fp",
    "rank_fp_multi",
    "scroll_ring",
    "veronese_ring",
]
