from betti_bounds.decomposition.greedy import es_decompose
from betti_bounds.decomposition.symmetric import (
    decompose_self_dual,
    symmetrize,
    synthesize,
)
from betti_bounds.decomposition.verification import CHECK_NAMES, verify_decomposition

__all__ = [
    "CHECK_NAMES",
    "decompose_self_dual",
    "es_decompose",
    "symmetrize",
    "synthesize",
    "verify_decomposition",
]
