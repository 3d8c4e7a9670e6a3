from betti_bounds.core.multiplicity import (
    first_nonvanishing_functional,
    multiplicity,
    ps_functional,
    ps_functionals,
)
from betti_bounds.core.pure import (
    dual_sequence,
    dual_table,
    is_self_dual,
    pure_table,
    pure_value,
    symmetrized_pure_table,
)
from betti_bounds.core.tables import (
    combine_tables,
    is_quasi_pure,
    shifts,
    validate_table,
)

__all__ = [
    "combine_tables",
    "dual_sequence",
    "dual_table",
    "first_nonvanishing_functional",
    "is_quasi_pure",
    "is_self_dual",
    "multiplicity",
    "ps_functional",
    "ps_functionals",
    "pure_table",
    "pure_value",
    "shifts",
    "symmetrized_pure_table",
    "validate_table",
]
