"""Finite-group admissibility computations backed by the C++ library."""

from ._core import (
    BudgetExceeded,
    Group,
    PreconditionFailed,
    brauer_image,
    brauer_index,
    brauer_max_order,
    brauer_restrict,
    count_epimorphisms,
    diagram,
    group,
    liedahl,
    local_realizable,
    max_p_extension_presentation,
    preadmissible,
    quotient_test,
    sensitive_census,
    transfer_verdict,
    wildness,
)

__all__ = [
    "BudgetExceeded",
    "Group",
    "PreconditionFailed",
    "brauer_image",
    "brauer_index",
    "brauer_max_order",
    "brauer_restrict",
    "count_epimorphisms",
    "diagram",
    "group",
    "liedahl",
    "local_realizable",
    "max_p_extension_presentation",
    "preadmissible",
    "quotient_test",
    "sensitive_census",
    "transfer_verdict",
    "wildness",
]
