"""Exact computations on the Hermitian eigencone ``Gamma_n(s)``."""

from .cone import (
    DEFAULT_BUDGET,
    DomainError,
    FacetDescriptor,
    InequalitySystem,
    enumerate_facets,
    in_F2,
    inequality_system,
    is_member,
    klyachko_value,
    on_facet,
    tight_facets,
    type1_pairs,
    violated_facets,
    wall_tight_set,
)
from .rays import (
    ProductPoint,
    Provenance,
    Ray,
    all_extremal_rays,
    basic_ray,
    basic_rays,
    divisor_class,
    extremal_ray_search,
    induct,
    is_extremal,
    is_F_ray,
    restrict_section,
)
from .schubert import (
    BudgetExceededError,
    InvalidMoveError,
    SchubertIndex,
    codim,
    dual_index,
    intersection_number,
    lower_index,
    lr_multiply,
    partition_of,
    permutation_w,
    pieri_multiply,
    raise_index,
)
from .weights import dual_weight, invariant_dimension, kappa, weight_of_kappa

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGET",
    "DomainError",
    "FacetDescriptor",
    "InequalitySystem",
    "enumerate_facets",
    "in_F2",
    "inequality_system",
    "is_member",
    "klyachko_value",
    "on_facet",
    "tight_facets",
    "type1_pairs",
    "violated_facets",
    "wall_tight_set",
    "ProductPoint",
    "Provenance",
    "Ray",
    "all_extremal_rays",
    "basic_ray",
    "basic_rays",
    "divisor_class",
    "extremal_ray_search",
    "induct",
    "is_extremal",
    "is_F_ray",
    "restrict_section",
    "BudgetExceededError",
    "InvalidMoveError",
    "SchubertIndex",
    "codim",
    "dual_index",
    "intersection_number",
    "lower_index",
    "lr_multiply",
    "partition_of",
    "permutation_w",
    "pieri_multiply",
    "raise_index",
    "dual_weight",
    "invariant_dimension",
    "kappa",
    "weight_of_kappa",
]
