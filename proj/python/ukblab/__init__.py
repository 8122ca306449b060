"""Finite-dimensional C*-algebras as uniform Kahler bundles."""

from ._ukblab import (
    KAPPA,
    CROSS_FIBER_DISTANCE,
    Algebra,
    Block,
    HereditaryContext,
    State,
    UkbError,
    catalog,
    classify_state,
    cstar_norm,
    distance_to_xi_image,
    enumerate_ideals,
    gelfand_transform,
    generate_algebra,
    gns_dim,
    hereditary_context,
    is_pure_via_gns,
    kahler_distance,
    kahler_distance_rays,
    make_state,
    random_pure_state,
    restriction_iso_ideal,
    restriction_iso_quotient,
    star_product,
    state_from_ray,
    subbundle_check,
    theta,
    theta_preimage,
    verify_algebra,
    xi_extend,
)

__all__ = [
    "KAPPA",
    "CROSS_FIBER_DISTANCE",
    "Algebra",
    "Block",
    "HereditaryContext",
    "State",
    "UkbError",
    "catalog",
    "classify_state",
    "cstar_norm",
    "distance_to_xi_image",
    "enumerate_ideals",
    "gelfand_transform",
    "generate_algebra",
    "gns_dim",
    "hereditary_context",
    "is_pure_via_gns",
    "kahler_distance",
    "kahler_distance_rays",
    "make_state",
    "random_pure_state",
    "restriction_iso_ideal",
    "restriction_iso_quotient",
    "star_product",
    "state_from_ray",
    "subbundle_check",
    "theta",
    "theta_preimage",
    "verify_algebra",
    "xi_extend",
]
