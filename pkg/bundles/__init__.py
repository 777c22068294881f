#!/usr/bin/env python3
"""
Bundles Module
--------------
Cálculo exato de polígonos HN: valores canônicos, pareamentos e dominância.
"""

from .errors import (
    BundleError,
    ZeroDenominatorError,
    ZeroBundleError,
    PreconditionError,
    InvariantViolation,
    ParseError,
    OverflowRejected,
    VerifyResourceError,
)

from .hn_core import (
    Slope,
    HNFactor,
    HNVector,
    Bundle,
    ZERO,
    format_slope,
    slope_new,
    bundle_from_factors,
    stable,
    trivial,
    rank,
    degree,
    mu,
    mu_min,
    mu_max,
    hn_vectors,
    is_integral,
    slope_set,
    dual,
    direct_sum,
    tensor,
    twist,
    stretch,
    slice_bundle,
    deg_at_least,
    deg_nonneg,
    slope_on_interval,
    interval_slopes,
    is_semistable,
    vertex_set,
)

from .pairing import (
    PairingValue,
    CohomologyVanishing,
    cross,
    preceq,
    deg_pair,
    deg_pair_nonneg,
    pairing_value,
    hom_is_zero,
    hom_moduli_dim,
    cohomology_vanishing,
    ext1_vanishes_sufficient,
)

from .dominance import (
    CommonFactorDecomposition,
    aligned_segments,
    slopewise_dominates,
    dominates_via_ranks,
    common_factor_decompose,
    equal_rank_duality_holds,
)

__all__ = [
    # Errors
    'BundleError',
    'ZeroDenominatorError',
    'ZeroBundleError',
    'PreconditionError',
    'InvariantViolation',
    'ParseError',
    'OverflowRejected',
    'VerifyResourceError',

    # Core values
    'Slope',
    'HNFactor',
    'HNVector',
    'Bundle',
    'ZERO',
    'format_slope',
    'slope_new',
    'bundle_from_factors',
    'stable',
    'trivial',

    # Single-bundle operations
    'rank',
    'degree',
    'mu',
    'mu_min',
    'mu_max',
    'hn_vectors',
    'is_integral',
    'slope_set',
    'dual',
    'direct_sum',
    'tensor',
    'twist',
    'stretch',
    'slice_bundle',
    'deg_at_least',
    'deg_nonneg',
    'slope_on_interval',
    'interval_slopes',
    'is_semistable',
    'vertex_set',

    # Pairings
    'PairingValue',
    'CohomologyVanishing',
    'cross',
    'preceq',
    'deg_pair',
    'deg_pair_nonneg',
    'pairing_value',
    'hom_is_zero',
    'hom_moduli_dim',
    'cohomology_vanishing',
    'ext1_vanishes_sufficient',

    # Dominance
    'CommonFactorDecomposition',
    'aligned_segments',
    'slopewise_dominates',
    'dominates_via_ranks',
    'common_factor_decompose',
    'equal_rank_duality_holds',
]
