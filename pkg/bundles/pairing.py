#!/usr/bin/env python3
"""
Pairing
-------
Pareamentos de grau entre dois fibrados via produto vetorial dos vetores HN,
predicados de anulamento de Hom/H⁰/H¹ e a dimensão do espaço de morfismos.
"""

import logging
from fractions import Fraction
from typing import NamedTuple

from .errors import PreconditionError, ZeroBundleError
from .hn_core import Bundle, HNVector, SlopeLike, mu_max, mu_min

logger = logging.getLogger(__name__)


class PairingValue(NamedTuple):
    """deg(V^∨⊗W) e sua parte de inclinação não negativa."""

    total_degree: int
    nonneg_degree: int


class CohomologyVanishing(NamedTuple):
    h0_is_zero: bool
    h1_is_zero: bool


def cross(v: HNVector, w: HNVector) -> int:
    """v × w = v_x·w_y − v_y·w_x."""
    return v.x * w.y - v.y * w.x


def preceq(v: HNVector, w: HNVector) -> bool:
    """
    v ⪯ w, ou seja μ(v) ≤ μ(w), comparado sem divisão.

    Raises:
        PreconditionError: Se algum vetor tiver componente x não positiva
    """
    if v.x <= 0 or w.x <= 0:
        raise PreconditionError(f"preceq needs positive x-components, got {v}, {w}")
    return v.y * w.x <= w.y * v.x


def deg_pair(v_bundle: Bundle, w_bundle: Bundle) -> int:
    """deg(V^∨ ⊗ W) = Σ_{i,j} v_i × w_j."""
    return sum(
        cross(v, w) for v in v_bundle.hn_vectors for w in w_bundle.hn_vectors
    )


def deg_pair_nonneg(v_bundle: Bundle, w_bundle: Bundle) -> int:
    """deg(V^∨ ⊗ W)^{≥0} = Σ_{v_i ⪯ w_j} v_i × w_j; cada termo é ≥ 0."""
    return sum(
        cross(v, w)
        for v in v_bundle.hn_vectors
        for w in w_bundle.hn_vectors
        if preceq(v, w)
    )


def pairing_value(v_bundle: Bundle, w_bundle: Bundle) -> PairingValue:
    return PairingValue(deg_pair(v_bundle, w_bundle), deg_pair_nonneg(v_bundle, w_bundle))


def hom_is_zero(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    """
    Hom(V, W) = 0 garantido quando μ_min(V) > μ_max(W).

    Com um dos lados nulo o Hom é vazio e o resultado é True.
    """
    if v_bundle.is_zero or w_bundle.is_zero:
        return True
    return mu_min(v_bundle) > mu_max(w_bundle)


def hom_moduli_dim(v_bundle: Bundle, w_bundle: Bundle) -> int:
    """Dimensão do espaço de morfismos V → W."""
    return deg_pair_nonneg(v_bundle, w_bundle)


def cohomology_vanishing(slope: SlopeLike) -> CohomologyVanishing:
    """
    Anulamento de H⁰ e H¹ para O(λ).

    h1_is_zero = False para λ < 0 significa apenas "não garantido".
    """
    slope = Fraction(slope)
    return CohomologyVanishing(h0_is_zero=slope < 0, h1_is_zero=slope >= 0)


def ext1_vanishes_sufficient(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    """
    Critério suficiente para Ext¹(V, W) = 0: todas as inclinações de V^∨⊗W ≥ 0.

    Raises:
        ZeroBundleError: Se V ou W for nulo
    """
    if v_bundle.is_zero or w_bundle.is_zero:
        raise ZeroBundleError("ext1 criterion needs nonzero bundles")
    return mu_min(w_bundle) >= mu_max(v_bundle)
