#!/usr/bin/env python3
"""
Slopewise Dominance
-------------------
Dominância por inclinação entre polígonos HN alinhados à esquerda, sua
caracterização por desigualdades de posto, a decomposição em fator comum
maximal e a dualidade no caso de posto igual.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

from .errors import InvariantViolation, PreconditionError
from .hn_core import (
    Bundle,
    HNFactor,
    direct_sum,
    dual,
    mu_max,
    mu_min,
    slice_bundle,
    slope_set,
)

logger = logging.getLogger(__name__)


def aligned_segments(
    v_bundle: Bundle, w_bundle: Bundle
) -> Iterator[Tuple[int, Fraction, Fraction]]:
    """
    Percorre os dois polígonos a partir da origem em blocos comuns.

    Gera (comprimento, inclinação de V, inclinação de W) até o fim do polígono
    mais curto, sem expandir intervalo por intervalo.
    """
    v_factors, w_factors = list(v_bundle.factors), list(w_bundle.factors)
    i = j = 0
    v_left = v_factors[0].rank if v_factors else 0
    w_left = w_factors[0].rank if w_factors else 0
    while i < len(v_factors) and j < len(w_factors):
        step = min(v_left, w_left)
        yield step, v_factors[i].slope, w_factors[j].slope
        v_left -= step
        w_left -= step
        if v_left == 0:
            i += 1
            v_left = v_factors[i].rank if i < len(v_factors) else 0
        if w_left == 0:
            j += 1
            w_left = w_factors[j].rank if j < len(w_factors) else 0


def slopewise_dominates(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    """
    V domina W por inclinação.

    Verdadeiro sse rank(V) ≥ rank(W) e, em cada intervalo [i-1, i] com
    i ≤ rank(W), a inclinação de HN(W) não passa a de HN(V). O fibrado nulo
    é dominado por qualquer fibrado.
    """
    if v_bundle.rank < w_bundle.rank:
        return False
    return all(w_slope <= v_slope for _, v_slope, w_slope in aligned_segments(v_bundle, w_bundle))


def dominates_via_ranks(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    """rank(V^{≥μ}) ≥ rank(W^{≥μ}) para todo μ na união das inclinações HN."""
    return all(
        slice_bundle(v_bundle, mu, ">=").rank >= slice_bundle(w_bundle, mu, ">=").rank
        for mu in slope_set(v_bundle, w_bundle)
    )


@dataclass(frozen=True)
class CommonFactorDecomposition:
    """
    V = U ⊕ V′ e W = U ⊕ W′ com U a parte inicial comum maximal.

    Invariantes verificados na construção:
        - V′ domina W′
        - se W′ ≠ 0: μ_max(V′) > μ_max(W′), e se também U ≠ 0: μ_min(U) ≥ μ_max(V′)
    """

    common: Bundle
    v_rest: Bundle
    w_rest: Bundle

    def __post_init__(self):
        if not slopewise_dominates(self.v_rest, self.w_rest):
            raise InvariantViolation(
                f"remainder {self.v_rest} does not dominate {self.w_rest}"
            )
        if self.w_rest.is_zero:
            return
        if not mu_max(self.v_rest) > mu_max(self.w_rest):
            raise InvariantViolation(
                f"common part not maximal: mu_max({self.v_rest}) <= mu_max({self.w_rest})"
            )
        if not self.common.is_zero and mu_min(self.common) < mu_max(self.v_rest):
            raise InvariantViolation(
                f"mu_min({self.common}) < mu_max({self.v_rest})"
            )

    def reassemble(self) -> Tuple[Bundle, Bundle]:
        return direct_sum(self.common, self.v_rest), direct_sum(self.common, self.w_rest)


def common_factor_decompose(v_bundle: Bundle, w_bundle: Bundle) -> CommonFactorDecomposition:
    """
    Separa a parte inicial comum maximal dos polígonos alinhados à esquerda.

    A parte comum termina no primeiro bloco em que as inclinações diferem,
    sempre num ponto de posto inteiro.

    Raises:
        PreconditionError: Se V não dominar W
    """
    if not slopewise_dominates(v_bundle, w_bundle):
        raise PreconditionError(f"{v_bundle} does not slopewise dominate {w_bundle}")

    v_left = [list(f) for f in v_bundle.factors]
    w_left = [list(f) for f in w_bundle.factors]
    common: List[HNFactor] = []
    while v_left and w_left and v_left[0][0] == w_left[0][0]:
        take = min(v_left[0][1], w_left[0][1])
        common.append(HNFactor(v_left[0][0], take))
        for side in (v_left, w_left):
            side[0][1] -= take
            if side[0][1] == 0:
                side.pop(0)

    decomposition = CommonFactorDecomposition(
        common=Bundle(tuple(common)),
        v_rest=Bundle(tuple(HNFactor(s, m) for s, m in v_left)),
        w_rest=Bundle(tuple(HNFactor(s, m) for s, m in w_left)),
    )
    if decomposition.reassemble() != (v_bundle, w_bundle):
        raise InvariantViolation(f"decomposition of ({v_bundle}, {w_bundle}) does not reassemble")
    logger.debug("common factor of %s / %s: %s", v_bundle, w_bundle, decomposition.common)
    return decomposition


def equal_rank_duality_holds(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    """
    Devolve slopewise_dominates(V, W) conferindo que coincide com
    slopewise_dominates(W^∨, V^∨).

    Raises:
        PreconditionError: Se os postos forem diferentes
        InvariantViolation: Se as duas direções discordarem
    """
    if v_bundle.rank != w_bundle.rank:
        raise PreconditionError(
            f"equal-rank duality needs equal ranks, got {v_bundle.rank} and {w_bundle.rank}"
        )
    forward = slopewise_dominates(v_bundle, w_bundle)
    backward = slopewise_dominates(dual(w_bundle), dual(v_bundle))
    if forward != backward:
        raise InvariantViolation(
            f"duality broken for ({v_bundle}, {w_bundle}): {forward} vs {backward}"
        )
    return forward
