#!/usr/bin/env python3
"""
Slope Reduction
---------------
A quantidade c_{E,F}(Q), a redução maximal de inclinação, a sequência
recursiva (F_n) que leva F até Q e o verificador da desigualdade chave.

Também expõe as reduções auxiliares usadas no argumento por indução:
redução nas inclinações mínimas e o corte de um fator O(μ_min(F)).
"""

import logging
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Tuple

from bundles.dominance import common_factor_decompose, slopewise_dominates
from bundles.errors import InvariantViolation, PreconditionError, ZeroBundleError
from bundles.hn_core import (
    Bundle,
    HNFactor,
    bundle_from_factors,
    direct_sum,
    dual,
    is_integral,
    mu_max,
    mu_min,
    slice_bundle,
    slope_set,
)
from bundles.pairing import deg_pair_nonneg

from .classify import is_quotient

logger = logging.getLogger(__name__)

HYPOTHESIS_TAGS = ("i", "ii", "iii", "iv")


def c_value(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> int:
    """
    c_{E,F}(Q) = dp(E,F) + dp(Q,Q) − dp(E,Q) − dp(Q,F), com dp = deg_pair_nonneg.

    Definida para qualquer tripla, inclusive com fibrados nulos.
    """
    return (
        deg_pair_nonneg(e_bundle, f_bundle)
        + deg_pair_nonneg(q_bundle, q_bundle)
        - deg_pair_nonneg(e_bundle, q_bundle)
        - deg_pair_nonneg(q_bundle, f_bundle)
    )


@dataclass(frozen=True)
class KeyInequalityReport:
    """
    Status das hipóteses (i)-(iv) e da conclusão da desigualdade chave.

    Com hypotheses_ok vale sempre c ≥ 0 (inequality_holds). A cláusula de
    igualdade (c = 0 ⟺ F = Q) fica em equality_consistent e pode falhar
    mesmo com as quatro hipóteses, p.ex. E = O(1) ⊕ O, F = O(1), Q = O.
    """

    c: int
    hypotheses: Tuple[bool, bool, bool, bool]
    equality_consistent: bool

    @property
    def hypotheses_ok(self) -> bool:
        return all(self.hypotheses)

    @property
    def violated_hypothesis(self) -> Optional[str]:
        for tag, ok in zip(HYPOTHESIS_TAGS, self.hypotheses):
            if not ok:
                return tag
        return None

    @property
    def inequality_holds(self) -> bool:
        return self.c >= 0

    @property
    def conclusion_holds(self) -> bool:
        return self.inequality_holds and self.equality_consistent


def key_inequality_hypotheses(
    e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle
) -> Tuple[bool, bool, bool, bool]:
    """(i) F quociente de E, (ii) Q quociente de E, (iii) F domina Q, (iv) μ_min(E) < μ_min(F)."""
    min_slopes = (
        not e_bundle.is_zero
        and not f_bundle.is_zero
        and mu_min(e_bundle) < mu_min(f_bundle)
    )
    return (
        is_quotient(e_bundle, f_bundle).answer,
        is_quotient(e_bundle, q_bundle).answer,
        slopewise_dominates(f_bundle, q_bundle),
        min_slopes,
    )


def key_inequality_check(
    e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle
) -> KeyInequalityReport:
    """Nunca rejeita: relata hipóteses e conclusão para a tripla dada."""
    c = c_value(e_bundle, f_bundle, q_bundle)
    return KeyInequalityReport(
        c=c,
        hypotheses=key_inequality_hypotheses(e_bundle, f_bundle, q_bundle),
        equality_consistent=(c == 0) == (f_bundle == q_bundle),
    )


def strict_drop_condition(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> bool:
    """
    Toda igualdade rk(E^{≤μ}) = rk(Q^{≤μ}) vem com E^{≤μ} = F^{≤μ}.

    Sob as hipóteses de um passo da redução, garante que a redução maximal
    de F para Q baixa c estritamente quando μ_max(F) ≠ μ_max(Q). Basta testar
    μ nas inclinações dos três fibrados, onde os postos mudam.
    """
    for slope in slope_set(e_bundle, f_bundle, q_bundle):
        e_part = slice_bundle(e_bundle, slope, "<=")
        if e_part.rank == slice_bundle(q_bundle, slope, "<=").rank:
            if e_part != slice_bundle(f_bundle, slope, "<="):
                return False
    return True


def max_slope_reduction(v_bundle: Bundle, w_bundle: Bundle) -> Bundle:
    """
    Redução maximal de inclinação de V para W.

    Troca toda inclinação de V acima de μ_max(W) por μ_max(W), preservando o
    posto: O(μ_max W)^{rank(V^{>μ_max W})} ⊕ V^{≤μ_max W}.

    Raises:
        ZeroBundleError: Se V ou W for nulo
        PreconditionError: Inclinações não inteiras ou V não domina W
    """
    if v_bundle.is_zero or w_bundle.is_zero:
        raise ZeroBundleError("max slope reduction needs nonzero bundles")
    if not (is_integral(v_bundle) and is_integral(w_bundle)):
        raise PreconditionError(
            f"max slope reduction needs integer slopes, got {v_bundle} and {w_bundle}"
        )
    if not slopewise_dominates(v_bundle, w_bundle):
        raise PreconditionError(f"{v_bundle} does not slopewise dominate {w_bundle}")
    top = mu_max(w_bundle)
    lifted = slice_bundle(v_bundle, top, ">").rank
    return bundle_from_factors(
        [(top, lifted)] + list(slice_bundle(v_bundle, top, "<=").factors)
    )


class ReductionStep(NamedTuple):
    f: Bundle
    common_u: Bundle
    c: int


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[ReductionStep, ...] = field(default_factory=tuple)
    terminated: bool = False

    @property
    def c_values(self) -> List[int]:
        return [step.c for step in self.steps]

    @property
    def final(self) -> Bundle:
        return self.steps[-1].f


def slope_reduction_sequence(
    e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle
) -> ReductionTrace:
    """
    Constrói a sequência F_0 = F, F_{n+1} = U_n ⊕ (redução maximal de F′_n para Q′_n).

    Em cada passo decompõe F_n = U_n ⊕ F′_n e Q = U_n ⊕ Q′_n, registra
    (F_n, U_n, c(E, F_n, Q)) e para quando Q′_n = 0, ou seja F_n = Q.

    Raises:
        ZeroBundleError: Se F ou Q for nulo
        PreconditionError: Postos diferentes, inclinações não inteiras ou
            F não domina Q
    """
    if f_bundle.is_zero or q_bundle.is_zero:
        raise ZeroBundleError("reduction sequence needs nonzero F and Q")
    if f_bundle.rank != q_bundle.rank:
        raise PreconditionError(
            f"reduction sequence needs rank(F) = rank(Q), got {f_bundle.rank} and {q_bundle.rank}"
        )
    if not all(is_integral(b) for b in (e_bundle, f_bundle, q_bundle)):
        raise PreconditionError("reduction sequence needs integer slopes")
    if not slopewise_dominates(f_bundle, q_bundle):
        raise PreconditionError(f"{f_bundle} does not slopewise dominate {q_bundle}")

    steps: List[ReductionStep] = []
    current = f_bundle
    # rank(U_n) cresce estritamente, logo no máximo rank(Q) + 1 passos
    for _ in range(q_bundle.rank + 1):
        split = common_factor_decompose(current, q_bundle)
        steps.append(ReductionStep(current, split.common, c_value(e_bundle, current, q_bundle)))
        if split.w_rest.is_zero:
            logger.debug("reduction of %s to %s done in %d steps", f_bundle, q_bundle, len(steps))
            return ReductionTrace(tuple(steps), terminated=True)
        current = direct_sum(split.common, max_slope_reduction(split.v_rest, split.w_rest))
    raise InvariantViolation(
        f"reduction of {f_bundle} to {q_bundle} exceeded {q_bundle.rank + 1} steps"
    )


@dataclass(frozen=True)
class MinSlopeReduction:
    common: Bundle
    e_rest: Bundle
    f_rest: Bundle


def min_slope_reduction(e_bundle: Bundle, f_bundle: Bundle) -> MinSlopeReduction:
    """
    Separa a parte comum final dos polígonos: E = U ⊕ E′, F = U ⊕ F′.

    É a decomposição em fator comum de (E^∨, F^∨), dualizada. Quando F é
    quociente de E, F′ também é quociente de E′ e F′ = 0 ou μ_min(F′) > μ_min(E′).

    Raises:
        PreconditionError: Se E^∨ não dominar F^∨
    """
    split = common_factor_decompose(dual(e_bundle), dual(f_bundle))
    return MinSlopeReduction(
        common=dual(split.common),
        e_rest=dual(split.v_rest),
        f_rest=dual(split.w_rest),
    )


def cut_down(f_bundle: Bundle) -> Bundle:
    """
    Remove uma cópia de O(μ_min(F)).

    Raises:
        ZeroBundleError: Se F for nulo
        PreconditionError: Se μ_min(F) não for inteiro
    """
    lowest = mu_min(f_bundle)
    if lowest.denominator != 1:
        raise PreconditionError(f"cut_down needs an integer minimal slope, got {lowest}")
    factors = list(f_bundle.factors)
    factors[-1] = HNFactor(lowest, factors[-1].mult - 1)
    return bundle_from_factors(factors)
