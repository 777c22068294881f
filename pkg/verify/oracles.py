#!/usr/bin/env python3
"""
Brute-force Oracles
-------------------
Caminhos de cálculo independentes usados para conferir as implementações
rápidas: expansão completa do produto tensorial, comparação intervalo a
intervalo e uma contagem de enumeração por combinações.
"""

import math
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import List

from bundles.hn_core import Bundle

from .config import EnumBounds


def oracle_deg_pair_nonneg(v_bundle: Bundle, w_bundle: Bundle) -> int:
    """
    deg(V^∨ ⊗ W)^{≥0} pela expansão de V^∨ ⊗ W em somandos estáveis.

    Cada par O(-λ)^{m} ⊗ O(λ')^{m'} contribui m·m'·gcd(ss', ...) cópias de
    O(λ' - λ); somam-se os graus dos somandos de inclinação ≥ 0.
    """
    total = 0
    for left in v_bundle.factors:
        r, s = -left.slope.numerator, left.slope.denominator
        for right in w_bundle.factors:
            r2, s2 = right.slope.numerator, right.slope.denominator
            piece_rank, piece_degree = s * s2, r * s2 + r2 * s
            copies = math.gcd(piece_rank, piece_degree) * left.mult * right.mult
            slope = Fraction(piece_degree, piece_rank)
            if slope >= 0:
                total += copies * slope.numerator
    return total


def _unit_slopes(bundle: Bundle) -> List[Fraction]:
    out: List[Fraction] = []
    for factor in bundle.factors:
        for _ in range(factor.mult * factor.slope.denominator):
            out.append(factor.slope)
    return out


def oracle_dominates(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    """Dominância comparando explicitamente cada intervalo [i-1, i]."""
    v_slopes, w_slopes = _unit_slopes(v_bundle), _unit_slopes(w_bundle)
    if len(v_slopes) < len(w_slopes):
        return False
    return all(w <= v for v, w in zip(v_slopes, w_slopes))


def oracle_integer_bundle_count(bounds: EnumBounds) -> int:
    """
    Conta fibrados de inclinações inteiras como multiconjuntos de fibrados de
    linha O(k), independentemente da busca em profundidade.

    Só vale para max_denominator = 1.
    """
    if bounds.max_denominator != 1:
        raise ValueError("integer count needs max_denominator = 1")
    limit = bounds.max_abs_degree
    if bounds.max_abs_slope is not None:
        limit = min(limit, bounds.max_abs_slope)
    slopes = range(-limit, limit + 1)
    count = 1 if bounds.include_zero else 0
    for size in range(1, bounds.max_rank + 1):
        count += sum(
            1
            for combo in combinations_with_replacement(slopes, size)
            if abs(sum(combo)) <= bounds.max_abs_degree
        )
    return count
