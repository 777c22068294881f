#!/usr/bin/env python3
"""
Bundle Enumeration
------------------
Enumeração determinística de todos os fibrados canônicos dentro de limites.

Busca em profundidade sobre sequências estritamente decrescentes de
inclinações candidatas, cada uma com multiplicidade, podada pelo posto.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Tuple

from bundles.hn_core import ZERO, Bundle, HNFactor

from .config import EnumBounds

logger = logging.getLogger(__name__)


def candidate_slopes(bounds: EnumBounds) -> List[Fraction]:
    """Inclinações r/s admissíveis, em ordem decrescente."""
    max_den = min(bounds.max_denominator, bounds.max_rank)
    slopes = set()
    for den in range(1, max_den + 1):
        for num in range(-bounds.max_abs_degree, bounds.max_abs_degree + 1):
            slope = Fraction(num, den)
            if slope.denominator != den:
                continue
            if bounds.max_abs_slope is not None and abs(slope) > bounds.max_abs_slope:
                continue
            slopes.add(slope)
    return sorted(slopes, reverse=True)


def enumerate_bundles(bounds: EnumBounds) -> Iterator[Bundle]:
    """
    Gera cada fibrado dentro dos limites exatamente uma vez.

    A ordem é lexicográfica sobre (inclinação decrescente, multiplicidade),
    com o fibrado nulo primeiro quando include_zero.
    """
    if bounds.include_zero:
        yield ZERO
    candidates = candidate_slopes(bounds)

    def extend(start: int, prefix: Tuple[HNFactor, ...], rank: int, degree: int):
        for index in range(start, len(candidates)):
            slope = candidates[index]
            mult = 1
            while rank + mult * slope.denominator <= bounds.max_rank:
                factors = prefix + (HNFactor(slope, mult),)
                new_degree = degree + mult * slope.numerator
                if abs(new_degree) <= bounds.max_abs_degree:
                    yield Bundle(factors)
                yield from extend(index + 1, factors, rank + mult * slope.denominator, new_degree)
                mult += 1

    yield from extend(0, (), 0, 0)


@lru_cache(maxsize=16)
def bundle_domain(bounds: EnumBounds) -> Tuple[Bundle, ...]:
    """Enumeração materializada, cacheada por processo."""
    domain = tuple(enumerate_bundles(bounds))
    logger.info("enumerated %d bundles for %s", len(domain), bounds)
    return domain
