#!/usr/bin/env python3
"""
Classification Criteria
-----------------------
Procedimentos de decisão: fibrados quocientes (nas formas por postos e
poligonal), condição suficiente e condição necessária (conjectural) para
subfibrados, e fibrados globalmente gerados por n seções.

Quantificações sobre μ ∈ ℚ são reduzidas à união finita das inclinações HN
das entradas mais um valor sentinela abaixo do mínimo.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from bundles.dominance import slopewise_dominates
from bundles.errors import InvariantViolation, PreconditionError
from bundles.hn_core import (
    Bundle,
    format_slope,
    interval_slopes,
    mu_min,
    slice_bundle,
    slope_set,
    trivial,
    vertex_set,
)

logger = logging.getLogger(__name__)


class FailedCondition(str, Enum):
    RANK_INEQUALITY = "rank-inequality"
    EQUALITY_CASE = "equality-case"
    POLYGON_SLOPE = "polygon-slope"
    POLYGON_VERTEX = "polygon-vertex"


@dataclass(frozen=True)
class ClassificationVerdict:
    """
    Veredito explicável.

    answer = True sse witness_mu e failed_condition estão ausentes.
    """

    answer: bool
    witness_mu: Optional[Fraction] = None
    failed_condition: Optional[FailedCondition] = None

    def __post_init__(self):
        explained = self.witness_mu is not None and self.failed_condition is not None
        bare = self.witness_mu is None and self.failed_condition is None
        if not (bare if self.answer else explained):
            raise InvariantViolation(f"inconsistent verdict {self!r}")

    def __bool__(self) -> bool:
        return self.answer

    @classmethod
    def holds(cls) -> "ClassificationVerdict":
        return cls(True)

    @classmethod
    def fails(cls, mu: Fraction, condition: FailedCondition) -> "ClassificationVerdict":
        return cls(False, Fraction(mu), condition)

    def explain(self) -> str:
        if self.answer:
            return "all conditions hold"
        return f"{self.failed_condition.value} fails at mu={format_slope(self.witness_mu)}"


def _test_slopes(*bundles: Bundle) -> List[Fraction]:
    """Inclinações HN em ordem crescente, precedidas por uma sentinela."""
    slopes = slope_set(*bundles)
    if not slopes:
        return []
    return [slopes[0] - 1] + slopes


def is_quotient(e_bundle: Bundle, f_bundle: Bundle) -> ClassificationVerdict:
    """
    F é quociente de E?

    Condições, para todo μ:
        (i) rank(E^{≤μ}) ≥ rank(F^{≤μ})
        (ii) na igualdade, E^{≤μ} ≅ F^{≤μ}

    Args:
        e_bundle: Fibrado E
        f_bundle: Candidato a quociente F

    Returns:
        ClassificationVerdict: Com o primeiro μ (crescente) onde falha
    """
    if f_bundle.is_zero:
        return ClassificationVerdict.holds()
    for mu in _test_slopes(e_bundle, f_bundle):
        e_part = slice_bundle(e_bundle, mu, "<=")
        f_part = slice_bundle(f_bundle, mu, "<=")
        if e_part.rank < f_part.rank:
            return ClassificationVerdict.fails(mu, FailedCondition.RANK_INEQUALITY)
        if e_part.rank == f_part.rank and e_part != f_part:
            return ClassificationVerdict.fails(mu, FailedCondition.EQUALITY_CASE)
    return ClassificationVerdict.holds()


def quotient_rank_condition(e_bundle: Bundle, f_bundle: Bundle) -> bool:
    """Apenas a condição (i) de is_quotient."""
    return all(
        slice_bundle(e_bundle, mu, "<=").rank >= slice_bundle(f_bundle, mu, "<=").rank
        for mu in _test_slopes(e_bundle, f_bundle)
    )


def is_quotient_polygonal(e_bundle: Bundle, f_bundle: Bundle) -> ClassificationVerdict:
    """
    Forma poligonal do critério de quociente, com as extremidades direitas
    dos dois polígonos na origem.

    (i') para i em 1..rank(F): inclinação de HN(F) em [-i, -i+1] ≥ a de HN(E).
         Se HN(E) não chega a -i, a condição falha.
    (ii') em cada vértice comum -j: inclinação de HN(F) em [-j, -j+1] ≥ a de
         HN(E) em [-j-1, -j], a menos que os polígonos coincidam em [-j, 0].
         À esquerda de HN(E) a inclinação conta como infinita.
    """
    e_from_right = interval_slopes(e_bundle)[::-1]
    f_from_right = interval_slopes(f_bundle)[::-1]

    for i, f_slope in enumerate(f_from_right, start=1):
        if i > len(e_from_right) or f_slope < e_from_right[i - 1]:
            return ClassificationVerdict.fails(f_slope, FailedCondition.POLYGON_SLOPE)

    e_vertices = {e_bundle.rank - v for v in vertex_set(e_bundle)}
    f_vertices = {f_bundle.rank - v for v in vertex_set(f_bundle)}
    for j in sorted(e_vertices & f_vertices):
        if j == 0 or e_from_right[:j] == f_from_right[:j]:
            continue
        f_slope = f_from_right[j - 1]
        if j >= len(e_from_right) or f_slope < e_from_right[j]:
            return ClassificationVerdict.fails(f_slope, FailedCondition.POLYGON_VERTEX)
    return ClassificationVerdict.holds()


def subbundle_sufficient(e_bundle: Bundle, d_bundle: Bundle) -> ClassificationVerdict:
    """
    Condição suficiente para D ser subfibrado de E.

    rank(E^{≥μ}) ≥ rank(D^{≥μ}) para todo μ, com igualdade só quando
    E^{≥μ} ≅ D^{≥μ}. Um veredito falso NÃO prova que D não mergulha em E.
    """
    if d_bundle.is_zero:
        return ClassificationVerdict.holds()
    for mu in reversed(slope_set(e_bundle, d_bundle)):
        e_part = slice_bundle(e_bundle, mu, ">=")
        d_part = slice_bundle(d_bundle, mu, ">=")
        if e_part.rank < d_part.rank:
            return ClassificationVerdict.fails(mu, FailedCondition.RANK_INEQUALITY)
        if e_part.rank == d_part.rank and e_part != d_part:
            return ClassificationVerdict.fails(mu, FailedCondition.EQUALITY_CASE)
    return ClassificationVerdict.holds()


def subbundle_necessary(e_bundle: Bundle, d_bundle: Bundle) -> bool:
    """
    Condição necessária para subfibrados: rank(E^{≥μ}) ≥ rank(D^{≥μ}) para todo μ.

    CONJECTURAL: conjectura-se que também seja suficiente. Nunca reportar
    um resultado verdadeiro como prova de mergulho.
    """
    return slopewise_dominates(e_bundle, d_bundle)


def is_globally_generated(f_bundle: Bundle, n: int) -> bool:
    """
    F é gerado por n seções globais (quociente de O^n)?

    Raises:
        PreconditionError: Se n < 1
    """
    if n < 1:
        raise PreconditionError(f"number of sections must be >= 1, got {n}")
    if f_bundle.is_zero:
        return True
    if mu_min(f_bundle) < 0 or f_bundle.rank > n:
        return False
    return f_bundle.rank < n or f_bundle == trivial(n)
