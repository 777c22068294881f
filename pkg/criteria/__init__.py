#!/usr/bin/env python3
"""
Criteria Module
---------------
Critérios de classificação e a maquinaria de redução de inclinações.
"""

from .classify import (
    FailedCondition,
    ClassificationVerdict,
    is_quotient,
    quotient_rank_condition,
    is_quotient_polygonal,
    subbundle_sufficient,
    subbundle_necessary,
    is_globally_generated,
)

from .reduction import (
    HYPOTHESIS_TAGS,
    KeyInequalityReport,
    ReductionStep,
    ReductionTrace,
    MinSlopeReduction,
    c_value,
    key_inequality_hypotheses,
    key_inequality_check,
    strict_drop_condition,
    max_slope_reduction,
    slope_reduction_sequence,
    min_slope_reduction,
    cut_down,
)

__all__ = [
    # Classification
    'FailedCondition',
    'ClassificationVerdict',
    'is_quotient',
    'quotient_rank_condition',
    'is_quotient_polygonal',
    'subbundle_sufficient',
    'subbundle_necessary',
    'is_globally_generated',

    # Reduction
    'HYPOTHESIS_TAGS',
    'KeyInequalityReport',
    'ReductionStep',
    'ReductionTrace',
    'MinSlopeReduction',
    'c_value',
    'key_inequality_hypotheses',
    'key_inequality_check',
    'strict_drop_condition',
    'max_slope_reduction',
    'slope_reduction_sequence',
    'min_slope_reduction',
    'cut_down',
]
