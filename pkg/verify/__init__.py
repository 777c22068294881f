#!/usr/bin/env python3
"""
Verify Module
-------------
Verificação exaustiva em escala de mesa: enumeração, oráculos e a suíte
de propriedades com execução paralela por shards.
"""

from .config import (
    HnffSettings,
    EnumBounds,
    get_settings,
    triple_bounds,
)

from .enumeration import (
    candidate_slopes,
    enumerate_bundles,
    bundle_domain,
)

from .oracles import (
    oracle_deg_pair_nonneg,
    oracle_dominates,
    oracle_integer_bundle_count,
)

from .report import FailureRecord, PropertyResult, VerifyReport

from .properties import PROPERTIES

from .runner import (
    run_shard,
    run_property_suite_async,
    run_property_suite,
)

__all__ = [
    # Configuration
    'HnffSettings',
    'EnumBounds',
    'get_settings',
    'triple_bounds',

    # Enumeration
    'candidate_slopes',
    'enumerate_bundles',
    'bundle_domain',

    # Oracles
    'oracle_deg_pair_nonneg',
    'oracle_dominates',
    'oracle_integer_bundle_count',

    # Reports
    'FailureRecord',
    'PropertyResult',
    'VerifyReport',

    # Suite
    'PROPERTIES',
    'run_shard',
    'run_property_suite_async',
    'run_property_suite',
]
