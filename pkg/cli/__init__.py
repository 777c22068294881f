#!/usr/bin/env python3
"""
CLI Module
----------
Superfície de linha de comando: parser da gramática, formatação, SVG,
schemas JSON e os subcomandos click.
"""

from .parser import (
    Token,
    tokenize,
    BundleParser,
    parse_bundle,
    parse_slope,
)

from .formatter import (
    format_bundle,
    format_info,
    format_verdict,
    format_key_report,
    format_trace,
    format_report,
)

from .schemas import (
    BundleModel,
    TraceModel,
    dump_json,
    validate_payload,
    get_schema_for_payload,
)

from .svg import polygon_points, render_svg

from .utils import (
    EXIT_OK,
    EXIT_FALSE,
    EXIT_USAGE,
    EXIT_PROPERTY_FAILURE,
    EXIT_RESOURCE,
    clean_logger,
    exit_code_for,
    get_user_friendly_error_message,
)

from .commands import cli, main

__all__ = [
    # Parser
    'Token',
    'tokenize',
    'BundleParser',
    'parse_bundle',
    'parse_slope',

    # Formatting
    'format_bundle',
    'format_info',
    'format_verdict',
    'format_key_report',
    'format_trace',
    'format_report',

    # JSON
    'BundleModel',
    'TraceModel',
    'dump_json',
    'validate_payload',
    'get_schema_for_payload',

    # SVG
    'polygon_points',
    'render_svg',

    # Exit codes and errors
    'EXIT_OK',
    'EXIT_FALSE',
    'EXIT_USAGE',
    'EXIT_PROPERTY_FAILURE',
    'EXIT_RESOURCE',
    'clean_logger',
    'exit_code_for',
    'get_user_friendly_error_message',

    # Commands
    'cli',
    'main',
]
