#!/usr/bin/env python3
"""
CLI Utilities
-------------
Logger limpo para o terminal, códigos de saída e mensagens de erro fixas
para o usuário.
"""

import logging

import jsonschema

from bundles.errors import (
    BundleError,
    InvariantViolation,
    OverflowRejected,
    ParseError,
    PreconditionError,
    VerifyResourceError,
    ZeroBundleError,
    ZeroDenominatorError,
)

# Logger limpo: só as linhas essenciais para o usuário, sempre no stderr
clean_logger = logging.getLogger("hnff_clean")
clean_logger.setLevel(logging.INFO)
clean_handler = logging.StreamHandler()
clean_handler.setFormatter(logging.Formatter("%(message)s"))
clean_logger.addHandler(clean_handler)
clean_logger.propagate = False

# Códigos de saída
EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_PROPERTY_FAILURE = 3
EXIT_RESOURCE = 4


def get_user_friendly_error_message(error: Exception) -> str:
    """
    Mensagens de erro fixas por tipo de exceção.
    Todas seguem o padrão: "Erro: <problema>: <detalhe>"
    """
    if isinstance(error, OverflowRejected):
        return f"Erro: literal numérico grande demais: {error}"
    elif isinstance(error, ParseError):
        return f"Erro: expressão de fibrado inválida: {error}"
    elif isinstance(error, ZeroDenominatorError):
        return f"Erro: denominador zero: {error}"
    elif isinstance(error, ZeroBundleError):
        return f"Erro: operação indefinida para o fibrado nulo: {error}"
    elif isinstance(error, PreconditionError):
        return f"Erro: pré-condição violada: {error}"
    elif isinstance(error, BundleError):
        return f"Erro: entrada rejeitada: {error}"
    elif isinstance(error, InvariantViolation):
        return f"Erro: invariante interna quebrada (bug): {error}"
    elif isinstance(error, VerifyResourceError):
        return f"Erro: recursos esgotados durante a verificação: {error}"
    elif isinstance(error, jsonschema.ValidationError):
        return f"Erro: JSON fora do schema: {error.message}"
    elif isinstance(error, OSError):
        return f"Erro: falha ao escrever arquivo: {error}"
    return f"Erro: falha inesperada: {error}"


def exit_code_for(error: Exception) -> int:
    if isinstance(error, VerifyResourceError):
        return EXIT_RESOURCE
    if isinstance(error, InvariantViolation):
        return EXIT_PROPERTY_FAILURE
    return EXIT_USAGE


def log_error(error: Exception, context: str = "") -> None:
    """Registra o erro completo no log de diagnóstico."""
    logging.getLogger(__name__).error(
        f"💥 {context}: {type(error).__name__}: {error}", exc_info=True
    )
