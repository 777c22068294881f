#!/usr/bin/env python3
"""
Bundle Errors
-------------
Hierarquia de exceções usada por todos os módulos de fibrados.
Toda rejeição de pré-condição herda de BundleError (um ValueError).
"""

from typing import Optional


class BundleError(ValueError):
    """Base de todas as rejeições de entrada."""


class ZeroDenominatorError(BundleError):
    pass


class ZeroBundleError(BundleError):
    """Operação indefinida para o fibrado nulo (mu, mu_min, mu_max...)."""


class PreconditionError(BundleError):
    """Pré-condição violada (posto diferente, inclinação não inteira, etc)."""


class InvariantViolation(AssertionError):
    """
    Lei interna quebrada durante uma operação auto-verificável.

    Nunca deve ocorrer com código correto; o verificador exaustivo a registra
    como contraexemplo em vez de abortar.
    """


class ParseError(BundleError):
    """
    Erro de sintaxe na expressão de fibrado.

    Args:
        message: Descrição do problema
        offset: Posição (em bytes UTF-8, base 0) onde o erro foi detectado
        text: Texto original
    """

    def __init__(self, message: str, offset: int, text: Optional[str] = None):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at byte offset {offset}")


class OverflowRejected(ParseError):
    """Literal numérico acima do limite configurado de dígitos."""


class VerifyResourceError(RuntimeError):
    """Exaustão de recursos durante a verificação (memória, recursão, pool)."""
