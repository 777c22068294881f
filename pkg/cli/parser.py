#!/usr/bin/env python3
"""
Bundle Expression Parser
------------------------
Parser descendente recursivo para a gramática de fibrados:

    bundle := "0" | term ("+" term)*
    term   := "O(" int ["/" posint] ")" ["^" posint]

Espaços são ignorados entre tokens. Entradas não canônicas são
canonizadas. Erros informam o offset em bytes UTF-8 do texto original.
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from bundles.errors import OverflowRejected, ParseError
from bundles.hn_core import Bundle, ZERO, bundle_from_factors
from verify.config import get_settings

TOKEN_PATTERN = re.compile(r"\s*(?:(?P<int>-?[0-9]+)|(?P<sym>[O()/^+])|(?P<bad>\S))")


class Token(NamedTuple):
    kind: str  # "int", "O", "(", ")", "/", "^", "+" ou "end"
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    # offset em bytes avançado junto com o índice de caracteres
    index, offset = 0, 0
    for match in TOKEN_PATTERN.finditer(text):
        start = match.start(match.lastgroup)
        offset += len(text[index:start].encode("utf-8"))
        index = start
        if match.lastgroup == "bad":
            raise ParseError(f"unexpected character {match.group('bad')!r}", offset, text)
        value = match.group(match.lastgroup)
        kind = "int" if match.lastgroup == "int" else value
        tokens.append(Token(kind, value, offset))
    offset += len(text[index:].encode("utf-8"))
    tokens.append(Token("end", "", offset))
    return tokens


class BundleParser:
    """
    Parser de uma expressão de fibrado ou de inclinação.

    Args:
        text: Fonte a ser analisada
        max_digits: Limite de dígitos por literal (padrão das configurações)
    """

    def __init__(self, text: str, max_digits: Optional[int] = None):
        self.text = text
        self.max_digits = max_digits or get_settings().max_literal_digits
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.offset, self.text)

    def expect(self, kind: str) -> Token:
        token = self.current
        if token.kind != kind:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise self.error(f"expected {kind!r}, found {found}")
        self.index += 1
        return token

    def integer(self, positive: bool = False) -> int:
        token = self.expect("int")
        digits = token.text.lstrip("-")
        if len(digits) > self.max_digits:
            raise OverflowRejected(
                f"literal longer than {self.max_digits} digits", token.offset, self.text
            )
        value = int(token.text)
        if positive and value <= 0:
            raise self.error("expected a positive integer", token)
        return value

    def slope(self) -> Fraction:
        num = self.integer()
        if self.current.kind != "/":
            return Fraction(num)
        self.index += 1
        token = self.current
        den = self.integer()
        if den == 0:
            raise self.error("zero denominator", token)
        if den < 0:
            raise self.error("expected a positive integer", token)
        return Fraction(num, den)

    def term(self) -> Tuple[Fraction, int]:
        self.expect("O")
        self.expect("(")
        slope = self.slope()
        self.expect(")")
        mult = 1
        if self.current.kind == "^":
            self.index += 1
            mult = self.integer(positive=True)
        return slope, mult

    def bundle(self) -> Bundle:
        if self.current.kind == "int" and self.current.text == "0":
            self.index += 1
            self.expect("end")
            return ZERO
        pairs = [self.term()]
        while self.current.kind == "+":
            self.index += 1
            pairs.append(self.term())
        self.expect("end")
        return bundle_from_factors(pairs)


def parse_bundle(text: str, max_digits: Optional[int] = None) -> Bundle:
    """
    Converte texto da gramática em Bundle canônico.

    Raises:
        ParseError: Sintaxe inválida ou denominador zero (com offset em bytes)
        OverflowRejected: Literal acima do limite de dígitos
    """
    return BundleParser(text, max_digits).bundle()


def parse_slope(text: str, max_digits: Optional[int] = None) -> Fraction:
    """Inclinação isolada: int ["/" posint]."""
    parser = BundleParser(text, max_digits)
    value = parser.slope()
    parser.expect("end")
    return value
