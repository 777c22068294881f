#!/usr/bin/env python3
"""
HN Core
-------
Aritmética exata de inclinações e o valor canônico Bundle.

Um fibrado é identificado com sua decomposição de Harder-Narasimhan:
uma sequência de fatores O(λ_i)^{m_i} com inclinações estritamente
decrescentes. Todas as operações são funções puras sobre valores imutáveis.
"""

import logging
import math
import operator
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterable, List, NamedTuple, Tuple, Union

from .errors import InvariantViolation, PreconditionError, ZeroBundleError, ZeroDenominatorError

logger = logging.getLogger(__name__)

# Inclinação exata: Fraction já garante termos mínimos e denominador positivo
Slope = Fraction
SlopeLike = Union[Fraction, int]

SLICE_MODES: Dict[str, Callable[[Fraction, Fraction], bool]] = {
    "<=": operator.le,
    "<": operator.lt,
    ">=": operator.ge,
    ">": operator.gt,
    "≤": operator.le,
    "≥": operator.ge,
}


class HNFactor(NamedTuple):
    """Somando O(slope)^{mult} da decomposição HN."""

    slope: Fraction
    mult: int

    @property
    def rank(self) -> int:
        return self.slope.denominator * self.mult

    @property
    def degree(self) -> int:
        return self.slope.numerator * self.mult


class HNVector(NamedTuple):
    """Aresta (m·s, m·r) do polígono HN."""

    x: int
    y: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.y, self.x)


def format_slope(slope: SlopeLike) -> str:
    slope = Fraction(slope)
    if slope.denominator == 1:
        return str(slope.numerator)
    return f"{slope.numerator}/{slope.denominator}"


@dataclass(frozen=True)
class Bundle:
    """
    Fibrado vetorial representado pela decomposição HN canônica.

    Os fatores ficam em ordem estritamente decrescente de inclinação, cada um
    com multiplicidade positiva. A tupla vazia é o fibrado nulo.

    Use bundle_from_factors para entradas não canônicas; o construtor apenas
    valida.
    """

    factors: Tuple[HNFactor, ...] = ()

    def __post_init__(self):
        factors = tuple(HNFactor(Fraction(s), int(m)) for s, m in self.factors)
        for factor in factors:
            if factor.mult < 1:
                raise PreconditionError(
                    f"multiplicity must be positive, got {factor.mult}"
                )
        for left, right in zip(factors, factors[1:]):
            if not left.slope > right.slope:
                raise PreconditionError(
                    "factors must have strictly decreasing slopes; "
                    "use bundle_from_factors to canonicalize"
                )
        object.__setattr__(self, "factors", factors)

    @cached_property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @cached_property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    @property
    def is_zero(self) -> bool:
        return not self.factors

    @cached_property
    def hn_vectors(self) -> Tuple[HNVector, ...]:
        return tuple(HNVector(f.rank, f.degree) for f in self.factors)

    @property
    def slopes(self) -> Tuple[Fraction, ...]:
        return tuple(f.slope for f in self.factors)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for factor in self.factors:
            term = f"O({format_slope(factor.slope)})"
            if factor.mult > 1:
                term += f"^{factor.mult}"
            terms.append(term)
        return " + ".join(terms)


ZERO = Bundle()


# ===== Construção =====


def slope_new(num: int, den: int) -> Fraction:
    """Normaliza num/den para termos mínimos com denominador positivo."""
    if den == 0:
        raise ZeroDenominatorError(f"zero denominator in slope {num}/{den}")
    return Fraction(num, den)


def bundle_from_factors(pairs: Iterable[Tuple[SlopeLike, int]]) -> Bundle:
    """
    Canoniza uma lista de pares (inclinação, multiplicidade).

    Inclinações iguais são somadas, multiplicidades zero descartadas e o
    resultado ordenado de forma estritamente decrescente.

    Raises:
        PreconditionError: Se alguma multiplicidade for negativa
    """
    merged: Counter = Counter()
    for slope, mult in pairs:
        if mult < 0:
            raise PreconditionError(f"negative multiplicity {mult} for slope {slope}")
        merged[Fraction(slope)] += mult
    ordered = sorted(
        ((s, m) for s, m in merged.items() if m > 0),
        key=lambda item: item[0],
        reverse=True,
    )
    return Bundle(tuple(HNFactor(s, m) for s, m in ordered))


def stable(slope: SlopeLike) -> Bundle:
    """O(λ), o fibrado estável de inclinação λ."""
    return Bundle((HNFactor(Fraction(slope), 1),))


def trivial(n: int) -> Bundle:
    """O^n."""
    if n < 0:
        raise PreconditionError(f"rank of trivial bundle must be nonnegative, got {n}")
    return Bundle(((Fraction(0), n),)) if n else ZERO


# ===== Invariantes numéricos =====


def rank(bundle: Bundle) -> int:
    return bundle.rank


def degree(bundle: Bundle) -> int:
    return bundle.degree


def mu(bundle: Bundle) -> Fraction:
    if bundle.is_zero:
        raise ZeroBundleError("slope of the zero bundle is undefined")
    return Fraction(bundle.degree, bundle.rank)


def mu_max(bundle: Bundle) -> Fraction:
    if bundle.is_zero:
        raise ZeroBundleError("mu_max of the zero bundle is undefined")
    return bundle.factors[0].slope


def mu_min(bundle: Bundle) -> Fraction:
    if bundle.is_zero:
        raise ZeroBundleError("mu_min of the zero bundle is undefined")
    return bundle.factors[-1].slope


def hn_vectors(bundle: Bundle) -> Tuple[HNVector, ...]:
    return bundle.hn_vectors


def is_integral(bundle: Bundle) -> bool:
    """Todas as inclinações HN são inteiras."""
    return all(f.slope.denominator == 1 for f in bundle.factors)


def slope_set(*bundles: Bundle) -> List[Fraction]:
    """União ordenada (crescente) das inclinações HN dos fibrados dados."""
    return sorted({f.slope for b in bundles for f in b.factors})


# ===== Operações =====


def dual(bundle: Bundle) -> Bundle:
    return Bundle(tuple(HNFactor(-f.slope, f.mult) for f in reversed(bundle.factors)))


def direct_sum(*bundles: Bundle) -> Bundle:
    return bundle_from_factors(f for b in bundles for f in b.factors)


def tensor(a: Bundle, b: Bundle) -> Bundle:
    """
    Produto tensorial estendido bilinearmente sobre os fatores HN.

    Para fatores estáveis O(r/s) ⊗ O(r'/s') = O(r/s + r'/s')^{gcd(ss', rs'+r's)}.
    Se qualquer lado for nulo, o resultado é nulo.
    """
    pairs = []
    for left in a.factors:
        r, s = left.slope.numerator, left.slope.denominator
        for right in b.factors:
            r2, s2 = right.slope.numerator, right.slope.denominator
            copies = math.gcd(s * s2, r * s2 + r2 * s)
            pairs.append((left.slope + right.slope, copies * left.mult * right.mult))
    return bundle_from_factors(pairs)


def twist(bundle: Bundle, slope: SlopeLike) -> Bundle:
    """V(λ) := V ⊗ O(λ)."""
    return tensor(bundle, stable(slope))


def stretch(bundle: Bundle, factor: int) -> Bundle:
    """
    Estica verticalmente o polígono HN por um fator inteiro C ≥ 1.

    Cada vetor (x, y) vira (x, C·y) e é reescrito canonicamente: inclinação
    C·λ em termos mínimos r'/s' e multiplicidade x/s'.
    """
    if factor < 1:
        raise PreconditionError(f"stretch factor must be >= 1, got {factor}")
    pairs = []
    for vec in bundle.hn_vectors:
        new_slope = Fraction(factor * vec.y, vec.x)
        mult, rest = divmod(vec.x, new_slope.denominator)
        # o denominador de C·λ divide s, que divide x
        if rest:
            raise InvariantViolation(f"stretch of {vec} by {factor} left remainder {rest}")
        pairs.append((new_slope, mult))
    return Bundle(tuple(HNFactor(s, m) for s, m in pairs))


def slice_bundle(bundle: Bundle, slope: SlopeLike, mode: str) -> Bundle:
    """
    Parte de B com inclinações satisfazendo a comparação com μ.

    Args:
        bundle: Fibrado de entrada
        slope: Limiar μ
        mode: Um de "<=", "<", ">=", ">" (ou "≤", "≥")

    Returns:
        Bundle: Soma dos fatores O(λ_i)^{m_i} com λ_i `mode` μ
    """
    try:
        compare = SLICE_MODES[mode]
    except KeyError:
        raise PreconditionError(f"unknown slice mode {mode!r}") from None
    threshold = Fraction(slope)
    return Bundle(tuple(f for f in bundle.factors if compare(f.slope, threshold)))


def deg_at_least(bundle: Bundle, slope: SlopeLike) -> int:
    """deg(B^{≥μ})."""
    return slice_bundle(bundle, slope, ">=").degree


def deg_nonneg(bundle: Bundle) -> int:
    return deg_at_least(bundle, 0)


# ===== Consultas no polígono =====


def slope_on_interval(bundle: Bundle, i: int) -> Fraction:
    """Inclinação de HN(B) no intervalo [i-1, i], com 1 ≤ i ≤ rank(B)."""
    if not 1 <= i <= bundle.rank:
        raise PreconditionError(
            f"interval index {i} out of range 1..{bundle.rank} for {bundle}"
        )
    covered = 0
    for factor in bundle.factors:
        covered += factor.rank
        if i <= covered:
            return factor.slope
    raise AssertionError("unreachable: cumulative ranks cover [0, rank]")


def interval_slopes(bundle: Bundle) -> List[Fraction]:
    """Inclinação em cada intervalo unitário, da esquerda para a direita."""
    out: List[Fraction] = []
    for factor in bundle.factors:
        out.extend([factor.slope] * factor.rank)
    return out


def is_semistable(bundle: Bundle) -> bool:
    return len(bundle.factors) <= 1


def vertex_set(bundle: Bundle) -> FrozenSet[int]:
    """{0, rank} ∪ postos acumulados dos blocos (polígono alinhado à esquerda)."""
    vertices = {0}
    covered = 0
    for factor in bundle.factors:
        covered += factor.rank
        vertices.add(covered)
    return frozenset(vertices)
