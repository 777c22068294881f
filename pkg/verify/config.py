#!/usr/bin/env python3
"""
Verify Configuration
--------------------
Configurações do verificador lidas do ambiente (prefixo HNFF_) ou do
arquivo .env, e os limites da enumeração exaustiva.
"""

import logging
from functools import lru_cache
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class HnffSettings(BaseSettings):
    """
    Variáveis de ambiente reconhecidas:
        HNFF_LOG_LEVEL, HNFF_LOG_FILE, HNFF_MAX_JOBS, HNFF_FAILURE_LIMIT,
        HNFF_SVG_SCALE, HNFF_MAX_LITERAL_DIGITS, HNFF_TRIPLE_MAX_RANK,
        HNFF_TRIPLE_MAX_ABS_SLOPE
    """

    model_config = SettingsConfigDict(env_prefix="HNFF_", env_file=".env", extra="ignore")

    log_level: str = "WARNING"
    log_file: Optional[str] = None
    max_jobs: int = 1
    failure_limit: int = 20
    svg_scale: int = 40
    max_literal_digits: int = 64
    triple_max_rank: int = 4
    triple_max_abs_slope: int = 2

    @field_validator(
        "max_jobs",
        "failure_limit",
        "svg_scale",
        "max_literal_digits",
        "triple_max_rank",
        mode="before",
    )
    @classmethod
    def positive_or_default(cls, value: Any, info: ValidationInfo) -> Any:
        default = cls.model_fields[info.field_name].default
        try:
            number = int(value)
            if number < 1:
                raise ValueError
        except (TypeError, ValueError):
            logger.warning(
                "Invalid HNFF_%s=%r, falling back to %s",
                info.field_name.upper(),
                value,
                default,
            )
            return default
        return number

    @field_validator("triple_max_abs_slope", mode="before")
    @classmethod
    def nonnegative_slope(cls, value: Any) -> Any:
        try:
            number = int(value)
            if number < 0:
                raise ValueError
        except (TypeError, ValueError):
            logger.warning("Invalid HNFF_TRIPLE_MAX_ABS_SLOPE=%r, falling back to 2", value)
            return 2
        return number

    @field_validator("log_level", mode="before")
    @classmethod
    def upper_level(cls, value: Any) -> Any:
        return str(value).upper()


@lru_cache(maxsize=1)
def get_settings() -> HnffSettings:
    return HnffSettings()


class EnumBounds(BaseModel):
    """
    Limites da enumeração.

    Cada fator estável O(r/s) tem s ≤ max_denominator (e s ≤ max_rank) e
    |r| ≤ max_abs_degree; o fibrado inteiro tem posto ≤ max_rank e
    |grau| ≤ max_abs_degree. max_abs_slope, se dado, limita |λ| de cada fator.
    """

    model_config = ConfigDict(frozen=True)

    max_rank: int = Field(4, ge=1, description="Maximum total rank")
    max_abs_degree: int = Field(4, ge=0, description="Bound on |degree| of pieces and total")
    max_denominator: int = Field(2, ge=1, description="Maximum slope denominator")
    include_zero: bool = Field(False, description="Emit the zero bundle first")
    max_abs_slope: Optional[int] = Field(None, ge=0, description="Optional bound on |slope|")


def triple_bounds(
    max_rank: Optional[int] = None, max_abs_slope: Optional[int] = None
) -> EnumBounds:
    """Domínio de inclinações inteiras usado nas propriedades sobre triplas."""
    settings = get_settings()
    rank = max_rank or settings.triple_max_rank
    slope = settings.triple_max_abs_slope if max_abs_slope is None else max_abs_slope
    return EnumBounds(
        max_rank=rank,
        max_abs_degree=rank * slope,
        max_denominator=1,
        include_zero=True,
        max_abs_slope=slope,
    )
