#!/usr/bin/env python3
"""
JSON Schemas
------------
Modelos pydantic da forma JSON estável de Bundle, ReductionTrace e
VerifyReport, com validação via jsonschema e serialização com chaves
ordenadas (fixtures comparáveis byte a byte).
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Type

import jsonschema
from pydantic import BaseModel, Field

from bundles.hn_core import Bundle, HNFactor
from criteria.reduction import ReductionTrace
from verify.report import VerifyReport


# ===== BUNDLE =====


class SlopeModel(BaseModel):
    num: int = Field(description="Numerator in lowest terms")
    den: int = Field(ge=1, description="Positive denominator")


class FactorModel(BaseModel):
    slope: SlopeModel
    mult: int = Field(ge=1, description="Multiplicity of O(slope)")


class BundleModel(BaseModel):
    factors: List[FactorModel] = Field(
        default_factory=list, description="HN factors by decreasing slope"
    )

    @classmethod
    def from_bundle(cls, bundle: Bundle) -> "BundleModel":
        return cls(
            factors=[
                FactorModel(
                    slope=SlopeModel(num=f.slope.numerator, den=f.slope.denominator),
                    mult=f.mult,
                )
                for f in bundle.factors
            ]
        )

    def to_bundle(self) -> Bundle:
        return Bundle(
            tuple(HNFactor(Fraction(f.slope.num, f.slope.den), f.mult) for f in self.factors)
        )


# ===== REDUCTION TRACE =====


class StepModel(BaseModel):
    f: BundleModel
    u: BundleModel
    c: int


class TraceModel(BaseModel):
    steps: List[StepModel] = Field(default_factory=list)
    terminated: bool

    @classmethod
    def from_trace(cls, trace: ReductionTrace) -> "TraceModel":
        return cls(
            steps=[
                StepModel(
                    f=BundleModel.from_bundle(step.f),
                    u=BundleModel.from_bundle(step.common_u),
                    c=step.c,
                )
                for step in trace.steps
            ],
            terminated=trace.terminated,
        )


# ===== SERIALIZATION =====


def dump_json(model: BaseModel) -> str:
    """JSON com chaves ordenadas e nova linha final."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def validate_payload(payload: Dict[str, Any], model: Type[BaseModel]) -> None:
    """
    Valida um documento JSON já decodificado contra o schema do modelo.

    Raises:
        jsonschema.ValidationError: Documento fora do schema
    """
    jsonschema.validate(payload, model.model_json_schema())


def get_schema_for_payload(kind: str) -> Type[BaseModel]:
    schemas = {
        "bundle": BundleModel,
        "trace": TraceModel,
        "report": VerifyReport,
    }
    return schemas[kind]
