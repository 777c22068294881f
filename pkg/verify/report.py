#!/usr/bin/env python3
"""
Verify Report
-------------
Modelos do relatório da verificação exaustiva e sua fusão associativa.
"""

from typing import Dict, List

from pydantic import BaseModel, Field


class FailureRecord(BaseModel):
    inputs: List[str] = Field(description="Canonical text of each input bundle")
    detail: str = Field(description="What went wrong on this instance")


class PropertyResult(BaseModel):
    checked: int = Field(0, ge=0, description="Instances where the property applied")
    failures: List[FailureRecord] = Field(default_factory=list)

    def merge(self, other: "PropertyResult") -> "PropertyResult":
        return PropertyResult(
            checked=self.checked + other.checked,
            failures=self.failures + other.failures,
        )

    def capped(self, limit: int) -> "PropertyResult":
        return PropertyResult(checked=self.checked, failures=self.failures[:limit])


class VerifyReport(BaseModel):
    properties: Dict[str, PropertyResult] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(not result.failures for result in self.properties.values())

    @property
    def failing(self) -> List[str]:
        return [name for name, result in self.properties.items() if result.failures]
