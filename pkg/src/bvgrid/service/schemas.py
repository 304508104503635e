"""Request and response models for the HTTP service.

Function payloads and family configs are passed through as JSON objects and
validated by the core loaders, so the file format and the wire format stay
identical.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class VariationRequest(BaseModel):
    function: dict[str, Any]
    family_config: dict[str, Any]
    method: str = "auto"


class DistanceRequest(BaseModel):
    function_a: dict[str, Any]
    function_b: dict[str, Any]
    family_config: dict[str, Any]
    method: str = "auto"


class VerifyRequest(BaseModel):
    suite: str
    seed: int
    count: int = Field(ge=1)


class PrecompactRequest(BaseModel):
    family: dict[str, Any]
    epsilon: float = Field(gt=0)
    family_config: dict[str, Any]


class ReportResponse(BaseModel):
    command: str
    tool_version: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    status: str


class HealthResponse(BaseModel):
    status: str
    tool_version: str
    error: Optional[str] = None
