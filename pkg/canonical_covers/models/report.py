"""Data models for command requests and acceptance reports."""

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field


class CommandRequest(BaseModel):
    """A parsed command line."""

    command: str
    params: dict[str, Any] = Field(default_factory=dict)
    format: Literal["table", "json"] = "table"


class CriterionResult(BaseModel):
    """Outcome of one acceptance criterion."""

    model_config = ConfigDict(populate_by_name=True)

    passed: bool = Field(..., alias="pass")
    expected: Any = None
    actual: Any = None


class AcceptanceReport(BaseModel):
    """Acceptance results keyed by criterion ID."""

    results: dict[str, CriterionResult] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def to_json(self) -> dict[str, Any]:
        return {key: self.results[key].model_dump(by_alias=True, mode="json") for key in sorted(self.results)}
