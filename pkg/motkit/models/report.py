from typing import Any, Dict, List

from pydantic import BaseModel, Field


class ExperimentReport(BaseModel):
    """
    Structured record of one harness run.
    verdict is the conjunction of the rows' pass flags.
    """
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    verdict: bool
    runtime_ms: int = 0
    fingerprint: str = ""
