"""
Coupling file format:

    {"source": [[...], ...], "target": [[...], ...], "mass": [[...], ...]}
"""
import json
from pathlib import Path
from typing import List

import numpy as np
from pydantic import BaseModel, ValidationError

from motkit.errors import InvalidMeasureError
from motkit.models.coupling import Coupling


class CouplingFile(BaseModel):
    source: List[List[float]]
    target: List[List[float]]
    mass: List[List[float]]

    def to_coupling(self) -> Coupling:
        return Coupling(np.array(self.source), np.array(self.target), np.array(self.mass))

    @classmethod
    def from_coupling(cls, plan: Coupling) -> "CouplingFile":
        return cls(
            source=plan.source_atoms.tolist(),
            target=plan.target_atoms.tolist(),
            mass=plan.mass.tolist(),
        )


def parse_coupling(payload: dict) -> Coupling:
    try:
        return CouplingFile.model_validate(payload).to_coupling()
    except ValidationError as e:
        raise InvalidMeasureError(f"Invalid coupling payload: {e.errors()[0]['msg']}") from e


def load_coupling(path: str | Path) -> Coupling:
    with open(path, "r", encoding="utf-8") as f:
        try:
            payload = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidMeasureError(f"{path} is not valid JSON: {e}") from e
    return parse_coupling(payload)


def dump_coupling(plan: Coupling) -> str:
    return CouplingFile.from_coupling(plan).model_dump_json(indent=2)


def save_coupling(plan: Coupling, path: str | Path) -> None:
    Path(path).write_text(dump_coupling(plan) + "\n", encoding="utf-8")


class SolveReport(BaseModel):
    """Output of a single OT or MOT solve."""
    problem: str
    norm: str
    value: float
    coupling: CouplingFile

    @classmethod
    def build(cls, problem: str, norm: str, value: float, plan: Coupling) -> "SolveReport":
        return cls(problem=problem, norm=norm, value=value, coupling=CouplingFile.from_coupling(plan))
