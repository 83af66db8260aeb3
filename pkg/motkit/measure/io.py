"""
Measure file format:

    {"dim": d, "atoms": [{"p": [x1, ..., xd], "w": weight}, ...]}

Weights must sum to 1 within 1e-9 on load.
"""
import json
from pathlib import Path
from typing import List

from pydantic import BaseModel, ValidationError, model_validator

from motkit.errors import InvalidMeasureError
from motkit.measure.core import make_measure
from motkit.models.measure import WEIGHT_SUM_TOL, DiscreteMeasure


class AtomModel(BaseModel):
    p: List[float]
    w: float


class MeasureFile(BaseModel):
    dim: int
    atoms: List[AtomModel]

    @model_validator(mode="after")
    def _check_atoms(self):
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        if not self.atoms:
            raise ValueError("a measure file needs at least one atom")
        for atom in self.atoms:
            if len(atom.p) != self.dim:
                raise ValueError(f"atom {atom.p} does not have dimension {self.dim}")
            if atom.w < 0:
                raise ValueError(f"negative weight {atom.w}")
        total = sum(atom.w for atom in self.atoms)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"weights sum to {total}, expected 1")
        return self

    def to_measure(self) -> DiscreteMeasure:
        return make_measure([a.p for a in self.atoms], [a.w for a in self.atoms])

    @classmethod
    def from_measure(cls, mu: DiscreteMeasure) -> "MeasureFile":
        return cls(
            dim=mu.dim,
            atoms=[AtomModel(p=[float(c) for c in p], w=w) for p, w in mu.atoms()],
        )


def parse_measure(payload: dict) -> DiscreteMeasure:
    try:
        return MeasureFile.model_validate(payload).to_measure()
    except ValidationError as e:
        raise InvalidMeasureError(f"Invalid measure payload: {e.errors()[0]['msg']}") from e


def load_measure(path: str | Path) -> DiscreteMeasure:
    with open(path, "r", encoding="utf-8") as f:
        try:
            payload = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidMeasureError(f"{path} is not valid JSON: {e}") from e
    return parse_measure(payload)


def dump_measure(mu: DiscreteMeasure) -> str:
    return MeasureFile.from_measure(mu).model_dump_json(indent=2)


def save_measure(mu: DiscreteMeasure, path: str | Path) -> None:
    Path(path).write_text(dump_measure(mu) + "\n", encoding="utf-8")
