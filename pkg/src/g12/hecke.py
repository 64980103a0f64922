"""Semisimplicity of category O via the factored Schur elements of the Hecke algebra.

The Schur elements ship as data (``data/schur_g12.json``): each is
``unit * v**v_power * prod (v + sign * xi**k) ** multiplicity`` with
``xi = exp(2 pi i / 24)``.  Category O at parameter c is semisimple exactly
when none of them vanishes at ``v = exp(pi i c)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .cyclotomic import CycNum, UnityRoot, root_of_unity
from .group import IRREP_LABELS

__all__ = [
    "SchurFactor",
    "SchurElement",
    "load_schur_elements",
    "dump_schur_elements",
    "schur_evaluate",
    "is_semisimple",
    "nonsemisimple_residues",
]

XI_CONDUCTOR = 24


@dataclass(frozen=True)
class SchurFactor:
    sign: int  # +1 for (v + xi^k), -1 for (v - xi^k)
    xi_exponent: int
    multiplicity: int

    @property
    def root(self) -> UnityRoot:
        """The root r of the factor, written (v - r)."""
        shift = Fraction(1, 2) if self.sign > 0 else Fraction(0)
        return UnityRoot(Fraction(self.xi_exponent, XI_CONDUCTOR) + shift)

    def to_json(self) -> dict:
        return {"multiplicity": self.multiplicity, "sign": self.sign,
                "xi_exponent": self.xi_exponent}


@dataclass(frozen=True)
class SchurElement:
    label: str
    unit: Fraction
    v_power: int
    factors: tuple[SchurFactor, ...]

    @classmethod
    def from_json(cls, data: dict) -> SchurElement:
        return cls(
            data["label"],
            Fraction(data["unit"]),
            int(data["v_power"]),
            tuple(SchurFactor(int(f["sign"]), int(f["xi_exponent"]), int(f["multiplicity"]))
                  for f in data["factors"]),
        )

    def to_json(self) -> dict:
        return {
            "factors": [f.to_json() for f in self.factors],
            "label": self.label,
            "unit": str(self.unit),
            "v_power": self.v_power,
        }

    def evaluate(self, v: CycNum) -> CycNum:
        value = CycNum(self.unit) * v ** self.v_power
        for f in self.factors:
            xi_k = CycNum.zeta(XI_CONDUCTOR, f.xi_exponent)
            value = value * (v + xi_k * f.sign) ** f.multiplicity
        return value

    def vanishes_at(self, v: UnityRoot) -> bool:
        """Zero test by comparing roots, without field arithmetic."""
        return any(f.root == v for f in self.factors)


def _data_text() -> str:
    return resources.files("g12").joinpath("data/schur_g12.json").read_text()


@lru_cache(maxsize=None)
def load_schur_elements() -> dict[str, SchurElement]:
    data = json.loads(_data_text())
    out = {rec["label"]: SchurElement.from_json(rec) for rec in data["elements"]}
    if set(out) != set(IRREP_LABELS):
        raise ValueError("Schur data must cover every irrep exactly once")
    return out


def dump_schur_elements(elements: dict[str, SchurElement]) -> str:
    """Serialize in the shipped file format."""
    recs = [elements[label].to_json() for label in IRREP_LABELS]
    return json.dumps({"elements": recs, "xi_conductor": XI_CONDUCTOR},
                      indent=2, sort_keys=True) + "\n"


def schur_evaluate(label: str, c) -> CycNum:
    """s_sigma at v = exp(pi i c)."""
    v = root_of_unity(Fraction(c) / 2)
    return load_schur_elements()[label].evaluate(v)


def is_semisimple(c) -> bool:
    return all(schur_evaluate(label, c) for label in IRREP_LABELS)


def nonsemisimple_residues() -> set[int]:
    """Residues m mod 12 for which c = m/12 is not semisimple (m = 1..24)."""
    return {m % 12 for m in range(1, 25) if not is_semisimple(Fraction(m, 12))}
