"""Result records for inequality, identity, and sharpness runs.

Every record serializes to plain JSON-compatible dicts with deterministic
key order and no environment-dependent content, so that two runs with the
same configuration and seed produce byte-identical report files.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "InequalityReport",
    "IdentityReport",
    "SharpnessResult",
    "SuperweightParams",
    "jsonable",
]


def jsonable(obj):
    """Recursively convert numpy scalars/arrays and dataclass records to JSON types."""
    if isinstance(obj, (InequalityReport, IdentityReport, SharpnessResult, SuperweightParams)):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, complex):
        if obj.imag == 0.0:
            return obj.real
        return {"re": obj.real, "im": obj.imag}
    return obj


@dataclass
class InequalityReport:
    """One inequality evaluation: lhs vs a named sum of rhs terms."""

    theorem_id: str
    lhs: float
    rhs_terms: dict  # name -> value, insertion-ordered; first entry is the main term
    sharp_constant: float
    params: dict = field(default_factory=dict)
    resolution: dict = field(default_factory=dict)
    ratio_override: float | None = None

    @property
    def margin(self) -> float:
        return self.lhs - sum(self.rhs_terms.values())

    @property
    def ratio(self) -> float:
        """lhs over the main rhs term with its constant divided out.

        Verifiers whose constant sits on the lhs supply ratio_override so the
        quantity still tends to the constant at extremality.
        """
        if self.ratio_override is not None:
            return self.ratio_override
        if not self.rhs_terms or self.sharp_constant == 0.0:
            return float("nan")
        main = next(iter(self.rhs_terms.values()))
        bare = main / self.sharp_constant
        return self.lhs / bare if bare != 0.0 else float("inf")

    def passes(self, tol: float) -> bool:
        return self.margin >= -tol

    def tolerance(self, rel: float = 1e-9) -> float:
        return rel * (abs(self.lhs) + sum(abs(v) for v in self.rhs_terms.values()))

    def to_dict(self) -> dict:
        return {
            "kind": "inequality",
            "theorem_id": self.theorem_id,
            "lhs": jsonable(self.lhs),
            "rhs_terms": jsonable(self.rhs_terms),
            "margin": jsonable(self.margin),
            "sharp_constant": jsonable(self.sharp_constant),
            "ratio": jsonable(self.ratio),
            "params": jsonable(self.params),
            "resolution": jsonable(self.resolution),
        }


@dataclass
class IdentityReport:
    """One exact-identity evaluation: lhs and rhs with their relative error."""

    identity_id: str
    lhs: float
    rhs: float
    params: dict = field(default_factory=dict)
    resolution: dict = field(default_factory=dict)

    @property
    def rel_err(self) -> float:
        scale = max(abs(self.lhs), abs(self.rhs), 1e-300)
        return abs(self.lhs - self.rhs) / scale

    def to_dict(self) -> dict:
        return {
            "kind": "identity",
            "identity_id": self.identity_id,
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "rel_err": jsonable(self.rel_err),
            "params": jsonable(self.params),
            "resolution": jsonable(self.resolution),
        }


@dataclass
class SharpnessResult:
    """Rayleigh-quotient schedule for one constant: quotients vs epsilon."""

    theorem_id: str
    schedule: list  # [(epsilon, quotient), ...] in the order run
    sharp_constant: float
    params: dict = field(default_factory=dict)

    @property
    def best_quotient(self) -> float:
        return min(q for _, q in self.schedule)

    @property
    def gap(self) -> float:
        return (self.best_quotient - self.sharp_constant) / self.sharp_constant

    def to_dict(self) -> dict:
        return {
            "kind": "sharpness",
            "theorem_id": self.theorem_id,
            "schedule": [[jsonable(e), jsonable(q)] for e, q in self.schedule],
            "best_quotient": jsonable(self.best_quotient),
            "sharp_constant": jsonable(self.sharp_constant),
            "gap": jsonable(self.gap),
            "params": jsonable(self.params),
        }


@dataclass(frozen=True)
class SuperweightParams:
    """Parameters of the (a + b r^theta2)^theta3 / r^theta4-type weights."""

    a: float
    b: float
    theta2: float
    theta3: float
    theta4: float
    p: float = 2.0
    theta1: float = 0.0

    def __post_init__(self):
        from .errors import AdmissibilityError

        if not (self.a > 0.0 and self.b > 0.0):
            raise AdmissibilityError("superweight needs a > 0 and b > 0")
        if not (self.theta2 * self.theta3 < 0.0):
            raise AdmissibilityError("superweight needs theta2*theta3 < 0")

    def to_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b, "theta2": self.theta2,
            "theta3": self.theta3, "theta4": self.theta4,
            "p": self.p, "theta1": self.theta1,
        }
