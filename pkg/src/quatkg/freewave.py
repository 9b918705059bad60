"""Free quaternionic plane waves.

The wave function is

    Phi(x) = cos(Theta) e^{i k0.x} + sin(Theta) e^{i (k1.x + phi0)} j,

with the linear mixing phase Theta(x) = theta.x + Theta0.  Both momenta must
satisfy the mass-shell constraint (k + theta).(k + theta) = m^2 together with
the orthogonality constraint k.theta = 0, which combine into the dispersion
relation k0 = +-sqrt(m^2 + |kvec|^2 - theta.theta).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import BranchViolation, ConstraintIncompatible
from .fourvector import FourVector, dot
from .quaternion import Quaternion, from_symplectic

CONSTRAINT_TOL = 1e-10


@dataclass(frozen=True)
class LinearPhase:
    """Theta(x) = theta.x + theta0 (theta constant, angles in radians)."""

    theta: FourVector = field(default_factory=FourVector)
    theta0: float = 0.0

    def value(self, x: FourVector) -> float:
        return dot(self.theta, x) + self.theta0

    def invariant(self) -> float:
        return dot(self.theta, self.theta)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.theta.components())


@dataclass(frozen=True)
class PlaneWaveSolution:
    phase: LinearPhase
    k0vec: FourVector
    k1vec: FourVector
    phi0: float
    mass: float

    def momentum(self, a: int) -> FourVector:
        return self.k0vec if a == 0 else self.k1vec

    def shifted_momentum(self, a: int) -> FourVector:
        """p = k + theta, the four-momentum on the mass shell."""
        return self.momentum(a) + self.phase.theta

    def component_value(self, a: int, x: FourVector) -> complex:
        """phi^(a)(x), the complex exponential of the requested symplectic slot."""
        arg = dot(self.momentum(a), x)
        if a == 1:
            arg += self.phi0
        return cmath.exp(1j * arg)

    def evaluate(self, x: FourVector) -> Quaternion:
        th = self.phase.value(x)
        z0 = math.cos(th) * self.component_value(0, x)
        z1 = math.sin(th) * self.component_value(1, x)
        return from_symplectic(z0, z1)

    def constraint_residuals(self) -> dict:
        """Normalized residuals of the mass-shell (e11) and orthogonality (e12) constraints."""
        theta = self.phase.theta
        out = {}
        for a in (0, 1):
            k = self.momentum(a)
            p = self.shifted_momentum(a)
            scale = max(1.0, self.mass ** 2, abs(dot(k, k)))
            out[f"shell[{a}]"] = abs(dot(p, p) - self.mass ** 2) / scale
            out[f"orthogonality[{a}]"] = abs(dot(k, theta)) / scale
        return out

    def split_residuals(self) -> dict:
        """Residual coefficients of the two split equations applied to each component:
        (Box + m^2 - dTheta.dTheta) phi^(a) and (Box Theta + 2 dTheta.d) phi^(a)."""
        theta = self.phase.theta
        tt = self.phase.invariant()
        out = {}
        for a in (0, 1):
            k = self.momentum(a)
            out[f"wave[{a}]"] = abs(-dot(k, k) + self.mass ** 2 - tt)
            out[f"mixing[{a}]"] = abs(2.0 * dot(theta, k))
        return out

    def to_dict(self) -> dict:
        return {
            "m": self.mass,
            "theta": list(self.phase.theta.components()),
            "theta0": self.phase.theta0,
            "k0": list(self.k0vec.components()),
            "k1": list(self.k1vec.components()),
            "phi0": self.phi0,
        }

    @staticmethod
    def from_dict(doc: dict) -> "PlaneWaveSolution":
        return PlaneWaveSolution(
            phase=LinearPhase(FourVector(*doc["theta"]), doc["theta0"]),
            k0vec=FourVector(*doc["k0"]),
            k1vec=FourVector(*doc["k1"]),
            phi0=doc["phi0"],
            mass=doc["m"],
        )


def solve_k0(m: float, kvec_spatial, theta_invariant: float):
    """Roots of the dispersion relation: {+sqrt(D), -sqrt(D)} with
    D = m^2 + |kvec|^2 - theta.theta; {0.0} at D = 0; empty for D < 0."""
    if m < 0:
        raise ValueError("mass must be >= 0")
    d = m ** 2 + sum(c * c for c in kvec_spatial) - theta_invariant
    if d < 0:
        return set()
    if d == 0:
        return {0.0}
    root = math.sqrt(d)
    return {root, -root}


def _temporal_component(m, phase, kvec_spatial, sign, tol, label):
    """k0 from the dispersion relation, cross-checked against k.theta = 0."""
    theta = phase.theta
    tt = phase.invariant()
    d = m ** 2 + sum(c * c for c in kvec_spatial) - tt
    if d < 0:
        raise BranchViolation(
            f"evanescent branch for {label}: m^2 + |kvec|^2 - theta.theta = {d:.3e} < 0")
    k0 = sign * math.sqrt(d)
    k = FourVector.from_spatial(k0, kvec_spatial)
    scale = max(1.0, m ** 2, abs(dot(k, k)))
    residual = abs(dot(k, theta)) / scale
    if residual > tol:
        raise ConstraintIncompatible(f"e12 vs e13 ({label})", residual)
    return k


def build_solution(m: float, phase: LinearPhase, k0_spatial, k1_spatial,
                   sign0: int = 1, sign1: int = 1, phi0: float = 0.0,
                   tol: float = CONSTRAINT_TOL) -> PlaneWaveSolution:
    """Build a validated plane wave or raise naming the failing constraint."""
    if m < 0:
        raise ValueError("mass must be >= 0")
    if sign0 not in (1, -1) or sign1 not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    branch = m ** 2 - phase.invariant()
    if branch < -tol * max(1.0, m ** 2):
        raise BranchViolation(
            f"m^2 - theta.theta = {branch:.3e} < 0 (evanescent branch not supported)")
    k0 = _temporal_component(m, phase, k0_spatial, sign0, tol, "sector 0")
    k1 = _temporal_component(m, phase, k1_spatial, sign1, tol, "sector 1")
    return PlaneWaveSolution(phase=phase, k0vec=k0, k1vec=k1, phi0=phi0, mass=m)


@dataclass(frozen=True)
class LightConeReport:
    k0_null: bool
    k1_null: bool
    cross_null: bool
    massive_light_cone: bool

    @property
    def light_cone(self) -> bool:
        return self.k0_null and self.k1_null and self.cross_null

    def to_dict(self) -> dict:
        return {
            "k0_null": self.k0_null,
            "k1_null": self.k1_null,
            "cross_null": self.cross_null,
            "light_cone": self.light_cone,
            "massive_light_cone": self.massive_light_cone,
        }


def is_light_cone(sol: PlaneWaveSolution, tol: float = CONSTRAINT_TOL) -> LightConeReport:
    """Check the three null conditions k0.k0 = k1.k1 = k0.k1 = 0 plus the
    massive light-cone condition theta.theta = m^2 > 0."""
    k0, k1 = sol.k0vec, sol.k1vec
    scale = max(1.0, sol.mass ** 2,
                sum(c * c for c in k0.components()),
                sum(c * c for c in k1.components()))
    k0_null = abs(dot(k0, k0)) <= tol * scale
    k1_null = abs(dot(k1, k1)) <= tol * scale
    cross_null = abs(dot(k0, k1)) <= tol * scale
    massive = (k0_null and k1_null and cross_null and sol.mass > 0
               and abs(sol.phase.invariant() - sol.mass ** 2) <= tol * scale)
    return LightConeReport(k0_null, k1_null, cross_null, massive)
