"""Pure imaginary quaternionic gauge potentials and the three coupled-solution scenarios.

The potential A^mu = a^mu i + b^mu j (a real, b complex) enters through the
generalized momentum Pi^mu Phi = (d^mu - A^mu) Phi i.  Each scenario reduces
the coupled component equations to a small closed-form constraint system:

  electric               a^mu = (a0,0,0,0), b = 0
  constant_quaternionic  a = 0, b constant (variants: simple / conjugate_pair / temporal)
  oscillating            a = 0, b^mu = beta^mu exp(2i k.x), phi^(0) = phi^(1)

Operators always multiply i on the right of the full quaternion value; the
j-sector coupling terms cancel incorrectly under left multiplication, which the
finite-difference oracle detects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BranchViolation, ConstraintIncompatible, TrivialSolution
from .fourvector import ComplexFourVector, FourVector, cdot, dot, hermitian_dot
from .freewave import CONSTRAINT_TOL, LinearPhase, PlaneWaveSolution
from .quaternion import Quaternion


@dataclass(frozen=True)
class Oscillation:
    """b^mu(x) = beta^mu exp(2i kref.x) with beta a real four-vector."""

    beta: FourVector
    kref: FourVector


@dataclass(frozen=True)
class GaugePotential:
    a: FourVector = field(default_factory=FourVector)
    b: ComplexFourVector = field(default_factory=ComplexFourVector)
    oscillation: Oscillation | None = None

    def b_at(self, x: FourVector) -> ComplexFourVector:
        if self.oscillation is None:
            return self.b
        osc = self.oscillation
        factor = complex(math.cos(2.0 * dot(osc.kref, x)),
                         math.sin(2.0 * dot(osc.kref, x)))
        return ComplexFourVector(*(factor * c for c in osc.beta.components()))

    def div_b_at(self, x: FourVector) -> complex:
        """d_mu b^mu; nonzero only for the oscillating form."""
        if self.oscillation is None:
            return 0j
        osc = self.oscillation
        factor = complex(math.cos(2.0 * dot(osc.kref, x)),
                         math.sin(2.0 * dot(osc.kref, x)))
        return 2j * dot(osc.beta, osc.kref) * factor

    def quaternion_at(self, mu: int, x: FourVector) -> Quaternion:
        """A^mu(x) as a pure imaginary quaternion a^mu i + b^mu j."""
        av = self.a.component(mu)
        bv = self.b_at(x).component(mu)
        return Quaternion(0.0, av, bv.real, bv.imag)

    def contracted_norm_sq(self, x: FourVector) -> float:
        """|A_mu|^2 = a.a + b.conj(b) under the metric (a real scalar)."""
        bx = self.b_at(x)
        return dot(self.a, self.a) + hermitian_dot(bx, bx).real

    def is_zero(self) -> bool:
        return (all(c == 0 for c in self.a.components()) and self.b.is_zero()
                and self.oscillation is None)

    def to_dict(self) -> dict:
        doc = {
            "a": list(self.a.components()),
            "b_re": [c.real for c in self.b.components()],
            "b_im": [c.imag for c in self.b.components()],
        }
        if self.oscillation is not None:
            doc["beta"] = list(self.oscillation.beta.components())
            doc["kref"] = list(self.oscillation.kref.components())
        return doc

    @staticmethod
    def from_dict(doc: dict) -> "GaugePotential":
        osc = None
        if "beta" in doc:
            osc = Oscillation(FourVector(*doc["beta"]), FourVector(*doc["kref"]))
        return GaugePotential(
            a=FourVector(*doc.get("a", (0, 0, 0, 0))),
            b=ComplexFourVector(*(complex(re, im) for re, im in
                                  zip(doc.get("b_re", (0,) * 4), doc.get("b_im", (0,) * 4)))),
            oscillation=osc,
        )


@dataclass(frozen=True)
class GaugeSolution:
    scenario: str
    sol: PlaneWaveSolution
    A: GaugePotential
    effective: tuple = ()
    massive_light_cone: bool = False

    def to_dict(self) -> dict:
        doc = self.sol.to_dict()
        doc["scenario"] = self.scenario
        doc["potential"] = self.A.to_dict()
        return doc

    @staticmethod
    def from_dict(doc: dict) -> "GaugeSolution":
        return GaugeSolution(
            scenario=doc["scenario"],
            sol=PlaneWaveSolution.from_dict(doc),
            A=GaugePotential.from_dict(doc["potential"]),
        )


def _check(label: str, residual: float, tol: float):
    if abs(residual) > tol:
        raise ConstraintIncompatible(label, abs(residual))


def solve_electric(m: float, a0: float, phase: LinearPhase, k0_spatial, k1_spatial,
                   sign0: int = 1, sign1: int = 1, phi0: float = 0.0,
                   tol: float = CONSTRAINT_TOL) -> GaugeSolution:
    """Pure complex electric potential A^mu = (a0 i, 0, 0, 0).

    Each sector obeys k.k = m^2 - a0^2 + 2 a0 k0 - theta.theta together with
    a0 theta0 = theta.k, i.e. k0 = a0 +- sqrt(m^2 + |kvec|^2 - theta.theta).
    """
    tt = phase.invariant()
    if m ** 2 - tt < -tol * max(1.0, m ** 2):
        raise BranchViolation(f"m^2 - theta.theta = {m**2 - tt:.3e} < 0")
    momenta = []
    for label, spatial, sign in (("0", k0_spatial, sign0), ("1", k1_spatial, sign1)):
        d = m ** 2 + sum(c * c for c in spatial) - tt
        if d < 0:
            raise BranchViolation(f"sector {label}: negative dispersion radicand {d:.3e}")
        k = FourVector.from_spatial(a0 + sign * math.sqrt(d), spatial)
        scale = max(1.0, m ** 2, abs(dot(k, k)))
        _check(f"g10 (sector {label})", (dot(phase.theta, k) - a0 * phase.theta.c0) / scale, tol)
        _check(f"g09 (sector {label})",
               (dot(k, k) - (m ** 2 - a0 ** 2 + 2 * a0 * k.c0 - tt)) / scale, tol)
        momenta.append(k)
    sol = PlaneWaveSolution(phase=phase, k0vec=momenta[0], k1vec=momenta[1],
                            phi0=phi0, mass=m)
    A = GaugePotential(a=FourVector(a0, 0.0, 0.0, 0.0))
    return GaugeSolution(scenario="electric", sol=sol, A=A)


def linear_momentum_residual(gsol: GaugeSolution, a: int) -> float:
    """Residual of |pvec|^2 = (p0 - V)^2 - m^2 for the temporal potential strength V."""
    if gsol.scenario == "electric":
        v = gsol.A.a.c0
    else:
        v = gsol.A.b.c0.real
    p = gsol.sol.shifted_momentum(a)
    return abs(p.spatial_norm_sq() - ((p.c0 - v) ** 2 - gsol.sol.mass ** 2))


def solve_constant_quaternionic(m: float, b: ComplexFourVector, phase: LinearPhase,
                                variant: str, k0_spatial=None, k1_spatial=None,
                                k_spatial=None, sign0: int = 1, sign1: int = 1,
                                phi0: float = 0.0,
                                tol: float = CONSTRAINT_TOL) -> GaugeSolution:
    """Constant pure quaternionic potential A^mu = b^mu j (a = 0).

    simple:         theta = 0; each sector has k.k = m^2 - |b|^2 and b.k = 0,
                    so the effective momenta q = k + b sit on the mass shell.
    conjugate_pair: phi^(1) = conj(phi^(0)), k^(1) = -k^(0); requires
                    theta.b = 0, theta.k = 0, b.k = 0 and
                    k.k = m^2 - theta.theta - |b|^2.
    temporal:       b^mu = (b0, 0, 0, 0) real with the conjugate-pair ansatz;
                    k.k = m^2 - theta.theta - b0^2 + 2 b0 theta0 and b0 k0 = theta.k.
    """
    theta = phase.theta
    tt = phase.invariant()
    bb = hermitian_dot(b, b).real
    scale0 = max(1.0, m ** 2, bb)

    if variant == "simple":
        if not phase.is_zero():
            raise ConstraintIncompatible("variant simple requires theta = 0",
                                         math.sqrt(sum(c * c for c in theta.components())))
        momenta = []
        for label, spatial, sign in (("0", k0_spatial, sign0), ("1", k1_spatial, sign1)):
            d = m ** 2 - bb + sum(c * c for c in spatial)
            if d < 0:
                raise BranchViolation(f"sector {label}: negative dispersion radicand {d:.3e}")
            k = FourVector.from_spatial(sign * math.sqrt(d), spatial)
            _check(f"b.k = 0 (sector {label})", abs(cdot(b, k)) / scale0, tol)
            momenta.append(k)
        sol = PlaneWaveSolution(phase=phase, k0vec=momenta[0], k1vec=momenta[1],
                                phi0=phi0, mass=m)
        effective = tuple(k.as_complex() + b for k in momenta)
        for label, q in zip("01", effective):
            _check(f"effective mass shell (sector {label})",
                   (hermitian_dot(q, q).real - m ** 2) / scale0, tol)
        return GaugeSolution(scenario="constant_quaternionic", sol=sol, A=GaugePotential(b=b),
                             effective=effective)

    if variant == "conjugate_pair":
        d = m ** 2 - tt - bb + sum(c * c for c in k_spatial)
        if d < 0:
            raise BranchViolation(f"negative dispersion radicand {d:.3e}")
        k = FourVector.from_spatial(sign0 * math.sqrt(d), k_spatial)
        scale = max(scale0, abs(dot(k, k)))
        _check("theta.b = 0", abs(cdot(b, theta)) / scale, tol)
        _check("theta.k = 0", abs(dot(theta, k)) / scale, tol)
        _check("b.k = 0", abs(cdot(b, k)) / scale, tol)
        sol = PlaneWaveSolution(phase=phase, k0vec=k, k1vec=-k, phi0=0.0, mass=m)
        q = k.as_complex() + b
        _check("effective mass shell", (hermitian_dot(q, q).real - (m ** 2 - tt)) / scale, tol)
        return GaugeSolution(scenario="constant_quaternionic", sol=sol, A=GaugePotential(b=b),
                             effective=(q,))

    if variant == "temporal":
        b0 = b.c0.real
        if b.c0.imag != 0 or any(c != 0 for c in b.components()[1:]):
            raise ValueError("variant temporal requires b^mu = (b0, 0, 0, 0) real")
        if phase.is_zero():
            raise TrivialSolution("theta = 0 only admits the trivial solution for a temporal b")
        d = m ** 2 - tt - b0 ** 2 + 2 * b0 * theta.c0 + sum(c * c for c in k_spatial)
        if d < 0:
            raise BranchViolation(f"negative dispersion radicand {d:.3e}")
        k = FourVector.from_spatial(sign0 * math.sqrt(d), k_spatial)
        scale = max(scale0, abs(dot(k, k)))
        _check("momentum constraint b0 k0 = theta.k",
               (b0 * k.c0 - dot(theta, k)) / scale, tol)
        sol = PlaneWaveSolution(phase=phase, k0vec=k, k1vec=-k, phi0=0.0, mass=m)
        return GaugeSolution(scenario="constant_quaternionic", sol=sol, A=GaugePotential(b=b),
                             effective=(k.as_complex() + b,))

    raise ValueError(f"unknown variant {variant!r}")


def solve_oscillating(m: float, beta: FourVector, phase: LinearPhase, k_spatial,
                      sign: int = 1, tol: float = CONSTRAINT_TOL) -> GaugeSolution:
    """Oscillating potential b^mu(x) = beta^mu exp(2i k.x) with phi^(0) = phi^(1).

    The shared momentum obeys theta.k = 0 and k.k = m^2 - (theta-beta).(theta-beta).
    Flags the massive light-cone configuration k.k = 0, (theta-beta)^2 = m^2.
    """
    theta = phase.theta
    w = theta - beta
    ww = dot(w, w)
    d = m ** 2 - ww + sum(c * c for c in k_spatial)
    if d < 0:
        raise BranchViolation(f"negative dispersion radicand {d:.3e}")
    k = FourVector.from_spatial(sign * math.sqrt(d), k_spatial)
    scale = max(1.0, m ** 2, abs(dot(k, k)))
    _check("theta.k = 0", dot(theta, k) / scale, tol)
    sol = PlaneWaveSolution(phase=phase, k0vec=k, k1vec=k, phi0=0.0, mass=m)
    A = GaugePotential(oscillation=Oscillation(beta=beta, kref=k))
    massive = (m > 0 and abs(dot(k, k)) <= tol * scale
               and abs(ww - m ** 2) <= tol * scale)
    return GaugeSolution(scenario="oscillating", sol=sol, A=A, massive_light_cone=massive)


def coupled_residuals(gsol: GaugeSolution, x: FourVector) -> tuple[float, float]:
    """Analytic residuals of the two coupled component equations at x.

    Returns (max over sectors of the generalized wave-equation residual,
             max over sectors of the mixing-equation residual); both vanish for
    a valid solution.  With A = 0 they reduce to the free split equations.
    """
    sol = gsol.sol
    A = gsol.A
    theta = sol.phase.theta
    tt = sol.phase.invariant()
    m2 = sol.mass ** 2
    a4 = A.a
    bx = A.b_at(x)
    divb = A.div_b_at(x)
    a_sq = A.contracted_norm_sq(x)
    r_wave = 0.0
    r_mix = 0.0
    for a in (0, 1):
        other = 1 - a
        ka = sol.momentum(a)
        kb = sol.momentum(other)
        phi_a = sol.component_value(a, x)
        conj_phi_b = sol.component_value(other, x).conjugate()
        r1 = ((-dot(ka, ka) + m2 - tt - a_sq + 2.0 * dot(a4, ka)) * phi_a
              + 2.0 * cdot(bx, theta) * conj_phi_b)
        r2 = (2j * (dot(theta, ka) - dot(a4, theta)) * phi_a
              - (divb - 2j * cdot(bx, kb)) * conj_phi_b)
        r_wave = max(r_wave, abs(r1))
        r_mix = max(r_mix, abs(r2))
    return (r_wave, r_mix)
