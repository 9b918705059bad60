"""Step-potential scattering along the 1-axis.

Region I (x <= 0) carries the incident and reflected waves, region II (x > 0)
the transmitted wave in a constant pure imaginary quaternionic potential.  Wave
function and derivative continuity cannot both be imposed here; only the
continuity of the probability four-current at x = 0 is enforced, which fixes

    |T|^2 = (1 + R)(1 + conj(R)),    1 - |R|^2 = beta |T|^2,

with beta = P_l/p_l = Q_l/q_l the ratio of transmitted to incident spatial
momenta (shared by the complex and the j sector).  beta < 0 is the Klein
regime: reflection coefficient above one, transmission coefficient negative,
with the sum still exactly one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import ConstraintIncompatible, DegenerateStep, ZeroIncidentFlux
from .fourvector import FourVector, dot
from .freewave import LinearPhase
from .gauge import GaugePotential
from .quaternion import Quaternion, conj as qconj, from_symplectic, right_mul_i


@dataclass(frozen=True)
class ScatteringSetup:
    mass: float
    p0: float
    p_l: float
    q0: float
    q_l: float
    P_l: float
    Q_l: float
    phase: LinearPhase = field(default_factory=LinearPhase)
    A: GaugePotential = field(default_factory=GaugePotential)
    tol: float = 1e-10

    def __post_init__(self):
        if self.p_l == 0:
            raise ZeroIncidentFlux("incident momentum p_l must be nonzero")
        mismatch = abs(self.P_l * self.q_l - self.Q_l * self.p_l)
        if self.q_l != 0 and mismatch > self.tol * abs(self.p_l * self.q_l):
            raise ConstraintIncompatible("shared beta (P_l/p_l vs Q_l/q_l)", mismatch)

    @property
    def beta(self) -> float:
        return self.P_l / self.p_l

    def p_momenta(self):
        """(incident, reflected, transmitted) complex-sector momenta."""
        return (FourVector(-self.p0, -self.p_l, 0.0, 0.0),
                FourVector(-self.p0, self.p_l, 0.0, 0.0),
                FourVector(-self.p0, -self.P_l, 0.0, 0.0))

    def q_momenta(self):
        """(incident, reflected, transmitted) j-sector momenta.  Note the
        opposite spatial sign convention relative to the p sector."""
        return (FourVector(-self.q0, self.q_l, 0.0, 0.0),
                FourVector(-self.q0, -self.q_l, 0.0, 0.0),
                FourVector(-self.q0, self.Q_l, 0.0, 0.0))

    def component_wave(self, s: int, x: FourVector) -> Quaternion:
        """Phi^(s)(x) = cos Theta e^{i p(s).x} + sin Theta e^{i q(s).x} j."""
        th = self.phase.value(x)
        p = self.p_momenta()[s]
        q = self.q_momenta()[s]
        z0 = math.cos(th) * cmath.exp(1j * dot(p, x))
        z1 = math.sin(th) * cmath.exp(1j * dot(q, x))
        return from_symplectic(z0, z1)


@dataclass(frozen=True)
class ScatteringResult:
    R: complex
    T: complex
    refl_coeff: float
    trans_coeff: float
    beta: float

    @property
    def klein_regime(self) -> bool:
        return self.beta < 0


def solve_matching(beta: float, phiT: float, delta: float) -> ScatteringResult:
    """Amplitudes from the current-matching conditions:

        T = (2 cos(phiT + delta) / (1 + beta)) e^{i phiT},
        R = (e^{2i(phiT + delta)} - beta) / (1 + beta),

    so that 1 + R = T e^{i delta} holds to round-off and
    refl + trans = |R|^2 + beta |T|^2 = 1 exactly.
    """
    if beta == -1.0:
        raise DegenerateStep("beta = -1 makes the matching system singular")
    alpha = phiT + delta
    t_mag = 2.0 * math.cos(alpha) / (1.0 + beta)
    T = t_mag * cmath.exp(1j * phiT)
    R = (cmath.exp(2j * alpha) - beta) / (1.0 + beta)
    return ScatteringResult(R=R, T=T, refl_coeff=abs(R) ** 2,
                            trans_coeff=beta * abs(T) ** 2, beta=beta)


def region_current_I(setup: ScatteringSetup, R: complex, x: FourVector) -> FourVector:
    """Full region-I four-current, interference terms included (x1 <= 0)."""
    m = setup.mass
    th = setup.phase.value(x)
    c2 = math.cos(th) ** 2
    s2 = math.sin(th) ** 2
    r_mag = abs(R)
    phi_r = cmath.phase(R) if R != 0 else 0.0
    p_in, p_re, _ = setup.p_momenta()
    q_in, q_re, _ = setup.q_momenta()
    r2 = r_mag ** 2
    direct = ((p_in + p_re.scale(r2)).scale(-c2)
              + (q_in + q_re.scale(r2)).scale(s2))
    p_cos = math.cos(dot(p_in - p_re, x) - phi_r)
    q_cos = math.cos(dot(q_in - q_re, x) - phi_r)
    cross = ((p_in + p_re).scale(-c2 * p_cos)
             + (q_in + q_re).scale(s2 * q_cos)).scale(r_mag)
    return (direct + cross).scale(1.0 / m)


def _potential_term(setup: ScatteringSetup, x: FourVector) -> FourVector:
    """-(1/2m)(A^mu X + X A^mu) with X = Phi^(2) i conj(Phi^(2)); real per component."""
    wave = setup.component_wave(2, x)
    X = right_mul_i(wave) * qconj(wave)
    comps = []
    for mu in range(4):
        a_mu = setup.A.quaternion_at(mu, x)
        comps.append(-(a_mu * X + X * a_mu).x0 / (2.0 * setup.mass))
    return FourVector(*comps)


def region_current_II(setup: ScatteringSetup, T: complex, x: FourVector) -> FourVector:
    """Region-II four-current (x1 > 0): |T|^2 plane part plus the potential term."""
    m = setup.mass
    th = setup.phase.value(x)
    c2 = math.cos(th) ** 2
    s2 = math.sin(th) ** 2
    _, _, p_tr = setup.p_momenta()
    _, _, q_tr = setup.q_momenta()
    plane = (p_tr.scale(-c2) + q_tr.scale(s2)).scale(abs(T) ** 2 / m)
    return plane + _potential_term(setup, x)


def coefficients(setup: ScatteringSetup, result: ScatteringResult):
    """Spatial flux triple (incident, reflected, transmitted) at the interface
    convention point x = 0, plus the derived (refl, trans) ratios."""
    c2 = math.cos(setup.phase.theta0) ** 2
    inc = setup.p_l * c2 / setup.mass
    if inc == 0:
        raise ZeroIncidentFlux("p_l cos^2 Theta0 = 0: coefficients undefined")
    ref = setup.p_l * abs(result.R) ** 2 * c2 / setup.mass
    trans = setup.P_l * abs(result.T) ** 2 * c2 / setup.mass
    return (inc, ref, trans), (ref / inc, trans / inc)
