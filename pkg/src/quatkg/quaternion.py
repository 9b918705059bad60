"""Quaternion arithmetic in extended, symplectic, and polar representations.

A quaternion is stored as four real double-precision coefficients of
(1, i, j, k); the symplectic pair (z0, z1) with q = z0 + z1 j and the polar
form |q| (cos(theta) e^{i phi} + sin(theta) e^{i xi} j) are conversions, not
separate storage.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateInput


@dataclass(frozen=True)
class Quaternion:
    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.x0 - other.x0, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, complex):
            return mul(self, from_complex(other))
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, complex):
            return mul(from_complex(other), self)
        return self.scale(other)

    def scale(self, s: float) -> "Quaternion":
        return Quaternion(s * self.x0, s * self.x1, s * self.x2, s * self.x3)

    def __truediv__(self, s: float) -> "Quaternion":
        return self.scale(1.0 / s)

    def __abs__(self) -> float:
        return math.sqrt(norm_sq(self))

    def components(self):
        return (self.x0, self.x1, self.x2, self.x3)

    def symplectic(self) -> "SymplecticPair":
        return SymplecticPair(complex(self.x0, self.x1), complex(self.x2, self.x3))


@dataclass(frozen=True)
class SymplecticPair:
    """Complex pair (z0, z1) with q = z0 + z1 j."""

    z0: complex
    z1: complex

    def quaternion(self) -> Quaternion:
        return Quaternion(self.z0.real, self.z0.imag, self.z1.real, self.z1.imag)

    def conj(self) -> "SymplecticPair":
        return SymplecticPair(self.z0.conjugate(), -self.z1)


@dataclass(frozen=True)
class PolarForm:
    """|q|, theta in [0, pi/2], phi and xi in (-pi, pi]."""

    magnitude: float
    theta: float
    phi: float
    xi: float


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product a*b (non-commutative: ij = k = -ji)."""
    return Quaternion(
        a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
        a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
        a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
        a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
    )


def conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.x0, -q.x1, -q.x2, -q.x3)


def norm_sq(q: Quaternion) -> float:
    return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3


def right_mul_i(q: Quaternion) -> Quaternion:
    """q*i.  In symplectic form (z0, z1) -> (i z0, -i z1); the sign split in the
    second slot is what gives the two symplectic components opposite-sign momenta."""
    return Quaternion(-q.x1, q.x0, q.x3, -q.x2)


def left_mul_i(q: Quaternion) -> Quaternion:
    """i*q, i.e. (z0, z1) -> (i z0, i z1).  Not the momentum-operator convention;
    kept as the counterpart of right_mul_i for regression tests."""
    return Quaternion(-q.x1, q.x0, -q.x3, q.x2)


def from_symplectic(z0: complex, z1: complex) -> Quaternion:
    return Quaternion(z0.real, z0.imag, z1.real, z1.imag)


def from_complex(z: complex) -> Quaternion:
    return Quaternion(z.real, z.imag)


def to_polar(q: Quaternion) -> PolarForm:
    """Polar decomposition; degenerate angles are canonicalized to 0.

    Raises DegenerateInput for the zero quaternion.
    """
    pair = q.symplectic()
    r0 = abs(pair.z0)
    r1 = abs(pair.z1)
    magnitude = math.hypot(r0, r1)
    if magnitude == 0.0:
        raise DegenerateInput("polar angles of the zero quaternion are undefined")
    theta = math.atan2(r1, r0)
    phi = cmath.phase(pair.z0) if r0 > 0.0 else 0.0
    xi = cmath.phase(pair.z1) if r1 > 0.0 else 0.0
    return PolarForm(magnitude, theta, phi, xi)


def from_polar(p: PolarForm) -> Quaternion:
    z0 = p.magnitude * math.cos(p.theta) * cmath.exp(1j * p.phi)
    z1 = p.magnitude * math.sin(p.theta) * cmath.exp(1j * p.xi)
    return from_symplectic(z0, z1)
