"""Minkowski four-vectors with metric diag(+1, -1, -1, -1).

Components are stored contravariant (c0 = time, c1..c3 = space); all
contractions apply the metric signs internally.  The signature is the only one
compatible with the dispersion relation k0 = +-sqrt(m^2 + |k|^2 - theta.theta).
"""

from __future__ import annotations

from dataclasses import dataclass

METRIC = (1.0, -1.0, -1.0, -1.0)

NULL_TOL = 1e-10


@dataclass(frozen=True)
class FourVector:
    c0: float = 0.0
    c1: float = 0.0
    c2: float = 0.0
    c3: float = 0.0

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.c0 + other.c0, self.c1 + other.c1,
                          self.c2 + other.c2, self.c3 + other.c3)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.c0 - other.c0, self.c1 - other.c1,
                          self.c2 - other.c2, self.c3 - other.c3)

    def __neg__(self) -> "FourVector":
        return self.scale(-1.0)

    def scale(self, s: float) -> "FourVector":
        return FourVector(s * self.c0, s * self.c1, s * self.c2, s * self.c3)

    def __rmul__(self, s: float) -> "FourVector":
        return self.scale(s)

    def components(self):
        return (self.c0, self.c1, self.c2, self.c3)

    def component(self, mu: int) -> float:
        return self.components()[mu]

    def spatial(self):
        return (self.c1, self.c2, self.c3)

    def spatial_norm_sq(self) -> float:
        return self.c1 * self.c1 + self.c2 * self.c2 + self.c3 * self.c3

    def shifted(self, mu: int, delta: float) -> "FourVector":
        comps = list(self.components())
        comps[mu] += delta
        return FourVector(*comps)

    def as_complex(self) -> "ComplexFourVector":
        return ComplexFourVector(*(complex(c) for c in self.components()))

    @staticmethod
    def from_spatial(c0: float, spatial) -> "FourVector":
        return FourVector(c0, *spatial)


@dataclass(frozen=True)
class ComplexFourVector:
    c0: complex = 0j
    c1: complex = 0j
    c2: complex = 0j
    c3: complex = 0j

    def __add__(self, other) -> "ComplexFourVector":
        return ComplexFourVector(self.c0 + other.c0, self.c1 + other.c1,
                                 self.c2 + other.c2, self.c3 + other.c3)

    def components(self):
        return (self.c0, self.c1, self.c2, self.c3)

    def component(self, mu: int) -> complex:
        return self.components()[mu]

    def conjugate(self) -> "ComplexFourVector":
        return ComplexFourVector(*(c.conjugate() for c in self.components()))

    def real(self) -> FourVector:
        return FourVector(*(c.real for c in self.components()))

    def imag(self) -> FourVector:
        return FourVector(*(c.imag for c in self.components()))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components())


def dot(u: FourVector, v: FourVector) -> float:
    """u.v = u0 v0 - u1 v1 - u2 v2 - u3 v3."""
    return (u.c0 * v.c0 - u.c1 * v.c1 - u.c2 * v.c2 - u.c3 * v.c3)


def cdot(u, v) -> complex:
    """Bilinear (unconjugated) metric contraction; accepts mixed real/complex vectors."""
    uc = u.components()
    vc = v.components()
    return sum(m * a * b for m, a, b in zip(METRIC, uc, vc))


def hermitian_dot(u: ComplexFourVector, v: ComplexFourVector) -> complex:
    """conj(u).v with the same metric signs; hermitian_dot(v, v) is real."""
    return sum(m * a.conjugate() * b
               for m, a, b in zip(METRIC, u.components(), v.components()))


def classify(v: FourVector, tol: float = NULL_TOL) -> str:
    """'timelike', 'null', or 'spacelike'; null within tol relative to the component scale."""
    if tol < 0:
        raise ValueError("tol must be >= 0")
    s = dot(v, v)
    scale = max(1.0, sum(c * c for c in v.components()))
    if abs(s) <= tol * scale:
        return "null"
    return "timelike" if s > 0 else "spacelike"
