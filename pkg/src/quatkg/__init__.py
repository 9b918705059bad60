"""Quaternionic Klein-Gordon toolkit.

Constructs and validates quaternionic plane-wave solutions (free, gauge-coupled,
and step-potential scattering) and verifies every closed-form identity against
an independent finite-difference oracle.
"""

from . import current, errors, fdverify, fourvector, freewave, gauge, quaternion, scattering

__all__ = [
    "current",
    "errors",
    "fdverify",
    "fourvector",
    "freewave",
    "gauge",
    "quaternion",
    "scattering",
]

__version__ = "0.1.0"
