import math

import pytest

from quatkg.fourvector import ComplexFourVector, FourVector
from quatkg.freewave import LinearPhase, build_solution
from quatkg.gauge import solve_constant_quaternionic, solve_electric, solve_oscillating


@pytest.fixture
def sol_plain():
    """theta = 0: pure complex-limit mixing angle, unit mass."""
    return build_solution(1.0, LinearPhase(FourVector(), 0.2),
                          (0.5, 0.0, 0.0), (0.2, 0.0, 0.1), phi0=0.4)


@pytest.fixture
def sol_theta():
    """Spacelike spatial theta with a negative-energy j sector."""
    phase = LinearPhase(FourVector(0.0, 0.0, 0.3, 0.0), 0.2)
    return build_solution(1.0, phase, (0.5, 0.0, 0.0), (0.2, 0.0, 0.1),
                          sign1=-1, phi0=0.4)


@pytest.fixture
def sol_null():
    """Massless solution with null theta and both momenta on the light cone."""
    phase = LinearPhase(FourVector(0.3, 0.3, 0.0, 0.0), 0.1)
    return build_solution(0.0, phase, (1.0, 0.0, 0.0), (1.0, 0.0, 0.0))


@pytest.fixture
def sol_tilted():
    """theta with two spatial components, mixed branch signs."""
    phase = LinearPhase(FourVector(0.0, 0.2, 0.1, 0.0), -0.3)
    return build_solution(1.0, phase, (-0.1, 0.2, 0.0), (0.0, 0.0, 0.7),
                          sign0=-1, phi0=1.1)


@pytest.fixture
def sol_heavy():
    """m = 2 with generic spatial momenta, theta = 0."""
    return build_solution(2.0, LinearPhase(FourVector(), 0.9),
                          (0.3, 0.4, 0.5), (1.0, 1.0, 1.0), sign1=-1, phi0=-0.25)


@pytest.fixture
def gsol_electric():
    phase = LinearPhase(FourVector(0.0, 0.0, 0.3, 0.0), 0.2)
    return solve_electric(1.0, 0.4, phase, (0.5, 0.0, 0.0), (0.2, 0.0, 0.1), sign1=-1)


@pytest.fixture
def gsol_simple():
    b = ComplexFourVector(0j, 0j, 0.25 + 0j, 0j)
    return solve_constant_quaternionic(1.0, b, LinearPhase(), "simple",
                                       k0_spatial=(0.5, 0.0, 0.0),
                                       k1_spatial=(0.2, 0.0, 0.1), phi0=0.4)


@pytest.fixture
def gsol_cpair():
    phase = LinearPhase(FourVector(0.0, 0.0, 0.3, 0.0), 0.2)
    b = ComplexFourVector(0j, 0j, 0j, 0.2 + 0.1j)
    return solve_constant_quaternionic(1.0, b, phase, "conjugate_pair",
                                       k_spatial=(0.7, 0.0, 0.0))


@pytest.fixture
def gsol_temporal():
    phase = LinearPhase(FourVector(0.1, 0.5, 0.0, 0.0), 0.1)
    b = ComplexFourVector(0.3 + 0j, 0j, 0j, 0j)
    k0 = math.sqrt(1.21 / 0.84)
    return solve_constant_quaternionic(1.0, b, phase, "temporal",
                                       k_spatial=(-0.4 * k0, 0.0, 0.0))


@pytest.fixture
def gsol_oscillating():
    phase = LinearPhase(FourVector(0.0, 0.0, 0.3, 0.0), 0.2)
    return solve_oscillating(1.0, FourVector(0.0, 0.2, 0.0, 0.1), phase,
                             (0.6, 0.0, 0.0))


@pytest.fixture
def gsol_oscillating_lightcone():
    """Oscillating scenario tuned so the shared momentum is null while m = 1."""
    theta = FourVector(0.0, 0.0, 0.3, 0.0)
    w = FourVector(math.sqrt(2.0), 1.0, 0.0, 0.0)
    phase = LinearPhase(theta, 0.2)
    return solve_oscillating(1.0, theta - w, phase, (1.0, 0.0, 0.0))
