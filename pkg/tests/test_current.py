import math

import numpy as np
import pytest

from oracles import current_fd_free, current_fd_gauge
from quatkg.current import (check_continuity, current_free, current_gauge, current_norm_sq,
                            sample_grid)
from quatkg.errors import ZeroMass
from quatkg.fdverify import convergence_order, random_events
from quatkg.fourvector import FourVector, dot
from quatkg.freewave import LinearPhase, build_solution


def fd_error(sol, x, h):
    exact = current_free(sol, x)
    approx = current_fd_free(sol.evaluate, sol.mass, x, h)
    return max(abs(a - b) for a, b in zip(exact.components(), approx.components()))


def test_density_closed_form(sol_theta):
    x = FourVector(0.3, -0.1, 0.6, 0.2)
    th = sol_theta.phase.value(x)
    expected = (-math.cos(th) ** 2 * sol_theta.k0vec.c0
                + math.sin(th) ** 2 * sol_theta.k1vec.c0)
    assert current_free(sol_theta, x).c0 == pytest.approx(expected)


def test_current_is_momentum_mix(sol_theta):
    x = FourVector(-0.2, 0.5, 0.1, -0.4)
    th = sol_theta.phase.value(x)
    expected = (sol_theta.k0vec.scale(-math.cos(th) ** 2)
                + sol_theta.k1vec.scale(math.sin(th) ** 2))
    got = current_free(sol_theta, x)
    for a, b in zip(got.components(), expected.components()):
        assert a == pytest.approx(b, abs=1e-15)


def test_matches_fd_oracle(sol_plain, sol_theta, sol_tilted, sol_heavy):
    rng = np.random.default_rng(7)
    for sol in (sol_plain, sol_theta, sol_tilted, sol_heavy):
        for x in random_events(rng, 10, 0.8):
            assert fd_error(sol, x, 1e-3) <= 1e-5


def test_fd_agreement_improves_at_second_order(sol_theta):
    points = random_events(np.random.default_rng(3), 5, 0.5)
    report = convergence_order(
        lambda h: max(fd_error(sol_theta, x, h) for x in points),
        [0.1, 0.05, 0.025])
    assert report.passes()


def test_continuity(sol_theta, sol_tilted):
    rng = np.random.default_rng(11)
    for sol in (sol_theta, sol_tilted):
        fn = lambda x: current_free(sol, x)
        for x in random_events(rng, 20, 1.0):
            assert abs(check_continuity(fn, x, 0.05)) <= 10.0 * 0.05 ** 2


def test_continuity_rejects_bad_h(sol_theta):
    with pytest.raises(ValueError):
        check_continuity(lambda x: current_free(sol_theta, x), FourVector(), 0.0)


def test_invariant_square_matches_direct_contraction(sol_theta, sol_null):
    rng = np.random.default_rng(5)
    for sol in (sol_theta, sol_null):
        unnorm = sol.mass == 0
        for x in random_events(rng, 15, 1.0):
            j = current_free(sol, x, unnormalized=unnorm)
            assert current_norm_sq(sol, x, unnormalized=unnorm) == pytest.approx(
                dot(j, j), abs=1e-13)


def test_null_momenta_give_null_current(sol_null):
    for x in random_events(np.random.default_rng(9), 10, 1.0):
        assert abs(current_norm_sq(sol_null, x, unnormalized=True)) <= 1e-14


def test_negative_energy_density_sign():
    ph = LinearPhase(FourVector(), 0.0)
    plus = build_solution(1.0, ph, (0.6, 0.0, 0.0), (0.6, 0.0, 0.0))
    minus = build_solution(1.0, ph, (0.6, 0.0, 0.0), (0.6, 0.0, 0.0), sign0=-1, sign1=-1)
    x = FourVector(0.4, 0.1, 0.0, 0.0)
    assert current_free(plus, x).c0 < 0
    assert current_free(minus, x).c0 == pytest.approx(-current_free(plus, x).c0)


def test_unnormalized_drops_mass_factor(sol_heavy):
    x = FourVector(0.2, 0.3, 0.4, 0.5)
    full = current_free(sol_heavy, x)
    raw = current_free(sol_heavy, x, unnormalized=True)
    assert raw == sol_heavy.mass * full


def test_zero_mass_requires_unnormalized(sol_null):
    x = FourVector(0.1, 0.2, 0.3, 0.4)
    with pytest.raises(ZeroMass):
        current_free(sol_null, x)
    with pytest.raises(ZeroMass):
        current_norm_sq(sol_null, x)
    current_free(sol_null, x, unnormalized=True)


@pytest.mark.parametrize("fixture", ["gsol_electric", "gsol_simple", "gsol_cpair",
                                     "gsol_temporal", "gsol_oscillating"])
def test_gauge_current_matches_fd_oracle(fixture, request):
    gsol = request.getfixturevalue(fixture)
    sol = gsol.sol
    for x in random_events(np.random.default_rng(13), 8, 0.7):
        exact = current_gauge(sol, gsol.A, x)
        approx = current_fd_gauge(sol.evaluate, gsol.A, sol.mass, x, 1e-3)
        err = max(abs(a - b) for a, b in zip(exact.components(), approx.components()))
        assert err <= 1e-5, f"{fixture}: {err}"


@pytest.mark.parametrize("fixture", ["gsol_electric", "gsol_simple", "gsol_cpair",
                                     "gsol_temporal", "gsol_oscillating"])
def test_gauge_current_conserved(fixture, request):
    gsol = request.getfixturevalue(fixture)
    fn = lambda x: current_gauge(gsol.sol, gsol.A, x)
    for x in random_events(np.random.default_rng(17), 10, 0.8):
        assert abs(check_continuity(fn, x, 0.02)) <= 10.0 * 0.02 ** 2


def test_oscillating_current_reduces_to_cos2theta_form(gsol_oscillating):
    sol = gsol_oscillating.sol
    k = sol.k0vec
    for x in random_events(np.random.default_rng(19), 6, 1.0):
        th = sol.phase.value(x)
        expected = k.scale(-math.cos(2.0 * th) / sol.mass)
        got = current_gauge(sol, gsol_oscillating.A, x)
        for a, b in zip(got.components(), expected.components()):
            assert a == pytest.approx(b, abs=1e-13)


def test_sample_grid_shapes(sol_theta):
    events = random_events(np.random.default_rng(23), 4, 1.0)
    samples = sample_grid(lambda x: current_free(sol_theta, x), events)
    assert len(samples) == 4
    assert samples[0].x == events[0]
    assert samples[0].rho == samples[0].J.c0
