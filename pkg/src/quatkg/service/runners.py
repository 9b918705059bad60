"""Service-layer operations.

Plain functions from request models to response models; the FastAPI routes and
the CLI are both thin clients of this module.  All randomness is seeded, so a
given request always produces byte-identical CSV/JSON output.
"""

from __future__ import annotations

import cmath
import io

import numpy as np

from .. import scattering
from ..current import check_continuity, current_free, current_gauge
from ..fdverify import GridSpec, gauge_kg_residual, kg_residual, random_events, residual_sweep
from ..fourvector import ComplexFourVector, FourVector
from ..freewave import LinearPhase, PlaneWaveSolution, build_solution, is_light_cone
from ..gauge import (GaugePotential, coupled_residuals, solve_constant_quaternionic,
                     solve_electric, solve_oscillating)
from . import schemas


def _fmt(value: float) -> str:
    """Shortest round-trip decimal form; deterministic across runs."""
    return repr(float(value))


def _phase(req) -> LinearPhase:
    return LinearPhase(FourVector(*req.theta), req.theta0)


def _solution_doc(sol: PlaneWaveSolution, scenario: str = "free",
                  potential: GaugePotential | None = None) -> schemas.SolutionDocument:
    doc = sol.to_dict()
    pot = None
    if potential is not None and not potential.is_zero():
        pot = schemas.PotentialDocument(**potential.to_dict())
    return schemas.SolutionDocument(
        scenario=scenario, m=doc["m"], theta=doc["theta"], theta0=doc["theta0"],
        k0=doc["k0"], k1=doc["k1"], phi0=doc["phi0"], potential=pot)


def solution_objects(doc: schemas.SolutionDocument):
    """Rebuild (PlaneWaveSolution, GaugePotential | None) from a serialized solution."""
    sol = PlaneWaveSolution.from_dict(doc.model_dump())
    if doc.potential is None:
        return sol, None
    return sol, GaugePotential.from_dict(doc.potential.model_dump(exclude_none=True))


def solve(req) -> schemas.SolveResponse:
    phase = _phase(req)
    if req.kind == "free":
        sol = build_solution(req.m, phase, req.k0_spatial, req.k1_spatial,
                             req.sign0, req.sign1, req.phi0, req.tol)
        diagnostics = dict(sol.constraint_residuals())
        diagnostics.update(sol.split_residuals())
        return schemas.SolveResponse(solution=_solution_doc(sol), diagnostics=diagnostics)

    if req.kind == "electric":
        gsol = solve_electric(req.m, req.a0, phase, req.k0_spatial, req.k1_spatial,
                              req.sign0, req.sign1, req.phi0, req.tol)
    elif req.kind == "constant_quaternionic":
        b = ComplexFourVector(*(complex(re, im) for re, im in zip(req.b_re, req.b_im)))
        gsol = solve_constant_quaternionic(
            req.m, b, phase, req.variant, k0_spatial=req.k0_spatial,
            k1_spatial=req.k1_spatial, k_spatial=req.k_spatial,
            sign0=req.sign0, sign1=req.sign1, phi0=req.phi0, tol=req.tol)
    else:
        gsol = solve_oscillating(req.m, FourVector(*req.beta), phase, req.k_spatial,
                                 req.sign, req.tol)
    wave_res, mix_res = coupled_residuals(gsol, FourVector(0.1, 0.2, 0.3, 0.4))
    return schemas.SolveResponse(
        solution=_solution_doc(gsol.sol, gsol.scenario, gsol.A),
        diagnostics={"coupled_wave": wave_res, "coupled_mixing": mix_res},
        massive_light_cone=gsol.massive_light_cone)


def _current_fn(doc: schemas.SolutionDocument, unnormalized: bool):
    sol, potential = solution_objects(doc)
    if potential is None:
        return lambda x: current_free(sol, x, unnormalized=unnormalized)
    return lambda x: current_gauge(sol, potential, x, unnormalized=unnormalized)


def current_grid(req: schemas.CurrentRequest) -> schemas.CurrentResponse:
    fn = _current_fn(req.solution, req.unnormalized)
    rng = np.random.default_rng(req.seed)
    events = random_events(rng, req.n, req.box)
    buf = io.StringIO()
    buf.write("t,x,y,z,J0,J1,J2,J3\n")
    worst = 0.0
    for x in events:
        j = fn(x)
        row = list(x.components()) + list(j.components())
        buf.write(",".join(_fmt(v) for v in row) + "\n")
        worst = max(worst, abs(check_continuity(fn, x, 0.05)))
    return schemas.CurrentResponse(csv=buf.getvalue(), max_continuity_residual=worst)


def scatter(req: schemas.ScatterRequest) -> schemas.ScatterResponse:
    rng = np.random.default_rng(req.seed)
    rows = []
    count = req.n if req.n > 0 else 1
    for _ in range(count):
        beta = req.beta if req.beta is not None else float(rng.uniform(req.beta_min, req.beta_max))
        phi_t = req.phiT if req.phiT is not None else float(rng.uniform(-np.pi, np.pi))
        delta = req.delta if req.delta is not None else float(rng.uniform(-np.pi, np.pi))
        rows.append((beta, phi_t, delta, scattering.solve_matching(beta, phi_t, delta)))
    buf = io.StringIO()
    buf.write("beta,phiT,delta,Re_R,Im_R,Re_T,Im_T,refl,trans,sum\n")
    worst_unitarity = 0.0
    worst_phase = 0.0
    for beta, phi_t, delta, res in rows:
        total = res.refl_coeff + res.trans_coeff
        scale = max(1.0, abs(res.refl_coeff), abs(res.trans_coeff))
        worst_unitarity = max(worst_unitarity, abs(total - 1.0) / scale)
        phase_err = abs(1.0 + res.R - res.T * cmath.exp(1j * delta)) / max(1.0, abs(res.T))
        worst_phase = max(worst_phase, phase_err)
        buf.write(",".join(_fmt(v) for v in (
            beta, phi_t, delta, res.R.real, res.R.imag, res.T.real, res.T.imag,
            res.refl_coeff, res.trans_coeff, total)) + "\n")
    return schemas.ScatterResponse(csv=buf.getvalue(),
                                   max_unitarity_residual=worst_unitarity,
                                   max_phase_residual=worst_phase,
                                   unitary=worst_unitarity <= req.tol)


def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    sol, potential = solution_objects(req.solution)
    rng = np.random.default_rng(req.seed)
    points = random_events(rng, req.n_points, req.box)
    if potential is None:
        def residual(x, h):
            return kg_residual(sol.evaluate, sol.mass, x, GridSpec(h))
    else:
        def residual(x, h):
            return gauge_kg_residual(sol.evaluate, potential, sol.mass, x, GridSpec(h))
    report = residual_sweep(residual, points, req.hs)
    buf = io.StringIO()
    buf.write("h,residual\n")
    for h, r in zip(report.hs, report.residuals):
        buf.write(f"{_fmt(h)},{_fmt(r)}\n")
    return schemas.VerifyResponse(order=report.order,
                                  machine_precision=report.machine_precision,
                                  passed=report.passes(req.expected_order, req.slack),
                                  csv=buf.getvalue())


def lightcone(req: schemas.LightconeRequest) -> schemas.LightconeResponse:
    sol, _ = solution_objects(req.solution)
    report = is_light_cone(sol, req.tol)
    return schemas.LightconeResponse(**report.to_dict())
