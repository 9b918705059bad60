"""Command-line client.

Thin wrapper over the service layer: each subcommand reads a JSON config,
builds the corresponding request model, runs it in-process, and writes the
artifacts.  Exit codes: 0 all requested invariants pass, 1 constraint
incompatibility (the message names the failing equations), 2 config validation
failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
from pydantic import TypeAdapter, ValidationError

from .errors import QuatKGError
from .service import runners, schemas

EXIT_CONSTRAINT = 1
EXIT_CONFIG = 2


def _load_config(path: str, expected_kind=None) -> dict:
    try:
        config = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    if not isinstance(config, dict):
        click.echo("config error: top-level JSON object expected", err=True)
        sys.exit(EXIT_CONFIG)
    kind = config.pop("kind", None)
    if expected_kind is not None and kind is not None and kind not in expected_kind:
        click.echo(f"config error: kind {kind!r} not valid here (expected {expected_kind})",
                   err=True)
        sys.exit(EXIT_CONFIG)
    if kind is not None:
        config["kind"] = kind
    return config


def _resolve_solution(config: dict) -> dict:
    """Accept either an inline solution document or a path to a solve output."""
    if "solution_path" in config:
        path = config.pop("solution_path")
        try:
            config["solution"] = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            click.echo(f"config error: cannot read solution {path}: {exc}", err=True)
            sys.exit(EXIT_CONFIG)
    return config


def _build(model, config: dict):
    try:
        return TypeAdapter(model).validate_python(config)
    except ValidationError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)


def _run(fn, req):
    try:
        return fn(req)
    except QuatKGError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CONSTRAINT)


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _write(out: str | None, text: str):
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


@click.group()
def main():
    """Quaternionic Klein-Gordon toolkit."""


@main.command()
@click.option("--config", required=True, type=click.Path(exists=True))
@click.option("--out", type=click.Path(), default=None, help="Solution JSON output path.")
@click.option("--tol", type=float, default=None, help="Constraint tolerance override.")
def solve(config, out, tol):
    """Build a validated solution from a scenario config and serialize it."""
    cfg = _load_config(config, expected_kind={"free", "electric", "constant_quaternionic",
                                              "oscillating"})
    cfg.setdefault("kind", "free")
    if tol is not None:
        cfg["tol"] = tol
    req = _build(schemas.SolveRequest, cfg)
    resp = _run(runners.solve, req)
    _write(out, _dump_json(resp.solution.model_dump(exclude_none=True)))
    click.echo(_dump_json({"diagnostics": resp.diagnostics,
                           "massive_light_cone": resp.massive_light_cone}), nl=False, err=True)


@main.command()
@click.option("--config", required=True, type=click.Path(exists=True))
@click.option("--out", type=click.Path(), default=None, help="CSV output path.")
@click.option("--seed", type=int, default=None)
def current(config, out, seed):
    """Sample the probability four-current on a seeded random event grid (CSV)."""
    cfg = _resolve_solution(_load_config(config, expected_kind={"current"}))
    cfg.pop("kind", None)
    if seed is not None:
        cfg["seed"] = seed
    req = _build(schemas.CurrentRequest, cfg)
    resp = _run(runners.current_grid, req)
    _write(out, resp.csv)
    click.echo(_dump_json({"max_continuity_residual": resp.max_continuity_residual}),
               nl=False, err=True)


@main.command()
@click.option("--config", required=True, type=click.Path(exists=True))
@click.option("--out", type=click.Path(), default=None, help="Sweep CSV output path.")
@click.option("--seed", type=int, default=None)
@click.option("--tol", type=float, default=None, help="Unitarity tolerance override.")
def scatter(config, out, seed, tol):
    """Step-potential sweep: amplitudes, coefficients, and the unitarity report."""
    cfg = _load_config(config, expected_kind={"scatter"})
    cfg.pop("kind", None)
    if seed is not None:
        cfg["seed"] = seed
    if tol is not None:
        cfg["tol"] = tol
    req = _build(schemas.ScatterRequest, cfg)
    resp = _run(runners.scatter, req)
    _write(out, resp.csv)
    click.echo(_dump_json({"max_unitarity_residual": resp.max_unitarity_residual,
                           "max_phase_residual": resp.max_phase_residual,
                           "unitary": resp.unitary}), nl=False)
    if not resp.unitary:
        sys.exit(EXIT_CONSTRAINT)


@main.command()
@click.option("--config", required=True, type=click.Path(exists=True))
@click.option("--out", type=click.Path(), default=None, help="Residual sweep CSV output path.")
@click.option("--h", "spacing", type=float, default=None,
              help="Base spacing; the sweep uses {2h, h, h/2}.")
@click.option("--seed", type=int, default=None)
def verify(config, out, spacing, seed):
    """Finite-difference residual sweep with a convergence-order summary."""
    cfg = _resolve_solution(_load_config(config, expected_kind={"verify"}))
    cfg.pop("kind", None)
    if spacing is not None:
        cfg["hs"] = [2.0 * spacing, spacing, 0.5 * spacing]
    if seed is not None:
        cfg["seed"] = seed
    req = _build(schemas.VerifyRequest, cfg)
    resp = _run(runners.verify, req)
    if out:
        Path(out).write_text(resp.csv)
    click.echo(_dump_json({"order": resp.order, "pass": resp.passed,
                           "machine_precision": resp.machine_precision}), nl=False)
    if not resp.passed:
        sys.exit(EXIT_CONSTRAINT)


@main.command()
@click.option("--config", required=True, type=click.Path(exists=True))
@click.option("--out", type=click.Path(), default=None, help="Report JSON output path.")
@click.option("--tol", type=float, default=None)
def lightcone(config, out, tol):
    """Null-momentum condition report, including the massive light-cone flag."""
    cfg = _resolve_solution(_load_config(config, expected_kind={"lightcone"}))
    cfg.pop("kind", None)
    if tol is not None:
        cfg["tol"] = tol
    req = _build(schemas.LightconeRequest, cfg)
    resp = _run(runners.lightcone, req)
    _write(out, _dump_json(resp.model_dump()))


if __name__ == "__main__":
    main()
