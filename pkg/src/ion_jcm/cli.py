"""
Command-line entry point.

    ion-jcm simulate --eta 0.1 --rabi-khz 500 --k 1 --alpha-sq 10 --t-max-us 300 --t-points 2000 --out trace.csv
    ion-jcm verify --preset fig1 --tol 1e-8 --t-points 200
    ion-jcm figure fig1 --out-dir figures
    ion-jcm replay trace.json --out again.csv
"""
import dataclasses
import math
import os
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

import click
import numpy as np

from ion_jcm import config
from ion_jcm.analysis.envelope import default_window, envelope, revival_estimate
from ion_jcm.dynamics.oracle import build_hamiltonian, compare, evolve
from ion_jcm.dynamics.populations import mean_rabi_period, model_params_for, populations
from ion_jcm.dynamics.states import DickeLevel, InitialMotionalState, PopulationTrace, StateKind, phonon_distribution
from ion_jcm.errors import EXIT_OK, ConfigError, JCMError, VerificationError
from ion_jcm.physics.coupling import ModelParams
from ion_jcm.presets import FIGURE_PRESETS
from ion_jcm.utils.output import read_json, write_csv, write_json, write_svg

_PHYSICAL_FIELDS = ("eta", "rabi_khz", "k", "alpha_sq", "fock")


class Mode(str, Enum):
    SIMULATE = "simulate"
    VERIFY = "verify"
    FIGURE = "figure"


@dataclass(frozen=True)
class RunConfig:
    """One command, in user units (Omega/2pi in kHz, times in microseconds)."""

    mode: Mode
    eta: Optional[float] = None
    rabi_khz: Optional[float] = None
    k: Optional[int] = None
    alpha_sq: Optional[float] = None
    fock: Optional[int] = None
    t_max_us: Optional[float] = None
    t_points: Optional[int] = None
    tail_tol: float = config.TAIL_TOL
    n_max: Optional[int] = None
    out: Optional[str] = None
    json_path: Optional[str] = None
    svg_path: Optional[str] = None
    out_dir: Optional[str] = None
    figure_id: Optional[str] = None
    tol: float = config.VERIFY_TOL
    threads: Optional[int] = None

    def resolved(self) -> "RunConfig":
        """Validated copy with preset physics and mode defaults filled in."""
        cfg = self
        if cfg.figure_id is not None:
            if cfg.figure_id not in FIGURE_PRESETS:
                raise ConfigError(f"unknown figure '{cfg.figure_id}', choose from {', '.join(FIGURE_PRESETS)}")
            given = [name for name in _PHYSICAL_FIELDS if getattr(cfg, name) is not None]
            if given:
                raise ConfigError(f"figure preset {cfg.figure_id} fixes the physics; drop --{', --'.join(given)}")
            preset = FIGURE_PRESETS[cfg.figure_id]
            cfg = dataclasses.replace(cfg, eta=preset.eta, rabi_khz=preset.rabi_khz, k=preset.k, alpha_sq=preset.alpha_sq)

        missing = [name for name in ("eta", "rabi_khz", "k") if getattr(cfg, name) is None]
        if missing:
            raise ConfigError(f"missing required option(s): --{', --'.join(n.replace('_', '-') for n in missing)}")
        if (cfg.alpha_sq is None) == (cfg.fock is None):
            raise ConfigError("give exactly one of --alpha-sq or --fock")
        if not cfg.eta > 0:
            raise ConfigError(f"--eta must be > 0, got {cfg.eta}")
        if not cfg.rabi_khz > 0:
            raise ConfigError(f"--rabi-khz must be > 0, got {cfg.rabi_khz}")
        if cfg.k < 1:
            raise ConfigError(f"--k must be >= 1, got {cfg.k}")
        if cfg.alpha_sq is not None and not cfg.alpha_sq >= 0:
            raise ConfigError(f"--alpha-sq must be >= 0, got {cfg.alpha_sq}")
        if cfg.fock is not None and cfg.fock < 0:
            raise ConfigError(f"--fock must be >= 0, got {cfg.fock}")
        if not 0 < cfg.tail_tol < 1:
            raise ConfigError(f"--tail-tol must lie in (0, 1), got {cfg.tail_tol}")
        if cfg.n_max is not None and cfg.n_max < 0:
            raise ConfigError(f"--n-max must be >= 0, got {cfg.n_max}")

        if cfg.mode is Mode.VERIFY:
            cfg = dataclasses.replace(
                cfg,
                t_max_us=config.VERIFY_T_MAX_US if cfg.t_max_us is None else cfg.t_max_us,
                t_points=config.VERIFY_T_POINTS if cfg.t_points is None else cfg.t_points,
            )
            if not cfg.tol > 0:
                raise ConfigError(f"--tol must be > 0, got {cfg.tol}")
        elif cfg.mode is Mode.FIGURE:
            if cfg.figure_id is None:
                raise ConfigError("figure mode needs a figure id")
            if cfg.out_dir is None:
                raise ConfigError("figure mode needs --out-dir")
        elif cfg.out is None:
            raise ConfigError("simulate needs --out")

        if cfg.mode is not Mode.FIGURE:
            if cfg.t_max_us is None or cfg.t_points is None:
                raise ConfigError("--t-max-us and --t-points are required")
        if cfg.t_max_us is not None and not cfg.t_max_us > 0:
            raise ConfigError(f"--t-max-us must be > 0, got {cfg.t_max_us}")
        if cfg.t_points is not None and cfg.t_points < 2:
            raise ConfigError(f"--t-points must be >= 2, got {cfg.t_points}")
        return cfg

    def initial_state(self) -> InitialMotionalState:
        if self.fock is not None:
            return InitialMotionalState.fock(self.fock)
        return InitialMotionalState.coherent(self.alpha_sq)

    def model_params(self) -> ModelParams:
        state = self.initial_state()
        rabi = 2 * math.pi * self.rabi_khz * 1e3
        return model_params_for(self.eta, rabi, self.k, state, tail_tol=self.tail_tol, n_max=self.n_max)

    @classmethod
    def from_metadata(cls, metadata: Dict[str, Any], **outputs: Any) -> "RunConfig":
        """Rebuilds a simulate config from the JSON written next to a CSV."""
        params = metadata["params"]
        initial = InitialMotionalState.from_dict(metadata["initial"])
        grid = metadata["grid"]
        return cls(
            mode=Mode.SIMULATE,
            eta=params["eta"],
            rabi_khz=params["rabi_khz"],
            k=params["k"],
            alpha_sq=initial.alpha_sq if initial.kind is StateKind.COHERENT else None,
            fock=initial.n0 if initial.kind is StateKind.FOCK else None,
            t_max_us=grid["t_max_us"],
            t_points=grid["t_points"],
            tail_tol=params["tail_tol"],
            n_max=params["n_max"],
            **outputs,
        )


def _metadata(cfg: RunConfig, params: ModelParams, trace: PopulationTrace) -> Dict[str, Any]:
    return {
        "params": {
            "eta": cfg.eta,
            "rabi_khz": cfg.rabi_khz,
            "k": cfg.k,
            "n_max": params.n_max,
            "tail_tol": cfg.tail_tol,
        },
        "initial": trace.initial.to_dict(),
        "grid": {"t_max_us": cfg.t_max_us, "t_points": cfg.t_points},
        "tail_bound": trace.tail_bound,
    }


def _time_grid_us(cfg: RunConfig) -> np.ndarray:
    return np.linspace(0.0, cfg.t_max_us, cfg.t_points)


def _simulate(cfg: RunConfig) -> PopulationTrace:
    params = cfg.model_params()
    t_us = _time_grid_us(cfg)
    trace = populations(params, cfg.initial_state(), t_us * 1e-6, threads=cfg.threads)
    write_csv(cfg.out, t_us, trace)
    if cfg.json_path:
        write_json(cfg.json_path, _metadata(cfg, params, trace))
    if cfg.svg_path:
        write_svg(cfg.svg_path, t_us, trace)
    print(f"[Run] wrote {cfg.out}", file=sys.stderr, flush=True)
    return trace


def _verify(cfg: RunConfig) -> float:
    params = cfg.model_params()
    state = cfg.initial_state()
    times = _time_grid_us(cfg) * 1e-6
    analytic = populations(params, state, times, threads=cfg.threads)

    # Same weights on a larger space, so only the dynamics are compared.
    oracle_params = params.with_n_max(params.n_max + config.ORACLE_BUFFER)
    weights = phonon_distribution(state, params.n_max, params.tail_tol)
    reference = evolve(build_hamiltonian(oracle_params), weights, times, provenance=state)

    max_error = compare(analytic, reference)
    click.echo(f"max abs population error: {max_error:.3e} (tol {cfg.tol:.1e})")
    if max_error > cfg.tol:
        raise VerificationError(max_error, cfg.tol)
    return max_error


def _figure(cfg: RunConfig) -> Dict[str, Any]:
    state = cfg.initial_state()
    params = cfg.model_params()
    period = mean_rabi_period(params, state)
    t_max_us = cfg.t_max_us
    if t_max_us is None:
        t_max_us = config.REVIVAL_SPAN * revival_estimate(params, state.alpha_sq, DickeLevel.EXCITED) * 1e6
    t_points = cfg.t_points
    if t_points is None:
        t_points = max(config.FIGURE_T_POINTS, int(math.ceil(config.SAMPLES_PER_PERIOD * t_max_us * 1e-6 / period)) + 1)

    stem = os.path.join(cfg.out_dir, cfg.figure_id)
    run_cfg = dataclasses.replace(
        cfg,
        t_max_us=t_max_us,
        t_points=t_points,
        out=f"{stem}.csv",
        json_path=f"{stem}.json",
        svg_path=None,
    )
    t_us = _time_grid_us(run_cfg)
    trace = populations(params, state, t_us * 1e-6, threads=cfg.threads)

    # Analysis may still reject the grid; nothing is written until it passes.
    window = default_window(params, state)
    reports = {level.value: envelope(trace, level, window).to_dict() for level in DickeLevel}
    metadata = _metadata(run_cfg, params, trace)
    metadata["figure_id"] = cfg.figure_id
    metadata["revival_estimate_us"] = revival_estimate(params, state.alpha_sq, DickeLevel.EXCITED) * 1e6
    metadata["envelope"] = reports

    write_csv(run_cfg.out, t_us, trace)
    preset = FIGURE_PRESETS[cfg.figure_id]
    write_svg(f"{stem}.svg", t_us, trace, title=f"{cfg.figure_id}: eta={preset.eta}, k={preset.k}, |alpha|^2={preset.alpha_sq:g}")
    write_json(run_cfg.json_path, metadata)
    print(f"[Run] wrote {stem}.csv/.json/.svg", file=sys.stderr, flush=True)
    return metadata


def run(cfg: RunConfig) -> int:
    """Executes one command; returns the process exit status."""
    try:
        cfg = cfg.resolved()
        if cfg.mode is Mode.SIMULATE:
            _simulate(cfg)
        elif cfg.mode is Mode.VERIFY:
            _verify(cfg)
        else:
            _figure(cfg)
        return EXIT_OK
    except JCMError as e:
        print(f"[Run] {type(e).__name__}: {e}", file=sys.stderr, flush=True)
        required = getattr(e, "required_n_max", None)
        if required is not None:
            print(f"[Run] suggested --n-max {required}", file=sys.stderr, flush=True)
        return e.exit_code


# --- Click surface ---

def physical_options(f):
    options = [
        click.option("--eta", type=float, default=None, help="Lamb-Dicke parameter."),
        click.option("--rabi-khz", type=float, default=None, help="Omega/2pi in kHz."),
        click.option("--k", "k", type=int, default=None, help="Red sideband order."),
        click.option("--alpha-sq", type=float, default=None, help="Mean phonon number of a coherent state."),
        click.option("--fock", type=int, default=None, help="Initial Fock state n0."),
        click.option("--tail-tol", type=float, default=config.TAIL_TOL, show_default=True),
        click.option("--n-max", type=int, default=None, help="Fock truncation; derived from --tail-tol if omitted."),
        click.option("--threads", type=int, default=None, help="Worker threads over the time grid."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


@click.group()
def cli():
    """Two-ion k-quantum nonlinear Jaynes-Cummings dynamics."""


@cli.command()
@physical_options
@click.option("--t-max-us", type=float, default=None)
@click.option("--t-points", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def simulate(ctx, **options):
    """Write the population trace as CSV (optionally JSON metadata and SVG)."""
    ctx.exit(run(RunConfig(mode=Mode.SIMULATE, **options)))


@cli.command()
@physical_options
@click.option("--preset", "figure_id", type=click.Choice(sorted(FIGURE_PRESETS)), default=None)
@click.option("--tol", type=float, default=config.VERIFY_TOL, show_default=True)
@click.option("--t-max-us", type=float, default=None)
@click.option("--t-points", type=int, default=None)
@click.pass_context
def verify(ctx, **options):
    """Compare the analytic populations against the brute-force oracle."""
    ctx.exit(run(RunConfig(mode=Mode.VERIFY, **options)))


@cli.command()
@click.argument("figure_id", type=click.Choice(sorted(FIGURE_PRESETS)))
@click.option("--out-dir", type=click.Path(file_okay=False), default=config.OUTPUT_DIR, show_default=True)
@click.option("--t-max-us", type=float, default=None, help="Override the default 4x revival time.")
@click.option("--t-points", type=int, default=None)
@click.option("--threads", type=int, default=None)
@click.pass_context
def figure(ctx, **options):
    """Reproduce a figure preset: CSV, SVG and JSON with envelope report."""
    ctx.exit(run(RunConfig(mode=Mode.FIGURE, **options)))


@cli.command()
@click.argument("metadata", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def replay(ctx, metadata, out, json_path, svg_path):
    """Re-run a simulation from its JSON metadata."""
    try:
        cfg = RunConfig.from_metadata(read_json(metadata), out=out, json_path=json_path, svg_path=svg_path)
    except (KeyError, TypeError, ValueError) as e:
        print(f"[Run] unreadable metadata {metadata}: {e}", file=sys.stderr, flush=True)
        ctx.exit(ConfigError.exit_code)
    ctx.exit(run(cfg))


def main():
    cli()


if __name__ == "__main__":
    main()
