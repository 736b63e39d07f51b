import asyncio
import logging
import math
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, Any, Callable, List, Optional

import click
import typer
from pydantic import ValidationError
from rich.console import Console

from tlr.configs.app_config import AppConfig
from tlr.configs.loader import load_config
from tlr.configs.overrides import flag_overrides
from tlr.environment.presets import Region, Severity, severity_spread_depth_ratio
from tlr.exceptions import ModelValidationError, SolverError, TlrError
from tlr.fem.domain import FloatArray, Mesh
from tlr.loading.fourier import dft_coefficients, synthesize_curves
from tlr.reporting import writers
from tlr.reporting.manifest import ManifestRecorder, RunManifest, RunStatus, config_digest
from tlr.simulation.builder import build_scenario, build_simulation_config, scenario_series
from tlr.simulation.domain import SimulationConfig
from tlr.simulation.runner import run_deterministic
from tlr.simulation.sweep import sweep_failure_times
from tlr.stochastic.builder import build_collocation_service
from tlr.stochastic.collocation import (
    build_ensemble,
    default_qoi,
    pcm_field_moments,
    pcm_moments,
    probability_of_failure,
    sobol_first_order,
)
from tlr.stochastic.domain import QoIKind, RandomSpace
from tlr.stochastic.presets import resolve_space
from tlr.stochastic.service import CollocationRun, CollocationService

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SOLVER = 2

console = Console(stderr=True)
logger = logging.getLogger(__name__)

app = typer.Typer(
    name="tlr",
    help="Transmission line reliability: coupled FEM simulation and collocation studies.",
    no_args_is_help=True,
    add_completion=False,
)


@dataclass
class TimingContext:
    start_time: float
    total_time_limit: float

    @property
    def time_elapsed(self) -> float:
        return time.perf_counter() - self.start_time

    @property
    def time_remaining(self) -> float:
        return max(0.0, self.total_time_limit - self.time_elapsed)


@contextmanager
def time_block(description: str, timer: TimingContext):
    """Context manager for timing code blocks and logging the duration."""
    start_time = time.perf_counter()
    try:
        yield
    except Exception:
        logger.error(f"Failure while {description}")
        raise
    finally:
        duration = time.perf_counter() - start_time
        logger.info(
            f"It took {duration:.2f} seconds {description}. "
            f"Time remaining: {timer.time_remaining:.2f}/{timer.total_time_limit:.2f}"
        )


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
        force=True,
    )


def _describe_validation_error(error: ValidationError) -> str:
    first = error.errors()[0]
    key = ".".join(str(part) for part in first["loc"]) or "config"
    extra = f" (+{error.error_count() - 1} more)" if error.error_count() > 1 else ""
    return f"{key}: {first['msg']}{extra}"


@dataclass
class RunContext:
    config: AppConfig
    simulation: SimulationConfig
    out_dir: Path
    timer: TimingContext
    recorder: ManifestRecorder


Preset = Annotated[
    Optional[Region],
    typer.Option("--preset", "-p", help="Packaged region preset", case_sensitive=False),
]
ScenarioFile = Annotated[
    Optional[Path], typer.Option("--scenario", help="Scenario YAML merged after the preset")
]
ConfigPath = Annotated[
    Optional[str], typer.Option("--config-path", "-c", help="Replacement for the default config")
]
Overrides = Annotated[
    Optional[List[str]],
    typer.Option(
        "--config_overrides",
        "-o",
        help="Override config values. Format: key=value or key.nested=value. Repeatable.",
    ),
]
OutDir = Annotated[Optional[str], typer.Option("--out", help="Output directory")]
Verbose = Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging")]
Dt = Annotated[Optional[float], typer.Option("--dt", help="Time step in years")]
Horizon = Annotated[Optional[float], typer.Option("--horizon", help="Horizon in years")]
Snapshots = Annotated[
    Optional[float], typer.Option("--snapshots", help="Snapshot interval in years")
]
Space = Annotated[Optional[str], typer.Option("--space", help="Random space preset or YAML file")]
Points = Annotated[Optional[int], typer.Option("--points", help="Collocation points per dimension")]
Samples = Annotated[Optional[int], typer.Option("--samples", help="Monte Carlo sample count")]
Seed = Annotated[Optional[int], typer.Option("--seed", help="Random seed")]
Jobs = Annotated[Optional[int], typer.Option("--jobs", "-j", help="Worker processes")]


def _execute(
    command: str,
    preset: Optional[Region],
    scenario: Optional[Path],
    config_path: Optional[str],
    overrides: Optional[List[str]],
    verbose: bool,
    flags: dict[str, Any],
    body: Callable[[RunContext], None],
) -> None:
    """Load config, run one pipeline and map failures onto exit codes.

    Raises:
        typer.Exit: With code 1 for invalid input and 2 for solver failures.
        Exception: Anything else is re-raised after the manifest is marked failed.
    """
    start_time = time.perf_counter()
    _configure_logging(verbose)
    console.print(f"[bold blue]tlr {command}[/bold blue]")

    recorder: Optional[ManifestRecorder] = None
    try:
        presets: list[str | Path] = []
        if preset is not None:
            presets.append(f"tlr:{preset.value}")
        if scenario is not None:
            presets.append(scenario)
        all_overrides = list(overrides or []) + flag_overrides(flags)
        config = load_config(presets or None, config_path, all_overrides, AppConfig)
        logger.info("Successfully loaded config")

        simulation = build_simulation_config(config)
        time_limit = config.runner.time_limit or float("inf")
        timer = TimingContext(start_time=start_time, total_time_limit=time_limit)
        out_dir = Path(config.runner.out_dir)
        recorder = ManifestRecorder(
            out_dir,
            RunManifest(
                command=command,
                config_digest=config_digest(config),
                seed=config.stochastic.seed,
            ),
        )
        body(RunContext(config, simulation, out_dir, timer, recorder))
    except ValidationError as e:
        message = _describe_validation_error(e)
        console.print(f"[red]validation error[/red] {message}")
        if recorder is not None:
            recorder.finish(RunStatus.FAILED, message)
        raise typer.Exit(EXIT_VALIDATION)
    except ModelValidationError as e:
        console.print(f"[red]validation error[/red] {e}")
        if recorder is not None:
            recorder.finish(RunStatus.FAILED, str(e))
        raise typer.Exit(EXIT_VALIDATION)
    except TlrError as e:
        console.print(f"[red]solver failure[/red] {e}")
        if recorder is not None:
            recorder.finish(RunStatus.FAILED, str(e))
        raise typer.Exit(EXIT_SOLVER)
    except Exception as e:
        console.print(f"[red]run failed[/red] {type(e).__name__}: {e}")
        if recorder is not None:
            recorder.finish(RunStatus.FAILED, f"{type(e).__name__}: {e}")
        raise

    if recorder.manifest.status is RunStatus.RUNNING:
        recorder.finish(RunStatus.COMPLETED)


def _resolve_space(ctx: RunContext) -> RandomSpace:
    stochastic = ctx.config.stochastic
    return resolve_space(ctx.simulation, stochastic.space, stochastic.spread)


def _with_service(ctx: RunContext, action: Callable[[CollocationService], Any]) -> Any:
    service = build_collocation_service(ctx.config)
    try:
        return asyncio.run(action(service))
    finally:
        service.close()


def _collocate(ctx: RunContext, keep_snapshots: bool = False) -> CollocationRun:
    space = _resolve_space(ctx)
    points = ctx.config.stochastic.points
    ctx.recorder.note(
        random_space={p.name.value: [p.lower, p.upper] for p in space.parameters},
        points_per_dim=points,
        grid_size=points**space.dims,
    )
    with time_block(f"running {points**space.dims} collocation simulations", ctx.timer):
        return _with_service(
            ctx, lambda service: service.collocate(ctx.simulation, space, points, keep_snapshots)
        )


def _qoi(ctx: RunContext) -> QoIKind:
    return ctx.config.stochastic.qoi or default_qoi(ctx.simulation.scenario.kind)


def _node_coords(ctx: RunContext) -> FloatArray:
    return Mesh(length=ctx.simulation.area.span, n_elements=ctx.simulation.n_elements).node_coords


def _snapshot_times(simulation: SimulationConfig) -> list[float]:
    """Snapshot marks strictly inside the horizon, starting at t = 0."""
    interval = simulation.snapshot_interval or simulation.horizon
    n_marks = int(math.ceil(simulation.horizon / interval - 1e-9))
    return [k * interval for k in range(n_marks)]


@app.command("synth-loading")
def synth_loading(
    preset: Preset = None,
    scenario: ScenarioFile = None,
    config_path: ConfigPath = None,
    config_overrides: Overrides = None,
    out: OutDir = None,
    verbose: Verbose = False,
) -> None:
    """Write monthly samples next to their continuous Fourier reconstruction."""

    def body(ctx: RunContext) -> None:
        wind, temperature = scenario_series(ctx.config)
        curves = {"wind": synthesize_curves(wind), "temperature": synthesize_curves(temperature)}
        coefficients = {
            "wind": dft_coefficients(wind),
            "temperature": dft_coefficients(temperature),
        }
        ctx.recorder.record(writers.write_loading_curves(ctx.out_dir / "loading.csv", curves))
        ctx.recorder.record(
            writers.write_coefficients(ctx.out_dir / "coefficients.csv", coefficients)
        )
        ctx.recorder.note(scenario_kind=build_scenario(ctx.config).kind.value)

    flags = {"out": out}
    _execute("synth-loading", preset, scenario, config_path, config_overrides, verbose, flags, body)


@app.command()
def simulate(
    preset: Preset = None,
    scenario: ScenarioFile = None,
    config_path: ConfigPath = None,
    config_overrides: Overrides = None,
    out: OutDir = None,
    dt: Dt = None,
    horizon: Horizon = None,
    snapshots: Snapshots = None,
    verbose: Verbose = False,
) -> None:
    """Run one deterministic simulation and write its series, snapshots and manifest."""

    def body(ctx: RunContext) -> None:
        with time_block("running the deterministic simulation", ctx.timer):
            result = run_deterministic(ctx.simulation)
        ctx.recorder.record(writers.write_series(ctx.out_dir / "series.csv", result))
        snapshots = writers.write_snapshots(ctx.out_dir / "snapshots", result, _node_coords(ctx))
        ctx.recorder.record(*snapshots)
        if result.failure is not None:
            ctx.recorder.note(
                failure={"time": result.failure.time, "mode": result.failure.mode.value}
            )
            failure = result.failure
            console.print(
                f"Line failed by [bold]{failure.mode.value}[/bold] at t={failure.time:.2f} yr"
            )
        else:
            console.print("Line survived the horizon")
        if result.error is not None:
            ctx.recorder.note(error={"time": result.error.time, "type": result.error.error_type})
            raise SolverError(result.error.message, key="simulation")

    flags = {"out": out, "dt": dt, "horizon": horizon, "snapshots": snapshots}
    _execute("simulate", preset, scenario, config_path, config_overrides, verbose, flags, body)


@app.command()
def pcm(
    preset: Preset = None,
    scenario: ScenarioFile = None,
    config_path: ConfigPath = None,
    config_overrides: Overrides = None,
    out: OutDir = None,
    space: Space = None,
    points: Points = None,
    jobs: Jobs = None,
    dt: Dt = None,
    horizon: Horizon = None,
    verbose: Verbose = False,
) -> None:
    """Collocation expectation and standard deviation of temperature and damage."""

    def body(ctx: RunContext) -> None:
        field_moments = ctx.config.stochastic.field_moments
        run = _collocate(ctx, keep_snapshots=field_moments)
        moments = {
            kind.value: pcm_moments(build_ensemble(run.results, kind), run.grid)
            for kind in (QoIKind.THETA_MAX_SERIES, QoIKind.PHI_MAX_SERIES)
        }
        ctx.recorder.record(writers.write_moments(ctx.out_dir / "moments.csv", moments))
        if field_moments and ctx.simulation.snapshot_interval is not None:
            times = _snapshot_times(ctx.simulation)
            fields = [
                pcm_field_moments(run.results, run.grid, times, _node_coords(ctx), field)
                for field in ("phi", "theta")
            ]
            path = writers.write_field_moments(ctx.out_dir / "field_moments.csv", fields)
            ctx.recorder.record(path)

    flags = {
        "out": out,
        "space": space,
        "points": points,
        "jobs": jobs,
        "dt": dt,
        "horizon": horizon,
    }
    _execute("pcm", preset, scenario, config_path, config_overrides, verbose, flags, body)


@app.command()
def sobol(
    preset: Preset = None,
    scenario: ScenarioFile = None,
    config_path: ConfigPath = None,
    config_overrides: Overrides = None,
    out: OutDir = None,
    space: Space = None,
    points: Points = None,
    jobs: Jobs = None,
    dt: Dt = None,
    horizon: Horizon = None,
    verbose: Verbose = False,
) -> None:
    """First-order Sobol index series from the collocation grid."""

    def body(ctx: RunContext) -> None:
        run = _collocate(ctx)
        qoi = _qoi(ctx)
        ensemble = build_ensemble(run.results, qoi)
        ctx.recorder.note(qoi=qoi.value)
        indices = sobol_first_order(ensemble, run.grid)
        path = writers.write_sobol(ctx.out_dir / "sobol.csv", ensemble.times, indices)
        ctx.recorder.record(path)

    flags = {
        "out": out,
        "space": space,
        "points": points,
        "jobs": jobs,
        "dt": dt,
        "horizon": horizon,
    }
    _execute("sobol", preset, scenario, config_path, config_overrides, verbose, flags, body)


@app.command()
def pfail(
    preset: Preset = None,
    scenario: ScenarioFile = None,
    config_path: ConfigPath = None,
    config_overrides: Overrides = None,
    out: OutDir = None,
    space: Space = None,
    points: Points = None,
    jobs: Jobs = None,
    dt: Dt = None,
    horizon: Horizon = None,
    verbose: Verbose = False,
) -> None:
    """Time-resolved probability of failure from the collocation grid."""

    def body(ctx: RunContext) -> None:
        run = _collocate(ctx)
        ensemble = build_ensemble(run.results, QoIKind.H_B_SERIES)
        p_f = probability_of_failure(ensemble, run.grid)
        ctx.recorder.note(final_p_f=float(p_f[-1]) if p_f.size else None)
        ctx.recorder.record(writers.write_pfail(ctx.out_dir / "pfail.csv", ensemble.times, p_f))

    flags = {
        "out": out,
        "space": space,
        "points": points,
        "jobs": jobs,
        "dt": dt,
        "horizon": horizon,
    }
    _execute("pfail", preset, scenario, config_path, config_overrides, verbose, flags, body)


@app.command()
def mc(
    preset: Preset = None,
    scenario: ScenarioFile = None,
    config_path: ConfigPath = None,
    config_overrides: Overrides = None,
    out: OutDir = None,
    space: Space = None,
    samples: Samples = None,
    seed: Seed = None,
    jobs: Jobs = None,
    dt: Dt = None,
    horizon: Horizon = None,
    verbose: Verbose = False,
) -> None:
    """Monte Carlo baseline: sample moments and failing fraction."""

    def body(ctx: RunContext) -> None:
        random_space = _resolve_space(ctx)
        qoi = _qoi(ctx)
        n_samples = ctx.config.stochastic.samples
        ctx.recorder.note(
            random_space={p.name.value: [p.lower, p.upper] for p in random_space.parameters},
            samples=n_samples,
            qoi=qoi.value,
        )
        with time_block(f"running {n_samples} Monte Carlo simulations", ctx.timer):
            run = _with_service(
                ctx,
                lambda service: service.monte_carlo_moments(
                    ctx.simulation, random_space, n_samples, ctx.config.stochastic.seed, qoi
                ),
            )
        paths = writers.write_monte_carlo(ctx.out_dir, run.times, run.estimate, qoi.value)
        ctx.recorder.record(*paths)

    flags = {
        "out": out,
        "space": space,
        "samples": samples,
        "seed": seed,
        "jobs": jobs,
        "dt": dt,
        "horizon": horizon,
    }
    _execute("mc", preset, scenario, config_path, config_overrides, verbose, flags, body)


@app.command()
def converge(
    preset: Preset = None,
    scenario: ScenarioFile = None,
    config_path: ConfigPath = None,
    config_overrides: Overrides = None,
    out: OutDir = None,
    seed: Seed = None,
    jobs: Jobs = None,
    dt: Dt = None,
    verbose: Verbose = False,
) -> None:
    """Error of 1-D collocation and Monte Carlo against a high-order reference."""

    def body(ctx: RunContext) -> None:
        stochastic = ctx.config.stochastic
        with time_block("running the convergence study", ctx.timer):
            rows = _with_service(
                ctx,
                lambda service: service.convergence_study(
                    ctx.simulation,
                    stochastic.convergence_parameter,
                    stochastic.convergence_points,
                    stochastic.convergence_samples,
                    at_time=stochastic.convergence_time,
                    reference_points=stochastic.reference_points,
                    seed=stochastic.seed,
                    spread=stochastic.spread,
                ),
            )
        ctx.recorder.note(
            parameter=stochastic.convergence_parameter, at_time=stochastic.convergence_time
        )
        ctx.recorder.record(writers.write_convergence(ctx.out_dir / "convergence.csv", rows))

    flags = {"out": out, "seed": seed, "jobs": jobs, "dt": dt}
    _execute("converge", preset, scenario, config_path, config_overrides, verbose, flags, body)


@app.command()
def sweep(
    preset: Preset = None,
    scenario: ScenarioFile = None,
    config_path: ConfigPath = None,
    config_overrides: Overrides = None,
    out: OutDir = None,
    parameter: Annotated[
        Optional[str], typer.Option("--parameter", help="A_sigma, w_max, V_f or t_ice")
    ] = None,
    values: Annotated[
        Optional[List[float]], typer.Option("--value", help="Sweep value; repeat for several")
    ] = None,
    dt: Dt = None,
    horizon: Horizon = None,
    verbose: Verbose = False,
) -> None:
    """Failure time and mode for each value of one parameter."""

    def body(ctx: RunContext) -> None:
        stochastic = ctx.config.stochastic
        name = parameter or stochastic.sweep_parameter
        sweep_values = values or stochastic.sweep_values
        if not sweep_values:
            if name != "A_sigma":
                raise ModelValidationError(
                    "sweep needs values for this parameter", key="stochastic.sweep_values"
                )
            sweep_values = [severity_spread_depth_ratio(level) for level in Severity]
        with time_block(f"sweeping {name} over {len(sweep_values)} values", ctx.timer):
            rows = sweep_failure_times(ctx.simulation, name, sweep_values)
        ctx.recorder.note(parameter=name, values=[float(v) for v in sweep_values])
        ctx.recorder.record(writers.write_sweep(ctx.out_dir / "sweep.csv", name, rows))

    flags = {"out": out, "dt": dt, "horizon": horizon}
    _execute("sweep", preset, scenario, config_path, config_overrides, verbose, flags, body)


def run_command(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on argv and return the exit code instead of exiting."""
    try:
        result = app(args=argv, prog_name="tlr", standalone_mode=False)
    except click.UsageError as e:
        console.print(f"[red]usage error[/red] {e.format_message()}")
        return EXIT_VALIDATION
    except click.Abort:
        return EXIT_VALIDATION
    return result if isinstance(result, int) else EXIT_OK


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
