"""Figure presets, parameter sweeps and the generation threshold."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .chart import format_csv, parse_csv, render_svg, sort_rows
from .discord import XStateParams, dt_xstate
from .reservoir import (
    InitialPhi,
    ReservoirParams,
    Topology,
    critical_times,
    discord_trace,
    steady_common,
)

MEASURES = ("trace", "bures")
DEFAULT_ALPHA2 = (0.1, 0.3, 0.5, 0.7, 0.9)


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: every alpha2 (or detuning) x time x measure.

    ``delta_list`` switches the swept parameter from alpha2 to the
    detuning; ``times`` overrides the uniform grid.
    """

    topology: Topology
    lambda_over_gamma0: float
    alpha2_list: tuple[float, ...]
    t_max: float = 10.0
    n_points: int = 1000
    delta_over_gamma0: float = 0.0
    measures: tuple[str, ...] = ("trace",)
    seed: int = 0
    output_dir: str = "."
    delta_list: tuple[float, ...] | None = None
    times: tuple[float, ...] | None = None
    log_time: bool = False
    include_critical_times: bool = False

    def __post_init__(self):
        object.__setattr__(self, "topology", Topology(self.topology))
        if not self.alpha2_list:
            raise ConfigError("alpha2_list must be non-empty")
        if any(not 0 <= a <= 1 for a in self.alpha2_list):
            raise ConfigError("every alpha2 must lie in [0, 1]")
        if self.times is None:
            if self.n_points < 2:
                raise ConfigError("n_points must be >= 2")
            if self.t_max <= 0:
                raise ConfigError("t_max must be positive")
        elif not self.times or any(t < 0 for t in self.times):
            raise ConfigError("times must be a non-empty list of non-negative values")
        if not self.measures or any(m not in MEASURES for m in self.measures):
            raise ConfigError(f"measures must be a subset of {MEASURES}")

    def params(self, delta: float | None = None) -> ReservoirParams:
        return ReservoirParams(lam=self.lambda_over_gamma0,
                               delta=self.delta_over_gamma0 if delta is None else delta,
                               topology=self.topology)

    def time_grid(self) -> np.ndarray:
        if self.times is not None:
            return np.unique(np.asarray(self.times, dtype=float))
        if self.log_time:
            # uniform up to gamma0 t = 1, then log-spaced
            head = np.linspace(0.0, 1.0, 100, endpoint=False)
            grid = np.concatenate([head, np.geomspace(1.0, self.t_max, self.n_points)])
        else:
            grid = np.linspace(0.0, self.t_max, self.n_points)
        if self.include_critical_times:
            p = self.params()
            if p.topology is Topology.INDEPENDENT and p.delta == 0 and p.regime == "non-markovian":
                tn = critical_times(64, p)
                grid = np.concatenate([grid, tn[tn <= grid[-1]]])
        return np.unique(grid)


@dataclass(frozen=True)
class FigureSpec:
    id: str
    config: ExperimentConfig
    title: str = field(default="", compare=False)

    @property
    def param_name(self) -> str:
        return "delta" if self.config.delta_list is not None else "alpha2"


def _preset(topology, lam, measures, t_max, **kw) -> ExperimentConfig:
    kw.setdefault("alpha2_list", DEFAULT_ALPHA2)
    return ExperimentConfig(topology=Topology(topology), lambda_over_gamma0=lam,
                            measures=measures, t_max=t_max, **kw)


FIGURES: dict[str, FigureSpec] = {
    "fig1a": FigureSpec("fig1a", _preset("independent", 10.0, ("trace",), 5.0),
                        "D_T, independent reservoirs, lambda = 10 gamma0"),
    "fig1b": FigureSpec("fig1b", _preset("independent", 0.1, ("trace",), 50.0, include_critical_times=True),
                        "D_T, independent reservoirs, lambda = 0.1 gamma0"),
    "fig2a": FigureSpec("fig2a", _preset("common", 10.0, ("trace",), 10.0),
                        "D_T, common reservoir, lambda = 10 gamma0"),
    "fig2b": FigureSpec("fig2b", _preset("common", 0.1, ("trace",), 200.0),
                        "D_T, common reservoir, lambda = 0.1 gamma0"),
    "fig3a": FigureSpec("fig3a", _preset("independent", 0.1, ("bures",), 50.0, include_critical_times=True),
                        "D_B, independent reservoirs, lambda = 0.1 gamma0"),
    "fig3b": FigureSpec("fig3b", _preset("common", 0.1, ("bures",), 200.0),
                        "D_B, common reservoir, lambda = 0.1 gamma0"),
    "fig4": FigureSpec("fig4", _preset("common", 0.1, MEASURES, 1000.0, n_points=5000, log_time=True,
                                       alpha2_list=(0.0, 0.01, 0.02, 0.05)),
                       "D_T and D_B, common reservoir, small alpha2, lambda = 0.1 gamma0"),
    "fig5": FigureSpec("fig5", _preset("independent", 0.1, MEASURES, 30.0, alpha2_list=(0.5,),
                                       delta_list=(0.0, 0.5, 1.0, 2.0, 4.0)),
                       "Detuned independent reservoirs, alpha2 = 0.5, lambda = 0.1 gamma0"),
}


def _max_workers() -> int:
    env = os.environ.get("GEODISCORD_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"GEODISCORD_THREADS must be an integer, got {env!r}") from None
    return min(8, os.cpu_count() or 1)


def _ordered_map(func, items):
    workers = _max_workers()
    if workers == 1 or len(items) < 2:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def run_experiment(config: ExperimentConfig) -> list[tuple[float, float, str, float]]:
    """Evaluate every (parameter, measure) curve; rows sorted by parameter, measure, time."""
    times = config.time_grid()
    jobs = []
    if config.delta_list is not None:
        alpha2 = config.alpha2_list[0]
        for delta in config.delta_list:
            for m in config.measures:
                jobs.append((delta, m, InitialPhi(alpha2), config.params(delta)))
    else:
        for a2 in config.alpha2_list:
            for m in config.measures:
                jobs.append((a2, m, InitialPhi(a2), config.params()))

    def curve(job):
        key, measure, init, params = job
        return key, measure, discord_trace(init, params, times, measure)

    rows = []
    for key, measure, series in _ordered_map(curve, jobs):
        rows.extend((float(t), float(key), measure, float(v))
                    for t, v in zip(series.scaled_times, series.values))
    return sort_rows(rows)


def run_figure(figure_id: str, out_dir="."):
    """Write ``<id>.csv`` and ``<id>.svg``; return both paths."""
    if figure_id not in FIGURES:
        raise ConfigError(f"unknown figure {figure_id!r}; choose from {', '.join(FIGURES)}")
    spec = FIGURES[figure_id]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    text = format_csv(run_experiment(spec.config))
    csv_path, svg_path = out / f"{figure_id}.csv", out / f"{figure_id}.svg"
    csv_path.write_text(text, encoding="utf-8", newline="\n")
    # plot from the CSV text itself so re-plotting an emitted file is exact
    svg = render_svg(parse_csv(text), spec.title, spec.param_name, spec.config.log_time)
    svg_path.write_text(svg, encoding="utf-8", newline="\n")
    return csv_path, svg_path


# ---------------------------------------------------------------- sweep config files

_LIST_KEYS = {"alpha2_list", "measures", "times"}
_FLOAT_KEYS = {"lambda_over_gamma0", "delta_over_gamma0", "t_max"}
_INT_KEYS = {"n_points", "seed"}
_KEYS = _LIST_KEYS | _FLOAT_KEYS | _INT_KEYS | {"topology", "output_dir"}
_REQUIRED = ("topology", "lambda_over_gamma0", "alpha2_list")


def parse_config(text: str) -> ExperimentConfig:
    """Parse ``key = value`` lines; ``#`` starts a comment, lists are comma separated."""
    values, lines = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno)
        try:
            if key in _LIST_KEYS:
                items = [s.strip() for s in value.split(",") if s.strip()]
                values[key] = tuple(items) if key == "measures" else tuple(float(s) for s in items)
            elif key in _FLOAT_KEYS:
                values[key] = float(value)
            elif key in _INT_KEYS:
                values[key] = int(value)
            elif key == "topology":
                values[key] = Topology(value)
            else:
                values[key] = value
        except ValueError:
            raise ConfigError(f"bad value for {key}: {value!r}", lineno) from None
        lines[key] = lineno
    for key in _REQUIRED:
        if key not in values:
            raise ConfigError(f"missing required key {key!r}")
    try:
        return ExperimentConfig(**values)
    except ConfigError as exc:
        key = next((k for k in lines if k in str(exc)), None)
        raise ConfigError(str(exc), lines.get(key)) from None


def run_sweep(config_path) -> Path:
    config_path = Path(config_path)
    config = parse_config(config_path.read_text())
    out = Path(config.output_dir)
    if not out.is_absolute():
        out = config_path.parent / out
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"{config_path.stem}.csv"
    csv_path.write_text(format_csv(run_experiment(config)), encoding="utf-8", newline="\n")
    return csv_path


# ---------------------------------------------------------------- generation threshold


def steady_gain(alpha2: float) -> float:
    """Steady-state minus initial trace discord in a common reservoir."""
    init = InitialPhi(alpha2)
    steady = dt_xstate(XStateParams.from_matrix(steady_common(init)))
    start = dt_xstate(XStateParams.from_matrix(init.density_matrix()))
    return steady - start


def threshold_alpha2(width: float = 1e-6) -> float:
    """Largest alpha2 below 1/2 for which the common reservoir raises D_T."""
    lo, hi = 0.0, 0.5
    if not steady_gain(lo) > 0 > steady_gain(hi):
        raise RuntimeError("threshold is not bracketed by [0, 0.5]")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if steady_gain(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2
