"""Experiment driver: curves, peak detection, CSV emission.

Cumulative curves are subset means of per-node trajectories; density
curves are their discrete time derivatives (central differences inside,
one-sided at the ends, so the trapezoid rule recovers the cumulative
increment exactly).  run_experiment reproduces a whole recipe from a
flat key=value config and writes one CSV per (model, curve kind).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path

import numpy as np
import scipy.signal

from .bound import bound_probability, build_system
from .dynamics import (
    DEFAULT_DT,
    DEFAULT_T_MAX,
    MODELS,
    Trajectory,
    integrate_icsis,
    integrate_sis,
    linearized_solution,
    time_grid,
)
from .errors import ValidationError
from .gompertz import (
    ScalarGompertz,
    logistic_inflection,
    net_gompertz_params,
    net_gompertz_trajectory,
    scalar_logistic,
)
from .graphs import Graph, graph_stats, load_graph
from .params import EpidemicParams
from .spectral import SpectralData, classify_regime, decompose, threshold_tau


@dataclass(frozen=True)
class SubsetSpec:
    """A named set of node labels to aggregate over."""

    name: str
    members: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValidationError(f"subset {self.name!r} has no members")

    def resolve(self, graph: Graph) -> np.ndarray:
        return np.array([graph.index_of(label) for label in self.members], dtype=int)


@dataclass
class CurveReport:
    """Mean curve over a node set, with optional density and peaks."""

    name: str
    t: np.ndarray
    cumulative: np.ndarray
    density: np.ndarray | None = None
    peaks: list[tuple[float, float]] = field(default_factory=list)


def cumulative_curve(trajectory: Trajectory, graph: Graph, subset: SubsetSpec | None = None) -> CurveReport:
    """Pointwise mean of the trajectory over a subset (or all nodes)."""
    if subset is None:
        indices = np.arange(trajectory.n_nodes)
        name = "all"
    else:
        indices = subset.resolve(graph)
        name = subset.name
    if indices.size == 0:
        raise ValidationError(f"subset {name!r} resolved to no nodes")
    return CurveReport(name=name, t=trajectory.t, cumulative=trajectory.values[:, indices].mean(axis=1))


def density_curve(report: CurveReport) -> CurveReport:
    """Discrete time derivative of the cumulative curve.

    Central differences at interior points, one-sided at both ends;
    needs at least 3 grid points.
    """
    c = report.cumulative
    t = report.t
    if t.shape[0] < 3:
        raise ValidationError("density needs at least 3 grid points")
    dt = float(t[1] - t[0])
    density = np.empty_like(c)
    density[1:-1] = (c[2:] - c[:-2]) / (2.0 * dt)
    density[0] = (c[1] - c[0]) / dt
    density[-1] = (c[-1] - c[-2]) / dt
    return replace(report, density=density)


def find_peaks(t: np.ndarray, values: np.ndarray, prominence: float) -> list[tuple[float, float]]:
    """Interior local maxima with at least the given prominence, left to right."""
    if prominence < 0.0:
        raise ValidationError(f"prominence must be nonnegative, got {prominence}")
    indices, _ = scipy.signal.find_peaks(values, prominence=prominence if prominence > 0.0 else None)
    return [(float(t[k]), float(values[k])) for k in indices]


def subsets_from_attributes(graph: Graph) -> list[SubsetSpec]:
    """One subset per reported sex value and per group value."""
    by_sex: dict[str, list[str]] = {}
    by_group: dict[str, list[str]] = {}
    for i, attrs in sorted(graph.attributes.items()):
        if attrs.sex:
            by_sex.setdefault(attrs.sex, []).append(graph.labels[i])
        if attrs.group:
            by_group.setdefault(attrs.group, []).append(graph.labels[i])
    subsets = [SubsetSpec(f"sex_{sex}", tuple(members)) for sex, members in sorted(by_sex.items())]
    subsets += [SubsetSpec(f"group_{grp}", tuple(members)) for grp, members in sorted(by_group.items())]
    return subsets


# ---------------------------------------------------------------------------
# Experiment configuration
# ---------------------------------------------------------------------------

CONFIG_KEYS = ("graph", "attributes", "models", "beta", "gamma", "p", "t_max", "dt", "subsets", "outdir")


def parse_number(text: str) -> float:
    """Float parser that also accepts fractions like 1/82."""
    text = text.strip()
    try:
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot parse number {text!r}") from None


def parse_subsets(text: str) -> tuple[SubsetSpec, ...]:
    """Parse 'name1:a,b,c;name2:d,e' into subset specs."""
    subsets = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, members = chunk.partition(":")
        if not name.strip() or not members.strip():
            raise ValidationError(f"malformed subset {chunk!r}, expected 'name:label,label,...'")
        subsets.append(SubsetSpec(name.strip(), tuple(m.strip() for m in members.split(",") if m.strip())))
    return tuple(subsets)


def parse_config(text: str) -> dict[str, str]:
    """Flat key=value config; '#' comments and blank lines are ignored."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in CONFIG_KEYS:
            raise ValidationError(f"config line {lineno}: expected '<key>=<value>' with key in {CONFIG_KEYS}")
        raw[key] = value.strip()
    return raw


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to run one experiment end to end."""

    graph: str
    beta: float
    gamma: float
    p: float
    models: tuple[str, ...] = ()
    attributes: str | None = None
    t_max: float = DEFAULT_T_MAX
    dt: float = DEFAULT_DT
    subsets: tuple[SubsetSpec, ...] = ()
    outdir: str = "out"
    analytic_density: bool = False
    peak_prominence: float | None = None

    def __post_init__(self) -> None:
        for model in self.models:
            if model not in MODELS:
                raise ValidationError(f"unknown model {model!r}, expected one of {MODELS}")


# ---------------------------------------------------------------------------
# CSV output
# ---------------------------------------------------------------------------


def _format(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (str, np.str_)):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.15g}"


def write_csv(path: Path, header: list[str], columns: list[np.ndarray]) -> None:
    """Columnar CSV with 15 significant digits and LF line endings."""
    rows = len(columns[0])
    lines = [",".join(header)]
    for k in range(rows):
        lines.append(",".join(_format(col[k]) for col in columns))
    path.write_text("\n".join(lines) + "\n", newline="\n")


def read_csv(path: Path) -> tuple[list[str], np.ndarray]:
    """Parse a CSV written by write_csv back into header and columns."""
    lines = path.read_text().strip().splitlines()
    header = lines[0].split(",")
    data = np.array([[float(cell) for cell in line.split(",")] for line in lines[1:]])
    return header, data.T


# ---------------------------------------------------------------------------
# Experiment driver
# ---------------------------------------------------------------------------


def _evaluate_model(
    model: str,
    graph: Graph,
    spectral: SpectralData,
    params: EpidemicParams,
    config: ExperimentConfig,
) -> Trajectory:
    if model == "sis":
        return integrate_sis(graph, params, config.t_max, config.dt)
    if model == "icsis":
        return integrate_icsis(graph, params, config.t_max, config.dt)
    grid = time_grid(config.t_max, config.dt)
    if model == "bound":
        return bound_probability(build_system(spectral, params), grid)
    if model == "linearized":
        return linearized_solution(spectral, params, grid)
    if model == "gompertz":
        return net_gompertz_trajectory(net_gompertz_params(spectral, params), grid)
    raise ValidationError(f"unknown model {model!r}")


def _analytic_gompertz_density(ngp, t: np.ndarray, indices: np.ndarray) -> np.ndarray:
    decay = np.exp(-ngp.rate * t)[:, None]
    susceptible = ngp.plateau[None, indices] * np.exp(-ngp.shape[None, indices] * decay)
    per_node = -susceptible * ngp.shape[None, indices] * ngp.rate * decay
    return per_node.mean(axis=1)


def _write_stats(graph: Graph, outdir: Path) -> Path:
    stats = graph_stats(graph)
    path = outdir / "stats.csv"
    names = ["density", "avg_path_length", "clustering", "heterogeneity",
             "spectral_radius", "assortativity", "min_degree", "bipartite"]
    values = [getattr(stats, name) for name in names]
    lines = ["property,value"] + [f"{n},{_format(v)}" for n, v in zip(names, values)]
    path.write_text("\n".join(lines) + "\n", newline="\n")
    return path


def _write_regime(spectral: SpectralData, params: EpidemicParams, outdir: Path) -> Path:
    path = outdir / "regime.txt"
    lines = []
    if params.gamma > 0.0:
        thresholds = threshold_tau(spectral, params)
        lines.append(f"tau={_format(thresholds.tau)}")
        lines.append(f"q_tau={_format(thresholds.q_tau)}")
        lines.append(f"beta_e={_format(params.beta_e)}")
    else:
        lines.extend(["tau=undefined", "q_tau=undefined", "beta_e=undefined"])
    lines.append(f"regime={classify_regime(spectral, params).value}")
    path.write_text("\n".join(lines) + "\n", newline="\n")
    return path


def _write_gompertz_params(spectral: SpectralData, params: EpidemicParams, graph: Graph, outdir: Path) -> Path:
    ngp = net_gompertz_params(spectral, params)
    with np.errstate(invalid="ignore", divide="ignore"):
        times = np.where(ngp.shape > 0.0, np.log(np.abs(ngp.shape)) / ngp.rate, np.nan)
    path = outdir / "gompertz_params.csv"
    lines = ["label,plateau,shape,rate,t_inflection"]
    for i, label in enumerate(graph.labels):
        lines.append(
            f"{label},{_format(ngp.plateau[i])},{_format(ngp.shape[i])},"
            f"{_format(ngp.rate)},{_format(times[i]) if np.isfinite(times[i]) else 'nan'}"
        )
    path.write_text("\n".join(lines) + "\n", newline="\n")
    return path


def run_experiment(config: ExperimentConfig) -> list[Path]:
    """Run every requested model and write all output files.

    Returns the list of written paths.  Emits per-model per-node
    trajectories, cumulative and density curves for all nodes and every
    subset, plus stats.csv, gompertz_params.csv (when gamma > 0), and
    regime.txt.
    """
    if not config.models:
        raise ValidationError("no models selected")

    graph_path = Path(config.graph)
    if not graph_path.exists():
        raise ValidationError(f"graph file not found: {graph_path}")
    attribute_text = None
    if config.attributes:
        attr_path = Path(config.attributes)
        if not attr_path.exists():
            raise ValidationError(f"attribute file not found: {attr_path}")
        attribute_text = attr_path.read_text()
    graph = load_graph(graph_path.read_text(), attribute_text)

    params = EpidemicParams(config.beta, config.gamma, config.p)
    spectral = decompose(graph)
    subsets = list(config.subsets) + subsets_from_attributes(graph)

    outdir = Path(config.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [_write_stats(graph, outdir), _write_regime(spectral, params, outdir)]
    if params.gamma > 0.0:
        written.append(_write_gompertz_params(spectral, params, graph, outdir))

    ngp = net_gompertz_params(spectral, params) if params.gamma > 0.0 else None
    for model in config.models:
        trajectory = _evaluate_model(model, graph, spectral, params, config)

        nodes_path = outdir / f"{model}_nodes.csv"
        write_csv(
            nodes_path,
            ["t", *graph.labels],
            [trajectory.t] + [trajectory.values[:, i] for i in range(graph.n)],
        )
        written.append(nodes_path)

        for subset in [None, *subsets]:
            report = density_curve(cumulative_curve(trajectory, graph, subset))
            if config.analytic_density and model == "gompertz" and ngp is not None:
                indices = subset.resolve(graph) if subset else np.arange(graph.n)
                report.density = _analytic_gompertz_density(ngp, trajectory.t, indices)
            cum_path = outdir / f"{model}_cumulative_{report.name}.csv"
            write_csv(cum_path, ["t", "mean"], [report.t, report.cumulative])
            den_path = outdir / f"{model}_density_{report.name}.csv"
            write_csv(den_path, ["t", "mean"], [report.t, report.density])
            written.extend([cum_path, den_path])
            if config.peak_prominence is not None:
                report.peaks = find_peaks(report.t, report.density, config.peak_prominence)
                peaks_path = outdir / f"{model}_peaks_{report.name}.csv"
                write_csv(
                    peaks_path,
                    ["t", "height"],
                    [np.array([p[0] for p in report.peaks]), np.array([p[1] for p in report.peaks])],
                )
                written.append(peaks_path)
    return written


# ---------------------------------------------------------------------------
# Scalar comparison recipe
# ---------------------------------------------------------------------------


def scalar_comparison(
    n0: float,
    beta: float,
    gamma: float,
    t_min: float = -20.0,
    t_max: float = 60.0,
    dt: float = 0.01,
    outdir: str | Path = "out",
) -> dict[str, float]:
    """Scalar logistic-vs-Gompertz comparison with shared parameters.

    The SIS reduction fixes n_inf = 1 - gamma/beta and rate = beta -
    gamma; the Gompertz twin uses asymptote n_inf and shape
    log(n_inf/n0).  Writes the curves and an inflection summary; returns
    the inflection numbers.  The grid extends to negative times to show
    both curves whole.
    """
    if beta <= gamma:
        raise ValidationError("scalar comparison requires beta > gamma so the epidemic persists")
    n_inf = 1.0 - gamma / beta
    if not 0.0 < n0 < n_inf:
        raise ValidationError(f"need 0 < n0 < n_inf = {n_inf}, got n0={n0}")
    rate = beta - gamma
    curve = ScalarGompertz(asymptote=n_inf, shape=float(np.log(n_inf / n0)), rate=rate)

    t = np.arange(round((t_max - t_min) / dt) + 1) * dt + t_min
    logistic = scalar_logistic(n0, n_inf, rate, t)
    logistic_density = rate * logistic * (1.0 - logistic / n_inf)
    gompertz_values = curve.value(t)
    gompertz_density = curve.density(t)

    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(
        out / "scalar_curves.csv",
        ["t", "logistic", "gompertz", "logistic_density", "gompertz_density"],
        [t, logistic, gompertz_values, logistic_density, gompertz_density],
    )

    log_t, log_v = logistic_inflection(n0, n_inf, rate)
    summary = {
        "logistic_inflection_time": log_t,
        "logistic_inflection_value": log_v,
        "gompertz_inflection_time": curve.inflection_time,
        "gompertz_inflection_value": curve.inflection_value,
    }
    lines = ["model,t_inflection,value"]
    lines.append(f"logistic,{_format(log_t)},{_format(log_v)}")
    lines.append(f"gompertz,{_format(curve.inflection_time)},{_format(curve.inflection_value)}")
    (out / "scalar_inflection.csv").write_text("\n".join(lines) + "\n", newline="\n")
    return summary
