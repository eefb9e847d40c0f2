"""Command-line interface.

Subcommands: stats, simulate, compare, threshold, inflection, scalar.
Exit codes: 0 success, 1 validation error, 2 numerical error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .analysis import (
    ExperimentConfig,
    parse_config,
    parse_number,
    parse_subsets,
    run_experiment,
    scalar_comparison,
    write_csv,
    _write_gompertz_params,
    _write_regime,
    _write_stats,
)
from .bound import bound_probability, build_system
from .dynamics import DEFAULT_DT, DEFAULT_T_MAX, integrate_sis, linearized_solution, time_grid
from .errors import NumericalError, ValidationError
from .graphs import load_graph
from .params import EpidemicParams
from .spectral import classify_regime, decompose, threshold_tau


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; usage errors are validation
        raise ValidationError(message)


def _load(graph_path: str, attributes: str | None):
    path = Path(graph_path)
    if not path.exists():
        raise ValidationError(f"graph file not found: {path}")
    attr_text = None
    if attributes:
        attr_path = Path(attributes)
        if not attr_path.exists():
            raise ValidationError(f"attribute file not found: {attr_path}")
        attr_text = attr_path.read_text()
    return load_graph(path.read_text(), attr_text)


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--beta", type=parse_number, help="infection rate")
    parser.add_argument("--gamma", type=parse_number, help="recovery rate")
    parser.add_argument("--p", type=parse_number, help="initial infection probability (accepts a/b)")


def _require_params(args) -> EpidemicParams:
    missing = [name for name in ("beta", "gamma", "p") if getattr(args, name) is None]
    if missing:
        raise ValidationError(f"missing required parameter(s): {', '.join('--' + m for m in missing)}")
    return EpidemicParams(args.beta, args.gamma, args.p)


def _cmd_stats(args) -> int:
    graph = _load(args.graph, args.attributes)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    path = _write_stats(graph, outdir)
    print(path.read_text(), end="")
    print(f"wrote {path}")
    return 0


def _cmd_simulate(args) -> int:
    raw = {}
    if args.config:
        config_path = Path(args.config)
        if not config_path.exists():
            raise ValidationError(f"config file not found: {config_path}")
        raw = parse_config(config_path.read_text())

    def pick(flag_value, key, convert, default=None):
        if flag_value is not None:
            return flag_value
        if key in raw:
            return convert(raw[key])
        return default

    graph = pick(args.graph, "graph", str)
    if graph is None:
        raise ValidationError("no graph given (positional argument or config key 'graph')")
    models_flag = tuple(m.strip() for m in args.model.split(",")) if args.model else None
    config = ExperimentConfig(
        graph=graph,
        attributes=pick(args.attributes, "attributes", str),
        models=pick(models_flag, "models", lambda v: tuple(m.strip() for m in v.split(","))) or (),
        beta=pick(args.beta, "beta", parse_number),
        gamma=pick(args.gamma, "gamma", parse_number),
        p=pick(args.p, "p", parse_number),
        t_max=pick(args.t_max, "t_max", parse_number, DEFAULT_T_MAX),
        dt=pick(args.dt, "dt", parse_number, DEFAULT_DT),
        subsets=pick(parse_subsets(args.subsets) if args.subsets else None, "subsets", parse_subsets, ()),
        outdir=pick(args.outdir, "outdir", str, "out"),
        analytic_density=args.analytic_density,
        peak_prominence=args.peak_prominence,
    )
    if config.beta is None or config.gamma is None or config.p is None:
        raise ValidationError("beta, gamma, and p must come from flags or the config file")
    written = run_experiment(config)
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_compare(args) -> int:
    graph = _load(args.graph, None)
    params = _require_params(args)
    spectral = decompose(graph)
    grid = time_grid(args.t_max, args.dt)

    exact = integrate_sis(graph, params, args.t_max, args.dt)
    bound = bound_probability(build_system(spectral, params), grid)
    linear = linearized_solution(spectral, params, grid)

    exact_over_bound = (exact.values - bound.values).max(axis=0)
    bound_over_linear = (bound.values - linear.values).max(axis=0)

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / "ordering_violations.csv"
    write_csv(
        path,
        ["label", "max_exact_minus_bound", "max_bound_minus_linearized"],
        [np.array(graph.labels), exact_over_bound, bound_over_linear],
    )
    print(f"max over nodes of (exact - bound):       {exact_over_bound.max():.3e}")
    print(f"max over nodes of (bound - linearized):  {bound_over_linear.max():.3e}")
    print(f"wrote {path}")
    return 0


def _cmd_threshold(args) -> int:
    graph = _load(args.graph, None)
    params = _require_params(args)
    spectral = decompose(graph)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    path = _write_regime(spectral, params, outdir)
    print(path.read_text(), end="")
    print(f"wrote {path}")
    return 0


def _cmd_inflection(args) -> int:
    graph = _load(args.graph, None)
    params = _require_params(args)
    if params.gamma <= 0.0:
        raise ValidationError("inflection output requires gamma > 0")
    spectral = decompose(graph)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    path = _write_gompertz_params(spectral, params, graph, outdir)
    print(f"wrote {path}")
    return 0


def _cmd_scalar(args) -> int:
    if args.fig1:
        n0, beta, gamma = 0.1, 0.2, 0.04
    else:
        if args.n0 is None or args.beta is None or args.gamma is None:
            raise ValidationError("scalar needs --fig1 or all of --n0, --beta, --gamma")
        n0, beta, gamma = args.n0, args.beta, args.gamma
    summary = scalar_comparison(n0, beta, gamma, outdir=args.outdir)
    for key, value in summary.items():
        print(f"{key}={value:.6f}")
    print(f"wrote {Path(args.outdir) / 'scalar_curves.csv'}")
    print(f"wrote {Path(args.outdir) / 'scalar_inflection.csv'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="netgompertz", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="topological descriptors of a graph")
    p_stats.add_argument("graph")
    p_stats.add_argument("--attributes")
    p_stats.add_argument("--outdir", default="out")
    p_stats.set_defaults(func=_cmd_stats)

    p_sim = sub.add_parser("simulate", help="run models and emit curve CSVs")
    p_sim.add_argument("graph", nargs="?")
    p_sim.add_argument("--config", help="key=value config file; flags override")
    p_sim.add_argument("--model", help="comma-separated: sis,icsis,bound,linearized,gompertz")
    p_sim.add_argument("--attributes")
    _add_param_flags(p_sim)
    p_sim.add_argument("--t-max", dest="t_max", type=parse_number)
    p_sim.add_argument("--dt", type=parse_number)
    p_sim.add_argument("--subsets", help="name:a,b,c;name2:d,e")
    p_sim.add_argument("--outdir")
    p_sim.add_argument("--analytic-density", action="store_true",
                       help="analytic Gompertz density instead of finite differences")
    p_sim.add_argument("--peak-prominence", type=parse_number,
                       help="also emit peak CSVs at this prominence")
    p_sim.set_defaults(func=_cmd_simulate)

    p_cmp = sub.add_parser("compare", help="per-node violation of exact <= bound <= linearized")
    p_cmp.add_argument("graph")
    _add_param_flags(p_cmp)
    p_cmp.add_argument("--t-max", dest="t_max", type=parse_number, default=50.0)
    p_cmp.add_argument("--dt", type=parse_number, default=DEFAULT_DT)
    p_cmp.add_argument("--outdir", default="out")
    p_cmp.set_defaults(func=_cmd_compare)

    p_thr = sub.add_parser("threshold", help="thresholds and regime classification")
    p_thr.add_argument("graph")
    _add_param_flags(p_thr)
    p_thr.add_argument("--outdir", default="out")
    p_thr.set_defaults(func=_cmd_threshold)

    p_inf = sub.add_parser("inflection", help="per-node Gompertz parameters and inflection times")
    p_inf.add_argument("graph")
    _add_param_flags(p_inf)
    p_inf.add_argument("--outdir", default="out")
    p_inf.set_defaults(func=_cmd_inflection)

    p_sca = sub.add_parser("scalar", help="scalar logistic-vs-Gompertz comparison")
    p_sca.add_argument("--fig1", action="store_true",
                       help="preset n0=0.1, beta=0.2, gamma=0.04")
    p_sca.add_argument("--n0", type=parse_number)
    p_sca.add_argument("--beta", type=parse_number)
    p_sca.add_argument("--gamma", type=parse_number)
    p_sca.add_argument("--outdir", default="out")
    p_sca.set_defaults(func=_cmd_scalar)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
