"""Networked SIS dynamics, a closed-form worst-case bound, and the
network Gompertz curves that bound induces.

The package simulates the exact SIS contagion model on arbitrary
connected graphs, evaluates a spectral worst-case upper bound on it in
closed form, and exposes the bound's large-time Gompertz structure:
per-node asymptotes and shapes, a global rate, spectral thresholds, and
inflection times.  A CLI drives whole experiments to CSV.
"""

from .analysis import (
    CurveReport,
    ExperimentConfig,
    SubsetSpec,
    cumulative_curve,
    density_curve,
    find_peaks,
    run_experiment,
    scalar_comparison,
    subsets_from_attributes,
)
from .bound import (
    BoundSystem,
    bound_probability,
    bound_surprisal,
    bound_surprisal_affine,
    bound_surprisal_katz,
    build_system,
    decay_limit_probability,
    mode_amplitudes,
)
from .dynamics import (
    Trajectory,
    from_surprisal,
    integrate_icsis,
    integrate_sis,
    linearized_solution,
    surprisal,
    time_grid,
)
from .errors import (
    DegenerateThresholdError,
    IntegrationError,
    LoadError,
    NetGompertzError,
    NumericalError,
    SingularModeError,
    ValidationError,
)
from .gompertz import (
    NetGompertzParams,
    ScalarGompertz,
    inflection_times,
    logistic_inflection,
    net_gompertz_params,
    net_gompertz_susceptible,
    net_gompertz_trajectory,
    scalar_gompertz,
    scalar_gompertz_density,
    scalar_logistic,
    supercritical_asymptote,
)
from .graphs import (
    Graph,
    GraphStats,
    NodeAttributes,
    assortativity,
    avg_clustering,
    avg_path_length,
    degree_heterogeneity,
    edge_density,
    graph_stats,
    is_bipartite,
    load_graph,
)
from .params import EpidemicParams
from .spectral import (
    Regime,
    SpectralData,
    Thresholds,
    classify_regime,
    decompose,
    katz_centrality,
    threshold_tau,
)

__version__ = "0.1.0"

__all__ = [
    "BoundSystem",
    "CurveReport",
    "DegenerateThresholdError",
    "EpidemicParams",
    "ExperimentConfig",
    "Graph",
    "GraphStats",
    "IntegrationError",
    "LoadError",
    "NetGompertzError",
    "NetGompertzParams",
    "NodeAttributes",
    "NumericalError",
    "Regime",
    "ScalarGompertz",
    "SingularModeError",
    "SpectralData",
    "SubsetSpec",
    "Thresholds",
    "Trajectory",
    "ValidationError",
    "assortativity",
    "avg_clustering",
    "avg_path_length",
    "bound_probability",
    "bound_surprisal",
    "bound_surprisal_affine",
    "bound_surprisal_katz",
    "build_system",
    "classify_regime",
    "cumulative_curve",
    "decay_limit_probability",
    "decompose",
    "degree_heterogeneity",
    "density_curve",
    "edge_density",
    "find_peaks",
    "from_surprisal",
    "graph_stats",
    "inflection_times",
    "integrate_icsis",
    "integrate_sis",
    "is_bipartite",
    "katz_centrality",
    "linearized_solution",
    "load_graph",
    "logistic_inflection",
    "mode_amplitudes",
    "net_gompertz_params",
    "net_gompertz_susceptible",
    "net_gompertz_trajectory",
    "run_experiment",
    "scalar_comparison",
    "scalar_gompertz",
    "scalar_gompertz_density",
    "scalar_logistic",
    "subsets_from_attributes",
    "supercritical_asymptote",
    "surprisal",
    "threshold_tau",
    "time_grid",
]
