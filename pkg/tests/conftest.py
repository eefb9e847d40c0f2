"""Shared fixtures: canonical small graphs and random-graph factories."""

from __future__ import annotations

import numpy as np
import pytest

from netgompertz import EpidemicParams, load_graph


def complete_text(n: int) -> str:
    return "\n".join(f"n{i} n{j}" for i in range(n) for j in range(i + 1, n))


def cycle_text(n: int) -> str:
    return "\n".join(f"n{i} n{(i + 1) % n}" for i in range(n))


def path_text(n: int) -> str:
    return "\n".join(f"n{i} n{i + 1}" for i in range(n - 1))


def star_text(n: int) -> str:
    return "\n".join(f"hub leaf{i}" for i in range(1, n))


def random_connected_text(rng: np.random.Generator, n: int, extra_prob: float = 0.2) -> str:
    """Random spanning tree plus independent extra edges."""
    lines = []
    present: set[tuple[int, int]] = set()
    order = [int(v) for v in rng.permutation(n)]
    for k in range(1, n):
        parent = order[int(rng.integers(0, k))]
        lines.append(f"n{order[k]} n{parent}")
        present.add((min(order[k], parent), max(order[k], parent)))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in present and rng.random() < extra_prob:
                lines.append(f"n{i} n{j}")
                present.add((i, j))
    return "\n".join(lines)


def random_connected_graph(rng: np.random.Generator, n: int, extra_prob: float = 0.2):
    return load_graph(random_connected_text(rng, n, extra_prob))


@pytest.fixture
def k2():
    return load_graph("a b")


@pytest.fixture
def k3():
    return load_graph(complete_text(3))


@pytest.fixture
def c4():
    return load_graph(cycle_text(4))


@pytest.fixture
def p3():
    return load_graph(path_text(3))


@pytest.fixture
def star5():
    return load_graph(star_text(5))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def sample_params(rng: np.random.Generator, **overrides) -> EpidemicParams:
    values = {
        "beta": float(rng.uniform(0.05, 0.5)),
        "gamma": float(rng.uniform(0.05, 0.5)),
        "p": float(rng.uniform(0.05, 0.3)),
    }
    values.update(overrides)
    return EpidemicParams(**values)
