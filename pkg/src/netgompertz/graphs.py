"""Graph ingestion and topological descriptors.

Input graphs are simple, undirected, and connected, addressed by string
labels.  The loader assigns node indices in first-appearance order; that
order is the canonical index order for every downstream matrix and CSV
column.
"""

from __future__ import annotations

import csv
import io
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import LoadError, ValidationError


@dataclass(frozen=True)
class NodeAttributes:
    """Optional per-node metadata; empty strings mean "not reported"."""

    sex: str = ""
    group: str = ""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Attributes:
        labels: node labels in canonical (first-appearance) index order.
        edges: unordered index pairs (i, j) with i < j.
        adjacency: symmetric 0/1 float matrix with zero diagonal.
        attributes: node index -> NodeAttributes, possibly empty.
    """

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    adjacency: np.ndarray
    attributes: dict[int, NodeAttributes] = field(default_factory=dict)

    def __post_init__(self) -> None:
        a = self.adjacency
        if a.shape != (self.n, self.n):
            raise ValidationError("adjacency shape does not match label count")
        if not np.array_equal(a, a.T):
            raise ValidationError("adjacency must be symmetric")
        if np.any(np.diag(a) != 0.0):
            raise ValidationError("adjacency must have a zero diagonal")
        if not np.all((a == 0.0) | (a == 1.0)):
            raise ValidationError("adjacency entries must be 0 or 1")
        a.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        d = self.adjacency.sum(axis=1).astype(int)
        d.setflags(write=False)
        return d

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown node label {label!r}") from None

    @cached_property
    def neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            lists[i].append(j)
            lists[j].append(i)
        return tuple(tuple(ns) for ns in lists)


def load_graph(edge_list_text: str, attribute_text: str | None = None) -> Graph:
    """Parse and validate a graph from edge-list text.

    One edge per line, two whitespace-separated labels; '#'-prefixed lines
    and blank lines are ignored.  The optional attribute text is CSV with
    header ``label,sex,group``; empty fields are allowed.

    Raises:
        LoadError: self-loop, duplicate edge, malformed line, disconnected
            graph, or attribute row referencing an unknown label.  The
            message names the offending line.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def node(label: str, lineno: int) -> int:
        if "," in label:
            raise LoadError(f"edge list line {lineno}: label {label!r} may not contain a comma")
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for lineno, raw in enumerate(edge_list_text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise LoadError(f"edge list line {lineno}: expected two labels, got {raw!r}")
        a, b = parts
        if a == b:
            raise LoadError(f"edge list line {lineno}: self-loop {raw!r}")
        i, j = node(a, lineno), node(b, lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise LoadError(f"edge list line {lineno}: duplicate edge {raw!r}")
        seen.add(key)
        edges.append(key)

    if not labels:
        raise LoadError("edge list is empty")

    n = len(labels)
    adjacency = np.zeros((n, n))
    for i, j in edges:
        adjacency[i, j] = 1.0
        adjacency[j, i] = 1.0

    reached = _bfs_component(edges, n, start=0)
    if len(reached) != n:
        missing = next(labels[i] for i in range(n) if i not in reached)
        raise LoadError(
            f"disconnected graph: node {missing!r} is unreachable from {labels[0]!r}"
        )

    attributes: dict[int, NodeAttributes] = {}
    if attribute_text is not None:
        attributes = _parse_attributes(attribute_text, index)

    return Graph(tuple(labels), tuple(edges), adjacency, attributes)


def _bfs_component(edges: list[tuple[int, int]], n: int, start: int) -> set[int]:
    lists: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        lists[i].append(j)
        lists[j].append(i)
    reached = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in lists[u]:
            if v not in reached:
                reached.add(v)
                queue.append(v)
    return reached


def _parse_attributes(text: str, index: dict[str, int]) -> dict[int, NodeAttributes]:
    reader = csv.reader(io.StringIO(text))
    rows = [(lineno, row) for lineno, row in enumerate(reader, start=1) if row]
    if not rows:
        raise LoadError("attribute file is empty")
    header = [cell.strip().lower() for cell in rows[0][1]]
    if header != ["label", "sex", "group"]:
        raise LoadError(f"attribute file line 1: expected header 'label,sex,group', got {rows[0][1]!r}")
    attributes: dict[int, NodeAttributes] = {}
    for lineno, row in rows[1:]:
        if len(row) != 3:
            raise LoadError(f"attribute file line {lineno}: expected 3 fields, got {row!r}")
        label, sex, group = (cell.strip() for cell in row)
        if label not in index:
            raise LoadError(f"attribute file line {lineno}: unknown label {label!r}")
        if sex not in ("", "M", "F"):
            raise LoadError(f"attribute file line {lineno}: sex must be 'M', 'F', or empty, got {sex!r}")
        attributes[index[label]] = NodeAttributes(sex=sex, group=group)
    return attributes


# ---------------------------------------------------------------------------
# Topological descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphStats:
    """Scalar descriptors of one graph.

    assortativity is None when the degree distribution over edge ends has
    zero variance (regular graphs), where the correlation is undefined.
    """

    density: float
    avg_path_length: float
    clustering: float
    heterogeneity: float
    spectral_radius: float
    assortativity: float | None
    min_degree: int
    bipartite: bool


def edge_density(graph: Graph) -> float:
    """Fraction of node pairs that are edges, 2m / n(n-1)."""
    n = graph.n
    return 2.0 * graph.m / (n * (n - 1))


def avg_path_length(graph: Graph) -> float:
    """Mean BFS distance over unordered node pairs."""
    n = graph.n
    lists = graph.neighbor_lists
    total = 0
    for source in range(n):
        dist = np.full(n, -1, dtype=int)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in lists[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        total += int(dist[source + 1 :].sum())
    return total / (n * (n - 1) / 2)


def avg_clustering(graph: Graph) -> float:
    """Mean local clustering; nodes of degree < 2 contribute 0."""
    a = graph.adjacency
    coeffs = np.zeros(graph.n)
    for i in range(graph.n):
        nbrs = np.flatnonzero(a[i])
        k = nbrs.size
        if k < 2:
            continue
        links = a[np.ix_(nbrs, nbrs)].sum() / 2.0
        coeffs[i] = 2.0 * links / (k * (k - 1))
    return float(coeffs.mean())


def degree_heterogeneity(graph: Graph) -> float:
    """Normalized spread of degrees across edges.

    Sums (k_i**-0.5 - k_j**-0.5)**2 over edges and divides by
    n - 2*sqrt(n-1), which yields 0 for regular graphs and 1 for stars.
    """
    n = graph.n
    if n < 3:
        raise ValidationError(f"degree heterogeneity requires n >= 3, got n={n}")
    k = graph.degrees
    total = 0.0
    for i, j in graph.edges:
        total += (k[i] ** -0.5 - k[j] ** -0.5) ** 2
    return total / (n - 2.0 * math.sqrt(n - 1))


def assortativity(graph: Graph) -> float | None:
    """Pearson correlation of end-point degrees over the doubled edge list.

    Returns None (undefined) when every edge end has the same degree.
    """
    k = graph.degrees
    x = np.array([k[i] for i, j in graph.edges] + [k[j] for i, j in graph.edges], dtype=float)
    y = np.array([k[j] for i, j in graph.edges] + [k[i] for i, j in graph.edges], dtype=float)
    x_c = x - x.mean()
    y_c = y - y.mean()
    var = float(x_c @ x_c)
    if var == 0.0:
        return None
    return float((x_c @ y_c) / var)


def is_bipartite(graph: Graph) -> tuple[bool, np.ndarray | None]:
    """BFS two-coloring; returns (True, colors) or (False, None)."""
    n = graph.n
    lists = graph.neighbor_lists
    colors = np.full(n, -1, dtype=int)
    colors[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in lists[u]:
            if colors[v] < 0:
                colors[v] = 1 - colors[u]
                queue.append(v)
            elif colors[v] == colors[u]:
                return False, None
    return True, colors


def graph_stats(graph: Graph) -> GraphStats:
    """All scalar descriptors in one pass."""
    lam1 = float(np.linalg.eigvalsh(graph.adjacency)[-1])
    return GraphStats(
        density=edge_density(graph),
        avg_path_length=avg_path_length(graph),
        clustering=avg_clustering(graph),
        heterogeneity=degree_heterogeneity(graph),
        spectral_radius=lam1,
        assortativity=assortativity(graph),
        min_degree=int(graph.degrees.min()),
        bipartite=is_bipartite(graph)[0],
    )
