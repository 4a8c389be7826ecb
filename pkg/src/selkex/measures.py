"""Node-level measures of a co-occurrence network.

Degree / in- / out-degree centrality, closeness, betweenness, strength and
selectivity (mean edge weight per neighbor), with in/out variants.

Distances are hop counts over directed edges; weights enter only the
strength and selectivity measures. Self-loops are kept in the network but
excluded from every degree, strength and selectivity computation here.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import sparse

from .cooc_network import CoocNetwork

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NodeMetrics:
    node: int
    word: str
    k: int
    k_in: int
    k_out: int
    dc: float
    dc_in: float
    dc_out: float
    cc: float
    bc: float
    s: int
    s_in: int
    s_out: int
    e: float
    e_in: float
    e_out: float


def _successors(net: CoocNetwork, node: int) -> set[int]:
    return {v for v, _ in net._out.get(node, ()) if v != node}


def _predecessors(net: CoocNetwork, node: int) -> set[int]:
    return {u for u, _ in net._in.get(node, ()) if u != node}


def degree_centrality(net: CoocNetwork, node: int) -> float:
    """Distinct non-self neighbors (either direction) over N-1."""
    n = net.n_nodes
    if n < 2:
        logger.debug("degree centrality degenerate: N=%d < 2", n)
        return 0.0
    k = len(_predecessors(net, node) | _successors(net, node))
    return k / (n - 1)


def in_out_degree_centrality(net: CoocNetwork, node: int) -> tuple[float, float]:
    n = net.n_nodes
    if n < 2:
        logger.debug("in/out degree centrality degenerate: N=%d < 2", n)
        return 0.0, 0.0
    return (
        len(_predecessors(net, node)) / (n - 1),
        len(_successors(net, node)) / (n - 1),
    )


def _shortest_path_stats(net: CoocNetwork) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Level-synchronous Brandes pass vectorized over all sources.

    Returns (reach, dist_sum, raw_bc): per source s, reach[s] counts nodes
    reachable from s (s excluded) and dist_sum[s] their hop distances
    summed; raw_bc[v] is the unnormalized ordered-pair dependency sum.
    Self-loops never lie on a shortest path and are left out of the
    adjacency matrix.
    """
    n = net.n_nodes
    pairs = [(u, v) for (u, v) in net.edges if u != v]
    rows = np.array([u for u, _ in pairs], dtype=np.int64)
    cols = np.array([v for _, v in pairs], dtype=np.int64)
    ones = np.ones(len(pairs))
    # column s of every matrix below belongs to source s
    adj_t = sparse.csr_matrix((ones, (cols, rows)), shape=(n, n))
    adj = sparse.csr_matrix((ones, (rows, cols)), shape=(n, n))
    unseen = ~np.eye(n, dtype=bool)
    sigma = np.eye(n)
    frontier = np.eye(n)
    reach = np.zeros(n, dtype=np.int64)
    dist_sum = np.zeros(n, dtype=np.int64)
    # frontiers[d] is sigma restricted to nodes at distance d (a node's
    # path count lives entirely on its own BFS level)
    frontiers = [frontier]
    while True:
        paths = adj_t @ frontier
        new = paths > 0
        new &= unseen
        counts = new.sum(axis=0)
        if not counts.any():
            break
        reach += counts
        dist_sum += len(frontiers) * counts
        unseen &= ~new
        paths *= new
        frontiers.append(paths)
        sigma += paths
        frontier = paths
    delta = np.zeros((n, n))
    inv_sigma = 1.0 / np.where(sigma > 0, sigma, 1.0)
    for level in range(len(frontiers) - 1, 0, -1):
        at_level = 1.0 + delta
        at_level *= inv_sigma
        at_level *= frontiers[level] > 0
        spread = adj @ at_level
        spread *= frontiers[level - 1]
        delta += spread
    # delta[s, s] is the source's own dependency; Brandes drops it
    raw_bc = delta.sum(axis=1) - np.diagonal(delta)
    return reach, dist_sum, raw_bc


def _closeness_value(reach: int, dist_sum: int, n: int) -> float:
    if reach == 0 or dist_sum == 0:
        return 0.0
    # Sum restricted to reachable nodes, rescaled by coverage R/(N-1) so
    # scores stay comparable on disconnected graphs.
    return (reach / dist_sum) * (reach / (n - 1))


def closeness(net: CoocNetwork, node: int) -> float:
    """Reachability-normalized closeness over directed hop distances."""
    n = net.n_nodes
    if n < 2:
        return 0.0
    dist = {node: 0}
    queue = deque([node])
    while queue:
        v = queue.popleft()
        for w, _ in net._out.get(v, ()):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return _closeness_value(len(dist) - 1, sum(dist.values()), n)


def betweenness(net: CoocNetwork, node: int) -> float:
    """Ordered-pair betweenness normalized by (N-1)(N-2)."""
    n = net.n_nodes
    if n < 3:
        logger.debug("betweenness degenerate: N=%d < 3", n)
        return 0.0
    _, _, raw_bc = _shortest_path_stats(net)
    return float(raw_bc[node]) / ((n - 1) * (n - 2))


def strength(net: CoocNetwork, node: int) -> tuple[int, int, int]:
    """(s, s_in, s_out) with self-loop weights excluded."""
    s_in = sum(w for u, w in net._in.get(node, ()) if u != node)
    s_out = sum(w for v, w in net._out.get(node, ()) if v != node)
    return s_in + s_out, s_in, s_out


def selectivity(net: CoocNetwork, node: int) -> tuple[float, float, float]:
    """(e, e_in, e_out): strength over distinct-neighbor degree, 0 at degree 0."""
    s, s_in, s_out = strength(net, node)
    k_in = len(_predecessors(net, node))
    k_out = len(_successors(net, node))
    k = len(_predecessors(net, node) | _successors(net, node))
    e = s / k if k else 0.0
    e_in = s_in / k_in if k_in else 0.0
    e_out = s_out / k_out if k_out else 0.0
    return e, e_in, e_out


def compute_all(net: CoocNetwork, with_path_centrality: bool = True) -> list[NodeMetrics]:
    """One NodeMetrics per node, ordered by node id.

    Closeness and betweenness share a single per-source BFS pass, the
    dominant cost; pipelines that only consume degrees and selectivities
    can switch it off (cc and bc are then reported as 0).
    """
    n = net.n_nodes
    if n == 0:
        return []
    if with_path_centrality:
        reach, dist_sum, raw_bc = _shortest_path_stats(net)
        cc = [
            _closeness_value(int(reach[s]), int(dist_sum[s]), n) if n >= 2 else 0.0
            for s in range(n)
        ]
    else:
        raw_bc = np.zeros(n)
        cc = [0.0] * n
    bc_norm = (n - 1) * (n - 2) if n >= 3 and with_path_centrality else 0
    metrics = []
    for node in range(n):
        pred = _predecessors(net, node)
        succ = _successors(net, node)
        k, k_in, k_out = len(pred | succ), len(pred), len(succ)
        s, s_in, s_out = strength(net, node)
        metrics.append(
            NodeMetrics(
                node=node,
                word=net.words[node],
                k=k,
                k_in=k_in,
                k_out=k_out,
                dc=k / (n - 1) if n >= 2 else 0.0,
                dc_in=k_in / (n - 1) if n >= 2 else 0.0,
                dc_out=k_out / (n - 1) if n >= 2 else 0.0,
                cc=cc[node],
                bc=float(raw_bc[node]) / bc_norm if bc_norm else 0.0,
                s=s,
                s_in=s_in,
                s_out=s_out,
                e=s / k if k else 0.0,
                e_in=s_in / k_in if k_in else 0.0,
                e_out=s_out / k_out if k_out else 0.0,
            )
        )
    return metrics


_METRIC_COLUMNS = (
    "word", "k", "k_in", "k_out", "dc", "dc_in", "dc_out",
    "cc", "bc", "s", "s_in", "s_out", "e", "e_in", "e_out",
)


def format_metrics_tsv(metrics: list[NodeMetrics]) -> str:
    """Metrics table as TSV, one row per node, sorted by word; reals use
    6 decimal places for byte-stable dumps."""
    lines = ["\t".join(_METRIC_COLUMNS)]
    for m in sorted(metrics, key=lambda m: m.word):
        lines.append(
            "\t".join(
                [
                    m.word,
                    str(m.k), str(m.k_in), str(m.k_out),
                    f"{m.dc:.6f}", f"{m.dc_in:.6f}", f"{m.dc_out:.6f}",
                    f"{m.cc:.6f}", f"{m.bc:.6f}",
                    str(m.s), str(m.s_in), str(m.s_out),
                    f"{m.e:.6f}", f"{m.e_in:.6f}", f"{m.e_out:.6f}",
                ]
            )
        )
    return "\n".join(lines) + "\n"


def write_metrics_tsv(metrics: list[NodeMetrics], path: str | Path) -> None:
    Path(path).write_text(format_metrics_tsv(metrics), encoding="utf-8")
