"""Directed, weighted word co-occurrence network built per document."""
from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Iterable, Mapping

from .text_ingest import Document


class CoocNetwork:
    """Immutable directed weighted graph of normalized words.

    Node ids are dense ints in [0, N); `words[i]` gives the word for id i.
    Edge weights are positive integer adjacency counts. Self-loops are kept.
    """

    def __init__(self, words: Iterable[str], edges: Mapping[tuple[int, int], int]):
        self.words: tuple[str, ...] = tuple(words)
        self.index: dict[str, int] = {w: i for i, w in enumerate(self.words)}
        if len(self.index) != len(self.words):
            raise ValueError("duplicate words in node list")
        self.edges: dict[tuple[int, int], int] = dict(edges)
        n = len(self.words)
        for (u, v), w in self.edges.items():
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references unknown node")
            if w < 1:
                raise ValueError(f"edge ({u}, {v}) has non-positive weight {w}")
        self._out: dict[int, list[tuple[int, int]]] = defaultdict(list)
        self._in: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for (u, v), w in self.edges.items():
            self._out[u].append((v, w))
            self._in[v].append((u, w))

    @property
    def n_nodes(self) -> int:
        return len(self.words)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"CoocNetwork(N={self.n_nodes}, K={self.n_edges})"


def build_network(doc: Document) -> CoocNetwork:
    """Count directed adjacencies between consecutive tokens within sentences.

    Every distinct normalized word becomes a node even if isolated; pairs
    spanning a sentence boundary contribute nothing; self-loops (a word
    adjacent to itself) are recorded.
    """
    words: list[str] = []
    index: dict[str, int] = {}
    for t in doc.tokens:
        if t.normalized not in index:
            index[t.normalized] = len(words)
            words.append(t.normalized)
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for prev, cur in zip(doc.tokens, doc.tokens[1:]):
        if prev.sentence_index != cur.sentence_index:
            continue
        counts[(index[prev.normalized], index[cur.normalized])] += 1
    return CoocNetwork(words, counts)


def _check_node(net: CoocNetwork, node: int) -> None:
    if not (0 <= node < net.n_nodes):
        raise ValueError(f"node id {node} outside [0, {net.n_nodes})")


def out_neighbors(net: CoocNetwork, node: int) -> list[tuple[int, int]]:
    """All (target, weight) pairs for edges leaving `node`."""
    _check_node(net, node)
    return list(net._out.get(node, ()))


def in_neighbors(net: CoocNetwork, node: int) -> list[tuple[int, int]]:
    """All (source, weight) pairs for edges entering `node`."""
    _check_node(net, node)
    return list(net._in.get(node, ()))


def format_edge_tsv(net: CoocNetwork) -> str:
    """Edge list as TSV, lexicographic by source then target word.

    First line is a header comment recording node and edge line counts so
    dumps are self-describing and diffable.
    """
    rows = sorted(
        (net.words[u], net.words[v], w) for (u, v), w in net.edges.items()
    )
    lines = [f"# nodes={net.n_nodes}\tedges={net.n_edges}"]
    lines.extend(f"{s}\t{t}\t{w}" for s, t, w in rows)
    return "\n".join(lines) + "\n"


def write_edge_tsv(net: CoocNetwork, path: str | Path) -> None:
    Path(path).write_text(format_edge_tsv(net), encoding="utf-8")
