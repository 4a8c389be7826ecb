"""Selectivity-based keyword candidate extraction.

SET1: single words whose in- or out-selectivity reaches the threshold.
SET2: each SET1 word expanded to a two-word tuple with its strongest
neighbor in the triggering direction, stopword-filtered.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .cooc_network import CoocNetwork, build_network
from .measures import NodeMetrics, compute_all
from .text_ingest import Document, apply_lemmas

ORIGIN_IN = "in"
ORIGIN_OUT = "out"


@dataclass(frozen=True)
class KeywordCandidate:
    words: tuple[str, ...]
    score: float
    origin: str
    rank: int


@dataclass(frozen=True)
class ExtractionConfig:
    threshold: float = 1.0
    max_candidates: int | None = None
    include_in: bool = True
    include_out: bool = True
    # Dropping stopword nodes from SET1 keeps both sets comparable to
    # content-word gold annotations; turn off for tuple-only filtering.
    filter_set1_stopwords: bool = True

    def __post_init__(self):
        if self.threshold <= 0:
            raise ValueError("threshold must be positive")


def _rank_sorted(items: Iterable[tuple[tuple[str, ...], float, str]]) -> list[KeywordCandidate]:
    """Sort by descending score, ties lexicographic on words; ranks 1-based."""
    ordered = sorted(items, key=lambda it: (-it[1], it[0]))
    return [
        KeywordCandidate(words=w, score=s, origin=o, rank=i)
        for i, (w, s, o) in enumerate(ordered, start=1)
    ]


def _qualifying_directions(m: NodeMetrics, config: ExtractionConfig) -> list[tuple[str, float]]:
    dirs = []
    if config.include_in and m.e_in >= config.threshold:
        dirs.append((ORIGIN_IN, m.e_in))
    if config.include_out and m.e_out >= config.threshold:
        dirs.append((ORIGIN_OUT, m.e_out))
    return dirs


def extract_set1(
    net: CoocNetwork,
    metrics: list[NodeMetrics],
    config: ExtractionConfig,
    stopwords: set[str] | None = None,
) -> list[KeywordCandidate]:
    """One candidate per node whose in/out selectivity reaches the threshold.

    Score is the larger qualifying selectivity; origin records which
    direction produced it (ties favor 'in' for determinism).
    """
    stopwords = stopwords or set()
    items = []
    for m in metrics:
        if config.filter_set1_stopwords and m.word in stopwords:
            continue
        dirs = _qualifying_directions(m, config)
        if not dirs:
            continue
        origin, score = max(dirs, key=lambda d: (d[1], d[0] == ORIGIN_IN))
        items.append(((m.word,), score, origin))
    candidates = _rank_sorted(items)
    if config.max_candidates is not None:
        candidates = candidates[: config.max_candidates]
    return candidates


def _max_weight_neighbor(pairs: list[tuple[int, int]], net: CoocNetwork, node: int) -> int:
    """Neighbor with the heaviest edge, excluding self; ties pick the
    lexicographically smaller word."""
    best = None
    for other, w in pairs:
        if other == node:
            continue
        key = (-w, net.words[other])
        if best is None or key < best[0]:
            best = (key, other)
    assert best is not None, "selectivity > 0 implies a non-self edge"
    return best[1]


def expand_set2(
    net: CoocNetwork,
    metrics: list[NodeMetrics],
    set1: list[KeywordCandidate],
    stopwords: set[str] | None = None,
    config: ExtractionConfig | None = None,
) -> list[KeywordCandidate]:
    """Expand SET1 words to two-word tuples via the strongest neighbor.

    An in-qualifier pairs with its heaviest predecessor (tuple keeps
    reading order: predecessor first); an out-qualifier with its heaviest
    successor. A node qualifying in both directions emits both tuples.
    Tuples containing a stopword are dropped; duplicates keep the max score.
    """
    stopwords = stopwords or set()
    config = config or ExtractionConfig()
    by_word = {m.word: m for m in metrics}
    best: dict[tuple[str, str], tuple[float, str]] = {}
    for cand in set1:
        word = cand.words[0]
        m = by_word[word]
        node = m.node
        for origin, score in _qualifying_directions(m, config):
            if origin == ORIGIN_IN:
                other = _max_weight_neighbor(net._in.get(node, []), net, node)
                tup = (net.words[other], word)
            else:
                other = _max_weight_neighbor(net._out.get(node, []), net, node)
                tup = (word, net.words[other])
            if any(w in stopwords for w in tup):
                continue
            prev = best.get(tup)
            if prev is None or score > prev[0]:
                best[tup] = (score, origin)
    return _rank_sorted((tup, s, o) for tup, (s, o) in best.items())


def extract_document(
    doc: Document,
    lemmas: Mapping[str, str] | None = None,
    stopwords: set[str] | None = None,
    config: ExtractionConfig | None = None,
    with_path_centrality: bool = True,
) -> tuple[list[KeywordCandidate], list[KeywordCandidate], list[NodeMetrics]]:
    """Full per-document pipeline: lemma mapping, network build, measures,
    SET1 extraction and SET2 expansion.

    Extraction ranks by selectivity only, so callers not keeping the
    returned metrics may disable the path-centrality pass.
    """
    config = config or ExtractionConfig()
    if lemmas:
        doc = apply_lemmas(doc, lemmas)
    net = build_network(doc)
    metrics = compute_all(net, with_path_centrality=with_path_centrality)
    set1 = extract_set1(net, metrics, config, stopwords)
    set2 = expand_set2(net, metrics, set1, stopwords, config)
    return set1, set2, metrics


def format_candidates_jsonl(
    doc_id: str,
    set1: list[KeywordCandidate] | None = None,
    set2: list[KeywordCandidate] | None = None,
) -> str:
    """Candidates as JSON Lines, SET1 rows before SET2 rows, rank order."""
    lines = []
    for set_no, cands in ((1, set1), (2, set2)):
        for c in cands or []:
            lines.append(
                json.dumps(
                    {
                        "doc_id": doc_id,
                        "rank": c.rank,
                        "words": list(c.words),
                        "score": c.score,
                        "origin": c.origin,
                        "set": set_no,
                    },
                    ensure_ascii=False,
                    sort_keys=True,
                )
            )
    return "\n".join(lines) + ("\n" if lines else "")


def write_candidates_jsonl(
    path: str | Path,
    doc_id: str,
    set1: list[KeywordCandidate] | None = None,
    set2: list[KeywordCandidate] | None = None,
) -> None:
    Path(path).write_text(format_candidates_jsonl(doc_id, set1, set2), encoding="utf-8")
