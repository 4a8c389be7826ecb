"""Scoring of candidate sets against gold keyword annotations."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .extraction import KeywordCandidate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoldSet:
    doc_id: str
    keywords: frozenset[tuple[str, ...]]


@dataclass(frozen=True)
class DocScores:
    doc_id: str
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f1: float
    f2: float


@dataclass(frozen=True)
class EvalReport:
    per_doc: tuple[DocScores, ...]
    macro_precision: float
    macro_recall: float
    macro_f1: float
    macro_f2: float


def f1_score(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


def f2_score(p: float, r: float) -> float:
    """F-measure weighting recall twice as heavily as precision."""
    return 5 * p * r / (4 * p + r) if 4 * p + r > 0 else 0.0


def _normalize_phrase(phrase: str, lemmas: Mapping[str, str] | None) -> tuple[str, ...]:
    words = []
    for w in phrase.lower().split():
        if lemmas:
            w = lemmas.get(w, w)
        words.append(w)
    return tuple(words)


def load_gold(
    path: str | Path,
    lemmas: Mapping[str, str] | None = None,
    known_doc_ids: Iterable[str] | None = None,
) -> list[GoldSet]:
    """Parse gold annotations: JSON {doc_id: {annotator: [phrases]}}.

    Keyphrases are lowercased and lemma-mapped word by word with the same
    table as the documents; per-annotator lists merge by union. Unknown
    doc ids (when a known set is supplied) warn but stay in the result.
    """
    path = Path(path)
    data = json.loads(path.read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object keyed by doc_id")
    known = set(known_doc_ids) if known_doc_ids is not None else None
    gold = []
    for doc_id, annotators in sorted(data.items()):
        if not isinstance(annotators, dict):
            raise ValueError(f"{path}: entry {doc_id!r} must map annotators to lists")
        if known is not None and doc_id not in known:
            logger.warning("gold doc_id %r not found in corpus", doc_id)
        keywords = set()
        for ann_id, phrases in annotators.items():
            if not isinstance(phrases, list):
                raise ValueError(f"{path}: {doc_id}/{ann_id} must be a list of strings")
            for phrase in phrases:
                norm = _normalize_phrase(phrase, lemmas)
                if norm:
                    keywords.add(norm)
        gold.append(GoldSet(doc_id=doc_id, keywords=frozenset(keywords)))
    return gold


def evaluate(
    candidates: list[KeywordCandidate],
    gold: GoldSet,
    restrict_by_length: int | None = None,
) -> DocScores:
    """Exact matching of candidate word sequences against gold keyphrases.

    Duplicate candidates count once. With restrict_by_length, only gold
    items of that word count take part.
    """
    gold_items = set(gold.keywords)
    if restrict_by_length is not None:
        gold_items = {g for g in gold_items if len(g) == restrict_by_length}
    cand_items = {c.words for c in candidates}
    tp = len(cand_items & gold_items)
    fp = len(cand_items - gold_items)
    fn = len(gold_items - cand_items)
    p = tp / (tp + fp) if tp + fp > 0 else 0.0
    r = tp / (tp + fn) if tp + fn > 0 else 0.0
    return DocScores(
        doc_id=gold.doc_id,
        tp=tp,
        fp=fp,
        fn=fn,
        precision=p,
        recall=r,
        f1=f1_score(p, r),
        f2=f2_score(p, r),
    )


def macro_average(reports: list[DocScores]) -> EvalReport:
    """Unweighted mean of each metric across documents, doc_id order."""
    if not reports:
        raise ValueError("macro_average requires at least one per-document report")
    ordered = tuple(sorted(reports, key=lambda r: r.doc_id))
    n = len(ordered)
    return EvalReport(
        per_doc=ordered,
        macro_precision=sum(r.precision for r in ordered) / n,
        macro_recall=sum(r.recall for r in ordered) / n,
        macro_f1=sum(r.f1 for r in ordered) / n,
        macro_f2=sum(r.f2 for r in ordered) / n,
    )


def format_report_tsv(report: EvalReport, label: str = "") -> str:
    """Per-document rows plus a macro summary block as trailing comments."""
    lines = ["doc_id\ttp\tfp\tfn\tprecision\trecall\tf1\tf2"]
    for r in report.per_doc:
        lines.append(
            f"{r.doc_id}\t{r.tp}\t{r.fp}\t{r.fn}"
            f"\t{r.precision:.6f}\t{r.recall:.6f}\t{r.f1:.6f}\t{r.f2:.6f}"
        )
    tag = f" {label}" if label else ""
    lines.append(f"# macro{tag} precision={report.macro_precision:.6f} "
                 f"recall={report.macro_recall:.6f} "
                 f"f1={report.macro_f1:.6f} f2={report.macro_f2:.6f}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: EvalReport) -> dict:
    return {
        "per_doc": [
            {
                "doc_id": r.doc_id,
                "tp": r.tp,
                "fp": r.fp,
                "fn": r.fn,
                "precision": r.precision,
                "recall": r.recall,
                "f1": r.f1,
                "f2": r.f2,
            }
            for r in report.per_doc
        ],
        "macro": {
            "precision": report.macro_precision,
            "recall": report.macro_recall,
            "f1": report.macro_f1,
            "f2": report.macro_f2,
        },
    }
