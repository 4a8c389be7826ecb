"""Command-line frontend: build networks, dump metrics, extract, evaluate."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import cooc_network, evaluation, extraction, measures, text_ingest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    corpus_dir: Path
    output_dir: Path
    stopwords_path: Path | None = None
    lemma_table_path: Path | None = None
    gold_path: Path | None = None
    threshold: float = 1.0
    set_selection: str = "both"  # set1 | set2 | both
    workers: int = 1
    filter_set1_stopwords: bool = True
    restrict_gold_by_length: bool = False


def _load_config_file(path: Path) -> dict[str, str]:
    """Optional key=value config file; CLI flags take precedence."""
    values = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selkex",
        description="Selectivity-based keyword extraction over word "
        "co-occurrence networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("build", "dump one co-occurrence edge-list TSV per document"),
        ("metrics", "dump one node-metrics TSV per document"),
        ("extract", "write ranked keyword candidates as JSONL per document"),
        ("eval", "extract candidates and score them against gold annotations"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--corpus", required=True, help="directory of UTF-8 text files")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--stopwords", help="stopword list, one word per line")
        p.add_argument("--lemmas", help="lemma table TSV (surface<TAB>lemma)")
        p.add_argument("--threshold", type=float, default=None,
                       help="selectivity threshold (default 1.0)")
        p.add_argument("--set", dest="set_selection", choices=("1", "2", "both"),
                       default=None, help="candidate sets to emit (default both)")
        p.add_argument("--workers", type=int, default=None,
                       help="parallel document workers (default 1)")
        p.add_argument("--no-set1-stopword-filter", action="store_true",
                       help="keep stopword nodes in SET1 (filter tuples only)")
        p.add_argument("--config", help="key=value config file; flags override")
        if name == "eval":
            p.add_argument("--gold", required=True,
                           help="gold JSON {doc_id: {annotator: [phrases]}}")
            p.add_argument("--restrict-gold-by-length", action="store_true",
                           help="score SET1 against 1-word gold items only, "
                           "SET2 against 2-word items only")
    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    file_values: dict[str, str] = {}
    if getattr(args, "config", None):
        file_values = _load_config_file(Path(args.config))

    def pick(flag_value, key: str, default, cast):
        if flag_value is not None:
            return flag_value
        if key in file_values:
            return cast(file_values[key])
        return default

    config = RunConfig(
        corpus_dir=Path(args.corpus),
        output_dir=Path(args.out),
        stopwords_path=Path(args.stopwords) if args.stopwords else None,
        lemma_table_path=Path(args.lemmas) if args.lemmas else None,
        gold_path=Path(args.gold) if getattr(args, "gold", None) else None,
        threshold=pick(args.threshold, "threshold", 1.0, float),
        set_selection={"1": "set1", "2": "set2", "both": "both"}[
            pick(args.set_selection, "set", "both", str)
        ],
        workers=max(1, pick(args.workers, "workers", 1, int)),
        filter_set1_stopwords=not args.no_set1_stopword_filter,
        restrict_gold_by_length=getattr(args, "restrict_gold_by_length", False),
    )
    if config.threshold <= 0:
        raise ValueError("threshold must be positive")
    if not config.corpus_dir.is_dir():
        raise ValueError(f"corpus directory not found: {config.corpus_dir}")
    for path in (config.stopwords_path, config.lemma_table_path, config.gold_path):
        if path is not None and not path.is_file():
            raise ValueError(f"input file not found: {path}")
    return config


def _load_resources(config: RunConfig):
    stopwords = (
        text_ingest.load_stopwords(config.stopwords_path)
        if config.stopwords_path
        else set()
    )
    lemmas = (
        text_ingest.load_lemma_table(config.lemma_table_path)
        if config.lemma_table_path
        else {}
    )
    return stopwords, lemmas


def _corpus_paths(config: RunConfig) -> list[Path]:
    paths = sorted(p for p in config.corpus_dir.iterdir() if p.is_file())
    if not paths:
        logger.warning("corpus directory %s contains no files", config.corpus_dir)
    return paths


def _per_document(config: RunConfig, paths: list[Path], work):
    """Run `work(path) -> (doc_id, error)` over documents with a bounded
    pool; results are reported in doc_id order regardless of completion."""
    errors = []
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(work, paths))
    else:
        results = [work(p) for p in paths]
    for doc_id, error in sorted(results):
        if error:
            logger.error("%s: %s", doc_id, error)
            errors.append(doc_id)
    return errors


def cmd_build(config: RunConfig) -> int:
    stopwords, lemmas = _load_resources(config)
    config.output_dir.mkdir(parents=True, exist_ok=True)
    paths = _corpus_paths(config)

    def work(path: Path):
        try:
            doc = text_ingest.load_document(path)
            if lemmas:
                doc = text_ingest.apply_lemmas(doc, lemmas)
            net = cooc_network.build_network(doc)
            cooc_network.write_edge_tsv(net, config.output_dir / f"{doc.doc_id}.edges.tsv")
            print(f"{doc.doc_id}\tN={net.n_nodes}\tK={net.n_edges}")
            return doc.doc_id, None
        except Exception as exc:  # per-file failure must not stop the run
            return path.stem, str(exc)

    errors = _per_document(config, paths, work)
    return EXIT_DATA_ERROR if errors else EXIT_OK


def cmd_metrics(config: RunConfig) -> int:
    stopwords, lemmas = _load_resources(config)
    config.output_dir.mkdir(parents=True, exist_ok=True)
    paths = _corpus_paths(config)

    def work(path: Path):
        try:
            doc = text_ingest.load_document(path)
            if lemmas:
                doc = text_ingest.apply_lemmas(doc, lemmas)
            net = cooc_network.build_network(doc)
            metrics = measures.compute_all(net)
            measures.write_metrics_tsv(metrics, config.output_dir / f"{doc.doc_id}.metrics.tsv")
            return doc.doc_id, None
        except Exception as exc:
            return path.stem, str(exc)

    errors = _per_document(config, paths, work)
    return EXIT_DATA_ERROR if errors else EXIT_OK


def _extraction_config(config: RunConfig) -> extraction.ExtractionConfig:
    return extraction.ExtractionConfig(
        threshold=config.threshold,
        filter_set1_stopwords=config.filter_set1_stopwords,
    )


def _extract_all(config: RunConfig):
    """Per-document extraction used by both extract and eval commands."""
    stopwords, lemmas = _load_resources(config)
    ex_config = _extraction_config(config)
    paths = _corpus_paths(config)
    results: dict[str, tuple] = {}
    failures: dict[str, str] = {}

    def work(path: Path):
        try:
            doc = text_ingest.load_document(path)
            set1, set2, metrics = extraction.extract_document(
                doc, lemmas, stopwords, ex_config, with_path_centrality=False
            )
            results[doc.doc_id] = (set1, set2)
            return doc.doc_id, None
        except Exception as exc:
            failures[path.stem] = str(exc)
            return path.stem, str(exc)

    errors = _per_document(config, paths, work)
    return results, errors, lemmas


def cmd_extract(config: RunConfig) -> int:
    config.output_dir.mkdir(parents=True, exist_ok=True)
    results, errors, _ = _extract_all(config)
    for doc_id in sorted(results):
        set1, set2 = results[doc_id]
        extraction.write_candidates_jsonl(
            config.output_dir / f"{doc_id}.candidates.jsonl",
            doc_id,
            set1 if config.set_selection in ("set1", "both") else None,
            set2 if config.set_selection in ("set2", "both") else None,
        )
    return EXIT_DATA_ERROR if errors else EXIT_OK


def cmd_eval(config: RunConfig) -> int:
    config.output_dir.mkdir(parents=True, exist_ok=True)
    results, errors, lemmas = _extract_all(config)
    gold_sets = evaluation.load_gold(
        config.gold_path, lemmas, known_doc_ids=results.keys()
    )
    report_json: dict[str, dict] = {}
    labels = []
    if config.set_selection in ("set1", "both"):
        labels.append(("set1", 0, 1))
    if config.set_selection in ("set2", "both"):
        labels.append(("set2", 1, 2))
    for label, result_idx, length in labels:
        per_doc = []
        for gold in gold_sets:
            if gold.doc_id not in results:
                continue  # warned during load
            candidates = results[gold.doc_id][result_idx]
            per_doc.append(
                evaluation.evaluate(
                    candidates,
                    gold,
                    restrict_by_length=length if config.restrict_gold_by_length else None,
                )
            )
        if not per_doc:
            logger.warning("no documents shared between corpus and gold for %s", label)
            continue
        report = evaluation.macro_average(per_doc)
        (config.output_dir / f"eval_{label}.tsv").write_text(
            evaluation.format_report_tsv(report, label.upper()), encoding="utf-8"
        )
        report_json[label] = evaluation.report_to_dict(report)
        print(
            f"{label.upper()}: P={report.macro_precision:.4f} "
            f"R={report.macro_recall:.4f} F1={report.macro_f1:.4f} "
            f"F2={report.macro_f2:.4f}"
        )
    (config.output_dir / "eval.json").write_text(
        json.dumps(report_json, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    return EXIT_DATA_ERROR if errors else EXIT_OK


_COMMANDS = {
    "build": cmd_build,
    "metrics": cmd_metrics,
    "extract": cmd_extract,
    "eval": cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
    except ValueError as exc:
        parser.exit(EXIT_USAGE, f"error: {exc}\n")
    try:
        return _COMMANDS[args.command](config)
    except ValueError as exc:
        logger.error("%s", exc)
        return EXIT_DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
