"""Keyword extraction via node selectivity on word co-occurrence networks.

Each document becomes a directed, weighted network of adjacent words;
nodes are ranked by selectivity (mean edge weight per neighbor), expanded
to two-word tuples, and scored against gold annotations.
"""

from .cooc_network import CoocNetwork, build_network, in_neighbors, out_neighbors
from .evaluation import (
    DocScores,
    EvalReport,
    GoldSet,
    evaluate,
    f1_score,
    f2_score,
    load_gold,
    macro_average,
)
from .extraction import (
    ExtractionConfig,
    KeywordCandidate,
    expand_set2,
    extract_document,
    extract_set1,
)
from .measures import (
    NodeMetrics,
    betweenness,
    closeness,
    compute_all,
    degree_centrality,
    in_out_degree_centrality,
    selectivity,
    strength,
)
from .text_ingest import (
    Document,
    Token,
    apply_lemmas,
    load_corpus,
    load_document,
    load_lemma_table,
    load_stopwords,
    tokenize,
)

__version__ = "0.1.0"
