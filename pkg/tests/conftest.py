import random
from pathlib import Path

import pytest

from selkex.cooc_network import CoocNetwork

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def corpus_dir() -> Path:
    return FIXTURES / "corpus"


@pytest.fixture
def stopwords_path() -> Path:
    return FIXTURES / "stopwords_hr.txt"


@pytest.fixture
def lemmas_path() -> Path:
    return FIXTURES / "lemmas_hr.tsv"


@pytest.fixture
def gold_path() -> Path:
    return FIXTURES / "gold_hr.json"


def random_network(rng: random.Random, max_n: int = 12, max_w: int = 5,
                   edge_prob: float = 0.25) -> CoocNetwork:
    """Random directed weighted graph; self-loops included by chance."""
    n = rng.randint(2, max_n)
    words = [f"w{i:02d}" for i in range(n)]
    edges = {}
    for u in range(n):
        for v in range(n):
            if rng.random() < edge_prob:
                edges[(u, v)] = rng.randint(1, max_w)
    return CoocNetwork(words, edges)
