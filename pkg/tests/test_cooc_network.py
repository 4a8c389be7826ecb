import pytest

from selkex.cooc_network import (
    CoocNetwork,
    build_network,
    format_edge_tsv,
    in_neighbors,
    out_neighbors,
)
from selkex.text_ingest import Document, Token, load_corpus

from oracles import parse_edge_dump


def make_doc(sentences, doc_id="d"):
    """sentences: list of lists of normalized words."""
    tokens = []
    pos = 0
    for si, words in enumerate(sentences):
        for w in words:
            tokens.append(Token(surface=w, normalized=w, position=pos, sentence_index=si))
            pos += 1
    return Document(doc_id=doc_id, tokens=tuple(tokens))


def word_edges(net):
    return {(net.words[u], net.words[v]): w for (u, v), w in net.edges.items()}


def test_build_repeated_pair():
    net = build_network(make_doc([["a", "b", "a", "b"]]))
    assert word_edges(net) == {("a", "b"): 2, ("b", "a"): 1}
    assert net.n_nodes == 2
    assert net.n_edges == 2


def test_build_sentence_boundary():
    net = build_network(make_doc([["a", "b"], ["b", "c"]]))
    assert word_edges(net) == {("a", "b"): 1, ("b", "c"): 1}
    assert net.n_nodes == 3
    assert net.n_edges == 2


def test_build_empty_document():
    net = build_network(make_doc([]))
    assert net.n_nodes == 0
    assert net.n_edges == 0


def test_build_records_self_loops():
    net = build_network(make_doc([["a", "a", "b"]]))
    assert word_edges(net) == {("a", "a"): 1, ("a", "b"): 1}


def test_build_keeps_isolated_nodes():
    # single-token sentence leaves "x" without edges but still a node
    net = build_network(make_doc([["a", "b"], ["x"]]))
    assert "x" in net.index
    assert net.n_nodes == 3
    assert net.n_edges == 1


def test_out_neighbors():
    net = build_network(make_doc([["a", "b", "a"]]))
    a, b = net.index["a"], net.index["b"]
    assert out_neighbors(net, a) == [(b, 1)]
    assert out_neighbors(net, b) == [(a, 1)]


def test_neighbors_isolated_node():
    net = build_network(make_doc([["a", "b"], ["x"]]))
    x = net.index["x"]
    assert out_neighbors(net, x) == []
    assert in_neighbors(net, x) == []


def test_out_neighbors_self_loop_visible():
    net = CoocNetwork(["a"], {(0, 0): 3})
    assert out_neighbors(net, 0) == [(0, 3)]


def test_in_neighbors():
    net = CoocNetwork(["a", "b", "c"], {(0, 1): 2, (2, 1): 5})
    assert sorted(in_neighbors(net, 1)) == [(0, 2), (2, 5)]
    assert in_neighbors(net, 0) == []


def test_neighbors_out_of_range():
    net = CoocNetwork(["a"], {})
    with pytest.raises(ValueError):
        out_neighbors(net, 1)
    with pytest.raises(ValueError):
        in_neighbors(net, -1)


def test_weight_conservation(corpus_dir):
    for doc in load_corpus(corpus_dir):
        net = build_network(doc)
        pairs = sum(
            1
            for prev, cur in zip(doc.tokens, doc.tokens[1:])
            if prev.sentence_index == cur.sentence_index
        )
        assert sum(net.edges.values()) == pairs


def test_build_deterministic(corpus_dir):
    docs = load_corpus(corpus_dir)
    for doc in docs:
        a, b = build_network(doc), build_network(doc)
        assert a.words == b.words
        assert a.edges == b.edges


def test_node_word_bijection(corpus_dir):
    for doc in load_corpus(corpus_dir):
        net = build_network(doc)
        assert len(set(net.words)) == net.n_nodes
        assert sorted(net.index.values()) == list(range(net.n_nodes))


def test_edges_against_brute_force_pair_count(corpus_dir):
    # independent oracle: count adjacent same-sentence pairs directly
    for doc in load_corpus(corpus_dir):
        expected = {}
        for prev, cur in zip(doc.tokens, doc.tokens[1:]):
            if prev.sentence_index != cur.sentence_index:
                continue
            key = (prev.normalized, cur.normalized)
            expected[key] = expected.get(key, 0) + 1
        assert word_edges(build_network(doc)) == expected


def test_edge_tsv_roundtrip_and_ordering():
    net = build_network(make_doc([["b", "a", "b", "b"]]))
    text = format_edge_tsv(net)
    lines = text.splitlines()
    assert lines[0] == f"# nodes={net.n_nodes}\tedges={net.n_edges}"
    body = lines[1:]
    assert body == sorted(body)
    assert parse_edge_dump(text) == word_edges(net)
