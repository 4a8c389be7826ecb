"""Text ingestion: tokenization, lemma mapping, stopword and corpus loading."""
from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping

# Maximal runs of letters/digits; underscore is punctuation here.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)
# A sentence ends at . ? or ! followed by whitespace or end of text.
_SENT_END_RE = re.compile(r"[.?!](?=\s|$)")


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    position: int
    sentence_index: int


@dataclass(frozen=True)
class Document:
    doc_id: str
    tokens: tuple[Token, ...]
    source_path: str | None = None


def tokenize(raw: str) -> list[Token]:
    """Split raw text into lowercased tokens with sentence indices.

    Tokens are maximal runs of letters/digits; punctuation-only runs are
    dropped. Numbers, dates, acronyms and abbreviations survive as tokens.
    Empty input yields an empty list.
    """
    boundaries = [m.start() for m in _SENT_END_RE.finditer(raw)]
    tokens = []
    for pos, m in enumerate(_TOKEN_RE.finditer(raw)):
        sent = bisect.bisect_left(boundaries, m.start())
        tokens.append(
            Token(
                surface=m.group(),
                normalized=m.group().lower(),
                position=pos,
                sentence_index=sent,
            )
        )
    return tokens


def apply_lemmas(doc: Document, table: Mapping[str, str]) -> Document:
    """Map each token's normalized form through a lemma table.

    Unmapped forms stay as they are; positions and sentence indices are
    untouched, so the operation is idempotent for self-mapping tables.
    """
    new_tokens = tuple(
        replace(t, normalized=table.get(t.normalized, t.normalized))
        for t in doc.tokens
    )
    return replace(doc, tokens=new_tokens)


def load_stopwords(path: str | Path) -> set[str]:
    """Read a one-word-per-line stopword file into a normalized set.

    Blank lines and '#' comments are ignored. A missing file raises with
    the offending path in the message.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read stopword list {path}: {exc}") from exc
    entries = set()
    for line in text.splitlines():
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        entries.add(word.lower())
    return entries


def load_lemma_table(path: str | Path) -> dict[str, str]:
    """Read a two-column TSV of surface<TAB>lemma pairs."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read lemma table {path}: {exc}") from exc
    table = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected surface<TAB>lemma")
        surface, lemma = parts
        table[surface.strip().lower()] = lemma.strip().lower()
    return table


def load_document(path: str | Path, doc_id: str | None = None) -> Document:
    path = Path(path)
    raw = path.read_text(encoding="utf-8")
    return Document(
        doc_id=doc_id if doc_id is not None else path.stem,
        tokens=tuple(tokenize(raw)),
        source_path=str(path),
    )


def load_corpus(corpus_dir: str | Path) -> list[Document]:
    """Load every regular file in a directory as one document (id = stem)."""
    corpus_dir = Path(corpus_dir)
    docs = []
    for path in sorted(p for p in corpus_dir.iterdir() if p.is_file()):
        docs.append(load_document(path))
    return docs
