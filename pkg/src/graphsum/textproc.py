"""Text preprocessing: sentence segmentation, tokenization, stopword
filtering, stemming, and the sentence-by-term frequency matrix.

Sentence surfaces are kept verbatim (trimmed slices of the input text);
normalization applies only to the token stream that feeds vectorization.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyDocumentError, UnknownTermError
from .stemming import stem_token

BUILTIN_LANGUAGES = ("en", "fr", "es")

# Characters that end a sentence, and characters that may open the next one.
_TERMINATORS = frozenset(".!?…")
_OPENING_QUOTES = frozenset("«\"“‘'‹¿¡")

_PARAGRAPH_RE = re.compile(r"\n[ \t\r]*\n")
# Maximal runs of Unicode letters/digits; underscores and apostrophes split.
_TOKEN_RE = re.compile(r"[^\W_]+")


@dataclass(frozen=True)
class Sentence:
    """One sentence: position, verbatim surface, processed token stream."""

    index: int
    surface: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class Document:
    language: str
    sentences: tuple[Sentence, ...]

    def __len__(self) -> int:
        return len(self.sentences)

    @property
    def surfaces(self) -> list[str]:
        return [s.surface for s in self.sentences]


@dataclass(frozen=True)
class PipelineConfig:
    """Preprocessing knobs; ``None`` fields fall back to built-ins.

    ``stemmer`` is "porter", "light", "none", or None (language default:
    Porter for en, light otherwise).
    """

    language: str = "en"
    stopwords: frozenset[str] | None = None
    abbreviations: frozenset[str] | None = None
    stemmer: str | None = None

    def resolved_stopwords(self) -> frozenset[str]:
        if self.stopwords is not None:
            return self.stopwords
        return builtin_stopwords(self.language)

    def resolved_abbreviations(self) -> frozenset[str]:
        if self.abbreviations is not None:
            return self.abbreviations
        if self.language in BUILTIN_LANGUAGES:
            return builtin_abbreviations(self.language)
        return frozenset()


def _parse_wordlist(lines: Iterable[str]) -> frozenset[str]:
    terms = set()
    for line in lines:
        term = line.strip()
        if term and not term.startswith("#"):
            terms.add(term.lower())
    return frozenset(terms)


def load_wordlist(path: str | Path) -> frozenset[str]:
    """Read a resource file: one term per line, '#' lines ignored."""
    with open(path, encoding="utf-8") as fh:
        return _parse_wordlist(fh)


def _builtin(kind: str, language: str) -> frozenset[str]:
    ref = resources.files("graphsum").joinpath(f"data/{kind}/{language}.txt")
    with ref.open(encoding="utf-8") as fh:
        return _parse_wordlist(fh)


def builtin_stopwords(language: str) -> frozenset[str]:
    if language not in BUILTIN_LANGUAGES:
        raise ValueError(
            f"no built-in stopword list for language {language!r}; "
            "supply one explicitly (or an empty one)"
        )
    return _builtin("stopwords", language)


def builtin_abbreviations(language: str) -> frozenset[str]:
    if language not in BUILTIN_LANGUAGES:
        raise ValueError(f"no built-in abbreviation list for language {language!r}")
    return _builtin("abbreviations", language)


def _token_ending_at(block: str, i: int) -> str:
    """Whitespace-delimited token ending at block[i] inclusive, lowercased,
    with leading quote/bracket characters stripped."""
    start = i
    while start > 0 and not block[start - 1].isspace():
        start -= 1
    return block[start : i + 1].lower().lstrip("«\"“‘'‹([¿¡")


def _segment_block(block: str, abbreviations: frozenset[str]) -> list[str]:
    n = len(block)
    cuts = []
    for i, ch in enumerate(block):
        if ch not in _TERMINATORS:
            continue
        j = i + 1
        if j >= n or not block[j].isspace():
            continue
        k = j
        while k < n and block[k].isspace():
            k += 1
        if k >= n:
            continue
        nxt = block[k]
        if not (nxt.isupper() or nxt.isdigit() or nxt in _OPENING_QUOTES):
            continue
        if _token_ending_at(block, i) in abbreviations:
            continue
        cuts.append(j)
    surfaces = []
    start = 0
    for cut in cuts + [n]:
        piece = block[start:cut].strip()
        if piece:
            surfaces.append(piece)
        start = cut
    return surfaces


def segment_sentences(text: str, abbreviations: frozenset[str] = frozenset()) -> list[str]:
    """Split text into sentence surfaces.

    A sentence ends at '.', '!', '?' or '…' followed by whitespace and an
    uppercase letter, digit or opening quote, unless the token carrying the
    terminator is a known abbreviation. Blank lines always split.
    """
    if not text.strip():
        raise EmptyDocumentError("document contains no sentences")
    surfaces = []
    for block in _PARAGRAPH_RE.split(text):
        surfaces.extend(_segment_block(block, abbreviations))
    return surfaces


def tokenize(surface: str) -> list[str]:
    """Lowercased letter/digit runs of the NFC-normalized surface."""
    normalized = unicodedata.normalize("NFC", surface)
    return [m.group(0).lower() for m in _TOKEN_RE.finditer(normalized)]


def filter_stopwords(tokens: Sequence[str], stopwords: frozenset[str]) -> list[str]:
    return [t for t in tokens if t not in stopwords]


def build_document(text: str, config: PipelineConfig = PipelineConfig()) -> Document:
    """Run segmentation, tokenization, filtering and stemming."""
    stopwords = config.resolved_stopwords()
    abbreviations = config.resolved_abbreviations()
    sentences = []
    for index, surface in enumerate(segment_sentences(text, abbreviations)):
        tokens = filter_stopwords(tokenize(surface), stopwords)
        stemmed = tuple(
            stem_token(t, config.language, config.stemmer) for t in tokens
        )
        sentences.append(Sentence(index, surface, stemmed))
    return Document(config.language, tuple(sentences))


def build_vocabulary(sentences: Iterable[Sentence]) -> dict[str, int]:
    """Dense term ids in first-occurrence order."""
    vocab: dict[str, int] = {}
    for sentence in sentences:
        for token in sentence.tokens:
            if token not in vocab:
                vocab[token] = len(vocab)
    return vocab


def build_term_matrix(sentences: Sequence[Sentence], vocab: dict[str, int]) -> np.ndarray:
    """P x N integer frequency matrix; row sums equal sentence token counts."""
    if not sentences:
        raise ValueError("term matrix needs at least one sentence")
    matrix = np.zeros((len(sentences), len(vocab)), dtype=np.int64)
    for row, sentence in enumerate(sentences):
        for token in sentence.tokens:
            col = vocab.get(token)
            if col is None:
                raise UnknownTermError(f"token {token!r} missing from vocabulary")
            matrix[row, col] += 1
    return matrix


def document_term_matrix(doc: Document) -> tuple[dict[str, int], np.ndarray]:
    vocab = build_vocabulary(doc.sentences)
    return vocab, build_term_matrix(doc.sentences, vocab)
