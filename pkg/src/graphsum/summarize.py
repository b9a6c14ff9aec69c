"""Pipeline orchestration: build the document graph, run the greedy walk,
and render extracts under a sentence, ratio or word-cap budget.

Selected sentences are always emitted in document order; the walk's visit
order only decides which ones make the cut.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import SentenceScores, SimilarityConfig, build_adjacency, greedy_visit, top_sentences
from .textproc import Document, PipelineConfig, build_document, document_term_matrix

WARN_ALL_STOPWORDS = "all-stopwords"
WARN_TRUNCATION_OVERFLOW = "truncation-overflow"


@dataclass(frozen=True)
class SummarySpec:
    """Extraction budget: exactly one of sentence_count, word_ratio or
    word_cap must be set. ``m_override`` caps the walk length (default:
    visit every sentence)."""

    sentence_count: int | None = None
    word_ratio: float | None = None
    word_cap: int | None = None
    m_override: int | None = None

    def __post_init__(self) -> None:
        targets = [
            self.sentence_count is not None,
            self.word_ratio is not None,
            self.word_cap is not None,
        ]
        if sum(targets) != 1:
            raise ValueError("exactly one summary target must be set")
        if self.sentence_count is not None and self.sentence_count < 1:
            raise ValueError("sentence_count must be at least 1")
        if self.word_ratio is not None and not 0.0 < self.word_ratio <= 1.0:
            raise ValueError("word_ratio must lie in (0, 1]")
        if self.word_cap is not None and self.word_cap < 1:
            raise ValueError("word_cap must be at least 1")
        if self.m_override is not None and self.m_override < 1:
            raise ValueError("m_override must be at least 1")


@dataclass(frozen=True)
class Summary:
    doc: Document
    selected: tuple[int, ...]
    text: str
    scores: SentenceScores
    warnings: tuple[str, ...] = ()

    def selected_by_rank(self) -> list[int]:
        """Selected indices ordered by visit rank (extraction priority)."""
        chosen = set(self.selected)
        return [i for i in self.scores.visit_order if i in chosen]

    def to_dict(self) -> dict:
        return {
            "selected": list(self.selected),
            "text": self.text,
            "weights": [self.scores.weights[i] for i in self.selected],
            "warnings": list(self.warnings),
        }


def word_count(text: str) -> int:
    return len(text.split())


def render_summary(doc: Document, indices) -> str:
    """Concatenate the surfaces of ``indices`` separated by single spaces."""
    P = len(doc)
    for i in indices:
        if not 0 <= i < P:
            raise IndexError(f"sentence index {i} out of range for {P} sentences")
    return " ".join(doc.sentences[i].surface for i in indices)


def _ratio_budget(doc: Document, visit_order: tuple[int, ...], ratio: float) -> int:
    total = sum(word_count(s.surface) for s in doc.sentences)
    needed = ratio * total
    count = 0
    for k, idx in enumerate(visit_order, start=1):
        count += word_count(doc.sentences[idx].surface)
        if count >= needed:
            return k
    return max(len(visit_order), 1)


def finalize_summary(
    doc: Document,
    scores: SentenceScores,
    spec: SummarySpec,
    warnings: tuple[str, ...] = (),
) -> Summary:
    """Derive the selection a budget implies from an existing visit order."""
    if spec.word_cap is not None:
        selected = tuple(sorted(scores.visit_order))
        full = Summary(doc, selected, render_summary(doc, selected), scores, warnings)
        return truncate_to_words(full, spec.word_cap)
    if spec.sentence_count is not None:
        k = spec.sentence_count
    else:
        k = _ratio_budget(doc, scores.visit_order, spec.word_ratio)
    selected = top_sentences(scores, k)
    return Summary(doc, selected, render_summary(doc, selected), scores, warnings)


def truncate_to_words(summary: Summary, max_words: int) -> Summary:
    """Drop whole sentences, lowest visit rank first, until the summary fits.

    A single sentence longer than the cap is kept and flagged rather than
    split.
    """
    if max_words < 1:
        raise ValueError("max_words must be at least 1")
    doc = summary.doc
    kept = summary.selected_by_rank()

    def total(indices) -> int:
        return sum(word_count(doc.sentences[i].surface) for i in indices)

    while len(kept) > 1 and total(kept) > max_words:
        kept.pop()
    warnings = summary.warnings
    if kept and total(kept) > max_words and WARN_TRUNCATION_OVERFLOW not in warnings:
        warnings = warnings + (WARN_TRUNCATION_OVERFLOW,)
    selected = tuple(sorted(kept))
    return Summary(doc, selected, render_summary(doc, selected), summary.scores, warnings)


def document_graph(doc: Document, similarity: SimilarityConfig = SimilarityConfig()) -> np.ndarray:
    """Adjacency matrix of the document's sentence graph."""
    _, S = document_term_matrix(doc)
    return build_adjacency(S, similarity)


def walk_length(doc: Document, spec: SummarySpec) -> int:
    P = len(doc)
    return min(spec.m_override, P) if spec.m_override is not None else P


def summarize_document(
    doc: Document,
    similarity: SimilarityConfig = SimilarityConfig(),
    spec: SummarySpec = SummarySpec(word_ratio=0.2),
) -> Summary:
    W = document_graph(doc, similarity)
    scores = greedy_visit(W, walk_length(doc, spec))
    warnings: tuple[str, ...] = ()
    if all(not s.tokens for s in doc.sentences):
        warnings = (WARN_ALL_STOPWORDS,)
    return finalize_summary(doc, scores, spec, warnings)


def summarize_text(
    text: str,
    pipeline: PipelineConfig = PipelineConfig(),
    similarity: SimilarityConfig = SimilarityConfig(),
    spec: SummarySpec = SummarySpec(word_ratio=0.2),
) -> Summary:
    """Full pipeline from raw text to an extract."""
    return summarize_document(build_document(text, pipeline), similarity, spec)
