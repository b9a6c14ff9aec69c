"""Self-contained ROUGE-N / ROUGE-SU scoring plus baseline summarizers.

Multi-reference scores default to the pooled-count formulation: clipped
matches and gram totals are summed over all references. Jackknifing
(leave-one-out folds, best single reference per fold, componentwise mean)
is available behind a flag.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .errors import EmptyReferenceError, GraphsumError
from .graph import SentenceScores, SimilarityConfig
from .summarize import Summary, SummarySpec, finalize_summary, summarize_document
from .textproc import Document, tokenize
from .stemming import stem_token

Tokens = Sequence[str]


class RougeScore(NamedTuple):
    recall: float
    precision: float
    f1: float


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def ngram_counts(tokens: Tokens, n: int) -> Counter:
    if n < 1:
        raise ValueError("gram order must be at least 1")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def skip_bigram_counts(tokens: Tokens, max_skip: int) -> Counter:
    """Ordered pairs with at most ``max_skip`` interleaving tokens, plus
    unigrams (1-tuples share the multiset without colliding with pairs)."""
    if max_skip < 0:
        raise ValueError("max_skip must be nonnegative")
    counts = Counter((t,) for t in tokens)
    for i in range(len(tokens)):
        for j in range(i + 1, min(len(tokens), i + max_skip + 2)):
            counts[(tokens[i], tokens[j])] += 1
    return counts


def _clipped_match(candidate: Counter, reference: Counter) -> int:
    return sum(min(count, reference[gram]) for gram, count in candidate.items())


def _pooled_score(cand: Counter, refs: list[Counter]) -> RougeScore:
    ref_total = sum(sum(rc.values()) for rc in refs)
    if ref_total == 0:
        raise EmptyReferenceError("all references produced zero grams")
    match = sum(_clipped_match(cand, rc) for rc in refs)
    cand_total = sum(cand.values()) * len(refs)
    recall = match / ref_total
    precision = match / cand_total if cand_total else 0.0
    return RougeScore(recall, precision, _f1(precision, recall))


def _single_score(cand: Counter, ref: Counter) -> RougeScore:
    ref_total = sum(ref.values())
    if ref_total == 0:
        return RougeScore(0.0, 0.0, 0.0)
    match = _clipped_match(cand, ref)
    cand_total = sum(cand.values())
    recall = match / ref_total
    precision = match / cand_total if cand_total else 0.0
    return RougeScore(recall, precision, _f1(precision, recall))


def _jackknife_score(cand: Counter, refs: list[Counter]) -> RougeScore:
    if sum(sum(rc.values()) for rc in refs) == 0:
        raise EmptyReferenceError("all references produced zero grams")
    if len(refs) == 1:
        return _single_score(cand, refs[0])
    folds = []
    for held_out in range(len(refs)):
        fold = [rc for i, rc in enumerate(refs) if i != held_out]
        folds.append(max((_single_score(cand, rc) for rc in fold), key=lambda s: s.f1))
    n = len(folds)
    return RougeScore(
        sum(s.recall for s in folds) / n,
        sum(s.precision for s in folds) / n,
        sum(s.f1 for s in folds) / n,
    )


def _score(cand: Counter, refs: list[Counter], jackknife: bool) -> RougeScore:
    if not refs:
        raise ValueError("at least one reference is required")
    if jackknife:
        return _jackknife_score(cand, refs)
    return _pooled_score(cand, refs)


def rouge_n(
    candidate: Tokens, references: Sequence[Tokens], n: int = 2, *, jackknife: bool = False
) -> RougeScore:
    """N-gram co-occurrence score of a candidate against references."""
    cand = ngram_counts(candidate, n)
    refs = [ngram_counts(r, n) for r in references]
    return _score(cand, refs, jackknife)


def rouge_su(
    candidate: Tokens,
    references: Sequence[Tokens],
    max_skip: int = 4,
    *,
    jackknife: bool = False,
) -> RougeScore:
    """Skip-bigram plus unigram score; ``max_skip=4`` gives SU4."""
    cand = skip_bigram_counts(candidate, max_skip)
    refs = [skip_bigram_counts(r, max_skip) for r in references]
    return _score(cand, refs, jackknife)


def eval_tokens(
    text: str,
    *,
    language: str = "en",
    stem: bool = False,
    stopwords: frozenset[str] | None = None,
) -> list[str]:
    """Scoring tokenization: plain lowercase/punctuation-split by default,
    with optional stopword removal and stemming."""
    tokens = tokenize(text)
    if stopwords:
        tokens = [t for t in tokens if t not in stopwords]
    if stem:
        tokens = [stem_token(t, language) for t in tokens]
    return tokens


def _identity_scores(P: int) -> SentenceScores:
    return SentenceScores(tuple(range(P)), (0.0,) * P)


def _random_scores(P: int, seed: int) -> SentenceScores:
    permutation = random.Random(seed).sample(range(P), P)
    return SentenceScores(tuple(permutation), (0.0,) * P)


def baseline_random(doc: Document, k: int, seed: int) -> Summary:
    """k sentences drawn uniformly without replacement (seeded)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    spec = SummarySpec(sentence_count=min(k, len(doc)))
    return finalize_summary(doc, _random_scores(len(doc), seed), spec)


def baseline_lead(doc: Document, k: int) -> Summary:
    """The document's first min(k, P) sentences."""
    if k < 1:
        raise ValueError("k must be at least 1")
    spec = SummarySpec(sentence_count=min(k, len(doc)))
    return finalize_summary(doc, _identity_scores(len(doc)), spec)


@dataclass(frozen=True)
class System:
    """A named summarizer entered in a comparison run."""

    name: str
    build: Callable[[Document, SummarySpec], Summary]


SYSTEM_NAMES = ("reg", "random", "lead")


def standard_systems(
    names: Sequence[str],
    *,
    similarity: SimilarityConfig = SimilarityConfig(),
    seed: int = 0,
) -> list[System]:
    """Instantiate systems by name: "reg" (the graph summarizer),
    "random" (seeded uniform draw) and "lead" (first sentences)."""
    systems = []
    for name in names:
        if name == "reg":
            systems.append(
                System(name, lambda doc, spec, sim=similarity: summarize_document(doc, sim, spec))
            )
        elif name == "random":
            systems.append(
                System(
                    name,
                    lambda doc, spec, s=seed: finalize_summary(
                        doc, _random_scores(len(doc), s), spec
                    ),
                )
            )
        elif name == "lead":
            systems.append(
                System(name, lambda doc, spec: finalize_summary(doc, _identity_scores(len(doc)), spec))
            )
        else:
            raise ValueError(f"unknown system {name!r}; expected one of {SYSTEM_NAMES}")
    return systems


def compare_systems(
    doc: Document,
    references: Sequence[str],
    systems: Sequence[System],
    spec: SummarySpec,
    *,
    metrics: Sequence[tuple[str, int]] = (("rouge2", 2), ("su4", 4)),
    jackknife: bool = False,
) -> list[dict]:
    """Score every system on one document under a shared budget.

    ``metrics`` entries are ("rougeN", n) or ("suK", max_skip) pairs. A
    failing system yields a zero row carrying a warning instead of
    aborting the run.
    """
    if not systems:
        raise ValueError("at least one system is required")
    if not references:
        raise ValueError("at least one reference is required")
    ref_tokens = [eval_tokens(r) for r in references]
    rows = []
    for system in systems:
        row: dict = {"system": system.name, "warnings": []}
        try:
            summary = system.build(doc, spec)
            cand = eval_tokens(summary.text)
            row["warnings"].extend(summary.warnings)
            if not cand:
                row["warnings"].append("empty-candidate")
            for label, order in metrics:
                if label.startswith("su"):
                    row[label] = rouge_su(cand, ref_tokens, order, jackknife=jackknife)
                else:
                    row[label] = rouge_n(cand, ref_tokens, order, jackknife=jackknife)
        except EmptyReferenceError:
            # Shared-reference defect, not a per-system failure.
            raise
        except GraphsumError as exc:
            for label, _ in metrics:
                row[label] = RougeScore(0.0, 0.0, 0.0)
            row["warnings"].append(f"{type(exc).__name__}: {exc}")
        rows.append(row)
    return rows
