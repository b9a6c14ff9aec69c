"""Sentence-similarity graph and the greedy weighting walk.

The adjacency matrix is symmetric with a zero diagonal and entries in
[0, 1]. Cosine values are computed from exact integer dot products and
squared norms, so scaling every term frequency by a constant leaves the
matrix bit-for-bit unchanged.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError

MEASURES = ("cosine", "overlap")


@dataclass(frozen=True)
class SimilarityConfig:
    measure: str = "cosine"
    binary_weights: bool = False
    edge_threshold: float = 0.0

    def __post_init__(self) -> None:
        if self.measure not in MEASURES:
            raise ValueError(f"unknown similarity measure {self.measure!r}")
        if not 0.0 <= self.edge_threshold < 1.0:
            raise ValueError("edge_threshold must lie in [0, 1)")


@dataclass(frozen=True)
class SentenceScores:
    """Result of the greedy walk: visit order plus one weight per sentence.

    Unvisited sentences keep weight 0; visited ones carry the weight the
    walk assigned (also 0 on degenerate zero graphs)."""

    visit_order: tuple[int, ...]
    weights: tuple[float, ...]


def _cosine(dot: int, norm_a: int, norm_b: int) -> float:
    if norm_a == 0 or norm_b == 0:
        return 0.0
    # Exact integer ratio, one square root: scale factors cancel exactly.
    return math.sqrt((dot * dot) / (norm_a * norm_b))


def sentence_similarity(
    row_a: Sequence[int], row_b: Sequence[int], cfg: SimilarityConfig = SimilarityConfig()
) -> float:
    """Similarity of two term-frequency vectors, in [0, 1]."""
    a = [int(x) for x in row_a]
    b = [int(x) for x in row_b]
    if len(a) != len(b):
        raise DimensionMismatchError(f"vector lengths differ: {len(a)} vs {len(b)}")
    if cfg.measure == "overlap":
        support_a = sum(1 for x in a if x)
        support_b = sum(1 for x in b if x)
        if support_a == 0 or support_b == 0:
            return 0.0
        common = sum(1 for x, y in zip(a, b) if x and y)
        return common / min(support_a, support_b)
    if cfg.binary_weights:
        a = [1 if x else 0 for x in a]
        b = [1 if x else 0 for x in b]
    dot = sum(x * y for x, y in zip(a, b))
    return _cosine(dot, sum(x * x for x in a), sum(y * y for y in b))


def build_adjacency(S: np.ndarray, cfg: SimilarityConfig = SimilarityConfig()) -> np.ndarray:
    """Pairwise sentence similarities as a symmetric P x P float matrix.

    Entries below ``cfg.edge_threshold`` are dropped to 0.
    """
    S = np.asarray(S, dtype=np.int64)
    if S.ndim != 2 or S.shape[0] < 1:
        raise ValueError("term matrix must be 2-dimensional with P >= 1 rows")
    P = S.shape[0]
    binary = cfg.measure == "overlap" or cfg.binary_weights
    M = (S != 0).astype(np.int64) if binary else S
    gram = M @ M.T
    diag = [int(gram[i, i]) for i in range(P)]
    W = np.zeros((P, P), dtype=np.float64)
    for i in range(P):
        for j in range(i + 1, P):
            if cfg.measure == "overlap":
                if diag[i] == 0 or diag[j] == 0:
                    w = 0.0
                else:
                    w = int(gram[i, j]) / min(diag[i], diag[j])
            else:
                w = _cosine(int(gram[i, j]), diag[i], diag[j])
            if w < cfg.edge_threshold:
                w = 0.0
            W[i, j] = W[j, i] = w
    return W


def greedy_visit(W: np.ndarray, m: int) -> SentenceScores:
    """Visit min(m, P) vertices, assigning each its weight.

    The walk opens on the vertex with the largest total connectivity
    (weight: row sum over max(P-1, 1)), then repeatedly follows the
    heaviest edge to an unvisited vertex (weight: that edge). When every
    edge from the current vertex to unvisited vertices is 0, it reopens on
    the densest unvisited vertex, so exactly min(m, P) vertices are always
    visited. Ties break on the smallest sentence index.
    """
    W = np.asarray(W, dtype=np.float64)
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise ValueError("adjacency matrix must be square")
    if m < 1:
        raise ValueError("m must be at least 1")
    P = W.shape[0]
    rows = W.tolist()
    row_sums = [sum(row) for row in rows]
    target = min(m, P)
    visited = [False] * P
    order: list[int] = []
    weights = [0.0] * P
    current: int | None = None
    while len(order) < target:
        nxt = -1
        weight = 0.0
        if current is not None:
            best = 0.0
            for u in range(P):
                if not visited[u] and rows[current][u] > best:
                    nxt, best = u, rows[current][u]
            weight = best
        if nxt < 0:
            best = -1.0
            for u in range(P):
                if not visited[u] and row_sums[u] > best:
                    nxt, best = u, row_sums[u]
            weight = row_sums[nxt] / max(P - 1, 1)
        visited[nxt] = True
        order.append(nxt)
        weights[nxt] = weight
        current = nxt
    return SentenceScores(tuple(order), tuple(weights))


def top_sentences(scores: SentenceScores, k: int) -> tuple[int, ...]:
    """First min(k, |visit_order|) visited vertices, in document order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return tuple(sorted(scores.visit_order[:k]))


def adjacency_to_csv(W: np.ndarray) -> str:
    """Fixed-point CSV dump of the adjacency matrix (one row per vertex)."""
    out = io.StringIO()
    for row in np.asarray(W, dtype=np.float64):
        out.write(",".join(f"{value:.6f}" for value in row))
        out.write("\n")
    return out.getvalue()
