"""Graph-based extractive summarization with a built-in ROUGE harness.

The pipeline turns raw text into a bag-of-words sentence graph, weights
sentences with a greedy walk over that graph, and renders extracts under
a sentence, word-ratio or word-cap budget. The evaluation kit scores
candidates with ROUGE-N and ROUGE-SU against reference summaries and
ships Random and Lead baselines for comparison tables.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionMismatchError,
    EmptyDocumentError,
    EmptyReferenceError,
    GraphsumError,
    UnknownTermError,
)
from .evalkit import (
    RougeScore,
    System,
    baseline_lead,
    baseline_random,
    compare_systems,
    eval_tokens,
    rouge_n,
    rouge_su,
    standard_systems,
)
from .graph import (
    SentenceScores,
    SimilarityConfig,
    adjacency_to_csv,
    build_adjacency,
    greedy_visit,
    sentence_similarity,
    top_sentences,
)
from .summarize import (
    Summary,
    SummarySpec,
    document_graph,
    finalize_summary,
    render_summary,
    summarize_document,
    summarize_text,
    truncate_to_words,
)
from .textproc import (
    Document,
    PipelineConfig,
    Sentence,
    build_document,
    build_term_matrix,
    build_vocabulary,
    builtin_abbreviations,
    builtin_stopwords,
    document_term_matrix,
    filter_stopwords,
    load_wordlist,
    segment_sentences,
    tokenize,
)
from .stemming import light_stem, stem_token
from .porter import porter_stem

__all__ = [
    "DimensionMismatchError",
    "Document",
    "EmptyDocumentError",
    "EmptyReferenceError",
    "GraphsumError",
    "PipelineConfig",
    "RougeScore",
    "Sentence",
    "SentenceScores",
    "SimilarityConfig",
    "Summary",
    "SummarySpec",
    "System",
    "UnknownTermError",
    "adjacency_to_csv",
    "baseline_lead",
    "baseline_random",
    "build_adjacency",
    "build_document",
    "build_term_matrix",
    "build_vocabulary",
    "builtin_abbreviations",
    "builtin_stopwords",
    "compare_systems",
    "document_graph",
    "document_term_matrix",
    "eval_tokens",
    "filter_stopwords",
    "finalize_summary",
    "greedy_visit",
    "light_stem",
    "load_wordlist",
    "porter_stem",
    "render_summary",
    "rouge_n",
    "rouge_su",
    "segment_sentences",
    "sentence_similarity",
    "standard_systems",
    "stem_token",
    "summarize_document",
    "summarize_text",
    "tokenize",
    "top_sentences",
    "truncate_to_words",
]
