"""Command-line surface: summarize files, score candidates with ROUGE,
and run multi-system comparisons over a corpus directory.

Exit codes: 0 success, 1 input/IO error, 2 evaluation impossible.
Flag values override config-file values, which override built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .errors import EmptyDocumentError, EmptyReferenceError, GraphsumError
from .evalkit import (
    RougeScore,
    compare_systems,
    eval_tokens,
    rouge_n,
    rouge_su,
    standard_systems,
)
from .graph import SimilarityConfig, adjacency_to_csv, greedy_visit
from .report import (
    flatten_row,
    metric_columns,
    render_compare_figures,
    render_eval_figure,
    rows_to_csv,
    to_json,
)
from .summarize import (
    WARN_ALL_STOPWORDS,
    SummarySpec,
    document_graph,
    finalize_summary,
    walk_length,
)
from .textproc import (
    BUILTIN_LANGUAGES,
    PipelineConfig,
    build_document,
    builtin_abbreviations,
    builtin_stopwords,
    load_wordlist,
)

_METRIC_RE = re.compile(r"^(rouge|su)([1-9])$")

_DEFAULTS = {
    "lang": "en",
    "stoplist": None,
    "abbrev": None,
    "stemmer": None,
    "similarity": "cosine",
    "binary_weights": False,
    "edge_threshold": 0.0,
    "sentences": None,
    "ratio": None,
    "max_words": None,
    "m": None,
    "seed": 0,
    "metrics": "rouge2,su4",
    "systems": "reg,random,lead",
    "jackknife": False,
    "eval_stem": False,
    "eval_remove_stopwords": False,
}


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}")


def _write_output(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_config_file(path: str | None) -> dict:
    if not path:
        return {}
    try:
        values = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc.strerror or exc}")
    except json.JSONDecodeError as exc:
        raise CliError(f"config {path} is not valid JSON: {exc}")
    if not isinstance(values, dict):
        raise CliError(f"config {path} must hold a JSON object")
    unknown = set(values) - set(_DEFAULTS) - {"format"}
    if unknown:
        raise CliError(f"config {path} has unknown keys: {', '.join(sorted(unknown))}")
    return values


def _merge_settings(args: argparse.Namespace, command_defaults: dict | None = None) -> dict:
    file_values = _load_config_file(getattr(args, "config", None))
    merged = dict(_DEFAULTS)
    if command_defaults:
        merged.update(command_defaults)
    merged.update({k: v for k, v in file_values.items() if v is not None})
    for key in merged:
        cli_value = getattr(args, key, None)
        if cli_value is not None:
            merged[key] = cli_value
    return merged


def _resolve_wordlist(value: str | None, language: str, kind: str) -> frozenset[str]:
    if value is None:
        if kind == "stopwords":
            try:
                return builtin_stopwords(language)
            except ValueError as exc:
                raise CliError(f"{exc} (use --stoplist PATH or --stoplist none)")
        if language in BUILTIN_LANGUAGES:
            return builtin_abbreviations(language)
        return frozenset()
    if value == "none":
        return frozenset()
    if value in BUILTIN_LANGUAGES:
        return builtin_stopwords(value) if kind == "stopwords" else builtin_abbreviations(value)
    try:
        return load_wordlist(value)
    except OSError as exc:
        raise CliError(f"cannot read {kind} file {value}: {exc.strerror or exc}")


def _build_configs(settings: dict) -> tuple[PipelineConfig, SimilarityConfig, SummarySpec]:
    language = settings["lang"]
    pipeline = PipelineConfig(
        language=language,
        stopwords=_resolve_wordlist(settings["stoplist"], language, "stopwords"),
        abbreviations=_resolve_wordlist(settings["abbrev"], language, "abbreviations"),
        stemmer=settings["stemmer"],
    )
    try:
        similarity = SimilarityConfig(
            measure=settings["similarity"],
            binary_weights=bool(settings["binary_weights"]),
            edge_threshold=float(settings["edge_threshold"]),
        )
    except ValueError as exc:
        raise CliError(str(exc))
    targets = [settings["sentences"], settings["ratio"], settings["max_words"]]
    if sum(t is not None for t in targets) == 0:
        settings["ratio"] = 0.2
    try:
        spec = SummarySpec(
            sentence_count=settings["sentences"],
            word_ratio=settings["ratio"],
            word_cap=settings["max_words"],
            m_override=settings["m"],
        )
    except ValueError as exc:
        raise CliError(str(exc))
    return pipeline, similarity, spec


def _config_echo(settings: dict, spec: SummarySpec) -> dict:
    if spec.sentence_count is not None:
        target = {"kind": "sentence_count", "value": spec.sentence_count}
    elif spec.word_ratio is not None:
        target = {"kind": "word_ratio", "value": spec.word_ratio}
    else:
        target = {"kind": "word_cap", "value": spec.word_cap}
    return {
        "language": settings["lang"],
        "stoplist": settings["stoplist"] or "builtin",
        "abbreviations": settings["abbrev"] or "builtin",
        "stemmer": settings["stemmer"] or "language-default",
        "similarity": {
            "measure": settings["similarity"],
            "binary_weights": bool(settings["binary_weights"]),
            "edge_threshold": float(settings["edge_threshold"]),
        },
        "target": target,
        "m": spec.m_override,
        "seed": settings["seed"],
    }


def _parse_metrics(value: str) -> list[tuple[str, int]]:
    metrics = []
    for raw in value.split(","):
        name = raw.strip().lower()
        if not name:
            continue
        match = _METRIC_RE.match(name)
        if not match:
            raise CliError(f"unknown metric {name!r} (expected rougeN or suN)")
        metrics.append((name, int(match.group(2))))
    if not metrics:
        raise CliError("no metrics requested")
    return metrics


def _score_one(
    cand: list[str], refs: list[list[str]], label: str, order: int, jackknife: bool
) -> RougeScore:
    if label.startswith("su"):
        return rouge_su(cand, refs, order, jackknife=jackknife)
    return rouge_n(cand, refs, order, jackknife=jackknife)


def _cmd_summarize(args: argparse.Namespace) -> int:
    settings = _merge_settings(args)
    pipeline, similarity, spec = _build_configs(settings)
    text = _read_text(args.input)
    try:
        doc = build_document(text, pipeline)
    except EmptyDocumentError:
        raise CliError(f"{args.input}: document contains no sentences")
    W = document_graph(doc, similarity)
    if args.dump_graph:
        Path(args.dump_graph).write_text(adjacency_to_csv(W), encoding="utf-8")
    scores = greedy_visit(W, walk_length(doc, spec))
    warnings = (WARN_ALL_STOPWORDS,) if all(not s.tokens for s in doc.sentences) else ()
    summary = finalize_summary(doc, scores, spec, warnings)
    for warning in summary.warnings:
        print(f"warning: {warning}", file=sys.stderr)

    fmt = args.format or "text"
    if fmt == "json":
        payload = summary.to_dict()
        payload["config"] = _config_echo(settings, spec)
        payload["seed"] = settings["seed"]
        _write_output(to_json(payload), args.output)
    elif fmt == "csv":
        rows = [
            {
                "index": i,
                "weight": f"{summary.scores.weights[i]:.6f}",
                "text": summary.doc.sentences[i].surface,
            }
            for i in summary.selected
        ]
        _write_output(rows_to_csv(rows, ["index", "weight", "text"]), args.output)
    else:
        _write_output(summary.text + "\n", args.output)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    settings = _merge_settings(args)
    metrics = _parse_metrics(settings["metrics"])
    candidate_text = _read_text(args.candidate)
    reference_texts = [_read_text(ref) for ref in args.ref]

    stopwords = None
    if settings["eval_remove_stopwords"]:
        stopwords = _resolve_wordlist(settings["stoplist"], settings["lang"], "stopwords")
    kwargs = dict(language=settings["lang"], stem=settings["eval_stem"], stopwords=stopwords)
    cand = eval_tokens(candidate_text, **kwargs)
    refs = [eval_tokens(r, **kwargs) for r in reference_texts]
    if all(not r for r in refs):
        raise CliError("all reference files are empty", code=2)

    try:
        scores = {
            label: _score_one(cand, refs, label, order, settings["jackknife"])
            for label, order in metrics
        }
    except EmptyReferenceError as exc:
        raise CliError(str(exc), code=2)

    fmt = args.format or "text"
    if fmt == "json":
        payload = {
            "scores": {
                label: {"recall": s.recall, "precision": s.precision, "f1": s.f1}
                for label, s in scores.items()
            },
            "config": {
                "language": settings["lang"],
                "metrics": [label for label, _ in metrics],
                "jackknife": bool(settings["jackknife"]),
                "stemming": bool(settings["eval_stem"]),
                "stopword_removal": bool(settings["eval_remove_stopwords"]),
            },
            "seed": settings["seed"],
        }
        _write_output(to_json(payload), args.output)
    elif fmt == "csv":
        rows = [
            {
                "metric": label,
                "recall": f"{s.recall:.4f}",
                "precision": f"{s.precision:.4f}",
                "f1": f"{s.f1:.4f}",
            }
            for label, s in scores.items()
        ]
        _write_output(rows_to_csv(rows, ["metric", "recall", "precision", "f1"]), args.output)
    else:
        lines = [
            f"{label:8s} recall={s.recall:.4f} precision={s.precision:.4f} f1={s.f1:.4f}"
            for label, s in scores.items()
        ]
        _write_output("\n".join(lines) + "\n", args.output)

    if args.figures:
        render_eval_figure(scores, args.figures)
    return 0


def _mean_scores(rows: list[dict], metrics: list[tuple[str, int]]) -> dict | None:
    if not rows:
        return None
    out: dict = {"document": "macro-avg", "system": rows[0]["system"], "warnings": []}
    for label, _ in metrics:
        n = len(rows)
        out[label] = RougeScore(
            sum(r[label].recall for r in rows) / n,
            sum(r[label].precision for r in rows) / n,
            sum(r[label].f1 for r in rows) / n,
        )
    return out


def _cmd_compare(args: argparse.Namespace) -> int:
    settings = _merge_settings(args)
    pipeline, similarity, spec = _build_configs(settings)
    metrics = _parse_metrics(settings["metrics"])

    corpus_dir = Path(args.corpus)
    refs_dir = Path(args.refs)
    if not corpus_dir.is_dir():
        raise CliError(f"corpus directory {corpus_dir} does not exist")
    if not refs_dir.is_dir():
        raise CliError(f"references directory {refs_dir} does not exist")
    doc_paths = sorted(corpus_dir.glob("*.txt"))
    if not doc_paths:
        raise CliError(f"corpus directory {corpus_dir} holds no .txt documents")

    system_names = [s.strip() for s in settings["systems"].split(",") if s.strip()]
    try:
        systems = standard_systems(system_names, similarity=similarity, seed=settings["seed"])
    except ValueError as exc:
        raise CliError(str(exc))

    doc_rows: list[dict] = []
    scored_documents = 0
    for doc_path in doc_paths:
        name = doc_path.stem
        ref_paths = sorted(refs_dir.joinpath(name).glob("*.txt"))
        references = [p.read_text(encoding="utf-8") for p in ref_paths]
        references = [r for r in references if r.strip()]
        if not references:
            doc_rows.append(
                {
                    "document": name,
                    "system": "",
                    "warnings": [f"no references under {refs_dir / name}"],
                }
            )
            continue
        try:
            doc = build_document(doc_path.read_text(encoding="utf-8"), pipeline)
            rows = compare_systems(
                doc, references, systems, spec,
                metrics=metrics, jackknife=settings["jackknife"],
            )
        except GraphsumError as exc:
            doc_rows.append(
                {
                    "document": name,
                    "system": "",
                    "warnings": [f"{type(exc).__name__}: {exc}"],
                }
            )
            continue
        for row in rows:
            row["document"] = name
            doc_rows.append(row)
        scored_documents += 1

    macro_rows = []
    for system in systems:
        rows = [
            r for r in doc_rows
            if r.get("system") == system.name and all(label in r for label, _ in metrics)
        ]
        mean = _mean_scores(rows, metrics)
        if mean is not None:
            macro_rows.append(mean)

    labels = [label for label, _ in metrics]
    fieldnames = ["document", "system"] + metric_columns(labels) + ["warning"]
    flat_rows = [flatten_row(r, labels) for r in doc_rows + macro_rows]
    for flat in flat_rows:
        flat.setdefault("document", "")
        flat.setdefault("system", "")

    fmt = args.format or "csv"
    if fmt == "json":
        payload = {
            "config": _config_echo(settings, spec),
            "seed": settings["seed"],
            "systems": [s.name for s in systems],
            "metrics": labels,
            "rows": [
                {
                    "document": r.get("document", ""),
                    "system": r.get("system", ""),
                    "scores": {
                        label: {
                            "recall": r[label].recall,
                            "precision": r[label].precision,
                            "f1": r[label].f1,
                        }
                        for label in labels
                        if label in r
                    },
                    "warnings": r.get("warnings", []),
                }
                for r in doc_rows
            ],
            "macro": [
                {
                    "system": r["system"],
                    "scores": {
                        label: {
                            "recall": r[label].recall,
                            "precision": r[label].precision,
                            "f1": r[label].f1,
                        }
                        for label in labels
                    },
                }
                for r in macro_rows
            ],
        }
        _write_output(to_json(payload), args.output)
    else:
        _write_output(rows_to_csv(flat_rows, fieldnames), args.output)

    if args.figures:
        numeric = [r for r in doc_rows if all(label in r for label, _ in metrics)]
        if numeric and macro_rows:
            render_compare_figures(numeric, macro_rows, labels, args.figures)

    if scored_documents == 0:
        raise CliError("no document could be scored", code=2)
    return 0


def _cmd_resources(args: argparse.Namespace) -> int:
    if not args.lang:
        print("built-in languages: " + ", ".join(BUILTIN_LANGUAGES))
        return 0
    if args.lang not in BUILTIN_LANGUAGES:
        raise CliError(f"no built-in resources for language {args.lang!r}")
    if args.show == "abbreviations":
        terms = builtin_abbreviations(args.lang)
    else:
        terms = builtin_stopwords(args.lang)
    print("\n".join(sorted(terms)))
    return 0


def _add_common_flags(parser: argparse.ArgumentParser, *, formats: tuple[str, ...]) -> None:
    parser.add_argument("--lang", help="language tag (built-ins: en, fr, es)")
    parser.add_argument("--stoplist", help="stopword list: builtin name, file path, or 'none'")
    parser.add_argument("--abbrev", help="abbreviation list: builtin name, file path, or 'none'")
    parser.add_argument("--stemmer", choices=["porter", "light", "none"])
    parser.add_argument("--similarity", choices=["cosine", "overlap"])
    parser.add_argument("--binary-weights", action="store_true", default=None,
                        dest="binary_weights", help="use term presence instead of frequency")
    parser.add_argument("--edge-threshold", type=float, dest="edge_threshold",
                        help="drop similarities below this value (default 0)")
    target = parser.add_mutually_exclusive_group()
    target.add_argument("--sentences", type=int, help="extract this many sentences")
    target.add_argument("--ratio", type=float, help="extract until this word ratio is reached")
    target.add_argument("--max-words", type=int, dest="max_words",
                        help="word cap; whole sentences are dropped to fit")
    parser.add_argument("--m", type=int, help="greedy walk length (default: all sentences)")
    parser.add_argument("--seed", type=int, help="seed for randomized systems (default 0)")
    parser.add_argument("--format", choices=list(formats))
    parser.add_argument("--output", "-o", help="write to this file instead of stdout")
    parser.add_argument("--config", help="JSON config file (flags override its values)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsum",
        description="Graph-based extractive summarizer with a built-in ROUGE harness.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("summarize", help="summarize a text file (or '-' for stdin)")
    p_sum.add_argument("input", help="input file path, or '-' for stdin")
    _add_common_flags(p_sum, formats=("text", "json", "csv"))
    p_sum.add_argument("--dump-graph", dest="dump_graph",
                       help="write the adjacency matrix as CSV to this path")
    p_sum.set_defaults(func=_cmd_summarize)

    p_eval = sub.add_parser("eval", help="score a candidate summary against references")
    p_eval.add_argument("candidate", help="candidate summary file")
    p_eval.add_argument("--ref", action="append", required=True,
                        help="reference summary file (repeatable)")
    p_eval.add_argument("--metrics", help="comma list of rougeN/suN metrics (default rouge2,su4)")
    p_eval.add_argument("--jackknife", action="store_true", default=None,
                        help="leave-one-out multi-reference aggregation")
    p_eval.add_argument("--eval-stem", action="store_true", default=None, dest="eval_stem",
                        help="stem tokens before matching")
    p_eval.add_argument("--eval-remove-stopwords", action="store_true", default=None,
                        dest="eval_remove_stopwords", help="drop stopwords before matching")
    p_eval.add_argument("--lang", help="language tag used by --eval-stem")
    p_eval.add_argument("--stoplist", help="stopword list for --eval-remove-stopwords")
    p_eval.add_argument("--format", choices=["text", "json", "csv"])
    p_eval.add_argument("--output", "-o", help="write to this file instead of stdout")
    p_eval.add_argument("--figures", help="also render score figures into this directory")
    p_eval.add_argument("--config", help="JSON config file (flags override its values)")
    p_eval.set_defaults(func=_cmd_eval)

    p_cmp = sub.add_parser("compare", help="score several systems over a corpus directory")
    p_cmp.add_argument("corpus", help="directory of <docname>.txt inputs")
    p_cmp.add_argument("refs", help="directory of refs/<docname>/<judge>.txt references")
    p_cmp.add_argument("--systems", help="comma list from: reg, random, lead")
    p_cmp.add_argument("--metrics", help="comma list of rougeN/suN metrics (default rouge2,su4)")
    p_cmp.add_argument("--jackknife", action="store_true", default=None,
                       help="leave-one-out multi-reference aggregation")
    _add_common_flags(p_cmp, formats=("csv", "json"))
    p_cmp.add_argument("--figures", help="also render comparison figures into this directory")
    p_cmp.set_defaults(func=_cmd_compare)

    p_res = sub.add_parser("resources", help="inspect built-in language resources")
    p_res.add_argument("--lang", help="language to inspect")
    p_res.add_argument("--show", choices=["stopwords", "abbreviations"], default="stopwords")
    p_res.set_defaults(func=_cmd_resources)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except EmptyReferenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphsumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
