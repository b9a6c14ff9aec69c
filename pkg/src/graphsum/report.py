"""Score-table serialization (CSV, JSON) and companion figures.

CSV score cells use 4-decimal fixed point; figure rendering is headless
(Agg) so report runs work without a display. matplotlib loads only when a
figure is actually requested.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Sequence


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def metric_columns(metrics: Sequence[str]) -> list[str]:
    return [f"{m}_{part}" for m in metrics for part in ("r", "p", "f")]


def flatten_row(row: dict, metrics: Sequence[str]) -> dict:
    """Spread RougeScore triples into <metric>_r/_p/_f cells."""
    flat = {k: v for k, v in row.items() if k not in metrics and k != "warnings"}
    for m in metrics:
        score = row.get(m)
        if score is None:
            flat[f"{m}_r"] = flat[f"{m}_p"] = flat[f"{m}_f"] = ""
        else:
            flat[f"{m}_r"] = f"{score.recall:.4f}"
            flat[f"{m}_p"] = f"{score.precision:.4f}"
            flat[f"{m}_f"] = f"{score.f1:.4f}"
    flat["warning"] = "; ".join(row.get("warnings", []))
    return flat


def rows_to_csv(rows: Sequence[dict], fieldnames: Sequence[str]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return out.getvalue()


def to_json(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def _grouped_bars(ax, group_labels, series, width_total=0.8):
    """series: list of (name, values) with one value per group."""
    count = max(len(series), 1)
    width = width_total / count
    for s, (name, values) in enumerate(series):
        positions = [g + (s - (count - 1) / 2) * width for g in range(len(group_labels))]
        ax.bar(positions, values, width=width, label=name)
    ax.set_xticks(range(len(group_labels)))
    ax.set_xticklabels(group_labels, rotation=30, ha="right")
    ax.set_ylim(0.0, 1.05)
    ax.legend(fontsize=8)


def render_eval_figure(scores: dict, outdir: str | Path) -> Path:
    """Bar chart of recall/precision/F per metric next to the score table."""
    plt = _pyplot()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    metrics = list(scores)
    fig, ax = plt.subplots(figsize=(6, 4))
    series = [
        ("recall", [scores[m].recall for m in metrics]),
        ("precision", [scores[m].precision for m in metrics]),
        ("f1", [scores[m].f1 for m in metrics]),
    ]
    _grouped_bars(ax, metrics, series)
    ax.set_ylabel("score")
    ax.set_title("Candidate vs. references")
    fig.tight_layout()
    path = outdir / "eval_scores.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_compare_figures(
    doc_rows: Sequence[dict],
    macro_rows: Sequence[dict],
    metrics: Sequence[str],
    outdir: str | Path,
) -> list[Path]:
    """Macro score chart plus a per-document recall chart for the first
    metric, written beside the delimited report."""
    plt = _pyplot()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []

    systems = [row["system"] for row in macro_rows]
    columns = metric_columns(metrics)
    fig, ax = plt.subplots(figsize=(7, 4))
    series = []
    for row in macro_rows:
        values = []
        for m in metrics:
            score = row[m]
            values.extend([score.recall, score.precision, score.f1])
        series.append((row["system"], values))
    _grouped_bars(ax, columns, series)
    ax.set_ylabel("macro average")
    ax.set_title("System comparison (macro averages)")
    fig.tight_layout()
    macro_path = outdir / "macro_scores.png"
    fig.savefig(macro_path, dpi=120)
    plt.close(fig)
    paths.append(macro_path)

    lead_metric = metrics[0]
    documents = sorted({row["document"] for row in doc_rows})
    by_system: dict[str, dict[str, float]] = {name: {} for name in systems}
    for row in doc_rows:
        if row.get(lead_metric) is not None and row["system"] in by_system:
            by_system[row["system"]][row["document"]] = row[lead_metric].recall
    fig, ax = plt.subplots(figsize=(max(7, 0.5 * len(documents)), 4))
    series = [
        (name, [values.get(doc, 0.0) for doc in documents])
        for name, values in by_system.items()
    ]
    _grouped_bars(ax, documents, series)
    ax.set_ylabel(f"{lead_metric} recall")
    ax.set_title("Per-document recall")
    fig.tight_layout()
    doc_path = outdir / "per_document_recall.png"
    fig.savefig(doc_path, dpi=120)
    plt.close(fig)
    paths.append(doc_path)
    return paths
