"""Operator snapshot of the review queue: CSV plus a threshold-progress chart."""
from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .store import StoreBundle

CSV_NAME = "suspicious_queue.csv"
FIGURE_NAME = "suspicious_queue.png"


def export_queue_report(
    bundle: StoreBundle, threshold: int, out_dir: str | Path
) -> tuple[Path, Path]:
    """Write the suspicious queue as CSV and as a bar chart against the threshold.

    Rows are sorted by accumulated value, highest first. Returns the paths of
    the CSV file and the rendered figure.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = sorted(bundle.suspicious, key=lambda r: (-r.value, r.id))

    csv_path = out_dir / CSV_NAME
    with csv_path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "word", "count", "value", "matched_slang", "progress"])
        for record in rows:
            writer.writerow([
                record.id, record.word, record.count, record.value,
                record.matched_slang, f"{record.value / threshold:.2f}",
            ])

    figure_path = out_dir / FIGURE_NAME
    fig, ax = plt.subplots(figsize=(8, max(2.0, 0.5 * len(rows) + 1.5)))
    if rows:
        labels = [r.word for r in rows]
        values = [r.value for r in rows]
        bars = ax.barh(labels, values, color="#4878a8")
        ax.bar_label(bars, labels=[f"{r.value} ({r.count}x)" for r in rows], padding=3)
        ax.invert_yaxis()
        ax.axvline(threshold, color="#b0413e", linestyle="--", linewidth=1.2)
        ax.text(threshold, -0.6, f"promotion threshold = {threshold}",
                color="#b0413e", ha="center", fontsize=9)
        ax.set_xlim(0, max(threshold, max(values)) * 1.15)
        ax.set_xlabel("accumulated value")
    else:
        ax.text(0.5, 0.5, "suspicious queue is empty",
                ha="center", va="center", transform=ax.transAxes)
        ax.set_axis_off()
    ax.set_title("Suspicious words vs promotion threshold")
    fig.tight_layout()
    fig.savefig(figure_path, dpi=120)
    plt.close(fig)
    return csv_path, figure_path
