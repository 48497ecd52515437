"""Deterministic CSV exports for every figure family.

UTF-8, comma-delimited, RFC-4180 quoting, header row always present,
"\n" line endings, stable sort order everywhere, no timestamps: identical
inputs produce byte-identical files. Rendering (KDE, chord layout, sankey
drawing) is delegated to external plotting tools; these files carry raw
samples and counts only.
"""
from __future__ import annotations

import csv
from pathlib import Path

from ..collab.international import CountryPairMatrix
from ..corpus.models import Corpus, Subfield
from .metrics import MetricsBundle, compute_sankey_rows
from .registry import SAMPLE, SCALAR, metric_spec

EXPORT_SCHEMA_VERSION = 1

VIOLIN_FILE = "violin_samples.csv"
VIOLIN_COVERAGE_FILE = "violin_coverage.csv"


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(path: Path, header: list[str], rows) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
    return path


def export_violin_samples(bundle: MetricsBundle, out_dir: Path) -> list[Path]:
    """Long-format sample file plus a coverage sidecar naming empty cells."""
    rows = []
    coverage = []
    for metric_id in sorted(bundle.samples):
        for cell in bundle.samples[metric_id]:
            if cell["values"]:
                for value in cell["values"]:
                    rows.append((metric_id, cell["subfield"], cell["window"],
                                 value))
            else:
                coverage.append((metric_id, cell["subfield"], cell["window"]))
    rows.sort()
    coverage.sort()
    out_dir = Path(out_dir)
    written = [
        write_csv(out_dir / VIOLIN_FILE,
                  ["metric_id", "subfield", "window", "value"], rows),
        write_csv(out_dir / VIOLIN_COVERAGE_FILE,
                  ["metric_id", "subfield", "window"], coverage),
    ]
    return written


def export_metric_table(bundle: MetricsBundle, metric_id: str,
                        out_dir: Path) -> Path:
    """One file per metric id in the metric-series schema.

    Scalar metrics carry their value inline; sample metrics reference the
    violin file. Unknown ids are rejected.
    """
    spec = metric_spec(metric_id)   # raises ValueError on unknown ids
    if spec.statistic not in (SCALAR, SAMPLE):
        raise ValueError(f"{metric_id} exports as a standalone table, "
                         f"not a metric series")
    rows = []
    if spec.statistic == SCALAR:
        for record in bundle.scalars:
            if record["metric_id"] == metric_id:
                rows.append((metric_id, record["subfield"], record["window"],
                             SCALAR, record["value"], ""))
    else:
        for cell in bundle.samples.get(metric_id, []):
            rows.append((metric_id, cell["subfield"], cell["window"],
                         SAMPLE, "", VIOLIN_FILE))
    rows.sort(key=lambda r: (r[1], r[2]))
    return write_csv(Path(out_dir) / f"{metric_id}.csv",
                     ["metric_id", "subfield", "window", "statistic",
                      "value", "sample_ref"], rows)


def export_chord_matrix(matrix: CountryPairMatrix, path: Path,
                        totals_path: Path | None = None) -> list[Path]:
    """(country_a, country_b, count) with country_a < country_b, plus a
    per-country participation totals sidecar for arc lengths."""
    path = Path(path)
    written = [write_csv(path, ["country_a", "country_b", "count"],
                         [(a, b, matrix.counts[(a, b)])
                          for (a, b) in sorted(matrix.counts)])]
    if totals_path is None:
        totals_path = path.with_name(path.stem + "_totals.csv")
    written.append(write_csv(totals_path, ["country", "total"],
                             sorted(matrix.participation.items())))
    return written


def export_edge_list(network, path: Path) -> Path:
    """One co-authorship network as (author_a, author_b, weight) rows."""
    return write_csv(Path(path), ["author_a", "author_b", "weight"],
                     network.edge_rows())


def export_sankey_flows(corpus: Corpus, subfields: list[Subfield],
                        path: Path, directions=("cited", "citing")) -> Path:
    rows = compute_sankey_rows(corpus, subfields, directions)
    return write_csv(Path(path),
                     ["subfield", "external_discipline", "direction",
                      "count", "share"], rows)


def export_tables(bundle: MetricsBundle, out_dir: Path) -> list[Path]:
    """Each standalone table in the bundle as its own CSV."""
    written = []
    for name in sorted(bundle.tables):
        table = bundle.tables[name]
        written.append(write_csv(Path(out_dir) / f"{name}.csv",
                                 table["columns"], table["rows"]))
    return written


def export_all(bundle: MetricsBundle, out_dir: Path,
               enabled: list[str] | None = None) -> list[Path]:
    """Every export for the bundle; returns the written paths."""
    from .registry import selected_specs
    out_dir = Path(out_dir)
    written = list(export_violin_samples(bundle, out_dir))
    for spec in selected_specs(enabled):
        if spec.statistic in (SCALAR, SAMPLE):
            written.append(export_metric_table(bundle, spec.metric_id, out_dir))
    written.extend(export_tables(bundle, out_dir))
    return written
