"""End-to-end corpus pipeline: records to redundancy measures.

For each configured variable set (words, authors, references, or any
"+"-combination) the pipeline builds the incidence matrix, extracts and
rotates three factors, bins the loadings into a 10x10x10 joint table,
and computes the full measure report. A failing set is recorded and
skipped; the remaining sets still run.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .biblio import (
    DEFAULT_STOPWORDS,
    FeatureSpec,
    extract_features,
    juxtapose,
    load_stopwords,
    parse_records,
)
from .charts import grouped_bar_svg
from .errors import InterinfoError
from .factors import (
    DataMatrix,
    bin_loadings,
    correlation_matrix,
    extract_factors,
    varimax_rotate,
)
from .ipf import DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE, MeasureReport, full_report

DEFAULT_SETS = (
    "words",
    "authors",
    "references",
    "words+authors",
    "words+authors+references",
)

SET_TOKENS = ("words", "authors", "references")

MIN_SURVIVING_VARIABLES = 3


@dataclass(frozen=True)
class PipelineConfig:
    """Everything a pipeline run needs; file-loadable, flag-overridable."""

    records: str
    output_dir: str
    sets: tuple[str, ...] = DEFAULT_SETS
    factors: int = 3
    bins: int = 10
    ipf_tolerance: float = DEFAULT_TOLERANCE
    ipf_max_iterations: int = DEFAULT_MAX_ITERATIONS
    charts: bool = True
    word_min_occurrence: int = 3
    author_min_occurrence: int = 2
    reference_min_occurrence: int = 1
    stopwords: str | None = None
    reference_titles_only: bool = False

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        if self.factors != 3:
            raise InterinfoError(
                f"the binning and measures stages need exactly 3 factors, got {self.factors}"
            )
        if self.bins < 2:
            raise InterinfoError(f"bins must be >= 2, got {self.bins}")
        if not self.sets:
            raise InterinfoError("at least one variable set is required")
        for name in self.sets:
            for token in name.split("+"):
                if token not in SET_TOKENS:
                    raise InterinfoError(
                        f"unknown set token {token!r} in {name!r}; "
                        f"tokens are {SET_TOKENS}"
                    )

    @classmethod
    def from_mapping(cls, data: dict) -> "PipelineConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise InterinfoError(f"unknown config keys: {sorted(unknown)}")
        if "records" not in data or "output_dir" not in data:
            raise InterinfoError("config must set 'records' and 'output_dir'")
        return cls(**data)


def load_config(path: str | Path) -> dict:
    """Read a TOML or JSON config file into a plain mapping."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".toml":
        try:
            import tomllib
        except ModuleNotFoundError:
            import tomli as tomllib
        return tomllib.loads(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterinfoError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InterinfoError(f"config {path} must hold a single object")
    return data


@dataclass(frozen=True)
class SetResult:
    """Outcome of one variable set: a report or a failure diagnostic."""

    name: str
    report: MeasureReport | None = None
    error: str | None = None
    n_variables: int = 0
    dropped_constant: int = 0

    @property
    def failed(self) -> bool:
        return self.report is None


@dataclass(frozen=True)
class PipelineResult:
    results: tuple[SetResult, ...]
    output_dir: Path
    report_paths: tuple[Path, ...]
    combined_csv: Path
    chart: Path | None = None

    @property
    def any_failed(self) -> bool:
        return any(r.failed for r in self.results)


def atomic_write(path: Path, text: str) -> None:
    """Write via a sibling temp file and rename, so readers never see a
    half-written report."""
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def drop_constant_columns(matrix: DataMatrix) -> tuple[DataMatrix, int]:
    """Remove zero-variance columns; correlations are undefined on them."""
    values = matrix.values
    keep = [
        j
        for j in range(values.shape[1])
        if not np.all(values[:, j] == values[0, j])
    ]
    dropped = values.shape[1] - len(keep)
    if dropped == 0:
        return matrix, 0
    return (
        DataMatrix(
            matrix.case_labels,
            tuple(matrix.variable_labels[j] for j in keep),
            values[:, keep],
            kind=matrix.kind,
        ),
        dropped,
    )


def _feature_specs(config: PipelineConfig, stopwords: frozenset[str]) -> dict[str, FeatureSpec]:
    return {
        "words": FeatureSpec(
            kind="title_word",
            min_occurrence=config.word_min_occurrence,
            stopwords=stopwords,
        ),
        "authors": FeatureSpec(
            kind="author",
            min_occurrence=config.author_min_occurrence,
        ),
        "references": FeatureSpec(
            kind="reference",
            min_occurrence=config.reference_min_occurrence,
            titles_only=config.reference_titles_only,
        ),
    }


def run_set(
    name: str,
    matrices: dict[str, DataMatrix],
    config: PipelineConfig,
) -> SetResult:
    """Factor, bin, and measure one variable set; failures come back as
    diagnostics, not exceptions."""
    try:
        blocks = [matrices[token] for token in name.split("+")]
        combined = juxtapose(blocks)
        filtered, dropped = drop_constant_columns(combined)
        if filtered.n_variables < MIN_SURVIVING_VARIABLES:
            return SetResult(
                name=name,
                error=(
                    f"only {filtered.n_variables} non-constant variables "
                    f"(need {MIN_SURVIVING_VARIABLES}); {dropped} constant dropped"
                ),
                n_variables=filtered.n_variables,
                dropped_constant=dropped,
            )
        corr = correlation_matrix(filtered)
        loadings = extract_factors(corr, config.factors, filtered.variable_labels)
        rotated = varimax_rotate(loadings)
        table = bin_loadings(rotated, config.bins)
        report = full_report(table, config.ipf_tolerance, config.ipf_max_iterations)
        return SetResult(
            name=name,
            report=report,
            n_variables=filtered.n_variables,
            dropped_constant=dropped,
        )
    except InterinfoError as exc:
        return SetResult(name=name, error=str(exc))


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    """Run every configured set and write reports, the combined CSV, and
    (optionally) the grouped-bar chart into the output directory."""
    records_path = Path(config.records)
    if not records_path.exists():
        raise InterinfoError(f"records file not found: {records_path}")
    docs = parse_records(records_path.read_text())
    if not docs:
        raise InterinfoError(f"no records parsed from {records_path}")

    stopwords = DEFAULT_STOPWORDS
    if config.stopwords:
        stop_path = Path(config.stopwords)
        if not stop_path.exists():
            raise InterinfoError(f"stopword file not found: {stop_path}")
        stopwords = load_stopwords(stop_path.read_text())

    specs = _feature_specs(config, stopwords)
    needed = {token for name in config.sets for token in name.split("+")}
    matrices: dict[str, DataMatrix] = {}
    extract_errors: dict[str, str] = {}
    for token in sorted(needed):
        try:
            matrices[token] = extract_features(docs, specs[token])
        except InterinfoError as exc:
            extract_errors[token] = str(exc)

    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    results = []
    report_paths = []
    for name in config.sets:
        broken = [t for t in name.split("+") if t in extract_errors]
        if broken:
            results.append(
                SetResult(
                    name=name,
                    error="; ".join(f"{t}: {extract_errors[t]}" for t in broken),
                )
            )
            continue
        result = run_set(name, matrices, config)
        results.append(result)
        if result.report is not None:
            path = out_dir / f"{name}.measures.json"
            atomic_write(path, json.dumps(result.report.to_dict(), sort_keys=True, indent=2) + "\n")
            report_paths.append(path)

    lines = ["set,interaction_information,neg_mu_star,redundancy"]
    for result in results:
        if result.report is None:
            continue
        r = result.report
        lines.append(
            f"{result.name},{r.interaction_information:.6f},"
            f"{-r.mu_star:.6f},{r.redundancy:.6f}"
        )
    combined = out_dir / "combined.csv"
    atomic_write(combined, "\n".join(lines) + "\n")

    chart_path = None
    plotted = [
        (res.name, res.report.interaction_information, -res.report.mu_star)
        for res in results
        if res.report is not None
    ]
    if config.charts and plotted:
        chart_path = out_dir / "measures.svg"
        atomic_write(chart_path, grouped_bar_svg(plotted))

    return PipelineResult(
        results=tuple(results),
        output_dir=out_dir,
        report_paths=tuple(report_paths),
        combined_csv=combined,
        chart=chart_path,
    )
