"""Command-line interface.

Subcommands: measures, pipeline, factor, ingest, ipf, dynamics.
Exit codes: 0 success, 1 input error, 2 non-converged fit (measures and
ipf commands), 3 partial pipeline failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .biblio import (
    DEFAULT_STOPWORDS,
    FeatureSpec,
    extract_features,
    load_stopwords,
    parse_records,
)
from .dynamics import DynamicsParams, VARIANTS, simulate
from .errors import InterinfoError
from .factors import DataMatrix, correlation_matrix, extract_factors, varimax_rotate
from .ipf import DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE, full_report, ipf_fit
from .pipeline import PipelineConfig, load_config, run_pipeline
from .table import JointTable

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_CONVERGED = 2
EXIT_PARTIAL = 3

_KIND_BY_TOKEN = {"words": "title_word", "authors": "author", "references": "reference"}


def _read_table(path: str) -> JointTable:
    p = Path(path)
    if not p.exists():
        raise InterinfoError(f"table file not found: {p}")
    return JointTable.read(p)


def cmd_measures(args) -> int:
    table = _read_table(args.table)
    report = full_report(table, args.tolerance, args.max_iterations)
    print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    if args.csv:
        rows = ["measure,value"]
        for key in (
            "joint_entropy",
            "mu_star",
            "q",
            "interaction_information",
            "redundancy",
            "r_krippendorff",
        ):
            rows.append(f"{key},{getattr(report, key):.6f}")
        Path(args.csv).write_text("\n".join(rows) + "\n")
    return EXIT_OK if report.ipf_converged else EXIT_NOT_CONVERGED


def cmd_pipeline(args) -> int:
    data = load_config(args.config) if args.config else {}
    overrides = {
        "records": args.records,
        "output_dir": args.output_dir,
        "factors": args.factors,
        "bins": args.bins,
        "ipf_tolerance": args.ipf_tolerance,
        "ipf_max_iterations": args.ipf_max_iterations,
        "charts": args.charts,
        "word_min_occurrence": args.word_min_occurrence,
        "author_min_occurrence": args.author_min_occurrence,
        "reference_min_occurrence": args.reference_min_occurrence,
        "stopwords": args.stopwords,
        "reference_titles_only": args.reference_titles_only,
    }
    for key, value in overrides.items():
        if value is not None:
            data[key] = value
    if args.sets is not None:
        data["sets"] = [s.strip() for s in args.sets.split(",") if s.strip()]
    config = PipelineConfig.from_mapping(data)
    result = run_pipeline(config)
    for res in result.results:
        if res.report is not None:
            flag = "" if res.report.ipf_converged else " [ipf not converged]"
            print(
                f"{res.name}: I={res.report.interaction_information:.6f} "
                f"-mu*={-res.report.mu_star:.6f} R={res.report.redundancy:.6f}"
                f" ({res.n_variables} variables){flag}"
            )
        else:
            print(f"{res.name}: skipped ({res.error})", file=sys.stderr)
    print(f"wrote {result.combined_csv}")
    if result.chart is not None:
        print(f"wrote {result.chart}")
    return EXIT_PARTIAL if result.any_failed else EXIT_OK


def cmd_factor(args) -> int:
    path = Path(args.matrix)
    if not path.exists():
        raise InterinfoError(f"matrix file not found: {path}")
    matrix = DataMatrix.from_csv(path.read_text())
    corr = correlation_matrix(matrix)
    loadings = extract_factors(corr, args.k, matrix.variable_labels)
    if args.rotate:
        loadings = varimax_rotate(loadings)
    text = loadings.to_csv()
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_ingest(args) -> int:
    path = Path(args.records)
    if not path.exists():
        raise InterinfoError(f"records file not found: {path}")
    docs = parse_records(path.read_text())
    if not docs:
        raise InterinfoError(f"no records parsed from {path}")
    stopwords = DEFAULT_STOPWORDS
    if args.stopwords:
        stopwords = load_stopwords(Path(args.stopwords).read_text())
    spec = FeatureSpec(
        kind=_KIND_BY_TOKEN[args.kind],
        min_occurrence=args.min_occurrence,
        stopwords=stopwords,
        titles_only=args.titles_only,
    )
    matrix = extract_features(docs, spec)
    text = matrix.to_csv()
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output} ({matrix.n_cases} cases x {matrix.n_variables} variables)")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_ipf(args) -> int:
    table = _read_table(args.table)
    margins = [
        [name.strip() for name in group.split(",") if name.strip()]
        for group in args.margins.split(";")
        if group.strip()
    ]
    result = ipf_fit(table, margins, args.tolerance, args.max_iterations)
    diag = {
        "converged": result.converged,
        "iterations": result.iterations,
        "max_margin_error": result.max_margin_error,
    }
    print(json.dumps(diag, sort_keys=True, indent=2))
    if args.output:
        result.fitted.write(args.output)
        print(f"wrote {args.output}")
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def cmd_dynamics(args) -> int:
    params = DynamicsParams(a=args.a, x0=args.x0, steps=args.steps)
    decisions = None
    if args.decisions is not None:
        stripped = args.decisions.replace(",", "").replace(" ", "")
        if stripped and not set(stripped) <= {"0", "1"}:
            raise InterinfoError(f"decisions must be bits, got {args.decisions!r}")
        decisions = [int(b) for b in stripped]
    trajectory = simulate(params, args.variant, decisions=decisions, seed=args.seed)
    text = trajectory.to_csv()
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}")
    else:
        print(text, end="")
    summary = f"final x = {trajectory.final:.6f} after {len(trajectory.values) - 1} steps"
    if trajectory.truncated:
        summary += " [truncated: complex root]"
    if trajectory.escaped:
        summary += " [escaped [0,1]]"
    print(summary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interinfo",
        description="Information measures, maximum-entropy fits, factor pipelines, "
        "and anticipatory dynamics for discrete data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measures", help="full measure report for a 3-axis joint table")
    p.add_argument("table", help="JointTable file (.json or .csv)")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--max-iterations", type=int, default=DEFAULT_MAX_ITERATIONS)
    p.add_argument("--csv", help="also write measures to this CSV file")
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("pipeline", help="run the corpus-to-measures pipeline")
    p.add_argument("--config", help="TOML or JSON config file")
    p.add_argument("--records", help="tagged records file")
    p.add_argument("--output-dir", dest="output_dir", help="directory for reports")
    p.add_argument("--sets", help="comma-separated variable sets, e.g. 'words,words+authors'")
    p.add_argument("--factors", type=int, default=None)
    p.add_argument("--bins", type=int, default=None)
    p.add_argument("--ipf-tolerance", dest="ipf_tolerance", type=float, default=None)
    p.add_argument(
        "--ipf-max-iterations", dest="ipf_max_iterations", type=int, default=None
    )
    p.add_argument("--charts", dest="charts", action="store_true", default=None)
    p.add_argument("--no-charts", dest="charts", action="store_false")
    p.add_argument(
        "--word-min-occurrence", dest="word_min_occurrence", type=int, default=None
    )
    p.add_argument(
        "--author-min-occurrence", dest="author_min_occurrence", type=int, default=None
    )
    p.add_argument(
        "--reference-min-occurrence",
        dest="reference_min_occurrence",
        type=int,
        default=None,
    )
    p.add_argument("--stopwords", help="stopword list file")
    p.add_argument(
        "--reference-titles-only",
        dest="reference_titles_only",
        action="store_true",
        default=None,
    )
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("factor", help="correlation + factor extraction on a matrix CSV")
    p.add_argument("matrix", help="DataMatrix CSV (case column + variable columns)")
    p.add_argument("-k", type=int, default=3, help="number of factors")
    p.add_argument("--no-rotate", dest="rotate", action="store_false", default=True)
    p.add_argument("-o", "--output", help="write loadings CSV here instead of stdout")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("ingest", help="tagged records to incidence-matrix CSV")
    p.add_argument("records", help="ISI tagged plain-text file")
    p.add_argument("--kind", choices=sorted(_KIND_BY_TOKEN), required=True)
    p.add_argument("--min-occurrence", dest="min_occurrence", type=int, default=1)
    p.add_argument("--stopwords", help="stopword list file (title words only)")
    p.add_argument(
        "--titles-only",
        dest="titles_only",
        action="store_true",
        help="reduce references to their title field",
    )
    p.add_argument("-o", "--output", help="write matrix CSV here instead of stdout")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("ipf", help="fit maximum-entropy table to margins")
    p.add_argument("table", help="JointTable file (.json or .csv)")
    p.add_argument(
        "--margins",
        required=True,
        help="semicolon-separated margins, comma-separated axes: 'x,y;x,z;y,z'",
    )
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--max-iterations", type=int, default=DEFAULT_MAX_ITERATIONS)
    p.add_argument("-o", "--output", help="write the fitted table here")
    p.set_defaults(func=cmd_ipf)

    p = sub.add_parser("dynamics", help="simulate a logistic-map trajectory")
    p.add_argument("--variant", choices=VARIANTS, required=True)
    p.add_argument("-a", type=float, required=True, help="growth parameter")
    p.add_argument("--x0", type=float, required=True, help="initial state in [0,1]")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help="decision-bit seed")
    p.add_argument("--decisions", help="explicit bit string, e.g. '0110'")
    p.add_argument("-o", "--output", help="write trajectory CSV here instead of stdout")
    p.set_defaults(func=cmd_dynamics)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InterinfoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
