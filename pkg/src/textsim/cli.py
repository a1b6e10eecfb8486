"""Command-line interface.

Results go to stdout in a stable, machine-readable form; diagnostics go to
stderr. Exit status: 0 success, 1 data or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from textsim import __version__
from textsim.alignment import parse_alignment, serialize_alignment, validate_rules
from textsim.config import ENV_VAR, EffectiveConfig, load_config
from textsim.errors import ConfigError, TextSimError, UnknownMetric
from textsim.evalreport import (
    emit_cited_csv,
    emit_matrix_csv,
    emit_report,
    evaluate_corpus,
    load_corpus,
)
from textsim.matcher import build_matrix, predict_alignment, score_alignment
from textsim.metrics import get_metric, resolve_metrics
from textsim.textproc import document_tokens, read_document


class UsageError(Exception):
    pass


def _overrides(pairs: list[str]) -> dict[str, str]:
    out = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep:
            raise UsageError(f"--set expects KEY=VALUE, got {pair!r}")
        out[key.strip()] = value.strip()
    return out


def _config(args: argparse.Namespace, **extra: object) -> EffectiveConfig:
    overrides = _overrides(args.set)
    overrides.update({k: str(v) for k, v in extra.items() if v is not None})
    cfg = load_config(args.config, overrides)
    print(f"config fingerprint: {cfg.fingerprint()}", file=sys.stderr)
    return cfg


def cmd_sim(args: argparse.Namespace) -> int:
    cfg = _config(args)
    metrics = resolve_metrics(args.metric)
    a = read_document(args.a, args.mode)
    b = read_document(args.b, args.mode)
    ta, tb = document_tokens(a, cfg.pipeline), document_tokens(b, cfg.pipeline)
    for metric_id in metrics:
        print(f"{metric_id} {get_metric(metric_id)(ta, tb, cfg.params):.5f}")
    return 0


def cmd_corpus_eval(args: argparse.Namespace) -> int:
    cfg = _config(args)
    metrics = resolve_metrics(args.metrics)
    if args.reference != "mean" and args.reference not in metrics:
        raise UsageError(f"reference {args.reference!r} is not among the evaluated metrics")
    corpus = load_corpus(args.corpus)
    metadata = {**cfg.description, "fingerprint": cfg.fingerprint()}
    table = evaluate_corpus(corpus, metrics, cfg.pipeline, cfg.params, args.reference, metadata)
    report = emit_report(table, args.format)
    if args.out is None:
        sys.stdout.buffer.write(report)
        sys.stdout.flush()
        return 0
    out = Path(args.out)
    out.write_bytes(report)
    if args.format == "csv":
        out.with_suffix(".matrix.csv").write_bytes(emit_matrix_csv(table))
        out.with_suffix(".cited.csv").write_bytes(emit_cited_csv(table))
    print(f"wrote {out}", file=sys.stderr)
    return 0


def cmd_align_eval(args: argparse.Namespace) -> int:
    cfg = _config(args, threshold=args.threshold)
    src = read_document(args.source)
    tgt = read_document(args.target)
    gold = parse_alignment(Path(args.gold).read_text(encoding="utf-8"), len(src), len(tgt))
    matrix = build_matrix(src, tgt, args.metric, cfg.pipeline, cfg.params)
    predicted = predict_alignment(matrix, cfg.threshold)
    report = score_alignment(predicted, gold)
    print(f"precision {report.precision:.5f}")
    print(f"recall {report.recall:.5f}")
    print(f"f1 {report.f1:.5f}")
    print(f"predicted_links {len(report.predicted_links)}")
    print(f"gold_links {len(report.true_links)}")
    if args.show_map:
        sys.stdout.write(serialize_alignment(predicted))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    src = read_document(args.source)
    tgt = read_document(args.target)
    amap = parse_alignment(Path(args.map).read_text(encoding="utf-8"), len(src), len(tgt))
    violations = validate_rules(amap, src, tgt, args.level)
    for v in violations:
        print(v)
    if violations:
        print(f"{len(violations)} violation(s)", file=sys.stderr)
        return 1
    print("ok", file=sys.stderr)
    return 0


def cmd_parse_map(args: argparse.Namespace) -> int:
    amap = parse_alignment(Path(args.file).read_text(encoding="utf-8"), args.sources, args.targets)
    sys.stdout.write(serialize_alignment(amap))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="textsim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", help=f"key=value config file (default: ${ENV_VAR} if set)"
    )
    common.add_argument(
        "--set", action="append", default=[], metavar="KEY=VALUE",
        help="override one config key; repeatable",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sim", parents=[common], help="score two documents")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--metric", default="all", help="metric id, comma list, or 'all'")
    p.add_argument("--mode", choices=("line", "sentence"), default="line")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("corpus-eval", parents=[common], help="level means and correlations")
    p.add_argument("--corpus", required=True)
    p.add_argument("--metrics", default="all")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--reference", default="mean", help="'mean' or a metric id")
    p.set_defaults(func=cmd_corpus_eval)

    p = sub.add_parser("align-eval", parents=[common], help="predict phrase links, score vs gold")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--metric", default="cosine")
    p.add_argument("--threshold", type=float)
    p.add_argument("--show-map", action="store_true", help="also print the predicted map")
    p.set_defaults(func=cmd_align_eval)

    p = sub.add_parser("validate", help="check structural paraphrase rules")
    p.add_argument("--level", choices=("basic", "complex"), required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("parse-map", help="print a map file in canonical form")
    p.add_argument("file")
    p.add_argument("--sources", type=int, help="source phrase count (enforces completeness)")
    p.add_argument("--targets", type=int, help="target phrase count")
    p.set_defaults(func=cmd_parse_map)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigError, UnknownMetric) as exc:
        print(f"textsim: error: {exc}", file=sys.stderr)
        return 2
    except (TextSimError, OSError, UnicodeDecodeError) as exc:
        print(f"textsim: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
