"""Command-line interface.

Exit codes: 0 certificate emitted or verified, 1 verification failed,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import __version__
from .errors import InvalidCertificate, MatchcertError
from .formats import emit_certificate, parse_certificate, parse_graph6, read_graph
from .graph import Graph
from .oracle import brute_force_perfect_matching, brute_force_violator, count_perfect_matchings
from .sweep import check_graph, selftest_corpus
from .tutte import certify, verify_certificate

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str, fmt: str | None) -> Graph:
    return read_graph(_read_text(path), fmt)


def cmd_certify(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    doc = emit_certificate(g, certify(g))
    if args.output:
        Path(args.output).write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    try:
        cert = parse_certificate(g, _read_text(args.certificate))
    except InvalidCertificate as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if not verify_certificate(g, cert):
        print(f"rejected: {cert.kind} does not hold for this graph", file=sys.stderr)
        return EXIT_FAILED
    print(f"ok: {cert.kind}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    m = brute_force_perfect_matching(g)
    report: dict[str, object] = {"n": g.n, "has_perfect_matching": m is not None}
    if m is not None:
        report["matching"] = [list(p) for p in m.pairs()]
    else:
        u = brute_force_violator(g)
        report["violator"] = None if u is None else sorted(u)
    if args.count:
        report["count"] = count_perfect_matchings(g)
    print(json.dumps(report, sort_keys=True))
    return EXIT_OK


def _certify_line(line: str) -> tuple[str | None, str | None]:
    try:
        g = parse_graph6(line)
    except MatchcertError as exc:
        return None, str(exc)
    return emit_certificate(g, certify(g)).strip(), None


def cmd_batch(args: argparse.Namespace) -> int:
    with open(args.input, encoding="utf-8") as fh:
        lines = [(i, ln.strip()) for i, ln in enumerate(fh, start=1) if ln.strip()]
    counts = {"perfect_matching": 0, "tutte_violator": 0, "malformed": 0}
    records = [ln for _, ln in lines]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_certify_line, records, chunksize=64))
    else:
        results = map(_certify_line, records)
    for (lineno, _), (doc, err) in zip(lines, results):
        if err is not None:
            counts["malformed"] += 1
            print(f"line {lineno}: {err}", file=sys.stderr)
            continue
        counts[json.loads(doc)["kind"]] += 1
        print(doc)
    width = max(map(len, counts))
    for kind, count in counts.items():
        print(f"{kind:<{width}}  {count}", file=sys.stderr)
    return EXIT_INPUT if counts["malformed"] else EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    checked = failed = 0
    for g in selftest_corpus(args.max_n, args.samples, args.seed):
        problems = check_graph(g)
        checked += 1
        if problems:
            failed += 1
            print(f"FAIL {g!r}: {'; '.join(problems)}")
    print(f"{checked} graphs checked, {failed} failures")
    return EXIT_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matchcert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="graph file (graph6 or edge list), '-' for stdin")
        p.add_argument("--format", choices=["g6", "edges"], help="input format (guessed if omitted)")

    p = sub.add_parser("certify", help="emit a perfect matching or a Tutte violator")
    graph_input(p)
    p.add_argument("-o", "--output", help="write the certificate here instead of stdout")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    graph_input(p)
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force matching and violator search")
    graph_input(p)
    p.add_argument("--count", action="store_true", help="also count perfect matchings")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("batch", help="certify every graph6 line of a file")
    p.add_argument("input")
    p.add_argument("-j", "--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("selftest", help="check certify against the oracle on small graphs")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--samples", type=int, default=2000, help="random graphs per n above 5")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatchcertError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
