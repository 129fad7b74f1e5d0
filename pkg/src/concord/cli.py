"""``concord`` command line.

Exit codes: 0 ok, 2 bad input or flags, 3 oracle disagreement, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle
from .index import build_position_index, build_truth_table, format_matrix
from .kernel import distance_matrix, kappa_set, max_common_count, outlier_scores
from .lcs import DEFAULT_CAP, EnumerationCapExceeded, count_lcs, lcs_indices, psi_lengths, to_symbols
from .model import OrderingParseError, dedupe, parse_orderings
from .report import (
    concordance_payload,
    concordance_rows,
    fmt_float,
    matrix_rows,
    seq_text,
    to_json,
    to_tsv,
)
from .scs import NoProgressError, smallest_covering_set

EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_CAP = 4


class UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser, *, oracle_flag=False, cap=False):
    p.add_argument("file", nargs="?", default="-", help="ordering file, '-' or omitted for stdin")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--no-dedupe", action="store_true", help="keep duplicate orderings")
    p.add_argument("--dump-index", action="store_true", help="write the position index and truth table to stderr")
    if oracle_flag:
        p.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")
    if cap:
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of sequences to enumerate")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concord",
        description="Concordance of preference orderings via common subsequences.",
    )
    sub = parser.add_subparsers(dest="command", metavar="<command>", required=True)

    p = sub.add_parser("concordance", help="kappa, per-symbol counts, normalized concordance, llcs")
    _add_common(p, oracle_flag=True)
    p.add_argument("--low-memory", action="store_true", help="stream truth-table rows instead of storing them")

    p = sub.add_parser("lcs", help="all longest common subsequences")
    _add_common(p, oracle_flag=True, cap=True)
    p.add_argument("--count-only", action="store_true", help="report the count without listing sequences")

    p = sub.add_parser("scs", help="smallest covering set")
    _add_common(p, oracle_flag=True, cap=True)
    p.add_argument("--method", choices=("exact", "symbol-loop"), default="exact")

    p = sub.add_parser("distance", help="pairwise feature-space distances")
    _add_common(p)

    p = sub.add_parser("outliers", help="mean distance of each judge to the others")
    _add_common(p)

    p = sub.add_parser("maxk", help="maximum number of k-long common subsequences of two n-long orderings")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    orderings = parse_orderings(_read(args.file))
    if args.no_dedupe:
        print("warning: --no-dedupe treats the input as a collection; "
              "concordance is defined over sets of distinct orderings", file=sys.stderr)
    X = dedupe(orderings, distinct=not args.no_dedupe)
    if X.dropped:
        print(f"note: dropped {X.dropped} duplicate ordering(s)", file=sys.stderr)
    if X.uneven():
        print("note: orderings do not all rank the same items", file=sys.stderr)
    if args.dump_index:
        I = build_position_index(X)
        T = build_truth_table(I)
        print("# position index", file=sys.stderr)
        print(format_matrix(I.tolist()), file=sys.stderr)
        print("# truth table", file=sys.stderr)
        print(format_matrix(T.tolist()), file=sys.stderr)
    return X


def _oracle_set(X):
    if any(len(x) > oracle.MAX_LENGTH for x in X):
        print(f"note: oracle skipped, an ordering exceeds {oracle.MAX_LENGTH} symbols", file=sys.stderr)
        return None
    return oracle.intersect_all(X)


def _emit(args, payload, rows):
    sys.stdout.write(to_json(payload) if args.format == "json" else to_tsv(rows))


def cmd_concordance(args) -> int:
    X = _load(args)
    report = kappa_set(X, low_memory=args.low_memory)
    payload = concordance_payload(report, X.dropped)
    code = 0
    if args.oracle:
        S = _oracle_set(X)
        if S is not None:
            agree = len(S) == report.kappa
            payload["oracle_kappa"] = str(len(S))
            payload["oracle_verdict"] = "agree" if agree else "disagree"
            code = 0 if agree else EXIT_VERIFY
    _emit(args, payload, concordance_rows(payload))
    return code


def cmd_lcs(args) -> int:
    X = _load(args)
    T = build_truth_table(build_position_index(X))
    psi = psi_lengths(T)
    payload = {"llcs": psi.llcs}
    if args.count_only:
        payload["count"] = count_lcs(T, psi)
        seqs = None
    else:
        seqs = to_symbols(lcs_indices(T, psi, args.cap), T.symbols)
        payload["count"] = len(seqs)
        payload["sequences"] = [seq_text(s) for s in seqs]
    code = 0
    if args.oracle and seqs is not None:
        S = _oracle_set(X)
        if S is not None:
            ell = max((len(s) for s in S), default=0)
            agree = {s for s in S if len(s) == ell} == set(seqs)
            payload["oracle_verdict"] = "agree" if agree else "disagree"
            code = 0 if agree else EXIT_VERIFY
    rows = [("llcs", payload["llcs"]), ("count", payload["count"])]
    rows += [("sequence", s) for s in payload.get("sequences", [])]
    _emit(args, payload, rows)
    return code


def cmd_scs(args) -> int:
    X = _load(args)
    C = smallest_covering_set(X, cap=args.cap, method=args.method)
    payload = {
        "lcs": [seq_text(s) for s in C.lcs],
        "covering_set": [seq_text(s) for s in C.sequences],
        "uncovered_symbols_processed": list(C.processed),
    }
    code = 0
    if args.oracle:
        S = _oracle_set(X)
        if S is not None:
            agree = oracle.maximal_elements(S) == set(C.sequences)
            payload["oracle_verdict"] = "agree" if agree else "disagree"
            code = 0 if agree else EXIT_VERIFY
    _emit(args, payload, [("covering_set", seq_text(s)) for s in C.sequences])
    return code


def cmd_distance(args) -> int:
    X = _load(args)
    ids = X.judge_ids()
    D = distance_matrix(X)
    payload = {"judges": ids, "matrix": [[round(v, 6) for v in row] for row in D]}
    _emit(args, payload, matrix_rows(ids, D))
    return 0


def cmd_outliers(args) -> int:
    X = _load(args)
    scores = outlier_scores(X)
    payload = [{"judge": j, "score": round(s, 6)} for j, s in scores]
    _emit(args, payload, [("judge", "score")] + [(j, fmt_float(s)) for j, s in scores])
    return 0


def cmd_maxk(args) -> int:
    f = max_common_count(args.n, args.k)
    _emit(args, {"n": args.n, "k": args.k, "f": str(f)}, [(f,)])
    return 0


COMMANDS = {
    "concordance": cmd_concordance,
    "lcs": cmd_lcs,
    "scs": cmd_scs,
    "distance": cmd_distance,
    "outliers": cmd_outliers,
    "maxk": cmd_maxk,
}


def _validate(args):
    if getattr(args, "cap", 1) < 1:
        raise UsageError("--cap must be positive")
    if getattr(args, "count_only", False) and args.oracle:
        raise UsageError("--count-only cannot be combined with --oracle")
    if getattr(args, "low_memory", False) and args.dump_index:
        raise UsageError("--low-memory cannot be combined with --dump-index")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        _validate(args)
        return COMMANDS[args.command](args)
    except (OrderingParseError, UsageError, ValueError, OSError) as exc:
        print(f"concord: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnumerationCapExceeded as exc:
        print(f"concord: error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NoProgressError as exc:
        print(f"concord: error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
