"""Command-line front end.

Subcommands: enumerate, nu, coeff, poly, render, verify, maxima, cache.
Output is deterministic for fixed inputs; the verify command's text form
deliberately omits timing so runs are byte-identical.
"""

from __future__ import annotations

import argparse
import os
import sys

from .cache import default_cache_path, load_cache, store_cache
from .checks import CHECK_IDS, maxima_table, run_check
from .enumeration import SetQuery, query
from .errors import PipedreamError
from .grid import render
from .perms import Permutation, SubwordSelection
from .specialization import (coefficient, grothendieck, nu, nu_memo_snapshot,
                             seed_nu_memo)


def _perm(text: str) -> Permutation:
    return Permutation.from_text(text)


# checks that consume the specialization tables and so benefit from a
# sharded prewarm of the exhaustive pass
_TABLE_HUNGRY = {"upper-bound", "thm-1243", "groth-1243-2143", "conj-gao",
                 "conj-groth", "skew", "pattern-sum", "stanley"}


def _prewarm(n: int, jobs: int, guard) -> None:
    if jobs > 1:
        from .specialization import nu_table

        for m in range(n + 1):
            nu_table(m, jobs=jobs, guard=guard)


def _load_seed(path):
    values, skipped = load_cache(path)
    if skipped:
        print(f"warning: skipped {skipped} unreadable cache line(s)", file=sys.stderr)
    seed_nu_memo(values)
    return values


def _persist(path, loaded):
    merged = dict(loaded)
    merged.update(nu_memo_snapshot())
    store_cache(merged, path)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pipedream",
        description="Exact combinatorics of bumpless pipe dreams.")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes for the exhaustive sweeps")
    parser.add_argument("--guard", type=int, default=None,
                        help="largest permutation size allowed (default 9)")
    parser.add_argument("--cache-path", default=None,
                        help="override the on-disk cache location")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the grids of a family")
    p.add_argument("--perm", required=True)
    p.add_argument("--kind", default="BPD",
                   choices=["BPD", "bpd", "BPD_K", "mBPD", "mbpd"])
    p.add_argument("--subword", default=None,
                   help="comma-separated 1-based indices; restricts BPD/bpd "
                        "to the matching removable-pipe stratum")
    p.add_argument("--format", default="ascii", choices=["ascii", "json"])

    p = sub.add_parser("nu", help="principal specialization of a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--at", type=int, default=None, metavar="BETA")

    p = sub.add_parser("coeff", help="pattern coefficient of a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--mode", default="recursive", choices=["recursive", "ie"])
    p.add_argument("--at", type=int, default=None, metavar="BETA")

    p = sub.add_parser("poly", help="full weight generating polynomial")
    p.add_argument("--perm", required=True)

    p = sub.add_parser("render", help="draw one grid of a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--index", type=int, required=True,
                   help="0-based position in the enumeration order")
    p.add_argument("--format", default="ascii", choices=["ascii", "json", "svg"])

    p = sub.add_parser("verify", help="run a named machine check")
    p.add_argument("check_id", choices=sorted(CHECK_IDS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("maxima", help="extremes of the evaluated specializations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", type=int, default=1)

    p = sub.add_parser("cache", help="inspect or clear the on-disk cache")
    p.add_argument("action", choices=["path", "clear"])

    return parser


def _cmd_enumerate(args) -> int:
    w = _perm(args.perm)
    kind = args.kind
    v = None
    if args.subword is not None:
        if kind not in ("BPD", "bpd"):
            print("--subword only applies to kinds BPD and bpd", file=sys.stderr)
            return 2
        indices = tuple(int(part) for part in args.subword.split(",")) \
            if args.subword else ()
        v = SubwordSelection(w, indices)
        kind = "BPD_v" if kind == "BPD" else "bpd_v"
    grids = query(SetQuery(kind, w, v), max_n_guard=args.guard)
    if args.format == "ascii":
        blocks = [render(g, "ascii") for g in grids]
        print("\n\n".join(blocks))
        print(f"# {len(grids)} grid(s)")
    else:
        for g in grids:
            print(render(g, "json"))
    return 0


def _cmd_nu(args) -> int:
    loaded = _load_seed(args.cache_path)
    value = nu(_perm(args.perm), guard=args.guard, jobs=args.jobs)
    print(value(args.at) if args.at is not None else value)
    _persist(args.cache_path, loaded)
    return 0


def _cmd_coeff(args) -> int:
    loaded = _load_seed(args.cache_path)
    w = _perm(args.perm)
    _prewarm(w.size, args.jobs, args.guard)
    mode = "recursive" if args.mode == "recursive" else "ie"
    value = coefficient(w, mode=mode, guard=args.guard)
    print(value(args.at) if args.at is not None else value)
    _persist(args.cache_path, loaded)
    return 0


def _cmd_poly(args) -> int:
    loaded = _load_seed(args.cache_path)
    print(grothendieck(_perm(args.perm), guard=args.guard))
    _persist(args.cache_path, loaded)
    return 0


def _cmd_render(args) -> int:
    w = _perm(args.perm)
    grids = query(SetQuery("BPD", w), max_n_guard=args.guard)
    if not 0 <= args.index < len(grids):
        print(f"index {args.index} out of range; {w.text()} has {len(grids)} grids",
              file=sys.stderr)
        return 2
    print(render(grids[args.index], args.format))
    return 0


def _cmd_verify(args) -> int:
    if args.check_id in _TABLE_HUNGRY:
        _prewarm(args.n, args.jobs, args.guard)
    report = run_check(args.check_id, args.n, guard=args.guard)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.text())
    return 0 if report.passed else 1


def _cmd_maxima(args) -> int:
    loaded = _load_seed(args.cache_path)
    row = maxima_table(args.n, args.beta, jobs=args.jobs, guard=args.guard)
    names_nu = ",".join(w.text() or "∅" for w in row.argmax_nu)
    names_c = ",".join(w.text() or "∅" for w in row.argmax_c)
    print(f"n={row.n} beta={row.beta_value} max_nu={row.max_nu} max_c={row.max_c} "
          f"argmax_nu={names_nu} argmax_c={names_c}")
    _persist(args.cache_path, loaded)
    return 0


def _cmd_cache(args) -> int:
    path = default_cache_path() if args.cache_path is None else args.cache_path
    if args.action == "path":
        print(path)
        return 0
    try:
        os.unlink(path)
        print(f"cleared {path}")
    except FileNotFoundError:
        print(f"nothing to clear at {path}")
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "nu": _cmd_nu,
    "coeff": _cmd_coeff,
    "poly": _cmd_poly,
    "render": _cmd_render,
    "verify": _cmd_verify,
    "maxima": _cmd_maxima,
    "cache": _cmd_cache,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except PipedreamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
