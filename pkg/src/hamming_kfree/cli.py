"""Command line interface.

Exit codes: 0 success, 2 usage error, 3 verification failure, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import io
from .bch import build_fiber_coloring
from .boosting import boost
from .cube import ENUM_CAP, CubeParams, to_hex
from .exact import BudgetExceeded, SearchBudget, m_s_exact, max_ks_free
from .layer import build_cube_coloring
from .pipeline import ENGINES, VerificationFailed, build_report, construct, verify
from .sets import INDEPENDENT, UNVERIFIED, CertifiedSet

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 2, 3, 4

log = logging.getLogger("hamming_kfree")


class UsageError(Exception):
    pass


def _params(n, r, s=2, allow_odd=False) -> CubeParams:
    if n is None or r is None:
        raise UsageError("--n and --r are required (or a set file header)")
    if n > ENUM_CAP:
        raise UsageError(f"--n must be <= {ENUM_CAP}")
    try:
        return CubeParams(n, r, s, allow_odd=allow_odd)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _budget(args) -> SearchBudget:
    return SearchBudget(max_vertices=args.max_vertices, max_nodes=args.max_nodes)


def _emit(obj, out=None) -> None:
    if out:
        io.write_json(out, obj)
    else:
        sys.stdout.write(io.dumps(obj))


def _load_set(args, s) -> CertifiedSet:
    try:
        vertices, header = io.read_set(args.input, args.n)
    except io.ParseError as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    n = args.n if args.n is not None else header.get("n")
    r = args.r if args.r is not None else header.get("r")
    params = _params(n, r, s)
    return CertifiedSet(n=params.n, r=params.r, s=s, vertices=vertices, kind=UNVERIFIED)


def cmd_construct(args) -> int:
    params = _params(args.n, args.r, args.s)
    cs = construct(args.engine, params, seed=args.seed, trials=args.trials)
    if not args.no_verify:
        cs = verify(cs, _budget(args))
    if args.out:
        io.write_set(args.out, cs.vertices, params.n, params.r)
    if args.coloring:
        if args.engine == "boost":
            raise UsageError("--coloring needs a coloring engine (bch or layer)")
        coloring = build_fiber_coloring(params) if args.engine == "bch" else build_cube_coloring(params.n, params.t)
        io.atomic_write(args.coloring, io.format_coloring(coloring))
    _emit(cs.certificate(), args.cert)
    return EXIT_OK


def cmd_verify(args) -> int:
    cs = _load_set(args, args.s)
    try:
        checked = verify(cs, _budget(args))
    except VerificationFailed as exc:
        cert = cs.certificate()
        cert.update(verified=False, status="failed", reason=str(exc))
        cert["witness"] = [to_hex(v, cs.n) for v in exc.witness or []]
        _emit(cert, args.out)
        return EXIT_VERIFY
    except BudgetExceeded as exc:
        cert = cs.certificate()
        cert.update(status="unverified", reason=str(exc))
        _emit(cert, args.out)
        return EXIT_BUDGET
    cert = checked.certificate()
    cert["status"] = "verified"
    _emit(cert, args.out)
    return EXIT_OK


def cmd_boost(args) -> int:
    cs = _load_set(args, 2)
    try:
        base = verify(cs, _budget(args))
    except VerificationFailed as exc:
        _emit({"error": f"input is not independent: {exc}", "witness": [to_hex(v, cs.n) for v in exc.witness or []]})
        return EXIT_VERIFY
    if base.kind != INDEPENDENT:  # pragma: no cover
        raise UsageError("input must be independent")
    if args.s < 2 or args.trials < 1:
        raise UsageError("need --s >= 2 and --trials >= 1")
    res = boost(base, args.s, trials=args.trials, seed=args.seed)
    out = res.set
    if not args.no_verify:
        out = verify(out, _budget(args))
    if args.out:
        io.write_set(args.out, out.vertices, out.n, out.r)
    payload = res.as_dict()
    payload["certificate"] = out.certificate()
    payload["translates"] = [to_hex(u, out.n) for u in res.translates]
    _emit(payload, args.json)
    return EXIT_OK


def cmd_exact(args) -> int:
    budget = _budget(args)
    if args.what == "alpha":
        params = _params(args.n, args.r, args.s, allow_odd=True)
        res = max_ks_free(params.n, params.r, params.s, budget)
        witness = [to_hex(v, params.n) for v in res.witness]
    else:
        if args.k is None or args.l is None or args.n is None:
            raise UsageError("exact ms needs --n, --k and --l")
        if not 0 <= args.k <= args.n or args.s < 2 or args.l < 0:
            raise UsageError("need 0 <= k <= n, l >= 0 and s >= 2")
        res = m_s_exact(args.n, args.k, args.l, args.s, budget)
        witness = [to_hex(v, args.n) for v in res.witness]
    payload = res.as_dict()
    payload["witness"] = witness
    _emit(payload, args.out)
    return EXIT_OK if res.exact else EXIT_BUDGET


def _engines(text) -> list[str]:
    engines = [e.strip() for e in text.split(",") if e.strip()]
    bad = [e for e in engines if e not in ENGINES]
    if bad or not engines:
        raise UsageError(f"unknown engine(s) {bad}; choose from {','.join(ENGINES)}")
    return engines


def cmd_bounds(args) -> int:
    params = _params(args.n, args.r, args.s)
    rep = build_report(params, _engines(args.construct), args.exact, _budget(args), args.seed, args.trials)
    _emit(rep.as_dict(), args.out)
    return EXIT_OK


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(p) for p in text.split(".."))
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected LO..HI") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"empty or invalid range {text!r}")
    return range(lo, hi + 1)


def cmd_report(args) -> int:
    if (args.n is None) == (args.n_range is None):
        raise UsageError("give exactly one of --n or --n-range")
    ns = [args.n] if args.n is not None else _parse_range(args.n_range)
    engines = _engines(args.construct)
    reports = [
        build_report(_params(n, args.r, args.s), engines, args.exact, _budget(args), args.seed, args.trials)
        for n in ns
    ]
    if args.format == "csv":
        from .bounds import grid_csv

        text = grid_csv(reports)
    else:
        payload = reports[0].as_dict() if args.n is not None else [r.as_dict() for r in reports]
        text = io.dumps(payload)
    if args.out:
        io.atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamming-kfree", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--s", type=int, default=2)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--max-vertices", type=int, default=1 << 12)
    common.add_argument("--max-nodes", type=int, default=2 * 10**5)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a K_s-free set")
    p.add_argument("--engine", choices=ENGINES, default="bch")
    p.add_argument("--out", help="set file to write")
    p.add_argument("--cert", help="certificate JSON path (default stdout)")
    p.add_argument("--coloring", help="also write the full coloring CSV")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="exhaustively check a set file")
    p.add_argument("--input", required=True)
    p.add_argument("--out", help="certificate JSON path (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("boost", parents=[common], help="random-translate boosting")
    p.add_argument("--input", required=True)
    p.add_argument("--out", help="boosted set file")
    p.add_argument("--json", help="result JSON path (default stdout)")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_boost)

    p = sub.add_parser("exact", parents=[common], help="exhaustive oracles")
    p.add_argument("what", choices=["alpha", "ms"])
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    for name, helptext in (("bounds", "bound report for one triple"), ("report", "report or grid")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--exact", action="store_true")
        p.add_argument("--construct", default="bch,layer")
        p.add_argument("--out")
        if name == "report":
            p.add_argument("--n-range")
            p.add_argument("--format", choices=["json", "csv"], default="json")
        p.set_defaults(func=cmd_bounds if name == "bounds" else cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stdout.write(io.dumps({"error": str(exc), "exit": EXIT_USAGE}))
        return EXIT_USAGE
    except BudgetExceeded as exc:
        sys.stdout.write(io.dumps({"error": str(exc), "exit": EXIT_BUDGET}))
        return EXIT_BUDGET
    except VerificationFailed as exc:
        sys.stdout.write(io.dumps({"error": str(exc), "exit": EXIT_VERIFY}))
        return EXIT_VERIFY


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
