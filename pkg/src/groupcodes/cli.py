"""Command-line driver: ``groupcodes <command> ...``.

Commands: verify, decompose, constructx, derive, search, info.
Exit status: 0 all pass, 1 any failure, 2 usage error, 3 only budget-limited
partial results.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field, asdict
from pathlib import Path

from . import bundled
from .codes import (
    CodeError,
    LinearCode,
    code_from_gmatrix,
    construction_x,
    decompose,
    dual,
    is_automorphism,
)
from .distance import (
    DEFAULT_SECONDS,
    DEFAULT_WORK,
    Budget,
    DistanceResult,
    find_word_of_weight_at_most,
    min_distance_bz,
)
from .formats import (
    FormatError,
    parse_group_spec,
    read_code,
    read_permutation,
    read_vfile,
    write_code,
)
from .gf2linalg import BitVector
from .groups import GroupError, cycle_type
from .search import SearchConfig, load_bklc, random_search, write_records

log = logging.getLogger("groupcodes")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARTIAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class ReportLine:
    id: str
    expected: tuple[int, int, int]
    n: int
    k: int
    lower: int | None
    upper: int | None
    certified: bool
    status: str
    elapsed: float
    witness: str | None = None


@dataclass
class VerificationReport:
    lines: list[ReportLine] = field(default_factory=list)

    def exit_code(self) -> int:
        statuses = {ln.status for ln in self.lines}
        if "fail" in statuses:
            return EXIT_FAIL
        if "partial" in statuses:
            return EXIT_PARTIAL
        return EXIT_OK

    def to_json(self) -> str:
        return json.dumps([asdict(ln) for ln in self.lines], indent=1)


def _budget(args) -> Budget:
    return Budget(seconds=args.budget_seconds, work=args.budget_work, threads=args.threads)


def _distance(code: LinearCode, budget: Budget, expected: int | None = None, seed: int = 0) -> DistanceResult:
    """BZ within budget; when that leaves the upper bound above ``expected``,
    spend what remains looking for a witness of the expected weight."""
    res = min_distance_bz(code, budget)
    if res.certified or expected is None or res.upper <= expected:
        return res
    left = None if budget.seconds is None else max(0.0, budget.seconds - res.elapsed)
    if left == 0.0 or budget.work == 0:
        return res
    w = find_word_of_weight_at_most(code, expected, Budget(left, budget.work, budget.threads), seed=seed)
    if w is None or w.weight() >= res.upper:
        return res
    res.upper, res.witness, res.seed = w.weight(), w, seed
    if res.lower >= res.upper:
        res.lower, res.certified = res.upper, True
    return res


def _status(k_ok: bool, d: int, res: DistanceResult) -> str:
    if not k_ok or res.upper < d or res.lower > d:
        # wrong dimension, a lighter codeword, or a proven larger distance
        return "fail"
    if res.certified and res.upper == d:
        return "pass"
    return "partial"


def verify_code(ident: str, code: LinearCode, expected: tuple[int, int, int], budget: Budget, seed: int = 0) -> ReportLine:
    t0 = time.perf_counter()
    n, k, d = expected
    k_ok = (code.n, code.k) == (n, k)
    if code.k < 1 or budget.seconds == 0 or budget.work == 0:
        # no distance work: dimension check only
        status = "partial" if k_ok else "fail"
        return ReportLine(ident, expected, code.n, code.k, None, None, False, status, time.perf_counter() - t0)
    res = _distance(code, budget, d, seed)
    return ReportLine(
        ident,
        expected,
        code.n,
        code.k,
        res.lower,
        res.upper,
        res.certified,
        _status(k_ok, d, res),
        time.perf_counter() - t0,
        res.witness.to_str(),
    )


def _selected_entries(selectors: list[str]):
    if not selectors or selectors == ["all"]:
        return list(bundled.entries())
    out = []
    for s in selectors:
        try:
            out.append(bundled.entry(s))
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    return out


def cmd_verify(args) -> int:
    budget = _budget(args)
    report = VerificationReport()
    sides = ["code", "dual"] if args.side == "both" else [args.side]
    for e in _selected_entries(args.entries):
        for side in sides:
            ln = verify_code(f"{e.id}:{side}", e.side(side), e.expected(side), budget, args.seed)
            report.lines.append(ln)
            bounds = "-" if ln.lower is None else (f"{ln.upper}" if ln.certified else f"{ln.lower}..{ln.upper}")
            print(f"{ln.id:10s} expected {list(ln.expected)}  got [{ln.n},{ln.k},{bounds}]  {ln.status}  {ln.elapsed:.1f}s", flush=True)
    if args.json:
        Path(args.json).write_text(report.to_json())
    return report.exit_code()


def _load_code_source(args) -> tuple[LinearCode, object]:
    """Return ``(code, group_or_None)`` from --code / --vfile / --entry."""
    if args.code:
        return read_code(args.code), None
    if args.vfile:
        _, v = read_vfile(args.vfile)
        c = code_from_gmatrix(v)
        return (dual(c) if args.dual else c), v.group
    if args.entry:
        try:
            e = bundled.entry(args.entry)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        return (e.dual() if args.dual else e.code()), e.group
    if args.thm52:
        v = bundled.thm52_element()
        c = code_from_gmatrix(v)
        return (dual(c) if args.dual else c), v.group
    raise UsageError("give one of --code, --vfile, --entry or --thm52")


def _report_code(name: str, code: LinearCode, args, out_path: str | None = None) -> dict:
    info: dict = {"name": name, "n": code.n, "k": code.k}
    if code.k >= 1 and not args.no_distance:
        res = _distance(code, _budget(args))
        info.update(lower=res.lower, upper=res.upper, certified=res.certified)
    if out_path:
        write_code(code, out_path)
        info["file"] = str(out_path)
    d = ""
    if "upper" in info:
        d = f",{info['upper']}" if info["certified"] else f",{info['lower']}..{info['upper']}"
    print(f"{name}: [{code.n},{code.k}{d}]" + (f" -> {out_path}" if out_path else ""))
    return info


def cmd_decompose(args) -> int:
    code, group = _load_code_source(args)
    if args.perm_file:
        perm = read_permutation(args.perm_file)
    elif args.order:
        if group is None:
            raise UsageError("--order needs a group (use --vfile, --entry or --thm52, or give --perm-file)")
        try:
            perm = bundled.canonical_automorphism(group, args.order)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
    else:
        raise UsageError("give --order N or --perm-file")
    if not is_automorphism(code, perm):
        print("error: permutation is not an automorphism of the code", file=sys.stderr)
        return EXIT_FAIL
    ct = cycle_type(perm)
    try:
        F, E = decompose(code, perm)
    except CodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"automorphism cycle type: {ct[0]}-({ct[1]},{ct[2]})")
    prefix = args.out_prefix
    rep = {
        "code": _report_code("C", code, args),
        "fixed": _report_code("F", F, args, f"{prefix}_F.gen" if prefix else None),
        "even": _report_code("E", E, args, f"{prefix}_E.gen" if prefix else None),
        "cycle_type": list(ct),
    }
    if args.json:
        Path(args.json).write_text(json.dumps(rep, indent=1))
    return EXIT_OK


def cmd_constructx(args) -> int:
    outer, inner, aux = read_code(args.outer), read_code(args.inner), read_code(args.aux)
    try:
        x = construction_x(outer, inner, aux)
    except (CodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rep = _report_code("X", x, args, args.out)
    if args.json:
        Path(args.json).write_text(json.dumps(rep, indent=1))
    return EXIT_OK


def cmd_derive(args) -> int:
    code = read_code(args.code)
    try:
        out = bundled.apply_ops(code, args.ops)
    except (CodeError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) and "operation" in str(exc) else EXIT_FAIL
    rep = _report_code("derived", out, args, args.out)
    if args.json:
        Path(args.json).write_text(json.dumps(rep, indent=1))
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        spec = parse_group_spec(args.group)
        group = spec.build()
    except (FormatError, GroupError) as exc:
        raise UsageError(str(exc)) from None
    fixed = None
    if args.fix_v:
        vspec, v = read_vfile(args.fix_v)
        if v.group.order != group.order:
            raise UsageError("--fix-v vector does not match the group order")
        fixed = v.coeffs.to_str()
    table = load_bklc(args.bklc or bundled.bklc_path())
    cfg = SearchConfig(
        group=spec,
        iterations=args.iters,
        seed=args.seed,
        budget=_budget(args),
        weight=args.weight,
        start=args.start,
        fixed_v=fixed,
        emit_all=args.emit_all,
    )
    records = random_search(cfg, table, group)
    if args.out:
        with open(args.out, "a") as fh:
            n = write_records(records, fh=fh)
    else:
        n = write_records(records, fh=sys.stdout)
    print(f"{n} records", file=sys.stderr)
    return EXIT_OK


def cmd_info(args) -> int:
    if args.group:
        g = parse_group_spec(args.group).build()
        orders: dict[int, int] = {}
        for o in g.element_orders:
            orders[int(o)] = orders.get(int(o), 0) + 1
        print(f"group {args.group}: order {g.order}, abelian={g.is_abelian()}")
        print("element orders: " + ", ".join(f"{o}:{c}" for o, c in sorted(orders.items())))
        return EXIT_OK
    if args.entry == "list" or (not args.code and not args.vfile and not args.entry):
        for e in bundled.entries():
            print(f"{e.id:4s} {e.spec}  C(v)={list(e.code_params)}  dual={list(e.dual_params)}  best known={list(e.best_known)}")
        return EXIT_OK
    code, group = _load_code_source(args)
    print(f"[{code.n},{code.k}]")
    return EXIT_OK


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("global options")
    g.add_argument("--budget-seconds", type=float, default=DEFAULT_SECONDS, help="wall-clock budget per distance computation")
    g.add_argument("--budget-work", type=int, default=DEFAULT_WORK, help="codeword visits per distance computation")
    g.add_argument("--threads", type=int, default=None)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--json", help="also write a JSON report here")
    g.add_argument("-v", "--verbose", action="store_true")


def _add_source_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--code", help="generator matrix file")
    p.add_argument("--vfile", help="group-ring element file")
    p.add_argument("--entry", help="bundled entry id (v1..v15)")
    p.add_argument("--thm52", action="store_true", help="bundled vector of the [108,23,36] construction")
    p.add_argument("--dual", action="store_true", help="use the dual of C(v)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_budget_flags(common)
    p = argparse.ArgumentParser(prog="groupcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="check bundled codes against their published parameters")
    s.add_argument("entries", nargs="*", help="entry ids (v1..v15) or 'all'")
    s.add_argument("--side", choices=["code", "dual", "both"], default="both")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decompose", parents=[common], help="split a code into fixed and even subcodes")
    _add_source_flags(s)
    s.add_argument("--order", type=int, help="pick the first regular-representation element of this order")
    s.add_argument("--from-group", action="store_true", help="(default) take the automorphism from the group")
    s.add_argument("--perm-file", help="explicit permutation, 1-based images")
    s.add_argument("--out-prefix", help="write PREFIX_F.gen and PREFIX_E.gen")
    s.add_argument("--no-distance", action="store_true")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("constructx", parents=[common], help="Construction X from outer, inner and auxiliary codes")
    s.add_argument("--outer", required=True)
    s.add_argument("--inner", required=True)
    s.add_argument("--aux", required=True)
    s.add_argument("--out")
    s.add_argument("--no-distance", action="store_true")
    s.set_defaults(func=cmd_constructx)

    s = sub.add_parser("derive", parents=[common], help="puncture / shorten / extend, e.g. 'P1 S2 E1'")
    s.add_argument("code")
    s.add_argument("ops", nargs="?", default="")
    s.add_argument("--out")
    s.add_argument("--no-distance", action="store_true")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("search", parents=[common], help="random search over a group ring")
    s.add_argument("--group", required=True, help="g1:n,m,k | g2:n1,k1,n2,k2,m | table:PATH")
    s.add_argument("--iters", type=int, default=100)
    s.add_argument("--start", type=int, default=0, help="first iteration index (for sharding)")
    s.add_argument("--weight", type=int, help="sample vectors of this Hamming weight")
    s.add_argument("--fix-v", help="evaluate this v-vector file instead of sampling")
    s.add_argument("--bklc", help="CSV of best known n,k,d (default: bundled snapshot)")
    s.add_argument("--emit-all", action="store_true", help="report every candidate")
    s.add_argument("--out", help="append JSON lines here instead of stdout")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("info", parents=[common], help="describe a group, code, or the bundled entries")
    _add_source_flags(s)
    s.add_argument("--group", help="group spec to describe")
    s.set_defaults(func=cmd_info)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream reader (e.g. head) closed early
        sys.stdout = None
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
