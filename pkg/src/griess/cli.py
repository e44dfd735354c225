"""Command-line front end: build, decompose, and verify.

Exit codes: 0 all requested checks pass, 1 a verification failed,
2 usage error (unknown subcommand, bad spec, guard tripped).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bplus import build_bplus, build_phi, verify_theorem_3_1
from .niemeier import catalog, catalog_entry, lemma_4_2_subalgebra
from .ratio import q_str
from .rootalgebra import (build_A, build_T, coset_chain_decompose,
                          generalized_chain_decompose)
from .rootsys import build
from .verify import check_size, run_target, TARGETS


def _parse_chain(text: str) -> list[list[int]]:
    """A growing chain given as simple-root indices: "0,1,2" means the
    nested subsets {0} c {0,1} c {0,1,2}."""
    indices = [int(t) for t in text.split(",") if t != ""]
    if len(set(indices)) != len(indices):
        raise ValueError("chain indices must be distinct")
    return [indices[:i] for i in range(1, len(indices) + 1)]


def _emit(args, payload: dict, text: str):
    print(json.dumps(payload, indent=2) if args.json else text)


def _cmd_roots(args) -> int:
    rs = build(args.spec)
    check_size(rs, args.force)
    payload = {
        "spec": rs.spec_string(),
        "components": [str(c) for c in rs.components],
        "l": rs.l, "N": rs.N,
        "coxeter": rs.h_per_component,
        "positive_roots": [[q_str(c) for c in r] for r in rs.positive_roots],
    }
    lines = [f"spec      {payload['spec']}",
             f"rank l    {rs.l}",
             f"N         {rs.N}",
             f"coxeter   {rs.h_per_component}"]
    if args.list_roots:
        lines += ["positive roots:"] + [
            "  (" + ", ".join(q_str(c) for c in r) + ")"
            for r in rs.positive_roots]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_algebra(args) -> int:
    rs = build(args.spec)
    check_size(rs, args.force)
    if args.kind == "A":
        alg = build_A(rs).alg
    elif args.kind == "T":
        alg = build_T(rs).alg
    else:
        alg = build_bplus(rs).alg
    data = alg.to_json()
    if args.json or args.dump_json:
        print(json.dumps(data))
    else:
        print(f"{args.kind}({rs.spec_string()}): dimension {alg.dim}, "
              f"{len(data['products'])} nonzero basis products")
    return 0


def _cmd_bplus(args) -> int:
    rs = build(args.spec)
    check_size(rs, args.force)
    bp = build_bplus(rs)
    if args.dump_json or args.json:
        print(json.dumps(bp.alg.to_json()))
    else:
        print(f"B+({rs.spec_string()}): dimension {bp.dim} "
              f"= l(l+1)/2 + N = {rs.l * (rs.l + 1) // 2} + {rs.N}")
    return 0


def _cmd_decompose(args) -> int:
    rs = build(args.spec)
    check_size(rs, args.force)
    ra = build_A(rs)
    if args.chain:
        rep = generalized_chain_decompose(ra, _parse_chain(args.chain))
    else:
        rep = coset_chain_decompose(ra)
    payload = rep.to_json()
    text = "\n".join(
        [f"decomposition of the identity of A({rs.spec_string()}):",
         f"  chain    {rep.chain_description}",
         f"  charges  {', '.join(q_str(c) for c in rep.charges)}",
         f"  checks   {rep.checks}"])
    _emit(args, payload, text)
    return 0 if all(rep.checks.values()) else 1


def _cmd_niemeier(args) -> int:
    if args.action == "list":
        entries = catalog()
        payload = {"entries": [
            {"name": e.name, "k": e.k, "coxeter": e.coxeter,
             "mass": q_str(e.mass), "count": e.count} for e in entries]}
        lines = [f"{e.name:10s} k={e.k:2d} h={e.coxeter or '-':>2} "
                 f"mass={q_str(e.mass)}" for e in entries]
        _emit(args, payload, "\n".join(lines))
        return 0
    entry = catalog_entry(args.name)
    rep = lemma_4_2_subalgebra(entry)
    payload = rep.to_json()
    text = "\n".join(
        [f"{entry.name}: associative subalgebra of dimension "
         f"{rep.checks['dimension']} = 24 + {entry.k}",
         f"  charges  {', '.join(q_str(c) for c in rep.charges)}"])
    _emit(args, payload, text)
    return 0


def _cmd_verify(args) -> int:
    chains = None
    if args.chain:
        chains = {0: _parse_chain(args.chain)}
    reports = run_target(args.target, args.spec, max_dim=args.max_dim,
                         force=args.force, chains=chains)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"passed": ok,
                          "reports": [r.to_json() for r in reports]},
                         indent=2))
    else:
        for r in reports:
            print(r.format_text())
        print(f"overall: {'PASS' if ok else 'FAIL'} "
              f"({len(reports)} reports)")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="griess",
        description="Exact verification of root-system algebra identities")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")
        sp.add_argument("--force", action="store_true",
                        help="run even when 2N exceeds the size guard")

    sp = sub.add_parser("roots", help="build and print a root system")
    sp.add_argument("spec", help='e.g. "A2", "D4", "A1^24", "A2*12+E6"')
    sp.add_argument("--list-roots", action="store_true")
    common(sp)
    sp.set_defaults(fn=_cmd_roots)

    sp = sub.add_parser("algebra", help="build an algebra and dump JSON")
    sp.add_argument("spec")
    sp.add_argument("--kind", choices=("A", "T", "bplus"), default="A")
    sp.add_argument("--dump-json", action="store_true")
    common(sp)
    sp.set_defaults(fn=_cmd_algebra)

    sp = sub.add_parser("bplus", help="build the weight-2 algebra")
    sp.add_argument("spec")
    sp.add_argument("--dump-json", action="store_true")
    common(sp)
    sp.set_defaults(fn=_cmd_bplus)

    sp = sub.add_parser("decompose",
                        help="orthogonal idempotent decomposition")
    sp.add_argument("spec")
    sp.add_argument("--chain", default=None,
                    help='growing chain of simple-root indices, e.g. "0,1,2"')
    common(sp)
    sp.set_defaults(fn=_cmd_decompose)

    sp = sub.add_parser("niemeier", help="rank-24 lattice catalog")
    nsub = sp.add_subparsers(dest="action", required=True)
    nl = nsub.add_parser("list")
    nl.add_argument("--json", action="store_true")
    nl.set_defaults(fn=_cmd_niemeier, action="list")
    ns = nsub.add_parser("sub")
    ns.add_argument("name")
    ns.add_argument("--json", action="store_true")
    ns.set_defaults(fn=_cmd_niemeier, action="sub")

    sp = sub.add_parser("verify", help="run a named verification target")
    sp.add_argument("target", choices=TARGETS)
    sp.add_argument("--spec", default=None)
    sp.add_argument("--max-dim", type=int, default=8)
    sp.add_argument("--chain", default=None)
    common(sp)
    sp.set_defaults(fn=_cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
