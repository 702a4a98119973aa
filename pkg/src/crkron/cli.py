"""Command-line surface.

Plain decimal output on a single line by default; ``--json`` switches to
structured output.  Exit codes: 0 success, 1 internal assertion failure,
2 invalid input (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import g_oracle, lr_oracle
from .kronecker import (
    _map_ordered,
    cr_count,
    face_term_breakdown,
    jt_expansion,
    jt_pair_expansion,
    kron_via_cr,
    kron_via_faces,
    normalize_triple,
)
from .partitions import parse_composition, parse_partition, partitions_of
from .polytope import CRSystem, cone_dim, count_points, enumerate_points, polytope_dim_bound
from .tableaux import count_lr_pairs, theorem41_map


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crkron")
    parser.add_argument("--threads", type=int, default=1, help="cap on internal parallelism")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("g", help="Kronecker coefficient g(lambda, mu, nu)")
    g.add_argument("--lambda", dest="lam", required=True)
    g.add_argument("--mu", required=True)
    g.add_argument("--nu", required=True)
    g.add_argument("--method", choices=("jt", "faces", "oracle"), default="jt")
    g.add_argument("--ell", type=int, default=1)
    g.add_argument("--json", action="store_true")

    lr = sub.add_parser("lr", help="Littlewood-Richardson pair count lr(lambda, mu; tau)")
    lr.add_argument("--lambda", dest="lam", required=True)
    lr.add_argument("--mu", required=True)
    lr.add_argument("--tau", required=True)
    lr.add_argument("--method", choices=("polytope", "tableaux", "characters"), default="polytope")

    count = sub.add_parser("count", help="integer points of CR(lambda, mu; tau)")
    count.add_argument("--lambda", dest="lam", required=True)
    count.add_argument("--mu", required=True)
    count.add_argument("--tau", required=True)
    count.add_argument("--transport", action="store_true", help="drop the column-row constraints")
    count.add_argument("--json", action="store_true")

    points = sub.add_parser("points", help="enumerate integer points as JSON lines")
    points.add_argument("--lambda", dest="lam", required=True)
    points.add_argument("--mu", required=True)
    points.add_argument("--tau", required=True)
    points.add_argument("--decorate", action="store_true", help="append the tableau image")

    expand = sub.add_parser("expand", help="determinant expansion of nu")
    expand.add_argument("--nu", required=True)
    expand.add_argument("--pairs", action="store_true")

    dim = sub.add_parser("dim", help="cone dimension or polytope dimension bound")
    dim.add_argument("--p", type=int, required=True)
    dim.add_argument("--q", type=int, required=True)
    dim.add_argument("--r", type=int, required=True)
    dim.add_argument("--polytope", action="store_true")

    selfcheck = sub.add_parser("selfcheck", help="oracle-equivalence sweep up to size n")
    selfcheck.add_argument("--n", type=int, required=True)

    return parser


def _cmd_g(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    if args.method == "oracle":
        value = g_oracle(lam, mu, nu)
        terms = None
    elif args.method == "faces":
        value = kron_via_faces(lam, mu, nu, args.ell, threads=args.threads)
        terms = (
            face_term_breakdown(lam, mu, nu, args.ell, threads=args.threads)
            if args.json
            else None
        )
    else:
        value = kron_via_cr(lam, mu, nu, threads=args.threads)
        terms = None
        if args.json:
            lam2, mu2, nu2, shortcut = normalize_triple(lam, mu, nu)
            terms = (
                []
                if shortcut
                else [
                    {"sign": t.sign, "gamma": list(t.gamma), "count": cr_count(lam2, mu2, t.gamma)}
                    for t in jt_expansion(nu2)
                ]
            )
    if args.json:
        payload = {"value": value, "method": args.method}
        if terms is not None:
            payload["terms"] = terms
        print(json.dumps(payload, sort_keys=True))
    else:
        print(value)
    return 0


def _cmd_lr(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    tau = parse_composition(args.tau)
    if args.method == "tableaux":
        value = count_lr_pairs(lam, mu, tau)
    elif args.method == "characters":
        value = lr_oracle(lam, mu, tau)
    else:
        value = count_points(CRSystem(lam, mu, tau))
    print(value)
    return 0


def _cmd_count(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    tau = parse_composition(args.tau)
    system = CRSystem(lam, mu, tau, transport_only=args.transport)
    value = count_points(system)
    if args.json:
        print(json.dumps({"count": value, "system": system.to_json_dict()}, sort_keys=True))
    else:
        print(value)
    return 0


def _cmd_points(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    tau = parse_composition(args.tau)
    system = CRSystem(lam, mu, tau)
    for tensor in enumerate_points(system):
        payload = tensor.to_json_dict()
        if args.decorate:
            q_tab, p_tab, t_multi, s_multi = theorem41_map(tensor)
            payload["image"] = {
                "Q": q_tab.to_json_dict(),
                "P": p_tab.to_json_dict(),
                "T": t_multi.to_json_dict(),
                "S": s_multi.to_json_dict(),
            }
        print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_expand(args) -> int:
    nu = parse_partition(args.nu)
    if args.pairs:
        payload = [
            {
                "sign": t.sign,
                "a": t.a,
                "b": t.b,
                "rho": list(t.rho),
                "tau": list(t.tau),
                "tauBar": list(t.tau_bar),
            }
            for t in jt_pair_expansion(nu)
        ]
    else:
        payload = [{"sign": t.sign, "gamma": list(t.gamma)} for t in jt_expansion(nu)]
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_dim(args) -> int:
    if args.polytope:
        print(polytope_dim_bound(args.p, args.q, args.r))
    else:
        print(cone_dim(args.p, args.q, args.r))
    return 0


def _cmd_selfcheck(args) -> int:
    if args.n < 2:
        raise ValueError("selfcheck needs --n >= 2")
    failures = 0
    total = 0
    for n in range(2, args.n + 1):
        parts = partitions_of(n)
        triples = [(lam, mu, nu) for lam in parts for mu in parts for nu in parts]

        def check(triple):
            lam, mu, nu = triple
            return (
                kron_via_cr(lam, mu, nu),
                kron_via_faces(lam, mu, nu, 1),
                g_oracle(lam, mu, nu),
            )

        results = _map_ordered(check, triples, args.threads)
        bad = [
            (triple, values)
            for triple, values in zip(triples, results)
            if len(set(values)) != 1
        ]
        for (lam, mu, nu), (via_cr, via_faces, oracle) in bad:
            print(
                f"MISMATCH g{lam, mu, nu}: polytopes={via_cr} faces={via_faces} oracle={oracle}"
            )
        failures += len(bad)
        total += len(triples)
        print(f"n={n}: {len(triples)} triples checked, {len(bad)} mismatches")
    print(f"selfcheck {'FAILED' if failures else 'OK'}: {total} triples")
    return 1 if failures else 0


_COMMANDS = {
    "g": _cmd_g,
    "lr": _cmd_lr,
    "count": _cmd_count,
    "points": _cmd_points,
    "expand": _cmd_expand,
    "dim": _cmd_dim,
    "selfcheck": _cmd_selfcheck,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
