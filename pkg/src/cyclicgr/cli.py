"""Command-line front door.

Subcommands: classify, construct, aut, closure, oracle, verify-all. Exit
codes: 0 success, 1 verification failure, 2 usage error (argparse default).
All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verifyall
from .autsearch import automorphism_group
from .cgraph import from_json, to_dot, to_json
from .classifier import classify
from .closure import (
    DEFAULT_PARTITION_BUDGET,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    NOT_IN_GR,
    EnumerationBudgetError,
    gr_k_membership,
    min_colors,
    two_star_closure,
)
from .permgroup import CyclicSpec, cyclic_group


def _add_spec_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, help="prime")
    sub.add_argument(
        "--orbits",
        type=str,
        default="",
        help="comma-separated nontrivial orbit sizes, each a power of p (may be empty)",
    )
    sub.add_argument("--fixed", type=int, default=0, help="number of fixed points")


def _spec_from_args(args: argparse.Namespace) -> CyclicSpec:
    sizes = [int(tok) for tok in args.orbits.split(",") if tok.strip()]
    return CyclicSpec.from_orbit_sizes(args.p, sizes, args.fixed)


def _cmd_classify(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    verdict = classify(spec)
    payload = verdict.to_jsonable()
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"{spec.describe()}: {verdict.klass} [{verdict.source}]")
        if verdict.colors_used is not None:
            print(f"colors used: {verdict.colors_used}")
        if verdict.certificate is not None:
            print(f"certificate: {verdict.certificate.sigma.cycle_string()}")
        print(
            "verified: containment={} exact={}".format(
                verdict.containment_verified, verdict.exact_verified
            )
        )
    if args.evidence:
        outdir = Path(args.evidence)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "verdict.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        if verdict.witness is not None:
            (outdir / "witness.json").write_text(to_json(verdict.witness))
            (outdir / "witness.dot").write_text(to_dot(verdict.witness))
        if verdict.certificate is not None:
            (outdir / "certificate.txt").write_text(
                verdict.certificate.sigma.cycle_string()
                + f"  # {verdict.certificate.kind}: {verdict.certificate.description}\n"
            )
        if verdict.justification is not None:
            (outdir / "justification.json").write_text(
                json.dumps(verdict.justification, indent=2, sort_keys=True) + "\n"
            )
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    verdict = classify(spec)
    if verdict.witness is None:
        print(
            f"{spec.describe()} is {verdict.klass}: no witness graph exists",
            file=sys.stderr,
        )
        return 1
    Path(args.out).write_text(to_json(verdict.witness))
    if args.dot:
        layout = spec.layout() if spec.exponents else None
        Path(args.dot).write_text(to_dot(verdict.witness, layout=layout))
    if args.verify:
        group = cyclic_group(spec)
        aut = automorphism_group(verdict.witness)
        if aut.order != group.order:
            print(
                f"verification failed: |Aut| = {aut.order}, expected {group.order}",
                file=sys.stderr,
            )
            return 1
        print(f"verified: |Aut| = {aut.order}")
    print(f"wrote {args.out} (n={verdict.witness.n}, k={verdict.witness.k})")
    return 0


def _cmd_aut(args: argparse.Namespace) -> int:
    graph = from_json(Path(args.graph).read_text())
    aut = automorphism_group(graph)
    print(f"order {aut.order}")
    for g in aut.generators:
        print(g.cycle_string())
    return 0


def _cmd_closure(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    group = cyclic_group(spec)
    closure = two_star_closure(group)
    closed = closure.order == group.order
    print(f"group order {group.order}, closure order {closure.order}")
    print("representable" if closed else "not representable (closure is larger)")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    group = cyclic_group(spec)
    payload: dict = {"spec": {"p": spec.p, "orbits": list(spec.orbit_sizes), "fixed": spec.trivial_count}}
    try:
        result = min_colors(
            group,
            args.max_colors,
            budget=args.budget,
            samples=args.samples,
            seed=args.seed,
        )
    except EnumerationBudgetError as exc:
        payload["inconclusive"] = str(exc)
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 1
    if result is NOT_IN_GR:
        payload["not_in_gr"] = True
        payload["min_colors"] = None
    else:
        payload["not_in_gr"] = False
        payload["min_colors"] = result
        report = gr_k_membership(
            group, result, budget=args.budget, samples=args.samples, seed=args.seed
        )
        payload["report"] = report.to_jsonable()
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_verify_all(args: argparse.Namespace) -> int:
    return verifyall.run(verbose=not args.quiet)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicgr",
        description=(
            "Classify cyclic permutation groups of prime power order by how many "
            "edge colors a complete graph needs to have exactly that automorphism "
            "group; build and check the witness graphs."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_classify = subs.add_parser("classify", help="classify an orbit structure")
    _add_spec_args(p_classify)
    p_classify.add_argument("--json", action="store_true", help="print the verdict as JSON")
    p_classify.add_argument("--evidence", type=str, default="", help="directory for evidence files")
    p_classify.set_defaults(func=_cmd_classify)

    p_construct = subs.add_parser("construct", help="build a witness graph")
    _add_spec_args(p_construct)
    p_construct.add_argument("--out", type=str, required=True, help="output graph JSON path")
    p_construct.add_argument("--dot", type=str, default="", help="also write DOT here")
    p_construct.add_argument("--verify", action="store_true", help="run the engine and compare")
    p_construct.set_defaults(func=_cmd_construct)

    p_aut = subs.add_parser("aut", help="automorphism group of a graph JSON file")
    p_aut.add_argument("graph", type=str)
    p_aut.set_defaults(func=_cmd_aut)

    p_closure = subs.add_parser("closure", help="distinct-color closure order and verdict")
    _add_spec_args(p_closure)
    p_closure.set_defaults(func=_cmd_closure)

    p_oracle = subs.add_parser("oracle", help="independent minimum-color oracle")
    _add_spec_args(p_oracle)
    p_oracle.add_argument("--max-colors", type=int, default=3)
    p_oracle.add_argument("--budget", type=int, default=DEFAULT_PARTITION_BUDGET)
    p_oracle.add_argument("--samples", type=int, default=DEFAULT_SAMPLE_COUNT)
    p_oracle.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_verify = subs.add_parser(
        "verify-all", help="sweep the built-in fact table; nonzero exit on any mismatch"
    )
    p_verify.add_argument("--quiet", action="store_true")
    p_verify.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
