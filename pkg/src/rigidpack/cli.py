"""Command-line front end.

Exit codes: 0 success, 1 witnessed failure (or failed verification),
2 input error, 3 undecided or guardrail refusal.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import certificates as certs
from .conditions import (
    ConditionReport,
    check_cover_condition,
    check_necessary_condition,
    check_parthm_condition,
    check_tree_packing_condition,
    gamma,
    gamma2,
    is_bracket_partition_connected,
    is_pq_connected,
)
from .ndt import check_kwz_condition
from .errors import GraphInputError, LimitExceededError, SearchBudgetExceededError
from .multigraph import Multigraph, load_graph, random_multigraph, write_graph
from .ndt import DEFAULT_SEARCH_BUDGET, BoundedCover, ndt_decompose
from .packing import Packing, pack_rigid_and_trees, pack_spanning_trees
from .union import Decomposition, decompose_forests, decompose_sparse, union_rank

CHECK_CONDITIONS = (
    "cover",
    "tree-packing",
    "parthm",
    "necessary",
    "pq-connected",
    "bracket-partition",
    "kwz",
)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise GraphInputError(f"--{name} is required for this command")


def _limit_params(args) -> dict:
    extra = {}
    if args.max_n is not None:
        extra["max_n"] = args.max_n
    if args.max_partitions is not None:
        extra["max_partitions"] = args.max_partitions
    return extra


def _summarize_witness(payload: dict) -> str:
    witness = payload.get("witness")
    if not witness:
        return ""
    kind = witness["kind"]
    if kind == "vertex-set":
        return f" witness X={witness['vertices']}"
    if kind == "partition":
        return f" witness pi={witness['blocks']}"
    if kind == "z-partition":
        return f" witness Z={witness['z']} pi={witness['blocks']}"
    if kind == "deficiency-edges":
        return f" witness uncovered edges={witness['edges']}"
    return ""


def _run_decompose(G: Multigraph, args) -> tuple[int, dict, str]:
    k, l = args.k, args.l
    if k < 0 or l < 0 or k + l < 1:
        raise GraphInputError("need k >= 0, l >= 0, and k + l >= 1")
    if l == 0:
        result = decompose_sparse(G, k, max_n=args.max_n)
    elif k == 0:
        result = decompose_forests(G, l, max_n=args.max_n)
    else:
        ur = union_rank(G, k, l)
        if ur.rank == G.m:
            result = ur.decomposition
        else:
            result = ConditionReport(
                "union-cover", {"k": k, "l": l}, False,
                ur.decomposition.uncovered(), "deficiency-edges",
                lhs=ur.rank, rhs=G.m,
                note="graph does not decompose into k sparse classes and l forests",
            )
    if isinstance(result, Decomposition):
        payload = certs.decomposition_payload(result)
        return 0, payload, f"decomposable: {k} sparse class(es) + {l} forest(s)"
    payload = certs.report_payload(result)
    return 1, payload, f"not decomposable ({result.condition}):" + _summarize_witness(payload)


def _run_pack(G: Multigraph, args) -> tuple[int, dict, str]:
    k, l = args.k, args.l
    if k == 0:
        result = pack_spanning_trees(G, l, max_partition_n=args.max_partitions)
    else:
        result = pack_rigid_and_trees(G, k, l)
    if isinstance(result, Packing):
        payload = certs.packing_payload(result)
        return 0, payload, f"packed: {k} spanning rigid subgraph(s) + {l} spanning tree(s)"
    if isinstance(result, ConditionReport):
        payload = certs.report_payload(result)
        return 1, payload, "no packing:" + _summarize_witness(payload)
    payload = certs.packing_failure_payload(result)
    return 1, payload, f"no packing: union rank {result.achieved} < target {result.target}"


def _run_check(G: Multigraph, args) -> tuple[int, dict, str]:
    name = args.condition
    if name == "cover":
        _require(args, "k")
        report = check_cover_condition(G, args.k, max_n=args.max_n)
    elif name == "tree-packing":
        _require(args, "l")
        report = check_tree_packing_condition(G, args.l, max_partition_n=args.max_partitions)
    elif name == "parthm":
        _require(args, "k", "l")
        report = check_parthm_condition(G, args.k, args.l, max_partition_n=args.max_partitions)
    elif name == "necessary":
        _require(args, "k", "l")
        report = check_necessary_condition(G, args.k, args.l, max_partition_n=args.max_partitions)
    elif name == "pq-connected":
        _require(args, "p", "q")
        holds = is_pq_connected(G, args.p, args.q, max_n=args.max_n)
        report = ConditionReport("pq-connected", {"p": args.p, "q": args.q}, holds)
    elif name == "bracket-partition":
        _require(args, "p", "q")
        holds = is_bracket_partition_connected(
            G, args.p, args.q, max_partition_n=args.max_partitions
        )
        report = ConditionReport("bracket-partition", {"p": args.p, "q": args.q}, holds)
    elif name == "kwz":
        _require(args, "k", "d")
        report = check_kwz_condition(G, args.k, args.d, max_n=args.max_n)
    else:
        raise GraphInputError(
            f"unknown condition {name!r}; valid names: {', '.join(CHECK_CONDITIONS)}"
        )
    payload = certs.report_payload(report)
    payload["parameters"].update(_limit_params(args))
    if report.holds:
        return 0, payload, f"condition {name} holds"
    return 1, payload, f"condition {name} fails:" + _summarize_witness(payload)


def _run_gamma(G: Multigraph, args) -> tuple[int, dict, str]:
    result = gamma(G, max_n=args.max_n) if args.which == "gamma" else gamma2(G, max_n=args.max_n)
    payload = certs.density_payload(args.which, result.value, result.argmax, max_n=args.max_n)
    return 0, payload, f"{args.which} = {payload['value']} at X={sorted(result.argmax)}"


def _run_ndt(G: Multigraph, args) -> tuple[int, dict, str]:
    result = ndt_decompose(G, args.k, args.l, budget=args.search_budget, max_n=args.max_n)
    if isinstance(result, BoundedCover):
        payload = certs.bounded_cover_payload(result)
        return 0, payload, (
            f"covered: {len(result.forests)} forest(s) + "
            f"{len(result.bounded_parts)} part(s) with max degree <= {payload['degree_bound']}"
        )
    payload = certs.report_payload(result)
    return 1, payload, f"no bounded cover ({result.condition}):" + _summarize_witness(payload)


_RUNNERS = {
    "decompose": _run_decompose,
    "pack": _run_pack,
    "check": _run_check,
    "gamma": _run_gamma,
    "ndt": _run_ndt,
}


def _command_parameters(command: str, args) -> dict:
    params: dict = {}
    if command in ("decompose", "pack", "ndt"):
        params["k"] = args.k
        params["l"] = args.l
    elif command == "check":
        params["condition"] = args.condition
        for name in ("k", "l", "p", "q", "d"):
            value = getattr(args, name)
            if value is not None:
                params[name] = value
    elif command == "gamma":
        params["which"] = args.which
    return params


def _process_file(command: str, path: Path, args, out_path: Path | None) -> tuple[int, str]:
    G = load_graph(path)
    code, payload, summary = _RUNNERS[command](G, args)
    cert = certs.build_certificate(command, _command_parameters(command, args), G, payload)
    if out_path is not None:
        certs.write_certificate(out_path, cert)
    return code, summary


def _run_single_or_batch(command: str, args) -> int:
    if args.batch is not None:
        if args.input is not None:
            raise GraphInputError("give either an input file or --batch, not both")
        batch_dir = Path(args.batch)
        if not batch_dir.is_dir():
            raise GraphInputError(f"--batch {batch_dir} is not a directory")
        files = sorted(batch_dir.glob("*.txt"))
        if not files:
            raise GraphInputError(f"no *.txt graph files in {batch_dir}")
        out_dir = Path(args.out) if args.out else batch_dir
        out_dir.mkdir(parents=True, exist_ok=True)
        jobs = [(f, out_dir / f"{f.stem}.{command}.json") for f in files]

        def work(job):
            f, out_path = job
            try:
                return _process_file(command, f, args, out_path), f.name
            except GraphInputError as exc:
                return (2, f"input error: {exc}"), f.name
            except (LimitExceededError, SearchBudgetExceededError) as exc:
                return (3, f"refused: {exc}"), f.name

        with ThreadPoolExecutor(max_workers=min(8, len(jobs))) as pool:
            results = list(pool.map(work, jobs))
        worst = 0
        for (code, summary), name in results:
            print(f"{name}: {summary}")
            worst = max(worst, code)
        return worst
    if args.input is None:
        raise GraphInputError("an input graph file is required (or use --batch)")
    out_path = Path(args.out) if args.out else None
    code, summary = _process_file(command, Path(args.input), args, out_path)
    print(summary)
    return code


def _cmd_verify(args) -> int:
    cert = certs.load_certificate(args.cert)
    G = load_graph(args.input)
    ok, reason = certs.verify_certificate(cert, G)
    if ok:
        print("certificate verified")
        return 0
    print(f"certificate verification FAILED: {reason}")
    return 1


def _cmd_random(args) -> int:
    G = random_multigraph(args.n, args.m, args.mult, args.seed)
    if args.out:
        write_graph(args.out, G)
        print(f"wrote random multigraph n={G.n} m={G.m} to {args.out}")
    else:
        sys.stdout.write(
            f"{G.n} {G.m}\n" + "".join(f"{u} {v}\n" for u, v in G.edges)
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigidpack",
        description="Sparse decompositions, rigid-subgraph/spanning-tree packings, "
        "and partition-condition checks for multigraphs, with verifiable certificates.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_common(p, partitions=False, budget=False):
        p.add_argument("input", nargs="?", help="graph file ('n m' header, then 'u v' lines)")
        p.add_argument("--batch", metavar="DIR", help="process every *.txt graph in DIR")
        p.add_argument("--out", help="certificate output path (directory in batch mode)")
        p.add_argument("--max-n", type=int, default=None, dest="max_n",
                       help="guardrail for exhaustive subset scans")
        p.add_argument("--max-partitions", type=int, default=None, dest="max_partitions",
                       help="guardrail for exhaustive partition scans")
        if budget:
            p.add_argument("--search-budget", type=int, default=DEFAULT_SEARCH_BUDGET,
                           dest="search_budget", help="node budget for backtracking searches")

    p = sub.add_parser("decompose", help="decompose into k sparse classes and l forests")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    add_common(p)

    p = sub.add_parser("pack", help="pack k spanning rigid subgraphs and l spanning trees")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    add_common(p)

    p = sub.add_parser("check", help="evaluate a subset/partition condition")
    p.add_argument("condition", choices=CHECK_CONDITIONS)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    add_common(p)

    p = sub.add_parser("gamma", help="fractional density parameters")
    p.add_argument("which", choices=("gamma", "gamma2"))
    add_common(p)

    p = sub.add_parser("ndt", help="cover by l forests and 2k+2-l degree-bounded parts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    add_common(p, budget=True)

    p = sub.add_parser("verify", help="verify a certificate against its graph")
    p.add_argument("cert", help="certificate JSON file")
    p.add_argument("input", help="graph file the certificate refers to")

    p = sub.add_parser("random", help="generate a random multigraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mult", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.cmd == "verify":
            return _cmd_verify(args)
        if args.cmd == "random":
            return _cmd_random(args)
        return _run_single_or_batch(args.cmd, args)
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (LimitExceededError, SearchBudgetExceededError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
