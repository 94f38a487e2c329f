"""Batch command-line front end.

Commands: analyze, decompose, pack, cuts, matroid analyze,
matroid decompose, ubb verify, ubb simulate. Input files are the JSON
formats from :mod:`stpack.serialize`. Reports go to stdout (and to
--json-out when given) with sorted keys and no timestamps, so identical
invocations produce byte-identical output.

Exit codes: 0 success, 1 property failure (a certificate is printed),
2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import decomposition as gdec
from . import matroid_decomposition as mdec
from . import serialize as ser
from .connectivity import edge_connectivity, enumerate_min_cuts_bruteforce, enumerate_min_cuts_via_packing
from .errors import BudgetExceededError
from .graphs import Multigraph, connected_components, is_connected
from .matroid_packing import DEFAULT_BUDGET, cogirth_bruteforce, is_max_bp, min_cocircuits, pack_bases, EdmondsCertificate
from .protocol import UBB, simulate_failures, ubb_from_packing, verify_ubb
from .tree_packing import TreePacking, TutteCertificate, pack_trees, stp_number

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> Multigraph:
    return ser.graph_from_obj(_load_json(path))


def _emit(obj: dict, json_out: str | None) -> None:
    text = ser.to_json_str(obj)
    sys.stdout.write(text)
    if json_out:
        Path(json_out).write_text(text, encoding="utf-8")


def _tutte_obj(cert: TutteCertificate) -> dict:
    return {
        "kind": "partition_certificate",
        "k": cert.k,
        "parts": [sorted(p) for p in cert.partition.parts],
        "cross_edges": cert.cross_edge_count,
        "bound": cert.k * (len(cert.partition.parts) - 1),
    }


def _packing_obj(packing: TreePacking) -> list[list[int]]:
    return [sorted(t) for t in packing.trees]


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        _emit(
            {
                "error": "disconnected",
                "components": [sorted(c) for c in connected_components(g)],
            },
            args.json_out,
        )
        return EXIT_PROPERTY
    sig, packing = stp_number(g)
    lam, witness = edge_connectivity(g)
    ks = [args.k] if args.k is not None else list(range(1, sig + 1))
    classes = {str(k): gdec.classify(g, k).tag.value for k in ks}
    _emit(
        {
            "vertices": g.vertex_count,
            "edges": g.edge_count,
            "lambda": lam,
            "sigma": sig,
            "max_stp": sig == lam,
            "min_cut": ser.cut_to_obj(witness),
            "packing": _packing_obj(packing),
            "classes": classes,
        },
        args.json_out,
    )
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        _emit(
            {
                "error": "disconnected",
                "components": [sorted(c) for c in connected_components(g)],
            },
            args.json_out,
        )
        return EXIT_PROPERTY
    answer, sig, _, _ = gdec.is_max_stp(g)
    if not answer:
        cert = pack_trees(g, sig + 1)
        assert isinstance(cert, TutteCertificate)
        _emit(
            {
                "error": "not max-STP",
                "sigma": sig,
                "certificate": _tutte_obj(cert),
            },
            args.json_out,
        )
        return EXIT_PROPERTY
    d = gdec.decompose(g)
    _emit(ser.decomposition_to_obj(d), args.json_out)
    if args.dot:
        dot_dir = Path(args.dot)
        dot_dir.mkdir(parents=True, exist_ok=True)
        (dot_dir / "R.dot").write_text(ser.dot_decomposition_tree(d), encoding="utf-8")
        for node_id in sorted(d.nodes):
            t_tree = d.nodes[node_id].t_tree
            if t_tree is not None:
                (dot_dir / f"t_tree_{node_id}.dot").write_text(
                    ser.dot_t_tree(node_id, t_tree), encoding="utf-8"
                )
    return EXIT_OK


def cmd_pack(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        _emit({"error": "disconnected"}, args.json_out)
        return EXIT_PROPERTY
    if args.k is not None:
        result = pack_trees(g, args.k)
        if isinstance(result, TutteCertificate):
            _emit({"k": args.k, "packing": None, "certificate": _tutte_obj(result)}, args.json_out)
            return EXIT_PROPERTY
        _emit({"k": args.k, "packing": _packing_obj(result), "certificate": None}, args.json_out)
        return EXIT_OK
    sig, packing = stp_number(g)
    _emit({"sigma": sig, "packing": _packing_obj(packing)}, args.json_out)
    return EXIT_OK


def cmd_cuts(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        _emit({"error": "disconnected"}, args.json_out)
        return EXIT_PROPERTY
    lam, _ = edge_connectivity(g)
    sig, packing = stp_number(g)
    if sig == lam:
        cuts = enumerate_min_cuts_via_packing(g, packing.trees)
        method = "packing-scan"
    else:
        cuts = enumerate_min_cuts_bruteforce(g, args.budget)
        method = "brute-force"
    _emit(
        {
            "lambda": lam,
            "method": method,
            "cuts": [ser.cut_to_obj(c) for c in cuts],
        },
        args.json_out,
    )
    return EXIT_OK


def cmd_matroid_analyze(args: argparse.Namespace) -> int:
    m = ser.matroid_from_obj(_load_json(args.matroid))
    if m.loops():
        raise ValueError(f"matroid has loops: {sorted(m.loops())}")
    report = is_max_bp(m, args.budget)
    comps = m.components()
    out: dict = {
        "ground_size": m.size,
        "rank": m.full_rank,
        "sigma": report.k,
        "max_bp": report.answer,
        "confidence": report.confidence,
        "packing": [sorted(b) for b in report.packing.bases],
        "connected": len(comps) == 1,
        "components": [sorted(c) for c in comps],
    }
    notes: list[str] = []
    if report.answer:
        out["lambda"] = report.k
        cocircuits = min_cocircuits(m, report.packing)
        out["min_cocircuits"] = [sorted(c) for c in cocircuits]
        union = frozenset(e for c in cocircuits for e in c)
        crux_elems = sorted(frozenset(m.ground) - union)
        crux_view = m.delete(union)
        d = len(crux_view.components()) if crux_elems else 0
        out["crux"] = {"elements": crux_elems, "delta": d}
        if not crux_elems:
            if len(comps) > 1:
                notes.append(
                    "every element lies in a minimum cocircuit; the matroid is the "
                    "disjoint union of its minimum cocircuits"
                )
            else:
                notes.append(
                    "every element lies in the single minimum cocircuit: this is a "
                    "rank-1 parallel class (connected despite the empty residue)"
                )
    else:
        try:
            lam, witness = cogirth_bruteforce(m, args.budget)
            out["lambda"] = lam
            out["cogirth_witness"] = sorted(witness)
        except BudgetExceededError as exc:
            out["lambda"] = None
            out["lambda_upper_bound"] = exc.best_known
            out["confidence"] = "unconfirmed"
        out["min_cocircuits"] = None
        out["crux"] = None
    out["notes"] = notes
    _emit(out, args.json_out)
    return EXIT_OK


def cmd_matroid_decompose(args: argparse.Namespace) -> int:
    m = ser.matroid_from_obj(_load_json(args.matroid))
    if m.loops():
        raise ValueError(f"matroid has loops: {sorted(m.loops())}")
    comps = m.components()
    if len(comps) != 1:
        _emit(
            {
                "error": "disconnected",
                "components": [sorted(c) for c in comps],
            },
            args.json_out,
        )
        return EXIT_PROPERTY
    d = mdec.decompose_matroid(m, args.budget)
    _emit(ser.matroid_decomposition_to_obj(d), args.json_out)
    if args.dot:
        dot_dir = Path(args.dot)
        dot_dir.mkdir(parents=True, exist_ok=True)
        (dot_dir / "R.dot").write_text(ser.dot_matroid_tree(d), encoding="utf-8")
    return EXIT_OK


def _build_ubb(g: Multigraph, t: int | None) -> UBB:
    sig, packing = stp_number(g)
    ubb = ubb_from_packing(packing)
    if t is not None:
        ubb = UBB(ubb.trees, t)
    return ubb


def cmd_ubb_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    ubb = _build_ubb(g, args.t)
    result = verify_ubb(g, ubb, budget=args.budget, trials=args.trials, seed=args.seed)
    out = {
        "t": ubb.t,
        "trees": len(ubb.trees),
        "mode": "sampled" if args.trials is not None else "exhaustive",
        "ok": result is True,
        "counterexample": None if result is True else sorted(result),
    }
    _emit(out, args.json_out)
    return EXIT_OK if result is True else EXIT_PROPERTY


def cmd_ubb_simulate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    ubb = _build_ubb(g, args.t)
    report = simulate_failures(g, ubb, args.trials, args.seed)
    _emit(
        {
            "t": ubb.t,
            "trials": report.trials,
            "survivals": report.survivals,
            "seed": report.seed,
            "failures": [
                {"failed_edges": list(edges), "surviving_tree": tree}
                for edges, tree in report.failures_logged
            ],
        },
        args.json_out,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stpack",
        description="Spanning-tree packing, matroid base packing, and decomposition toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json-out", default=None, help="also write the JSON report here")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget")

    p = sub.add_parser("analyze", help="connectivity, packing number, class per level")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=None, help="classify at this level only")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decompose", help="full recursive decomposition (graph)")
    p.add_argument("graph")
    p.add_argument("--dot", default=None, help="directory for DOT drawings")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("pack", help="pack k disjoint spanning trees or report sigma")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("cuts", help="enumerate all minimum edge cuts")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_cuts)

    pm = sub.add_parser("matroid", help="matroid analyses")
    msub = pm.add_subparsers(dest="matroid_command", required=True)
    p = msub.add_parser("analyze", help="packing number, cogirth, cocircuits, residue")
    p.add_argument("matroid")
    common(p)
    p.set_defaults(func=cmd_matroid_analyze)
    p = msub.add_parser("decompose", help="full recursive decomposition (matroid)")
    p.add_argument("matroid")
    p.add_argument("--dot", default=None, help="directory for DOT drawings")
    common(p)
    p.set_defaults(func=cmd_matroid_decompose)

    pu = sub.add_parser("ubb", help="uncovering collections of spanning trees")
    usub = pu.add_subparsers(dest="ubb_command", required=True)
    p = usub.add_parser("verify", help="check that every t-subset misses some tree")
    p.add_argument("graph")
    p.add_argument("--t", type=int, default=None, help="failure tolerance (default: sigma - 1)")
    p.add_argument("--trials", type=int, default=None, help="sample instead of exhausting")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_ubb_verify)
    p = usub.add_parser("simulate", help="seeded random edge-failure trials")
    p.add_argument("graph")
    p.add_argument("--t", type=int, default=None, help="failure tolerance (default: sigma - 1)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_ubb_simulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
