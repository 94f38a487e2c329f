"""JSON schemas and DOT export.

Graph files: {"vertices": [ids], "edges": [{"id": int, "u": id, "v": id}, ...]}

Matroid files are a tagged union:
    {"type": "graphic", "graph": <graph object>}
    {"type": "uniform", "r": int, "n": int}
    {"type": "gf2", "matrix": [[0/1, ...], ...]}
    {"type": "transversal", "sets": [[int, ...], ...], "ground": int}

JSON output is canonical: keys sorted, lists in deterministic order, no
timestamps, trailing newline. DOT is derived output only and never parsed
back.
"""

from __future__ import annotations

import json
from typing import Any

from .decomposition import (
    DecompositionNode,
    MaxStpDecomposition,
    StpClass,
    StpClassTag,
    TTree,
    TTreeEdge,
)
from .graphs import EdgeCut, Multigraph
from .matroid_decomposition import MatroidDecomposition
from .matroids import (
    Gf2LinearMatroid,
    GraphicMatroid,
    MatroidOracle,
    TransversalMatroid,
    UniformMatroid,
)


def to_json_str(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------- graphs


def graph_to_obj(g: Multigraph) -> dict:
    return {
        "vertices": sorted(g.vertices),
        "edges": [
            {"id": eid, "u": g.endpoints(eid)[0], "v": g.endpoints(eid)[1]}
            for eid in g.edge_ids()
        ],
    }


def graph_from_obj(obj: dict) -> Multigraph:
    try:
        vertices = [int(v) for v in obj["vertices"]]
        edges = {int(e["id"]): (int(e["u"]), int(e["v"])) for e in obj["edges"]}
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph object: {exc}") from exc
    if len(edges) != len(obj["edges"]):
        raise ValueError("duplicate edge ids in graph object")
    return Multigraph(vertices, edges)


def cut_to_obj(cut: EdgeCut) -> dict:
    return {
        "side_a": sorted(cut.side_a),
        "side_b": sorted(cut.side_b),
        "edges": sorted(cut.cut_edges),
    }


def cut_from_obj(obj: dict) -> EdgeCut:
    return EdgeCut(
        frozenset(obj["side_a"]), frozenset(obj["side_b"]), frozenset(obj["edges"])
    )


# --------------------------------------------------------------- matroids


def matroid_from_obj(obj: dict) -> MatroidOracle:
    kind = obj.get("type")
    if kind == "graphic":
        return GraphicMatroid(graph_from_obj(obj["graph"]))
    if kind == "uniform":
        return UniformMatroid(int(obj["r"]), int(obj["n"]))
    if kind == "gf2":
        return Gf2LinearMatroid(obj["matrix"])
    if kind == "transversal":
        return TransversalMatroid(obj["sets"], int(obj["ground"]))
    raise ValueError(f"unknown matroid type: {kind!r}")


def matroid_to_obj(m: MatroidOracle) -> dict:
    if isinstance(m, GraphicMatroid):
        return {"type": "graphic", "graph": graph_to_obj(m.graph)}
    if isinstance(m, UniformMatroid):
        return {"type": "uniform", "r": m.r, "n": m.size}
    if isinstance(m, Gf2LinearMatroid):
        return {"type": "gf2", "matrix": m.matrix_rows()}
    if isinstance(m, TransversalMatroid):
        return {
            "type": "transversal",
            "sets": [sorted(s) for s in m.sets],
            "ground": m.size,
        }
    raise ValueError(f"cannot serialize matroid of type {type(m).__name__}")


# ------------------------------------------------- graph decompositions


def decomposition_to_obj(d: MaxStpDecomposition) -> dict:
    nodes = []
    for node_id in sorted(d.nodes):
        node = d.nodes[node_id]
        t_tree = None
        if node.t_tree is not None:
            t_tree = {
                "nodes": list(node.t_tree.vertices),
                "edges": [
                    {"children": list(e.child_pair), "cut": cut_to_obj(e.cut)}
                    for e in node.t_tree.edges
                ],
            }
        nodes.append(
            {
                "id": node.node_id,
                "vertices": sorted(node.label_vertices),
                "class": node.stp_class.tag.value,
                "k": node.stp_class.k,
                "children": list(node.children),
                "t_tree": t_tree,
            }
        )
    return {
        "k": d.k,
        "root": d.root,
        "irreducible_leaves": list(d.irreducibles),
        "nodes": nodes,
    }


def decomposition_from_obj(obj: dict) -> MaxStpDecomposition:
    nodes: dict[int, DecompositionNode] = {}
    for raw in obj["nodes"]:
        t_tree = None
        if raw["t_tree"] is not None:
            t_tree = TTree(
                tuple(raw["t_tree"]["nodes"]),
                tuple(
                    TTreeEdge(tuple(e["children"]), cut_from_obj(e["cut"]))
                    for e in raw["t_tree"]["edges"]
                ),
            )
        node = DecompositionNode(
            raw["id"],
            frozenset(raw["vertices"]),
            StpClass(StpClassTag(raw["class"]), raw["k"]),
            tuple(raw["children"]),
            t_tree,
        )
        nodes[node.node_id] = node
    return MaxStpDecomposition(
        obj["k"], obj["root"], nodes, tuple(obj["irreducible_leaves"])
    )


# ----------------------------------------------- matroid decompositions


def matroid_decomposition_to_obj(d: MatroidDecomposition) -> dict:
    nodes = []
    for node_id in sorted(d.nodes):
        node = d.nodes[node_id]
        assembly = None
        if node.assembly is not None:
            assembly = {
                "components": [sorted(c) for c in node.assembly.components],
                "hyperedges": [
                    {"cocircuit": sorted(h.cocircuit), "incident": list(h.incident)}
                    for h in node.assembly.hyperedges
                ],
            }
        nodes.append(
            {
                "id": node.node_id,
                "elements": sorted(node.elements),
                "reducible": node.reducible,
                "k": node.k,
                "rank": node.rank,
                "cocircuits": (
                    None
                    if node.cocircuits is None
                    else [sorted(c) for c in node.cocircuits]
                ),
                "assembly": assembly,
                "children": list(node.children),
                "parallel_class_terminal": node.parallel_class_terminal,
            }
        )
    return {
        "k": d.k,
        "root": d.root,
        "irreducible_leaves": list(d.irreducibles),
        "nodes": nodes,
    }


# -------------------------------------------------------------------- DOT


def dot_decomposition_tree(d: MaxStpDecomposition) -> str:
    lines = ["digraph decomposition {"]
    for node_id in sorted(d.nodes):
        node = d.nodes[node_id]
        label = f"{node_id}: {node.stp_class.tag.value}\\n|V|={len(node.label_vertices)}"
        lines.append(f'  n{node_id} [label="{label}"];')
    for node_id in sorted(d.nodes):
        for child in d.nodes[node_id].children:
            lines.append(f"  n{node_id} -> n{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_t_tree(node_id: int, t_tree: TTree) -> str:
    lines = [f"graph t_tree_{node_id} {{"]
    for v in t_tree.vertices:
        lines.append(f'  n{v} [label="child {v}"];')
    for e in t_tree.edges:
        a, b = e.child_pair
        label = ",".join(str(x) for x in sorted(e.cut.cut_edges))
        lines.append(f'  n{a} -- n{b} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_matroid_tree(d: MatroidDecomposition) -> str:
    lines = ["digraph matroid_decomposition {"]
    for node_id in sorted(d.nodes):
        node = d.nodes[node_id]
        kind = "reducible" if node.reducible else "irreducible"
        if node.parallel_class_terminal:
            kind = "parallel class"
        label = f"{node_id}: {kind}\\n|E|={len(node.elements)}, rank={node.rank}"
        lines.append(f'  n{node_id} [label="{label}"];')
    for node_id in sorted(d.nodes):
        for child in d.nodes[node_id].children:
            lines.append(f"  n{node_id} -> n{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"
