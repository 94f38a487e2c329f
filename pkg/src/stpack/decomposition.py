"""The recursive decomposition of graphs whose edge connectivity equals
their spanning-tree packing number.

A connected graph with sigma = lambda = k splits along its (pairwise
edge-disjoint) minimum cuts: deleting all of them leaves components that
either satisfy the same equality (and split again) or are terminal pieces
— isolated vertices, graphs with slack k <= sigma < lambda, or graphs
with a strictly larger sigma = lambda. The result is a rooted tree of
pieces; contracting each node's components yields a tree whose edges are
in bijection with that node's minimum cuts.

Validators cover order-independence of join edge sets and the
reconstruction constraint that each node's minimum cuts are exactly its
recorded join cuts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .connectivity import (
    DEFAULT_BUDGET,
    edge_connectivity,
    enumerate_min_cuts_bruteforce,
    enumerate_min_cuts_via_packing,
)
from .errors import InvariantViolation
from .graphs import (
    EdgeCut,
    Multigraph,
    connected_components,
    contract_parts,
    is_connected,
)
from .tree_packing import TreePacking, stp_number


class StpClassTag(enum.Enum):
    ISOLATED_VERTEX = "ISOLATED_VERTEX"
    IRREDUCIBLE_SLACK = "IRREDUCIBLE_SLACK"
    IRREDUCIBLE_HIGHER = "IRREDUCIBLE_HIGHER"
    REDUCIBLE = "REDUCIBLE"


@dataclass(frozen=True)
class StpClass:
    tag: StpClassTag
    k: int

    @property
    def is_irreducible(self) -> bool:
        return self.tag is not StpClassTag.REDUCIBLE


@dataclass(frozen=True)
class TTreeEdge:
    child_pair: tuple[int, int]  # node ids of the two joined children
    cut: EdgeCut


@dataclass(frozen=True)
class TTree:
    """Tree on a node's children; each edge carries one minimum cut."""

    vertices: tuple[int, ...]
    edges: tuple[TTreeEdge, ...]


@dataclass(frozen=True)
class DecompositionNode:
    node_id: int
    label_vertices: frozenset[int]
    stp_class: StpClass
    children: tuple[int, ...]
    t_tree: TTree | None


@dataclass(frozen=True)
class MaxStpDecomposition:
    k: int
    root: int
    nodes: dict[int, DecompositionNode]
    irreducibles: tuple[int, ...]  # leaf node ids, in preorder


def is_max_stp(g: Multigraph) -> tuple[bool, int, TreePacking, EdgeCut]:
    """Does sigma(g) equal lambda(g)? Returns both witnesses either way."""
    if g.vertex_count < 2:
        raise ValueError("needs at least two vertices")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    sig, packing = stp_number(g)
    lam, witness = edge_connectivity(g)
    return sig == lam, sig, packing, witness


def classify(g: Multigraph, k: int) -> StpClass:
    """Which of the four decomposition classes g falls into at level k."""
    if g.vertex_count == 1:
        return StpClass(StpClassTag.ISOLATED_VERTEX, k)
    sig, _ = stp_number(g)
    lam, _ = edge_connectivity(g)
    if k > sig:
        raise ValueError(f"k={k} exceeds the packing number {sig}")
    if sig == lam:
        if sig == k:
            return StpClass(StpClassTag.REDUCIBLE, k)
        return StpClass(StpClassTag.IRREDUCIBLE_HIGHER, k)
    return StpClass(StpClassTag.IRREDUCIBLE_SLACK, k)


def higher_level_of_leaf(g: Multigraph, d: MaxStpDecomposition, node_id: int) -> int | None:
    """Diagnostic for leaves whose own equality holds at a larger level.

    A leaf with sigma = lambda = k' > d.k is terminal at level d.k but could
    be decomposed again at level k'; this returns that k' (None for other
    leaves). Purely informational: the decomposition itself never recurses
    into such leaves.
    """
    node = d.nodes[node_id]
    if node.stp_class.tag is not StpClassTag.IRREDUCIBLE_HIGHER:
        return None
    sub = g.induced_subgraph(node.label_vertices)
    sig, _ = stp_number(sub)
    return sig


def k_join(
    g1: Multigraph, g2: Multigraph, join_edges: Sequence[tuple[int, int]]
) -> Multigraph:
    """Disjoint union of g1 and g2 plus the given crossing edges.

    The two vertex sets must already be disjoint; every join edge needs one
    endpoint on each side. The bipartition (V1, V2) of the result cuts
    exactly the join edges.
    """
    if g1.vertices & g2.vertices:
        raise ValueError("vertex sets overlap; relabel before joining")
    if not join_edges:
        raise ValueError("a join needs at least one edge")
    edges: dict[int, tuple[int, int]] = {}
    nid = 0
    for g in (g1, g2):
        for eid in g.edge_ids():
            edges[nid] = g.endpoints(eid)
            nid += 1
    for u, v in join_edges:
        in1 = u in g1.vertices
        in2 = v in g2.vertices
        if not ((in1 and in2) or (u in g2.vertices and v in g1.vertices)):
            raise ValueError(f"join edge ({u}, {v}) does not cross the two graphs")
        edges[nid] = (u, v)
        nid += 1
    return Multigraph(g1.vertices | g2.vertices, edges)


def _match_cuts_to_pairs(
    sub: Multigraph,
    cuts: Sequence[EdgeCut],
    comps: Sequence[frozenset[int]],
) -> dict[tuple[int, int], EdgeCut]:
    """Map each adjacent component pair to the unique cut joining it.

    Requires the component contraction to be a tree; then each minimum
    cut's edges all run between one specific pair of components, and
    distinct cuts join distinct pairs.
    """
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    cut_edges = {eid: c for c in cuts for eid in c.cut_edges}
    by_pair: dict[tuple[int, int], set[EdgeCut]] = {}
    for eid in sub.edge_ids():
        u, v = sub.endpoints(eid)
        cu, cv = comp_of[u], comp_of[v]
        if cu == cv:
            if eid in cut_edges:
                raise InvariantViolation("a minimum-cut edge lies inside a component")
            continue
        if eid not in cut_edges:
            raise InvariantViolation("an inter-component edge belongs to no minimum cut")
        by_pair.setdefault((min(cu, cv), max(cu, cv)), set()).add(cut_edges[eid])
    mapping: dict[tuple[int, int], EdgeCut] = {}
    seen: set[frozenset[int]] = set()
    for pair, cutset in by_pair.items():
        if len(cutset) != 1:
            raise InvariantViolation("several minimum cuts join the same component pair")
        cut = next(iter(cutset))
        if cut.cut_edges in seen:
            raise InvariantViolation("one minimum cut joins several component pairs")
        seen.add(cut.cut_edges)
        mapping[pair] = cut
    if len(mapping) != len(cuts):
        raise InvariantViolation("cut-to-pair correspondence is not a bijection")
    return mapping


def decompose(g: Multigraph) -> MaxStpDecomposition:
    """The unique recursive decomposition of a graph with sigma = lambda = k.

    At each node whose induced subgraph still satisfies the equality at
    level k, all minimum cuts are enumerated (via the packing fast path),
    their edges deleted, and the connected components become the children;
    contracting the components must give a tree, whose edges are labelled
    by the originating cuts. All other nodes are leaves. Node ids are
    assigned in preorder; children are ordered by smallest vertex.
    """
    answer, k, _, _ = is_max_stp(g)
    if not answer:
        raise ValueError("graph does not have sigma = lambda")
    nodes: dict[int, DecompositionNode] = {}
    leaves: list[int] = []
    counter = 0

    def visit(vertex_set: frozenset[int]) -> int:
        nonlocal counter
        node_id = counter
        counter += 1
        sub = g.induced_subgraph(vertex_set)
        cls = classify(sub, k)
        if cls.tag is not StpClassTag.REDUCIBLE:
            nodes[node_id] = DecompositionNode(node_id, vertex_set, cls, (), None)
            leaves.append(node_id)
            return node_id
        _, packing = stp_number(sub)
        cuts = enumerate_min_cuts_via_packing(sub, packing.trees)
        all_cut_edges = frozenset(e for c in cuts for e in c.cut_edges)
        remainder = sub.delete_edges(all_cut_edges)
        comps = connected_components(remainder)
        if len(comps) < 2:
            raise InvariantViolation("removing all minimum cuts did not split the graph")
        contracted = contract_parts(sub, comps)
        if contracted.edge_count != len(comps) - 1 or not is_connected(contracted):
            raise InvariantViolation("component contraction is not a tree")
        pair_to_cut = _match_cuts_to_pairs(sub, cuts, comps)
        child_ids = tuple(visit(comp) for comp in comps)
        t_edges = tuple(
            TTreeEdge((child_ids[i], child_ids[j]), pair_to_cut[(i, j)])
            for (i, j) in sorted(pair_to_cut)
        )
        t_tree = TTree(child_ids, t_edges)
        nodes[node_id] = DecompositionNode(node_id, vertex_set, cls, child_ids, t_tree)
        return node_id

    root = visit(g.vertices)
    return MaxStpDecomposition(k, root, nodes, tuple(leaves))


def _canonical(d: MaxStpDecomposition, node_id: int):
    node = d.nodes[node_id]
    children = tuple(
        sorted((_canonical(d, c) for c in node.children), key=lambda x: x[0])
    )
    t_edges = None
    if node.t_tree is not None:
        labelled = []
        for e in node.t_tree.edges:
            pair = tuple(
                sorted(tuple(sorted(d.nodes[c].label_vertices)) for c in e.child_pair)
            )
            sides = tuple(sorted((tuple(sorted(e.cut.side_a)), tuple(sorted(e.cut.side_b)))))
            labelled.append((pair, tuple(sorted(e.cut.cut_edges)), sides))
        t_edges = tuple(sorted(labelled))
    return (
        tuple(sorted(node.label_vertices)),
        node.stp_class.tag.value,
        node.stp_class.k,
        children,
        t_edges,
    )


def verify_decomposition(g: Multigraph, d: MaxStpDecomposition) -> bool:
    """True iff recomputing the decomposition of g reproduces d exactly
    (vertex labels, classes, and cut sets, node by node)."""
    try:
        fresh = decompose(g)
    except (ValueError, InvariantViolation):
        return False
    if fresh.k != d.k:
        return False
    try:
        return _canonical(fresh, fresh.root) == _canonical(d, d.root)
    except KeyError:
        return False


def check_order_independence(
    g: Multigraph,
    cuts: Iterable[EdgeCut | Iterable[int]],
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """True iff every candidate join edge set is a minimum edge cut of g.

    Candidates may be EdgeCut values or bare edge-id collections (a join
    whose edges no longer form a cut cannot be represented as an EdgeCut).
    """
    minimum = {c.cut_edges for c in enumerate_min_cuts_bruteforce(g, budget)}
    for cand in cuts:
        edges = cand.cut_edges if isinstance(cand, EdgeCut) else frozenset(cand)
        if edges not in minimum:
            return False
    return True


def check_reconstruction_validity(
    g: Multigraph, d: MaxStpDecomposition, budget: int = DEFAULT_BUDGET
) -> bool:
    """Validate a proposed (graph, decomposition) pair node by node.

    At every non-leaf node, the minimum cuts of the node's induced
    subgraph must be exactly the cuts recorded on its tree edges — no
    child-level cut may survive at the parent and none may be missing. Leaf
    subgraphs must belong to the class they claim. Any structural mismatch
    yields False.
    """
    try:
        root = d.nodes[d.root]
        if root.label_vertices != g.vertices:
            return False
        for node in d.nodes.values():
            sub = g.induced_subgraph(node.label_vertices)
            if node.t_tree is None:
                if node.children:
                    return False
                if classify(sub, d.k) != node.stp_class:
                    return False
                continue
            if not is_connected(sub):
                return False
            child_labels = [d.nodes[c].label_vertices for c in node.children]
            union: set[int] = set()
            for lab in child_labels:
                if union & lab:
                    return False
                union |= lab
            if union != node.label_vertices:
                return False
            lam, _ = edge_connectivity(sub)
            if lam != d.k:
                return False
            minimum = {c.cut_edges for c in enumerate_min_cuts_bruteforce(sub, budget)}
            recorded = {e.cut.cut_edges for e in node.t_tree.edges}
            if minimum != recorded or len(recorded) != len(node.t_tree.edges):
                return False
    except (ValueError, KeyError):
        return False
    return True
