"""Edge connectivity and minimum-cut enumeration.

``edge_connectivity`` runs unit-capacity max-flow from a fixed source to
every other vertex and recovers a witness cut from residual reachability.
Enumeration of *all* minimum cuts comes in two flavours: a budgeted brute
force over bipartitions (the test oracle, exponential), and a fast scan
that is valid once the graph is known to carry a full packing of
edge-disjoint spanning trees: each minimum cut then meets the first tree
in exactly one edge, so splitting that tree edge by edge visits every
minimum cut's bipartition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceededError
from .graphs import EdgeCut, Multigraph, cut_of_bipartition, is_connected, is_spanning_tree

DEFAULT_BUDGET = 2**22


@dataclass(frozen=True)
class MinCutReport:
    lam: int
    witness: EdgeCut
    all_min_cuts: tuple[EdgeCut, ...] | None = None


def min_cut_report(
    g: Multigraph, include_all: bool = False, budget: int = DEFAULT_BUDGET
) -> MinCutReport:
    """Edge connectivity with a witness, optionally listing every minimum cut."""
    lam, witness = edge_connectivity(g)
    cuts = None
    if include_all:
        cuts = tuple(enumerate_min_cuts_bruteforce(g, budget))
    return MinCutReport(lam, witness, cuts)


def _max_flow_value_and_side(g: Multigraph, source: int, sink: int) -> tuple[int, frozenset[int]]:
    """Unit-capacity max flow between two vertices of an undirected multigraph.

    Returns the flow value and the source-side vertex set of a minimum cut
    (vertices reachable from the source in the final residual network).
    Parallel edges are aggregated into integer capacities; search order is
    ascending vertex id for deterministic witnesses.
    """
    cap: dict[int, dict[int, int]] = {v: {} for v in g.vertices}
    for eid in g.edge_ids():
        u, v = g.endpoints(eid)
        cap[u][v] = cap[u].get(v, 0) + 1
        cap[v][u] = cap[v].get(u, 0) + 1
    flow = 0
    while True:
        parent: dict[int, int] = {}
        seen = {source}
        queue = deque([source])
        while queue and sink not in seen:
            x = queue.popleft()
            for y in sorted(cap[x]):
                if y not in seen and cap[x][y] > 0:
                    seen.add(y)
                    parent[y] = x
                    queue.append(y)
        if sink not in seen:
            return flow, frozenset(seen)
        path = []
        v = sink
        while v != source:
            path.append((parent[v], v))
            v = parent[v]
        bottleneck = min(cap[x][y] for x, y in path)
        for x, y in path:
            cap[x][y] -= bottleneck
            cap[y][x] += bottleneck
        flow += bottleneck


def edge_connectivity(g: Multigraph) -> tuple[int, EdgeCut]:
    """Edge connectivity of a connected multigraph with a witness minimum cut."""
    if g.vertex_count < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    source = min(g.vertices)
    best: tuple[int, int] | None = None  # (value, sink)
    for sink in sorted(g.vertices - {source}):
        value, _ = _max_flow_value_and_side(g, source, sink)
        if best is None or value < best[0]:
            best = (value, sink)
    assert best is not None
    lam, sink = best
    _, side = _max_flow_value_and_side(g, source, sink)
    witness = cut_of_bipartition(g, side)
    assert len(witness.cut_edges) == lam
    return lam, witness


def enumerate_min_cuts_bruteforce(g: Multigraph, budget: int = DEFAULT_BUDGET) -> list[EdgeCut]:
    """All minimum edge cuts, by exhausting the 2^(|V|-1) bipartitions.

    The side containing the smallest vertex id is listed as side_a; output
    is deduplicated by cut-edge set and sorted. Raises BudgetExceededError
    when the bipartition count exceeds ``budget``.
    """
    if g.vertex_count < 2:
        raise ValueError("no bipartitions on fewer than two vertices")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    others = sorted(g.vertices)[1:]
    anchor = min(g.vertices)
    n_masks = 2 ** len(others)
    if n_masks > budget:
        raise BudgetExceededError(
            f"{n_masks} bipartitions exceed the budget of {budget}"
        )
    best = None
    found: dict[frozenset[int], EdgeCut] = {}
    for mask in range(n_masks - 1):  # skip the full set: side_b must be nonempty
        side_a = {anchor} | {v for i, v in enumerate(others) if mask >> i & 1}
        cut = cut_of_bipartition(g, side_a)
        size = len(cut.cut_edges)
        if best is None or size < best:
            best = size
            found = {cut.cut_edges: cut}
        elif size == best and cut.cut_edges not in found:
            found[cut.cut_edges] = cut
    return sorted(found.values(), key=EdgeCut.sorted_edges)


def enumerate_min_cuts_via_packing(
    g: Multigraph, packing: Sequence[Iterable[int]]
) -> list[EdgeCut]:
    """All minimum cuts of a graph that packs lambda edge-disjoint spanning trees.

    ``packing`` must be lambda(g) pairwise edge-disjoint spanning trees. Any
    minimum cut intersects each tree exactly once, so removing one edge from
    the first tree and reading off that tree's two components produces every
    minimum cut's bipartition; candidates are kept iff they cut exactly
    lambda edges.
    """
    lam, _ = edge_connectivity(g)
    trees = [frozenset(t) for t in packing]
    if len(trees) != lam:
        raise ValueError(f"packing has {len(trees)} trees but lambda = {lam}")
    for i, t in enumerate(trees):
        if not is_spanning_tree(g, t):
            raise ValueError(f"packing member {i} is not a spanning tree")
        for u in trees[i + 1 :]:
            if t & u:
                raise ValueError("packing trees are not pairwise edge-disjoint")
    first = sorted(trees[0])
    found: dict[frozenset[int], EdgeCut] = {}
    for eid in first:
        side = _tree_component(g, trees[0] - {eid}, g.endpoints(eid)[0])
        cut = cut_of_bipartition(g, side if min(g.vertices) in side else g.vertices - side)
        if len(cut.cut_edges) == lam and cut.cut_edges not in found:
            found[cut.cut_edges] = cut
    return sorted(found.values(), key=EdgeCut.sorted_edges)


def _tree_component(g: Multigraph, tree_edges: frozenset[int], start: int) -> frozenset[int]:
    comp = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for eid, w in g.incident(v):
            if eid in tree_edges and w not in comp:
                comp.add(w)
                queue.append(w)
    return frozenset(comp)
