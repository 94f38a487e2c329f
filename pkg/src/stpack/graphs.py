"""Multigraphs with identified parallel edges, plus the structural primitives
(components, contraction, bipartition cuts, spanning-tree checks) that the
rest of the toolkit builds on.

Edges carry integer ids so parallel edges are first-class citizens: cuts,
trees and packings are always sets of edge ids, never endpoint pairs.
Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class EdgeCut:
    """A vertex bipartition together with its exact set of crossing edges."""

    side_a: frozenset[int]
    side_b: frozenset[int]
    cut_edges: frozenset[int]

    def sorted_edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.cut_edges))


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty vertex sets covering the whole vertex set."""

    parts: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.parts)


class Multigraph:
    """Undirected multigraph: a vertex set and edges identified by unique ids.

    Loops are rejected at construction; parallel edges are permitted and
    distinguished by their edge id. Instances are immutable.
    """

    def __init__(self, vertices: Iterable[int], edges: Mapping[int, tuple[int, int]]):
        vset = frozenset(vertices)
        emap: dict[int, tuple[int, int]] = {}
        for eid, (u, v) in edges.items():
            if u == v:
                raise ValueError(f"loop edge {eid} at vertex {u} is not allowed")
            if u not in vset or v not in vset:
                raise ValueError(f"edge {eid} has an endpoint outside the vertex set")
            emap[int(eid)] = (u, v) if u < v else (v, u)
        self._vertices = vset
        self._edges = emap
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in vset}
        for eid in sorted(emap):
            u, v = emap[eid]
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        self._adj = adj

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._edges))

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        return self._edges[edge_id]

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edges

    def incident(self, vertex: int) -> tuple[tuple[int, int], ...]:
        """(edge_id, other_endpoint) pairs at ``vertex``, sorted by edge id."""
        return tuple(self._adj[vertex])

    def degree(self, vertex: int) -> int:
        return len(self._adj[vertex])

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        return tuple(eid for eid, w in self._adj[u] if w == v)

    def induced_subgraph(self, vertex_subset: Iterable[int]) -> "Multigraph":
        """Subgraph on the given vertices, keeping original edge ids."""
        keep = frozenset(vertex_subset)
        if not keep <= self._vertices:
            raise ValueError("vertex subset is not contained in the graph")
        edges = {
            eid: uv
            for eid, uv in self._edges.items()
            if uv[0] in keep and uv[1] in keep
        }
        return Multigraph(keep, edges)

    def delete_edges(self, edge_ids: Iterable[int]) -> "Multigraph":
        """Same vertices, with the given edges removed (ids preserved)."""
        drop = frozenset(edge_ids)
        unknown = drop - self._edges.keys()
        if unknown:
            raise ValueError(f"unknown edge ids: {sorted(unknown)}")
        edges = {eid: uv for eid, uv in self._edges.items() if eid not in drop}
        return Multigraph(self._vertices, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"Multigraph(|V|={self.vertex_count}, |E|={self.edge_count})"


def build_graph(vertex_count: int, edge_list: Sequence[tuple[int, int]]) -> Multigraph:
    """Build a multigraph on vertices 1..vertex_count with sequential edge ids.

    Raises ValueError for loops or endpoints outside 1..vertex_count.
    """
    if vertex_count < 1:
        raise ValueError("vertex_count must be positive")
    vertices = range(1, vertex_count + 1)
    edges = {i: (u, v) for i, (u, v) in enumerate(edge_list)}
    return Multigraph(vertices, edges)


def connected_components(g: Multigraph) -> list[frozenset[int]]:
    """Maximal connected vertex classes, ordered by smallest contained vertex."""
    seen: set[int] = set()
    components: list[frozenset[int]] = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for _, w in g.incident(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        components.append(frozenset(comp))
    return components


def is_connected(g: Multigraph) -> bool:
    return len(connected_components(g)) == 1


def _as_parts(parts: VertexPartition | Sequence[Iterable[int]]) -> tuple[frozenset[int], ...]:
    if isinstance(parts, VertexPartition):
        return parts.parts
    return tuple(frozenset(p) for p in parts)


def check_partition(g: Multigraph, parts: VertexPartition | Sequence[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Validate that ``parts`` partitions the vertex set; return normalized parts."""
    normalized = _as_parts(parts)
    if any(not p for p in normalized):
        raise ValueError("partition parts must be nonempty")
    union: set[int] = set()
    total = 0
    for p in normalized:
        union |= p
        total += len(p)
    if union != set(g.vertices) or total != g.vertex_count:
        raise ValueError("parts do not partition the vertex set")
    return normalized


def contract_parts(g: Multigraph, parts: VertexPartition | Sequence[Iterable[int]]) -> Multigraph:
    """Contract each part to a single vertex, dropping loops and parallels.

    The contracted vertices are labelled 1..len(parts) in order of each
    part's smallest original vertex; at most one edge is kept between any
    pair of distinct parts.
    """
    normalized = check_partition(g, parts)
    ordered = sorted(normalized, key=min)
    label = {}
    for idx, part in enumerate(ordered, start=1):
        for v in part:
            label[v] = idx
    pairs: set[tuple[int, int]] = set()
    for eid in g.edge_ids():
        u, v = g.endpoints(eid)
        lu, lv = label[u], label[v]
        if lu != lv:
            pairs.add((min(lu, lv), max(lu, lv)))
    edges = {i: pair for i, pair in enumerate(sorted(pairs))}
    return Multigraph(range(1, len(ordered) + 1), edges)


def cut_of_bipartition(g: Multigraph, side_a: Iterable[int]) -> EdgeCut:
    """The edge cut induced by the bipartition (side_a, V - side_a)."""
    a = frozenset(side_a)
    if not a or not a < g.vertices:
        raise ValueError("side_a must be a nonempty proper subset of the vertices")
    b = g.vertices - a
    crossing = frozenset(
        eid
        for eid in g.edge_ids()
        if (g.endpoints(eid)[0] in a) != (g.endpoints(eid)[1] in a)
    )
    return EdgeCut(a, b, crossing)


def is_spanning_tree(g: Multigraph, edge_ids: Iterable[int]) -> bool:
    """True iff the edge set is acyclic, connected, and covers every vertex."""
    ids = set(edge_ids)
    if not ids <= set(g.edge_ids()):
        raise ValueError("edge ids not present in the graph")
    if len(ids) != g.vertex_count - 1:
        return False
    parent = {v: v for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in ids:
        u, v = g.endpoints(eid)
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    roots = {find(v) for v in g.vertices}
    return len(roots) == 1
