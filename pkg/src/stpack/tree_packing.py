"""Spanning-tree packing number, explicit packings, and partition
certificates of impossibility.

Packing k edge-disjoint spanning trees is matroid union on k copies of the
graph's cycle matroid, so the augmenting engine from
:mod:`stpack.matroid_packing` does the work. When no packing exists the
counting certificate translates into a vertex partition with fewer than
k*(parts-1) crossing edges: the parts are the connected components of the
spanning subgraph on the certificate's edge set. Every certificate is
re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .graphs import (
    Multigraph,
    VertexPartition,
    check_partition,
    connected_components,
    is_connected,
    is_spanning_tree,
)
from .matroid_packing import EdmondsCertificate, pack_bases
from .matroids import GraphicMatroid


@dataclass(frozen=True)
class TreePacking:
    trees: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.trees)

    def all_edges(self) -> frozenset[int]:
        out: set[int] = set()
        for t in self.trees:
            out |= t
        return frozenset(out)


@dataclass(frozen=True)
class TutteCertificate:
    """A vertex partition with fewer than k*(parts-1) crossing edges.

    Such a partition proves that k edge-disjoint spanning trees cannot
    exist.
    """

    partition: VertexPartition
    cross_edge_count: int
    k: int


def _cross_edges(g: Multigraph, parts: tuple[frozenset[int], ...]) -> int:
    label = {}
    for i, part in enumerate(parts):
        for v in part:
            label[v] = i
    return sum(1 for eid in g.edge_ids() if label[g.endpoints(eid)[0]] != label[g.endpoints(eid)[1]])


def verify_tutte_certificate(g: Multigraph, cert: TutteCertificate) -> bool:
    """Recompute the crossing-edge count and test it against k*(parts-1)."""
    parts = check_partition(g, cert.partition)
    crossing = _cross_edges(g, parts)
    if crossing != cert.cross_edge_count:
        return False
    return crossing < cert.k * (len(parts) - 1)


def _certificate_from_edge_set(g: Multigraph, elements: frozenset[int], k: int) -> TutteCertificate:
    """Turn a deficient edge set into a violating vertex partition.

    The parts are the connected components of (V, X). Every crossing edge
    lies outside X, so the crossing count is at most |E - X|, and the
    counting deficiency of X forces it below k*(parts-1).
    """
    spanning = Multigraph(g.vertices, {eid: g.endpoints(eid) for eid in elements})
    parts = tuple(connected_components(spanning))
    cert = TutteCertificate(VertexPartition(parts), _cross_edges(g, parts), k)
    if not verify_tutte_certificate(g, cert):
        raise InvariantViolation("constructed partition certificate does not verify")
    return cert


def pack_trees(g: Multigraph, k: int) -> TreePacking | TutteCertificate:
    """k pairwise edge-disjoint spanning trees of g, or a verified certificate."""
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if k < 1:
        raise ValueError("k must be at least 1")
    result = pack_bases(GraphicMatroid(g), k)
    if isinstance(result, EdmondsCertificate):
        return _certificate_from_edge_set(g, result.elements, k)
    packing = TreePacking(result.bases)
    used: set[int] = set()
    for t in packing.trees:
        if not is_spanning_tree(g, t) or used & t:
            raise InvariantViolation("packing is not a family of disjoint spanning trees")
        used |= t
    return packing


def stp_number(g: Multigraph) -> tuple[int, TreePacking]:
    """The spanning-tree packing number sigma(g) with a witness packing.

    Searches k = 1, 2, ... up to the counting bound |E| // (|V| - 1).
    """
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if g.vertex_count < 2:
        raise ValueError("packing number is unbounded on a single vertex")
    best: TreePacking | None = None
    k = 1
    while k <= g.edge_count // (g.vertex_count - 1):
        result = pack_trees(g, k)
        if isinstance(result, TutteCertificate):
            break
        best = result
        k += 1
    assert best is not None  # a connected graph packs at least one tree
    return len(best.trees), best
