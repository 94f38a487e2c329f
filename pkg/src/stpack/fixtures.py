"""Canonical graph and matroid fixtures used across tests, demos, and docs.

Graph fixtures follow a block convention: K4 blocks a, b, c, d occupy the
vertex ranges 1-4, 5-8, 9-12, 13-16. The two three-block shapes differ
only in where the second pair of join edges attaches: in the chain shape
both of its edges land on block b, so each join remains a minimum cut; in
the skew shape the second join touches blocks a and b, which destroys the
first join as a cut.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Sequence

from .graphs import Multigraph, build_graph
from .matroids import (
    Gf2LinearMatroid,
    GraphicMatroid,
    MatroidOracle,
    TransversalMatroid,
    UniformMatroid,
)


def _k4_block(offset: int) -> list[tuple[int, int]]:
    return [(u + offset, v + offset) for u, v in combinations(range(1, 5), 2)]


def k4() -> Multigraph:
    return build_graph(4, _k4_block(0))


def c5() -> Multigraph:
    return build_graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])


def petersen() -> Multigraph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (7, 9), (8, 10), (9, 6), (10, 7)]
    return build_graph(10, outer + spokes + inner)


def treepar(k: int, tree_edges: Sequence[tuple[int, int]], vertex_count: int) -> Multigraph:
    """Replace every edge of a tree with k parallel edges."""
    if k < 1:
        raise ValueError("k must be positive")
    edges = [uv for uv in tree_edges for _ in range(k)]
    return build_graph(vertex_count, edges)


def fig1() -> Multigraph:
    """Two K4 blocks joined by the 2-cut (1,5), (2,6); 8 vertices, 14 edges."""
    return build_graph(8, _k4_block(0) + _k4_block(4) + [(1, 5), (2, 6)])


def fig3l() -> Multigraph:
    """Chain of three K4 blocks; both joins stay minimum cuts."""
    joins = [(1, 5), (2, 6), (5, 9), (6, 10)]
    return build_graph(12, _k4_block(0) + _k4_block(4) + _k4_block(8) + joins)


def fig3r() -> Multigraph:
    """Three K4 blocks with a skew second join; only one minimum cut remains."""
    joins = [(1, 5), (2, 6), (2, 9), (5, 10)]
    return build_graph(12, _k4_block(0) + _k4_block(4) + _k4_block(8) + joins)


def fig4() -> Multigraph:
    """The chain of three K4 blocks plus a fourth block hung across it.

    The join (3,13), (11,14) touches blocks a and c, so it is the only
    minimum cut of the whole graph; the chain's two joins survive only
    inside the chain.
    """
    joins = [(1, 5), (2, 6), (5, 9), (6, 10), (3, 13), (11, 14)]
    return build_graph(
        16, _k4_block(0) + _k4_block(4) + _k4_block(8) + _k4_block(12) + joins
    )


def fano() -> Gf2LinearMatroid:
    """The seven nonzero binary columns of length three."""
    cols = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    rows = [[c[i] for c in cols] for i in range(3)]
    return Gf2LinearMatroid(rows)


def transversal_parts(parts: int, size: int) -> TransversalMatroid:
    """Transversal matroid of a partition into ``parts`` blocks of ``size``."""
    sets = [range(i * size, (i + 1) * size) for i in range(parts)]
    return TransversalMatroid(sets, parts * size)


def u13() -> UniformMatroid:
    return UniformMatroid(1, 3)


GRAPH_FIXTURES: dict[str, Callable[[], Multigraph]] = {
    "K4": k4,
    "C5": c5,
    "PETERSEN": petersen,
    "FIG1": fig1,
    "FIG3L": fig3l,
    "FIG3R": fig3r,
    "FIG4": fig4,
    "TREEPAR_2_P3": lambda: treepar(2, [(1, 2), (2, 3)], 3),
    "TREEPAR_3_P4": lambda: treepar(3, [(1, 2), (2, 3), (3, 4)], 4),
}

MATROID_FIXTURES: dict[str, Callable[[], MatroidOracle]] = {
    "FANO": fano,
    "U_1_3": u13,
    "U_2_4": lambda: UniformMatroid(2, 4),
    "TRANSVERSAL_3x2": lambda: transversal_parts(3, 2),
    "M_FIG1": lambda: GraphicMatroid(fig1()),
    "M_FIG3L": lambda: GraphicMatroid(fig3l()),
    "M_FIG4": lambda: GraphicMatroid(fig4()),
}
