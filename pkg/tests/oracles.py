"""Independent brute-force oracles used to anchor the library's fast paths.

Everything here deliberately avoids the code paths under test: the packing
number comes from exhaustive partition / tree-family / disjoint-base
enumeration, the cogirth from subset enumeration, and matroid components
from explicit circuit enumeration.
"""

from __future__ import annotations

import random
from itertools import combinations

from stpack.graphs import Multigraph, build_graph, is_spanning_tree
from stpack.matroids import Gf2LinearMatroid, MatroidOracle


# ------------------------------------------------------------- graphs


def brute_lambda(g: Multigraph) -> int:
    """Minimum crossing-edge count over all bipartitions."""
    verts = sorted(g.vertices)
    anchor, others = verts[0], verts[1:]
    best = None
    for mask in range(2 ** len(others) - 1):
        side = {anchor} | {v for i, v in enumerate(others) if mask >> i & 1}
        crossing = 0
        for eid in g.edge_ids():
            u, v = g.endpoints(eid)
            if (u in side) != (v in side):
                crossing += 1
        if best is None or crossing < best:
            best = crossing
    assert best is not None
    return best


def set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def partition_sigma(g: Multigraph) -> int:
    """Packing number from the partition bound: min over partitions into
    r >= 2 parts of floor(crossing / (r - 1))."""
    verts = sorted(g.vertices)
    best = None
    for part in set_partitions(verts):
        if len(part) < 2:
            continue
        label = {}
        for i, block in enumerate(part):
            for v in block:
                label[v] = i
        crossing = 0
        for eid in g.edge_ids():
            u, v = g.endpoints(eid)
            if label[u] != label[v]:
                crossing += 1
        bound = crossing // (len(part) - 1)
        if best is None or bound < best:
            best = bound
    assert best is not None
    return best


def all_spanning_trees(g: Multigraph) -> list[frozenset[int]]:
    n = g.vertex_count
    return [
        frozenset(c)
        for c in combinations(g.edge_ids(), n - 1)
        if is_spanning_tree(g, c)
    ]


def tree_family_sigma(g: Multigraph) -> int:
    """Packing number by exhaustive search over disjoint spanning-tree families."""
    n = g.vertex_count
    trees = all_spanning_trees(g)

    def extend(start: int, used: frozenset[int], need: int) -> bool:
        if need == 0:
            return True
        if g.edge_count - len(used) < need * (n - 1):
            return False
        for i in range(start, len(trees)):
            if not trees[i] & used:
                if extend(i + 1, used | trees[i], need - 1):
                    return True
        return False

    sigma = 0
    while sigma < g.edge_count // (n - 1) and extend(0, frozenset(), sigma + 1):
        sigma += 1
    return sigma


def random_connected_multigraph(rng: random.Random, max_vertices: int = 8, max_edges: int = 16) -> Multigraph:
    n = rng.randint(3, max_vertices)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = [
        (order[i], order[rng.randrange(i)]) for i in range(1, n)
    ]
    extra = rng.randint(0, max_edges - (n - 1))
    for _ in range(extra):
        u = rng.randint(1, n)
        v = rng.randint(1, n)
        while v == u:
            v = rng.randint(1, n)
        edges.append((u, v))
    return build_graph(n, edges)


# ------------------------------------------------------------ matroids


def brute_cogirth(m: MatroidOracle) -> tuple[int, list[frozenset[int]]]:
    """Smallest rank-dropping size and all rank-dropping sets of that size."""
    r = m.full_rank
    ground = sorted(m.ground)
    full = frozenset(ground)
    for size in range(1, len(ground) + 1):
        hits = [
            frozenset(c)
            for c in combinations(ground, size)
            if m.rank(full - frozenset(c)) < r
        ]
        if hits:
            return size, hits
    raise AssertionError("positive-rank matroid must have a cocircuit")


def brute_sigma_matroid(m: MatroidOracle) -> int:
    """Packing number by backtracking over explicit disjoint base families."""
    from math import comb

    r = m.full_rank
    ground = sorted(m.ground)
    if comb(len(ground), r) > 200_000:
        raise ValueError("ground set too large for exhaustive base enumeration")
    bases = [
        frozenset(c) for c in combinations(ground, r) if m.is_independent(c)
    ]
    cap = m.size // r
    best = 0

    def extend(start: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        if best == cap or count + (m.size - len(used)) // r <= best:
            return
        for i in range(start, len(bases)):
            if not bases[i] & used:
                extend(i + 1, used | bases[i], count + 1)
                if best == cap:
                    return

    extend(0, frozenset(), 0)
    return best


def brute_circuits(m: MatroidOracle) -> list[frozenset[int]]:
    """All circuits (minimal dependent sets); sizes are at most rank + 1."""
    ground = sorted(m.ground)
    circuits = []
    for size in range(1, m.full_rank + 2):
        for cand in combinations(ground, size):
            s = frozenset(cand)
            if m.rank(s) < len(s) and all(
                m.is_independent(s - {x}) for x in s
            ):
                circuits.append(s)
    return circuits


def brute_matroid_components(m: MatroidOracle) -> list[frozenset[int]]:
    """Components from the transitive closure of 'share a circuit'."""
    parent = {e: e for e in m.ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for circ in brute_circuits(m):
        anchor = min(circ)
        for e in circ:
            parent[find(e)] = find(anchor)
    groups: dict[int, set[int]] = {}
    for e in m.ground:
        groups.setdefault(find(e), set()).add(e)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def random_gf2_matroid(rng: random.Random, max_elements: int = 12, max_rank: int = 5) -> Gf2LinearMatroid:
    rows = rng.randint(2, max_rank)
    cols = rng.randint(rows + 1, max_elements)
    matrix = []
    while True:
        matrix = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        if all(any(matrix[i][j] for i in range(rows)) for j in range(cols)):
            break
    return Gf2LinearMatroid(matrix)


def parallel_identity_gf2(k: int, blocks: int) -> Gf2LinearMatroid:
    """Each identity column repeated k times: packing number = cogirth = k."""
    cols = []
    for b in range(blocks):
        col = [1 if i == b else 0 for i in range(blocks)]
        cols.extend([col] * k)
    rows = [[c[i] for c in cols] for i in range(blocks)]
    return Gf2LinearMatroid(rows)
