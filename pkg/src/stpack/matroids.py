"""Rank-oracle matroids with four concrete realizations.

Everything above the rank function — independence, closure, fundamental
cocircuits, deletion/restriction views, connected components — is derived,
so adding a new matroid class means writing one rank function. Oracles are
immutable; rank values are memoized per instance.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import Multigraph


class MatroidOracle:
    """Base class: an ordered ground set plus a rank function over subsets."""

    def __init__(self, ground: Iterable[int]):
        seen: dict[int, None] = {}
        for e in ground:
            if e in seen:
                raise ValueError(f"duplicate ground element {e}")
            seen[int(e)] = None
        self._ground: tuple[int, ...] = tuple(seen)
        self._index = {e: i for i, e in enumerate(self._ground)}
        self._rank_cache: dict[frozenset[int], int] = {}

    @property
    def ground(self) -> tuple[int, ...]:
        return self._ground

    @property
    def size(self) -> int:
        return len(self._ground)

    def _rank(self, subset: frozenset[int]) -> int:
        raise NotImplementedError

    def _check(self, subset: Iterable[int]) -> frozenset[int]:
        s = frozenset(subset)
        foreign = s - self._index.keys()
        if foreign:
            raise ValueError(f"elements not in the ground set: {sorted(foreign)}")
        return s

    def rank(self, subset: Iterable[int]) -> int:
        s = self._check(subset)
        cached = self._rank_cache.get(s)
        if cached is None:
            cached = self._rank_cache[s] = self._rank(s)
        return cached

    @property
    def full_rank(self) -> int:
        return self.rank(self._ground)

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = self._check(subset)
        return self.rank(s) == len(s)

    def is_loop(self, element: int) -> bool:
        return self.rank([element]) == 0

    def loops(self) -> tuple[int, ...]:
        return tuple(e for e in self._ground if self.is_loop(e))

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        """All elements whose addition does not raise the rank of ``subset``."""
        s = self._check(subset)
        r = self.rank(s)
        return s | frozenset(
            e for e in self._ground if e not in s and self.rank(s | {e}) == r
        )

    def is_base(self, subset: Iterable[int]) -> bool:
        s = self._check(subset)
        return len(s) == self.full_rank and self.rank(s) == len(s)

    def greedy_base(self) -> frozenset[int]:
        """The lexicographically first base in ground order."""
        base: set[int] = set()
        for e in self._ground:
            if self.rank(base | {e}) == len(base) + 1:
                base.add(e)
        return frozenset(base)

    def fundamental_cocircuit(self, base: Iterable[int], x: int) -> frozenset[int]:
        """ground - closure(base - {x}): the cocircuit of ``base`` at ``x``."""
        b = self._check(base)
        if not self.is_base(b):
            raise ValueError("not a base of this matroid")
        if x not in b:
            raise ValueError(f"element {x} is not in the base")
        return frozenset(self._ground) - self.closure(b - {x})

    def fundamental_circuit(self, base: Iterable[int], e: int) -> frozenset[int]:
        """The unique circuit inside base + {e}, for e outside the base."""
        b = self._check(base)
        if not self.is_base(b):
            raise ValueError("not a base of this matroid")
        if e in b:
            raise ValueError(f"element {e} already lies in the base")
        r = self.full_rank
        return frozenset({e}) | frozenset(
            x for x in b if self.rank((b - {x}) | {e}) == r
        )

    def delete(self, subset: Iterable[int]) -> "MatroidOracle":
        """The matroid on ground - subset with the inherited rank function."""
        s = self._check(subset)
        return _DeletionView(self, s)

    def restrict(self, subset: Iterable[int]) -> "MatroidOracle":
        """The matroid restricted to ``subset`` (deletion of the complement)."""
        s = self._check(subset)
        return _DeletionView(self, frozenset(self._ground) - s)

    def components(self) -> list[frozenset[int]]:
        """The finest direct-sum decomposition of the ground set.

        Fixes the greedy base B and unions each remaining element with its
        fundamental circuit through B. Loops fall out as singleton
        components (their circuit is just themselves), as do coloops.
        Ordered by first ground element.
        """
        parent = {e: e for e in self._ground}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        base = self.greedy_base()
        for e in self._ground:
            if e in base or self.is_loop(e):
                continue
            for x in self.fundamental_circuit(base, e) - {e}:
                parent[find(x)] = find(e)
        groups: dict[int, set[int]] = {}
        for e in self._ground:
            groups.setdefault(find(e), set()).add(e)
        comps = [frozenset(s) for s in groups.values()]
        return sorted(comps, key=lambda c: min(self._index[e] for e in c))

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def __repr__(self) -> str:
        return f"{type(self).__name__}(|E|={self.size})"


class _DeletionView(MatroidOracle):
    """Deletion minor backed by the parent's rank oracle; composable."""

    def __init__(self, parent: MatroidOracle, removed: frozenset[int]):
        self._parent = parent
        super().__init__(e for e in parent.ground if e not in removed)

    def _rank(self, subset: frozenset[int]) -> int:
        return self._parent.rank(subset)


class GraphicMatroid(MatroidOracle):
    """Cycle matroid of a multigraph; elements are the edge ids."""

    def __init__(self, graph: Multigraph):
        self.graph = graph
        super().__init__(graph.edge_ids())

    def _rank(self, subset: frozenset[int]) -> int:
        parent = {v: v for v in self.graph.vertices}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        for eid in subset:
            u, v = self.graph.endpoints(eid)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank


class UniformMatroid(MatroidOracle):
    """U_{r,n} on ground set 0..n-1: rank(X) = min(|X|, r)."""

    def __init__(self, r: int, n: int):
        if not 0 <= r <= n:
            raise ValueError("need 0 <= r <= n")
        self.r = r
        super().__init__(range(n))

    def _rank(self, subset: frozenset[int]) -> int:
        return min(len(subset), self.r)


class Gf2LinearMatroid(MatroidOracle):
    """Binary matroid from a 0/1 matrix; elements are column indices.

    Columns are packed into integers (bit i = row i) and ranked by xor
    elimination, so the arithmetic is exact and deterministic.
    """

    def __init__(self, matrix: Sequence[Sequence[int]]):
        rows = [list(map(int, row)) for row in matrix]
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("matrix rows have unequal lengths")
            if any(x not in (0, 1) for row in rows for x in row):
                raise ValueError("matrix entries must be 0 or 1")
        else:
            width = 0
        self._row_count = len(rows)
        self._columns = [
            sum((rows[i][j] & 1) << i for i in range(len(rows)))
            for j in range(width)
        ]
        super().__init__(range(width))

    def matrix_rows(self) -> list[list[int]]:
        return [
            [(self._columns[j] >> i) & 1 for j in range(len(self._columns))]
            for i in range(self._row_count)
        ]

    def _rank(self, subset: frozenset[int]) -> int:
        basis: list[int] = []
        for j in sorted(subset):
            v = self._columns[j]
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return len(basis)


class TransversalMatroid(MatroidOracle):
    """Transversal matroid of a set system over ground elements 0..n-1.

    rank(X) is the maximum matching between the elements of X and the sets
    that contain them, computed by deterministic augmenting paths.
    """

    def __init__(self, sets: Sequence[Iterable[int]], ground_size: int):
        self.sets = tuple(frozenset(int(x) for x in s) for s in sets)
        allowed = set(range(ground_size))
        for i, s in enumerate(self.sets):
            if not s <= allowed:
                raise ValueError(f"set {i} mentions elements outside the ground set")
        super().__init__(range(ground_size))

    def _rank(self, subset: frozenset[int]) -> int:
        match_of_set: dict[int, int] = {}

        def augment(e: int, visited: set[int]) -> bool:
            for i, s in enumerate(self.sets):
                if e in s and i not in visited:
                    visited.add(i)
                    if i not in match_of_set or augment(match_of_set[i], visited):
                        match_of_set[i] = e
                        return True
            return False

        size = 0
        for e in sorted(subset):
            if augment(e, set()):
                size += 1
        return size
