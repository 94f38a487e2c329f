"""Disjoint base packings, packing certificates, cogirth, and minimum
cocircuits of a rank-oracle matroid.

``pack_bases`` is an augmenting-path matroid-union algorithm run on k
copies of the same matroid. It either produces k pairwise disjoint bases
or a set X whose deficiency count k*rank(X) + |E - X| < k*rank(M)
certifies that no such packing exists; every certificate is re-verified
before it is returned.

Cogirth (the smallest cocircuit) is NP-hard in general, so the exhaustive
search is budgeted. When the packing number equals the cogirth there is a
fast path: each minimum cocircuit meets each of the k disjoint bases
exactly once, which forces it to be a fundamental cocircuit of the first
base, so scanning one base enumerates them all. That derivation is guarded
by brute-force oracle tests in the suite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import BudgetExceededError, InvariantViolation
from .matroids import MatroidOracle

DEFAULT_BUDGET = 2**22


@dataclass(frozen=True)
class BasePacking:
    bases: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.bases)


@dataclass(frozen=True)
class EdmondsCertificate:
    """A set X with k*rank(X) + |E - X| < k*rank(M): no k disjoint bases."""

    elements: frozenset[int]
    k: int


@dataclass(frozen=True)
class MaxBpReport:
    """Outcome of the packing-number-equals-cogirth test.

    ``confidence`` is "confirmed" unless the negative case could not be
    checked exhaustively within the budget, in which case it is
    "unconfirmed" (the positive case is always self-certifying: the witness
    cocircuit has exactly sigma elements).
    """

    answer: bool
    k: int
    packing: BasePacking
    witness: frozenset[int] | None
    confidence: str


def _reject_loops(m: MatroidOracle) -> None:
    loops = m.loops()
    if loops:
        raise ValueError(f"matroid has loops: {sorted(loops)}")


def pack_bases(m: MatroidOracle, k: int) -> BasePacking | EdmondsCertificate:
    """k pairwise disjoint bases of m, or a verified counting certificate.

    Maintains k disjoint independent sets and grows their union one element
    per round via a shortest augmenting path in the exchange digraph
    (arcs x -> y when inserting x into set j forces y out of the unique
    circuit; free arcs when insertion into set j keeps it independent).
    When no uncovered element can reach a free insertion, the set of
    reachable elements is the certificate.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    _reject_loops(m)
    r = m.full_rank
    sets: list[set[int]] = [set() for _ in range(k)]
    covered: set[int] = set()
    target = k * r
    while sum(len(s) for s in sets) < target:
        path = _augmenting_path(m, sets, covered)
        if path is None:
            reachable = _reachable_set(m, sets, covered)
            cert = EdmondsCertificate(frozenset(reachable), k)
            if not verify_edmonds_certificate(m, cert):
                raise InvariantViolation("extracted packing certificate does not verify")
            return cert
        _apply_path(m, sets, covered, path)
    packing = BasePacking(tuple(frozenset(s) for s in sets))
    for b in packing.bases:
        if not m.is_base(b):
            raise InvariantViolation("packing member is not a base")
    return packing


def _free_slot(m: MatroidOracle, sets: list[set[int]], x: int) -> int | None:
    for j, s in enumerate(sets):
        if x not in s and m.rank(s | {x}) == len(s) + 1:
            return j
    return None


def _exchange_targets(m: MatroidOracle, sets: list[set[int]], x: int):
    """Yield (y, j): inserting x into set j closes a circuit through y."""
    for j, s in enumerate(sets):
        if x in s:
            continue
        size = len(s)
        for y in sorted(s):
            if m.rank((s - {y}) | {x}) == size:
                yield y, j


def _augmenting_path(
    m: MatroidOracle, sets: list[set[int]], covered: set[int]
) -> list[tuple[int, int]] | None:
    """Shortest path [(element, set index), ...] ending in a free insertion.

    The first entry is an uncovered element; each subsequent entry (y, j)
    records that the previous element displaces y from set j; the final
    entry's set index is where its element is inserted freely. BFS keeps
    the path shortest, which is what makes the simultaneous exchange valid.
    """
    start_elems = [e for e in m.ground if e not in covered]
    prev: dict[int, tuple[int, int] | None] = {}
    queue: deque[int] = deque()
    for e in start_elems:
        prev[e] = None
        queue.append(e)

    def build(x: int, j_free: int) -> list[tuple[int, int]]:
        # steps[i] = (element, set it enters); each element evicts the next one
        steps: list[tuple[int, int]] = [(x, j_free)]
        while prev[x] is not None:
            x, j = prev[x]
            steps.append((x, j))
        steps.reverse()
        return steps

    while queue:
        x = queue.popleft()
        free = _free_slot(m, sets, x)
        if free is not None:
            return build(x, free)
        for y, j in _exchange_targets(m, sets, x):
            if y not in prev:
                prev[y] = (x, j)
                queue.append(y)
    return None


def _apply_path(
    m: MatroidOracle, sets: list[set[int]], covered: set[int], path: list[tuple[int, int]]
) -> None:
    # path[i] = (element e_i, set j_i); e_i enters j_i, evicting e_{i+1}
    # (which was a member of j_i); the last element enters freely.
    touched = set()
    for i, (e, j) in enumerate(path):
        if i + 1 < len(path):
            evicted = path[i + 1][0]
            sets[j].discard(evicted)
        sets[j].add(e)
        touched.add(j)
    covered.add(path[0][0])
    for j in touched:
        if m.rank(sets[j]) != len(sets[j]):
            raise InvariantViolation("exchange produced a dependent set")


def _reachable_set(m: MatroidOracle, sets: list[set[int]], covered: set[int]) -> set[int]:
    """Elements reachable from the uncovered ones in the exchange digraph."""
    seen = {e for e in m.ground if e not in covered}
    queue = deque(sorted(seen, key=m.ground.index))
    while queue:
        x = queue.popleft()
        for y, _ in _exchange_targets(m, sets, x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def sigma(m: MatroidOracle) -> tuple[int, BasePacking]:
    """The base packing number with a witness packing.

    Searches k = 1, 2, ... up to the counting bound |E| // rank(M).
    """
    _reject_loops(m)
    r = m.full_rank
    if r == 0:
        raise ValueError("rank-0 matroid has no bases to pack")
    best: BasePacking | None = None
    k = 1
    while k <= m.size // r:
        result = pack_bases(m, k)
        if isinstance(result, EdmondsCertificate):
            break
        best = result
        k += 1
    assert best is not None  # k = 1 always packs a base
    return len(best.bases), best


def verify_edmonds_certificate(m: MatroidOracle, cert: EdmondsCertificate) -> bool:
    """True iff k*rank(X) + |E - X| < k*rank(M) holds under recomputed ranks."""
    x = frozenset(cert.elements)
    return cert.k * m.rank(x) + (m.size - len(x)) < cert.k * m.full_rank


def _min_fundamental_cocircuit_size(m: MatroidOracle) -> int:
    base = m.greedy_base()
    return min(len(m.fundamental_cocircuit(base, x)) for x in base)


def cogirth_bruteforce(
    m: MatroidOracle, budget: int = DEFAULT_BUDGET
) -> tuple[int, frozenset[int]]:
    """Smallest rank-dropping subset, enumerated by size then lexicographically.

    Any minimum-size set whose removal drops the rank is automatically a
    minimal cocircuit. Raises BudgetExceededError (carrying the best known
    upper bound, from fundamental cocircuits of the greedy base) when more
    than ``budget`` subsets would be enumerated.
    """
    r = m.full_rank
    if r == 0:
        raise ValueError("rank-0 matroid has no cocircuits")
    ground = sorted(m.ground)
    full = frozenset(ground)
    upper = _min_fundamental_cocircuit_size(m)
    enumerated = 0
    for size in range(1, len(ground) + 1):
        for cand in combinations(ground, size):
            enumerated += 1
            if enumerated > budget:
                raise BudgetExceededError(
                    f"cogirth enumeration exceeds budget {budget} at subset size {size}",
                    best_known=upper,
                )
            c = frozenset(cand)
            if m.rank(full - c) < r:
                return size, c
    raise InvariantViolation("no rank-dropping subset found in a positive-rank matroid")


def is_max_bp(m: MatroidOracle, budget: int = DEFAULT_BUDGET) -> MaxBpReport:
    """Test whether the base packing number equals the cogirth.

    Positive answers are certified directly: a packing of sigma disjoint
    bases plus a cocircuit of exactly sigma elements pins both parameters.
    Negative answers are confirmed by exhausting all subsets of size at
    most sigma (none may drop the rank); when that sweep would exceed the
    budget the report is flagged "unconfirmed".
    """
    s, packing = sigma(m)
    b1 = packing.bases[0]
    for x in sorted(b1):
        cocirc = m.fundamental_cocircuit(b1, x)
        if len(cocirc) == s:
            return MaxBpReport(True, s, packing, cocirc, "confirmed")
    ground = sorted(m.ground)
    full = frozenset(ground)
    needed = sum(comb(len(ground), size) for size in range(1, s + 1))
    if needed > budget:
        return MaxBpReport(False, s, packing, None, "unconfirmed")
    r = m.full_rank
    for size in range(1, s + 1):
        for cand in combinations(ground, size):
            if m.rank(full - frozenset(cand)) < r:
                raise InvariantViolation(
                    "a small cocircuit exists but no fundamental cocircuit of the "
                    "first base matched; packing fast path is inconsistent"
                )
    return MaxBpReport(False, s, packing, None, "confirmed")


def min_cocircuits(m: MatroidOracle, packing: BasePacking) -> list[frozenset[int]]:
    """All minimum cocircuits of a matroid whose packing number equals its cogirth.

    ``packing`` must hold k pairwise disjoint bases where k is both the
    packing number and the cogirth; the call fails if no fundamental
    cocircuit of the first base has k elements (the equality is then not
    certified). Each returned cocircuit is checked to be pairwise disjoint
    from the others, to have exactly k elements, and to meet every base of
    the packing exactly once.
    """
    bases = packing.bases
    if not bases:
        raise ValueError("empty packing")
    k = len(bases)
    r = m.full_rank
    used: set[int] = set()
    for b in bases:
        if not m.is_base(b):
            raise ValueError("packing member is not a base")
        if used & b:
            raise ValueError("packing bases are not pairwise disjoint")
        used |= b
    b1 = bases[0]
    found: dict[frozenset[int], None] = {}
    for x in sorted(b1):
        cocirc = m.fundamental_cocircuit(b1, x)
        if len(cocirc) == k:
            found.setdefault(cocirc, None)
    if not found:
        raise ValueError(
            "no cocircuit of the packing size exists; packing number and cogirth "
            "are not certified equal"
        )
    result = sorted(found, key=sorted)
    flat: set[int] = set()
    for c in result:
        if flat & c:
            raise InvariantViolation("minimum cocircuits are not pairwise disjoint")
        flat |= c
        if len(c) != k:
            raise InvariantViolation("minimum cocircuit has the wrong size")
        for b in bases:
            if len(c & b) != 1:
                raise InvariantViolation("minimum cocircuit misses a packed base")
        if m.rank(frozenset(m.ground) - c) != r - 1:
            raise InvariantViolation("claimed cocircuit does not drop the rank by one")
    return result
