"""Recursive decomposition of connected matroids whose base packing number
equals their cogirth.

Deleting all minimum cocircuits of such a matroid leaves its residue (here
called the crux); the connected components of the residue are the children
of the decomposition node, and an assembly hypergraph records which
components each cocircuit stitches together: restricting the matroid to
the residue plus one cocircuit, the component containing that cocircuit
absorbs exactly its incident crux components.

Rank bookkeeping is enforced at every reducible node: the child ranks must
sum to the node rank minus the number of minimum cocircuits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, InvariantViolation
from .matroid_packing import DEFAULT_BUDGET, BasePacking, is_max_bp, min_cocircuits
from .matroids import MatroidOracle


@dataclass(frozen=True)
class Hyperedge:
    cocircuit: frozenset[int]
    incident: tuple[int, ...]  # indices into the component list


@dataclass(frozen=True)
class AssemblyHypergraph:
    """Vertices are crux components; one hyperedge per minimum cocircuit."""

    components: tuple[frozenset[int], ...]
    hyperedges: tuple[Hyperedge, ...]


@dataclass(frozen=True)
class MatroidDecompositionNode:
    node_id: int
    elements: frozenset[int]
    reducible: bool
    k: int
    rank: int
    cocircuits: tuple[frozenset[int], ...] | None
    assembly: AssemblyHypergraph | None
    children: tuple[int, ...]
    parallel_class_terminal: bool = False


@dataclass(frozen=True)
class MatroidDecomposition:
    k: int
    root: int
    nodes: dict[int, MatroidDecompositionNode]
    irreducibles: tuple[int, ...]


def _certified_cocircuits(m: MatroidOracle, budget: int) -> tuple[BasePacking, list[frozenset[int]]]:
    report = is_max_bp(m, budget)
    if not report.answer:
        if report.confidence == "unconfirmed":
            raise BudgetExceededError("cannot confirm the cogirth within the budget")
        raise ValueError("packing number and cogirth differ; no crux is defined")
    return report.packing, min_cocircuits(m, report.packing)


def crux(m: MatroidOracle, budget: int = DEFAULT_BUDGET) -> tuple[MatroidOracle, list[frozenset[int]]]:
    """Delete every minimum cocircuit; returns the residue and the cocircuits.

    Requires the packing number to equal the cogirth. The residue may have
    an empty ground set.
    """
    _, cocircuits = _certified_cocircuits(m, budget)
    union = frozenset(e for c in cocircuits for e in c)
    return m.delete(union), cocircuits


def delta(m: MatroidOracle, budget: int = DEFAULT_BUDGET) -> int:
    """Number of connected components of the crux; 0 when the crux is empty."""
    view, _ = crux(m, budget)
    if not view.ground:
        return 0
    return len(view.components())


def assembly_hypergraph(m: MatroidOracle, budget: int = DEFAULT_BUDGET) -> AssemblyHypergraph:
    """Which crux components does each minimum cocircuit join?

    For cocircuit C: restrict the matroid to crux + C and take the
    connected component containing C; the crux components inside it are
    C's incident vertices. Errors when the crux is empty.
    """
    view, cocircuits = crux(m, budget)
    if not view.ground:
        raise ValueError("empty crux: no components to attach")
    return _node_assembly(m, frozenset(view.ground), tuple(cocircuits))


def decompose_matroid(m: MatroidOracle, budget: int = DEFAULT_BUDGET) -> MatroidDecomposition:
    """Decompose a connected matroid into its irreducible pieces at level
    k = sigma(m).

    A node is reducible when its restriction has packing number and cogirth
    both equal to k; its children are the connected components of the crux.
    A reducible node with an empty crux is a terminal parallel class: it
    has one cocircuit (the whole element set), rank 1, and no children.
    Node ids are assigned in preorder.
    """
    if m.loops():
        raise ValueError(f"matroid has loops: {sorted(m.loops())}")
    comps = m.components()
    if len(comps) != 1:
        raise ValueError(
            f"matroid is disconnected; components: {[sorted(c) for c in comps]}"
        )
    root_report = is_max_bp(m, budget)
    if not root_report.answer and root_report.confidence == "unconfirmed":
        raise BudgetExceededError(
            "cannot confirm the root's cogirth within the budget"
        )
    k = root_report.k
    nodes: dict[int, MatroidDecompositionNode] = {}
    leaves: list[int] = []
    counter = 0

    def visit(elements: frozenset[int]) -> int:
        nonlocal counter
        node_id = counter
        counter += 1
        sub = m.restrict(elements)
        rank = sub.full_rank
        report = is_max_bp(sub, budget)
        if not report.answer and report.confidence == "unconfirmed":
            raise BudgetExceededError(
                "cannot confirm a node's cogirth within the budget"
            )
        reducible = report.answer and report.k == k
        if not reducible:
            nodes[node_id] = MatroidDecompositionNode(
                node_id, elements, False, k, rank, None, None, ()
            )
            leaves.append(node_id)
            return node_id
        cocircuits = tuple(min_cocircuits(sub, report.packing))
        union = frozenset(e for c in cocircuits for e in c)
        crux_elems = elements - union
        if not crux_elems:
            # Connected + empty crux forces a single cocircuit covering
            # everything, i.e. a rank-1 parallel class.
            if len(cocircuits) != 1 or rank != 1:
                raise InvariantViolation(
                    "empty crux on a connected matroid that is not a parallel class"
                )
            nodes[node_id] = MatroidDecompositionNode(
                node_id, elements, True, k, rank, cocircuits, None, (),
                parallel_class_terminal=True,
            )
            return node_id
        assembly = _node_assembly(sub, crux_elems, cocircuits)
        child_ranks = sum(sub.restrict(c).full_rank for c in assembly.components)
        if child_ranks != rank - len(cocircuits):
            raise InvariantViolation("child ranks do not sum to node rank minus cocircuit count")
        child_ids = tuple(visit(comp) for comp in assembly.components)
        nodes[node_id] = MatroidDecompositionNode(
            node_id, elements, True, k, rank, cocircuits, assembly, child_ids
        )
        return node_id

    root = visit(frozenset(m.ground))
    return MatroidDecomposition(k, root, nodes, tuple(leaves))


def _node_assembly(
    sub: MatroidOracle,
    crux_elems: frozenset[int],
    cocircuits: tuple[frozenset[int], ...],
) -> AssemblyHypergraph:
    view = sub.restrict(crux_elems)
    comps = view.components()
    hyperedges = []
    for c in cocircuits:
        restricted = sub.restrict(crux_elems | c)
        anchor = min(c)
        containing = next(rc for rc in restricted.components() if anchor in rc)
        if not c <= containing:
            raise InvariantViolation("a minimum cocircuit straddles several components")
        incident = tuple(i for i, comp in enumerate(comps) if comp & containing)
        hyperedges.append(Hyperedge(c, incident))
    return AssemblyHypergraph(tuple(comps), tuple(hyperedges))


def decompose_matroid_components(
    m: MatroidOracle, budget: int = DEFAULT_BUDGET
) -> list[MatroidDecomposition]:
    """Convenience wrapper: decompose each connected component independently.

    For a direct sum, the packing number and cogirth are the minima over
    the components, so per-component decompositions carry all structure;
    note this goes beyond the single-matroid contract of decompose_matroid.
    """
    return [decompose_matroid(m.restrict(c), budget) for c in m.components()]


def check_lemma_cocircuit_survival(m: MatroidOracle, budget: int = DEFAULT_BUDGET) -> bool:
    """After deleting one minimum cocircuit, do the others stay minimum?

    For every ordered pair (i, j), i != j, checks that C_i is a cocircuit
    of m minus C_j of the minimum size: the stripped bases witness that the
    deletion still packs k disjoint bases, so no smaller cocircuit can
    appear. Vacuously true when fewer than two minimum cocircuits exist.
    """
    packing, cocircuits = _certified_cocircuits(m, budget)
    if len(cocircuits) < 2:
        return True
    k = len(packing.bases)
    for j, cj in enumerate(cocircuits):
        deleted = m.delete(cj)
        rank = deleted.full_rank
        remaining = frozenset(deleted.ground)
        for b in packing.bases:
            stripped = b - cj
            if len(stripped) != len(b) - 1 or deleted.rank(stripped) != rank:
                return False
        for i, ci in enumerate(cocircuits):
            if i == j:
                continue
            if len(ci) != k:
                return False
            hyperplane = remaining - ci
            if deleted.rank(hyperplane) != rank - 1:
                return False
            if any(deleted.rank(hyperplane | {x}) != rank for x in ci):
                return False
    return True
