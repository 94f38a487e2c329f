import pytest

from stpack.decomposition import decompose
from stpack.fixtures import fano, fig1, fig3l, fig4, transversal_parts, u13
from stpack.matroid_decomposition import (
    assembly_hypergraph,
    check_lemma_cocircuit_survival,
    crux,
    decompose_matroid,
    decompose_matroid_components,
    delta,
)
from stpack.matroids import GraphicMatroid, UniformMatroid


def test_crux_fig1():
    g = fig1()
    m = GraphicMatroid(g)
    view, cocircuits = crux(m)
    assert len(cocircuits) == 1
    join = frozenset(g.edges_between(1, 5) + g.edges_between(2, 6))
    assert cocircuits[0] == join
    assert frozenset(view.ground) == frozenset(m.ground) - join
    assert [len(c) for c in view.components()] == [6, 6]


def test_crux_u13_empty():
    view, cocircuits = crux(u13())
    assert view.ground == ()
    assert cocircuits == [frozenset({0, 1, 2})]


def test_crux_transversal_empty():
    view, cocircuits = crux(transversal_parts(3, 2))
    assert view.ground == ()
    assert len(cocircuits) == 3


def test_crux_requires_equality():
    with pytest.raises(ValueError):
        crux(UniformMatroid(2, 4))


def test_delta_values():
    assert delta(GraphicMatroid(fig1())) == 2
    assert delta(u13()) == 0
    assert delta(GraphicMatroid(fig4())) == 2


def test_assembly_fig1():
    ah = assembly_hypergraph(GraphicMatroid(fig1()))
    assert len(ah.components) == 2
    assert len(ah.hyperedges) == 1
    assert ah.hyperedges[0].incident == (0, 1)


def test_assembly_fig3l_is_a_path():
    ah = assembly_hypergraph(GraphicMatroid(fig3l()))
    assert len(ah.components) == 3
    incidences = sorted(h.incident for h in ah.hyperedges)
    assert incidences == [(0, 1), (1, 2)]


def test_assembly_fig4_root():
    ah = assembly_hypergraph(GraphicMatroid(fig4()))
    assert len(ah.components) == 2
    assert [h.incident for h in ah.hyperedges] == [(0, 1)]


def test_assembly_rejects_empty_crux():
    with pytest.raises(ValueError):
        assembly_hypergraph(u13())


def test_decompose_fig4_matroid():
    d = decompose_matroid(GraphicMatroid(fig4()))
    assert d.k == 2
    root = d.nodes[d.root]
    assert root.reducible and len(root.children) == 2
    inner = [d.nodes[c] for c in root.children if d.nodes[c].reducible]
    assert len(inner) == 1
    assert len(inner[0].children) == 3
    assert len(d.irreducibles) == 4
    for i in d.irreducibles:
        assert len(d.nodes[i].elements) == 6  # each leaf is a K4 cycle matroid
        assert d.nodes[i].rank == 3


def test_decompose_u13_terminal_parallel_class():
    d = decompose_matroid(u13())
    assert len(d.nodes) == 1
    root = d.nodes[d.root]
    assert root.reducible
    assert root.parallel_class_terminal
    assert root.children == ()
    assert root.cocircuits == (frozenset({0, 1, 2}),)
    assert d.irreducibles == ()


def test_decompose_fano_single_leaf():
    d = decompose_matroid(fano())
    assert len(d.nodes) == 1
    assert not d.nodes[d.root].reducible
    assert d.k == 2


def test_decompose_rejects_disconnected():
    with pytest.raises(ValueError) as err:
        decompose_matroid(transversal_parts(3, 2))
    assert "components" in str(err.value)


def test_decompose_components_wrapper():
    parts = decompose_matroid_components(transversal_parts(3, 2))
    assert len(parts) == 3
    for d in parts:
        assert d.nodes[d.root].parallel_class_terminal


def test_rank_bookkeeping_at_reducible_nodes():
    for m in (GraphicMatroid(fig1()), GraphicMatroid(fig3l()), GraphicMatroid(fig4())):
        d = decompose_matroid(m)
        for node in d.nodes.values():
            if not node.reducible or node.parallel_class_terminal:
                continue
            child_ranks = sum(d.nodes[c].rank for c in node.children)
            assert child_ranks == node.rank - len(node.cocircuits)


def test_children_keep_packing_level():
    for m in (GraphicMatroid(fig3l()), GraphicMatroid(fig4())):
        d = decompose_matroid(m)
        from stpack.matroid_packing import sigma

        for node in d.nodes.values():
            for c in node.children:
                assert sigma(m.restrict(d.nodes[c].elements))[0] >= d.k


def test_lemma_survival():
    assert check_lemma_cocircuit_survival(GraphicMatroid(fig3l()))
    assert check_lemma_cocircuit_survival(transversal_parts(3, 2))
    assert check_lemma_cocircuit_survival(GraphicMatroid(fig1()))  # vacuous


def test_decompose_deterministic():
    a = decompose_matroid(GraphicMatroid(fig4()))
    b = decompose_matroid(GraphicMatroid(fig4()))
    assert a == b


def test_matroid_tree_parallels_graph_tree():
    """Leaf counts and hyperedge incidences line up, fixture by fixture."""
    for build in (fig1, fig3l, fig4):
        g = build()
        gd = decompose(g)
        md = decompose_matroid(GraphicMatroid(g))
        assert len(gd.irreducibles) == len(md.irreducibles)
        graph_nodes = {
            frozenset(g.induced_subgraph(n.label_vertices).edge_ids()): n
            for n in gd.nodes.values()
        }
        for mnode in md.nodes.values():
            gnode = graph_nodes[mnode.elements]
            if not mnode.reducible:
                assert gnode.t_tree is None
                continue
            # hyperedges (as pairs of child element sets, with their cocircuit)
            # match the t-tree edges (as pairs of child edge sets, with their cut)
            m_pairs = {
                (
                    frozenset(
                        frozenset(mnode.assembly.components[i]) for i in h.incident
                    ),
                    h.cocircuit,
                )
                for h in mnode.assembly.hyperedges
            }
            g_pairs = set()
            for e in gnode.t_tree.edges:
                sides = frozenset(
                    frozenset(
                        g.induced_subgraph(gd.nodes[c].label_vertices).edge_ids()
                    )
                    for c in e.child_pair
                )
                g_pairs.add((sides, e.cut.cut_edges))
            assert m_pairs == g_pairs
