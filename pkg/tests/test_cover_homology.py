"""Cover graph, first homology, deck action, and the lattice model.

The deck-action matrices are rechecked against the group law pair by
pair, and the distinguished-cycle data against hand-frozen values.
"""

from fractions import Fraction

import pytest

from quatprym import cover_homology as ch
from quatprym import linalg
from quatprym import surface_homs as sh
from quatprym.qalg import q8_elements, qmul


def h1(g=2, h=None):
    graph = ch.build_cover_graph(h or sh.standard_hom(g))
    return ch.H1Data(graph)


# ------------------------------------------------------------------ graph


def test_graph_shape_g2():
    graph = ch.build_cover_graph(sh.standard_hom(2))
    assert graph.n_edges == 16 and graph.n_vertices == 8
    assert graph.is_connected()
    elems = q8_elements()
    # edge (m-1)*8+u runs from vertex u to vertex u * image(m)
    for idx, (src, dst, m) in enumerate(graph.edges):
        assert m == idx // 8 + 1
        assert src == idx % 8
        assert elems[dst] == qmul(elems[src], graph.alpha_images[m - 1])


def test_disconnected_cover_is_rejected():
    bad = sh.HomTuple(2, ((1, 1), (1, 1), (1, 0), (1, 0)))
    graph = ch.build_cover_graph(bad)
    assert not graph.is_connected()
    with pytest.raises(ValueError):
        ch.H1Data(graph)


# ------------------------------------------------------------------- H1


@pytest.mark.parametrize("g,rank", [(2, 9), (3, 17)])
def test_h1_rank_matches_euler_count(g, rank):
    data = h1(g)
    assert data.rank == rank == len(data.cycles)
    # independent count: edges minus vertices plus one
    assert 8 * g - 8 + 1 == rank


def test_fundamental_cycles_have_zero_boundary():
    data = h1(2)
    for cyc in data.cycles:
        assert all(x == 0 for x in data.boundary(cyc))


def test_boundary_detects_non_cycles():
    data = h1(2)
    chain = [0] * data.graph.n_edges
    chain[0] = 1
    assert any(x != 0 for x in data.boundary(chain))
    with pytest.raises(ValueError):
        data.coords_of_cycle(chain)


def test_coords_of_cycle_inverts_the_basis():
    data = h1(2)
    combo = [0] * data.graph.n_edges
    weights = [3, -2, 0, 1, 0, 0, 5, -1, 2]
    for w, cyc in zip(weights, data.cycles):
        for i, x in enumerate(cyc):
            combo[i] += w * x
    assert data.coords_of_cycle(combo) == weights


# ------------------------------------------------------------ deck action


def test_deck_action_is_a_left_group_action():
    data = h1(2)
    elems = q8_elements()
    rho = {q: linalg.frac_mat(data.rho(q)) for q in elems}
    assert linalg.mat_eq(rho[(1, 0)], linalg.identity(data.rank))
    for a in elems:
        for b in elems:
            assert linalg.mat_eq(
                linalg.mat_mul(rho[a], rho[b]), rho[qmul(a, b)]
            )


def test_deck_action_permutes_vertices_without_fixed_points():
    for q in q8_elements():
        if q == (1, 0):
            continue
        for v in q8_elements():
            assert qmul(q, v) != v


# ------------------------------------------------------------- minus part


def test_minus_part_is_saturated_rank4():
    data = h1(2)
    lat = ch.minus_part(data)
    assert lat.rank == 4
    assert lat.inclusion_divisors() == [1, 1, 1, 1]


def test_minus_part_negated_by_central_element():
    data = h1(2)
    lat = ch.minus_part(data)
    neg = linalg.frac_mat(data.rho((-1, 0)))
    for row in lat.basis:
        image = linalg.mat_vec(neg, [Fraction(x) for x in row])
        assert image == [Fraction(-x) for x in row]


# ------------------------------------------- distinguished cycle and basis


def test_distinguished_cycle_report_frozen():
    rep = ch.check_cycle_c_and_basis()
    assert rep == {
        "boundary_zero": True,
        "zeta_integral": True,
        "v_minus_rank": 4,
        "inclusion_divisors": [1, 1, 1, 1],
        "translate_basis_det": 1,
        "structure_match": True,
    }


def test_chain_c_vector_matches_vertex_pairs():
    graph = ch.build_cover_graph(sh.standard_hom(2))
    vec = ch.chain_c_edge_vector(graph)
    elems = q8_elements()
    support = set()
    for idx, x in enumerate(vec):
        if x == 0:
            continue
        src, dst, _ = graph.edges[idx]
        if x > 0:
            support.add((elems[src], elems[dst]))
        else:
            support.add((elems[dst], elems[src]))
    assert support == set(ch.C_CHAIN_VERTEX_PAIRS)


# ------------------------------------------------------------ lattice model


@pytest.mark.parametrize(
    "g,module_type,rank",
    [(2, "(M)^2", 8), (3, "(M ⊕ H_Z)^2", 16)],
)
def test_prym_lattice_model_structure(g, module_type, rank):
    model = ch.prym_lattice_model(g)
    assert model.module_type == module_type
    assert model.rank == rank
    assert model.symplectic_ok()
    assert model.inclusion_divisors == [1] * (rank // 2)
    assert abs(model.basis_det) == 1
    # rho really is diag(A, tA^{-1}) on every group element
    r = rank // 2
    for q, m in model.rho.items():
        a = linalg.frac_mat(model.a_blocks[q])
        inv_t = linalg.transpose(linalg.inverse(a))
        for i in range(r):
            for j in range(r):
                assert Fraction(m[i][j + r]) == 0
                assert Fraction(m[i + r][j]) == 0
                assert Fraction(m[i][j]) == a[i][j]
                assert Fraction(m[i + r][j + r]) == inv_t[i][j]


def test_deck_blocks_form_a_representation():
    model = ch.prym_lattice_model(2)
    blocks = {q: linalg.frac_mat(m) for q, m in model.a_blocks.items()}
    for a in q8_elements():
        for b in q8_elements():
            assert linalg.mat_eq(
                linalg.mat_mul(blocks[a], blocks[b]), blocks[qmul(a, b)]
            )


def test_dual_intertwiner_identity_g2():
    model = ch.prym_lattice_model(2)
    t = linalg.frac_mat(model.dual_intertwiner)
    assert abs(linalg.det(t)) == 1
    for q in ((1, 1), (1, 2)):
        a = linalg.frac_mat(model.a_blocks[q])
        lhs = linalg.mat_mul(t, linalg.transpose(linalg.inverse(a)))
        rhs = linalg.mat_mul(a, t)
        assert linalg.mat_eq(lhs, rhs)


def test_lattice_model_normalizes_nonstandard_input():
    h = sh.parse_hom(2, "j,i,1,-1")
    model = ch.prym_lattice_model(2, h)
    assert model.module_type == "(M)^2"
    assert model.normalization_moves > 0
    assert model.symplectic_ok()


def test_lattice_model_rejects_unsupported_genus():
    with pytest.raises(ValueError):
        ch.prym_lattice_model(4)
