"""Weight-multiset engine for the A/B/D families.

Oracles: closed-form weight systems (sign vectors for spin
representations, root systems for adjoints, single strings for rank
one) are written out in the tests and compared to the Freudenthal
computation; decompose is exercised on randomly assembled sums whose
content is known by construction.
"""

import random
from fractions import Fraction

import pytest

from quatprym import lie_engine as le

H = Fraction(1, 2)


def ms_eq(a, b):
    return dict(a) == dict(b)


def frozen(d):
    return {tuple(Fraction(x) for x in w): m for w, m in d.items()}


# ---------------------------------------------------- closed-form oracles


def signs(n):
    out = [()]
    for _ in range(n):
        out = [s + (e,) for s in out for e in (H, -H)]
    return out


@pytest.mark.parametrize("n,alg", [(2, le.AlgebraType.parse("B2")), (3, le.B3)])
def test_b_spin_weights_are_sign_vectors(n, alg):
    got = le.irrep_weights(alg, (H,) * n)
    assert ms_eq(got, {w: 1 for w in signs(n)})


def test_d4_half_spin_weights_have_even_sign_count():
    got = le.irrep_weights(le.D4, (H, H, H, H))
    expected = {w: 1 for w in signs(4) if sum(1 for c in w if c < 0) % 2 == 0}
    assert ms_eq(got, expected)


def test_b3_vector_weights():
    got = le.irrep_weights(le.B3, (1, 0, 0))
    expected = {}
    for i in range(3):
        for s in (1, -1):
            w = [Fraction(0)] * 3
            w[i] = Fraction(s)
            expected[tuple(w)] = 1
    expected[(Fraction(0),) * 3] = 1
    assert ms_eq(got, expected)


def test_b3_adjoint_weights_match_root_system():
    got = le.irrep_weights(le.B3, (1, 1, 0))
    expected = {}
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for si in (1, -1):
                for sj in (1, -1):
                    w = [Fraction(0)] * 3
                    w[i] += si
                    w[j] += sj
                    if any(w):
                        key = tuple(w)
                        expected[key] = 1
    for i in range(3):
        for s in (1, -1):
            w = [Fraction(0)] * 3
            w[i] = Fraction(s)
            expected[tuple(w)] = 1
    expected[(Fraction(0),) * 3] = 3  # zero-weight multiplicity = rank
    assert ms_eq(got, expected)


def test_a1_string_weights():
    for m in range(7):
        got = le.irrep_weights(le.A1, (m, 0))
        expected = {(Fraction(m - 2 * t), Fraction(0)): 1 for t in range(m + 1)}
        assert ms_eq(got, expected)


def test_a3_third_wedge_matches_highest_weight():
    std = le.irrep_weights(le.A3, (1, 0, 0, 0))
    assert ms_eq(le.irrep_weights(le.A3, (1, 1, 1, 0)), le.wedge_power(le.A3, std, 3))


# ----------------------------------------------------------- dimensions


@pytest.mark.parametrize(
    "alg,lam,dim",
    [
        (le.B3, (H, H, H), 8),
        (le.B3, (1, 0, 0), 7),
        (le.B3, (1, 1, 0), 21),
        (le.B3, (1, 1, 1), 35),
        (le.B3, (2, 0, 0), 27),
        (le.D4, (H, H, H, H), 8),
        (le.D4, (1, 0, 0, 0), 8),
        (le.D4, (1, 1, 0, 0), 28),
        (le.A3, (1, 0, 0, 0), 4),
        (le.A3, (1, 1, 1, 0), 4),
        (le.A3, (1, 1, 0, 0), 6),
        (le.A1, (3, 0), 4),
    ],
)
def test_weyl_dimension_formula(alg, lam, dim):
    assert le.weyl_dim(alg, lam) == dim
    assert le.multiset_size(le.irrep_weights(alg, lam)) == dim


# ----------------------------------------------------- Weyl invariance


def test_weight_multisets_are_reflection_invariant():
    rng = random.Random(5)
    cases = [(le.B3, (1, 1, 0)), (le.B3, (H, H, H)), (le.D4, (1, 1, 0, 0)), (le.A3, (2, 1, 0, 0))]
    for alg, lam in cases:
        ms = le.irrep_weights(alg, lam)
        for _ in range(4):
            refl = rng.choice(le.reflections(alg))
            reflected = {}
            for w, m in ms.items():
                reflected[refl(w)] = reflected.get(refl(w), 0) + m
            assert ms_eq(reflected, ms)


def test_dominant_conjugate_is_dominant():
    rng = random.Random(7)
    for _ in range(20):
        w = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
        d = le.dominant_conjugate(le.B3, w)
        assert le.is_dominant(le.B3, d)


# ------------------------------------------------------------ decompose


def random_decomposition_case(rng, alg, lams):
    chosen = []
    ms = {}
    for lam in lams:
        mult = rng.randint(0, 2)
        if mult == 0:
            continue
        chosen.append((tuple(Fraction(x) for x in lam), mult))
        for w, m in le.irrep_weights(alg, lam).items():
            ms[w] = ms.get(w, 0) + mult * m
    return chosen, ms


@pytest.mark.parametrize(
    "alg,lams",
    [
        (le.B3, [(H, H, H), (1, 0, 0), (1, 1, 0), (0, 0, 0), (1, 1, 1)]),
        (le.A3, [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0), (0, 0, 0, 0)]),
        (le.D4, [(H, H, H, H), (1, 0, 0, 0), (0, 0, 0, 0)]),
        (le.A1, [(0, 0), (1, 0), (2, 0), (4, 0)]),
    ],
)
def test_decompose_recovers_random_sums(alg, lams):
    rng = random.Random(42)
    for _ in range(6):
        chosen, ms = random_decomposition_case(rng, alg, lams)
        if not ms:
            continue
        got = le.decompose(alg, ms)
        assert sorted(got) == sorted(chosen)
        assert ms_eq(le.reconstruct(alg, got), ms)


def test_decompose_rejects_non_representation():
    ms = dict(le.irrep_weights(le.B3, (1, 1, 0)))
    key = next(iter(ms))
    del ms[key]
    with pytest.raises(le.NotARepresentation):
        le.decompose(le.B3, ms)


def test_decompose_rejects_negative_virtual_content():
    ms = dict(le.irrep_weights(le.B3, (1, 0, 0)))
    ms[(Fraction(2), Fraction(0), Fraction(0))] = 1  # stray high weight
    with pytest.raises(le.NotARepresentation):
        le.decompose(le.B3, ms)


# --------------------------------------------------- product operations


def test_tensor_size_and_schur_invariant():
    _, gamma = le.atom("Gamma")
    t = le.tensor(le.B3, gamma, gamma)
    assert le.multiset_size(t) == 64
    assert le.invariant_dim(le.B3, t) == 1  # self-dual irreducible


def test_dual_pairing_has_one_invariant():
    _, w = le.atom("W")
    ws = le.dual(le.A3, w)
    assert le.invariant_dim(le.A3, le.tensor(le.A3, w, ws)) == 1
    assert le.invariant_dim(le.A3, le.tensor(le.A3, w, w)) == 0


def test_wedge_and_sym_sizes():
    _, gamma = le.atom("Gamma")
    assert le.multiset_size(le.wedge_power(le.B3, gamma, 2)) == 28
    assert le.multiset_size(le.sym_power(le.B3, gamma, 2)) == 36
    assert le.multiset_size(le.wedge_power(le.B3, gamma, 8)) == 1
    with pytest.raises(ValueError):
        le.wedge_power(le.B3, gamma, 9)


def test_wedge_sym_square_partition_tensor():
    _, gamma = le.atom("Gamma")
    t = le.tensor(le.B3, gamma, gamma)
    w2 = le.wedge_power(le.B3, gamma, 2)
    s2 = le.sym_power(le.B3, gamma, 2)
    assert ms_eq(t, le.dsum(w2, s2))


def test_box_tensor_concatenates_weights():
    _, gamma = le.atom("Gamma")
    _, v2 = le.atom("V2")
    alg, bt = le.box_tensor(le.B3, gamma, le.A1, v2)
    assert le.multiset_size(bt) == 16
    assert all(len(w) == 5 for w in bt)
    assert alg.factors == le.B3A1.factors


def test_restriction_d4_to_b3_of_half_spin_is_spin():
    _, gp = le.atom("Gamma+")
    res = le.restrict_d4_to_b3(gp)
    assert le.decompose(le.B3, res) == [((H, H, H), 1)]


def test_restriction_b3_to_d3_of_spin():
    _, gamma = le.atom("Gamma")
    d3 = le.AlgebraType.parse("D3")
    parts = le.decompose(d3, le.restrict_b3_to_d3(gamma))
    dims = []
    for lam, mult in parts:
        dims.extend([le.weyl_dim(d3, lam)] * mult)
    assert sorted(dims) == [4, 4]


# ------------------------------------------------------ frozen content


def decomp_str(alg, ms):
    parts = le.decompose(alg, ms)
    return " + ".join(
        "(" + ",".join(str(x) for x in lam) + ")" + (f"*{m}" if m > 1 else "")
        for lam, m in parts
    )


def test_spin8_wedge_square_content():
    _, gamma = le.atom("Gamma")
    assert decomp_str(le.B3, le.wedge_power(le.B3, gamma, 2)) == "(1,1,0) + (1,0,0)"


def test_spin8_sym_square_content():
    _, gamma = le.atom("Gamma")
    assert decomp_str(le.B3, le.sym_power(le.B3, gamma, 2)) == "(1,1,1) + (0,0,0)"


def test_spin8_fourth_wedge_content():
    _, gamma = le.atom("Gamma")
    assert (
        decomp_str(le.B3, le.wedge_power(le.B3, gamma, 4))
        == "(2,0,0) + (1,1,1) + (1,0,0) + (0,0,0)"
    )


def test_atom_names_frozen():
    assert le.atom_names() == ["Gamma", "Gamma+", "V", "V2", "W", "W*"]


@pytest.mark.parametrize("name", le.SCENARIOS)
def test_all_scenarios_pass(name):
    rep = le.scenario_report(name)
    assert rep["ok"], rep
    assert all(row["ok"] for row in rep["rows"])


def test_scenario_report_rejects_unknown_name():
    with pytest.raises(ValueError):
        le.scenario_report("nope")


def test_parse_expr_shapes():
    alg, ms = le.parse_expr("wedge(4, Gamma (+) Gamma)")
    assert le.multiset_size(ms) == 1820
    alg2, ms2 = le.parse_expr("sym(2, V2)")
    assert le.multiset_size(ms2) == 3
    with pytest.raises(ValueError):
        le.parse_expr("wedge(2, Nope)")
    with pytest.raises(ValueError):
        le.parse_expr("Gamma (+")
