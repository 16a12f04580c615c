"""Word calculus, twist moves, and the homomorphism census.

Census oracles are computed in this file from first principles: the
count of relator-satisfying tuples comes from the character-degree
formula for the 8-element quaternion group (four degree-1 characters
and one degree-2), and the non-surjective count from inclusion and
exclusion over the three maximal cyclic subgroups.
"""

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from quatprym import surface_homs as sh
from quatprym.qalg import qinv, qmul


# ------------------------------------------------------------ word calculus

letters = st.integers(min_value=-4, max_value=4).filter(lambda x: x != 0)
words = st.lists(letters, min_size=0, max_size=8).map(tuple)


@given(words)
def test_reduce_strips_all_cancellations(w):
    r = sh.reduce_word(w)
    assert all(r[i] != -r[i + 1] for i in range(len(r) - 1))
    # reducing again changes nothing
    assert sh.reduce_word(r) == r


@given(words)
def test_inverse_concatenation_reduces_to_empty(w):
    assert sh.reduce_word(sh.concat_words(w, sh.inv_word(w))) == ()


@given(words, words)
def test_inverse_reverses_products(u, v):
    lhs = sh.inv_word(sh.concat_words(u, v))
    rhs = sh.concat_words(sh.inv_word(v), sh.inv_word(u))
    assert sh.reduce_word(lhs) == sh.reduce_word(rhs)


@given(words, words)
def test_conjugates_are_recognized(w, c):
    assert sh.words_conjugate(sh.conj_word(w, c), w)


def test_non_conjugate_pair_rejected():
    assert not sh.words_conjugate((1,), (2,))
    assert not sh.words_conjugate((1, 1), (1,))


def test_surface_relator_shape():
    r = sh.surface_relator(2)
    assert r == (1, 3, -1, -3, 2, 4, -2, -4)
    assert len(sh.surface_relator(5)) == 20


# ----------------------------------------------------- evaluation of words

group_elem = st.sampled_from(sh.GROUP8)


@given(st.lists(group_elem, min_size=4, max_size=4), words, words)
def test_eval_word_is_a_homomorphism(imgs, u, v):
    h = sh.HomTuple(2, tuple(imgs))
    uv = sh.concat_words(u, v)
    assert sh.eval_word(h, uv) == qmul(sh.eval_word(h, u), sh.eval_word(h, v))


@given(st.lists(group_elem, min_size=4, max_size=4), words)
def test_eval_word_respects_inverses(imgs, w):
    h = sh.HomTuple(2, tuple(imgs))
    assert sh.eval_word(h, sh.inv_word(w)) == qinv(sh.eval_word(h, w))


# ----------------------------------------------------------------- moves


@pytest.mark.parametrize("g", [2, 3])
def test_every_move_fixes_the_relator_class(g):
    for mv in sh.move_set(g):
        assert sh.move_fixes_relator_class(mv), mv.kind


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_psi_moves_valid_for_all_indices(g):
    for k in range(1, g):
        assert sh.verify_psi_in_Ag(g, k)


@given(st.lists(group_elem, min_size=4, max_size=4), st.data())
def test_moves_preserve_validity_and_surjectivity(imgs, data):
    h = sh.HomTuple(2, tuple(imgs))
    before = sh.classify_hom(h)
    moves = sh.move_set(2)
    for _ in range(3):
        h = sh.apply_move(h, data.draw(st.sampled_from(moves)))
    after = sh.classify_hom(h)
    assert after == before


# ----------------------------------------------------------------- census


def character_count(g):
    """Number of relator-satisfying tuples, from character degrees."""
    degrees = [1, 1, 1, 1, 2]
    total = sum(Fraction(8) ** (2 * g - 1) / Fraction(d) ** (2 * g - 2) for d in degrees)
    assert total.denominator == 1
    return int(total)


def non_surjective_count(g):
    """Inclusion-exclusion over the three maximal (cyclic, order 4)
    subgroups; all pairwise and triple intersections are the center."""
    return 3 * 4 ** (2 * g) - 3 * 2 ** (2 * g) + 2 ** (2 * g)


def test_census_formulas_have_expected_values():
    assert character_count(2) == 2176
    assert character_count(3) == 133120
    assert non_surjective_count(2) == 736
    assert non_surjective_count(3) == 12160


def test_genus1_has_no_surjections():
    surj = 0
    for imgs in product(sh.GROUP8, repeat=2):
        c = sh.classify_hom(sh.HomTuple(1, imgs))
        if c["valid"] and c["surjective"]:
            surj += 1
    assert surj == 0


def test_genus2_enumeration_matches_oracles():
    rep = sh.enumerate_surjections(2)
    assert rep.total == 8**4
    assert rep.valid == character_count(2)
    assert rep.surjective == character_count(2) - non_surjective_count(2) == 1440
    assert rep.orbit_sizes == (1440,)
    assert rep.standard_orbit_size == 1440


def test_genus3_census_matches_oracles():
    valid = surj = 0
    for imgs in product(sh.GROUP8, repeat=6):
        c = sh.classify_hom(sh.HomTuple(3, imgs))
        if c["valid"]:
            valid += 1
            if c["surjective"]:
                surj += 1
    assert valid == character_count(3)
    assert surj == character_count(3) - non_surjective_count(3) == 120960


# ------------------------------------------------------------- normalize


def surjective_samples(g, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        imgs = tuple(rng.choice(sh.GROUP8) for _ in range(2 * g))
        h = sh.HomTuple(g, imgs)
        c = sh.classify_hom(h)
        if c["valid"] and c["surjective"]:
            out.append(h)
    return out


@pytest.mark.parametrize("g,seed,count", [(2, 11, 12), (3, 12, 3)])
def test_normalize_reaches_standard_and_replays(g, seed, count):
    target = sh.standard_hom(g)
    for h in surjective_samples(g, count, seed):
        result = sh.normalize_hom(h)
        assert result["reached"]
        cur = h
        for mv in result["moves"]:
            cur = sh.apply_move(cur, mv)
        assert cur == target


def test_normalize_rejects_bad_input():
    h = sh.HomTuple(2, ((1, 1), (1, 1), (1, 0), (1, 0)))  # not surjective
    with pytest.raises(ValueError):
        sh.normalize_hom(h)


def test_parse_format_round_trip():
    h = sh.parse_hom(2, "j,i,1,-1")
    assert sh.format_hom(h) == "j,i,1,-1"
    assert h.images == ((1, 2), (1, 1), (1, 0), (-1, 0))
    with pytest.raises(ValueError):
        sh.parse_hom(2, "j,i,1")  # wrong arity
    with pytest.raises(ValueError):
        sh.parse_hom(2, "j,i,1,x")  # unknown element


# ----------------------------------------------------------- numerology


def test_cover_numerology_values():
    n = sh.genus_numerology(3)
    assert n["genus_tilde"] == 17
    assert n["genus_hat"] == 9
    assert n["prym_dim"] == 8
    assert n["moduli_dim"] == 6


@pytest.mark.parametrize("g", [2, 3, 4, 7])
def test_cover_numerology_formulas(g):
    n = sh.genus_numerology(g)
    assert n["genus_tilde"] == 8 * g - 7
    assert n["genus_hat"] == 4 * g - 3
    assert n["prym_dim"] == 4 * (g - 1)


def test_numerology_rejects_genus_below_two():
    with pytest.raises(ValueError):
        sh.genus_numerology(1)
