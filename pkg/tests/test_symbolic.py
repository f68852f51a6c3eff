import numpy as np
import pytest
from hypothesis import given, strategies as st

from flowknots.symbolic import (FIBONACCI, THUE_MORSE, InvalidInput, SturmianParams, Substitution,
                                all_words, apply_substitution, as_word, compose, cyclic_permute,
                                density_witness, fixed_point_prefix, primitive_root, sigma_w,
                                sturmian_substitution, tails_equivalent, transition_matrix, word_str)
from tests.oracles import apply_by_strings, share_tail_by_suffixes


def w(s):
    return as_word([int(c) for c in s])


# -- substitutions --------------------------------------------------------------

def test_fibonacci_image_of_zero():
    assert word_str(apply_substitution(FIBONACCI, w("0"))) == "010"


def test_identity_substitution_fixes_words():
    ident = Substitution.identity(3)
    assert apply_substitution(ident, w("2101")) == w("2101")


def test_thue_morse_ab_to_abba():
    # A=0, B=1
    assert word_str(apply_substitution(THUE_MORSE, w("01"))) == "0110"


def test_letter_outside_alphabet_rejected():
    with pytest.raises(InvalidInput):
        apply_substitution(FIBONACCI, w("012"))


def test_empty_image_rejected():
    with pytest.raises(InvalidInput):
        Substitution(2, (b"\x00", b""))


def test_compose_sigma1_twice():
    s1 = sturmian_substitution(1)
    c = compose(s1, s1)
    assert [word_str(x) for x in c.images] == ["00100101", "00101"]


def test_compose_with_identity():
    s = sturmian_substitution(3)
    assert compose(Substitution.identity(2), s) == s
    assert compose(s, Substitution.identity(2)) == s


def test_compose_alphabet_mismatch():
    with pytest.raises(InvalidInput):
        compose(FIBONACCI, Substitution.identity(3))


def test_transition_matrices():
    assert transition_matrix(FIBONACCI).tolist() == [[2, 1], [1, 1]]
    assert transition_matrix(Substitution.identity(4)).tolist() == np.identity(4, dtype=int).tolist()
    assert transition_matrix(sturmian_substitution(2)).tolist() == [[3, 2], [1, 1]]


def test_sturmian_formula():
    assert [word_str(x) for x in sturmian_substitution(1).images] == ["001", "01"]
    assert [word_str(x) for x in sturmian_substitution(2).images] == ["0001", "001"]
    with pytest.raises(InvalidInput):
        sturmian_substitution(0)


@pytest.mark.parametrize("n", range(1, 8))
def test_sturmian_matrix_unimodular(n):
    m = transition_matrix(sturmian_substitution(n))
    assert m.tolist() == [[n + 1, n], [1, 1]]
    assert m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] == 1


def test_fixed_point_prefix_fibonacci():
    p = fixed_point_prefix(FIBONACCI, 20)
    assert word_str(p) == "01001010010010100101"
    assert apply_substitution(FIBONACCI, p)[:20] == p


# -- hypothesis: substitution laws ------------------------------------------------

@st.composite
def substitutions(draw, n=None, target=None):
    n = n or draw(st.integers(1, 4))
    target = target or draw(st.integers(1, 4))
    images = tuple(bytes(draw(st.lists(st.integers(0, target - 1), min_size=1, max_size=5)))
                   for _ in range(n))
    return Substitution(n, images, target)


@given(substitutions(n=3, target=3), st.lists(st.integers(0, 2), max_size=8),
       st.lists(st.integers(0, 2), max_size=8))
def test_morphism_law(s, u, v):
    u, v = bytes(u), bytes(v)
    assert s(u + v) == s(u) + s(v)


@given(substitutions(n=3, target=3), st.lists(st.integers(0, 2), max_size=8))
def test_apply_matches_string_oracle(s, u):
    imgs = [word_str(x) for x in s.images]
    assert word_str(s(bytes(u))) == apply_by_strings(imgs, word_str(bytes(u)))


@given(st.data())
def test_compose_matrix_is_product(data):
    k = data.draw(st.integers(1, 4))
    b = data.draw(substitutions(target=k))
    a = data.draw(substitutions(n=k))
    c = compose(a, b)
    assert np.array_equal(transition_matrix(c), transition_matrix(a).dot(transition_matrix(b)))
    for letter in range(b.alphabet):
        assert c.image(letter) == a(b.image(letter))


def test_compose_matrix_all_sturmian_pairs():
    for i in range(1, 6):
        for j in range(1, 6):
            a, b = sturmian_substitution(i), sturmian_substitution(j)
            assert np.array_equal(transition_matrix(compose(a, b)),
                                  transition_matrix(a).dot(transition_matrix(b)))


# -- sigma_w ----------------------------------------------------------------------

def test_sigma_w_01():
    e = sigma_w("01")
    assert e.mu == 2
    assert [word_str(x) for x in e.substitution.images] == ["000100", "001000"]
    assert e.return_time == 6


def test_sigma_w_single_zero():
    e = sigma_w("0")
    assert e.mu == 2
    assert [word_str(x) for x in e.substitution.images] == ["00000", "00100"]


def test_sigma_w_empty_rejected():
    with pytest.raises(InvalidInput):
        sigma_w("")


def test_sigma_w_mu_counts_most_frequent_letter():
    assert sigma_w("0010").mu == 4
    assert sigma_w("0121", 3).mu == 3


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(0, n - 1), min_size=1, max_size=9))))
def test_sigma_w_uniform_and_injective(arg):
    n, letters = arg
    e = sigma_w(bytes(letters), n)
    assert all(len(im) == 2 * e.mu + len(letters) for im in e.substitution.images)
    assert len(set(e.substitution.images)) == n
    assert e.check()


def test_cyclic_permute():
    assert cyclic_permute(w("0120"), 3) == w("1201")
    assert cyclic_permute(w("01"), 2, 2) == w("01")


def test_primitive_root():
    assert primitive_root(w("010010")) == (w("010"), 2)
    assert primitive_root(w("011")) == (w("011"), 1)


# -- density ---------------------------------------------------------------------

def test_density_target_zero_trivial():
    e = density_witness("0", "1111", 3)
    assert e is not None and e.relabel == 1  # orbit relabelled so that 0 occurs


def test_density_10_short_seed():
    e = density_witness("10", "0101", 3)
    assert e is not None and len(e.w) <= 3
    assert w("10") in e(w("0101"))


def test_density_witness_is_shortest_then_lex():
    orbit = fixed_point_prefix(FIBONACCI, 50)
    target = w("11011")
    e = density_witness(target, orbit, 6)
    found = [x for L in range(1, len(e.w) + 1) for x in all_words(2, L) if target in sigma_w(x)(orbit)]
    assert found[0] == e.w


def test_density_none_when_budget_too_small():
    assert density_witness("1111", "0", 1) is None


# -- Sturmian parameters -------------------------------------------------------------

def test_tails_examples():
    assert tails_equivalent(SturmianParams((1, 1, 1)), SturmianParams((2, 1, 1)))
    assert not tails_equivalent(SturmianParams((1, 1, 1)), SturmianParams((2, 2, 2)))
    a = SturmianParams((3, 1, 4))
    assert tails_equivalent(a, a)


def test_empty_or_zero_cf_rejected():
    with pytest.raises(InvalidInput):
        SturmianParams(())
    with pytest.raises(InvalidInput):
        SturmianParams((1, 0))


cfs = st.lists(st.integers(1, 4), min_size=1, max_size=5)


@given(cfs, cfs)
def test_tails_match_suffix_oracle(a, b):
    assert tails_equivalent(SturmianParams(tuple(a)), SturmianParams(tuple(b))) == share_tail_by_suffixes(a, b)


@given(cfs, cfs, cfs)
def test_tails_equivalence_relation(a, b, c):
    A, B, C = (SturmianParams(tuple(x)) for x in (a, b, c))
    assert tails_equivalent(A, A)
    assert tails_equivalent(A, B) == tails_equivalent(B, A)
    if tails_equivalent(A, B) and tails_equivalent(B, C):
        assert tails_equivalent(A, C)


def test_sturmian_word_is_prefix_stable():
    p = SturmianParams((1, 2))
    assert p.word(30) == p.word(60)[:30]
    assert word_str(SturmianParams((1,)).word(8)) == word_str(fixed_point_prefix(sturmian_substitution(1), 8))
