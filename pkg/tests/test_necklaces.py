import pytest

from upcycles import (
    ContainWord,
    ZerosPrefix,
    build_astute,
    euler_necklace,
    lex_necklace,
    parse_word,
    reflect_expand_necklace,
    rotate_expand_necklace,
    stretch_necklace,
    verify_perfect_necklace,
)

from fixtures import (
    DEBRUIJN_2_3,
    DOUBLING_FILLER,
    LEX_2_3,
    REFLECTED_2_2_3,
    ROTATED_2_3_4,
    U4,
    word,
)


def test_astute_graph_counts():
    g = build_astute(2, 2, 3)
    assert g.num_vertices == 12
    assert g.num_edges == 24
    every = {v for v in g.vertices()}
    assert ((0, 0), 0) in every and ((1, 1), 2) in every
    succ = dict(g.successors(((0, 1), 2)))
    assert succ == {0: ((1, 0), 0), 1: ((1, 1), 0)}


def test_euler_small_cases_are_deterministic():
    assert str(euler_necklace(2, 1, 1).word) == "(01)"
    assert str(euler_necklace(2, 1, 2).word) == "(0011)"
    assert str(euler_necklace(2, 1, 4).word) == "(00001111)"
    assert str(euler_necklace(2, 2, 2).word) == "(00110110)"


def test_euler_unary_alphabet():
    nk = euler_necklace(1, 1, 3)
    assert str(nk.word) == "(000)"


def test_euler_zeros_prefix():
    nk = euler_necklace(2, 3, 6, ZerosPrefix())
    assert nk.word.chars[:6] == (0,) * 6
    assert verify_perfect_necklace(nk.word, 2, 3, 6)


def test_euler_contain_word():
    target = (0, 1, 0)
    nk = euler_necklace(2, 2, 3, ContainWord(target))
    text = "".join(str(c) for c in nk.word.chars * 2)
    assert "010" in text
    assert verify_perfect_necklace(nk.word, 2, 2, 3)


def test_euler_contain_word_argument_errors():
    with pytest.raises(ValueError):
        euler_necklace(2, 2, 3, ContainWord((0, 1)))
    with pytest.raises(ValueError):
        euler_necklace(2, 2, 3, ContainWord((0, 1, 2)))
    with pytest.raises(ValueError):
        euler_necklace(2, 3, 2, ContainWord((0, 1, 0, 1)))


def test_euler_rejects_nonpositive_parameters():
    with pytest.raises(ValueError):
        euler_necklace(2, 0, 1)
    with pytest.raises(ValueError):
        euler_necklace(0, 1, 1)


def test_lex_necklace_fixtures():
    assert str(lex_necklace(2, 1).word) == "(01)"
    assert str(lex_necklace(2, 3).word) == LEX_2_3
    nk = lex_necklace(3, 2)
    assert len(nk.word) == 2 * 3**2
    assert (nk.a, nk.n, nk.t) == (3, 2, 2)


@pytest.mark.parametrize("a,n", [(2, 2), (2, 4), (3, 2), (4, 2)])
def test_lex_necklace_is_perfect(a, n):
    nk = lex_necklace(a, n)
    assert verify_perfect_necklace(nk.word, a, n, n)


def test_stretch_identity_and_doubling():
    base = lex_necklace(2, 3)
    assert stretch_necklace(base, 1).word == base.word
    doubled = stretch_necklace(base, 2)
    assert (doubled.a, doubled.n, doubled.t) == (2, 3, 6)
    assert str(doubled.word) == DOUBLING_FILLER


def test_stretch_keeps_remainder():
    base = euler_necklace(2, 3, 4)  # t = n + 1
    out = stretch_necklace(base, 2)
    assert (out.n, out.t) == (3, 7)
    assert verify_perfect_necklace(out.word, 2, 3, 7)


def test_stretch_rejects_out_of_range_t():
    with pytest.raises(ValueError):
        stretch_necklace(euler_necklace(2, 3, 6), 2)  # t = 2n
    with pytest.raises(ValueError):
        stretch_necklace(lex_necklace(2, 3), 0)


def test_rotate_expand_fixture():
    nk = rotate_expand_necklace(word(DEBRUIJN_2_3), 1)
    assert (nk.a, nk.n, nk.t) == (2, 3, 4)
    assert str(nk.word) == ROTATED_2_3_4


def test_rotate_expand_larger_coprime_shift():
    nk = rotate_expand_necklace(word(DEBRUIJN_2_3), 3)
    assert (nk.n, nk.t) == (3, 6)
    assert verify_perfect_necklace(nk.word, 2, 3, 6)


def test_rotate_expand_rejects_bad_inputs():
    with pytest.raises(ValueError):
        rotate_expand_necklace(word(DEBRUIJN_2_3), 2)  # gcd(8, 2) != 1
    with pytest.raises(ValueError):
        rotate_expand_necklace(word(DEBRUIJN_2_3), 0)
    with pytest.raises(ValueError):
        rotate_expand_necklace(word(U4), 1)  # diamonds
    with pytest.raises(ValueError):
        rotate_expand_necklace(parse_word("(0101)", 2), 1)  # repeats 01


def test_reflect_expand_fixture():
    nk = reflect_expand_necklace(parse_word("(0011)", 2))
    assert (nk.a, nk.n, nk.t) == (2, 2, 3)
    assert str(nk.word) == REFLECTED_2_2_3


def test_reflect_expand_n3():
    nk = reflect_expand_necklace(word(DEBRUIJN_2_3))
    assert (nk.n, nk.t) == (3, 5)
    assert len(nk.word) == 40
    assert verify_perfect_necklace(nk.word, 2, 3, 5)


def test_reflect_expand_degenerate_n1():
    nk = reflect_expand_necklace(parse_word("(01)", 2))
    assert (nk.n, nk.t) == (1, 1)
    assert str(nk.word) == "(01)"


def test_to_text_header():
    nk = euler_necklace(2, 1, 2)
    assert nk.to_text() == "NECKLACE a=2 n=1 t=2\n(0011)"


@pytest.mark.parametrize("a,n,t", [
    (2, 1, 3), (2, 2, 1), (2, 2, 4), (2, 3, 3), (2, 4, 2),
    (3, 1, 2), (3, 2, 2), (3, 2, 3), (4, 2, 1),
])
def test_euler_grid_is_perfect(a, n, t):
    nk = euler_necklace(a, n, t)
    assert len(nk.word) == t * a**n
    assert verify_perfect_necklace(nk.word, a, n, t)
