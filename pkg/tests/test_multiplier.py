import pytest

from upcycles import (
    Necklace,
    UpcycleParams,
    alphabet_multiply,
    alphabet_multiply_lex,
    euler_necklace,
    filler_params,
    lex_necklace,
    onion,
    stretch_necklace,
    verify_upcycle,
)

from fixtures import (
    DOUBLING_FILLER,
    QUATERNARY_N4,
    TOTAL_BASE_N3,
    TOTAL_FILLER_N3,
    TOTAL_PRODUCT_N3,
    U4,
    word,
)


def test_filler_params():
    assert filler_params(UpcycleParams(2, 4, 1), 2) == (2, 3, 6)
    assert filler_params(UpcycleParams(2, 3, 0), 2) == (2, 3, 8)
    assert filler_params(UpcycleParams(2, 4, 1), 5) == (5, 3, 6)
    with pytest.raises(ValueError):
        filler_params(UpcycleParams(3, 4, 2), 2)  # 2*9 not divisible by 4


def test_doubling_reproduces_quaternary_product():
    filler = Necklace(word(DOUBLING_FILLER), 2, 3, 6)
    product = alphabet_multiply(word(U4), 4, 2, filler)
    assert str(product) == QUATERNARY_N4
    rep = verify_upcycle(product, 4)
    assert rep.valid and rep.params == UpcycleParams(4, 4, 1)


def test_doubling_filler_is_the_stretched_lex_necklace():
    stretched = stretch_necklace(lex_necklace(2, 3), 2)
    assert str(stretched.word) == DOUBLING_FILLER
    assert alphabet_multiply_lex(word(U4), 4, 2).chars == \
        alphabet_multiply(word(U4), 4, 2, stretched).chars


def test_total_base_product():
    base = word(TOTAL_BASE_N3)
    filler = Necklace(word(TOTAL_FILLER_N3), 2, 3, 8)
    product = alphabet_multiply(base, 3, 2, filler)
    assert str(product) == TOTAL_PRODUCT_N3
    rep = verify_upcycle(product, 3)
    assert rep.valid and rep.params == UpcycleParams(4, 3, 0)


def test_triple_multiplier_gives_senary_upcycle():
    product = alphabet_multiply_lex(word(U4), 4, 3)
    rep = verify_upcycle(product, 4)
    assert rep.valid and rep.params == UpcycleParams(6, 4, 1)
    assert len(product) == 6**3


def test_filler_shape_is_checked():
    wrong = euler_necklace(2, 3, 5)
    with pytest.raises(ValueError):
        alphabet_multiply(word(U4), 4, 2, wrong)


def test_filler_content_is_reverified():
    fake = Necklace(word("(" + "01" * 24 + ")"), 2, 3, 6)
    with pytest.raises(ValueError):
        alphabet_multiply(word(U4), 4, 2, fake)


def test_base_is_verified():
    with pytest.raises(ValueError):
        alphabet_multiply_lex(word("(001*100*)"), 4, 2)


def test_lex_divisibility_guard():
    base = word("(01)")  # (2, 1, 0): n = 1 divides a^(n-d)
    assert verify_upcycle(alphabet_multiply_lex(base, 1, 3), 1).valid
    with pytest.raises(ValueError):
        alphabet_multiply_lex(word(TOTAL_BASE_N3), 3, 2)  # 3 does not divide 8


def test_onion_stages_nest():
    stages = onion(word(U4), 4, (2, 2))
    assert [s.alphabet for s in stages] == [2, 4, 8]
    for k, s in zip((None, 4, 8), stages):
        rep = verify_upcycle(s, 4)
        assert rep.valid and rep.params.d == 1
    assert stages[2].chars[: len(stages[1])] == stages[1].chars
    assert stages[1].chars[: len(stages[0])] == stages[0].chars
