import cmath
import random
from collections import Counter

from hypothesis import given, settings, strategies as st

from upcycles import (
    Complement,
    CycloInt,
    Frame,
    PWord,
    Permute,
    Reverse,
    Rotate,
    apply_symmetries,
    canonical_rotation,
    covers,
    cross_join,
    find_cross_join_pairs,
    is_k_curtained,
    parse_word,
    verify_upcycle,
    windows,
)

from fixtures import BINARY_N8, QUATERNARY_N4, U4, word


@st.composite
def cyclic_partial_words(draw):
    a = draw(st.integers(min_value=2, max_value=3))
    chars = draw(
        st.lists(st.integers(min_value=-1, max_value=a - 1), min_size=1, max_size=20)
    )
    return PWord(tuple(chars), a, cyclic=True)


@given(cyclic_partial_words(), st.integers(min_value=0, max_value=40))
def test_cover_positions_are_rotation_equivariant(u, r):
    length = len(u)
    y = PWord(tuple(c % u.alphabet for c in range(3)), u.alphabet, False)
    base = covers(u, y)
    shifted = covers(u.rotated(r), y)
    expected = sorted(((p - 1 - r) % length) + 1 for p in base)
    assert shifted == expected


@given(cyclic_partial_words(), st.integers(min_value=0, max_value=40))
def test_canonical_rotation_is_idempotent_and_invariant(u, r):
    canon = canonical_rotation(u)
    assert canonical_rotation(canon) == canon
    assert canonical_rotation(u.rotated(r)) == canon


@settings(deadline=None)
@given(
    st.integers(min_value=0, max_value=7),
    st.booleans(),
    st.booleans(),
)
def test_symmetries_preserve_validity_small(r, rev, comp):
    ops = [Rotate(r)]
    if rev:
        ops.append(Reverse())
    if comp:
        ops.append(Complement())
    moved = apply_symmetries(word(U4), ops)
    rep = verify_upcycle(moved, 4)
    assert rep.valid and rep.params.d == 1


def test_symmetries_preserve_validity_n8():
    rng = random.Random(7)
    for text in BINARY_N8[:3]:
        u = word(text)
        for _ in range(4):
            ops = [
                Rotate(rng.randrange(len(u))),
                Permute(tuple(rng.sample(range(2), 2))),
            ]
            if rng.random() < 0.5:
                ops.append(Reverse())
            rep = verify_upcycle(apply_symmetries(u, ops), 8)
            assert rep.valid and rep.params.d == 1


def test_cross_join_preserves_the_window_multiset():
    w = parse_word(QUATERNARY_N4, 4)
    before = Counter(windows(w, 4))
    pairs = find_cross_join_pairs(w, 4)
    rng = random.Random(11)
    for p in rng.sample(pairs, 30):
        out = cross_join(w, *p)
        assert Counter(windows(out, 4)) == before


def test_pane_curtain_equivalence_1000_triples():
    rng = random.Random(0)
    for _ in range(1000):
        ell = rng.randint(1, 14)
        marks = tuple(rng.random() < 0.4 for _ in range(ell))
        s = rng.randint(1, 4)
        k = rng.randint(1, ell)
        p = Frame(marks)
        f = p.repeated(s)
        assert is_k_curtained(p, k) == is_k_curtained(f, k)


def test_cycloint_minus_one_uniqueness_1000_vectors():
    # numeric oracle: evaluate the root-of-unity sum as a complex number
    rng = random.Random(1)
    hits = 0
    for _ in range(1000):
        p = rng.choice((2, 3, 5))
        counts = tuple(rng.randint(-6, 6) for _ in range(p))
        c = CycloInt(counts)
        value = sum(
            counts[j] * cmath.exp(2j * cmath.pi * j / p) for j in range(p)
        )
        numeric = abs(value - (-1)) < 1e-9
        assert c.is_minus_one() == numeric
        hits += numeric
    # the sweep must actually exercise both outcomes
    assert 0 < hits < 1000


def test_cycloint_minus_one_includes_shifted_vectors():
    # (-1) + every-root-once leaves the value unchanged
    assert CycloInt((-2, -1, -1)).is_minus_one()
    assert CycloInt((0, 1)).is_minus_one()
    assert not CycloInt((1, 0)).is_minus_one()
