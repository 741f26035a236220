import pytest
from hypothesis import given, strategies as st

from upcycles import (
    DIAMOND,
    Complement,
    Frame,
    Permute,
    PWord,
    Reverse,
    Rotate,
    apply_symmetries,
    apply_symmetry,
    canonical_rotation,
    covers,
    diamond_offsets,
    format_word,
    frame_of,
    frame_period,
    parse_word,
    window_frame,
    windows,
)
from upcycles.words import least_rotation_index

from fixtures import U4, word


def test_parse_marks_cyclic_with_parentheses():
    assert parse_word("(01*)", 2).cyclic
    assert not parse_word("01*", 2).cyclic


def test_parse_accepts_diamond_alias_and_whitespace():
    assert parse_word("0 0 1 ⋄", 2) == parse_word("001*", 2)


def test_parse_forced_cyclic_flag():
    assert parse_word("001*", 2, cyclic=True).cyclic
    with pytest.raises(ValueError):
        parse_word("(001*)", 2, cyclic=False)


@pytest.mark.parametrize(
    "text",
    ["", "(01", "01)", "012", "0x1", "(  )"],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_word(text, 2)


def test_format_round_trip():
    for text in ["(001*110*)", "0*1", "(a9*)", "z"]:
        a = 36
        w = parse_word(text, a)
        assert format_word(w) == text
        assert parse_word(format_word(w), a) == w


def test_cyclic_indexing_wraps():
    u = word(U4)
    assert u[0] == 0 and u[3] == DIAMOND
    assert u[8] == u[0] and u[-1] == u[7]
    assert u.window(6, 4) == (0, DIAMOND, 0, 0)


def test_linear_window_stays_in_bounds():
    w = parse_word("0011", 2)
    assert w.window(1, 3) == (0, 1, 1)
    with pytest.raises(IndexError):
        w.window(2, 3)


def test_transforms():
    u = word(U4)
    assert format_word(u.rotated(2)) == "(1*110*00)"
    assert format_word(u.reversed_()) == "(*011*100)"
    assert format_word(u.complemented()) == "(110*001*)"
    assert format_word(u.permuted((1, 0))) == "(110*001*)"
    assert len(u.repeated(2)) == 16
    assert u.repeated(2).chars == u.chars * 2


def test_covers_positions_are_one_based():
    u = word(U4)
    assert covers(u, parse_word("1111", 2)) == [3]
    assert covers(u, parse_word("0010", 2)) == [1]
    assert covers(parse_word("001*", 2), parse_word("0011", 2)) == [1]
    assert covers(parse_word("001*", 2), parse_word("0111", 2)) == []


def test_windows_multiset():
    u = word(U4)
    ws = windows(u, 4)
    assert len(ws) == 8
    assert all(len(w) == 4 and not w.cyclic for w in ws)
    lin = parse_word("0011", 2)
    assert [w.chars for w in windows(lin, 2)] == [(0, 0), (0, 1), (1, 1)]


def test_frames_and_offsets():
    u = word(U4)
    assert str(frame_of(u)) == "(...*...*)"
    assert diamond_offsets(u, 4) == {0}
    assert str(window_frame(u, 4)) == "...*"
    m, pane = frame_period(u, 4)
    assert m == 4 and str(pane) == "...*"


def test_frame_period_finds_shorter_pane():
    u = parse_word("(0*1*0*1*)", 2)
    m, pane = frame_period(u, 4)
    assert m == 2 and str(pane) == ".*"


def test_apply_symmetry_ops():
    u = word(U4)
    assert apply_symmetry(u, Rotate(3)) == u.rotated(3)
    assert apply_symmetry(u, Reverse()) == u.reversed_()
    assert apply_symmetry(u, Complement()) == u.complemented()
    assert apply_symmetry(u, Permute((1, 0))) == u.permuted((1, 0))
    both = apply_symmetries(u, [Reverse(), Rotate(1)])
    assert both == u.reversed_().rotated(1)


@given(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=24))
def test_least_rotation_matches_naive(seq):
    seq = tuple(seq)
    i = least_rotation_index(seq)
    rotations = [seq[r:] + seq[:r] for r in range(len(seq))]
    assert seq[i:] + seq[:i] == min(rotations)


@given(
    st.lists(
        st.integers(min_value=-1, max_value=2), min_size=1, max_size=16
    ).filter(lambda s: any(c >= 0 for c in s)),
    st.integers(min_value=0, max_value=15),
)
def test_canonical_rotation_is_rotation_invariant(chars, r):
    u = PWord(tuple(chars), 3, cyclic=True)
    canon = canonical_rotation(u)
    assert canonical_rotation(u.rotated(r)) == canon
    assert canonical_rotation(canon) == canon
    assert canon.chars in {u.rotated(k).chars for k in range(len(u))}
