import itertools

import pytest

from upcycles import (
    CapExceeded,
    Frame,
    curtain_audit,
    curtain_threshold,
    feasibility,
    feasibility_table,
    is_curtained,
    is_k_curtained,
)
from upcycles.nonexistence import _curtain_threshold_naive

from fixtures import BINARY_N8, CURTAIN_THRESHOLDS, FEASIBLE_ROWS, U4, word


def frame(text: str) -> Frame:
    return Frame(tuple(ch == "*" for ch in text))


def test_is_k_curtained_examples():
    assert is_k_curtained(frame("*..."), 1)
    assert not is_k_curtained(frame(".*.."), 1)
    assert is_k_curtained(frame(".**."), 2)
    assert not is_k_curtained(frame(".**."), 1)
    assert is_k_curtained(frame("****"), 4)
    assert not is_k_curtained(frame("...."), 1)
    with pytest.raises(ValueError):
        is_k_curtained(frame("...."), 0)
    with pytest.raises(ValueError):
        is_k_curtained(frame("...."), 5)


def test_is_curtained_returns_least_k():
    assert is_curtained(frame("*...")) == 1
    assert is_curtained(frame(".**.")) == 2
    assert is_curtained(frame(".*..")) is None
    assert is_curtained(frame("....")) is None
    assert is_curtained(frame("*")) == 1


def test_thresholds_match_frozen_values_up_to_cap():
    assert [curtain_threshold(n) for n in range(1, 27)] == list(
        CURTAIN_THRESHOLDS[:26]
    )


def test_thresholds_against_naive_scan():
    for n in range(1, 17):
        assert curtain_threshold(n) == _curtain_threshold_naive(n)


def test_thresholds_against_definition():
    # D(n) = 1 + max diamonds over non-curtained frames, straight from the
    # definition, with an exhaustive sweep of all 2^n frames
    for n in range(1, 13):
        best = max(
            sum(marks)
            for marks in itertools.product((False, True), repeat=n)
            if is_curtained(Frame(marks)) is None
        )
        assert curtain_threshold(n) == best + 1


def test_threshold_bounds_and_cap():
    with pytest.raises(ValueError):
        curtain_threshold(0)
    with pytest.raises(CapExceeded):
        curtain_threshold(27)


def test_remove_pane_lemma_spot_checks():
    for text, s in [(".*..", 3), ("*.*", 2), ("..*", 4)]:
        p = frame(text)
        f = p.repeated(s)
        for k in range(1, len(text) + 1):
            assert is_k_curtained(p, k) == is_k_curtained(f, k)


def test_curtain_audit_of_the_small_upcycle():
    audit = curtain_audit(word(U4), 4)
    assert audit.passed
    assert audit.zero_window_start == 7
    assert str(audit.zero_window_frame) == ".*.."
    assert audit.zero_window_curtain is None
    assert str(audit.pane) == "...*"
    assert audit.clear_pane_shift == 1
    assert audit.to_lines() == [
        "zero-window\tposition 7\t.*..\tnot curtained",
        "pane\t...*\tshift 1 not curtained",
        "audit\tpass",
    ]


def test_curtain_audit_passes_on_all_fixtures():
    for text in BINARY_N8:
        assert curtain_audit(word(text), 8).passed


def test_feasibility_known_parameters():
    v = feasibility(2, 4, 1)
    assert v.status == "known-to-exist"
    assert v.admissible_periods == (4,)
    assert v.reasons == ()
    assert v.to_line() == "known-to-exist\ta=2 n=4 d=1\tperiods=4\t"
    assert feasibility(2, 8, 1).status == "known-to-exist"


def test_feasibility_rules_out_ternary_n6_entirely():
    for d in range(1, 6):
        v = feasibility(3, 6, d)
        assert v.status == "ruled-out"
        rules = {r.rule for r in v.reasons}
        assert "frame-period" in rules
        witness = next(r for r in v.reasons if r.rule == "frame-period").witness
        assert witness == "gcd(a^(n-d), n)=3 admits none"


def test_feasibility_quinary_n10_leaves_only_d2():
    survivors = {
        d for d in range(1, 10) if feasibility(5, 10, d).status != "ruled-out"
    }
    assert survivors == {2}
    v = feasibility(5, 10, 2)
    assert v.status == "open" and v.admissible_periods == (5,)


def test_feasibility_short_and_coprime_rules():
    v = feasibility(2, 3, 1)
    assert v.status == "ruled-out"
    assert {r.rule for r in v.reasons} >= {"short-length", "coprime-alphabet"}
    v = feasibility(3, 4, 1)
    assert "coprime-alphabet" in {r.rule for r in v.reasons}
    assert "short-length" not in {r.rule for r in v.reasons}


def test_feasibility_argument_errors():
    with pytest.raises(ValueError):
        feasibility(1, 4, 1)
    with pytest.raises(ValueError):
        feasibility(2, 4, 0)
    with pytest.raises(ValueError):
        feasibility(2, 4, 4)


def test_feasibility_table_matches_frozen_rows():
    rows = feasibility_table(4, 12)
    got: dict[int, list[tuple[str, tuple[int, ...]]]] = {}
    for row in rows:
        got.setdefault(row.n, []).append((row.alphabet_class, row.d_values))
    assert got == FEASIBLE_ROWS


def test_feasibility_table_row_lines():
    lines = [row.to_line() for row in feasibility_table(4, 6)]
    assert lines == [
        "4\t2k\t1\tdiamondicity-growth; frame-period",
        "5\t5k\t1\tframe-period",
        "6\t6k\t1 <= d <= 2\tframe-period",
    ]


def test_feasibility_table_empty_row_renders_dashes():
    rows = feasibility_table(3, 3)
    assert len(rows) == 1
    assert rows[0].to_line() == "3\t-\t-\t-"
