"""Coverage verification for upcycles, upwords, and perfect necklaces.

An upcycle for word length n is a cyclic partial word covering every word
of A^n exactly once; an upword is the linear analogue.  A perfect necklace
with parameters (a, n, t) is a cyclic total word of length t*a^n whose
n-windows starting at positions congruent to j (mod t) enumerate A^n once,
for every j.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .words import (
    DIAMOND,
    CapExceeded,
    PWord,
    Permute,
    Reverse,
    Rotate,
    SymmetryOp,
    format_word,
)

COVERAGE_CAP = 1 << 24


@dataclass(frozen=True)
class UpcycleParams:
    a: int
    n: int
    d: int | None  # None for upwords, whose diamonds need not be periodic


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    params: UpcycleParams | None = None
    trivial: bool = False
    reason: str | None = None
    witness: str | None = None

    def to_line(self) -> str:
        if self.valid:
            p = self.params
            if p is None:
                return "VALID"
            d = "-" if p.d is None else p.d
            return f"VALID a={p.a} n={p.n} d={d}"
        line = f"INVALID reason={self.reason}"
        if self.witness is not None:
            line += f" witness={self.witness}"
        return line


def diamondicity(u: PWord, n: int) -> int:
    """Diamonds per n-window of a cyclic word with n-periodic diamonds.

    Raises ValueError (with a 1-based witness position) when the diamond
    positions are not n-periodic.
    """
    if not u.cyclic:
        raise ValueError("diamondicity is defined for cyclic words")
    if n < 1:
        raise ValueError("window length must be positive")
    length = len(u)
    for i in range(length):
        if (u.chars[i] == DIAMOND) != (u[i + n] == DIAMOND):
            raise ValueError(f"diamonds are not {n}-periodic: witness position {i + 1}")
    return sum(1 for i in range(n) if u[i] == DIAMOND)


def _check_cap(a: int, n: int) -> None:
    if a**n > COVERAGE_CAP:
        raise CapExceeded(f"coverage table a^n = {a}^{n} exceeds cap 2^24")


def _cover_indices(win: tuple[int, ...], a: int) -> list[int]:
    """Indices (base-a values) of all total words covered by one window."""
    slots = [t for t, c in enumerate(win) if c == DIAMOND]
    base = 0
    for c in win:
        base = base * a + (0 if c == DIAMOND else c)
    if not slots:
        return [base]
    n = len(win)
    powers = [a ** (n - 1 - t) for t in slots]
    out = []
    for fill in itertools.product(range(a), repeat=len(slots)):
        out.append(base + sum(v * p for v, p in zip(fill, powers)))
    return out


def _coverage_violation(counts: list[int], a: int, n: int) -> tuple[str, str] | None:
    """First word covered a wrong number of times, as (reason, witness)."""
    for idx, c in enumerate(counts):
        if c != 1:
            digits = []
            v = idx
            for _ in range(n):
                digits.append(v % a)
                v //= a
            word = PWord(tuple(reversed(digits)), a, False)
            reason = "word-not-covered" if c == 0 else "word-covered-multiple-times"
            return reason, f"{format_word(word)}:{c}"
    return None


def verify_upcycle(u: PWord, n: int) -> VerifyReport:
    """Check that the cyclic partial word u covers A^n exactly once each."""
    a = u.alphabet
    if not u.cyclic:
        return VerifyReport(False, reason="not-cyclic")
    _check_cap(a, n)
    try:
        d = diamondicity(u, n)
    except ValueError as e:
        return VerifyReport(False, reason="diamonds-not-periodic", witness=str(e))
    if d > n:  # unreachable: a window holds at most n diamonds
        raise AssertionError
    expected_len = a ** (n - d)
    if len(u) != expected_len:
        return VerifyReport(
            False,
            reason="length-mismatch",
            witness=f"len={len(u)} expected a^(n-d)={expected_len}",
        )
    counts = [0] * (a**n)
    for i in range(len(u)):
        for idx in _cover_indices(u.window(i, n), a):
            counts[idx] += 1
    violation = _coverage_violation(counts, a, n)
    if violation is not None:
        return VerifyReport(False, reason=violation[0], witness=violation[1])
    trivial = len(u) <= n
    return VerifyReport(True, UpcycleParams(a, n, d), trivial=trivial)


def verify_upword(w: PWord, n: int) -> VerifyReport:
    """Check that the linear partial word w covers A^n exactly once each."""
    a = w.alphabet
    if w.cyclic:
        return VerifyReport(False, reason="not-linear")
    _check_cap(a, n)
    if len(w) < n:
        return VerifyReport(False, reason="shorter-than-window")
    counts = [0] * (a**n)
    for i in range(len(w) - n + 1):
        for idx in _cover_indices(w.window(i, n), a):
            counts[idx] += 1
    violation = _coverage_violation(counts, a, n)
    if violation is not None:
        return VerifyReport(False, reason=violation[0], witness=violation[1])
    return VerifyReport(True, UpcycleParams(a, n, None))


def verify_perfect_necklace(v: PWord, a: int, n: int, t: int) -> bool:
    """Check the (a, n, t)-perfect necklace property of a cyclic total word."""
    if not v.cyclic or not v.is_total or v.alphabet != a:
        return False
    _check_cap(a, n)
    if len(v) != t * a**n:
        return False
    full = a**n
    for j in range(t):
        seen = set()
        for i in range(j, len(v), t):
            val = 0
            for c in v.window(i, n):
                val = val * a + c
            if val in seen:
                return False
            seen.add(val)
        if len(seen) != full:
            return False
    return True


def boundary_words(u: PWord) -> Counter:
    """Multiset of maximal diamond-free cyclic runs of u."""
    if not u.cyclic:
        raise ValueError("boundary words are defined for cyclic words")
    if u.is_total:
        raise ValueError("word has no diamonds, so no boundary words")
    if u.diamond_count() == len(u):
        raise ValueError("word has no letters")
    length = len(u)
    runs: Counter = Counter()
    i = 0
    # start scanning just past some diamond so runs never straddle the seam
    while u.chars[i] != DIAMOND:
        i += 1
    scanned = 0
    pos = (i + 1) % length
    current: list[int] = []
    while scanned < length:
        c = u.chars[pos]
        if c == DIAMOND:
            if current:
                runs[tuple(current)] += 1
                current = []
        else:
            current.append(c)
        pos = (pos + 1) % length
        scanned += 1
    if current:
        runs[tuple(current)] += 1
    return runs


def _permutations_for(a: int) -> list[tuple[int, ...]]:
    if a > 5:
        raise CapExceeded("exhaustive letter-permutation search is capped at alphabet size 5")
    return [tuple(p) for p in itertools.permutations(range(a))]


def equivalent_under_symmetry(
    u: PWord,
    v: PWord,
    permutations: list[tuple[int, ...]] | None = None,
) -> list[SymmetryOp] | None:
    """A composition of Reverse/Permute/Rotate mapping u onto v, or None.

    Boundary-word multisets are compared first: they are invariant under
    rotation and transform predictably under reversal and letter
    permutation, so mismatched signatures rule a pair out cheaply.
    """
    if u.alphabet != v.alphabet or u.cyclic != v.cyclic or len(u) != len(v):
        return None
    if not u.cyclic:
        raise ValueError("symmetry equivalence is implemented for cyclic words")
    if permutations is None:
        permutations = _permutations_for(u.alphabet)
    identity = tuple(range(u.alphabet))
    sig_v = boundary_words(v) if not v.is_total else None
    for use_reverse in (False, True):
        base = u.reversed_() if use_reverse else u
        for pi in permutations:
            cand = base.permuted(pi)
            if sig_v is not None:
                sig = Counter(
                    {tuple(pi[c] for c in run): m for run, m in boundary_words(base).items()}
                )
                if sig != sig_v:
                    continue
            for r in range(len(cand)):
                if cand.rotated(r) == v:
                    ops: list[SymmetryOp] = []
                    if use_reverse:
                        ops.append(Reverse())
                    if pi != identity:
                        ops.append(Permute(pi))
                    if r != 0:
                        ops.append(Rotate(r))
                    return ops
    return None
