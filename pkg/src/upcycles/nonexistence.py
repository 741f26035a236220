"""Limits on which (a, n, d) parameter triples can carry an upcycle.

A frame is k-curtained when every one of its first k positions, or the
position n-k later, holds a diamond.  Equivalently, no two solids sit at
distance n-k.  A nontrivial upcycle must have a non-curtained shift of
its window frame, and the window covering a constant word is itself not
curtained; counting how many diamonds force curtaining yields a threshold
D(n) that caps diamondicity.  Combined with divisibility constraints on
the frame period, these rules carve out the feasible parameter table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .words import DIAMOND, CapExceeded, Frame, PWord, frame_period, window_frame

CURTAIN_CAP = 26


def is_k_curtained(f: Frame, k: int) -> bool:
    """Whether positions i and n-k+i never both hold solids, i in 1..k."""
    n = len(f.marks)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    return all(f.marks[i] or f.marks[n - k + i] for i in range(k))


def is_curtained(f: Frame) -> int | None:
    """The least k for which f is k-curtained, or None."""
    for k in range(1, len(f.marks) + 1):
        if is_k_curtained(f, k):
            return k
    return None


def _solid_mask(f: Frame) -> int:
    mask = 0
    for i, is_diamond in enumerate(f.marks):
        if not is_diamond:
            mask |= 1 << i
    return mask


def _mask_curtained(mask: int, n: int) -> bool:
    # k-curtained <=> no solid pair at distance n-k; scan all k
    for k in range(1, n + 1):
        if mask & (mask >> (n - k)) & ((1 << k) - 1) == 0:
            return True
    return False


def _min_gap_complete_size(n: int) -> int:
    """Fewest solids among length-n frames realizing every gap 0..n-1.

    A frame is non-curtained exactly when its solid positions realize
    every gap, so n minus this count is the most diamonds such a frame
    can hold.
    """
    if n == 1:
        return 1
    gaps_needed = n - 1  # gaps 1..n-1; gap 0 holds once any solid exists
    r = 2
    while r * (r - 1) // 2 < gaps_needed:
        r += 1
    while not _gap_complete_exists(n, r):
        r += 1
    return r


def _gap_complete_exists(n: int, r: int) -> bool:
    # solids placed ascending from 0; gap n-1 forces the endpoint n-1,
    # which the full-coverage test enforces on its own
    full = (1 << n) - 2  # gaps 1..n-1 as bits
    total = n - 1

    def dfs(marks: list[int], covered: int) -> bool:
        if covered == full:
            return True
        left = r - len(marks)
        if left == 0:
            return False
        uncovered = total - bin(covered).count("1")
        if uncovered > left * len(marks) + left * (left - 1) // 2:
            return False
        for m in range(marks[-1] + 1, n - left + 1):
            add = covered
            for prev in marks:
                add |= 1 << (m - prev)
            if dfs(marks + [m], add):
                return True
        return False

    return dfs([0], 0)


@lru_cache(maxsize=None)
def curtain_threshold(n: int) -> int:
    """The least D such that every length-n frame with D diamonds is curtained."""
    if n < 1:
        raise ValueError(f"frame length must be positive, got {n}")
    if n > CURTAIN_CAP:
        raise CapExceeded(f"curtain threshold search is capped at n <= {CURTAIN_CAP}")
    return 1 + (n - _min_gap_complete_size(n))


def _curtain_threshold_naive(n: int) -> int:
    """Exhaustive-scan form, used to cross-check the pruned search."""
    most = -1
    for solid in range(1 << n):
        if not _mask_curtained(solid, n):
            most = max(most, n - bin(solid).count("1"))
    return most + 1


@dataclass(frozen=True)
class CurtainAudit:
    """Curtain obstructions checked on a concrete cyclic partial word."""

    zero_window_start: int | None  # 1-based, None when 0^n is not covered
    zero_window_frame: Frame | None
    zero_window_curtain: int | None  # least curtaining k, None when clear
    pane: Frame
    clear_pane_shift: int | None  # least left shift whose pane is not curtained
    passed: bool

    def to_lines(self) -> list[str]:
        lines = []
        if self.zero_window_start is None:
            lines.append("zero-window\tnot covered")
        else:
            verdict = (
                "not curtained"
                if self.zero_window_curtain is None
                else f"{self.zero_window_curtain}-curtained"
            )
            lines.append(
                f"zero-window\tposition {self.zero_window_start}\t"
                f"{self.zero_window_frame}\t{verdict}"
            )
        shift = (
            f"shift {self.clear_pane_shift} not curtained"
            if self.clear_pane_shift is not None
            else "all shifts curtained"
        )
        lines.append(f"pane\t{self.pane}\t{shift}")
        lines.append(f"audit\t{'pass' if self.passed else 'FAIL'}")
        return lines


def curtain_audit(u: PWord, n: int) -> CurtainAudit:
    """Check the curtain obstructions a nontrivial upcycle must clear."""
    if not u.cyclic:
        raise ValueError("audit applies to cyclic words")
    frame = window_frame(u, n)
    zero = (0,) * n
    zero_start = None
    for i in range(len(u)):
        win = u.window(i, n)
        if all(c == DIAMOND or c == 0 for c in win):
            zero_start = i
            break
    zero_frame = None
    zero_curtain = None
    if zero_start is not None:
        zero_frame = Frame(tuple(c == DIAMOND for c in u.window(zero_start, n)), cyclic=False)
        zero_curtain = is_curtained(zero_frame)
    _, pane = frame_period(frame, n)
    m = len(pane.marks)
    clear_shift = None
    for r in range(m):
        shifted = Frame(pane.marks[r:] + pane.marks[:r], cyclic=False)
        if is_curtained(shifted) is None:
            clear_shift = r
            break
    passed = zero_start is not None and zero_curtain is None and clear_shift is not None
    return CurtainAudit(
        None if zero_start is None else zero_start + 1,
        zero_frame,
        zero_curtain,
        pane,
        clear_shift,
        passed,
    )


@dataclass(frozen=True)
class Reason:
    rule: str
    statement: str
    witness: str


@dataclass(frozen=True)
class FeasibilityVerdict:
    a: int
    n: int
    d: int
    status: str  # "ruled-out" | "open" | "known-to-exist"
    reasons: tuple[Reason, ...]
    admissible_periods: tuple[int, ...]

    def to_line(self) -> str:
        why = "; ".join(f"{r.rule}: {r.statement} [{r.witness}]" for r in self.reasons)
        periods = ",".join(str(m) for m in self.admissible_periods) or "-"
        return f"{self.status}\ta={self.a} n={self.n} d={self.d}\tperiods={periods}\t{why}"


def _saturated_gcd(a: int, n: int, e: int) -> int:
    # gcd(a^e, n); exponents beyond bit_length(n) cannot add anything
    return math.gcd(pow(a, min(e, n.bit_length())), n)


@lru_cache(maxsize=None)
def _admissible_periods(n: int, d: int, g: int) -> tuple[int, ...]:
    out = []
    for m in range(4, g + 1):
        if g % m:
            continue
        if d % (n // m):
            continue
        if d * m // n <= curtain_threshold(m) - 1:
            out.append(m)
    return tuple(out)


_KNOWN_EXISTING = ((4, 1), (8, 1))  # (n, d) with even a, witnessed constructively


def feasibility(a: int, n: int, d: int) -> FeasibilityVerdict:
    """Apply every nonexistence rule on file to the triple (a, n, d)."""
    if a < 2:
        raise ValueError(f"alphabet size must be at least 2, got {a}")
    if not 1 <= d < n:
        raise ValueError(f"diamondicity must lie in 1..{n - 1}, got {d}")
    reasons = []
    if n <= 3:
        reasons.append(
            Reason(
                "short-length",
                "no nontrivial upcycle exists for window length at most 3",
                f"n={n}",
            )
        )
    if math.gcd(a, n) == 1:
        reasons.append(
            Reason(
                "coprime-alphabet",
                "a nontrivial upcycle needs gcd(a, n) > 1",
                f"gcd({a},{n})=1",
            )
        )
    if (d * pow(a, n - d - 1, n)) % n:
        reasons.append(
            Reason(
                "letter-count",
                "each letter appears ((n-d)/n)*a^(n-d-1) times, which must be an integer",
                f"n={n} does not divide d*a^(n-d-1)={d}*{a}^{n - d - 1}",
            )
        )
    if (n - d) * (n - d - 1) + 2 <= n:
        reasons.append(
            Reason(
                "diamondicity-growth",
                "d < n - sqrt(n - 7/4) - 1/2 must hold",
                f"(n-d)^2-(n-d)+2={(n - d) * (n - d - 1) + 2} <= n={n}",
            )
        )
    g = _saturated_gcd(a, n, n - d)
    periods = _admissible_periods(n, d, g)
    if not periods:
        reasons.append(
            Reason(
                "frame-period",
                "some m with m | gcd(a^(n-d), n), m >= 4, (n/m) | d and "
                "d <= (D(m)-1)*(n/m) must exist",
                f"gcd(a^(n-d), n)={g} admits none",
            )
        )
    if reasons:
        status = "ruled-out"
    elif (n, d) in _KNOWN_EXISTING and a % 2 == 0:
        status = "known-to-exist"
    else:
        status = "open"
    return FeasibilityVerdict(a, n, d, status, tuple(reasons), periods)


@dataclass(frozen=True)
class FeasibilityRow:
    n: int
    alphabet_class: str  # e.g. "6k" or "5k (2∤k)"; "-" for an empty row
    d_values: tuple[int, ...]
    rules: tuple[str, ...]  # rules that bound the row

    def to_line(self) -> str:
        if not self.d_values:
            return f"{self.n}\t-\t-\t-"
        lo, hi = self.d_values[0], self.d_values[-1]
        span = str(lo) if lo == hi else f"{lo} <= d <= {hi}"
        return f"{self.n}\t{self.alphabet_class}\t{span}\t{'; '.join(self.rules)}"


def _class_label(values: list[int], limit: int) -> str:
    c = min(values)
    if any(v % c for v in values):
        return "{" + ",".join(str(v) for v in values) + "}"
    present = {v // c for v in values}
    everything = set(range(1, limit // c + 1))
    missing = everything - present
    if not missing:
        return f"{c}k"
    for p in range(2, limit // c + 1):
        if missing == {k for k in everything if k % p == 0}:
            return f"{c}k ({p}∤k)"
    return "{" + ",".join(str(v) for v in values) + "}"


def feasibility_table(n_lo: int, n_hi: int) -> list[FeasibilityRow]:
    """Surviving (alphabet class, d range) pairs per n, via representatives.

    Alphabet classes are reconstructed from every a up to twice
    lcm(1..n); the rules only see a through divisibility by factors of
    n, so that range exhibits each class at least twice.
    """
    rows: list[FeasibilityRow] = []
    for n in range(n_lo, n_hi + 1):
        limit = 2 * math.lcm(*range(1, n + 1))
        by_dset: dict[frozenset[int], list[int]] = {}
        for a in range(2, limit + 1):
            good = frozenset(
                d for d in range(1, n) if feasibility(a, n, d).status != "ruled-out"
            )
            if good:
                by_dset.setdefault(good, []).append(a)
        if not by_dset:
            rows.append(FeasibilityRow(n, "-", (), ()))
            continue
        entries = sorted(by_dset.items(), key=lambda kv: (-len(kv[0]), min(kv[1])))
        for dset, alphas in entries:
            d_values = tuple(sorted(dset))
            assert d_values == tuple(range(d_values[0], d_values[-1] + 1))
            rep = min(alphas)
            beyond = feasibility(rep, n, d_values[-1] + 1) if d_values[-1] + 1 < n else None
            rules = tuple(r.rule for r in beyond.reasons) if beyond else ()
            rows.append(FeasibilityRow(n, _class_label(alphas, limit), d_values, rules))
    return rows
