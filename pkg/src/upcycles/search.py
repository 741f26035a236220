"""Backtracking discovery of upcycles and the cross-join rearrangement.

The search fixes the diamond positions up front (one offset class per
pane), fills letters left to right, and tracks covered words in a flat
table: a window is finalized the moment its last character is decided,
and any double cover prunes the branch.  Since length * a^d equals a^n,
a completed word with no double cover is automatically an exact cover;
the emitted word is still certified independently.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator

from .words import DIAMOND, CapExceeded, PWord, canonical_rotation, windows
from .verify import verify_upcycle, verify_upword
from .nonexistence import feasibility

SEARCH_CAP = 1 << 20

UNSET = -2


@dataclass(frozen=True)
class SearchSpec:
    a: int
    n: int
    d: int
    diamond_offsets: frozenset[int] | None = None  # residues of 1-based positions mod n
    seed_prefix: PWord | None = None
    limit: int | None = None
    exhaustive: bool = False
    threads: int = 1

    def offsets(self) -> frozenset[int]:
        if self.diamond_offsets is not None:
            if len(self.diamond_offsets) != self.d:
                raise ValueError(
                    f"need exactly d={self.d} diamond offsets, got {len(self.diamond_offsets)}"
                )
            if any(not 0 <= r < self.n for r in self.diamond_offsets):
                raise ValueError("diamond offsets are residues mod n, so lie in 0..n-1")
            return frozenset(self.diamond_offsets)
        if self.d == 1:
            return frozenset({0})  # diamond last in the first window
        raise ValueError("diamond offsets must be given explicitly when d > 1")


class _State:
    """Mutable DFS state: characters so far plus the coverage table."""

    def __init__(self, spec: SearchSpec, length: int):
        offs = spec.offsets()
        self.spec = spec
        self.length = length
        self.is_diamond = [(i + 1) % spec.n in offs for i in range(length)]
        self.chars: list[int] = [
            DIAMOND if self.is_diamond[i] else UNSET for i in range(length)
        ]
        self.covered = bytearray(spec.a**spec.n)
        self.marks: list[list[int]] = []  # marked indices per window, for undo
        # next non-diamond position at or after i; length when none remain
        self.next_letter = [length] * (length + 1)
        for i in range(length - 1, -1, -1):
            self.next_letter[i] = i if not self.is_diamond[i] else self.next_letter[i + 1]

    def window_indices(self, s: int) -> list[int]:
        """Covered-word indices of the window at s; letters must be decided."""
        a, n = self.spec.a, self.spec.n
        base = 0
        slots: list[int] = []
        for t in range(n):
            c = self.chars[(s + t) % self.length]
            base *= a
            if c == DIAMOND:
                slots.append(n - 1 - t)
            else:
                base += c
        out = [base]
        for weight in (a**e for e in slots):
            out = [x + letter * weight for x in out for letter in range(1, a)] + out
        return out

    def cover_window(self, s: int) -> bool:
        """Mark the window at s; False and no change when it double-covers."""
        idx = self.window_indices(s)
        for x in idx:
            if self.covered[x]:
                return False
        for x in idx:
            self.covered[x] = 1
        self.marks.append(idx)
        return True

    def uncover_last(self, count: int) -> None:
        for _ in range(count):
            for x in self.marks.pop():
                self.covered[x] = 0

    def decided_windows(self, i: int) -> range:
        """Linear window starts that become fully decided when i is placed."""
        n = self.spec.n
        hi = min(self.length - n, self.next_letter[i + 1] - n)
        lo = max(0, i - n + 1)
        return range(lo, hi + 1)

    def window_key(self, s: int) -> tuple[int, ...]:
        a, n = self.spec.a, self.spec.n
        return tuple(
            a if self.chars[(s + t) % self.length] == DIAMOND
            else self.chars[(s + t) % self.length]
            for t in range(n)
        )


def _apply_seed(state: _State, seed: PWord) -> None:
    if len(seed) > state.length:
        raise ValueError("seed is longer than the word being searched")
    if seed.alphabet != state.spec.a:
        raise ValueError("seed alphabet does not match the search alphabet")
    for i, c in enumerate(seed.chars):
        if state.is_diamond[i] != (c == DIAMOND):
            raise ValueError(
                f"seed character at position {i + 1} conflicts with the diamond layout"
            )
        if c != DIAMOND:
            state.chars[i] = c


def search_upcycles(spec: SearchSpec) -> Iterator[PWord]:
    """Stream upcycles for the given SearchSpec, deduplicated by rotation.

    Ruled-out parameters yield an empty stream.  Without a seed, the
    stream holds one representative per rotation class; the kept rotation
    is the one whose first window is smallest among the starts aligned
    with the diamond layout.
    """
    a, n, d = spec.a, spec.n, spec.d
    if feasibility(a, n, d).status == "ruled-out":
        return
    length = a ** (n - d)
    if length > SEARCH_CAP:
        raise CapExceeded(f"search is capped at a^(n-d) <= 2^20, got {a}^{n - d}")
    if length % n:
        raise ValueError("fixed diamond offsets need n | a^(n-d)")
    if spec.threads > 1:
        yield from _threaded_search(spec, length)
        return

    state = _State(spec, length)
    if spec.seed_prefix is not None:
        _apply_seed(state, spec.seed_prefix)
    free = [i for i in range(length) if state.chars[i] == UNSET]
    limit = spec.limit
    if limit is None and not spec.exhaustive:
        limit = 1
    break_symmetry = spec.seed_prefix is None
    seen: set[tuple[int, ...]] = set()
    emitted = 0

    def emit_candidate() -> Iterator[PWord]:
        nonlocal emitted
        word = PWord(tuple(state.chars), a, cyclic=True)
        rep = verify_upcycle(word, n)
        if rep.valid and (rep.params.a, rep.params.n, rep.params.d) == (a, n, d):
            canon = canonical_rotation(word)
            if canon.chars not in seen:
                seen.add(canon.chars)
                emitted += 1
                yield canon if break_symmetry else word

    def seam_and_emit() -> Iterator[PWord]:
        done = 0
        ok = True
        for s in range(length - n + 1, length):
            if not state.cover_window(s):
                ok = False
                break
            done += 1
        if ok:
            yield from emit_candidate()
        state.uncover_last(done)

    def dfs(k: int) -> Iterator[PWord]:
        if limit is not None and emitted >= limit:
            return
        if k == len(free):
            yield from seam_and_emit()
            return
        i = free[k]
        for c in range(a):
            state.chars[i] = c
            placed = 0
            ok = True
            for s in state.decided_windows(i):
                if not state.cover_window(s):
                    ok = False
                    break
                placed += 1
                if (
                    break_symmetry
                    and s
                    and s % n == 0
                    and state.window_key(s) < state.window_key(0)
                ):
                    ok = False
                    break
            if ok:
                yield from dfs(k + 1)
            state.uncover_last(placed)
            state.chars[i] = UNSET
            if limit is not None and emitted >= limit:
                return

    # Windows fully decided by the seed and the fixed diamonds come first.
    pre_hi = (free[0] if free else length) - n
    pre_done = 0
    pre_ok = True
    for s in range(0, pre_hi + 1):
        if not state.cover_window(s):
            pre_ok = False
            break
        pre_done += 1
    if pre_ok:
        if free:
            yield from dfs(0)
        else:
            yield from seam_and_emit()
    state.uncover_last(pre_done)


def _threaded_search(spec: SearchSpec, length: int) -> Iterator[PWord]:
    """Fork on the first undecided letter; branch results merge in order."""
    probe = _State(spec, length)
    if spec.seed_prefix is not None:
        _apply_seed(probe, spec.seed_prefix)
    free = [i for i in range(length) if probe.chars[i] == UNSET]
    if not free:
        yield from search_upcycles(replace(spec, threads=1))
        return
    fork = free[0]
    branches = []
    for c in range(spec.a):
        chars = list(probe.chars[: fork + 1])
        chars[fork] = c
        seed = PWord(tuple(chars), spec.a, cyclic=False)
        branches.append(replace(spec, seed_prefix=seed, threads=1, limit=spec.limit))
    with ThreadPoolExecutor(max_workers=spec.threads) as pool:
        results = list(pool.map(lambda s: list(search_upcycles(s)), branches))
    limit = spec.limit
    if limit is None and not spec.exhaustive:
        limit = 1
    seen: set[tuple[int, ...]] = set()
    emitted = 0
    for got in results:
        for word in got:
            canon = canonical_rotation(word)
            if canon.chars in seen:
                continue
            seen.add(canon.chars)
            yield canon if spec.seed_prefix is None else word
            emitted += 1
            if limit is not None and emitted >= limit:
                return


def cross_join(
    w: PWord,
    x: PWord,
    y: PWord,
    i_x: int,
    i_y: int,
    j_x: int,
    j_y: int,
) -> PWord:
    """Swap the stretches between two repeated (n-1)-windows x and y.

    Positions are 1-based; x must occur at i_x and j_x, y at i_y and j_y,
    with i_x < i_y < j_x < j_y.  The result contains exactly the same
    multiset of n-windows as the input and passes the same verifier.
    """
    if len(x) != len(y):
        raise ValueError("the two pivot words must have equal length")
    n = len(x) + 1
    if not 1 <= i_x < i_y < j_x < j_y <= len(w):
        raise ValueError("positions must satisfy 1 <= i_x < i_y < j_x < j_y <= |w|")
    for word, pos in ((x, i_x), (y, i_y), (x, j_x), (y, j_y)):
        if word.alphabet != w.alphabet:
            raise ValueError("pivot alphabet does not match the host word")
        if w.window(pos - 1, n - 1) != word.chars:
            raise ValueError(f"no occurrence at position {pos}")
    a0, b0, c0, d0 = i_x - 1, i_y - 1, j_x - 1, j_y - 1
    u = w.chars
    out = u[:a0] + u[c0:d0] + u[b0:c0] + u[a0:b0] + u[d0:]
    result = PWord(out, w.alphabet, cyclic=w.cyclic)
    if Counter(windows(w, n)) != Counter(windows(result, n)):
        raise RuntimeError("cross join changed the window multiset")  # pragma: no cover
    before = verify_upcycle(w, n) if w.cyclic else verify_upword(w, n)
    if before.valid:
        after = verify_upcycle(result, n) if result.cyclic else verify_upword(result, n)
        if not after.valid:
            raise RuntimeError("cross join broke the cover")  # pragma: no cover
    return result


def find_cross_join_pairs(w: PWord, n: int) -> list[tuple[PWord, PWord, int, int, int, int]]:
    """Interleaved repeated (n-1)-windows usable by cross_join, 1-based."""
    sites: dict[tuple[int, ...], list[int]] = {}
    count = len(w) if w.cyclic else len(w) - (n - 1) + 1
    for i in range(count):
        sites.setdefault(w.window(i, n - 1), []).append(i + 1)
    repeated = {k: v for k, v in sites.items() if len(v) >= 2}
    out = []
    for xk, xv in repeated.items():
        for yk, yv in repeated.items():
            if xk == yk:
                continue
            for i_x, j_x in itertools.combinations(xv, 2):
                for i_y, j_y in itertools.combinations(yv, 2):
                    if i_x < i_y < j_x < j_y:
                        out.append(
                            (
                                PWord(xk, w.alphabet, cyclic=False),
                                PWord(yk, w.alphabet, cyclic=False),
                                i_x,
                                i_y,
                                j_x,
                                j_y,
                            )
                        )
    return sorted(out, key=lambda t: (t[2], t[3], t[4], t[5], t[0].chars, t[1].chars))
