"""Lifting upcycles toward De Bruijn cycles and folding them back.

A lift of an (a, n, d) upcycle u with step delta replaces an n-periodic
subset of the diamonds of u^(a^delta) with letters read from an
(a, delta, delta*a^(n-d)/n)-perfect necklace, producing an (a, n, d-delta)
upcycle.  Folding is the inverse: collapse a^delta congruent copies back
into one window pattern, reintroducing diamonds at chosen offsets.

Offsets are residues of 1-based positions mod n: position j holds a
selected diamond exactly when j mod n lies in the offset set.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .words import DIAMOND, CapExceeded, PWord, canonical_rotation, covers, diamond_offsets
from .necklaces import Necklace
from .verify import verify_perfect_necklace, verify_upcycle

LIFT_ENUMERATION_CAP = 1 << 20


def lift_filler_params(a: int, n: int, d: int, delta: int) -> tuple[int, int, int]:
    """(alphabet, word length, phase count) of the necklace a lift needs."""
    if not 1 <= delta <= d:
        raise ValueError(f"lift step must satisfy 1 <= delta <= d, got {delta}")
    total = delta * a ** (n - d)
    if total % n:
        raise ValueError(f"delta*a^(n-d) = {total} is not divisible by n = {n}")
    return a, delta, total // n


def lift(base: PWord, n: int, offsets: set[int], filler: Necklace) -> PWord:
    """Fill the selected diamonds of base^(a^delta) from a perfect necklace."""
    rep = verify_upcycle(base, n)
    if not rep.valid:
        raise ValueError(f"base is not an upcycle: {rep.to_line()}")
    a, d = rep.params.a, rep.params.d
    all_offsets = diamond_offsets(base, n)
    chosen = set(offsets)
    if not chosen or not chosen <= all_offsets:
        raise ValueError(f"offsets {sorted(chosen)} must be a nonempty subset of {sorted(all_offsets)}")
    delta = len(chosen)
    want = lift_filler_params(a, n, d, delta)
    if (filler.a, filler.n, filler.t) != want:
        raise ValueError(
            f"filler must be a {want} perfect necklace, got ({filler.a},{filler.n},{filler.t})"
        )
    if not verify_perfect_necklace(filler.word, filler.a, filler.n, filler.t):
        raise ValueError("filler failed re-verification")
    carrier = base.repeated(a**delta)
    letters = iter(filler.word.chars)
    out = list(carrier.chars)
    for j0, c in enumerate(out):
        if c == DIAMOND and (j0 + 1) % n in chosen:
            out[j0] = next(letters)
    lifted = PWord(tuple(out), a, True)
    check = verify_upcycle(lifted, n)
    if not check.valid or check.params.d != d - delta:
        raise RuntimeError(f"lift output failed verification: {check.to_line()}")
    return lifted


def is_lift(upper: PWord, lower: PWord, n: int) -> bool:
    """True when upper is covered by lower^(a^delta) at some rotation.

    delta is the diamondicity drop and must be positive; a word is not a
    lift of itself.
    """
    rep_up = verify_upcycle(upper, n)
    rep_lo = verify_upcycle(lower, n)
    if not rep_up.valid or not rep_lo.valid:
        raise ValueError("is_lift expects two verified upcycles")
    if rep_up.params.a != rep_lo.params.a:
        return False
    delta = rep_lo.params.d - rep_up.params.d
    if delta <= 0:
        return False
    carrier = lower.repeated(rep_lo.params.a**delta)
    return bool(covers(carrier, upper))


def try_fold(upper: PWord, n: int, delta: int, offsets: set[int]) -> PWord | None:
    """The upcycle whose lift upper is, for the given step and diamond offsets.

    Positions of the candidate congruent mod its length must agree letterwise
    outside the offset residues; returns None when they clash or when the
    collapsed word fails verification.
    """
    rep = verify_upcycle(upper, n)
    if not rep.valid:
        raise ValueError(f"fold input is not an upcycle: {rep.to_line()}")
    a, d = rep.params.a, rep.params.d
    if delta < 1:
        raise ValueError("fold step must be positive")
    length = len(upper)
    if length % a**delta:
        return None
    folded_len = length // a**delta
    chosen = {o % n for o in offsets}
    if len(chosen) != delta:
        raise ValueError(f"fold with step {delta} needs {delta} distinct offsets")
    out: list[int] = []
    for j0 in range(folded_len):
        if (j0 + 1) % n in chosen:
            out.append(DIAMOND)
            continue
        seen = {upper.chars[j0 + m * folded_len] for m in range(a**delta)}
        if len(seen) != 1 or DIAMOND in seen:
            return None
        out.append(seen.pop())
    folded = PWord(tuple(out), a, True)
    check = verify_upcycle(folded, n)
    if not check.valid or check.params.d != d + delta:
        return None
    return folded


def iter_debruijn_lifts(base: PWord, n: int, bound: int = LIFT_ENUMERATION_CAP) -> Iterator[PWord]:
    """Distinct (up to rotation) De Bruijn lifts of a diamondicity-1 upcycle.

    A (a, 1, t)-perfect necklace is exactly a choice of t letter
    permutations, one per phase column, so the necklace space has size
    (a!)^t; enumeration refuses beyond `bound`.  Lifts are yielded in
    canonical rotation, deduplicated, in filler lexicographic order.
    """
    rep = verify_upcycle(base, n)
    if not rep.valid:
        raise ValueError(f"base is not an upcycle: {rep.to_line()}")
    a, d = rep.params.a, rep.params.d
    if d == 0:
        yield canonical_rotation(base)
        return
    if d != 1:
        raise CapExceeded(
            "exhaustive lift enumeration is implemented for diamondicity 1; "
            "lift through a chosen necklace instead"
        )
    _, _, t = lift_filler_params(a, n, d, 1)
    perms = list(itertools.permutations(range(a)))
    if len(perms) ** t > bound:
        raise CapExceeded(f"necklace space (a!)^t = {len(perms)}^{t} exceeds bound {bound}")
    carrier = list(base.repeated(a).chars)
    slots = [j for j, c in enumerate(carrier) if c == DIAMOND]
    seen: set[tuple[int, ...]] = set()
    for cols in itertools.product(perms, repeat=t):
        filled = carrier[:]
        for m, j in enumerate(slots):
            filled[j] = cols[m % t][m // t]
        lifted = canonical_rotation(PWord(tuple(filled), a, True))
        if lifted.chars in seen:
            continue
        seen.add(lifted.chars)
        check = verify_upcycle(lifted, n)
        if not check.valid or check.params.d != 0:  # pragma: no cover
            raise RuntimeError(f"enumerated lift failed verification: {check.to_line()}")
        yield lifted


def enumerate_debruijn_lifts(base: PWord, n: int, bound: int = LIFT_ENUMERATION_CAP) -> list[PWord]:
    """All distinct De Bruijn lifts, sorted by their canonical character tuple."""
    return sorted(iter_debruijn_lifts(base, n, bound), key=lambda w: w.chars)
