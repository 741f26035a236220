"""Growing the alphabet of an upcycle.

Given an (a, n, d) upcycle u and a multiplier k, write k^(n-d) copies of u,
fill the non-diamond positions of a diamond-padded carrier v with the
letters of a (k, n-d, (n-d)*a^(n-d)/n)-perfect necklace, and emit
w = a*v + u (diamonds stay diamonds).  The result is an (ak, n, d) upcycle.
Works for De Bruijn bases too (d = 0).
"""

from __future__ import annotations

from .words import DIAMOND, PWord
from .necklaces import Necklace, ZerosPrefix, euler_necklace, lex_necklace, stretch_necklace
from .verify import UpcycleParams, verify_perfect_necklace, verify_upcycle


def filler_params(params: UpcycleParams, k: int) -> tuple[int, int, int]:
    """(alphabet, word length, phase count) of the necklace a multiplier needs."""
    a, n, d = params.a, params.n, params.d
    total = (n - d) * a ** (n - d)
    if total % n:
        raise ValueError(f"(n-d)*a^(n-d) = {total} is not divisible by n = {n}")
    return k, n - d, total // n


def alphabet_multiply(base: PWord, n: int, k: int, filler: Necklace) -> PWord:
    """The (ak, n, d) upcycle a*v + u^(k^(n-d)) with v padded from filler."""
    if k < 1:
        raise ValueError("multiplier must be positive")
    rep = verify_upcycle(base, n)
    if not rep.valid:
        raise ValueError(f"base is not an upcycle: {rep.to_line()}")
    a, d = rep.params.a, rep.params.d
    want = filler_params(rep.params, k)
    if (filler.a, filler.n, filler.t) != want:
        raise ValueError(
            f"filler must be a {want} perfect necklace, got ({filler.a},{filler.n},{filler.t})"
        )
    if not verify_perfect_necklace(filler.word, filler.a, filler.n, filler.t):
        raise ValueError("filler failed re-verification")
    carrier = base.repeated(k ** (n - d))
    letters = iter(filler.word.chars)
    out = []
    for c in carrier.chars:
        if c == DIAMOND:
            out.append(DIAMOND)
        else:
            out.append(a * next(letters) + c)
    product = PWord(tuple(out), a * k, True)
    check = verify_upcycle(product, n)
    if not check.valid or check.params.d != d:
        raise RuntimeError(f"multiplier output failed verification: {check.to_line()}")
    return product


def alphabet_multiply_lex(base: PWord, n: int, k: int) -> PWord:
    """Multiplier with the stretched lexicographic filler; needs n | a^(n-d)."""
    rep = verify_upcycle(base, n)
    if not rep.valid:
        raise ValueError(f"base is not an upcycle: {rep.to_line()}")
    a, d = rep.params.a, rep.params.d
    if a ** (n - d) % n:
        raise ValueError(f"lexicographic filler needs n | a^(n-d); {n} does not divide {a}^{n - d}")
    filler = stretch_necklace(lex_necklace(k, n - d), a ** (n - d) // n)
    return alphabet_multiply(base, n, k, filler)


def onion(base: PWord, n: int, multipliers: tuple[int, ...]) -> list[PWord]:
    """Iterated multiplication where each stage starts with the previous one.

    Zeros-prefix Euler fillers keep every stage a contiguous initial
    substring of the next; the returned list starts with the base.
    """
    stages = [base]
    current = base
    for k in multipliers:
        rep = verify_upcycle(current, n)
        if not rep.valid:
            raise ValueError(f"stage is not an upcycle: {rep.to_line()}")
        fa, fn, ft = filler_params(rep.params, k)
        filler = euler_necklace(fa, fn, ft, ZerosPrefix())
        nxt = alphabet_multiply(current, n, k, filler)
        if nxt.chars[: len(current)] != current.chars:
            raise RuntimeError("onion stage does not contain its predecessor as a prefix")
        stages.append(nxt)
        current = nxt
    return stages
