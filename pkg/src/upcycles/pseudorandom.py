"""Statistical texture of partial cycles.

Expected multiplicity treats each diamond as a uniform random letter: a
window with q diamonds that covers w contributes 1/a^q.  Balance and run
counts are read off that measure.  Autocorrelation works over a finite
field F_{p^k} and keeps values exactly, as integer count vectors over the
p-th roots of unity, so the comparison with -1 is an integer condition.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .words import DIAMOND, CapExceeded, PWord
from .verify import COVERAGE_CAP, verify_upcycle

PsdWitness = tuple[int, tuple[int, ...], Fraction, Fraction]  # (k, word, got, wanted)


def _check_total(w: Sequence[int]) -> None:
    if any(c == DIAMOND for c in w):
        raise ValueError("expected a total word, got a diamond")


def _window_starts(u: PWord, k: int) -> range:
    if k > len(u):
        raise ValueError(f"window length {k} exceeds |u| = {len(u)}")
    return range(len(u)) if u.cyclic else range(len(u) - k + 1)


def window_class_counts(u: PWord, w: Sequence[int]) -> dict[int, int]:
    """Map q to the number of |w|-windows of u covering w with q diamonds."""
    _check_total(w)
    k = len(w)
    counts: Counter[int] = Counter()
    for i in _window_starts(u, k):
        win = u.window(i, k)
        q = 0
        for c, target in zip(win, w):
            if c == DIAMOND:
                q += 1
            elif c != target:
                break
        else:
            counts[q] += 1
    return dict(counts)


def expected_multiplicity(u: PWord, w: Sequence[int] | PWord) -> Fraction:
    """Sum of 1/a^q over the windows of u that cover w with q diamonds."""
    if isinstance(w, PWord):
        if w.alphabet != u.alphabet:
            raise ValueError(f"alphabet mismatch: {u.alphabet} vs {w.alphabet}")
        w = w.chars
    else:
        w = tuple(w)
        if any(not (0 <= c < u.alphabet) for c in w):
            raise ValueError("letter out of range for the cycle's alphabet")
    a = u.alphabet
    total = Fraction(0)
    for q, cnt in window_class_counts(u, w).items():
        total += Fraction(cnt, a**q)
    return total


def check_psd(u: PWord, n: int) -> tuple[bool, PsdWitness | None]:
    """Whether every v in A^k, k <= n, has expected multiplicity |u|/a^k.

    Returns the verdict and the first counterexample (smallest k, then
    lexicographically smallest v) when one exists.
    """
    a = u.alphabet
    if a**n > COVERAGE_CAP:
        raise CapExceeded(f"distribution check is capped at a^n <= 2^24, got {a}^{n}")
    for k in range(1, n + 1):
        totals: dict[tuple[int, ...], Fraction] = {}
        for i in _window_starts(u, k):
            win = u.window(i, k)
            slots = [t for t, c in enumerate(win) if c == DIAMOND]
            weight = Fraction(1, a ** len(slots))
            for fill in itertools.product(range(a), repeat=len(slots)):
                filled = list(win)
                for t, v in zip(slots, fill):
                    filled[t] = v
                key = tuple(filled)
                totals[key] = totals.get(key, Fraction(0)) + weight
        wanted = Fraction(len(u), a**k)
        for v in itertools.product(range(a), repeat=k):
            got = totals.get(v, Fraction(0))
            if got != wanted:
                return False, (k, v, got, wanted)
    return True, None


def balance(u: PWord) -> tuple[dict[int, int], bool]:
    """Letter counts (diamonds excluded) and whether all letters tie."""
    counts = {letter: 0 for letter in range(u.alphabet)}
    for c in u.chars:
        if c != DIAMOND:
            counts[c] += 1
    values = set(counts.values())
    return counts, len(values) == 1


def run_counts(u: PWord, n: int) -> dict[tuple[int, int], Fraction]:
    """Expected number of length-r runs of each letter, r in 1..n.

    A run count here is the expected multiplicity of the constant word,
    not a count of maximal blocks, so entries may be non-integral.
    """
    return {
        (letter, r): expected_multiplicity(u, (letter,) * r)
        for letter in range(u.alphabet)
        for r in range(1, n + 1)
    }


def check_runs(u: PWord, n: int) -> tuple[dict[tuple[int, int], Fraction], bool]:
    """Run table plus whether every entry equals a^(n-d-r)."""
    rep = verify_upcycle(u, n)
    if not rep.valid:
        raise ValueError(f"run property verdict needs an upcycle: {rep.to_line()}")
    a, d = rep.params.a, rep.params.d
    table = run_counts(u, n)
    ok = all(
        value == Fraction(a ** (n - d), a**r) for (_, r), value in table.items()
    )
    return table, ok


def puncture(w: PWord, n: int) -> PWord:
    """Remove the last zero of the all-zeros window of a De Bruijn cycle.

    The result covers every word of A^n except 0^n exactly once.
    """
    rep = verify_upcycle(w, n)
    if not rep.valid or rep.params.d != 0:
        raise ValueError("puncture needs a De Bruijn cycle (a total upcycle)")
    zero = (0,) * n
    hits = [i for i in range(len(w)) if w.window(i, n) == zero]
    if len(hits) != 1:
        raise RuntimeError("De Bruijn cycle must cover 0^n exactly once")  # pragma: no cover
    drop = (hits[0] + n - 1) % len(w)
    out = PWord(w.chars[:drop] + w.chars[drop + 1 :], w.alphabet, cyclic=True)
    seen = {out.window(i, n) for i in range(len(out))}
    if len(seen) != len(out) or zero in seen:
        raise RuntimeError("punctured cycle failed its cover check")  # pragma: no cover
    return out


def _factor_prime_power(order: int) -> tuple[int, int]:
    if order < 2:
        raise ValueError(f"field order must be at least 2, got {order}")
    p = min(f for f in range(2, order + 1) if order % f == 0)
    k = 0
    rest = order
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"field order {order} is not a prime power")
    return p, k


def _poly_mod(poly: list[int], modulus: Sequence[int], p: int) -> list[int]:
    out = list(poly)
    deg_m = len(modulus) - 1
    for i in range(len(out) - 1, deg_m - 1, -1):
        c = out[i] % p
        if c:
            for j, m in enumerate(modulus):
                out[i - deg_m + j] = (out[i - deg_m + j] - c * m) % p
    return [c % p for c in out[:deg_m]]


def _poly_divides(g: Sequence[int], f: Sequence[int], p: int) -> bool:
    rem = [c % p for c in f]
    deg_g = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    while len(rem) - 1 >= deg_g:
        c = (rem[-1] * inv_lead) % p
        if c:
            shift = len(rem) - len(g)
            for j, gc in enumerate(g):
                rem[shift + j] = (rem[shift + j] - c * gc) % p
        rem.pop()
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
    return all(c == 0 for c in rem)


# Irreducible moduli, ascending coefficients, for the extension orders in scope.
_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (1, 1, 1),
    27: (1, 2, 0, 1),
}


class FiniteField:
    """F_{p^k} with elements indexed 0..p^k-1 as base-p digit polynomials."""

    def __init__(self, p: int, k: int, modulus: Sequence[int]) -> None:
        if any(p % f == 0 for f in range(2, p)):
            raise ValueError(f"{p} is not prime")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] == 0:
            raise ValueError(f"modulus must have degree {k}")
        for deg in range(1, k // 2 + 1):
            for tail in itertools.product(range(p), repeat=deg):
                g = tuple(tail) + (1,)
                if _poly_divides(g, modulus, p):
                    raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus
        self._trace = tuple(self._trace_of(x) for x in range(self.order))

    @classmethod
    def for_order(cls, order: int) -> "FiniteField":
        p, k = _factor_prime_power(order)
        if k == 1:
            return cls(p, 1, (0, 1))
        if order not in _MODULI:
            raise ValueError(f"no modulus on file for field order {order}")
        return cls(p, k, _MODULI[order])

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def _index(self, digits: Sequence[int]) -> int:
        x = 0
        for c in reversed(digits):
            x = x * self.p + c
        return x

    def sub(self, x: int, y: int) -> int:
        dx, dy = self._digits(x), self._digits(y)
        return self._index([(cx - cy) % self.p for cx, cy in zip(dx, dy)])

    def mul(self, x: int, y: int) -> int:
        dx, dy = self._digits(x), self._digits(y)
        prod = [0] * (2 * self.k - 1)
        for i, cx in enumerate(dx):
            if cx:
                for j, cy in enumerate(dy):
                    prod[i + j] = (prod[i + j] + cx * cy) % self.p
        return self._index(_poly_mod(prod, self.modulus, self.p))

    def _pow(self, x: int, e: int) -> int:
        out, base = 1, x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def _trace_of(self, x: int) -> int:
        acc, term = 0, x
        for _ in range(self.k):
            acc_digits = self._digits(acc)
            term_digits = self._digits(term)
            acc = self._index([(a + b) % self.p for a, b in zip(acc_digits, term_digits)])
            term = self._pow(term, self.p)
        digits = self._digits(acc)
        if any(digits[1:]):
            raise RuntimeError("trace left the prime field")  # pragma: no cover
        return digits[0]

    def trace(self, x: int) -> int:
        return self._trace[x]


@dataclass(frozen=True)
class CycloInt:
    """Integer combination of p-th roots of unity, kept as a count vector."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) < 2:
            raise ValueError("need counts for at least the 2nd roots of unity")

    @property
    def p(self) -> int:
        return len(self.counts)

    @classmethod
    def from_int(cls, value: int, p: int) -> "CycloInt":
        return cls((value,) + (0,) * (p - 1))

    def reduced(self) -> tuple[int, ...]:
        """Coordinates in the basis 1, xi, ..., xi^(p-2)."""
        last = self.counts[-1]
        return tuple(c - last for c in self.counts[:-1])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycloInt.from_int(other, self.p)
        if not isinstance(other, CycloInt):
            return NotImplemented
        return self.p == other.p and self.reduced() == other.reduced()

    def __hash__(self) -> int:
        return hash((self.p, self.reduced()))

    def is_minus_one(self) -> bool:
        return self.reduced() == (-1,) + (0,) * (self.p - 2)

    def as_int(self) -> int | None:
        """The rational-integer value, or None when irrational."""
        red = self.reduced()
        return red[0] if not any(red[1:]) else None


def autocorrelation(w: PWord, tau: int, field: FiniteField | None = None) -> CycloInt:
    """Count vector of Tr(w_{i+tau} - w_i) values over one period of w."""
    if not w.cyclic:
        raise ValueError("autocorrelation is defined for cyclic words")
    _check_total(w.chars)
    if field is None:
        field = FiniteField.for_order(w.alphabet)
    if field.order != w.alphabet:
        raise ValueError(f"field order {field.order} != alphabet size {w.alphabet}")
    counts = [0] * field.p
    for i in range(len(w)):
        counts[field.trace(field.sub(w[i + tau], w[i]))] += 1
    return CycloInt(tuple(counts))


def agreements(w: PWord, tau: int) -> tuple[int, int]:
    """How many positions of w match and mismatch its shift by tau."""
    if not w.cyclic:
        raise ValueError("agreements are defined for cyclic words")
    _check_total(w.chars)
    agree = sum(1 for i in range(len(w)) if w[i + tau] == w[i])
    return agree, len(w) - agree


def _r3_failures(w: PWord, taus: Iterable[int], field: FiniteField) -> list[int]:
    return [tau for tau in taus if not autocorrelation(w, tau, field).is_minus_one()]


def check_r3(
    w: PWord, n: int, field: FiniteField | None = None, threads: int = 1
) -> tuple[bool, list[int]]:
    """Puncture a De Bruijn cycle and test every nontrivial shift for -1.

    Returns the verdict and the sorted list of failing shifts.
    """
    if field is None:
        field = FiniteField.for_order(w.alphabet)
    hat = puncture(w, n)
    taus = range(1, len(hat))
    if threads > 1:
        chunks = [list(taus)[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda c: _r3_failures(hat, c, field), chunks)
        failing = sorted(itertools.chain.from_iterable(parts))
    else:
        failing = _r3_failures(hat, taus, field)
    return not failing, failing
