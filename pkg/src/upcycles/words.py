"""Linear and cyclic partial words over integer alphabets.

Letters are the integers 0..a-1 and the wildcard DIAMOND stands for an
unspecified letter.  Words are immutable; cyclic words index modulo their
length.  Text form uses the digits 0-9a-z for letters (alphabets up to 36),
'*' for the wildcard, and wraps cyclic words in parentheses.  Positions in
returned reports are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

DIAMOND = -1

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_DIAMOND_IN = "*⋄"  # '*' canonical; the unicode diamond is an input alias
MAX_TEXT_ALPHABET = len(_DIGITS)


class CapExceeded(RuntimeError):
    """An operation would exceed a desk-scale size cap."""


@dataclass(frozen=True)
class PWord:
    """A partial word: letters 0..alphabet-1 plus DIAMOND, linear or cyclic."""

    chars: tuple[int, ...]
    alphabet: int
    cyclic: bool = False

    def __post_init__(self) -> None:
        if self.alphabet < 1:
            raise ValueError(f"alphabet size must be at least 1, got {self.alphabet}")
        if self.cyclic and not self.chars:
            raise ValueError("cyclic words must be nonempty")
        for c in self.chars:
            if c != DIAMOND and not 0 <= c < self.alphabet:
                raise ValueError(f"letter {c} out of range for alphabet size {self.alphabet}")

    def __len__(self) -> int:
        return len(self.chars)

    def __getitem__(self, i: int) -> int:
        # cyclic words wrap; linear words raise on out-of-range access
        if self.cyclic:
            return self.chars[i % len(self.chars)]
        if not 0 <= i < len(self.chars):
            raise IndexError(f"index {i} out of range for linear word of length {len(self.chars)}")
        return self.chars[i]

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_total(self) -> bool:
        return DIAMOND not in self.chars

    def diamond_count(self) -> int:
        return self.chars.count(DIAMOND)

    def window(self, start: int, length: int) -> tuple[int, ...]:
        """Characters at start..start+length-1 (0-based), wrapping if cyclic."""
        if self.cyclic:
            n = len(self.chars)
            return tuple(self.chars[(start + t) % n] for t in range(length))
        if start < 0 or start + length > len(self.chars):
            raise IndexError("window exceeds linear word")
        return self.chars[start : start + length]

    def rotated(self, r: int) -> "PWord":
        if not self.cyclic:
            raise ValueError("only cyclic words can be rotated")
        r %= len(self.chars)
        return PWord(self.chars[r:] + self.chars[:r], self.alphabet, True)

    def reversed_(self) -> "PWord":
        return PWord(tuple(reversed(self.chars)), self.alphabet, self.cyclic)

    def permuted(self, mapping: Sequence[int]) -> "PWord":
        if sorted(mapping) != list(range(self.alphabet)):
            raise ValueError(f"mapping {mapping!r} is not a permutation of 0..{self.alphabet - 1}")
        out = tuple(c if c == DIAMOND else mapping[c] for c in self.chars)
        return PWord(out, self.alphabet, self.cyclic)

    def complemented(self) -> "PWord":
        a = self.alphabet
        return self.permuted(tuple(a - 1 - x for x in range(a)))

    def repeated(self, times: int) -> "PWord":
        """The concatenation of `times` copies, same cyclic flag."""
        if times < 1:
            raise ValueError("repeat count must be positive")
        return PWord(self.chars * times, self.alphabet, self.cyclic)


@dataclass(frozen=True)
class Frame:
    """The diamond/solid pattern of a word; True marks a diamond."""

    marks: tuple[bool, ...]
    cyclic: bool = False

    def __len__(self) -> int:
        return len(self.marks)

    def __str__(self) -> str:
        body = "".join("*" if m else "." for m in self.marks)
        return f"({body})" if self.cyclic else body

    def diamond_count(self) -> int:
        return sum(self.marks)

    def repeated(self, times: int) -> "Frame":
        if times < 1:
            raise ValueError("repeat count must be positive")
        return Frame(self.marks * times, self.cyclic)


@dataclass(frozen=True)
class Rotate:
    r: int


@dataclass(frozen=True)
class Reverse:
    pass


@dataclass(frozen=True)
class Permute:
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class Complement:
    pass


SymmetryOp = Rotate | Reverse | Permute | Complement


def parse_word(text: str, alphabet_size: int, cyclic: bool | None = None) -> PWord:
    """Parse the text form of a partial word.

    Whitespace is ignored.  A '(...)' wrapper marks the word cyclic; the
    `cyclic` argument forces the flag and must agree with any wrapper.
    """
    if alphabet_size < 1 or alphabet_size > MAX_TEXT_ALPHABET:
        raise ValueError(f"text form supports alphabet sizes 1..{MAX_TEXT_ALPHABET}")
    stripped = "".join(text.split())
    wrapped = False
    if stripped.startswith("("):
        if not stripped.endswith(")"):
            raise ValueError(f"unbalanced parentheses in {text!r}")
        stripped = stripped[1:-1]
        wrapped = True
    elif stripped.endswith(")"):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    if cyclic is None:
        cyclic = wrapped
    elif wrapped and not cyclic:
        raise ValueError("parenthesized input is cyclic but a linear word was requested")
    if not stripped:
        raise ValueError("empty word")
    chars = []
    for ch in stripped:
        if ch in _DIAMOND_IN:
            chars.append(DIAMOND)
            continue
        value = _DIGITS.find(ch.lower())
        if value < 0:
            raise ValueError(f"unexpected character {ch!r}")
        if value >= alphabet_size:
            raise ValueError(f"letter {ch!r} out of range for alphabet size {alphabet_size}")
        chars.append(value)
    return PWord(tuple(chars), alphabet_size, cyclic)


def format_word(w: PWord) -> str:
    if w.alphabet > MAX_TEXT_ALPHABET:
        raise ValueError(f"text form supports alphabet sizes up to {MAX_TEXT_ALPHABET}")
    body = "".join("*" if c == DIAMOND else _DIGITS[c] for c in w.chars)
    return f"({body})" if w.cyclic else body


def covers(x: PWord, y: PWord) -> list[int]:
    """1-based start positions at which x covers y.

    x covers y at position i when every character of the length-|y| window
    of x starting there is a diamond or equals the corresponding character
    of y.  Cyclic x admits all |x| start positions (wrapping); equal-length
    cyclic covering therefore tests every rotational alignment.
    """
    k = len(y)
    if x.cyclic:
        starts: Iterable[int] = range(len(x))
    else:
        if k > len(x):
            return []
        starts = range(len(x) - k + 1)
    ychars = y.chars
    hits = []
    for i in starts:
        win = x.window(i, k)
        if all(c == DIAMOND or c == yc for c, yc in zip(win, ychars)):
            hits.append(i + 1)
    return hits


def windows(u: PWord, k: int) -> list[PWord]:
    """All length-k windows of u: |u| of them if cyclic, |u|-k+1 if linear."""
    if k < 1:
        raise ValueError("window length must be positive")
    if u.cyclic:
        count = len(u)
    else:
        if k > len(u):
            return []
        count = len(u) - k + 1
    return [PWord(u.window(i, k), u.alphabet, False) for i in range(count)]


def frame_of(u: PWord) -> Frame:
    return Frame(tuple(c == DIAMOND for c in u.chars), u.cyclic)


def diamond_offsets(u: PWord, n: int) -> set[int]:
    """Residues (1-based position mod n) at which the cyclic word u has diamonds.

    Raises ValueError with the first witness position whose diamond status
    breaks n-periodicity.
    """
    if not u.cyclic:
        raise ValueError("diamond offsets are defined for cyclic words")
    length = len(u)
    for i in range(length):
        if (u.chars[i] == DIAMOND) != (u[i + n] == DIAMOND):
            raise ValueError(f"diamonds are not {n}-periodic: witness position {i + 1}")
    return {(i + 1) % n for i in range(min(length, n)) if u[i] == DIAMOND or u[i + n] == DIAMOND}


def window_frame(u: PWord, n: int) -> Frame:
    """The frame of any n-window of u (requires n-periodic diamonds)."""
    diamond_offsets(u, n)  # validates periodicity
    return Frame(tuple(u[i] == DIAMOND for i in range(n)), False)


def frame_period(source: PWord | Frame, n: int) -> tuple[int, Frame]:
    """Smallest m dividing n such that the window frame tiles as pane^(n/m).

    Accepts a cyclic word (window frame derived from it) or a length-n frame.
    Returns (m, pane frame).
    """
    if isinstance(source, PWord):
        f = window_frame(source, n)
    else:
        f = source
        if len(f) != n:
            raise ValueError(f"frame length {len(f)} does not match n={n}")
    marks = f.marks
    for m in sorted(_divisors(n)):
        if marks == marks[:m] * (n // m):
            return m, Frame(marks[:m], False)
    raise AssertionError("n itself always tiles")  # pragma: no cover


def _divisors(n: int) -> list[int]:
    return [m for m in range(1, n + 1) if n % m == 0]


def apply_symmetry(u: PWord, op: SymmetryOp) -> PWord:
    if isinstance(op, Rotate):
        return u.rotated(op.r)
    if isinstance(op, Reverse):
        return u.reversed_()
    if isinstance(op, Permute):
        return u.permuted(op.mapping)
    if isinstance(op, Complement):
        return u.complemented()
    raise TypeError(f"not a symmetry operation: {op!r}")


def apply_symmetries(u: PWord, ops: Iterable[SymmetryOp]) -> PWord:
    for op in ops:
        u = apply_symmetry(u, op)
    return u


def least_rotation_index(seq: Sequence[int]) -> int:
    """Index of the lexicographically least rotation (two-pointer scan)."""
    n = len(seq)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = seq[(i + k) % n]
        b = seq[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def canonical_rotation(u: PWord) -> PWord:
    """The least rotation of a cyclic word, ordering DIAMOND after all letters."""
    if not u.cyclic:
        raise ValueError("canonical rotation is defined for cyclic words")
    key = tuple(u.alphabet if c == DIAMOND else c for c in u.chars)
    return u.rotated(least_rotation_index(key))
