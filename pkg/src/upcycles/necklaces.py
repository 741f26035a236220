"""Perfect necklace constructions.

The astute graph G(a, n, t) has vertices (w, s) for w in A^n and phases
s in 0..t-1, with an edge (xv, s) -> (vy, s+1 mod t) for every letter y.
It is connected and a-in a-out regular, and the edge labels along an Euler
tour of G(a, n-1, t) spell an (a, n, t)-perfect necklace.  Direct formula
constructions (lexicographic concatenation, stretching, rotate-expand,
reflect-expand) are provided alongside; every constructor verifies its
output before returning it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .words import CapExceeded, PWord
from .verify import verify_perfect_necklace, verify_upcycle

ASTUTE_EDGE_CAP = 1 << 24


@dataclass(frozen=True)
class Necklace:
    """A verified (a, n, t)-perfect necklace."""

    word: PWord
    a: int
    n: int
    t: int

    def to_text(self) -> str:
        return f"NECKLACE a={self.a} n={self.n} t={self.t}\n{self.word}"


@dataclass(frozen=True)
class ZerosPrefix:
    """Require the necklace to begin with t zeros (the all-zero cycle first)."""


@dataclass(frozen=True)
class ContainWord:
    """Require the necklace to contain the given total word of length n+1."""

    word: tuple[int, ...]


Constraint = ZerosPrefix | ContainWord | None


@dataclass(frozen=True)
class AstuteGraph:
    a: int
    n: int  # vertex word length; n = 0 gives t vertices carrying the empty word
    t: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.n < 0 or self.t < 1:
            raise ValueError("astute graph needs a >= 1, n >= 0, t >= 1")
        if self.t * self.a ** (self.n + 1) > ASTUTE_EDGE_CAP:
            raise CapExceeded(
                f"astute graph t*a^(n+1) = {self.t}*{self.a}^{self.n + 1} exceeds cap 2^24"
            )

    @property
    def num_vertices(self) -> int:
        return self.t * self.a**self.n

    @property
    def num_edges(self) -> int:
        return self.t * self.a ** (self.n + 1)

    def vertices(self):
        for w in itertools.product(range(self.a), repeat=self.n):
            for s in range(self.t):
                yield (w, s)

    def successors(self, vertex):
        """Pairs (label, successor vertex), in ascending label order."""
        w, s = vertex
        nxt = (s + 1) % self.t
        for y in range(self.a):
            yield y, ((w + (y,))[1:], nxt)


def build_astute(a: int, n: int, t: int) -> AstuteGraph:
    return AstuteGraph(a, n, t)


def _euler_trail(adj: dict, start) -> list[tuple[int, object]]:
    """Labels and vertices along an Euler trail consuming edges of adj.

    adj maps a vertex to its remaining out-edges as a list of (label,
    successor) pairs sorted ascending; the list is consumed.  Hierholzer's
    cycle-splicing applies unchanged to trails, provided the graph has one
    from `start`.  Returns [(vertex, label-used-to-enter), ...] with the
    start vertex first carrying label None.
    """
    ptr: dict = {}
    stack = [(start, None)]
    out = []
    while stack:
        v, lab = stack[-1]
        edges = adj.get(v, ())
        i = ptr.get(v, 0)
        if i < len(edges):
            ptr[v] = i + 1
            y, w = edges[i]
            stack.append((w, y))
        else:
            out.append(stack.pop())
    out.reverse()
    remaining = sum(len(adj.get(v, ())) - ptr.get(v, 0) for v in adj)
    if remaining:
        raise ValueError("graph has no Euler trail from the requested start (not connected)")
    return out


def _full_adjacency(g: AstuteGraph) -> dict:
    return {v: sorted(g.successors(v)) for v in g.vertices()}


def _verify_necklace(word: PWord, a: int, n: int, t: int, what: str) -> Necklace:
    if not verify_perfect_necklace(word, a, n, t):
        raise RuntimeError(f"{what} produced a word failing the ({a},{n},{t}) necklace check")
    return Necklace(word, a, n, t)


def euler_necklace(a: int, n: int, t: int, constraint: Constraint = None) -> Necklace:
    """An (a, n, t)-perfect necklace from an Euler tour of G(a, n-1, t).

    Edges are consumed in ascending label order from the all-zeros start
    vertex, so the result is deterministic.  A ZerosPrefix constraint
    traverses the all-zero cycle first; a ContainWord constraint (t >= n,
    n >= 2) walks the requested word first and tours the rest.
    """
    if a < 1 or n < 1 or t < 1:
        raise ValueError("perfect necklace parameters must be positive")
    g = build_astute(a, n - 1, t)
    zero = (0,) * (n - 1)
    start = (zero, 0)
    adj = _full_adjacency(g)

    if constraint is None:
        trail = _euler_trail(adj, start)
        labels = [lab for _, lab in trail[1:]]
    elif isinstance(constraint, ZerosPrefix):
        # pull the 0-labeled cycle through the (0^(n-1), s) vertices out first
        for s in range(t):
            edges = adj[(zero, s)]
            assert edges[0][0] == 0
            edges.pop(0)
        prefix = [0] * t
        if all(len(e) == 0 for e in adj.values()):
            labels = prefix  # a == 1: the zero cycle is the whole graph
        else:
            trail = _euler_trail(adj, start)
            labels = prefix + [lab for _, lab in trail[1:]]
    elif isinstance(constraint, ContainWord):
        x = constraint.word
        if len(x) != n + 1 or any(c < 0 or c >= a for c in x):
            raise ValueError("constraint word must be a total word of length n+1")
        if a < 2 or n < 2 or t < n:
            raise ValueError("ContainWord requires a >= 2, n >= 2 and t >= n")
        if t == n:
            walk_start = (tuple((c + 1) % a for c in x[1:n]), 0)
        else:
            walk_start = start
        v = walk_start
        for y in x:
            edges = adj[v]
            hit = next((i for i, (lab, _) in enumerate(edges) if lab == y), None)
            if hit is None:
                raise RuntimeError("prescribed walk consumed an edge twice")  # pragma: no cover
            _, v = edges.pop(hit)
        trail = _euler_trail(adj, v)
        if trail[-1][0] != walk_start:
            raise RuntimeError("remainder trail did not close the walk")  # pragma: no cover
        labels = list(x) + [lab for _, lab in trail[1:]]
    else:
        raise TypeError(f"unknown constraint: {constraint!r}")

    word = PWord(tuple(labels), a, True)
    neck = _verify_necklace(word, a, n, t, "euler tour")
    if isinstance(constraint, ContainWord):
        chars = word.chars + word.chars
        target = constraint.word
        if not any(chars[i : i + len(target)] == target for i in range(len(word))):
            raise RuntimeError("constraint word missing from necklace")  # pragma: no cover
    return neck


def lex_necklace(a: int, n: int) -> Necklace:
    """Concatenate all words of A^n in lexicographic order: an (a, n, n)-necklace."""
    if a < 1 or n < 1:
        raise ValueError("perfect necklace parameters must be positive")
    if n * a**n > ASTUTE_EDGE_CAP:
        raise CapExceeded("lexicographic necklace exceeds size cap")
    chars = tuple(c for w in itertools.product(range(a), repeat=n) for c in w)
    return _verify_necklace(PWord(chars, a, True), a, n, n, "lexicographic concatenation")


def stretch_necklace(neck: Necklace, q: int) -> Necklace:
    """Repeat the first n letters of every block q times: (a, n, nq+r) from (a, n, n+r)."""
    if q < 1:
        raise ValueError("stretch factor must be positive")
    n, t = neck.n, neck.t
    r = t - n
    if not 0 <= r < n:
        raise ValueError(f"stretching needs n <= t < 2n, got n={n} t={t}")
    chars = []
    w = neck.word.chars
    for p in range(neck.a**n):
        block = w[p * t : (p + 1) * t]
        chars.extend(block[:n] * q + block[n:])
    word = PWord(tuple(chars), neck.a, True)
    return _verify_necklace(word, neck.a, n, n * q + r, "stretch construction")


def rotate_expand_necklace(w: PWord, r: int) -> Necklace:
    """Expand a De Bruijn cycle into an (a, n, n+r)-necklace, gcd(a^n, r) = 1.

    Block p (0-indexed) is w[rp..rp+n-1] followed by w[rp..rp+r-1], indices
    mod a^n.
    """
    n_len = len(w)
    rep = verify_upcycle(w, _log_len(w))
    if not rep.valid or rep.params.d != 0:
        raise ValueError("rotate-expand needs a verified De Bruijn cycle")
    n = rep.params.n
    if not 1 <= r <= n:
        raise ValueError(f"shift must satisfy 1 <= r <= n, got {r}")
    if math.gcd(n_len, r) != 1:
        raise ValueError(f"gcd(a^n, r) must be 1, got gcd({n_len},{r})")
    chars = []
    for p in range(n_len):
        base = (r * p) % n_len
        chars.extend(w[base + i] for i in range(n))
        chars.extend(w[base + i] for i in range(r))
    word = PWord(tuple(chars), w.alphabet, True)
    return _verify_necklace(word, w.alphabet, n, n + r, "rotate-expand construction")


def reflect_expand_necklace(w: PWord) -> Necklace:
    """Expand a De Bruijn cycle into an (a, n, 2n-1)-necklace.

    Block p is w[-p..-p+n-1] followed by w[-p..-p+n-2], indices mod a^n.
    The formula is applied as written for every n >= 1 and the result is
    verified; degenerate inputs that fail verification are rejected.
    """
    n_len = len(w)
    rep = verify_upcycle(w, _log_len(w))
    if not rep.valid or rep.params.d != 0:
        raise ValueError("reflect-expand needs a verified De Bruijn cycle")
    n = rep.params.n
    chars = []
    for p in range(n_len):
        chars.extend(w[-p + i] for i in range(n))
        chars.extend(w[-p + i] for i in range(n - 1))
    word = PWord(tuple(chars), w.alphabet, True)
    return _verify_necklace(word, w.alphabet, n, 2 * n - 1, "reflect-expand construction")


def _log_len(w: PWord) -> int:
    """n with a^n = |w| for a total De Bruijn candidate; errors otherwise."""
    a = w.alphabet
    if a < 2:
        raise ValueError("De Bruijn cycles need alphabet size at least 2")
    n = 0
    size = 1
    while size < len(w):
        size *= a
        n += 1
    if size != len(w):
        raise ValueError(f"length {len(w)} is not a power of the alphabet size {a}")
    return n
