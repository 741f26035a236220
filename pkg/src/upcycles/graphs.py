"""Graph views of an upcycle inside the De Bruijn graph.

The cover graph links each word of A^n to the words covered immediately
after it: edge (x, y) when x is covered at some window position i, y at
position i+1, and y extends x by one letter (y[:-1] == x[1:]).  The tour
pair view records the same adjacency as ordered pairs of A^n words, read
off the coverage map; an upcycle traverses the De Bruijn graph B(a, n-1)
the way an Euler tour would, taking all a branches at once whenever the
covering window ends with a diamond ("diamond vertices").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import IO, Iterator

from .words import DIAMOND, CapExceeded, PWord, format_word
from .verify import verify_upcycle

DENSE_GRAPH_CAP = 1 << 16

Word = tuple[int, ...]


@dataclass(frozen=True)
class LabeledDigraph:
    """A digraph on A^n words with letter-labeled edges."""

    a: int
    n: int
    vertices: tuple[Word, ...]
    edges: tuple[tuple[Word, Word, int], ...]  # (source, target, letter)

    def out_degree(self, v: Word) -> int:
        return sum(1 for s, _, _ in self.edges if s == v)

    def in_degree(self, v: Word) -> int:
        return sum(1 for _, t, _ in self.edges if t == v)

    def degree_map(self) -> dict[Word, tuple[int, int]]:
        outs: dict[Word, int] = {v: 0 for v in self.vertices}
        ins: dict[Word, int] = {v: 0 for v in self.vertices}
        for s, t, _ in self.edges:
            outs[s] += 1
            ins[t] += 1
        return {v: (outs[v], ins[v]) for v in self.vertices}


@dataclass(frozen=True)
class EdgePairSet:
    """Ordered pairs of consecutively covered A^n words plus diamond vertices."""

    a: int
    n: int
    pairs: frozenset[tuple[Word, Word]]
    diamond_vertices: frozenset[Word]  # words of A^(n-1)


def _cover_positions(u: PWord, n: int) -> dict[Word, int]:
    """Map each word of A^n to the 0-based window position covering it."""
    rep = verify_upcycle(u, n)
    if not rep.valid:
        raise ValueError(f"not an upcycle: {rep.to_line()}")
    where: dict[Word, int] = {}
    for i in range(len(u)):
        win = u.window(i, n)
        slots = [t for t, c in enumerate(win) if c == DIAMOND]
        for fill in itertools.product(range(u.alphabet), repeat=len(slots)):
            filled = list(win)
            for t, v in zip(slots, fill):
                filled[t] = v
            where[tuple(filled)] = i
    return where


def iter_cover_edges(u: PWord, n: int) -> Iterator[tuple[Word, Word, int]]:
    """Edges of the cover graph, generated window by window."""
    a = u.alphabet
    length = len(u)
    for i in range(length):
        win = u.window(i, n)
        slots = [t for t, c in enumerate(win) if c == DIAMOND]
        nxt = u[i + n]
        next_letters = range(a) if nxt == DIAMOND else (nxt,)
        for fill in itertools.product(range(a), repeat=len(slots)):
            x = list(win)
            for t, v in zip(slots, fill):
                x[t] = v
            xt = tuple(x)
            for y_last in next_letters:
                yield xt, xt[1:] + (y_last,), y_last


def cover_graph(u: PWord, n: int) -> LabeledDigraph:
    """The spanning subgraph of B(a, n) induced by consecutive coverage."""
    a = u.alphabet
    if a**n > DENSE_GRAPH_CAP:
        raise CapExceeded("dense cover graph is capped at a^n <= 2^16; stream DOT instead")
    rep = verify_upcycle(u, n)
    if not rep.valid:
        raise ValueError(f"not an upcycle: {rep.to_line()}")
    vertices = tuple(itertools.product(range(a), repeat=n))
    edges = tuple(sorted(iter_cover_edges(u, n)))
    return LabeledDigraph(a, n, vertices, edges)


def tour_pairs(u: PWord, n: int) -> EdgePairSet:
    """Consecutive-coverage pairs, built from the coverage position map."""
    a = u.alphabet
    if n < 2:
        raise ValueError("tour pair view needs n >= 2")
    if a**n > DENSE_GRAPH_CAP:
        raise CapExceeded("tour pair view is capped at a^n <= 2^16")
    where = _cover_positions(u, n)
    length = len(u)
    by_position: dict[int, list[Word]] = {}
    for w, i in where.items():
        by_position.setdefault(i, []).append(w)
    pairs = set()
    for x, i in where.items():
        for y in by_position[(i + 1) % length]:
            if y[: n - 1] == x[1:]:
                pairs.add((x, y))
    diamonds = set()
    for i in range(length):
        if u[i + n - 1] == DIAMOND:
            head = u.window(i, n - 1)
            slots = [t for t, c in enumerate(head) if c == DIAMOND]
            for fill in itertools.product(range(a), repeat=len(slots)):
                filled = list(head)
                for t, v in zip(slots, fill):
                    filled[t] = v
                diamonds.add(tuple(filled))
    return EdgePairSet(a, n, frozenset(pairs), frozenset(diamonds))


def perfect_factor(u: PWord, n: int) -> list[list[Word]]:
    """Vertex-disjoint cycles covering A^n, one per diamond filling.

    Needs n | a^(n-d).  Starting from the first window, each of the a^d
    fillings is repeated in place of the diamonds along the whole cycle,
    tracing a closed walk of length a^(n-d) in B(a, n); together the walks
    partition A^n.
    """
    rep = verify_upcycle(u, n)
    if not rep.valid:
        raise ValueError(f"not an upcycle: {rep.to_line()}")
    a, d = rep.params.a, rep.params.d
    length = len(u)
    if length % n:
        raise ValueError(f"perfect factor needs n | a^(n-d); {n} does not divide {length}")
    win0 = u.window(0, n)
    slots0 = [t for t, c in enumerate(win0) if c == DIAMOND]
    cycles = []
    seen: set[Word] = set()
    for fill in itertools.product(range(a), repeat=d):
        word = list(win0)
        for t, v in zip(slots0, fill):
            word[t] = v
        cycle = [tuple(word)]
        phase = d
        for i in range(1, length):
            nxt = u[i + n - 1]
            if nxt == DIAMOND:
                nxt = fill[phase % d]
                phase += 1
            word = word[1:] + [nxt]
            cycle.append(tuple(word))
        if cycle[1:] and len(set(cycle)) != length:
            raise RuntimeError("factor walk revisited a vertex early")  # pragma: no cover
        if seen & set(cycle):
            raise RuntimeError("factor walks are not vertex-disjoint")  # pragma: no cover
        seen.update(cycle)
        cycles.append(cycle)
    if len(seen) != a**n:
        raise RuntimeError("factor walks do not cover A^n")  # pragma: no cover
    return cycles


def _word_str(w: Word, a: int) -> str:
    return format_word(PWord(w, a, False))


def export_dot(view: LabeledDigraph | EdgePairSet, out: IO[str]) -> None:
    """Write a DOT rendering; tour-pair views mark diamond vertices."""
    if isinstance(view, LabeledDigraph):
        out.write("digraph cover {\n")
        for v in sorted(view.vertices):
            out.write(f'  "{_word_str(v, view.a)}";\n')
        for s, t, letter in sorted(view.edges):
            out.write(
                f'  "{_word_str(s, view.a)}" -> "{_word_str(t, view.a)}" [label="{letter}"];\n'
            )
        out.write("}\n")
        return
    if isinstance(view, EdgePairSet):
        a, n = view.a, view.n
        out.write("digraph tour {\n")
        for v in sorted(itertools.product(range(a), repeat=n - 1)):
            shape = "diamond" if v in view.diamond_vertices else "ellipse"
            out.write(f'  "{_word_str(v, a)}" [shape={shape}];\n')
        for w in sorted(itertools.product(range(a), repeat=n)):
            out.write(
                f'  "{_word_str(w[:-1], a)}" -> "{_word_str(w[1:], a)}" '
                f'[label="{_word_str(w, a)}"];\n'
            )
        out.write("}\n")
        return
    raise TypeError(f"cannot export {type(view).__name__}")
