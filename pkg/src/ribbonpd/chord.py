"""Chord diagrams as double-occurrence words.

A one-vertex ribbon graph is encoded by the cyclic word read along its
vertex boundary, each chord label occurring exactly twice.  Words are
stored normalized: labels are dense integers in first-occurrence order.
The printable alphabet is ``A``-``Z`` followed by bracketed indices
(``[26]``, ``[27]``, ...); bracketed indices are accepted on input for any
position.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .core import RibbonGraph, default_edge_names, index_symbol

_TOKEN = re.compile(r"[A-Za-z]|\[(\d+)\]|\S")


def _normalize(seq: Sequence) -> tuple[int, ...]:
    """Relabel symbols to 0,1,2,... in first-occurrence order."""
    table: dict = {}
    out = []
    for s in seq:
        if s not in table:
            table[s] = len(table)
        out.append(table[s])
    return tuple(out)


def word_to_text(word: Sequence[int]) -> str:
    return "".join(index_symbol(c) for c in word)


def _tokens_from_text(s: str) -> list:
    tokens = []
    for m in _TOKEN.finditer(s):
        t = m.group(0)
        if m.group(1) is not None:
            tokens.append(int(m.group(1)))
        elif t.isalpha():
            tokens.append(t.upper())
        else:
            raise ValueError(f"invalid symbol {t!r} in word")
    return tokens


@dataclass(frozen=True)
class ChordDiagram:
    """A double-occurrence word over ``n`` chords, cyclic, labels normalized."""

    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))

    @property
    def n(self) -> int:
        return len(self.word) // 2

    @property
    def text(self) -> str:
        return word_to_text(self.word)

    def __str__(self) -> str:
        return self.text

    def chord_positions(self) -> tuple[tuple[int, int], ...]:
        """The two word positions of each chord, by chord index."""
        pos: dict[int, list[int]] = {}
        for i, c in enumerate(self.word):
            pos.setdefault(c, []).append(i)
        return tuple((pos[c][0], pos[c][1]) for c in range(self.n))


def parse_word(data: Union[str, Sequence]) -> ChordDiagram:
    """Validate and normalize a double-occurrence word.

    Accepts a string over the printable alphabet (whitespace ignored) or any
    sequence of hashable symbols.  Every symbol must occur exactly twice.
    """
    symbols = _tokens_from_text(data.replace(" ", "").replace("\t", "")) if isinstance(data, str) else list(data)
    if len(symbols) % 2:
        raise ValueError(f"odd length {len(symbols)}: not a double-occurrence word")
    counts: dict = {}
    for s in symbols:
        counts[s] = counts.get(s, 0) + 1
    for s, k in counts.items():
        if k != 2:
            raise ValueError(f"symbol {s!r} occurs {k} time(s) (expected 2)")
    return ChordDiagram(_normalize(symbols))


def to_ribbon_graph(d: ChordDiagram) -> RibbonGraph:
    """The one-vertex ribbon graph whose rotation reads the word."""
    n = d.n
    rotation = tuple(range(2 * n))
    edges = d.chord_positions()
    return RibbonGraph((rotation,), edges, default_edge_names(n))


def from_one_vertex(g: RibbonGraph) -> ChordDiagram:
    """Read the chord-diagram word off a one-vertex ribbon graph."""
    g.validate()
    if g.num_vertices != 1:
        raise ValueError(f"graph has {g.num_vertices} vertices (expected 1)")
    rot = g.vertices[0]
    return ChordDiagram(_normalize(g.dart_edge[d] for d in rot))


@dataclass(frozen=True)
class InterlacementGraph:
    """Chords as vertices, adjacent iff their endpoints alternate on the circle."""

    n: int
    adjacency: tuple[tuple[bool, ...], ...]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.adjacency[i][j])

    def components(self) -> tuple[frozenset, ...]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in range(self.n):
                    if self.adjacency[x][y] and not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(frozenset(comp))
        return tuple(comps)

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1


def _interlaced(p: tuple[int, int], q: tuple[int, int]) -> bool:
    # endpoints alternate iff exactly one endpoint of q lies strictly between p's
    return (p[0] < q[0] < p[1]) != (p[0] < q[1] < p[1])


def interlacement(d: ChordDiagram) -> InterlacementGraph:
    pos = d.chord_positions()
    n = d.n
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if _interlaced(pos[i], pos[j]):
                adj[i][j] = adj[j][i] = True
    return InterlacementGraph(n, tuple(tuple(row) for row in adj))


def is_join_prime(d: ChordDiagram) -> bool:
    """Whether the diagram's interlacement graph is connected."""
    if d.n == 0:
        raise ValueError("empty diagram")
    return interlacement(d).is_connected()


def components_all_odd_complete(d: ChordDiagram) -> bool:
    """Whether every interlacement component is a complete graph of odd order."""
    graph = interlacement(d)
    for comp in graph.components():
        if len(comp) % 2 == 0:
            return False
        for i in comp:
            for j in comp:
                if i != j and not graph.adjacency[i][j]:
                    return False
    return True


def canonical_form(d: ChordDiagram, use_reflection: bool = False) -> ChordDiagram:
    """Lexicographically least relabeled word over all rotations.

    With ``use_reflection`` the reversed word's rotations compete as well
    (reflection reverses the surface orientation, so it is off by default).
    Idempotent by construction.
    """
    w = d.word
    if not w:
        return d
    best = None
    readings = [w, tuple(reversed(w))] if use_reflection else [w]
    for r in readings:
        for k in range(len(r)):
            cand = _normalize(r[k:] + r[:k])
            if best is None or cand < best:
                best = cand
    return ChordDiagram(best)


def _matching_words(n: int) -> Iterator[tuple[int, ...]]:
    """All perfect matchings of 2n points, as normalized words.

    Pairs the first free position with every later free position, so each of
    the (2n-1)!! matchings is produced exactly once and the emitted word is
    already in first-occurrence normal form.
    """
    size = 2 * n
    word = [-1] * size

    def rec(label: int) -> Iterator[tuple[int, ...]]:
        try:
            i = word.index(-1)
        except ValueError:
            yield tuple(word)
            return
        word[i] = label
        for j in range(i + 1, size):
            if word[j] == -1:
                word[j] = label
                yield from rec(label + 1)
                word[j] = -1
        word[i] = -1

    yield from rec(0)


def enumerate_diagrams(n: int, use_reflection: bool = False) -> Iterator[ChordDiagram]:
    """All chord diagrams with ``n`` chords, one canonical representative each.

    Deduplicates the (2n-1)!! perfect matchings under rotation (and
    reflection when requested) and yields the canonical words in
    lexicographic order.  The full set is materialized before yielding;
    intended for desk scale (n <= 8).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    canon = {canonical_form(ChordDiagram(w), use_reflection).word for w in _matching_words(n)}
    for w in sorted(canon):
        yield ChordDiagram(w)


# -- word files ---------------------------------------------------------------


def iter_words_text(text: str) -> Iterator[ChordDiagram]:
    """Words one per line; ``#`` starts a comment; blank lines skipped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            yield parse_word(line)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None


def parse_words(text: str) -> list[ChordDiagram]:
    """Parse a word file, either line-oriented text or a JSON array of words."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("JSON word file must be an array")
        return [parse_word(w) for w in data]
    return list(iter_words_text(text))
