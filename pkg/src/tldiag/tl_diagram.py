"""Finite Temperley-Lieb diagrams on k dots.

A diagram is a planar perfect matching of k top dots T1..Tk and k bottom
dots B1..Bk, drawn with the top row above the bottom row.  Planarity is
the standard non-crossing condition on the boundary circle ordered
T1, ..., Tk, Bk, ..., B1.  Composition stacks one diagram above the other,
removes the closed components that live entirely in the middle row, and
reports their count; in the algebra each removed loop contributes a factor
of the loop parameter n.

Endpoints are encoded as pairs ``(side, index)`` with side 0 for the top
row and 1 for the bottom row, ordered T1 < ... < Tk < B1 < ... < Bk for
canonical edge lists.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Endpoint",
    "TLDiagram",
    "SetPartition",
    "identity",
    "e_diagram",
    "compose",
    "enumerate_diagrams",
    "cycle_type",
    "as_interval_composition",
    "d_gamma",
    "pad_composition",
    "catalan",
    "EnumerationBoundError",
]

TOP = 0
BOT = 1

Endpoint = tuple[int, int]  # (side, index), index 1-based


class EnumerationBoundError(ValueError):
    """Raised when an enumeration request exceeds the configured bound."""


def default_kmax() -> int:
    try:
        return int(os.environ.get("TLDIAG_KMAX", "10"))
    except ValueError:
        return 10


def _circle_position(p: Endpoint, k: int) -> int:
    # Boundary circle order T1..Tk, Bk..B1.
    side, i = p
    return i - 1 if side == TOP else 2 * k - i


def _edges_cross(e1, e2, k: int) -> bool:
    a, b = sorted(_circle_position(p, k) for p in e1)
    c, d = sorted(_circle_position(p, k) for p in e2)
    return (a < c < b < d) or (c < a < d < b)


class TLDiagram:
    """A planar perfect matching on 2k endpoints."""

    __slots__ = ("k", "edges", "_partner", "_hash")

    def __init__(self, k: int, edges):
        if k < 1:
            raise ValueError("k must be positive")
        partner: dict[Endpoint, Endpoint] = {}
        canon = []
        for edge in edges:
            a, b = tuple(edge)
            if a == b:
                raise ValueError("an edge cannot pair an endpoint with itself")
            if a > b:
                a, b = b, a
            canon.append((a, b))
            for p, other in ((a, b), (b, a)):
                if p in partner:
                    raise ValueError(f"endpoint {p} used twice")
                partner[p] = other
        expected = {(s, i) for s in (TOP, BOT) for i in range(1, k + 1)}
        if set(partner) != expected:
            raise ValueError("edges do not form a perfect matching on 2k dots")
        canon.sort()
        for i, e1 in enumerate(canon):
            for e2 in canon[i + 1:]:
                if _edges_cross(e1, e2, k):
                    raise ValueError(f"edges {e1} and {e2} cross")
        self.k = k
        self.edges = tuple(canon)
        self._partner = partner
        self._hash = None

    def partner(self, p: Endpoint) -> Endpoint:
        return self._partner[p]

    def __eq__(self, other) -> bool:
        return (isinstance(other, TLDiagram)
                and self.k == other.k and self.edges == other.edges)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.k, self.edges))
        return self._hash

    def __str__(self) -> str:
        def name(p):
            return f"{'T' if p[0] == TOP else 'B'}{p[1]}"
        return f"k={self.k}: " + "".join(f"({name(a)},{name(b)})" for a, b in self.edges)

    def __repr__(self) -> str:
        return f"TLDiagram({self})"

    def to_json(self):
        def name(p):
            return f"{'T' if p[0] == TOP else 'B'}{p[1]}"
        return [f"{name(a)},{name(b)}" for a, b in self.edges]


@lru_cache(maxsize=None)
def identity(k: int) -> TLDiagram:
    return TLDiagram(k, [((TOP, i), (BOT, i)) for i in range(1, k + 1)])


@lru_cache(maxsize=None)
def e_diagram(i: int, k: int) -> TLDiagram:
    """The generator e_i: cups (Ti, Ti+1) and (Bi, Bi+1), 1 <= i <= k-1."""
    if not 1 <= i <= k - 1:
        raise ValueError(f"e_{i} needs 1 <= i <= k-1 = {k - 1}")
    edges = [((TOP, i), (TOP, i + 1)), ((BOT, i), (BOT, i + 1))]
    edges += [((TOP, j), (BOT, j)) for j in range(1, k + 1) if j not in (i, i + 1)]
    return TLDiagram(k, edges)


def compose(d1: TLDiagram, d2: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack d1 above d2; return the product diagram and the loop count."""
    if d1.k != d2.k:
        raise ValueError(f"size mismatch: {d1.k} vs {d2.k}")
    k = d1.k
    edges = []
    seen_middle = set()

    def walk(start_diagram: int, p: Endpoint):
        # Follow the strand starting at product endpoint p; the product's
        # top row is d1's top, its bottom row is d2's bottom, and d1's
        # bottom i is glued to d2's top i.
        diagram, cur = start_diagram, p
        while True:
            d = d1 if diagram == 1 else d2
            nxt = d.partner(cur)
            if diagram == 1 and nxt[0] == TOP:
                return (1, (TOP, nxt[1]))
            if diagram == 2 and nxt[0] == BOT:
                return (2, (BOT, nxt[1]))
            seen_middle.add(nxt[1])
            if diagram == 1:
                diagram, cur = 2, (TOP, nxt[1])
            else:
                diagram, cur = 1, (BOT, nxt[1])

    traced = set()
    for i in range(1, k + 1):
        for p, diagram in (((TOP, i), 1), ((BOT, i), 2)):
            if p in traced:
                continue
            _, end = walk(diagram, p)
            edges.append((p, end))
            traced.add(p)
            traced.add(end)

    # Loops: middle nodes never visited by a boundary trace.
    loops = 0
    unvisited = set(range(1, k + 1)) - seen_middle
    while unvisited:
        start = unvisited.pop()
        # Alternate d1-bottom cups and d2-top cups until back at start.
        cur = start
        while True:
            nxt = d1.partner((BOT, cur))
            assert nxt[0] == BOT, "loop component leaked to the boundary"
            cur = nxt[1]
            unvisited.discard(cur)
            nxt = d2.partner((TOP, cur))
            assert nxt[0] == TOP, "loop component leaked to the boundary"
            cur = nxt[1]
            if cur == start:
                break
            unvisited.discard(cur)
        loops += 1
    return TLDiagram(k, edges), loops


@lru_cache(maxsize=None)
def _enumerate_cached(k: int) -> tuple[TLDiagram, ...]:
    # Non-crossing perfect matchings of the 2k boundary points.
    order = [(TOP, i) for i in range(1, k + 1)] + [(BOT, i) for i in range(k, 0, -1)]

    def match(points):
        if not points:
            yield []
            return
        first = points[0]
        for j in range(1, len(points), 2):
            inside = points[1:j]
            outside = points[j + 1:]
            for m1 in match(inside):
                for m2 in match(outside):
                    yield [(first, points[j])] + m1 + m2

    return tuple(TLDiagram(k, m) for m in match(order))


def enumerate_diagrams(k: int, kmax: int | None = None) -> tuple[TLDiagram, ...]:
    """All TL diagrams on k dots (Catalan(k) of them)."""
    bound = default_kmax() if kmax is None else kmax
    if k > bound:
        raise EnumerationBoundError(
            f"enumeration bound exceeded: k={k} > {bound} (set TLDIAG_KMAX)")
    return _enumerate_cached(k)


def catalan(k: int) -> int:
    from math import comb
    return comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class SetPartition:
    """A set partition of {1..k}, stored as a frozenset of frozensets."""

    k: int
    blocks: frozenset[frozenset[int]]

    def __post_init__(self):
        union = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if union & b:
                raise ValueError("blocks overlap")
            union |= b
        if union != set(range(1, self.k + 1)):
            raise ValueError("blocks do not cover {1..k}")

    def sorted_blocks(self) -> list[list[int]]:
        return sorted((sorted(b) for b in self.blocks), key=lambda b: b[0])


def cycle_type(d: TLDiagram) -> SetPartition:
    """Set partition obtained by identifying Ti with Bi and taking components."""
    parent = list(range(d.k + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for (sa, ia), (sb, ib) in d.edges:
        union(ia, ib)
    groups: dict[int, set[int]] = {}
    for i in range(1, d.k + 1):
        groups.setdefault(find(i), set()).add(i)
    return SetPartition(d.k, frozenset(frozenset(g) for g in groups.values()))


def as_interval_composition(p: SetPartition) -> tuple[int, ...] | None:
    """The composition when every block is a contiguous interval, else None."""
    parts = []
    expected_start = 1
    for block in p.sorted_blocks():
        if block[0] != expected_start or block != list(range(block[0], block[-1] + 1)):
            return None
        parts.append(len(block))
        expected_start = block[-1] + 1
    return tuple(parts)


def pad_composition(gamma, k: int) -> tuple[int, ...]:
    """Pad a composition with trailing 1s to total k."""
    gamma = tuple(int(g) for g in gamma)
    if any(g < 1 for g in gamma):
        raise ValueError("composition parts must be >= 1")
    total = sum(gamma)
    if total > k:
        raise ValueError(f"|gamma| = {total} exceeds k = {k}")
    return gamma + (1,) * (k - total)


def d_gamma(gamma, k: int) -> list[TLDiagram]:
    """All diagrams on k dots whose cycle type is gamma padded with 1s."""
    padded = pad_composition(gamma, k)
    out = []
    for d in enumerate_diagrams(k):
        comp = as_interval_composition(cycle_type(d))
        if comp == padded:
            out.append(d)
    return out
