"""Affine Temperley-Lieb diagrams with pole-winding data.

An affine diagram on k dots pairs the 2k endpoints T1..Tk, B1..Bk and
records, for every strand, an integer winding offset: traversing the
strand from its first endpoint to its second, the offset counts signed
passes around the pole (equivalently, translation by offset * k in the
periodic strip picture).  The translation generator tau, the wraparound
generator e_0, and the pole-wrapped diagrams obtained by rerouting a
strand around the pole all live in this one representation.

Composition stacks two diagrams, adds winding offsets along each traced
strand, and removes every closed middle component: a component with net
winding 0 is contractible (a factor of the loop parameter n), and a
component with net winding w encircles the pole |w| times (a factor of
the formal parameter x_|w|).  Only |w| is meaningful because strands are
unoriented.

Not every matching-with-winding is drawable on the cylinder; the subset
that is (periodic strips with non-crossing lifts) is recognized by
:meth:`AffineDiagram.is_cylindrical`.  Products of the generators e_i and
tau stay inside that subset; the pole-wrapped diagrams produced by
:func:`star_wrap` intentionally live outside it, with the pole drawn to
the left of all strands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .tl_diagram import TLDiagram, TOP, BOT, Endpoint

__all__ = [
    "AffineDiagram",
    "LoopProfile",
    "compose_affine",
    "gen_e",
    "gen_tau",
    "gen_tau_inv",
    "wound_identity",
    "affine_identity",
    "embed_finite",
    "star_wrap",
]


@dataclass(frozen=True)
class LoopProfile:
    """Removed middle loops: contractible count and winding classes."""

    contractible: int = 0
    winding: tuple[int, ...] = ()

    def __add__(self, other: "LoopProfile") -> "LoopProfile":
        return LoopProfile(self.contractible + other.contractible,
                           tuple(sorted(self.winding + other.winding)))

    def is_empty(self) -> bool:
        return self.contractible == 0 and not self.winding


class AffineDiagram:
    """A perfect matching on 2k endpoints with integer winding offsets.

    Edges are stored once each as ``(a, b, w)`` with endpoints ordered
    T1 < ... < Tk < B1 < ... < Bk, ``a < b``, and ``w`` the winding
    accumulated when traversing from a to b.  Equality and hashing use
    this canonical sorted edge list.
    """

    __slots__ = ("k", "edges", "_partner", "_hash")

    def __init__(self, k: int, edges):
        if k < 1:
            raise ValueError("k must be positive")
        canon = []
        for edge in edges:
            a, b, w = edge
            a, b, w = tuple(a), tuple(b), int(w)
            if a == b:
                raise ValueError("an edge cannot pair an endpoint with itself")
            if a > b:
                a, b, w = b, a, -w
            canon.append((a, b, w))
        partner: dict[Endpoint, tuple[Endpoint, int]] = {}
        for a, b, w in canon:
            if a in partner or b in partner:
                raise ValueError("endpoint used twice")
            partner[a] = (b, w)
            partner[b] = (a, -w)
        expected = {(s, i) for s in (TOP, BOT) for i in range(1, k + 1)}
        if set(partner) != expected:
            raise ValueError("edges do not form a perfect matching on 2k dots")
        canon.sort()
        self.k = k
        self.edges = tuple(canon)
        self._partner = partner
        self._hash = None

    def partner(self, p: Endpoint) -> tuple[Endpoint, int]:
        """Partner endpoint and the winding accumulated from p to it."""
        return self._partner[p]

    def total_shift(self) -> int:
        """Sum of top-to-bottom windings over through-strands."""
        total = 0
        for (a, b, w) in self.edges:
            if a[0] == TOP and b[0] == BOT:
                total += w
        return total

    def is_finite(self) -> bool:
        return all(w == 0 for _, _, w in self.edges)

    def matching(self) -> tuple[tuple[Endpoint, Endpoint], ...]:
        return tuple((a, b) for a, b, _ in self.edges)

    def underlying_finite(self) -> TLDiagram:
        """Forget windings; valid only when the matching is planar."""
        return TLDiagram(self.k, self.matching())

    # -- cylinder realizability ---------------------------------------

    def is_cylindrical(self, domains: int | None = None) -> bool:
        """True when the periodic-strip lift is a non-crossing matching.

        Materializes every edge whose left endpoint lies within a window
        range wide enough to catch any crossing pair (at least 3 domains,
        widened by the largest winding offset), then tests all pairs for
        interleaving on the strip boundary.
        """
        k = self.k
        maxw = max((abs(w) for _, _, w in self.edges), default=0)
        span = domains if domains is not None else maxw + 3
        lifted = []
        for (sa, ia), (sb, ib), w in self.edges:
            for m in range(-span, span + 1):
                xa = ia + m * k
                xb = ib + (m + w) * k
                lifted.append(((sa, xa), (sb, xb)))

        big = 10 * k * (span + 2)

        def circ(p):
            side, x = p
            return x if side == TOP else 2 * big - x

        pts = [tuple(sorted((circ(a), circ(b)))) for a, b in lifted]
        pts.sort()
        for i, (a, b) in enumerate(pts):
            for c, d in pts[i + 1:]:
                if c >= b:
                    break
                if a < c < b < d:
                    return False
                if c < a < d < b:  # unreachable after sort, kept for clarity
                    return False
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, AffineDiagram)
                and self.k == other.k and self.edges == other.edges)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.k, self.edges))
        return self._hash

    def __str__(self) -> str:
        def name(p):
            return f"{'T' if p[0] == TOP else 'B'}{p[1]}"
        body = "".join(f"({name(a)},w{w},{name(b)})" for a, b, w in self.edges)
        return f"k={self.k}: {body}"

    def __repr__(self) -> str:
        return f"AffineDiagram({self})"

    def to_json(self):
        def name(p):
            return f"{'T' if p[0] == TOP else 'B'}{p[1]}"
        return [f"{name(a)},w{w},{name(b)}" for a, b, w in self.edges]


def compose_affine(a1: AffineDiagram, a2: AffineDiagram) -> tuple[AffineDiagram, LoopProfile]:
    """Stacked product a1 over a2 with loop classification.

    Windings add along traced strands.  Every removed middle component is
    classified by its net winding: 0 is contractible, |w| = d joins
    winding class d.
    """
    if a1.k != a2.k:
        raise ValueError(f"size mismatch: {a1.k} vs {a2.k}")
    k = a1.k
    edges = []
    seen_middle = set()

    def walk(diagram: int, p: Endpoint):
        cur, offset = p, 0
        d = diagram
        while True:
            dia = a1 if d == 1 else a2
            nxt, w = dia.partner(cur)
            offset += w
            if d == 1 and nxt[0] == TOP:
                return (TOP, nxt[1]), offset
            if d == 2 and nxt[0] == BOT:
                return (BOT, nxt[1]), offset
            seen_middle.add(nxt[1])
            if d == 1:
                d, cur = 2, (TOP, nxt[1])
            else:
                d, cur = 1, (BOT, nxt[1])

    traced = set()
    for i in range(1, k + 1):
        for p, diagram in (((TOP, i), 1), ((BOT, i), 2)):
            if p in traced:
                continue
            end, offset = walk(diagram, p)
            edges.append((p, end, offset))
            traced.add(p)
            traced.add(end)

    contractible = 0
    winding: list[int] = []
    unvisited = set(range(1, k + 1)) - seen_middle
    while unvisited:
        start = unvisited.pop()
        cur, net = start, 0
        while True:
            nxt, w = a1.partner((BOT, cur))
            assert nxt[0] == BOT, "loop component leaked to the boundary"
            net += w
            cur = nxt[1]
            unvisited.discard(cur)
            nxt, w = a2.partner((TOP, cur))
            assert nxt[0] == TOP, "loop component leaked to the boundary"
            net += w
            cur = nxt[1]
            if cur == start:
                break
            unvisited.discard(cur)
        if net == 0:
            contractible += 1
        else:
            winding.append(abs(net))
    return AffineDiagram(k, edges), LoopProfile(contractible, tuple(sorted(winding)))


@lru_cache(maxsize=None)
def affine_identity(k: int) -> AffineDiagram:
    return AffineDiagram(k, [((TOP, i), (BOT, i), 0) for i in range(1, k + 1)])


@lru_cache(maxsize=None)
def wound_identity(k: int, w: int = -1) -> AffineDiagram:
    """Identity matching with strand 1 wound w times around the pole.

    With w = -1 this is the diagram of X^{-eps_1}: the first strand passes
    once around the pole with the orientation fixed by the wrap of the
    first edge used throughout.
    """
    edges = [((TOP, 1), (BOT, 1), w)]
    edges += [((TOP, i), (BOT, i), 0) for i in range(2, k + 1)]
    return AffineDiagram(k, edges)


@lru_cache(maxsize=None)
def gen_tau(k: int) -> AffineDiagram:
    """The rotation: Bi joins T(i+1), with the k-th strand winding."""
    if k < 2:
        raise ValueError("tau requires k >= 2")
    edges = [((TOP, i + 1), (BOT, i), 0) for i in range(1, k)]
    edges.append(((TOP, 1), (BOT, k), -1))
    return AffineDiagram(k, edges)


@lru_cache(maxsize=None)
def gen_tau_inv(k: int) -> AffineDiagram:
    if k < 2:
        raise ValueError("tau requires k >= 2")
    edges = [((TOP, i), (BOT, i + 1), 0) for i in range(1, k)]
    edges.append(((TOP, k), (BOT, 1), 1))
    return AffineDiagram(k, edges)


@lru_cache(maxsize=None)
def gen_e(i: int, k: int) -> AffineDiagram:
    """Generator e_i, indices mod k; e_0 carries the wraparound cups."""
    if k < 2:
        raise ValueError("e_i requires k >= 2")
    if not 0 <= i <= k - 1:
        raise ValueError(f"e_{i} out of range for k={k}")
    if i >= 1:
        edges = [((TOP, i), (TOP, i + 1), 0), ((BOT, i), (BOT, i + 1), 0)]
        edges += [((TOP, j), (BOT, j), 0) for j in range(1, k + 1) if j not in (i, i + 1)]
        return AffineDiagram(k, edges)
    # e_0 = tau e_{k-1} tau^{-1}: cups pairing (T1, Tk) and (B1, Bk)
    # around the pole, through strands elsewhere.
    d, profile = compose_affine(gen_tau(k), gen_e(k - 1, k))
    assert profile.is_empty()
    d, profile = compose_affine(d, gen_tau_inv(k))
    assert profile.is_empty()
    return d


def embed_finite(d: TLDiagram) -> AffineDiagram:
    """The same matching with all winding offsets zero."""
    return AffineDiagram(d.k, [(a, b, 0) for a, b in d.edges])


def star_wrap(d: TLDiagram) -> list[AffineDiagram]:
    """Pole-wrapped companions of a finite diagram.

    Reroutes, around the pole to the left (the orientation of X^{-eps_1}),
    the edge incident to T1 and, separately, the edge incident to B1.
    When T1 is matched to B1 the two reroutes give the same diagram and
    only one is returned; otherwise there are two.  These agree with the
    products X^{-eps_1} * d and d * X^{-eps_1} in the diagram algebra.
    """
    base = embed_finite(d)
    out = []
    for anchor, delta in (((TOP, 1), -1), ((BOT, 1), 1)):
        edges = []
        for a, b, w in base.edges:
            if a == anchor:
                edges.append((a, b, w + delta))
            elif b == anchor:
                edges.append((a, b, w - delta))
            else:
                edges.append((a, b, w))
        wrapped = AffineDiagram(d.k, edges)
        if wrapped not in out:
            out.append(wrapped)
    return out
