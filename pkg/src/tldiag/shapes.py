"""Partitions, skew shapes, standard tableaux, and branching graphs.

Two branching graphs appear.  The Hecke-side graph has level-k vertices
the skew shapes lambda/mu with k boxes (row count bounded by an explicit
nrows context parameter) and edges "add one box", labeled by the content
of the added box.  The two-row graph replaces each shape by the single
integer lambda_1 - lambda_2; its level-k vertex set is
{mu_1 - mu_2 + k, mu_1 - mu_2 + k - 2, ...} intersected with the
nonnegative integers, and paths with unit steps correspond to standard
tableaux of two-row skew shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Partition",
    "SkewShape",
    "StandardTableau",
    "TLPath",
    "content",
    "add_box_covers",
    "standard_tableaux",
    "tl_paths",
    "tableau_to_path",
    "path_to_tableau",
    "tl_level_vertices",
    "hecke_level_vertices",
    "two_row_from_path_data",
]

Box = tuple[int, int]  # (row, col), 1-based


def _validate_parts(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 0 for p in parts):
        raise ValueError("partition parts must be nonnegative")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts=()):
        object.__setattr__(self, "parts", _validate_parts(parts))

    def size(self) -> int:
        return sum(self.parts)

    def nrows(self) -> int:
        return len(self.parts)

    def row(self, r: int) -> int:
        return self.parts[r - 1] if r <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(other.row(r) <= self.row(r) for r in range(1, other.nrows() + 1))

    def boxes(self) -> list[Box]:
        return [(r, c) for r, width in enumerate(self.parts, 1)
                for c in range(1, width + 1)]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"


def content(box: Box) -> int:
    """The diagonal number col - row of a box."""
    r, c = box
    if r < 1 or c < 1:
        raise ValueError("rows and columns are 1-based")
    return c - r


def add_box_covers(nu: Partition, nrows: int) -> list[Partition]:
    """All partitions with at most nrows rows obtained by adding one box."""
    out = []
    for r in range(1, min(nu.nrows() + 1, nrows) + 1):
        new = list(nu.parts) + [0] * (r - len(nu.parts))
        new[r - 1] += 1
        try:
            out.append(Partition(new))
        except ValueError:
            continue
    # Adding to row r is legal iff row r stays <= row r-1; the constructor
    # rejects the rest, so just dedupe and keep construction order.
    seen = set()
    result = []
    for p in out:
        if p.parts not in seen:
            seen.add(p.parts)
            result.append(p)
    return result


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def boxes(self) -> list[Box]:
        return [(r, c) for r in range(1, self.outer.nrows() + 1)
                for c in range(self.inner.row(r) + 1, self.outer.row(r) + 1)]

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class StandardTableau:
    """A bijection boxes -> 1..k increasing along rows and down columns."""

    shape: SkewShape
    entries: tuple[tuple[Box, int], ...]

    def __post_init__(self):
        boxes = self.shape.boxes()
        mapping = dict(self.entries)
        if sorted(mapping.values()) != list(range(1, len(boxes) + 1)):
            raise ValueError("entries are not a bijection onto 1..k")
        if set(mapping) != set(boxes):
            raise ValueError("entries do not cover the shape")
        for (r, c), v in mapping.items():
            right = mapping.get((r, c + 1))
            below = mapping.get((r + 1, c))
            if right is not None and right < v:
                raise ValueError("row increase violated")
            if below is not None and below < v:
                raise ValueError("column increase violated")

    def box_of(self, i: int) -> Box:
        for box, v in self.entries:
            if v == i:
                return box
        raise KeyError(i)

    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[int]]:
        mapping = dict(self.entries)
        out = []
        for r in range(1, self.shape.outer.nrows() + 1):
            row = [mapping[(r, c)]
                   for c in range(self.shape.inner.row(r) + 1, self.shape.outer.row(r) + 1)]
            out.append(row)
        return out

    def __str__(self) -> str:
        return "|".join(",".join(map(str, row)) for row in self.rows())


def standard_tableaux(shape: SkewShape) -> list[StandardTableau]:
    """All standard tableaux of a skew shape (empty shape: one tableau)."""
    k = shape.size()
    results: list[StandardTableau] = []

    def peel(outer_parts: tuple[int, ...], remaining: int, acc):
        if remaining == 0:
            results.append(StandardTableau(shape, tuple(acc)))
            return
        outer = Partition(outer_parts)
        for r in range(1, outer.nrows() + 1):
            c = outer.row(r)
            if c <= shape.inner.row(r):
                continue
            if r < outer.nrows() and outer.row(r + 1) == c:
                continue  # not a removable corner
            new_parts = list(outer.parts)
            new_parts[r - 1] -= 1
            acc.append(((r, c), remaining))
            peel(tuple(new_parts), remaining - 1, acc)
            acc.pop()

    peel(shape.outer.parts, k, [])
    return results


@dataclass(frozen=True)
class TLPath:
    """A walk p^(0), ..., p^(k) with unit steps staying nonnegative."""

    steps: tuple[int, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a path needs at least its starting label")
        if any(s < 0 for s in self.steps):
            raise ValueError("labels must stay nonnegative")
        for a, b in zip(self.steps, self.steps[1:]):
            if abs(a - b) != 1:
                raise ValueError("steps must change the label by exactly 1")

    @property
    def start(self) -> int:
        return self.steps[0]

    @property
    def end(self) -> int:
        return self.steps[-1]

    def length(self) -> int:
        return len(self.steps) - 1

    def __str__(self) -> str:
        return ",".join(map(str, self.steps))


def tl_level_vertices(start: int, k: int) -> list[int]:
    """Level-k vertex labels {start+k, start+k-2, ..., start-k} intersect Z>=0."""
    return [v for v in range(start + k, start - k - 1, -2) if v >= 0]


def tl_paths(start: int, k: int) -> list[TLPath]:
    """All k-step paths in the two-row branching graph from label start."""
    if start < 0:
        raise ValueError("starting label must be nonnegative")
    paths = [[start]]
    for _ in range(k):
        new = []
        for p in paths:
            last = p[-1]
            if last + 1 >= 0:
                new.append(p + [last + 1])
            if last - 1 >= 0:
                new.append(p + [last - 1])
        paths = new
    return [TLPath(tuple(p)) for p in paths]


def two_row_from_path_data(start: int, m: int) -> Partition:
    """The two-row mu with mu_1 - mu_2 = start and |mu| = m."""
    if (m - start) % 2 or m < start:
        raise ValueError(f"no two-row partition with difference {start} and size {m}")
    mu2 = (m - start) // 2
    return Partition((mu2 + start, mu2))


def tableau_to_path(t: StandardTableau) -> TLPath:
    """Labels lambda_1 - lambda_2 along a two-row tableau's growth."""
    mu = t.shape.inner
    if t.shape.outer.nrows() > 2:
        raise ValueError("the two-row correspondence needs at most 2 rows")
    lam = [mu.row(1), mu.row(2)]
    labels = [lam[0] - lam[1]]
    order = sorted(t.entries, key=lambda item: item[1])
    for (r, _c), _v in order:
        lam[r - 1] += 1
        labels.append(lam[0] - lam[1])
    return TLPath(tuple(labels))


def path_to_tableau(p: TLPath, m: int) -> StandardTableau:
    """Inverse of tableau_to_path, given |mu| = m."""
    mu = two_row_from_path_data(p.start, m)
    lam = [mu.row(1), mu.row(2)]
    entries = []
    for i, (a, b) in enumerate(zip(p.steps, p.steps[1:]), 1):
        row = 1 if b == a + 1 else 2
        lam[row - 1] += 1
        entries.append(((row, lam[row - 1]), i))
    outer = Partition(tuple(lam))
    return StandardTableau(SkewShape(outer, mu), tuple(entries))


@lru_cache(maxsize=None)
def hecke_level_vertices(mu_parts: tuple[int, ...], level: int,
                         nrows: int) -> tuple[SkewShape, ...]:
    """Skew shapes lambda/mu with `level` boxes and at most nrows rows."""
    mu = Partition(mu_parts)
    frontier = {mu.parts}
    for _ in range(level):
        new = set()
        for parts in frontier:
            for nxt in add_box_covers(Partition(parts), nrows):
                new.add(nxt.parts)
        frontier = new
    return tuple(SkewShape(Partition(parts), mu) for parts in sorted(frontier))
