"""Robinson–Schensted insertion and Viennot's shadow-line construction.

Every direction is handled by rotating the point set so the light shines
northeast, working there, and mapping results back.  Rotating points and
light together leaves the output tableau pair unchanged.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .tableau import StandardTableau, is_ballot, tableau_from_lattice_word

Point = tuple[int, int]


class Direction(str, Enum):
    NE = "ne"
    SE = "se"
    SW = "sw"
    NW = "nw"

    def to_ne(self, p: Point) -> Point:
        x, y = p
        if self is Direction.NE:
            return (x, y)
        if self is Direction.SE:
            return (-y, x)
        if self is Direction.SW:
            return (-x, -y)
        return (y, -x)

    def from_ne(self, p: Point) -> Point:
        x, y = p
        if self is Direction.NE:
            return (x, y)
        if self is Direction.SE:
            return (y, -x)
        if self is Direction.SW:
            return (-x, -y)
        return (-y, x)

    def precedes(self, a: Point, b: Point) -> bool:
        """``a`` casts a shadow covering ``b``."""
        (ax, ay), (bx, by) = self.to_ne(a), self.to_ne(b)
        return ax <= bx and ay <= by


# -- Robinson–Schensted -------------------------------------------------------


def rs_insert(word: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Row insertion: returns ``(insertion tableau, recording tableau)``."""
    word = [int(v) for v in word]
    if len(set(word)) != len(word):
        raise ValueError("RS insertion needs distinct letters")
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError("RS insertion needs a permutation of 1..n")
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, letter in enumerate(word, start=1):
        row = 0
        while True:
            if row == len(P):
                P.append([letter])
                Q.append([step])
                break
            k = bisect.bisect_left(P[row], letter)
            if k == len(P[row]):
                P[row].append(letter)
                Q[row].append(step)
                break
            letter, P[row][k] = P[row][k], letter
            row += 1
    return StandardTableau(tuple(map(tuple, P))), StandardTableau(tuple(map(tuple, Q)))


def rs_inverse(P: StandardTableau, Q: StandardTableau) -> tuple[int, ...]:
    if P.shape != Q.shape:
        raise ValueError("RS inverse needs two tableaux of the same shape")
    rows = [list(row) for row in P.rows]
    n = P.size
    word = [0] * n
    for step in range(n, 0, -1):
        i, _ = Q.position(step)
        row = i - 1
        letter = rows[row].pop()
        for above in range(row - 1, -1, -1):
            k = bisect.bisect_left(rows[above], letter) - 1
            letter, rows[above][k] = rows[above][k], letter
        word[step - 1] = letter
    return tuple(word)


def greene_stats(word: Sequence[int]) -> tuple[int, int]:
    """Lengths of the longest increasing and longest decreasing subsequences."""
    if len(set(word)) != len(word):
        raise ValueError("greene_stats needs distinct letters")
    inc: list[int] = []
    dec: list[int] = []
    for v in word:
        for tails, key in ((inc, v), (dec, -v)):
            k = bisect.bisect_left(tails, key)
            if k == len(tails):
                tails.append(key)
            else:
                tails[k] = key
    return len(inc), len(dec)


# -- point sets -----------------------------------------------------------------


def check_generic(points: Iterable[Point]) -> frozenset[Point]:
    pts = frozenset((int(x), int(y)) for x, y in points)
    if len({x for x, _ in pts}) != len(pts) or len({y for _, y in pts}) != len(pts):
        raise ValueError("point set must have distinct x and distinct y coordinates")
    return pts


def points_from_permutation(rho: Sequence[int]) -> frozenset[Point]:
    return frozenset((i, v) for i, v in enumerate(rho, start=1))


def ne_block_points(rho: Sequence[int]) -> frozenset[Point]:
    """Cartesian points of the 1's in the northeast block of ``M(ρ)`` for ``ρ`` of size ``2n``."""
    if len(rho) % 2:
        raise ValueError("NE block needs an even size")
    n = len(rho) // 2
    return frozenset((rho[j - 1] - n, n + 1 - j) for j in range(1, n + 1) if rho[j - 1] > n)


@dataclass(frozen=True)
class ShadowDecomposition:
    lines: tuple[frozenset[Point], ...]
    direction: Direction

    def __len__(self) -> int:
        return len(self.lines)


def _ne_layers(pts: Iterable[Point]) -> list[list[Point]]:
    """Minimal layers under the NE order; each layer sorted by x, so y decreases."""
    layers: list[list[Point]] = []
    lows: list[int] = []  # lowest y of each layer; increases with the layer index
    for x, y in sorted(pts):
        # earlier layers each hold a point southwest of (x, y)
        k = bisect.bisect_right(lows, y)
        if k == len(layers):
            layers.append([(x, y)])
            lows.append(y)
        else:
            layers[k].append((x, y))
            lows[k] = y
    return layers


def shadow_lines(points: Iterable[Point], d: Direction | str = Direction.NE) -> ShadowDecomposition:
    d = Direction(d)
    pts = check_generic(points)
    layers = _ne_layers(d.to_ne(p) for p in pts)
    return ShadowDecomposition(tuple(frozenset(d.from_ne(p) for p in layer) for layer in layers), d)


def _ne_line_skeleton(layer: list[Point]) -> list[Point]:
    return [(layer[k + 1][0], layer[k][1]) for k in range(len(layer) - 1)]


def skeleton(points: Iterable[Point], d: Direction | str = Direction.NE) -> frozenset[Point]:
    """Inner corners of every shadow line, unioned."""
    d = Direction(d)
    pts = check_generic(points)
    out = set()
    for layer in _ne_layers(d.to_ne(p) for p in pts):
        out.update(d.from_ne(p) for p in _ne_line_skeleton(layer))
    return frozenset(out)


def skeleta(points: Iterable[Point], d: Direction | str = Direction.NE) -> list[frozenset[Point]]:
    """``[S⁰, S¹, ...]`` up to the last non-empty skeleton."""
    d = Direction(d)
    levels = [check_generic(points)]
    while levels[-1]:
        nxt = skeleton(levels[-1], d)
        if not nxt:
            break
        levels.append(nxt)
    return levels if levels[0] else []


# -- reading the construction off its boundary ---------------------------------


@dataclass(frozen=True)
class ExitLabel:
    """Where a labelled shadow line leaves the picture.

    ``edge`` is one of ``top``, ``right``, ``bottom``, ``left``; ``position``
    is the coordinate along that edge (x for top/bottom, y for left/right).
    """

    edge: str
    position: int
    label: int


# edges hit by the rays that run north / east once the light is turned NE
_EXIT_EDGES = {
    Direction.NE: ("top", "right"),
    Direction.SE: ("right", "bottom"),
    Direction.SW: ("bottom", "left"),
    Direction.NW: ("left", "top"),
}

#: For each direction: (edge, ascending?) giving the P word, then the Q word.
READING = {
    Direction.NE: (("right", True), ("top", True)),
    Direction.SE: (("bottom", True), ("right", False)),
    Direction.SW: (("left", False), ("bottom", False)),
    Direction.NW: (("top", False), ("left", True)),
}


def _edge_position(edge: str, p: Point) -> int:
    return p[0] if edge in ("top", "bottom") else p[1]


def exit_labels(points: Iterable[Point], d: Direction | str = Direction.NE) -> list[ExitLabel]:
    """Two labels per shadow line of every skeleton: skeleton ``i`` lines carry ``i + 1``."""
    d = Direction(d)
    north_edge, east_edge = _EXIT_EDGES[d]
    labels = []
    for level, pts in enumerate(skeleta(points, d)):
        for layer in _ne_layers(d.to_ne(p) for p in pts):
            first, last = d.from_ne(layer[0]), d.from_ne(layer[-1])
            labels.append(ExitLabel(north_edge, _edge_position(north_edge, first), level + 1))
            labels.append(ExitLabel(east_edge, _edge_position(east_edge, last), level + 1))
    return labels


def read_edge(labels: Iterable[ExitLabel], edge: str, ascending: bool) -> tuple[int, ...]:
    hits = sorted((lab.position, lab.label) for lab in labels if lab.edge == edge)
    if not ascending:
        hits.reverse()
    return tuple(label for _, label in hits)


def viennot_words(points: Iterable[Point], d: Direction | str = Direction.NE) -> tuple[tuple[int, ...], tuple[int, ...]]:
    d = Direction(d)
    labels = exit_labels(points, d)
    (p_edge, p_up), (q_edge, q_up) = READING[d]
    return read_edge(labels, p_edge, p_up), read_edge(labels, q_edge, q_up)


def viennot(points: Iterable[Point], d: Direction | str = Direction.NE) -> tuple[StandardTableau, StandardTableau]:
    w_p, w_q = viennot_words(points, d)
    assert is_ballot(w_p) and is_ballot(w_q), (w_p, w_q)
    return tableau_from_lattice_word(w_p), tableau_from_lattice_word(w_q)
