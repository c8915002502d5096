"""Sorting local rules, promotion-evacuation diagrams and promotion matrices.

A local rule square is drawn as::

    lam --> nu
     ^       ^
    kappa -> mu

with ``mu = sort(nu + kappa - lam)`` computed pointwise on zero-padded parts.
A decoration ``i`` records that sorting needed the transposition ``(i i+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .tableau import Partition, StandardTableau, as_partition, chain_of, conjugate, stack
from . import jdt


def _pad(parts: Sequence[int], length: int) -> list[int]:
    return list(parts) + [0] * (length - len(parts))


def _contains(big: Sequence[int], small: Sequence[int]) -> bool:
    if len(small) > len(big):
        return False
    return all(b >= s for b, s in zip(big, _pad(small, len(big))))


def _sort_with_decoration(values: list[int]) -> tuple[Partition, int | None]:
    descents = [k for k in range(len(values) - 1) if values[k] < values[k + 1]]
    if not descents:
        return as_partition(values), None
    if len(descents) != 1 or values[descents[0] + 1] - values[descents[0]] != 1:
        raise ValueError(f"{values} is not one simple transposition away from sorted")
    k = descents[0]
    values[k], values[k + 1] = values[k + 1], values[k]
    return as_partition(values), k + 1


def _fill(a: Sequence[int], b: Sequence[int], middle: Sequence[int]) -> tuple[Partition, int | None]:
    length = max(len(a), len(b), len(middle))
    values = [x + y - z for x, y, z in zip(_pad(a, length), _pad(b, length), _pad(middle, length))]
    if any(v < 0 for v in values):
        raise ValueError("local rule produced a negative part")
    return _sort_with_decoration(values)


def _check_square(kappa, side, nu) -> None:
    if sum(side) != sum(kappa) + 1 or sum(nu) != sum(kappa) + 2:
        raise ValueError("local rule needs |kappa| + 1 = |side| = |nu| - 1")
    if not (_contains(side, kappa) and _contains(nu, side)):
        raise ValueError("local rule needs kappa ⊂ side ⊂ nu")


def local_rule_down(kappa: Sequence[int], lam: Sequence[int], nu: Sequence[int]) -> tuple[Partition, int | None]:
    """Fill the lower-right corner ``mu`` of a square from ``kappa``, ``lam`` and ``nu``."""
    kappa, lam, nu = as_partition(kappa), as_partition(lam), as_partition(nu)
    _check_square(kappa, lam, nu)
    return _fill(nu, kappa, lam)


def local_rule_up(kappa: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> tuple[Partition, int | None]:
    """Fill the upper-left corner ``lam`` of a square from ``kappa``, ``mu`` and ``nu``."""
    kappa, mu, nu = as_partition(kappa), as_partition(mu), as_partition(nu)
    _check_square(kappa, mu, nu)
    return _fill(nu, kappa, mu)


@dataclass(frozen=True)
class LocalSquare:
    kappa: Partition
    lam: Partition
    mu: Partition
    nu: Partition
    decoration: int | None = None

    def is_valid(self) -> bool:
        """Both sorting identities hold and the decoration matches the vertical-domino case."""
        try:
            down = local_rule_down(self.kappa, self.lam, self.nu)
            up = local_rule_up(self.kappa, self.mu, self.nu)
        except ValueError:
            return False
        return down == (self.mu, self.decoration) and up == (self.lam, self.decoration) and (
            self.decoration == _vertical_domino_row(self.kappa, self.nu)
        )


def _vertical_domino_row(kappa: Partition, nu: Partition) -> int | None:
    """Upper row of the two added cells if they sit in one column, else ``None``."""
    length = len(nu)
    added = [(i + 1, j + 1) for i, (k, v) in enumerate(zip(_pad(kappa, length), nu)) for j in range(k, v)]
    (r1, c1), (r2, c2) = sorted(added)
    return r1 if c1 == c2 and r2 == r1 + 1 else None


# -- promotion-evacuation diagrams ------------------------------------------


@dataclass(frozen=True)
class PEDiagram:
    """Partitions ``lam[(j, t)]`` for ``0 <= j <= n``, ``j <= t <= j + n``.

    Row ``j`` is the chain of ``∂^j(T)``.  ``decorations[(j, t)]`` is the
    decoration of the square whose top edge runs from ``(j, t-1)`` to ``(j, t)``.
    """

    n: int
    lam: dict[tuple[int, int], Partition]
    decorations: dict[tuple[int, int], int]

    def row(self, j: int) -> tuple[Partition, ...]:
        return tuple(self.lam[(j, t)] for t in range(j, j + self.n + 1))

    def column(self, t: int) -> tuple[Partition, ...]:
        """Column ``t`` read bottom to top."""
        rows = [j for j in range(self.n, -1, -1) if (j, t) in self.lam]
        return tuple(self.lam[(j, t)] for j in rows)


def pe_diagram(T: StandardTableau) -> PEDiagram:
    if not T.is_rectangular():
        raise ValueError("promotion-evacuation diagrams need a rectangular tableau")
    n = T.size
    full = T.shape
    lam: dict[tuple[int, int], Partition] = {}
    decorations: dict[tuple[int, int], int] = {}
    for t, part in enumerate(chain_of(T)):
        lam[(0, t)] = part
    for j in range(1, n + 1):
        lam[(j, j)] = ()
        for t in range(j, j + n - 1):
            mu, dec = local_rule_down(lam[(j, t)], lam[(j - 1, t)], lam[(j - 1, t + 1)])
            lam[(j, t + 1)] = mu
            if dec is not None:
                decorations[(j - 1, t + 1)] = dec
        lam[(j, j + n)] = full
    return PEDiagram(n, lam, decorations)


# -- promotion matrices ------------------------------------------------------


@dataclass(frozen=True)
class PromotionMatrix:
    """Square integer matrix, stored row-major with 1-indexed access ``M[i, j]``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        if any(len(row) != len(entries) for row in entries):
            raise ValueError("promotion matrix must be square")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i - 1][j - 1]

    def cartesian(self, x: int, y: int) -> int:
        """``M(x, y) = M[n + 1 - y, x]``: ``(1, 1)`` is the lower-left entry."""
        return self[self.n + 1 - y, x]

    def block(self, which: str) -> "PromotionMatrix":
        """One of the four half-size blocks ``NE``, ``NW``, ``SE``, ``SW``."""
        if self.n % 2:
            raise ValueError("blocks need an even size")
        h = self.n // 2
        rows = slice(0, h) if which[0] == "N" else slice(h, self.n)
        cols = slice(h, self.n) if which[1] == "E" else slice(0, h)
        return PromotionMatrix(tuple(row[cols] for row in self.entries[rows]))

    def structure_violations(self, r: int) -> list[str]:
        """Departures from the shape every promotion matrix of an ``r``-row rectangle has."""
        n = self.n
        problems = []
        expected = list(range(1, r))
        for a in range(1, n + 1):
            if self[a, a]:
                problems.append(f"nonzero diagonal at {a}")
            east = [self[a, (a + k - 1) % n + 1] for k in range(1, n)]
            if [v for v in east if v] != expected:
                problems.append(f"row {a} does not read 1..{r - 1} eastward")
            north = [self[(a - k - 1) % n + 1, a] for k in range(1, n)]
            if [v for v in north if v] != expected:
                problems.append(f"column {a} does not read 1..{r - 1} northward")
            for b in range(1, n + 1):
                v = self[a, b]
                if v and self[b, a] != r - v:
                    problems.append(f"entry {v} at ({a},{b}) lacks {r - v} at ({b},{a})")
        return problems

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        return format_matrix(self.entries)


def format_matrix(entries) -> str:
    """Aligned columns with ``·`` in place of zeros."""
    cells = [["·" if v == 0 else str(v) for v in row] for row in entries]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def promotion_matrix_from_diagram(T: StandardTableau) -> PromotionMatrix:
    """Wrap the decorations of ``pe_diagram(T)`` around modulo ``n``.

    Gromotion step ``j`` is matrix row ``j``; the decoration above lower-row
    index ``j`` at right column ``t`` lands in column ``t`` reduced mod ``n``.
    """
    diagram = pe_diagram(T)
    n = diagram.n
    rows = [[0] * n for _ in range(n)]
    for (j, t), dec in diagram.decorations.items():
        rows[j][(t - 1) % n] = dec
    return PromotionMatrix(tuple(tuple(row) for row in rows))


# -- vertical sums and the NE block of a stacked tableau ---------------------


def vertical_sum(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """Stack the columns of ``mu`` under those of ``lam``."""
    a, b = conjugate(as_partition(lam)), conjugate(as_partition(mu))
    length = max(len(a), len(b))
    return conjugate(tuple(x + y for x, y in zip(_pad(a, length), _pad(b, length))))


def ne_growth_grid(P: StandardTableau, Q: StandardTableau, check: bool = True) -> dict[tuple[int, int], Partition]:
    """Partitions ``λ(x, y)`` framing the NE block of ``PM(stack(P, Q))``.

    Built as ``chain(Q)[x] +' chain(ε(P))[y]``.  With ``check`` set, the
    block is refilled with local rules from its left and top edges and the two
    constructions must agree.
    """
    if P.shape != Q.shape or not P.is_rectangular():
        raise ValueError("ne_growth_grid needs two tableaux of the same rectangular shape")
    n = P.size
    q_chain = chain_of(Q)
    e_chain = chain_of(jdt.evacuate(P))
    grid = {(x, y): vertical_sum(q_chain[x], e_chain[y]) for x in range(n + 1) for y in range(n + 1)}
    if check:
        refilled: dict[tuple[int, int], Partition] = {}
        for y in range(n + 1):
            refilled[(0, y)] = e_chain[y]
        for x in range(n + 1):
            refilled[(x, n)] = vertical_sum(P.shape, q_chain[x])
        for y in range(n, 0, -1):
            for x in range(1, n + 1):
                mu, _ = local_rule_down(refilled[(x - 1, y - 1)], refilled[(x - 1, y)], refilled[(x, y)])
                refilled[(x, y - 1)] = mu
        if refilled != grid:
            bad = sorted(k for k in grid if grid[k] != refilled[k])
            raise AssertionError(f"vertical-sum grid disagrees with local rules at {bad[:5]}")
    return grid


def ne_block_by_local_rules(P: StandardTableau, Q: StandardTableau) -> dict[tuple[int, int], Partition]:
    """The same block read straight out of ``pe_diagram(stack(P, Q))``."""
    n = P.size
    diagram = pe_diagram(stack(P, Q))
    return {(x, y): diagram.lam[(n - y, n + x)] for x in range(n + 1) for y in range(n + 1)}
