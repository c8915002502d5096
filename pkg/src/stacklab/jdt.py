"""Jeu de taquin and Schützenberger's promotion, evacuation and gromotion."""

from __future__ import annotations

from dataclasses import dataclass, field

from .tableau import StandardTableau, _check_standard


@dataclass(frozen=True)
class ShiftedTableau:
    """A standard tableau whose alphabet is ``offset+1 .. offset+n``.

    Repeated gromotion moves the alphabet upward, so ``gromote`` works on these.
    """

    rows: tuple[tuple[int, ...], ...]
    offset: int = 0

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.offset < 0:
            raise ValueError("offset must be non-negative")
        _check_standard(rows, offset=self.offset)

    @classmethod
    def from_standard(cls, T: StandardTableau, offset: int = 0) -> "ShiftedTableau":
        return cls(tuple(tuple(v + offset for v in row) for row in T.rows), offset)

    def to_standard(self) -> StandardTableau:
        """Subtract the offset, giving an ordinary standard tableau."""
        return StandardTableau(tuple(tuple(v - self.offset for v in row) for row in self.rows))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True)
class SlideRecord:
    """Trace of one slide of the empty cell from ``(1, 1)`` to an outer corner.

    ``path`` lists the 1-indexed cells the empty cell visits.  ``row_entries``
    maps ``i`` to the entry that moved up from row ``i + 1`` into row ``i``.
    """

    path: tuple[tuple[int, int], ...]
    row_entries: dict[int, int] = field(default_factory=dict)


def _slide_out(grid: list[list[int]], shape: tuple[int, ...]) -> SlideRecord:
    """Slide the hole at the upper-left cell of ``grid`` to an outer corner, in place.

    Returns the record; the hole ends up at the last cell of ``path``.
    """
    i = j = 0
    path = [(1, 1)]
    moved_up: dict[int, int] = {}
    while True:
        right = grid[i][j + 1] if j + 1 < shape[i] else None
        below = grid[i + 1][j] if i + 1 < len(shape) and j < shape[i + 1] else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            grid[i][j] = right
            j += 1
        else:
            grid[i][j] = below
            moved_up[i + 1] = below
            i += 1
        path.append((i + 1, j + 1))
    return SlideRecord(tuple(path), moved_up)


def gromote(T: ShiftedTableau | StandardTableau) -> tuple[ShiftedTableau, SlideRecord]:
    """One step of gromotion: remove the minimum, rectify, add ``max + 1`` in the vacated corner."""
    if isinstance(T, StandardTableau):
        T = ShiftedTableau.from_standard(T)
    shape = T.shape
    n = sum(shape)
    grid = [list(row) for row in T.rows]
    record = _slide_out(grid, shape)
    i, j = record.path[-1]
    grid[i - 1][j - 1] = T.offset + n + 1
    return ShiftedTableau(tuple(tuple(row) for row in grid), T.offset + 1), record


def gromote_power(T: ShiftedTableau | StandardTableau, k: int) -> tuple[ShiftedTableau, list[SlideRecord]]:
    if k < 0:
        raise ValueError("gromotion power must be non-negative")
    if isinstance(T, StandardTableau):
        T = ShiftedTableau.from_standard(T)
    records = []
    for _ in range(k):
        T, rec = gromote(T)
        records.append(rec)
    return T, records


def promote(T: StandardTableau) -> StandardTableau:
    shifted, _ = gromote(ShiftedTableau.from_standard(T))
    return shifted.to_standard()


def promote_power(T: StandardTableau, k: int) -> StandardTableau:
    """``∂^k(T)``; negative ``k`` uses ``∂^{-1} = ε∂ε``."""
    if k < 0:
        return evacuate(promote_power(evacuate(T), -k))
    for _ in range(k):
        T = promote(T)
    return T


def evacuate(T: StandardTableau) -> StandardTableau:
    """Delete ``1, 2, ..., n`` in turn, rectifying each time; vacated corners get ``n, n-1, ..., 1``."""
    n = T.size
    grid = [list(row) for row in T.rows]
    shape = list(T.shape)
    out = [[0] * part for part in T.shape]
    for k in range(n):
        record = _slide_out(grid, tuple(shape))
        i, j = record.path[-1]
        out[i - 1][j - 1] = n - k
        grid[i - 1].pop()
        shape[i - 1] -= 1
        if shape[i - 1] == 0:
            shape.pop()
            grid.pop()
    return StandardTableau(tuple(tuple(row) for row in out))
