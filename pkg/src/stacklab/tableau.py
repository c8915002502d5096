"""Partitions and standard Young tableaux.

Partitions are plain tuples of positive integers in weakly decreasing order
(trailing zeros are never stored).  Tableaux are immutable and validated on
construction, with cells addressed by 1-indexed ``(row, col)`` pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]

#: Default upper bound on the number of cells :func:`enumerate_syt` accepts.
ENUMERATION_CAP = 30


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[k] >= parts[k + 1] for k in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Strip trailing zeros and check the result is a partition."""
    lam = list(parts)
    while lam and lam[-1] == 0:
        lam.pop()
    if not is_partition(lam):
        raise ValueError(f"{tuple(lam)} is not a partition")
    return tuple(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > k) for k in range(lam[0]))


def rectangle(rows: int, cols: int) -> Partition:
    if rows < 1 or cols < 1:
        raise ValueError("rectangle needs positive dimensions")
    return (cols,) * rows


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a partition shape by ``1..n``.

    ``rows`` holds the entries row by row, top to bottom (English notation).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_standard(rows, offset=0)

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def is_rectangular(self) -> bool:
        return len(set(self.shape)) <= 1 and self.size > 0

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        if i < 1 or j < 1:
            raise IndexError(cell)
        return self.rows[i - 1][j - 1]

    def position(self, entry: int) -> tuple[int, int]:
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                if v == entry:
                    return i, j
        raise ValueError(f"{entry} does not occur in tableau")

    def __str__(self) -> str:
        return to_text(self)

    @classmethod
    def parse(cls, text: str) -> "StandardTableau":
        return parse_tableau(text)


def _check_standard(rows: tuple[tuple[int, ...], ...], offset: int) -> None:
    shape = tuple(len(row) for row in rows)
    if not is_partition(shape):
        raise ValueError(f"row lengths {shape} do not form a partition")
    n = sum(shape)
    entries = sorted(v for row in rows for v in row)
    if entries != list(range(offset + 1, offset + n + 1)):
        raise ValueError(f"entries must be exactly {offset + 1}..{offset + n}")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if j + 1 < len(row) and row[j + 1] <= v:
                raise ValueError(f"row {i + 1} is not increasing")
            if i + 1 < len(rows) and j < len(rows[i + 1]) and rows[i + 1][j] <= v:
                raise ValueError(f"column {j + 1} is not increasing")


# -- conversions -------------------------------------------------------------


def chain_of(T: StandardTableau) -> tuple[Partition, ...]:
    """Partition chain ``(∅, λ¹, ..., λⁿ)`` where λⁱ is the shape of entries ≤ i."""
    counts = [0] * len(T.rows)
    steps: list[Partition] = [()]
    for letter in lattice_word(T):
        counts[letter - 1] += 1
        steps.append(as_partition(counts))
    return tuple(steps)


def tableau_from_chain(chain: Sequence[Sequence[int]]) -> StandardTableau:
    if not chain or any(chain[0]):
        raise ValueError("chain must start at the empty partition")
    word = []
    for k in range(1, len(chain)):
        word.append(_added_row(chain[k - 1], chain[k]))
    return tableau_from_lattice_word(word)


def _added_row(small: Sequence[int], big: Sequence[int]) -> int:
    """Row (1-indexed) of the single cell ``big`` adds to ``small``."""
    small, big = as_partition(small), as_partition(big)
    if sum(big) != sum(small) + 1 or len(big) < len(small):
        raise ValueError(f"{big} is not {small} plus one cell")
    padded = small + (0,) * (len(big) - len(small))
    diff = [b - s for s, b in zip(padded, big)]
    if sorted(diff) != [0] * (len(diff) - 1) + [1]:
        raise ValueError(f"{big} is not {small} plus one cell")
    return diff.index(1) + 1


def lattice_word(T: StandardTableau) -> tuple[int, ...]:
    row_of = {}
    for i, row in enumerate(T.rows, start=1):
        for v in row:
            row_of[v] = i
    return tuple(row_of[k] for k in range(1, T.size + 1))


def is_ballot(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for letter in word:
        if letter < 1:
            return False
        if letter > 1 and counts.get(letter - 1, 0) <= counts.get(letter, 0):
            return False
        counts[letter] = counts.get(letter, 0) + 1
    return True


def tableau_from_lattice_word(word: Sequence[int]) -> StandardTableau:
    if not is_ballot(word):
        raise ValueError(f"{''.join(map(str, word))} is not a lattice word")
    rows: list[list[int]] = []
    for k, letter in enumerate(word, start=1):
        if letter > len(rows):
            rows.append([])
        rows[letter - 1].append(k)
    return StandardTableau(tuple(tuple(r) for r in rows))


def transpose(T: StandardTableau) -> StandardTableau:
    shape = T.shape
    cols = conjugate(shape)
    return StandardTableau(
        tuple(tuple(T.rows[i][j] for i in range(cols[j])) for j in range(len(cols)))
    )


def stack(P: StandardTableau, Q: StandardTableau) -> StandardTableau:
    """Place ``Q`` (shifted up by ``|P|``) below ``P``; both the same rectangle."""
    if not P.is_rectangular() or P.shape != Q.shape:
        raise ValueError("stack needs two tableaux of the same rectangular shape")
    n = P.size
    return StandardTableau(P.rows + tuple(tuple(v + n for v in row) for row in Q.rows))


# -- enumeration -------------------------------------------------------------


def enumerate_syt(shape: Sequence[int], cap: int | None = None) -> list[StandardTableau]:
    """All standard tableaux of ``shape``, ordered lexicographically by lattice word."""
    lam = as_partition(shape)
    limit = ENUMERATION_CAP if cap is None else cap
    if sum(lam) > limit:
        raise ValueError(f"shape {lam} has {sum(lam)} cells, above the cap of {limit}")
    return [tableau_from_lattice_word(w) for w in lattice_words(lam)]


def lattice_words(shape: Partition) -> Iterator[tuple[int, ...]]:
    n = sum(shape)
    counts = [0] * len(shape)
    word: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        for i, part in enumerate(shape):
            if counts[i] < part and (i == 0 or counts[i - 1] > counts[i]):
                counts[i] += 1
                word.append(i + 1)
                yield from extend()
                word.pop()
                counts[i] -= 1

    return extend()


def hook_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of ``shape`` by the hook length formula."""
    lam = as_partition(shape)
    cols = conjugate(lam)
    hooks = 1
    for i, part in enumerate(lam):
        for j in range(part):
            hooks *= (part - j - 1) + (cols[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks


# -- text and JSON I/O -------------------------------------------------------


def to_text(T: StandardTableau) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in T.rows)


def to_json(T: StandardTableau) -> dict:
    return {"rows": [list(row) for row in T.rows]}


def parse_tableau(text: str) -> StandardTableau:
    """Read a tableau from the line-per-row text format or ``{"rows": ...}`` JSON."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(stripped)
        rows = data["rows"] if isinstance(data, dict) else data
        return StandardTableau(tuple(tuple(row) for row in rows))
    rows = [tuple(int(tok) for tok in line.split()) for line in stripped.splitlines() if line.strip()]
    return StandardTableau(tuple(rows))


def short(T: StandardTableau) -> str:
    """Compact slash notation, e.g. ``13/25/46``; multi-digit entries are space separated."""
    if all(v < 10 for row in T.rows for v in row):
        return "/".join("".join(map(str, row)) for row in T.rows)
    return "/".join(" ".join(map(str, row)) for row in T.rows)


def from_short(text: str) -> StandardTableau:
    """Inverse of :func:`short`."""
    rows = []
    for part in text.split("/"):
        part = part.strip()
        rows.append(tuple(int(t) for t in part.split()) if " " in part else tuple(int(ch) for ch in part))
    return StandardTableau(tuple(rows))
