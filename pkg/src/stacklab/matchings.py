"""Perfect matchings and their crossing and nesting numbers."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels


@dataclass(frozen=True)
class PerfectMatching:
    """Blocks ``(a, b)`` with ``a < b`` covering ``1..2n`` exactly once."""

    blocks: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        blocks = frozenset(tuple(sorted((int(a), int(b)))) for a, b in self.blocks)
        covered = sorted(v for blk in blocks for v in blk)
        if covered != list(range(1, 2 * len(blocks) + 1)):
            raise ValueError("blocks must cover 1..2n exactly once")
        if any(a == b for a, b in blocks):
            raise ValueError("blocks must have two distinct elements")
        object.__setattr__(self, "blocks", blocks)

    @property
    def size(self) -> int:
        """Number of points, ``2n``."""
        return 2 * len(self.blocks)

    def sorted_blocks(self) -> list[tuple[int, int]]:
        return sorted(self.blocks)

    def to_involution(self) -> tuple[int, ...]:
        partner = [0] * self.size
        for a, b in self.blocks:
            partner[a - 1] = b
            partner[b - 1] = a
        return tuple(partner)

    def to_text(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.sorted_blocks())

    def to_json(self) -> list[list[int]]:
        return [list(blk) for blk in self.sorted_blocks()]


def matching_from_involution(rho: Sequence[int]) -> PerfectMatching:
    n = len(rho)
    if n % 2:
        raise ValueError("a perfect matching needs an even ground set")
    for k, v in enumerate(rho, start=1):
        if not 1 <= v <= n or v == k or rho[v - 1] != k:
            raise ValueError(f"{list(rho)} is not a fixed-point-free involution")
    return PerfectMatching(frozenset((k, v) for k, v in enumerate(rho, start=1) if k < v))


def parse_matching(text: str) -> PerfectMatching:
    """JSON pair list, ``a-b`` comma-separated text, or an involution in one-line form."""
    text = text.strip()
    if "-" in text and not text.startswith("["):
        pairs = [tok.split("-") for tok in text.replace("\n", ",").split(",") if tok.strip()]
        return PerfectMatching(frozenset((int(a), int(b)) for a, b in pairs))
    data = json.loads(text if text.startswith("[") else "[" + ",".join(text.split()) + "]")
    if data and isinstance(data[0], list):
        return PerfectMatching(frozenset(tuple(blk) for blk in data))
    return matching_from_involution(data)


def crossing_number(M: PerfectMatching) -> int:
    return kernels.crossing_nesting(M.to_involution())[0]


def nesting_number(M: PerfectMatching) -> int:
    return kernels.crossing_nesting(M.to_involution())[1]


def crossing_nesting(M: PerfectMatching | Sequence[int]) -> tuple[int, int]:
    partner = M.to_involution() if isinstance(M, PerfectMatching) else list(M)
    return kernels.crossing_nesting(partner)


def is_bipartite_block(rho: Sequence[int]) -> bool:
    """Every 2-cycle joins the lower half ``1..n`` to the upper half ``n+1..2n``."""
    n = len(rho) // 2
    return all((k <= n) != (v <= n) for k, v in enumerate(rho, start=1))


def all_matchings(m: int) -> Iterator[PerfectMatching]:
    """Every perfect matching of ``1..m`` (``(m-1)!!`` of them)."""

    def build(rest: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not rest:
            yield []
            return
        a = rest[0]
        for k in range(1, len(rest)):
            remaining = rest[1:k] + rest[k + 1:]
            for tail in build(remaining):
                yield [(a, rest[k])] + tail

    if m % 2:
        return
    for blocks in build(list(range(1, m + 1))):
        yield PerfectMatching(frozenset(blocks))


def bipartite_involution(pi: Iterable[int]) -> tuple[int, ...]:
    """The involution pairing ``j`` with ``n + pi(j)``."""
    pi = list(pi)
    n = len(pi)
    rho = [0] * (2 * n)
    for j, v in enumerate(pi, start=1):
        rho[j - 1] = n + v
        rho[n + v - 1] = j
    return tuple(rho)
