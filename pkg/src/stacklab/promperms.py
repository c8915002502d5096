"""Promotion permutations of rectangular tableaux and their symmetries.

Permutations are one-line tuples over ``1..n``.  Composition is right to
left: ``compose(a, b)(k) == a[b[k]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import jdt, kernels
from .growth import PromotionMatrix
from .tableau import StandardTableau

Permutation = tuple[int, ...]


# -- permutation helpers ------------------------------------------------------


def check_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{list(p)} is not a permutation of 1..{len(p)}")
    return p


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for k, v in enumerate(p, start=1):
        inv[v - 1] = k
    return tuple(inv)


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    return tuple(a[v - 1] for v in b)


def long_cycle(n: int) -> Permutation:
    """``σ = (1 2 ... n)`` in one-line form."""
    return tuple(k % n + 1 for k in range(1, n + 1))


def longest_element(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def rotate(p: Sequence[int]) -> Permutation:
    """``σ⁻¹ p σ`` computed directly: ``k -> p(k + 1) - 1`` mod ``n``."""
    n = len(p)
    return tuple((p[k % n] - 2) % n + 1 for k in range(1, n + 1))


def reflect(p: Sequence[int]) -> Permutation:
    """``w₀ p w₀``: ``k -> n + 1 - p(n + 1 - k)``."""
    n = len(p)
    return tuple(n + 1 - p[n - k] for k in range(1, n + 1))


def fixed_points(p: Sequence[int]) -> list[int]:
    return [k for k, v in enumerate(p, start=1) if k == v]


def is_involution(p: Sequence[int]) -> bool:
    return all(p[v - 1] == k for k, v in enumerate(p, start=1))


def permutation_matrix(p: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Row ``i`` has its single 1 in column ``p(i)``."""
    n = len(p)
    return tuple(tuple(1 if p[i] == j + 1 else 0 for j in range(n)) for i in range(n))


def format_permutation(p: Sequence[int]) -> str:
    return "[" + ", ".join(str(v) for v in p) + "]"


# -- promotion permutations ---------------------------------------------------


def _require_rectangle(T: StandardTableau) -> tuple[int, int]:
    if not T.is_rectangular():
        raise ValueError("promotion permutations need a rectangular tableau")
    return len(T.shape), T.shape[0]


def prom_perms(T: StandardTableau) -> tuple[Permutation, ...]:
    """``(prom_1(T), ..., prom_{r-1}(T))`` for ``T`` of shape ``r x c``."""
    r, c = _require_rectangle(T)
    flat = [v for row in T.rows for v in row]
    return tuple(tuple(p) for p in kernels.prom_table(flat, r, c))


def prom_perms_by_sliding(T: StandardTableau) -> tuple[Permutation, ...]:
    """Same as :func:`prom_perms`, read off explicit gromotion slide records."""
    r, _ = _require_rectangle(T)
    n = T.size
    _, records = jdt.gromote_power(T, n)
    return tuple(tuple((rec.row_entries[i] - 1) % n + 1 for rec in records) for i in range(1, r))


def promotion_matrix(T: StandardTableau) -> PromotionMatrix:
    """``Σ_i i·M(prom_i(T))``."""
    n = T.size
    rows = [[0] * n for _ in range(n)]
    for i, p in enumerate(prom_perms(T), start=1):
        for j, v in enumerate(p):
            rows[j][v - 1] += i
    return PromotionMatrix(tuple(tuple(row) for row in rows))


def prom_ne(S: StandardTableau, i: int) -> list[int]:
    """First half of ``prom_i(S)`` with ``n = |S| / 2`` subtracted from each value.

    Only a permutation of ``1..n`` in general when ``i`` is the middle index.
    """
    perms = prom_perms(S)
    if not 1 <= i <= len(perms):
        raise ValueError(f"no promotion permutation with index {i}")
    n = S.size // 2
    return [v - n for v in perms[i - 1][:n]]


@dataclass
class DihedralReport:
    bijective: bool
    rotation: bool
    reflection: bool
    inverse_pairs: bool

    @property
    def passed(self) -> bool:
        return self.bijective and self.rotation and self.reflection and self.inverse_pairs

    def as_dict(self) -> dict[str, bool]:
        return {"a": self.bijective, "b": self.rotation, "c": self.reflection, "d": self.inverse_pairs}


def verify_dihedral(T: StandardTableau) -> DihedralReport:
    """Check the four symmetry clauses relating ``prom_•`` to ``∂``, ``ε`` and inversion."""
    r, _ = _require_rectangle(T)
    n = T.size
    perms = prom_perms(T)
    bijective = all(sorted(p) == list(range(1, n + 1)) for p in perms)
    promoted = prom_perms(jdt.promote(T))
    evacuated = prom_perms(jdt.evacuate(T))
    rotation = all(promoted[i] == rotate(perms[i]) for i in range(r - 1))
    reflection = all(evacuated[i] == reflect(perms[r - 2 - i]) for i in range(r - 1))
    inverse_pairs = all(perms[r - 2 - i] == inverse(perms[i]) for i in range(r - 1))
    return DihedralReport(bijective, rotation, reflection, inverse_pairs)
