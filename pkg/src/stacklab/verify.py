"""Exhaustive sweeps checking the stacking theorems on whole rectangular shapes."""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from . import jdt
from .matchings import bipartite_involution, crossing_nesting, is_bipartite_block
from .promperms import fixed_points, is_involution, prom_perms
from .tableau import StandardTableau, enumerate_syt, hook_count, rectangle, stack, to_json, transpose
from .viennot import Direction, ne_block_points, rs_inverse, shadow_lines, skeleta, skeleton, viennot

PAIR_CAP = 250_000
INVOLUTION_CAP = 8

DEFAULT_SWEEP = [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3)]
EXTENDED_SWEEP = [(3, 4), (4, 3)]


@dataclass
class VerifyReport:
    theorem: str
    shape: tuple[int, int]
    pairs_checked: int = 0
    objects_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "shape": f"{self.shape[0]}x{self.shape[1]}",
            "pairs": self.pairs_checked,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 6),
        }
        if self.objects_checked:
            out["involutions"] = self.objects_checked
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        r, c = self.shape
        extra = f", {self.objects_checked} involutions" if self.objects_checked else ""
        status = "PASS" if self.passed else "FAIL"
        return f"{self.theorem} {r}x{c}: {self.pairs_checked} pairs{extra}, {len(self.failures)} failures [{status}]"


def _witness(P: StandardTableau, Q: StandardTableau, clause: str) -> dict:
    return {"clause": clause, "P": to_json(P)["rows"], "Q": to_json(Q)["rows"]}


def _shape_tableaux(r: int, c: int) -> list[StandardTableau]:
    count = hook_count(rectangle(r, c))
    if count ** 2 > PAIR_CAP:
        raise ValueError(f"{r}x{c} has {count ** 2} pairs, above the cap of {PAIR_CAP}")
    return enumerate_syt(rectangle(r, c))


# -- per-pair checks ---------------------------------------------------------------


def check_prom_rs(P: StandardTableau, Q: StandardTableau) -> list[str]:
    r = len(P.shape)
    n = P.size
    middle = prom_perms(stack(P, Q))[r - 1]
    ne = [v - n for v in middle[:n]]
    return [] if tuple(ne) == rs_inverse(transpose(Q), transpose(P)) else ["prom-rs"]


def _diagonal_blocks(perms) -> tuple[tuple, tuple]:
    """NW and SE blocks of ``Σ i·M(perms[i-1])``."""
    size = len(perms[0])
    n = size // 2
    rows = [[0] * size for _ in range(size)]
    for i, p in enumerate(perms, start=1):
        for j, v in enumerate(p):
            rows[j][v - 1] = i
    return tuple(tuple(row[:n]) for row in rows[:n]), tuple(tuple(row[n:]) for row in rows[n:])


class _MainChecker:
    """Checks for one shape; caches the reference NW/SE blocks per tableau."""

    def __init__(self, tabs: list[StandardTableau]):
        self.tabs = tabs
        self.nw_ref: dict[int, tuple] = {}
        self.se_ref: dict[int, tuple] = {}

    def blocks(self, a: int, b: int) -> tuple[tuple, tuple]:
        return _diagonal_blocks(prom_perms(stack(self.tabs[a], self.tabs[b])))

    def check(self, a: int, b: int) -> list[str]:
        P, Q = self.tabs[a], self.tabs[b]
        r = len(P.shape)
        n = P.size
        perms = prom_perms(stack(P, Q))
        failures = []
        pts = ne_block_points(perms[r - 1])

        if viennot(pts, Direction.NE) != (jdt.evacuate(P), Q):
            failures.append("main-viennot")

        for d, sign, clause in ((Direction.NE, 1, "main-skeleta-ne"), (Direction.SW, -1, "main-skeleta-sw")):
            levels = skeleta(pts, d)
            for k in range(r):
                expected = levels[k] if k < len(levels) else frozenset()
                if ne_block_points(perms[r - 1 + sign * k]) != expected:
                    failures.append(clause)
                    break
            for k in range(min(r - 1, len(levels) - 1)):
                here = shadow_lines(levels[k], d).lines
                there = shadow_lines(levels[k + 1], d).lines
                if len(there) > len(here) or any(
                    skeleton(line, d) != (there[j] if j < len(there) else frozenset())
                    for j, line in enumerate(here)
                ):
                    failures.append(clause.replace("skeleta", "refine"))
                    break

        nw, se = _diagonal_blocks(perms)
        for block in (nw, se):
            for x in range(n):
                for y in range(n):
                    v = block[x][y]
                    if v and ((y > x and v >= r) or (y < x and v <= r)):
                        failures.append("main-triangles")
                        break
                else:
                    continue
                break
        if a not in self.nw_ref:
            self.nw_ref[a] = nw if b == 0 else self.blocks(a, 0)[0]
        if b not in self.se_ref:
            self.se_ref[b] = se if a == 0 else self.blocks(0, b)[1]
        if nw != self.nw_ref[a]:
            failures.append("main-nw-depends-on-P")
        if se != self.se_ref[b]:
            failures.append("main-se-depends-on-Q")
        return failures


def _run_chunk(args: tuple[str, int, int, list[tuple[int, int]]]) -> list[dict]:
    theorem, r, c, pairs = args
    tabs = _shape_tableaux(r, c)
    checker = _MainChecker(tabs) if theorem == "main" else None
    failures: list[dict] = []
    for a, b in pairs:
        P, Q = tabs[a], tabs[b]
        clauses = checker.check(a, b) if checker else check_prom_rs(P, Q)
        failures.extend(_witness(P, Q, cl) for cl in clauses)
    return failures


def _sweep(theorem: str, r: int, c: int, workers: int, sample: int | None, seed: int | None) -> VerifyReport:
    start = time.perf_counter()
    tabs = _shape_tableaux(r, c)
    pairs = [(a, b) for a in range(len(tabs)) for b in range(len(tabs))]
    if sample is not None and sample < len(pairs):
        pairs = sorted(random.Random(seed).sample(pairs, sample))
    report = VerifyReport(theorem, (r, c), pairs_checked=len(pairs))
    if workers <= 1 or len(pairs) < 2 * workers:
        report.failures = _run_chunk((theorem, r, c, pairs))
    else:
        size = -(-len(pairs) // workers)
        chunks = [(theorem, r, c, pairs[k:k + size]) for k in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_chunk, chunks):
                report.failures.extend(part)
    report.elapsed = time.perf_counter() - start
    return report


def verify_thm_prom_rs(r: int, c: int, workers: int = 1, sample: int | None = None, seed: int | None = None) -> VerifyReport:
    """``prom_r^NE(stack(P, Q)) == RS⁻¹(Qᵀ, Pᵀ)`` for every pair of ``r x c`` tableaux."""
    return _sweep("prom-rs", r, c, workers, sample, seed)


def verify_thm_main(r: int, c: int, workers: int = 1, sample: int | None = None, seed: int | None = None) -> VerifyReport:
    """NE-block skeleta, Viennot output and block structure of ``PM(stack(P, Q))``."""
    return _sweep("main", r, c, workers, sample, seed)


@lru_cache(maxsize=None)
def crossing_nesting_histogram(n: int) -> dict[tuple[int, int], int]:
    """Counts of ``(crossing, nesting)`` over all ``n!`` bipartite-block involutions of ``1..2n``."""
    hist: dict[tuple[int, int], int] = {}
    for pi in permutations(range(1, n + 1)):
        key = crossing_nesting(bipartite_involution(pi))
        hist[key] = hist.get(key, 0) + 1
    return hist


def verify_cor_image(r: int, c: int) -> VerifyReport:
    """The middle promotion permutation of stacked tableaux is injective onto
    the bipartite-block involutions with crossing number ``r`` and nesting number ``c``."""
    n = r * c
    if n > INVOLUTION_CAP:
        raise ValueError(f"{r}x{c} needs {n}! involutions, above the cap n <= {INVOLUTION_CAP}")
    start = time.perf_counter()
    tabs = _shape_tableaux(r, c)
    report = VerifyReport("cor", (r, c), pairs_checked=len(tabs) ** 2)
    seen: dict[tuple[int, ...], tuple[int, int]] = {}
    for a, P in enumerate(tabs):
        for b, Q in enumerate(tabs):
            rho = prom_perms(stack(P, Q))[r - 1]
            if fixed_points(rho) or not is_involution(rho) or not is_bipartite_block(rho):
                report.failures.append(_witness(P, Q, "cor-involution"))
            elif crossing_nesting(rho) != (r, c):
                report.failures.append(_witness(P, Q, "cor-crossing-nesting"))
            if rho in seen:
                report.failures.append(_witness(P, Q, "cor-injective"))
            seen[rho] = (a, b)
    hist = crossing_nesting_histogram(n)
    report.objects_checked = sum(hist.values())
    if hist.get((r, c), 0) != len(tabs) ** 2:
        report.failures.append({"clause": "cor-count", "expected": len(tabs) ** 2, "found": hist.get((r, c), 0)})
    report.elapsed = time.perf_counter() - start
    return report


THEOREMS = {"prom-rs": verify_thm_prom_rs, "main": verify_thm_main, "cor": verify_cor_image}
