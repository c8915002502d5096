import random

import pytest

from stacklab import _pykernels, kernels
from stacklab.tableau import enumerate_syt, rectangle

try:
    from stacklab import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@needs_c
@pytest.mark.parametrize("r,c", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (2, 5)])
def test_promotion_tables_agree(r, c):
    for T in enumerate_syt(rectangle(r, c)):
        flat = [v for row in T.rows for v in row]
        assert [list(p) for p in _ckernels.prom_table(flat, r, c)] == [list(p) for p in _pykernels.prom_table(flat, r, c)]


@needs_c
def test_crossing_nesting_agree():
    rng = random.Random(5)
    for _ in range(500):
        m = 2 * rng.randint(1, 12)
        pts = list(range(1, m + 1))
        rng.shuffle(pts)
        partner = [0] * m
        for a, b in zip(pts[::2], pts[1::2]):
            partner[a - 1], partner[b - 1] = b, a
        assert tuple(_ckernels.crossing_nesting(partner)) == tuple(_pykernels.crossing_nesting(partner))


def test_pure_python_flag(monkeypatch):
    import importlib

    monkeypatch.setenv("STACKLAB_PURE_PYTHON", "1")
    reloaded = importlib.reload(kernels)
    try:
        assert reloaded.BACKEND == "python"
        assert reloaded.prom_table is _pykernels.prom_table
    finally:
        monkeypatch.delenv("STACKLAB_PURE_PYTHON")
        importlib.reload(kernels)
