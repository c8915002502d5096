import random
from itertools import combinations
from pathlib import Path

import pytest

from stacklab.matchings import PerfectMatching, crossing_number, matching_from_involution
from stacklab.render import RenderSpec, chord_geometry, edge_word, render_chord_svg, render_shadow_svg, shadow_geometry
from stacklab.tableau import lattice_word
from stacklab.viennot import READING, Direction, points_from_permutation, viennot_words

from fixtures import FIG2_POINTS, FIG2_WP, FIG2_WQ, NE_POINTS, PROM3_STACKED, Q_FIG

DATA = Path(__file__).parent / "data"


def segments_cross(s, t):
    """Proper intersection of two segments via orientation signs."""
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    (a, b), (c, d) = s, t
    return orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0


def fig1_matching():
    return matching_from_involution(PROM3_STACKED)


def test_chord_geometry_of_worked_matching():
    geo = chord_geometry(fig1_matching())
    assert len(geo.nodes) == 24 and len(geo.chords) == 12
    trio = [(1, 19), (2, 22), (4, 24)]
    assert all(segments_cross(geo.segment(a), geo.segment(b)) for a, b in combinations(trio, 2))


def test_chord_nodes_run_clockwise_from_top():
    geo = chord_geometry(fig1_matching())
    (x1, y1), (x2, y2) = geo.nodes[1], geo.nodes[2]
    assert y1 < 200 and x1 > 200  # first point just right of the top
    assert x2 > x1 and y2 > y1


def test_geometric_crossings_match_combinatorics():
    rng = random.Random(3)
    for _ in range(30):
        pts = list(range(1, 13))
        rng.shuffle(pts)
        M = PerfectMatching(frozenset(zip(pts[::2], pts[1::2])))
        geo = chord_geometry(M)
        for a, b in combinations(M.sorted_blocks(), 2):
            (p, q), (s, t) = sorted([a, b])
            assert segments_cross(geo.segment(a), geo.segment(b)) == (p < s < q < t)


def test_single_chord():
    svg = render_chord_svg(PerfectMatching(frozenset({(1, 2)})))
    assert svg.count('class="node"') == 2 and svg.count('class="chord"') == 1


def test_shadow_geometry_of_small_example():
    geo = shadow_geometry(FIG2_POINTS, Direction.NE)
    assert len(geo.polylines) == 7
    assert sorted({level for level, _ in geo.polylines}) == [1, 2, 3, 4]
    assert edge_word(geo, "right", True) == FIG2_WP
    assert edge_word(geo, "top", True) == FIG2_WQ


def test_shadow_geometry_of_stacked_example():
    geo = shadow_geometry(NE_POINTS[3], Direction.NE)
    assert edge_word(geo, "top", True) == lattice_word(Q_FIG)
    # four lines per level, three levels, as in the overlay
    assert [sum(1 for lv, _ in geo.polylines if lv == k) for k in (1, 2, 3)] == [4, 4, 4]


def test_single_point_is_one_corner():
    geo = shadow_geometry({(3, 3)}, Direction.NE)
    assert len(geo.polylines) == 1
    level, path = geo.polylines[0]
    assert path == ((3, 4), (3, 3), (4, 3))


def test_polylines_are_orthogonal():
    for d in Direction:
        for _, path in shadow_geometry(FIG2_POINTS, d).polylines:
            assert all(a[0] == b[0] or a[1] == b[1] for a, b in zip(path, path[1:]))


@pytest.mark.parametrize("d", list(Direction))
def test_labels_read_the_viennot_words(d):
    rng = random.Random(hash(d.value) % 1000)
    for _ in range(60):
        n = rng.randint(1, 9)
        w = list(range(1, n + 1))
        rng.shuffle(w)
        pts = points_from_permutation(w)
        geo = shadow_geometry(pts, d)
        (pe, pu), (qe, qu) = READING[d]
        assert (edge_word(geo, pe, pu), edge_word(geo, qe, qu)) == viennot_words(pts, d)


def test_short_palette_rejected():
    with pytest.raises(ValueError):
        render_shadow_svg(FIG2_POINTS, Direction.NE, RenderSpec("shadow", palette=("#000000",)))


def test_render_spec_kind_checked():
    with pytest.raises(ValueError):
        RenderSpec("pie")


GOLDEN = {
    "chord_worked_matching.svg": lambda: render_chord_svg(fig1_matching()),
    "shadow_small_ne.svg": lambda: render_shadow_svg(FIG2_POINTS, Direction.NE),
    "shadow_small_sw.svg": lambda: render_shadow_svg(FIG2_POINTS, Direction.SW),
    "shadow_stacked_ne.svg": lambda: render_shadow_svg(NE_POINTS[3], Direction.NE),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_files(name):
    first, second = GOLDEN[name](), GOLDEN[name]()
    assert first == second
    assert (DATA / name).read_text(encoding="utf-8") == first


def test_caption_numbers_come_from_the_matching():
    assert crossing_number(fig1_matching()) == 3


def test_overlay_matches_drawn_coordinates():
    geo = shadow_geometry(NE_POINTS[3], Direction.NE)
    paths = {path for _, path in geo.polylines}
    assert ((1, 13), (1, 7), (4, 7), (4, 2), (8, 2), (8, 1), (13, 1)) in paths
    assert ((4, 13), (4, 7), (8, 7), (8, 2), (13, 2)) in paths
    assert ((12, 13), (12, 12), (13, 12)) in paths
