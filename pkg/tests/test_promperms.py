import pytest

from stacklab.jdt import evacuate, promote
from stacklab.promperms import (
    check_permutation,
    compose,
    format_permutation,
    inverse,
    is_involution,
    long_cycle,
    longest_element,
    permutation_matrix,
    prom_ne,
    prom_perms,
    prom_perms_by_sliding,
    promotion_matrix,
    reflect,
    rotate,
    verify_dihedral,
)
from stacklab.tableau import enumerate_syt, rectangle, stack, transpose
from stacklab.viennot import rs_insert

from fixtures import (
    P_FIG, PM_T, PROM1_PROMOTED_T, PROM1_Q, PROM1_T, PROM2_Q_PERM, PROM2_T, PROM3_NE, PROM3_STACKED, Q_FIG,
    STACKED, T_SMALL,
)

SMALL_RECTANGLES = [(r, c) for r in range(1, 13) for c in range(1, 13) if r * c <= 12]


def test_worked_promotion_permutations():
    assert prom_perms(Q_FIG) == (PROM1_Q, PROM2_Q_PERM)
    assert prom_perms(T_SMALL) == (PROM1_T, PROM2_T)
    assert prom_perms(promote(T_SMALL))[0] == PROM1_PROMOTED_T


def test_kernel_agrees_with_slide_records():
    for shape in [(2, 3), (3, 2), (2, 4), (3, 3)]:
        for T in enumerate_syt(rectangle(*shape)):
            assert prom_perms(T) == prom_perms_by_sliding(T)
    assert prom_perms_by_sliding(Q_FIG) == (PROM1_Q, PROM2_Q_PERM)


def test_single_row_has_no_permutations():
    assert prom_perms(enumerate_syt((4,))[0]) == ()


def test_non_rectangular_rejected():
    with pytest.raises(ValueError):
        prom_perms(enumerate_syt((2, 1))[0])


def test_stacked_example():
    perms = prom_perms(STACKED)
    assert stack(P_FIG, Q_FIG) == STACKED
    assert perms[2] == PROM3_STACKED
    assert tuple(prom_ne(STACKED, 3)) == PROM3_NE
    assert rs_insert(PROM3_NE) == (transpose(Q_FIG), transpose(P_FIG))
    assert is_involution(perms[2])


def test_prom_ne_index_range():
    with pytest.raises(ValueError):
        prom_ne(STACKED, 6)


def test_weighted_sum_matrix():
    assert promotion_matrix(T_SMALL).entries == PM_T


def test_permutation_helpers():
    p = (2, 5, 4, 1, 6, 3)
    assert compose(p, inverse(p)) == (1, 2, 3, 4, 5, 6)
    assert long_cycle(4) == (2, 3, 4, 1)
    assert longest_element(4) == (4, 3, 2, 1)
    assert format_permutation(p) == "[2, 5, 4, 1, 6, 3]"
    assert permutation_matrix((2, 1)) == ((0, 1), (1, 0))
    with pytest.raises(ValueError):
        check_permutation((1, 1, 2))


def conj_rotate(p):
    s = long_cycle(len(p))
    return compose(inverse(s), compose(p, s))


def conj_reflect(p):
    w = longest_element(len(p))
    return compose(w, compose(p, w))


def test_rotate_and_reflect_match_conjugation():
    for T in enumerate_syt(rectangle(3, 3)):
        for p in prom_perms(T):
            assert rotate(p) == conj_rotate(p)
            assert reflect(p) == conj_reflect(p)


def test_promotion_rotates_worked_example():
    assert conj_rotate(PROM1_T) == PROM1_PROMOTED_T


@pytest.mark.parametrize("r,c", SMALL_RECTANGLES)
def test_symmetry_clauses(r, c):
    n = r * c
    for T in enumerate_syt(rectangle(r, c)):
        perms = prom_perms(T)
        after_prom = prom_perms(promote(T))
        after_evac = prom_perms(evacuate(T))
        for i in range(1, r):
            p = perms[i - 1]
            assert sorted(p) == list(range(1, n + 1))
            assert after_prom[i - 1] == conj_rotate(p)
            assert after_evac[i - 1] == conj_reflect(perms[r - i - 1])
            assert perms[r - i - 1] == inverse(p)
            # fixed-point free
            assert all(v != k for k, v in enumerate(p, start=1))
        assert verify_dihedral(T).passed


def test_dihedral_report_fields():
    report = verify_dihedral(Q_FIG)
    assert report.as_dict() == {"a": True, "b": True, "c": True, "d": True}


@pytest.mark.parametrize("r,c", [(2, 2), (2, 3), (3, 2), (1, 4)])
def test_stacked_middle_permutation_is_injective(r, c):
    tabs = enumerate_syt(rectangle(r, c))
    seen = {prom_perms(stack(P, Q))[r - 1] for P in tabs for Q in tabs}
    assert len(seen) == len(tabs) ** 2


def test_two_by_two():
    from stacklab.tableau import from_short

    T = from_short("12/34")
    assert prom_perms(T) == ((4, 3, 2, 1),)
    assert prom_ne(T, 1) == [2, 1]
