"""Values transcribed from the worked examples."""

from stacklab.tableau import StandardTableau


def tab(*rows):
    return StandardTableau(tuple(tuple(r) for r in rows))


# the 3x4 pair used throughout the worked examples
P_FIG = tab([1, 3, 5, 6], [2, 7, 9, 11], [4, 8, 10, 12])
Q_FIG = tab([1, 2, 3, 7], [4, 5, 6, 10], [8, 9, 11, 12])
T_SMALL = tab([1, 3], [2, 5], [4, 6])

STACKED = tab(
    [1, 3, 5, 6], [2, 7, 9, 11], [4, 8, 10, 12],
    [13, 14, 15, 19], [16, 17, 18, 22], [20, 21, 23, 24],
)

# gromotion / promotion / evacuation of Q_FIG
G1_Q_ROWS = ((2, 3, 6, 7), (4, 5, 10, 12), (8, 9, 11, 13))
G2_Q_ROWS = ((3, 5, 6, 7), (4, 9, 10, 12), (8, 11, 13, 14))
EVAC_Q = tab([1, 2, 4, 5], [3, 7, 8, 9], [6, 10, 11, 12])
PROM_Q = tab([1, 2, 5, 6], [3, 4, 9, 11], [7, 8, 10, 12])
PROM2_Q = tab([1, 3, 4, 5], [2, 7, 8, 10], [6, 9, 11, 12])

PROM1_Q = (6, 5, 4, 12, 10, 9, 8, 3, 2, 11, 7, 1)
PROM2_Q_PERM = (12, 9, 8, 3, 2, 1, 11, 7, 6, 5, 10, 4)

PROM1_T = (2, 5, 4, 1, 6, 3)
PROM2_T = (4, 1, 6, 3, 2, 5)
PROM1_PROMOTED_T = (4, 3, 6, 5, 2, 1)

PM_T = (
    (0, 1, 0, 2, 0, 0),
    (2, 0, 0, 0, 1, 0),
    (0, 0, 0, 1, 0, 2),
    (1, 0, 2, 0, 0, 0),
    (0, 2, 0, 0, 0, 1),
    (0, 0, 1, 0, 2, 0),
)

PROM3_STACKED = (19, 22, 15, 24, 14, 13, 18, 23, 17, 21, 16, 20, 6, 5, 3, 11, 9, 7, 1, 12, 10, 2, 8, 4)
PROM3_NE = (7, 10, 3, 12, 2, 1, 6, 11, 5, 9, 4, 8)

EVAC_P = tab([1, 3, 5, 9], [2, 4, 6, 11], [7, 8, 10, 12])

# NE-block points of the worked 24x24 matrix, by entry value
NE_POINTS = {
    1: {(7, 9), (3, 5), (2, 3), (1, 1)},
    2: {(7, 11), (10, 9), (3, 6), (6, 5), (2, 4), (5, 3), (1, 2), (4, 1)},
    3: {(1, 7), (4, 2), (8, 1), (2, 8), (5, 4), (9, 3), (3, 10), (6, 6), (11, 5), (7, 12), (10, 11), (12, 9)},
    4: {(4, 7), (8, 2), (5, 8), (9, 4), (6, 10), (11, 6), (10, 12), (12, 11)},
    5: {(8, 7), (9, 8), (11, 10), (12, 12)},
}
NE_SHADOW_GROUPS = [
    {(1, 7), (4, 2), (8, 1)},
    {(2, 8), (5, 4), (9, 3)},
    {(3, 10), (6, 6), (11, 5)},
    {(7, 12), (10, 11), (12, 9)},
]

# shadow-line example
RHO_FIG2 = (6, 2, 4, 5, 3, 1, 7)
FIG2_POINTS = {(1, 6), (2, 2), (3, 4), (4, 5), (5, 3), (6, 1), (7, 7)}
FIG2_S1 = {(2, 6), (5, 4), (6, 2)}
FIG2_S2_STATED = {(5, 6), (6, 5)}
FIG2_S2_DRAWN = {(5, 6), (6, 4)}
FIG2_S3 = {(6, 6)}
FIG2_WP = (1, 2, 1, 3, 1, 4, 1)
FIG2_WQ = (1, 2, 1, 1, 3, 4, 1)
FIG2_P = tab([1, 3, 5, 7], [2], [4], [6])
FIG2_Q = tab([1, 3, 4, 7], [2], [5], [6])

FIG1_BLOCKS = {
    (1, 19), (2, 22), (3, 15), (4, 24), (5, 14), (6, 13),
    (7, 18), (8, 23), (9, 17), (10, 21), (11, 16), (12, 20),
}
