"""Worked elements reused across the test modules."""
from crystald.foundations import Column
from crystald.kn_model import KNTableau
from crystald.spinor_model import SpinorTuple, pair_factor, spin_factor


def B(*xs):
    return tuple(-x for x in xs)


# n = 8, weight (4,4,4,4,4,2): four two-column factors
LAM8 = (8, 8, 8, 8, 8, 4, 0, 0)
T4_8 = pair_factor("A", B(7, 4, 3), B(7, 5), 3)
T3_8 = pair_factor("A", B(6, 2, 1), B(6, 4), 3)
T2_8 = pair_factor("A", B(4, 2), B(6, 3), 2)
T1_8 = pair_factor("A", B(5, 4, 3, 2), B(6, 5, 3, 2), 2)
TUPLE8 = SpinorTuple(8, LAM8, (T4_8, T3_8, T2_8, T1_8))

KN8 = KNTableau(
    8,
    LAM8,
    (
        Column((1, 7, 8, -5, -3, -2), 0),
        Column((1, 4, 5, 7, 8, -4), 0),
        Column((3, 5, 7, 8, -6), 0),
        Column((1, 2, 6, 8, -7), 0),
    ),
    False,
)

# n = 5, weight (5/2, 3/2, 3/2, 1/2, -1/2)
LAM5 = (5, 3, 3, 1, -1)
S2_5 = pair_factor("A", B(5, 3, 2, 1), B(5, 4), 4)
S1_5 = pair_factor("A", B(2, 1), B(3, 1), 2)
S0_5 = spin_factor(B(5, 4, 1))
TUPLE5 = SpinorTuple(5, LAM5, (S2_5, S1_5, S0_5))

KN5 = KNTableau(
    5,
    LAM5,
    (Column((2, 3, -5, -4, -1), 0), Column((4, 5, -1), 0), Column((-5,), 0)),
    True,
)

XI5 = (1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1)
BIWORD5 = ((-5, -4), (-5, -1), (-3, -1))

# separation of TUPLE8: body columns and tail rows as displayed
BODY8 = (
    B(6, 5, 3, 2),
    B(5, 3),
    B(6, 4),
    B(6, 4),
    B(6, 4),
)
TAIL8_ROWS = (B(7, 7, 5, 3), B(4, 2, 2, 2), B(3, 1))

# separation of TUPLE5: glued columns right to left as (entries, tail)
SEP5 = (
    (B(5, 4, 3, 1), 0),
    (B(5, 1), 0),
    (B(2), 1),
    (B(4, 1), 2),
    (B(5, 3, 2, 1), 4),
)
