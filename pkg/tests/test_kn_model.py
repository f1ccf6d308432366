import random

import pytest

from crystald.crystal_core import generate_component
from crystald.foundations import Column
from crystald.kn_model import (
    KNTableau,
    ShapeError,
    brute_force_kn,
    kn_e,
    kn_f,
    kn_from_json,
    kn_highest,
    kn_to_json,
    kn_weight2,
    validate_kn,
)
from crystald.oracle import SMOKE_LAMBDAS


def B(*xs):
    return tuple(-x for x in xs)


KN5 = KNTableau(
    5,
    (5, 3, 3, 1, -1),
    (Column((2, 3, -5, -4, -1), 0), Column((4, 5, -1), 0), Column((-5,), 0)),
    True,
)

LAM8 = (8, 8, 8, 8, 8, 4, 0, 0)
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


def test_validate_golden_examples():
    assert validate_kn(KN5) == (True, [])
    assert validate_kn(KN8) == (True, [])


def test_validate_highest_all_smoke():
    for lam in SMOKE_LAMBDAS:
        assert validate_kn(kn_highest(lam, 4)) == (True, [])


def test_validate_shape_error():
    with pytest.raises(ShapeError):
        validate_kn(KNTableau(5, (5, 3, 3, 1, -1), KN5.columns[:2], True))


def test_validate_catches_bad_column():
    bad = KNTableau(4, (2, 0, 0, 0), (Column((5,), 0),), False)
    ok, problems = validate_kn(bad)
    assert not ok and "out of range" in problems[0]
    bad = KNTableau(4, (2, 2, 0, 0), (Column((2, 1), 0),), False)
    ok, problems = validate_kn(bad)
    assert not ok and problems


def test_f_on_single_box():
    box1 = kn_highest((2, 0, 0, 0), 4)
    out = kn_f(box1, 1)
    assert out.columns[0].entries == (2,)
    assert kn_e(out, 1).key() == box1.key()


def test_highest_killed_by_raising():
    for lam in SMOKE_LAMBDAS:
        h = kn_highest(lam, 4)
        assert all(kn_e(h, i) is None for i in range(1, 5))
        assert kn_weight2(h) == lam


def test_highest_spin_columns():
    assert kn_highest((1, 1, 1, 1), 4).columns[0].entries == (1, 2, 3, 4)
    assert kn_highest((1, 1, 1, -1), 4).columns[0].entries == (1, 2, 3, -4)
    assert kn_highest((2, 0, 0, 0), 4).columns[0].entries == (1,)


def test_orbit_of_box_is_component():
    g = generate_component(kn_highest((2, 0, 0, 0), 4), kn_f, 4, lambda t: t.key())
    assert len(g) == 8


def test_weight_is_letter_sum():
    t = KN5
    w = kn_weight2(t)
    assert w == (-3, 1, 1, 1, -1)  # doubled coordinates


@pytest.mark.parametrize("lam", [(2, 0, 0, 0), (2, 2, 0, 0), (1, 1, 1, -1), (4, 2, 0, 0), (4, 2, 2, -2)])
def test_brute_force_matches_component(lam):
    comp = generate_component(kn_highest(lam, 4), kn_f, 4, lambda t: t.key())
    brute = {t.key() for t in brute_force_kn(lam, 4)}
    assert brute == set(comp.nodes)


def test_f_e_mutually_inverse():
    rng = random.Random(4)
    cur = kn_highest((4, 2, 0, 0), 4)
    for _ in range(200):
        i = rng.randint(1, 4)
        nxt = kn_f(cur, i)
        if nxt is None:
            continue
        assert kn_e(nxt, i).key() == cur.key()
        cur = nxt


def test_json_round_trip():
    data = kn_to_json(KN5)
    assert data["spin"] is True
    assert kn_from_json(data).key() == KN5.key()
