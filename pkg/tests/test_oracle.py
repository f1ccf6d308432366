import random

import pytest

from crystald.crystal_core import compare_components, generate_component
from crystald.kn_model import kn_f, kn_highest
from crystald.oracle import (
    SMOKE_LAMBDAS,
    knuth_equivalent,
    p_tableau,
    p_tableau_by_rectification,
    weyl_dim,
)
from crystald.separation import chi_lambda
from crystald.spinor_model import highest_element, spinor_f

from golden import TUPLE5


def test_weyl_dim_golden():
    assert weyl_dim((2, 0, 0, 0)) == 8
    assert weyl_dim((2, 2, 0, 0)) == 28
    assert weyl_dim((1, 1, 1, 1)) == 8
    assert weyl_dim((1, 1, 1, -1)) == 8


def test_weyl_dim_not_dominant():
    from crystald.kn_model import ShapeError

    with pytest.raises(ShapeError):
        weyl_dim((1, 2, 0, 0))


def test_knuth_reflexive_and_routes_agree():
    rng = random.Random(6)
    for _ in range(10_000):
        w = tuple(-rng.randint(1, 4) for _ in range(rng.randint(0, 8)))
        assert knuth_equivalent(w, w, 4)
        assert p_tableau(w, 4) == p_tableau_by_rectification(w, 4)


def test_knuth_separation_example():
    v = chi_lambda(TUPLE5)
    assert knuth_equivalent(TUPLE5.word(), v.word(), 5)


def test_knuth_distinguishes():
    assert not knuth_equivalent((-1,), (-2,), 4)


def test_compare_components():
    lam = (4, 2, 2, 0)
    g1 = generate_component(kn_highest(lam, 4), kn_f, 4, lambda t: t.key())
    g2 = generate_component(highest_element(lam, 4), spinor_f, 4, lambda t: t.key())
    assert compare_components(g1, g1)
    assert compare_components(g1, g2)
    g3 = generate_component(kn_highest((2, 2, 0, 0), 4), kn_f, 4, lambda t: t.key())
    assert not compare_components(g1, g3)


def test_dimension_agreement_full_smoke():
    for lam in SMOKE_LAMBDAS:
        d = weyl_dim(lam)
        g = generate_component(highest_element(lam, 4), spinor_f, 4, lambda t: t.key())
        assert len(g) == d
