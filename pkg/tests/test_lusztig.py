import random

import pytest

from crystald.crystal_core import generate_component
from crystald.kn_model import kn_f, kn_highest, kn_weight2
from crystald.lusztig import (
    RankError,
    SupportError,
    c_lower,
    c_lower_inverse,
    concat,
    convex_order,
    datum_from_verma,
    rsk_burge,
    rsk_burge_inverse,
    smu_valid,
    split,
    xi_lambda,
)
from crystald.separation import chi_lambda
from crystald.kn_spinor_iso import psi_lambda
from crystald.verification import enumerate_straight, random_elements

from golden import B, BIWORD5, KN5, XI5


def test_convex_order_golden():
    order = convex_order(5)
    assert order.count == 20 and order.half == 10
    assert order.betas[0] == ("+", 4, 5)
    assert order.betas[10] == ("-", 1, 2)
    assert order.betas[14] == ("-", 2, 3)
    assert order.betas[17] == ("-", 3, 4)
    assert order.betas[19] == ("-", 4, 5)
    assert len(set(order.betas)) == order.count
    for n in (4, 6, 7):
        assert convex_order(n).count == n * n - n


def test_convex_order_rank_error():
    with pytest.raises(RankError):
        convex_order(3)


def test_rsk_golden_body():
    biword, c = rsk_burge((B(5, 4, 3, 1), B(5, 1)), 5)
    assert biword == BIWORD5
    assert c[:10] == (1, 0, 0, 1, 0, 0, 0, 0, 1, 0)
    assert rsk_burge_inverse(c, 5) == (B(5, 4, 3, 1), B(5, 1))


def test_rsk_empty_and_single_column():
    assert rsk_burge((), 5) == ((), (0,) * 20)
    biword, c = rsk_burge((B(5, 1),), 5)
    order = convex_order(5)
    assert c[order.index("+", 1, 5)] == 1 and sum(c) == 1


def test_rsk_exhaustive_round_trip_small():
    total = 0
    for shape in [(2,), (4,), (2, 2), (4, 2)]:
        for t in enumerate_straight(shape, 4):
            total += 1
            biword, c = rsk_burge(t, 4)
            assert rsk_burge_inverse(c, 4) == t
            src = sorted(x for col in t for x in col)
            dst = sorted([a for a, b in biword] + [b for a, b in biword])
            assert src == dst
    assert total == 33


def test_c_lower_golden_tail():
    rows = (B(5, 4, 2), B(3, 1), B(2), B(1))
    c = c_lower(rows, 5)
    order = convex_order(5)
    ones = {k for k, v in enumerate(c) if v}
    assert ones == {10, 12, 14, 16, 17, 19}
    mu = (3, 2, 1, 1)
    assert c_lower_inverse(c, mu, 5) == rows


def test_c_lower_superstandard_is_zero():
    rows = (B(5, 5, 5), B(4, 4), B(3))
    assert sum(c_lower(rows, 5)) == 0


def test_c_lower_weight_identity_random():
    # wt(T) = shift_mu - sum of c_beta * beta, with shift_mu = -sum mu_k eps_{n-k+1}
    rng = random.Random(3)
    n = 4
    order = convex_order(n)
    mu = (3, 2, 1)
    count = 0
    while count < 100:
        rows = tuple(
            tuple(sorted(-rng.randint(1, n - k + 1) for _ in range(m)))
            for k, m in enumerate(mu, start=1)
        )
        if not smu_valid(rows, mu, n):
            continue
        count += 1
        c = c_lower(rows, n)
        expect = [0] * n
        for k, m in enumerate(mu, start=1):
            expect[n - k] -= 2 * m
        for kk, mult in enumerate(c):
            if mult:
                beta = order.beta2(kk)
                for idx in range(n):
                    expect[idx] -= mult * beta[idx]
        got = [0] * n
        for r in rows:
            for x in r:
                got[-x - 1] -= 2
        assert expect == got


def test_concat_split():
    order = convex_order(5)
    z = (0,) * 20
    assert concat(z, z, 5) == z
    upper = (1, 0, 0, 1, 0, 0, 0, 0, 1, 0) + (0,) * 10
    lower = (0,) * 10 + (1, 0, 1, 0, 1, 0, 1, 1, 0, 1)
    assert concat(upper, lower, 5) == XI5
    u, l = split(XI5, 5)
    assert u == upper and l == lower
    with pytest.raises(SupportError):
        concat(XI5, lower, 5)


def test_xi_golden_end_to_end():
    datum = xi_lambda(KN5)
    assert datum.c == XI5
    assert datum.weight2() == kn_weight2(KN5)
    _, biword = datum_from_verma(chi_lambda(psi_lambda(KN5)))
    assert biword == BIWORD5


def test_xi_highest_is_zero_vector():
    for lam in [(2, 2, 0, 0), (3, 1, 1, -1), (4, 2, 2, -2)]:
        datum = xi_lambda(kn_highest(lam, 4))
        assert sum(datum.c) == 0
        assert datum.shift2 == lam


def test_xi_injective_and_weights_on_component():
    lam = (4, 2, 0, 0)
    g = generate_component(kn_highest(lam, 4), kn_f, 4, lambda t: t.key())
    seen = {}
    for t in g.nodes.values():
        d = xi_lambda(t)
        assert d.key() not in seen
        seen[d.key()] = t
        assert d.weight2() == kn_weight2(t)


def test_letter_multiset_conservation():
    rng = random.Random(9)
    for t in random_elements((4, 2, 0, 0), 4, 20, rng):
        v = chi_lambda(t)
        body = tuple(c.body() for c in v.cols if c.body())
        biword, _ = rsk_burge(body, 4)
        src = sorted(x for col in body for x in col)
        dst = sorted([a for a, b in biword] + [b for a, b in biword])
        assert src == dst
