import random

import pytest

from crystald.crystal_core import generate_component
from crystald.foundations import insertion_tableau
from crystald.oracle import SMOKE_LAMBDAS, weyl_dim
from crystald.spinor_model import (
    A_KIND,
    KindError,
    NotAdmissible,
    ResidueError,
    SpinorTuple,
    derived_columns,
    factor_weight2,
    highest_element,
    is_admissible,
    op_e,
    op_f,
    pair_factor,
    residue,
    shape_decomposition,
    sigma_word,
    spin_factor,
    spinor_e,
    spinor_f,
    spinor_from_json,
    spinor_to_json,
    spinor_weight2,
    starred_columns,
    triangle_lt,
    validate_tuple,
)

from golden import B, LAM5, LAM8, S0_5, S1_5, S2_5, T1_8, T2_8, T3_8, T4_8, TUPLE5, TUPLE8


def test_residue_golden():
    assert residue(T1_8, 8) == 1
    assert residue(pair_factor(A_KIND, B(4, 3, 2), (), 3), 8) == 0  # b = 0
    assert residue(spin_factor(B(5, 4, 1)), 5) == 1


def test_op_e_null_at_zero_overhang():
    f = pair_factor(A_KIND, B(4), B(2), 0)
    assert op_e(f, 4) is None


def test_op_f_golden_lowering_chain():
    start = pair_factor(A_KIND, B(1), B(3, 2, 1), 1)
    once = op_f(start, 5)
    assert once is not None
    assert (once.left.entries, once.right.entries) == (B(2, 1), B(3, 1))
    assert once.key() == S1_5.key()


def test_op_e_then_f_identity():
    rng = random.Random(13)
    tested = 0
    while tested < 100:
        word = tuple(-rng.randint(1, 4) for _ in range(rng.randint(2, 6)))
        cols = insertion_tableau(word, 4)
        if len(cols) != 2:
            continue
        try:
            factor = pair_factor(A_KIND, cols[1], cols[0], len(cols[1]) - len(cols[0]))
        except Exception:
            continue
        if residue(factor, 4) != 0:
            continue
        tested += 1
        lowered = op_f(factor, 4)
        if lowered is None:
            continue
        assert op_e(lowered, 4).key() == factor.key()


def test_derived_columns_golden():
    lstar, rstar, lhat, rhat = derived_columns(T1_8, 8)
    assert lhat == B(5, 3, 2)
    assert rhat == B(6, 5, 4, 3, 2)
    f0 = pair_factor(A_KIND, B(1), B(3, 1), 1)  # parameter equals the residue
    assert residue(f0, 4) == 1
    _, _, lhat0, rhat0 = derived_columns(f0, 4)
    assert lhat0 == B(1) and rhat0 == B(3, 1)
    sp = spin_factor(B(5, 4, 1))
    assert derived_columns(sp, 5) == (B(5, 4, 1),) * 4


def test_starred_requires_residue_one():
    with pytest.raises(ResidueError):
        starred_columns(pair_factor(A_KIND, B(4, 3, 2), (), 3), 8)


def test_admissibility_golden_chain():
    assert is_admissible(T4_8, T3_8, 8)
    assert is_admissible(T3_8, T2_8, 8)
    assert is_admissible(T2_8, T1_8, 8)
    assert validate_tuple(TUPLE8) == (True, [])


def test_admissibility_highest_chain():
    for lam in SMOKE_LAMBDAS:
        h = highest_element(lam, 4)
        assert validate_tuple(h) == (True, [])


def test_admissible_but_not_interleaved():
    assert is_admissible(S2_5, S1_5, 5)
    assert is_admissible(S1_5, S0_5, 5)
    assert not triangle_lt(S2_5, S1_5, 5)
    assert not triangle_lt(S1_5, S0_5, 5)


def test_triangle_golden():
    assert not triangle_lt(T4_8, T3_8, 8)
    assert not triangle_lt(T3_8, T2_8, 8)
    assert triangle_lt(T2_8, T1_8, 8)


def test_triangle_entrywise_dominated():
    t = pair_factor(A_KIND, B(4, 3), (), 2)
    s = pair_factor(A_KIND, B(2, 1), (), 2)
    assert triangle_lt(t, s, 4)


def test_triangle_kind_error():
    with pytest.raises(KindError):
        triangle_lt(spin_factor(B(4,)), S0_5, 4)


def test_shape_decomposition_golden():
    dec = shape_decomposition(LAM8, 8)
    assert dec.a_params == (3, 3, 2, 2) and dec.q == dec.r == 0
    dec = shape_decomposition(LAM5, 5)
    assert dec.a_params == (4, 2) and dec.q == 0 and dec.r == 1 and dec.negative
    assert dec.factor_kinds() == (A_KIND, A_KIND) and dec.spin_kind() == "sp-"
    dec = shape_decomposition((0, 0, 0, 0), 4)
    assert dec.a_params == () and dec.q == dec.r == 0


def test_sigma_golden():
    assert sigma_word(TUPLE5) == ("-", "+", "+", "-", ".")


def test_word_reading_order():
    # the rightmost factor's right column is read first
    assert TUPLE8.word()[:4] == B(6, 5, 3, 2)


def test_f_n_on_spin_highest():
    h = highest_element((1, 1, 1, 1), 4)
    out = spinor_f(h, 4)
    assert out.factors[0].left.entries == B(4, 3)


def test_closure_exhaustive():
    lam = (4, 2, 2, 0)
    g = generate_component(highest_element(lam, 4), spinor_f, 4, lambda t: t.key())
    assert len(g) == weyl_dim(lam)
    for t in g.nodes.values():
        for i in range(1, 5):
            out = spinor_f(t, i)  # raises if it ever leaves the family
            if out is not None:
                assert validate_tuple(out)[0]
            out = spinor_e(t, i)
            if out is not None:
                assert validate_tuple(out)[0]


def test_weights_golden():
    n = 4
    h3 = pair_factor(A_KIND, B(4, 3, 2), (), 3)  # top of the a=3 family
    assert factor_weight2(h3, n) == (2, 0, 0, 0)
    minimal = pair_factor("O", B(4), B(4), 0)
    assert factor_weight2(minimal, n) == (2, 2, 2, -2)
    assert factor_weight2(pair_factor(A_KIND, (), (), 0), n) == (2, 2, 2, 2)
    assert spinor_weight2(TUPLE5) == (-3, 1, 1, 1, -1)


def test_highest_element_forms():
    h = highest_element((3, 1, 1, 1), 4)  # one a=3 factor and a plus spin slot
    assert h.factors[0].left.entries == B(4, 3, 2) and h.factors[0].right.entries == ()
    assert h.factors[1].left.entries == ()
    h1 = highest_element((2, 2, 2, 0), 4).factors[0]  # the a=1 family
    assert h1.a == 1 and h1.left.entries == B(4) and h1.right.entries == ()
    h = highest_element((3, 1, 1, -1), 4)
    assert h.factors[-1].left.entries == B(4)
    h1 = highest_element((2, 2, 0, 0), 4).factors[0]
    assert h1.a == 2 and h1.left.entries == B(4, 3)
    for lam in SMOKE_LAMBDAS:
        h = highest_element(lam, 4)
        assert all(spinor_e(h, i) is None for i in range(1, 5))
        assert spinor_weight2(h) == lam


def test_not_admissible_raises():
    broken = SpinorTuple(5, LAM5, (S1_5, S1_5, S0_5))
    with pytest.raises(NotAdmissible):
        spinor_f(broken, 1)


def test_json_round_trip():
    data = spinor_to_json(TUPLE8)
    assert [f["kind"] for f in data["factors"]] == ["A"] * 4
    assert spinor_from_json(data).key() == TUPLE8.key()
