"""Explicit column-wise isomorphisms between the KN and spinor realizations.

A two-column factor corresponds to a single KN column: complete the raised
right column to its unbarred complement, stack vertical (bar n, n) dominoes,
and finish with the raised left column.  The inverse splits a KN column into
its barred part and the barred complement of its unbarred part, then lowers
the pair back down with jeu de taquin slides.
"""
from __future__ import annotations

from .foundations import Column, Entries, op_f_pair, pair_is_ss
from .kn_model import KNTableau, ShapeError, validate_kn, weight_columns
from .spinor_model import (
    A_KIND,
    Factor,
    O_KIND,
    SP_MINUS,
    SP_PLUS,
    SpinorTuple,
    anchor_even_pair,
    derived_columns,
    factor_shape,
    is_spin,
    pair_factor,
    residue,
    spin_factor,
    validate_tuple,
)


def _barred_complement(entries: Entries, n: int) -> Entries:
    """Unbarred letters i whose bar is absent, ascending."""
    present = {-x for x in entries}
    return tuple(i for i in range(1, n + 1) if i not in present)


def phi(factor: Factor, n: int) -> Column:
    """The KN column realizing a spinor factor."""
    if is_spin(factor):
        barred = set(factor.left.entries)
        out = sorted(
            [x for x in barred] + [i for i in range(1, n + 1) if -i not in barred],
            key=lambda x: x if x > 0 else 2 * n + x,
        )
        return Column(tuple(out), 0)
    a, b, c = factor_shape(factor)
    r = residue(factor, n)
    _, _, lhat, rhat = derived_columns(factor, n)
    top = _barred_complement(rhat, n)
    dominoes: list[int] = []
    for _ in range((b - 2 * r) // 2):
        dominoes.extend([-n, n])
    return Column(tuple(top) + tuple(dominoes) + tuple(lhat), 0)


def _split_column(entries: Entries, n: int) -> tuple[Entries, Entries, int]:
    """(unbarred part, barred part, domino count), dominoes being (bar n, n) pairs."""
    plus: list[int] = []
    minus: list[int] = []
    dominoes = 0
    k = 0
    while k < len(entries):
        if k + 1 < len(entries) and entries[k] == -n and entries[k + 1] == n:
            dominoes += 1
            k += 2
            continue
        (plus if entries[k] > 0 else minus).append(entries[k])
        k += 1
    return tuple(plus), tuple(minus), dominoes


def psi_column(col: Column, n: int, negative: bool) -> Factor:
    """Inverse of phi on a KN column of height a, landing in the a-complement factor."""
    a = col.height
    plus, minus, dominoes = _split_column(col.entries, n)
    t_plus_tilde = tuple(-i for i in reversed(_barred_complement(tuple(-i for i in plus), n)))
    # t_plus_tilde lists bar i for i not in the unbarred part, increasing downward
    ht_plus = len(t_plus_tilde)
    ht_minus = len(minus)
    eps = ht_minus % 2
    if a == n and eps == 1:
        if not negative:
            raise ShapeError("shape-error: odd barred part in a full column needs a negative weight")
        if not pair_is_ss(minus, t_plus_tilde, ht_plus - ht_minus, n):
            raise AssertionError("full-column pair is not semistandard at its anchor")
        return pair_factor(O_KIND, minus, t_plus_tilde, 0)
    if not pair_is_ss(minus, t_plus_tilde, ht_plus - ht_minus + eps, n):
        raise AssertionError("column pair is not semistandard at its anchor")
    cur = (minus, t_plus_tilde)
    for _ in range(n - a - eps):
        nxt = op_f_pair(cur[0], cur[1], n)
        if nxt is None:
            raise AssertionError("lowering chain broke while inverting a column")
        cur = (nxt[0], nxt[1])
    return _finish_pair(cur, n, n - a)


def _finish_pair(cur: tuple[Entries, Entries], n: int, a_target: int) -> Factor:
    left, right = cur
    a, b = anchor_even_pair(left, right, n)
    if a != a_target:
        raise AssertionError(f"lowered pair landed at parameter {a}, expected {a_target}")
    return pair_factor(A_KIND, left, right, a)


def psi_sp(col: Column, n: int, negative: bool) -> Factor:
    _, minus, dominoes = _split_column(col.entries, n)
    if dominoes:
        raise ShapeError("shape-error: spin column contains a full domino")
    f = spin_factor(minus)
    want = SP_MINUS if negative else SP_PLUS
    if f.kind != want:
        raise ShapeError(f"shape-error: spin column has the wrong parity for {want}")
    return f


def psi_lambda(tab: KNTableau) -> SpinorTuple:
    """Column-wise transport of a KN tableau into the spinor model."""
    ok, problems = validate_kn(tab, check_d7=False)
    if not ok:
        raise ShapeError(f"invalid tableau: {problems[0]}")
    _, _, _, negative = weight_columns(tab.lambda2)
    factors: list[Factor] = []
    for col in tab.full_columns():
        factors.append(psi_column(col, tab.n, negative))
    factors.reverse()  # leftmost factor first, from the leftmost (shortest) column
    sp = tab.spin_column()
    if sp is not None:
        factors.append(psi_sp(sp, tab.n, negative))
    out = SpinorTuple(tab.n, tab.lambda2, tuple(factors))
    ok, problems = validate_tuple(out)
    if not ok:
        raise ShapeError(f"transport left the admissible family: {problems[0]}")
    return out


def phi_lambda(t: SpinorTuple) -> KNTableau:
    """Inverse of the column-wise transport."""
    n = t.n
    cols: list[Column] = []
    sp = t.spin()
    if sp is not None:
        cols.append(phi(sp, n))
    for f in reversed(t.pair_factors()):
        cols.append(phi(f, n))
    tab = KNTableau(n, t.lambda2, tuple(cols), sp is not None)
    ok, problems = validate_kn(tab, check_d7=False)
    if not ok:
        raise ShapeError(f"transport produced an invalid tableau: {problems[0]}")
    return tab
