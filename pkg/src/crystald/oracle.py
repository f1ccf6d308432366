"""Independent ground truth: dimension counts, plactic equivalence, graph comparison."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .crystal_core import CrystalGraph, compare_components as _compare
from .foundations import Column, Entries, Profile, insertion_tableau, rectify
from .kn_model import ShapeError, is_dominant


def weyl_dim(lambda2: Sequence[int]) -> int:
    """Exact dimension of the irreducible module with the given doubled weight."""
    n = len(lambda2)
    if not is_dominant(lambda2):
        raise ShapeError("not-dominant")
    x = [lambda2[i] + 2 * (n - 1 - i) for i in range(n)]  # doubled lambda + rho
    rho = [2 * (n - 1 - i) for i in range(n)]
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(x[i] ** 2 - x[j] ** 2, rho[i] ** 2 - rho[j] ** 2)
    if dim.denominator != 1:
        raise AssertionError(f"dimension came out fractional: {dim}")
    return int(dim)


def word_staircase(word: Sequence[int], n: int) -> Profile:
    """A skew profile with the given column word: one letter per column."""
    cols = tuple(Column((x,), k) for k, x in enumerate(word))
    return Profile(n, cols)


def p_tableau(word: Sequence[int], n: int) -> tuple[Entries, ...]:
    """Insertion tableau of a barred word."""
    return insertion_tableau(word, n)


def p_tableau_by_rectification(word: Sequence[int], n: int) -> tuple[Entries, ...]:
    """The same invariant computed by sliding the staircase of the word."""
    return rectify(word_staircase(word, n))


def knuth_equivalent(w1: Sequence[int], w2: Sequence[int], n: int) -> bool:
    return p_tableau(w1, n) == p_tableau(w2, n)


def compare_components(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    return _compare(g1, g2)


# the desk-scale verification weights (doubled coordinates, n = 4)
SMOKE_N = 4
SMOKE_LAMBDAS: tuple[tuple[int, ...], ...] = (
    (2, 0, 0, 0),
    (2, 2, 0, 0),
    (2, 2, 2, 0),
    (4, 0, 0, 0),
    (4, 2, 0, 0),
    (1, 1, 1, 1),
    (1, 1, 1, -1),
    (3, 1, 1, 1),
    (3, 1, 1, -1),
    (2, 2, 2, -2),
    (4, 2, 2, -2),
)
