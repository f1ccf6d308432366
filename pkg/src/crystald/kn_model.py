"""Kashiwara-Nakashima tableaux of type D_n.

Shapes are rotated 180 degrees: columns are listed right to left (index 0 the
tallest, rightmost one), rows are aligned at the bottom, and the spin column
of half-width boxes, present exactly when the weight is half-integral, is the
rightmost column of height n.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .crystal_core import tensor_e_factor, tensor_f_factor
from .foundations import (
    Column,
    Entries,
    Letter,
    conjugate,
    is_dominant,
    leq,
    letter_weight2,
    lt,
    wadd,
    zero2,
)


class ShapeError(ValueError):
    pass


def weight_columns(lambda2: Sequence[int]) -> tuple[list[int], int, int, bool]:
    """Column heights of the diagram of a dominant weight.

    Returns (heights right-to-left including full-height columns but not the
    spin column, q, r, negative) where 2*|last entry| = 2q + r.
    """
    n = len(lambda2)
    if not is_dominant(lambda2):
        raise ShapeError("not-dominant")
    t = abs(lambda2[-1])
    q, r = divmod(t, 2)
    m = [(lambda2[i] - t) // 2 for i in range(n)]
    heights = [n] * q + list(conjugate(m))
    return heights, q, r, lambda2[-1] < 0


@dataclass(frozen=True)
class KNTableau:
    n: int
    lambda2: tuple[int, ...]
    columns: tuple[Column, ...]  # right to left; columns[0] is the spin column iff spin
    spin: bool

    def key(self) -> tuple:
        return (self.n, self.lambda2, tuple(c.entries for c in self.columns), self.spin)

    def full_columns(self) -> tuple[Column, ...]:
        return self.columns[1:] if self.spin else self.columns

    def spin_column(self) -> Optional[Column]:
        return self.columns[0] if self.spin else None


def kn_weight2(tab: KNTableau) -> tuple[int, ...]:
    w = zero2(tab.n)
    for col in tab.full_columns():
        for x in col.entries:
            w = wadd(w, letter_weight2(x, tab.n))
    sp = tab.spin_column()
    if sp is not None:
        w = wadd(w, tuple_spin_weight2(sp.entries, tab.n))
    return w


def tuple_spin_weight2(entries: Entries, n: int) -> tuple[int, ...]:
    w = [0] * n
    for x in entries:
        w[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(w)


# ---------------------------------------------------------------------------
# validity


def _column_ok(col: Entries, n: int, allow_nn: bool) -> Optional[str]:
    for a, b in zip(col, col[1:]):
        if lt(a, b, n):
            continue
        if allow_nn and abs(a) == n and abs(b) == n and a != b:
            continue
        return f"column pair ({a},{b}) not increasing"
    return None


def validate_kn(tab: KNTableau, check_d7: bool = False) -> tuple[bool, list[str]]:
    """Check the defining conditions; returns (ok, named violations).

    The seventh two-column condition is gated behind ``check_d7`` (default
    off): read literally it rejects configurations that the crystal structure
    generates, so cardinality checks against the dimension oracle stand in
    for it.
    """
    n = tab.n
    heights, q, r, negative = weight_columns(tab.lambda2)
    expected = ([n] if r else []) + heights
    got = [c.height for c in tab.columns]
    if got != expected or tab.spin != bool(r):
        raise ShapeError(f"shape-error: expected heights {expected}, got {got}")

    violations: list[str] = []
    cols = [c.entries for c in tab.columns]

    def cell(i: int, j: int) -> Optional[Letter]:
        # i-th row from the bottom, j-th column from the right, both 1-based
        col = cols[j - 1]
        return col[len(col) - i] if 1 <= i <= len(col) else None

    # (1)-(3): column strictness, row weak increase, spin column exclusions
    for j, col in enumerate(cols, start=1):
        if any(x == 0 or abs(x) > n for x in col):
            violations.append(f"letters out of range in col {j}")
            return (False, violations)
        msg = _column_ok(col, n, allow_nn=not (tab.spin and j == 1))
        if msg:
            violations.append(f"(1) col {j}: {msg}")
    for j in range(1, len(cols)):
        right, left = cols[j - 1], cols[j]
        for i in range(1, len(left) + 1):
            a, b = cell(i, j + 1), cell(i, j)
            if a is not None and b is not None and not leq(a, b, n):
                violations.append(f"(1) row {i}: {a} > {b} across cols {j + 1},{j}")
    if tab.spin:
        seen = {abs(x) for x in cols[0]}
        if len(seen) != len(cols[0]):
            violations.append("(3) spin column repeats a letter index")

    # barred/unbarred positions per column, used by several clauses below
    def positions(j: int, letter: Letter) -> list[int]:
        return [i for i in range(1, len(cols[j - 1]) + 1) if cell(i, j) == letter]

    for j in range(1, len(cols) + 1):
        h = len(cols[j - 1])
        # (d-1)
        for a in range(1, n + 1):
            ps, qs = positions(j, -a), positions(j, a)
            for p in ps:
                for qq in qs:
                    if p < qq and (qq - p) + a <= h:
                        violations.append(f"(d-1) col {j} letter {a}")
        # (d-2)/(d-3)
        if h == n:
            for k in range(1, n + 1):
                v = cell(k, j)
                if not negative:
                    if v == n and k % 2 == 0:
                        violations.append(f"(d-2) col {j} row {k}")
                    if v == -n and k % 2 == 1:
                        violations.append(f"(d-2) col {j} row {k}")
                else:
                    if v == n and k % 2 == 1:
                        violations.append(f"(d-3) col {j} row {k}")
                    if v == -n and k % 2 == 0:
                        violations.append(f"(d-3) col {j} row {k}")

    for j in range(1, len(cols)):
        hj, hj1 = len(cols[j - 1]), len(cols[j])
        # (d-4)
        for a in range(1, n):
            for b in range(a, n):
                for p in positions(j, -a):
                    s_list = positions(j + 1, a)
                    qs_same = positions(j, -b)
                    rs_same = positions(j, b)
                    qs_next = positions(j + 1, -b)
                    rs_next = positions(j + 1, b)
                    for s in s_list:
                        for qq, rr in [(x, y) for x in qs_same for y in rs_same] + [
                            (x, y) for x in qs_next for y in rs_next
                        ]:
                            if p <= qq < rr <= s and (qq - p) + (s - rr) >= b - a:
                                violations.append(f"(d-4) cols {j},{j + 1} letters {a},{b}")
        # (d-5), (d-6), (d-7)
        nn = {n, -n}
        for a in range(1, n + 1):
            for p in positions(j, -a):
                for s in positions(j + 1, a):
                    if p >= s:
                        continue
                    for qq in range(p, s):
                        pair_same = (cell(qq, j), cell(qq + 1, j))
                        pair_next = (cell(qq, j + 1), cell(qq + 1, j + 1))
                        hit = any(
                            x in nn and y in nn and x != y for x, y in (pair_same, pair_next)
                            if x is not None and y is not None
                        )
                        if hit and s - p > n - a:
                            violations.append(f"(d-5) cols {j},{j + 1} letter {a}")
                            break
                    if check_d7 and a < n:
                        qs = [x for x in range(p, s) if (cell(x, j + 1) in nn)]
                        rs = [x for x in range(p + 1, s + 1) if (cell(x, j) in nn)]
                        if any(qq < rr for qq in qs for rr in rs) and s - p >= n - a:
                            violations.append(f"(d-7) cols {j},{j + 1} letter {a}")
        for p in range(1, hj + 1):
            for s in range(p + 1, hj1 + 1):
                if cell(p, j) in nn and cell(s, j + 1) in nn:
                    violations.append(f"(d-6) cols {j},{j + 1} rows {p},{s}")

    return (not violations, violations)


# ---------------------------------------------------------------------------
# letter and spin-column operators


def letter_f(x: Letter, i: int, n: int) -> Optional[Letter]:
    if i <= n - 2:
        if x == i:
            return i + 1
        if x == -(i + 1):
            return -i
        return None
    if i == n - 1:
        if x == n - 1:
            return n
        if x == -n:
            return -(n - 1)
        return None
    if x == n - 1:
        return -n
    if x == n:
        return -(n - 1)
    return None


def letter_e(x: Letter, i: int, n: int) -> Optional[Letter]:
    if i <= n - 2:
        if x == i + 1:
            return i
        if x == -i:
            return -(i + 1)
        return None
    if i == n - 1:
        if x == n:
            return n - 1
        if x == -(n - 1):
            return -n
        return None
    if x == -n:
        return n - 1
    if x == -(n - 1):
        return n
    return None


def _spin_signs(entries: Entries, n: int) -> dict[int, int]:
    signs = {abs(x): (1 if x > 0 else -1) for x in entries}
    if len(signs) != n:
        raise ValueError("spin column must pick one of k, bar k for each k")
    return signs


def _spin_rebuild(signs: dict[int, int], n: int) -> Entries:
    letters = [k * signs[k] for k in range(1, n + 1)]
    return tuple(sorted(letters, key=lambda x: x if x > 0 else 2 * n + x))


def spin_f(entries: Entries, i: int, n: int) -> Optional[Entries]:
    signs = _spin_signs(entries, n)
    if i < n:
        if signs[i] == 1 and signs[i + 1] == -1:
            signs[i], signs[i + 1] = -1, 1
            return _spin_rebuild(signs, n)
        return None
    if signs[n - 1] == 1 and signs[n] == 1:
        signs[n - 1] = signs[n] = -1
        return _spin_rebuild(signs, n)
    return None


def spin_e(entries: Entries, i: int, n: int) -> Optional[Entries]:
    signs = _spin_signs(entries, n)
    if i < n:
        if signs[i] == -1 and signs[i + 1] == 1:
            signs[i], signs[i + 1] = 1, -1
            return _spin_rebuild(signs, n)
        return None
    if signs[n - 1] == -1 and signs[n] == -1:
        signs[n - 1] = signs[n] = 1
        return _spin_rebuild(signs, n)
    return None


# ---------------------------------------------------------------------------
# crystal operators on tableaux via the word tensor


def _factors(tab: KNTableau) -> list[tuple[str, object, tuple[int, int]]]:
    """Tensor factors in word order: ('spin', entries, (col,)) or ('letter', x, pos)."""
    out: list[tuple[str, object, tuple[int, int]]] = []
    for j, col in enumerate(tab.columns):
        if tab.spin and j == 0:
            out.append(("spin", col.entries, (j, 0)))
        else:
            for k, x in enumerate(col.entries):
                out.append(("letter", x, (j, k)))
    return out


def _factor_stats(kind: str, value, i: int, n: int) -> tuple[int, int]:
    if kind == "letter":
        eps = 0 if letter_e(value, i, n) is None else 1
        phi = 0 if letter_f(value, i, n) is None else 1
        return eps, phi
    eps = 0 if spin_e(value, i, n) is None else 1
    phi = 0 if spin_f(value, i, n) is None else 1
    return eps, phi


def _rebuild(tab: KNTableau, pos: tuple[int, int], kind: str, new_value) -> KNTableau:
    cols = list(tab.columns)
    j, k = pos
    if kind == "spin":
        cols[j] = Column(tuple(new_value), cols[j].tail)
    else:
        entries = list(cols[j].entries)
        entries[k] = new_value
        cols[j] = Column(tuple(entries), cols[j].tail)
    return KNTableau(tab.n, tab.lambda2, tuple(cols), tab.spin)


def kn_f(tab: KNTableau, i: int) -> Optional[KNTableau]:
    factors = _factors(tab)
    stats = [_factor_stats(kind, val, i, tab.n) for kind, val, _ in factors]
    idx = tensor_f_factor(stats)
    if idx is None:
        return None
    kind, val, pos = factors[idx]
    new_val = letter_f(val, i, tab.n) if kind == "letter" else spin_f(val, i, tab.n)
    out = _rebuild(tab, pos, kind, new_val)
    ok, bad = validate_kn(out, check_d7=False)
    if not ok:
        raise AssertionError(f"f_{i} left the tableau family: {bad[0]}")
    return out


def kn_e(tab: KNTableau, i: int) -> Optional[KNTableau]:
    factors = _factors(tab)
    stats = [_factor_stats(kind, val, i, tab.n) for kind, val, _ in factors]
    idx = tensor_e_factor(stats)
    if idx is None:
        return None
    kind, val, pos = factors[idx]
    new_val = letter_e(val, i, tab.n) if kind == "letter" else spin_e(val, i, tab.n)
    out = _rebuild(tab, pos, kind, new_val)
    ok, bad = validate_kn(out, check_d7=False)
    if not ok:
        raise AssertionError(f"e_{i} left the tableau family: {bad[0]}")
    return out


def kn_highest(lambda2: Sequence[int], n: Optional[int] = None) -> KNTableau:
    """The unique element killed by every raising operator."""
    lambda2 = tuple(lambda2)
    n = n or len(lambda2)
    heights, q, r, negative = weight_columns(lambda2)
    cols: list[Column] = []
    if r:
        sp = tuple(range(1, n)) + ((-n,) if negative else (n,))
        cols.append(Column(sp, 0))
    for h in heights:
        if h == n and negative:
            cols.append(Column(tuple(range(1, n)) + (-n,), 0))
        else:
            cols.append(Column(tuple(range(1, h + 1)), 0))
    return KNTableau(n, lambda2, tuple(cols), bool(r))


# ---------------------------------------------------------------------------
# brute-force enumeration (test oracle for small shapes)


def _gen_columns(h: int, n: int, allow_nn: bool, spin: bool) -> Iterator[Entries]:
    letters = list(range(1, n + 1)) + [-k for k in range(n, 0, -1)]

    def extend(col: list[Letter]) -> Iterator[Entries]:
        if len(col) == h:
            yield tuple(col)
            return
        for x in letters:
            if col:
                a = col[-1]
                ok = lt(a, x, n) or (
                    allow_nn and abs(a) == n and abs(x) == n and a != x
                )
                if not ok:
                    continue
            if spin and any(abs(x) == abs(y) for y in col):
                continue
            col.append(x)
            yield from extend(col)
            col.pop()

    yield from extend([])


def brute_force_kn(lambda2: Sequence[int], n: Optional[int] = None,
                   check_d7: bool = True) -> list[KNTableau]:
    """All valid tableaux of the given shape, by backtracking over columns."""
    lambda2 = tuple(lambda2)
    n = n or len(lambda2)
    heights, q, r, negative = weight_columns(lambda2)
    col_heights = ([n] if r else []) + heights
    out: list[KNTableau] = []

    def rows_ok(right: Entries, left: Entries) -> bool:
        for i in range(1, len(left) + 1):
            if i <= len(right):
                a = left[len(left) - i]
                b = right[len(right) - i]
                if not leq(a, b, n):
                    return False
        return True

    def extend(cols: list[Entries], j: int) -> None:
        if j == len(col_heights):
            tab = KNTableau(n, lambda2, tuple(Column(c, 0) for c in cols), bool(r))
            ok, _ = validate_kn(tab, check_d7=check_d7)
            if ok:
                out.append(tab)
            return
        spin_col = bool(r) and j == 0
        for cand in _gen_columns(col_heights[j], n, allow_nn=not spin_col, spin=spin_col):
            if cols and not rows_ok(cols[-1], cand):
                continue
            cols.append(cand)
            extend(cols, j + 1)
            cols.pop()

    extend([], 0)
    return out


# ---------------------------------------------------------------------------
# JSON


def kn_to_json(tab: KNTableau) -> dict:
    return {
        "n": tab.n,
        "lambda2": list(tab.lambda2),
        "columns": [{"entries": list(c.entries), "tail": c.tail} for c in tab.columns],
        "spin": tab.spin,
    }


def kn_from_json(data: dict) -> KNTableau:
    cols = tuple(Column(tuple(c["entries"]), c.get("tail", 0)) for c in data["columns"])
    return KNTableau(int(data["n"]), tuple(data["lambda2"]), cols, bool(data["spin"]))
