"""Multiplicity vectors over the positive roots in a fixed convex order.

The order lists the sums eps_i + eps_j first (largest j, then largest i,
first), followed by the differences eps_i - eps_j (smallest i, then smallest
j, first).  A straight even-column profile maps to the first half through the
column-insertion correspondence; a straight tableau below the line maps to
the second half by row counts.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .foundations import (
    Column,
    Entries,
    column_insert,
    column_uninsert,
    conjugate,
    leq,
)
from .kn_model import KNTableau, ShapeError
from .kn_spinor_iso import psi_lambda
from .separation import VermaElement, chi_lambda


class RankError(ValueError):
    pass


class SupportError(ValueError):
    pass


@dataclass(frozen=True)
class RootOrder:
    n: int
    betas: tuple[tuple[str, int, int], ...]  # ("+"|"-", i, j) meaning eps_i +- eps_j

    @property
    def count(self) -> int:
        return len(self.betas)

    @property
    def half(self) -> int:
        return len(self.betas) // 2

    def index(self, sign: str, i: int, j: int) -> int:
        return self.betas.index((sign, i, j))

    def beta2(self, k: int) -> tuple[int, ...]:
        sign, i, j = self.betas[k]
        w = [0] * self.n
        w[i - 1] = 2
        w[j - 1] = 2 if sign == "+" else -2
        return tuple(w)


def convex_order(n: int) -> RootOrder:
    if n < 4:
        raise RankError("rank-error: the construction needs n >= 4")
    sums = [("+", i, j) for j in range(n, 1, -1) for i in range(j - 1, 0, -1)]
    diffs = [("-", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    return RootOrder(n, tuple(sums + diffs))


@dataclass(frozen=True)
class LusztigDatum:
    n: int
    c: tuple[int, ...]
    shift2: tuple[int, ...]

    def key(self) -> tuple:
        return (self.n, self.c, self.shift2)

    def weight2(self) -> tuple[int, ...]:
        order = convex_order(self.n)
        w = list(self.shift2)
        for k, mult in enumerate(self.c):
            if mult:
                b = order.beta2(k)
                for idx in range(self.n):
                    w[idx] -= mult * b[idx]
        return tuple(w)


Biword = tuple[tuple[int, int], ...]  # pairs (a, b) of barred letters, a < b


def _biword_sorted(pairs: Sequence[tuple[int, int]]) -> Biword:
    # within a block of equal first letters the second letters run from the
    # most barred down, i.e. plain integer order on both components
    return tuple(sorted(pairs))


def rsk_burge(body_cols: Sequence[Entries], n: int) -> tuple[Biword, tuple[int, ...]]:
    """Peel a straight even-column profile into a biword and its multiplicities.

    Repeatedly remove the smallest (leftmost among ties) entry, eject the entry
    under it by inverse column insertion, and record the pair.
    """
    order = convex_order(n)
    cols = [list(c) for c in body_cols if c]
    if any(len(c) % 2 for c in cols):
        raise ShapeError("shape-error: body columns must have even length")
    pairs: list[tuple[int, int]] = []
    while cols:
        best = min(c[0] for c in cols)
        j = max(k for k, c in enumerate(cols) if c[0] == best)
        x = cols[j].pop(0)
        z = column_uninsert(cols, j, n)
        pairs.append((x, z))
    c = [0] * order.count
    for a, b in pairs:
        if not a < b:
            raise AssertionError(f"biword pair ({a},{b}) is not increasing")
        c[order.index("+", -b, -a)] += 1  # (bar j, bar i) carries eps_i + eps_j
    return _biword_sorted(pairs), tuple(c)


def rsk_burge_inverse(c: Sequence[int], n: int) -> tuple[Entries, ...]:
    """Rebuild the even-column profile from a first-half multiplicity vector."""
    order = convex_order(n)
    pairs: list[tuple[int, int]] = []
    for k, mult in enumerate(c):
        if k >= order.half and mult:
            raise SupportError("support-error: multiplicity outside the first half")
        sign, i, j = order.betas[k]
        pairs.extend([(-j, -i)] * mult)
    # replay the peeling backwards: larger pairs were removed later
    pairs = sorted(pairs, key=lambda p: (p[0], -p[1]), reverse=True)
    cols: list[list[int]] = []
    for a, b in pairs:
        j = column_insert(cols, b, n)
        cols[j].insert(0, a)
    out = tuple(tuple(col) for col in cols)
    if any(len(col) % 2 for col in out):
        raise AssertionError("inverse replay produced an odd column")
    return out


def c_lower(tail_rows: Sequence[Entries], n: int) -> tuple[int, ...]:
    """Second-half multiplicities from a straight tableau: bar i in row n-j+1."""
    order = convex_order(n)
    c = [0] * order.count
    for k, row in enumerate(tail_rows, start=1):
        j = n - k + 1
        for x in row:
            i = -x
            if i < j:
                c[order.index("-", i, j)] += 1
            elif i > j:
                raise ShapeError(f"shape-error: row {k} holds bar {i} below the diagonal")
    return tuple(c)


def c_lower_inverse(c: Sequence[int], mu: Sequence[int], n: int) -> tuple[Entries, ...]:
    """Rebuild the straight tableau of shape mu from second-half multiplicities."""
    order = convex_order(n)
    rows: list[list[int]] = [[] for _ in mu]
    for k, mult in enumerate(c):
        if not mult:
            continue
        if k < order.half:
            raise SupportError("support-error: multiplicity outside the second half")
        _, i, j = order.betas[k]
        row = n - j + 1
        if row - 1 >= len(rows):
            raise ShapeError("shape-error: multiplicity lands outside the shape")
        rows[row - 1].extend([-i] * mult)
    for k, row in enumerate(rows, start=1):
        fill = mu[k - 1] - len(row)
        if fill < 0:
            raise ShapeError("shape-error: row overflows mu")
        row.extend([-(n - k + 1)] * fill)
        row.sort()
    return tuple(tuple(r) for r in rows)


def tail_rows(v: VermaElement) -> tuple[Entries, ...]:
    """Rows of the below-L tableau, top row first, left to right."""
    out: list[list[int]] = []
    depth = max((c.tail for c in v.cols), default=0)
    for d in range(1, depth + 1):
        row = []
        for c in reversed(v.cols):
            if c.tail >= d:
                row.append(c.tail_entries()[d - 1])
        if row:
            out.append(row)
    return tuple(tuple(r) for r in out)


def body_columns(v: VermaElement) -> tuple[Entries, ...]:
    return tuple(c.body() for c in v.cols if c.height - c.tail > 0)


def concat(upper: Sequence[int], lower: Sequence[int], n: int) -> tuple[int, ...]:
    order = convex_order(n)
    if len(upper) != order.count or len(lower) != order.count:
        raise ShapeError("shape-error: vectors must span the full root list")
    if any(a and b for a, b in zip(upper, lower)):
        raise SupportError("support-error: overlapping support")
    return tuple(a + b for a, b in zip(upper, lower))


def split(c: Sequence[int], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    order = convex_order(n)
    m = order.half
    upper = tuple(c[:m]) + (0,) * m
    lower = (0,) * m + tuple(c[m:])
    return upper, lower


def datum_from_verma(v: VermaElement) -> tuple[LusztigDatum, Biword]:
    biword, upper = rsk_burge(body_columns(v), v.n)
    lower = c_lower(tail_rows(v), v.n)
    omega2 = tuple(x for x in v.lambda2)
    return LusztigDatum(v.n, concat(upper, lower, v.n), omega2), biword


def xi_lambda(tab: KNTableau) -> LusztigDatum:
    """The full composite embedding from a tableau to its multiplicity vector."""
    v = chi_lambda(psi_lambda(tab))
    datum, _ = datum_from_verma(v)
    return datum


def datum_to_json(d: LusztigDatum) -> dict:
    return {"n": d.n, "c": list(d.c), "shift2": list(d.shift2)}


def datum_from_json(data: dict) -> LusztigDatum:
    return LusztigDatum(int(data["n"]), tuple(data["c"]), tuple(data["shift2"]))


# ---------------------------------------------------------------------------
# transported crystal structure
#
# The first half carries the structure of the even-column profiles through the
# insertion correspondence; the second half carries the straight-tableau
# structure through the row-count map, on its image.  Color n freezes the
# second half, so it always acts on the first.


def _as_columns(cols: Sequence[Entries]) -> tuple[Column, ...]:
    return tuple(Column(c, 0) for c in cols)


def _profile_shape_ok(cols: Sequence[Entries]) -> bool:
    heights = [len(c) for c in cols]
    if any(h == 0 or h % 2 for h in heights):
        return False
    return all(heights[k] >= heights[k + 1] for k in range(len(heights) - 1))


def profile_f(cols: tuple[Entries, ...], i: int, n: int) -> Optional[tuple[Entries, ...]]:
    """Lowering operator on an even-column profile (bodies only, no tails)."""
    from .separation import glued_f_n, glued_f_j

    if i == n:
        _, out = glued_f_n(_as_columns(cols), n)
    else:
        res = glued_f_j(_as_columns(cols), i, n)
        if res is None:
            return None
        out = res
    entries = tuple(c.entries for c in out if c.height)
    if not _profile_shape_ok(entries):
        raise ShapeError("profile operator broke the even-column shape")
    return entries


def profile_e(cols: tuple[Entries, ...], i: int, n: int) -> Optional[tuple[Entries, ...]]:
    from .separation import glued_e_n, glued_e_j

    if i == n:
        res_n = glued_e_n(_as_columns(cols), n)
        if res_n is None:
            return None
        _, out = res_n
    else:
        res = glued_e_j(_as_columns(cols), i, n)
        if res is None:
            return None
        out = res
    entries = tuple(c.entries for c in out if c.height)
    if entries and not _profile_shape_ok(entries):
        raise ShapeError("profile operator broke the even-column shape")
    return entries


def _smu_word_positions(rows: Sequence[Entries]) -> list[tuple[int, int]]:
    """Cells of a straight tableau in column reading order, rightmost first."""
    if not rows:
        return []
    width = max(len(r) for r in rows)
    out = []
    for c in range(width - 1, -1, -1):
        for r in range(len(rows)):
            if c < len(rows[r]):
                out.append((r, c))
    return out


def smu_valid(rows: Sequence[Entries], mu: Sequence[int], n: int) -> bool:
    if [len(r) for r in rows] != [m for m in mu if m > 0]:
        return False
    for r in rows:
        if any(not leq(a, b, n) for a, b in zip(r, r[1:])):
            return False
    for k in range(len(rows) - 1):
        for c in range(len(rows[k + 1])):
            if not (rows[k][c] < rows[k + 1][c]):
                return False
    return all(all(x < 0 for x in r) for r in rows)


def smu_op(rows: tuple[Entries, ...], i: int, n: int, lower: bool) -> Optional[tuple[Entries, ...]]:
    """Word-rule operator on a straight tableau over barred letters (colors < n)."""
    from .crystal_core import tensor_e_factor, tensor_f_factor

    positions = _smu_word_positions(rows)

    def stat(x: int) -> tuple[int, int]:
        if x == -(i + 1):
            return (0, 1)
        if x == -i:
            return (1, 0)
        return (0, 0)

    stats = [stat(rows[r][c]) for r, c in positions]
    idx = tensor_f_factor(stats) if lower else tensor_e_factor(stats)
    if idx is None:
        return None
    r, c = positions[idx]
    out = [list(row) for row in rows]
    out[r][c] += 1 if lower else -1
    return tuple(tuple(row) for row in out)


def upper_f(c: Sequence[int], i: int, n: int) -> Optional[tuple[int, ...]]:
    cols = rsk_burge_inverse(tuple(c[: len(c) // 2]) + (0,) * (len(c) // 2), n)
    res = profile_f(cols, i, n)
    if res is None:
        return None
    _, upper = rsk_burge(res, n)
    return upper


def upper_e(c: Sequence[int], i: int, n: int) -> Optional[tuple[int, ...]]:
    cols = rsk_burge_inverse(tuple(c[: len(c) // 2]) + (0,) * (len(c) // 2), n)
    res = profile_e(cols, i, n)
    if res is None:
        return None
    _, upper = rsk_burge(res, n)
    return upper


def lower_f(c: Sequence[int], i: int, n: int, mu: Sequence[int]) -> Optional[tuple[int, ...]]:
    if i == n:
        return None
    rows = c_lower_inverse(c, mu, n)
    res = smu_op(rows, i, n, lower=True)
    if res is None or not smu_valid(res, mu, n):
        return None
    return c_lower(res, n)


def lower_e(c: Sequence[int], i: int, n: int, mu: Sequence[int]) -> Optional[tuple[int, ...]]:
    if i == n:
        return None
    rows = c_lower_inverse(c, mu, n)
    res = smu_op(rows, i, n, lower=False)
    if res is None or not smu_valid(res, mu, n):
        return None
    return c_lower(res, n)


def _iter_stat(x, op) -> int:
    count = 0
    cur = op(x)
    while cur is not None:
        count += 1
        cur = op(cur)
        if count > 10_000:
            raise RuntimeError("statistic iteration diverged")
    return count


def mu_of(lambda2: Sequence[int], n: int) -> tuple[int, ...]:
    from .spinor_model import shape_decomposition

    dec = shape_decomposition(lambda2, n)
    ones = 2 * dec.q + dec.r if dec.negative else 0
    return conjugate(dec.a_params + (1,) * ones)


def composite_f(d: LusztigDatum, i: int) -> Optional[LusztigDatum]:
    """Tensor-rule lowering on the concatenated vector with transported parts."""
    n = d.n
    order = convex_order(n)
    m = order.half
    upper, lower = tuple(d.c[:m]), tuple(d.c[m:])
    mu = mu_of(d.shift2, n)
    if i == n:
        res = upper_f(d.c, i, n)
        if res is None:
            return None
        return LusztigDatum(n, res[:m] + lower, d.shift2)
    eps_lower = _iter_stat(lower, lambda c: _lower_pad(lower_e(_unpad(c, m), i, n, mu), m))
    phi_upper = _iter_stat(upper, lambda c: _upper_trim(upper_f(_pad_upper(c, m), i, n), m))
    if phi_upper > eps_lower:
        res = upper_f(d.c, i, n)
        if res is None:
            return None
        return LusztigDatum(n, res[:m] + lower, d.shift2)
    res2 = lower_f((0,) * m + lower, i, n, mu)
    if res2 is None:
        return None
    return LusztigDatum(n, upper + res2[m:], d.shift2)


def composite_e(d: LusztigDatum, i: int) -> Optional[LusztigDatum]:
    n = d.n
    order = convex_order(n)
    m = order.half
    upper, lower = tuple(d.c[:m]), tuple(d.c[m:])
    mu = mu_of(d.shift2, n)
    if i == n:
        res = upper_e(d.c, i, n)
        if res is None:
            return None
        return LusztigDatum(n, res[:m] + lower, d.shift2)
    eps_lower = _iter_stat(lower, lambda c: _lower_pad(lower_e(_unpad(c, m), i, n, mu), m))
    phi_upper = _iter_stat(upper, lambda c: _upper_trim(upper_f(_pad_upper(c, m), i, n), m))
    if phi_upper >= eps_lower:
        res = upper_e(d.c, i, n)
        if res is None:
            return None
        return LusztigDatum(n, res[:m] + lower, d.shift2)
    res2 = lower_e((0,) * m + lower, i, n, mu)
    if res2 is None:
        return None
    return LusztigDatum(n, upper + res2[m:], d.shift2)


def _pad_upper(c: tuple[int, ...], m: int) -> tuple[int, ...]:
    return c + (0,) * m


def _upper_trim(c, m: int):
    return None if c is None else c[:m]


def _unpad(c: tuple[int, ...], m: int) -> tuple[int, ...]:
    return (0,) * m + c


def _lower_pad(c, m: int):
    return None if c is None else c[m:]
