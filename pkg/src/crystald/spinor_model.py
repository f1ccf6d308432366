"""The spinor model: tuples of at-most-two-column factors over barred letters.

Factor kinds:

* ``A`` -- a two-column factor of parameter a: the left column's bottom a cells
  hang below L (its tail), the right column sits on L, and the residue is at
  most one.  a = 0 gives the fully even factor with both columns on L.
* ``O`` -- the odd-column variant: both columns carry a single cell below L
  and their bottoms are aligned.
* ``sp+`` / ``sp-`` -- a single column of even/odd height whose bottom cell
  hangs below L exactly when the height is odd.

A tuple lists its factors leftmost first; the spin factor, when present, is
rightmost.  Crystal operators for colors below n act on the concatenated word
of the columns read right to left; color n acts by adding or removing the
vertical domino (bar n, bar n-1) on top of the column selected by the
signature rule.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .crystal_core import DOT, MINUS, PLUS, tensor_e_factor, tensor_f_factor
from .foundations import (
    Column,
    Entries,
    Letter,
    fund2,
    geometric_b,
    minimal_ss_b,
    op_e_pair,
    op_f_pair,
    pair_a,
    pair_is_ss,
    pair_residue,
    wadd,
    zero2,
)
from .kn_model import weight_columns

A_KIND = "A"
O_KIND = "O"
SP_PLUS = "sp+"
SP_MINUS = "sp-"


class KindError(ValueError):
    pass


class ResidueError(ValueError):
    pass


class NotAdmissible(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    kind: str
    left: Column
    right: Column

    @property
    def a(self) -> int:
        return self.left.tail

    def key(self) -> tuple:
        return (self.kind, self.left.entries, self.left.tail, self.right.entries, self.right.tail)


def pair_factor(kind: str, left_entries: Entries, right_entries: Entries, a: int) -> Factor:
    if kind == O_KIND:
        return Factor(O_KIND, Column(left_entries, 1), Column(right_entries, 1))
    return Factor(A_KIND, Column(left_entries, a), Column(right_entries, 0))


def spin_factor(entries: Entries) -> Factor:
    parity = len(entries) % 2
    kind = SP_MINUS if parity else SP_PLUS
    return Factor(kind, Column(entries, parity), Column((), 0))


def is_spin(factor: Factor) -> bool:
    return factor.kind in (SP_PLUS, SP_MINUS)


# ---------------------------------------------------------------------------
# residue, sliding operators, derived columns


def factor_shape(factor: Factor) -> tuple[int, int, int]:
    """Shape parameters (a, b, c) of a two-column factor from its L placement."""
    if is_spin(factor):
        raise KindError("kind-error: spin columns have no two-column shape")
    left, right = factor.left, factor.right
    b = geometric_b(left, right)
    a = pair_a(left.entries, right.entries, b)
    c = right.height - b
    return a, b, c


def residue(factor: Factor, n: int) -> int:
    if is_spin(factor):
        return factor.left.height % 2
    a, b, c = factor_shape(factor)
    return pair_residue(factor.left.entries, factor.right.entries, b, n)


def op_e(factor: Factor, n: int) -> Optional[Factor]:
    """Move a box from the left column to the right one; null when a = 0."""
    if factor.kind != A_KIND:
        raise KindError("kind-error: sliding operators act on two-column A factors")
    res = op_e_pair(factor.left.entries, factor.right.entries, n)
    if res is None:
        return None
    left, right, _ = res
    return represent_even(left, right, n)


def op_f(factor: Factor, n: int) -> Optional[Factor]:
    """Move a box from the right column to the left one; null when b = 0."""
    if factor.kind != A_KIND:
        raise KindError("kind-error: sliding operators act on two-column A factors")
    res = op_f_pair(factor.left.entries, factor.right.entries, n)
    if res is None:
        return None
    left, right, _ = res
    return represent_even(left, right, n)


def anchor_even_pair(left: Entries, right: Entries, n: int) -> tuple[int, int]:
    """(a, b) of the unique even-parity presentation with residue at most one."""
    b = minimal_ss_b(left, right, n)
    if b % 2:
        b += 1
        if not pair_is_ss(left, right, b, n):
            raise AssertionError("no even presentation for the column pair")
    a = pair_a(left, right, b)
    c = len(right) - b
    if a < 0 or c < 0 or c % 2:
        raise AssertionError("column pair has no valid even presentation")
    return a, b


def represent_even(left: Entries, right: Entries, n: int) -> Factor:
    """Anchor a slid pair back on L as a two-column factor of even parities."""
    a, _ = anchor_even_pair(left, right, n)
    return pair_factor(A_KIND, left, right, a)


def derived_columns(factor: Factor, n: int) -> tuple[Optional[Entries], Optional[Entries], Entries, Entries]:
    """(left*, right*, left-hat, right-hat) companion columns of a factor.

    The starred pair exists only at residue one; the hatted pair is the fully
    raised presentation used by the interleaving conditions.
    """
    if is_spin(factor):
        col = factor.left.entries
        return col, col, col, col
    r = residue(factor, n)
    if r > 1:
        raise ResidueError("residue-error: factor residue exceeds one")
    a, b, c = factor_shape(factor)
    lstar = rstar = None
    if r == 1:
        res = op_f_pair(factor.left.entries, factor.right.entries, n)
        if res is None:
            raise ResidueError("residue-error: no starred pair")
        lstar, rstar, _ = res
    cur = (factor.left.entries, factor.right.entries)
    for _ in range(a - r):
        nxt = op_e_pair(cur[0], cur[1], n)
        if nxt is None:
            raise AssertionError("raising chain broke while deriving columns")
        cur = (nxt[0], nxt[1])
    return lstar, rstar, cur[0], cur[1]


def starred_columns(factor: Factor, n: int) -> tuple[Entries, Entries]:
    if residue(factor, n) != 1:
        raise ResidueError("residue-error: starred pair needs residue one")
    lstar, rstar, _, _ = derived_columns(factor, n)
    return lstar, rstar  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# admissibility and the interleaving order


def _entry(col: Entries, i: int) -> Optional[Letter]:
    """i-th entry from the bottom, 1-based."""
    return col[len(col) - i] if 1 <= i <= len(col) else None


def _dominated(xs: Entries, ys: Entries, offset: int, n: int) -> bool:
    """xs(i + offset) <= ys(i) from the bottom, wherever the left side exists."""
    for i in range(1, len(xs) + 1):
        x = _entry(xs, i + offset)
        if x is None:
            continue
        y = _entry(ys, i)
        if y is None:
            return False
        if not (x <= y):  # barred letters compare as integers
            return False
    return True


def is_admissible(t: Factor, s: Factor, n: int) -> bool:
    """The consecutive-factor compatibility t before s (t to the left)."""
    if t.kind == A_KIND and (s.kind == A_KIND or is_spin(s)):
        a = t.a
        rt = residue(t, n)
        if is_spin(s):
            a2 = rs = s.left.height % 2
            s_left = s_lhat = s_lstar = s.left.entries
            hs = len(s_left)
        else:
            a2 = s.a
            rs = residue(s, n)
            s_lstar, _, s_lhat, _ = derived_columns(s, n)
            s_left = s.left.entries
            hs = len(s_left)
        if a2 > a:
            return False
        t_lstar, t_rstar, t_lhat, t_rhat = derived_columns(t, n)
        rr = rt * rs
        # (i) height interleaving
        if len(t.right.entries) > hs - a2 + 2 * rr:
            return False
        # (ii)
        upper = t.right.entries if rr == 0 else t_rstar
        if upper is None or not _dominated(upper, s_lhat, 0, n):
            return False
        # (iii)
        epsilon = 1 if s.kind == SP_MINUS else 0
        if rr == 0:
            return _dominated(t_rhat, s_left, a - a2, n)
        if s_lstar is None:
            return False
        return _dominated(t_rhat, s_lstar, a - a2 + epsilon, n)
    if t.kind == A_KIND and s.kind == O_KIND:
        return is_admissible(t, spin_factor(s.left.entries), n)
    if t.kind == O_KIND and (s.kind == O_KIND or s.kind == SP_MINUS):
        left = t.right.entries
        right = s.left.entries
        if len(left) % 2 == 0 or len(right) % 2 == 0:
            return False
        if len(right) < len(left):
            return False
        b = len(right) - len(left)
        return pair_is_ss(left, right, b, n)
    raise KindError(f"kind-error: no admissibility case for {t.kind}, {s.kind}")


def _skew_pair_ok(left: Column, right: Column, n: int) -> bool:
    """Valid two-column skew along L: the right column weakly above at both ends."""
    if right.height == 0:
        return True
    if left.height == 0:
        return True
    if right.top_depth > left.top_depth or right.bottom_depth > left.bottom_depth:
        return False
    lo = max(left.top_depth, right.top_depth)
    hi = min(left.bottom_depth, right.bottom_depth)
    for d in range(lo, hi + 1):
        a, b = left.at_depth(d), right.at_depth(d)
        if a is not None and b is not None and not (a <= b):
            return False
    return True


def triangle_lt(t: Factor, s: Factor, n: int) -> bool:
    """Strong interleaving: the raised right column of t against s's left column."""
    if t.kind != A_KIND:
        raise KindError("kind-error: the left factor must be an A factor")
    _, _, _, t_rhat = derived_columns(t, n)
    a = t.a
    if is_spin(s):
        s_left = s.left
        b = s.left.tail
    elif s.kind == O_KIND:
        s_left = s.left
        b = 1
    else:
        s_left = s.left
        b = s.a
    if a > len(t_rhat):
        raise AssertionError("raised column shorter than the hanging tail")
    left_col = Column(t_rhat, a)
    right_col = Column(s_left.entries, b)
    return _skew_pair_ok(left_col, right_col, n)


# ---------------------------------------------------------------------------
# shape decomposition and tuples


@dataclass(frozen=True)
class Decomposition:
    a_params: tuple[int, ...]  # leftmost first, weakly decreasing
    p: int
    q: int
    r: int
    negative: bool

    def factor_kinds(self) -> tuple[str, ...]:
        pairs = tuple(A_KIND for _ in self.a_params)
        if self.negative:
            pairs = pairs + tuple(O_KIND for _ in range(self.q))
        else:
            pairs = pairs + tuple(A_KIND for _ in range(self.q))
        return pairs

    def pair_a_params(self) -> tuple[int, ...]:
        return self.a_params + tuple(0 for _ in range(self.q))

    def spin_kind(self) -> Optional[str]:
        if not self.r:
            return None
        return SP_MINUS if self.negative else SP_PLUS


def shape_decomposition(lambda2: Sequence[int], n: Optional[int] = None) -> Decomposition:
    lambda2 = tuple(lambda2)
    n = n or len(lambda2)
    heights, q, r, negative = weight_columns(lambda2)
    a_params = tuple(reversed([n - h for h in heights if h < n]))
    full = sum(1 for h in heights if h == n)
    if full != q:
        raise AssertionError("full-height column count disagrees with the weight")
    p = sum(1 for a in a_params if a == 1)
    return Decomposition(a_params=a_params, p=p, q=q, r=r, negative=negative)


@dataclass(frozen=True)
class SpinorTuple:
    n: int
    lambda2: tuple[int, ...]
    factors: tuple[Factor, ...]  # leftmost first; spin factor (if any) last

    def key(self) -> tuple:
        return (self.n, self.lambda2, tuple(f.key() for f in self.factors))

    def pair_factors(self) -> tuple[Factor, ...]:
        if self.factors and is_spin(self.factors[-1]):
            return self.factors[:-1]
        return self.factors

    def spin(self) -> Optional[Factor]:
        if self.factors and is_spin(self.factors[-1]):
            return self.factors[-1]
        return None

    def slots(self) -> list[Column]:
        """Flattened columns, slot 0 (rightmost) first; empty slot 0 when no spin."""
        cols: list[Column] = []
        sp = self.spin()
        cols.append(sp.left if sp is not None else Column((), 0))
        for f in reversed(self.pair_factors()):
            cols.append(f.right)
            cols.append(f.left)
        return cols

    def word(self) -> Entries:
        return tuple(x for col in self.slots() for x in col.entries)


def valid_factor(factor: Factor, n: int) -> bool:
    if is_spin(factor):
        col = factor.left
        if col.height % 2 != (1 if factor.kind == SP_MINUS else 0):
            return False
        return col.is_strict(n) and all(x < 0 for x in col.entries) and factor.right.height == 0
    if any(x >= 0 for x in factor.left.entries + factor.right.entries):
        return False
    try:
        a, b, c = factor_shape(factor)
    except Exception:
        return False
    if a < 0 or b < 0 or c < 0:
        return False
    if factor.kind == A_KIND:
        if b % 2 or c % 2 or not (0 <= a <= n - 1):
            return False
        if factor.right.tail != 0 or factor.left.tail != a:
            return False
        if residue(factor, n) > 1:
            return False
    else:
        if a != 0 or b % 2 or factor.left.height % 2 == 0:
            return False
        if factor.left.tail != 1 or factor.right.tail != 1:
            return False
    if not factor.left.is_strict(n) or not factor.right.is_strict(n):
        return False
    return pair_is_ss(factor.left.entries, factor.right.entries, b, n)


def validate_tuple(t: SpinorTuple) -> tuple[bool, list[str]]:
    dec = shape_decomposition(t.lambda2, t.n)
    problems: list[str] = []
    pairs = t.pair_factors()
    kinds = dec.factor_kinds()
    if len(pairs) != len(kinds):
        return False, [f"factor count {len(pairs)} != {len(kinds)}"]
    for k, (f, kind, a) in enumerate(zip(pairs, kinds, dec.pair_a_params())):
        if f.kind != kind:
            problems.append(f"factor {k}: kind {f.kind} != {kind}")
            continue
        if kind == A_KIND and f.a != a:
            problems.append(f"factor {k}: parameter {f.a} != {a}")
        if not valid_factor(f, t.n):
            problems.append(f"factor {k}: invalid")
    sp = t.spin()
    if (sp is None) != (dec.spin_kind() is None):
        problems.append("spin factor presence mismatch")
    elif sp is not None:
        if sp.kind != dec.spin_kind() or not valid_factor(sp, t.n):
            problems.append("spin factor invalid")
    if problems:
        return False, problems
    chain = list(pairs) + ([sp] if sp is not None else [])
    for k in range(len(chain) - 1):
        if not is_admissible(chain[k], chain[k + 1], t.n):
            problems.append(f"factors {k},{k + 1}: not admissible")
    return (not problems, problems)


# ---------------------------------------------------------------------------
# weights


def factor_weight2(factor: Factor, n: int) -> tuple[int, ...]:
    base = fund2(n, n) if is_spin(factor) else tuple(2 * x for x in fund2(n, n))
    w = list(base)
    for x in factor.left.entries + factor.right.entries:
        w[-x - 1] -= 2
    return tuple(w)


def spinor_weight2(t: SpinorTuple) -> tuple[int, ...]:
    w = zero2(t.n)
    for f in t.factors:
        w = wadd(w, factor_weight2(f, t.n))
    return w


# ---------------------------------------------------------------------------
# crystal operators


def _vd(n: int) -> Entries:
    return (-n, -(n - 1))


def column_symbol(col: Column, n: int) -> str:
    """Signature symbol of one column for the color-n rule."""
    if col.height == 0:
        return PLUS
    top = col.entries[0]
    if col.height >= 2 and col.entries[0] == -n and col.entries[1] == -(n - 1):
        return MINUS
    if top < 0 and -top <= n - 2:
        return PLUS
    return DOT


def sigma_word(t: SpinorTuple) -> tuple[str, ...]:
    """The color-n signature over the flattened slots, slot 0 first."""
    slots = t.slots()
    symbols = [column_symbol(c, t.n) for c in slots]
    if t.spin() is None:
        symbols[0] = DOT  # the empty slot is the trivial crystal, not an insertion site
    return tuple(symbols)


def _symbol_stats(sym: str) -> tuple[int, int]:
    if sym == PLUS:
        return (0, 1)
    if sym == MINUS:
        return (1, 0)
    return (0, 0)


def _slot_positions(t: SpinorTuple) -> list[tuple[int, str]]:
    """Map slot index -> (factor index within t.factors, 'left'|'right'|'spin')."""
    out: list[tuple[int, str]] = []
    sp = t.spin()
    pairs = t.pair_factors()
    out.append((len(t.factors) - 1, "spin") if sp is not None else (-1, "none"))
    for k in range(len(pairs) - 1, -1, -1):
        out.append((k, "right"))
        out.append((k, "left"))
    return out


def _with_column(t: SpinorTuple, pos: tuple[int, str], col: Column) -> SpinorTuple:
    idx, side = pos
    factors = list(t.factors)
    f = factors[idx]
    if side == "spin":
        factors[idx] = spin_factor(col.entries)
    elif side == "left":
        factors[idx] = Factor(f.kind, col, f.right)
    else:
        factors[idx] = Factor(f.kind, f.left, col)
    return SpinorTuple(t.n, t.lambda2, tuple(factors))


def _act_n(t: SpinorTuple, raise_op: bool) -> Optional[SpinorTuple]:
    n = t.n
    symbols = sigma_word(t)
    stats = [_symbol_stats(s) for s in symbols]
    idx = tensor_e_factor(stats) if raise_op else tensor_f_factor(stats)
    if idx is None:
        return None
    slots = t.slots()
    positions = _slot_positions(t)
    col = slots[idx]
    if raise_op:
        new_entries = col.entries[2:]
    else:
        new_entries = _vd(n) + col.entries
    # the domino moves strictly above L, so the tail is untouched
    out = _with_column(t, positions[idx], Column(new_entries, col.tail))
    ok, problems = validate_tuple(out)
    if not ok:
        raise NotAdmissible(f"color-n operator left the family: {problems[0]}")
    return out


def spinor_f(t: SpinorTuple, i: int) -> Optional[SpinorTuple]:
    ok, problems = validate_tuple(t)
    if not ok:
        raise NotAdmissible(f"not-admissible: {problems[0]}")
    if i == t.n:
        return _act_n(t, raise_op=False)
    return _act_j(t, i, raise_op=False)


def spinor_e(t: SpinorTuple, i: int) -> Optional[SpinorTuple]:
    ok, problems = validate_tuple(t)
    if not ok:
        raise NotAdmissible(f"not-admissible: {problems[0]}")
    if i == t.n:
        return _act_n(t, raise_op=True)
    return _act_j(t, i, raise_op=True)


def _letter_stats(x: Letter, i: int) -> tuple[int, int]:
    """Dual-alphabet statistics: bar(i+1) lowers to bar(i)."""
    if x == -(i + 1):
        return (0, 1)
    if x == -i:
        return (1, 0)
    return (0, 0)


def _act_j(t: SpinorTuple, i: int, raise_op: bool) -> Optional[SpinorTuple]:
    slots = t.slots()
    positions = _slot_positions(t)
    letters: list[tuple[int, int]] = []  # (slot, index within column)
    for s, col in enumerate(slots):
        for k in range(col.height):
            letters.append((s, k))
    stats = [_letter_stats(slots[s].entries[k], i) for s, k in letters]
    idx = tensor_e_factor(stats) if raise_op else tensor_f_factor(stats)
    if idx is None:
        return None
    s, k = letters[idx]
    col = slots[s]
    new_entries = list(col.entries)
    new_entries[k] = new_entries[k] + (-1 if raise_op else 1)
    out = _with_column(t, positions[s], Column(tuple(new_entries), col.tail))
    ok, problems = validate_tuple(out)
    if not ok:
        raise NotAdmissible(f"color-{i} operator left the family: {problems[0]}")
    return out


# ---------------------------------------------------------------------------
# highest weight elements


def highest_factor(kind: str, a: int, n: int) -> Factor:
    if kind == A_KIND:
        tail = tuple(-(n - k) for k in range(a))
        return pair_factor(A_KIND, tail, (), a)
    if kind == O_KIND:
        return pair_factor(O_KIND, (-n,), (-n,), 0)
    if kind == SP_PLUS:
        return spin_factor(())
    return spin_factor((-n,))


def highest_element(lambda2: Sequence[int], n: Optional[int] = None) -> SpinorTuple:
    lambda2 = tuple(lambda2)
    n = n or len(lambda2)
    dec = shape_decomposition(lambda2, n)
    factors = [
        highest_factor(kind, a, n)
        for kind, a in zip(dec.factor_kinds(), dec.pair_a_params())
    ]
    spk = dec.spin_kind()
    if spk is not None:
        factors.append(highest_factor(spk, 0, n))
    return SpinorTuple(n, lambda2, tuple(factors))


# ---------------------------------------------------------------------------
# JSON


def factor_to_json(f: Factor) -> dict:
    return {
        "kind": f.kind,
        "left": {"entries": list(f.left.entries), "tail": f.left.tail},
        "right": {"entries": list(f.right.entries), "tail": f.right.tail},
    }


def spinor_to_json(t: SpinorTuple) -> dict:
    return {
        "n": t.n,
        "lambda2": list(t.lambda2),
        "factors": [factor_to_json(f) for f in t.factors],
    }


def spinor_from_json(data: dict) -> SpinorTuple:
    factors = []
    for f in data["factors"]:
        left = Column(tuple(f["left"]["entries"]), f["left"]["tail"])
        right = Column(tuple(f["right"]["entries"]), f["right"]["tail"])
        factors.append(Factor(f["kind"], left, right))
    return SpinorTuple(int(data["n"]), tuple(data["lambda2"]), tuple(factors))
