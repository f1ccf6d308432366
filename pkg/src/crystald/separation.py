"""Separation of a spinor tuple into a body/tail pair on the line L.

The tuple is flattened to single columns (slot 0 rightmost).  Repeated passes
of sliding steps move every hanging tail one slot to the left; after each
pass the leftmost column is final and the live region regroups one slot over.
The result is a profile whose part above L is a straight shape of even column
lengths, right-justified, and whose part below L is a straight tableau whose
column heights are the tail parameters.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .crystal_core import DOT, MINUS, PLUS, tensor_e_factor, tensor_f_factor
from .foundations import (
    Column,
    Entries,
    Profile,
    columns_ss_along_l,
    conjugate,
    fund2,
    op_e_pair,
    op_f_pair,
    zero2,
)
from .kn_model import weight_columns
from .spinor_model import (
    A_KIND,
    Factor,
    NotAdmissible,
    O_KIND,
    SP_MINUS,
    SpinorTuple,
    column_symbol,
    pair_factor,
    shape_decomposition,
    sigma_word,
    spin_factor,
    triangle_lt,
    validate_tuple,
)


class SlideBlocked(RuntimeError):
    pass


class VermaShapeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# bicrystal sliding on flattened tuples


def bicrystal_f(cols: Sequence[Column], j: int, n: int) -> Optional[tuple[Column, ...]]:
    """Slide one box from slot j into slot j+1; null when nothing can move."""
    return _bicrystal(cols, j, n, lower=True)


def bicrystal_e(cols: Sequence[Column], j: int, n: int) -> Optional[tuple[Column, ...]]:
    """Slide one box from slot j+1 into slot j; null when nothing can move."""
    return _bicrystal(cols, j, n, lower=False)


def _bicrystal(cols: Sequence[Column], j: int, n: int, lower: bool) -> Optional[tuple[Column, ...]]:
    left, right = cols[j + 1], cols[j]
    op = op_f_pair if lower else op_e_pair
    res = op(left.entries, right.entries, n)
    if res is None:
        return None
    new_left, new_right, _ = res
    out = list(cols)
    out[j + 1] = Column(new_left, min(left.tail, len(new_left)))
    out[j] = Column(new_right, min(right.tail, len(new_right)))
    return tuple(out)


@dataclass
class SeparationTrace:
    """Per-step snapshots of the affected column quadruples."""

    steps: list = field(default_factory=list)  # (j, a, used_triangle, quadruple)


def _s_op(
    cols: dict[int, Column],
    j: int,
    a: int,
    use_triangle: bool,
    n: int,
    virtual_right: bool = False,
) -> None:
    """One sliding step at slot boundary j, mutating the live columns.

    Moves the a-cell tail of slot j onto slot j+1.  When the interleaving
    order fails, the move detours one box through the slot right of j and
    undoes it.  At an odd-column or spin boundary that neighbor is a virtual
    full standard column, never the live profile.
    """
    if a == 0:
        return
    padding = Column(tuple(-i for i in range(n, 0, -1)), 0)
    virtual_right = virtual_right or (j - 1) not in cols
    store: dict[str, Column] = {}

    def get(k: int) -> Column:
        if k == j - 1 and virtual_right:
            return store.get("pad", padding)
        return cols[k]

    def put(k: int, col: Column) -> None:
        if k == j - 1 and virtual_right:
            store["pad"] = col
        else:
            cols[k] = col

    def apply(k: int, lower: bool) -> None:
        left, right = get(k + 1), get(k)
        op = op_f_pair if lower else op_e_pair
        res = op(left.entries, right.entries, n)
        if res is None:
            raise SlideBlocked(f"slide-blocked at slot {k}")
        put(k + 1, Column(res[0], min(left.tail, len(res[0]))))
        put(k, Column(res[1], min(right.tail, len(res[1]))))

    if use_triangle:
        for _ in range(a):
            apply(j, lower=True)
    else:
        apply(j - 1, lower=True)
        for _ in range(a - 1):
            apply(j, lower=True)
        apply(j - 1, lower=False)
        apply(j, lower=False)

    if store and store["pad"].entries != padding.entries:
        raise AssertionError("padding column was not restored")
    # tails: the moved tail now hangs from slot j+1, slot j sits on L
    cols[j + 1] = Column(cols[j + 1].entries, a)
    cols[j] = Column(cols[j].entries, 0)


def _factor_at(cols: dict[int, Column], slot: int, kind: str) -> Factor:
    left, right = cols[slot + 1], cols[slot]
    if kind == O_KIND:
        return pair_factor(O_KIND, left.entries, right.entries, 0)
    return pair_factor(A_KIND, left.entries, right.entries, left.tail)


def separate(t: SpinorTuple, trace: Optional[SeparationTrace] = None) -> "VermaElement":
    """Run the full separation, producing the body/tail profile element."""
    ok, problems = validate_tuple(t)
    if not ok:
        raise NotAdmissible(f"not-admissible: {problems[0]}")
    n = t.n
    cols: dict[int, Column] = {}
    sp = t.spin()
    base = 0
    t0kind = "empty"
    if sp is not None:
        cols[0] = sp.left
        t0kind = SP_MINUS if sp.kind == SP_MINUS else "sp+"
    pairs = t.pair_factors()
    kinds = [f.kind for f in reversed(pairs)]  # rightmost factor first
    for k, f in enumerate(reversed(pairs), start=1):
        cols[2 * k - 1] = f.right
        cols[2 * k] = f.left

    finals: dict[int, Column] = {}

    while True:
        l = len(kinds)
        if l == 0:
            if base in cols:
                finals[base] = cols.pop(base)
            break
        m = sum(1 for k in kinds if k == O_KIND)

        # branch flags are read off the tuple as it stands at the pass start
        plan: list[tuple[int, int, bool, bool]] = []
        lo = m if m >= 1 else (0 if t0kind == SP_MINUS else 1)
        for i in range(l - 1, lo - 1, -1):
            j = base + 2 * i
            a = cols[j].tail if i >= 1 else cols[base].tail
            if a == 0:
                continue
            left_factor = _factor_at(cols, j + 1, A_KIND)
            if i >= 1:
                right_obj = _factor_at(cols, j - 1, kinds[i - 1])
            else:
                right_obj = spin_factor(cols[base].entries)
            virtual = (m >= 1 and i == m) or i == 0
            plan.append((j, a, triangle_lt(left_factor, right_obj, n), virtual))

        for j, a, flag, virtual in plan:
            _s_op(cols, j, a, flag, n, virtual_right=virtual)
            if trace is not None:
                quad = [cols.get(k, Column((), 0)) for k in (j + 2, j + 1, j, j - 1)]
                if virtual:
                    quad[3] = Column(tuple(-i for i in range(n, 0, -1)), 0)
                trace.steps.append((j, a, flag, tuple(quad)))

        finals[base + 2 * l] = cols.pop(base + 2 * l)
        if m == 0:
            if t0kind == SP_MINUS:
                # the old spin column is now an even body column; the column at
                # base+1 carries the moved tail and becomes the new spin column
                finals[base] = cols.pop(base)
            else:
                if base in cols:
                    finals[base] = cols.pop(base)  # a sp+ column is pure body
                finals[base + 1] = cols.pop(base + 1)
                t0kind = "empty"
            base += 1
            kinds.pop()
        elif t0kind == SP_MINUS:
            # the spin column pairs up with the column on its left; the factor
            # count is preserved and the spin slot becomes a phantom
            base -= 1
            t0kind = "empty"
        else:
            # the rightmost odd pair splits: its right column is the new spin
            base += 1
            t0kind = SP_MINUS
            kinds.remove(O_KIND)

    if cols:
        raise AssertionError(f"live columns remain after separation: {sorted(cols)}")
    return _assemble(n, t.lambda2, finals)


def _assemble(n: int, lambda2: tuple[int, ...], finals: dict[int, Column]) -> "VermaElement":
    heights, q, r, negative = weight_columns(lambda2)
    offset = 0 if r else 1  # without a spin slot, slot 0 stays empty forever
    width = (max(finals) + 1 - offset) if finals else 0
    slots: list[Column] = [Column((), 0)] * max(width, 0)
    for s, col in finals.items():
        if col.height == 0:
            continue
        phys = s - offset
        if phys < 0:
            raise AssertionError("a final column landed right of the physical region")
        slots[phys] = col
    while slots and slots[-1].height == 0:
        slots.pop()
    out = VermaElement(n, lambda2, tuple(slots))
    problems = out.validate()
    if problems:
        raise VermaShapeError(f"separation output invalid: {problems[0]}")
    if not out.interface_ok():
        raise VermaShapeError("separation output is not one tableau across the line")
    return out


# ---------------------------------------------------------------------------
# the target element: glued body/tail profile


@dataclass(frozen=True)
class VermaElement:
    n: int
    lambda2: tuple[int, ...]
    cols: tuple[Column, ...]  # glued columns, slot 0 rightmost

    def key(self) -> tuple:
        return (self.n, self.lambda2, tuple((c.entries, c.tail) for c in self.cols))

    # -- structure ---------------------------------------------------------

    def mu_prime(self) -> tuple[int, ...]:
        dec = shape_decomposition(self.lambda2, self.n)
        ones = 2 * dec.q + dec.r if dec.negative else 0
        return dec.a_params + (1,) * ones

    def anchor(self) -> int:
        dec = shape_decomposition(self.lambda2, self.n)
        l = len(dec.a_params) + dec.q
        return 2 * l - (0 if dec.r else 1)

    def shift_r(self) -> int:
        return self.lambda2[0]

    def shift2(self) -> tuple[int, ...]:
        return tuple(self.shift_r() * x for x in fund2(self.n, self.n))

    def body_heights(self) -> list[int]:
        return [c.height - c.tail for c in self.cols]

    def tail_heights(self) -> list[int]:
        return [c.tail for c in self.cols]

    def delta(self) -> tuple[int, ...]:
        hs = [h for h in self.body_heights() if h > 0]
        return conjugate(sorted(hs, reverse=True)) if hs else ()

    def mu(self) -> tuple[int, ...]:
        return conjugate([t for t in reversed(self.tail_heights()) if t > 0])

    def body_profile(self) -> Profile:
        cols = []
        for c in self.cols:
            body = c.body()
            if body:
                cols.append(Column(body, 0))
        return Profile(self.n, tuple(cols))

    def tail_profile(self) -> Profile:
        cols = []
        for c in self.cols:
            tail = c.tail_entries()
            if tail:
                cols.append(Column(tail, len(tail)))
        return Profile(self.n, tuple(cols))

    def word(self) -> Entries:
        return tuple(x for c in self.cols for x in c.entries)

    def weight2(self) -> tuple[int, ...]:
        w = list(zero2(self.n))
        for x in self.word():
            w[-x - 1] -= 2
        return tuple(w)

    # -- validity ----------------------------------------------------------

    def validate(self) -> list[str]:
        problems: list[str] = []
        n = self.n
        if self.cols and self.cols[-1].height == 0:
            problems.append("trailing empty slot")
        bodies = self.body_heights()
        tails = self.tail_heights()
        if any(h % 2 for h in bodies):
            problems.append("odd body column")
        k = sum(1 for h in bodies if h > 0)
        if any(h > 0 for h in bodies[k:]) or any(
            bodies[i] < bodies[i + 1] for i in range(k - 1)
        ):
            problems.append("body not right-justified decreasing")
        anchor = self.anchor()
        mu_prime = tuple(h for h in self.mu_prime() if h > 0)
        expected = {anchor - i: h for i, h in enumerate(mu_prime)}
        for s, t in enumerate(tails):
            if expected.get(s, 0) != t:
                problems.append(f"tail height {t} at slot {s}, expected {expected.get(s, 0)}")
        for c in self.cols:
            # the product structure constrains the two parts separately; a
            # glued column may fail to be one strict column off the image
            if not Column(c.body(), 0).is_strict(n) or not Column(c.tail_entries(), 0).is_strict(n):
                problems.append("column part not strictly increasing")
            if any(x >= 0 for x in c.entries):
                problems.append("unbarred letter in the profile")
        for s in range(len(self.cols) - 1):
            if not columns_ss_along_l(self.cols[s + 1], self.cols[s], n):
                problems.append(f"columns {s + 1},{s} not semistandard along L")
        return problems

    def interface_ok(self) -> bool:
        """Whether every glued column is one strict column across the line."""
        return all(c.height == 0 or c.is_strict(self.n) for c in self.cols)


def chi_lambda(t: SpinorTuple, trace: Optional[SeparationTrace] = None) -> VermaElement:
    """Separation as an embedding; the weight shift is ``shift2`` on the result."""
    return separate(t, trace=trace)


# ---------------------------------------------------------------------------
# crystal structure on glued profiles


def _pad(cols: Sequence[Column], upto: int) -> list[Column]:
    out = list(cols)
    while len(out) < upto:
        out.append(Column((), 0))
    return out


def _strip(cols: Sequence[Column]) -> tuple[Column, ...]:
    out = list(cols)
    while out and out[-1].height == 0:
        out.pop()
    return tuple(out)


def _body_symbol(col: Column, n: int) -> str:
    """Signature symbol of the part above L only; the tail is frozen."""
    body = col.body()
    if not body:
        return PLUS
    if len(body) >= 2 and body[0] == -n and body[1] == -(n - 1):
        return MINUS
    top = body[0]
    if top < 0 and -top <= n - 2:
        return PLUS
    return DOT


def glued_f_n(cols: Sequence[Column], n: int) -> tuple[int, tuple[Column, ...]]:
    """Add the vertical domino above L at the slot the body signature selects.

    The part below L belongs to the frozen factor, so only bodies contribute
    signs; with the trailing pluses of empty slots this never vanishes.
    """
    symbols = [_body_symbol(c, n) for c in cols]
    stats = [(1, 0) if s == MINUS else ((0, 1) if s == PLUS else (0, 0)) for s in symbols]
    idx = tensor_f_factor(stats)
    if idx is None:
        idx = len(cols)
    work = _pad(cols, idx + 1)
    col = work[idx]
    work[idx] = Column((-n, -(n - 1)) + col.entries, col.tail)
    return idx, tuple(work)


def glued_e_n(cols: Sequence[Column], n: int) -> Optional[tuple[int, tuple[Column, ...]]]:
    symbols = [_body_symbol(c, n) for c in cols]
    stats = [(1, 0) if s == MINUS else ((0, 1) if s == PLUS else (0, 0)) for s in symbols]
    idx = tensor_e_factor(stats)
    if idx is None:
        return None
    work = list(cols)
    col = work[idx]
    if col.height - col.tail < 2:
        raise VermaShapeError("domino removal would cross the baseline")
    work[idx] = Column(col.entries[2:], col.tail)
    return idx, _strip(work)


def _dual_stats(x: int, i: int) -> tuple[int, int]:
    if x == -(i + 1):
        return (0, 1)
    if x == -i:
        return (1, 0)
    return (0, 0)


def glued_f_j(cols: Sequence[Column], i: int, n: int) -> Optional[tuple[Column, ...]]:
    return _glued_j(cols, i, n, lower=True)


def glued_e_j(cols: Sequence[Column], i: int, n: int) -> Optional[tuple[Column, ...]]:
    return _glued_j(cols, i, n, lower=False)


def _glued_j(cols: Sequence[Column], i: int, n: int, lower: bool) -> Optional[tuple[Column, ...]]:
    letters: list[tuple[int, int]] = []
    for s, col in enumerate(cols):
        for k in range(col.height):
            letters.append((s, k))
    stats = [_dual_stats(cols[s].entries[k], i) for s, k in letters]
    idx = tensor_f_factor(stats) if lower else tensor_e_factor(stats)
    if idx is None:
        return None
    s, k = letters[idx]
    entries = list(cols[s].entries)
    entries[k] += 1 if lower else -1
    out = list(cols)
    out[s] = Column(tuple(entries), cols[s].tail)
    return tuple(out)


def verma_f(v: VermaElement, i: int) -> Optional[VermaElement]:
    if i == v.n:
        _, cols = glued_f_n(v.cols, v.n)
        out = VermaElement(v.n, v.lambda2, cols)
    else:
        res = glued_f_j(v.cols, i, v.n)
        if res is None:
            return None
        out = VermaElement(v.n, v.lambda2, res)
    problems = out.validate()
    if problems:
        raise VermaShapeError(f"f_{i} broke the profile: {problems[0]}")
    return out


def verma_e(v: VermaElement, i: int) -> Optional[VermaElement]:
    if i == v.n:
        res = glued_e_n(v.cols, v.n)
        if res is None:
            return None
        _, cols = res
        out = VermaElement(v.n, v.lambda2, cols)
    else:
        res = glued_e_j(v.cols, i, v.n)
        if res is None:
            return None
        out = VermaElement(v.n, v.lambda2, res)
    problems = out.validate()
    if problems:
        raise VermaShapeError(f"e_{i} broke the profile: {problems[0]}")
    return out


def tau_word(v: VermaElement, upto: Optional[int] = None) -> tuple[str, ...]:
    """The color-n signature of the glued profile, padded with pluses.

    Read over whole columns (the slot of the trivial factor, present exactly
    when the weight is integral, contributes a dot), this is the statistic
    whose reduction matches the tuple-side signature; the operators themselves
    use the body-only signs.
    """
    dec = shape_decomposition(v.lambda2, v.n)
    symbols = [] if dec.r else [DOT]
    symbols += [column_symbol(c, v.n) for c in v.cols]
    upto = upto if upto is not None else len(symbols)
    while len(symbols) < upto:
        symbols.append(PLUS)
    return tuple(symbols)


def signature_agreement(t: SpinorTuple, v: VermaElement) -> bool:
    """Reduced color-n signatures agree between a tuple and its separation."""
    from .crystal_core import reduce_signature

    sigma = reduce_signature(sigma_word(t))
    window = len(sigma)
    tau = reduce_signature(tau_word(v, window + len(v.cols) + 2))[:window]
    lhs = tuple(s for s in sigma if s != DOT)
    rhs = tuple(s for s in reduce_signature(tau) if s != DOT)
    return lhs == rhs


# ---------------------------------------------------------------------------
# JSON


def profile_to_json(p: Profile) -> dict:
    return {
        "n": p.n,
        "columns": [{"entries": list(c.entries), "tail": c.tail} for c in p.columns],
    }


def verma_to_json(v: VermaElement) -> dict:
    return {
        "body": profile_to_json(v.body_profile()),
        "tail": profile_to_json(v.tail_profile()),
        "r": v.shift_r(),
    }
