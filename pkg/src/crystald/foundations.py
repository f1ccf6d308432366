"""Core combinatorial primitives for the type D_n alphabet.

Letters are signed integers: k encodes an unbarred k, -k the barred letter.
Columns live on a horizontal baseline L; ``tail`` counts the entries below L.
Row depth is measured so that depth 0 is the cell row just above L and
depth 1 the first row below it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

Letter = int
Entries = tuple[Letter, ...]

LESS = "less"
EQUAL = "equal"
GREATER = "greater"
INCOMPARABLE = "incomparable"


# ---------------------------------------------------------------------------
# letters


def letter_rank(x: Letter, n: int) -> int:
    """Rank in the total refinement 1 < .. < n-1 < n,n (rank n) < n-1 .. < 1."""
    if x == 0 or abs(x) > n:
        raise ValueError(f"letter {x} out of range for n={n}")
    return x if x > 0 else 2 * n + x


def compare(a: Letter, b: Letter, n: int) -> str:
    """Compare two letters; n and barred n are the unique incomparable pair."""
    if a == b:
        return EQUAL
    if abs(a) == n and abs(b) == n:
        return INCOMPARABLE
    ra, rb = letter_rank(a, n), letter_rank(b, n)
    if ra == rb:
        return INCOMPARABLE
    return LESS if ra < rb else GREATER


def leq(a: Letter, b: Letter, n: int) -> bool:
    return compare(a, b, n) in (LESS, EQUAL)


def lt(a: Letter, b: Letter, n: int) -> bool:
    return compare(a, b, n) == LESS


def is_barred(x: Letter) -> bool:
    return x < 0


# ---------------------------------------------------------------------------
# partitions


def is_partition(parts: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(a >= 0 for a in parts)


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Conjugate partition (trailing zeros dropped)."""
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def has_even_columns(parts: Sequence[int]) -> bool:
    """True iff every column of the diagram has even length."""
    return all(c % 2 == 0 for c in conjugate(parts))


# ---------------------------------------------------------------------------
# weights (stored doubled so half-integers stay exact)


def zero2(n: int) -> tuple[int, ...]:
    return (0,) * n


def eps2(i: int, n: int) -> tuple[int, ...]:
    """2*eps_i."""
    return tuple(2 if k == i else 0 for k in range(1, n + 1))


def alpha2(i: int, n: int) -> tuple[int, ...]:
    """2*alpha_i (simple roots: eps_i - eps_{i+1} for i < n, eps_{n-1}+eps_n)."""
    if i < n:
        return tuple(2 if k == i else (-2 if k == i + 1 else 0) for k in range(1, n + 1))
    return tuple(2 if k in (n - 1, n) else 0 for k in range(1, n + 1))


def fund2(i: int, n: int) -> tuple[int, ...]:
    """2*Lambda_i."""
    if i <= n - 2:
        return tuple(2 if k <= i else 0 for k in range(1, n + 1))
    if i == n - 1:
        return tuple(1 if k < n else -1 for k in range(1, n + 1))
    return (1,) * n


def wadd(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(u, v))


def wsub(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(u, v))


def is_dominant(lambda2: Sequence[int]) -> bool:
    """Dominance for a doubled weight: integral steps, decreasing, last pair free."""
    n = len(lambda2)
    if any((lambda2[i] - lambda2[i + 1]) % 2 != 0 for i in range(n - 1)):
        return False
    if any(lambda2[i] < lambda2[i + 1] for i in range(n - 2)):
        return False
    return lambda2[n - 2] >= abs(lambda2[n - 1])


def letter_weight2(x: Letter, n: int) -> tuple[int, ...]:
    """Weight of a single letter: eps_i for i, -eps_i for the barred letter."""
    w = [0] * n
    w[abs(x) - 1] = 2 if x > 0 else -2
    return tuple(w)


# ---------------------------------------------------------------------------
# columns and profiles


@dataclass(frozen=True)
class Column:
    """A single column of letters, read top to bottom.

    ``tail`` is the depth of the bottom cell; for a column touching L this is
    the number of entries lying below the line.  Sliding intermediates may
    float strictly below L (tail > height), tableau columns never do.
    """

    entries: Entries
    tail: int = 0

    def __post_init__(self) -> None:
        if self.tail < 0 or (not self.entries and self.tail != 0):
            raise ValueError(f"tail {self.tail} out of range for column {self.entries}")

    @property
    def height(self) -> int:
        return len(self.entries)

    @property
    def top_depth(self) -> int:
        return self.tail - len(self.entries) + 1

    @property
    def bottom_depth(self) -> int:
        return self.tail

    def at_depth(self, depth: int) -> Optional[Letter]:
        idx = depth - self.top_depth
        if 0 <= idx < len(self.entries):
            return self.entries[idx]
        return None

    def from_bottom(self, i: int) -> Letter:
        """i-th entry counted from the bottom, 1-based."""
        return self.entries[len(self.entries) - i]

    def from_top(self, i: int) -> Letter:
        """i-th entry counted from the top, 1-based."""
        return self.entries[i - 1]

    def body(self) -> Entries:
        return self.entries[: len(self.entries) - self.tail]

    def tail_entries(self) -> Entries:
        return self.entries[len(self.entries) - self.tail:]

    def is_strict(self, n: int) -> bool:
        return all(lt(a, b, n) for a, b in zip(self.entries, self.entries[1:]))


EMPTY_COLUMN = Column((), 0)


@dataclass(frozen=True)
class Profile:
    """Columns on the common line L, index 0 = rightmost."""

    n: int
    columns: tuple[Column, ...]

    def word(self) -> Entries:
        return tuple(x for col in self.columns for x in col.entries)


def columns_ss_along_l(left: Column, right: Column, n: int) -> bool:
    """Row-wise weak increase left-to-right at every shared depth."""
    lo = max(left.top_depth, right.top_depth)
    hi = min(left.bottom_depth, right.bottom_depth)
    for d in range(lo, hi + 1):
        a, b = left.at_depth(d), right.at_depth(d)
        if a is not None and b is not None and not leq(a, b, n):
            return False
    return True


def profile_semistandard(profile: Profile) -> bool:
    """Strict columns and weak rows for adjacent columns, using L positions."""
    n = profile.n
    cols = profile.columns
    if not all(c.is_strict(n) for c in cols):
        return False
    return all(
        columns_ss_along_l(cols[j + 1], cols[j], n) for j in range(len(cols) - 1)
    )


# ---------------------------------------------------------------------------
# two-column configurations in shape coordinates
#
# A pair (left, right, b) places the right column on rows 1..len(right) and the
# left column on rows b+1 .. b+len(left).  The overhang of the left column below
# the right one is a = b + len(left) - len(right); both a, b must be >= 0.


def pair_a(left: Entries, right: Entries, b: int) -> int:
    return b + len(left) - len(right)


def pair_is_valid(left: Entries, right: Entries, b: int) -> bool:
    return b >= 0 and pair_a(left, right, b) >= 0


def pair_is_ss(left: Entries, right: Entries, b: int, n: int) -> bool:
    """Semistandard check of the two-column skew configuration."""
    if not pair_is_valid(left, right, b):
        return False
    for r in range(b + 1, b + len(left) + 1):
        if 1 <= r <= len(right):
            if not leq(left[r - b - 1], right[r - 1], n):
                return False
    return True


def pair_residue(left: Entries, right: Entries, b: int, n: int) -> int:
    """Largest k with the right column slid down k rows still semistandard."""
    best = 0
    a = pair_a(left, right, b)
    for k in range(1, min(a, b) + 1):
        if pair_is_ss(left, right, b - k, n):
            best = k
    return best


def _slide_grid(left: Entries, right: Entries, b: int) -> dict[tuple[int, int], Letter]:
    cells: dict[tuple[int, int], Letter] = {}
    for i, x in enumerate(left):
        cells[(0, b + 1 + i)] = x
    for i, x in enumerate(right):
        cells[(1, 1 + i)] = x
    return cells


def _grid_to_pair(cells: dict[tuple[int, int], Letter]) -> tuple[Entries, Entries, int]:
    cols: list[list[tuple[int, Letter]]] = [[], []]
    for (c, r), x in cells.items():
        cols[c].append((r, x))
    out: list[Entries] = []
    tops: list[int] = []
    for c in range(2):
        cols[c].sort()
        rows = [r for r, _ in cols[c]]
        if rows and rows != list(range(rows[0], rows[0] + len(rows))):
            raise AssertionError("slide produced a non-contiguous column")
        tops.append(rows[0] if rows else 0)
        out.append(tuple(x for _, x in cols[c]))
    if not out[1]:
        # re-anchor so the (possibly empty) right column notionally starts at row 1
        return out[0], out[1], 0 if not out[0] else max(tops[0] - 1, 0)
    if not out[0]:
        # an empty left column hangs off the right one's bottom
        return out[0], out[1], len(out[1])
    shift = tops[1] - 1
    return out[0], out[1], (tops[0] - shift) - 1


def slide_out(left: Entries, right: Entries, b: int, n: int) -> tuple[Entries, Entries, int]:
    """One jeu de taquin slide into the hole below the right column's bottom.

    Content migrates down/right: the larger of (above, left) moves in, ties to
    the cell above.  Returns the new pair in shape coordinates.
    """
    cells = _slide_grid(left, right, b)
    hole = (1, len(right) + 1)
    while True:
        c, r = hole
        above = cells.get((c, r - 1))
        leftn = cells.get((c - 1, r)) if c == 1 else None
        if above is None and leftn is None:
            break
        if above is not None and (leftn is None or not lt(above, leftn, n)):
            cells[(c, r)] = above
            del cells[(c, r - 1)]
            hole = (c, r - 1)
        else:
            cells[(c, r)] = leftn  # type: ignore[assignment]
            del cells[(c - 1, r)]
            hole = (c - 1, r)
    return _grid_to_pair(cells)


def slide_in(left: Entries, right: Entries, b: int, n: int) -> tuple[Entries, Entries, int]:
    """One jeu de taquin slide into the hole above the left column's top.

    Content migrates up/left: the smaller of (below, right) moves in, ties to
    the cell below.
    """
    cells = _slide_grid(left, right, b)
    hole = (0, b)
    while True:
        c, r = hole
        below = cells.get((c, r + 1))
        rightn = cells.get((c + 1, r)) if c == 0 else None
        if below is None and rightn is None:
            break
        if below is not None and (rightn is None or leq(below, rightn, n)):
            cells[(c, r)] = below
            del cells[(c, r + 1)]
            hole = (c, r + 1)
        else:
            cells[(c, r)] = rightn  # type: ignore[assignment]
            del cells[(c + 1, r)]
            hole = (c + 1, r)
    return _grid_to_pair(cells)


def minimal_ss_b(left: Entries, right: Entries, n: int) -> int:
    """The least shape-coordinate b giving a semistandard placement.

    This is the fully slid-down presentation: every other semistandard
    placement of the same contents has positive residue.
    """
    lb = max(0, len(right) - len(left))
    for b in range(lb, len(right) + 1):
        if pair_is_ss(left, right, b, n):
            return b
    return len(right)  # no overlap: vacuously semistandard


def op_e_pair(left: Entries, right: Entries, n: int) -> Optional[tuple[Entries, Entries, int]]:
    """Move one box from the left column into the right one (null when a = 0)."""
    b = minimal_ss_b(left, right, n)
    if pair_a(left, right, b) == 0:
        return None
    return slide_out(left, right, b, n)


def op_f_pair(left: Entries, right: Entries, n: int) -> Optional[tuple[Entries, Entries, int]]:
    """Move one box from the right column into the left one (null when b = 0)."""
    b = minimal_ss_b(left, right, n)
    if b == 0:
        return None
    return slide_in(left, right, b, n)


def geometric_b(left: Column, right: Column) -> int:
    """Shape-coordinate b of two columns as they sit on L."""
    return left.top_depth - right.top_depth


# ---------------------------------------------------------------------------
# straight tableaux of rotated shape: bottoms aligned, tallest column rightmost


def is_straight(cols: Sequence[Entries], n: int) -> bool:
    """Valid bottom-aligned semistandard tableau, heights decreasing leftwards."""
    heights = [len(c) for c in cols]
    if any(h == 0 for h in heights):
        return False
    if any(heights[j] < heights[j + 1] for j in range(len(heights) - 1)):
        return False
    for col in cols:
        if any(not lt(a, b, n) for a, b in zip(col, col[1:])):
            return False
    for j in range(len(cols) - 1):
        right, left = cols[j], cols[j + 1]
        # bottoms aligned: compare matching rows from the bottom
        for i in range(1, len(left) + 1):
            if i <= len(right) and not leq(left[len(left) - i], right[len(right) - i], n):
                return False
    return True


def column_insert(cols: list[list[Letter]], x: Letter, n: int) -> int:
    """Insert x starting from the rightmost column; returns the landing column.

    In each column the bottom-most entry <= x is bumped leftwards; a letter
    larger than nothing in the column settles on its top.
    """
    j = 0
    while True:
        if j == len(cols):
            cols.append([x])
            return j
        col = cols[j]
        pos = -1
        for idx in range(len(col) - 1, -1, -1):
            if leq(col[idx], x, n):
                pos = idx
                break
        if pos == -1:
            col.insert(0, x)
            return j
        col[pos], x = x, col[pos]
        j += 1


def column_uninsert(cols: list[list[Letter]], j: int, n: int) -> Letter:
    """Eject the top entry of column j back out through the columns to its right.

    In every column passed the carried value displaces the topmost entry
    weakly larger than it; such an entry always exists on a valid chain.
    """
    y = cols[j].pop(0)
    if not cols[j]:
        del cols[j]
    for k in range(j - 1, -1, -1):
        col = cols[k]
        pos = -1
        for idx in range(len(col)):
            if leq(y, col[idx], n):
                pos = idx
                break
        if pos == -1:
            raise AssertionError("uninsertion chain found no entry to displace")
        col[pos], y = y, col[pos]
    return y


def reverse_column_insert(cols: Sequence[Entries], x: Letter, n: int) -> tuple[Entries, ...]:
    work = [list(c) for c in cols]
    column_insert(work, x, n)
    return tuple(tuple(c) for c in work)


def insertion_tableau(word: Sequence[Letter], n: int) -> tuple[Entries, ...]:
    """Insertion tableau of a barred word under reverse column insertion.

    Column insertion consumes the word back to front: the result has the same
    plactic class as the word read column-wise, right to left, top to bottom.
    """
    cols: list[list[Letter]] = []
    for x in reversed(word):
        column_insert(cols, x, n)
    return tuple(tuple(c) for c in cols)


# ---------------------------------------------------------------------------
# jeu de taquin on profiles


def _profile_cells(profile: Profile) -> dict[tuple[int, int], Letter]:
    cells: dict[tuple[int, int], Letter] = {}
    for j, col in enumerate(profile.columns):
        for i, x in enumerate(col.entries):
            cells[(j, col.top_depth + i)] = x
    return cells


def _cells_to_profile(n: int, cells: dict[tuple[int, int], Letter], width: int) -> Profile:
    cols = []
    for j in range(width):
        rows = sorted((r, x) for (jj, r), x in cells.items() if jj == j)
        if rows:
            depths = [r for r, _ in rows]
            if depths != list(range(depths[0], depths[0] + len(depths))):
                raise AssertionError("slide produced a non-contiguous column")
            if depths[-1] < 0:
                raise AssertionError("slide lifted a column bottom above the baseline")
            cols.append(Column(tuple(x for _, x in rows), tail=depths[-1]))
        else:
            cols.append(EMPTY_COLUMN)
    while cols and cols[-1].height == 0:
        cols.pop()
    return Profile(n, tuple(cols))


class InvalidHole(ValueError):
    pass


def jdt_slide(profile: Profile, hole: tuple[int, int]) -> Profile:
    """One slide into ``hole`` = (slot, depth); content migrates down/right.

    The hole must be an inner corner: empty, with a filled cell above or to its
    left, and nothing below it in its column nor to its right in its row.
    """
    n = profile.n
    cells = _profile_cells(profile)
    j, d = hole
    if (j, d) in cells:
        raise InvalidHole("invalid-hole: occupied")
    above = (j, d - 1) in cells
    left = (j + 1, d) in cells
    if not (above or left):
        raise InvalidHole("invalid-hole: no adjacent cell")
    if any((j, dd) in cells for dd in range(d + 1, d + 2)):
        raise InvalidHole("invalid-hole: cell below")
    if any((jj, d) in cells for jj in range(0, j)):
        raise InvalidHole("invalid-hole: cell to the right")
    width = max(len(profile.columns), j + 2)
    while True:
        a = cells.get((j, d - 1))
        lf = cells.get((j + 1, d))
        if a is None and lf is None:
            break
        if a is not None and (lf is None or not lt(a, lf, n)):
            cells[(j, d)] = a
            del cells[(j, d - 1)]
            d = d - 1
        else:
            cells[(j, d)] = lf  # type: ignore[assignment]
            del cells[(j + 1, d)]
            j = j + 1
    return _cells_to_profile(n, cells, width)


def rectify(profile: Profile) -> tuple[Entries, ...]:
    """Slide a skew profile to its straight form; returns bottom-aligned columns.

    Holes are taken at inner corners of the complement region (the part of the
    bounding shape not covered by content), which keeps every intermediate
    configuration a valid skew profile; the result does not depend on the
    corner order.
    """
    n = profile.n
    current = Profile(n, tuple(profile.columns))
    cells = _profile_cells(current)
    if not cells:
        return ()
    dmax = max(r for _, r in cells)
    dmin = min(r for _, r in cells)
    maxslot: dict[int, int] = {}
    running = -1
    for d in range(dmin, dmax + 1):
        js = [j for (j, dd) in cells if dd == d]
        if js:
            running = max(running, max(js))
        maxslot[d] = running
    mu = {
        (j, d)
        for d in range(dmin, dmax + 1)
        for j in range(0, maxslot[d] + 1)
        if (j, d) not in cells
    }
    while mu:
        hole = None
        for (j, d) in mu:
            if (j, d - 1) not in mu and (j + 1, d) not in mu:
                hole = (j, d)
                break
        if hole is None:
            raise AssertionError("inner region lost its staircase structure")
        mu.discard(hole)
        live = _profile_cells(current)
        j, d = hole
        if (j, d - 1) in live or (j + 1, d) in live:
            current = jdt_slide(current, hole)
    out = tuple(c.entries for c in current.columns if c.height)
    if not is_straight(out, n):
        raise AssertionError("rectification did not reach a straight shape")
    return out
