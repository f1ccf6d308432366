"""Verification suites shared by the command line and the acceptance tests."""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Optional, Sequence

from .crystal_core import generate_component, verify_morphism
from .foundations import columns_ss_along_l, conjugate, lt
from .kn_model import kn_e, kn_f, kn_highest, kn_weight2
from .kn_spinor_iso import psi_lambda
from .lusztig import (
    composite_e,
    composite_f,
    rsk_burge,
    rsk_burge_inverse,
    xi_lambda,
)
from .oracle import (
    SMOKE_LAMBDAS,
    SMOKE_N,
    knuth_equivalent,
    p_tableau,
    p_tableau_by_rectification,
    weyl_dim,
)
from .separation import SeparationTrace, chi_lambda, separate, signature_agreement, verma_e, verma_f
from .spinor_model import (
    A_KIND,
    SpinorTuple,
    highest_element,
    spinor_e,
    spinor_f,
    spinor_weight2,
    triangle_lt,
)

Result = tuple[str, bool, str]


def _map(fn: Callable, items: Sequence, threads: int) -> list:
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def random_elements(lambda2: Sequence[int], n: int, count: int, rng: random.Random) -> list[SpinorTuple]:
    """Seeded lowering walks from the top of a component."""
    out = []
    top = highest_element(lambda2, n)
    for _ in range(count):
        cur = top
        for _ in range(rng.randint(0, 3 * n * max(1, sum(abs(x) for x in lambda2) // 2))):
            i = rng.randint(1, n)
            nxt = spinor_f(cur, i)
            if nxt is not None:
                cur = nxt
        out.append(cur)
    return out


# ---------------------------------------------------------------------------


def dimension_suite(n: int = SMOKE_N, seed: int = 0, threads: int = 1) -> list[Result]:
    def one(lambda2) -> Result:
        want = weyl_dim(lambda2)
        kn = len(generate_component(kn_highest(lambda2, n), kn_f, n, lambda t: t.key()))
        sp = len(
            generate_component(highest_element(lambda2, n), spinor_f, n, lambda t: t.key())
        )
        ok = want == kn == sp
        return (f"dimension {lambda2}", ok, f"weyl={want} kn={kn} spinor={sp}")

    return _map(one, SMOKE_LAMBDAS, threads)


def morphism_suite(n: int = SMOKE_N, seed: int = 0, threads: int = 1) -> list[Result]:
    def one(lambda2) -> list[Result]:
        out: list[Result] = []
        kn_graph = generate_component(kn_highest(lambda2, n), kn_f, n, lambda t: t.key())
        rep = verify_morphism(
            kn_graph,
            psi_lambda,
            kn_f,
            kn_e,
            spinor_f,
            spinor_e,
            lambda t: t.key(),
            lambda t: t.key(),
            kn_weight2,
            spinor_weight2,
        )
        out.append((f"psi {lambda2}", rep.ok, f"{rep.checked} checks, first failure {rep.first_failure()}"))
        sp_graph = generate_component(highest_element(lambda2, n), spinor_f, n, lambda t: t.key())
        shift = chi_lambda(highest_element(lambda2, n)).shift2()
        rep = verify_morphism(
            sp_graph,
            chi_lambda,
            spinor_f,
            spinor_e,
            verma_f,
            verma_e,
            lambda t: t.key(),
            lambda v: v.key(),
            spinor_weight2,
            lambda v: v.weight2(),
            shift=shift,
            embedding=True,
        )
        out.append((f"chi {lambda2}", rep.ok, f"{rep.checked} checks, first failure {rep.first_failure()}"))
        rep = verify_morphism(
            kn_graph,
            xi_lambda,
            kn_f,
            kn_e,
            composite_f,
            composite_e,
            lambda t: t.key(),
            lambda d: d.key(),
            kn_weight2,
            lambda d: d.weight2(),
            embedding=True,
        )
        out.append((f"xi {lambda2}", rep.ok, f"{rep.checked} checks, first failure {rep.first_failure()}"))
        return out

    return [r for rs in _map(one, SMOKE_LAMBDAS, threads) for r in rs]


def knuth_suite(n: int = SMOKE_N, seed: int = 0, threads: int = 1, samples: int = 2000) -> list[Result]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        w = tuple(-rng.randint(1, n) for _ in range(rng.randint(0, 2 * n)))
        if p_tableau(w, n) != p_tableau_by_rectification(w, n):
            bad += 1
    return [("knuth dual route", bad == 0, f"{samples} words, {bad} disagreements")]


def even_column_shapes(n: int, max_cells: int) -> list[tuple[int, ...]]:
    """Conjugates of even-part lists fitting in n rows with a cell budget."""
    shapes: list[tuple[int, ...]] = []

    def extend(cols: list[int], total: int) -> None:
        if cols:
            shapes.append(tuple(cols))
        start = cols[-1] if cols else n if n % 2 == 0 else n - 1
        for h in range(start - start % 2, 1, -2):
            if total + h <= max_cells:
                extend(cols + [h], total + h)

    extend([], 0)
    return sorted(set(shapes))


def enumerate_straight(columns: Sequence[int], n: int) -> Iterable[tuple[tuple[int, ...], ...]]:
    """All straight semistandard fillings over barred letters, columns tallest first."""
    letters = [-k for k in range(n, 0, -1)]

    def gen_col(h: int, bound: Optional[tuple[int, ...]]) -> Iterable[tuple[int, ...]]:
        def extend(col: list[int]) -> Iterable[tuple[int, ...]]:
            if len(col) == h:
                yield tuple(col)
                return
            for x in letters:
                if col and not lt(col[-1], x, n):
                    continue
                if bound is not None:
                    # rows align at the bottom: entry i from the bottom of this
                    # column may not exceed the matching entry on its right
                    i_from_bottom = h - len(col)
                    ref = bound[len(bound) - i_from_bottom]
                    if x > ref:
                        continue
                col.append(x)
                yield from extend(col)
                col.pop()

        yield from extend([])

    def rec(j: int, acc: list[tuple[int, ...]]) -> Iterable[tuple[tuple[int, ...], ...]]:
        if j == len(columns):
            yield tuple(acc)
            return
        for col in gen_col(columns[j], acc[-1] if acc else None):
            acc.append(col)
            yield from rec(j + 1, acc)
            acc.pop()

    yield from rec(0, [])


def rsk_suite(n: int = SMOKE_N, seed: int = 0, threads: int = 1, max_cells: int = 8) -> list[Result]:
    total = bad = 0
    for cols_shape in even_column_shapes(n, max_cells):
        for t in enumerate_straight(cols_shape, n):
            total += 1
            biword, c = rsk_burge(t, n)
            src = sorted(x for col in t for x in col)
            dst = sorted([a for a, b in biword] + [b for a, b in biword])
            if src != dst or rsk_burge_inverse(c, n) != t:
                bad += 1
    return [("rsk round trip", bad == 0, f"{total} tableaux, {bad} failures")]


def signatures_suite(
    n: int = SMOKE_N, seed: int = 0, threads: int = 1, samples: int = 500
) -> list[Result]:
    rng = random.Random(seed)
    per = max(1, -(-samples // len(SMOKE_LAMBDAS)))
    knuth_bad = shape_bad = sig_bad = quad_bad = tri_bad = 0
    tested = 0
    for lambda2 in SMOKE_LAMBDAS:
        for t in random_elements(lambda2, n, per, rng):
            tested += 1
            trace = SeparationTrace()
            v = separate(t, trace=trace)
            if not knuth_equivalent(t.word(), v.word(), n):
                knuth_bad += 1
            mu_prime = tuple(h for h in v.mu_prime() if h > 0)
            if v.mu() != conjugate(mu_prime) or any(h % 2 for h in conjugate(v.delta())):
                shape_bad += 1
            if not signature_agreement(t, v):
                sig_bad += 1
            for (j, a, flag, quad) in trace.steps:
                for k in range(3):
                    if not columns_ss_along_l(quad[k], quad[k + 1], n):
                        quad_bad += 1
            for i in range(1, n):
                s = spinor_e(t, i)
                if s is None:
                    continue
                pairs_t = list(t.factors)
                pairs_s = list(s.factors)
                for k in range(len(pairs_t) - 1):
                    if pairs_t[k].kind != A_KIND:
                        continue
                    before = triangle_lt(pairs_t[k], pairs_t[k + 1], n)
                    after = triangle_lt(pairs_s[k], pairs_s[k + 1], n)
                    if before != after:
                        tri_bad += 1
    return [
        ("separation knuth class", knuth_bad == 0, f"{tested} elements, {knuth_bad} failures"),
        ("separation shapes", shape_bad == 0, f"{tested} elements, {shape_bad} failures"),
        ("signature agreement", sig_bad == 0, f"{tested} elements, {sig_bad} failures"),
        ("sliding quadruples", quad_bad == 0, f"{tested} runs, {quad_bad} failures"),
        ("order preserved by raising", tri_bad == 0, f"{tested} elements, {tri_bad} failures"),
    ]
