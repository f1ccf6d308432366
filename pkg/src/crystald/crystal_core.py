"""Generic crystal machinery: signatures, tensor bracketing, graphs, morphisms."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Optional, Sequence

PLUS = "+"
MINUS = "-"
DOT = "."

Symbol = str


def reduce_signature(symbols: Sequence[Symbol]) -> tuple[Symbol, ...]:
    """Cancel (+ at a smaller index, - at a larger index) pairs, ignoring dots.

    The result is order-independent; survivors read as minuses before pluses.
    """
    out = list(symbols)
    stack: list[int] = []
    for i, s in enumerate(symbols):
        if s == PLUS:
            stack.append(i)
        elif s == MINUS and stack:
            j = stack.pop()
            out[i] = DOT
            out[j] = DOT
    return tuple(out)


def signature_f_index(symbols: Sequence[Symbol]) -> Optional[int]:
    """Index where a lowering operator acts: the smallest surviving +."""
    red = reduce_signature(symbols)
    for i, s in enumerate(red):
        if s == PLUS:
            return i
    return None


def signature_e_index(symbols: Sequence[Symbol]) -> Optional[int]:
    """Index where a raising operator acts: the largest surviving -."""
    red = reduce_signature(symbols)
    for i in range(len(red) - 1, -1, -1):
        if red[i] == MINUS:
            return i
    return None


def tensor_symbols(stats: Sequence[tuple[int, int]]) -> tuple[list[Symbol], list[int]]:
    """Expand per-factor (eps, phi) statistics into a signature word.

    Factors are listed first-to-last; each contributes eps minuses then phi
    pluses.  Returns the word and the factor index owning each symbol.
    A value of -1 for eps or phi marks a frozen factor contributing nothing.
    """
    word: list[Symbol] = []
    owner: list[int] = []
    for k, (eps, phi) in enumerate(stats):
        if eps < 0 or phi < 0:
            continue
        word.extend([MINUS] * eps)
        owner.extend([k] * eps)
        word.extend([PLUS] * phi)
        owner.extend([k] * phi)
    return word, owner


def tensor_f_factor(stats: Sequence[tuple[int, int]]) -> Optional[int]:
    """Which tensor factor a lowering operator acts on, or None."""
    word, owner = tensor_symbols(stats)
    idx = signature_f_index(word)
    return None if idx is None else owner[idx]


def tensor_e_factor(stats: Sequence[tuple[int, int]]) -> Optional[int]:
    """Which tensor factor a raising operator acts on, or None."""
    word, owner = tensor_symbols(stats)
    idx = signature_e_index(word)
    return None if idx is None else owner[idx]


# ---------------------------------------------------------------------------
# explicit crystal graphs


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class CrystalGraph:
    n: int
    root_key: Hashable
    nodes: dict
    edges: set = field(default_factory=set)  # (src_key, i, dst_key)

    def __len__(self) -> int:
        return len(self.nodes)

    def out_edge(self, key: Hashable, i: int):
        for (u, c, v) in self.edges:
            if u == key and c == i:
                return v
        return None


FOp = Callable[[object, int], Optional[object]]
KeyFn = Callable[[object], Hashable]


def generate_component(
    highest,
    f_op: FOp,
    n: int,
    key_fn: KeyFn,
    budget: int = 10**6,
) -> CrystalGraph:
    """BFS closure of a highest weight element under all lowering operators."""
    root = key_fn(highest)
    nodes = {root: highest}
    edges: set = set()
    queue = deque([highest])
    while queue:
        x = queue.popleft()
        kx = key_fn(x)
        for i in range(1, n + 1):
            y = f_op(x, i)
            if y is None:
                continue
            ky = key_fn(y)
            edges.add((kx, i, ky))
            if ky not in nodes:
                nodes[ky] = y
                if len(nodes) > budget:
                    raise BudgetExceeded(f"too-large: component exceeds {budget} nodes")
                queue.append(y)
    return CrystalGraph(n=n, root_key=root, nodes=nodes, edges=edges)


def canonical_form(graph: CrystalGraph) -> tuple:
    """Canonical presentation via lexicographically least f-paths from the root.

    Two components generated from their highest weight elements are isomorphic
    as edge-colored graphs iff their canonical forms are equal.
    """
    import heapq

    labels: dict = {graph.root_key: ()}
    succ: dict = {}
    for (u, i, v) in graph.edges:
        succ.setdefault(u, []).append((i, v))
    heap: list[tuple[tuple, Hashable]] = [((), graph.root_key)]
    done = set()
    while heap:
        path, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for i, v in sorted(succ.get(u, [])):
            cand = path + (i,)
            if v not in labels or cand < labels[v]:
                labels[v] = cand
                heapq.heappush(heap, (cand, v))
    if len(labels) != len(graph.nodes):
        raise AssertionError("component has nodes unreachable from the root")
    return tuple(sorted((labels[u], i, labels[v]) for (u, i, v) in graph.edges))


def compare_components(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return False
    return canonical_form(g1) == canonical_form(g2)


# ---------------------------------------------------------------------------
# morphism verification


@dataclass
class MorphismReport:
    ok: bool
    checked: int
    failures: list

    def first_failure(self):
        return self.failures[0] if self.failures else None


def verify_morphism(
    graph: CrystalGraph,
    phi: Callable[[object], object],
    f_src: FOp,
    e_src: FOp,
    f_dst: FOp,
    e_dst: FOp,
    key_src: KeyFn,
    key_dst: KeyFn,
    wt_src: Callable[[object], tuple],
    wt_dst: Callable[[object], tuple],
    shift: Optional[tuple] = None,
    embedding: bool = False,
    max_failures: int = 5,
) -> MorphismReport:
    """Check operator equivariance, weight shift, and injectivity on a component.

    With ``embedding`` set, a vanishing f on the source may map into a larger
    target crystal where f keeps going; e must vanish consistently either way.
    """
    failures: list = []
    checked = 0
    images: dict = {}

    def record(kind, key, i, detail) -> None:
        if len(failures) < max_failures:
            failures.append((kind, key, i, detail))

    for key, x in graph.nodes.items():
        y = phi(x)
        ky = key_dst(y)
        if ky in images and images[ky] != key:
            record("injectivity", key, None, f"collides with {images[ky]}")
        images[ky] = key

        w_expected = wt_src(x)
        w_got = wt_dst(y)
        if shift is not None:
            w_got = tuple(a + b for a, b in zip(w_got, shift))
        if w_expected != w_got:
            record("weight", key, None, (w_expected, w_got))
        checked += 1

        for i in range(1, graph.n + 1):
            fx = f_src(x, i)
            fy = f_dst(y, i)
            if fx is None:
                if fy is not None and not embedding:
                    record("f-null", key, i, "target f defined where source vanishes")
            else:
                if fy is None:
                    record("f", key, i, "target f vanishes where source is defined")
                elif key_dst(phi(fx)) != key_dst(fy):
                    record("f", key, i, "images disagree")
            ex = e_src(x, i)
            ey = e_dst(y, i)
            if ex is None:
                if ey is not None:
                    record("e-null", key, i, "target e defined where source vanishes")
            else:
                if ey is None:
                    record("e", key, i, "target e vanishes where source is defined")
                elif key_dst(phi(ex)) != key_dst(ey):
                    record("e", key, i, "images disagree")
            checked += 1
    return MorphismReport(ok=not failures, checked=checked, failures=failures)


# ---------------------------------------------------------------------------
# export


def graph_to_json(graph: CrystalGraph, serialize: Callable[[object], object]) -> dict:
    keys = sorted(graph.nodes, key=repr)
    return {
        "nodes": [serialize(graph.nodes[k]) for k in keys],
        "edges": sorted(
            [keys.index(u), i, keys.index(v)] for (u, i, v) in graph.edges
        ),
    }


def graph_to_dot(graph: CrystalGraph, label: Callable[[object], str]) -> str:
    keys = sorted(graph.nodes, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    lines = ["digraph crystal {", '  rankdir="TB";']
    for k in keys:
        lines.append(f'  n{index[k]} [label="{label(graph.nodes[k])}"];')
    for (u, i, v) in sorted(graph.edges, key=lambda t: (index[t[0]], t[1], index[t[2]])):
        lines.append(f'  n{index[u]} -> n{index[v]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)
