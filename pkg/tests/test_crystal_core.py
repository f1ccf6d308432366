import random

from crystald.crystal_core import (
    compare_components,
    generate_component,
    graph_to_dot,
    graph_to_json,
    reduce_signature,
    tensor_e_factor,
    tensor_f_factor,
    verify_morphism,
)
from crystald.kn_model import kn_e, kn_f, kn_highest, kn_weight2
from crystald.oracle import weyl_dim


def test_reduce_signature_golden():
    assert reduce_signature(("-", "+", "+", "-", ".")) == ("-", "+", ".", ".", ".")
    assert reduce_signature(("-", ".", "+", ".", ".")) == ("-", ".", "+", ".", ".")
    assert reduce_signature((".", ".", ".")) == (".", ".", ".")


def test_reduce_signature_survivors_sorted():
    rng = random.Random(1)
    for _ in range(300):
        word = [rng.choice("+-.") for _ in range(rng.randint(0, 12))]
        red = reduce_signature(word)
        signs = [s for s in red if s != "."]
        k = signs.count("-")
        assert signs == ["-"] * k + ["+"] * (len(signs) - k)


def test_reduce_signature_confluent():
    # cancelling in arbitrary order gives the same survivors
    rng = random.Random(2)
    for _ in range(200):
        word = [rng.choice("+-.") for _ in range(rng.randint(0, 10))]

        def survivors_random_order(symbols):
            syms = list(symbols)
            while True:
                pairs = []
                for i, s in enumerate(syms):
                    if s != "+":
                        continue
                    for j in range(i + 1, len(syms)):
                        if syms[j] == "-":
                            pairs.append((i, j))
                            break
                        if syms[j] == "+":
                            break
                if not pairs:
                    return tuple(syms)
                i, j = rng.choice(pairs)
                syms[i] = syms[j] = "."

        assert survivors_random_order(word) == reduce_signature(word)


def test_tensor_rule_freeze_and_one_point():
    # a frozen factor contributes nothing, so the live factor acts
    assert tensor_f_factor([(0, 1), (-1, -1)]) == 0
    assert tensor_f_factor([(-1, -1), (0, 1)]) == 1
    # equal statistics on the boundary: the lowering goes右 to the second factor
    assert tensor_f_factor([(0, 0), (0, 1)]) == 1
    assert tensor_e_factor([(1, 0), (0, 0)]) == 0


def test_generate_component_letter_crystal():
    g = generate_component(kn_highest((2, 0, 0, 0), 4), kn_f, 4, lambda t: t.key())
    assert len(g) == 8
    # the letter chain forks at color 3/4 and rejoins
    entries = sorted(t.columns[0].entries[0] for t in g.nodes.values())
    assert entries == [-4, -3, -2, -1, 1, 2, 3, 4]
    colors = sorted(i for (_, i, _) in g.edges)
    assert colors.count(3) == 2 and colors.count(4) == 2


def test_generate_component_sizes():
    g = generate_component(kn_highest((2, 2, 0, 0), 4), kn_f, 4, lambda t: t.key())
    assert len(g) == 28 == weyl_dim((2, 2, 0, 0))


def test_one_point_component():
    g = generate_component(kn_highest((0, 0, 0, 0), 4), kn_f, 4, lambda t: t.key())
    assert len(g) == 1 and not g.edges


def test_compare_components_and_canonical_form():
    g1 = generate_component(kn_highest((2, 2, 0, 0), 4), kn_f, 4, lambda t: t.key())
    g2 = generate_component(kn_highest((2, 2, 0, 0), 4), kn_f, 4, lambda t: t.key())
    g3 = generate_component(kn_highest((2, 0, 0, 0), 4), kn_f, 4, lambda t: t.key())
    assert compare_components(g1, g2)
    assert not compare_components(g1, g3)


def test_verify_morphism_identity_and_fault():
    g = generate_component(kn_highest((2, 0, 0, 0), 4), kn_f, 4, lambda t: t.key())
    rep = verify_morphism(
        g, lambda x: x, kn_f, kn_e, kn_f, kn_e,
        lambda t: t.key(), lambda t: t.key(), kn_weight2, kn_weight2,
    )
    assert rep.ok

    nodes = sorted(g.nodes)
    corrupt = {nodes[0]: g.nodes[nodes[1]], nodes[1]: g.nodes[nodes[0]]}

    def bad(x):
        return corrupt.get(x.key(), x)

    rep = verify_morphism(
        g, bad, kn_f, kn_e, kn_f, kn_e,
        lambda t: t.key(), lambda t: t.key(), kn_weight2, kn_weight2,
    )
    assert not rep.ok and rep.first_failure() is not None


def test_graph_exports():
    g = generate_component(kn_highest((2, 0, 0, 0), 4), kn_f, 4, lambda t: t.key())
    data = graph_to_json(g, lambda t: t.key()[2])
    assert len(data["nodes"]) == 8 and len(data["edges"]) == len(g.edges)
    dot = graph_to_dot(g, lambda t: str(t.columns[0].entries[0]))
    assert dot.startswith("digraph crystal {") and dot.count("->") == len(g.edges)
