from fractions import Fraction as F

import pytest

from rtdensity import (
    SearchConfig,
    SearchSpaceError,
    WeightedGraph,
    basis_coefficients,
    brute_force_extremal,
    check_structure,
    complete_balanced,
    ks_density,
    lemma_inequality_suite,
    maclaurin_gap,
    realize_spec,
    rho,
    two_part_basis,
    two_part_graph,
    verify_two_part_decomposition,
)
from rtdensity.partitions import WeightAssignment, enumerate_specs
from rtdensity.verify import search_space_size


HALF_ONE = (F(1, 2), F(1))


def test_search_space_size_and_refusal():
    cfg = SearchConfig(5, 5, HALF_ONE, 5, 11)
    assert search_space_size(cfg) == 1024
    big = SearchConfig(6, 40, (F(0),) + HALF_ONE, 3, 8)
    with pytest.raises(SearchSpaceError) as err:
        brute_force_extremal(big)
    assert err.value.size == search_space_size(big)


def test_brute_force_balanced_five():
    res = brute_force_extremal(SearchConfig(5, 5, HALF_ONE, 5, 11))
    assert res.density == F(24, 625)
    assert res.best == complete_balanced(5)
    assert len(res.maximizers) == 1
    rep = check_structure(res.best, 5, 11)
    assert rep.all_hold


def test_brute_force_uniform_triangle():
    res = brute_force_extremal(SearchConfig(3, 6, HALF_ONE, 3, 5))
    assert res.density == F(1, 36)
    assert res.best.vertex_weights == (F(1, 3),) * 3
    assert all(
        res.best.edge_weights[u][v] == F(1, 2) for u in range(3) for v in range(u + 1, 3)
    )


def test_brute_force_half_edge():
    res = brute_force_extremal(SearchConfig(2, 4, HALF_ONE, 2, 4))
    assert res.density == F(1, 4)
    assert res.best.vertex_weights == (F(1, 2), F(1, 2))
    assert res.best.edge_weights[0][1] == F(1, 2)


def test_brute_force_ternary_alphabet_recovers_binary_weights():
    # with 0 allowed, the optimum still uses only weights in {1/2, 1}
    res = brute_force_extremal(SearchConfig(3, 6, (F(0),) + HALF_ONE, 3, 5))
    assert res.density == F(1, 36)
    rep = check_structure(res.best, 3, 5)
    assert rep.a1 and rep.a2


def test_brute_force_never_beats_rho():
    # restricted search at n below the optimizer's best order
    res = brute_force_extremal(SearchConfig(5, 5, HALF_ONE, 5, 11))
    assert res.density <= rho(5, 11).density
    # at matching order and representable weights the search recovers rho
    res = brute_force_extremal(SearchConfig(3, 6, HALF_ONE, 3, 5))
    assert res.density == rho(3, 5).density


def test_check_structure_examples():
    rep = check_structure(complete_balanced(5), 5, 11)
    assert rep.all_hold
    assert rep.partition == ((0,), (1,), (2,), (3,), (4,))

    spec = enumerate_specs(5, 11)[1]
    w = WeightAssignment(((2, F(4, 25)), (1, F(9, 50))))
    rep = check_structure(realize_spec(spec, w), 5, 11)
    assert rep.all_hold
    assert len(rep.partition) == 4

    bad = WeightedGraph.build(
        [F(1, 3)] * 3, {(0, 1): F(0), (0, 2): F(1), (1, 2): F(1)}
    )
    rep = check_structure(bad, 3, 5)
    assert not rep.a1
    assert rep.a3 is None and rep.a4 is None and rep.a5 is None


def test_check_structure_partial_failures():
    # valid partition but wrong t
    rep = check_structure(complete_balanced(5), 5, 12)
    assert rep.a1 and not rep.a2
    # unequal weights inside a part
    g = WeightedGraph.build([F(1, 2), F(1, 4), F(1, 4)], {(0, 1): F(1, 2), (0, 2): F(1, 2), (1, 2): F(1, 2)})
    rep = check_structure(g, 3, 5)
    assert rep.a1 and not rep.a2
    # A4 violated: bigger part has bigger weight
    g = WeightedGraph.build(
        [F(2, 9)] * 3 + [F(1, 6), F(1, 6)],
        {
            (0, 1): F(1, 2), (0, 2): F(1, 2), (1, 2): F(1, 2), (3, 4): F(1, 2),
            (0, 3): F(1), (0, 4): F(1), (1, 3): F(1), (1, 4): F(1), (2, 3): F(1), (2, 4): F(1),
        },
    )
    rep = check_structure(g, 4, 8)
    assert rep.a2 and rep.a3 and not rep.a4


def test_two_part_basis_examples():
    p, q = F(1, 3), F(2, 3)
    assert two_part_basis(2, 1, p, 1, q, 1) == p * q
    assert two_part_basis(2, 0, F(1, 4), 2, F(1, 4), 2) == F(3, 8)
    # r = 0 collapses the factorial ratio
    P, Q, p, q = 3, 2, F(1, 6), F(1, 4)
    from math import comb

    expected = sum(
        comb(P, x) * p**x * comb(Q, 2 - x) * q ** (2 - x) for x in range(0, 3)
    )
    assert two_part_basis(2, 0, p, P, q, Q) == expected
    with pytest.raises(ValueError):
        two_part_basis(2, 2, p, P, q, Q)


def test_basis_coefficients_examples():
    assert basis_coefficients(2) == [F(1), F(1)]
    assert basis_coefficients(3) == [F(3, 4), F(9, 8)]
    for m in range(1, 26):
        assert all(c > 0 for c in basis_coefficients(m))


def test_decomposition_examples():
    assert verify_two_part_decomposition(5, F(1, 6), 3, F(1, 4), 2)
    assert verify_two_part_decomposition(10, F(1, 10), 5, F(1, 10), 5)
    with pytest.raises(ValueError):
        verify_two_part_decomposition(3, F(1, 2), 3, F(1, 4), 2)


def test_decomposition_random(rng):
    for _ in range(40):
        m = rng.randint(1, 12)
        P, Q = rng.randint(1, 6), rng.randint(1, 6)
        d = rng.randint(P + 1, 60)
        p = F(rng.randint(1, d - 1), d * P)
        q = (1 - P * p) / Q
        assert verify_two_part_decomposition(m, p, P, q, Q)


def test_maclaurin_examples():
    assert maclaurin_gap([1, 1, 1], 2) == 0
    assert maclaurin_gap([1, 2, 3], 2) == 1
    assert maclaurin_gap([F(1, 2), F(1, 2), F(1)], 3) == F(5, 108)
    with pytest.raises(ValueError):
        maclaurin_gap([1, 2], 3)
    with pytest.raises(ValueError):
        maclaurin_gap([1, -1], 1)


def test_maclaurin_nonnegative_zero_iff_constant(rng):
    for _ in range(40):
        n = rng.randint(1, 7)
        xs = [F(rng.randint(1, 12), rng.randint(1, 12)) for _ in range(n)]
        k = rng.randint(1, n)
        gap = maclaurin_gap(xs, k)
        assert gap >= 0
        if len(set(xs)) == 1 or k == 1:
            assert gap == 0
        elif len(set(xs)) > 1 and k > 1:
            assert gap > 0


def test_lemma_suite_examples():
    rep = lemma_inequality_suite(3, 1, F(1, 5), F(2, 5), 4)
    assert rep.hypothesis == "unbalanced-light"
    assert rep.transformation == "part-rebalance"
    assert [c.m for c in rep.comparisons] == [2, 3, 4]
    assert rep.all_strict

    rep = lemma_inequality_suite(2, 2, F(1, 6), F(1, 3), 4)
    assert rep.hypothesis == "balanced-unequal"
    assert rep.transformation == "weight-average"
    assert rep.all_strict

    rep = lemma_inequality_suite(2, 2, F(1, 4), F(1, 4), 4)
    assert rep.hypothesis is None and not rep.applicable


def test_lemma_suite_edge_flip_case():
    # P=3, Q=1, heavy large class: (P-1)p > Qq
    p = F(3, 10)
    q = 1 - 3 * p  # 1/10
    rep = lemma_inequality_suite(3, 1, p, q, 4)
    assert rep.hypothesis == "unbalanced-heavy"
    assert rep.transformation == "edge-flip"
    assert rep.all_strict


def test_lemma_suite_near_balanced_heavy_corner():
    # P = Q+1 with p > q: the edge flip would tie at m = P+Q, so the suite
    # must switch to cross-part averaging and still be strict everywhere
    p = F(2, 5)
    q = 1 - 2 * p  # P=2, Q=1
    rep = lemma_inequality_suite(2, 1, p, q, 3)
    assert rep.hypothesis == "unbalanced-heavy"
    assert rep.transformation == "weight-average"
    assert rep.all_strict


def test_two_part_graph_matches_density():
    g = two_part_graph(F(1, 6), 3, F(1, 4), 2)
    assert ks_density(g, 2) == 2 * (
        3 * F(1, 6) ** 2 * F(1, 2)
        + F(1, 4) ** 2 * F(1, 2)
        + 6 * F(1, 6) * F(1, 4)
    )
