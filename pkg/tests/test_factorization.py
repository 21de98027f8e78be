from __future__ import annotations

import pytest

from zsflow.errors import NotRegularError
from zsflow.factorization import (
    RegularComponentFactor,
    _edge_and_cycle_cover,
    _partition_search,
    euler_orientation,
    regular_component_factor,
    two_factorization,
)
from zsflow.graphs import (
    MultiGraph,
    build,
    complete,
    components,
    cubic_no_pm,
    cycle,
    double_edges,
    petersen,
    random_regular,
    regular_degree,
)


def check_balance(g: MultiGraph, directed):
    outd = [0] * g.n
    ind = [0] * g.n
    for tail, head in directed:
        outd[tail] += 1
        ind[head] += 1
    for v in range(g.n):
        assert outd[v] == ind[v] == g.degree(v) // 2


def check_two_factorization(g: MultiGraph, factors):
    assert sum(len(f.edge_ids) for f in factors) == g.m
    union = set()
    for f in factors:
        assert f.degrees() == tuple([2] * g.n)
        assert union.isdisjoint(f.edge_ids)
        union |= f.edge_ids
    assert union == set(range(g.m))


def check_regular_component_factor(rcf: RegularComponentFactor, k: int):
    g = rcf.host
    deg = [0] * g.n
    for e in rcf.edge_ids:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    allowed = {k - 1, k} if k >= 2 else {0, 1}
    assert set(deg) <= allowed
    covered = set()
    for comp in rcf.components:
        degrees_in_comp = {deg[v] for v in comp.vertices}
        assert degrees_in_comp == {comp.degree}
        covered.update(comp.vertices)
    assert covered == set(range(g.n))


class TestEulerOrientation:
    def test_c4_directed_cycle(self):
        g = cycle(4)
        directed = euler_orientation(g)
        check_balance(g, directed)
        heads = {t: h for t, h in directed}
        assert len(heads) == 4  # every vertex is a tail exactly once

    def test_parallel_pair_one_each_way(self):
        g = build(2, [(0, 1), (0, 1)])
        directed = euler_orientation(g)
        assert sorted(directed) == [(0, 1), (1, 0)]

    def test_k5_balanced(self):
        g = complete(5)
        check_balance(g, euler_orientation(g))

    def test_odd_degree_rejected_with_witness(self):
        with pytest.raises(ValueError, match="vertex 0"):
            euler_orientation(complete(4))

    def test_disconnected(self):
        g = build(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        check_balance(g, euler_orientation(g))

    def test_deterministic(self):
        g = double_edges(petersen())
        assert euler_orientation(g) == euler_orientation(g)


class TestTwoFactorization:
    def test_k5(self):
        g = complete(5)
        factors = two_factorization(g)
        assert len(factors) == 2
        check_two_factorization(g, factors)

    def test_doubled_triangle(self):
        g = double_edges(cycle(3))
        factors = two_factorization(g)
        assert len(factors) == 2
        for f in factors:
            assert len(f.edge_ids) == 3
        check_two_factorization(g, factors)

    def test_c6_single_factor(self):
        g = cycle(6)
        factors = two_factorization(g)
        assert len(factors) == 1
        assert factors[0].edge_ids == frozenset(range(6))

    def test_not_even_regular_rejected(self):
        with pytest.raises(NotRegularError):
            two_factorization(petersen())
        with pytest.raises(NotRegularError):
            two_factorization(build(3, [(0, 1), (1, 2)]))

    def test_factors_are_disjoint_cycle_covers(self):
        g = random_regular(12, 6, seed=2)
        for f in two_factorization(g):
            sub_edges = sorted(f.edge_ids)
            adj = {v: [] for v in range(g.n)}
            for e in sub_edges:
                u, v = g.edges[e]
                adj[u].append(v)
                adj[v].append(u)
            assert all(len(nei) == 2 for nei in adj.values())

    def test_doubled_odd_regular_sweep(self):
        for n, r, seed in [(10, 3, 0), (12, 5, 1), (20, 7, 2), (30, 11, 3)]:
            g = double_edges(random_regular(n, r, seed))
            factors = two_factorization(g)
            assert len(factors) == r
            check_two_factorization(g, factors)

    def test_even_regular_sweep(self):
        for n, r, seed in [(8, 4, 0), (15, 4, 5), (14, 6, 6), (20, 8, 7)]:
            g = random_regular(n, r, seed)
            factors = two_factorization(g)
            assert len(factors) == r // 2
            check_two_factorization(g, factors)

    def test_deterministic(self):
        g = random_regular(14, 4, seed=9)
        a = [sorted(f.edge_ids) for f in two_factorization(g)]
        b = [sorted(f.edge_ids) for f in two_factorization(g)]
        assert a == b


class TestRegularComponentFactor:
    def test_k4(self):
        rcf = regular_component_factor(complete(4), 2)
        check_regular_component_factor(rcf, 2)

    def test_petersen(self):
        rcf = regular_component_factor(petersen(), 2)
        check_regular_component_factor(rcf, 2)

    def test_k8(self):
        rcf = regular_component_factor(complete(8), 4)
        check_regular_component_factor(rcf, 4)
        assert {c.degree for c in rcf.components} <= {3, 4}

    def test_cubic_no_pm_needs_mixed_components(self):
        g = cubic_no_pm()
        rcf = regular_component_factor(g, 2)
        check_regular_component_factor(rcf, 2)
        # no perfect matching means no 2-factor either in a cubic graph,
        # so both degrees must occur
        assert {c.degree for c in rcf.components} == {1, 2}

    def test_cubic_no_pm_k1(self):
        rcf = regular_component_factor(cubic_no_pm(), 1)
        check_regular_component_factor(rcf, 1)

    def test_k10_and_k12(self):
        for n, k in [(10, 6), (12, 7)]:
            rcf = regular_component_factor(complete(n), k)
            check_regular_component_factor(rcf, k)

    def test_random_sweep(self):
        for r, k, n, seed in [(7, 4, 16, 0), (9, 6, 20, 1), (11, 7, 18, 2)]:
            g = random_regular(n, r, seed)
            rcf = regular_component_factor(g, k)
            check_regular_component_factor(rcf, k)

    def test_disconnected_host(self):
        tri = complete(4).edges
        g = build(8, list(tri) + [(u + 4, v + 4) for u, v in tri])
        rcf = regular_component_factor(g, 2)
        check_regular_component_factor(rcf, 2)

    def test_rejections(self):
        with pytest.raises(NotRegularError):
            regular_component_factor(build(3, [(0, 1), (1, 2)]), 1)
        with pytest.raises(ValueError, match="odd"):
            regular_component_factor(complete(5), 2)  # r=4 even
        with pytest.raises(ValueError, match="2r/3"):
            regular_component_factor(complete(8), 5)  # k=5 > 14/3

    def test_edge_and_cycle_cover_structure(self):
        g = cubic_no_pm()
        chosen = _edge_and_cycle_cover(g)
        deg = [0] * g.n
        for e in chosen:
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        assert set(deg) <= {1, 2}

    def test_partition_search_finds_forced_mix(self):
        # cubic_no_pm with k=2 has neither a 1-factor nor a 2-factor, so the
        # split enumeration must produce a genuinely mixed factor
        g = cubic_no_pm()
        split = _partition_search(g, 2, 4000)
        assert split is not None
        deg = [0] * g.n
        for e in split:
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        assert set(deg) == {1, 2}
