import itertools
import random

import pytest

from fanramsey import (
    BLUE,
    RED,
    Graph,
    Matching,
    TwoColoring,
    brute_matching,
    build_complete_multipartite,
    MultipartiteSpec,
    edmonds_gallai,
    eg_neighborhood_structure,
    enumerate_maximum_matchings,
    konig_cover,
    matching_number,
    max_matching,
    star_fan_lower,
)


def random_graph(rng, n, p=0.5):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p])


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def check_eg(g):
    """Assert the decomposition against every maximum matching of g.

    D must be exactly the components of the inessential vertices (those
    missed by some maximum matching), A their outside neighborhood, and
    every maximum matching must be perfect on C, near-perfect in each D_i,
    and match A into distinct D_i.
    """
    part = edmonds_gallai(g)
    matchings = enumerate_maximum_matchings(g)
    nu = max_matching(g).size
    assert all(m.size == nu for m in matchings)

    covered_everywhere = set(range(g.n))
    for m in matchings:
        covered_everywhere &= m.vertices()
    inessential = set(range(g.n)) - covered_everywhere
    d_vertices = set().union(*part.D) if part.D else set()
    assert d_vertices == inessential
    expect_a = set()
    for v in inessential:
        expect_a.update(set(g.neighbors(v)) - inessential)
    assert set(part.A) == expect_a
    assert set(part.C) == set(range(g.n)) - d_vertices - expect_a

    assert part.p == len(part.D)
    assert part.deficiency == g.n - 2 * nu
    assert part.p == len(part.A) + part.deficiency
    assert part.nu == nu
    assert 2 * nu == 2 * len(part.A) + len(part.C) + sum(len(d) - 1 for d in part.D)
    assert all(len(d) % 2 == 1 for d in part.D)

    index_of = {}
    for i, d in enumerate(part.D):
        for v in d:
            index_of[v] = i
    for m in matchings:
        c_covered = set()
        hit_components = []
        inside = [0] * part.p
        for u, v in m.edges:
            if u in part.C and v in part.C:
                c_covered.update((u, v))
            elif (u in part.A) != (v in part.A):
                w = v if u in part.A else u
                assert w in d_vertices
                hit_components.append(index_of[w])
            else:
                assert u in d_vertices and v in d_vertices
                assert index_of[u] == index_of[v]
                inside[index_of[u]] += 2
        assert c_covered == set(part.C)
        assert len(hit_components) == len(set(hit_components)) == len(part.A)
        for i, d in enumerate(part.D):
            assert inside[i] == len(d) - 1

    # factor-critical odd components
    for d in part.D:
        members = sorted(d)
        for leave in members:
            keep = [v for v in members if v != leave]
            sub_edges = [(keep.index(u), keep.index(v)) for u, v in g.edges()
                         if u in keep and v in keep]
            sub = Graph(len(keep), sub_edges)
            assert max_matching(sub).size * 2 == len(keep)


class TestMatchingObject:
    def test_validate_rejects_shared_vertex(self):
        g = Graph(4, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            Matching([(0, 1), (1, 2)]).validate(g)

    def test_validate_rejects_non_edge(self):
        g = Graph(4, [(0, 1)])
        with pytest.raises(ValueError):
            Matching([(2, 3)]).validate(g)

    def test_size_and_vertices(self):
        m = Matching([(3, 1), (0, 2)])
        assert m.size == 2
        assert m.vertices() == frozenset({0, 1, 2, 3})


class TestMaxMatching:
    def test_exhaustive_small(self):
        for n in range(7):
            for g in all_graphs(n):
                assert max_matching(g).size == brute_matching(g).size

    def test_random_vs_brute(self):
        rng = random.Random(101)
        for _ in range(5000):
            n = rng.randint(1, 14)
            g = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5, 0.8]))
            m = max_matching(g)
            m.validate(g)
            assert m.size == brute_matching(g).size

    def test_petersen(self):
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, 5 + i) for i in range(5)]
        petersen = Graph(10, outer + inner + spokes)
        assert matching_number(petersen) == 5

    def test_odd_cycles_need_blossoms(self):
        for n in (3, 5, 7, 9, 11):
            cycle = Graph(n, [(i, (i + 1) % n) for i in range(n)])
            assert matching_number(cycle) == n // 2

    def test_against_networkx(self):
        nx = pytest.importorskip("networkx")
        rng = random.Random(7)
        for _ in range(300):
            g = random_graph(rng, rng.randint(2, 16))
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges())
            expect = len(nx.max_weight_matching(h, maxcardinality=True))
            assert matching_number(g) == expect


class TestEnumerate:
    def test_triangle(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        found = {m.edges for m in enumerate_maximum_matchings(g)}
        assert found == {((0, 1),), ((1, 2),), ((0, 2),)}

    def test_counts_against_filter(self):
        rng = random.Random(13)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 8))
            nu = matching_number(g)
            listed = enumerate_maximum_matchings(g)
            assert len({m.edges for m in listed}) == len(listed)
            total = sum(1 for m in listed)
            expect = _count_max_matchings(g, nu)
            assert total == expect


def _count_max_matchings(g, nu):
    edges = g.edges()
    count = 0
    for subset in itertools.combinations(edges, nu):
        seen = set()
        ok = True
        for u, v in subset:
            if u in seen or v in seen:
                ok = False
                break
            seen.update((u, v))
        if ok:
            count += 1
    return count


class TestEdmondsGallai:
    def test_path_three(self):
        part = edmonds_gallai(Graph(3, [(0, 1), (1, 2)]))
        assert set().union(*part.D) == {0, 2}
        assert part.A == frozenset({1})
        assert part.C == frozenset()
        assert part.p == 2 and part.deficiency == 1 and part.nu == 1

    def test_triangle(self):
        part = edmonds_gallai(Graph(3, [(0, 1), (1, 2), (0, 2)]))
        assert part.D == (frozenset({0, 1, 2}),)
        assert part.A == frozenset() and part.C == frozenset()
        assert part.p == 1 and part.deficiency == 1

    def test_complete_four(self):
        g = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        part = edmonds_gallai(g)
        assert part.D == () and part.A == frozenset()
        assert part.C == frozenset(range(4))
        assert part.p == 0 and part.deficiency == 0 and part.nu == 2

    def test_exhaustive_small(self):
        for n in range(6):
            for g in all_graphs(n):
                check_eg(g)

    def test_random_medium(self):
        rng = random.Random(997)
        for _ in range(150):
            n = rng.randint(7, 12)
            check_eg(random_graph(rng, n, rng.choice([0.15, 0.25, 0.4])))

    def test_json_dict(self):
        part = edmonds_gallai(Graph(3, [(0, 1), (1, 2)]))
        data = part.to_json_dict()
        assert data["A"] == [1] and data["p"] == 2


class TestKonigCover:
    def test_cover_size_equals_nu(self):
        rng = random.Random(19)
        for _ in range(300):
            a = rng.randint(1, 6)
            b = rng.randint(1, 6)
            edges = [(u, a + w) for u in range(a) for w in range(b)
                     if rng.random() < 0.5]
            g = Graph(a + b, edges)
            m = max_matching(g)
            cover = konig_cover(g, (range(a), range(a, a + b)), m)
            assert cover.size == m.size
            chosen = set(cover.vertices)
            for u, v in g.edges():
                assert u in chosen or v in chosen

    def test_rejects_non_bipartite_edge(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(ValueError):
            konig_cover(g, ([0, 1], [2]), max_matching(g))

    def test_rejects_non_maximum(self):
        g = Graph(4, [(0, 2), (1, 3)])
        with pytest.raises(ValueError):
            konig_cover(g, ([0, 1], [2, 3]), Matching([(0, 2)]))


class TestEgNeighborhood:
    def test_construction_facts(self):
        k, params = star_fan_lower(10, 5)
        for v in (0, params.a, 2 * params.a):
            report = eg_neighborhood_structure(k, v, RED, 5)
            assert report.applicable
            assert report.nu <= 4
            assert report.window_ok
            assert report.identity_ok
            assert report.component_bound_ok
            assert report.cross_color_ok
            data = report.to_json_dict()
            assert data["partition"]["p"] == report.partition.p

    def test_inapplicable_when_matching_large(self):
        blue_hosts_perfect = TwoColoring(4, Graph(4, []))
        report = eg_neighborhood_structure(blue_hosts_perfect, 0, BLUE, 1)
        assert not report.applicable
        assert report.partition is None
        assert report.nu >= 1

    def test_window_flag_only_informational(self):
        k = TwoColoring(4, Graph(4, [(0, 1), (0, 2), (0, 3)]))
        report = eg_neighborhood_structure(k, 0, RED, 5)
        assert not report.window_ok
        assert report.applicable

    def test_rejects_bad_n(self):
        k = TwoColoring(3, Graph(3, []))
        with pytest.raises(ValueError):
            eg_neighborhood_structure(k, 0, RED, 0)

    def test_identity_matches_partition(self):
        rng = random.Random(41)
        for _ in range(150):
            size = rng.randint(4, 12)
            k = TwoColoring(size, random_graph(rng, size))
            v = rng.randrange(size)
            n = rng.randint(1, 4)
            report = eg_neighborhood_structure(k, v, RED, n)
            if not report.applicable:
                assert report.nu > n - 1
                continue
            part = report.partition
            assert set().union(part.A, part.C, *part.D) == set(report.neighborhood)
            assert report.identity_ok


def test_multipartite_nu_matches_blossom():
    for sizes in ([2, 2, 2], [1, 1, 4], [2, 3], [1, 2, 2], [3, 3], [1, 1, 1, 1]):
        spec = MultipartiteSpec(sizes)
        g = build_complete_multipartite(spec)
        total = spec.total
        assert matching_number(g) == min(total // 2, total - spec.part_sizes[-1])
