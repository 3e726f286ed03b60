import pytest

from golden_spectra.algebra import NEG_ONE_MINUS_TAU, lambda_min_approx
from golden_spectra.decomp import (
    Decomposition,
    DecompositionError,
    HLineWitness,
    find_hline_witness,
    find_reducibility_witness,
    lambda_min_of_sum_check,
    reduce_by_degree,
    reduce_q_realization,
    set_partitions,
    split_by_special_components,
    validate_decomposition,
    verify_hline_witness,
)
from golden_spectra.iso import canonical_key, is_isomorphic
from golden_spectra.model import catalog, hoffman, recognize_q
from golden_spectra.spectral import b_matrix, special_graph

K3_SHARED = hoffman(3, 1, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
# the shared-fat double cover of the two-slim edge: splits into two double stars
H_PRIME = hoffman(2, 3, [(0, 1), (0, 2), (1, 3), (0, 4), (1, 4)])


class TestValidateDecomposition:
    def test_k3_as_three_stars(self):
        d = Decomposition(K3_SHARED,
                          (frozenset({0, 3}), frozenset({1, 3}), frozenset({2, 3})))
        assert validate_decomposition(d) is None
        assert lambda_min_of_sum_check(d)
        assert abs(lambda_min_approx(b_matrix(K3_SHARED).entries) + 1) < 1e-9

    def test_hprime_two_double_stars(self):
        d = Decomposition(H_PRIME, (frozenset({0, 2, 4}), frozenset({1, 3, 4})))
        assert validate_decomposition(d) is None
        for pg in d.part_graphs():
            assert is_isomorphic(pg, catalog("H_II"))
        assert lambda_min_of_sum_check(d)

    def test_fat_closure_violation(self):
        d = Decomposition(H_PRIME, (frozenset({0, 3, 4}), frozenset({1, 2, 4})))
        msg = validate_decomposition(d)
        assert msg is not None and "fat vertex" in msg

    def test_cover_and_disjoint(self):
        d = Decomposition(H_PRIME, (frozenset({0, 2, 4}),))
        assert "not covered" in validate_decomposition(d)
        d = Decomposition(H_PRIME,
                          (frozenset({0, 1, 2, 4}), frozenset({1, 3, 4})))
        assert "slim vertex 1" in validate_decomposition(d)

    def test_single_part_trivial(self):
        g = catalog("H_XVI")
        d = Decomposition(g, (frozenset(range(g.vertex_count)),))
        assert validate_decomposition(d) is None
        assert lambda_min_of_sum_check(d)


class TestSplit:
    def test_indecomposable(self):
        assert split_by_special_components(catalog("H_IV")) is None

    def test_disjoint_union(self):
        two = hoffman(2, 2, [(0, 2), (1, 3)])
        d = split_by_special_components(two)
        assert d is not None and len(d.parts) == 2

    def test_hprime(self):
        d = split_by_special_components(H_PRIME)
        assert d is not None and len(d.parts) == 2
        assert lambda_min_of_sum_check(d)

    def test_iff_over_catalog(self):
        # special graph connected exactly when no split exists
        from golden_spectra.model import is_connected_signed
        for name in ("H_I", "H_II", "H_III", "H_IV", "H_XVI", "H_XVII"):
            g = catalog(name)
            connected = is_connected_signed(special_graph(g))
            assert (split_by_special_components(g) is None) == connected

    def test_iff_over_random(self):
        # the split/connectivity dichotomy lives in the world where slim
        # pairs share at most one fat vertex (between pairs sharing two or
        # more, decompositions cannot separate them at all, and such
        # graphs drop to -3 or below anyway)
        import random
        from itertools import combinations
        from conftest import random_hoffman
        from golden_spectra.model import fat_neighbors, is_connected_signed
        rng = random.Random(59)
        split_count = 0
        checked = 0
        while checked < 300:
            g = random_hoffman(rng, 8)
            if g.slim_count == 0:
                continue
            if any(len(fat_neighbors(g, a) & fat_neighbors(g, b)) > 1
                   for a, b in combinations(g.slim_vertices(), 2)):
                continue
            checked += 1
            d = split_by_special_components(g)
            connected = is_connected_signed(special_graph(g))
            assert (d is None) == connected
            if d is not None:
                split_count += 1
                if split_count <= 40:
                    assert lambda_min_of_sum_check(d)
        assert split_count > 30


class TestReduceByDegree:
    def test_p3(self):
        p3 = hoffman(3, 0, [(0, 1), (1, 2)])
        container, d = reduce_by_degree(p3)
        kinds = sorted(pg.fat_count for pg in d.part_graphs())
        assert kinds == [1, 1, 2]
        assert lambda_min_of_sum_check(d)
        # each part is a one-slim star whose bottom eigenvalue is minus its degree
        for pg in d.part_graphs():
            assert abs(lambda_min_approx(b_matrix(pg).entries) + pg.fat_count) < 1e-9

    def test_k2(self):
        container, d = reduce_by_degree(hoffman(2, 0, [(0, 1)]))
        assert len(d.parts) == 2 and container.fat_count == 1

    def test_c4(self):
        c4 = hoffman(4, 0, [(0, 1), (1, 2), (2, 3), (0, 3)])
        _, d = reduce_by_degree(c4)
        assert all(is_isomorphic(pg, catalog("K1T(2)")) for pg in d.part_graphs())

    def test_preconditions(self):
        with pytest.raises(DecompositionError):
            reduce_by_degree(catalog("H_I"))
        with pytest.raises(DecompositionError):
            reduce_by_degree(hoffman(1, 0))


class TestReduceQRealization:
    def _realization(self, edges, slim, fat):
        return hoffman(slim, fat, edges)

    def test_q102(self):
        g = hoffman(3, 3, [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)])
        shape = recognize_q(special_graph(g))
        vp = tuple(v for v, _ in shape.plus_pendants)
        vq = tuple(v for v, _ in shape.minus_pendants)
        container, d = reduce_q_realization(g, (vp, vq, shape.clique))
        names = sorted(canonical_key(pg).hex() for pg in d.part_graphs())
        assert names == sorted(canonical_key(catalog(n)).hex()
                               for n in ("H_XVI", "H_II"))
        assert lambda_min_of_sum_check(d)

    def test_q002(self):
        g = hoffman(2, 2, [(0, 1), (0, 2), (1, 3)])  # special graph: one (+)-edge
        shape = recognize_q(special_graph(g))
        if shape.r >= 2:
            _, d = reduce_q_realization(g, ((), (), shape.clique))
            assert all(is_isomorphic(pg, catalog("H_II")) for pg in d.part_graphs())

    def test_r1_single_part(self):
        g = catalog("H_I")
        shape = recognize_q(special_graph(g))
        container, d = reduce_q_realization(g, ((), (), shape.clique))
        assert len(d.parts) == 1
        assert is_isomorphic(d.part_graphs()[0], catalog("H_II"))

    def test_bad_partition(self):
        g = hoffman(3, 3, [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)])
        with pytest.raises(DecompositionError):
            reduce_q_realization(g, ((0,), (), (0, 1)))


class TestReducibilityWitness:
    def test_h_iv_reducible(self):
        container, d = find_reducibility_witness(catalog("H_IV"))
        assert validate_decomposition(d) is None
        assert len(d.parts) == 2
        assert is_isomorphic(d.part_graphs()[0], catalog("H_II"))

    def test_irreducible_anchors(self):
        for name in ("H_I", "H_II", "H_III", "H_XVI", "H_XVII"):
            assert find_reducibility_witness(catalog(name)) is None

    def test_q_shape_realization_reducible(self):
        g = hoffman(3, 3, [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)])
        assert find_reducibility_witness(g) is not None

    def test_never_misses_a_brute_force_witness(self):
        # wherever an unstructured container search (arbitrary added-fat
        # neighborhoods) certifies reducibility, the structured
        # bipartition-plus-biclique-cover search must as well
        import random
        from itertools import combinations, combinations_with_replacement
        from conftest import random_hoffman
        from golden_spectra.algebra import lambda_min_at_least
        from golden_spectra.model import fat_neighbors, validate_hoffman

        def brute(g, max_added=2):
            ns = g.slim_count
            subsets = [c for size in range(1, ns + 1)
                       for c in combinations(range(ns), size)]
            for k in range(max_added + 1):
                for chosen in combinations_with_replacement(subsets, k):
                    edges = list(g.edges)
                    base = g.vertex_count
                    for i, sub in enumerate(chosen):
                        edges += [(v, base + i) for v in sub]
                    container = hoffman(ns, g.fat_count + k, edges)
                    if validate_hoffman(container) is not None:
                        continue
                    cfat = {v: fat_neighbors(container, v) for v in range(ns)}
                    for size in range(0, ns - 1):
                        for extra in combinations(range(1, ns), size):
                            left = frozenset({0} | set(extra))
                            parts = []
                            for block in (left, frozenset(range(ns)) - left):
                                pf = set()
                                for v in block:
                                    pf |= cfat[v]
                                parts.append(frozenset(block) | pf)
                            d = Decomposition(container, tuple(parts))
                            if validate_decomposition(d) is not None:
                                continue
                            if all(lambda_min_at_least(b_matrix(pg).entries,
                                                       NEG_ONE_MINUS_TAU)
                                   for pg in d.part_graphs()):
                                return True
            return False

        rng = random.Random(90210)
        checked = 0
        while checked < 40:
            g = random_hoffman(rng, 6)
            if not 2 <= g.slim_count <= 3:
                continue
            checked += 1
            mine = find_reducibility_witness(g)
            if brute(g):
                assert mine is not None
            if mine is not None:
                container, d = mine
                assert validate_decomposition(d) is None
                assert all(lambda_min_at_least(b_matrix(pg).entries,
                                               NEG_ONE_MINUS_TAU)
                           for pg in d.part_graphs())


class TestHLineWitness:
    def test_verify_example(self):
        emb = (0, 1, 2, 3)
        d = Decomposition(H_PRIME, (frozenset({0, 2, 4}), frozenset({1, 3, 4})))
        key_ii = canonical_key(catalog("H_II"))
        w = HLineWitness(catalog("H_IV"), H_PRIME, emb, d,
                         (key_ii.hex(), key_ii.hex()))
        assert verify_hline_witness(w, {key_ii})
        assert not verify_hline_witness(w, {canonical_key(catalog("H_I"))})

    def test_trivial_self_witness(self):
        g = catalog("H_XVI")
        key = canonical_key(g)
        d = Decomposition(g, (frozenset(range(g.vertex_count)),))
        w = HLineWitness(g, g, tuple(range(g.vertex_count)), d, (key.hex(),))
        assert verify_hline_witness(w, {key})

    def test_find_h_iv_with_double_star_family(self):
        w = find_hline_witness(catalog("H_IV"), [catalog("H_II")])
        assert w is not None
        assert len(w.decomposition.parts) == 2
        assert w.container.fat_count == 3  # the added shared fat vertex

    def test_find_small_catalog_with_threshold_family(self):
        fam = [catalog("H_XVI"), catalog("H_XVII")]
        keys = {canonical_key(g) for g in fam}
        for name in ("H_I", "H_II", "H_III", "H_IV"):
            w = find_hline_witness(catalog(name), fam)
            assert w is not None, name
            assert verify_hline_witness(w, keys)

    def test_json_round_trip(self):
        w = find_hline_witness(catalog("H_IV"), [catalog("H_II")])
        back = HLineWitness.from_json(w.to_json())
        assert verify_hline_witness(back, {canonical_key(catalog("H_II"))})

    def test_q_route_with_fattening(self):
        # all slims with one fat, special graph a pure clique shape; the
        # family lacks the double star so bare parts must be fattened
        g = hoffman(3, 3, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
        shape = recognize_q(special_graph(g))
        assert shape is not None and (shape.p, shape.q, shape.r) == (0, 0, 3)
        fam = [catalog("H_XVI"), catalog("H_XVII")]
        w = find_hline_witness(g, fam)
        assert w is not None
        assert verify_hline_witness(w, {canonical_key(x) for x in fam})
        assert len(w.decomposition.parts) == 3

    def test_not_found_is_none(self):
        w = find_hline_witness(catalog("H_XVI"), [catalog("H_I")], fat_budget=1)
        assert w is None

    def test_precondition(self):
        with pytest.raises(DecompositionError):
            find_hline_witness(hoffman(1, 0), [catalog("H_I")])
        with pytest.raises(DecompositionError):
            find_hline_witness(catalog("K1T(3)"), [catalog("H_I")])


def test_set_partitions_count():
    # Bell numbers
    assert sum(1 for _ in set_partitions(4)) == 15
    assert sum(1 for _ in set_partitions(0)) == 1
