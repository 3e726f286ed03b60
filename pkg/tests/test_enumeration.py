import pytest

from golden_spectra.algebra import (
    NEG_ONE_MINUS_TAU,
    NEG_TAU,
    lambda_min_approx,
    lambda_min_equals,
    parse_threshold,
)
from golden_spectra.enumeration import (
    ClassificationError,
    brute_force_signed_keys,
    derive_two_slim,
    enumerate_signed,
    exceptional_members,
    is_q_graph,
    lambda_min_table_check,
    realize_hoffman,
    verify_extension_step,
    verify_three_vertex_diagonal_lemma,
)
from golden_spectra.iso import canonical_key, is_isomorphic
from golden_spectra.model import catalog, make_q, signed, to_text
from golden_spectra.spectral import b_matrix

T1 = catalog("T1")


class TestEnumerateSigned:
    def test_two_vertices(self):
        census = enumerate_signed(2, NEG_TAU, (T1,))
        keys = {m.key for m in census.members(1)} | {m.key for m in census.members(2)}
        assert keys == {canonical_key(catalog(n)) for n in ("S11", "S21", "S22")}

    def test_three_vertices(self, census7):
        members = census7.members(3)
        assert len(members) == 4
        exceptional = [m for m in members if is_q_graph(m.graph) is None]
        assert len(exceptional) == 1
        # the unique 3-vertex exceptional graph is the all-minus path
        assert is_isomorphic(exceptional[0].graph,
                             signed(3, [], [(0, 1), (1, 2)]))

    def test_level_counts(self, census7):
        assert {n: len(census7.members(n)) for n in range(1, 8)} == {
            1: 1, 2: 2, 3: 4, 4: 12, 5: 13, 6: 13, 7: 10}
        # every member at the top level is a Q graph
        assert all(is_q_graph(m.graph) is not None for m in census7.members(7))

    def test_members_satisfy_predicate(self, census7):
        from golden_spectra.iso import contains_induced
        from golden_spectra.model import is_connected_signed
        from golden_spectra.spectral import signed_adjacency
        from golden_spectra.algebra import lambda_min_at_least
        for n in (4, 6):
            for m in census7.members(n):
                assert is_connected_signed(m.graph)
                assert contains_induced(m.graph, T1) is None
                assert lambda_min_at_least(signed_adjacency(m.graph).entries, NEG_TAU)

    def test_pruning_soundness(self):
        # deferring the eigenvalue filter to the end changes nothing
        pruned = enumerate_signed(5, NEG_TAU, (T1,))
        deferred = enumerate_signed(5, NEG_TAU, (T1,), lambda_prune=False)
        for n in range(1, 6):
            assert [m.key for m in pruned.members(n)] == \
                   [m.key for m in deferred.members(n)]

    def test_jobs_deterministic(self):
        serial = enumerate_signed(4, NEG_TAU, (T1,), jobs=1)
        parallel = enumerate_signed(4, NEG_TAU, (T1,), jobs=2)
        for n in range(1, 5):
            assert [m.key for m in serial.members(n)] == \
                   [m.key for m in parallel.members(n)]

    def test_other_threshold(self):
        census = enumerate_signed(3, parse_threshold("-1"), ())
        # only graphs whose signed adjacency stays at or above -1
        for n in range(1, 4):
            for m in census.members(n):
                assert m.lam.approx >= -1 - 1e-9

    def test_max_n_guard(self):
        with pytest.raises(ValueError):
            enumerate_signed(13)

    def test_screening_accelerator_consistency(self):
        # the small-subgraph verdict tables are a pure accelerator: with
        # them active the census must be identical to the unpruned route
        from golden_spectra.enumeration import _tau_tables
        _tau_tables()
        fast = enumerate_signed(5, NEG_TAU, (T1,))
        slow = enumerate_signed(5, NEG_TAU, (T1,), lambda_prune=False)
        for n in range(1, 6):
            assert [m.key for m in fast.members(n)] == \
                   [m.key for m in slow.members(n)]

    def test_disconnected_mode(self):
        census = enumerate_signed(4, NEG_TAU, (T1,), connected=False)
        oracle = brute_force_signed_keys(4, NEG_TAU, (T1,), connected=False)
        for n in range(1, 5):
            assert tuple(m.key for m in census.members(n)) == oracle[n]
        # strictly more classes than the connected census at n >= 2
        connected = enumerate_signed(4, NEG_TAU, (T1,), connected=True)
        assert len(census.members(4)) > len(connected.members(4))


class TestBruteForce:
    def test_matches_enumeration_n4(self, census7):
        oracle = brute_force_signed_keys(4, NEG_TAU, (T1,))
        for n in range(1, 5):
            assert tuple(m.key for m in census7.members(n)) == oracle[n]

    def test_guard(self):
        with pytest.raises(ValueError):
            brute_force_signed_keys(6)


class TestQRecognition:
    def test_examples(self):
        assert is_q_graph(signed(2, [], [(0, 1)])) == (0, 1, 1)
        assert is_q_graph(make_q(0, 0, 4)) == (0, 0, 4)
        assert is_q_graph(catalog("T1")) is None


class TestExtensionStep:
    def test_examples(self):
        assert verify_extension_step(0, 0, 4)
        assert verify_extension_step(1, 1, 2)
        assert verify_extension_step(0, 0, 0)

    def test_eleven_vertex_base(self):
        assert verify_extension_step(3, 2, 6)

    def test_guards(self):
        with pytest.raises(ValueError):
            verify_extension_step(2, 2, 3)
        with pytest.raises(ValueError):
            verify_extension_step(0, 0, 12)


class TestTwoSlim:
    def test_six_graphs(self):
        six = derive_two_slim()
        assert len(six) == 6
        keys = {canonical_key(g) for g in six}
        expected = {canonical_key(catalog(n)) for n in
                    ("H_I", "H_II", "H_III", "H_IV", "H_XVI", "H_XVII")}
        assert keys == expected

    def test_eigenvalue_multiset(self):
        at_threshold = 0
        at_minus_two = 0
        at_minus_one = 0
        for g in derive_two_slim():
            b = b_matrix(g).entries
            if lambda_min_equals(b, NEG_ONE_MINUS_TAU):
                at_threshold += 1
            elif lambda_min_equals(b, parse_threshold("-2")):
                at_minus_two += 1
            elif lambda_min_equals(b, parse_threshold("-1")):
                at_minus_one += 1
        assert (at_minus_one, at_minus_two, at_threshold) == (1, 3, 2)


class TestRealize:
    def test_all_minus_path(self):
        reals = realize_hoffman(signed(3, [], [(0, 1), (1, 2)]))
        assert len(reals) == 1
        g = reals[0]
        assert (g.slim_count, g.fat_count) == (3, 1)

    def test_plus_triangle_singletons(self):
        reals = realize_hoffman(make_q(0, 0, 3))
        # singleton classes give the triangle with private fats
        shapes = {(g.slim_count, g.fat_count) for g in reals}
        assert (3, 3) in shapes

    def test_round_trip_and_fat_degree(self, classification):
        from golden_spectra.spectral import special_graph
        from golden_spectra.model import fat_neighbors
        for name, member in classification.exceptional[:6]:
            for g in realize_hoffman(member.graph):
                assert is_isomorphic(special_graph(g), member.graph)
                assert all(len(fat_neighbors(g, v)) == 1
                           for v in g.slim_vertices())

    def test_unrealizable_extras(self):
        c4 = signed(4, [(0, 3)], [(0, 1), (1, 2), (2, 3)])
        c5 = signed(5, [(0, 4)], [(0, 1), (1, 2), (2, 3), (3, 4)])
        assert realize_hoffman(c4) == ()
        assert realize_hoffman(c5) == ()

    def test_guards(self):
        with pytest.raises(ValueError):
            realize_hoffman(signed(2, [(0, 1)]))
        with pytest.raises(ValueError):
            realize_hoffman(signed(3, [(0, 1)]))


class TestClassification:
    def test_census15_names(self, classification):
        names = [name for name, _ in classification.exceptional]
        assert names == ["S3.1", "S4.1", "S4.2", "S4.3", "S4.4", "S4.5",
                         "S5.1", "S5.2", "S5.3", "S5.4", "S5.5", "S5.6",
                         "S6.1", "S6.2", "S6.3"]

    def test_lambda_table(self, classification):
        counts = lambda_min_table_check([m for _, m in classification.exceptional])
        assert counts == {"sqrt2": 2, "sqrt17": 3, "cubic": 1, "tau": 9}

    def test_unrealizable_reported(self, classification):
        texts = sorted(to_text(m.graph) for m in classification.unrealizable)
        assert texts == ["sg 4 +0-3 -0-1,1-2,2-3",
                         "sg 5 +0-4 -0-1,1-2,2-3,3-4"]

    def test_derived_census_size(self, classification):
        # derived truth: two more members than the expected source count
        assert len(classification.irreducible.members) == 39
        assert len(classification.reducible) == 0
        assert any("39" in d for d in classification.discrepancies)

    def test_members_sane(self, classification):
        from golden_spectra.model import is_fat
        seen = set()
        for m in classification.irreducible.members:
            assert is_fat(m.graph)
            assert m.key not in seen
            seen.add(m.key)
            assert m.lam.approx >= float(-1 - (1 + 5 ** 0.5) / 2) - 1e-9

    def test_fat_degree_bound(self, classification):
        # at the threshold no slim vertex carries three fat neighbors; the
        # one-slim triple star itself drops below
        from golden_spectra.model import fat_neighbors
        from golden_spectra.algebra import lambda_min_at_least
        from golden_spectra.spectral import b_matrix
        for m in classification.irreducible.members:
            g = m.graph
            assert all(len(fat_neighbors(g, v)) <= 2 for v in g.slim_vertices())
        assert not lambda_min_at_least(
            b_matrix(catalog("K1T(3)")).entries, NEG_ONE_MINUS_TAU)

    def test_small_members_named(self, classification):
        names = [m.name for m in classification.irreducible.members[:5]]
        assert names == ["H_I", "H_II", "H_III", "H_XVI", "H_XVII"]

    def test_maximal_members(self, classification, maximal):
        keys = {m.key for m in maximal.members}
        assert len(maximal.members) == 20
        assert canonical_key(catalog("H_XVI")) in keys
        assert canonical_key(catalog("H_XVII")) in keys
        six = [m for m in classification.irreducible.members
               if m.graph.slim_count == 6]
        assert len(six) == 13
        assert all(m.key in keys for m in six)
        # every non-maximal member embeds into some maximal one
        from golden_spectra.iso import contains_induced
        for m in classification.irreducible.members:
            if m.key in keys:
                continue
            assert any(contains_induced(mm.graph, m.graph) is not None
                       for mm in maximal.members)


def test_three_vertex_diagonal_sweep():
    assert verify_three_vertex_diagonal_lemma()


def test_single_case_of_the_sweep():
    from golden_spectra.algebra import char_poly, count_roots_below
    from golden_spectra.spectral import signed_adjacency
    m = [list(r) for r in signed_adjacency(catalog("T2")).entries]
    for i, d in enumerate((2, 1, 1)):
        m[i][i] -= d
    assert count_roots_below(char_poly(m), NEG_ONE_MINUS_TAU) >= 1
