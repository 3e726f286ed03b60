"""Acceptance suite: one test per criterion, one printed verdict line each.

Criteria 1, 3 and 4 assert the expected source counts; the derivation in
this package finds a strictly larger census (two extra exceptional signed
graphs without realizations, and two extra irreducible realizations of one
six-vertex special graph), so those three tests fail by design and print
the derived numbers.  The analysis lives in the project notes; everything
the derived objects are supposed to satisfy internally is green.
"""

import random

import pytest

from golden_spectra.algebra import (
    NEG_ONE_MINUS_TAU,
    NEG_TAU,
    IntPolynomial,
    char_poly,
    compare_smallest_roots,
    count_roots_below,
    lambda_min_approx,
    lambda_min_at_least,
    lambda_min_equals,
    parse_threshold,
)
from golden_spectra.decomp import (
    Decomposition,
    find_hline_witness,
    lambda_min_of_sum_check,
    reduce_by_degree,
    reduce_q_realization,
    split_by_special_components,
    validate_decomposition,
    verify_hline_witness,
)
from golden_spectra.enumeration import (
    brute_force_signed_keys,
    derive_two_slim,
    exceptional_members,
    is_q_graph,
    lambda_min_table_check,
    verify_extension_step,
    verify_three_vertex_diagonal_lemma,
)
from golden_spectra.iso import canonical_key, contains_induced, is_isomorphic
from golden_spectra.model import (
    InvalidGraphError,
    catalog,
    fat_neighbors,
    hoffman,
    induced_hoffman_subgraph,
    induced_signed_subgraph,
    is_fat,
    make_q,
    recognize_q,
    signed,
    to_text,
)
from golden_spectra.spectral import (
    PreconditionError,
    b_matrix,
    b_matrix_by_product,
    check_msbd,
    d_matrix,
    signed_adjacency,
    special_graph,
)

from conftest import random_hoffman, random_signed


def report(num: str, ok: bool, details: str) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {details}")


def test_criterion_01_exceptional_census(census7):
    expected = {3: 1, 4: 5, 5: 6, 6: 3, 7: 0}
    derived = {n: sum(1 for m in census7.members(n) if is_q_graph(m.graph) is None)
               for n in expected}
    total = sum(derived.values())
    ok = derived == expected and total == 15
    report("01 census-15", ok,
           f"derived non-Q counts {derived} (total {total}), expected "
           f"{expected} (total 15)")
    assert ok, (
        f"derived {total} exceptional graphs with per-n counts {derived}; the "
        "two extras (an unbalanced four-cycle with three minus edges and a "
        "balanced five-cycle with four minus edges) satisfy the census "
        "predicate exactly but admit no fat realization; see the notes")


def test_criterion_02_lambda_table(classification):
    counts = lambda_min_table_check([m for _, m in classification.exceptional])
    expected = {"sqrt2": 2, "sqrt17": 3, "cubic": 1, "tau": 9}
    ok = counts == expected
    report("02 lambda table", ok, f"class counts over the census-15: {counts}")
    assert ok


def test_criterion_03_irreducible_census(classification):
    total = len(classification.irreducible.members)
    ok = total == 37 and not classification.discrepancies
    report("03 census-37", ok,
           f"derived {total} irreducible members; discrepancies: "
           f"{list(classification.discrepancies) or 'none'}")
    assert ok, (
        f"derived {total} fat irreducible Hoffman graphs; the six-vertex "
        "special graph whose complement is a triangle with three pendants "
        "has 7 realizations (complement-triangle and complement-perfect-"
        "matching fat classes exist only there), all exactly at the "
        "threshold and all irreducible per the complete witness search")


def test_criterion_04_maximal_census(classification, maximal):
    keys = {m.key for m in maximal.members}
    has_forced = (canonical_key(catalog("H_XVI")) in keys
                  and canonical_key(catalog("H_XVII")) in keys)
    six = [m for m in classification.irreducible.members
           if m.graph.slim_count == 6]
    six_ok = all(m.key in keys for m in six)
    ok = len(maximal.members) == 18 and has_forced and six_ok
    report("04 census-18", ok,
           f"derived {len(maximal.members)} maximal members "
           f"({len(six)} six-slim, forced members present: {has_forced})")
    assert ok, (
        f"derived {len(maximal.members)} maximal members (all "
        f"{len(six)} six-slim members are maximal and the two-slim "
        "threshold graphs are present); the count follows the derived "
        "census size")


def test_criterion_05_char_poly_identity():
    ok = True
    for r in range(1, 9):
        m = signed_adjacency(make_q(r, r, 2 * r)).entries
        expected = (IntPolynomial((-1, 1, 1)) ** (2 * r - 1)
                    * IntPolynomial((-1, -(2 * r - 1), 1)))
        if char_poly(m) != expected:
            ok = False
            break
    report("05 char identity", ok, "exact coefficient equality for r = 1..8")
    assert ok


def test_criterion_06_q_family_bound():
    checked = 0
    ok = True
    for r in range(0, 11):
        for p in range(0, r + 1):
            for q in range(0, r - p + 1):
                m = signed_adjacency(make_q(p, q, r)).entries
                if not lambda_min_at_least(m, NEG_TAU):
                    ok = False
                checked += 1
    report("06 Q bound", ok, f"{checked} parameter triples, exact, no failures")
    assert ok


def test_criterion_07_extension_step():
    checked = 0
    failures = []
    for total in range(0, 11):
        for r in range(0, total + 1):
            pq = total - r
            if pq > r:
                continue
            for p in range(0, pq + 1):
                if not verify_extension_step(p, pq - p, r):
                    failures.append((p, pq - p, r))
                checked += 1
    ok = not failures
    report("07 extension step", ok, f"{checked} bases checked; failures: {failures}")
    assert ok


def test_criterion_08_two_slim_derivation():
    six = derive_two_slim()
    counts = {"-1": 0, "-2": 0, "threshold": 0}
    for g in six:
        b = b_matrix(g).entries
        if lambda_min_equals(b, parse_threshold("-1")):
            counts["-1"] += 1
        elif lambda_min_equals(b, parse_threshold("-2")):
            counts["-2"] += 1
        elif lambda_min_equals(b, NEG_ONE_MINUS_TAU):
            counts["threshold"] += 1
    ok = len(six) == 6 and counts == {"-1": 1, "-2": 3, "threshold": 2}
    report("08 two-slim", ok, f"{len(six)} graphs, eigenvalue multiset {counts}")
    assert ok


def test_criterion_09_three_vertex_diagonal_sweep():
    ok = verify_three_vertex_diagonal_lemma()
    report("09 diagonal sweep", ok,
           "every shifted three-vertex matrix strictly below the threshold")
    assert ok


def test_criterion_10a_brute_force_oracle(census7):
    oracle = brute_force_signed_keys(5, NEG_TAU, (catalog("T1"),), connected=True)
    ok = True
    sizes = {}
    for n in range(1, 6):
        got = tuple(m.key for m in census7.members(n))
        sizes[n] = len(got)
        if got != oracle[n]:
            ok = False
    report("10a brute-force oracle", ok,
           f"augmentation equals exhaustive enumeration for n <= 5: {sizes}")
    assert ok


def test_criterion_10b_matrix_identities():
    rng = random.Random(2024)
    graphs = [catalog(n) for n in
              ("H_I", "H_II", "H_III", "H_IV", "H_XVI", "H_XVII", "K1T(4)")]
    graphs += [random_hoffman(rng, 8) for _ in range(500)]
    msbd_checked = 0
    ok = True
    for g in graphs:
        if b_matrix(g).entries != b_matrix_by_product(g):
            ok = False
        try:
            if not check_msbd(g):
                ok = False
            msbd_checked += 1
        except PreconditionError:
            pass
    report("10b matrix identities", ok,
           f"{len(graphs)} graphs, product cross-check everywhere, "
           f"shifted identity on {msbd_checked} applicable graphs")
    assert ok and msbd_checked > 300


def test_criterion_10c_interlacing():
    rng = random.Random(4096)
    checked = 0
    ok = True
    while checked < 200:
        if checked % 2 == 0:
            g = random_hoffman(rng, 8)
            if g.vertex_count < 2 or g.slim_count == 0:
                continue
            keep = set(rng.sample(range(g.vertex_count),
                                  rng.randint(1, g.vertex_count)))
            try:
                sub = induced_hoffman_subgraph(g, keep)
            except InvalidGraphError:
                continue
            if sub.slim_count == 0:
                continue
            lam_host = lambda_min_approx(b_matrix(g).entries)
            lam_sub = lambda_min_approx(b_matrix(sub).entries)
        else:
            s = random_signed(rng, rng.randint(2, 7))
            keep = set(rng.sample(range(s.vertex_count),
                                  rng.randint(1, s.vertex_count)))
            sub = induced_signed_subgraph(s, keep)
            lam_host = lambda_min_approx(signed_adjacency(s).entries)
            lam_sub = lambda_min_approx(signed_adjacency(sub).entries)
        if lam_sub < lam_host - 1e-9:
            ok = False
        checked += 1
    report("10c interlacing", ok, f"{checked} host/subgraph pairs within 1e-9")
    assert ok


def test_criterion_10d_key_invariance(classification):
    rng = random.Random(8192)
    ok = True
    graphs = [m.graph for _, m in classification.exceptional]
    graphs += [m.graph for m in classification.irreducible.members]
    for g in graphs:
        key = canonical_key(g)
        for _ in range(100):
            if hasattr(g, "plus_edges"):
                perm = list(range(g.vertex_count))
                rng.shuffle(perm)
                shuffled = signed(
                    g.vertex_count,
                    [(perm[a], perm[b]) for a, b in g.plus_edges],
                    [(perm[a], perm[b]) for a, b in g.minus_edges])
            else:
                slims = list(range(g.slim_count))
                fats = list(range(g.slim_count, g.vertex_count))
                rng.shuffle(slims)
                rng.shuffle(fats)
                perm = dict(enumerate(slims))
                perm.update({g.slim_count + i: f for i, f in enumerate(fats)})
                shuffled = hoffman(g.slim_count, g.fat_count,
                                   [(perm[a], perm[b]) for a, b in g.edges])
            if canonical_key(shuffled) != key:
                ok = False
    report("10d key invariance", ok,
           f"{len(graphs)} census graphs x 100 relabelings")
    assert ok


def test_criterion_10e_special_graph_shift(classification):
    ok = True
    for m in classification.irreducible.members:
        g = m.graph
        assert is_fat(g)
        p_special = char_poly(signed_adjacency(special_graph(g)).entries)
        b_plus_one = [list(row) for row in b_matrix(g).entries]
        for i in range(len(b_plus_one)):
            b_plus_one[i][i] += 1
        if compare_smallest_roots(p_special, char_poly(b_plus_one)) < 0:
            ok = False
    report("10e special-graph shift", ok,
           f"exact one-step lift on all {len(classification.irreducible.members)}"
           " fat census members")
    assert ok


def test_criterion_10f_sum_rule(classification):
    decompositions = []
    two = hoffman(2, 2, [(0, 2), (1, 3)])
    decompositions.append(split_by_special_components(two))
    hprime = hoffman(2, 3, [(0, 1), (0, 2), (1, 3), (0, 4), (1, 4)])
    decompositions.append(split_by_special_components(hprime))
    for edges, n in (([(0, 1), (1, 2)], 3), ([(0, 1), (1, 2), (2, 3), (0, 3)], 4),
                     ([(0, 1), (0, 2), (1, 2)], 3)):
        decompositions.append(reduce_by_degree(hoffman(n, 0, edges))[1])
    g = hoffman(3, 3, [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)])
    shape = recognize_q(special_graph(g))
    vp = tuple(v for v, _ in shape.plus_pendants)
    vq = tuple(v for v, _ in shape.minus_pendants)
    decompositions.append(reduce_q_realization(g, (vp, vq, shape.clique))[1])
    w = find_hline_witness(catalog("H_IV"), [catalog("H_II")])
    decompositions.append(w.decomposition)
    ok = all(validate_decomposition(d) is None and lambda_min_of_sum_check(d)
             for d in decompositions)
    report("10f sum rule", ok,
           f"exact eigenvalue equality on {len(decompositions)} constructed "
           "decompositions")
    assert ok


def test_criterion_10g_witness_search(classification, maximal):
    family = [m.graph for m in maximal.members]
    family_keys = {m.key for m in maximal.members}
    targets = [m.graph for m in classification.irreducible.members]
    targets += [catalog(n) for n in ("H_I", "H_II", "H_III", "H_IV")]
    ok = True
    for g in targets:
        w = find_hline_witness(g, family)
        if w is None or not verify_hline_witness(w, family_keys):
            ok = False
    report("10g witness search", ok,
           f"family membership witnessed for {len(targets)} graphs against "
           f"the {len(family)} maximal members")
    assert ok
