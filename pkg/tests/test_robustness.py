import random

import pytest

from robustnet import (
    check_structural_lemmas,
    edge_lower_bound,
    is_r_robust,
    max_robustness,
    new_graph,
    reachability,
    sparsest_even,
    sparsest_odd,
    tree_graph,
)
from robustnet.robustness import EVEN_CASE, GENERAL_COROLLARY, MAX_EXACT_N, ODD_CASE

from oracles import (
    complete_graph,
    cycle_graph,
    oracle_is_r_robust,
    oracle_r_max,
    path_graph,
    random_graph,
    subset_reachability,
)


def test_reachability_examples():
    assert reachability(complete_graph(5), {0}) == 4
    assert reachability(cycle_graph(4), {0, 1}) == 1
    assert reachability(cycle_graph(4), set(range(4))) == 0
    with pytest.raises(ValueError):
        reachability(complete_graph(3), set())
    with pytest.raises(ValueError):
        reachability(complete_graph(3), {5})


def test_reachability_matches_oracle():
    rng = random.Random(3)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        members = frozenset(v for v in range(g.n) if rng.random() < 0.5) or frozenset({0})
        assert reachability(g, members) == subset_reachability(g, members)


def test_is_r_robust_examples():
    ok, witness = is_r_robust(complete_graph(5), 3)
    assert ok and witness is None

    ok, witness = is_r_robust(cycle_graph(4), 2)
    assert not ok
    assert witness == ({0, 1}, {2, 3})  # first violating pair in enumeration order

    # connected trees are 1-robust
    for n in range(2, 9):
        assert is_r_robust(path_graph(n), 1)[0]
        assert is_r_robust(tree_graph(n, "star"), 1)[0]


def test_is_r_robust_edge_cases():
    g = path_graph(3)
    assert is_r_robust(g, 0) == (True, None)
    with pytest.raises(ValueError):
        is_r_robust(g, -1)
    # the single-vertex graph has no disjoint pair: every level is vacuous
    single = new_graph(1)
    assert is_r_robust(single, 5) == (True, None)


def test_is_r_robust_monotone_in_r():
    rng = random.Random(17)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        ceiling = (g.n + 1) // 2
        verdicts = [is_r_robust(g, r)[0] for r in range(ceiling + 2)]
        assert verdicts == sorted(verdicts, reverse=True)


def test_max_robustness_goldens():
    assert max_robustness(complete_graph(5)).r_max == 3
    cert = max_robustness(path_graph(3))
    assert cert.r_max == 1
    assert cert.witness == ({0}, {2})
    cert = max_robustness(cycle_graph(4))
    assert cert.r_max == 1
    assert cert.witness == ({0, 1}, {2, 3})
    assert max_robustness(sparsest_odd(3)).r_max == 3


def test_max_robustness_single_vertex_convention():
    cert = max_robustness(new_graph(1))
    assert cert.r_max == 1
    assert cert.witness is None
    assert cert.pairs_examined == 0
    assert cert.to_json_dict() == {"r_max": 1, "witness": None, "pairs_examined": 0}


def test_certificate_witness_properties():
    rng = random.Random(29)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        cert = max_robustness(g)
        assert cert.pairs_examined > 0
        s1, s2 = cert.witness
        assert s1 and s2 and not (s1 & s2)
        r1 = subset_reachability(g, s1)
        r2 = subset_reachability(g, s2)
        assert r1 <= cert.r_max and r2 <= cert.r_max
        # the witness realizes the minimum over pairs
        assert max(r1, r2) == cert.r_max


def test_certificate_json_schema():
    cert = max_robustness(cycle_graph(4))
    data = cert.to_json_dict()
    assert set(data) == {"r_max", "witness", "pairs_examined"}
    assert data["witness"] == {"s1": [0, 1], "s2": [2, 3]}


def test_robustness_ceiling():
    rng = random.Random(41)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert max_robustness(g).r_max <= (g.n + 1) // 2
    for n in range(1, 11):
        assert max_robustness(complete_graph(n)).r_max == (n + 1) // 2


def test_adding_edges_never_hurts():
    rng = random.Random(53)
    for _ in range(6):
        g = random_graph(rng, rng.randint(2, 7), 0.4)
        base = max_robustness(g).r_max
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    bigger = new_graph(g.n, list(g.edges()) + [(u, v)])
                    assert max_robustness(bigger).r_max >= base


def test_degree_necessity():
    rng = random.Random(61)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        cert = max_robustness(g)
        if g.n > cert.r_max:
            assert g.min_degree() >= cert.r_max


def test_certifier_matches_oracle_quick():
    # the full >= 500-instance sweep lives in the acceptance suite
    rng = random.Random(97)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        cert = max_robustness(g)
        assert cert.r_max == oracle_r_max(g)
        assert oracle_is_r_robust(g, cert.r_max)
        if g.n > 1:
            assert not oracle_is_r_robust(g, cert.r_max + 1)


def test_capability_limit():
    big = new_graph(MAX_EXACT_N + 1)
    with pytest.raises(ValueError):
        is_r_robust(big, 1)
    with pytest.raises(ValueError):
        max_robustness(big)


def test_edge_lower_bound_values():
    assert edge_lower_bound(13, 7).bound == 63
    assert edge_lower_bound(13, 7).kind == ODD_CASE
    assert edge_lower_bound(14, 7).bound == 67
    assert edge_lower_bound(14, 7).kind == EVEN_CASE
    assert edge_lower_bound(10, 5).bound == 33
    assert edge_lower_bound(5, 3).bound == 9
    # n = 2r hits the even-case formula even at r = 1 (single edge is forced)
    report = edge_lower_bound(2, 1)
    assert report.bound == 1 and report.kind == EVEN_CASE
    assert edge_lower_bound(1, 1).bound == 0
    report = edge_lower_bound(9, 3)
    assert report.bound == 9 and report.kind == GENERAL_COROLLARY


def test_edge_lower_bound_errors():
    with pytest.raises(ValueError):
        edge_lower_bound(4, 3)  # below 2r-1 no r-robust graph exists
    with pytest.raises(ValueError):
        edge_lower_bound(5, 0)


def test_bound_soundness_on_certified_graphs():
    rng = random.Random(113)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        cert = max_robustness(g)
        if cert.r_max >= 1:
            assert g.edge_count >= edge_lower_bound(g.n, cert.r_max).bound


def test_structural_checks_odd_case():
    report = check_structural_lemmas(sparsest_odd(4), 4)
    assert report.all_passed
    (clique,) = report.checks
    assert clique.name == "clique"
    assert clique.required == 5 and clique.found >= 5


def test_structural_checks_even_case():
    report = check_structural_lemmas(sparsest_even(5), 5)
    assert report.all_passed
    clique, dense = report.checks
    assert clique.required == 4 and clique.found >= 4
    assert dense.name == "dense-subset"
    assert dense.required == 13 and dense.found >= 13
    assert len(dense.witness) == 6


def test_structural_checks_complete_graph():
    report = check_structural_lemmas(complete_graph(5), 3)
    assert report.all_passed  # a 5-clique certainly contains a 4-clique


def test_structural_checks_report_failure():
    # a path on 5 vertices is nowhere near 3-robust; the checks just report it
    report = check_structural_lemmas(path_graph(5), 3)
    assert not report.all_passed


def test_structural_checks_wrong_n():
    with pytest.raises(ValueError):
        check_structural_lemmas(complete_graph(6), 2)  # n=6 not in {3, 4}
    with pytest.raises(ValueError):
        check_structural_lemmas(complete_graph(5), 0)
