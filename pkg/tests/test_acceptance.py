"""Exit criteria. Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import json
import random
import time
from fractions import Fraction
from itertools import product
from math import comb

import pytest

from satsharp.canon import canonical_form
from satsharp.constructions import clique_partition, disjoint_cliques_saturated, threshold_saturated
from satsharp.embed import is_saturated
from satsharp.graph import Graph, add_dominating, complete, disjoint_cliques, star
from satsharp.oracle import enumerate_graphs, sat_exact
from satsharp.threshold import build, parse_sequence, threshold_weight
from satsharp.weights import edge_weight, graph_weight, lower_bound

from conftest import FIXTURES, LIFT_BASES, all_labeled_graphs, brute_iso_classes, k4_pendant


@pytest.fixture
def report(capsys, request):
    def emit(ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {request.node.name}: {detail}")
        assert ok, detail
    return emit


def test_criterion_1_weight_fixtures(report):
    start = time.perf_counter()
    ok = graph_weight(complete(4)) == 5 and edge_weight(k4_pendant(), 3, 4) == 4
    cases = [(2, 3), (3, 3), (2, 2, 2), (3, 4)]
    ok = ok and all(graph_weight(disjoint_cliques(p)) == 2 * p[0] - 3 for p in cases)
    elapsed = time.perf_counter() - start
    report(ok and elapsed < 1.0, f"K4 -> 5, pendant -> 4, disjoint cliques -> 2p1-3 ({elapsed:.3f}s < 1s)")


def test_criterion_2_exact_k4(report):
    start = time.perf_counter()
    values = {n: sat_exact(complete(4), n, workers=4).value for n in (5, 6, 7)}
    elapsed = time.perf_counter() - start
    ok = all(v == 2 * n - 3 for n, v in values.items()) and elapsed < 300
    report(ok, f"sat(K4, n) for n=5,6,7: {values}, expected 2n-3 ({elapsed:.2f}s < 300s, 4 workers)")


def test_criterion_3_lower_bound_soundness(report):
    violations = []
    checked = 0
    for name, h in FIXTURES.items():
        lb = lower_bound(h)
        for n in range(h.n, 8):
            checked += 1
            exact = sat_exact(h, n).value
            if lb.integer_value_at(n) > exact:
                violations.append((name, n, lb.integer_value_at(n), exact))
    report(not violations, f"{checked} (H, n) pairs, violations: {violations}")


def test_criterion_4_dominating_vertex_inequality(report):
    violations = []
    checked = 0
    for name, h in LIFT_BASES.items():
        lifted = add_dominating(h)
        for n in range(lifted.n, 8):
            checked += 1
            lhs = sat_exact(lifted, n).value
            rhs = (n - 1) + sat_exact(h, n - 1).value
            if lhs > rhs:
                violations.append((name, n, lhs, rhs))
    report(not violations, f"{checked} (H, n) pairs, violations: {violations}")


def test_criterion_5_automaton_agreement(report):
    rng = random.Random(20240501)
    mismatches = []
    for _ in range(500):
        seq = parse_sequence("".join(rng.choice("ID") for _ in range(rng.randint(0, 9))))
        state = threshold_weight(seq)
        if state.wt != graph_weight(build(seq)):
            mismatches.append(seq)
        elif state.wt != float("inf") and state.satlim != Fraction(state.wt - 1, 2):
            mismatches.append(seq)
    traces = [("DDD", 5, 2), ("DDID", 4, Fraction(3, 2))]
    traces += [("I" * (k - 1) + "D", k, Fraction(k - 1, 2)) for k in range(1, 9)]
    for text, wt, satlim in traces:
        state = threshold_weight(parse_sequence(text))
        if (state.wt, state.satlim) != (wt, satlim):
            mismatches.append(text)
    report(not mismatches, f"500 random sequences + {len(traces)} traced cases, mismatches: {mismatches[:5]}")


def test_criterion_6_construction_saturation(report):
    failures = []
    checked = 0
    for p in ([2, 2], [2, 3], [3, 3], [2, 2, 2]):
        h = disjoint_cliques(p)
        for n in range(sum(p), 12):
            g = disjoint_cliques_saturated(p, n)
            checked += 1
            if g.m != (p[0] - 2) * (n + 1 - sum(p)) + comb(sum(p) - 1, 2) or not is_saturated(g, h):
                failures.append(("cliques", tuple(p), n))
    for k in (2, 3, 4):
        for n in range(k + 1, 13):
            g = clique_partition(k, n)
            checked += 1
            r = n % k
            if g.m != (n - r) // k * comb(k, 2) + comb(r, 2) or not is_saturated(g, star(k)):
                failures.append(("partition", k, n))
    seen = set()
    for length in range(1, 5):
        for letters in product("ID", repeat=length):
            seq = parse_sequence("".join(letters))
            h = build(seq)
            if h.m == 0:
                continue
            seen.add(canonical_form(h))
            for n in range(h.n, 11):
                checked += 1
                if not is_saturated(threshold_saturated(seq, n), h):
                    failures.append(("threshold", "".join(letters), n))
    # 2 + 4 + 8 + 16 threshold graphs on 2..5 vertices, minus the 4 edgeless ones
    ok = not failures and len(seen) == 26
    report(ok, f"{checked} constructions over {len(seen)} threshold targets, failures: {failures[:5]}")


def test_criterion_7_weight_gap_non_example(report):
    h = Graph.from_edges(6, [e for e in complete(6).edges() if e not in {(0, 1), (2, 3)}])
    wt = graph_weight(h)
    slope = lower_bound(h).slope
    t = 6
    ok = wt == 6 and slope == Fraction(5, 2) == t - Fraction(7, 2) and slope < t - Fraction(5, 2)
    report(ok, f"wt(K6 - 2K2) = {wt}, bound slope {slope} < {t - Fraction(5, 2)}")


def test_criterion_8_enumeration_counts(report):
    start = time.perf_counter()
    counts = {}
    for n in (4, 5):
        listed = sum(len(list(enumerate_graphs(n, m))) for m in range(comb(n, 2) + 1))
        brute = len(brute_iso_classes(n))
        forms = len({canonical_form(g) for g in all_labeled_graphs(n)})
        counts[n] = (listed, brute, forms)
    elapsed = time.perf_counter() - start
    ok = counts == {4: (11, 11, 11), 5: (34, 34, 34)} and elapsed < 10
    report(ok, f"(enumerated, brute force, canonical) = {counts} ({elapsed:.2f}s < 10s)")


def test_criterion_9_determinism(report):
    same = []
    for h, n in ((complete(3), 6), (complete(4), 6)):
        one = json.dumps(sat_exact(h, n, workers=1).to_json(timing=False), sort_keys=True).encode()
        eight = json.dumps(sat_exact(h, n, workers=8).to_json(timing=False), sort_keys=True).encode()
        same.append(one == eight)
    report(all(same), f"1 vs 8 workers byte-identical for (K3, 6), (K4, 6): {same}")
