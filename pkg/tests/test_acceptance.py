"""Exit-gate checks.  Each prints one PASS/FAIL line; run standalone with
``python tests/test_acceptance.py`` or through pytest."""

import sys
import time

import pytest

from indsat import experiments
from indsat.classifier import classify
from indsat.coloring import dimension
from indsat.constructions import (hamming_saturation_search, proposition4_suite, recognize_class_h,
                                  recognize_class_t, theorem_a_embedding, theorem_a_s3_coloring)
from indsat.embedding import contains_induced
from indsat.graph import complete, cycle, delete_edge, star
from indsat.hamming import build
from indsat.iso import graphs
from indsat.saturation import verify, verify_hamming


def report(number: int, ok: bool, detail: str, started: float) -> None:
    line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - started:.1f}s) {detail}"
    sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()


def check_1():
    r = experiments.lemma17_oracle(6, 6)
    return r["graphs"] == 208 and not r["mismatches"], f"{r['graphs']} graphs, {len(r['mismatches'])} mismatches"


def check_2():
    r = experiments.lemma8_check(8)
    return not r["failures"], f"{r['checked']} forests with max degree >= 2, {len(r['failures'])} failures"


def check_3():
    r = experiments.lemma9_check(3, 3)
    return r["ok"], f"{len(r['hosts'])} hosts"


def check_4():
    patterns = [g for n in range(1, 6) for g in graphs(n)]
    hosts = [build(n, k) for n in range(1, 4) for k in range(1, 4)]
    bad = [(h, hg) for h in patterns for hg in hosts
           if verify_hamming(hg, h).holds != verify(hg.graph, h).holds]
    return not bad, f"{len(patterns)} patterns x {len(hosts)} hosts, {len(bad)} mismatches"


def check_5():
    a = experiments.theorem19(6)
    b = experiments.theorem19_family(6)
    w = experiments.wolk(7)
    ok = a["found"] == 0 and b["found"] == 0 and w["violations"] == 0
    return ok, f"P4: {a['found']}, {{P4,C4}}: {b['found']}, full-vertex violations: {w['violations']}"


def check_6():
    r = experiments.theorem12_soundness(5, 6)
    k4e = delete_edge(complete(4), (0, 1))
    v = classify(k4e)
    pinned = (v.verdict == "chipped" and v.chipped.kind == "ch3"
              and verify_hamming(build(2, 4), k4e).holds
              and dimension(k4e) == float("inf")
              and contains_induced(build(2, 4).graph, cycle(4))
              and contains_induced(build(2, 4).graph, complete(4)))
    return not r["failures"] and pinned, f"{r['checked']} graphs, {len(r['failures'])} failures, pinned K4-e: {pinned}"


def check_7():
    entries = {e.name: e for e in proposition4_suite(8)}
    wanted = ["spider(1, 1, 1)", "C~7", "C5+P2"]
    parts = [f"{n}: route={entries[n].route} k={entries[n].k}" for n in wanted]
    return all(entries[n].verified for n in wanted), "; ".join(parts)


def check_8():
    h = star(4)
    hw = recognize_class_h(h, 3)
    ok = hw is not None and recognize_class_t(h, 3)
    for q in (2, 3):
        theorem_a_embedding(h, hw, q)
    plus, col = theorem_a_s3_coloring(h, hw)
    k, _ = hamming_saturation_search(h, 3, 8)
    return ok and col.palette == 3 and k is not None, f"embeddings q=2,3 verified, colouring nice, least k={k}"


def check_9():
    r = experiments.theorem_b_demo()
    n3, n4 = r["n3"], r["n4"]
    ok = (n3["coloring_source"] == "search" and n4["coloring_source"] == "closed form"
          and n4["legs_match_closed_form"] and n4["legs_contain_all_colors"] and n4["legs_end_with_n"])
    return ok, f"n=3 k={n3['embedding_k']}, n=4 ({n4['vertices']} vertices) k={n4['embedding_k']}"


def check_10():
    r = experiments.theorem20(7)
    return r["all_passed"], (f"{r['pairs_found']} searched pairs with prime patterns on 4-5 vertices "
                             f"(max_n=7, C5 to 8); synthetic pair checks: {len(r['checks'])}, all passed: {r['all_passed']}")


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9, check_10]


@pytest.mark.parametrize("number", range(1, 11))
def test_acceptance(number):
    started = time.perf_counter()
    ok, detail = CHECKS[number - 1]()
    report(number, ok, detail, started)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for i, check in enumerate(CHECKS, 1):
        t = time.perf_counter()
        ok, detail = check()
        report(i, ok, detail, t)
        failed += not ok
    sys.exit(1 if failed else 0)
