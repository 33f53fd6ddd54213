"""One test per acceptance criterion; each records a PASS/FAIL line with its timing.

Thresholds and tolerances are pinned here.  Everything is seeded, so reruns
see the same cases.
"""

import random
import time

from repext.checker import check_poset_representation, check_segments
from repext.crosscheck import gadget_case, run_suite, summarize
from repext.fun_ext import rep_ext_fun_explain
from repext.generate import gadget_corpus, sparse_comparability_graph
from repext.graph import Graph
from repext.instances import blocked_vertex_instance
from repext.orient import orient_ext
from repext.partialfun_ext import gen_3sat_gadget, rep_ext_star_graph_explain
from repext.perm_ext import drawing_from_permutation, graph_from_permutation, rep_ext_perm

SEED = 20240601
FIG_LIMIT_S = 1.0
FUN_CASES, FUN_LIMIT_S = 500, 300.0
PERM_CASES, PERM_ADV_CASES, PERM_LIMIT_S = 500, 150, 120.0
GADGET_LIMIT_S = 600.0
REGION_CASES = 1000
POSET_CASES = 600
FUN_SOUNDNESS_CASES = 200
SAT_CASES = 1000
SMOKE_N, SMOKE_LIMIT_S = 2000, 5.0


def _all_good(summary) -> bool:
    return summary["agree"] == summary["checked"] == summary["cases"]


def test_blocked_vertex_instance(report):
    inst = blocked_vertex_instance()
    t0 = time.perf_counter()
    fun = rep_ext_fun_explain(inst.graph, inst.rep)
    orient = orient_ext(inst.graph, inst.partial)
    dt = time.perf_counter() - t0
    ok = not fun.extendable and orient is not None and dt < FIG_LIMIT_S
    detail = f"fun-ext {'extendable' if fun.extendable else 'not extendable'}, orient-ext {'extendable' if orient else 'not extendable'}, {dt:.3f}s < {FIG_LIMIT_S}s"
    assert report(1, ok, detail)


def test_fun_ext_matches_oracle(report):
    t0 = time.perf_counter()
    s = summarize(run_suite("fun", FUN_CASES, SEED))
    dt = time.perf_counter() - t0
    ok = _all_good(s) and s["cases"] >= 500 and dt < FUN_LIMIT_S
    detail = f"{s['agree']}/{s['cases']} agree ({s['cases'] - s['yes']} not extendable), {s['checked']} pass the checker, {dt:.1f}s < {FUN_LIMIT_S:.0f}s"
    assert report(2, ok, detail)


def test_perm_ext_valid_and_adversarial(report):
    t0 = time.perf_counter()
    valid = summarize(run_suite("perm", PERM_CASES, SEED))
    adv = summarize(run_suite("perm-adversarial", PERM_ADV_CASES, SEED))
    pi = [3, 1, 4, 5, 2]
    g = graph_from_permutation(pi)
    fig = sorted(g.edges) == [(0, 1), (0, 4), (2, 4), (3, 4)]
    placed = {v: s for v, s in drawing_from_permutation(pi).items() if v in (0, 2)}
    out = rep_ext_perm(g, placed)
    fig = fig and out is not None and not check_segments(g, out, placed)
    dt = time.perf_counter() - t0
    ok = _all_good(valid) and valid["yes"] == valid["cases"] and _all_good(adv) and fig and dt < PERM_LIMIT_S
    detail = (
        f"valid {valid['yes']}/{valid['cases']} extended and checked; adversarial {adv['agree']}/{adv['cases']} agree "
        f"({adv['cases'] - adv['yes']} not extendable); (3,1,4,5,2) {'ok' if fig else 'wrong'}; {dt:.1f}s < {PERM_LIMIT_S:.0f}s"
    )
    assert report(3, ok, detail)


def test_gadget_corpus_matches_sat(report):
    corpus = gadget_corpus()
    t0 = time.perf_counter()
    results = [gadget_case(f) for f in corpus]
    dt = time.perf_counter() - t0
    s = summarize(results)
    ok = _all_good(s) and s["cases"] == 1331 and dt < GADGET_LIMIT_S
    detail = (
        f"{s['agree']}/{s['cases']} formulas agree ({s['cases'] - s['yes']} unsatisfiable), "
        f"forward check {s['checked']}/{s['cases']}, {dt:.1f}s < {GADGET_LIMIT_S:.0f}s"
    )
    assert report(4, ok, detail)


def test_region_intersection_exact(report):
    t0 = time.perf_counter()
    s = summarize(run_suite("regions", REGION_CASES, SEED))
    dt = time.perf_counter() - t0
    ok = _all_good(s) and s["cases"] >= 1000
    detail = f"{s['agree']}/{s['cases']} pairs agree ({REGION_CASES // 5} touching), {s['checked']} witnesses verified, {dt:.1f}s"
    assert report(5, ok, detail)


def test_construction_soundness(report):
    t0 = time.perf_counter()
    poset = summarize(run_suite("poset", POSET_CASES, SEED))
    # full-function constructions reached through the module pipeline
    fun = summarize(run_suite("fun", FUN_SOUNDNESS_CASES, SEED + 1))
    # one partial-function construction on a satisfiable gadget
    gd = gen_3sat_gadget(2, [(1, 2, -1), (1, -2, 2)])
    star = rep_ext_star_graph_explain(gd.graph, gd.rep)
    star_ok = star.extendable and not check_poset_representation(star.poset, star.representation, gd.rep)
    dt = time.perf_counter() - t0
    ok = _all_good(poset) and fun["checked"] == fun["cases"] and star_ok
    detail = (
        f"poset suite {poset['checked']}/{poset['cases']} pass the checker ({poset['yes']} built, "
        f"decision = construction in {poset['agree']}); fun suite {fun['checked']}/{fun['cases']}; "
        f"gadget build {'ok' if star_ok else 'failed'}; {dt:.1f}s"
    )
    assert report(6, ok, detail)


def test_twosat_matches_brute_force(report):
    t0 = time.perf_counter()
    s = summarize(run_suite("twosat", SAT_CASES, SEED))
    dt = time.perf_counter() - t0
    ok = _all_good(s)
    detail = f"{s['agree']}/{s['cases']} agree ({s['cases'] - s['yes']} unsatisfiable), {s['checked']} models verified, {dt:.1f}s"
    assert report(7, ok, detail)


def test_orientation_smoke(report):
    orient_ext(Graph(3, [(0, 1), (1, 2)]))  # compile kernels outside the timed run
    g, partial = sparse_comparability_graph(random.Random(SEED), blocks=SMOKE_N // 10)
    t0 = time.perf_counter()
    out = orient_ext(g, partial)
    dt = time.perf_counter() - t0
    ok = out is not None and g.n == SMOKE_N and dt < SMOKE_LIMIT_S
    detail = f"n={g.n} m={g.m}, {'oriented' if out is not None else 'failed'} in {dt:.3f}s < {SMOKE_LIMIT_S}s"
    assert report(8, ok, detail)
