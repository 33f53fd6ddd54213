"""Seeded cross-check suites pairing each algorithm with its brute-force oracle.

Case ``i`` of a suite draws from ``Random(seed * 1_000_003 + i)``, so results
do not depend on how cases are split across worker processes.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from repext import generate as gen
from repext.checker import check_poset_representation, check_representation, check_segments
from repext.fun_ext import rep_ext_fun_explain
from repext.graph import InvalidInstance
from repext.oracle import (
    brute_2sat,
    brute_perm_ext,
    brute_rep_ext_fun,
    brute_sat3,
    poset_feasible_brute,
    sampled_region_intersect,
)
from repext.partialfun_ext import (
    gadget_forward_check,
    gen_3sat_gadget,
    rep_ext_star_graph_explain,
)
from repext.perm_ext import rep_ext_perm
from repext.poset_ext import (
    poset_construct,
    poset_construct_partial,
    poset_extendable,
    poset_extendable_partial,
)
from repext.regions import check_poset_rep, regions_intersect
from repext.twosat import Cnf2, solve


@dataclass(frozen=True)
class CaseResult:
    agree: bool
    verdict: bool
    checked: bool = True
    detail: str = ""


def _rng(seed: int, i: int) -> random.Random:
    return random.Random(seed * 1_000_003 + i)


def fun_case(seed: int, i: int) -> CaseResult:
    rng = _rng(seed, i)
    g, rep = next(gen.valid_fun_instances(rng, 1))
    res = rep_ext_fun_explain(g, rep)
    truth = brute_rep_ext_fun(g, rep)
    checked = True
    if res.extendable:
        checked = not check_representation(g, res.representation, rep)
    return CaseResult(res.extendable == truth, res.extendable, checked, "" if res.extendable == truth else repr((g.edges, rep)))


def perm_valid_case(seed: int, i: int) -> CaseResult:
    rng = _rng(seed, i)
    pi, g, placed = gen.valid_placement(rng, rng.randint(1, 6))
    out = rep_ext_perm(g, placed)
    ok = out is not None and not check_segments(g, out, placed)
    return CaseResult(ok, out is not None, ok, "" if ok else repr((pi, placed)))


def perm_adversarial_case(seed: int, i: int) -> CaseResult:
    rng = _rng(seed, i)
    pi, g, placed = gen.adversarial_placement(rng, rng.randint(3, 6))
    out = rep_ext_perm(g, placed)
    truth = brute_perm_ext(g, placed)
    checked = out is None or not check_segments(g, out, placed)
    agree = (out is not None) == truth
    return CaseResult(agree, out is not None, checked, "" if agree else repr((pi, placed)))


def region_case(seed: int, i: int) -> CaseResult:
    rng = _rng(seed, i)
    touching = i % 5 == 0
    r1, r2 = gen.touching_region_pair(rng) if touching else gen.random_region_pair(rng)
    w = regions_intersect(r1, r2)
    s = sampled_region_intersect(r1, r2)
    agree = (w is None) == (s is None) and (not touching or w is None)
    checked = w is None or (r1.contains(w.x, w.y) and r2.contains(w.x, w.y))
    return CaseResult(agree, w is not None, checked)


def twosat_case(seed: int, i: int) -> CaseResult:
    rng = _rng(seed, i)
    nv, clauses = gen.random_cnf2(rng)
    f = Cnf2(nv)
    for c in clauses:
        f.add(*c)
    got = solve(f)
    truth = brute_2sat(nv, clauses)
    checked = got is None or f.satisfied_by(got)
    return CaseResult((got is None) == (truth is None), got is not None, checked)


def poset_case(seed: int, i: int) -> CaseResult:
    """Decision, construction and checker on one random poset instance (full or partial curves)."""
    rng = _rng(seed, i)
    while True:
        full = rng.random() < 0.5
        p, rep = gen.random_poset_instance(rng, rng.randint(1, 6), full)
        try:
            check_poset_rep(p, rep, full=full)
        except InvalidInstance:
            continue
        break
    ok, _ = (poset_extendable if full else poset_extendable_partial)(p, rep)
    psi = (poset_construct if full else poset_construct_partial)(p, rep)
    truth = poset_feasible_brute(p, rep)
    checked = psi is None or not check_poset_representation(p, psi, rep)
    return CaseResult(ok == truth == (psi is not None), ok, checked)


def gadget_case(formula) -> CaseResult:
    """Star search on the gadget vs exhaustive SAT, plus the forward check for every model."""
    formula = [tuple(c) for c in formula]
    gd = gen_3sat_gadget(3, formula)
    res = rep_ext_star_graph_explain(gd.graph, gd.rep, construct=False)
    truth = brute_sat3(3, formula)
    forward = True
    for bits in itertools.product((False, True), repeat=3):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in formula):
            forward = forward and gadget_forward_check(gd, bits)
    return CaseResult(res.extendable == truth, res.extendable, forward, repr(formula))


SUITES = {
    "fun": fun_case,
    "perm": perm_valid_case,
    "perm-adversarial": perm_adversarial_case,
    "regions": region_case,
    "twosat": twosat_case,
    "poset": poset_case,
}


def _call(args):
    fn, a = args
    return fn(*a)


def run_suite(name: str, count: int, seed: int = 0, jobs: int = 1) -> list[CaseResult]:
    """Run ``count`` cases of a suite (``gadget`` ignores ``count`` and runs the whole corpus)."""
    if name == "gadget":
        tasks = [(gadget_case, (f,)) for f in gen.gadget_corpus()]
    else:
        fn = SUITES[name]
        tasks = [(fn, (seed, i)) for i in range(count)]
    if jobs <= 1:
        return [_call(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_call, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))


def summarize(results: list[CaseResult]) -> Counter:
    c = Counter()
    for r in results:
        c["cases"] += 1
        c["agree"] += r.agree
        c["yes"] += r.verdict
        c["checked"] += r.checked
    return c
