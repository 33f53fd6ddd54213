import random

from hypothesis import given

from repext.generate import random_cnf2
from repext.oracle import brute_2sat
from repext.twosat import Cnf2, solve

from strategies import seeds


def test_satisfiable_pair_forces_y():
    f = Cnf2(2)
    f.add((0, True), (1, True))
    f.add((0, False), (1, True))
    out = solve(f)
    assert out is not None and out[1] is True


def test_unit_contradiction():
    f = Cnf2(1)
    f.add((0, True))
    f.add((0, False))
    assert solve(f) is None


def test_empty_clause_is_unsatisfiable():
    f = Cnf2(1)
    f.add_false()
    assert solve(f) is None


def test_twelve_variable_instances_match_brute_force():
    rng = random.Random(12)
    for _ in range(50):
        nv, clauses = random_cnf2(rng, 12)
        f = Cnf2(nv)
        for c in clauses:
            f.add(*c)
        assert (solve(f) is None) == (brute_2sat(nv, clauses) is None)


@given(seeds)
def test_solution_satisfies_formula(seed):
    nv, clauses = random_cnf2(random.Random(seed), 10)
    f = Cnf2(nv)
    for c in clauses:
        f.add(*c)
    out = solve(f)
    truth = brute_2sat(nv, clauses)
    assert (out is None) == (truth is None)
    if out is not None:
        assert f.satisfied_by(out)
