"""Hypothesis strategies shared by the test modules."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from repext import generate as gen
from repext.graph import Graph
from repext.plf import PLF, PartialPLF

rationals = st.builds(Fraction, st.integers(-16, 16), st.integers(1, 8))
unit_points = st.builds(Fraction, st.integers(0, 8), st.just(8))


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def full_plfs(draw):
    inner = draw(st.sets(st.integers(1, 7), max_size=3))
    xs = [Fraction(0), *(Fraction(i, 8) for i in sorted(inner)), Fraction(1)]
    return PLF([(x, draw(rationals)) for x in xs])


@st.composite
def partial_plfs(draw):
    a, b = sorted(draw(st.lists(st.integers(0, 8), min_size=2, max_size=2, unique=True)))
    inner = draw(st.sets(st.integers(a, b), max_size=2))
    xs = sorted({a, b} | inner)
    return PartialPLF([(Fraction(x, 8), draw(rationals)) for x in xs])


seeds = st.integers(0, 2**31 - 1)


def posets(max_n=6, density=None):
    return st.builds(lambda s, n: gen.random_poset(random.Random(s), n, density), seeds, st.integers(0, max_n))
