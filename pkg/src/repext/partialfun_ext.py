"""Extension with partial functions: the poset case, a pruned search for the
graph case, and the 3-SAT gadget whose instances make the graph case hard.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from repext.checker import check_poset_representation
from repext.graph import Graph, InvalidInstance, Poset
from repext.mdtree import modular_decomposition
from repext.orient import orient_ext
from repext.plf import PLF, PartialPLF
from repext.poset_ext import poset_construct_partial, poset_extendable_partial
from repext.quotients import TreeIndex, candidate_orientations, compose, curve_constraints
from repext.regions import Region, make_region, regions_intersect

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """The search visited more orientation nodes than allowed."""


def rep_ext_star_poset(p: Poset, rep: Mapping[int, PartialPLF]) -> dict[int, PLF] | None:
    return poset_construct_partial(p, rep)


class RegionTable:
    """Interned regions and memoised intersection tests, keyed by curve content.

    Curves are interned so that equal curves are the same object, and a region
    is identified by (pinned curve, curves under it, curves over it) mapped to
    a small integer.  Repeated tests then cost one dict lookup on a pair of ints.
    """

    def __init__(self):
        self.curves: dict[PartialPLF, PartialPLF] = {}
        self.ids: dict[tuple, int] = {}
        self.keys: list[tuple] = []
        self.regions: dict[int, Region] = {}
        self.meets: dict[tuple[int, int], bool] = {}

    def curve(self, f: PartialPLF) -> PartialPLF:
        return self.curves.setdefault(f, f)

    def region_id(self, pinned: PartialPLF | None, lows, highs) -> int:
        if pinned is not None and pinned.is_empty:
            pinned = None
        key = (
            None if pinned is None else self.curve(pinned),
            frozenset(self.curve(f) for f in lows if not f.is_empty),
            frozenset(self.curve(f) for f in highs if not f.is_empty),
        )
        i = self.ids.get(key)
        if i is None:
            i = self.ids[key] = len(self.keys)
            self.keys.append(key)
        return i

    def region(self, i: int) -> Region:
        r = self.regions.get(i)
        if r is None:
            pinned, above, below = self.keys[i]
            order = lambda f: f.points  # noqa: E731
            r = self.regions[i] = make_region(pinned, sorted(above, key=order), sorted(below, key=order))
        return r

    def meet(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        pair = (i, j)
        hit = self.meets.get(pair)
        if hit is None:
            hit = self.meets[pair] = regions_intersect(self.region(i), self.region(j)) is not None
        return hit


# shared across calls: gadgets of one family reuse most of their regions
REGIONS = RegionTable()


def clear_region_cache() -> None:
    global REGIONS
    REGIONS = RegionTable()


def vertex_region_id(u: int, rep: Mapping[int, PartialPLF], below_u, above_u) -> int:
    """Interned region of ``u`` given the vertices under and over it."""
    return REGIONS.region_id(
        rep.get(u), [rep[a] for a in below_u if a in rep], [rep[a] for a in above_u if a in rep]
    )


def poset_extendable_cached(p: Poset, rep: Mapping[int, PartialPLF]) -> bool:
    """Region test for every incomparable pair, memoised across calls by curve content."""
    ids = [vertex_region_id(u, rep, p.below(u), p.above(u)) for u in range(p.n)]
    return all(REGIONS.meet(ids[u], ids[v]) for u, v in p.incomparable_pairs())


@dataclass
class StarResult:
    extendable: bool
    reason: str = ""
    poset: Poset | None = None
    representation: dict[int, PLF] | None = None
    nodes: int = 0


@dataclass
class _Search:
    g: Graph
    rep: dict[int, PartialPLF]
    index: TreeIndex
    modules: list[int]
    candidates: dict[int, list[Poset]]
    deps: dict[int, tuple[int, ...]]
    # module -> [(modules the pairs depend on, pairs)]
    pairs_by_module: dict[int, list[tuple[tuple[int, ...], list[tuple[int, int]]]]]
    budget: int
    nodes: int = 0
    decided: dict[int, Poset] = field(default_factory=dict)
    _key_cache: dict = field(default_factory=dict)

    def region(self, u: int) -> int:
        dkey = (u, tuple(id(self.decided[k]) for k in self.deps[u]))
        r = self._key_cache.get(dkey)
        if r is None:
            below, above = [], []
            for a in self.g.neighbors(u):
                f = self.rep.get(a)
                if f is None or f.is_empty:
                    continue
                k, ia, iu = self.index.lca(a, u)
                (below if self.decided[k].less(ia, iu) else above).append(a)
            r = self._key_cache[dkey] = vertex_region_id(u, self.rep, below, above)
        return r

    def consistent(self, k: int) -> bool:
        """Check the pairs that become decidable once module ``k`` is fixed."""
        decided = self.decided
        for ks, pairs in self.pairs_by_module.get(k, ()):
            if not all(d in decided for d in ks):
                continue
            for u, v in pairs:
                if not REGIONS.meet(self.region(u), self.region(v)):
                    return False
        return True

    def options(self, k: int) -> list[Poset]:
        out = []
        for cand in self.candidates[k]:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"search exceeded {self.budget} nodes")
            self.decided[k] = cand
            if self.consistent(k):
                out.append(cand)
            del self.decided[k]
        return out

    def run(self) -> bool:
        open_ = [k for k in self.modules if k not in self.decided]
        if not open_:
            return True
        best, best_opts = None, None
        for k in open_:
            opts = self.options(k)
            if not opts:
                return False
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = k, opts
                if len(opts) == 1:
                    break
        for cand in best_opts:
            self.decided[best] = cand
            if self.run():
                return True
            del self.decided[best]
        return False


def _validate_partial(g: Graph, rep: Mapping[int, PartialPLF]) -> None:
    for v in rep:
        if not 0 <= v < g.n:
            raise InvalidInstance(f"vertex {v} out of range for n={g.n}")


def rep_ext_star_graph_explain(
    g: Graph, rep: Mapping[int, PartialPLF], budget: int = DEFAULT_BUDGET, construct: bool = True
) -> StarResult:
    """Search the module orientations of ``g`` for one whose regions all meet.

    Raises :class:`InvalidInstance` when no transitive orientation respects
    ``rep`` and :class:`BudgetExceeded` when the search is cut off.
    """
    _validate_partial(g, rep)
    rep = {v: REGIONS.curve(f) for v, f in rep.items()}
    if g.n == 0:
        return StarResult(True, poset=Poset(g, ()), representation={})
    if orient_ext(g) is None:
        return StarResult(False, reason="graph is not a comparability graph")
    tree = modular_decomposition(g)
    index = TreeIndex(tree)
    cons = curve_constraints(index, g, rep)
    modules = [k for k, nd in enumerate(index.nodes) if not nd.is_leaf]
    candidates = {}
    for k in modules:
        cands = list(candidate_orientations(index.node(k), g, cons.get(k, set())))
        if not cands:
            node = index.node(k)
            raise InvalidInstance(f"no orientation of {node.kind} module {sorted(node.vertices)} respects the curves")
        candidates[k] = cands
    deps = {}
    for u in range(g.n):
        ks = set()
        for a in g.neighbors(u):
            f = rep.get(a)
            if f is not None and not f.is_empty:
                ks.add(index.lca(a, u)[0])
        deps[u] = tuple(sorted(ks))
    search = _Search(g, rep, index, modules, candidates, deps, {}, budget)
    grouped: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for u, v in g.non_edges():
        ks = tuple(sorted(set(deps[u]) | set(deps[v])))
        if not ks:
            if not REGIONS.meet(search.region(u), search.region(v)):
                return StarResult(False, reason=f"regions of {u} and {v} never meet")
            continue
        grouped.setdefault(ks, []).append((u, v))
    pairs_by_module: dict[int, list] = {}
    for ks, pairs in grouped.items():
        for k in ks:
            pairs_by_module.setdefault(k, []).append((ks, pairs))
    search.pairs_by_module = pairs_by_module
    if not search.run():
        return StarResult(False, reason="no orientation makes all regions meet", nodes=search.nodes)
    poset = compose(g, index, search.decided)
    if not construct:
        return StarResult(True, poset=poset, nodes=search.nodes)
    psi = poset_construct_partial(poset, rep)
    if psi is None:
        raise RuntimeError("construction failed on an orientation that passed the region test")
    bad = check_poset_representation(poset, psi, rep)
    if bad:
        raise RuntimeError(f"constructed representation fails the checker: {bad[0]}")
    return StarResult(True, poset=poset, representation=psi, nodes=search.nodes)


def rep_ext_star_graph(g: Graph, rep: Mapping[int, PartialPLF], budget: int = DEFAULT_BUDGET):
    """``(poset, representation)`` or None when no extension exists."""
    res = rep_ext_star_graph_explain(g, rep, budget)
    if not res.extendable:
        return None
    return res.poset, res.representation


# --- 3-SAT gadget -------------------------------------------------------------


@dataclass(frozen=True)
class Gadget:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]
    graph: Graph
    rep: dict[int, PartialPLF]

    def x(self, i: int, sign: bool, r: int) -> int:
        """Vertex of variable ``i`` (1-based), group ``+``/``-``, copy ``r`` (1..3)."""
        return 6 * (i - 1) + (0 if sign else 3) + (r - 1)

    def alpha(self, j: int, k: int, r: int) -> int:
        """Copy ``r`` of literal ``k`` of clause ``j`` (all 1-based)."""
        return 6 * self.num_vars + 13 * (j - 1) + 3 * (k - 1) + (r - 1)

    def t(self, j: int, r: int) -> int:
        return 6 * self.num_vars + 13 * (j - 1) + 9 + (r - 1)

    @property
    def p(self) -> int:
        return 6 * self.num_vars + 13 * len(self.clauses)

    @property
    def q(self) -> int:
        return self.p + 1

    def labels(self) -> dict[int, str]:
        """Readable vertex names: X1+.2, A2^3.1, T1.4, p, q."""
        out = {self.p: "p", self.q: "q"}
        for i in range(1, self.num_vars + 1):
            for sign in (True, False):
                for r in range(1, 4):
                    out[self.x(i, sign, r)] = f"X{i}{'+' if sign else '-'}.{r}"
        for j in range(1, len(self.clauses) + 1):
            for k in range(1, 4):
                for r in range(1, 4):
                    out[self.alpha(j, k, r)] = f"A{j}^{k}.{r}"
            for r in range(1, 5):
                out[self.t(j, r)] = f"T{j}.{r}"
        return out


def _block(b: int, n: int) -> tuple[Fraction, Fraction]:
    d = 4 * n + 1
    return Fraction(2 * b - 1, d), Fraction(2 * b, d)


def _thirds(lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    step = (hi - lo) / 3
    return [(lo + r * step, lo + (r + 1) * step) for r in range(3)]


def _literal_block(lit: int, n: int) -> int:
    i = abs(lit)
    return 2 * i - 1 if lit > 0 else 2 * i


def gen_3sat_gadget(num_vars: int, clauses: Sequence[Sequence[int]]) -> Gadget:
    """Graph and partial representation whose extendability encodes satisfiability.

    ``clauses`` use DIMACS literals (``+i`` / ``-i``, 1-based).  Needs at least
    two variables, at least two clauses, and three distinct literals per clause.
    """
    n, m = num_vars, len(clauses)
    if n < 2 or m < 2:
        raise InvalidInstance("the gadget needs at least two variables and two clauses")
    cl = []
    for c in clauses:
        c = tuple(int(l) for l in c)
        if len(c) != 3 or len(set(c)) != 3:
            raise InvalidInstance(f"clause {c} must have three distinct literals")
        if any(l == 0 or abs(l) > n for l in c):
            raise InvalidInstance(f"clause {c} mentions an unknown variable")
        cl.append(c)
    shell = Gadget(n, tuple(cl), Graph(0), {})
    total = 6 * n + 13 * m + 2
    edges = []
    p, q = shell.p, shell.q
    for i in range(1, n + 1):
        for r in range(1, 4):
            for s in range(1, 4):
                edges.append((shell.x(i, True, r), shell.x(i, False, s)))
            edges.append((shell.x(i, True, r), q))
            edges.append((shell.x(i, False, r), q))
    for j in range(1, m + 1):
        groups = [[shell.alpha(j, k, r) for r in range(1, 4)] for k in range(1, 4)]
        ts = [shell.t(j, r) for r in range(1, 5)]
        for a in range(3):
            for b in range(a + 1, 3):
                edges.extend((u, v) for u in groups[a] for v in groups[b])
            edges.extend((u, t) for u in groups[a] for t in ts)
            edges.extend((p, u) for u in groups[a])
        edges.extend((p, t) for t in ts)
    edges.append((p, q))
    g = Graph(total, edges)

    zero, one, two, three, four = (Fraction(c) for c in range(5))
    rep: dict[int, PartialPLF] = {}
    for i in range(1, n + 1):
        for sign in (True, False):
            b = 2 * i - 1 if sign else 2 * i
            for r, (lo, hi) in enumerate(_thirds(*_block(b, n)), start=1):
                rep[shell.x(i, sign, r)] = PartialPLF.constant(zero, lo, hi)
    for j, c in enumerate(cl, start=1):
        blocks = sorted(_block(_literal_block(l, n), n) for l in c)
        for k, lit in enumerate(c, start=1):
            for r, (lo, hi) in enumerate(_thirds(*_block(_literal_block(lit, n), n)), start=1):
                rep[shell.alpha(j, k, r)] = PartialPLF.constant(four, lo, hi)
        cuts = [Fraction(0)] + [x for blk in blocks for x in blk] + [Fraction(1)]
        for r in range(4):
            rep[shell.t(j, r + 1)] = PartialPLF.constant(three, cuts[2 * r], cuts[2 * r + 1])
    rep[p] = PartialPLF.constant(one)
    rep[q] = PartialPLF.constant(two)
    return Gadget(n, tuple(cl), g, rep)


def orientation_from_valuation(gadget: Gadget, valuation: Sequence[bool]) -> Poset:
    """The orientation encoding ``valuation`` (``valuation[i-1]`` is variable ``i``).

    Within each clause the lowest-index true literal's group goes on top (the
    first literal when none is true), the other two below it in index order,
    and the ``T`` group below all three.
    """
    n = gadget.num_vars
    if len(valuation) != n:
        raise InvalidInstance(f"valuation has {len(valuation)} values for {n} variables")
    g = gadget.graph
    rank: dict[int, int] = {}
    for j, c in enumerate(gadget.clauses, start=1):
        true = [k for k, l in enumerate(c, start=1) if valuation[abs(l) - 1] == (l > 0)]
        top = true[0] if true else 1
        order = [k for k in (1, 2, 3) if k != top] + [top]
        for pos, k in enumerate(order):
            for r in range(1, 4):
                rank[gadget.alpha(j, k, r)] = pos + 1
        for r in range(1, 5):
            rank[gadget.t(j, r)] = 0
    arcs = []
    p, q = gadget.p, gadget.q
    for u, v in g.edges:
        if q in (u, v):
            arcs.append((u, v) if v == q else (v, u))
        elif p in (u, v):
            arcs.append((u, v) if u == p else (v, u))
        elif u < 6 * n:
            i = u // 6 + 1
            plus_first = bool(valuation[i - 1])
            u_plus = u % 6 < 3
            arcs.append((u, v) if u_plus == plus_first else (v, u))
        else:
            arcs.append((u, v) if rank[u] < rank[v] else (v, u))
    return Poset(g, arcs)


def gadget_forward_check(gadget: Gadget, valuation: Sequence[bool]) -> bool:
    """Whether the orientation of ``valuation`` passes the pairwise region test."""
    return poset_extendable_cached(orientation_from_valuation(gadget, valuation), gadget.rep)


def gadget_forward_check_uncached(gadget: Gadget, valuation: Sequence[bool]) -> bool:
    ok, _ = poset_extendable_partial(orientation_from_valuation(gadget, valuation), gadget.rep)
    return ok
