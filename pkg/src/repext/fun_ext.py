"""Extending partial representations of function graphs (given as comparability graphs).

Pipeline: validate the instance, decompose the graph into modules, shrink the
decomposition so that each module keeps at most two admissible orientations,
turn the "every two incomparable regions meet" condition into 2-SAT over one
variable per two-way module, and finally build curves for the chosen poset.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field

from repext.checker import check_representation
from repext.graph import Graph, InvalidInstance, Poset
from repext.mdtree import SERIAL, MDNode, leaf, modular_decomposition
from repext.orient import orient_ext
from repext.plf import PLF, PartialPLF, curves_intersect, strictly_below
from repext.poset_ext import poset_construct
from repext.quotients import (
    TreeIndex,
    compose,
    curve_constraints,
    first_candidates,
    linear_quotient,
)
from repext.regions import Region, make_region, regions_intersect
from repext.twosat import Cnf2, solve


def validate_instance(g: Graph, rep: Mapping[int, PartialPLF]) -> list[str]:
    """Violations of the partial-representation contract (empty when valid)."""
    out = []
    for v, f in rep.items():
        if not 0 <= v < g.n:
            out.append(f"vertex {v} out of range for n={g.n}")
        elif not f.is_full:
            out.append(f"vertex {v}: function not defined on [0, 1]")
    if out:
        return out
    verts = sorted(rep)
    for i, a in enumerate(verts):
        for b in verts[i + 1 :]:
            fa, fb = rep[a], rep[b]
            if g.has_edge(a, b):
                if not (strictly_below(fa, fb) or strictly_below(fb, fa)):
                    out.append(f"adjacent pair {a},{b}: curves are not strictly ordered")
            elif curves_intersect(fa, fb) is None:
                out.append(f"non-adjacent pair {a},{b}: curves do not intersect")
    return out


@dataclass
class Reduction:
    """Outcome of shrinking the decomposition tree.

    ``tree`` is the decomposition of the graph induced on ``kept`` (vertex
    labels unchanged).  ``origin`` maps ``id`` of each reduced internal node to
    the original node and the original indices of its surviving children.
    ``removed`` maps ``id`` of an original serial node to the indices of its
    dropped children and the rule that dropped them ("keep-one" or "between").
    """

    original: MDNode
    kept: frozenset[int]
    tree: MDNode
    origin: dict[int, tuple[MDNode, tuple[int, ...]]]
    removed: dict[int, tuple[tuple[int, ...], str]]
    collapsed: list[tuple[MDNode, int]]


def reduce(g: Graph, rep: Mapping[int, PartialPLF], tree: MDNode) -> Reduction:
    """Collapse non-represented modules and prune non-represented serial children.

    Non-represented non-singleton modules shrink to their smallest vertex; a
    serial module keeps its first non-represented child when it has a single
    represented child, and drops them all when it has two or more.
    """
    R = set(rep)
    origin: dict[int, tuple[MDNode, tuple[int, ...]]] = {}
    removed: dict[int, tuple[tuple[int, ...], str]] = {}
    collapsed: list[tuple[MDNode, int]] = []

    def represented(node: MDNode) -> bool:
        return not R.isdisjoint(node.vertices)

    def rec(node: MDNode) -> MDNode:
        if node.is_leaf:
            return node
        if not represented(node):
            collapsed.append((node, node.min_vertex))
            return leaf(node.min_vertex)
        idx = list(range(len(node.children)))
        if node.kind == SERIAL:
            rep_kids = [i for i in idx if represented(node.children[i])]
            non = [i for i in idx if not represented(node.children[i])]
            if len(rep_kids) >= 2 and non:
                removed[id(node)] = (tuple(non), "between")
                idx = rep_kids
            elif len(non) >= 2:
                removed[id(node)] = (tuple(non[1:]), "keep-one")
                idx = sorted(rep_kids + non[:1])
        kids = tuple(rec(node.children[i]) for i in idx)
        new = MDNode(frozenset().union(*(k.vertices for k in kids)), node.kind, kids)
        origin[id(new)] = (node, tuple(idx))
        return new

    red = rec(tree)
    return Reduction(tree, red.vertices, red, origin, removed, collapsed)


@dataclass
class ModuleChoices:
    """Admissible quotient orientations of every internal node of the reduced tree.

    ``fixed[k]`` is the unique orientation of node ``k``; ``variables[k]`` is
    ``(var index, (orientation if true, orientation if false))``.
    """

    fixed: dict[int, Poset] = field(default_factory=dict)
    variables: dict[int, tuple[int, tuple[Poset, Poset]]] = field(default_factory=dict)
    impossible: int | None = None

    def orientation(self, k: int, assignment) -> Poset:
        if k in self.fixed:
            return self.fixed[k]
        var, (yes, no) = self.variables[k]
        return yes if assignment[var] else no


def count_orientations(node: MDNode, g: Graph, cons: set[tuple[int, int]]) -> list[Poset]:
    """The admissible orientations of one module: zero, one or two of them."""
    found = first_candidates(node, g, cons, 3)
    if len(found) > 2:
        raise AssertionError(f"{node.kind} node {sorted(node.vertices)} has more than two admissible orientations")
    return found


def module_choices(g: Graph, rep: Mapping[int, PartialPLF], red: Reduction, index: TreeIndex) -> ModuleChoices:
    cons = curve_constraints(index, g, rep, red.kept)
    out = ModuleChoices()
    for k, node in enumerate(index.nodes):
        if node.is_leaf:
            continue
        opts = count_orientations(node, g, cons.get(k, set()))
        if not opts:
            out.impossible = k
            return out
        if len(opts) == 1:
            out.fixed[k] = opts[0]
        else:
            out.variables[k] = (len(out.variables), (opts[0], opts[1]))
    return out


class RegionOracle:
    """Regions of reduced-graph vertices under partial valuations, with caching."""

    def __init__(self, g: Graph, rep: Mapping[int, PartialPLF], index: TreeIndex, choices: ModuleChoices, kept):
        self.g, self.rep, self.index, self.choices = g, rep, index, choices
        self.kept = kept
        self._cache: dict[tuple[int, bool | None], Region] = {}
        self._deps: dict[int, int | None] = {}

    def dependency(self, u: int) -> int | None:
        """The variable the region of ``u`` depends on, or None."""
        if u not in self._deps:
            found = set()
            if u not in self.rep:
                for a in self.g.neighbors(u):
                    if a in self.rep and a in self.kept:
                        k, _, _ = self.index.lca(a, u)
                        if k in self.choices.variables:
                            found.add(self.choices.variables[k][0])
            if len(found) > 1:
                raise AssertionError(f"region of {u} depends on {len(found)} variables")
            self._deps[u] = found.pop() if found else None
        return self._deps[u]

    def region(self, u: int, value: bool | None) -> Region:
        key = (u, value)
        if key not in self._cache:
            self._cache[key] = self._build(u, value)
        return self._cache[key]

    def _build(self, u: int, value: bool | None) -> Region:
        if u in self.rep:
            return make_region(self.rep[u])
        above, below = [], []
        var = self.dependency(u)
        for a in self.g.neighbors(u):
            if a not in self.rep or a not in self.kept:
                continue
            k, ia, iu = self.index.lca(a, u)
            if k in self.choices.fixed:
                q = self.choices.fixed[k]
            else:
                v_idx, (yes, no) = self.choices.variables[k]
                assert v_idx == var
                q = yes if value else no
            (above if q.less(ia, iu) else below).append(self.rep[a])
        return make_region(None, above, below)


@dataclass
class FunExtResult:
    extendable: bool
    reason: str = ""
    poset: Poset | None = None
    representation: dict[int, PLF] | None = None
    failing_pair: tuple[int, int] | None = None
    num_variables: int = 0
    num_clauses: int = 0
    reduction: Reduction | None = None


def build_formula(g: Graph, red: Reduction, regions: RegionOracle, num_vars: int) -> tuple[Cnf2, tuple[int, int] | None]:
    """Clauses forbidding every valuation under which two non-adjacent regions miss.

    Also returns the first pair that fails under every valuation, if any.
    """
    f = Cnf2(num_vars)
    kept = sorted(red.kept)
    dead = None
    for i, u in enumerate(kept):
        for v in kept[i + 1 :]:
            if g.has_edge(u, v) or (u in regions.rep and v in regions.rep):
                continue
            du, dv = regions.dependency(u), regions.dependency(v)
            vars_ = sorted({d for d in (du, dv) if d is not None})
            failing = []
            for bits in itertools.product((True, False), repeat=len(vars_)):
                val = dict(zip(vars_, bits))
                ru = regions.region(u, val.get(du))
                rv = regions.region(v, val.get(dv))
                if regions_intersect(ru, rv) is None:
                    failing.append(bits)
            if len(failing) == 2 ** len(vars_) and dead is None:
                dead = (u, v)
            for bits in failing:
                if vars_:
                    f.add(*[(x, not b) for x, b in zip(vars_, bits)])
                else:
                    f.add_false()
    return f, dead


def _reinstated_orientation(g: Graph, rep, red: Reduction, rindex: TreeIndex, choices: ModuleChoices, assignment) -> Poset:
    """Transitive orientation of the whole graph extending the reduced solution."""
    full_index = TreeIndex(red.original)
    by_original: dict[int, tuple[Poset, tuple[int, ...]]] = {}
    for k, node in enumerate(rindex.nodes):
        if node.is_leaf:
            continue
        orig, kids = red.origin[id(node)]
        by_original[id(orig)] = (choices.orientation(k, assignment), kids)
    choice: dict[int, Poset] = {}
    for k, node in enumerate(full_index.nodes):
        if node.is_leaf or id(node) not in by_original:
            continue
        q, kids = by_original[id(node)]
        if node.kind != SERIAL:
            choice[k] = q
            continue
        order = [kids[i] for i in q.topological_order()]
        dropped, rule = red.removed.get(id(node), ((), ""))
        if rule == "keep-one":
            # next to the surviving non-represented child
            pos = next(i for i, c in enumerate(order) if not set(rep).intersection(node.children[c].vertices))
            order[pos + 1 : pos + 1] = list(dropped)
        elif rule == "between":
            order[1:1] = list(dropped)
        choice[k] = linear_quotient(order)
    return compose(g, full_index, choice)


def rep_ext_fun_explain(g: Graph, rep: Mapping[int, PartialPLF], construct: bool = True) -> FunExtResult:
    """Decide (and optionally build) an extension of ``rep`` to all of ``g``.

    Raises :class:`InvalidInstance` when ``rep`` is not a partial representation.
    """
    problems = validate_instance(g, rep)
    if problems:
        raise InvalidInstance(problems[0])
    rep = {v: PLF.from_partial(f) for v, f in rep.items()}
    if g.n == 0:
        return FunExtResult(True, poset=Poset(g, ()), representation={})
    if orient_ext(g) is None:
        return FunExtResult(False, reason="graph is not a comparability graph")
    tree = modular_decomposition(g)
    red = reduce(g, rep, tree)
    rindex = TreeIndex(red.tree)
    choices = module_choices(g, rep, red, rindex)
    if choices.impossible is not None:
        node = rindex.node(choices.impossible)
        return FunExtResult(
            False, reason=f"no orientation of {node.kind} module {sorted(node.vertices)} respects the curves", reduction=red
        )
    regions = RegionOracle(g, rep, rindex, choices, red.kept)
    formula, dead = build_formula(g, red, regions, len(choices.variables))
    assignment = solve(formula)
    stats = dict(num_variables=formula.num_vars, num_clauses=len(formula.clauses), reduction=red)
    if assignment is None:
        reason = "regions of a non-adjacent pair never meet" if dead else "2-SAT formula is unsatisfiable"
        return FunExtResult(False, reason=reason, failing_pair=dead, **stats)
    poset = _reinstated_orientation(g, rep, red, rindex, choices, assignment)
    if not construct:
        return FunExtResult(True, poset=poset, **stats)
    psi = poset_construct(poset, rep)
    if psi is None:
        raise RuntimeError("construction failed on an orientation that passed the region test")
    bad = check_representation(g, psi, rep)
    if bad:
        raise RuntimeError(f"constructed representation fails the checker: {bad[0]}")
    return FunExtResult(True, poset=poset, representation=psi, **stats)


def rep_ext_fun(g: Graph, rep: Mapping[int, PartialPLF]) -> dict[int, PLF] | None:
    """A representation of ``g`` extending ``rep``, or None when none exists."""
    return rep_ext_fun_explain(g, rep).representation


def fun_extendable(g: Graph, rep: Mapping[int, PartialPLF]) -> bool:
    return rep_ext_fun_explain(g, rep, construct=False).extendable
