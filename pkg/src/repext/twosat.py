"""2-SAT through the implication graph and its strongly connected components."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

Literal = tuple[int, bool]  # (variable, polarity); (x, False) is "not x"


@dataclass
class Cnf2:
    """A conjunction of clauses with at most two literals.

    An empty clause is allowed and makes the formula unsatisfiable.
    """

    num_vars: int
    clauses: list[tuple[Literal, ...]] = field(default_factory=list)

    def add(self, *lits: Literal) -> None:
        if len(lits) > 2:
            raise ValueError("2-CNF clauses have at most two literals")
        for var, _ in lits:
            if not 0 <= var < self.num_vars:
                raise ValueError(f"variable {var} out of range")
        self.clauses.append(tuple((int(v), bool(p)) for v, p in lits))

    def add_false(self) -> None:
        self.clauses.append(())

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[v] == p for v, p in c) for c in self.clauses)


def _node(lit: Literal) -> int:
    var, pol = lit
    return 2 * var + (0 if pol else 1)


def _strong_components(n: int, succ: list[list[int]]) -> list[int]:
    """Iterative Tarjan; components are numbered in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def solve(f: Cnf2) -> list[bool] | None:
    """A satisfying assignment, or None when the formula is unsatisfiable."""
    n = 2 * f.num_vars
    succ: list[list[int]] = [[] for _ in range(n)]
    for clause in f.clauses:
        if not clause:
            return None
        a = clause[0]
        b = clause[1] if len(clause) == 2 else clause[0]
        na, nb = _node(a), _node(b)
        # not a => b, not b => a
        succ[na ^ 1].append(nb)
        succ[nb ^ 1].append(na)
    comp = _strong_components(n, succ)
    out = []
    for var in range(f.num_vars):
        t, fl = comp[2 * var], comp[2 * var + 1]
        if t == fl:
            return None
        # Tarjan numbers sinks first: choose the literal later in topological order
        out.append(t < fl)
    return out


def clauses_from(num_vars: int, clauses: Iterable[Sequence[Literal]]) -> Cnf2:
    f = Cnf2(num_vars)
    for c in clauses:
        if c:
            f.add(*c)
        else:
            f.add_false()
    return f
