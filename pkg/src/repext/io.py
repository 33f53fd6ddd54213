"""File formats: JSON graphs, orientations, posets, curve maps, segments, and DIMACS CNF."""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from pathlib import Path

from repext.graph import Graph, InvalidInstance, PartialOrientation, Poset
from repext.perm_ext import segments_from_json, segments_to_json
from repext.plf import PartialPLF, rep_from_json, rep_to_json


def read_json(path: str | Path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInstance(f"{path}: not valid JSON ({exc})") from exc


def write_json(path: str | Path, data) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh)
        fh.write("\n")


def load_graph(path) -> Graph:
    return Graph.from_json(read_json(path))


def load_orientation(path, g: Graph) -> PartialOrientation:
    return PartialOrientation.from_json(g, read_json(path))


def load_rep(path, full: bool = False) -> dict[int, PartialPLF]:
    return rep_from_json(read_json(path), full=full)


def load_segments(path):
    return segments_from_json(read_json(path))


def poset_to_json(p: Poset) -> dict:
    """A poset as its comparability graph plus the ``u < v`` arcs."""
    return {"n": p.n, "less": [list(a) for a in p.arcs()]}


def poset_from_json(data: Mapping) -> Poset:
    try:
        n = int(data["n"])
        pairs = [tuple(int(x) for x in a) for a in data.get("less", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInstance(f"malformed poset JSON: {exc}") from exc
    return Poset.from_relations(n, pairs)


def load_poset(path) -> Poset:
    return poset_from_json(read_json(path))


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Parse DIMACS CNF text into ``(num_vars, clauses)``.

    Comment lines start with ``c``; clauses are zero-terminated and may span
    lines.  Literals beyond the declared variable count are rejected.
    """
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InvalidInstance(f"line {lineno}: bad problem line {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise InvalidInstance(f"line {lineno}: clause before the problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError as exc:
                raise InvalidInstance(f"line {lineno}: bad literal {tok!r}") from exc
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > num_vars:
                raise InvalidInstance(f"line {lineno}: literal {lit} exceeds {num_vars} variables")
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars is None:
        raise InvalidInstance("missing problem line")
    if num_clauses is not None and len(clauses) != num_clauses:
        raise InvalidInstance(f"expected {num_clauses} clauses, found {len(clauses)}")
    return num_vars, clauses


def format_dimacs(num_vars: int, clauses: Sequence[Sequence[int]]) -> str:
    lines = [f"p cnf {num_vars} {len(clauses)}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in clauses]
    return "\n".join(lines) + "\n"


def load_cnf(path) -> tuple[int, list[tuple[int, ...]]]:
    with open(path) as fh:
        return parse_dimacs(fh.read())


__all__ = [
    "format_dimacs",
    "load_cnf",
    "load_graph",
    "load_orientation",
    "load_poset",
    "load_rep",
    "load_segments",
    "parse_dimacs",
    "poset_from_json",
    "poset_to_json",
    "read_json",
    "rep_from_json",
    "rep_to_json",
    "segments_from_json",
    "segments_to_json",
    "write_json",
]
