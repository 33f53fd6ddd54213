"""Extending partial representations of function and permutation graphs."""

from repext.checker import check_poset_representation, check_representation, check_segments
from repext.fun_ext import rep_ext_fun, rep_ext_fun_explain
from repext.graph import Graph, InvalidInstance, PartialOrientation, Poset, complement
from repext.mdtree import modular_decomposition
from repext.orient import orient_ext, orient_ext_explain
from repext.partialfun_ext import BudgetExceeded, gen_3sat_gadget, rep_ext_star_graph, rep_ext_star_poset
from repext.perm_ext import graph_from_permutation, rep_ext_perm
from repext.plf import PLF, PartialPLF
from repext.poset_ext import poset_construct, poset_construct_partial, poset_extendable, poset_extendable_partial
from repext.regions import regions_intersect
from repext.twosat import Cnf2, solve

__all__ = [
    "BudgetExceeded",
    "Cnf2",
    "Graph",
    "InvalidInstance",
    "PLF",
    "PartialOrientation",
    "PartialPLF",
    "Poset",
    "check_poset_representation",
    "check_representation",
    "check_segments",
    "complement",
    "gen_3sat_gadget",
    "graph_from_permutation",
    "modular_decomposition",
    "orient_ext",
    "orient_ext_explain",
    "poset_construct",
    "poset_construct_partial",
    "poset_extendable",
    "poset_extendable_partial",
    "regions_intersect",
    "rep_ext_fun",
    "rep_ext_fun_explain",
    "rep_ext_perm",
    "rep_ext_star_graph",
    "rep_ext_star_poset",
    "solve",
]
