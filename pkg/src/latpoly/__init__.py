"""Exact lattice polynomial functions on finite chains and small distributive lattices."""

from .decide import characterize, decide_polynomial, decide_sugeno, decide_term
from .lattice import Interval, Lattice, make_chain, make_table_lattice, med
from .poly import CoefMap, FuzzyMeasure, eval_cnf, eval_dnf, eval_simplex, sugeno_eval
from .props import Domain, PropertyReport
from .table import FunctionTable

__all__ = [
    "CoefMap",
    "Domain",
    "FunctionTable",
    "FuzzyMeasure",
    "Interval",
    "Lattice",
    "PropertyReport",
    "characterize",
    "decide_polynomial",
    "decide_sugeno",
    "decide_term",
    "eval_cnf",
    "eval_dnf",
    "eval_simplex",
    "make_chain",
    "make_table_lattice",
    "med",
    "sugeno_eval",
]
