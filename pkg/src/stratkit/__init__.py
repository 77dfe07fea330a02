"""Finite stratified simplicial sets over posets.

Submodules: ``poset``, ``simplicial``, ``homology``, ``stratified``, ``links``,
``factorization``, ``counterexample``, ``io`` and ``cli``.
"""

from __future__ import annotations

from .poset import Flag, Poset, PosetMap, chain, flags, make_poset, regular_flags
from .simplicial import EdgePath, SimplicialSet, SMap, standard
from .stratified import StratMap, StratSSet, strat_boundary, strat_horn, strat_simplex

__version__ = "0.1.0"

__all__ = [
    "Flag",
    "Poset",
    "PosetMap",
    "chain",
    "flags",
    "make_poset",
    "regular_flags",
    "EdgePath",
    "SimplicialSet",
    "SMap",
    "standard",
    "StratMap",
    "StratSSet",
    "strat_boundary",
    "strat_horn",
    "strat_simplex",
]
