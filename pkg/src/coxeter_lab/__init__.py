"""Exact Coxeter-transformation dynamics, standard characters and separating functions on trees."""

from .coxeter import coxeter, coxeter_t, reflect, singularity
from .graph_core import bipartition, build_star, classify, make_wood, parse_wood
from .gvector import GVector
from .sepfunc import SepParam, WeightSeq, enumerate_K, enumerate_N, is_separating, rho, rho_vec

__all__ = [
    "GVector", "SepParam", "WeightSeq", "bipartition", "build_star", "classify", "coxeter",
    "coxeter_t", "enumerate_K", "enumerate_N", "is_separating", "make_wood", "parse_wood",
    "reflect", "rho", "rho_vec", "singularity",
]
