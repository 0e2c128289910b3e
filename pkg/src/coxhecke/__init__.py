"""Exact Coxeter-group, Hecke-algebra and affine type A computations."""

from .coxeter import CoxeterMatrix, CoxeterSystem, GroupElement, InversionSet, Root, new_system, preset
from .hecke import HeckeAlgebra, HeckeElement, WeightFunction
from .laurent import LaurentPoly

__version__ = "0.1.0"
