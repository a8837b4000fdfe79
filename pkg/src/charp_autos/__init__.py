"""Exact symbolic computation for order-p automorphisms and G_a-actions on
polynomial rings in characteristic p > 0."""

__version__ = "0.1.0"

from .coeffs import Coeff
from .poly import MultiPoly, VarTable
from .endo import PolyMap
from .gaction import GaAction, SliceData

__all__ = ["Coeff", "MultiPoly", "VarTable", "PolyMap", "GaAction",
           "SliceData", "__version__"]
