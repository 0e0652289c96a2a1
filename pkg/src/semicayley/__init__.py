"""Unitary Cayley graphs of finite semirings and of matrix semirings over them."""

from .core import (SemiringProfile, SemiringTable, StructureError, UnitSet,
                   Violation, bool_x2, boolean, builtin, example_bounds, product,
                   profile, trivial, trunc, units, validate, zmod)
from .graph import INF, CayleyGraph, InvariantReport, Skipped
from .matrix import GuardExceeded, Matrix, MatrixUnitSet, matrix_units

__version__ = "0.1.0"
