"""Finite-field digit sums, delta functions and cyclic DFTs."""

from ._accel import NUMBA_ENABLED, backend_name
from .field import FieldCtx, FieldElem, make_field

__all__ = ["FieldCtx", "FieldElem", "NUMBA_ENABLED", "backend_name", "make_field"]
__version__ = "0.1.0"
