"""Gamma-extensions and splittings of binary matroids, with exhaustive
connectivity and circuit checks on small instances."""

from .catalog import fano, named
from .connectivity import Separation, find_separation, is_k_connected
from .errors import (
    ColoopError,
    DependentError,
    EmptyError,
    LabelError,
    LoopError,
    MatroidError,
    SizeError,
)
from .extensions import GammaExtension, compose_check, gamma_extension, parallel_extension, splitting
from .gf2 import Gf2Matrix, rank, rref, row_space_equal, standard_form
from .kernels import BACKEND
from .matroid import BinaryMatroid, direct_sum
from .reports import LawReport

__version__ = "0.1.0"
