"""Compression of identically prepared qudits through symmetric Clebsch-Gordan cascades."""

from .cg import (
    CgIsometry,
    CgUnitary,
    build_cg_d1,
    build_cg_full,
    build_cg_symmetric,
    complete_to_unitary,
)
from .combinatorics import (
    DimensionOverflow,
    GelfandPattern,
    Partition,
    ScaleError,
    add_box_set,
    dim_irrep,
    dim_symmetric,
    enumerate_occupations,
    enumerate_patterns,
    interlaces,
    occupation_index,
    pattern_of_occupation,
    remove_box_set,
)
from .compressor import compress, compress_dense, decompress, estimate_cost
from .states import CompressedState, DenseState, PureQudit
from .wigner import InvalidCombination, WignerContext, reduced_wigner, shifted_weight, sign_s

__version__ = "0.1.0"
