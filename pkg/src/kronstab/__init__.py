"""Exact Littlewood-Richardson, Kronecker and reduced Kronecker coefficients.

The package computes these structure constants with exact integer
arithmetic and uses them to verify, exhaustively over bounded parameter
boxes, a family of stability and vanishing statements about partition
algebra branching multiplicities.

Layout:

* partitions - partition arithmetic: padding, enumeration, strips
* characters - symmetric group characters (Murnaghan-Nakayama)
* littlewood_richardson - LR coefficients by tableau enumeration
* kronecker - Kronecker and reduced Kronecker coefficients
* stability - exhaustive verification sweeps producing reports
* store - persistent memo store of computed coefficients
* cli - the ``kronstab`` command-line tool
"""

from . import characters, kronecker, littlewood_richardson, partitions, stability
from .characters import (
    CharacterTable,
    DEFAULT_DEGREE_CAP,
    character_table,
    character_value,
)
from .errors import (
    DegreeTooLarge,
    InvalidPartition,
    KronstabError,
    NotPaddable,
    NotStabilized,
    SizeMismatch,
    StoreCorrupt,
)
from .kronecker import (
    kronecker_coeff,
    reduced_kronecker,
    reduced_kronecker_limit,
    reduced_kronecker_onerow,
)
from .littlewood_richardson import lr_coeff, lr_coeff3, one_row, pieri_coeff
from .partitions import (
    CycleType,
    EMPTY,
    Partition,
    conjugate,
    enumerate_padded_index_set,
    enumerate_partitions,
    horizontal_strip_removals,
    pad,
    parse_partition,
    partitions_up_to,
)
from .stability import (
    TauMultiplicityQuery,
    VerificationReport,
    check_formula,
    check_k_eq_lr,
    check_kroneckerstab,
    check_lrflip,
    check_oracle_equiv,
    check_prop412,
    check_prop48,
    check_size_vanishing,
    check_triangle,
    induced_multiplicity,
    run_all_checks,
    run_check,
    tau_multiplicity,
)
from .store import CoefficientStore, compute_coefficient

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every in-process memo cache (character, LR, Kronecker)."""
    partitions._clear_caches()
    characters._clear_caches()
    littlewood_richardson._clear_caches()
    kronecker._clear_caches()
