"""Center triviality of twisted group algebras of finite abelian groups."""

from .center import (
    CenterReport,
    RegularSubgroup,
    analyze,
    center_trivial_by_theorem,
    greg_brute_force,
    greg_from_kernel,
    mixed_rank_brute_force,
    tensor_combine,
)
from .cocycle import CocycleTable, derive_pairing, realize_cocycle, validate_cocycle
from .errors import *  # noqa: F401,F403
from .group_shape import (
    GeneratorId,
    PGroupShape,
    enumerate_elements,
    group_order,
    lift,
    project,
    validate_shape,
)
from .pairing import (
    NormalizedMatrix,
    PairingMatrix,
    commutation_phase,
    normalize,
    random_pairing,
    validate_pairing_matrix,
)
from .ring_zpn import Modulus, Residue, unit_inverse, valuation
from .solver import DiagonalForm, KernelDescription, count_solutions_brute, diagonalize, kernel

__version__ = "0.1.0"
