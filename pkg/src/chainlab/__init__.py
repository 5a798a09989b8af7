"""chainlab: chains, k-Sperner bounds and diagonal slab volumes in the unit cube.

Exact rational arithmetic throughout; floats only for display and for
the Monte Carlo oracle.
"""

from .chain_geometry import (
    AntidiagonalDecomposition,
    AntidiagonalPiece,
    MonotonePolyline,
    antichain_slab_membership,
    antidiagonal_decompose,
    coordinate_sum,
    extremal_chain,
    h1_length,
    polyline,
    segment_length,
    validate_monotone,
)
from .config import Config
from .errors import ChainlabError, DomainError, ResourceLimitError
from .gridposet import (
    ChainOfPoints,
    GridPoint,
    MaxChainResult,
    SymmetricChainDecomposition,
    WeightedGrid,
    is_chain,
    ksperner_bound_via_scd,
    ksperner_max_bruteforce,
    max_weight_chain,
    symmetric_chain_decomposition,
)
from .rational import as_rational, format_rational
from .slab_volume import (
    MonteCarloResult,
    SlabSpec,
    VolumeResult,
    slab_membership,
    slab_volume_exact,
    slab_volume_montecarlo,
)
from .verifier import (
    AdversarialResult,
    CellSet,
    ChainCertificate,
    ClaimCheckReport,
    CoverSets,
    EpsilonParams,
    VerifyReport,
    adversarial_chain_search,
    build_chain_through_cubes,
    claim_check,
    cover_sets,
    discretize_slab,
    end_to_end_verify,
    max_cell_chain_mass_upper,
    measure,
    staircase_mass,
)
from .whitney import (
    CoefficientTable,
    ConvergenceRow,
    WhitneySum,
    convergence_table,
    sum_k_largest,
    whitney_numbers,
    whitney_sum,
)

__version__ = "0.1.0"

__all__ = [
    "AntidiagonalDecomposition",
    "AntidiagonalPiece",
    "AdversarialResult",
    "CellSet",
    "ChainCertificate",
    "ChainOfPoints",
    "ChainlabError",
    "ClaimCheckReport",
    "CoefficientTable",
    "Config",
    "ConvergenceRow",
    "CoverSets",
    "DomainError",
    "EpsilonParams",
    "GridPoint",
    "MaxChainResult",
    "MonotonePolyline",
    "MonteCarloResult",
    "ResourceLimitError",
    "SlabSpec",
    "SymmetricChainDecomposition",
    "VerifyReport",
    "VolumeResult",
    "WeightedGrid",
    "WhitneySum",
    "adversarial_chain_search",
    "antichain_slab_membership",
    "antidiagonal_decompose",
    "as_rational",
    "build_chain_through_cubes",
    "claim_check",
    "convergence_table",
    "coordinate_sum",
    "cover_sets",
    "discretize_slab",
    "end_to_end_verify",
    "extremal_chain",
    "format_rational",
    "h1_length",
    "is_chain",
    "ksperner_bound_via_scd",
    "ksperner_max_bruteforce",
    "max_cell_chain_mass_upper",
    "max_weight_chain",
    "measure",
    "polyline",
    "segment_length",
    "slab_membership",
    "slab_volume_exact",
    "slab_volume_montecarlo",
    "staircase_mass",
    "symmetric_chain_decomposition",
    "validate_monotone",
    "whitney_numbers",
    "whitney_sum",
    "sum_k_largest",
]
