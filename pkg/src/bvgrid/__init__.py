"""Bounded-variation functionals, joint-variation metrics, and
precompactness certificates for grid-sampled functions valued in metric
semigroups."""

from .errors import (
    BvgridError,
    ConfigError,
    DimensionMismatchError,
    EndpointError,
    GeneratorError,
    InputError,
    InstanceMismatchError,
    MalformedFileError,
    NonMonotoneGridError,
    PartitionIndexError,
    SizeGuardError,
)
from .gridfn import (
    GeneratorSpec,
    Grid1D,
    GridFunction2D,
    PartitionPair,
    function_from_json,
    function_to_json,
    load_function,
    save_function,
    synth_function,
)
from .partition_search import SupResult, brute_force_sup, enumerate_partitions, solve_sup
from .precompactness import (
    EpsilonNet,
    EquivariationCertificate,
    FunctionFamily,
    NetVerification,
    ProductTuple,
    build_epsilon_net,
    equivariation_defect,
    find_equivariation_witness,
    partition_image,
    pointwise_net,
    product_rho_prime,
    verify_epsilon_net,
)
from .semigroup import SemigroupElement, SemigroupInstance, verify_semigroup_laws
from .variation import (
    FamilyConfig,
    VariationBreakdown,
    joint_variation_on_partition,
    rho,
    rho_on_partition,
    variation_on_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BvgridError",
    "ConfigError",
    "DimensionMismatchError",
    "EndpointError",
    "EpsilonNet",
    "EquivariationCertificate",
    "FamilyConfig",
    "FunctionFamily",
    "GeneratorSpec",
    "GeneratorError",
    "Grid1D",
    "GridFunction2D",
    "InputError",
    "InstanceMismatchError",
    "MalformedFileError",
    "NetVerification",
    "NonMonotoneGridError",
    "PartitionIndexError",
    "PartitionPair",
    "ProductTuple",
    "SemigroupElement",
    "SemigroupInstance",
    "SizeGuardError",
    "SupResult",
    "VariationBreakdown",
    "brute_force_sup",
    "build_epsilon_net",
    "enumerate_partitions",
    "equivariation_defect",
    "find_equivariation_witness",
    "function_from_json",
    "function_to_json",
    "joint_variation_on_partition",
    "load_function",
    "partition_image",
    "pointwise_net",
    "product_rho_prime",
    "rho",
    "rho_on_partition",
    "save_function",
    "solve_sup",
    "synth_function",
    "variation_on_partition",
    "verify_epsilon_net",
    "verify_semigroup_laws",
]
