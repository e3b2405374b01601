r"""Conditional nonclassicality and steering criteria for two-mode Gaussian
states: canonical forms, general-dyne conditioning, steering criteria, the
reachable region of conditional states, and lossy dynamics.

Covariance matrices are 4x4 in (x1, p1, x2, p2) ordering with vacuum variance
1/2; mode 1 is the steered mode A, mode 2 the measured mode B.
"""

from .canonical import LocalSymplectic, canonicalize, transform_blocks
from .conditioning import (
    ConditionalParams,
    LimitNotMaterializableError,
    MeasurementSpec,
    condition,
    conditional_params_from_cm,
    conditional_params_tmst,
    nonclassical_depth,
    nonclassicality_boundary,
    povm_cm,
)
from .dynamics import (
    ChannelSpec,
    TimePoint,
    evolve,
    noised_tmst_params,
    t_ent,
    t_ns,
    timeline,
)
from .oracle import numeric_discord_min, sweep_measurements, verify_blue_side
from .phase_space import (
    SymplecticInvariants,
    UnphysicalStateError,
    invariants_of,
    is_physical,
    omega,
    ppt_symplectic_eigenvalue,
    symplectic_eigenvalues,
)
from .states import (
    CanonicalForm,
    TmstSpec,
    canonical_cm,
    gqd_sequence,
    state_from_dict,
    swns_cm,
    tmst_cm,
    twb_cm,
)
from .steering import (
    SteeringReport,
    directionality,
    epr_steerable,
    gaussian_discord,
    negativity,
    reid_variances,
    sigma_photon_form,
    sigma_steerability,
    sns,
    sns_invariant,
    steering_report,
    tmst_entangled,
    wigner_remote,
    wns,
    wns_invariant,
)
from .triangoloid import TriangoloidDataset, generate, vertex_check

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "CanonicalForm",
    "ChannelSpec",
    "ConditionalParams",
    "LimitNotMaterializableError",
    "LocalSymplectic",
    "MeasurementSpec",
    "SteeringReport",
    "SymplecticInvariants",
    "TimePoint",
    "TmstSpec",
    "TriangoloidDataset",
    "UnphysicalStateError",
    "canonical_cm",
    "canonicalize",
    "condition",
    "conditional_params_from_cm",
    "conditional_params_tmst",
    "directionality",
    "epr_steerable",
    "evolve",
    "gaussian_discord",
    "generate",
    "gqd_sequence",
    "invariants_of",
    "is_physical",
    "negativity",
    "noised_tmst_params",
    "nonclassical_depth",
    "nonclassicality_boundary",
    "numeric_discord_min",
    "omega",
    "povm_cm",
    "ppt_symplectic_eigenvalue",
    "reid_variances",
    "sigma_photon_form",
    "sigma_steerability",
    "sns",
    "sns_invariant",
    "state_from_dict",
    "steering_report",
    "sweep_measurements",
    "symplectic_eigenvalues",
    "t_ent",
    "t_ns",
    "timeline",
    "tmst_cm",
    "tmst_entangled",
    "transform_blocks",
    "twb_cm",
    "verify_blue_side",
    "vertex_check",
    "wigner_remote",
    "wns",
    "wns_invariant",
]
