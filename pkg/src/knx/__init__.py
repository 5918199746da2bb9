"""knx: exact Kirwan-Ness strata and exactness certification for quantum
Hamiltonian reduction of reductive-group representations."""

from .convex import MinNormCertificate, Polytope, hull_contains, min_norm_point, witnesses_compare
from .engine import (
    CERTIFIED,
    PARAMETRIC,
    VIOLATED,
    ExactnessProblem,
    ExactnessVerdict,
    check,
    cherednik_preset,
    forbidden,
    with_fixed_parameter,
)
from .groups import (
    GroupData,
    LieCharacter,
    TorusCharacter,
    gl,
    group_data,
    negative_root_weight_sum,
    primitive_rescale,
    product,
    sl,
    torus,
    weyl_canonicalize,
)
from .scalars import (
    EpsScalar,
    EpsVector,
    GramForm,
    eps_scalar,
    eps_sign,
    eps_vector,
    pair,
    project_out_span,
    rat,
    rat_str,
    vector,
)
from .semigroup import (
    NumericalSemigroup,
    SetDescription,
    forbidden_set_description,
    membership,
    semigroup_from_generators,
    witness_decomposition,
)
from .shifts import ShiftData, compute_shift, slice_generators_for_normal_weights
from .strata import KNResult, KNStratum, WeightSystem, classify_point, enumerate_kn, weight_system

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
