"""Exact K-theoretic classification of coordinate algebras of noncommutative
two-tori with real multiplication."""

from .classify import (
    AlgebraProfile,
    AlphaFlag,
    Status,
    Verdict,
    ample,
    degree_one_generated,
    eigenlem_report,
    finitely_generated,
    koszul,
    koszul_dual,
    koszul_dual_matrix,
    phase_verdicts,
    profile,
    quadratic,
    realizing_profile,
    verdicts,
    verprop_report,
)
from .construct import AmpleSeqItem, ample_sequence, opposite_matrix, rm_pair
from .errors import RmTorusError
from .lattice import (
    EigenClass,
    KVector,
    SL2Matrix,
    act,
    chi,
    classify_eigen,
    compose,
    cube_identity_check,
    inverse,
    is_primitive,
    left_twist_matrix,
    right_twist_matrix,
    trace,
)
from .quadfield import (
    INFINITY,
    EigenFrame,
    QuadNum,
    QuadOrder,
    continued_fraction,
    eigen_frame,
    fixed_points,
    fractional_linear,
    halfplane_test,
    matrix_of_unit,
    theta_of,
    unit_below_one,
)
from .series import (
    BiRationalFunction,
    RationalFunction,
    coefficients,
    dual_series,
    hilbert_series,
    positivity_scan,
    twist_series_F,
    twist_series_R,
)
from .twist import (
    QuadMatrix,
    TwistOrbit,
    descent_chain,
    h_matrix,
    koszul_dual_dims,
    s_cube_check,
    s_matrix,
    trajectory,
    twist_orbit,
)

__all__ = [name for name in dir() if not name.startswith("_")]
