"""Cyclic model of PG(3,q) in GF(q^4), q = 2^m, with its elliptic quadric and Suzuki-Tits ovoids."""

from .errors import (
    ConditionViolated,
    CyclicPGError,
    DegeneratePair,
    DomainTooLarge,
    NotAPoint,
    NotInSubfield,
    NotIrreducible,
    NotOnOvoid,
    OutOfDomain,
    ParityError,
    ParseError,
    UnknownCheck,
    UnsupportedSize,
    ZeroToNegativePower,
)
from .geometry import (
    Line,
    Plane,
    Subgroup,
    decompose_lambda_u,
    decompose_luv,
    enumerate_lines,
    enumerate_subgroup,
    line_new,
    line_points,
    line_through,
    plane_contains,
    solve_projective,
)
from .gf2e import FieldContext, context_for_q, get_context
from .ovoids import (
    Correlation,
    Ovoid,
    OvoidKind,
    TauMap,
    WqLine,
    absolute_points,
    build_T,
    correlation,
    elliptic_quadric,
    poly_Q0,
    poly_Q1,
)
from .poly import SparsePoly
from .verify import SweepReport, cross_check_all, run_check

__version__ = "0.1.0"
