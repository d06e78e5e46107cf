"""Exact computations in the frame of the p-adic integers (the Cantor frame)."""

from .balls import (
    Ball,
    BinaryTail,
    Dyadic,
    Relation,
    ball_children,
    ball_compare,
    ball_meet,
    dyadic_mid,
    phi_eval,
)
from .clopen import (
    Clopen,
    clopen_complement,
    clopen_imp,
    clopen_join,
    clopen_leq,
    clopen_meet,
    clopen_normalize,
)
from .compactness import CoverStream, disjointify, finite_subcover, separate
from .errors import (
    BudgetExhausted,
    CantorFrameError,
    LawViolation,
    LiteralSyntaxError,
    PreconditionError,
)
from .intervals import Interval, IntervalSet, iset_is_top, iset_join, iset_meet
from .alexandroff import (
    BallImage,
    Direction,
    ball_image,
    density_witness,
    tphi,
    tphi_ray,
    two_preimages,
)
from .regularity import (
    UniformCoverIndex,
    punctured_open,
    split_atomless,
    star,
    well_inside,
)
from .retraction import (
    BallMap,
    apply_H,
    build_f,
    deinterleave,
    interleave,
    next_uncovered_child,
    retract_check,
)

__version__ = "0.1.0"
