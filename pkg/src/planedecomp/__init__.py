"""Symmetric decomposition of finite planar distributions with a given mean
into one-, two- and three-point mean-preserving extreme distributions."""

from .decompose import (
    Decomposition,
    VerificationReport,
    decompose,
    decompose_collinear,
    decompose_general,
    reconstruct,
    verify,
)
from .errors import (
    DecompositionError,
    FactorizationMismatch,
    InternalInconsistency,
    ModeMismatch,
    NegativeMass,
    NonZeroMean,
    NotAntipodal,
    NotContaining,
    NotOnLine,
    TotalMassNotOne,
    ZeroPoint,
)
from .extremes import ExtremeComponent, Kind, dirac_origin, phi_of_three_point, three_point, two_point
from .geometry import (
    Mode,
    Point,
    RayRelation,
    TripleClass,
    TripleTag,
    angular_compare,
    classify_triple,
    det2,
    point,
    ray_relation,
)
from .invariants import InvariantReport, ProbeValue, boundary_phi, phi_at, phi_invariant
from .lottery import EmpiricalSummary, SplitMix64, run, sample_component, sample_point
from .measures import Atom, FiniteDistribution, Shape, SupportProfile, build, mean, profile, recenter

__version__ = "0.1.0"
