"""Equiclassical families of plane curves: numerical criteria, Plücker
invariants, and exact computations with rational curves in P^n."""

from .criteria import CATALOG, CriteriaReport, EngineConfig, Mode, Property, VerdictKind, evaluate, strata_graph
from .curves import AssociatedCurve, ParamCurve
from .errors import (
    CurveClassError,
    DegenerateCurve,
    ImproperParametrization,
    InternalInconsistency,
    InvalidCurve,
    NotAdmissible,
    NotIntegrable,
)
from .grassmann import GrassFrame, Integrability, frame_of, hat, integrability_check, recover_underlying
from .invariants import ClassTriple, DeltaKappa, NodalCuspidal

__version__ = "0.1.0"
