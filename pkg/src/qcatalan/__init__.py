"""Exact q-Catalan polynomials, lattice words, and the inversion-shifting
injection that proves their two-index log-convexity, with machine
verification at desk scale."""

from ._kernels import BACKEND
from .catalan import (
    StructuralReport,
    catalan_number,
    q_catalan,
    q_catalan_by_enumeration,
    structural_check,
)
from .inject import (
    InjectionResult,
    InvariantBreachError,
    Scene,
    ShiftAudit,
    SplitCertificate,
    StraddleReport,
    geometric_scene,
    inject,
    shift_identity_audit,
    split_index,
    straddle_decomposition,
)
from .poly import ParseError, Poly, parse
from .render import Style, render_ascii, render_svg
from .verify import (
    AuditReport,
    CritiqueReport,
    GapReport,
    NaiveProductReport,
    SharpnessReport,
    audit_injection,
    corollary_gap,
    definition_critique,
    naive_counterexample,
    report_to_json,
    sharpness_check,
    sweep,
    theorem_gap,
)
from .words import (
    area,
    concat,
    enumerate_matrix,
    enumerate_words,
    inversions,
    path_points,
    prefix_counts,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BACKEND",
    "CritiqueReport",
    "GapReport",
    "InjectionResult",
    "InvariantBreachError",
    "NaiveProductReport",
    "ParseError",
    "Poly",
    "Scene",
    "SharpnessReport",
    "ShiftAudit",
    "SplitCertificate",
    "StraddleReport",
    "StructuralReport",
    "Style",
    "area",
    "audit_injection",
    "catalan_number",
    "concat",
    "corollary_gap",
    "definition_critique",
    "enumerate_matrix",
    "enumerate_words",
    "geometric_scene",
    "inject",
    "inversions",
    "naive_counterexample",
    "parse",
    "path_points",
    "prefix_counts",
    "q_catalan",
    "q_catalan_by_enumeration",
    "render_ascii",
    "render_svg",
    "report_to_json",
    "sharpness_check",
    "shift_identity_audit",
    "split_index",
    "straddle_decomposition",
    "structural_check",
    "sweep",
    "theorem_gap",
    "validate",
]
