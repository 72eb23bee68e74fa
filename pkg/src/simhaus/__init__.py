"""Exact Hausdorff distances between finite abstract simplicial complexes."""

from .complex_core import (
    Complex,
    Face,
    all_faces,
    apply_vertex_map,
    barycentric_subdivision,
    complex_from_faces,
    complex_from_json,
    complex_from_lines,
    complex_to_json,
    complex_to_lines,
    connected_components,
    intersect,
    skeleton,
    subdivision_encoding,
)
from .errors import (
    EmptyInputError,
    EmptyIntersectionError,
    InvalidLawError,
    NotInjectiveError,
    ParseError,
    SimhausError,
    TooLargeError,
    UndefinedVertexError,
)
from .exact_minimax import (
    MinimaxProblem,
    MinimaxSolution,
    Rat,
    format_rational,
    harmonic_combine,
    oracle_minimax,
    parse_rational,
    solve_minimax,
)
from .hausdorff_metric import (
    Law,
    directed_distance,
    distance,
    face_distance,
    face_distance_by_components,
    law_distance,
    skeleton_disagreement_bound,
)
from .iso_metric import (
    CanonicalComplex,
    ClassDistanceResult,
    DistanceMatrix,
    canonical_form,
    class_distance,
    class_distance_matrix,
    enumerate_classes,
)

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "Face",
    "Law",
    "Rat",
    "MinimaxProblem",
    "MinimaxSolution",
    "CanonicalComplex",
    "ClassDistanceResult",
    "DistanceMatrix",
    "SimhausError",
    "EmptyInputError",
    "EmptyIntersectionError",
    "InvalidLawError",
    "NotInjectiveError",
    "ParseError",
    "TooLargeError",
    "UndefinedVertexError",
    "all_faces",
    "apply_vertex_map",
    "barycentric_subdivision",
    "canonical_form",
    "class_distance",
    "class_distance_matrix",
    "complex_from_faces",
    "complex_from_json",
    "complex_from_lines",
    "complex_to_json",
    "complex_to_lines",
    "connected_components",
    "directed_distance",
    "distance",
    "enumerate_classes",
    "face_distance",
    "face_distance_by_components",
    "format_rational",
    "harmonic_combine",
    "intersect",
    "law_distance",
    "oracle_minimax",
    "parse_rational",
    "skeleton",
    "skeleton_disagreement_bound",
    "solve_minimax",
    "subdivision_encoding",
]
