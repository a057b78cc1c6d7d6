"""Mutually unbiased weighing matrices: constructions, ternary-code tools,
mate search, spherical geometry, and LP/SDP bounds."""

from .bounds import (
    DistanceSet,
    SdpProblem,
    UnboundedProgramError,
    gegenbauer,
    lp_bound_closed,
    lp_bound_delsarte,
    sdp_assemble,
    sdp_export,
    sdp_parse,
)
from .construct import (
    BlockFamily,
    assemble,
    column_blocks,
    companion,
    muwm_from_msls,
    paley_weighing,
)
from .corpus import load_corpus, parse_matrix, serialize_matrix
from .gf3 import TernaryCode, dual_code, enumerate_codewords, is_self_orthogonal, min_weight, rref
from .latin import LatinSquare, are_orthogonal, are_suitable, is_latin, msls_family
from .matesearch import (
    CompatGraph,
    Mate,
    build_gamma,
    build_mate_graph,
    find_mates,
    max_clique,
    muwm_lower_bound,
)
from .spherical import (
    RelationPartition,
    ScaledVectorSet,
    antipodal_double,
    is_association_scheme,
    orthogonality_srg,
    relation_partition,
    vector_system,
)
from .wmatrix import (
    MuwmFamily,
    WeighingMatrix,
    are_unbiased,
    code_of,
    is_weighing,
    normalize_rows,
    rows_in_dual,
    verify_family,
)

__version__ = "0.1.0"

__all__ = [
    "BlockFamily",
    "CompatGraph",
    "DistanceSet",
    "LatinSquare",
    "Mate",
    "MuwmFamily",
    "RelationPartition",
    "ScaledVectorSet",
    "SdpProblem",
    "TernaryCode",
    "UnboundedProgramError",
    "WeighingMatrix",
    "antipodal_double",
    "are_orthogonal",
    "are_suitable",
    "are_unbiased",
    "assemble",
    "build_gamma",
    "build_mate_graph",
    "code_of",
    "column_blocks",
    "companion",
    "dual_code",
    "enumerate_codewords",
    "find_mates",
    "gegenbauer",
    "is_association_scheme",
    "is_latin",
    "is_self_orthogonal",
    "is_weighing",
    "load_corpus",
    "lp_bound_closed",
    "lp_bound_delsarte",
    "max_clique",
    "min_weight",
    "msls_family",
    "muwm_from_msls",
    "muwm_lower_bound",
    "normalize_rows",
    "orthogonality_srg",
    "parse_matrix",
    "serialize_matrix",
    "paley_weighing",
    "relation_partition",
    "rows_in_dual",
    "rref",
    "sdp_assemble",
    "sdp_export",
    "sdp_parse",
    "vector_system",
    "verify_family",
]
