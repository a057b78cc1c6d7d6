"""Conic solving and table checks for exported sparse SDPA problems."""

from .report import ANCHORED_ROWS, UB_SDP, backends_agree, check_table, evaluate_row
from .solver import (
    BACKENDS,
    FLOOR_GUARD,
    SdpaBlock,
    SdpaProblem,
    SolveResult,
    common_range,
    parse_sdpa,
    read_sidecar,
    solve_file,
)

__all__ = [
    "ANCHORED_ROWS",
    "BACKENDS",
    "FLOOR_GUARD",
    "SdpaBlock",
    "SdpaProblem",
    "SolveResult",
    "UB_SDP",
    "backends_agree",
    "check_table",
    "common_range",
    "evaluate_row",
    "parse_sdpa",
    "read_sidecar",
    "solve_file",
]
