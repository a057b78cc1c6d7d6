"""Sparse SDPA input, Slater repair, and conic solves.

The input files encode: minimize c.x subject to sum_i x_i F_i - F_0 PSD
per block, negative block sizes meaning diagonal.  A JSON sidecar next to
each file carries the report transform (size bound = 1 - objective, family
bound = size bound / n - 1) and the exact LP value when one exists.

The moment blocks share nontrivial common nullspaces, so the programs have
no interior and interior-point solvers stall on them as written.  Solving
restricts every semidefinite block to the common range of its matrices
first; the restriction is exact, not a relaxation, because a slack matrix
is automatically zero on the common nullspace.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from pathlib import Path

import cvxpy as cp
import numpy as np

FLOOR_GUARD = 1e-6
BACKENDS = ("CLARABEL", "SCS")

# solver statuses that carry a usable optimum
_OK_STATUSES = {"optimal", "optimal_inaccurate"}


@dataclass(frozen=True)
class SdpaBlock:
    size: int
    diagonal: bool
    # stack[0] is F_0; stack[i] multiplies x_i
    stack: np.ndarray

    def __post_init__(self):
        m, r, c = self.stack.shape
        if r != c or r != self.size:
            raise ValueError("stack shape disagrees with the block size")


@dataclass(frozen=True)
class SdpaProblem:
    comment: str
    variable_count: int
    objective: np.ndarray
    blocks: tuple[SdpaBlock, ...]


def parse_sdpa(path: str | Path) -> SdpaProblem:
    """Read the sparse SDPA format written by the exporter.

    Entries are 1-based (variable 0 is F_0) and give the upper triangle;
    both triangles are filled in on read.
    """
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    comment = ""
    while lines and lines[0].startswith(('"', "*")):
        comment = lines.pop(0).strip('"')
    m = int(lines.pop(0))
    nblocks = int(lines.pop(0))
    sizes = [int(tok) for tok in lines.pop(0).split()]
    if len(sizes) != nblocks:
        raise ValueError(f"expected {nblocks} block sizes, got {len(sizes)}")
    objective = np.array([float(tok) for tok in lines.pop(0).split()])
    if objective.shape != (m,):
        raise ValueError(f"expected {m} objective coefficients")
    stacks = [np.zeros((m + 1, abs(s), abs(s))) for s in sizes]
    for ln in lines:
        var, blk, i, j, val = ln.split()
        var, blk, i, j = int(var), int(blk), int(i), int(j)
        if not (0 <= var <= m and 1 <= blk <= nblocks):
            raise ValueError(f"entry out of range: {ln!r}")
        if not (1 <= i <= abs(sizes[blk - 1]) and 1 <= j <= abs(sizes[blk - 1])):
            raise ValueError(f"entry out of range: {ln!r}")
        stacks[blk - 1][var, i - 1, j - 1] = float(val)
        stacks[blk - 1][var, j - 1, i - 1] = float(val)
    blocks = tuple(
        SdpaBlock(abs(s), s < 0, stack) for s, stack in zip(sizes, stacks)
    )
    return SdpaProblem(comment, m, objective, blocks)


def read_sidecar(path: str | Path) -> dict:
    return json.loads(Path(f"{path}.json").read_text())


def common_range(stack: np.ndarray, rtol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis of the joint range of the symmetric slices.

    The joint nullspace is the nullspace of sum_i A_i^2, which is PSD, so
    an eigendecomposition separates the two exactly up to rounding.
    """
    total = np.einsum("kij,kjl->il", stack, stack)
    vals, vecs = np.linalg.eigh(total)
    top = vals[-1] if len(vals) else 0.0
    if top <= 0:
        return vecs[:, :0]
    return vecs[:, vals > rtol * top]


@dataclass(frozen=True)
class SolveResult:
    """One solved problem, already pushed through the report transform."""

    n: int
    backend: str
    status: str
    objective: float
    bound: float
    floor_bound: int | None

    def __post_init__(self):
        if self.floor_bound is not None and math.isfinite(self.bound):
            low = self.floor_bound - FLOOR_GUARD
            high = self.floor_bound + 1 + FLOOR_GUARD
            if not (low <= self.bound < high):
                raise ValueError(
                    f"floor {self.floor_bound} inconsistent with bound {self.bound}"
                )


def _scaled(problem: SdpaProblem) -> tuple[SdpaProblem, np.ndarray]:
    """Normalize each variable's coefficients to unit peak magnitude.

    Substituting x_i = z_i / s_i keeps the optimal value unchanged while
    bringing entries that span many orders of magnitude close to 1.
    """
    m = problem.variable_count
    scale = np.ones(m)
    for i in range(m):
        peak = max(np.abs(blk.stack[i + 1]).max() for blk in problem.blocks)
        if peak > 0:
            scale[i] = peak
    blocks = []
    for blk in problem.blocks:
        stack = blk.stack.copy()
        for i in range(m):
            stack[i + 1] /= scale[i]
        peak = np.abs(stack).max()
        if peak > 0:
            stack /= peak
        blocks.append(SdpaBlock(blk.size, blk.diagonal, stack))
    objective = problem.objective / scale
    return SdpaProblem(problem.comment, m, objective, tuple(blocks)), scale


def _constraints(problem: SdpaProblem, x: cp.Variable) -> list:
    cons = []
    for blk in problem.blocks:
        if blk.diagonal:
            diag = np.stack([np.diag(s) for s in blk.stack])
            cons.append(diag[1:].T @ x >= diag[0])
            continue
        q = common_range(blk.stack)
        if q.shape[1] == 0:
            continue
        stack = blk.stack if q.shape[1] == blk.size else np.einsum(
            "ri,krc,cj->kij", q, blk.stack, q
        )
        expr = sum(x[i] * stack[i + 1] for i in range(x.size)) - stack[0]
        cons.append(expr >> 0)
    return cons


def _normalize_status(status: str) -> str:
    return (status or "unknown").lower()


def solve_file(path: str | Path, backend: str = "CLARABEL") -> SolveResult:
    """Solve one exported problem and apply the sidecar transform."""
    if backend not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}")
    problem = parse_sdpa(path)
    meta = read_sidecar(path)
    n = int(meta["n"])
    scaled, _ = _scaled(problem)
    x = cp.Variable(scaled.variable_count)
    prob = cp.Problem(cp.Minimize(scaled.objective @ x), _constraints(scaled, x))
    try:
        # floors of exactly-integer optima need the gap driven well past
        # the 1e-6 floor guard; "almost solved" at these tolerances is fine
        # (cvxpy warns about it, but the status field already says so)
        with warnings.catch_warnings():
            warnings.filterwarnings("ignore", message="Solution may be inaccurate")
            if backend == "CLARABEL":
                prob.solve(
                    solver=cp.CLARABEL,
                    max_iter=5000,
                    tol_gap_abs=1e-10,
                    tol_gap_rel=1e-10,
                    tol_feas=1e-9,
                )
            else:
                prob.solve(solver=cp.SCS, eps=1e-9, max_iters=200000)
    except cp.error.SolverError as exc:
        return SolveResult(n, backend, f"solver error: {exc}", math.nan, math.nan, None)
    status = _normalize_status(prob.status)
    if status not in _OK_STATUSES:
        objective = -math.inf if "unbounded" in status else math.nan
        bound = math.inf if "unbounded" in status else math.nan
        return SolveResult(n, backend, status, objective, bound, None)
    objective = float(prob.value)
    size_bound = 1.0 - objective
    bound = size_bound / n - 1.0
    floor_bound = math.floor(bound + FLOOR_GUARD)
    return SolveResult(n, backend, status, objective, bound, floor_bound)
