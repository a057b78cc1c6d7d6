"""Upper bounds for families of mutually unbiased weighing matrices.

Three layers, all exact until a file is written:

* normalized Gegenbauer polynomials evaluated in rational arithmetic,
* the distance-set linear program, solved exactly by vertex enumeration,
* assembly and export of the three-point moment semidefinite program.

A family of f mutually unbiased weighing matrices of order n and weight
k = scale**2 yields a spherical set of n*(f+1) unit vectors whose pairwise
inner products lie in {1/scale, -1/scale, 0} (the rows of the matrices,
scaled, together with the standard basis).  Bounding the spherical set
therefore bounds f: every bound on the point count M converts to a family
bound M/n - 1.  Functions here return the family-size bound.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Sequence

RationalLike = Fraction | int | str

__all__ = [
    "DistanceSet",
    "SdpBlock",
    "SdpProblem",
    "gegenbauer",
    "lp_bound_closed",
    "lp_bound_delsarte",
    "sdp_assemble",
    "sdp_export",
    "sdp_parse",
]


def gegenbauer(n: int, k: int, x: RationalLike) -> Fraction:
    """Normalized Gegenbauer polynomial for the sphere in R^n, G_k(1) = 1.

    Three-term recurrence: G_0 = 1, G_1 = x, and for k >= 2

        G_k = ((2k + n - 4) x G_{k-1} - (k - 1) G_{k-2}) / (k + n - 3).
    """
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    if k < 0:
        raise ValueError(f"degree must be nonnegative, got {k}")
    x = Fraction(x)
    prev, cur = Fraction(1), x
    if k == 0:
        return prev
    for j in range(2, k + 1):
        prev, cur = cur, ((2 * j + n - 4) * x * cur - (j - 1) * prev) / (j + n - 3)
    return cur


@lru_cache(maxsize=None)
def _gegenbauer_coeffs(n: int, k: int) -> tuple[Fraction, ...]:
    """Monomial coefficients (c_0..c_k) of G_k for the sphere in R^n."""
    polys: list[list[Fraction]] = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    for j in range(2, k + 1):
        a = Fraction(2 * j + n - 4, j + n - 3)
        b = Fraction(j - 1, j + n - 3)
        new = [Fraction(0)] * (j + 1)
        for m, c in enumerate(polys[j - 1]):
            new[m + 1] += a * c
        for m, c in enumerate(polys[j - 2]):
            new[m] -= b * c
        polys.append(new)
    return tuple(polys[k])


def lp_bound_closed(n: int, k: int) -> int:
    """Closed-form family-size bound at order n and weight k.

    Floor of the minimum of (n-1)(n+4)/6 and, when 3k - (n+2) > 0,
    k(n-1)/(3k - (n+2)).
    """
    if n < 2:
        raise ValueError(f"order must be at least 2, got {n}")
    if k < 1:
        raise ValueError(f"weight must be positive, got {k}")
    best = Fraction((n - 1) * (n + 4), 6)
    gap = 3 * k - (n + 2)
    if gap > 0:
        best = min(best, Fraction(k * (n - 1), gap))
    return best.numerator // best.denominator


@dataclass(frozen=True)
class DistanceSet:
    """Distinct rational inner-product values, each strictly inside (-1, 1)."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Sequence[RationalLike]):
        vals = tuple(Fraction(v) for v in values)
        if len(set(vals)) != len(vals):
            raise ValueError("distance values must be pairwise distinct")
        for v in vals:
            if not -1 < v < 1:
                raise ValueError(f"distance {v} outside the open interval (-1, 1)")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


class UnboundedProgramError(ValueError):
    """The linear program has a feasible improving ray."""


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact Gaussian elimination; None if the system is singular."""
    s = len(rhs)
    aug = [list(rows[i]) + [rhs[i]] for i in range(s)]
    for col in range(s):
        pivot = next((r for r in range(col, s) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [e * inv for e in aug[col]]
        for r in range(s):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [e - f * p for e, p in zip(aug[r], aug[col])]
    return [aug[r][s] for r in range(s)]


def _lp_max(
    objective: list[Fraction],
    ge_rows: list[tuple[list[Fraction], Fraction]],
    eq_rows: list[tuple[list[Fraction], Fraction]] | None = None,
) -> Fraction | None:
    """Exact maximum of objective . x over {row . x >= rhs} and equalities.

    Vertex enumeration: every vertex is the solution of s tight rows.  Tiny
    dimensions only.  Returns None when infeasible; raises
    UnboundedProgramError when a feasible improving ray exists.
    """
    eq_rows = eq_rows or []
    s = len(objective)
    rows = [r for r, _ in ge_rows] + [r for r, _ in eq_rows]
    rhss = [b for _, b in ge_rows] + [b for _, b in eq_rows]
    forced = list(range(len(ge_rows), len(ge_rows) + len(eq_rows)))
    if len(forced) > s:
        raise ValueError("more equalities than variables")

    best: Fraction | None = None
    free_choices = itertools.combinations(range(len(ge_rows)), s - len(forced))
    for subset in free_choices:
        idx = list(subset) + forced
        x = _solve_square([rows[i] for i in idx], [rhss[i] for i in idx])
        if x is None:
            continue
        if all(sum(c * v for c, v in zip(row, x)) >= rhs for row, rhs in ge_rows) and all(
            sum(c * v for c, v in zip(row, x)) == rhs for row, rhs in eq_rows
        ):
            value = sum(c * v for c, v in zip(objective, x))
            if best is None or value > best:
                best = value
    if best is None:
        return None

    # Recession test: a ray y with all constraints homogeneously satisfied
    # and objective . y > 0 makes the maximum infinite.  Normalizing the
    # objective to 1 turns ray existence into a small feasibility LP.
    ray_ge = [(row, Fraction(0)) for row, _ in ge_rows]
    ray_eq = [(row, Fraction(0)) for row, _ in eq_rows] + [(list(objective), Fraction(1))]
    ray_rows = [r for r, _ in ray_ge] + [r for r, _ in ray_eq]
    ray_rhss = [b for _, b in ray_ge] + [b for _, b in ray_eq]
    ray_forced = list(range(len(ray_ge), len(ray_ge) + len(ray_eq)))
    if len(ray_forced) <= s:
        for subset in itertools.combinations(range(len(ray_ge)), s - len(ray_forced)):
            idx = list(subset) + ray_forced
            y = _solve_square([ray_rows[i] for i in idx], [ray_rhss[i] for i in idx])
            if y is None:
                continue
            if all(sum(c * v for c, v in zip(row, y)) >= 0 for row, _ in ray_ge) and all(
                sum(c * v for c, v in zip(row, y)) == rhs for row, rhs in ray_eq
            ):
                raise UnboundedProgramError("feasible improving ray found")
    return best


def lp_bound_delsarte(n: int, distances: DistanceSet | Sequence[RationalLike], p_lp: int) -> Fraction:
    """Exact distance-set LP bound on the family size, order n, degrees 1..p_lp.

    Solves max 1 + sum(a_i) over a_i >= 0 with
    sum_i a_i G_k(d_i) >= -1 for k = 1..p_lp, then converts the point-count
    optimum M to the family bound M/n - 1.

    Raises UnboundedProgramError when the degree budget cannot bound the
    distance set (for example a single distance 0 with p_lp = 1).
    """
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    if p_lp < 1:
        raise ValueError(f"need at least one constraint degree, got {p_lp}")
    if not isinstance(distances, DistanceSet):
        distances = DistanceSet(distances)
    s = len(distances)
    objective = [Fraction(1)] * s
    ge_rows: list[tuple[list[Fraction], Fraction]] = []
    for i in range(s):
        row = [Fraction(0)] * s
        row[i] = Fraction(1)
        ge_rows.append((row, Fraction(0)))
    for k in range(1, p_lp + 1):
        ge_rows.append(([gegenbauer(n, k, d) for d in distances], Fraction(-1)))
    total = _lp_max(objective, ge_rows)
    assert total is not None  # a = 0 is always feasible
    return (1 + total) / n - 1


# The moment SDP.  Thirteen nonnegative variables: x_1..x_3 weight the
# degenerate triples (d_a, d_a, 1), x_4..x_13 the ten genuine triples over
# three distances.  Constraint shape is A_0 + sum x_i A_i >= 0 per block.

_TRIPLE_LABELS = (
    "(d1,d1,1)", "(d2,d2,1)", "(d3,d3,1)",
    "(d1,d1,d1)", "(d2,d2,d2)", "(d3,d3,d3)",
    "(d1,d1,d2)", "(d1,d1,d3)", "(d2,d2,d1)",
    "(d2,d2,d3)", "(d3,d3,d1)", "(d3,d3,d2)",
    "(d1,d2,d3)",
)


def _variable_triples(d: tuple[Fraction, Fraction, Fraction]):
    one = Fraction(1)
    d1, d2, d3 = d
    return (
        (d1, d1, one), (d2, d2, one), (d3, d3, one),
        (d1, d1, d1), (d2, d2, d2), (d3, d3, d3),
        (d1, d1, d2), (d1, d1, d3), (d2, d2, d1),
        (d2, d2, d3), (d3, d3, d1), (d3, d3, d2),
        (d1, d2, d3),
    )


def _y_matrix(n: int, k: int, size: int, u: Fraction, v: Fraction, t: Fraction) -> list[list[Fraction]]:
    """Entry (i,j) is u^i v^j ((1-u^2)(1-v^2))^{k/2} G_k((t-uv)/sqrt(...)).

    Evaluated through the homogenized polynomial form: with w = t - uv and
    D = (1-u^2)(1-v^2), the radical factor is sum_m c_m w^m D^{(k-m)/2},
    which is rational because G_k has parity k.  The form is also the
    correct limit at u = 1 or v = 1 (D = 0), where only the m = k term
    could survive and w = 0 kills it for k >= 1.
    """
    w = t - u * v
    dd = (1 - u * u) * (1 - v * v)
    base = Fraction(0)
    for m, c in enumerate(_gegenbauer_coeffs(n - 1, k)):
        if c == 0:
            continue
        assert (k - m) % 2 == 0  # parity of Gegenbauer polynomials
        base += c * w**m * dd ** ((k - m) // 2)
    upow = [u**i for i in range(size)]
    vpow = [v**j for j in range(size)]
    return [[upow[i] * vpow[j] * base for j in range(size)] for i in range(size)]


def _s_matrix(n: int, k: int, size: int, triple: tuple[Fraction, Fraction, Fraction]) -> list[list[Fraction]]:
    """Symmetrized three-point matrix: average of the 6 argument permutations."""
    if k == 0:
        # flat matrix by definition, for every argument triple
        return [[Fraction(1)] * size for _ in range(size)]
    if triple == (1, 1, 1):
        return [[Fraction(0)] * size for _ in range(size)]
    acc = [[Fraction(0)] * size for _ in range(size)]
    for perm in itertools.permutations(triple):
        y = _y_matrix(n, k, size, *perm)
        for i in range(size):
            for j in range(size):
                acc[i][j] += y[i][j]
    return [[e / 6 for e in row] for row in acc]


@dataclass(frozen=True)
class SdpBlock:
    """One PSD block: constant + sum x_i coeffs[i] must be PSD.

    Diagonal blocks store only their diagonal structure implicitly; the
    matrices are full size either way, with off-diagonal entries zero.
    """

    label: str
    size: int
    diagonal: bool
    constant: tuple[tuple[Fraction, ...], ...]
    coeffs: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        for mat in (self.constant, *self.coeffs):
            if len(mat) != self.size or any(len(row) != self.size for row in mat):
                raise ValueError(f"block {self.label}: matrix size mismatch")
            for i in range(self.size):
                for j in range(i):
                    if mat[i][j] != mat[j][i]:
                        raise ValueError(f"block {self.label}: asymmetric matrix")


@dataclass(frozen=True)
class SdpProblem:
    """Moment SDP: maximize 1 + (x_1 + x_2 + x_3)/3 over the blocks' PSD cone.

    The objective value bounds the spherical point count M; the family
    bound is M/n - 1.  Variables are additionally nonnegative (last block).
    """

    n: int
    p_lp: int
    p_sdp: int
    distances: tuple[Fraction, Fraction, Fraction]
    blocks: tuple[SdpBlock, ...]

    @property
    def variable_count(self) -> int:
        return 13

    @property
    def objective_coeffs(self) -> tuple[Fraction, ...]:
        third = Fraction(1, 3)
        return (third, third, third) + (Fraction(0),) * 10

    @property
    def objective_offset(self) -> Fraction:
        return Fraction(1)


def _zeros(size: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * size for _ in range(size)]


def sdp_assemble(
    n: int,
    distances: DistanceSet | Sequence[RationalLike],
    p_lp: int = 5,
    p_sdp: int = 5,
) -> SdpProblem:
    """Build the three-distance moment SDP with exact rational data.

    Blocks, in order: the 2x2 moment-consistency block, a diagonal block of
    the p_lp degree constraints 3 + sum_a x_a G_k(d_a) >= 0, one symmetrized
    three-point block of size p_sdp - k + 1 for each k = 0..p_sdp, and a
    diagonal nonnegativity block for the 13 variables.
    """
    if not isinstance(distances, DistanceSet):
        distances = DistanceSet(distances)
    if len(distances) != 3:
        raise ValueError(f"need exactly three distances, got {len(distances)}")
    if p_lp < 1 or p_sdp < 1:
        raise ValueError("degree parameters must be positive")
    d = distances.values
    triples = _variable_triples(d)
    blocks: list[SdpBlock] = []

    const = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]]
    pair = [[Fraction(0), Fraction(1, 3)], [Fraction(1, 3), Fraction(1, 3)]]
    trip = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(1)]]
    coeffs = tuple(
        tuple(tuple(row) for row in (pair if i < 3 else trip)) for i in range(13)
    )
    blocks.append(
        SdpBlock(
            label="moment",
            size=2,
            diagonal=False,
            constant=tuple(tuple(row) for row in const),
            coeffs=coeffs,
        )
    )

    lp_const = [[Fraction(3) if i == j else Fraction(0) for j in range(p_lp)] for i in range(p_lp)]
    lp_coeffs = []
    for i in range(13):
        mat = _zeros(p_lp)
        if i < 3:
            for row, k in enumerate(range(1, p_lp + 1)):
                mat[row][row] = gegenbauer(n, k, d[i])
        lp_coeffs.append(tuple(tuple(r) for r in mat))
    blocks.append(
        SdpBlock(
            label="degree-rows",
            size=p_lp,
            diagonal=True,
            constant=tuple(tuple(row) for row in lp_const),
            coeffs=tuple(lp_coeffs),
        )
    )

    one = Fraction(1)
    for k in range(0, p_sdp + 1):
        size = p_sdp - k + 1
        constant = _s_matrix(n, k, size, (one, one, one))
        coeffs_k = tuple(
            tuple(tuple(row) for row in _s_matrix(n, k, size, triple))
            for triple in triples
        )
        blocks.append(
            SdpBlock(
                label=f"triple-{k}",
                size=size,
                diagonal=False,
                constant=tuple(tuple(row) for row in constant),
                coeffs=coeffs_k,
            )
        )

    nn_coeffs = []
    for i in range(13):
        mat = _zeros(13)
        mat[i][i] = Fraction(1)
        nn_coeffs.append(tuple(tuple(r) for r in mat))
    blocks.append(
        SdpBlock(
            label="nonneg",
            size=13,
            diagonal=True,
            constant=tuple(tuple(row) for row in _zeros(13)),
            coeffs=tuple(nn_coeffs),
        )
    )

    return SdpProblem(
        n=n,
        p_lp=p_lp,
        p_sdp=p_sdp,
        distances=(d[0], d[1], d[2]),
        blocks=tuple(blocks),
    )


def sdp_export(problem: SdpProblem, path: str | Path) -> Path:
    """Write the problem in sparse SDPA format, plus a JSON sidecar.

    SDPA convention: minimize c.x subject to sum x_i F_i - F_0 PSD per
    block.  Our blocks read A_0 + sum x_i A_i PSD, so F_0 = -A_0 and the
    maximization flips to minimize -(x_1 + x_2 + x_3)/3.  The sidecar keeps
    the report transforms: size bound = 1 - objective, family bound =
    size bound / n - 1, plus the exact LP family bound for cross-checking
    (null when the degree budget leaves the LP unbounded).
    """
    path = Path(path)
    lines = [
        '"three-distance moment SDP, order %d, degrees lp=%d sdp=%d'
        % (problem.n, problem.p_lp, problem.p_sdp)
        + '"',
        str(problem.variable_count),
        str(len(problem.blocks)),
        " ".join(str(-b.size if b.diagonal else b.size) for b in problem.blocks),
        " ".join(_fmt(-c) for c in problem.objective_coeffs),
    ]
    for bidx, block in enumerate(problem.blocks, start=1):
        for i in range(block.size):
            for j in range(i, block.size):
                if block.constant[i][j] != 0:
                    lines.append(
                        f"0 {bidx} {i + 1} {j + 1} {_fmt(-block.constant[i][j])}"
                    )
        for vidx in range(problem.variable_count):
            mat = block.coeffs[vidx]
            for i in range(block.size):
                for j in range(i, block.size):
                    if mat[i][j] != 0:
                        lines.append(
                            f"{vidx + 1} {bidx} {i + 1} {j + 1} {_fmt(mat[i][j])}"
                        )
    path.write_text("\n".join(lines) + "\n")

    try:
        lp_exact: Fraction | None = lp_bound_delsarte(
            problem.n, DistanceSet(problem.distances), problem.p_lp
        )
    except UnboundedProgramError:
        lp_exact = None
    sidecar = {
        "n": problem.n,
        "distances": [str(v) for v in problem.distances],
        "p_lp": problem.p_lp,
        "p_sdp": problem.p_sdp,
        "objective": {
            "sense": "min",
            "size_bound": "1 - objective",
            "family_bound": "size_bound / n - 1",
        },
        "floor_guard": 1e-6,
        "lp_family_bound": None if lp_exact is None else str(lp_exact),
        "lp_family_bound_float": None if lp_exact is None else float(lp_exact),
        "block_labels": [b.label for b in problem.blocks],
    }
    sidecar_path = path.with_name(path.name + ".json")
    sidecar_path.write_text(json.dumps(sidecar, indent=1) + "\n")
    return path


def _fmt(v: Fraction) -> str:
    return format(float(v), ".16e")


def sdp_parse(path: str | Path) -> dict:
    """Read back a sparse SDPA file written by sdp_export.

    Returns variable count, block sizes (negative = diagonal), objective
    coefficients, and entries as {(var, block, row, col): float} with
    1-based indices and var 0 holding the constant matrix.
    """
    tokens: list[str] = []
    nvars = nblocks = None
    sizes: list[int] = []
    objective: list[float] = []
    entries: dict[tuple[int, int, int, int], float] = {}
    stage = 0
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith('"'):
            continue
        parts = line.split()
        if stage == 0:
            nvars = int(parts[0])
            stage = 1
        elif stage == 1:
            nblocks = int(parts[0])
            stage = 2
        elif stage == 2:
            sizes = [int(p) for p in parts]
            if len(sizes) != nblocks:
                raise ValueError("block size line does not match block count")
            stage = 3
        elif stage == 3:
            objective = [float(p) for p in parts]
            if len(objective) != nvars:
                raise ValueError("objective line does not match variable count")
            stage = 4
        else:
            var, blk, row, col = (int(p) for p in parts[:4])
            entries[(var, blk, row, col)] = float(parts[4])
    if stage != 4:
        raise ValueError(f"truncated SDPA file: {path}")
    return {
        "variables": nvars,
        "block_sizes": sizes,
        "objective": objective,
        "entries": entries,
    }
