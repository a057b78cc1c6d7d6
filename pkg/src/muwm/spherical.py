"""Spherical geometry of a family: vector systems, the orthogonality graph,
and association-scheme checks.

A family of f mutually unbiased weighing matrices of order n and weight
scale**2 turns into n(f+1) unit vectors: the standard basis plus the rows
of each member, all kept at integer scale (times 3 for weight 9) so every
inner product stays exact.  True inner products {0, +-1/scale, -1, 1}
appear as integers {0, +-scale, -scale**2, scale**2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from .wmatrix import MuwmFamily

__all__ = [
    "ScaledVectorSet",
    "RelationPartition",
    "SrgParameters",
    "vector_system",
    "orthogonality_srg",
    "antipodal_double",
    "relation_partition",
    "is_association_scheme",
]


@dataclass(frozen=True)
class ScaledVectorSet:
    """Integer vectors of squared norm scale**2, with fibre bookkeeping.

    fibres[i] = (member, row, sign): member 0 is the standard basis, members
    1..f the family matrices in order; sign flips under antipodal doubling.
    """

    dimension: int
    scale: int
    vectors: tuple[tuple[int, ...], ...]
    fibres: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(self.fibres) != len(self.vectors):
            raise ValueError("one fibre tag per vector")
        arr = self.array()
        norms = np.einsum("ij,ij->i", arr, arr)
        if not np.all(norms == self.scale**2):
            raise ValueError(f"every vector must have squared norm {self.scale ** 2}")
        gram = arr @ arr.T
        allowed = (0, self.scale, -self.scale, self.scale**2, -(self.scale**2))
        if not np.isin(gram, allowed).all():
            raise ValueError("inner product outside {0, +-scale, +-scale^2}")

    def array(self) -> np.ndarray:
        a = np.array(self.vectors, dtype=np.int64)
        a = a.reshape(len(self.vectors), self.dimension)
        return a

    def __len__(self) -> int:
        return len(self.vectors)


def vector_system(fam: MuwmFamily) -> ScaledVectorSet:
    """Unit-vector system of a family: scaled standard basis, then all rows.

    Certifies the three-distance property: every off-diagonal integer inner
    product must lie in {0, +-scale}; a violation (some pair failing
    orthonormality or unbiasedness) raises.
    """
    k = fam.weight
    scale = math.isqrt(k)
    if scale * scale != k:
        raise ValueError(f"weight {k} is not a perfect square")
    n = fam.order
    vectors: list[tuple[int, ...]] = []
    fibres: list[tuple[int, int, int]] = []
    for i in range(n):
        row = [0] * n
        row[i] = scale
        vectors.append(tuple(row))
        fibres.append((0, i, 1))
    for m, member in enumerate(fam.members, start=1):
        for r, row in enumerate(member.rows):
            vectors.append(tuple(int(x) for x in row))
            fibres.append((m, r, 1))
    arr = np.array(vectors, dtype=np.int64)
    gram = arr @ arr.T
    off = gram[~np.eye(len(vectors), dtype=bool)]
    if not np.isin(off, (0, scale, -scale)).all():
        bad = sorted(set(int(v) for v in off if v not in (0, scale, -scale)))
        raise ValueError(f"inner-product spectrum violation: found {bad}")
    return ScaledVectorSet(
        dimension=n, scale=scale, vectors=tuple(vectors), fibres=tuple(fibres)
    )


class SrgParameters(NamedTuple):
    points: int
    degree: int
    common_on_edges: int
    common_on_nonedges: int


def orthogonality_srg(vs: ScaledVectorSet) -> SrgParameters | str:
    """Parameters of the orthogonality graph when strongly regular.

    Edges join vectors with inner product zero.  Returns the parameter
    tuple, or a string naming the first violated condition (non-regular,
    no edges, no non-edges, or varying common-neighbor counts).
    """
    arr = vs.array()
    gram = arr @ arr.T
    adj = (gram == 0).astype(np.int64)
    np.fill_diagonal(adj, 0)
    npts = len(vs)
    degrees = adj.sum(axis=1)
    if npts == 0:
        return "empty vector set"
    if degrees.min() != degrees.max():
        return f"not regular: degrees range {degrees.min()}..{degrees.max()}"
    degree = int(degrees[0])
    if degree == 0:
        return "no edges"
    common = (adj.astype(np.float64) @ adj.astype(np.float64)).astype(np.int64)
    offdiag = ~np.eye(npts, dtype=bool)
    edge_mask = (adj == 1) & offdiag
    nonedge_mask = (adj == 0) & offdiag
    if not nonedge_mask.any():
        return "no non-edges"
    lam_vals = common[edge_mask]
    if lam_vals.min() != lam_vals.max():
        return f"common neighbors on edges vary: {lam_vals.min()}..{lam_vals.max()}"
    mu_vals = common[nonedge_mask]
    if mu_vals.min() != mu_vals.max():
        return f"common neighbors on non-edges vary: {mu_vals.min()}..{mu_vals.max()}"
    return SrgParameters(npts, degree, int(lam_vals[0]), int(mu_vals[0]))


def antipodal_double(vs: ScaledVectorSet) -> ScaledVectorSet:
    """The set closed under negation: original vectors, then new negations.

    Doubling an already-doubled set returns an equal set, so the operation
    is idempotent.
    """
    seen = set(vs.vectors)
    vectors = list(vs.vectors)
    fibres = list(vs.fibres)
    for vec, (m, r, s) in zip(vs.vectors, vs.fibres):
        neg = tuple(-x for x in vec)
        if neg not in seen:
            seen.add(neg)
            vectors.append(neg)
            fibres.append((m, r, -s))
    return ScaledVectorSet(
        dimension=vs.dimension,
        scale=vs.scale,
        vectors=tuple(vectors),
        fibres=tuple(fibres),
    )


@dataclass(frozen=True)
class RelationPartition:
    """Class index for every ordered pair of points; class 0 is equality."""

    points: int
    classes: int
    relation: np.ndarray
    class_labels: tuple[str, ...]

    def __post_init__(self):
        rel = self.relation
        if rel.shape != (self.points, self.points):
            raise ValueError("relation matrix shape mismatch")
        if rel.min() < 0 or rel.max() >= self.classes:
            raise ValueError("class index out of range")
        diag_ok = np.all(np.diag(rel) == 0) and np.all((rel == 0) == np.eye(self.points, dtype=bool))
        if not diag_ok:
            raise ValueError("class 0 must be exactly the diagonal")
        if not np.array_equal(rel, rel.T):
            raise ValueError("every relation class must be symmetric")

    def class_size(self, c: int) -> int:
        return int(np.count_nonzero(self.relation == c))


def relation_partition(
    vs: ScaledVectorSet, mode: Literal["four_class", "five_class"]
) -> RelationPartition:
    """Partition ordered pairs of an antipodally doubled system by relation.

    four_class: classes by integer inner product +scale, 0, -scale,
    -scale**2, after the identity.  five_class: the inner-product-zero class
    splits into same-fibre (the two vectors come from the same doubled
    orthonormal basis, i.e. the same cross-polytope) and different-fibre.
    """
    if mode not in ("four_class", "five_class"):
        raise ValueError(f"unknown mode {mode!r}")
    vecs = set(vs.vectors)
    for vec in vs.vectors:
        if tuple(-x for x in vec) not in vecs:
            raise ValueError("vector set is not antipodally closed; double it first")
    arr = vs.array()
    gram = arr @ arr.T
    npts = len(vs)
    s = vs.scale
    rel = np.full((npts, npts), -1, dtype=np.int64)
    np.fill_diagonal(rel, 0)
    members = np.array([f[0] for f in vs.fibres], dtype=np.int64)
    same_fibre = members[:, None] == members[None, :]
    offdiag = ~np.eye(npts, dtype=bool)
    if mode == "four_class":
        assign = [
            (gram == s, 1),
            (gram == 0, 2),
            (gram == -s, 3),
            (gram == -s * s, 4),
        ]
        labels = ("identity", "+scale", "zero", "-scale", "-scale^2")
    else:
        assign = [
            (gram == s, 1),
            ((gram == 0) & same_fibre, 2),
            ((gram == 0) & ~same_fibre, 3),
            (gram == -s, 4),
            (gram == -s * s, 5),
        ]
        labels = (
            "identity",
            "+scale",
            "zero same fibre",
            "zero different fibre",
            "-scale",
            "-scale^2",
        )
    for mask, idx in assign:
        rel[mask & offdiag] = idx
    if np.any(rel < 0):
        i, j = np.argwhere(rel < 0)[0]
        raise ValueError(
            f"pair with unexpected inner product {int(gram[i, j])} at ({int(i)}, {int(j)})"
        )
    return RelationPartition(
        points=npts, classes=len(labels), relation=rel, class_labels=labels
    )


def is_association_scheme(rp: RelationPartition) -> tuple[bool, list | None]:
    """Intersection-number test: for classes (h, i, j), the number of points
    z with (x, z) in class i and (z, y) in class j must not depend on the
    choice of (x, y) in class h.

    Returns (True, table) with table[h][i][j] when the axioms hold, else
    (False, None).  Size-capped at 1024 points; counts go through float
    matrix products, exact below 2**53.
    """
    if rp.points > 1024:
        raise ValueError(f"{rp.points} points exceed the 1024-point cap")
    c = rp.classes
    indicators = [
        (rp.relation == idx).astype(np.float64) for idx in range(c)
    ]
    table: list[list[list[int]]] = [
        [[0] * c for _ in range(c)] for _ in range(c)
    ]
    masks = [rp.relation == h for h in range(c)]
    for i in range(c):
        for j in range(c):
            counts = indicators[i] @ indicators[j]
            for h in range(c):
                vals = counts[masks[h]]
                if vals.size == 0:
                    table[h][i][j] = 0
                    continue
                lo, hi = vals.min(), vals.max()
                if lo != hi:
                    return False, None
                table[h][i][j] = int(lo)
    return True, table
