"""Weighing matrices, unbiasedness checks, and their ternary codes."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import gf3


def _entries_ok(a: np.ndarray) -> bool:
    return bool(np.isin(a, (-1, 0, 1)).all())


def _square_int_array(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    return a


def is_weighing(matrix, k: int) -> bool:
    """True when the square {0, +-1} matrix satisfies M M^T = k I."""
    a = _square_int_array(matrix)
    if not _entries_ok(a):
        raise ValueError("entries must lie in {0, 1, -1}")
    n = a.shape[0]
    return np.array_equal(a @ a.T, k * np.eye(n, dtype=np.int64))


@dataclass(frozen=True)
class WeighingMatrix:
    """An order-n weighing matrix of weight k: entries {0, +-1}, W W^T = k I.

    Validated on construction, so every instance satisfies the definition.
    """

    rows: tuple[tuple[int, ...], ...]
    weight: int

    def __post_init__(self):
        a = _square_int_array(self.rows)
        if not _entries_ok(a):
            raise ValueError("entries must lie in {0, 1, -1}")
        if not np.array_equal(a @ a.T, self.weight * np.eye(a.shape[0], dtype=np.int64)):
            raise ValueError(f"not a weighing matrix of weight {self.weight}")

    @classmethod
    def from_array(cls, matrix, weight: int) -> "WeighingMatrix":
        a = _square_int_array(matrix)
        return cls(tuple(tuple(int(x) for x in row) for row in a), weight)

    @property
    def order(self) -> int:
        return len(self.rows)

    @cached_property
    def matrix(self) -> np.ndarray:
        a = np.array(self.rows, dtype=np.int64)
        a.flags.writeable = False
        return a


def are_unbiased(a: WeighingMatrix, b: WeighingMatrix) -> bool:
    """True when every entry of A B^T lies in {0, +-sqrt(k)}."""
    if a.order != b.order or a.weight != b.weight:
        raise ValueError("matrices must share order and weight")
    s = math.isqrt(a.weight)
    if s * s != a.weight:
        raise ValueError("weight must be a perfect square for unbiasedness")
    prod = a.matrix @ b.matrix.T
    return bool(np.isin(np.abs(prod), (0, s)).all())


@dataclass(frozen=True)
class MuwmFamily:
    """A list of same-order, same-weight weighing matrices, labelled.

    Pairwise unbiasedness is the interesting invariant; construct the family
    freely and check it with verify_family, which reports per-pair results.
    """

    members: tuple[WeighingMatrix, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.members:
            raise ValueError("family needs at least one member")
        n, k = self.members[0].order, self.members[0].weight
        if any(m.order != n or m.weight != k for m in self.members):
            raise ValueError("members must share order and weight")
        if self.labels and len(self.labels) != len(self.members):
            raise ValueError("one label per member")

    @property
    def order(self) -> int:
        return self.members[0].order

    @property
    def weight(self) -> int:
        return self.members[0].weight

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"member {i}"

    def __len__(self) -> int:
        return len(self.members)


def verify_family(fam: MuwmFamily) -> list[dict]:
    """Check every member and every pair; one report entry per check."""
    report = []
    k = fam.weight
    for i, m in enumerate(fam.members):
        ok = is_weighing(m.matrix, k)
        report.append({
            "check": "weighing",
            "subject": fam.label(i),
            "pass": ok,
            "details": f"order {m.order}, weight {k}",
        })
    for i in range(len(fam.members)):
        for j in range(i + 1, len(fam.members)):
            ok = are_unbiased(fam.members[i], fam.members[j])
            report.append({
                "check": "unbiased",
                "subject": f"{fam.label(i)} / {fam.label(j)}",
                "pass": ok,
                "details": f"product entries in {{0, +-{math.isqrt(k)}}}" if ok else "product entry out of range",
            })
    return report


def normalize_rows(w: WeighingMatrix) -> WeighingMatrix:
    """Canonical representative under row negation and row permutation.

    Each row is negated if its first nonzero entry is -1, then rows are
    sorted lexicographically. Unbiasedness is invariant under both moves.
    """
    fixed = []
    for row in w.rows:
        lead = next((x for x in row if x != 0), 0)
        fixed.append(tuple(-x for x in row) if lead < 0 else row)
    return WeighingMatrix(tuple(sorted(fixed)), w.weight)


def code_of(w: WeighingMatrix) -> gf3.TernaryCode:
    """The ternary code spanned by the rows, with -1 read as 2."""
    return gf3.rref([[x % 3 for x in row] for row in w.rows])


def rows_in_dual(b: WeighingMatrix, c: gf3.TernaryCode) -> bool:
    """True when every row of b lies in the dual of c."""
    if b.order != c.length:
        raise ValueError("order must match code length")
    g = c.generator_array()
    if g.shape[0] == 0:
        return True
    rows = np.array([[x % 3 for x in row] for row in b.rows], dtype=np.int64)
    return not np.any((rows @ g.T) % 3)
