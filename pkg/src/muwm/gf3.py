"""Linear algebra over GF(3) for ternary codes.

Field elements are stored as integers {0, 1, 2}; the signed form (0, 1, -1)
used by weighing matrices is translated at module boundaries only.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

Gf3Vector = tuple[int, ...]

ENUMERATION_CAP = 16
_CHUNK_DIM = 12  # enumerate at most 3**12 messages per numpy block


def _as_array(rows) -> np.ndarray:
    a = np.array([list(r) for r in rows], dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("rows must form a rectangular array")
    if a.size and (a.min() < 0 or a.max() > 2):
        raise ValueError("entries must lie in {0, 1, 2}")
    return a


def _rref_array(a: np.ndarray) -> np.ndarray:
    """Reduced row echelon form over GF(3), zero rows dropped."""
    a = a % 3
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        pivots = np.nonzero(a[r:, c])[0]
        if pivots.size == 0:
            continue
        p = r + pivots[0]
        a[[r, p]] = a[[p, r]]
        if a[r, c] == 2:
            a[r] = (2 * a[r]) % 3  # 2 is its own inverse
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        a[others] = (a[others] - np.outer(a[others, c], a[r])) % 3
        r += 1
        if r == nrows:
            break
    return a[:r]


@dataclass(frozen=True)
class TernaryCode:
    """A linear code over GF(3), held in canonical reduced row echelon form.

    Two codes are equal iff their generators are equal, which the RREF
    canonical form makes a complete equivalence test.
    """

    length: int
    generator: tuple[Gf3Vector, ...]

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be at least 1")
        g = _as_array(self.generator) if self.generator else np.zeros((0, self.length), dtype=np.int64)
        if g.size and g.shape[1] != self.length:
            raise ValueError("generator rows must match the code length")
        if g.shape[0] and not np.array_equal(g, _rref_array(g.copy())):
            raise ValueError("generator must be in reduced row echelon form")

    @property
    def dimension(self) -> int:
        return len(self.generator)

    def generator_array(self) -> np.ndarray:
        if not self.generator:
            return np.zeros((0, self.length), dtype=np.int64)
        return np.array(self.generator, dtype=np.int64)


def rref(rows, length: int | None = None) -> TernaryCode:
    """Span of the given GF(3) vectors as a canonical TernaryCode.

    With no rows, `length` must be supplied to fix the ambient space.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    if not rows:
        if length is None:
            raise ValueError("length required when no rows are given")
        return TernaryCode(length, ())
    n = len(rows[0])
    if length is not None and length != n:
        raise ValueError("length disagrees with row width")
    if any(len(r) != n for r in rows):
        raise ValueError("rows must share one length")
    reduced = _rref_array(_as_array(rows))
    return TernaryCode(n, tuple(tuple(int(x) for x in row) for row in reduced))


def dual_code(c: TernaryCode) -> TernaryCode:
    """The dual code {x : <x, g> = 0 for every generator g}."""
    n = c.length
    g = c.generator_array()
    if g.shape[0] == 0:
        eye = np.eye(n, dtype=np.int64)
        return TernaryCode(n, tuple(tuple(int(x) for x in row) for row in eye))
    pivot_cols = [int(np.nonzero(row)[0][0]) for row in g]
    free_cols = [j for j in range(n) if j not in pivot_cols]
    basis = np.zeros((len(free_cols), n), dtype=np.int64)
    for i, f in enumerate(free_cols):
        basis[i, f] = 1
        for r, p in enumerate(pivot_cols):
            basis[i, p] = (-g[r, f]) % 3
    return rref(basis, length=n) if len(basis) else TernaryCode(n, ())


def is_self_orthogonal(c: TernaryCode) -> bool:
    """True when every pair of codewords has zero inner product mod 3."""
    g = c.generator_array()
    return not np.any((g @ g.T) % 3)


def _message_blocks(dim: int):
    """Yield all 3**dim message vectors in chunks, as (rows, dim) arrays."""
    if dim == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    lead_dim = max(dim - _CHUNK_DIM, 0)
    tail_dim = dim - lead_dim
    tail_count = 3**tail_dim
    tail = np.zeros((tail_count, tail_dim), dtype=np.int64)
    idx = np.arange(tail_count)
    for pos in range(tail_dim):
        tail[:, tail_dim - 1 - pos] = idx % 3
        idx //= 3
    for lead in range(3**lead_dim):
        block = np.empty((tail_count, dim), dtype=np.int64)
        v, rem = [], lead
        for _ in range(lead_dim):
            v.append(rem % 3)
            rem //= 3
        block[:, :lead_dim] = np.array(list(reversed(v)), dtype=np.int64)
        block[:, lead_dim:] = tail
        yield block


def enumerate_codewords(c: TernaryCode, target_weight: int, leading_one: bool = False) -> list[Gf3Vector]:
    """All codewords of the given Hamming weight, sorted lexicographically.

    With leading_one=True only words whose first nonzero entry is 1 are kept,
    which picks one member per {w, -w} pair.
    """
    if c.dimension > ENUMERATION_CAP:
        raise ValueError(f"code dimension {c.dimension} exceeds enumeration cap {ENUMERATION_CAP}")
    g = c.generator_array()
    found: list[Gf3Vector] = []
    for block in _message_blocks(c.dimension):
        words = (block @ g) % 3 if g.shape[0] else np.zeros((block.shape[0], c.length), dtype=np.int64)
        weights = np.count_nonzero(words, axis=1)
        words = words[weights == target_weight]
        if leading_one and words.size:
            nz = words != 0
            has = nz.any(axis=1)
            first = np.argmax(nz, axis=1)
            lead = words[np.arange(len(words)), first]
            words = words[has & (lead == 1)]
        found.extend(tuple(int(x) for x in w) for w in words)
    return sorted(found)


def min_weight(c: TernaryCode) -> int:
    """Minimum Hamming weight over the nonzero codewords."""
    if c.dimension == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if c.dimension > ENUMERATION_CAP:
        raise ValueError(f"code dimension {c.dimension} exceeds enumeration cap {ENUMERATION_CAP}")
    g = c.generator_array()
    best = c.length + 1
    for block in _message_blocks(c.dimension):
        words = (block @ g) % 3
        weights = np.count_nonzero(words, axis=1)
        nonzero = weights[weights > 0]
        if nonzero.size:
            best = min(best, int(nonzero.min()))
    return best
