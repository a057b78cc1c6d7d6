"""Building unbiased weighing matrices from column blocks and suitable squares.

The core move: for a weighing matrix W of order n and weight k, the outer
products C_i of its columns tile a t*n-order matrix when arranged by a Latin
square on symbols 1..t, and the result is a weighing matrix of weight k*k.
Suitable squares give pairwise unbiased results.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .latin import LatinSquare, are_suitable, finite_field, is_latin
from .wmatrix import MuwmFamily, WeighingMatrix


@dataclass(frozen=True)
class BlockFamily:
    """Column-block tiles C_1..C_t derived from a base weighing matrix.

    Blocks beyond the base order are zero tiles, so a side-t square with
    t >= n can address them all.
    """

    base: WeighingMatrix
    blocks: tuple

    @property
    def count(self) -> int:
        return len(self.blocks)


def column_blocks(w: WeighingMatrix, t: int) -> BlockFamily:
    """The outer product of column i with itself, for i = 1..n, padded to t."""
    n = w.order
    if t < n:
        raise ValueError(f"need at least n={n} blocks, got t={t}")
    cols = w.matrix.T
    blocks = [np.outer(c, c) for c in cols]
    blocks += [np.zeros((n, n), dtype=np.int64) for _ in range(t - n)]
    for b in blocks:
        b.flags.writeable = False
    return BlockFamily(w, tuple(blocks))


def assemble(bf: BlockFamily, sq: LatinSquare) -> WeighingMatrix:
    """Tile the blocks by the square's symbols into one weighing matrix."""
    if sq.side != bf.count:
        raise ValueError("square side must equal the block count")
    if not is_latin(sq):
        raise ValueError("square must be Latin")
    big = np.block([[bf.blocks[sym - 1] for sym in row] for row in sq.cells])
    return WeighingMatrix.from_array(big, bf.base.weight ** 2)


def muwm_from_msls(w: WeighingMatrix, squares: list[LatinSquare]) -> MuwmFamily:
    """Assemble one matrix per square; pairwise suitable squares give a MUWM family."""
    if not squares:
        raise ValueError("need at least one square")
    t = squares[0].side
    if any(s.side != t for s in squares):
        raise ValueError("squares must share a side")
    for i in range(len(squares)):
        for j in range(i + 1, len(squares)):
            if not are_suitable(squares[i], squares[j]):
                raise ValueError(f"squares {i} and {j} are not suitable")
    bf = column_blocks(w, t)
    members = tuple(assemble(bf, s) for s in squares)
    return MuwmFamily(members)


def companion(w: WeighingMatrix) -> WeighingMatrix:
    """The order-n^2 matrix whose (i, j) block is the outer product w_j w_i^T.

    Unbiased with every square-case assembly from the same base, so it
    extends a family built from side-n suitable squares by one member.
    """
    cols = w.matrix.T
    big = np.block([[np.outer(cols[j], cols[i]) for j in range(w.order)] for i in range(w.order)])
    return WeighingMatrix.from_array(big, w.weight ** 2)


def paley_weighing(p: int) -> WeighingMatrix:
    """The order-(p+1) weight-p weighing matrix from quadratic residues in GF(p).

    The core is the character matrix Q with Q[i][j] = chi(a_i - a_j); a
    bordering row and column of ones complete it. For p = 3 mod 4 the border
    column is negated, making the result skew rather than symmetric.
    """
    if p % 2 == 0:
        raise ValueError("p must be an odd prime power")
    f = finite_field(p)
    squares = f.squares()
    q = np.zeros((p, p), dtype=np.int64)
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            diff = f.add(i, f.neg(j))
            q[i, j] = 1 if diff in squares else -1
    w = np.zeros((p + 1, p + 1), dtype=np.int64)
    w[0, 1:] = 1
    w[1:, 0] = 1 if p % 4 == 1 else -1
    w[1:, 1:] = q
    return WeighingMatrix.from_array(w, p)
