"""Latin squares, suitability, and the finite-field family of suitable squares."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

# Irreducible polynomials for the supported prime powers, as coefficient
# tuples (c_0, c_1, ..., c_{e-1}) of x^e = -(c_0 + c_1 x + ... ) mod p.
_IRREDUCIBLE = {
    4: (2, (1, 1)),
    8: (2, (1, 1, 0)),
    9: (3, (1, 0)),
    16: (2, (1, 1, 0, 0)),
    25: (5, (2, 0)),
    27: (3, (1, 2, 0)),
    32: (2, (1, 0, 1, 0, 0)),
    49: (7, (1, 0)),
}


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


class FiniteField:
    """GF(q) with elements named 0..q-1.

    Prime fields use integers mod p. Prime powers use polynomial residues
    over a fixed irreducible polynomial; element i has the base-p digits of
    i as coefficients, so 0 and 1 keep their usual meanings. The add and
    multiply tables are verified against the field axioms on construction.
    """

    def __init__(self, q: int):
        if _is_prime(q):
            p, e = q, 1
        elif q in _IRREDUCIBLE:
            p = _IRREDUCIBLE[q][0]
            e = 1
            while p**e < q:
                e += 1
        else:
            raise ValueError(f"unsupported field size {q}")
        self.q = q
        self.p = p
        self._add = [[0] * q for _ in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                self._add[a][b] = self._poly_add(a, b)
                self._mul[a][b] = self._poly_mul(a, b, e)
        self._verify()

    def _digits(self, a: int) -> list[int]:
        out = []
        while a:
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds) -> int:
        out = 0
        for c in reversed(ds):
            out = out * self.p + c
        return out

    def _poly_add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        length = max(len(da), len(db), 1)
        da += [0] * (length - len(da))
        db += [0] * (length - len(db))
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def _poly_mul(self, a: int, b: int, e: int) -> int:
        if e == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (len(da) + len(db))
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        reduction = _IRREDUCIBLE[self.q][1]
        for top in range(len(prod) - 1, e - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for i, r in enumerate(reduction):
                    prod[top - e + i] = (prod[top - e + i] - c * r) % self.p
        return self._undigits(prod[:e])

    def _verify(self):
        q, add, mul = self.q, self._add, self._mul
        rng = range(q)
        assert all(add[a][b] == add[b][a] and mul[a][b] == mul[b][a] for a in rng for b in rng)
        assert all(add[a][0] == a and mul[a][1] == a and mul[a][0] == 0 for a in rng)
        assert all(0 in add[a] for a in rng), "additive inverses"
        assert all(1 in mul[a] for a in rng if a != 0), "multiplicative inverses"
        assert all(
            add[add[a][b]][c] == add[a][add[b][c]]
            and mul[mul[a][b]][c] == mul[a][mul[b][c]]
            and mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
            for a in rng for b in rng for c in rng
        ), "associativity / distributivity"

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return next(b for b in range(self.q) if self._add[a][b] == 0)

    def squares(self) -> set[int]:
        return {self._mul[a][a] for a in range(1, self.q)}


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    return FiniteField(q)


@dataclass(frozen=True)
class LatinSquare:
    """A side-t array over symbols 1..t."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        t = len(self.cells)
        if t == 0 or any(len(r) != t for r in self.cells):
            raise ValueError("cells must be square")
        if any(x < 1 or x > t for r in self.cells for x in r):
            raise ValueError(f"symbols must lie in 1..{t}")

    @property
    def side(self) -> int:
        return len(self.cells)


def is_latin(sq: LatinSquare) -> bool:
    """Every symbol exactly once per row and per column."""
    t = sq.side
    full = set(range(1, t + 1))
    rows_ok = all(set(r) == full for r in sq.cells)
    cols_ok = all({sq.cells[i][j] for i in range(t)} == full for j in range(t))
    return rows_ok and cols_ok


def are_suitable(a: LatinSquare, b: LatinSquare) -> bool:
    """Each row of one square meets each row of the other in exactly one cell.

    A square is never suitable with itself: same-index rows coincide everywhere.
    """
    if a.side != b.side:
        raise ValueError("squares must share a side")
    t = a.side
    for ra in a.cells:
        for rb in b.cells:
            if sum(x == y for x, y in zip(ra, rb)) != 1:
                return False
    return True


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    """Superimposition yields every ordered symbol pair exactly once."""
    if a.side != b.side:
        raise ValueError("squares must share a side")
    t = a.side
    pairs = {(a.cells[i][j], b.cells[i][j]) for i in range(t) for j in range(t)}
    return len(pairs) == t * t


def msls_family(q: int) -> list[LatinSquare]:
    """q-1 pairwise suitable Latin squares of side q from the field GF(q).

    Square m has cell (i, j) = i + m*j in GF(q), shifted to symbols 1..q.
    Any two members are suitable because (m1 - m2) * x = c has one solution.
    """
    f = finite_field(q)
    out = []
    for m in range(1, q):
        cells = tuple(
            tuple(f.add(i, f.mul(m, j)) + 1 for j in range(q))
            for i in range(q)
        )
        out.append(LatinSquare(cells))
    return out
