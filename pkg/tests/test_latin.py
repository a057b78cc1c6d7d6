"""Latin squares, suitability, orthogonality, and the GF(q) family."""
import itertools

import pytest

from muwm import LatinSquare, are_orthogonal, are_suitable, is_latin, msls_family

# the printed side-5 pair that seeds the order-20 construction
L1 = LatinSquare((
    (1, 2, 3, 4, 5),
    (2, 3, 4, 5, 1),
    (3, 4, 5, 1, 2),
    (4, 5, 1, 2, 3),
    (5, 1, 2, 3, 4),
))
L2 = LatinSquare((
    (1, 3, 5, 2, 4),
    (2, 4, 1, 3, 5),
    (3, 5, 2, 4, 1),
    (4, 1, 3, 5, 2),
    (5, 2, 4, 1, 3),
))


def cyclic(t):
    return LatinSquare(tuple(
        tuple((i + j) % t + 1 for j in range(t)) for i in range(t)
    ))


def test_is_latin_printed_square():
    assert is_latin(L1) and is_latin(L2)


def test_is_latin_cyclic():
    for t in range(1, 9):
        assert is_latin(cyclic(t))


def test_is_latin_repeated_symbol():
    sq = LatinSquare(((1, 1), (2, 2)))
    assert not is_latin(sq)


def test_symbols_validated():
    with pytest.raises(ValueError):
        LatinSquare(((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        LatinSquare(((1, 2), (2, 1), (1, 2)))


def test_suitable_printed_pair():
    assert are_suitable(L1, L2)


def test_square_never_suitable_with_itself():
    assert not are_suitable(L1, L1)
    assert not are_suitable(cyclic(4), cyclic(4))


def test_suitable_exhaustive_definition():
    # every row-on-row superimposition has exactly one coincidence
    for ra, rb in itertools.product(L1.cells, L2.cells):
        assert sum(x == y for x, y in zip(ra, rb)) == 1


def test_suitable_symmetric():
    fam = msls_family(7)
    assert are_suitable(fam[2], fam[5]) == are_suitable(fam[5], fam[2])


def test_suitable_side_mismatch():
    with pytest.raises(ValueError):
        are_suitable(L1, cyclic(4))


def test_orthogonal_printed_pair():
    assert are_orthogonal(L1, L2)
    pairs = {
        (L1.cells[i][j], L2.cells[i][j]) for i in range(5) for j in range(5)
    }
    assert len(pairs) == 25


def test_orthogonal_self_fails():
    assert not are_orthogonal(L1, L1)


def test_orthogonal_side_mismatch():
    with pytest.raises(ValueError):
        are_orthogonal(L1, cyclic(3))


def test_msls_matches_printed_pair():
    fam = msls_family(5)
    assert fam[0] == L1
    assert fam[1] == L2


def test_msls_q2():
    fam = msls_family(2)
    assert len(fam) == 1
    assert is_latin(fam[0])


def test_msls_q4_suitable_and_orthogonal():
    fam = msls_family(4)
    assert len(fam) == 3
    for a, b in itertools.combinations(fam, 2):
        assert are_suitable(a, b)
        assert are_orthogonal(a, b)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_msls_family_sizes_and_suitability(q):
    fam = msls_family(q)
    assert len(fam) == q - 1
    for sq in fam:
        assert is_latin(sq)
    for a, b in itertools.combinations(fam, 2):
        assert are_suitable(a, b)


def test_msls_unsupported_size():
    with pytest.raises(ValueError):
        msls_family(6)
    with pytest.raises(ValueError):
        msls_family(1)
