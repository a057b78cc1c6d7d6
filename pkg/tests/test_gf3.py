"""GF(3) linear algebra: RREF canonical form, duals, enumeration.

Dimension and count constants for the bundled matrices were fixed by an
independent row reduction (sympy over GF(3)) and a brute-force scan of the
full dual, not by this package.
"""
import itertools

import pytest

from muwm import (
    TernaryCode,
    dual_code,
    enumerate_codewords,
    is_self_orthogonal,
    min_weight,
    rref,
)


def digits_of(path):
    return [[int(ch) for ch in line] for line in path.read_text().split()]


def test_rref_collapses_scalar_multiples():
    c = rref([(1, 1, 0), (2, 2, 0)])
    assert c.dimension == 1
    assert c.generator == ((1, 1, 0),)


def test_rref_zero_row_gives_zero_code():
    c = rref([(0, 0, 0)])
    assert c.dimension == 0
    assert c.length == 3


def test_rref_w13_raw_digit_rows(data_dir):
    # the appendix digit strings read directly as GF(3) vectors
    c = rref(digits_of(data_dir / "w13_5.txt"))
    assert c.length == 13
    assert c.dimension == 6


def test_rref_idempotent(data_dir):
    c = rref(digits_of(data_dir / "w13_5.txt"))
    again = rref(c.generator)
    assert again == c


def test_rref_rejects_ragged_rows():
    with pytest.raises(ValueError):
        rref([(1, 0), (1, 0, 0)])


def test_rref_empty_needs_length():
    with pytest.raises(ValueError):
        rref([])
    assert rref([], length=4).dimension == 0


def test_dual_of_zero_code_is_full_space():
    zero = rref([], length=5)
    d = dual_code(zero)
    assert d.dimension == 5


def test_biduality(data_dir):
    for name in ("w13_5", "w16_46", "w22"):
        c = rref(digits_of(data_dir / f"{name}.txt"))
        assert dual_code(dual_code(c)) == c


def test_dimension_sum(corpus):
    from muwm import code_of

    for fam in corpus:
        c = code_of(fam.members[0])
        assert c.dimension + dual_code(c).dimension == c.length


def test_self_orthogonal_zero_code():
    assert is_self_orthogonal(rref([], length=3))


def test_self_orthogonal_unit_vector_fails():
    assert not is_self_orthogonal(rref([(1, 0, 0)]))


def test_weight9_row_codes_self_orthogonal(corpus):
    # row self-product is 9 = 0 mod 3, cross products 0 or +-3
    from muwm import code_of

    for fam in corpus:
        assert is_self_orthogonal(code_of(fam.members[0]))


def test_enumerate_weight3_full_space_matches_brute_force():
    full = rref([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    got = enumerate_codewords(full, 3, leading_one=True)
    brute = sorted(
        w
        for w in itertools.product((0, 1, 2), repeat=3)
        if sum(x != 0 for x in w) == 3 and next(x for x in w if x) == 1
    )
    assert got == brute
    assert len(got) == 4  # (1,a,b) with a,b in {1,2}


def test_enumerate_zero_code_weight9_empty():
    assert enumerate_codewords(rref([], length=13), 9) == []


def test_s9_of_w13_dual(data_dir):
    c = rref(digits_of(data_dir / "w13_5.txt"))
    s9 = enumerate_codewords(dual_code(c), 9, leading_one=True)
    assert len(s9) == 247


def test_s9_of_w15_dual(data_dir):
    c = rref(digits_of(data_dir / "w15_12.txt"))
    s9 = enumerate_codewords(dual_code(c), 9, leading_one=True)
    assert len(s9) == 1789


def test_leading_one_picks_half(data_dir):
    c = dual_code(rref(digits_of(data_dir / "w13_5.txt")))
    for w in (6, 9, 12):
        both = enumerate_codewords(c, w, leading_one=False)
        half = enumerate_codewords(c, w, leading_one=True)
        assert len(both) == 2 * len(half)


def test_enumerate_output_sorted(data_dir):
    c = dual_code(rref(digits_of(data_dir / "w13_5.txt")))
    words = enumerate_codewords(c, 9, leading_one=True)
    assert words == sorted(words)


def test_enumeration_cap():
    big = rref([[1 if i == j else 0 for j in range(17)] for i in range(17)])
    with pytest.raises(ValueError, match="cap"):
        enumerate_codewords(big, 3)
    with pytest.raises(ValueError, match="cap"):
        min_weight(big)


def test_min_weight_single_row():
    assert min_weight(rref([(1, 1, 1)])) == 3


def test_min_weight_zero_code_rejected():
    with pytest.raises(ValueError):
        min_weight(rref([], length=4))


def test_min_weight_w16_46(corpus):
    from muwm import code_of

    fam = next(f for f in corpus if f.label(0) == "w16_46")
    assert min_weight(code_of(fam.members[0])) == 6


def test_min_weight_bounded_by_rows(corpus):
    # the rows themselves are weight-9 codewords
    from muwm import code_of

    for fam in corpus:
        assert min_weight(code_of(fam.members[0])) <= 9


def test_code_equality_is_generator_equality(data_dir):
    rows = digits_of(data_dir / "w13_5.txt")
    assert rref(rows) == rref(list(reversed(rows)))
    assert rref(rows) != rref(rows[:5])


def test_ternary_code_rejects_non_rref():
    with pytest.raises(ValueError):
        TernaryCode(3, ((2, 0, 0),))
