"""Weighing-matrix axioms, unbiasedness, normalization, code bridge."""
import random

import numpy as np
import pytest

from muwm import (
    MuwmFamily,
    WeighingMatrix,
    are_unbiased,
    code_of,
    dual_code,
    is_weighing,
    normalize_rows,
    rows_in_dual,
    rref,
    verify_family,
)


def member(by_label, family, idx=0):
    return by_label[family].members[idx]


def signed_row_permutation(w, rng):
    order = list(range(w.order))
    rng.shuffle(order)
    signs = [rng.choice((1, -1)) for _ in range(w.order)]
    rows = tuple(
        tuple(signs[i] * x for x in w.rows[order[i]]) for i in range(w.order)
    )
    return WeighingMatrix(rows, w.weight)


def test_is_weighing_identity():
    assert is_weighing(np.eye(4, dtype=int), 1)


def test_is_weighing_w13(by_label):
    assert is_weighing(member(by_label, "w13_5").matrix, 9)


def test_is_weighing_all_ones_fails():
    assert not is_weighing([[1, 1], [1, 1]], 2)


def test_is_weighing_rejects_bad_entries():
    with pytest.raises(ValueError):
        is_weighing([[2, 0], [0, 2]], 4)


def test_is_weighing_rejects_non_square():
    with pytest.raises(ValueError):
        is_weighing([[1, 0, 0], [0, 1, 0]], 1)


def test_weighing_matrix_validates_on_construction():
    with pytest.raises(ValueError):
        WeighingMatrix(((1, 1), (1, 1)), 2)


def test_unbiased_appendix_pair(by_label):
    fam = by_label["w13_5"]
    assert are_unbiased(fam.members[0], fam.members[1])


def test_unbiased_self_fails(by_label):
    w = member(by_label, "w13_5")
    assert not are_unbiased(w, w)  # diagonal of W W^T is 9, not +-3


def test_unbiased_symmetric(by_label):
    fam = by_label["w15_12"]
    a, b = fam.members[0], fam.members[3]
    assert are_unbiased(a, b) == are_unbiased(b, a) == True


def test_unbiased_rejects_mismatched_orders(by_label):
    with pytest.raises(ValueError):
        are_unbiased(member(by_label, "w13_5"), member(by_label, "w15_12"))


def test_unbiased_rejects_nonsquare_weight():
    from muwm import paley_weighing

    w = paley_weighing(3)  # weight 3
    with pytest.raises(ValueError, match="square"):
        are_unbiased(w, w)


def test_unbiased_product_is_weighing(by_label):
    # when the entries of A B^T sit in {0,+-3}, (1/3) A B^T is again weight-9
    fam = by_label["w16_46"]
    a, b = fam.members[0], fam.members[5]
    assert are_unbiased(a, b)
    prod = (a.matrix @ b.matrix.T) // 3
    assert is_weighing(prod, 9)


def test_verify_family_full_pass(by_label):
    fam = by_label["w16_46"]
    report = verify_family(fam)
    assert len(report) == 15 + 15 * 14 // 2
    assert all(entry["pass"] for entry in report)


def test_verify_family_flags_duplicate(by_label):
    w = member(by_label, "w13_5")
    fam = MuwmFamily(members=(w, w))
    report = verify_family(fam)
    bad = [e for e in report if not e["pass"]]
    assert len(bad) == 1 and bad[0]["check"] == "unbiased"


def test_normalize_idempotent(by_label):
    w = normalize_rows(member(by_label, "w13_5", 1))
    assert normalize_rows(w) == w


def test_normalize_kills_row_negation(by_label):
    w = member(by_label, "w13_5")
    negated = WeighingMatrix((tuple(-x for x in w.rows[0]),) + w.rows[1:], w.weight)
    assert normalize_rows(negated) == normalize_rows(w)


def test_normalize_signed_permutation_invariant(by_label):
    rng = random.Random(20240817)
    a = member(by_label, "w13_5", 1)
    want = normalize_rows(a)
    for _ in range(200):
        assert normalize_rows(signed_row_permutation(a, rng)) == want


def test_normalized_rows_lead_with_one(by_label):
    w = normalize_rows(member(by_label, "w15_12", 2))
    for row in w.rows:
        assert next(x for x in row if x) == 1


def test_unbiased_invariant_under_signed_permutations(by_label):
    rng = random.Random(4959)
    fam = by_label["w15_12"]
    a, b = fam.members[0], fam.members[1]
    for _ in range(200):
        assert are_unbiased(signed_row_permutation(a, rng), signed_row_permutation(b, rng))


def test_code_of_identity_is_full_space():
    w = WeighingMatrix.from_array(np.eye(5, dtype=int), 1)
    assert code_of(w).dimension == 5


def test_code_of_w16_self_dual(by_label):
    c = code_of(member(by_label, "w16_46"))
    assert c.dimension == 8
    assert dual_code(c) == c


def test_code_shared_across_family(by_label):
    fam = by_label["w16_46"]
    c = code_of(fam.members[0])
    assert code_of(fam.members[7]) == c


def test_rows_in_dual_appendix_pair(by_label):
    fam = by_label["w13_5"]
    assert rows_in_dual(fam.members[1], code_of(fam.members[0]))


def test_rows_in_dual_self(by_label):
    w = member(by_label, "w13_5")
    assert rows_in_dual(w, code_of(w))  # weight 9 = 0 mod 3


def test_rows_in_dual_zero_code():
    w = WeighingMatrix.from_array(np.eye(3, dtype=int), 1)
    assert rows_in_dual(w, rref([], length=3))


def test_rows_in_dual_length_mismatch(by_label):
    with pytest.raises(ValueError):
        rows_in_dual(member(by_label, "w13_5"), rref([], length=5))


def test_family_shares_order_and_weight(by_label):
    with pytest.raises(ValueError):
        MuwmFamily(members=(member(by_label, "w13_5"), member(by_label, "w15_12")))


def test_column_weights(corpus):
    for fam in corpus:
        m = fam.members[0].matrix
        assert (np.count_nonzero(m, axis=0) == 9).all()
        assert (np.count_nonzero(m, axis=1) == 9).all()
