"""Vector systems, the orthogonality graph, and association-scheme checks."""
import numpy as np
import pytest

from muwm import (
    MuwmFamily,
    RelationPartition,
    ScaledVectorSet,
    antipodal_double,
    is_association_scheme,
    orthogonality_srg,
    relation_partition,
    vector_system,
    verify_family,
)
from muwm.spherical import SrgParameters


def basis_only(n, scale):
    vectors = []
    fibres = []
    for i in range(n):
        row = [0] * n
        row[i] = scale
        vectors.append(tuple(row))
        fibres.append((0, i, 1))
    return ScaledVectorSet(n, scale, tuple(vectors), tuple(fibres))


def test_vector_count(by_label):
    vs = vector_system(by_label["w13_5"])
    assert len(vs) == 13 * 4  # basis + three members
    assert vs.scale == 3 and vs.dimension == 13


def test_fibre_tags(by_label):
    vs = vector_system(by_label["w13_5"])
    members = sorted({f[0] for f in vs.fibres})
    assert members == [0, 1, 2, 3]
    assert all(s == 1 for _, _, s in vs.fibres)


def test_vector_system_agrees_with_verify_family(by_label):
    fam = by_label["w15_12"]
    assert all(e["pass"] for e in verify_family(fam))
    vector_system(fam)  # should not raise

    w = fam.members[0]
    broken = MuwmFamily(members=(w, w))
    assert not all(e["pass"] for e in verify_family(broken))
    with pytest.raises(ValueError, match="spectrum violation"):
        vector_system(broken)


def test_vector_system_needs_square_weight():
    from muwm import paley_weighing

    fam = MuwmFamily(members=(paley_weighing(3),))
    with pytest.raises(ValueError, match="square"):
        vector_system(fam)


def test_srg_order16(by_label):
    vs = vector_system(by_label["w16_46"])
    assert orthogonality_srg(vs) == SrgParameters(256, 120, 56, 56)


def test_srg_order13_diagnostic(by_label):
    # the order-13 system is a three-distance set but not an SRG
    out = orthogonality_srg(vector_system(by_label["w13_5"]))
    assert out == "common neighbors on edges vary: 8..14"


def test_srg_complete_graph_diagnostic():
    # an orthonormal basis gives a complete orthogonality graph
    assert orthogonality_srg(basis_only(4, 3)) == "no non-edges"


def test_srg_edgeless_diagnostic():
    # a single vector has no pairs at all
    assert orthogonality_srg(basis_only(1, 2)) == "no edges"


def test_antipodal_double_counts(by_label):
    vs = vector_system(by_label["w16_46"])
    doubled = antipodal_double(vs)
    assert len(doubled) == 2 * len(vs)
    signs = {s for _, _, s in doubled.fibres}
    assert signs == {1, -1}


def test_antipodal_double_idempotent(by_label):
    vs = antipodal_double(vector_system(by_label["w13_5"]))
    assert antipodal_double(vs) == vs


def test_relation_partition_requires_closure(by_label):
    vs = vector_system(by_label["w13_5"])
    with pytest.raises(ValueError, match="antipodally closed"):
        relation_partition(vs, "four_class")


def test_relation_partition_modes(by_label):
    vs = antipodal_double(vector_system(by_label["w16_46"]))
    four = relation_partition(vs, "four_class")
    five = relation_partition(vs, "five_class")
    assert four.classes == 5 and len(four.class_labels) == 5
    assert five.classes == 6 and len(five.class_labels) == 6
    # class 0 is the diagonal in both
    assert four.class_size(0) == len(vs)
    assert five.class_size(0) == len(vs)
    # five_class refines the zero class of four_class
    assert five.class_size(2) + five.class_size(3) == four.class_size(2)


def test_relation_partition_rejects_unknown_mode(by_label):
    vs = antipodal_double(vector_system(by_label["w16_46"]))
    with pytest.raises(ValueError):
        relation_partition(vs, "six_class")


def test_schemes_on_doubled_order16(by_label):
    vs = antipodal_double(vector_system(by_label["w16_46"]))
    for mode in ("four_class", "five_class"):
        ok, table = is_association_scheme(relation_partition(vs, mode))
        assert ok
        t = np.array(table)
        assert (t == t.transpose(0, 2, 1)).all()  # symmetric scheme


def test_degenerate_single_basis_partition():
    # no +-scale products at all; those classes stay empty but valid
    doubled = antipodal_double(basis_only(4, 3))
    rp = relation_partition(doubled, "four_class")
    assert rp.class_size(1) == 0 and rp.class_size(3) == 0
    ok, _ = is_association_scheme(rp)
    assert ok  # a doubled orthonormal basis is a (degenerate) scheme


def test_broken_partition_rejected(by_label):
    vs = antipodal_double(vector_system(by_label["w16_46"]))
    rp = relation_partition(vs, "four_class")
    rel = rp.relation.copy()
    # move one symmetric pair between classes; intersection numbers break
    idx = np.argwhere(rel == 1)[0]
    rel[idx[0], idx[1]] = rel[idx[1], idx[0]] = 2
    bad = RelationPartition(rp.points, rp.classes, rel, rp.class_labels)
    ok, table = is_association_scheme(bad)
    assert not ok and table is None


def test_scheme_size_cap():
    n = 1025
    rel = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(rel, 0)
    rp = RelationPartition(n, 2, rel, ("identity", "other"))
    with pytest.raises(ValueError, match="cap"):
        is_association_scheme(rp)


def test_partition_validation():
    rel = np.zeros((3, 3), dtype=np.int64)  # off-diagonal zeros: not a diagonal class
    with pytest.raises(ValueError):
        RelationPartition(3, 1, rel, ("identity",))
