"""Catalog constructors: groups, group algebras, Sweedler's algebra,
characters, idempotents, and the derived twists and R-matrices."""

import pytest

from hopfcheck import GF, QQ, Element
from hopfcheck import catalog
from hopfcheck.exactlin import FieldError, NotInvertibleError, invert_in_algebra
from hopfcheck.hopf import check_hopf
from hopfcheck.report import CheckFailure
from hopfcheck.twist import check_twist
from hopfcheck.yd import check_rmatrix


def test_group_presentations(s3, v4, z2):
    assert (z2.order, v4.order, s3.order) == (2, 4, 6)
    assert z2.is_abelian() and v4.is_abelian() and not s3.is_abelian()
    assert s3.identity == 0
    for g in range(s3.order):
        assert s3.mul(g, s3.inv(g)) == s3.identity


def test_s3_composition_convention(s3):
    names = s3.names
    i = names.index
    # products compose left-to-right as functions applied right first:
    # (12)(23) maps 2->1->.., giving the 3-cycle (123)
    assert s3.mul(i("(12)"), i("(23)")) == i("(123)")
    assert s3.mul(i("(23)"), i("(12)")) == i("(132)")
    assert s3.mul(i("(123)"), i("(123)")) == i("(132)")


def test_klein_four_is_z2_squared(v4):
    k4 = catalog.klein_four_group()
    assert k4.table == v4.table
    assert k4.names == v4.names


def test_group_lookup_errors():
    with pytest.raises(ValueError) as exc:
        catalog.group_by_name("Z5")
    assert "Z2" in str(exc.value)  # the error lists what it does know
    with pytest.raises(ValueError):
        catalog.symmetric_group(10)
    with pytest.raises(ValueError):
        catalog.symmetric_group(0)


def test_bad_multiplication_table_rejected():
    with pytest.raises(ValueError):
        catalog.GroupPresentation(("e", "a"), ((0, 1), (1, 1)), "broken")


def test_group_algebra_is_hopf(s3, ks3):
    assert check_hopf(ks3).passed
    assert ks3.space.labels == s3.names
    # antipode sends a group element to its inverse
    i12 = s3.names.index("(12)")
    assert ks3.antipode.cols[i12] == {i12: QQ.one}
    i123, i132 = s3.names.index("(123)"), s3.names.index("(132)")
    assert ks3.antipode.cols[i123] == {i132: QQ.one}


def test_sweedler_relations(h4):
    assert h4.space.labels == ("1", "g", "x", "gx")
    assert check_hopf(h4).passed
    one, g, x, gx = (Element.basis(h4.space, i) for i in range(4))
    assert h4.multiply(x, x).is_zero()
    assert h4.multiply(g, g) == one
    assert h4.multiply(g, x) == gx
    # x anticommutes with g: xg = -gx
    assert h4.multiply(x, g) == gx.scale(QQ.neg(QQ.one))
    # comult(x) = x (x) 1 + g (x) x
    assert h4.comult.cols[2] == {2 * 4 + 0: QQ.one, 1 * 4 + 2: QQ.one}
    assert h4.antipode.cols[2] == {3: QQ.neg(QQ.one)}


def test_sweedler_needs_odd_characteristic():
    with pytest.raises(ValueError):
        catalog.sweedler_h4(GF(2))
    assert check_hopf(catalog.sweedler_h4(GF(3))).passed


def test_characters_and_idempotents(v4, kv4):
    chars = catalog.two_group_characters(v4)
    assert len(chars) == 4
    assert chars[0] == (1, 1, 1, 1)
    assert all(set(c) <= {1, -1} for c in chars)
    idem = catalog.character_idempotents(v4, QQ)
    total = Element.zero(kv4.space)
    for e in idem:
        assert kv4.multiply(e, e) == e
        total = total.add(e)
    assert total == kv4.unit
    for i, e in enumerate(idem):
        for f in idem[i + 1 :]:
            assert kv4.multiply(e, f).is_zero()


def test_idempotents_refuse_bad_characteristic(v4):
    with pytest.raises(FieldError):
        catalog.character_idempotents(v4, GF(2))
    # char 3 does not divide 4, so that one works
    assert len(catalog.character_idempotents(v4, GF(3))) == 4


def test_bicharacter_structures_certified(v4):
    t, r = catalog.bicharacter_structures(v4, [[0, 0], [1, 0]], QQ)
    assert check_twist(t).passed
    assert check_rmatrix(r).passed
    # a symmetric matrix gives a symmetric twist, here it is genuinely skew
    assert not t.is_trivial()


def test_bicharacter_validation(v4, z2):
    with pytest.raises(ValueError):
        catalog.bicharacter_structures(v4, [[0, 0]], QQ)  # wrong shape
    s3 = catalog.group_by_name("S3")
    with pytest.raises(ValueError):
        catalog.bicharacter_structures(s3, [[0]], QQ)  # not a 2-group
    kz2_f2 = catalog.group_algebra(z2, GF(2))
    with pytest.raises(FieldError):
        catalog.bicharacter_structures(z2, [[1]], GF(2))


def test_coboundary_twist_validation(ks3):
    # counit(u) must be 1
    u = Element.from_coords(ks3.space, {1: 1})
    bad = Element.from_coords(ks3.space, {0: 2})
    with pytest.raises(ValueError):
        catalog.coboundary_twist(ks3, bad)
    assert check_twist(catalog.coboundary_twist(ks3, u)).passed
    # counital but not invertible: u = (1 + g)/2 + (g - 1)/2 = g works above;
    # (1 - (123))/3 + ... simplest: 1 + g - gg where things cancel
    i123 = ks3.space.labels.index("(123)")
    i132 = ks3.space.labels.index("(132)")
    third = QQ.div(QQ.one, QQ.from_int(3))
    sing = Element.from_coords(
        ks3.space, {0: third, i123: third, i132: third}
    )
    assert ks3.counit_scalar(sing) == QQ.one
    with pytest.raises(NotInvertibleError):
        invert_in_algebra(ks3, sing)
    with pytest.raises(NotInvertibleError):
        catalog.coboundary_twist(ks3, sing)


def test_adjoint_matches_conjugation_on_abelian():
    z3 = catalog.group_by_name("Z3")
    kz3 = catalog.group_algebra(z3, QQ)
    conj = catalog.conjugation_yd(z3, QQ)
    adj = catalog.adjoint_yd(kz3)
    assert adj.action == conj.action
    assert adj.coaction == conj.coaction


def test_certify_flag_reports_broken_input(z2):
    # hand the group-algebra builder a table that is not a group
    fake = catalog.GroupPresentation.__new__(catalog.GroupPresentation)
    fake.names = ("e", "a")
    fake.table = ((0, 1), (1, 1))
    fake.identity = 0
    fake.inverses = (0, 1)
    fake.name = "fake"
    with pytest.raises(CheckFailure) as exc:
        catalog.group_algebra(fake, QQ)
    assert not exc.value.report.passed
    # certify=False skips the checks and hands back the raw tables
    alg = catalog.group_algebra(fake, QQ, certify=False)
    assert alg.dim == 2


def test_known_groups_lists_all():
    for name in catalog.known_groups():
        g = catalog.group_by_name(name)
        assert g.order >= 1
