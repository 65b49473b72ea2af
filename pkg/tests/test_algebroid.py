"""Smash products, scalar-extension bialgebroids, bialgebroid cocycles,
and the equivalence between twisting first and smashing first."""

import pytest

from hopfcheck import QQ, Element, LinMap
from hopfcheck import catalog
from hopfcheck.algebroid import (
    Bialgebroid,
    algebra_generators,
    base_action,
    check_bialgebroid,
    check_bialgebroid_cocycle,
    check_scalar_extension_twist,
    check_smash,
    induced_cocycle,
    scalar_extension,
    smash_product,
    smash_twist_iso,
    twist_bialgebroid,
)
from hopfcheck.twist import trivial_twist
from hopfcheck.yd import trivial_yd_algebra, twist_yd_algebra


def test_algebra_generators(ks3, kz2):
    gens = algebra_generators(ks3)
    assert len(gens) <= 2  # two transpositions already generate S3
    assert algebra_generators(kz2) == (1,)


def test_smash_product_multiplication(z2_conj, kz2):
    s = smash_product(z2_conj)
    assert s.space.labels == ("e#e", "e#g", "g#e", "g#g")
    # conjugation action of an abelian group is trivial, so
    # (g#g)(g#g) = gg # gg = 1#1
    gg = Element.basis(s.space, 3)
    assert s.algebra.multiply(gg, gg) == s.algebra.unit
    assert s.embed_base.cols[1] == {2: QQ.one}  # g -> g#e
    assert s.embed_host.cols[1] == {1: QQ.one}  # g -> e#g
    assert check_smash(s).passed


def test_smash_checks_catalog_instances(v4_conj, h4_adj):
    for a in (v4_conj, h4_adj):
        assert check_smash(smash_product(a, certify=False)).passed


def test_smash_rejects_mismatched_host(z2_conj, kv4):
    with pytest.raises(ValueError):
        smash_product(z2_conj, kv4)


def test_balanced_quotient_dimensions(z2_conj, v4_conj, h4_adj, s3_conj):
    for a, want in ((z2_conj, 8), (v4_conj, 64), (h4_adj, 64), (s3_conj, 216)):
        b = scalar_extension(a, certify=False)
        assert b.balanced.dim == want
        assert want == a.dim * a.host.dim**2


def test_scalar_extension_axioms(z2_conj):
    b = scalar_extension(z2_conj)
    rep = check_bialgebroid(b)
    assert rep.passed
    names = [c.name for c in rep.checks]
    for needed in (
        "source is an algebra map",
        "target is an anti-algebra map",
        "source and target images commute",
        "coproduct is a bimodule map",
        "coproduct coassociative in the balanced triple quotient",
        "coproduct satisfies the Takeuchi condition",
        "coproduct multiplicative on representatives",
        "counit splits the coproduct",
        "counit absorbs source and target",
    ):
        assert needed in names


def test_source_target_and_base_action(z2_conj):
    b = scalar_extension(z2_conj)
    # source embeds a -> a#1; target twists through the coaction: t(g) = g#g
    assert b.source.cols[1] == {2: QQ.one}
    assert b.target.cols[1] == {3: QQ.one}
    g = Element.basis(z2_conj.space, 1)
    one_g = Element.basis(b.total.space, 1)  # e#g
    assert base_action(b, one_g, g) == g  # (1#g) |> g = g g g^-1 = g


def test_corrupted_coproduct_is_detected(z2_conj):
    b = scalar_extension(z2_conj)
    cols = [dict(c) for c in b.comult_rep.cols]
    k = next(iter(cols[3]))
    cols[3][k] = QQ.add(cols[3][k], QQ.one)
    bad = Bialgebroid(
        b.total,
        b.base,
        b.source,
        b.target,
        b.balanced,
        LinMap(b.comult_rep.domain, b.comult_rep.codomain, tuple(cols)),
        b.counit,
        name="bad",
        smash=b.smash,
    )
    rep = check_bialgebroid(bad)
    assert {c.name for c in rep.checks if not c.passed} == {
        "coproduct is a bimodule map",
        "coproduct coassociative in the balanced triple quotient",
        "coproduct multiplicative on representatives",
        "counit splits the coproduct",
    }
    first = rep.first_failure
    assert first.at == ("e", "g", "e#e")
    assert first.lhs == "2*g#g⊗e#g"
    assert first.rhs == "1*g#g⊗e#g"


def test_induced_cocycle_and_twist(v4_conj, v4_twist):
    b = scalar_extension(v4_conj)
    c = induced_cocycle(b, v4_twist)
    assert check_bialgebroid_cocycle(c).passed
    tb = c.twisted()
    assert check_bialgebroid(tb).passed
    # V4 conjugation is trivial, so the deformed base product is unchanged
    assert c.twisted_base().algebra.mult == b.base.mult


def test_trivial_cocycle_changes_nothing(z2_conj, kz2):
    b = scalar_extension(z2_conj)
    c = induced_cocycle(b, trivial_twist(kz2))
    tb = c.twisted()
    assert tb.comult_rep == b.comult_rep
    assert tb.total.mult == b.total.mult
    assert tb.source == b.source
    assert tb.target == b.target
    assert tb.counit == b.counit


def test_smash_twist_iso_identity_for_abelian(v4_conj, v4_twist):
    z = smash_twist_iso(v4_conj, None, v4_twist)
    assert z == LinMap.identity(z.domain)


def test_smash_twist_iso_nontrivial_for_sweedler(h4_adj, h4_twist):
    z = smash_twist_iso(h4_adj, None, h4_twist)
    assert z != LinMap.identity(z.domain)


def test_scalar_extension_twist_sweedler(h4_adj, h4, h4_twist):
    rep = check_scalar_extension_twist(h4_adj, h4, h4_twist)
    assert rep.passed, rep.first_failure
    assert [c.name for c in rep.checks] == [
        "deformed base multiplications coincide",
        "deformed base units coincide",
        "twisted-smash map is unital",
        "twisted-smash map is multiplicative",
        "twisted-smash map is invertible",
        "source maps intertwined",
        "target maps intertwined",
        "counits intertwined",
        "coproducts intertwined in the balanced quotient",
    ]


def test_scalar_extension_over_trivial_base_is_the_host(h4):
    # with A = k the smash product is the host algebra itself and the
    # bialgebroid coproduct has the host's structure constants
    a = trivial_yd_algebra(h4)
    b = scalar_extension(a)
    assert b.total.dim == h4.dim
    assert b.total.mult.cols == h4.mult.cols
    assert b.comult_rep.cols == h4.comult.cols
    assert b.counit.cols == h4.counit.cols
    assert check_bialgebroid(b).passed
