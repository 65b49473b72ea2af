"""Yetter-Drinfeld modules and module algebras: compatibility checks,
R-matrix induced coactions, prebraidings, and cocycle twisting."""

import pytest

from hopfcheck import QQ, Element, LinMap, Space
from hopfcheck import catalog
from hopfcheck.hopf import check_algebra
from hopfcheck.twist import trivial_twist
from hopfcheck.yd import (
    ComoduleData,
    ModuleData,
    check_braided_commutative,
    check_comodule_algebra,
    check_rmatrix,
    check_yd,
    check_yd_algebra,
    check_yd_cocycle_twist,
    coaction_from_r,
    make_rmatrix,
    prebraid,
    tensor_twist_iso,
    trivial_yd_algebra,
    trivial_yd_module,
    twist_yd_algebra,
    yd_algebra,
    yd_module,
    yd_tensor,
)


def test_conjugation_coaction_is_inverse_valued(z2_conj, s3_conj):
    # rho(g) = g (x) g^-1; on Z2 every element is its own inverse
    assert z2_conj.coaction.cols[1] == {1 * 2 + 1: QQ.one}
    labels = s3_conj.host.space.labels
    i123, i132 = labels.index("(123)"), labels.index("(132)")
    assert s3_conj.coaction.cols[i123] == {i123 * 6 + i132: QQ.one}


def test_conjugation_equals_adjoint_on_group_algebras(s3, s3_conj, ks3):
    adj = catalog.adjoint_yd(ks3)
    assert adj.action == s3_conj.action
    assert adj.coaction == s3_conj.coaction
    assert adj.base.mult == s3_conj.base.mult


def test_yd_checks_pass_for_catalog_instances(v4_conj, h4_adj, s3_conj):
    for a in (v4_conj, h4_adj, s3_conj):
        rep = check_yd_algebra(a)
        assert rep.passed, rep.first_failure
        assert check_braided_commutative(a).passed


def test_uninverted_coaction_breaks_reversed_multiplicativity(s3, ks3, s3_conj):
    # rho(g) = g (x) g is still a YD module over a group algebra, but the
    # comodule-algebra law rho(ab) = a0 b0 (x) b1 a1 needs the inverse:
    # gh (x) gh != gh (x) hg when g and h do not commute
    d = s3.order
    coact = LinMap(
        s3_conj.space,
        s3_conj.space.tensor(ks3.space),
        tuple({i * d + i: QQ.one} for i in range(d)),
    )
    m = yd_module(ks3, s3_conj.space, s3_conj.action, coact, "uninverted")
    assert check_yd(m).passed
    a = yd_algebra(ks3, s3_conj.base, s3_conj.action, coact, "uninverted")
    rep = check_comodule_algebra(a)
    assert not rep.passed
    assert rep.first_failure.name == "coaction multiplicative (reversed)"
    assert rep.first_failure.at is not None


def test_sign_module_r_coaction(kz2):
    # R = (1/2)(1x1 + 1xg + gx1 - gxg); rho(m) = (R2 |> m) (x) R1 = m (x) g
    r = catalog.bicharacter_structures(catalog.group_by_name("Z2"), [[1]], QQ)[1]
    half = QQ.div(QQ.one, QQ.from_int(2))
    assert r.element.coords == {0: half, 1: half, 2: half, 3: QQ.neg(half)}
    sign = Space(QQ, ("m",))
    action = LinMap(kz2.space.tensor(sign), sign, ({0: QQ.one}, {0: QQ.neg(QQ.one)}))
    m = ModuleData(kz2, sign, action, "sign")
    com = coaction_from_r(r, m)
    assert com.coaction.cols[0] == {0 * 2 + 1: QQ.one}


def test_rmatrix_checks(kz2, h4, ks3):
    r = catalog.bicharacter_structures(catalog.group_by_name("Z2"), [[1]], QQ)[1]
    rep = check_rmatrix(r)
    assert rep.passed
    assert [c.name for c in rep.checks] == [
        "invertible",
        "hexagon left",
        "hexagon right",
        "intertwines comultiplication",
    ]
    # R = 1 (x) 1 is an R-matrix exactly when the host is cocommutative
    triv_s3 = make_rmatrix(ks3, ks3.unit.tensor(ks3.unit))
    assert check_rmatrix(triv_s3).passed
    triv_h4 = make_rmatrix(h4, h4.unit.tensor(h4.unit))
    rep = check_rmatrix(triv_h4)
    assert {c.name for c in rep.checks if not c.passed} == {"intertwines comultiplication"}
    assert rep.first_failure.at == ("x",)


def test_prebraid_is_flip_for_trivial_action(z2_conj):
    m = z2_conj.yd
    sigma = prebraid(m, m)
    flip = LinMap.from_function(
        sigma.domain,
        sigma.codomain,
        lambda idx: Element.basis(sigma.codomain, (idx % 2) * 2 + idx // 2),
    )
    assert sigma == flip


def test_yd_tensor_coaction_reverses(ks3, s3_conj):
    m = s3_conj.yd
    mm = yd_tensor(m, m)
    assert check_yd(mm).passed
    labels = ks3.space.labels
    i12, i23 = labels.index("(12)"), labels.index("(23)")
    # rho((12) (x) (23)) = ((12) (x) (23)) (x) ((12)(23))^-1, and
    # (12)(23) = (123), whose inverse is (132)
    i123, i132 = labels.index("(123)"), labels.index("(132)")
    assert ks3.mult.cols[i12 * 6 + i23] == {i123: QQ.one}
    col = mm.coaction.cols[i12 * 6 + i23]
    assert col == {(i12 * 6 + i23) * 6 + i132: QQ.one}


def test_twisting_fixes_abelian_conjugation(v4_conj, v4_twist):
    # the conjugation action of an abelian group is trivial, so the twisted
    # product, action, and coaction all collapse to the originals exactly
    af = twist_yd_algebra(v4_conj, v4_twist)
    assert af.base.mult == v4_conj.base.mult
    assert af.action == v4_conj.action
    assert af.coaction == v4_conj.coaction
    # and the tensor-category isomorphism is the identity map
    z = tensor_twist_iso(v4_conj.yd, v4_conj.yd, v4_twist)
    assert z == LinMap.identity(z.domain)


def test_coboundary_twisted_product_is_conjugate_by_u(s3_conj, s3_twist, ks3):
    """For F = (u x u) comult(u^-1), the module-algebra axiom gives
    (u |> a) *_F (u |> b) = u |> (ab), i.e. mult_F = phi mult (phi x phi)^-1
    with phi = (u |> .).  That is an oracle for the deformed product."""
    u = Element.from_coords(ks3.space, {0: 2, ks3.space.labels.index("(12)"): -1})
    from hopfcheck.exactlin import invert_in_algebra, invert_linmap

    act = lambda w: LinMap.from_function(
        s3_conj.space, s3_conj.space, lambda i: s3_conj.module.act(w, Element.basis(s3_conj.space, i))
    )
    phi = act(u)
    phi_inv = invert_linmap(phi)
    assert phi_inv is not None
    oracle = phi.compose(s3_conj.base.mult.compose(phi_inv.tensor(phi_inv)))
    af = twist_yd_algebra(s3_conj, s3_twist)
    assert af.base.mult == oracle
    assert af.base.mult != s3_conj.base.mult  # the deformation is nontrivial


def test_cocycle_twist_driver_names(v4_conj, v4_twist):
    rep = check_yd_cocycle_twist(v4_twist, v4_conj)
    assert rep.passed
    assert len(rep.checks) == 35
    names = [c.name for c in rep.checks]
    for needed in (
        "cocycle: cocycle",
        "twisted host: coassociativity",
        "double twist restores comultiplication",
        "tensor iso coherent on triples",
    ):
        assert needed in names


def test_trivial_twist_fixes_everything(s3_conj, ks3):
    t = trivial_twist(ks3)
    af = twist_yd_algebra(s3_conj, t)
    assert af.base.mult == s3_conj.base.mult
    assert af.action == s3_conj.action
    assert af.coaction == s3_conj.coaction


def test_trivial_yd_structures(ks3):
    m = trivial_yd_module(ks3)
    assert check_yd(m).passed and m.dim == 1
    a = trivial_yd_algebra(ks3)
    assert check_yd_algebra(a).passed
    assert check_braided_commutative(a).passed


def test_single_entry_mutation_is_detected(v4_conj, kv4):
    # overwrite one action column: (g,e) now acts on (e,g) by (g,g)
    cols = list(v4_conj.action.cols)
    cols[2 * 4 + 1] = {3: QQ.one}
    mutated = yd_algebra(
        kv4,
        v4_conj.base,
        LinMap(v4_conj.action.domain, v4_conj.space, tuple(cols)),
        v4_conj.coaction,
        "mutated",
    )
    rep = check_yd_algebra(mutated)
    assert not rep.passed
    assert rep.first_failure.at is not None


def test_module_shape_validation(kz2):
    wrong = Space(QQ, ("a", "b", "c"))
    with pytest.raises(ValueError):
        ModuleData(kz2, wrong, LinMap.identity(wrong))
    with pytest.raises(ValueError):
        ComoduleData(kz2, wrong, LinMap.identity(wrong))
