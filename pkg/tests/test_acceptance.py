"""Acceptance suite: one test per advertised guarantee, each with its
runtime budget asserted alongside the mathematical content."""

import random
import time

from hopfcheck import QQ, Element, LinMap
from hopfcheck import catalog
from hopfcheck.algebroid import check_bialgebroid, check_scalar_extension_twist, scalar_extension
from hopfcheck.hopf import AlgebraData, HopfData, check_hopf
from hopfcheck.twist import check_twist, trivial_twist, twist_bialgebra
from hopfcheck.yd import (
    check_braided_commutative,
    check_rmatrix,
    check_yd,
    check_yd_algebra,
    check_yd_cocycle_twist,
    coaction_from_r,
    make_rmatrix,
    trivial_yd_algebra,
    twist_yd_algebra,
    yd_algebra,
)

TWIST_CHECKS = frozenset(
    {"invertible", "counital", "cocycle", "inverse cocycle", "mixed cocycle left", "mixed cocycle right"}
)


def test_criterion_1_cocycle_conjunction_per_catalog_twist(kv4, v4_twist, h4_twist, s3_twist):
    twists = [
        ("trivial", trivial_twist(kv4)),
        ("bicharacter", v4_twist),
        ("sweedler coboundary", h4_twist),
        ("s3 coboundary", s3_twist),
    ]
    for label, t in twists:
        start = time.perf_counter()
        rep = check_twist(t)
        elapsed = time.perf_counter() - start
        assert rep.passed, (label, rep.first_failure)
        assert {c.name for c in rep.checks} == TWIST_CHECKS, label
        assert elapsed < 1.0, (label, elapsed)


def test_criterion_2_counterexample_coactions_differ(s3_conj, h4_adj, ks3, h4):
    start = time.perf_counter()
    # both YD module algebras are honest: all axioms hold
    assert check_yd(s3_conj.yd).passed
    assert check_braided_commutative(s3_conj).passed
    assert check_yd(h4_adj.yd).passed
    assert check_braided_commutative(h4_adj).passed
    # but neither coaction comes from the trivial R-element: the induced
    # coaction is m -> m (x) 1, which differs from both as an exact matrix
    for alg, host in ((s3_conj, ks3), (h4_adj, h4)):
        r = make_rmatrix(host, host.unit.tensor(host.unit))
        induced = coaction_from_r(r, alg.module, certify=False)
        assert induced.coaction != alg.coaction
    # and over Sweedler's algebra the trivial element is not even an
    # R-matrix, because the host is not cocommutative
    r4 = make_rmatrix(h4, h4.unit.tensor(h4.unit))
    rep = check_rmatrix(r4)
    assert not rep.passed
    assert rep.first_failure.name == "intertwines comultiplication"
    assert time.perf_counter() - start < 1.0


def test_criterion_3_cocycle_twist_drivers(v4_conj, v4_twist, h4_adj, h4_twist, s3_conj, s3_twist):
    instances = [
        ("v4 conjugation", v4_twist, v4_conj),
        ("sweedler adjoint", h4_twist, h4_adj),
        ("s3 conjugation", s3_twist, s3_conj),
    ]
    for label, t, a in instances:
        start = time.perf_counter()
        rep = check_yd_cocycle_twist(t, a)
        elapsed = time.perf_counter() - start
        assert rep.passed, (label, rep.first_failure)
        assert len(rep.checks) == 35, label
        assert elapsed < 10.0, (label, elapsed)


def test_criterion_4_main_theorem_suite(v4_conj, kv4, v4_twist, h4_adj, h4, h4_twist, s3_conj, ks3, s3_twist):
    instances = [
        ("v4", v4_conj, kv4, v4_twist),
        ("sweedler", h4_adj, h4, h4_twist),
        ("s3", s3_conj, ks3, s3_twist),
    ]
    for label, a, host, t in instances:
        start = time.perf_counter()
        rep = check_scalar_extension_twist(a, host, t)
        elapsed = time.perf_counter() - start
        assert rep.passed, (label, rep.first_failure)
        assert elapsed < 60.0, (label, elapsed)


def test_criterion_5_bialgebroid_axioms_and_dimension(v4_conj, h4_adj, s3_conj):
    for label, a in (("v4", v4_conj), ("sweedler", h4_adj), ("s3", s3_conj)):
        start = time.perf_counter()
        b = scalar_extension(a, certify=False)
        rep = check_bialgebroid(b)
        elapsed = time.perf_counter() - start
        assert rep.passed, (label, rep.first_failure)
        assert b.balanced.dim == a.dim * a.host.dim**2, label
        assert elapsed < 30.0, (label, elapsed)


def _mutate(field, lin: LinMap, rng: random.Random) -> LinMap:
    cols = [dict(c) for c in lin.cols]
    ci = rng.randrange(len(cols))
    ri = rng.randrange(lin.codomain.dim)
    old = cols[ci].get(ri)
    cols[ci][ri] = field.add(old, field.one) if old is not None else field.one
    if old is not None and not cols[ci][ri]:
        del cols[ci][ri]
    return LinMap(lin.domain, lin.codomain, tuple(cols))


def test_criterion_6_mutation_sensitivity(v4_conj, kv4, v4_twist, h4_adj, h4, h4_twist, s3_conj, ks3, s3_twist):
    instances = [
        ("v4", kv4, v4_twist, v4_conj),
        ("sweedler", h4, h4_twist, h4_adj),
        ("s3", ks3, s3_twist, s3_conj),
    ]
    for label, host, twist, alg in instances:
        rng = random.Random(0)
        field = host.field
        tables = [
            ("host mult", host.mult, "hopf"),
            ("host comult", host.comult, "hopf"),
            ("host counit", host.counit, "hopf"),
            ("host antipode", host.antipode, "hopf"),
            ("algebra mult", alg.base.mult, "alg"),
            ("action", alg.action, "alg"),
            ("coaction", alg.coaction, "alg"),
        ]
        for k in range(24):
            name, lin, kind = rng.choice(tables)
            m = _mutate(field, lin, rng)
            if kind == "hopf":
                mutated = HopfData(
                    host.space,
                    m if name == "host mult" else host.mult,
                    host.unit,
                    m if name == "host comult" else host.comult,
                    m if name == "host counit" else host.counit,
                    m if name == "host antipode" else host.antipode,
                )
                rep = check_hopf(mutated)
            else:
                base = AlgebraData(
                    alg.space, m if name == "algebra mult" else alg.base.mult, alg.base.unit
                )
                a2 = yd_algebra(
                    host,
                    base,
                    m if name == "action" else alg.action,
                    m if name == "coaction" else alg.coaction,
                    "mutated",
                )
                rep = check_yd_algebra(a2)
                if rep.passed:
                    rep = check_braided_commutative(a2)
            assert not rep.passed, (label, k, name)
            first = rep.first_failure
            assert first.at is not None or first.lhs or first.rhs or first.detail, (label, k)
        # the twist element is a structure table too
        for k in range(6):
            coords = dict(twist.element.coords)
            ci = rng.randrange(host.dim * host.dim)
            old = coords.get(ci)
            coords[ci] = field.add(old, field.one) if old is not None else field.one
            if old is not None and not coords[ci]:
                del coords[ci]
            rep = check_twist(host, Element(twist.element.space, coords))
            assert not rep.passed, (label, "twist", k)
            first = rep.first_failure
            assert first.at is not None or first.lhs or first.rhs or first.detail, (label, k)


def test_criterion_7_degenerate_closures(v4_conj, kv4, h4_adj, h4, s3_conj, ks3):
    # F = 1 (x) 1: every twisted structure equals the original exactly
    for a, host in ((v4_conj, kv4), (h4_adj, h4), (s3_conj, ks3)):
        t = trivial_twist(host)
        twisted_host = twist_bialgebra(t)
        assert twisted_host.comult.cols == host.comult.cols
        assert twisted_host.mult.cols == host.mult.cols
        af = twist_yd_algebra(a, t)
        assert af.base.mult.cols == a.base.mult.cols
        assert af.action.cols == a.action.cols
        assert af.coaction.cols == a.coaction.cols
    # A = k: the scalar extension collapses onto the host bialgebra
    for host in (kv4, h4, ks3):
        b = scalar_extension(trivial_yd_algebra(host), certify=False)
        assert b.total.mult.cols == host.mult.cols
        assert b.comult_rep.cols == host.comult.cols
        assert b.counit.cols == host.counit.cols
        assert b.total.unit.coords == host.unit.coords
