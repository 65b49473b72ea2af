"""Exact linear algebra layer: fields, sparse vectors/maps, echelon forms,
quotients.  Everything here is an identity over Q or F_p -- no tolerances."""

import pytest
from hypothesis import given, settings, strategies as st

from hopfcheck.exactlin import (
    GF,
    QQ,
    Echelon,
    Element,
    FieldError,
    LinMap,
    NotInvertibleError,
    Space,
    apply_on_leg,
    dense_rref,
    field_from_descriptor,
    invert_linmap,
    linsolve,
    quotient_space,
    rank_index,
    scalar_line,
    tensor_elements,
    unrank_index,
)

F5 = GF(5)


# ---------------------------------------------------------------------------
# fields


def test_rationals_parse_and_check():
    assert QQ.parse("-3/4") == QQ.div(QQ.from_int(-3), QQ.from_int(4))
    assert QQ.check(7) == QQ.from_int(7)
    assert QQ.check("7") == QQ.from_int(7)
    with pytest.raises(FieldError):
        QQ.parse("0.5")
    with pytest.raises(FieldError):
        QQ.check(0.5)
    with pytest.raises(FieldError):
        QQ.check(True)
    with pytest.raises(FieldError):
        QQ.div(QQ.one, QQ.zero)


def test_prime_field_arithmetic():
    assert F5.add(3, 4) == 2
    assert F5.inv(2) == 3  # 2*3 = 6 = 1 mod 5
    assert F5.parse("3/4") == F5.mul(3, F5.inv(4))
    with pytest.raises(FieldError):
        F5.inv(0)
    with pytest.raises(FieldError):
        F5.check(1.0)


def test_field_from_descriptor():
    assert field_from_descriptor("Q") == QQ
    assert field_from_descriptor("Fp:7") == GF(7)
    for bad in ("R", "Fp:6", "Fp:", "Fp:-3", "GF(2)"):
        with pytest.raises(FieldError):
            field_from_descriptor(bad)


@given(st.integers(min_value=1, max_value=200))
def test_fp_inverse_is_two_sided(a):
    p = 211
    f = GF(p)
    inv = f.inv(a)
    assert f.mul(a, inv) == 1 and f.mul(inv, a) == 1


# ---------------------------------------------------------------------------
# spaces and elements


def test_space_value_equality():
    a = Space(QQ, ("x", "y"))
    b = Space(QQ, ("x", "y"))
    assert a == b and hash(a) == hash(b)
    assert a != Space(QQ, ("x", "z"))
    assert a != Space(GF(3), ("x", "y"))
    assert a.factor_dims == (2,)


def test_space_rejects_duplicate_labels():
    with pytest.raises(ValueError):
        Space(QQ, ("x", "x"))


def test_tensor_space_layout():
    v = Space(QQ, ("a", "b"))
    w = Space(QQ, ("u", "v", "w"))
    vw = v.tensor(w)
    assert vw.dim == 6 and vw.factor_dims == (2, 3)
    # row-major: index of a(x)w is 0*3+2
    assert rank_index(vw.factor_dims, (0, 2)) == 2
    assert unrank_index(vw.factor_dims, 5) == (1, 2)


@given(st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=4), st.data())
def test_rank_unrank_roundtrip(dims, data):
    multi = tuple(data.draw(st.integers(0, d - 1)) for d in dims)
    assert unrank_index(dims, rank_index(dims, multi)) == multi


def test_element_validation_and_pruning():
    sp = Space(QQ, ("x", "y"))
    e = Element.from_coords(sp, {0: 1, 1: 0})
    assert e.coords == {0: QQ.one}  # zeros never stored
    with pytest.raises(IndexError):
        Element.from_coords(sp, {5: 1})
    with pytest.raises(FieldError):
        Element.from_coords(sp, {0: 0.5})
    assert Element.from_dense(sp, [2, -2]).sub(Element.basis(sp, 0).scale(2)).coords == {
        1: QQ.from_int(-2)
    }


def test_tensor_elements_matches_flat_index():
    sp = Space(QQ, ("x", "y"))
    u = Element.from_dense(sp, [1, 2])
    v = Element.from_dense(sp, [3, 4])
    uv = u.tensor(v)
    assert uv.space == sp.tensor(sp)
    assert uv.dense() == [QQ.from_int(k) for k in (3, 4, 6, 8)]
    assert tensor_elements(u, v, u).space.factor_dims == (2, 2, 2)


# ---------------------------------------------------------------------------
# linear maps


def _random_map(data, dom, cod, field=QQ):
    entries = []
    for j in range(dom.dim):
        for i in range(cod.dim):
            c = data.draw(st.integers(-3, 3))
            if c:
                entries.append((i, j, c))
    return LinMap.from_entries(dom, cod, entries)


def test_from_entries_sums_duplicates():
    sp = Space(QQ, ("x", "y"))
    m = LinMap.from_entries(sp, sp, [(0, 0, 1), (0, 0, -1), (1, 0, 2)])
    assert m.cols[0] == {1: QQ.from_int(2)}


def test_apply_matches_apply_col():
    sp = Space(QQ, ("x", "y", "z"))
    m = LinMap.from_dense(sp, sp, [[1, 2, 0], [0, 1, 0], [5, 0, 3]])
    v = Element.from_dense(sp, [1, 1, 2])
    assert m.apply(v).coords == m.apply_col(v.coords)


def test_compose_and_identity():
    sp = Space(QQ, ("x", "y"))
    m = LinMap.from_dense(sp, sp, [[1, 1], [0, 1]])
    assert m.compose(LinMap.identity(sp)) == m
    assert LinMap.identity(sp).compose(m) == m
    m2 = m.compose(m)
    assert m2.to_dense() == [[QQ.one, QQ.from_int(2)], [QQ.zero, QQ.one]]


@settings(max_examples=50)
@given(st.data())
def test_tensor_map_acts_leg_by_leg(data):
    sp = Space(QQ, ("x", "y"))
    f = _random_map(data, sp, sp)
    g = _random_map(data, sp, sp)
    u = Element.from_dense(sp, [data.draw(st.integers(-3, 3)) for _ in range(2)])
    v = Element.from_dense(sp, [data.draw(st.integers(-3, 3)) for _ in range(2)])
    assert f.tensor(g).apply(u.tensor(v)) == f.apply(u).tensor(g.apply(v))


def test_apply_on_leg_matches_full_tensor():
    sp = Space(QQ, ("x", "y"))
    f = LinMap.from_dense(sp, sp, [[0, 1], [1, 0]])
    ident = LinMap.identity(sp)
    triple = sp.tensor(sp).tensor(sp)
    v = Element.from_dense(triple, list(range(8)))
    for leg, full in enumerate(
        (f.tensor(ident).tensor(ident), ident.tensor(f).tensor(ident), ident.tensor(ident).tensor(f))
    ):
        assert apply_on_leg(f, v, leg) == full.apply(v)


def test_apply_on_leg_validates_by_dimension():
    # maps are matched to legs by dimension, so a same-dimension space swap
    # is allowed; a wrong-dimension leg is not
    a = Space(QQ, ("x", "y"))
    b = Space(QQ, ("u", "v"))
    f = LinMap.from_dense(a, a, [[0, 1], [1, 0]])
    v = Element.from_dense(b.tensor(b), [1, 2, 3, 4])
    assert apply_on_leg(f, v, 0).dense() == [QQ.from_int(k) for k in (3, 4, 1, 2)]
    w = Element.from_dense(Space(QQ, ("p", "q", "r")).tensor(b), [0] * 6)
    with pytest.raises(ValueError):
        apply_on_leg(f, w, 0)


def test_recast_requires_flat_compatibility():
    a = Space(QQ, ("x", "y"))
    pair = a.tensor(a)
    flat = Space(QQ, pair.labels)  # same labels, single factor
    m = LinMap.identity(pair)
    r = m.recast(codomain=flat)
    assert r.codomain is flat and r.cols == m.cols
    with pytest.raises(ValueError):
        m.recast(codomain=a)


def test_invert_linmap_round_trip():
    sp = Space(QQ, ("x", "y", "z"))
    m = LinMap.from_dense(sp, sp, [[2, 1, 0], [1, 1, 0], [0, 3, 1]])
    inv = invert_linmap(m)
    assert inv is not None
    assert inv.compose(m) == LinMap.identity(sp)
    assert m.compose(inv) == LinMap.identity(sp)
    singular = LinMap.from_dense(sp, sp, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])
    assert invert_linmap(singular) is None


@settings(max_examples=50)
@given(st.data())
def test_linsolve_solves_consistent_systems(data):
    sp = Space(F5, ("a", "b", "c"))
    m = _random_map(data, sp, sp, F5)
    v = Element.from_dense(sp, [data.draw(st.integers(0, 4)) for _ in range(3)])
    b = m.apply(v)
    x = linsolve(m, b)
    assert x is not None
    assert m.apply(x) == b


def test_linsolve_detects_inconsistency():
    sp = Space(QQ, ("x", "y"))
    m = LinMap.from_dense(sp, sp, [[1, 0], [1, 0]])  # image is the diagonal
    b = Element.from_dense(sp, [1, 0])
    assert linsolve(m, b) is None


# ---------------------------------------------------------------------------
# echelon forms and quotients


def test_echelon_insert_and_membership():
    ech = Echelon(QQ, 4)
    p0 = ech.insert({0: QQ.one, 2: QQ.one})
    assert p0 is not None
    # pivot index 0 is meaningful -- never test it for truthiness
    assert p0 == 0
    assert ech.insert({1: QQ.one}) == 1
    assert ech.insert({0: QQ.from_int(2), 1: QQ.from_int(3), 2: QQ.from_int(2)}) is None
    assert ech.rank == 2
    assert ech.contains({0: QQ.one, 1: QQ.neg(QQ.one), 2: QQ.one})
    assert not ech.contains({3: QQ.one})
    assert ech.reduce({0: QQ.one, 2: QQ.one}) == {}


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_echelon_canonical_form_is_order_independent(data):
    dim = 5
    rows = []
    for _ in range(data.draw(st.integers(1, 6))):
        row = {
            j: QQ.from_int(c)
            for j in range(dim)
            if (c := data.draw(st.integers(-2, 2)))
        }
        if row:
            rows.append(row)
    perm = data.draw(st.permutations(range(len(rows))))

    def canonical(order):
        ech = Echelon(QQ, dim)
        ech.insert_all(rows[i] for i in order)
        ech.canonicalize()
        probe = [ech.reduce({j: QQ.one}) for j in range(dim)]
        return ech.rank, probe

    assert canonical(range(len(rows))) == canonical(perm)


def test_dense_rref_agrees_with_sparse_membership():
    rows = [[1, 2, 0], [0, 1, 1], [1, 3, 1]]
    rref, pivots = dense_rref([[QQ.from_int(c) for c in r] for r in rows], QQ)
    assert pivots == [0, 1]
    ech = Echelon(QQ, 3)
    ech.insert_all({j: QQ.from_int(c) for j, c in enumerate(r) if c} for r in rows)
    assert ech.rank == len(pivots)


@pytest.mark.parametrize("method", ["sparse", "dense"])
def test_quotient_space_projection(method):
    sp = Space(QQ, tuple("abcdef"))
    relations = [
        Element.from_coords(sp, {0: 1, 1: -1}),
        Element.from_coords(sp, {2: 1, 3: 1, 4: 1}),
        Element.from_coords(sp, {0: 2, 1: -2}),  # dependent
    ]
    q = quotient_space(sp, relations, method=method)
    assert q.dim == 4  # 6 ambient - 2 independent relations
    for rel in relations:
        assert q.project.apply(rel).is_zero()
    # section is a right inverse of the projection
    assert q.project.compose(q.section) == LinMap.identity(q.space)
    # projection is deterministic: a - b maps to zero, a and b agree
    assert q.project_elem(Element.basis(sp, 0)) == q.project_elem(Element.basis(sp, 1))


def test_quotient_methods_agree():
    sp = Space(QQ, tuple(f"e{i}" for i in range(10)))
    relations = [
        Element.from_coords(sp, {i: 1, (i + 3) % 10: -2}) for i in range(0, 9, 2)
    ]
    qs = quotient_space(sp, relations, method="sparse")
    qd = quotient_space(sp, relations, method="dense")
    assert qs.dim == qd.dim
    assert qs.free_indices == qd.free_indices
    assert qs.project == qd.project
    assert qs.section == qd.section


def test_quotient_by_nothing_and_by_everything():
    sp = Space(QQ, ("x", "y"))
    assert quotient_space(sp, []).dim == 2
    full = quotient_space(sp, [Element.basis(sp, 0), Element.basis(sp, 1)])
    assert full.dim == 0
    assert full.project_elem(Element.from_dense(sp, [3, 4])).is_zero()


def test_scalar_line():
    line = scalar_line(QQ)
    assert line.dim == 1 and line.labels == ("1",)
