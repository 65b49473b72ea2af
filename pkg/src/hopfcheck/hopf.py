"""Finite dimensional algebras, bialgebras, and Hopf algebras by structure constants.

An algebra is a space plus a multiplication map on its tensor square and a
unit vector; a bialgebra adds a comultiplication into the tensor square and
a counit; a Hopf algebra adds an antipode.  Nothing here assumes the axioms
hold: the data classes store raw structure constants and the check_*
functions verify every axiom on basis elements, returning a Report whose
failing entries carry the first offending basis tuple and both evaluated
sides.
"""

from __future__ import annotations

from typing import Sequence

from .exactlin import (
    Element,
    LinMap,
    NotInvertibleError,
    Space,
    _addmul,
    invert_linmap,
    scalar_line,
    unrank_index,
)
from .report import CheckResult, Report


def flip_map(v: Space, w: Space) -> LinMap:
    """The swap isomorphism v (x) w -> w (x) v."""
    one = v.field.one
    dv, dw = v.dim, w.dim
    cols = tuple({j * dv + i: one} for i in range(dv) for j in range(dw))
    return LinMap(v.tensor(w), w.tensor(v), cols)


class AlgebraData:
    """A unital algebra: space, multiplication map, unit vector.

    mult maps the tensor square to the space (column i*dim+j holds the
    product of basis elements i and j); no axiom is assumed until
    check_algebra has passed.
    """

    def __init__(self, space: Space, mult: LinMap, unit: Element, name: str = "") -> None:
        self.space = space
        self.square = space.tensor(space)
        if mult.domain != self.square or mult.codomain != space:
            raise ValueError("multiplication map has the wrong shape")
        if unit.space != space:
            raise ValueError("unit vector lives in the wrong space")
        self.mult = mult
        self.unit = unit
        self.name = name or f"algebra(dim={space.dim})"

    @property
    def field(self):
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_product_col(self, i: int, j: int) -> dict:
        """Raw coordinates of (basis i) * (basis j)."""
        return self.mult.cols[i * self.space.dim + j]

    def basis_product(self, i: int, j: int) -> Element:
        return Element(self.space, dict(self.basis_product_col(i, j)))

    def multiply(self, x: Element, y: Element) -> Element:
        if x.space != self.space or y.space != self.space:
            raise ValueError("factors live outside the algebra")
        field = self.field
        d = self.space.dim
        cols = self.mult.cols
        out: dict = {}
        for i, a in x.coords.items():
            base = i * d
            for j, b in y.coords.items():
                _addmul(out, cols[base + j], field.mul(a, b), field)
        return Element(self.space, out)

    def left_mult(self, u: Element) -> LinMap:
        """The map x -> u * x."""
        return LinMap.from_function(
            self.space, self.space, lambda j: self.multiply(u, Element.basis(self.space, j))
        )

    def right_mult(self, u: Element) -> LinMap:
        """The map x -> x * u."""
        return LinMap.from_function(
            self.space, self.space, lambda j: self.multiply(Element.basis(self.space, j), u)
        )

    def power(self, u: Element, n: int) -> Element:
        if n < 0:
            raise ValueError("negative powers need invert_in_algebra")
        out = self.unit
        for _ in range(n):
            out = self.multiply(out, u)
        return out

    def op(self) -> "AlgebraData":
        """The opposite algebra (same space, reversed multiplication)."""
        d = self.space.dim
        cols = tuple(self.mult.cols[j * d + i] for i in range(d) for j in range(d))
        return AlgebraData(
            self.space, LinMap(self.square, self.space, cols), self.unit, f"{self.name}^op"
        )

    def is_commutative(self) -> bool:
        d = self.space.dim
        return all(
            self.basis_product_col(i, j) == self.basis_product_col(j, i)
            for i in range(d)
            for j in range(i)
        )

    def __repr__(self) -> str:
        return f"AlgebraData({self.name})"


def same_algebra(a: AlgebraData, b: AlgebraData) -> bool:
    """Structural coincidence of algebra data; names are ignored."""
    return a is b or (a.space == b.space and a.mult == b.mult and a.unit == b.unit)


class BialgebraData(AlgebraData):
    """An algebra with a comultiplication and counit on the same space."""

    def __init__(
        self,
        space: Space,
        mult: LinMap,
        unit: Element,
        comult: LinMap,
        counit: LinMap,
        name: str = "",
    ) -> None:
        super().__init__(space, mult, unit, name or f"bialgebra(dim={space.dim})")
        if comult.domain != space or comult.codomain != self.square:
            raise ValueError("comultiplication map has the wrong shape")
        if counit.domain != space or counit.codomain.dim != 1:
            raise ValueError("counit must map into the scalar line")
        self.comult = comult
        self.counit = counit

    def comult_col(self, i: int) -> dict:
        return self.comult.cols[i]

    def comult_elem(self, x: Element) -> Element:
        return self.comult.apply(x)

    def counit_scalar_basis(self, i: int):
        return self.counit.cols[i].get(0, self.field.zero)

    def counit_scalar(self, x: Element):
        field = self.field
        out = field.zero
        for i, c in x.coords.items():
            e = self.counit.cols[i].get(0)
            if e is not None:
                out = field.add(out, field.mul(c, e))
        return out

    def comult_op(self) -> LinMap:
        """The flipped comultiplication x -> swap(comult(x))."""
        return flip_map(self.space, self.space).compose(self.comult)

    def coop(self) -> "BialgebraData":
        """Same algebra with the flipped comultiplication."""
        return BialgebraData(
            self.space, self.mult, self.unit, self.comult_op(), self.counit, f"{self.name}^cop"
        )


def same_bialgebra(a: BialgebraData, b: BialgebraData) -> bool:
    """Structural coincidence of bialgebra data; names are ignored."""
    return same_algebra(a, b) and a.comult == b.comult and a.counit == b.counit


class HopfData(BialgebraData):
    """A bialgebra with an antipode map."""

    def __init__(
        self,
        space: Space,
        mult: LinMap,
        unit: Element,
        comult: LinMap,
        counit: LinMap,
        antipode: LinMap,
        name: str = "",
    ) -> None:
        super().__init__(space, mult, unit, comult, counit, name or f"hopf(dim={space.dim})")
        if antipode.domain != space or antipode.codomain != space:
            raise ValueError("antipode map has the wrong shape")
        self.antipode = antipode
        self._antipode_inverse: LinMap | None = None

    @property
    def antipode_inverse(self) -> LinMap:
        """Inverse of the antipode; always exists in finite dimension when
        the antipode axiom holds, but raised lazily if the stored map is
        singular."""
        if self._antipode_inverse is None:
            inv = invert_linmap(self.antipode)
            if inv is None:
                raise NotInvertibleError("antipode map is singular")
            self._antipode_inverse = inv
        return self._antipode_inverse

    def bialgebra(self) -> BialgebraData:
        """Forget the antipode."""
        return BialgebraData(
            self.space, self.mult, self.unit, self.comult, self.counit, self.name
        )


def tensor_algebra(a: AlgebraData, b: AlgebraData, name: str = "") -> AlgebraData:
    """Componentwise product algebra on the tensor product of two algebras."""
    if a.field != b.field:
        raise ValueError("tensor factors must share a field")
    space = a.space.tensor(b.space)
    da, db = a.dim, b.dim
    field = a.field
    cols = []
    # Column for basis pair ((i1,i2),(j1,j2)) is (e_i1 e_j1) (x) (e_i2 e_j2).
    for i1 in range(da):
        for i2 in range(db):
            for j1 in range(da):
                for j2 in range(db):
                    ca = a.basis_product_col(i1, j1)
                    cb = b.basis_product_col(i2, j2)
                    col: dict = {}
                    for k1, v1 in ca.items():
                        base = k1 * db
                        for k2, v2 in cb.items():
                            col[base + k2] = field.mul(v1, v2)
                    cols.append(col)
    mult = LinMap(space.tensor(space), space, tuple(cols))
    unit = a.unit.tensor(b.unit)
    return AlgebraData(space, mult, unit, name or f"{a.name}(x){b.name}")


def tensor_multiply(factors: Sequence[AlgebraData], u: Element, v: Element) -> Element:
    """Product of u and v in the componentwise algebra on a tensor space.

    Works leg by leg on the sparse supports, so the full multiplication map
    of the tensor algebra is never materialised.  u and v must live in the
    same tensor space whose factor dims match the given algebras.
    """
    space = u.space
    if v.space != space:
        raise ValueError("factors live in different spaces")
    dims = space.factor_dims
    if len(dims) != len(factors) or any(
        d != alg.dim for d, alg in zip(dims, factors)
    ):
        raise ValueError("tensor legs do not match the given algebras")
    field = space.field
    out: dict = {}
    for iu, a in u.coords.items():
        mu = unrank_index(dims, iu)
        for iv, b in v.coords.items():
            mv = unrank_index(dims, iv)
            partial = {0: field.mul(a, b)}
            for leg, alg in enumerate(factors):
                col = alg.basis_product_col(mu[leg], mv[leg])
                if not col:
                    partial = {}
                    break
                d = dims[leg]
                nxt: dict = {}
                for pidx, pc in partial.items():
                    base = pidx * d
                    for k, w in col.items():
                        nxt[base + k] = field.mul(pc, w)
                partial = nxt
            for k, w in partial.items():
                prev = out.get(k)
                if prev is None:
                    out[k] = w
                else:
                    prev = field.add(prev, w)
                    if prev:
                        out[k] = prev
                    else:
                        del out[k]
    return Element(space, out)


# ---------------------------------------------------------------------------
# Axiom checks


def _record_identity(
    report: Report,
    name: str,
    tuples,
    lhs_fn,
    rhs_fn,
    labels,
) -> CheckResult:
    """Check lhs_fn(t) == rhs_fn(t) over all tuples; record the first witness."""
    failures = 0
    first = None
    for t in tuples:
        lhs = lhs_fn(*t)
        rhs = rhs_fn(*t)
        if lhs != rhs:
            failures += 1
            if first is None:
                first = (t, lhs, rhs)
    if first is None:
        return report.record(name, True)
    t, lhs, rhs = first
    return report.record(
        name,
        False,
        at=tuple(labels[i] for i in t),
        lhs=lhs.pretty(),
        rhs=rhs.pretty(),
        failures=failures,
    )


def check_algebra(alg: AlgebraData, report: Report | None = None) -> Report:
    """Associativity and two-sided unit, checked on every basis tuple."""
    if report is None:
        report = Report(alg.name)
    space = alg.space
    d = space.dim
    labels = space.labels
    basis = [Element.basis(space, i) for i in range(d)]

    _record_identity(
        report,
        "associativity",
        ((i, j, k) for i in range(d) for j in range(d) for k in range(d)),
        lambda i, j, k: alg.multiply(alg.basis_product(i, j), basis[k]),
        lambda i, j, k: alg.multiply(basis[i], alg.basis_product(j, k)),
        labels,
    )
    failures = 0
    first = None
    for i in range(d):
        for side in ("left", "right"):
            got = (
                alg.multiply(alg.unit, basis[i])
                if side == "left"
                else alg.multiply(basis[i], alg.unit)
            )
            if got != basis[i]:
                failures += 1
                if first is None:
                    first = (i, side, got)
    if first is None:
        report.record("unit", True)
    else:
        i, side, got = first
        report.record(
            "unit",
            False,
            at=(labels[i], side),
            lhs=got.pretty(),
            rhs=basis[i].pretty(),
            failures=failures,
        )
    return report


def _counit_contract(b: BialgebraData, square_coords: dict, side: str) -> Element:
    """Contract one leg of a tensor-square vector with the counit."""
    field = b.field
    d = b.space.dim
    out: dict = {}
    for idx, c in square_coords.items():
        j, k = divmod(idx, d)
        if side == "left":
            eps, keep = b.counit_scalar_basis(j), k
        else:
            eps, keep = b.counit_scalar_basis(k), j
        if eps:
            w = out.get(keep)
            v = field.mul(c, eps)
            if w is None:
                out[keep] = v
            else:
                w = field.add(w, v)
                if w:
                    out[keep] = w
                else:
                    del out[keep]
    return Element(b.space, out)


def check_bialgebra(b: BialgebraData, report: Report | None = None) -> Report:
    """All bialgebra axioms on basis elements.

    Seven named checks: associativity, unit, coassociativity, counit law,
    comult multiplicative, comult unital, counit multiplicative and unital.
    """
    if report is None:
        report = Report(b.name)
    check_algebra(b, report)
    space = b.space
    d = space.dim
    labels = space.labels
    basis = [Element.basis(space, i) for i in range(d)]
    square = b.square
    field = b.field

    # coassociativity: both iterated comultiplications agree leg-for-leg
    cube = square.tensor(space)
    comult_left = b.comult.tensor(LinMap.identity(space))  # comult on leg 1 of square
    comult_right = LinMap.identity(space).tensor(b.comult)
    _record_identity(
        report,
        "coassociativity",
        ((i,) for i in range(d)),
        lambda i: comult_left.apply(b.comult_elem(basis[i])),
        lambda i: comult_right.apply(b.comult_elem(basis[i])),
        labels,
    )

    # the side flag is not a basis index, so handle the witness by hand
    failures = 0
    first = None
    for i in range(d):
        for side in ("left", "right"):
            lhs = _counit_contract(b, b.comult_col(i), side)
            if lhs != basis[i]:
                failures += 1
                if first is None:
                    first = (i, side, lhs)
    if first is None:
        report.record("counit law", True)
    else:
        i, side, lhs = first
        report.record(
            "counit law",
            False,
            at=(labels[i], side),
            lhs=lhs.pretty(),
            rhs=basis[i].pretty(),
            failures=failures,
        )

    _record_identity(
        report,
        "comult multiplicative",
        ((i, j) for i in range(d) for j in range(d)),
        lambda i, j: Element(square, b.comult.apply_col(b.basis_product_col(i, j))),
        lambda i, j: tensor_multiply(
            (b, b), b.comult_elem(basis[i]), b.comult_elem(basis[j])
        ),
        labels,
    )

    one_one = b.unit.tensor(b.unit)
    comult_unit = b.comult_elem(b.unit)
    if comult_unit == one_one:
        report.record("comult unital", True)
    else:
        report.record(
            "comult unital",
            False,
            at=("1",),
            lhs=comult_unit.pretty(),
            rhs=one_one.pretty(),
            failures=1,
        )

    failures = 0
    first_cm = None
    for i in range(d):
        for j in range(d):
            lhs = b.counit_scalar(b.basis_product(i, j))
            rhs = field.mul(b.counit_scalar_basis(i), b.counit_scalar_basis(j))
            if lhs != rhs:
                failures += 1
                if first_cm is None:
                    first_cm = (i, j, lhs, rhs)
    unital_ok = b.counit_scalar(b.unit) == field.one
    if first_cm is None and unital_ok:
        report.record("counit multiplicative and unital", True)
    elif first_cm is not None:
        i, j, lhs, rhs = first_cm
        report.record(
            "counit multiplicative and unital",
            False,
            at=(labels[i], labels[j]),
            lhs=field.to_str(lhs),
            rhs=field.to_str(rhs),
            failures=failures + (0 if unital_ok else 1),
        )
    else:
        report.record(
            "counit multiplicative and unital",
            False,
            at=("1",),
            lhs=field.to_str(b.counit_scalar(b.unit)),
            rhs=field.to_str(field.one),
            failures=1,
        )
    return report


def _antipode_convolution(h: HopfData, i: int, side: str) -> Element:
    """m(S (x) id)comult(e_i) or m(id (x) S)comult(e_i)."""
    field = h.field
    d = h.space.dim
    out: dict = {}
    for idx, c in h.comult_col(i).items():
        j, k = divmod(idx, d)
        if side == "left":
            for sj, sc in h.antipode.cols[j].items():
                _addmul(out, h.basis_product_col(sj, k), field.mul(c, sc), field)
        else:
            for sk, sc in h.antipode.cols[k].items():
                _addmul(out, h.basis_product_col(j, sk), field.mul(c, sc), field)
    return Element(h.space, out)


def check_hopf(h: HopfData, report: Report | None = None) -> Report:
    """Bialgebra axioms plus the antipode law on every basis element."""
    if report is None:
        report = Report(h.name)
    check_bialgebra(h, report)
    labels = h.space.labels
    failures = 0
    first = None
    for i in range(h.dim):
        target = h.unit.scale(h.counit_scalar_basis(i))
        for side in ("left", "right"):
            got = _antipode_convolution(h, i, side)
            if got != target:
                failures += 1
                if first is None:
                    first = (i, side, got, target)
    if first is None:
        report.record("antipode law", True)
    else:
        i, side, got, target = first
        report.record(
            "antipode law",
            False,
            at=(labels[i], side),
            lhs=got.pretty(),
            rhs=target.pretty(),
            failures=failures,
        )
    return report
