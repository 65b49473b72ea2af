"""Invertible two-cocycles on a bialgebra and the twisted bialgebra.

A twist is an invertible, counital element of the tensor square whose
coboundary in the triple tensor power is trivial; conjugating the
comultiplication by it yields a new bialgebra on the same algebra.  The
checker verifies the cocycle identity in four equivalent product forms
(plain, inverse, and the two mixed forms), since downstream constructions
consume each form separately and a transcription error in any one of them
would otherwise go unnoticed.
"""

from __future__ import annotations

from .exactlin import (
    Element,
    LinMap,
    NotInvertibleError,
    Space,
    apply_on_leg,
    invert_in_algebra,
)
from .hopf import (
    BialgebraData,
    HopfData,
    _counit_contract,
    tensor_algebra,
    tensor_multiply,
)
from .report import Report


class Twist:
    """A candidate two-cocycle: an element of the tensor square of the host
    together with a stored two-sided inverse.  Construct through make_twist
    (which solves for the inverse), certify with check_twist."""

    def __init__(self, host: BialgebraData, element: Element, inverse: Element) -> None:
        if element.space != host.square or inverse.space != host.square:
            raise ValueError("twist data must live in the tensor square of the host")
        self.host = host
        self.element = element
        self.inverse = inverse
        self.triple = host.square.tensor(host.space)  # factor dims (d, d, d)
        self._twisted: BialgebraData | None = None

    def __repr__(self) -> str:
        return f"Twist(host={self.host.name})"

    @property
    def twisted_host(self) -> BialgebraData:
        """The twisted bialgebra, built on first use and cached."""
        if self._twisted is None:
            self._twisted = twist_bialgebra(self)
        return self._twisted

    def is_trivial(self) -> bool:
        one_one = self.host.unit.tensor(self.host.unit)
        return self.element == one_one and self.inverse == one_one


def trivial_twist(host: BialgebraData) -> Twist:
    one_one = host.unit.tensor(host.unit)
    return Twist(host, one_one, one_one)


def invert_twist(host: BialgebraData, element: Element) -> Element:
    """Two-sided inverse of a tensor-square element in the componentwise
    algebra on the tensor square; raises NotInvertibleError."""
    square_alg = tensor_algebra(host, host)
    return invert_in_algebra(square_alg, element)


def make_twist(host: BialgebraData, element: Element, inverse: Element | None = None) -> Twist:
    """Wrap a tensor-square element as a twist, solving for the inverse
    when it is not supplied."""
    if inverse is None:
        inverse = invert_twist(host, element)
    return Twist(host, element, inverse)


def swap_twist(t: Twist) -> Twist:
    """The twist with element and inverse exchanged (the inverse cocycle)."""
    return Twist(t.host, t.inverse, t.element)


def inverse_twist_of_twisted(t: Twist) -> Twist:
    """The inverse element viewed as a twist on the twisted bialgebra;
    twisting by t and then by this returns the original comultiplication."""
    return Twist(t.twisted_host, t.inverse, t.element)


def embed_pair_in_triple(
    host: BialgebraData, x: Element, position: str, out_space: Space | None = None
) -> Element:
    """Place a tensor-square element on two legs of the triple power, the
    unit on the remaining leg.  position is "12", "23", or "13"."""
    if position not in ("12", "23", "13"):
        raise ValueError(f"bad leg position {position!r}")
    d = host.dim
    if out_space is None:
        out_space = host.square.tensor(host.space)
    field = host.field
    coords: dict = {}
    for idx, c in x.coords.items():
        i, j = divmod(idx, d)
        for k, u in host.unit.coords.items():
            if position == "12":
                key = (i * d + j) * d + k
            elif position == "23":
                key = (k * d + i) * d + j
            else:
                key = (i * d + k) * d + j
            v = field.mul(c, u)
            prev = coords.get(key)
            if prev is None:
                coords[key] = v
            else:
                prev = field.add(prev, v)
                if prev:
                    coords[key] = prev
                else:
                    del coords[key]
    return Element(out_space, coords)


def _comult_leg(host: BialgebraData, x: Element, leg: int, out_space: Space) -> Element:
    """Apply the host comultiplication to one leg of a square element."""
    return apply_on_leg(host.comult, x, leg, out_space=out_space)


def check_twist(
    host_or_twist: BialgebraData | Twist,
    element: Element | None = None,
    inverse: Element | None = None,
    report: Report | None = None,
) -> Report:
    """All defining identities of an invertible counital two-cocycle.

    Accepts either a Twist or (host, element[, inverse]); in the latter
    form the inverse is solved for, and failure to invert is itself a
    reported check (the identities needing the inverse are then omitted).
    """
    if isinstance(host_or_twist, Twist):
        t = host_or_twist
        host = t.host
    else:
        host = host_or_twist
        if element is None:
            raise ValueError("check_twist needs the candidate element")
        try:
            t = make_twist(host, element, inverse)
        except NotInvertibleError:
            t = None
    if report is None:
        report = Report(f"twist on {host.name}")

    pair = (host, host)
    triple_algs = (host, host, host)
    one_one = host.unit.tensor(host.unit)

    if t is None:
        report.record(
            "invertible",
            False,
            lhs=element.pretty(),
            detail="no two-sided inverse in the tensor-square algebra",
        )
        # the identities that need no inverse are still informative
        _check_counital(report, host, (("element", element),))
        triple = host.square.tensor(host.space)
        lhs = tensor_multiply(
            triple_algs,
            embed_pair_in_triple(host, element, "23", triple),
            _comult_leg(host, element, 1, triple),
        )
        rhs = tensor_multiply(
            triple_algs,
            embed_pair_in_triple(host, element, "12", triple),
            _comult_leg(host, element, 0, triple),
        )
        report.record("cocycle", lhs == rhs, **({} if lhs == rhs else dict(lhs=lhs.pretty(), rhs=rhs.pretty())))
        return report

    F = t.element
    Fb = t.inverse

    lhs = tensor_multiply(pair, F, Fb)
    rhs = tensor_multiply(pair, Fb, F)
    if lhs == one_one and rhs == one_one:
        report.record("invertible", True)
    else:
        bad = lhs if lhs != one_one else rhs
        report.record(
            "invertible",
            False,
            lhs=bad.pretty(),
            rhs=one_one.pretty(),
            detail="stored inverse is not two-sided",
        )

    _check_counital(report, host, (("element", F), ("inverse", Fb)))

    # cocycle identity and its three derived product forms, all in the
    # triple tensor power
    triple = t.triple
    idD_F = _comult_leg(host, F, 1, triple)  # comult applied to the second leg
    Did_F = _comult_leg(host, F, 0, triple)
    idD_Fb = _comult_leg(host, Fb, 1, triple)
    Did_Fb = _comult_leg(host, Fb, 0, triple)
    oneF = embed_pair_in_triple(host, F, "23", triple)
    Fone = embed_pair_in_triple(host, F, "12", triple)
    oneFb = embed_pair_in_triple(host, Fb, "23", triple)
    Fbone = embed_pair_in_triple(host, Fb, "12", triple)

    forms = (
        (
            "cocycle",
            tensor_multiply(triple_algs, oneF, idD_F),
            tensor_multiply(triple_algs, Fone, Did_F),
        ),
        (
            "inverse cocycle",
            tensor_multiply(triple_algs, idD_Fb, oneFb),
            tensor_multiply(triple_algs, Did_Fb, Fbone),
        ),
        (
            "mixed cocycle left",
            tensor_multiply(triple_algs, Fbone, oneF),
            tensor_multiply(triple_algs, Did_F, idD_Fb),
        ),
        (
            "mixed cocycle right",
            tensor_multiply(triple_algs, oneFb, Fone),
            tensor_multiply(triple_algs, idD_F, Did_Fb),
        ),
    )
    for name, left, right in forms:
        if left == right:
            report.record(name, True)
        else:
            report.record(name, False, lhs=left.pretty(), rhs=right.pretty())
    return report


def _check_counital(report: Report, host: BialgebraData, items) -> None:
    witness = None
    for label, x in items:
        for side in ("left", "right"):
            got = _counit_contract(host, x.coords, side)
            if got != host.unit:
                witness = (label, side, got)
                break
        if witness:
            break
    if witness is None:
        report.record("counital", True)
    else:
        label, side, got = witness
        report.record(
            "counital",
            False,
            at=(label, side),
            lhs=got.pretty(),
            rhs=host.unit.pretty(),
        )


def twisted_comult(t: Twist) -> LinMap:
    """The conjugated comultiplication h -> F comult(h) F^{-1}."""
    host = t.host
    pair = (host, host)
    cols = []
    for i in range(host.dim):
        x = Element(host.square, dict(host.comult_col(i)))
        x = tensor_multiply(pair, t.element, x)
        x = tensor_multiply(pair, x, t.inverse)
        cols.append(x.coords)
    return LinMap(host.space, host.square, tuple(cols))


def twist_bialgebra(t: Twist) -> BialgebraData:
    """The twisted bialgebra: same algebra and counit, conjugated comult.

    A Hopf host yields a Hopf result; the twisted antipode is conjugation
    by the invertible element sum((first leg of F) * antipode(second leg)).
    """
    host = t.host
    comult_f = twisted_comult(t)
    name = f"twist({host.name})"
    if not isinstance(host, HopfData):
        return BialgebraData(host.space, host.mult, host.unit, comult_f, host.counit, name)
    field = host.field
    d = host.dim
    u_coords: dict = {}
    for idx, c in t.element.coords.items():
        f1, f2 = divmod(idx, d)
        for s, w in host.antipode.cols[f2].items():
            col = host.basis_product_col(f1, s)
            cw = field.mul(c, w)
            for k, v in col.items():
                prev = u_coords.get(k)
                nv = field.mul(cw, v)
                if prev is None:
                    u_coords[k] = nv
                else:
                    prev = field.add(prev, nv)
                    if prev:
                        u_coords[k] = prev
                    else:
                        del u_coords[k]
    u = Element(host.space, u_coords)
    u_inv = invert_in_algebra(host, u)
    antipode_f = LinMap.from_function(
        host.space,
        host.space,
        lambda j: host.multiply(
            host.multiply(u, host.antipode.apply(Element.basis(host.space, j))), u_inv
        ),
    )
    return HopfData(host.space, host.mult, host.unit, comult_f, host.counit, antipode_f, name)
