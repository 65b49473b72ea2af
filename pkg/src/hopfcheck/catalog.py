"""Certified constructors for the standard example families.

Finite group presentations and their group algebras, characters and
idempotents of elementary abelian 2-groups, bicharacter twists and
R-elements built from those idempotents, the 4-dimensional pointed
noncommutative noncocommutative Hopf algebra, coboundary twists, and the
two standard braided-commutative YD module algebras: conjugation on a
group algebra and the adjoint structure on a Hopf algebra with bijective
antipode.

Every constructor certifies its output with the relevant checker before
returning (fail-closed); pass certify=False only when the caller runs the
same checks itself.
"""

from __future__ import annotations

from itertools import permutations

from .exactlin import Element, FieldError, LinMap, Space, invert_in_algebra
from .hopf import AlgebraData, HopfData, check_hopf, tensor_multiply
from .report import Report
from .twist import Twist, check_twist
from .yd import (
    RMatrix,
    YDAlgebra,
    check_braided_commutative,
    check_rmatrix,
    check_yd_algebra,
    yd_algebra,
)


class GroupPresentation:
    """A finite group by its multiplication table; labels name the basis of
    the group algebra.  Group axioms are verified once at construction."""

    def __init__(self, names: tuple[str, ...], table: list[list[int]], name: str = "") -> None:
        n = len(names)
        if len(set(names)) != n:
            raise ValueError("group element names must be distinct")
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError("multiplication table must be square")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ValueError("table entries must be element indices")
        identity = None
        for e in range(n):
            if all(table[e][g] == g and table[g][e] == g for g in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no identity element")
        inverses = []
        for g in range(n):
            inv = next((h for h in range(n) if table[g][h] == identity), None)
            if inv is None or table[inv][g] != identity:
                raise ValueError(f"element {names[g]} has no two-sided inverse")
            inverses.append(inv)
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise ValueError(
                            f"table is not associative at ({names[a]}, {names[b]}, {names[c]})"
                        )
        self.names = tuple(names)
        self.table = [list(row) for row in table]
        self.identity = identity
        self.inverses = inverses
        self.name = name or f"group(order={n})"

    @property
    def order(self) -> int:
        return len(self.names)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i))

    def __repr__(self) -> str:
        return f"GroupPresentation({self.name})"


def cyclic_group(n: int) -> GroupPresentation:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    names = tuple("e" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupPresentation(names, table, f"Z{n}")


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + "".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "e"


def symmetric_group(n: int) -> GroupPresentation:
    """All permutations of n points (n <= 9 so cycle labels stay readable);
    the product applies the right factor first."""
    if not 1 <= n <= 9:
        raise ValueError("symmetric group supported for 1 <= n <= 9")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in perms]
        for p in perms
    ]
    names = tuple(_cycle_label(p) for p in perms)
    return GroupPresentation(names, table, f"S{n}")


def direct_product(g: GroupPresentation, h: GroupPresentation) -> GroupPresentation:
    names = tuple(f"({a},{b})" for a in g.names for b in h.names)
    nh = h.order
    table = []
    for a1 in range(g.order):
        for b1 in range(nh):
            row = []
            for a2 in range(g.order):
                for b2 in range(nh):
                    row.append(g.mul(a1, a2) * nh + h.mul(b1, b2))
            table.append(row)
    return GroupPresentation(names, table, f"{g.name}x{h.name}")


def klein_four_group() -> GroupPresentation:
    return direct_product(cyclic_group(2), cyclic_group(2))


def group_algebra(group: GroupPresentation, field, certify: bool = True) -> HopfData:
    """The group algebra as a Hopf algebra: group-like comultiplication,
    counit one on every element, antipode by inversion."""
    d = group.order
    space = Space(field, group.names)
    one = field.one
    mult_cols = tuple({group.table[i][j]: one} for i in range(d) for j in range(d))
    mult = LinMap(space.tensor(space), space, mult_cols)
    unit = Element.basis(space, group.identity)
    comult = LinMap(space, space.tensor(space), tuple({i * d + i: one} for i in range(d)))
    counit = LinMap(space, Space(field, ("1",)), tuple({0: one} for _ in range(d)))
    antipode = LinMap(space, space, tuple({group.inverses[i]: one} for i in range(d)))
    h = HopfData(space, mult, unit, comult, counit, antipode, f"k[{group.name}]")
    if certify:
        check_hopf(h).require()
    return h


def sweedler_h4(field, certify: bool = True) -> HopfData:
    """The 4-dimensional pointed Hopf algebra on 1, g, x, gx with g*g = 1,
    x*x = 0, x*g = -g*x; undefined in characteristic two, where the sign
    relations collapse."""
    if field.char == 2:
        raise ValueError("the 4-dimensional pointed Hopf algebra needs characteristic != 2")
    labels = ("1", "g", "x", "gx")
    space = Space(field, labels)
    one = field.one
    neg = field.neg(one)
    # products, row index times column index
    prod: dict[tuple[int, int], dict] = {}
    for j in range(4):
        prod[(0, j)] = {j: one}
        if j != 0:
            prod[(j, 0)] = {j: one}
    prod[(1, 1)] = {0: one}
    prod[(1, 2)] = {3: one}
    prod[(1, 3)] = {2: one}
    prod[(2, 1)] = {3: neg}
    prod[(2, 2)] = {}
    prod[(2, 3)] = {}
    prod[(3, 1)] = {2: neg}
    prod[(3, 2)] = {}
    prod[(3, 3)] = {}
    mult = LinMap(
        space.tensor(space), space, tuple(dict(prod[(i, j)]) for i in range(4) for j in range(4))
    )
    unit = Element.basis(space, 0)
    comult_cols = (
        {0 * 4 + 0: one},
        {1 * 4 + 1: one},
        {2 * 4 + 0: one, 1 * 4 + 2: one},  # x (x) 1 + g (x) x
        {3 * 4 + 1: one, 0 * 4 + 3: one},  # gx (x) g + 1 (x) gx
    )
    comult = LinMap(space, space.tensor(space), comult_cols)
    counit = LinMap(space, Space(field, ("1",)), ({0: one}, {0: one}, {}, {}))
    antipode = LinMap(space, space, ({0: one}, {1: one}, {3: neg}, {2: one}))
    h = HopfData(space, mult, unit, comult, counit, antipode, "sweedler4")
    if certify:
        check_hopf(h).require()
    return h


def conjugation_yd(group: GroupPresentation, field, certify: bool = True) -> YDAlgebra:
    """The group algebra as a YD module algebra over itself: basis elements
    act by conjugation and coact by pairing with their inverses."""
    h = group_algebra(group, field, certify=certify)
    d = group.order
    one = field.one
    act_cols = tuple(
        {group.table[hi][group.table[gi][group.inverses[hi]]]: one}
        for hi in range(d)
        for gi in range(d)
    )
    action = LinMap(h.space.tensor(h.space), h.space, act_cols)
    coaction = LinMap(
        h.space,
        h.space.tensor(h.space),
        tuple({gi * d + group.inverses[gi]: one} for gi in range(d)),
    )
    base = AlgebraData(h.space, h.mult, h.unit, f"k[{group.name}]")
    a = yd_algebra(h, base, action, coaction, f"conjugation({group.name})")
    if certify:
        check_yd_algebra(a).require()
        check_braided_commutative(a).require()
    return a


def adjoint_yd(h: HopfData, certify: bool = True) -> YDAlgebra:
    """A Hopf algebra with bijective antipode as a YD module algebra over
    itself: sandwich action through the antipode, coaction through the
    inverse antipode on the flipped comultiplication leg."""
    field = h.field
    d = h.dim
    sinv = h.antipode_inverse  # raises if the antipode is singular
    act_cols = []
    for hi in range(d):
        for ai in range(d):
            col: dict = {}
            for hidx, c in h.comult_col(hi).items():
                h1, h2 = divmod(hidx, d)
                for s, sv in h.antipode.cols[h2].items():
                    csv = field.mul(c, sv)
                    for p, pv in h.basis_product_col(ai, s).items():
                        cpv = field.mul(csv, pv)
                        for q, qv in h.basis_product_col(h1, p).items():
                            prev = col.get(q)
                            nv = field.mul(cpv, qv)
                            if prev is None:
                                col[q] = nv
                            else:
                                prev = field.add(prev, nv)
                                if prev:
                                    col[q] = prev
                                else:
                                    del col[q]
            act_cols.append(col)
    action = LinMap(h.space.tensor(h.space), h.space, tuple(act_cols))
    co_cols = []
    for ai in range(d):
        col = {}
        for pidx, c in h.comult_col(ai).items():
            a1, a2 = divmod(pidx, d)
            for s, sv in sinv.cols[a1].items():
                key = a2 * d + s
                prev = col.get(key)
                nv = field.mul(c, sv)
                if prev is None:
                    col[key] = nv
                else:
                    prev = field.add(prev, nv)
                    if prev:
                        col[key] = prev
                    else:
                        del col[key]
        co_cols.append(col)
    coaction = LinMap(h.space, h.space.tensor(h.space), tuple(co_cols))
    base = AlgebraData(h.space, h.mult, h.unit, h.name)
    a = yd_algebra(h, base, action, coaction, f"adjoint({h.name})")
    if certify:
        check_yd_algebra(a).require()
        check_braided_commutative(a).require()
    return a


# ---------------------------------------------------------------------------
# Characters of elementary abelian 2-groups, idempotents, bicharacter twists


def _two_group_generators(group: GroupPresentation) -> tuple[list[int], list[int]]:
    """Greedy generating set and, per element, its exponent bitmask over
    those generators.  Requires every element to square to the identity."""
    n = group.order
    e = group.identity
    for g in range(n):
        if group.mul(g, g) != e:
            raise ValueError("group is not elementary abelian of exponent two")
    gens: list[int] = []
    exps = {e: 0}
    for g in range(n):
        if g in exps:
            continue
        bit = 1 << len(gens)
        gens.append(g)
        for elem, mask in list(exps.items()):
            exps[group.mul(g, elem)] = mask | bit
    if len(exps) != n:
        raise ValueError("generator closure failed to cover the group")
    return gens, [exps[g] for g in range(n)]


def two_group_characters(group: GroupPresentation) -> list[tuple[int, ...]]:
    """All characters, as tuples of +-1 values indexed by group element.
    Characters are ordered by sign-pattern bitmask over the greedy
    generator set, so the trivial character comes first."""
    gens, exps = _two_group_generators(group)
    k = len(gens)
    n = group.order
    chars = []
    for mask in range(1 << k):
        values = tuple(-1 if bin(mask & exps[g]).count("1") % 2 else 1 for g in range(n))
        chars.append(values)
    return chars


def character_idempotents(group: GroupPresentation, field) -> list[Element]:
    """The orthogonal idempotents of the group algebra attached to the
    characters, in the same order as two_group_characters."""
    n = group.order
    if field.char and n % field.char == 0:
        raise FieldError("group order is not invertible in the field")
    space = Space(field, group.names)
    inv_n = field.inv(field.from_int(n))
    out = []
    for chi in two_group_characters(group):
        coords = {}
        for g in range(n):
            coords[g] = field.mul(inv_n, field.from_int(chi[group.inverses[g]]))
        out.append(Element.from_coords(space, coords))
    return out


def _bicharacter_element(group: GroupPresentation, field, beta, idems: list[Element]) -> Element:
    total = None
    for a in range(len(idems)):
        for b in range(len(idems)):
            val = field.check(beta(a, b))
            if not val:
                raise FieldError("bicharacter values must be invertible scalars")
            term = idems[a].tensor(idems[b]).scale(val)
            total = term if total is None else total.add(term)
    return total


def _normalize_beta(beta, k: int):
    """Accept a callable on character bitmasks or a 0/1 matrix giving the
    sign pairing (-1)^(a^T B b)."""
    if callable(beta):
        return beta
    matrix = [list(row) for row in beta]
    if len(matrix) != k or any(len(row) != k for row in matrix):
        raise ValueError(f"bicharacter matrix must be {k}x{k}")

    def from_matrix(a: int, b: int) -> int:
        s = 0
        for i in range(k):
            if not a >> i & 1:
                continue
            for j in range(k):
                if b >> j & 1:
                    s += matrix[i][j]
        return -1 if s % 2 else 1

    return from_matrix


def bicharacter_structures(
    group: GroupPresentation, beta, field, certify: bool = True
) -> tuple[Twist, RMatrix]:
    """Twist and R-element attached to a bicharacter on the character group
    of an elementary abelian 2-group, through the character idempotents.
    beta is a callable on character-index pairs or a 0/1 matrix for the
    sign pairing; both structures are certified before being returned."""
    h = group_algebra(group, field, certify=certify)
    idems = character_idempotents(group, field)
    k = (len(idems) - 1).bit_length()
    beta_fn = _normalize_beta(beta, k)
    element = _bicharacter_element(group, field, beta_fn, idems)
    inverse = _bicharacter_element(
        group, field, lambda a, b: field.inv(field.check(beta_fn(a, b))), idems
    )
    t = Twist(h, element, inverse)
    r = RMatrix(h, element, inverse)
    if certify:
        check_twist(t).require()
        check_rmatrix(r).require()
    return t, r


def coboundary_twist(h: HopfData, u: Element, certify: bool = True) -> Twist:
    """The twist (u(x)u) * comult(inverse of u) attached to an invertible
    element with counit one."""
    if h.counit_scalar(u) != h.field.one:
        raise ValueError("coboundary generator must have counit one")
    u_inv = invert_in_algebra(h, u)
    pair = (h, h)
    element = tensor_multiply(pair, u.tensor(u), h.comult_elem(u_inv))
    inverse = tensor_multiply(pair, h.comult_elem(u), u_inv.tensor(u_inv))
    t = Twist(h, element, inverse)
    if certify:
        check_twist(t).require()
    return t


# ---------------------------------------------------------------------------
# Named registry (used by the command-line front end)


_GROUP_BUILDERS = {
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z2xZ2": klein_four_group,
    "Z2xZ2xZ2": lambda: direct_product(klein_four_group(), cyclic_group(2)),
    "S3": lambda: symmetric_group(3),
    "S4": lambda: symmetric_group(4),
}


def group_by_name(name: str) -> GroupPresentation:
    try:
        builder = _GROUP_BUILDERS[name]
    except KeyError:
        known = ", ".join(sorted(_GROUP_BUILDERS))
        raise ValueError(f"unknown group {name!r} (known: {known})") from None
    return builder()


def known_groups() -> tuple[str, ...]:
    return tuple(sorted(_GROUP_BUILDERS))
