"""Exact linear algebra over the rationals and prime fields.

Everything else in this package reduces to the primitives here: finite
dimensional spaces with named bases, sparse vectors and linear maps with
exact scalar entries, deterministic row reduction, quotient spaces with
canonical sections, and linear solving inside finite dimensional algebras.

No floating point anywhere.  Rational scalars are gmpy2.mpq when gmpy2 is
importable and fractions.Fraction otherwise (both exact; gmpy2 is just
faster).  Prime field scalars are plain ints reduced mod p.

Tensor index convention (fixed for the whole package): composite indices
are row-major, i.e. the leftmost tensor factor varies slowest.  For
V (x) W with dim W = m the pair (i, j) maps to i*m + j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Callable, Iterable, Mapping, Sequence

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq

_FRACTION_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")

TENSOR_SEP = "⊗"  # the (x) symbol used in composite basis labels


class FieldError(ValueError):
    """Bad scalar input: wrong type, wrong format, or division by zero."""


class NotInvertibleError(ValueError):
    """Raised when an element has no two-sided inverse."""


class Rationals:
    """The field Q.  Scalar values are exact rationals."""

    char = 0
    descriptor = "Q"

    def __init__(self) -> None:
        self.zero = _mpq(0)
        self.one = _mpq(1)

    def __repr__(self) -> str:
        return "Q"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise FieldError("division by zero in Q")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise FieldError("division by zero in Q")
        return a / b

    def from_int(self, n: int):
        return _mpq(n)

    def parse(self, text: str):
        """Parse "7" or "-3/4".  Anything else (floats included) is rejected."""
        if not isinstance(text, str) or not _FRACTION_RE.match(text):
            raise FieldError(f"bad rational literal {text!r}: want 'n' or 'n/d'")
        return _mpq(text)

    def to_str(self, a) -> str:
        return str(a)

    def check(self, value):
        """Coerce a trusted-type scalar; floats are banned everywhere."""
        if isinstance(value, bool):
            raise FieldError("bool is not a scalar")
        if isinstance(value, int):
            return _mpq(value)
        if isinstance(value, float):
            raise FieldError("floating point scalars are not allowed")
        if isinstance(value, str):
            return self.parse(value)
        if type(value) is type(self.zero):
            return value
        try:  # Fraction -> mpq and similar exact conversions
            from fractions import Fraction

            if isinstance(value, Fraction):
                return _mpq(value.numerator, value.denominator)
        except ImportError:  # pragma: no cover
            pass
        raise FieldError(f"not an exact rational: {value!r}")


class PrimeField:
    """The field F_p for a prime p.  Scalar values are ints in [0, p)."""

    def __init__(self, p: int) -> None:
        if not isinstance(p, int) or p < 2:
            raise FieldError(f"prime field order must be a prime, got {p!r}")
        if any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.descriptor = f"Fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def __repr__(self) -> str:
        return f"F{self.p}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError(f"division by zero in F{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        return n % self.p

    def parse(self, text: str):
        if not isinstance(text, str) or not _FRACTION_RE.match(text):
            raise FieldError(f"bad scalar literal {text!r}: want 'n' or 'n/d'")
        if "/" in text:
            num, den = text.split("/")
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(text) % self.p

    def to_str(self, a) -> str:
        return str(a % self.p)

    def check(self, value):
        if isinstance(value, bool):
            raise FieldError("bool is not a scalar")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, float):
            raise FieldError("floating point scalars are not allowed")
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"not an F{self.p} scalar: {value!r}")


QQ = Rationals()

_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_descriptor(text: str):
    """Map the descriptor "Q" or "Fp:<prime>" to a field object."""
    if text == "Q":
        return QQ
    if isinstance(text, str) and text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise FieldError(f"bad field descriptor {text!r}") from None
        return GF(p)
    raise FieldError(f"bad field descriptor {text!r}: want 'Q' or 'Fp:<prime>'")


# ---------------------------------------------------------------------------
# Spaces


@dataclass(frozen=True, eq=False)
class Space:
    """A finite dimensional vector space with a named, ordered basis.

    factor_dims records the tensor factorisation used for composite index
    arithmetic; a plain (non-tensor) space has factor_dims == (dim,).
    """

    field: object
    labels: tuple[str, ...]
    factor_dims: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.factor_dims:
            object.__setattr__(self, "factor_dims", (len(self.labels),))
        dim = len(self.labels)
        prod = 1
        for d in self.factor_dims:
            prod *= d
        if prod != dim:
            raise ValueError(f"factor dims {self.factor_dims} do not multiply to {dim}")
        if len(set(self.labels)) != dim:
            raise ValueError("basis labels must be distinct")
        object.__setattr__(self, "_hash", hash((self.field, self.labels, self.factor_dims)))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Space):
            return NotImplemented
        return (
            self.factor_dims == other.factor_dims
            and self.field == other.field
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __repr__(self) -> str:
        return f"Space(dim={self.dim}, field={self.field!r})"

    def tensor(self, other: "Space") -> "Space":
        if self.field != other.field:
            raise ValueError("tensor factors must share a field")
        labels = tuple(
            f"{a}{TENSOR_SEP}{b}" for a in self.labels for b in other.labels
        )
        return Space(self.field, labels, self.factor_dims + other.factor_dims)


def scalar_line(field) -> Space:
    """The one dimensional space the counit maps into."""
    return Space(field, ("1",))


def rank_index(dims: Sequence[int], multi: Sequence[int]) -> int:
    idx = 0
    for d, i in zip(dims, multi):
        idx = idx * d + i
    return idx


def unrank_index(dims: Sequence[int], idx: int) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        out.append(idx % d)
        idx //= d
    out.reverse()
    return tuple(out)


# ---------------------------------------------------------------------------
# Sparse vectors


def _addmul(dst: dict, src: Mapping, c, field) -> None:
    """dst += c * src, dropping cancelled entries."""
    mul = field.mul
    add = field.add
    for j, v in src.items():
        w = dst.get(j)
        if w is None:
            dst[j] = mul(c, v)
        else:
            w = add(w, mul(c, v))
            if w:
                dst[j] = w
            else:
                del dst[j]


@dataclass(frozen=True, eq=False)
class Element:
    """A vector, stored sparsely as {basis index: nonzero scalar}."""

    space: Space
    coords: dict

    @staticmethod
    def zero(space: Space) -> "Element":
        return Element(space, {})

    @staticmethod
    def basis(space: Space, i: int) -> "Element":
        if not 0 <= i < space.dim:
            raise IndexError(f"basis index {i} out of range for dim {space.dim}")
        return Element(space, {i: space.field.one})

    @staticmethod
    def from_dense(space: Space, values: Sequence) -> "Element":
        if len(values) != space.dim:
            raise ValueError("dense coordinate list has the wrong length")
        field = space.field
        coords = {}
        for i, v in enumerate(values):
            v = field.check(v)
            if v:
                coords[i] = v
        return Element(space, coords)

    @staticmethod
    def from_coords(space: Space, mapping: Mapping[int, object]) -> "Element":
        field = space.field
        coords = {}
        for i, v in mapping.items():
            if not 0 <= i < space.dim:
                raise IndexError(f"coordinate index {i} out of range")
            v = field.check(v)
            if v:
                coords[i] = v
        return Element(space, coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.space == other.space and self.coords == other.coords

    def is_zero(self) -> bool:
        return not self.coords

    def add(self, other: "Element") -> "Element":
        if self.space != other.space:
            raise ValueError("cannot add vectors from different spaces")
        out = dict(self.coords)
        _addmul(out, other.coords, self.space.field.one, self.space.field)
        return Element(self.space, out)

    def sub(self, other: "Element") -> "Element":
        if self.space != other.space:
            raise ValueError("cannot subtract vectors from different spaces")
        out = dict(self.coords)
        _addmul(out, other.coords, self.space.field.neg(self.space.field.one), self.space.field)
        return Element(self.space, out)

    def scale(self, c) -> "Element":
        field = self.space.field
        c = field.check(c)
        if not c:
            return Element(self.space, {})
        return Element(self.space, {i: field.mul(c, v) for i, v in self.coords.items()})

    def neg(self) -> "Element":
        field = self.space.field
        return Element(self.space, {i: field.neg(v) for i, v in self.coords.items()})

    def tensor(self, other: "Element") -> "Element":
        space = self.space.tensor(other.space)
        m = other.space.dim
        field = space.field
        coords: dict = {}
        for i, a in self.coords.items():
            base = i * m
            for j, b in other.coords.items():
                coords[base + j] = field.mul(a, b)
        return Element(space, coords)

    def dense(self) -> list:
        field = self.space.field
        out = [field.zero] * self.space.dim
        for i, v in self.coords.items():
            out[i] = v
        return out

    def pretty(self) -> str:
        if not self.coords:
            return "0"
        field = self.space.field
        labels = self.space.labels
        parts = []
        for i in sorted(self.coords):
            parts.append(f"{field.to_str(self.coords[i])}*{labels[i]}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<{self.pretty()}>"


def tensor_elements(*elems: Element) -> Element:
    out = elems[0]
    for e in elems[1:]:
        out = out.tensor(e)
    return out


# ---------------------------------------------------------------------------
# Linear maps


@dataclass(frozen=True, eq=False)
class LinMap:
    """A linear map stored column-sparse: cols[j] = image of domain basis j."""

    domain: Space
    codomain: Space
    cols: tuple

    def __post_init__(self) -> None:
        if len(self.cols) != self.domain.dim:
            raise ValueError("column count does not match domain dimension")

    @staticmethod
    def from_cols(domain: Space, codomain: Space, cols: Sequence[Mapping[int, object]]) -> "LinMap":
        field = codomain.field
        cleaned = []
        for col in cols:
            d = {}
            for i, v in col.items():
                if not 0 <= i < codomain.dim:
                    raise IndexError(f"row index {i} out of range")
                v = field.check(v)
                if v:
                    d[i] = v
            cleaned.append(d)
        return LinMap(domain, codomain, tuple(cleaned))

    @staticmethod
    def from_entries(
        domain: Space, codomain: Space, entries: Iterable[tuple[int, int, object]]
    ) -> "LinMap":
        """Build from (out_index, in_index, coeff) triples, summing duplicates."""
        field = codomain.field
        cols: list[dict] = [dict() for _ in range(domain.dim)]
        for i, j, v in entries:
            if not 0 <= j < domain.dim:
                raise IndexError(f"column index {j} out of range")
            if not 0 <= i < codomain.dim:
                raise IndexError(f"row index {i} out of range")
            v = field.check(v)
            col = cols[j]
            w = col.get(i)
            if w is None:
                if v:
                    col[i] = v
            else:
                w = field.add(w, v)
                if w:
                    col[i] = w
                else:
                    del col[i]
        return LinMap(domain, codomain, tuple(cols))

    @staticmethod
    def from_dense(domain: Space, codomain: Space, rows: Sequence[Sequence]) -> "LinMap":
        """Build from a dense row-major matrix (rows indexed by codomain)."""
        if len(rows) != codomain.dim:
            raise ValueError("row count does not match codomain dimension")
        field = codomain.field
        cols: list[dict] = [dict() for _ in range(domain.dim)]
        for i, row in enumerate(rows):
            if len(row) != domain.dim:
                raise ValueError("row length does not match domain dimension")
            for j, v in enumerate(row):
                v = field.check(v)
                if v:
                    cols[j][i] = v
        return LinMap(domain, codomain, tuple(cols))

    @staticmethod
    def from_function(domain: Space, codomain: Space, f: Callable[[int], Element]) -> "LinMap":
        cols = []
        for j in range(domain.dim):
            img = f(j)
            if img.space != codomain:
                raise ValueError("image lands in the wrong space")
            cols.append(dict(img.coords))
        return LinMap(domain, codomain, tuple(cols))

    @staticmethod
    def identity(space: Space) -> "LinMap":
        one = space.field.one
        return LinMap(space, space, tuple({j: one} for j in range(space.dim)))

    @staticmethod
    def zero_map(domain: Space, codomain: Space) -> "LinMap":
        return LinMap(domain, codomain, tuple({} for _ in range(domain.dim)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.cols == other.cols
        )

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def apply(self, v: Element) -> Element:
        if v.space != self.domain:
            raise ValueError("vector is not in the domain")
        field = self.codomain.field
        out: dict = {}
        cols = self.cols
        for j, c in v.coords.items():
            _addmul(out, cols[j], c, field)
        return Element(self.codomain, out)

    def apply_col(self, col: Mapping[int, object]) -> dict:
        """Apply to a raw coordinate dict over the domain."""
        field = self.codomain.field
        out: dict = {}
        cols = self.cols
        for j, c in col.items():
            _addmul(out, cols[j], c, field)
        return out

    def compose(self, inner: "LinMap") -> "LinMap":
        """self after inner."""
        if inner.codomain != self.domain:
            raise ValueError("maps do not compose")
        cols = tuple(self.apply_col(c) for c in inner.cols)
        return LinMap(inner.domain, self.codomain, cols)

    def tensor(self, other: "LinMap") -> "LinMap":
        domain = self.domain.tensor(other.domain)
        codomain = self.codomain.tensor(other.codomain)
        field = codomain.field
        m_in = other.domain.dim
        m_out = other.codomain.dim
        cols = []
        for j1 in range(self.domain.dim):
            c1 = self.cols[j1]
            for j2 in range(m_in):
                c2 = other.cols[j2]
                col: dict = {}
                for i1, a in c1.items():
                    base = i1 * m_out
                    for i2, b in c2.items():
                        col[base + i2] = field.mul(a, b)
                cols.append(col)
        return LinMap(domain, codomain, tuple(cols))

    def add(self, other: "LinMap") -> "LinMap":
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ValueError("map shapes differ")
        field = self.codomain.field
        cols = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            _addmul(col, b, field.one, field)
            cols.append(col)
        return LinMap(self.domain, self.codomain, tuple(cols))

    def sub(self, other: "LinMap") -> "LinMap":
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ValueError("map shapes differ")
        field = self.codomain.field
        neg_one = field.neg(field.one)
        cols = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            _addmul(col, b, neg_one, field)
            cols.append(col)
        return LinMap(self.domain, self.codomain, tuple(cols))

    def scale(self, c) -> "LinMap":
        field = self.codomain.field
        c = field.check(c)
        cols = tuple(
            {i: field.mul(c, v) for i, v in col.items()} if c else {} for col in self.cols
        )
        return LinMap(self.domain, self.codomain, cols)

    def recast(self, domain: Space | None = None, codomain: Space | None = None) -> "LinMap":
        """Same matrix viewed between different (equal-dimensional) spaces;
        used to move between tensor groupings like (V(x)W)(x)U and V(x)(W(x)U)
        whose flat indexing coincides."""
        domain = domain if domain is not None else self.domain
        codomain = codomain if codomain is not None else self.codomain
        if domain.dim != self.domain.dim or codomain.dim != self.codomain.dim:
            raise ValueError("recast must preserve dimensions")
        return LinMap(domain, codomain, self.cols)

    def to_dense(self) -> list[list]:
        field = self.codomain.field
        rows = [[field.zero] * self.domain.dim for _ in range(self.codomain.dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def __repr__(self) -> str:
        return f"LinMap({self.domain.dim} -> {self.codomain.dim})"


def apply_on_leg(f: LinMap, v: Element, leg: int, out_space: Space | None = None) -> Element:
    """Apply f to one tensor leg of v, identity on the others.

    The leg is an index into v.space.factor_dims; f.domain.dim must match
    that factor.  When out_space is omitted it is rebuilt from scratch,
    which is fine outside hot loops.
    """
    dims = v.space.factor_dims
    if not 0 <= leg < len(dims):
        raise ValueError(f"leg {leg} out of range for factors {dims}")
    if f.domain.dim != dims[leg]:
        raise ValueError("map domain does not match the selected leg")
    d_out = f.codomain.dim
    suffix = 1
    for d in dims[leg + 1 :]:
        suffix *= d
    field = v.space.field
    coords: dict = {}
    cols = f.cols
    dim_leg = dims[leg]
    for idx, c in v.coords.items():
        tail = idx % suffix
        head = idx // suffix
        j = head % dim_leg
        pre = head // dim_leg
        base = pre * d_out
        col = cols[j]
        for i, w in col.items():
            k = (base + i) * suffix + tail
            prev = coords.get(k)
            if prev is None:
                coords[k] = field.mul(c, w)
            else:
                prev = field.add(prev, field.mul(c, w))
                if prev:
                    coords[k] = prev
                else:
                    del coords[k]
    if out_space is None:
        new_dims = dims[:leg] + (d_out,) + dims[leg + 1 :]
        # Rebuild labels positionally; callers in hot paths pass out_space.
        out_space = _leg_replaced_space(v.space, leg, f.codomain, new_dims)
    return Element(out_space, coords)


def _leg_replaced_space(space: Space, leg: int, new_factor: Space, new_dims: tuple[int, ...]) -> Space:
    old_labels = space.labels
    dims = space.factor_dims
    # Split each composite label on the separator only if the arity matches;
    # otherwise fall back to positional synthetic labels.
    parts0 = old_labels[0].split(TENSOR_SEP)
    if len(parts0) == len(dims):
        factors_labels: list[list[str]] = [[] for _ in dims]
        for i, d in enumerate(dims):
            stride = 1
            for dd in dims[i + 1 :]:
                stride *= dd
            for k in range(d):
                factors_labels[i].append(old_labels[k * stride].split(TENSOR_SEP)[i])
        factors_labels[leg] = list(new_factor.labels)
        labels = []
        for idx in range(_prod(new_dims)):
            multi = unrank_index(new_dims, idx)
            labels.append(TENSOR_SEP.join(factors_labels[i][k] for i, k in enumerate(multi)))
        return Space(space.field, tuple(labels), new_dims)
    labels = tuple(f"b{i}" for i in range(_prod(new_dims)))
    return Space(space.field, labels, new_dims)


def _prod(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


# ---------------------------------------------------------------------------
# Row reduction


class Echelon:
    """Incremental sparse row reduction over an exact field.

    Pivot of a row is its smallest nonzero index.  The pivot index set of
    the accumulated row space is an invariant of the space, so the derived
    quotient data does not depend on insertion order.
    """

    __slots__ = ("field", "dim", "pivots", "canonical")

    def __init__(self, field, dim: int) -> None:
        self.field = field
        self.dim = dim
        self.pivots: dict[int, dict] = {}
        self.canonical = True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, row: dict) -> int | None:
        """Reduce a row (consumed) against the table; returns a new pivot or None."""
        field = self.field
        pivots = self.pivots
        mul = field.mul
        add = field.add
        neg = field.neg
        while row:
            j = min(row)
            r = pivots.get(j)
            if r is None:
                c = row.pop(j)
                if row:
                    inv = field.inv(c)
                    norm = {j: field.one}
                    for k, v in row.items():
                        norm[k] = mul(inv, v)
                else:
                    norm = {j: field.one}
                pivots[j] = norm
                self.canonical = False
                return j
            c = row.pop(j)
            nc = neg(c)
            for k, v in r.items():
                if k == j:
                    continue
                w = row.get(k)
                if w is None:
                    row[k] = mul(nc, v)
                else:
                    w = add(w, mul(nc, v))
                    if w:
                        row[k] = w
                    else:
                        del row[k]
        return None

    def insert_all(self, rows: Iterable[Mapping[int, object]]) -> None:
        for row in rows:
            self.insert(dict(row))

    def reduce(self, mapping: Mapping[int, object]) -> dict:
        """Full normal form of a vector against the table (vector unchanged).

        The result has no support on pivot indices; it is zero exactly when
        the vector lies in the accumulated row space.
        """
        field = self.field
        pivots = self.pivots
        mul = field.mul
        add = field.add
        neg = field.neg
        row = dict(mapping)
        heap = [j for j in row if j in pivots]
        heapify(heap)
        while heap:
            j = heappop(heap)
            if j not in row:
                continue
            r = pivots.get(j)
            if r is None:
                continue
            c = row.pop(j)
            nc = neg(c)
            for k, v in r.items():
                if k == j:
                    continue
                w = row.get(k)
                if w is None:
                    w = mul(nc, v)
                    row[k] = w
                    if k in pivots:
                        heappush(heap, k)
                else:
                    w = add(w, mul(nc, v))
                    if w:
                        row[k] = w
                    else:
                        del row[k]
        return row

    def canonicalize(self) -> None:
        """Back-substitute so every pivot row is supported on {pivot} + free."""
        if self.canonical:
            return
        field = self.field
        pivots = self.pivots
        mul = field.mul
        add = field.add
        neg = field.neg
        for j in sorted(pivots, reverse=True):
            row = pivots[j]
            targets = sorted(k for k in row if k != j and k in pivots)
            for k in targets:
                c = row.pop(k, None)
                if c is None:
                    continue
                nc = neg(c)
                for m, v in pivots[k].items():
                    if m == k:
                        continue
                    w = row.get(m)
                    if w is None:
                        row[m] = mul(nc, v)
                    else:
                        w = add(w, mul(nc, v))
                        if w:
                            row[m] = w
                        else:
                            del row[m]
        self.canonical = True

    def contains(self, mapping: Mapping[int, object]) -> bool:
        return not self.reduce(mapping)


def dense_rref(rows: list[list], field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a dense matrix; returns (rows, pivot cols).

    Textbook quadratic elimination; used for small problems and as an
    independent oracle for the sparse path.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        sel = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = field.inv(mat[r][col])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                c = field.neg(mat[i][col])
                row_i = mat[i]
                row_r = mat[r]
                for k in range(col, ncols):
                    if row_r[k]:
                        row_i[k] = field.add(row_i[k], field.mul(c, row_r[k]))
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


# ---------------------------------------------------------------------------
# Quotient spaces


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """ambient / span(relations), with a canonical section.

    The projection sends a vector to its normal form against the reduced
    relation span; the section embeds the quotient back as the span of the
    pivot-free ("free") ambient coordinates, which are kept in ambient
    order.  Both are deterministic: the canonical reduced echelon form of
    the relation span does not depend on the order relations are fed in.
    """

    ambient: Space
    space: Space
    relations: tuple[Element, ...]
    project: LinMap
    section: LinMap
    free_indices: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.space.dim

    def project_elem(self, v: Element) -> Element:
        return self.project.apply(v)

    def section_elem(self, q: Element) -> Element:
        return self.section.apply(q)


def quotient_space(ambient: Space, relations: Sequence[Element], method: str = "auto") -> QuotientSpace:
    """Quotient of a space by the span of finitely many relation vectors.

    method: "sparse" (incremental echelon), "dense" (textbook rref), or
    "auto" (dense only for small ambients).  Both paths produce identical
    output; the dense path doubles as an oracle in the tests.
    """
    for r in relations:
        if r.space != ambient:
            raise ValueError("relation lives in the wrong space")
    if method not in ("auto", "sparse", "dense"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        method = "dense" if ambient.dim <= 48 else "sparse"
    field = ambient.field

    if method == "dense":
        dense_rows = [r.dense() for r in relations]
        rref_rows, pivot_cols = dense_rref(dense_rows, field)
        pivot_map = dict(zip(pivot_cols, rref_rows))
        pivot_set = set(pivot_cols)
    else:
        ech = Echelon(field, ambient.dim)
        for r in relations:
            ech.insert(dict(r.coords))
        ech.canonicalize()
        pivot_set = set(ech.pivots)
        pivot_map = ech.pivots

    free = tuple(i for i in range(ambient.dim) if i not in pivot_set)
    qspace = Space(field, tuple(ambient.labels[i] for i in free))
    pos = {f: k for k, f in enumerate(free)}

    proj_cols: list[dict] = []
    for j in range(ambient.dim):
        if j in pos:
            proj_cols.append({pos[j]: field.one})
        else:
            row = pivot_map[j]
            if method == "dense":
                col = {
                    pos[k]: field.neg(row[k])
                    for k in free
                    if row[k]
                }
            else:
                col = {pos[k]: field.neg(v) for k, v in row.items() if k != j}
            proj_cols.append(col)
    project = LinMap(ambient, qspace, tuple(proj_cols))
    section = LinMap(qspace, ambient, tuple({f: field.one} for f in free))
    return QuotientSpace(ambient, qspace, tuple(relations), project, section, free)


# ---------------------------------------------------------------------------
# Solving

def linsolve(m: LinMap, b: Element) -> Element | None:
    """One solution of m(x) = b with free coordinates set to zero, or None."""
    if b.space != m.codomain:
        raise ValueError("right hand side lives in the wrong space")
    n = m.domain.dim
    aug = n  # augmented column index
    rows: dict[int, dict] = {}
    for j, col in enumerate(m.cols):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    for i, v in b.coords.items():
        rows.setdefault(i, {})[aug] = v
    ech = Echelon(m.domain.field, n + 1)
    for i in sorted(rows):
        ech.insert(rows[i])
    if aug in ech.pivots:
        return None  # inconsistent system
    ech.canonicalize()
    coords = {}
    for j, row in ech.pivots.items():
        v = row.get(aug)
        if v:
            coords[j] = v
    return Element(m.domain, coords)


def invert_linmap(m: LinMap) -> LinMap | None:
    """Two-sided inverse of a square map, or None if singular."""
    if m.domain.dim != m.codomain.dim:
        raise ValueError("only square maps can be inverted")
    n = m.domain.dim
    field = m.domain.field
    rows: dict[int, dict] = {i: {} for i in range(n)}
    for j, col in enumerate(m.cols):
        for i, v in col.items():
            rows[i][j] = v
    for i in range(n):
        rows[i][n + i] = field.one
    ech = Echelon(field, 2 * n)
    for i in range(n):
        ech.insert(rows[i])
    if set(ech.pivots) != set(range(n)):
        return None
    ech.canonicalize()
    inv_cols: list[dict] = [dict() for _ in range(n)]
    for j, row in ech.pivots.items():
        for k, v in row.items():
            if k >= n:
                inv_cols[k - n][j] = v
    return LinMap(m.codomain, m.domain, tuple(inv_cols))


def invert_in_algebra(alg, u: Element) -> Element:
    """Two-sided inverse of u in a finite dimensional unital algebra.

    alg needs .space, .unit, and .multiply(x, y); raises NotInvertibleError
    when no two-sided inverse exists.
    """
    space = alg.space
    if u.space != space:
        raise ValueError("element lives outside the algebra")
    left = LinMap.from_function(space, space, lambda j: alg.multiply(u, Element.basis(space, j)))
    v = linsolve(left, alg.unit)
    if v is None:
        raise NotInvertibleError(f"not invertible: {u.pretty()}")
    if alg.multiply(u, v) != alg.unit or alg.multiply(v, u) != alg.unit:
        raise NotInvertibleError(f"not invertible: {u.pretty()}")
    return v
