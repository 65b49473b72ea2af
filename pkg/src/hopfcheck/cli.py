"""Command-line front end: run verifications described by a JSON file.

A description file names a field and a dictionary of objects, each either a
table of structure constants or an invocation of a builder from
:mod:`hopfcheck.catalog`.  The schema ships as ``data/specfile.schema.json``
and the entry conventions are documented in ``docs/FORMAT.md``.

Commands::

    hopfcheck --spec FILE verify {bialgebra,hopf,twist,yd,ydalgebra,rmatrix} NAME
    hopfcheck --spec FILE smash ALGEBRA HOST
    hopfcheck --spec FILE theorem czgen HOST TWIST MODULE
    hopfcheck --spec FILE theorem main ALGEBRA HOST TWIST
    hopfcheck --spec FILE report

Check results go to stdout, as text or as canonical JSON (``--format``);
progress notes go to stderr.  JSON output is byte-identical for identical
inputs unless ``--timing`` is given (wall-clock seconds are never
deterministic, so they are opt-in).  Exit status: 0 all checks passed,
1 at least one check failed, 2 malformed input (unparseable file, unknown
name or command, type mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Sequence

import jsonschema

from . import catalog
from .algebroid import check_scalar_extension_twist, check_smash, smash_product
from .exactlin import (
    Element,
    FieldError,
    LinMap,
    NotInvertibleError,
    Space,
    field_from_descriptor,
    scalar_line,
)
from .hopf import (
    AlgebraData,
    BialgebraData,
    HopfData,
    check_bialgebra,
    check_hopf,
    same_bialgebra,
)
from .report import CheckFailure, Report
from .twist import Twist, check_twist, make_twist, trivial_twist
from .yd import (
    RMatrix,
    YDAlgebra,
    YDModule,
    check_braided_commutative,
    check_rmatrix,
    check_yd,
    check_yd_algebra,
    check_yd_cocycle_twist,
    trivial_yd_algebra,
    yd_algebra,
    yd_module,
)


class SpecError(Exception):
    """Anything wrong with the description file or the command referencing
    it: parse errors, schema violations, unknown names, type mismatches."""


# ---------------------------------------------------------------------------
# Raw twist / R-matrix tables
#
# Twists and R-matrices given by explicit tables are kept unrealized at load
# time: `verify` must be able to report a non-invertible element as a failed
# check rather than refuse to load the file.


@dataclass
class TwistTables:
    """An alleged twist, as loaded: host plus element (inverse optional)."""

    host: BialgebraData
    element: Element
    inverse: Element | None
    name: str


@dataclass
class RMatrixTables:
    """An alleged R-matrix, as loaded."""

    host: BialgebraData
    element: Element
    inverse: Element | None
    name: str


def _realize_twist(obj: Twist | TwistTables) -> tuple[Twist | None, Report | None]:
    """Turn loaded twist data into a Twist, or explain why that fails.

    Returns (twist, None) on success and (None, report) when the element is
    not invertible -- the report then carries the failed check.
    """
    if isinstance(obj, Twist):
        return obj, None
    try:
        return make_twist(obj.host, obj.element, obj.inverse), None
    except NotInvertibleError:
        return None, check_twist(obj.host, obj.element, obj.inverse)


# ---------------------------------------------------------------------------
# Reading structure-constant tables

_SCHEMA_RESOURCE = "specfile.schema.json"


def _load_schema() -> dict:
    text = resources.files("hopfcheck").joinpath("data", _SCHEMA_RESOURCE).read_text("utf-8")
    return json.loads(text)


def _flat(idxs: Sequence[int], dims: Sequence[int]) -> int:
    out = 0
    for ix, d in zip(idxs, dims):
        out = out * d + ix
    return out


def _table(
    field, entries, in_dims: Sequence[int], out_dims: Sequence[int], where: str
) -> tuple[dict, ...]:
    """Accumulate ``[*in indices, *out indices, coeff]`` rows into sparse
    columns (one per flattened input index).  Repeated index tuples add."""
    dims = list(in_dims) + list(out_dims)
    want = len(dims) + 1
    n_cols = 1
    for d in in_dims:
        n_cols *= d
    cols: list[dict] = [{} for _ in range(n_cols)]
    for pos, entry in enumerate(entries):
        if len(entry) != want:
            raise SpecError(f"{where}: entry {pos} has {len(entry)} items, want {want}")
        idxs = entry[:-1]
        for ix, d in zip(idxs, dims):
            if isinstance(ix, bool) or not isinstance(ix, int) or not 0 <= ix < d:
                raise SpecError(
                    f"{where}: entry {pos}: index {ix!r} out of range for dimension {d}"
                )
        try:
            c = field.check(entry[-1])
        except FieldError as exc:
            raise SpecError(f"{where}: entry {pos}: {exc}") from None
        col = cols[_flat(idxs[: len(in_dims)], in_dims)]
        row = _flat(idxs[len(in_dims) :], out_dims)
        s = field.add(col.get(row, field.zero), c)
        if s:
            col[row] = s
        else:
            col.pop(row, None)
    return tuple(cols)


def _element(field, space: Space, entries, where: str) -> Element:
    (coords,) = _table(field, entries, (), space.factor_dims, where)
    return Element(space, coords)


# ---------------------------------------------------------------------------
# Building objects from the file


class LoadedSpec:
    """A parsed description file with lazily built, memoized objects."""

    def __init__(self, doc: dict, path: str) -> None:
        self.path = path
        self.field = field_from_descriptor(doc["field"])
        self.field_descriptor = doc["field"]
        self.raw = doc["objects"]
        self._built: dict[str, object] = {}
        self._building: list[str] = []

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.raw)

    def build(self, name: str) -> object:
        if name in self._built:
            return self._built[name]
        if name not in self.raw:
            known = ", ".join(sorted(self.raw))
            raise SpecError(f"unknown object {name!r} (file defines: {known})")
        if name in self._building:
            chain = " -> ".join(self._building + [name])
            raise SpecError(f"circular reference: {chain}")
        self._building.append(name)
        try:
            obj = self._build(name, self.raw[name])
        finally:
            self._building.pop()
        self._built[name] = obj
        return obj

    def resolve(self, name: str, want: tuple[type, ...], noun: str, where: str) -> object:
        if not isinstance(name, str):
            raise SpecError(f"{where}: expected an object name, got {name!r}")
        obj = self.build(name)
        if not isinstance(obj, want):
            raise SpecError(f"{where}: {name!r} is {_describe(obj)}, not {noun}")
        return obj

    # -- one builder per object type ------------------------------------

    def _build(self, name: str, spec: dict) -> object:
        kind = spec["type"]
        builder = getattr(self, f"_build_{kind}")
        try:
            return builder(name, spec)
        except (ValueError, FieldError) as exc:
            raise SpecError(f"object {name!r}: {exc}") from None

    def _basis_space(self, name: str, spec: dict) -> Space:
        return Space(self.field, tuple(spec["basis"]))

    def _build_bialgebra(self, name: str, spec: dict) -> BialgebraData:
        space = self._basis_space(name, spec)
        d = space.dim
        w = f"object {name!r}"
        mult = LinMap(
            space.tensor(space), space, _table(self.field, spec["mult"], (d, d), (d,), f"{w}.mult")
        )
        unit = _element(self.field, space, spec["unit"], f"{w}.unit")
        comult = LinMap(
            space, space.tensor(space), _table(self.field, spec["comult"], (d,), (d, d), f"{w}.comult")
        )
        counit = LinMap(
            space, scalar_line(self.field), _table(self.field, spec["counit"], (d,), (), f"{w}.counit")
        )
        return BialgebraData(space, mult, unit, comult, counit, name)

    def _build_hopf(self, name: str, spec: dict) -> HopfData:
        b = self._build_bialgebra(name, spec)
        d = b.dim
        antipode = LinMap(
            b.space,
            b.space,
            _table(self.field, spec["antipode"], (d,), (d,), f"object {name!r}.antipode"),
        )
        return HopfData(b.space, b.mult, b.unit, b.comult, b.counit, antipode, name)

    def _pair_tables(self, name: str, spec: dict) -> tuple[BialgebraData, Element, Element | None]:
        host = self.resolve(
            spec["host"], (BialgebraData,), "a bialgebra", f"object {name!r}.host"
        )
        square = host.space.tensor(host.space)
        element = _element(self.field, square, spec["element"], f"object {name!r}.element")
        inverse = None
        if "inverse" in spec:
            inverse = _element(self.field, square, spec["inverse"], f"object {name!r}.inverse")
        return host, element, inverse

    def _build_twist(self, name: str, spec: dict) -> TwistTables:
        return TwistTables(*self._pair_tables(name, spec), name)

    def _build_rmatrix(self, name: str, spec: dict) -> RMatrixTables:
        return RMatrixTables(*self._pair_tables(name, spec), name)

    def _module_maps(self, name: str, spec: dict) -> tuple[BialgebraData, Space, LinMap, LinMap]:
        host = self.resolve(
            spec["host"], (BialgebraData,), "a bialgebra", f"object {name!r}.host"
        )
        space = self._basis_space(name, spec)
        dh, dm = host.dim, space.dim
        action = LinMap(
            host.space.tensor(space),
            space,
            _table(self.field, spec["action"], (dh, dm), (dm,), f"object {name!r}.action"),
        )
        coaction = LinMap(
            space,
            space.tensor(host.space),
            _table(self.field, spec["coaction"], (dm,), (dm, dh), f"object {name!r}.coaction"),
        )
        return host, space, action, coaction

    def _build_yd(self, name: str, spec: dict) -> YDModule:
        host, space, action, coaction = self._module_maps(name, spec)
        return yd_module(host, space, action, coaction, name)

    def _build_ydalgebra(self, name: str, spec: dict) -> YDAlgebra:
        host, space, action, coaction = self._module_maps(name, spec)
        d = space.dim
        w = f"object {name!r}"
        mult = LinMap(
            space.tensor(space), space, _table(self.field, spec["mult"], (d, d), (d,), f"{w}.mult")
        )
        unit = _element(self.field, space, spec["unit"], f"{w}.unit")
        base = AlgebraData(space, mult, unit, name)
        return yd_algebra(host, base, action, coaction, name)

    # -- catalog invocations ---------------------------------------------

    def _build_catalog(self, name: str, spec: dict) -> object:
        call = spec["call"]
        args = dict(spec.get("args", {}))
        try:
            runner = _CATALOG_CALLS[call]
        except KeyError:
            known = ", ".join(sorted(_CATALOG_CALLS))
            raise SpecError(f"object {name!r}: unknown call {call!r} (known: {known})") from None
        obj = runner(self, name, args)
        if args:
            extra = ", ".join(sorted(args))
            raise SpecError(f"object {name!r}: unexpected argument(s) {extra} for {call!r}")
        if hasattr(obj, "name") and not isinstance(obj, catalog.GroupPresentation):
            try:
                obj.name = name  # report subjects should use the file's name
            except AttributeError:
                pass
        return obj

    def _arg(self, args: dict, key: str, name: str, call: str):
        try:
            return args.pop(key)
        except KeyError:
            raise SpecError(f"object {name!r}: call {call!r} needs argument {key!r}") from None

    def _group_arg(self, args: dict, key: str, name: str, call: str) -> catalog.GroupPresentation:
        ref = self._arg(args, key, name, call)
        return self.resolve(
            ref, (catalog.GroupPresentation,), "a group", f"object {name!r}.{key}"
        )


def _int_arg(value, name: str, call: str, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"object {name!r}: call {call!r} argument {key!r} must be an integer")
    return value


def _call_group(loader: LoadedSpec, name: str, args: dict):
    return catalog.group_by_name(loader._arg(args, "name", name, "group"))


def _call_cyclic(loader: LoadedSpec, name: str, args: dict):
    return catalog.cyclic_group(_int_arg(loader._arg(args, "n", name, "cyclic_group"), name, "cyclic_group", "n"))


def _call_symmetric(loader: LoadedSpec, name: str, args: dict):
    return catalog.symmetric_group(
        _int_arg(loader._arg(args, "n", name, "symmetric_group"), name, "symmetric_group", "n")
    )


def _call_direct_product(loader: LoadedSpec, name: str, args: dict):
    left = loader._group_arg(args, "left", name, "direct_product")
    right = loader._group_arg(args, "right", name, "direct_product")
    return catalog.direct_product(left, right)


def _call_group_algebra(loader: LoadedSpec, name: str, args: dict):
    return catalog.group_algebra(loader._group_arg(args, "group", name, "group_algebra"), loader.field)


def _call_sweedler(loader: LoadedSpec, name: str, args: dict):
    return catalog.sweedler_h4(loader.field)


def _call_conjugation_yd(loader: LoadedSpec, name: str, args: dict):
    return catalog.conjugation_yd(loader._group_arg(args, "group", name, "conjugation_yd"), loader.field)


def _call_adjoint_yd(loader: LoadedSpec, name: str, args: dict):
    h = loader.resolve(
        loader._arg(args, "hopf", name, "adjoint_yd"),
        (HopfData,),
        "a Hopf algebra",
        f"object {name!r}.hopf",
    )
    return catalog.adjoint_yd(h)


def _call_trivial_ydalgebra(loader: LoadedSpec, name: str, args: dict):
    host = loader.resolve(
        loader._arg(args, "host", name, "trivial_ydalgebra"),
        (BialgebraData,),
        "a bialgebra",
        f"object {name!r}.host",
    )
    return trivial_yd_algebra(host)


def _bicharacter(loader: LoadedSpec, name: str, args: dict, call: str):
    group = loader._group_arg(args, "group", name, call)
    matrix = loader._arg(args, "matrix", name, call)
    return catalog.bicharacter_structures(group, matrix, loader.field)


def _call_bicharacter_twist(loader: LoadedSpec, name: str, args: dict):
    return _bicharacter(loader, name, args, "bicharacter_twist")[0]


def _call_bicharacter_rmatrix(loader: LoadedSpec, name: str, args: dict):
    return _bicharacter(loader, name, args, "bicharacter_rmatrix")[1]


def _call_coboundary_twist(loader: LoadedSpec, name: str, args: dict):
    h = loader.resolve(
        loader._arg(args, "hopf", name, "coboundary_twist"),
        (HopfData,),
        "a Hopf algebra",
        f"object {name!r}.hopf",
    )
    u = _element(loader.field, h.space, loader._arg(args, "u", name, "coboundary_twist"), f"object {name!r}.u")
    return catalog.coboundary_twist(h, u)


def _call_trivial_twist(loader: LoadedSpec, name: str, args: dict):
    host = loader.resolve(
        loader._arg(args, "host", name, "trivial_twist"),
        (BialgebraData,),
        "a bialgebra",
        f"object {name!r}.host",
    )
    return trivial_twist(host)


_CATALOG_CALLS: dict[str, Callable] = {
    "group": _call_group,
    "cyclic_group": _call_cyclic,
    "symmetric_group": _call_symmetric,
    "direct_product": _call_direct_product,
    "group_algebra": _call_group_algebra,
    "sweedler_h4": _call_sweedler,
    "conjugation_yd": _call_conjugation_yd,
    "adjoint_yd": _call_adjoint_yd,
    "trivial_ydalgebra": _call_trivial_ydalgebra,
    "bicharacter_twist": _call_bicharacter_twist,
    "bicharacter_rmatrix": _call_bicharacter_rmatrix,
    "coboundary_twist": _call_coboundary_twist,
    "trivial_twist": _call_trivial_twist,
}


def _describe(obj: object) -> str:
    for cls, noun in (
        (catalog.GroupPresentation, "a group"),
        (HopfData, "a Hopf algebra"),
        (BialgebraData, "a bialgebra"),
        (Twist, "a twist"),
        (TwistTables, "a twist"),
        (RMatrix, "an R-matrix"),
        (RMatrixTables, "an R-matrix"),
        (YDAlgebra, "a YD module algebra"),
        (YDModule, "a YD module"),
    ):
        if isinstance(obj, cls):
            return noun
    return type(obj).__name__


def load_spec(path: str) -> LoadedSpec:
    """Parse and schema-validate a description file.  Objects are built on
    first use; catalog invocations certify themselves then (fail closed)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    validator = jsonschema.Draft202012Validator(_load_schema())
    error = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if error is not None:
        raise SpecError(f"{path}: {error.json_path}: {error.message}")
    try:
        return LoadedSpec(doc, path)
    except FieldError as exc:
        raise SpecError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------
# Commands

Result = tuple[str, Report, float]


def _timed(label: str, fn: Callable[[], Report]) -> Result:
    _progress(f"checking {label}")
    t0 = time.perf_counter()
    rep = fn()
    return label, rep, time.perf_counter() - t0


def _verify_twist_like(obj: Twist | TwistTables | RMatrix | RMatrixTables) -> Report:
    checker = check_rmatrix if isinstance(obj, (RMatrix, RMatrixTables)) else check_twist
    if isinstance(obj, (Twist, RMatrix)):
        return checker(obj)
    return checker(obj.host, obj.element, obj.inverse)


def _verify_ydalgebra(a: YDAlgebra) -> Report:
    rep = Report(a.name)
    check_yd_algebra(a, rep)
    check_braided_commutative(a, rep)
    return rep


_VERIFY = {
    "bialgebra": ((BialgebraData,), "a bialgebra", check_bialgebra),
    "hopf": ((HopfData,), "a Hopf algebra", check_hopf),
    "twist": ((Twist, TwistTables), "a twist", _verify_twist_like),
    "rmatrix": ((RMatrix, RMatrixTables), "an R-matrix", _verify_twist_like),
    "yd": ((YDModule, YDAlgebra), "a YD module", lambda o: check_yd(o.yd if isinstance(o, YDAlgebra) else o)),
    "ydalgebra": ((YDAlgebra,), "a YD module algebra", _verify_ydalgebra),
}


def _cmd_verify(loaded: LoadedSpec, args) -> list[Result]:
    want, noun, checker = _VERIFY[args.kind]
    obj = loaded.resolve(args.name, want, noun, f"verify {args.kind}")
    return [_timed(args.name, lambda: checker(obj))]


def _cmd_smash(loaded: LoadedSpec, args) -> list[Result]:
    a = loaded.resolve(args.algebra, (YDAlgebra,), "a YD module algebra", "smash")
    host = loaded.resolve(args.host, (BialgebraData,), "a bialgebra", "smash")
    if not same_bialgebra(host, a.host):
        raise SpecError(f"smash: {args.algebra!r} is not a module algebra over {args.host!r}")
    label = f"{args.algebra}#{args.host}"
    return [_timed(label, lambda: check_smash(smash_product(a, host, certify=False)))]


def _require_twist(loaded: LoadedSpec, name: str, where: str) -> tuple[Twist | None, Report | None]:
    obj = loaded.resolve(name, (Twist, TwistTables), "a twist", where)
    return _realize_twist(obj)


def _cmd_theorem(loaded: LoadedSpec, args) -> list[Result]:
    if args.variant == "czgen":
        host_name, twist_name, module_name = args.names
        host = loaded.resolve(host_name, (BialgebraData,), "a bialgebra", "theorem czgen")
        t, failed = _require_twist(loaded, twist_name, "theorem czgen")
        if failed is not None:
            return [(twist_name, failed, 0.0)]
        m = loaded.resolve(
            module_name, (YDModule, YDAlgebra), "a YD module or module algebra", "theorem czgen"
        )
        for label, obj in ((twist_name, t), (module_name, m)):
            if not same_bialgebra(obj.host, host):
                raise SpecError(f"theorem czgen: {label!r} does not live over {host_name!r}")
        label = f"czgen {host_name} {twist_name} {module_name}"
        return [_timed(label, lambda: check_yd_cocycle_twist(t, m))]

    algebra_name, host_name, twist_name = args.names
    a = loaded.resolve(algebra_name, (YDAlgebra,), "a YD module algebra", "theorem main")
    host = loaded.resolve(host_name, (BialgebraData,), "a bialgebra", "theorem main")
    t, failed = _require_twist(loaded, twist_name, "theorem main")
    if failed is not None:
        return [(twist_name, failed, 0.0)]
    for label, obj in ((algebra_name, a), (twist_name, t)):
        if not same_bialgebra(obj.host, host):
            raise SpecError(f"theorem main: {label!r} does not live over {host_name!r}")
    label = f"main {algebra_name} {host_name} {twist_name}"
    return [_timed(label, lambda: check_scalar_extension_twist(a, host, t, seed=args.seed))]


def _cmd_report(loaded: LoadedSpec, args) -> list[Result]:
    results: list[Result] = []
    for name in loaded.names:
        obj = loaded.build(name)
        if isinstance(obj, catalog.GroupPresentation):
            continue  # group laws are enforced by the constructor
        if isinstance(obj, (Twist, TwistTables, RMatrix, RMatrixTables)):
            checker: Callable[[], Report] = lambda o=obj: _verify_twist_like(o)
        elif isinstance(obj, YDAlgebra):
            checker = lambda o=obj: _verify_ydalgebra(o)
        elif isinstance(obj, YDModule):
            checker = lambda o=obj: check_yd(o)
        elif isinstance(obj, HopfData):
            checker = lambda o=obj: check_hopf(o)
        elif isinstance(obj, BialgebraData):
            checker = lambda o=obj: check_bialgebra(o)
        else:  # pragma: no cover - loader only produces the types above
            continue
        results.append(_timed(name, checker))
    return results


# ---------------------------------------------------------------------------
# Output

def _progress(message: str) -> None:
    print(message, file=sys.stderr)


def _emit_text(results: list[Result], timing: bool, out) -> None:
    total = failed = 0
    for label, rep, secs in results:
        for c in rep.checks:
            total += 1
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {label}: {c.name}"
            if not c.passed:
                failed += 1
                if c.at is not None:
                    line += f"  at {tuple(c.at)}"
            print(line, file=out)
            if not c.passed:
                for tag, value in (("lhs", c.lhs), ("rhs", c.rhs), ("detail", c.detail)):
                    if value:
                        print(f"      {tag} = {value}", file=out)
        if timing:
            print(f"      [{label}: {secs:.3f}s]", file=out)
    verdict = "all passed" if not failed else f"{failed} failed"
    print(f"{total} checks, {verdict}", file=out)


def _command_line(args) -> str:
    """A canonical rendering of the command, independent of flag order."""
    if args.command == "verify":
        return f"verify {args.kind} {args.name}"
    if args.command == "smash":
        return f"smash {args.algebra} {args.host}"
    if args.command == "theorem":
        return f"theorem {args.variant} {' '.join(args.names)}"
    return args.command


def _emit_json(results: list[Result], loaded: LoadedSpec, command: str, timing: bool, out) -> None:
    payload = []
    for label, rep, secs in results:
        entry = {"label": label, **rep.to_dict()}
        if timing:
            entry["seconds"] = round(secs, 6)
        payload.append(entry)
    total = sum(len(rep.checks) for _, rep, _ in results)
    failed = sum(1 for _, rep, _ in results for c in rep.checks if not c.passed)
    doc = {
        "command": command,
        "field": loaded.field_descriptor,
        "results": payload,
        "summary": {"checks": total, "failed": failed, "passed": failed == 0},
    }
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# Argument parsing and entry point


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--spec", metavar="FILE", default=argparse.SUPPRESS,
                        help="JSON description file (required)")
    shared.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default: text)")
    shared.add_argument("--parallel", type=int, metavar="N", default=argparse.SUPPRESS,
                        help="worker count (accepted; checks currently run sequentially)")
    shared.add_argument("--seed", type=int, metavar="N", default=argparse.SUPPRESS,
                        help="seed for randomized spot-checks (default: 0)")
    shared.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock seconds in the output")

    parser = argparse.ArgumentParser(
        prog="hopfcheck",
        parents=[shared],
        description="Exact verification of Hopf-algebraic structures from a JSON description file.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p_verify = sub.add_parser("verify", parents=[shared], help="check one object's axioms")
    p_verify.add_argument("kind", choices=sorted(_VERIFY))
    p_verify.add_argument("name")

    p_smash = sub.add_parser("smash", parents=[shared], help="build and check a smash product")
    p_smash.add_argument("algebra", help="a YD module algebra")
    p_smash.add_argument("host", help="its host bialgebra")

    p_theorem = sub.add_parser("theorem", parents=[shared], help="run a full theorem certification")
    p_theorem.add_argument("variant", choices=("czgen", "main"))
    p_theorem.add_argument(
        "names",
        nargs=3,
        metavar="NAME",
        help="czgen: HOST TWIST MODULE;  main: ALGEBRA HOST TWIST",
    )

    sub.add_parser("report", parents=[shared], help="check every object in the file")
    return parser


_DISPATCH = {
    "verify": _cmd_verify,
    "smash": _cmd_smash,
    "theorem": _cmd_theorem,
    "report": _cmd_report,
}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    for attr, default in (("spec", None), ("format", "text"), ("parallel", 1), ("seed", 0), ("timing", False)):
        if not hasattr(args, attr):
            setattr(args, attr, default)
    if args.spec is None:
        print("error: --spec FILE is required", file=sys.stderr)
        return 2
    if args.parallel != 1:
        _progress(f"note: --parallel {args.parallel} accepted; checks run sequentially")

    try:
        loaded = load_spec(args.spec)
        try:
            results = _DISPATCH[args.command](loaded, args)
        except CheckFailure as exc:
            # an object failed its fail-closed construction; its report is
            # the result
            results = [(exc.report.subject, exc.report, 0.0)]
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out = sys.stdout
    if args.format == "json":
        _emit_json(results, loaded, _command_line(args), args.timing, out)
    else:
        _emit_text(results, args.timing, out)
    return 0 if all(rep.passed for _, rep, _ in results) else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
