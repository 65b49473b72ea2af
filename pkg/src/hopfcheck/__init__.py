"""hopfcheck: exact verification of finite dimensional Hopf-algebraic structure.

The package represents algebras, coalgebras, bialgebras, Hopf algebras,
(co)module algebras, two-cocycle twists, smash products, and base-extended
bialgebroids by structure constants over an exact field (Q or F_p), and
machine-checks every defining axiom.  Nothing is approximate: all scalars
are exact and every check is an identity of vectors.
"""

from .exactlin import (
    QQ,
    GF,
    Element,
    FieldError,
    LinMap,
    NotInvertibleError,
    Space,
    field_from_descriptor,
    invert_in_algebra,
    invert_linmap,
    linsolve,
    quotient_space,
)
from .report import CheckFailure, CheckResult, Report

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "GF",
    "Element",
    "FieldError",
    "LinMap",
    "NotInvertibleError",
    "Space",
    "field_from_descriptor",
    "invert_in_algebra",
    "invert_linmap",
    "linsolve",
    "quotient_space",
    "CheckFailure",
    "CheckResult",
    "Report",
    "__version__",
]
