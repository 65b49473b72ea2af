"""Shared fixtures: the three worked instances every heavy suite runs on.

Session scope keeps the S3 objects (the expensive ones) built once.
"""

import pytest

from hopfcheck import QQ, Element
from hopfcheck import catalog


@pytest.fixture(scope="session")
def v4():
    return catalog.group_by_name("Z2xZ2")


@pytest.fixture(scope="session")
def kv4(v4):
    return catalog.group_algebra(v4, QQ)


@pytest.fixture(scope="session")
def v4_conj(v4):
    return catalog.conjugation_yd(v4, QQ)


@pytest.fixture(scope="session")
def v4_pair(v4):
    """Bicharacter twist and R-matrix for beta(g1, g2) = -1."""
    return catalog.bicharacter_structures(v4, [[0, 0], [1, 0]], QQ)


@pytest.fixture(scope="session")
def v4_twist(v4_pair):
    return v4_pair[0]


@pytest.fixture(scope="session")
def h4():
    return catalog.sweedler_h4(QQ)


@pytest.fixture(scope="session")
def h4_adj(h4):
    return catalog.adjoint_yd(h4)


@pytest.fixture(scope="session")
def h4_twist(h4):
    # u = 1 + x: counit 1, inverse 1 - x
    u = Element.from_coords(h4.space, {0: 1, 2: 1})
    return catalog.coboundary_twist(h4, u)


@pytest.fixture(scope="session")
def s3():
    return catalog.symmetric_group(3)


@pytest.fixture(scope="session")
def ks3(s3):
    return catalog.group_algebra(s3, QQ)


@pytest.fixture(scope="session")
def s3_conj(s3):
    return catalog.conjugation_yd(s3, QQ)


@pytest.fixture(scope="session")
def s3_twist(ks3):
    # u = 2e - (12): counit 1, invertible over Q
    i12 = ks3.space.labels.index("(12)")
    u = Element.from_coords(ks3.space, {0: 2, i12: -1})
    return catalog.coboundary_twist(ks3, u)


@pytest.fixture(scope="session")
def z2():
    return catalog.group_by_name("Z2")


@pytest.fixture(scope="session")
def kz2(z2):
    return catalog.group_algebra(z2, QQ)


@pytest.fixture(scope="session")
def z2_conj(z2):
    return catalog.conjugation_yd(z2, QQ)
