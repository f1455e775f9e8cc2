import pytest

from locring import Ideal, LocalRing, PolyRing, QQ


@pytest.fixture(scope="session")
def xyz():
    return PolyRing(QQ, ("x", "y", "z"))


@pytest.fixture(scope="session")
def cusp_ring(xyz):
    """The one-dimensional complete intersection with index 5."""
    I = Ideal(xyz, ["x^2 - y^5", "x*y^2 + y*z^3 - z^5"])
    return LocalRing(xyz, I)
