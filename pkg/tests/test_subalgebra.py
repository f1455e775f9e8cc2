import pytest

from locring.arith import QQ
from locring.errors import ParseError
from locring.ideal import Ideal, max_ideal_power
from locring.localring import LocalRing
from locring.poly import PolyRing
from locring.subalgebra import (ParametrizedMap, kernel, parse_map_file,
                                verify_in_kernel)


@pytest.fixture
def T():
    return PolyRing(QQ, ("t",))


def _monomial_map(T, exps, names):
    t = T.var(0)
    src = PolyRing(QQ, tuple(names))
    return ParametrizedMap(src, [t ** e for e in exps])


def test_images_must_be_nonconstant(T):
    src = PolyRing(QQ, ("x",))
    with pytest.raises(ValueError):
        ParametrizedMap(src, [T.one()])
    with pytest.raises(ValueError):
        ParametrizedMap(src, [T.parse("t + 1")])


@pytest.mark.parametrize("a,b", [(2, 3), (2, 5), (3, 4)])
def test_monomial_curve_kernels(T, a, b):
    pm = _monomial_map(T, (a, b), ("x", "y"))
    K = kernel(pm)
    expected = Ideal(pm.source, [f"x^{b} - y^{a}"])
    assert K.equals(expected)
    assert all(verify_in_kernel(g, pm) for g in K.generators)


def test_verify_in_kernel(T):
    pm = _monomial_map(T, (2, 3), ("x", "y"))
    src = pm.source
    assert verify_in_kernel(src.parse("x^3 - y^2"), pm)
    assert not verify_in_kernel(src.parse("x - y"), pm)


def test_heavy_parametrization_kernel(T):
    t = T.var(0)
    src = PolyRing(QQ, ("x", "y", "z"))
    pm = ParametrizedMap(src, [t ** 8 + t ** 10, t ** 9, t ** 20 + t ** 36])
    J = kernel(pm)
    assert all(verify_in_kernel(g, pm) for g in J.generators)
    n5 = max_ideal_power(src, 5)
    target = Ideal(src, ["z^2", "y^4 - x^2*z + 2*y^2*z"]) + n5
    assert (J + n5).equals(target)
    # the quotient is a one-dimensional local ring of multiplicity 8
    R = LocalRing(src, J)
    assert R.multiplicity(window=5) == 8


def test_map_file_roundtrip():
    text = "t\nx = t^8 + t^10\ny = t^9\nz = t^20 + t^36\n"
    pm = parse_map_file(text, QQ)
    assert pm.source.names == ("x", "y", "z")
    assert pm.image_orders() == (8, 9, 20)


def test_map_file_errors():
    with pytest.raises(ParseError):
        parse_map_file("", QQ)
    with pytest.raises(ParseError):
        parse_map_file("t\nx t^2\n", QQ)
    with pytest.raises(ParseError):
        parse_map_file("t\n", QQ)
