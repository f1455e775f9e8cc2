import pytest

from locring.arith import QQ, PrimeField
from locring.errors import BudgetExceeded
from locring.groebner import buchberger, is_member, normal_form, spoly
from locring.poly import DegRevLex, Lex, PolyRing


@pytest.fixture
def R():
    return PolyRing(QQ, ("x", "y"))


def test_spoly_cancels_leading_terms(R):
    order = DegRevLex()
    f = R.parse("x^2 + y")
    g = R.parse("x*y + x")
    s = spoly(f, g, order)
    # the lcm monomial x^2*y cancels
    assert order.key(s.leading_term(order)[0]) < order.key((2, 1))


def test_normal_form_is_zero_on_members(R):
    gb = buchberger([R.parse("x^2 - y"), R.parse("y^2 - x")], DegRevLex())
    f = R.parse("x^2 - y") * R.parse("x + y^3") + R.parse("y^2 - x")
    assert normal_form(f, gb.generators, DegRevLex()).is_zero()
    assert is_member(f, gb)


def test_katsura_like_system(R):
    # classic textbook pair: the reduced basis under lex solves the system
    gb = buchberger([R.parse("x^2 + y^2 - 1"), R.parse("x - y")], Lex())
    gens = {g.to_str() for g in gb.generators}
    assert gens == {"x - y", "y^2 - 1/2"}


def test_reduced_basis_is_canonical(R):
    f1, f2 = R.parse("x^3 - 2*x*y"), R.parse("x^2*y - 2*y^2 + x")
    gb1 = buchberger([f1, f2], DegRevLex())
    gb2 = buchberger([f2, f1], DegRevLex())
    assert gb1.generators == gb2.generators
    # the textbook answer for this pair
    gens = {g.to_str() for g in gb1.generators}
    assert gens == {"x^2", "x*y", "y^2 - 1/2*x"}


def test_unit_ideal(R):
    gb = buchberger([R.parse("x"), R.parse("x + 1")], DegRevLex())
    assert len(gb.generators) == 1
    assert gb.generators[0].is_constant()


def test_zero_input(R):
    gb = buchberger([R.zero()], DegRevLex())
    assert not gb.generators


def test_idempotence(R):
    gb = buchberger([R.parse("x^3 - 2*x*y"), R.parse("x^2*y - 2*y^2 + x")],
                    DegRevLex())
    again = buchberger(list(gb.generators), DegRevLex())
    assert again.generators == gb.generators


def test_finite_field_basis():
    R = PolyRing(PrimeField(7), ("x", "y"))
    gb = buchberger([R.parse("x^2 + y"), R.parse("x*y + 3")], DegRevLex())
    for g in gb.generators:
        assert is_member(g * R.parse("x + y"), gb)


def test_pair_budget():
    R = PolyRing(QQ, ("x", "y", "z"))
    gens = [R.parse("x^4 + y^3 + z^2 - 1"), R.parse("x^3 + y^2 + z - 1"),
            R.parse("x^2*y*z + x*y^2 + z^3")]
    with pytest.raises(BudgetExceeded) as exc:
        buchberger(gens, Lex(), max_pairs=3)
    assert "pairs" in str(exc.value.diagnostics)


def test_content_is_removed(R):
    gb = buchberger([R.parse("2*x^2 - 4*y")], DegRevLex())
    assert gb.generators[0] == R.parse("x^2 - 2*y")
