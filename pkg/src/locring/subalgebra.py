"""Kernels of maps x_i -> g_i(t): presentations of subalgebras of k[t]
generated by polynomials with zero constant term.
"""

from .errors import ParseError
from .groebner import DEFAULT_MAX_PAIRS, buchberger
from .ideal import Ideal
from .poly import BlockOrder, Polynomial, PolyRing


class ParametrizedMap:
    """A map k[x_1..x_n] -> k[t], x_i -> g_i(t), into the maximal ideal."""

    def __init__(self, source_ring, images):
        if len(images) != source_ring.nvars:
            raise ValueError("one image per source variable")
        for g in images:
            if g.ring.nvars != 1:
                raise ValueError("images must be univariate")
            if g.ring.field != source_ring.field:
                raise ValueError("field mismatch between source and images")
            if g.is_zero() or g.is_constant():
                raise ValueError("images must be nonconstant")
            if (0,) in g.terms:
                raise ValueError("images must have zero constant term")
        self.source = source_ring
        self.param = images[0].ring
        self.images = tuple(images)

    def apply(self, f):
        """Substitute x_i <- g_i(t)."""
        return f.substitute(list(self.images))

    def image_orders(self):
        return tuple(min(e[0] for e in g.terms) for g in self.images)


def kernel(pmap, max_pairs=DEFAULT_MAX_PAIRS, time_budget=None,
           inner_order=None):
    """The kernel ideal in the source ring, by eliminating t from
    (x_1 - g_1(t), ..., x_n - g_n(t))."""
    src = pmap.source
    ext = PolyRing(src.field, ("t",) + src.names)
    t_positions = [0]
    gens = []
    for i, g in enumerate(pmap.images):
        lifted_g = g.map_to(ext, t_positions)
        xi = ext.var(i + 1)
        gens.append(xi - lifted_g)
    order = BlockOrder(1, second=inner_order)
    gb = buchberger(gens, order, max_pairs=max_pairs, time_budget=time_budget)
    kept = []
    for g in gb.generators:
        if all(e[0] == 0 for e in g.terms):
            terms = {e[1:]: c for e, c in g.terms.items()}
            kept.append(Polynomial(src, terms))
    return Ideal(src, kept)


def verify_in_kernel(f, pmap):
    """Independent membership check by substitution; no basis computation."""
    return pmap.apply(f).is_zero()


def parse_map_file(text, field):
    """Map description: first nonempty line names the parameter, then one
    `x = <expression in the parameter>` line per source variable."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty map file", 0)
    param = lines[0]
    if not param.isidentifier():
        raise ParseError(f"bad parameter name {param!r}", 0)
    tring = PolyRing(field, (param,))
    names = []
    images = []
    for ln in lines[1:]:
        if "=" not in ln:
            raise ParseError(f"expected '<var> = <expr>', got {ln!r}", 0)
        name, expr = ln.split("=", 1)
        name = name.strip()
        if not name.isidentifier():
            raise ParseError(f"bad variable name {name!r}", 0)
        names.append(name)
        images.append(tring.parse(expr.strip()))
    if not names:
        raise ParseError("map file defines no source variables", 0)
    src = PolyRing(field, tuple(names))
    return ParametrizedMap(src, images)
