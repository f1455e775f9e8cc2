"""Ideal arithmetic on top of the Groebner kernel.

Intersections go through the auxiliary-variable elimination trick
(eliminate t from t*I + (1-t)*J); quotients reduce to intersections with
principal ideals followed by exact division.
"""

import itertools
import math

from . import groebner
from .errors import RingMismatch, ZeroColon
from .groebner import DEFAULT_MAX_PAIRS
from .poly import BlockOrder, DegRevLex, Polynomial, PolyRing, mono_divides

INFINITE = math.inf

_AUX = "_t"


def all_monomials(ring, d):
    """All exponent tuples of total degree d, in a fixed (lex) order."""
    n = ring.nvars
    out = []
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 1 - prev - 1)
        out.append(tuple(exps))
    out.sort(reverse=True)
    return out


def max_ideal(ring):
    """The ideal generated by all the variables."""
    return Ideal(ring, ring.gens())


def max_ideal_power(ring, d):
    """n^d, generated by all degree-d monomials."""
    if d == 0:
        return Ideal(ring, [ring.one()])
    return Ideal(ring, [ring.monomial(e) for e in all_monomials(ring, d)])


def exact_div(f, g, order=None):
    """Return q with f = q*g; assumes g divides f (f in the ideal (g))."""
    order = order or DegRevLex()
    ring = f.ring
    q = ring.zero()
    r = f
    while not r.is_zero():
        lt_r, c_r = r.leading_term(order)
        lt_g, c_g = g.leading_term(order)
        from .poly import mono_div
        m = mono_div(lt_r, lt_g)
        if m is None:
            raise ValueError("exact_div: division is not exact")
        t = ring.monomial(m, c_r / c_g)
        q = q + t
        r = r - t * g
    return q


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases."""

    def __init__(self, ring, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.parse(g)
            if g.ring != ring:
                raise RingMismatch("generator in wrong ring")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self.gb_cache = {}

    def __repr__(self):
        return f"Ideal({len(self.generators)} gens in {self.ring})"

    def is_zero_ideal(self):
        return not self.generators

    def groebner(self, order=None, max_pairs=DEFAULT_MAX_PAIRS,
                 time_budget=None):
        order = order or DegRevLex()
        gb = self.gb_cache.get(order)
        if gb is None:
            gb = groebner.buchberger(list(self.generators), order,
                                     max_pairs=max_pairs,
                                     time_budget=time_budget)
            self.gb_cache[order] = gb
        return gb

    # -- membership and comparison ------------------------------------------

    def member(self, f, order=None):
        if f.is_zero():
            return True
        if self.is_zero_ideal():
            return False
        return groebner.is_member(f, self.groebner(order))

    def contains(self, other):
        return all(self.member(g) for g in other.generators)

    def equals(self, other):
        ga = self.groebner()
        gb = other.groebner()
        return ga.generators == gb.generators

    def is_unit_ideal(self):
        gb = self.groebner()
        return len(gb.generators) == 1 and gb.generators[0].is_constant() \
            and not gb.generators[0].is_zero()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._same_ring(other)
        return Ideal(self.ring, list(self.generators) + list(other.generators))

    def __mul__(self, other):
        self._same_ring(other)
        gens = [f * g for f in self.generators for g in other.generators]
        return Ideal(self.ring, _dedupe_monomial_gens(self.ring, gens))

    def power(self, n):
        if n < 0:
            raise ValueError("negative ideal power")
        if n == 0:
            return Ideal(self.ring, [self.ring.one()])
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def _same_ring(self, other):
        if other.ring != self.ring:
            raise RingMismatch("ideals in different rings")

    # -- intersection, quotient, saturation ---------------------------------

    def intersect(self, other, max_pairs=DEFAULT_MAX_PAIRS,
                  time_budget=None):
        self._same_ring(other)
        if self.is_zero_ideal() or other.is_zero_ideal():
            return Ideal(self.ring, [])
        ext = self.ring.extend(_aux_name(self.ring), front=True)
        t = ext.var(0)
        one = ext.one()
        pos = list(range(1, ext.nvars))
        gens = [t * f.map_to(ext, pos) for f in self.generators]
        gens += [(one - t) * g.map_to(ext, pos) for g in other.generators]
        order = BlockOrder(1)
        gb = groebner.buchberger(gens, order, max_pairs=max_pairs,
                                 time_budget=time_budget)
        kept = [_drop_first_var(g, self.ring) for g in gb.generators
                if all(e[0] == 0 for e in g.terms)]
        return Ideal(self.ring, kept)

    def quotient_element(self, g, max_pairs=DEFAULT_MAX_PAIRS,
                         time_budget=None):
        """I : (g) for a single nonzero polynomial g."""
        if g.is_zero():
            raise ZeroColon("colon by zero element")
        if self.is_zero_ideal():
            return Ideal(self.ring, [])
        inter = self.intersect(Ideal(self.ring, [g]), max_pairs=max_pairs,
                               time_budget=time_budget)
        return Ideal(self.ring, [exact_div(f, g) for f in inter.generators])

    def quotient(self, other, max_pairs=DEFAULT_MAX_PAIRS,
                 time_budget=None):
        """I : J, as the intersection of the single-element colons."""
        self._same_ring(other)
        if other.is_zero_ideal():
            raise ZeroColon("colon by zero ideal")
        out = None
        for g in other.generators:
            q = self.quotient_element(g, max_pairs=max_pairs,
                                      time_budget=time_budget)
            out = q if out is None else out.intersect(
                q, max_pairs=max_pairs, time_budget=time_budget)
        return out

    def saturate(self, f, max_iter=100, max_pairs=DEFAULT_MAX_PAIRS,
                 time_budget=None):
        """I : f^infinity by iterated colon until stabilization."""
        from .errors import BudgetExceeded
        if f.is_zero():
            raise ZeroColon("saturation by zero")
        cur = self
        for _ in range(max_iter):
            nxt = cur.quotient_element(f, max_pairs=max_pairs,
                                       time_budget=time_budget)
            if nxt.equals(cur):
                return cur
            cur = nxt
        raise BudgetExceeded("saturation did not stabilize",
                             {"iterations": max_iter})

    # -- elimination --------------------------------------------------------

    def eliminate(self, drop_names, max_pairs=DEFAULT_MAX_PAIRS,
                  time_budget=None, inner_order=None):
        """Contract to the subring without the dropped variables."""
        drop = [n for n in self.ring.names if n in set(drop_names)]
        if not drop:
            return Ideal(self.ring, list(self.generators))
        keep = [n for n in self.ring.names if n not in set(drop_names)]
        reordered = PolyRing(self.ring.field, tuple(drop) + tuple(keep))
        pos = [reordered.names.index(n) for n in self.ring.names]
        gens = [g.map_to(reordered, pos) for g in self.generators]
        order = BlockOrder(len(drop), second=inner_order)
        gb = groebner.buchberger(gens, order, max_pairs=max_pairs,
                                 time_budget=time_budget)
        target = PolyRing(self.ring.field, tuple(keep))
        kept = []
        for g in gb.generators:
            if all(all(e[i] == 0 for i in range(len(drop))) for e in g.terms):
                terms = {e[len(drop):]: c for e, c in g.terms.items()}
                kept.append(Polynomial(target, terms))
        return Ideal(target, kept)

    # -- dimensions ---------------------------------------------------------

    def vector_space_dim(self, max_pairs=DEFAULT_MAX_PAIRS,
                         time_budget=None):
        """Length of S/I as a k-vector space (count of standard monomials),
        or INFINITE."""
        if self.is_zero_ideal():
            return INFINITE
        gb = self.groebner(max_pairs=max_pairs, time_budget=time_budget)
        if not gb.generators:
            return INFINITE
        lts = gb.leading_monomials()
        if any(sum(e) == 0 for e in lts):
            return 0  # unit ideal: S/I = 0... length 0 quotient
        n = self.ring.nvars
        bounds = []
        for i in range(n):
            pure = [e[i] for e in lts if sum(e) == e[i]]
            if not pure:
                return INFINITE
            bounds.append(min(pure))
        count = 0
        for exps in itertools.product(*(range(b) for b in bounds)):
            if not any(mono_divides(l, exps) for l in lts):
                count += 1
        return count

    def min_power_of_max_ideal_in(self, bound,
                                  max_pairs=DEFAULT_MAX_PAIRS,
                                  time_budget=None):
        """Smallest N <= bound with every degree-N monomial in the ideal,
        or None if there is none."""
        if bound < 1:
            raise ValueError("bound must be >= 1")
        gb = self.groebner(max_pairs=max_pairs, time_budget=time_budget)
        for N in range(1, bound + 1):
            ok = True
            for e in all_monomials(self.ring, N):
                if not groebner.is_member(self.ring.monomial(e), gb):
                    ok = False
                    break
            if ok:
                return N
        return None


def _aux_name(ring):
    name = _AUX
    while name in ring.names:
        name += "_"
    return name


def _drop_first_var(p, target):
    terms = {e[1:]: c for e, c in p.terms.items()}
    return Polynomial(target, terms)


def _dedupe_monomial_gens(ring, gens):
    """If all generators are monomials, keep only divisibility-minimal ones."""
    if not gens or not all(g.is_monomial() for g in gens):
        return gens
    exps = sorted({next(iter(g.terms)) for g in gens})
    minimal = []
    for e in sorted(exps, key=sum):
        if not any(mono_divides(m, e) for m in minimal):
            minimal.append(e)
    return [ring.monomial(e) for e in sorted(minimal, reverse=True)]
