"""Monomial ideals: intersection, irreducible decomposition, minimal primes.

A MonomialIdeal stores its minimal generating set as sorted exponent tuples.
"""

from itertools import combinations

from .errors import UnitIdeal
from .poly import mono_divides, mono_lcm


def _minimalize(monos):
    out = []
    for e in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(mono_divides(g, e) for g in out):
            out.append(e)
    return tuple(sorted(out))


class MonomialIdeal:
    """An ideal generated by monomials, kept in minimal canonical form."""

    def __init__(self, nvars, generators):
        self.nvars = nvars
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != nvars:
                raise ValueError("exponent tuple of wrong length")
            gens.append(g)
        self.generators = _minimalize(gens)

    @classmethod
    def from_ideal(cls, ideal):
        """Build from an Ideal whose reduced Groebner basis is monomial."""
        gb = ideal.groebner()
        exps = []
        for g in gb.generators:
            if not g.is_monomial():
                raise ValueError("ideal is not a monomial ideal")
            exps.append(next(iter(g.terms)))
        return cls(ideal.ring.nvars, exps)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.nvars == other.nvars
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.nvars, self.generators))

    def __repr__(self):
        return f"MonomialIdeal{self.generators}"

    def is_proper(self):
        return all(sum(g) > 0 for g in self.generators)

    def is_zero(self):
        return not self.generators

    def member(self, mono):
        return any(mono_divides(g, mono) for g in self.generators)

    def contains(self, other):
        return all(self.member(g) for g in other.generators)

    def intersect(self, other):
        if self.is_zero() or other.is_zero():
            return MonomialIdeal(self.nvars, [])
        gens = [mono_lcm(a, b) for a in self.generators for b in other.generators]
        return MonomialIdeal(self.nvars, gens)

    def plus(self, monos):
        return MonomialIdeal(self.nvars, list(self.generators) + list(monos))

    def support(self):
        """Variables appearing in some generator."""
        return frozenset(i for g in self.generators for i in range(self.nvars)
                         if g[i] > 0)

    def is_irreducible(self):
        """Generated by pure variable powers."""
        return all(sum(1 for e in g if e > 0) <= 1 for g in self.generators)

    def irreducible_decomposition(self):
        """Irredundant list of irreducible components, canonically sorted.

        A mixed generator u*v with coprime nontrivial u, v splits the ideal
        as (A+(u)) intersect (A+(v)); recursion bottoms out at pure-power
        ideals.
        """
        if not self.is_proper():
            raise UnitIdeal("unit ideal has no decomposition")
        components = set()
        self._decompose(components)
        comps = sorted(components, key=lambda c: c.generators)
        # drop redundant components (those containing the intersection of
        # the others)
        irredundant = list(comps)
        changed = True
        while changed:
            changed = False
            for c in list(irredundant):
                rest = [d for d in irredundant if d is not c]
                if not rest:
                    continue
                inter = rest[0]
                for d in rest[1:]:
                    inter = inter.intersect(d)
                if c.contains(inter):
                    irredundant.remove(c)
                    changed = True
                    break
        return sorted(irredundant, key=lambda c: c.generators)

    def _decompose(self, acc):
        split = self._first_mixed_generator()
        if split is None:
            acc.add(self)
            return
        u, v = split
        self.plus([u])._decompose(acc)
        self.plus([v])._decompose(acc)

    def _first_mixed_generator(self):
        for g in self.generators:
            nz = [i for i, e in enumerate(g) if e > 0]
            if len(nz) > 1:
                i = nz[0]
                u = tuple(g[j] if j == i else 0 for j in range(self.nvars))
                v = tuple(0 if j == i else g[j] for j in range(self.nvars))
                return u, v
        return None

    def minimal_primes(self):
        """Supports of the irreducible components, minimal under inclusion."""
        supports = {c.support() for c in self.irreducible_decomposition()}
        minimal = []
        for s in sorted(supports, key=lambda s: (len(s), sorted(s))):
            if not any(m < s for m in minimal):
                minimal.append(s)
        return [s for s in minimal if not any(m < s for m in minimal)]


def linear_nzd_exists(A, field_size=None):
    """Degree-one form avoiding all minimal primes of A (diagnostic).

    Only minimal primes are tested (embedded primes of the tangent cone are
    not computed), so a True verdict checks a necessary fragment of the
    Cohen-Macaulay-plus-linear-nonzerodivisor hypothesis, not all of it.

    Returns (exists, witness_support_or_vector, caveat).  Over an infinite
    field the witness is a set of variable indices (their sum works); for a
    finite field of size q pass field_size=q to brute-force coefficient
    vectors.
    """
    caveat = "minimal-primes-only"
    primes = A.minimal_primes()
    n = A.nvars
    if field_size is not None:
        from itertools import product
        for coeffs in product(range(field_size), repeat=n):
            if not any(coeffs):
                continue
            support = {i for i, c in enumerate(coeffs) if c}
            if all(not support <= p for p in primes):
                return True, coeffs, caveat
        return False, None, caveat
    # infinite field: a linear form lies in a monomial prime iff its support
    # is contained in that prime, so search supports by size then lex
    for size in range(1, n + 1):
        for support in combinations(range(n), size):
            s = set(support)
            if all(not s <= p for p in primes):
                return True, frozenset(support), caveat
    return False, None, caveat
