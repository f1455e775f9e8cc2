"""Buchberger's algorithm with sugar selection and Gebauer-Moeller pruning.

The engine works on term dicts (exps tuple -> coeff) for speed; the public
functions take and return Polynomial objects.  Determinism: divisors are
tried in list order during reduction, the pair queue breaks ties by
(sugar, lcm degree, order key of lcm, indices), and the reduced basis is
sorted by leading monomial.
"""

import heapq
import time
from fractions import Fraction
from math import gcd

from .errors import BudgetExceeded, RingMismatch
from .poly import Polynomial, mono_degree, mono_div, mono_lcm, mono_mul

DEFAULT_MAX_PAIRS = 2_000_000


class GroebnerBasis:
    """A (reduced) Groebner basis with its order."""

    def __init__(self, generators, order, reduced=True):
        self.generators = list(generators)
        self.order = order
        self.reduced = reduced

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.generators]

    def __repr__(self):
        return f"GroebnerBasis({len(self.generators)} gens, {self.order})"


# ---------------------------------------------------------------------------
# term-dict helpers

def _normalize(terms, field):
    """Canonical scaling: monic over a finite field; over Q, integer
    coefficients with content 1 and positive leading-ish sign left to the
    caller (we normalize so that gcd of numerators is 1)."""
    if not terms:
        return terms
    sample = next(iter(terms.values()))
    if isinstance(sample, Fraction):
        num_gcd = 0
        den_lcm = 1
        for c in terms.values():
            num_gcd = gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        scale = Fraction(den_lcm, num_gcd)
        return {e: c * scale for e, c in terms.items()}
    inv = field.inverse(sample)
    return {e: c * inv for e, c in terms.items()}


def _monic(terms, lt_exps, field):
    c = terms[lt_exps]
    if c == field.one():
        return terms
    inv = field.inverse(c)
    return {e: x * inv for e, x in terms.items()}


def _lt(terms, key):
    return max(terms, key=key)


def _nf_dict(terms, divisors, key, field):
    """Full normal form of a term dict against divisors.

    divisors: list of (lt_exps, lt_coeff, terms_dict), tried in order.
    """
    if not terms:
        return {}
    work = dict(terms)
    heap = [tuple(-x for x in key(e)) + (e,) for e in work]
    heapq.heapify(heap)
    nv = len(next(iter(work)))
    remainder = {}
    while heap:
        entry = heapq.heappop(heap)
        e = entry[-1]
        c = work.get(e)
        if c is None:
            continue
        hit = None
        for lt_e, lt_c, div_terms in divisors:
            q = mono_div(e, lt_e)
            if q is not None:
                hit = (q, lt_e, lt_c, div_terms)
                break
        if hit is None:
            remainder[e] = work.pop(e)
            continue
        q, lt_e, lt_c, div_terms = hit
        factor = c / lt_c
        del work[e]
        for de, dc in div_terms.items():
            if de == lt_e:
                continue
            ne = mono_mul(de, q)
            s = work.get(ne)
            if s is None:
                work[ne] = -factor * dc
                heapq.heappush(heap, tuple(-x for x in key(ne)) + (ne,))
            else:
                s = s - factor * dc
                if s:
                    work[ne] = s
                else:
                    del work[ne]
    return remainder


def _spoly_dict(f, lt_f, g, lt_g, field):
    """S-polynomial of term dicts f, g with known leading terms."""
    lcm = mono_lcm(lt_f[0], lt_g[0])
    qf = mono_div(lcm, lt_f[0])
    qg = mono_div(lcm, lt_g[0])
    cf = field.one() / lt_f[1]
    cg = field.one() / lt_g[1]
    out = {}
    for e, c in f.items():
        out[mono_mul(e, qf)] = c * cf
    for e, c in g.items():
        ne = mono_mul(e, qg)
        s = out.get(ne)
        if s is None:
            out[ne] = -c * cg
        else:
            s = s - c * cg
            if s:
                out[ne] = s
            else:
                del out[ne]
    return out


# ---------------------------------------------------------------------------
# public operations

def normal_form(f, G, order):
    """Remainder of f on division by the list G (divisors in list order)."""
    ring = f.ring
    for g in G:
        if g.ring != ring:
            raise RingMismatch("normal_form: mixed rings")
    key = order.key
    divisors = []
    for g in G:
        if g.is_zero():
            continue
        lt_e = _lt(g.terms, key)
        divisors.append((lt_e, g.terms[lt_e], g.terms))
    return Polynomial(ring, _nf_dict(f.terms, divisors, key, ring.field))


def spoly(f, g, order):
    """S-polynomial of two nonzero polynomials."""
    key = order.key
    field = f.ring.field
    lt_f = _lt(f.terms, key)
    lt_g = _lt(g.terms, key)
    terms = _spoly_dict(f.terms, (lt_f, f.terms[lt_f]), g.terms,
                        (lt_g, g.terms[lt_g]), field)
    return Polynomial(f.ring, terms)


def buchberger(gens, order, max_pairs=DEFAULT_MAX_PAIRS, time_budget=None):
    """Reduced Groebner basis of the ideal generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis([], order, reduced=True)
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("buchberger: mixed rings")
    field = ring.field
    key = order.key
    deadline = None if time_budget is None else time.monotonic() + time_budget

    G = []        # term dicts
    lts = []      # (exps, coeff)
    sugars = []
    pairs = set()
    heap = []

    def push_pair(i, j):
        lcm = mono_lcm(lts[i][0], lts[j][0])
        s = max(sugars[i] + mono_degree(lcm) - mono_degree(lts[i][0]),
                sugars[j] + mono_degree(lcm) - mono_degree(lts[j][0]))
        heapq.heappush(heap, (s, mono_degree(lcm), key(lcm), i, j))
        pairs.add((i, j))

    def add_poly(terms, sugar):
        t = len(G)
        lt_e = _lt(terms, key)
        lt_new = (lt_e, terms[lt_e])
        # Gebauer-Moeller: prune existing pairs made redundant by the new lt
        for (i, j) in list(pairs):
            lcm_ij = mono_lcm(lts[i][0], lts[j][0])
            if (mono_div(lcm_ij, lt_e) is not None
                    and lcm_ij != mono_lcm(lts[i][0], lt_e)
                    and lcm_ij != mono_lcm(lts[j][0], lt_e)):
                pairs.discard((i, j))
        G.append(terms)
        lts.append(lt_new)
        sugars.append(sugar)
        # group candidate pairs by lcm, minimalize, apply coprime criterion
        lcm_groups = {}
        for i in range(t):
            lcm_groups.setdefault(mono_lcm(lts[i][0], lt_e), []).append(i)
        minimal = []
        for L in sorted(lcm_groups, key=lambda m: (mono_degree(m), key(m))):
            if all(mono_div(L, M) is None for M in minimal):
                minimal.append(L)
        for L in minimal:
            members = lcm_groups[L]
            if any(mono_lcm(lts[i][0], lt_e) == mono_mul(lts[i][0], lt_e)
                   for i in members):
                continue  # a coprime pair covers this lcm
            push_pair(min(members), t)

    for g in sorted(gens, key=lambda p: key(p.leading_monomial(order))):
        terms = _normalize(dict(g.terms), field)
        add_poly(terms, max(mono_degree(e) for e in terms))

    processed = 0
    while heap:
        entry = heapq.heappop(heap)
        i, j = entry[3], entry[4]
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded(
                "buchberger: pair budget exceeded",
                {"pairs_processed": processed, "basis_size": len(G),
                 "pairs_pending": len(pairs)})
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(
                "buchberger: time budget exceeded",
                {"pairs_processed": processed, "basis_size": len(G),
                 "pairs_pending": len(pairs)})
        s = _spoly_dict(G[i], lts[i], G[j], lts[j], field)
        divisors = [(lts[t][0], lts[t][1], G[t]) for t in range(len(G))]
        r = _nf_dict(s, divisors, key, field)
        if r:
            add_poly(_normalize(r, field), entry[0])

    # minimalize: drop generators whose lt is divisible by another lt
    order_idx = sorted(range(len(G)), key=lambda t: key(lts[t][0]))
    minimal_idx = []
    for t in order_idx:
        if all(mono_div(lts[t][0], lts[u][0]) is None for u in minimal_idx):
            minimal_idx.append(t)
    # interreduce
    reduced = []
    for pos, t in enumerate(minimal_idx):
        others = [(lts[u][0], lts[u][1], G[u]) for u in minimal_idx if u != t]
        r = _nf_dict(G[t], others, key, field)
        r = _monic(r, _lt(r, key), field)
        reduced.append(r)
    # re-interreduce tails against the final monic set for full reduction
    final = []
    lt_list = [(_lt(r, key), r[_lt(r, key)], r) for r in reduced]
    for idx, r in enumerate(reduced):
        others = [lt_list[u] for u in range(len(reduced)) if u != idx]
        rr = _nf_dict(r, others, key, field)
        final.append(_monic(rr, _lt(rr, key), field))
    final.sort(key=lambda terms: key(_lt(terms, key)))
    return GroebnerBasis([Polynomial(ring, t) for t in final], order,
                         reduced=True)


def is_member(f, gb):
    """Ideal membership via a cached Groebner basis."""
    if f.is_zero():
        return True
    return normal_form(f, gb.generators, gb.order).is_zero()
