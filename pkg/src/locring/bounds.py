"""Binomial-representation growth bounds for Hilbert functions, and the
case-by-case feasibility reports that mechanize the order-of-f elimination
arithmetic.
"""

import itertools
from dataclasses import dataclass, field
from math import comb

from .errors import BudgetExceeded

ELIMINATED = "ELIMINATED"
UNRESOLVED = "UNRESOLVED"


@dataclass
class MacaulayRep:
    """The unique expansion d = sum of C(k_i, i) with strictly decreasing k_i."""
    d: int
    n: int
    ks: list  # (k_i, i) pairs, i descending

    def value(self):
        return sum(comb(k, i) for k, i in self.ks)


def macaulay_rep(d, n):
    """Greedy (and hence unique) binomial representation of d in degree n."""
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    ks = []
    rem = d
    i = n
    while rem > 0:
        if i < 1:
            raise ValueError(f"no representation for d={d}, n={n}")
        k = i
        while comb(k + 1, i) <= rem:
            k += 1
        ks.append((k, i))
        rem -= comb(k, i)
        i -= 1
    return MacaulayRep(d, n, ks)


def macaulay_bound(d, n):
    """Maximal Hilbert-function growth from value d in degree n."""
    if d == 0:
        return 0
    rep = macaulay_rep(d, n)
    return sum(comb(k + 1, i + 1) for k, i in rep.ks)


def _monomials_of_degree(v, n):
    """Degree-n exponent tuples in v variables, descending lex."""
    out = []
    for bars in itertools.combinations(range(n + v - 1), v - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(n + v - 1 - prev - 1)
        out.append(tuple(exps))
    out.sort(reverse=True)
    return out


def lex_segment_oracle(d, n, v, max_monomials=2_000_000):
    """Growth of the lex-segment quotient: keep the d lex-smallest degree-n
    monomials in the quotient and count the surviving degree-(n+1) ones.

    Independent combinatorial check of macaulay_bound (use v >= n + d)."""
    total_n = comb(n + v - 1, v - 1)
    total_n1 = comb(n + v, v - 1)
    if total_n > max_monomials or total_n1 > max_monomials:
        raise BudgetExceeded("lex_segment_oracle: too many monomials",
                             {"total": max(total_n, total_n1)})
    if d == 0:
        return 0
    if d > total_n:
        raise ValueError("d exceeds the number of degree-n monomials")
    monos = _monomials_of_degree(v, n)
    in_ideal = monos[:total_n - d]  # the lex-largest go into the ideal
    next_ideal = set()
    for m in in_ideal:
        for i in range(v):
            e = list(m)
            e[i] += 1
            next_ideal.add(tuple(e))
    return total_n1 - len(next_ideal)


def hf_feasible_max_length(prefix, N):
    """Total length of the maximal Hilbert function extending the prefix,
    given that degree N and beyond vanish and the socle forces the value 1
    in degree N-1 (Gorenstein quotient with m^N inside the principal ideal)."""
    if not prefix or prefix[0] != 1:
        raise ValueError("prefix must start with 1")
    values = list(prefix[:N])
    while len(values) < N:
        j = len(values) - 1
        if j == 0:
            if len(values) == N - 1:
                values.append(1)  # the socle cap applies directly
                break
            raise ValueError("cannot extend from degree 0 without a bound")
        values.append(macaulay_bound(values[-1], j))
    values[N - 1] = min(values[N - 1], 1)
    return sum(values)


@dataclass
class CaseEntry:
    order_d: int
    hf1: int
    hf2: int
    prefix: tuple
    max_length: int
    threshold: int  # d * e, the least colength an order-d parameter allows
    status: str
    reason: str


@dataclass
class CaseReport:
    emb: int
    e: int
    hf2_ambient: int
    N: int
    d_max: int
    entries: list = field(default_factory=list)
    tail_summary: str = ""

    def eliminated(self):
        return [c for c in self.entries if c.status == ELIMINATED]

    def unresolved(self):
        return [c for c in self.entries if c.status == UNRESOLVED]


# Known dimensions of the degree-2 slice of the initial ideal of I + (f),
# by the order of f: for order 1 the slice is spanned by x^2, f^2, af, bf
# (between 3 and 4 independent); for order 2 by x^2, f (1 or 2); for higher
# order no slice information is used (the coarse ambient bound applies).
DEFAULT_J2_RANGES = {1: (3, 4), 2: (1, 2)}


def order_case_report(emb, e, hf2_ambient, N, d_max, j2_ranges=None):
    """Enumerate orders d and admissible HF prefixes for R/fR, marking each
    case ELIMINATED when the maximal feasible length is below d*e."""
    j2 = dict(DEFAULT_J2_RANGES if j2_ranges is None else j2_ranges)
    report = CaseReport(emb, e, hf2_ambient, N, d_max)
    for d in range(1, d_max + 1):
        hf1 = emb - 1 if d == 1 else emb
        lo, hi = j2.get(d, (0, 0))
        lo, hi = min(lo, hf2_ambient), min(hi, hf2_ambient)
        cap = macaulay_bound(hf1, 1)
        hf2_lo = max(0, hf2_ambient - hi)
        hf2_hi = min(hf2_ambient - lo, cap)
        for hf2 in range(hf2_lo, hf2_hi + 1):
            prefix = (1, hf1, hf2)
            max_len = hf_feasible_max_length(prefix, N)
            threshold = d * e
            if max_len < threshold:
                entry = CaseEntry(d, hf1, hf2, prefix, max_len, threshold,
                                  ELIMINATED,
                                  f"max length {max_len} < {threshold}")
            else:
                entry = CaseEntry(d, hf1, hf2, prefix, max_len, threshold,
                                  UNRESOLVED,
                                  f"max length {max_len} >= {threshold}")
            report.entries.append(entry)
    # orders beyond d_max: the length cap is independent of d while the
    # threshold d*e grows, so one comparison settles the whole tail
    tail_cap = hf_feasible_max_length((1, emb), N) if N > 1 else 1
    tail_threshold = (d_max + 1) * e
    if tail_cap < tail_threshold:
        report.tail_summary = (
            f"all orders d > {d_max} eliminated: max length {tail_cap} < "
            f"d*e >= {tail_threshold}")
    else:
        report.tail_summary = (
            f"orders d > {d_max} not settled: max length {tail_cap} >= "
            f"{tail_threshold}")
    return report
