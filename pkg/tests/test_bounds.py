import pytest

from locring.bounds import (ELIMINATED, UNRESOLVED, hf_feasible_max_length,
                            lex_segment_oracle, macaulay_bound, macaulay_rep,
                            order_case_report)


def test_macaulay_rep_is_greedy_and_exact():
    rep = macaulay_rep(5, 2)
    assert rep.value() == 5
    assert rep.ks == [(3, 2), (2, 1)]
    for d in range(1, 40):
        for n in range(1, 5):
            r = macaulay_rep(d, n)
            assert r.value() == d
            ks = [k for k, _ in r.ks]
            assert ks == sorted(ks, reverse=True)
            assert len(set(ks)) == len(ks)


def test_macaulay_bound_quoted_values():
    assert macaulay_bound(5, 2) == 7
    assert macaulay_bound(2, 2) == 2
    assert macaulay_bound(4, 2) == 5
    assert macaulay_bound(0, 3) == 0


def test_bound_agrees_with_lex_segment_quotient():
    for n in range(1, 5):
        for d in range(1, 13):
            v = n + d  # enough variables that the segment is unconstrained
            assert lex_segment_oracle(d, n, v) == macaulay_bound(d, n)


def test_lex_segment_edge_cases():
    assert lex_segment_oracle(0, 2, 3) == 0
    with pytest.raises(ValueError):
        lex_segment_oracle(100, 2, 2)


def test_hf_feasible_max_length():
    # growth 3 -> 6 -> 10 then socle caps degree 4 at 1
    assert hf_feasible_max_length((1, 3), 5) == 1 + 3 + 6 + 10 + 1
    assert hf_feasible_max_length((1, 3, 6), 5) == 21
    assert hf_feasible_max_length((1, 3, 4), 5) == 14
    assert hf_feasible_max_length((1, 2, 2), 5) == 8
    assert hf_feasible_max_length((1, 2, 3), 5) == 11
    assert hf_feasible_max_length((1, 3, 5), 5) == 17


def test_prefix_must_start_with_one():
    with pytest.raises(ValueError):
        hf_feasible_max_length((2, 3), 5)


def test_case_report_eliminations():
    rep = order_case_report(emb=3, e=8, hf2_ambient=6, N=5, d_max=4)
    by_key = {(c.order_d, c.hf2): c for c in rep.entries}
    assert by_key[(2, 4)].status == ELIMINATED
    assert by_key[(2, 4)].max_length == 14
    assert by_key[(2, 4)].threshold == 16
    assert by_key[(3, 6)].status == ELIMINATED
    assert by_key[(3, 6)].max_length == 21
    assert by_key[(3, 6)].threshold == 24
    assert by_key[(4, 6)].status == ELIMINATED
    assert by_key[(2, 5)].status == UNRESOLVED
    assert by_key[(1, 2)].status == UNRESOLVED
    assert "21" in rep.tail_summary and "40" in rep.tail_summary
    assert rep.tail_summary.startswith("all orders d > 4 eliminated")


def test_case_report_large_multiplicity_eliminates_everything():
    rep = order_case_report(emb=3, e=100, hf2_ambient=6, N=5, d_max=4)
    assert all(c.status == ELIMINATED for c in rep.entries)
    assert rep.tail_summary.startswith("all orders")
