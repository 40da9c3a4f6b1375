import json

import pytest

from kronstab.kronecker import reduced_kronecker
from kronstab.littlewood_richardson import one_row
from kronstab.partitions import EMPTY, Partition, pad
from kronstab.stability import (
    ALL_STATEMENTS,
    TauMultiplicityQuery,
    VerificationReport,
    check_k_eq_lr,
    check_kroneckerstab,
    check_lrflip,
    check_prop412,
    check_prop48,
    check_size_vanishing,
    check_triangle,
    coefficient_source,
    induced_multiplicity,
    run_check,
    tau_multiplicity,
)

P = Partition


class TestTauMultiplicity:
    def test_is_a_thin_wrapper(self):
        q = TauMultiplicityQuery(mu=P([2, 1]), i=1, n=9, m=4, lam=P([2]))
        direct = reduced_kronecker(P([2]), one_row(9 - 4), pad(P([2, 1]), 9 - 1))
        assert tau_multiplicity(q) == direct

    def test_query_invariants(self):
        with pytest.raises(ValueError):
            TauMultiplicityQuery(mu=P([2, 1]), i=3, n=7, m=2, lam=EMPTY)  # n-i < |mu|+mu1
        with pytest.raises(ValueError):
            TauMultiplicityQuery(mu=EMPTY, i=0, n=3, m=4, lam=EMPTY)  # m > n
        with pytest.raises(ValueError):
            TauMultiplicityQuery(mu=EMPTY, i=-1, n=3, m=2, lam=EMPTY)

    def test_diagonal_case_is_one(self):
        # |lam| = m - i = |mu| forces the value delta(lam, mu)
        for n in (8, 11):
            q = TauMultiplicityQuery(mu=P([2, 1]), i=1, n=n, m=4, lam=P([2, 1]))
            assert tau_multiplicity(q) == 1
            q = TauMultiplicityQuery(mu=P([2, 1]), i=1, n=n, m=4, lam=P([3]))
            assert tau_multiplicity(q) == 0

    def test_stable_in_n_past_the_bound(self):
        mu, lam, i, m = P([2]), P([1, 1]), 2, 3
        bound = lam.size + mu.size + i
        values = {
            tau_multiplicity(TauMultiplicityQuery(mu=mu, i=i, n=n, m=m, lam=lam))
            for n in range(max(bound, m, i + mu.size + mu.first), 15)
        }
        assert len(values) == 1


class TestInducedMultiplicity:
    def test_is_a_thin_wrapper(self):
        direct = reduced_kronecker(P([2]), one_row(10 - 3), pad(P([1]), 10 - 2))
        assert induced_multiplicity(P([2]), 3, 10, P([1]), 2) == direct

    def test_precondition(self):
        with pytest.raises(ValueError):
            induced_multiplicity(P([2, 1]), 2, 10, P([1]), 0)  # |mu| > m
        with pytest.raises(ValueError):
            induced_multiplicity(P([1]), 4, 3, P([1]), 0)  # m > n

    def test_attainable_bounds(self):
        # i = 2m with |mu| = m: nonzero, so the bound i <= 2m is sharp
        assert induced_multiplicity(P([1]), 1, 9, EMPTY, 2) == 1
        # |lam| = m attained via the diagonal
        assert induced_multiplicity(P([1]), 1, 9, P([1]), 0) == 1

    def test_vanishing_beyond_bounds(self):
        assert induced_multiplicity(P([1]), 1, 9, EMPTY, 3) == 0  # i > m + |mu|
        assert induced_multiplicity(P([1]), 1, 9, P([2]), 0) == 0  # |lam| > |mu|


class TestChecks:
    def test_all_statements_pass_on_small_boxes(self):
        small = {
            "lrflip": dict(max_core=2, max_xi=2),
            "kron-stab": dict(max_lam=2, max_mu=2, max_k=2),
            "triangle": dict(max_size=3),
            "k-eq-lr": dict(max_size=3),
            "formula": dict(max_size=2, max_k=3),
            "size": dict(max_lam=2, max_mu=2, max_k=2, max_n=8),
            "prop48": dict(max_mu=2, max_lam=2, max_i=2, max_n=9),
            "prop412": dict(max_m=2, max_n=8),
            "oracle-equiv": dict(max_size=2),
        }
        assert set(small) == set(ALL_STATEMENTS)
        for name, box in small.items():
            report = run_check(name, **box)
            assert report.passed, report.failures[:3]
            assert report.checked > 0
            assert report.statement == name

    def test_lrflip_core_equals_xi(self):
        # lam = xi instances assert the empty-strip coefficient is 1
        report = check_lrflip(max_core=2, max_xi=2)
        assert report.passed

    def test_reports_are_deterministic(self):
        a = check_triangle(max_size=3)
        b = check_triangle(max_size=3)
        assert (a.statement, a.box, a.checked, a.failures) == (
            b.statement,
            b.box,
            b.checked,
            b.failures,
        )

    def test_parallel_matches_sequential(self):
        seq = check_size_vanishing(max_lam=2, max_mu=2, max_k=2, max_n=8)
        par = check_size_vanishing(max_lam=2, max_mu=2, max_k=2, max_n=8, jobs=2)
        assert (seq.checked, seq.failures) == (par.checked, par.failures)

    def test_report_serialization(self):
        report = check_k_eq_lr(max_size=2)
        blob = json.loads(report.to_json())
        assert blob["statement"] == "k-eq-lr"
        assert blob["box"] == {"max_size": 2}
        assert blob["checked"] == report.checked
        assert blob["failures"] == []
        assert blob["wall_time"] >= 0

    def test_summary_mentions_status(self):
        report = check_kroneckerstab(max_lam=1, max_mu=1, max_k=1)
        assert "pass" in report.summary()

    def test_failures_are_recorded_and_flip_the_status(self):
        report = VerificationReport(
            statement="demo", box={}, checked=1, failures=[("x", 1)], wall_time=0.0
        )
        assert not report.passed

    def test_coefficient_source_injection(self):
        # an injected fault must surface as a counterexample, and the
        # original function must be restored afterwards
        calls = []

        def lying_rkron(lam, mu, nu):
            calls.append((lam, mu, nu))
            return reduced_kronecker(lam, mu, nu) + 1

        with coefficient_source(lying_rkron):
            report = check_triangle(max_size=2)
        assert calls
        assert not report.passed
        assert check_triangle(max_size=2).passed

    def test_prop48_counts_pointwise_and_stability_instances(self):
        report = check_prop48(max_mu=1, max_lam=1, max_i=1, max_n=6)
        assert report.passed
        assert report.checked > 0

    def test_prop412_box_example(self):
        report = check_prop412(max_m=2, max_n=8)
        assert report.passed
