"""Machine-checkable sweeps of the stability and vanishing statements.

Each check sweeps a bounded parameter box exhaustively and returns a
VerificationReport rather than a boolean: when an assertion fails, the
counterexample tuple is recorded so the instance can be replayed.  All the
statements verified here are theorems, so any failure indicates a bug in
the coefficient routines (or a deliberately injected one; the test suite
does exactly that to prove the harness can fail).

Reports are deterministic for a given box: instances are enumerated in
canonical partition order, failures are sorted, and aggregation is
order-insensitive, so a parallel run (jobs > 1) produces the identical
report.  Parallel runs always evaluate with the package's own coefficient
functions; an injected store-backed lookup is honoured only for jobs = 1,
since store files have a single writer.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import NotStabilized
from .kronecker import (
    reduced_kronecker,
    reduced_kronecker_limit,
    reduced_kronecker_onerow,
)
from .littlewood_richardson import lr_coeff, one_row, pieri_coeff
from .partitions import (
    Partition,
    enumerate_padded_index_set,
    horizontal_strip_removals,
    pad,
    partitions_up_to,
)

Failure = tuple
RKron = Callable[[Partition, Partition, Partition], int]

#: Statement names in the order `verify all` runs them.
ALL_STATEMENTS = (
    "lrflip",
    "kron-stab",
    "triangle",
    "k-eq-lr",
    "formula",
    "size",
    "prop48",
    "prop412",
    "oracle-equiv",
)


@dataclass
class VerificationReport:
    """Outcome of one exhaustive sweep.

    failures is empty exactly when the statement held on every instance;
    each failure tuple starts with the swept parameters (partitions in
    bracket text) and ends with the offending values.
    """

    statement: str
    box: dict[str, int]
    checked: int
    failures: list[Failure] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "statement": self.statement,
                "box": self.box,
                "checked": self.checked,
                "failures": [list(f) for f in self.failures],
                "wall_time": round(self.wall_time, 6),
            }
        )

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.statement}: {status}, {self.checked} instances in {self.wall_time:.2f}s"


@dataclass(frozen=True)
class TauMultiplicityQuery:
    """Parameters of one truncation-multiplicity evaluation.

    Asks for the multiplicity of the simple module indexed by lam in the
    degree-m truncation of the degree-n simple indexed by mu[n-i].
    """

    mu: Partition
    i: int
    n: int
    m: int
    lam: Partition

    def __post_init__(self) -> None:
        if self.i < 0 or self.n < 0 or self.m < 0:
            raise ValueError("indices must be non-negative")
        if self.m > self.n:
            raise ValueError(f"target degree m={self.m} exceeds n={self.n}")
        if self.n - self.i < self.mu.size + self.mu.first:
            raise ValueError(
                f"n-i={self.n - self.i} too small to pad {self.mu}"
            )


def tau_multiplicity(q: TauMultiplicityQuery, rkron: RKron | None = None) -> int:
    """Multiplicity of lam in the truncation: a reduced Kronecker coefficient.

    Equals rkron(lam, (n-m), mu[n-i]); the padding is valid by the query
    invariants.
    """
    if rkron is None:
        rkron = reduced_kronecker
    return rkron(q.lam, one_row(q.n - q.m), pad(q.mu, q.n - q.i))


def induced_multiplicity(
    mu: Partition, m: int, n: int, lam: Partition, i: int, rkron: RKron | None = None
) -> int:
    """Multiplicity of lam[n-i] in the module induced from degree m.

    Equals rkron(mu, (n-m), lam[n-i]); requires |mu| <= m <= n and that
    lam can be padded to n-i.
    """
    if not (mu.size <= m <= n):
        raise ValueError(f"need |mu| <= m <= n, got |{mu}|={mu.size}, m={m}, n={n}")
    if rkron is None:
        rkron = reduced_kronecker
    return rkron(mu, one_row(n - m), pad(lam, n - i))


# ---------------------------------------------------------------------------
# sweep driver

def _run_sweep(
    statement: str,
    box: dict[str, int],
    instances: Sequence[tuple],
    evaluate: Callable[[tuple], list[Failure]],
    jobs: int = 1,
) -> VerificationReport:
    start = time.perf_counter()
    failures: list[Failure] = []
    if jobs > 1:
        chunk = max(1, len(instances) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(evaluate, instances, chunksize=chunk):
                failures.extend(result)
    else:
        for inst in instances:
            failures.extend(evaluate(inst))
    failures.sort(key=lambda f: tuple(str(x) for x in f))
    return VerificationReport(
        statement=statement,
        box=dict(box),
        checked=len(instances),
        failures=failures,
        wall_time=time.perf_counter() - start,
    )


@contextmanager
def coefficient_source(rkron: RKron):
    """Temporarily route this module's reduced-Kronecker lookups through rkron.

    This is how the CLI backs sequential sweeps with a persistent store and
    how the test suite injects faults to prove the harness can fail.  It
    rebinds the module-global name, so it affects jobs=1 sweeps only;
    worker processes always import the pristine functions.
    """
    global reduced_kronecker
    previous = reduced_kronecker
    reduced_kronecker = rkron
    try:
        yield
    finally:
        reduced_kronecker = previous


# ---------------------------------------------------------------------------
# one-row flip of Littlewood-Richardson coefficients

def _eval_lrflip(inst: tuple) -> list[Failure]:
    lam_parts, xi_parts, n = inst
    lam, xi = Partition(lam_parts), Partition(xi_parts)
    padded = pad(lam, n)
    lhs = pieri_coeff(xi, n - xi.size, padded)
    rhs = pieri_coeff(lam, xi.size - lam.size, xi) if xi.size >= lam.size else 0
    failures: list[Failure] = []
    # the strip-removal route must agree with the Pieri route
    strips = horizontal_strip_removals(padded, n - xi.size)
    alt = 1 if xi in strips else 0
    if alt != lhs:
        failures.append(("strip", str(lam), str(xi), n, lhs, alt))
    if lhs == 1 and rhs != 1:
        failures.append(("a", str(lam), str(xi), n, lhs, rhs))
    if n >= lam.size + xi.first:
        if rhs == 1 and lhs != 1:
            failures.append(("b", str(lam), str(xi), n, lhs, rhs))
        if lhs != rhs:
            failures.append(("c", str(lam), str(xi), n, lhs, rhs))
    return failures


def check_lrflip(max_core: int = 3, max_xi: int = 4, jobs: int = 1) -> VerificationReport:
    """Adding a padded first row flips a one-row coefficient, stably in n.

    For each core lam, each xi, and each n where lam[n] exists, checks that
    (a) the padded coefficient being 1 forces the flipped one to be 1,
    (b) conversely once n >= |lam| + xi_1, and (c) the two are then equal.
    Also cross-checks the Pieri evaluation against explicit horizontal strip
    removals from lam[n].
    """
    instances = [
        (lam.parts, xi.parts, n)
        for lam in partitions_up_to(max_core)
        for xi in partitions_up_to(max_xi)
        for n in range(max(xi.size, lam.size + lam.first), lam.size + xi.first + 4)
    ]
    box = {"max_core": max_core, "max_xi": max_xi}
    return _run_sweep("lrflip", box, instances, _eval_lrflip, jobs)


# ---------------------------------------------------------------------------
# stability of the padded one-row reduced Kronecker sequence

def _eval_kron_stab(inst: tuple) -> list[Failure]:
    lam_parts, mu_parts, k, margin = inst
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    lo = max(lam.size + mu.size, lam.size + lam.first, k)
    hi = max(lam.size + mu.size + margin, lo + 2)
    values = [reduced_kronecker(pad(lam, n), mu, one_row(n - k)) for n in range(lo, hi + 1)]
    if len(set(values)) > 1:
        return [(str(lam), str(mu), k, lo, ",".join(map(str, values)))]
    return []


def check_kroneckerstab(
    max_lam: int = 3, max_mu: int = 3, max_k: int = 3, margin: int = 3, jobs: int = 1
) -> VerificationReport:
    """The sequence n -> rkron(lam[n], mu, (n-k)) is constant from |lam|+|mu| on.

    Values are compared on the window from the first degree where lam[n]
    exists (never below |lam|+|mu|) up to |lam|+|mu|+margin, always taking
    at least three consecutive degrees.
    """
    instances = [
        (lam.parts, mu.parts, k, margin)
        for lam in partitions_up_to(max_lam)
        for mu in partitions_up_to(max_mu)
        for k in range(max_k + 1)
    ]
    box = {"max_lam": max_lam, "max_mu": max_mu, "max_k": max_k, "margin": margin}
    return _run_sweep("kron-stab", box, instances, _eval_kron_stab, jobs)


# ---------------------------------------------------------------------------
# vanishing when the padded core outweighs the partner

def _eval_size_vanishing(inst: tuple) -> list[Failure]:
    lam_parts, mu_parts, k, n = inst
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    value = reduced_kronecker(pad(lam, n), mu, one_row(n - k))
    if value != 0:
        return [(str(lam), str(mu), k, n, value)]
    return []


def check_size_vanishing(
    max_lam: int = 3, max_mu: int = 3, max_k: int = 3, max_n: int = 14, jobs: int = 1
) -> VerificationReport:
    """rkron(lam[n], mu, (n-k)) = 0 whenever |lam| > |mu|, for every valid n."""
    instances = [
        (lam.parts, mu.parts, k, n)
        for lam in partitions_up_to(max_lam)
        for mu in partitions_up_to(max_mu)
        if lam.size > mu.size
        for k in range(max_k + 1)
        for n in range(max(lam.size + lam.first, k), max_n + 1)
    ]
    box = {"max_lam": max_lam, "max_mu": max_mu, "max_k": max_k, "max_n": max_n}
    return _run_sweep("size", box, instances, _eval_size_vanishing, jobs)


# ---------------------------------------------------------------------------
# vanishing below the triangle bound, and the boundary identity

def _eval_triangle(inst: tuple) -> list[Failure]:
    lam_parts, mu_parts, nu_parts = inst
    lam, mu, nu = Partition(lam_parts), Partition(mu_parts), Partition(nu_parts)
    value = reduced_kronecker(lam, mu, nu)
    if value != 0:
        return [(str(lam), str(mu), str(nu), value)]
    return []


def check_triangle(max_size: int = 5, jobs: int = 1) -> VerificationReport:
    """rkron(lam, mu, nu) = 0 whenever |lam| + |mu| < |nu|."""
    ps = partitions_up_to(max_size)
    instances = [
        (lam.parts, mu.parts, nu.parts)
        for lam in ps
        for mu in ps
        for nu in ps
        if lam.size + mu.size < nu.size
    ]
    box = {"max_size": max_size}
    return _run_sweep("triangle", box, instances, _eval_triangle, jobs)


def _eval_k_eq_lr(inst: tuple) -> list[Failure]:
    lam_parts, mu_parts, nu_parts = inst
    lam, mu, nu = Partition(lam_parts), Partition(mu_parts), Partition(nu_parts)
    left = reduced_kronecker(lam, mu, nu)
    right = lr_coeff(lam, mu, nu)
    if left != right:
        return [(str(lam), str(mu), str(nu), left, right)]
    return []


def check_k_eq_lr(max_size: int = 5, jobs: int = 1) -> VerificationReport:
    """rkron(lam, mu, nu) equals the LR coefficient when |lam| + |mu| = |nu|."""
    ps = partitions_up_to(max_size)
    instances = [
        (lam.parts, mu.parts, nu.parts)
        for lam in ps
        for mu in ps
        for nu in ps
        if lam.size + mu.size == nu.size
    ]
    box = {"max_size": max_size}
    return _run_sweep("k-eq-lr", box, instances, _eval_k_eq_lr, jobs)


# ---------------------------------------------------------------------------
# closed one-row formula against the general expansion

def _eval_formula(inst: tuple) -> list[Failure]:
    lam_parts, mu_parts, k = inst
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    direct = reduced_kronecker_onerow(lam, mu, k)
    general = reduced_kronecker(lam, mu, one_row(k))
    if direct != general:
        return [(str(lam), str(mu), k, direct, general)]
    return []


def check_formula(max_size: int = 4, max_k: int = 6, jobs: int = 1) -> VerificationReport:
    """The closed one-row sum matches rkron(lam, mu, (k)) on the whole box."""
    ps = partitions_up_to(max_size)
    instances = [
        (lam.parts, mu.parts, k) for lam in ps for mu in ps for k in range(max_k + 1)
    ]
    box = {"max_size": max_size, "max_k": max_k}
    return _run_sweep("formula", box, instances, _eval_formula, jobs)


# ---------------------------------------------------------------------------
# truncation multiplicities (prop48 box)

def _eval_prop48_point(inst: tuple) -> list[Failure]:
    mu_parts, lam_parts, i, n, m = inst
    mu, lam = Partition(mu_parts), Partition(lam_parts)
    q = TauMultiplicityQuery(mu=mu, i=i, n=n, m=m, lam=lam)
    value = tau_multiplicity(q)
    failures: list[Failure] = []
    if lam.size < m - i and value != 0:
        failures.append(("a", str(mu), str(lam), i, n, m, value))
    if lam.size == m - i < mu.size and value != 0:
        failures.append(("b", str(mu), str(lam), i, n, m, value))
    if lam.size == m - i == mu.size and value != (1 if lam == mu else 0):
        failures.append(("c", str(mu), str(lam), i, n, m, value))
    return failures


def _eval_prop48_stable(inst: tuple) -> list[Failure]:
    mu_parts, lam_parts, i, m, max_n = inst
    mu, lam = Partition(mu_parts), Partition(lam_parts)
    lo = max(lam.size + mu.size + i, m, i + mu.size + mu.first)
    values = [
        tau_multiplicity(TauMultiplicityQuery(mu=mu, i=i, n=n, m=m, lam=lam))
        for n in range(lo, max_n + 1)
    ]
    if len(set(values)) > 1:
        return [("d", str(mu), str(lam), i, m, lo, ",".join(map(str, values)))]
    return []


def check_prop48(
    max_mu: int = 3, max_lam: int = 3, max_i: int = 3, max_n: int = 14, jobs: int = 1
) -> VerificationReport:
    """Truncation multiplicities: vanishing, the diagonal, and n-independence.

    Sweeps every valid query with |mu| <= max_mu, |lam| <= max_lam,
    i <= max_i, n <= max_n and max(|mu|, |lam|) <= m <= n, asserting the
    pointwise clauses (a)-(c); separately asserts (d), that the value is
    constant in n from |lam|+|mu|+i on, comparing every valid degree up to
    max_n (a window of three or more degrees everywhere the box allows).
    """
    point_instances = [
        (mu.parts, lam.parts, i, n, m)
        for mu in partitions_up_to(max_mu)
        for lam in partitions_up_to(max_lam)
        for i in range(max_i + 1)
        for n in range(mu.size + mu.first + i, max_n + 1)
        for m in range(max(mu.size, lam.size), n + 1)
    ]
    stable_instances = [
        (mu.parts, lam.parts, i, m, max_n)
        for mu in partitions_up_to(max_mu)
        for lam in partitions_up_to(max_lam)
        for i in range(max_i + 1)
        for m in range(max(mu.size, lam.size), max_n + 1)
        if max(lam.size + mu.size + i, m, i + mu.size + mu.first) + 1 <= max_n
    ]
    box = {"max_mu": max_mu, "max_lam": max_lam, "max_i": max_i, "max_n": max_n}
    start = time.perf_counter()
    report_a = _run_sweep("prop48", box, point_instances, _eval_prop48_point, jobs)
    report_d = _run_sweep("prop48", box, stable_instances, _eval_prop48_stable, jobs)
    failures = sorted(
        report_a.failures + report_d.failures, key=lambda f: tuple(str(x) for x in f)
    )
    return VerificationReport(
        statement="prop48",
        box=box,
        checked=report_a.checked + report_d.checked,
        failures=failures,
        wall_time=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# constituent bounds for the induced modules (prop412 box)

def _eval_prop412(inst: tuple) -> list[Failure]:
    mu_parts, m, n, lam_parts, i = inst
    mu, lam = Partition(mu_parts), Partition(lam_parts)
    value = induced_multiplicity(mu, m, n, lam, i)
    if value != 0:
        return [(str(mu), m, n, str(lam), i, value)]
    return []


def check_prop412(max_m: int = 3, max_n: int = 12, jobs: int = 1) -> VerificationReport:
    """Constituents of the induced module satisfy i <= 2m and |lam| <= m.

    Sweeps all m <= max_m, n <= max_n, all mu with |mu| <= m and all (lam, i)
    with lam[n-i] defined, and asserts the multiplicity vanishes whenever
    i > 2m or |lam| > m.
    """
    instances = [
        (mu.parts, m, n, lam.parts, i)
        for m in range(max_m + 1)
        for n in range(m, max_n + 1)
        for mu in partitions_up_to(m)
        for i in range(n + 1)
        for lam in enumerate_padded_index_set(n - i)
        if i > 2 * m or lam.size > m
    ]
    box = {"max_m": max_m, "max_n": max_n}
    return _run_sweep("prop412", box, instances, _eval_prop412, jobs)


# ---------------------------------------------------------------------------
# expansion route against the stable-limit route

def _eval_oracle_equiv(inst: tuple) -> list[Failure]:
    lam_parts, mu_parts, nu_parts = inst
    lam, mu, nu = Partition(lam_parts), Partition(mu_parts), Partition(nu_parts)
    expansion = reduced_kronecker(lam, mu, nu)
    try:
        limit = reduced_kronecker_limit(lam, mu, nu, cap=None)
    except NotStabilized as exc:
        return [(str(lam), str(mu), str(nu), expansion, f"NotStabilized: {exc}")]
    if expansion != limit:
        return [(str(lam), str(mu), str(nu), expansion, limit)]
    return []


def check_oracle_equiv(max_size: int = 3, jobs: int = 1) -> VerificationReport:
    """The LR expansion equals the stable limit on every triple in the box."""
    ps = partitions_up_to(max_size)
    instances = [
        (lam.parts, mu.parts, nu.parts) for lam in ps for mu in ps for nu in ps
    ]
    box = {"max_size": max_size}
    return _run_sweep("oracle-equiv", box, instances, _eval_oracle_equiv, jobs)


# ---------------------------------------------------------------------------

_CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "lrflip": check_lrflip,
    "kron-stab": check_kroneckerstab,
    "triangle": check_triangle,
    "k-eq-lr": check_k_eq_lr,
    "formula": check_formula,
    "size": check_size_vanishing,
    "prop48": check_prop48,
    "prop412": check_prop412,
    "oracle-equiv": check_oracle_equiv,
}


def run_check(statement: str, jobs: int = 1, **box_overrides: int) -> VerificationReport:
    """Run one named check with optional box overrides."""
    fn = _CHECKS[statement]
    return fn(jobs=jobs, **box_overrides)


def run_all_checks(jobs: int = 1) -> list[VerificationReport]:
    """Run every check on its default box, in canonical order."""
    return [run_check(name, jobs=jobs) for name in ALL_STATEMENTS]
