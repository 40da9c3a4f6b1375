"""Kronecker and reduced Kronecker coefficients.

Three routes are implemented:

* kronecker_coeff - the normalized triple character sum over conjugacy
  classes.  Exact; integrality of the sum is asserted, never assumed.
* reduced_kronecker_limit - the stable limit, probed by evaluating the
  padded coefficient at two consecutive degrees past a heuristic onset.
  This route needs full character tables at the padded degree, so it is
  the expensive one; it serves as an independent oracle.
* reduced_kronecker - the production route: a six-fold sum of products of
  three-factor Littlewood-Richardson coefficients against one small
  Kronecker coefficient.  Degree bookkeeping collapses the six sizes to a
  single free parameter, and diagram containment prunes the rest, so only
  coefficients of degree at most min(|lam|, |mu|, |nu|) are ever needed.

The reduced coefficient is symmetric in its three arguments, so cached
values are stored under the sorted argument triple (as is kronecker_coeff).
All functions are pure given their caches; cached keys never map to two
different values, so concurrent sweeps stay consistent regardless of order.
"""

from __future__ import annotations

from math import factorial

from .characters import DEFAULT_DEGREE_CAP, _chi, class_size
from .errors import DegreeTooLarge, NotStabilized, SizeMismatch
from .littlewood_richardson import lr_coeff3, one_row
from .partitions import (
    Partition,
    enumerate_partitions,
    meet,
    pad,
    subpartitions_of_size,
)

_kron_cache: dict[tuple, int] = {}
_rkron_cache: dict[tuple, int] = {}
_rkron1row_cache: dict[tuple, int] = {}


def _kronecker_sum(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The raw class sum sum_rho |C_rho| chi^lam chi^mu chi^nu, divided by n!."""
    n = lam.size
    total = 0
    for rho in enumerate_partitions(n):
        cycles = rho.parts
        total += (
            class_size(rho)
            * _chi(lam.parts, cycles)
            * _chi(mu.parts, cycles)
            * _chi(nu.parts, cycles)
        )
    quotient, remainder = divmod(total, factorial(n))
    if remainder:
        raise ArithmeticError(
            f"character sum {total} for ({lam},{mu},{nu}) is not divisible by {n}!"
        )
    if quotient < 0:
        raise ArithmeticError(f"negative Kronecker coefficient for ({lam},{mu},{nu})")
    return quotient


def kronecker_coeff(
    lam: Partition, mu: Partition, nu: Partition, cap: int | None = DEFAULT_DEGREE_CAP
) -> int:
    """Multiplicity of the nu-irreducible in the tensor product for lam and mu.

    All three partitions must have the same size n; raises DegreeTooLarge
    when n exceeds the cap (cap=None lifts it).
    """
    n = lam.size
    if mu.size != n or nu.size != n:
        raise SizeMismatch(f"sizes differ: |{lam}|={lam.size}, |{mu}|={mu.size}, |{nu}|={nu.size}")
    if cap is not None and n > cap:
        raise DegreeTooLarge(f"degree {n} exceeds cap {cap}")
    a, b, c = sorted((lam, mu, nu), key=Partition.sort_key)
    key = (a.parts, b.parts, c.parts)
    value = _kron_cache.get(key)
    if value is None:
        value = _kronecker_sum(a, b, c)
        _kron_cache[key] = value
    return value


def default_probe_degree(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Heuristic onset for the stable limit: total size plus the widest row.

    No general onset bound is assumed; the probe is validated by comparing
    two consecutive degrees and refusing to answer on disagreement.
    """
    return lam.size + mu.size + nu.size + max(lam.first, mu.first, nu.first, 1)


def reduced_kronecker_limit(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    n0: int | None = None,
    cap: int | None = DEFAULT_DEGREE_CAP,
) -> int:
    """Stable limit of the padded Kronecker coefficients, by direct probing.

    Evaluates the coefficient of (lam[n], mu[n], nu[n]) at n = n0 and
    n0 + 1 and returns the common value.  Raises NotStabilized if the two
    probes disagree (callers may retry with a larger n0) and DegreeTooLarge
    if a probe degree exceeds the cap.
    """
    if n0 is None:
        n0 = default_probe_degree(lam, mu, nu)
    floor = max(lam.size + lam.first, mu.size + mu.first, nu.size + nu.first)
    n0 = max(n0, floor)
    if cap is not None and n0 + 1 > cap:
        raise DegreeTooLarge(f"probe degree {n0 + 1} exceeds cap {cap}")
    probes = [
        kronecker_coeff(pad(lam, n), pad(mu, n), pad(nu, n), cap=cap) for n in (n0, n0 + 1)
    ]
    if probes[0] != probes[1]:
        raise NotStabilized(
            f"padded coefficients at degrees {n0} and {n0 + 1} differ "
            f"({probes[0]} != {probes[1]}) for ({lam},{mu},{nu})"
        )
    return probes[0]


def _bdvo_sum(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Uncached six-partition sum for the reduced coefficient.

    For each size p of the inner triple, the three remaining sizes are
    forced: a = (|lam|+|mu|-|nu|-p)/2 and cyclic variants.  Each auxiliary
    partition is drawn from the subpartitions of the meet of the two outer
    partitions it links, and every vanishing factor short-circuits.
    """
    sl, sm, sn = lam.size, mu.size, nu.size
    parity = (sl + sm + sn) % 2
    total = 0
    for p in range(min(sl, sm, sn) + 1):
        if p % 2 != parity:
            continue
        a2 = sl + sm - sn - p
        b2 = sl + sn - sm - p
        c2 = sm + sn - sl - p
        if a2 < 0 or b2 < 0 or c2 < 0:
            continue
        a, b, c = a2 // 2, b2 // 2, c2 // 2
        for alpha in subpartitions_of_size(meet(lam, mu), a):
            for beta in subpartitions_of_size(meet(lam, nu), b):
                for pi in subpartitions_of_size(lam, p):
                    left = lr_coeff3(alpha, beta, pi, lam)
                    if not left:
                        continue
                    for gamma in subpartitions_of_size(meet(mu, nu), c):
                        for rho in subpartitions_of_size(mu, p):
                            middle = lr_coeff3(alpha, gamma, rho, mu)
                            if not middle:
                                continue
                            for sigma in subpartitions_of_size(nu, p):
                                right = lr_coeff3(beta, gamma, sigma, nu)
                                if not right:
                                    continue
                                g = kronecker_coeff(pi, rho, sigma, cap=None)
                                if g:
                                    total += left * middle * right * g
    return total


def reduced_kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Reduced Kronecker coefficient of the triple, by the LR expansion.

    Agrees with reduced_kronecker_limit everywhere the latter is defined.
    Defined for all triples, with no degree restriction: the inner Kronecker
    coefficients never exceed degree min(|lam|, |mu|, |nu|).
    """
    a, b, c = sorted((lam, mu, nu), key=Partition.sort_key)
    key = (a.parts, b.parts, c.parts)
    value = _rkron_cache.get(key)
    if value is None:
        value = _bdvo_sum(a, b, c)
        _rkron_cache[key] = value
    return value


def reduced_kronecker_onerow(lam: Partition, mu: Partition, k: int) -> int:
    """Reduced Kronecker coefficient against a single row (k).

    Closed form: sum of c(pi, alpha, (k1); lam) * c(pi, alpha, (k2); mu)
    over k1 + k2 + |pi| = k.  Degree bookkeeping forces k1 - k2 to equal
    |lam| - |mu| and |alpha| = |lam| - |pi| - k1, so only k1 is free.
    Equals reduced_kronecker(lam, mu, (k)) everywhere.
    """
    if lam.sort_key() > mu.sort_key():
        lam, mu = mu, lam
    key = (lam.parts, mu.parts, k)
    value = _rkron1row_cache.get(key)
    if value is not None:
        return value
    sl, sm = lam.size, mu.size
    both = meet(lam, mu)
    total = 0
    for k1 in range(k + 1):
        k2 = k1 - sl + sm
        if k2 < 0:
            continue
        p = k - k1 - k2
        if p < 0:
            continue
        asize = sl - p - k1
        if asize < 0:
            continue
        for pi in subpartitions_of_size(both, p):
            for alpha in subpartitions_of_size(both, asize):
                left = lr_coeff3(pi, alpha, one_row(k1), lam)
                if left:
                    right = lr_coeff3(pi, alpha, one_row(k2), mu)
                    if right:
                        total += left * right
    _rkron1row_cache[key] = total
    return total


def _clear_caches() -> None:
    _kron_cache.clear()
    _rkron_cache.clear()
    _rkron1row_cache.clear()
