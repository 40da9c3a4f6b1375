"""Littlewood-Richardson coefficients by direct tableau enumeration.

c(lam, mu; nu) counts semistandard fillings of the skew shape nu/lam with
content mu whose reverse reading word (rows top to bottom, each read right
to left) is a lattice word.  The enumerator backtracks over cells in reverse
reading order, so the lattice condition and both tableau inequalities are
checked incrementally.

Strip-direction convention used throughout the package: the one-row tensor
factor (k) adds or removes a HORIZONTAL strip, at most one box per column;
pieri_coeff is the closed form of c(lam, (k); nu) under this convention and
every consumer of a one-row coefficient refers back to it.
"""

from __future__ import annotations

from .partitions import EMPTY, Partition, contains, subpartitions_of_size

_lr_cache: dict[tuple, int] = {}
_lr3_cache: dict[tuple, int] = {}


def _count_lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Count LR skew tableaux of shape nu/lam and content mu (uncached)."""
    if lam.size + mu.size != nu.size:
        return 0
    if not contains(nu, lam):
        return 0
    if mu.size == 0:
        return 1

    nrows = len(nu)
    # cells in reverse reading order: row by row, right to left
    cells = [
        (r, c)
        for r in range(nrows)
        for c in range(nu[r] - 1, lam[r] - 1, -1)
    ]
    nvals = len(mu)
    remaining = list(mu.parts)
    placed = [0] * (nvals + 1)
    grid = [[0] * nu[r] for r in range(nrows)]
    total = 0

    def fill(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        hi = nvals
        if c + 1 < nu[r]:
            hi = min(hi, grid[r][c + 1])
        lo = 1
        if r > 0 and c >= lam[r - 1]:
            lo = grid[r - 1][c] + 1
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and placed[v - 1] <= placed[v]:
                continue
            remaining[v - 1] -= 1
            placed[v] += 1
            grid[r][c] = v
            fill(idx + 1)
            grid[r][c] = 0
            placed[v] -= 1
            remaining[v - 1] += 1

    fill(0)
    return total


def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c(lam, mu; nu).

    Returns 0 whenever |lam| + |mu| != |nu| or lam is not contained in nu.
    Memoized with (lam, mu) swapped into canonical order, which the symmetry
    of the coefficient makes safe.
    """
    if lam.sort_key() > mu.sort_key():
        lam, mu = mu, lam
    key = (lam.parts, mu.parts, nu.parts)
    value = _lr_cache.get(key)
    if value is None:
        value = _count_lr_tableaux(lam, mu, nu)
        _lr_cache[key] = value
    return value


def pieri_coeff(lam: Partition, k: int, nu: Partition) -> int:
    """c(lam, (k); nu): 1 if nu/lam is a horizontal strip of size k, else 0."""
    if nu.size != lam.size + k:
        return 0
    for i in range(max(len(nu), len(lam))):
        if nu[i] < lam[i]:
            return 0
        if i > 0 and nu[i] > lam[i - 1]:
            return 0
    return 1


def lr_coeff3(alpha: Partition, beta: Partition, gamma: Partition, nu: Partition) -> int:
    """Three-factor coefficient c(alpha, beta, gamma; nu).

    Computed as sum over xi of c(alpha, xi; nu) * c(beta, gamma; xi) with
    |xi| = |beta| + |gamma|; this is symmetric in alpha, beta, gamma.
    """
    if alpha.size + beta.size + gamma.size != nu.size:
        return 0
    key = (alpha.parts, beta.parts, gamma.parts, nu.parts)
    value = _lr3_cache.get(key)
    if value is not None:
        return value
    total = 0
    for xi in subpartitions_of_size(nu, beta.size + gamma.size):
        outer = lr_coeff(alpha, xi, nu)
        if outer:
            inner = lr_coeff(beta, gamma, xi)
            if inner:
                total += outer * inner
    _lr3_cache[key] = total
    return total


def one_row(k: int) -> Partition:
    """The single-row partition (k); the empty partition for k = 0."""
    return Partition((k,)) if k > 0 else EMPTY


def _clear_caches() -> None:
    _lr_cache.clear()
    _lr3_cache.clear()
