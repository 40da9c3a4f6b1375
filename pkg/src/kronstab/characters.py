"""Exact irreducible characters of symmetric groups.

Character values are computed by the Murnaghan-Nakayama recursion: peel a
border strip of length t (the largest remaining cycle) off the shape, weight
it by (-1)^height, and recurse on the rest.  Border strips of length t are
found on the beta-number (first-column hook) encoding of the shape, where
removing a strip is the move b -> b - t on one beta value, legal exactly when
b - t is non-negative and not already a beta value, with height equal to the
number of beta values jumped over.

Everything is exact integer arithmetic.  Values are cached on the pair
(remaining shape, remaining cycles); the cache only ever maps a key to one
value, so concurrent callers may at worst duplicate work, never disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import DegreeTooLarge, SizeMismatch
from .partitions import CycleType, Partition, enumerate_partitions

#: Default cap on the symmetric group degree for full-table construction.
DEFAULT_DEGREE_CAP = 12


def cycle_multiplicities(rho: CycleType) -> dict[int, int]:
    """Multiplicity m_j of each cycle length j in the cycle type."""
    mult: dict[int, int] = {}
    for c in rho:
        mult[c] = mult.get(c, 0) + 1
    return mult


def centralizer_order(rho: CycleType) -> int:
    """z_rho = prod_j j^{m_j} m_j!, the centralizer order of the class."""
    z = 1
    for j, m in cycle_multiplicities(rho).items():
        z *= j**m * factorial(m)
    return z


def class_size(rho: CycleType) -> int:
    """Number of permutations of cycle type rho: n! / z_rho."""
    return factorial(rho.size) // centralizer_order(rho)


def class_sign(rho: CycleType) -> int:
    """Sign of any permutation with this cycle type: (-1)^(n - #cycles)."""
    return -1 if (rho.size - len(rho)) % 2 else 1


def _strip_removals(shape: tuple[int, ...], t: int) -> list[tuple[tuple[int, ...], int]]:
    """All (shape minus a border strip of length t, sign) pairs."""
    ell = len(shape)
    beta = [shape[i] + ell - 1 - i for i in range(ell)]
    beta_set = set(beta)
    out = []
    for i, b in enumerate(beta):
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for other in beta if nb < other < b)
        new_beta = [x for x in beta if x != b]
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        parts = tuple(new_beta[j] - (ell - 1 - j) for j in range(ell))
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        out.append((parts, -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _chi(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    t = cycles[0]
    rest = cycles[1:]
    total = 0
    for smaller, sign in _strip_removals(shape, t):
        total += sign * _chi(smaller, rest)
    return total


def character_value(lam: Partition, rho: CycleType) -> int:
    """chi^lam evaluated on the class of cycle type rho, exactly."""
    if lam.size != rho.size:
        raise SizeMismatch(f"|{lam}| = {lam.size} but cycle type {rho} has size {rho.size}")
    return _chi(lam.parts, tuple(sorted(rho.parts, reverse=True)))


@dataclass(frozen=True)
class CharacterTable:
    """Complete character table of the symmetric group of degree n."""

    n: int
    shapes: tuple[Partition, ...]
    classes: tuple[CycleType, ...]
    values: dict[tuple[Partition, CycleType], int]
    class_sizes: dict[CycleType, int]

    def value(self, lam: Partition, rho: CycleType) -> int:
        return self.values[(lam, rho)]

    def dimension(self, lam: Partition) -> int:
        """Degree of the irreducible: the character at the identity class."""
        return self.values[(lam, Partition((1,) * self.n))]


def character_table(n: int, cap: int | None = DEFAULT_DEGREE_CAP) -> CharacterTable:
    """Build the full table for degree n.

    Raises DegreeTooLarge above the cap (pass cap=None to lift it); the
    default keeps table size and build time at desk scale.
    """
    if cap is not None and n > cap:
        raise DegreeTooLarge(f"degree {n} exceeds cap {cap}")
    shapes = enumerate_partitions(n)
    classes = enumerate_partitions(n)
    values = {
        (lam, rho): character_value(lam, rho) for lam in shapes for rho in classes
    }
    sizes = {rho: class_size(rho) for rho in classes}
    return CharacterTable(n=n, shapes=shapes, classes=classes, values=values, class_sizes=sizes)


def _clear_caches() -> None:
    _chi.cache_clear()
