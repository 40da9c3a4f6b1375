"""Integer partitions and the diagram operations everything else is built on.

A partition is stored canonically as a weakly decreasing tuple of positive
integers; the empty partition is the unique partition of 0 and prints as
``[]``.  Parts are ordinary Python integers, so the documented working bound
(parts and sizes below 2**31) is a promise about intended scale, not a
storage limit; arithmetic can never wrap around.

All values are immutable after construction and all functions here are pure,
so they can be shared freely between concurrent sweeps.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidPartition, NotPaddable


class Partition:
    """A weakly decreasing sequence of positive integers.

    The constructor canonicalizes: trailing zeros are stripped, anything
    negative or increasing is rejected.  Indexing past the last row returns
    0, which makes containment and interlacing tests uniform.
    """

    __slots__ = ("_parts", "_size")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InvalidPartition(f"part {x!r} is not an integer")
            if x < 0:
                raise InvalidPartition(f"negative part {x} in {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidPartition(f"parts increase ({a} < {b}) in {parts}")
        self._parts = parts
        self._size = sum(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return self._size

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self._parts[0] if self._parts else 0

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative row index")
        return self._parts[i] if i < len(self._parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Total order used for canonical operand ordering: by size, then parts."""
        return (self._size, self._parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Partition") -> bool:
        return self.sort_key() <= other.sort_key()

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self._parts) + "]"

    def __reduce__(self):
        return (Partition, (self._parts,))


#: Cycle types are partitions of n read as multiset of cycle lengths.
CycleType = Partition

EMPTY = Partition(())


def parse_partition(text: str) -> Partition:
    """Parse the bracket text form, e.g. ``"[3,2,1]"`` or ``"[]"``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise InvalidPartition(f"expected bracketed partition, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return EMPTY
    try:
        parts = [int(tok.strip()) for tok in body.split(",")]
    except ValueError as exc:
        raise InvalidPartition(f"bad partition text {text!r}") from exc
    return Partition(parts)


def pad(core: Partition, total: int) -> Partition:
    """Prepend a first row so the result is a partition of ``total``.

    The result is (total - |core|, core_1, core_2, ...), defined exactly when
    total - |core| >= core_1.
    """
    head = total - core.size
    if head < core.first or head < 0:
        raise NotPaddable(
            f"cannot pad {core} to total {total}: needs at least {core.size + core.first}"
        )
    return Partition((head,) + core.parts)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    cols = [0] * p.first
    for row in p:
        for j in range(row):
            cols[j] += 1
    return Partition(cols)


def _descending_partitions(n: int) -> Iterator[tuple[int, ...]]:
    # Reverse-lexicographic: (n), (n-1,1), ..., (1,)*n.
    if n == 0:
        yield ()
        return
    cur = (n,)
    yield cur
    while True:
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return
        head = cur[:i] + (cur[i] - 1,)
        rest = n - sum(head)
        while rest > 0:
            part = min(head[-1], rest)
            head += (part,)
            rest -= part
        cur = head
        yield cur


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse-lexicographic order, no duplicates."""
    if n < 0:
        raise InvalidPartition(f"cannot partition {n}")
    return tuple(Partition(parts) for parts in _descending_partitions(n))


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size at most n, by size then reverse-lex."""
    out: list[Partition] = []
    for k in range(n + 1):
        out.extend(enumerate_partitions(k))
    return out


@lru_cache(maxsize=None)
def enumerate_padded_index_set(m: int) -> tuple[Partition, ...]:
    """All cores that can be padded to total m: partitions with |p| + p_1 <= m.

    Ordered by size then reverse-lexicographically.
    """
    out = []
    for k in range(m + 1):
        for p in enumerate_partitions(k):
            if p.size + p.first <= m:
                out.append(p)
    return tuple(out)


def contains(outer: Partition, inner: Partition) -> bool:
    """Diagram containment: inner_i <= outer_i for every row."""
    if len(inner) > len(outer):
        return False
    return all(inner.parts[i] <= outer.parts[i] for i in range(len(inner)))


def meet(p: Partition, q: Partition) -> Partition:
    """Rowwise minimum; the largest partition contained in both."""
    return Partition(tuple(min(a, b) for a, b in zip(p.parts, q.parts)))


def horizontal_strip_removals(p: Partition, k: int) -> list[Partition]:
    """All partitions obtained from p by removing k boxes, at most one per column.

    Equivalently all q with |q| = |p| - k interlacing p:
    p_{i+1} <= q_i <= p_i for every row i.  Rows are chosen in ascending
    order, so for ((2,1), 1) the output is [(1,1), (2)].
    """
    target = p.size - k
    if k < 0 or target < 0:
        return []
    rows = p.parts
    nrows = len(rows)
    # suffix_lo[i] / suffix_hi[i]: attainable sum bounds over rows i..end
    suffix_lo = [0] * (nrows + 1)
    suffix_hi = [0] * (nrows + 1)
    for i in range(nrows - 1, -1, -1):
        suffix_lo[i] = suffix_lo[i + 1] + (rows[i + 1] if i + 1 < nrows else 0)
        suffix_hi[i] = suffix_hi[i + 1] + rows[i]

    out: list[Partition] = []

    def fill(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i == nrows:
            if remaining == 0:
                out.append(Partition(prefix))
            return
        lower = rows[i + 1] if i + 1 < nrows else 0
        lo = max(lower, remaining - suffix_hi[i + 1])
        hi = min(rows[i], remaining - suffix_lo[i + 1])
        for v in range(lo, hi + 1):
            fill(i + 1, remaining - v, prefix + (v,))

    fill(0, target, ())
    return out


@lru_cache(maxsize=None)
def subpartitions_of_size(outer: Partition, k: int) -> tuple[Partition, ...]:
    """All partitions of k contained in outer."""
    if k < 0 or k > outer.size:
        return ()
    rows = outer.parts
    out: list[Partition] = []

    def fill(i: int, remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if i == len(rows):
            return
        hi = min(rows[i], cap, remaining)
        for v in range(hi, 0, -1):
            fill(i + 1, remaining - v, v, prefix + (v,))

    fill(0, k, k, ())
    return tuple(out)


def _clear_caches() -> None:
    enumerate_partitions.cache_clear()
    enumerate_padded_index_set.cache_clear()
    subpartitions_of_size.cache_clear()
