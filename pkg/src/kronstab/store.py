"""Persistent memo store for computed coefficients.

One record per line, pipe-separated, partitions in bracket text form and
scalar operands in decimal, e.g.::

    kron|[2,1]|[2,1]|[2,1]|1
    rkron1row|[1]|[1]|3|0

Records are stored under canonical keys: operands of symmetric kinds are
sorted (by partition size, then parts), so a lookup of kron with arguments
permuted still hits.  Integers are serialized in plain decimal of arbitrary
length, so the format itself can never overflow.

Writes during a session are append-only; closing the store compacts the
file to sorted unique records.  Concurrent in-process readers are safe: a
key is only ever associated with one value (computations are deterministic,
so duplicated work is harmless), but a store file must have a single writer.
"""

from __future__ import annotations

import os
from typing import Callable, IO, Iterable, Iterator, Union

from .characters import character_value
from .errors import InvalidPartition, StoreCorrupt
from .kronecker import (
    kronecker_coeff,
    reduced_kronecker,
    reduced_kronecker_onerow,
)
from .littlewood_richardson import lr_coeff, lr_coeff3
from .partitions import Partition, parse_partition

Operand = Union[Partition, int]

#: operand pattern per kind: P = partition, I = non-negative integer scalar;
#: sort_prefix = how many leading operands are interchangeable.
_KINDS: dict[str, tuple[str, int]] = {
    "character": ("PP", 0),
    "lr": ("PPP", 2),
    "lr3": ("PPPP", 3),
    "kron": ("PPP", 3),
    "rkron": ("PPP", 3),
    "rkron1row": ("PPI", 2),
}

#: records validated one-by-one on import up to this many; above it, a
#: deterministic 1-in-100 sample (plus the first record) is recomputed.
_FULL_VALIDATION_LIMIT = 1000


def compute_coefficient(kind: str, operands: tuple[Operand, ...]) -> int:
    """Recompute a record's value from scratch with the production routines."""
    if kind == "character":
        return character_value(*operands)
    if kind == "lr":
        return lr_coeff(*operands)
    if kind == "lr3":
        return lr_coeff3(*operands)
    if kind == "kron":
        return kronecker_coeff(*operands, cap=None)
    if kind == "rkron":
        return reduced_kronecker(*operands)
    if kind == "rkron1row":
        return reduced_kronecker_onerow(*operands)
    raise StoreCorrupt(f"unknown coefficient kind {kind!r}")


def canonical_operands(kind: str, operands: Iterable[Operand]) -> tuple[Operand, ...]:
    """Validate the operand pattern and sort the interchangeable prefix."""
    if kind not in _KINDS:
        raise StoreCorrupt(f"unknown coefficient kind {kind!r}")
    pattern, sort_prefix = _KINDS[kind]
    ops = tuple(operands)
    if len(ops) != len(pattern):
        raise StoreCorrupt(f"kind {kind!r} takes {len(pattern)} operands, got {len(ops)}")
    for op, code in zip(ops, pattern):
        if code == "P" and not isinstance(op, Partition):
            raise StoreCorrupt(f"kind {kind!r} expects a partition, got {op!r}")
        if code == "I" and (not isinstance(op, int) or isinstance(op, bool) or op < 0):
            raise StoreCorrupt(f"kind {kind!r} expects a non-negative integer, got {op!r}")
    head = tuple(sorted(ops[:sort_prefix], key=Partition.sort_key))
    return head + ops[sort_prefix:]


def format_record(kind: str, operands: tuple[Operand, ...], value: int) -> str:
    return "|".join([kind, *[str(op) for op in operands], str(value)])


def parse_record(line: str) -> tuple[str, tuple[Operand, ...], int]:
    """Parse one store line; raises StoreCorrupt on any malformation."""
    fields = line.rstrip("\n").split("|")
    if len(fields) < 2:
        raise StoreCorrupt(f"record has too few fields: {line!r}")
    kind, *middle, tail = fields
    if kind not in _KINDS:
        raise StoreCorrupt(f"unknown coefficient kind {kind!r} in {line!r}")
    try:
        value = int(tail)
    except ValueError as exc:
        raise StoreCorrupt(f"bad value field {tail!r} in {line!r}") from exc
    operands: list[Operand] = []
    for tok in middle:
        if tok.startswith("["):
            try:
                operands.append(parse_partition(tok))
            except InvalidPartition as exc:
                raise StoreCorrupt(f"bad partition {tok!r} in {line!r}") from exc
        else:
            try:
                scalar = int(tok)
            except ValueError as exc:
                raise StoreCorrupt(f"bad operand {tok!r} in {line!r}") from exc
            if scalar < 0:
                raise StoreCorrupt(f"negative scalar operand in {line!r}")
            operands.append(scalar)
    ops = tuple(operands)
    if canonical_operands(kind, ops) != ops:
        raise StoreCorrupt(f"operands not in canonical order in {line!r}")
    return kind, ops, value


class CoefficientStore:
    """In-memory coefficient cache with optional line-oriented persistence.

    With no path the store is purely in-memory.  With a path, existing
    records are loaded (and a deterministic sample recomputed) on open, new
    records are appended as they are computed, and close() compacts the
    file to sorted unique lines.
    """

    def __init__(
        self,
        path: str | os.PathLike | None = None,
        recompute: Callable[[str, tuple[Operand, ...]], int] | None = compute_coefficient,
        validate_fraction: float = 0.01,
    ):
        self._records: dict[tuple, int] = {}
        self._path = os.fspath(path) if path is not None else None
        self._recompute = recompute
        self._validate_fraction = validate_fraction
        self._append_handle: IO[str] | None = None
        if self._path is not None and os.path.exists(self._path):
            self._load()

    # -- internals ---------------------------------------------------------

    @staticmethod
    def _key(kind: str, operands: tuple[Operand, ...]) -> tuple:
        return (kind, *[op.parts if isinstance(op, Partition) else op for op in operands])

    def _load(self) -> None:
        loaded: dict[tuple, int] = {}
        with open(self._path, encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    kind, ops, value = parse_record(line)
                except StoreCorrupt as exc:
                    raise StoreCorrupt(f"{self._path}:{lineno}: {exc}") from exc
                key = self._key(kind, ops)
                if key in loaded and loaded[key] != value:
                    raise StoreCorrupt(
                        f"{self._path}:{lineno}: conflicting values for {format_record(kind, ops, value)}"
                    )
                loaded[key] = value
        self._records.update(loaded)
        self._validate_sample(sorted(loaded))

    def _validate_sample(self, keys: list[tuple]) -> None:
        # deterministic stand-in for a random sample: evenly spaced over the
        # canonically sorted keys, at least one when any exist
        if self._recompute is None or not keys or not self._validate_fraction:
            return
        step = max(1, round(1 / self._validate_fraction))
        for key in keys[::step]:
            self._check_against_recompute(key)

    def _check_against_recompute(self, key: tuple) -> None:
        kind = key[0]
        ops = tuple(
            Partition(op) if isinstance(op, tuple) else op for op in key[1:]
        )
        expected = self._recompute(kind, ops)
        if self._records[key] != expected:
            raise StoreCorrupt(
                f"stored {format_record(kind, ops, self._records[key])} but recomputed {expected}"
            )

    def _append(self, kind: str, operands: tuple[Operand, ...], value: int) -> None:
        if self._path is None:
            return
        if self._append_handle is None:
            self._append_handle = open(self._path, "a", encoding="ascii")
        self._append_handle.write(format_record(kind, operands, value) + "\n")
        self._append_handle.flush()

    # -- public API --------------------------------------------------------

    def __len__(self) -> int:
        return len(self._records)

    def records(self) -> Iterator[tuple[str, tuple[Operand, ...], int]]:
        """All records, canonically sorted."""
        for key in sorted(self._records):
            kind = key[0]
            ops = tuple(Partition(op) if isinstance(op, tuple) else op for op in key[1:])
            yield kind, ops, self._records[key]

    def get_or_compute(
        self,
        kind: str,
        operands: Iterable[Operand],
        compute: Callable[[], int] | None = None,
    ) -> int:
        """Return the cached value, computing and persisting it on a miss.

        Hits never invoke compute.  With no explicit compute, the default
        recompute dispatcher is used.
        """
        ops = canonical_operands(kind, operands)
        key = self._key(kind, ops)
        if key in self._records:
            return self._records[key]
        if compute is not None:
            value = compute()
        elif self._recompute is not None:
            value = self._recompute(kind, ops)
        else:
            raise StoreCorrupt(f"no way to compute {kind} record")
        self._records[key] = value
        self._append(kind, ops, value)
        return value

    def coefficient(self, kind: str, *operands: Operand) -> int:
        """Convenience wrapper: get_or_compute with the default dispatcher."""
        return self.get_or_compute(kind, operands)

    def export_table(self, destination: str | os.PathLike | IO[str], kind: str | None = None) -> int:
        """Write records (optionally one kind) to destination; returns the count."""
        lines = [
            format_record(k, ops, v)
            for k, ops, v in self.records()
            if kind is None or k == kind
        ]
        payload = "".join(line + "\n" for line in lines)
        if hasattr(destination, "write"):
            destination.write(payload)
        else:
            try:
                with open(destination, "w", encoding="ascii") as fh:
                    fh.write(payload)
            except OSError as exc:
                raise OSError(f"cannot export to {destination}: {exc}") from exc
        return len(lines)

    def import_table(self, source: str | os.PathLike | IO[str]) -> int:
        """Merge records from source; returns how many were read.

        Records conflicting with already-stored values raise StoreCorrupt,
        as do records that disagree with recomputation (all records are
        recomputed for small imports, a deterministic sample otherwise).
        """
        if hasattr(source, "read"):
            lines = source.read().splitlines()
            origin = "<stream>"
        else:
            try:
                with open(source, encoding="ascii") as fh:
                    lines = fh.read().splitlines()
            except OSError as exc:
                raise OSError(f"cannot import from {source}: {exc}") from exc
            origin = os.fspath(source)
        incoming: dict[tuple, int] = {}
        count = 0
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                kind, ops, value = parse_record(line)
            except StoreCorrupt as exc:
                raise StoreCorrupt(f"{origin}:{lineno}: {exc}") from exc
            key = self._key(kind, ops)
            for seen in (incoming, self._records):
                if key in seen and seen[key] != value:
                    raise StoreCorrupt(
                        f"{origin}:{lineno}: conflicting values for {format_record(kind, ops, value)}"
                    )
            incoming[key] = value
            count += 1
        fresh = {k: v for k, v in incoming.items() if k not in self._records}
        self._records.update(fresh)
        if self._recompute is not None:
            keys = sorted(fresh)
            if len(keys) <= _FULL_VALIDATION_LIMIT:
                sample = keys
            else:
                step = max(1, round(1 / self._validate_fraction))
                sample = keys[::step]
            for key in sample:
                try:
                    self._check_against_recompute(key)
                except StoreCorrupt:
                    for stale in fresh:
                        self._records.pop(stale, None)
                    raise
        for key, value in fresh.items():
            kind = key[0]
            ops = tuple(Partition(op) if isinstance(op, tuple) else op for op in key[1:])
            self._append(kind, ops, value)
        return count

    def compact(self) -> None:
        """Rewrite the store file as sorted unique records."""
        if self._path is None:
            return
        if self._append_handle is not None:
            self._append_handle.close()
            self._append_handle = None
        tmp = self._path + ".tmp"
        with open(tmp, "w", encoding="ascii") as fh:
            for kind, ops, value in self.records():
                fh.write(format_record(kind, ops, value) + "\n")
        os.replace(tmp, self._path)

    def close(self) -> None:
        self.compact()

    def __enter__(self) -> "CoefficientStore":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()
