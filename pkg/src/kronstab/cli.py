"""Command-line front end.

Single coefficients, table emission, verification sweeps, and store
management.  Partitions on the command line use the bracket text form
(quote them in most shells): ``kronstab kron [2,1] [2,1] [2,1]``.

Exit codes: 0 success or verification pass, 1 verification failure,
2 usage error, 3 computation error (size mismatch, unpaddable core,
degree cap, unstabilized probe), 4 I/O or store error.

Every command is deterministic; there is no randomized behaviour anywhere.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from typing import IO, Sequence

from . import kronecker, stability
from .characters import character_value
from .errors import (
    DegreeTooLarge,
    InvalidPartition,
    KronstabError,
    NotPaddable,
    NotStabilized,
    SizeMismatch,
    StoreCorrupt,
)
from .kronecker import (
    kronecker_coeff,
    reduced_kronecker,
    reduced_kronecker_onerow,
)
from .littlewood_richardson import lr_coeff, lr_coeff3
from .partitions import Partition, enumerate_partitions, pad, parse_partition
from .stability import ALL_STATEMENTS, run_check
from .store import CoefficientStore, canonical_operands, format_record

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_COMPUTE = 3
EXIT_IO = 4

#: box-override flags accepted per verification statement
_VERIFY_OVERRIDES: dict[str, tuple[str, ...]] = {
    "lrflip": ("max_core", "max_xi"),
    "kron-stab": ("max_lam", "max_mu", "max_k", "margin"),
    "triangle": ("max_size",),
    "k-eq-lr": ("max_size",),
    "formula": ("max_size", "max_k"),
    "size": ("max_lam", "max_mu", "max_k", "max_n"),
    "prop48": ("max_mu", "max_lam", "max_i", "max_n"),
    "prop412": ("max_m", "max_n"),
    "oracle-equiv": ("max_size",),
}


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except InvalidPartition as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronstab",
        description="Exact LR, Kronecker and reduced Kronecker coefficients "
        "with exhaustive stability verification.",
    )
    parser.add_argument(
        "--store",
        default=os.environ.get("KRONSTAB_STORE"),
        help="coefficient store file (default: $KRONSTAB_STORE, else in-memory only)",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=12,
        help="symmetric group degree cap for character-based routes (default 12)",
    )
    parser.add_argument(
        "--format",
        choices=("plain", "structured"),
        default="plain",
        help="plain: bare decimal value; structured: store record line",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def coeff(name: str, operands: Sequence[tuple[str, object]], helptext: str):
        p = sub.add_parser(name, help=helptext)
        for arg, typ in operands:
            p.add_argument(arg, type=typ)
        return p

    coeff("lr", [("lam", _partition_arg), ("mu", _partition_arg), ("nu", _partition_arg)],
          "Littlewood-Richardson coefficient c(lam, mu; nu)")
    coeff("lr3", [("alpha", _partition_arg), ("beta", _partition_arg),
                  ("gamma", _partition_arg), ("nu", _partition_arg)],
          "three-factor LR coefficient c(alpha, beta, gamma; nu)")
    coeff("kron", [("lam", _partition_arg), ("mu", _partition_arg), ("nu", _partition_arg)],
          "Kronecker coefficient of three partitions of the same size")
    coeff("rkron", [("lam", _partition_arg), ("mu", _partition_arg), ("nu", _partition_arg)],
          "reduced Kronecker coefficient of any three partitions")
    coeff("rkron1row", [("lam", _partition_arg), ("mu", _partition_arg), ("k", int)],
          "reduced Kronecker coefficient against a single row (k)")
    coeff("char", [("lam", _partition_arg), ("rho", _partition_arg)],
          "irreducible character value at the class of cycle type rho")
    coeff("pad", [("core", _partition_arg), ("total", int)],
          "prepend a first row: core[total]")

    table = sub.add_parser("table", help="emit a complete coefficient table over a size box")
    table.add_argument("--kind", required=True,
                       choices=("lr", "lr3", "kron", "rkron", "rkron1row", "char"))
    table.add_argument("--max-size", type=int, default=4,
                       help="size bound for the box (default 4)")
    table.add_argument("--max-k", type=int, default=None,
                       help="scalar bound for rkron1row (default: --max-size)")
    table.add_argument("--out", default="-", help="destination file, - for stdout")
    table.add_argument("--format", dest="table_format", choices=("csv", "structured"),
                       default="csv",
                       help="csv: one row per box element; structured: canonical store records")

    verify = sub.add_parser("verify", help="run verification sweeps; exit 0 iff all pass")
    verify.add_argument("statement", choices=(*ALL_STATEMENTS, "all"))
    verify.add_argument("--jobs", type=int, default=1,
                        help="parallel sweep width (default 1; >1 bypasses --store)")
    verify.add_argument("--report", default="-",
                        help="report destination (JSON lines), - for stdout")
    for flag in ("max-size", "max-core", "max-xi", "max-lam", "max-mu",
                 "max-k", "max-i", "max-n", "max-m", "margin"):
        verify.add_argument(f"--{flag}", type=int, default=None)

    return parser


def _open_dest(path: str) -> IO[str]:
    if path == "-":
        return sys.stdout
    return open(path, "w", encoding="ascii", newline="")


# ---------------------------------------------------------------------------
# single-coefficient commands

def _coeff_record(args) -> tuple[str, tuple, int] | None:
    """Evaluate the requested coefficient; returns (kind, operands, value)."""
    store = CoefficientStore(args.store) if args.store else None

    def with_store(kind, operands, compute):
        if store is None:
            return compute()
        return store.get_or_compute(kind, operands, compute)

    try:
        if args.command == "lr":
            ops = (args.lam, args.mu, args.nu)
            return "lr", ops, with_store("lr", ops, lambda: lr_coeff(*ops))
        if args.command == "lr3":
            ops = (args.alpha, args.beta, args.gamma, args.nu)
            return "lr3", ops, with_store("lr3", ops, lambda: lr_coeff3(*ops))
        if args.command == "kron":
            ops = (args.lam, args.mu, args.nu)
            return "kron", ops, with_store(
                "kron", ops, lambda: kronecker_coeff(*ops, cap=args.cap)
            )
        if args.command == "rkron":
            ops = (args.lam, args.mu, args.nu)
            return "rkron", ops, with_store("rkron", ops, lambda: reduced_kronecker(*ops))
        if args.command == "rkron1row":
            if args.k < 0:
                raise SizeMismatch("k must be non-negative")
            ops = (args.lam, args.mu, args.k)
            return "rkron1row", ops, with_store(
                "rkron1row", ops, lambda: reduced_kronecker_onerow(*ops)
            )
        if args.command == "char":
            ops = (args.lam, args.rho)
            return "character", ops, with_store("character", ops, lambda: character_value(*ops))
        return None
    finally:
        if store is not None:
            store.close()


def _cmd_coeff(args) -> int:
    if args.command == "pad":
        result = pad(args.core, args.total)
        if args.format == "structured":
            print(f"pad|{args.core}|{args.total}|{result}")
        else:
            print(str(result))
        return EXIT_OK
    kind, ops, value = _coeff_record(args)
    if args.format == "structured":
        print(format_record(kind, canonical_operands(kind, ops), value))
    else:
        print(value)
    return EXIT_OK


# ---------------------------------------------------------------------------
# tables

def _table_rows(kind: str, max_size: int, max_k: int):
    """Yield (operands, value) over the box, in canonical enumeration order."""
    if kind == "lr":
        for n in range(max_size + 1):
            for nu in enumerate_partitions(n):
                for l in range(n + 1):
                    for lam in enumerate_partitions(l):
                        for mu in enumerate_partitions(n - l):
                            yield (lam, mu, nu), lr_coeff(lam, mu, nu)
    elif kind == "lr3":
        for n in range(max_size + 1):
            for nu in enumerate_partitions(n):
                for a in range(n + 1):
                    for b in range(n - a + 1):
                        for alpha in enumerate_partitions(a):
                            for beta in enumerate_partitions(b):
                                for gamma in enumerate_partitions(n - a - b):
                                    yield (alpha, beta, gamma, nu), lr_coeff3(alpha, beta, gamma, nu)
    elif kind == "kron":
        for n in range(max_size + 1):
            shapes = enumerate_partitions(n)
            for lam in shapes:
                for mu in shapes:
                    for nu in shapes:
                        yield (lam, mu, nu), kronecker_coeff(lam, mu, nu, cap=None)
    elif kind == "rkron":
        from .partitions import partitions_up_to

        ps = partitions_up_to(max_size)
        for lam in ps:
            for mu in ps:
                for nu in ps:
                    yield (lam, mu, nu), reduced_kronecker(lam, mu, nu)
    elif kind == "rkron1row":
        from .partitions import partitions_up_to

        ps = partitions_up_to(max_size)
        for lam in ps:
            for mu in ps:
                for k in range(max_k + 1):
                    yield (lam, mu, k), reduced_kronecker_onerow(lam, mu, k)
    elif kind == "char":
        for n in range(max_size + 1):
            shapes = enumerate_partitions(n)
            for lam in shapes:
                for rho in shapes:
                    yield (lam, rho), character_value(lam, rho)


_TABLE_HEADERS = {
    "lr": ("lam", "mu", "nu", "value"),
    "lr3": ("alpha", "beta", "gamma", "nu", "value"),
    "kron": ("lam", "mu", "nu", "value"),
    "rkron": ("lam", "mu", "nu", "value"),
    "rkron1row": ("lam", "mu", "k", "value"),
    "char": ("lam", "rho", "value"),
}

_TABLE_KIND_NAME = {"char": "character"}


def _cmd_table(args) -> int:
    if args.kind in ("kron", "char") and args.max_size > args.cap:
        raise DegreeTooLarge(f"table box {args.max_size} exceeds the degree cap {args.cap}")
    max_k = args.max_k if args.max_k is not None else args.max_size
    rows = _table_rows(args.kind, args.max_size, max_k)
    dest = _open_dest(args.out)
    try:
        if args.table_format == "csv":
            writer = csv.writer(dest, lineterminator="\n")
            writer.writerow(_TABLE_HEADERS[args.kind])
            for ops, value in rows:
                writer.writerow([*(str(op) for op in ops), value])
        else:
            record_kind = _TABLE_KIND_NAME.get(args.kind, args.kind)
            seen = set()
            lines = []
            for ops, value in rows:
                canon = canonical_operands(record_kind, ops)
                if canon not in seen:
                    seen.add(canon)
                    lines.append(format_record(record_kind, canon, value))
            for line in sorted(lines):
                dest.write(line + "\n")
    finally:
        if dest is not sys.stdout:
            dest.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification

def _store_backed_rkron(store: CoefficientStore):
    def rkron(lam: Partition, mu: Partition, nu: Partition) -> int:
        return store.get_or_compute(
            "rkron", (lam, mu, nu), lambda: kronecker.reduced_kronecker(lam, mu, nu)
        )

    return rkron


def _cmd_verify(args) -> int:
    statements = list(ALL_STATEMENTS) if args.statement == "all" else [args.statement]
    overrides = {
        name: getattr(args, name)
        for name in ("max_size", "max_core", "max_xi", "max_lam", "max_mu",
                     "max_k", "max_i", "max_n", "max_m", "margin")
        if getattr(args, name) is not None
    }
    store = None
    if args.store and args.jobs <= 1:
        store = CoefficientStore(args.store)
    elif args.store:
        print("note: --store is not consulted by parallel sweeps", file=sys.stderr)

    reports = []
    try:
        for name in statements:
            kwargs = {k: v for k, v in overrides.items() if k in _VERIFY_OVERRIDES[name]}
            if store is not None:
                with stability.coefficient_source(_store_backed_rkron(store)):
                    report = run_check(name, jobs=args.jobs, **kwargs)
            else:
                report = run_check(name, jobs=args.jobs, **kwargs)
            reports.append(report)
            print(report.summary(), file=sys.stderr)
    finally:
        if store is not None:
            store.close()

    dest = _open_dest(args.report)
    try:
        for report in reports:
            dest.write(report.to_json() + "\n")
    finally:
        if dest is not sys.stdout:
            dest.close()
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------

def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return int(code)
    try:
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_coeff(args)
    except (SizeMismatch, NotPaddable, DegreeTooLarge, NotStabilized, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (StoreCorrupt, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except KronstabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
