import json
from collections import Counter

import kronstab
import kronstab.kronecker
import kronstab.littlewood_richardson
import kronstab.stability
from kronstab.cli import EXIT_COMPUTE, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main
from kronstab.partitions import Partition, enumerate_partitions
from kronstab.stability import ALL_STATEMENTS

P = Partition


class TestCoeffCommands:
    def test_plain_output_is_exactly_the_value(self, capsys):
        assert main(["kron", "[2,1]", "[2,1]", "[2,1]"]) == EXIT_OK
        assert capsys.readouterr().out == "1\n"

    def test_pad(self, capsys):
        assert main(["pad", "[2,1]", "6"]) == EXIT_OK
        assert capsys.readouterr().out == "[3,2,1]\n"

    def test_rkron_triangle_zero(self, capsys):
        assert main(["rkron", "[1]", "[1]", "[3]"]) == EXIT_OK
        assert capsys.readouterr().out == "0\n"

    def test_structured_record(self, capsys):
        assert main(["--format", "structured", "kron", "[2,1]", "[2,1]", "[2,1]"]) == EXIT_OK
        assert capsys.readouterr().out == "kron|[2,1]|[2,1]|[2,1]|1\n"

    def test_structured_pad(self, capsys):
        assert main(["--format", "structured", "pad", "[2,1]", "6"]) == EXIT_OK
        assert capsys.readouterr().out == "pad|[2,1]|6|[3,2,1]\n"

    def test_char_negative_value(self, capsys):
        assert main(["char", "[2,1]", "[3]"]) == EXIT_OK
        assert capsys.readouterr().out == "-1\n"

    def test_every_coefficient_subcommand(self, capsys):
        for argv, expected in [
            (["lr", "[2,1]", "[2,1]", "[3,2,1]"], "2"),
            (["lr3", "[1]", "[1]", "[1]", "[2,1]"], "2"),
            (["rkron1row", "[1]", "[1]", "1"], "1"),
        ]:
            assert main(argv) == EXIT_OK
            assert capsys.readouterr().out == expected + "\n"


class TestExitCodes:
    def test_usage_error_on_bad_partition(self, capsys):
        assert main(["pad", "oops", "5"]) == EXIT_USAGE
        assert "usage: kronstab pad" in capsys.readouterr().err

    def test_usage_error_on_unknown_statement(self):
        assert main(["verify", "nonsense"]) == EXIT_USAGE

    def test_compute_error_on_unpaddable(self, capsys):
        assert main(["pad", "[2,1]", "4"]) == EXIT_COMPUTE
        assert "error:" in capsys.readouterr().err

    def test_compute_error_on_size_mismatch(self):
        assert main(["kron", "[2]", "[1]", "[1]"]) == EXIT_COMPUTE
        assert main(["char", "[2,1]", "[4]"]) == EXIT_COMPUTE

    def test_compute_error_on_degree_cap(self):
        assert main(["kron", "[13]", "[13]", "[13]"]) == EXIT_COMPUTE
        assert main(["--cap", "13", "kron", "[13]", "[13]", "[13]"]) == EXIT_OK

    def test_io_error_on_corrupt_store(self, tmp_path, capsys):
        bad = tmp_path / "store.txt"
        bad.write_text("gibberish\n")
        assert main(["--store", str(bad), "rkron", "[1]", "[1]", "[1]"]) == EXIT_IO
        assert "error:" in capsys.readouterr().err

    def test_io_error_on_unwritable_table(self):
        assert main(["table", "--kind", "lr", "--out", "/nonexistent/x.csv"]) == EXIT_IO


class TestStoreFlag:
    def test_store_persists_and_reuses(self, tmp_path, capsys):
        store = tmp_path / "store.txt"
        assert main(["--store", str(store), "rkron", "[2,1]", "[2,1]", "[2,1]"]) == EXIT_OK
        first = capsys.readouterr().out
        content = store.read_text()
        assert "rkron|[2,1]|[2,1]|[2,1]|" in content
        assert main(["--store", str(store), "rkron", "[2,1]", "[2,1]", "[2,1]"]) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_env_var_selects_store(self, tmp_path, monkeypatch, capsys):
        store = tmp_path / "env-store.txt"
        monkeypatch.setenv("KRONSTAB_STORE", str(store))
        assert main(["lr", "[1]", "[1]", "[2]"]) == EXIT_OK
        capsys.readouterr()
        assert store.exists()
        assert "lr|[1]|[1]|[2]|1" in store.read_text()


class TestTable:
    def test_lr_row_count_matches_composition_count(self, tmp_path):
        out = tmp_path / "lr.csv"
        assert main(["table", "--kind", "lr", "--max-size", "4", "--out", str(out)]) == EXIT_OK
        rows = out.read_text().splitlines()
        expected = sum(
            len(enumerate_partitions(l))
            * len(enumerate_partitions(n - l))
            * len(enumerate_partitions(n))
            for n in range(5)
            for l in range(n + 1)
        )
        assert len(rows) == expected + 1  # header
        assert rows[0] == "lam,mu,nu,value"

    def test_empty_box_is_header_only(self, tmp_path):
        out = tmp_path / "empty.csv"
        assert main(["table", "--kind", "lr", "--max-size", "-1", "--out", str(out)]) == EXIT_OK
        assert out.read_text() == "lam,mu,nu,value\n"

    def test_byte_identical_across_runs(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for dest in (a, b):
            assert main(["table", "--kind", "rkron", "--max-size", "3",
                         "--out", str(dest)]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()

    def test_structured_table_is_importable(self, tmp_path):
        from kronstab.store import CoefficientStore

        out = tmp_path / "char.txt"
        assert main(["table", "--kind", "char", "--max-size", "3", "--out", str(out),
                     "--format", "structured"]) == EXIT_OK
        fresh = CoefficientStore()
        assert fresh.import_table(out) == sum(
            len(enumerate_partitions(n)) ** 2 for n in range(4)
        )

    def test_cap_guards_table_boxes(self):
        assert main(["table", "--kind", "kron", "--max-size", "13"]) == EXIT_COMPUTE


class TestVerify:
    def test_single_statement_pass(self, tmp_path):
        report_path = tmp_path / "r.jsonl"
        assert main(["verify", "triangle", "--max-size", "3",
                     "--report", str(report_path)]) == EXIT_OK
        blob = json.loads(report_path.read_text())
        assert blob["statement"] == "triangle"
        assert blob["failures"] == []
        assert blob["checked"] > 0

    def test_jobs_flag_gives_identical_report(self, tmp_path):
        reports = []
        for jobs in ("1", "2"):
            path = tmp_path / f"r{jobs}.jsonl"
            assert main(["verify", "size", "--max-lam", "2", "--max-mu", "2",
                         "--max-k", "2", "--max-n", "8", "--jobs", jobs,
                         "--report", str(path)]) == EXIT_OK
            blob = json.loads(path.read_text())
            del blob["wall_time"]
            reports.append(blob)
        assert reports[0] == reports[1]

    def test_injected_lr_bug_makes_k_eq_lr_fail(self, tmp_path, monkeypatch):
        real = kronstab.stability.lr_coeff

        def lying_lr(lam, mu, nu):
            value = real(lam, mu, nu)
            if (lam.parts, mu.parts, nu.parts) == ((1,), (1,), (2,)):
                return -value
            return value

        monkeypatch.setattr(kronstab.stability, "lr_coeff", lying_lr)
        report_path = tmp_path / "r.jsonl"
        assert main(["verify", "k-eq-lr", "--max-size", "3",
                     "--report", str(report_path)]) == EXIT_VERIFY_FAILED
        blob = json.loads(report_path.read_text())
        assert ["[1]", "[1]", "[2]", 1, -1] in blob["failures"]

        monkeypatch.undo()
        assert main(["verify", "k-eq-lr", "--max-size", "3",
                     "--report", str(tmp_path / "ok.jsonl")]) == EXIT_OK

    def test_verify_all_covers_every_paper_operation(self, tmp_path, monkeypatch):
        # every operation backed by a stated identity or formula must be
        # exercised at least once by `verify all`
        targets = {
            "pad": [kronstab.stability, kronstab.kronecker],
            "enumerate_padded_index_set": [kronstab.stability],
            "horizontal_strip_removals": [kronstab.stability],
            "pieri_coeff": [kronstab.stability],
            "lr_coeff": [kronstab.stability, kronstab.littlewood_richardson],
            "lr_coeff3": [kronstab.kronecker],
            "kronecker_coeff": [kronstab.kronecker],
            "reduced_kronecker": [kronstab.stability],
            "reduced_kronecker_limit": [kronstab.stability],
            "reduced_kronecker_onerow": [kronstab.stability],
            "tau_multiplicity": [kronstab.stability],
            "induced_multiplicity": [kronstab.stability],
        }
        counts = Counter()

        def instrument(name, original):
            def wrapper(*args, **kwargs):
                counts[name] += 1
                return original(*args, **kwargs)

            return wrapper

        for name, modules in targets.items():
            wrapper = instrument(name, getattr(modules[0], name))
            for module in modules:
                monkeypatch.setattr(module, name, wrapper)

        kronstab.clear_caches()
        report_path = tmp_path / "all.jsonl"
        assert main(["verify", "all", "--report", str(report_path)]) == EXIT_OK
        statements = [
            json.loads(line)["statement"] for line in report_path.read_text().splitlines()
        ]
        assert statements == list(ALL_STATEMENTS)
        missing = [name for name in targets if counts[name] == 0]
        assert not missing, f"verify all never called: {missing}"

    def test_verify_with_store_reuses_records(self, tmp_path):
        store = tmp_path / "store.txt"
        argv = ["--store", str(store), "verify", "kron-stab", "--max-lam", "2",
                "--max-mu", "2", "--max-k", "2", "--report", "/dev/null"]
        assert main(argv) == EXIT_OK
        first = store.read_text()
        assert first.count("rkron|") == len(first.splitlines())
        assert main(argv) == EXIT_OK
        assert store.read_text() == first
