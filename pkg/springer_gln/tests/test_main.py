"""Tests for the command-line entry point."""

import importlib
import inspect
import json
import sys

import pytest

from springer_gln.core.exceptions import VerificationError
from springer_gln.restriction.branching import BranchingReport


def results(out):
    data = json.loads(out)
    return data["results"]


class TestListings:
    """Tests for orbits, pairs, cuspidal, series and table."""

    def test_orbits_json(self, run_cli):
        """Test seven orbits for N = 4."""
        code, out, _ = run_cli("orbits", "--n", "4", "--format", "json")
        assert code == 0
        rows = results(out)
        assert [row["orbit"] for row in rows][:2] == ["[4]+", "[4]-"]
        assert len(rows) == 7

    def test_pairs_text(self, run_cli):
        """Test text listing of Psi_3."""
        code, out, _ = run_cli("pairs", "--n", "3")
        assert code == 0
        assert "[2,1];-+" in out
        assert out.endswith("\n")

    def test_pairs_json_has_labels(self, run_cli):
        """Test that JSON rows carry the structured label."""
        _, out, _ = run_cli("pairs", "--n", "1", "--format", "json")
        assert results(out) == [{"pair": "[1];+", "lambda": [1], "split": None, "tau": [1], "cuspidal": True}]

    def test_cuspidal(self, run_cli):
        """Test fourteen cuspidal pairs for N = 6."""
        code, out, _ = run_cli("cuspidal", "--n", "6", "--format", "json")
        assert code == 0
        assert len(results(out)) == 14

    def test_series(self, run_cli):
        """Test series of N = 3 with their member counts p(a)."""
        _, out, _ = run_cli("series", "--n", "3", "--format", "json")
        rows = results(out)
        assert rows[0] == {
            "series": "N0=1 nu=[1] sigma=+",
            "datum": {"N0": 1, "nu": {"lambda": [1], "split": None}, "sigma": [1]},
            "N0": 1,
            "a": 1,
            "members": 1,
            "pairs": "[3];+",
        }
        assert len(rows) == 4
        assert all(len(row["pairs"].split()) == row["members"] for row in rows)

    def test_table_csv(self, run_cli):
        """Test header plus one row per pair of Psi_5."""
        code, out, _ = run_cli("table", "--n", "5", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "pair,series,mu"
        assert len(lines) == 13

    def test_missing_n(self, run_cli):
        """Test that argparse rejects a listing without --n."""
        with pytest.raises(SystemExit) as excinfo:
            run_cli("orbits")
        assert excinfo.value.code == 2

    def test_closure(self, run_cli):
        """Test the closure table for N = 4 through the subregular orbit."""
        code, out, _ = run_cli("orbits", "--n", "4", "--closure", "--format", "json")
        assert code == 0
        rows = {(row["big"], row["small"]): row for row in results(out)}
        assert len(rows) == 49
        assert rows["[4]+", "[4]-"]["closure"] is False
        assert rows["[4]+", "[2,2]-"]["closure"] is True
        assert rows["[3,1]", "[2,2]+"]["closure"] is True
        assert rows["[2,2]+", "[1,1,1,1]"]["closure"] == "unknown"
        assert rows["[2,2]+", "[3,1]"]["dominated"] is False


class TestLookups:
    """Tests for support and correspond."""

    def test_support(self, run_cli):
        """Test support of [4,2,1];--+ in text form."""
        code, out, _ = run_cli("support", "--label", "[4,2,1];--+", "--all-orders")
        assert code == 0
        assert "N0=5 nu=[2,2,1] sigma=-+" in out
        assert "orders_agree" in out

    def test_support_json(self, run_cli):
        """Test JSON mapping of the support."""
        _, out, _ = run_cli("support", "--label", "[5];+", "--format", "json")
        data = results(out)
        assert data["series"] == "N0=1 nu=[1] sigma=+"
        assert data["mu"] == "[2]"
        assert data["round_trip"] is True

    def test_bad_label(self, run_cli):
        """Test that syntax errors print the grammar and exit with 2."""
        code, out, err = run_cli("support", "--label", "[4,2,1]x;+")
        assert code == 2
        assert out == ""
        assert "column 7" in err
        assert "Label grammar" in err

    @pytest.mark.parametrize("text,column", [("[\u00b2];+", 1), ("[01];+", 1), (" [4,2,1]x;+", 8)])
    def test_bad_digits(self, run_cli, text, column):
        """Test that non-ASCII digits and leading zeros are grammar errors."""
        code, out, err = run_cli("support", "--label", text)
        assert code == 2
        assert out == ""
        assert f"column {column}" in err
        assert "Label grammar" in err

    def test_json_label(self, run_cli):
        """Test that --label accepts the JSON form of a pair."""
        label = '{"lambda": [4, 2, 1], "split": null, "tau": [-1, -1, 1]}'
        code, out, _ = run_cli("support", "--label", label, "--format", "json")
        assert code == 0
        assert results(out)["pair"] == "[4,2,1];--+"

    def test_malformed_json_label(self, run_cli):
        """Test that broken JSON is reported with its column."""
        code, _, err = run_cli("support", "--label", '{"lambda": [4,')
        assert code == 2
        assert "Label grammar" in err

    def test_correspond(self, run_cli):
        """Test the principal series at mu = (2)."""
        code, out, _ = run_cli(
            "correspond", "--series", "N0=1 nu=[1] sigma=+", "--mu", "[2]", "--format", "json"
        )
        assert code == 0
        data = results(out)
        assert data["N"] == 5
        assert data["pair"] == "[5];+"
        assert data["unit_rep_pair"] == "[5];+"
        assert data["sign_rep_pair"] == "[3,2];++"


class TestRestrict:
    """Tests for the restrict command."""

    def test_details(self, run_cli):
        """Test (5) -> (3) through A'_1."""
        code, out, _ = run_cli("restrict", "--label", "[5];+", "--target", "[3];+", "--format", "json")
        assert code == 0
        data = results(out)
        assert data["procedures"] == ["A'_1"]
        assert data["A'_1.s"] == 0
        assert data["A'_1.full"] is True
        assert data["multiplicity"] == 1

    def test_targets(self, run_cli):
        """Test targets and the Springer fibre criterion."""
        _, out, _ = run_cli("restrict", "--label", "[3,2];++", "--format", "json")
        data = results(out)
        assert data["springer_fiber_half_dimensional"] is True
        assert data["springer_fiber_by_induction_agrees"] is True
        assert data["moves"] == ["A''_1 -> [2,1]", "A'_2 -> [3]"]
        assert data["dim_mu"] == 1
        assert data["restriction_row_sum"] == 1

    def test_json_target(self, run_cli):
        """Test that --target accepts the JSON form of a pair."""
        target = '{"lambda": [3], "split": null, "tau": [1]}'
        code, out, _ = run_cli("restrict", "--label", "[5];+", "--target", target, "--format", "json")
        assert code == 0
        assert results(out)["target"] == "[3];+"

    def test_usage(self, run_cli):
        """Test that neither --label nor --sweep is a usage error."""
        code, _, err = run_cli("restrict")
        assert code == 2
        assert "error:" in err
        assert "Label grammar" in err

    def test_sweep_failure(self, run_cli, mocker):
        """Test that a failing sweep exits with 1."""
        mocker.patch("springer_gln.main.branching_sweep", return_value=BranchingReport(4, 2, ["N=4"]))
        code, out, _ = run_cli("restrict", "--sweep", "--max-n", "4", "--format", "json")
        assert code == 1
        assert results(out)["failures"] == ["N=4"]

    def test_sweep(self, run_cli):
        """Test that a small sweep passes."""
        code, _, _ = run_cli("restrict", "--sweep", "--max-n", "5")
        assert code == 0


class TestNumericCommands:
    """Tests for dims and count."""

    def test_dims(self, run_cli):
        """Test that s = 1/2 for (3,2) over the Levi orbit (2,1)."""
        code, out, _ = run_cli(
            "dims", "--n", "5", "--n0", "3", "--orbit", "[3,2]", "--levi-orbit", "[2,1]", "--format", "json"
        )
        assert code == 0
        data = results(out)
        assert data["a"] == 1
        assert data["s"] == "1/2"

    def test_dims_orbit_needs_levi(self, run_cli):
        """Test that --orbit alone is a usage error."""
        code, _, _ = run_cli("dims", "--n", "5", "--n0", "3", "--orbit", "[3,2]")
        assert code == 2

    def test_dims_sweep(self, run_cli, config_file):
        """Test that the sweep honours settings from a config file."""
        path = config_file({"random_permutations": 200, "max_permutation_n": 5, "sweep_max_n": 5})
        code, out, _ = run_cli("--config", path, "dims", "--sweep", "--format", "json")
        assert code == 0
        data = results(out)
        assert data["bound_samples"] == 200
        assert data["bound_boundary_cases"] == 68
        assert data["open_orbit_failures"] == []

    def test_dims_sweep_options(self, run_cli, config_file):
        """Test that --samples and --seed override the settings file."""
        path = config_file({"random_permutations": 200, "max_permutation_n": 4})
        code, out, _ = run_cli("--config", path, "dims", "--sweep", "--max-n", "4", "--samples", "30", "--seed", "3")
        assert code == 0
        assert "bound_samples" in out
        _, out, _ = run_cli(
            "--config", path, "dims", "--sweep", "--max-n", "4", "--samples", "30", "--format", "json"
        )
        assert results(out)["bound_samples"] == 30
        assert results(out)["max_n"] == 4

    def test_count(self, run_cli):
        """Test that closed form and enumeration agree up to N = 7."""
        code, out, _ = run_cli("count", "--max-n", "7", "--format", "json")
        assert code == 0
        rows = results(out)
        assert [row["cuspidal"] for row in rows] == [2, 1, 3, 3, 6, 7, 14, 16]
        assert rows[0]["split_identities"] is None


class TestVerification:
    """Tests for verify-appendix and oracle-check."""

    def test_verify_appendix(self, run_cli):
        """Test that all golden tables match."""
        code, out, _ = run_cli("verify-appendix", "--round-trips", "5")
        assert code == 0
        assert out.splitlines()[0] == "6/6 tables match"
        assert "round trips up to N=5: 0 failures" in out

    def test_verify_appendix_csv(self, run_cli):
        """Test one CSV row per golden table."""
        _, out, _ = run_cli("verify-appendix", "--format", "csv")
        assert out.splitlines()[0] == "N,ok,expected_rows,computed_rows"
        assert out.splitlines()[1] == "2,yes,5,5"

    def test_verification_error(self, run_cli, mocker):
        """Test that VerificationError exits with 1."""
        mocker.patch("springer_gln.main.correspondence_table", side_effect=VerificationError("not a bijection"))
        code, _, err = run_cli("table", "--n", "4")
        assert code == 1
        assert "verification failed" in err

    def test_oracle_check(self, run_cli):
        """Test small oracle run in text form."""
        code, out, _ = run_cli("oracle-check", "--max-n", "3", "--trials", "2")
        assert code == 0
        assert "7/7 orbits pass" in out
        assert "regular N=2" in out


class TestGlobalOptions:
    """Tests for configuration and logging options."""

    def test_no_command(self, run_cli):
        """Test that help goes to stderr and the exit code is 2."""
        code, out, err = run_cli()
        assert code == 2
        assert out == ""
        assert "springer-gln" in err

    def test_bad_config(self, run_cli, config_file):
        """Test that unknown settings keys exit with 2."""
        code, _, err = run_cli("--config", config_file({"colour": 1}), "orbits", "--n", "2")
        assert code == 2
        assert "unknown configuration keys" in err

    def test_log_file(self, run_cli, tmp_path):
        """Test that --log-file creates missing directories."""
        path = tmp_path / "logs" / "run.log"
        code, _, _ = run_cli("--log-file", str(path), "--verbose", "orbits", "--n", "2")
        assert code == 0
        assert path.exists()


PUBLIC_PACKAGES = ("core", "orbits", "series", "correspondence", "restriction", "numerics", "oracle", "reporting")

PAIR_JSON = '{"lambda": [4, 2, 1], "split": null, "tau": [-1, -1, 1]}'
SERIES_JSON = '{"N0": 1, "nu": {"lambda": [1], "split": null}, "sigma": [1]}'

COMMAND_TOUR = (
    ("orbits", "--n", "4"),
    ("orbits", "--n", "4", "--closure"),
    ("pairs", "--n", "4", "--format", "csv"),
    ("cuspidal", "--n", "4"),
    ("series", "--n", "4", "--format", "json"),
    ("table", "--n", "4"),
    ("support", "--label", PAIR_JSON, "--all-orders"),
    ("correspond", "--series", SERIES_JSON, "--mu", "[2]"),
    ("correspond", "--series", "N0=1 nu=[1] sigma=+", "--mu", "[1,1]"),
    ("restrict", "--label", "[5];+", "--target", "[3];+"),
    ("restrict", "--label", "[3,2];++"),
    ("restrict", "--sweep", "--max-n", "4"),
    ("dims", "--n", "5", "--n0", "3", "--orbit", "[3,2]", "--levi-orbit", "[2,1]"),
    ("dims", "--sweep", "--max-n", "4", "--samples", "20"),
    ("count", "--max-n", "4"),
    ("verify-appendix", "--round-trips", "3"),
    ("oracle-check", "--max-n", "2", "--trials", "2"),
)


def public_functions():
    """Map every function exported by a subpackage to its code object."""
    found = {}
    for package in PUBLIC_PACKAGES:
        module = importlib.import_module(f"springer_gln.{package}")
        for name in module.__all__:
            target = inspect.unwrap(getattr(module, name))
            if inspect.isfunction(target):
                found[f"{package}.{name}"] = target.__code__
    return found


def clear_caches():
    for name, module in list(sys.modules.items()):
        if not name.startswith("springer_gln"):
            continue
        for value in vars(module).values():
            if callable(getattr(value, "cache_clear", None)):
                value.cache_clear()


class TestOperationCoverage:
    """Tests that every exported operation is reachable from a command."""

    def test_every_operation_reached(self, run_cli):
        """Test that a tour of the commands calls every exported function."""
        expected = public_functions()
        clear_caches()
        called = set()

        def record(frame, event, arg):
            if event == "call":
                called.add(frame.f_code)

        previous = sys.getprofile()
        sys.setprofile(record)
        try:
            codes = [run_cli(*argv)[0] for argv in COMMAND_TOUR]
        finally:
            sys.setprofile(previous)

        assert codes == [0] * len(COMMAND_TOUR)
        missing = sorted(name for name, code in expected.items() if code not in called)
        assert missing == []
