import json
import shutil
import tempfile

from io import StringIO
from pathlib import Path

from django.apps import apps
from django.core.management import CommandError, call_command
from django.db import connections
from django.test import SimpleTestCase

from construct.builders import variant_a_parity
from construct.plans import ConstructionPlan
from construct.rest.serializers import code_document
from construct.tests import LARGE_REMAINDER_PLAN, tampered
from linearcode.rest.serializers import LinearCodeSerializer
from linearcode.tests import two_block_code
from utils.documents import read_document, write_document


LARGE_REMAINDER_PARAMS = ["--n", "37", "--k", "27", "--r", "4", "--delta", "2"]
SMALL_REMAINDER_PARAMS = ["--n", "33", "--k", "23", "--r", "3", "--delta", "2"]
LOCALITY = ["--r", "2", "--delta", "2"]
NO_LOCALITY = ["--r", "1", "--delta", "2"]


def run(*args) -> str:
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def plan_flags(plan: dict) -> list[str]:
    return [token for name, value in plan.items() for token in (f"--{name}", str(value))]


class CommandTestCase(SimpleTestCase):
    def assertExitCode(self, code: int, *args) -> CommandError:
        with self.assertRaises(CommandError) as context:
            run(*args)
        self.assertEqual(context.exception.returncode, code)
        return context.exception


class ClassifyCommandTestCase(CommandTestCase):
    def test_large_remainder(self):
        output = run("classify", *LARGE_REMAINDER_PARAMS)
        self.assertIn("Regime: corollary7-tight [large-remainder-tight]", output)
        self.assertIn("dmax: 4", output)
        self.assertIn("u >= 2(r+delta-1-m): yes", output)

    def test_leaves(self):
        output = run("classify", "--n", "12", "--k", "4", "--r", "2", "--delta", "2")
        self.assertIn("Regime: divisible-optimal", output)
        output = run("classify", "--n", "13", "--k", "4", "--r", "2", "--delta", "2")
        self.assertIn("Regime: r-divides-k-unachievable", output)

    def test_json(self):
        output = run("classify", *SMALL_REMAINDER_PARAMS, "--json")
        data = json.loads(output)
        self.assertEqual(data["regime"]["label"], "corollary8-tight")
        self.assertEqual(data["small_remainder"], 3)

    def test_infeasible(self):
        infeasible = ["--n", "10", "--k", "9", "--r", "2", "--delta", "2"]
        error = self.assertExitCode(2, "classify", *infeasible)
        self.assertIn("w_at_least_u", str(error))

    def test_invalid(self):
        self.assertExitCode(2, "classify", "--n", "10", "--k", "10", "--r", "2", "--delta", "2")


class BoundCommandTestCase(CommandTestCase):
    def test_improved(self):
        output = run("bound", "--kind", "improved", *LARGE_REMAINDER_PARAMS, "--M", "0")
        self.assertEqual(output.strip(), "4")

    def test_exclusive_count_alias(self):
        flags = ["--kind", "improved", *LARGE_REMAINDER_PARAMS, "--exclusive-count", "1"]
        self.assertEqual(json.loads(run("bound", *flags, "--json"))["exclusive_count"], 1)

    def test_improved_needs_exclusive_count(self):
        self.assertExitCode(2, "bound", "--kind", "improved", *LARGE_REMAINDER_PARAMS)

    def test_generalized_json(self):
        output = run("bound", "--kind", "generalized", *LARGE_REMAINDER_PARAMS, "--json")
        self.assertEqual(json.loads(output)["value"], 5)

    def test_not_applicable(self):
        self.assertExitCode(2, "bound", "--kind", "large-remainder", *SMALL_REMAINDER_PARAMS)

    def test_all(self):
        output = run("bound", *LARGE_REMAINDER_PARAMS, "--M", "0")
        self.assertIn("improved: 4", output)
        self.assertIn("Open question:", output)


class PhiCommandTestCase(CommandTestCase):
    def test_value(self):
        output = run("phi", "--r", "4", "--delta", "2", "--a", "37", "--b", "6")
        self.assertEqual(output.strip(), "3")

    def test_undefined(self):
        self.assertExitCode(2, "phi", "--r", "4", "--delta", "2", "--a", "4", "--b", "1")

    def test_slack_alias(self):
        output = run("slack", "--r", "4", "--delta", "2", "--a", "37", "--b", "6", "--json")
        self.assertEqual(json.loads(output)["phi"], 3)


class ConstructionCommandTestCase(CommandTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.directory = Path(tempfile.mkdtemp())
        cls.path = cls.directory / "large_remainder.json"
        cls.output = run("construct", *plan_flags(LARGE_REMAINDER_PLAN), "--out", str(cls.path))

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.directory)
        super().tearDownClass()

    def test_construct(self):
        self.assertIn("[37, 27]", self.output)
        self.assertIn("Predicted minimum distance: 4", self.output)
        data = read_document(self.path)
        self.assertEqual((data["n"], data["k"]), (37, 27))
        self.assertEqual(data["plan"]["variant"], "A")

    def test_verify(self):
        output = run("verify", "--code", str(self.path), "--expect-d", "4")
        self.assertIn("PASS distance: expected 4, observed 4", output)
        self.assertIn("All checks passed", output)

    def test_verify_wrong_expectation(self):
        self.assertExitCode(1, "verify", "--code", str(self.path), "--expect-d", "5")

    def test_verify_contradicting_locality(self):
        self.assertExitCode(2, "verify", "--code", str(self.path), "--r", "3", "--delta", "2")

    def test_distance(self):
        output = run("distance", "--code", str(self.path), "--method", "columns", "--cap", "5")
        self.assertEqual(output.strip(), "4")
        output = run("distance", "--code", str(self.path), "--cap", "3")
        self.assertEqual(output.strip(), "> 3")

    def test_cap_needs_columns(self):
        self.assertExitCode(
            2, "distance", "--code", str(self.path), "--method", "codewords", "--cap", "3"
        )

    def test_tampered(self):
        plan = ConstructionPlan(**LARGE_REMAINDER_PLAN)
        path = self.directory / "tampered.json"
        write_document(path, code_document(tampered(variant_a_parity(plan)), plan))
        out = StringIO()
        with self.assertRaises(CommandError) as context:
            call_command("verify", "--code", str(path), stdout=out)
        self.assertEqual(context.exception.returncode, 1)
        self.assertIn("distance", str(context.exception))
        self.assertIn("FAIL distance: expected 4, observed 3", out.getvalue())

    def test_plan_of_another_length(self):
        plan = ConstructionPlan(**LARGE_REMAINDER_PLAN)
        path = self.directory / "other_length.json"
        write_document(path, code_document(two_block_code(), plan))
        out = StringIO()
        with self.assertRaises(CommandError) as context:
            call_command("verify", "--code", str(path), stdout=out)
        self.assertEqual(context.exception.returncode, 1)
        self.assertIn("FAIL length: expected 37, observed 6", out.getvalue())

    def test_invalid_plan(self):
        plan = {**LARGE_REMAINDER_PLAN, "m": 1}
        path = self.directory / "invalid.json"
        error = self.assertExitCode(2, "construct", *plan_flags(plan), "--out", str(path))
        self.assertIn("m >= delta violated", str(error))
        self.assertFalse(path.exists())

    def test_small_remainder_round_trip(self):
        plan = dict(variant="B", r=3, delta=2, m=1, u=7, v=2, w=8, q=37, e=3)
        path = self.directory / "small_remainder.json"
        output = run("construct", *plan_flags(plan), "--out", str(path))
        self.assertIn("Note: The independent set is built at the stated level", output)
        output = run("verify", "--code", str(path), "--json")
        data = json.loads(output)
        self.assertTrue(data["passed"])
        self.assertEqual(data["distance"], 3)


class GenericCommandTestCase(CommandTestCase):
    def setUp(self):
        self.directory = Path(tempfile.mkdtemp())
        self.addCleanup(shutil.rmtree, self.directory)
        self.path = self.directory / "two_blocks.json"
        write_document(self.path, LinearCodeSerializer(two_block_code()).data)

    def test_verify(self):
        output = run("verify", "--code", str(self.path), *LOCALITY, "--expect-d", "2")
        self.assertIn("PASS witness", output)
        self.assertIn("All checks passed", output)

    def test_no_locality(self):
        out = StringIO()
        with self.assertRaises(CommandError) as context:
            call_command("verify", "--code", str(self.path), *NO_LOCALITY, stdout=out)
        self.assertEqual(context.exception.returncode, 1)
        self.assertIn("No repair set covers coordinate 1", out.getvalue())

    def test_verify_needs_locality(self):
        self.assertExitCode(2, "verify", "--code", str(self.path))

    def test_modified_file(self):
        data = read_document(self.path)
        data["identifier"] = "0" * 16
        write_document(self.path, data)
        output = run("verify", "--code", str(self.path), *LOCALITY)
        self.assertIn("it was modified", output)

    def test_missing_file(self):
        self.assertExitCode(2, "distance", "--code", str(self.directory / "missing.json"))

    def test_not_json(self):
        path = self.directory / "broken.json"
        path.write_text("{", encoding="utf-8")
        self.assertExitCode(2, "distance", "--code", str(path))

    def test_distance_methods(self):
        for method in ("codewords", "columns", "lemma1", "subset-rank"):
            output = run("distance", "--code", str(self.path), "--method", method)
            self.assertEqual(output.strip(), "2")

    def test_ecf(self):
        output = run("ecf", "--code", str(self.path), *LOCALITY)
        self.assertIn("Essential cover of 2 repair sets:", output)
        self.assertIn("  [1, 2, 3]", output)
        self.assertIn("Exclusive count M: 0", output)
        self.assertIn("Improved bound: 2", output)

    def test_ecf_all_orders(self):
        output = run("ecf", "--code", str(self.path), *LOCALITY, "--all-orders", "--json")
        data = json.loads(output)
        self.assertEqual(data["exclusive_count"], 0)
        self.assertEqual([outcome["exclusive_count"] for outcome in data["all_orders"]], [0])
        self.assertEqual(data["cover"]["blocks"], [[1, 2, 3], [4, 5, 6]])

    def test_ecf_without_locality(self):
        error = self.assertExitCode(2, "ecf", "--code", str(self.path), *NO_LOCALITY)
        self.assertIn("No repair set covers coordinate 1", str(error))


class SettingsTestCase(CommandTestCase):
    def test_no_database(self):
        self.assertEqual(connections["default"].settings_dict["ENGINE"], "django.db.backends.dummy")
        self.assertFalse(apps.is_installed("django.contrib.auth"))
        self.assertFalse(apps.is_installed("django.contrib.contenttypes"))

    def test_commands_run_without_auth(self):
        output = run("classify", *LARGE_REMAINDER_PARAMS, "--json")
        self.assertEqual(json.loads(output)["regime"]["alias"], "large-remainder-tight")
