"""
Tests for the command-line shell: sub-commands, output and exit codes.

The app is driven in-process with StringIO streams, so nothing is spawned.

Usage:
    python -m pytest tests/test_cli.py -v
"""

from __future__ import annotations

import contextlib
import io
import json
import os
import sys
import tempfile
import unittest

# ---------------------------------------------------------------------------
# Ensure the project root is on the Python path so modules can be imported.
# ---------------------------------------------------------------------------
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from cli_base.app_shell import CrystalCliApp
from command_managers.command_registry import CommandRegistry
from command_managers.command_registry import registry as command_registry
from modules.error_dispatcher import ErrorDispatcher, ErrorLevel


class CliTestCase(unittest.TestCase):
    """Runs one invocation and keeps its streams."""

    def setUp(self):
        ErrorDispatcher.reset()

    def invoke(self, *argv: str, stdin: str = "") -> int:
        self.out = io.StringIO()
        self.err = io.StringIO()
        app = CrystalCliApp(stdout=self.out, stderr=self.err, stdin=io.StringIO(stdin))
        try:
            # argparse writes usage errors to the real stderr
            with contextlib.redirect_stderr(io.StringIO()), contextlib.redirect_stdout(io.StringIO()):
                return app.run(list(argv))
        finally:
            app.close()

    def output_json(self) -> dict:
        return json.loads(self.out.getvalue())


# ---------------------------------------------------------------------------
# 1. Parser and shell
# ---------------------------------------------------------------------------

class TestShell(CliTestCase):

    def test_commands_are_registered(self):
        self.assertEqual(command_registry.list(), ["generate", "verify", "convert", "member"])

    def test_unknown_command_lookup(self):
        with self.assertRaises(KeyError):
            command_registry.get("frobnicate")

    def test_broken_command_is_reported(self):
        """A command module that fails to import is left out and logged at ERROR."""
        registry = CommandRegistry()
        self.assertIsNone(registry.load("broken", "command_managers.no_such_command", "BrokenCommand"))
        self.assertEqual(registry.list(), [])
        errors = ErrorDispatcher.get_instance().get_history(ErrorLevel.ERROR)
        self.assertEqual(len(errors), 1)
        self.assertIsInstance(errors[0].exception, ModuleNotFoundError)
        self.assertEqual(errors[0].data["name"], "broken")
        self.assertIn("could not load command 'broken'", errors[0].message)

    def test_load_registers_the_class(self):
        registry = CommandRegistry()
        cls = registry.load("member", "command_managers.member_command", "MemberCommand")
        self.assertIs(registry.get("member"), cls)
        self.assertEqual(cls.name, "member")

    def test_help_exits_zero(self):
        self.assertEqual(self.invoke("--help"), 0)

    def test_usage_errors_exit_two(self):
        self.assertEqual(self.invoke(), 2)
        self.assertEqual(self.invoke("frobnicate"), 2)
        self.assertEqual(self.invoke("generate", "--model", "monomial-bla"), 2)

    def test_close_drops_subscriptions(self):
        """A closed app no longer writes dispatcher errors."""
        err = io.StringIO()
        app = CrystalCliApp(stdout=io.StringIO(), stderr=err)
        app.close()
        ErrorDispatcher.get_instance().emit(ErrorLevel.ERROR, "late", context="test")
        self.assertEqual(err.getvalue(), "")


# ---------------------------------------------------------------------------
# 2. generate
# ---------------------------------------------------------------------------

class TestGenerate(CliTestCase):

    def test_bla_text(self):
        code = self.invoke("generate", "--model", "monomial-bla", "-n", "2", "--lambda", "1,1", "--format", "text")
        self.assertEqual(code, 0)
        self.assertEqual(self.out.getvalue().splitlines()[0], "# n=2 vertices=8 edges=8 truncated=false")

    def test_tableau_bla_dot(self):
        code = self.invoke("generate", "--model", "tableau-bla", "-n", "2", "--lambda", "1,1")
        self.assertEqual(code, 0)
        self.assertTrue(self.out.getvalue().startswith("digraph crystal {"))

    def test_binf_depth_zero(self):
        """A zero depth prints only the seed."""
        code = self.invoke("generate", "--model", "tableau-binf", "-n", "2", "--depth", "0", "--format", "json")
        self.assertEqual(code, 0)
        data = self.output_json()
        self.assertEqual(data["vertices"], [{"key": "[[1,1],[2]]", "wt": [0, 0]}])
        self.assertTrue(data["truncated"])

    def test_binf_depth_three(self):
        code = self.invoke("generate", "--model", "monomial-binf", "-n", "2", "--depth", "3", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(len(self.output_json()["vertices"]), 13)

    def test_binf_without_depth(self):
        """Infinite models need --depth: exit 2 and one error line."""
        code = self.invoke("generate", "--model", "monomial-binf", "-n", "2")
        self.assertEqual(code, 2)
        self.assertEqual(self.out.getvalue(), "")
        self.assertIn("requires --depth", self.err.getvalue())

    def test_bla_without_lambda(self):
        self.assertEqual(self.invoke("generate", "--model", "tableau-bla", "-n", "2"), 2)

    def test_non_dominant_lambda(self):
        self.assertEqual(self.invoke("generate", "--model", "monomial-bla", "-n", "2", "--lambda", "1,-1"), 2)

    def test_bad_c_matrix(self):
        code = self.invoke("generate", "--model", "monomial-bla", "-n", "2", "--lambda", "1,0", "--c", "2")
        self.assertEqual(code, 2)


# ---------------------------------------------------------------------------
# 3. member
# ---------------------------------------------------------------------------

class TestMember(CliTestCase):

    def test_bla_member(self):
        code = self.invoke(
            "member", "--model", "monomial-bla", "-n", "2", "--lambda", "1,1", "--element", "Y2(-2)^1*Y2(0)^-1"
        )
        self.assertEqual(code, 0)
        self.assertEqual(self.out.getvalue(), '{"member":true}\n')

    def test_bla_non_member(self):
        code = self.invoke("member", "--model", "monomial-bla", "-n", "2", "--lambda", "1,1", "--element", "Y1(-1)^3")
        self.assertEqual(code, 1)
        data = self.output_json()
        self.assertFalse(data["member"])
        self.assertEqual(data["condition"], "condition (1)")

    def test_binf_non_member(self):
        code = self.invoke("member", "--model", "monomial-binf", "-n", "2", "--element", "Y1(-1)^(1,1)*Y2(-2)^(1,0)")
        self.assertEqual(code, 1)
        self.assertEqual(self.output_json()["condition"], "condition (2)")

    def test_binf_member(self):
        code = self.invoke(
            "member", "--model", "monomial-binf", "-n", "2",
            "--element", "Y1(-1)^(1,-1)*Y1(0)^(0,-1)*Y2(-2)^(1,0)*Y2(-1)^(0,1)",
        )
        self.assertEqual(code, 0)

    def test_tableau_from_stdin(self):
        """Tableaux are read as JSON."""
        code = self.invoke(
            "member", "--model", "tableau-binf", "-n", "2", stdin='{"n": 2, "rows": [[1, 1, 1], [2]]}'
        )
        self.assertEqual(code, 1)
        self.assertEqual(self.output_json()["condition"], "marginally large")

    def test_unparseable_element(self):
        code = self.invoke("member", "--model", "monomial-bla", "-n", "2", "--lambda", "1,1", "--element", "Y1")
        self.assertEqual(code, 2)


# ---------------------------------------------------------------------------
# 4. convert
# ---------------------------------------------------------------------------

class TestConvert(CliTestCase):

    MONOMIAL = {"kind": "plain", "n": 2, "factors": [{"i": 2, "m": -2, "e": 1}, {"i": 2, "m": 0, "e": -1}]}

    def test_monomial_to_tableau(self):
        code = self.invoke(
            "convert", "--from", "monomial-bla", "--to", "tableau-bla", "-n", "2", "--lambda", "1,1",
            stdin=json.dumps(self.MONOMIAL),
        )
        self.assertEqual(code, 0)
        self.assertEqual(self.out.getvalue(), '{"n":2,"rows":[[1,3],[2]]}\n')

    def test_monomial_to_xform(self):
        code = self.invoke(
            "convert", "--from", "monomial-bla", "--to", "xform-bla", "-n", "2", "--lambda", "1,1",
            stdin=json.dumps(self.MONOMIAL),
        )
        self.assertEqual(code, 0)
        self.assertEqual(self.output_json()["b"], {"1": [1, 0, 1], "2": [1, 0]})

    def test_tableau_to_monomial_binf(self):
        code = self.invoke(
            "convert", "--from", "tableau-binf", "--to", "monomial-binf", "-n", "2",
            stdin='{"n": 2, "rows": [[1, 1, 2], [2]]}',
        )
        self.assertEqual(code, 0)
        self.assertEqual(
            self.output_json(),
            {
                "kind": "ext",
                "n": 2,
                "factors": [
                    {"i": 1, "m": -1, "e": [1, -1]},
                    {"i": 1, "m": 0, "e": [0, -1]},
                    {"i": 2, "m": -2, "e": [1, 0]},
                    {"i": 2, "m": -1, "e": [0, 1]},
                ],
            },
        )

    def test_input_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "element.json")
            with open(path, "w", encoding="utf-8") as handle:
                json.dump({"n": 2, "rows": [[1, 1], [2]]}, handle)
            code = self.invoke("convert", "--from", "tableau-binf", "--to", "xform-binf", "-n", "2", "--input", path)
        self.assertEqual(code, 0)
        self.assertEqual(self.output_json()["b"], {"1": [0, 0], "2": [0]})

    def test_missing_input_file(self):
        code = self.invoke(
            "convert", "--from", "tableau-binf", "--to", "xform-binf", "-n", "2", "--input", "/nonexistent/x.json"
        )
        self.assertEqual(code, 2)

    def test_across_families(self):
        """B(infinity) elements cannot become B(lambda) elements."""
        code = self.invoke(
            "convert", "--from", "tableau-binf", "--to", "tableau-bla", "-n", "2", "--lambda", "1,1",
            stdin='{"n": 2, "rows": [[1, 1], [2]]}',
        )
        self.assertEqual(code, 2)

    def test_malformed_json(self):
        code = self.invoke("convert", "--from", "tableau-binf", "--to", "xform-binf", "-n", "2", stdin="{")
        self.assertEqual(code, 2)
        self.assertIn("malformed JSON", self.err.getvalue())

    def test_non_member_input(self):
        """A non-semistandard tableau is a membership failure."""
        code = self.invoke(
            "convert", "--from", "tableau-bla", "--to", "monomial-bla", "-n", "2", "--lambda", "1,1",
            stdin='{"n": 2, "rows": [[2, 1], [3]]}',
        )
        self.assertEqual(code, 1)
        self.assertIn("semistandard", self.err.getvalue())


# ---------------------------------------------------------------------------
# 5. verify
# ---------------------------------------------------------------------------

class TestVerify(CliTestCase):

    def test_iso_bla(self):
        code = self.invoke("verify", "iso-bla", "-n", "2", "--lambda", "1,1")
        self.assertEqual(code, 0)
        summary, report = self.out.getvalue().splitlines()
        self.assertTrue(summary.startswith("iso-bla: verified"))
        self.assertTrue(json.loads(report)["ok"])

    def test_iso_binf(self):
        self.assertEqual(self.invoke("verify", "iso-binf", "-n", "2", "--depth", "2"), 0)

    def test_networkx_cross_check(self):
        """--networkx runs the VF2 matcher alongside the traversal."""
        code = self.invoke("verify", "iso-bla", "-n", "2", "--lambda", "1,1", "--networkx")
        self.assertEqual(code, 0)
        self.assertEqual(self.invoke("verify", "iso-binf", "-n", "2", "--depth", "3", "--networkx"), 0)
        verified = [
            event for event in ErrorDispatcher.get_instance().get_history(ErrorLevel.INFO)
            if event.message.endswith(" verified")
        ]
        self.assertEqual(len(verified), 2)
        self.assertTrue(all(event.data["networkx"] for event in verified))

    def test_product(self):
        self.assertEqual(self.invoke("verify", "product", "-n", "2", "--mu", "1,0", "--tau", "0,1"), 0)

    def test_missing_options(self):
        self.assertEqual(self.invoke("verify", "iso-binf", "-n", "2"), 2)
        self.assertEqual(self.invoke("verify", "product", "-n", "2", "--mu", "1,0"), 2)

    def test_unknown_kind(self):
        self.assertEqual(self.invoke("verify", "everything", "-n", "2"), 2)


if __name__ == "__main__":
    unittest.main()
