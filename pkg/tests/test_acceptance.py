"""
End-to-end runs through the console entry point, plus rank-3 checks.

Usage:
    python -m pytest tests/test_acceptance.py -v
"""

from __future__ import annotations

import contextlib
import io
import json
import os
import sys
import unittest

# ---------------------------------------------------------------------------
# Ensure the project root is on the Python path so modules can be imported.
# ---------------------------------------------------------------------------
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

import main
from modules.error_dispatcher import ErrorDispatcher

GOLDEN_DIR = os.path.join(PROJECT_ROOT, "tests", "golden")


def run_main(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main.main(list(argv))
    return code, out.getvalue()


class TestEntryPoint(unittest.TestCase):
    """main.main wires the shell to the real standard streams."""

    def setUp(self):
        ErrorDispatcher.reset()

    def test_adjoint_graph_matches_golden(self):
        code, out = run_main("generate", "--model", "monomial-bla", "-n", "2", "--lambda", "1,1", "--format", "json")
        self.assertEqual(code, 0)
        keys = [v["key"] for v in json.loads(out)["vertices"]]
        with open(os.path.join(GOLDEN_DIR, "adjoint_n2_vertices.txt"), encoding="utf-8") as handle:
            self.assertEqual(keys, handle.read().split())

    def test_tableau_binf_golden(self):
        code, out = run_main("generate", "--model", "tableau-binf", "-n", "2", "--depth", "3", "--format", "json")
        self.assertEqual(code, 0)
        keys = {v["key"] for v in json.loads(out)["vertices"]}
        with open(os.path.join(GOLDEN_DIR, "tinf_n2_depth3.txt"), encoding="utf-8") as handle:
            self.assertEqual(keys, set(handle.read().split()))

    def test_exit_codes(self):
        self.assertEqual(run_main("generate", "--model", "monomial-binf", "-n", "2")[0], 2)
        self.assertEqual(
            run_main("member", "--model", "monomial-bla", "-n", "2", "--lambda", "1,1", "--element", "Y1(-1)^3")[0],
            1,
        )


class TestRankThree(unittest.TestCase):
    """The bijections on A_3."""

    def setUp(self):
        ErrorDispatcher.reset()

    def test_iso_bla(self):
        code, out = run_main("verify", "iso-bla", "-n", "3", "--lambda", "1,0,1")
        self.assertEqual(code, 0, out)

    def test_iso_binf(self):
        # height <= 5 is 120 vertices for n=3
        code, out = run_main("verify", "iso-binf", "-n", "3", "--depth", "5")
        self.assertEqual(code, 0, out)

    def test_generic_c_matrix(self):
        code, out = run_main("verify", "c-indep", "-n", "3", "--lambda", "1,1,0", "--c", "101")
        self.assertEqual(code, 0, out)

    def test_dimension(self):
        code, out = run_main("generate", "--model", "tableau-bla", "-n", "3", "--lambda", "1,1,1", "--format", "text")
        self.assertEqual(code, 0)
        self.assertIn("vertices=64", out.splitlines()[0])


if __name__ == "__main__":
    unittest.main()
