"""
Tests for the M(lambda) monomial model: membership, the X-variable normal
form, the tableau bridge Psi and monomial products.

Usage:
    python -m pytest tests/test_bla_model.py -v
"""

from __future__ import annotations

import os
import sys
import unittest

# ---------------------------------------------------------------------------
# Ensure the project root is on the Python path so modules can be imported.
# ---------------------------------------------------------------------------
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from modules.bla_model import (
    Psi,
    Psi_inverse,
    XFormLa,
    XFormLaElement,
    crystal_monomials,
    e_sig,
    enumerate_members,
    f_sig,
    from_xform,
    highest_xform,
    is_member,
    m_lambda,
    membership_violation,
    product_set_equal,
    product_sets,
    shift_map,
    to_xform,
    xform_weight,
)
from modules.cartan import Weight, enumerate_semistandard
from modules.crystal_graph import ZERO
from modules.error_dispatcher import ErrorDispatcher
from modules.exceptions import DomainError, MembershipError
from modules.monomial_core import canonical_serialize, f_tilde, parse_canonical
from modules.tableau_core import Tableau, f_bla

ADJOINT = Weight((1, 1))


def rows(*b) -> XFormLa:
    return XFormLa(ADJOINT, tuple(tuple(row) for row in b))


def adjoint_tableaux() -> list[Tableau]:
    return [Tableau(2, rows_) for rows_ in enumerate_semistandard((2, 1), 2)]


# ---------------------------------------------------------------------------
# 1. Normal form and membership
# ---------------------------------------------------------------------------

class TestXFormLa(unittest.TestCase):
    """b arrays of M(Lambda_1 + Lambda_2)."""

    def setUp(self):
        ErrorDispatcher.reset()

    def test_highest_weight(self):
        """M_lambda has b_1^1 = 2 and b_2^2 = 1."""
        X = highest_xform(ADJOINT)
        self.assertEqual(X.b, ((2, 0, 0), (1, 0)))
        self.assertEqual(from_xform(X), m_lambda(ADJOINT))
        self.assertEqual(canonical_serialize(m_lambda(ADJOINT)), "Y1(-1)^1*Y2(-2)^1")
        self.assertEqual(xform_weight(X), ADJOINT)

    def test_known_member(self):
        """Y2(-2) Y2(0)^-1 is the tableau [[1,3],[2]]."""
        M = parse_canonical("Y2(-2)^1*Y2(0)^-1", 2)
        X = to_xform(M, ADJOINT)
        self.assertEqual(X.b, ((1, 0, 1), (1, 0)))
        self.assertEqual(Psi_inverse(X), Tableau(2, ((1, 3), (2,))))
        self.assertEqual(X.describe(), "X3(-1)^1*X1(-1)^1*X2(-2)^1")

    def test_condition_1_failure(self):
        """Y1(-1)^3 has the wrong weight for Lambda_1 + Lambda_2."""
        violation = membership_violation(parse_canonical("Y1(-1)^3", 2), ADJOINT)
        self.assertEqual(violation.condition, "condition (1)")
        with self.assertRaises(MembershipError):
            to_xform(parse_canonical("Y1(-1)^3", 2), ADJOINT)

    def test_template_and_kind_failures(self):
        """Extended monomials and far-away variables are rejected."""
        self.assertFalse(is_member(parse_canonical("Y1(-1)^(1,0)*Y2(-2)^(1,0)", 2), ADJOINT))
        self.assertEqual(
            membership_violation(parse_canonical("Y1(-5)^1*Y2(-2)^1", 2), ADJOINT).condition,
            "template",
        )
        with self.assertRaises(DomainError):
            is_member(m_lambda(ADJOINT), Weight((1, -1)))

    def test_invariants(self):
        """Each broken invariant is named."""
        self.assertEqual(rows((1, 1, 0), (0, 1)).b, ((1, 1, 0), (0, 1)))
        cases = {
            "invariant (1)": ((3, -1, 0), (1, 0)),
            "invariant (2)": ((1, 0, 0), (1, 0)),
            "invariant (3)": ((0, 2, 0), (1, 0)),
        }
        for name, b in cases.items():
            with self.subTest(name=name):
                with self.assertRaises(MembershipError) as ctx:
                    rows(*b)
                self.assertEqual(ctx.exception.condition, name)

    def test_json_round_trip(self):
        """to_dict carries lambda and r."""
        X = shift_map(rows((1, 1, 0), (0, 1)), 4)
        data = X.to_dict()
        self.assertEqual(data["lambda"], [1, 1])
        self.assertEqual(data["r"], 4)
        self.assertEqual(XFormLa.from_dict(data), X)

    def test_shift_keeps_membership(self):
        """Shifted X-forms land in M(r; lambda)."""
        X = shift_map(rows((1, 0, 1), (1, 0)), 3)
        M = from_xform(X)
        self.assertEqual(canonical_serialize(M), "Y2(1)^1*Y2(3)^-1")
        self.assertTrue(is_member(M, ADJOINT, 3))
        self.assertFalse(is_member(M, ADJOINT))
        self.assertEqual(to_xform(M, ADJOINT, 3), X)


# ---------------------------------------------------------------------------
# 2. Operators and the tableau bridge
# ---------------------------------------------------------------------------

class TestOperators(unittest.TestCase):
    """Signature operators against tableaux and monomials."""

    def setUp(self):
        ErrorDispatcher.reset()

    def test_children_of_highest_weight(self):
        """f_1 gives [[1,2],[2]] and f_2 gives [[1,1],[3]]."""
        X = highest_xform(ADJOINT)
        self.assertEqual(Psi_inverse(f_sig(X, 1)), Tableau(2, ((1, 2), (2,))))
        self.assertEqual(Psi_inverse(f_sig(X, 2)), Tableau(2, ((1, 1), (3,))))
        self.assertIs(e_sig(X, 1), ZERO)

    def test_psi_round_trip(self):
        """Psi and Psi_inverse are inverse on all eight tableaux."""
        for T in adjoint_tableaux():
            self.assertEqual(Psi_inverse(Psi(T, ADJOINT)), T)
        with self.assertRaises(DomainError):
            Psi(Tableau(2, ((1, 1, 1),)), ADJOINT)

    def test_psi_intertwines(self):
        """Psi f_i = f_sig Psi, ZERO included."""
        for T in adjoint_tableaux():
            for i in (1, 2):
                with self.subTest(tableau=str(T), i=i):
                    lowered = f_bla(T, i)
                    image = f_sig(Psi(T, ADJOINT), i)
                    if lowered is ZERO:
                        self.assertIs(image, ZERO)
                    else:
                        self.assertEqual(image, Psi(lowered, ADJOINT))

    def test_monomials_intertwine(self):
        """from_xform f_sig = f_tilde from_xform."""
        for T in adjoint_tableaux():
            X = Psi(T, ADJOINT)
            for i in (1, 2):
                lowered = f_sig(X, i)
                expected = f_tilde(from_xform(X), i)
                if lowered is ZERO:
                    self.assertIs(expected, ZERO)
                else:
                    self.assertEqual(from_xform(lowered), expected)

    def test_element_adapter(self):
        """eps and phi count the surviving signature symbols."""
        element = XFormLaElement(highest_xform(ADJOINT))
        self.assertEqual((element.eps(1), element.phi(1)), (0, 1))
        self.assertEqual((element.eps(2), element.phi(2)), (0, 1))
        self.assertIs(element.apply_e(2), ZERO)
        self.assertEqual(element.apply_f(1).weight(), Weight((-1, 2)))


# ---------------------------------------------------------------------------
# 3. Enumeration and products
# ---------------------------------------------------------------------------

class TestEnumeration(unittest.TestCase):
    """The condition-defined set against the connected component."""

    def setUp(self):
        ErrorDispatcher.reset()

    def test_adjoint_members(self):
        """Eight members, equal to the crystal component."""
        members = set(enumerate_members(ADJOINT))
        self.assertEqual(len(members), 8)
        self.assertEqual(members, crystal_monomials(ADJOINT))

    def test_fundamental_members(self):
        """M(Lambda_1) for n = 2 has three members."""
        members = {canonical_serialize(M) for M in enumerate_members(Weight((1, 0)))}
        self.assertEqual(members, {"Y1(-1)^1", "Y1(0)^-1*Y2(-1)^1", "Y2(0)^-1"})


class TestProducts(unittest.TestCase):
    """M(mu) * M(tau) against M(mu + tau)."""

    def setUp(self):
        ErrorDispatcher.reset()

    def test_symmetric_square(self):
        """Pairwise products of M(Lambda_1) fill M(2 Lambda_1)."""
        products, target = product_sets(Weight((1, 0)), Weight((1, 0)))
        self.assertEqual(len(target), 6)
        self.assertEqual(products, target)
        self.assertTrue(product_set_equal(Weight((1, 0)), Weight((1, 0))))

    def test_product_is_logged(self):
        """The sizes go to the dispatcher at INFO."""
        product_sets(Weight((1, 0)), Weight((1, 0)))
        event = ErrorDispatcher.get_instance().get_history()[-1]
        self.assertEqual(event.data, {"pairs": 9, "products": 6, "target": 6})


if __name__ == "__main__":
    unittest.main()
