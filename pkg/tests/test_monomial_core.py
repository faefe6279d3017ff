"""
Tests for Nakajima monomials: pair exponents, c-matrices, the generic
Kashiwara operators and the canonical serialization.

Usage:
    python -m pytest tests/test_monomial_core.py -v
"""

from __future__ import annotations

import os
import random
import sys
import unittest

# ---------------------------------------------------------------------------
# Ensure the project root is on the Python path so modules can be imported.
# ---------------------------------------------------------------------------
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from modules.cartan import ExtWeight, Weight
from modules.crystal_graph import ZERO
from modules.exceptions import CartanIndexError, DomainError
from modules.monomial_core import (
    CMatrix,
    ExpPair,
    ExtMonomial,
    MonomialElement,
    PlainMonomial,
    a_multiplier,
    canonical_serialize,
    e_tilde,
    embed_plain,
    eps,
    eps_tilde,
    f_tilde,
    m_e,
    m_f,
    monomial_from_dict,
    monomial_to_dict,
    parse_canonical,
    phi,
    phi_tilde,
    project_ext,
    projected_weight,
    weight,
)

# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def plain(n: int, text: str) -> PlainMonomial:
    return parse_canonical(text, n, extended=False)


def ext(n: int, text: str) -> ExtMonomial:
    return parse_canonical(text, n, extended=True)


M_INF_2 = "Y1(-1)^(1,0)*Y2(-2)^(1,0)"


# ---------------------------------------------------------------------------
# 1. Exponents and c-matrices
# ---------------------------------------------------------------------------

class TestExpPair(unittest.TestCase):
    """Lexicographically ordered integer pairs."""

    def test_lexicographic_order(self):
        """The first component decides; the second breaks ties."""
        self.assertLess(ExpPair(0, 5), ExpPair(1, -3))
        self.assertLess(ExpPair(1, -3), ExpPair(1, 0))
        self.assertGreater(ExpPair(1, 0), ExpPair(0, 0))

    def test_arithmetic(self):
        """Componentwise add, subtract and negate."""
        self.assertEqual(ExpPair(1, 2) + ExpPair(0, -3), ExpPair(1, -1))
        self.assertEqual(ExpPair(1, 2) - ExpPair(1, 2), ExpPair(0, 0))
        self.assertEqual(-ExpPair(1, -1), ExpPair(-1, 1))
        self.assertEqual(str(ExpPair(1, -1)), "(1,-1)")


class TestCMatrix(unittest.TestCase):
    """c_ij + c_ji = 1 with only the upper triangle stored."""

    def test_default(self):
        """c_ij = 1 for i < j and 0 for i > j."""
        c = CMatrix.default(3)
        self.assertEqual(c(1, 2), 1)
        self.assertEqual(c(1, 3), 1)
        self.assertEqual(c(3, 2), 0)
        self.assertTrue(c.validate())

    def test_from_upper_and_bits(self):
        """Upper entries are read row-major over pairs i < j."""
        c = CMatrix.from_upper(3, (1, -2, 0))
        self.assertEqual(c(1, 3), -2)
        self.assertEqual(c(3, 1), 3)
        self.assertEqual(c(2, 3), 0)
        self.assertEqual(c(3, 2), 1)
        self.assertEqual(CMatrix.from_bits(3, "101"), CMatrix.from_upper(3, (1, 0, 1)))

    def test_invalid_inputs(self):
        """Wrong length or non-binary strings are rejected."""
        with self.assertRaises(DomainError):
            CMatrix.from_upper(3, (1, 1))
        with self.assertRaises(DomainError):
            CMatrix.from_bits(2, "2")
        with self.assertRaises(DomainError):
            CMatrix.default(2).entry(1, 1)

    def test_random_is_valid(self):
        """Random matrices satisfy the defining relation."""
        rng = random.Random(3)
        for _ in range(10):
            self.assertTrue(CMatrix.random(4, rng).validate())


# ---------------------------------------------------------------------------
# 2. Monomial algebra
# ---------------------------------------------------------------------------

class TestMonomialAlgebra(unittest.TestCase):
    """Products, inverses, weights and serialization."""

    def test_canonical_form_merges_and_drops_zero(self):
        """Repeated variables merge; zero exponents vanish."""
        M = PlainMonomial(2, ((2, -2, 1), (1, 0, -1), (2, -2, 1), (1, 3, 0)))
        self.assertEqual(M.factors, ((1, 0, -1), (2, -2, 2)))
        self.assertEqual(canonical_serialize(M), "Y1(0)^-1*Y2(-2)^2")

    def test_product_and_inverse(self):
        """M * M^-1 is the unit monomial."""
        M = plain(2, "Y1(-1)^1*Y2(-2)^1")
        self.assertTrue((M * M.inverse()).is_one())
        self.assertEqual(canonical_serialize(M ** 2), "Y1(-1)^2*Y2(-2)^2")
        self.assertEqual(canonical_serialize(PlainMonomial.one(2)), "1")

    def test_mixing_kinds_is_rejected(self):
        """Plain and extended monomials do not multiply."""
        with self.assertRaises(DomainError):
            plain(2, "Y1(-1)^1") * ext(2, M_INF_2)

    def test_index_outside_rank(self):
        """Y3 does not exist for n = 2."""
        with self.assertRaises(CartanIndexError):
            PlainMonomial(2, ((3, 0, 1),))

    def test_weights(self):
        """wt for plain monomials, pair weights for extended ones."""
        self.assertEqual(weight(plain(2, "Y1(-1)^1*Y2(-2)^1")), Weight((1, 1)))
        self.assertEqual(weight(ext(2, M_INF_2)), ExtWeight(((1, 0), (1, 0))))
        self.assertEqual(projected_weight(ext(2, M_INF_2)), Weight((0, 0)))

    def test_parse_canonical_round_trip(self):
        """parse_canonical inverts canonical_serialize for both kinds."""
        for text, n in (("Y1(0)^-1*Y2(-2)^1*Y2(-1)^1", 2), (M_INF_2, 2), ("1", 3)):
            self.assertEqual(canonical_serialize(parse_canonical(text, n)), text)

    def test_parse_errors(self):
        """Garbage and mixed exponent kinds are DomainErrors."""
        with self.assertRaises(DomainError):
            parse_canonical("Y1(-1)", 2)
        with self.assertRaises(DomainError):
            parse_canonical("Y1(-1)^1*Y2(-2)^(1,0)", 2)
        with self.assertRaises(DomainError):
            parse_canonical("Y1(-1)^1", 2, extended=True)

    def test_json_encoding(self):
        """Extended exponents are encoded as two-element lists."""
        M = ext(2, M_INF_2)
        data = monomial_to_dict(M)
        self.assertEqual(
            data,
            {"kind": "ext", "n": 2, "factors": [{"i": 1, "m": -1, "e": [1, 0]}, {"i": 2, "m": -2, "e": [1, 0]}]},
        )
        self.assertEqual(monomial_from_dict(data), M)
        with self.assertRaises(DomainError):
            monomial_from_dict({"kind": "odd", "n": 2})

    def test_embed_and_project(self):
        """Plain monomials embed with zero first components."""
        M = plain(2, "Y1(0)^-1*Y2(-1)^2")
        self.assertEqual(canonical_serialize(embed_plain(M)), "Y1(0)^(0,-1)*Y2(-1)^(0,2)")
        self.assertEqual(project_ext(embed_plain(M)), M)
        with self.assertRaises(DomainError):
            project_ext(ext(2, M_INF_2))

    def test_embedding_commutes_with_operators(self):
        """The extended operators restrict to the plain ones."""
        samples = ["Y1(-1)^1*Y2(-2)^1", "Y1(0)^-1*Y2(-2)^1*Y2(-1)^1", "Y1(-1)^2*Y2(-1)^-1", "Y2(0)^-1"]
        for text in samples:
            M = plain(2, text)
            for i in (1, 2):
                for op in (f_tilde, e_tilde):
                    with self.subTest(monomial=text, i=i, op=op.__name__):
                        direct = op(M, i)
                        lifted = op(embed_plain(M), i)
                        if direct is ZERO:
                            self.assertIs(lifted, ZERO)
                        else:
                            self.assertEqual(lifted, embed_plain(direct))


# ---------------------------------------------------------------------------
# 3. Generic operators
# ---------------------------------------------------------------------------

class TestGenericOperators(unittest.TestCase):
    """phi, eps, m_f, m_e and the operators f_i, e_i."""

    def test_a_multiplier_default_c(self):
        """A_1(-1)^-1 = Y1(-1)^-1 Y1(0)^-1 Y2(-1) for n = 2."""
        A = a_multiplier(CMatrix.default(2), 1, -1, sign=-1)
        self.assertEqual(canonical_serialize(A), "Y1(-1)^-1*Y1(0)^-1*Y2(-1)^1")
        A2 = a_multiplier(CMatrix.default(2), 2, -2, sign=1)
        self.assertEqual(canonical_serialize(A2), "Y1(-1)^-1*Y2(-2)^1*Y2(-1)^1")

    def test_phi_eps_plain(self):
        """Prefix maxima include the empty prefix."""
        M = plain(2, "Y1(-1)^1*Y1(0)^-1")
        self.assertEqual(phi_tilde(M, 1), 1)
        self.assertEqual(eps_tilde(M, 1), 1)
        self.assertEqual(m_f(M, 1), -1)
        self.assertEqual(m_e(M, 1), -1)
        self.assertEqual(phi(M, 2), 0)
        with self.assertRaises(DomainError):
            m_f(M, 2)

    def test_f_on_highest_weight_monomial(self):
        """f_1, f_2 of Y1(-1)Y2(-2) and the ZERO cases."""
        M = plain(2, "Y1(-1)^1*Y2(-2)^1")
        self.assertEqual(canonical_serialize(f_tilde(M, 1)), "Y1(0)^-1*Y2(-2)^1*Y2(-1)^1")
        self.assertEqual(canonical_serialize(f_tilde(M, 2)), "Y1(-1)^2*Y2(-1)^-1")
        self.assertIs(e_tilde(M, 1), ZERO)
        self.assertIs(f_tilde(plain(2, "Y1(0)^-1*Y2(0)^-1"), 1), ZERO)

    def test_e_inverts_f(self):
        """e_i f_i M = M on a chain of B(Lambda_1 + Lambda_2)."""
        M = plain(2, "Y1(-1)^1*Y2(-2)^1")
        for i in (1, 2, 1, 2):
            lowered = f_tilde(M, i)
            if lowered is ZERO:
                continue
            self.assertEqual(e_tilde(lowered, i), M)
            M = lowered

    def test_extended_children_of_m_infinity(self):
        """f_1 and f_2 of M_infinity for n = 2."""
        M = ext(2, M_INF_2)
        self.assertEqual(
            canonical_serialize(f_tilde(M, 1)),
            "Y1(-1)^(1,-1)*Y1(0)^(0,-1)*Y2(-2)^(1,0)*Y2(-1)^(0,1)",
        )
        self.assertEqual(
            canonical_serialize(f_tilde(M, 2)),
            "Y1(-1)^(1,1)*Y2(-2)^(1,-1)*Y2(-1)^(0,-1)",
        )
        self.assertIs(e_tilde(M, 1), ZERO)
        self.assertEqual((phi(M, 1), eps(M, 1)), (0, 0))

    def test_element_adapter(self):
        """MonomialElement wraps results and reports projected weights."""
        element = MonomialElement(ext(2, M_INF_2))
        self.assertTrue(element.infinite)
        child = element.apply_f(1)
        self.assertEqual(child.weight(), Weight((-2, 1)))
        self.assertEqual(child.apply_e(1).canonical_key(), M_INF_2)
        self.assertIs(element.apply_e(2), ZERO)
        finite = MonomialElement(plain(2, "Y1(-1)^1"), infinite=False)
        self.assertFalse(finite.infinite)
        with self.assertRaises(DomainError):
            MonomialElement(plain(2, "Y1(-1)^1"), CMatrix.default(3))


if __name__ == "__main__":
    unittest.main()
