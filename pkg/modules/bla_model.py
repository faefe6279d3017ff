"""Monomial realization M(lambda) of B(lambda) inside plain Nakajima monomials.

M(r; lambda) is the connected component of M_lambda = prod_i Y_i(r-i)^{l_i}.
Its members are supported on Y_i(r-m), 0 <= m <= i, and are rewritten in the
variables X_k(m) = Y_k(m) Y_{k-1}(m+1)^(-1) as

    prod_{m=1..n} prod_{k=m..n+1} X_k(r-m)^{b_k^m}

where b_k^m is the number of k-boxes in row m of the matching semistandard
tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, Optional

from .cartan import Weight, check_index, checked_int, shape_of
from .crystal_graph import ZERO, CrystalElement, bfs_generate
from .error_dispatcher import ErrorLevel, get_dispatcher
from .exceptions import DomainError, MembershipError
from .monomial_core import CMatrix, MonomialElement, PlainMonomial
from .tableau_core import Tableau, reduce_signature, tableau_from_counts, validate


def _row_lengths(lam: Weight) -> tuple[int, ...]:
    """Shape of lambda padded with zero rows to length n."""
    shape = shape_of(lam)
    return shape + (0,) * (lam.n - len(shape))


@dataclass(frozen=True)
class XFormLa:
    """Normal form of an M(r; lambda) element; `b[m-1]` lists b_m^m .. b_{n+1}^m."""

    lam: Weight
    b: tuple[tuple[int, ...], ...]
    r: int = 0

    def __post_init__(self) -> None:
        if not self.lam.is_dominant():
            raise DomainError(f"weight {self.lam} is not dominant")
        n = self.lam.n
        rows = tuple(tuple(checked_int(v) for v in row) for row in self.b)
        if len(rows) != n or any(len(row) != n - m + 1 for m, row in enumerate(rows)):
            raise DomainError(f"b array has the wrong triangular shape for n={n}: {rows}")
        object.__setattr__(self, "b", rows)
        object.__setattr__(self, "r", checked_int(self.r))
        problem = self.invariant_violation()
        if problem is not None:
            raise MembershipError(f"X-form {rows} violates {problem}", problem)

    @property
    def n(self) -> int:
        return self.lam.n

    def coefficient(self, k: int, m: int) -> int:
        """b_k^m for m <= k <= n+1."""
        check_index(self.n, m)
        if not m <= k <= self.n + 1:
            raise DomainError(f"b_{k}^{m} is outside the X-form")
        return self.b[m - 1][k - m]

    def invariant_violation(self) -> Optional[str]:
        n = self.n
        if any(v < 0 for row in self.b for v in row):
            return "invariant (1)"
        for i, length in enumerate(_row_lengths(self.lam), start=1):
            if sum(self.b[i - 1]) != length:
                return "invariant (2)"
        for j in range(0, n):
            for i in range(1, n - max(1, j) + 1):
                upper = sum(self.coefficient(i + k, i) for k in range(0, j + 1))
                lower = sum(self.coefficient(i + 1 + k, i + 1) for k in range(0, j + 1))
                if upper < lower:
                    return "invariant (3)"
        return None

    @classmethod
    def from_counts(cls, lam: Weight, counts: dict[tuple[int, int], int], r: int = 0) -> XFormLa:
        """From {(k, m): b_k^m}; missing entries are zero."""
        n = lam.n
        rows = tuple(
            tuple(counts.get((k, m), 0) for k in range(m, n + 2)) for m in range(1, n + 1)
        )
        return cls(lam, rows, r)

    def counts(self) -> dict[tuple[int, int], int]:
        return {
            (k, m): self.coefficient(k, m)
            for m in range(1, self.n + 1)
            for k in range(m, self.n + 2)
        }

    def with_moves(self, *moves: tuple[int, int, int]) -> XFormLa:
        counts = self.counts()
        for k, m, delta in moves:
            counts[(k, m)] += delta
        return XFormLa.from_counts(self.lam, counts, self.r)

    def canonical_key(self) -> str:
        return "|".join(",".join(str(v) for v in row) for row in self.b)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda": list(self.lam.coeffs),
            "r": self.r,
            "b": {str(m): list(row) for m, row in enumerate(self.b, start=1)},
        }

    @classmethod
    def from_dict(cls, data: dict) -> XFormLa:
        try:
            n = int(data["n"])
            lam = Weight(tuple(int(v) for v in data["lambda"]))
            rows = tuple(tuple(int(v) for v in data["b"][str(m)]) for m in range(1, n + 1))
            return cls(lam, rows, int(data.get("r", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed M(lambda) X-form JSON: {exc}") from exc

    def describe(self) -> str:
        parts = []
        for m in range(1, self.n + 1):
            for k in range(self.n + 1, m - 1, -1):
                v = self.coefficient(k, m)
                if v:
                    parts.append(f"X{k}({self.r - m})^{v}")
        return "*".join(parts) or "1"


# ---------------------------------------------------------------------------
# Monomial side
# ---------------------------------------------------------------------------

def x_monomial(n: int, k: int, m: int, exponent: int) -> PlainMonomial:
    """X_k(m)^e = Y_k(m)^e Y_{k-1}(m+1)^(-e), with Y_0 = Y_{n+1} = 1."""
    factors = []
    if 1 <= k <= n:
        factors.append((k, m, exponent))
    if 1 <= k - 1 <= n:
        factors.append((k - 1, m + 1, -exponent))
    return PlainMonomial(n, tuple(factors))


def m_lambda(lam: Weight, r: int = 0) -> PlainMonomial:
    """prod_i Y_i(r-i)^{l_i}."""
    if not lam.is_dominant():
        raise DomainError(f"weight {lam} is not dominant")
    return PlainMonomial(lam.n, tuple((i, r - i, l) for i, l in enumerate(lam.coeffs, start=1)))


def from_xform(X: XFormLa) -> PlainMonomial:
    result = PlainMonomial.one(X.n)
    for (k, m), v in X.counts().items():
        if v:
            result = result * x_monomial(X.n, k, X.r - m, v)
    return result


def _a_values(M: PlainMonomial, r: int) -> dict[tuple[int, int], int]:
    n = M.n
    a = {(i, m): 0 for i in range(1, n + 1) for m in range(0, i + 1)}
    for i, pos, e in M.factors:
        m = r - pos
        if not 0 <= m <= i:
            raise MembershipError(f"Y{i}({pos}) lies outside the template", "template")
        a[(i, m)] = e
    return a


def _condition_violation(lam: Weight, a: dict[tuple[int, int], int]) -> Optional[str]:
    n = lam.n
    for i in range(1, n + 1):
        if a[(i, i)] < 0 or a[(i, 0)] > 0:
            return "condition (1)"
        total = sum(a[(i + k, i)] for k in range(0, n - i + 1)) - sum(
            a[(n - i + 1 + k, k)] for k in range(0, i)
        )
        if total != lam[i]:
            return "condition (1)"
    for j in range(1, n):
        for i in range(1, n - j + 1):
            if sum(a[(i + k, k)] for k in range(0, j + 1)) > 0:
                return "condition (2)"
            if sum(a[(i + k, i)] for k in range(0, j + 1)) < 0:
                return "condition (2)"
    return None


def membership_violation(M: Any, lam: Weight, r: int = 0) -> Optional[MembershipError]:
    """First failed membership condition of M in M(r; lambda), or None."""
    if not lam.is_dominant():
        raise DomainError(f"weight {lam} is not dominant")
    if not isinstance(M, PlainMonomial):
        return MembershipError("M(lambda) members are plain monomials", "template")
    if M.n != lam.n:
        return MembershipError(f"monomial rank {M.n} does not match weight rank {lam.n}", "template")
    try:
        a = _a_values(M, r)
    except MembershipError as exc:
        return exc
    condition = _condition_violation(lam, a)
    if condition is not None:
        return MembershipError(f"{condition} fails for {M}", condition)
    return None


def is_member(M: Any, lam: Weight, r: int = 0) -> bool:
    return membership_violation(M, lam, r) is None


def to_xform(M: PlainMonomial, lam: Weight, r: int = 0) -> XFormLa:
    """Off-diagonal b_k^m = -sum_{t<m} a_{k-m+t}^t, diagonal b_i^i = sum_{j>=i} a_j^j.

    Raises:
        MembershipError: M is not a member, or its normal form is not valid
    """
    violation = membership_violation(M, lam, r)
    if violation is not None:
        raise violation
    n = M.n
    a = _a_values(M, r)
    counts: dict[tuple[int, int], int] = {}
    for m in range(1, n + 1):
        counts[(m, m)] = sum(a[(j, j)] for j in range(m, n + 1))
        for k in range(m + 1, n + 2):
            counts[(k, m)] = -sum(a[(k - m + t, t)] for t in range(0, m))
    X = XFormLa.from_counts(lam, counts, r)
    if from_xform(X) != M:
        raise MembershipError(f"{M} is not reproduced by its X-form", "normal form")
    return X


def shift_map(X: XFormLa, r: int) -> XFormLa:
    """M(lambda) -> M(r; lambda), keeping the b array."""
    return XFormLa(X.lam, X.b, r)


# ---------------------------------------------------------------------------
# Signature-rule operators on the X-form
# ---------------------------------------------------------------------------

def xform_signature(X: XFormLa, i: int) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Reduced i-signature over m = 1..n, k = n+1 down to m (diagonal included)."""
    check_index(X.n, i)
    marked = []
    for m in range(1, X.n + 1):
        for k in range(X.n + 1, m - 1, -1):
            v = X.coefficient(k, m)
            if k == i + 1:
                marked.extend([("1", (k, m))] * v)
            elif k == i:
                marked.extend([("0", (k, m))] * v)
    return reduce_signature(marked)


def f_sig(X: XFormLa, i: int) -> Any:
    _, zeros = xform_signature(X, i)
    if not zeros:
        return ZERO
    _, m = zeros[0]
    return X.with_moves((i, m, -1), (i + 1, m, 1))


def e_sig(X: XFormLa, i: int) -> Any:
    ones, _ = xform_signature(X, i)
    if not ones:
        return ZERO
    _, m = ones[-1]
    return X.with_moves((i + 1, m, -1), (i, m, 1))


def xform_weight(X: XFormLa) -> Weight:
    """Coefficient i is (#i-boxes) - (#(i+1)-boxes) of the matching tableau."""
    totals = {k: 0 for k in range(1, X.n + 2)}
    for (k, _), v in X.counts().items():
        totals[k] += v
    return Weight(tuple(totals[i] - totals[i + 1] for i in range(1, X.n + 1)))


def xform_eps(X: XFormLa, i: int) -> int:
    return len(xform_signature(X, i)[0])


def xform_phi(X: XFormLa, i: int) -> int:
    return len(xform_signature(X, i)[1])


# ---------------------------------------------------------------------------
# Tableau bridge
# ---------------------------------------------------------------------------

def Psi(S: Tableau, lam: Weight) -> XFormLa:
    """b_k^i = number of k-boxes in row i."""
    if not validate(S, lam):
        raise DomainError(f"{S} is not a semistandard tableau of shape {shape_of(lam)}")
    counts = {(k, i): S.count(i, k) for i in range(1, S.n + 1) for k in range(i, S.n + 2)}
    return XFormLa.from_counts(lam, counts)


def Psi_inverse(X: XFormLa) -> Tableau:
    counts = {(m, k): v for (k, m), v in X.counts().items()}
    return tableau_from_counts(X.n, counts)


# ---------------------------------------------------------------------------
# Products and enumeration
# ---------------------------------------------------------------------------

def monomial_product(M1: PlainMonomial, M2: PlainMonomial) -> PlainMonomial:
    return M1 * M2


def crystal_monomials(lam: Weight, r: int = 0, c: Optional[CMatrix] = None) -> set[PlainMonomial]:
    """All monomials of M(r; lambda), by closure under the generic operators."""
    graph = bfs_generate(MonomialElement(m_lambda(lam, r), c, infinite=False))
    return {element.monomial for element in graph.elements}


def product_sets(
    mu: Weight, tau: Weight, r: int = 0, c: Optional[CMatrix] = None
) -> tuple[set[PlainMonomial], set[PlainMonomial]]:
    """(M(r; mu) * M(r; tau) as a set, M(r; mu + tau))."""
    left = crystal_monomials(mu, r, c)
    right = crystal_monomials(tau, r, c)
    products = {monomial_product(x, y) for x in left for y in right}
    target = crystal_monomials(mu + tau, r, c)
    get_dispatcher().emit(
        ErrorLevel.INFO,
        "product sets enumerated",
        context="bla_model.product_sets",
        data={"pairs": len(left) * len(right), "products": len(products), "target": len(target)},
    )
    return products, target


def product_set_equal(mu: Weight, tau: Weight, r: int = 0, c: Optional[CMatrix] = None) -> bool:
    products, target = product_sets(mu, tau, r, c)
    return products == target


def enumerate_members(lam: Weight, r: int = 0) -> Iterator[PlainMonomial]:
    """Template monomials satisfying the membership conditions.

    Walks the a-coefficients directly inside the window |a_i^m| <= l_1 + ... + l_n
    (the first row length), with the sign constraints of condition (1)
    applied while filling.
    """
    if not lam.is_dominant():
        raise DomainError(f"weight {lam} is not dominant")
    n = lam.n
    bound = sum(lam.coeffs)
    variables = [(i, m) for i in range(1, n + 1) for m in range(0, i + 1)]
    a: dict[tuple[int, int], int] = {}

    def candidates(i: int, m: int) -> range:
        if m == i:
            return range(0, bound + 1)
        if m == 0:
            return range(-bound, 1)
        return range(-bound, bound + 1)

    def fill(pos: int) -> Iterator[dict[tuple[int, int], int]]:
        if pos == len(variables):
            yield a
            return
        i, m = variables[pos]
        for v in candidates(i, m):
            a[(i, m)] = v
            yield from fill(pos + 1)
        a.pop((i, m), None)

    for values in fill(0):
        if _condition_violation(lam, values) is None:
            yield PlainMonomial(n, tuple((i, r - m, v) for (i, m), v in values.items()))


# ---------------------------------------------------------------------------
# Crystal element adapter
# ---------------------------------------------------------------------------

class XFormLaElement(CrystalElement):
    infinite = False

    def __init__(self, xform: XFormLa) -> None:
        self.xform = xform

    @property
    def n(self) -> int:
        return self.xform.n

    def canonical_key(self) -> str:
        return self.xform.canonical_key()

    def _wrap(self, result: Any) -> Any:
        return ZERO if result is ZERO else XFormLaElement(result)

    def apply_f(self, i: int) -> Any:
        return self._wrap(f_sig(self.xform, i))

    def apply_e(self, i: int) -> Any:
        return self._wrap(e_sig(self.xform, i))

    def weight(self) -> Weight:
        return xform_weight(self.xform)

    def eps(self, i: int) -> int:
        return xform_eps(self.xform, i)

    def phi(self, i: int) -> int:
        return xform_phi(self.xform, i)


def highest_xform(lam: Weight, r: int = 0) -> XFormLa:
    """X-form of M_lambda: b_i^i is the i-th row length."""
    counts = {(i, i): length for i, length in enumerate(_row_lengths(lam), start=1)}
    return XFormLa.from_counts(lam, counts, r)


__all__ = [
    "XFormLa",
    "x_monomial",
    "m_lambda",
    "from_xform",
    "membership_violation",
    "is_member",
    "to_xform",
    "shift_map",
    "xform_signature",
    "f_sig",
    "e_sig",
    "xform_weight",
    "xform_eps",
    "xform_phi",
    "Psi",
    "Psi_inverse",
    "monomial_product",
    "crystal_monomials",
    "product_sets",
    "product_set_equal",
    "enumerate_members",
    "XFormLaElement",
    "highest_xform",
]
