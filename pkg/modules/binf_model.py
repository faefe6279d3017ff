"""Monomial realization M(infinity) of B(infinity) and its X-variable normal form.

A member of M(p_1..p_n; r; infinity) is an extended monomial supported on
Y_i(r-i)^(p_i, a_i^i) and Y_i(r-m)^(0, a_i^m) for 0 <= m < i. Rewritten in
the variables X_k(m) = Y_k(m) Y_{k-1}(m+1)^(-1) it becomes

    prod_{m=1..n} prod_{k=m+1..n+1} X_k(r-m)^(0, b_k^m)
        * prod_i X_i(r-i)^(p_i + ... + p_n, -sum_{k>i} b_k^i)

with every b_k^m >= 0. The b array is a complete coordinate system; it also
counts the k-boxes in row m of the matching marginally large tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Iterator, Optional

from .cartan import Weight, check_index, check_rank, checked_int, simple_root, zero_weight
from .crystal_graph import ZERO, CrystalElement
from .error_dispatcher import ErrorLevel, get_dispatcher
from .exceptions import DomainError, MembershipError
from .monomial_core import ExpPair, ExtMonomial
from .tableau_core import (
    Tableau,
    is_marginally_large,
    reduce_signature,
    tableau_from_counts,
)


def _default_p(n: int, p: Optional[tuple[int, ...]]) -> tuple[int, ...]:
    p = (1,) * n if p is None else tuple(int(v) for v in p)
    if len(p) != n or any(v <= 0 for v in p):
        raise DomainError(f"p must be {n} positive integers, got {p}")
    return p


@dataclass(frozen=True)
class XFormInf:
    """Normal form of an M(p; r; infinity) element.

    `b[i-1]` lists b_{i+1}^i .. b_{n+1}^i.
    """

    n: int
    b: tuple[tuple[int, ...], ...]
    p: tuple[int, ...] = ()
    r: int = 0

    def __post_init__(self) -> None:
        check_rank(self.n)
        object.__setattr__(self, "p", _default_p(self.n, self.p or None))
        rows = tuple(tuple(checked_int(v) for v in row) for row in self.b)
        if len(rows) != self.n or any(len(row) != self.n - i for i, row in enumerate(rows)):
            raise DomainError(f"b array has the wrong triangular shape for n={self.n}: {rows}")
        if any(v < 0 for row in rows for v in row):
            raise DomainError(f"b coefficients must be non-negative: {rows}")
        object.__setattr__(self, "b", rows)
        object.__setattr__(self, "r", checked_int(self.r))

    @classmethod
    def root(cls, n: int, p: Optional[tuple[int, ...]] = None, r: int = 0) -> XFormInf:
        return cls(n, tuple((0,) * (n - i) for i in range(n)), p or (), r)

    @classmethod
    def from_counts(
        cls, n: int, counts: dict[tuple[int, int], int], p: Optional[tuple[int, ...]] = None, r: int = 0
    ) -> XFormInf:
        """From {(k, m): b_k^m}; missing entries are zero."""
        rows = tuple(
            tuple(counts.get((k, m), 0) for k in range(m + 1, n + 2)) for m in range(1, n + 1)
        )
        return cls(n, rows, p or (), r)

    def coefficient(self, k: int, m: int) -> int:
        """b_k^m for k > m."""
        check_index(self.n, m)
        if not m < k <= self.n + 1:
            raise DomainError(f"b_{k}^{m} is not an off-diagonal coefficient")
        return self.b[m - 1][k - m - 1]

    def counts(self) -> dict[tuple[int, int], int]:
        return {
            (k, m): self.coefficient(k, m)
            for m in range(1, self.n + 1)
            for k in range(m + 1, self.n + 2)
        }

    def with_coefficient(self, k: int, m: int, delta: int) -> XFormInf:
        rows = [list(row) for row in self.b]
        rows[m - 1][k - m - 1] += delta
        return XFormInf(self.n, tuple(tuple(row) for row in rows), self.p, self.r)

    def height(self) -> int:
        """Number of f-steps from the root: sum of b_k^m (k - m)."""
        return sum(v * (k - m) for (k, m), v in self.counts().items())

    def canonical_key(self) -> str:
        return "|".join(",".join(str(v) for v in row) for row in self.b)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "p": list(self.p),
            "b": {str(m): list(row) for m, row in enumerate(self.b, start=1)},
        }

    @classmethod
    def from_dict(cls, data: dict) -> XFormInf:
        try:
            n = int(data["n"])
            rows = tuple(tuple(int(v) for v in data["b"][str(m)]) for m in range(1, n + 1))
            return cls(n, rows, tuple(int(v) for v in data.get("p", [1] * n)), int(data.get("r", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed M(infinity) X-form JSON: {exc}") from exc

    def describe(self) -> str:
        """X-variable product, reserved factors last."""
        parts = []
        for m in range(1, self.n + 1):
            for k in range(self.n + 1, m, -1):
                v = self.coefficient(k, m)
                if v:
                    parts.append(f"X{k}({self.r - m})^(0,{v})")
        for i, (u, v) in enumerate(_reserved_exponents(self), start=1):
            parts.append(f"X{i}({self.r - i})^({u},{v})")
        return "*".join(parts)


def _reserved_exponents(X: XFormInf) -> list[tuple[int, int]]:
    return [
        (sum(X.p[i - 1:]), -sum(X.coefficient(k, i) for k in range(i + 1, X.n + 2)))
        for i in range(1, X.n + 1)
    ]


# ---------------------------------------------------------------------------
# Monomial side
# ---------------------------------------------------------------------------

def x_monomial(n: int, k: int, m: int, exponent: tuple[int, int]) -> ExtMonomial:
    """X_k(m)^(u,v) = Y_k(m)^(u,v) Y_{k-1}(m+1)^(-u,-v), with Y_0 = Y_{n+1} = 1."""
    u, v = exponent
    factors = []
    if 1 <= k <= n:
        factors.append((k, m, ExpPair(u, v)))
    if 1 <= k - 1 <= n:
        factors.append((k - 1, m + 1, ExpPair(-u, -v)))
    return ExtMonomial(n, tuple(factors))


def m_infinity(n: int, p: Optional[tuple[int, ...]] = None, r: int = 0) -> ExtMonomial:
    """prod_i Y_i(r-i)^(p_i, 0)."""
    p = _default_p(check_rank(n), p)
    return ExtMonomial(n, tuple((i, r - i, ExpPair(p[i - 1], 0)) for i in range(1, n + 1)))


def from_xform(X: XFormInf) -> ExtMonomial:
    result = ExtMonomial.one(X.n)
    for m in range(1, X.n + 1):
        for k in range(m + 1, X.n + 2):
            v = X.coefficient(k, m)
            if v:
                result = result * x_monomial(X.n, k, X.r - m, (0, v))
    for i, exponent in enumerate(_reserved_exponents(X), start=1):
        result = result * x_monomial(X.n, i, X.r - i, exponent)
    return result


def _a_values(M: ExtMonomial, p: tuple[int, ...], r: int) -> dict[tuple[int, int], int]:
    """a_i^m (second components) after checking the support template.

    Raises:
        MembershipError: support or first components off the template
    """
    n = M.n
    a: dict[tuple[int, int], int] = {(i, m): 0 for i in range(1, n + 1) for m in range(0, i + 1)}
    for i, pos, e in M.factors:
        m = r - pos
        if not 0 <= m <= i:
            raise MembershipError(f"Y{i}({pos}) lies outside the template", "template")
        expected_first = p[i - 1] if m == i else 0
        if e.a != expected_first:
            raise MembershipError(
                f"Y{i}({pos}) has first component {e.a}, expected {expected_first}", "template"
            )
        a[(i, m)] = e.b
    for i in range(1, n + 1):
        if M.exponent(i, r - i).a != p[i - 1]:
            raise MembershipError(f"Y{i}({r - i}) must carry first component {p[i - 1]}", "template")
    return a


def _condition_violation(n: int, a: dict[tuple[int, int], int]) -> Optional[str]:
    for k in range(0, n):
        for i in range(1, n - k + 1):
            if sum(a[(i + j, j)] for j in range(0, k + 1)) > 0:
                return "condition (1)"
    for k in range(0, n):
        lhs = sum(a[(i + j, j)] for i in range(1, n - k + 1) for j in range(0, k + 1))
        rhs = sum(a[(i, i)] for i in range(k + 1, n + 1))
        if lhs != rhs:
            return "condition (2)"
    return None


def membership_violation(
    M: Any, p: Optional[tuple[int, ...]] = None, r: int = 0
) -> Optional[MembershipError]:
    """First failed membership condition of M in M(p; r; infinity), or None."""
    if not isinstance(M, ExtMonomial):
        return MembershipError("M(infinity) members are extended monomials", "template")
    p = _default_p(M.n, p)
    try:
        a = _a_values(M, p, r)
    except MembershipError as exc:
        return exc
    condition = _condition_violation(M.n, a)
    if condition is not None:
        return MembershipError(f"{condition} fails for {M}", condition)
    return None


def is_member(M: Any, p: Optional[tuple[int, ...]] = None, r: int = 0) -> bool:
    return membership_violation(M, p, r) is None


def to_xform(M: ExtMonomial, p: Optional[tuple[int, ...]] = None, r: int = 0) -> XFormInf:
    """Read b_k^m = -sum_{t<m} a_{k-m+t}^t and check the rewrite reproduces M.

    Raises:
        MembershipError: M is not a member, or its normal form is not valid
    """
    violation = membership_violation(M, p, r)
    if violation is not None:
        raise violation
    p = _default_p(M.n, p)
    n = M.n
    a = _a_values(M, p, r)
    counts = {
        (k, m): -sum(a[(k - m + t, t)] for t in range(0, m))
        for m in range(1, n + 1)
        for k in range(m + 1, n + 2)
    }
    if any(v < 0 for v in counts.values()):
        raise MembershipError(f"{M} has a negative X-form coefficient", "normal form")
    X = XFormInf.from_counts(n, counts, p, r)
    if from_xform(X) != M:
        raise MembershipError(f"{M} is not reproduced by its X-form", "normal form")
    return X


# ---------------------------------------------------------------------------
# Signature-rule operators on the X-form
# ---------------------------------------------------------------------------

def xform_signature(X: XFormInf, i: int) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Reduced i-signature; origins are the components (k, m).

    Components are read for m = 1..n and, within m, for k = n+1 down to
    m+1; X_{i+1} contributes 1s and X_i contributes 0s.
    """
    check_index(X.n, i)
    marked = []
    for m in range(1, X.n + 1):
        for k in range(X.n + 1, m, -1):
            v = X.coefficient(k, m)
            if k == i + 1:
                marked.extend([("1", (k, m))] * v)
            elif k == i:
                marked.extend([("0", (k, m))] * v)
    return reduce_signature(marked)


def f_sig(X: XFormInf, i: int) -> XFormInf:
    _, zeros = xform_signature(X, i)
    if not zeros:
        # multiply by A_i(r-i)^(-1): the reserved X_i(r-i) absorbs the change
        return X.with_coefficient(i + 1, i, 1)
    _, m = zeros[0]
    return X.with_coefficient(i, m, -1).with_coefficient(i + 1, m, 1)


def e_sig(X: XFormInf, i: int) -> Any:
    ones, _ = xform_signature(X, i)
    if not ones:
        return ZERO
    _, m = ones[-1]
    result = X.with_coefficient(i + 1, m, -1)
    if m < i:
        result = result.with_coefficient(i, m, 1)
    return result


def xform_root_coefficients(X: XFormInf) -> tuple[int, ...]:
    return tuple(
        sum(X.coefficient(k, l) for l in range(1, j + 1) for k in range(j + 1, X.n + 2))
        for j in range(1, X.n + 1)
    )


def xform_weight(X: XFormInf) -> Weight:
    wt = zero_weight(X.n)
    for j, coeff in enumerate(xform_root_coefficients(X), start=1):
        wt = wt - simple_root(X.n, j).scale(coeff)
    return wt


def xform_eps(X: XFormInf, i: int) -> int:
    ones, _ = xform_signature(X, i)
    return len(ones)


def xform_phi(X: XFormInf, i: int) -> int:
    return xform_eps(X, i) + xform_weight(X)[i]


def phi_shift(X: XFormInf, p: Optional[tuple[int, ...]] = None, r: int = 0) -> XFormInf:
    """Same b array re-targeted to M(p; r; infinity)."""
    return XFormInf(X.n, X.b, _default_p(X.n, p), r)


# ---------------------------------------------------------------------------
# Tableau bridge
# ---------------------------------------------------------------------------

def Phi(T: Tableau) -> XFormInf:
    """b_k^i = number of k-boxes in row i of a marginally large tableau."""
    if not is_marginally_large(T):
        raise DomainError(f"tableau {T} is not marginally large")
    counts = {(k, i): T.count(i, k) for i in range(1, T.n + 1) for k in range(i + 1, T.n + 2)}
    return XFormInf.from_counts(T.n, counts)


def Phi_inverse(X: XFormInf) -> Tableau:
    counts = {(m, k): v for (k, m), v in X.counts().items()}
    return tableau_from_counts(X.n, counts, marginal=True)


# ---------------------------------------------------------------------------
# Enumeration (condition-defined side of the membership oracle)
# ---------------------------------------------------------------------------

def enumerate_xforms(
    n: int, depth: int, p: Optional[tuple[int, ...]] = None, r: int = 0
) -> Iterator[XFormInf]:
    """Every X-form of height at most `depth`."""
    check_rank(n)
    slots = [(k, m) for m in range(1, n + 1) for k in range(m + 1, n + 2)]

    def fill(pos: int, budget: int, chosen: dict[tuple[int, int], int]) -> Iterator[XFormInf]:
        if pos == len(slots):
            yield XFormInf.from_counts(n, chosen, p, r)
            return
        k, m = slots[pos]
        for v in range(0, budget // (k - m) + 1):
            chosen[(k, m)] = v
            yield from fill(pos + 1, budget - v * (k - m), chosen)
        del chosen[(k, m)]

    yield from fill(0, depth, {})


def _root_vectors(n: int, depth: int) -> Iterator[tuple[int, ...]]:
    for c in product(range(depth + 1), repeat=n):
        if sum(c) <= depth:
            yield c


def _index_vectors(length: int, total: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors of `length` entries summing to `total` with L1 norm at most `budget`."""
    if length == 1:
        if abs(total) <= budget:
            yield (total,)
        return
    for v in range(-budget, budget + 1):
        rest = budget - abs(v)
        if abs(total - v) > rest:
            continue
        for tail in _index_vectors(length - 1, total - v, rest):
            yield (v,) + tail


def enumerate_members(
    n: int, depth: int, p: Optional[tuple[int, ...]] = None, r: int = 0
) -> Iterator[ExtMonomial]:
    """Template monomials satisfying conditions (1) and (2), up to height `depth`.

    This walks the a-coefficients directly, never the X-form. For a root
    vector c, index i carries a_i^0..a_i^i summing to the i-th weight
    coordinate, with sum |a_i^m| <= 2c_i + c_{i-1} + c_{i+1}: each f_j
    multiplies by an A_j(m)^(-1), which puts two unit exponents on index j
    and one on each neighbour. a_i^0 <= 0 is the k = 0 case of condition (1).
    """
    p = _default_p(check_rank(n), p)
    found = 0
    for coeffs in _root_vectors(n, depth):
        c = (0,) + coeffs + (0,)
        target = zero_weight(n)
        for j, cj in enumerate(coeffs, start=1):
            target = target - simple_root(n, j).scale(cj)
        per_index = [
            [
                vec
                for vec in _index_vectors(i + 1, target[i], 2 * c[i] + c[i - 1] + c[i + 1])
                if vec[0] <= 0
            ]
            for i in range(1, n + 1)
        ]
        for choice in product(*per_index):
            a = {(i, m): v for i, vec in enumerate(choice, start=1) for m, v in enumerate(vec)}
            if _condition_violation(n, a) is None:
                found += 1
                yield ExtMonomial(
                    n,
                    tuple(
                        (i, r - m, ExpPair(p[i - 1] if m == i else 0, v))
                        for (i, m), v in a.items()
                    ),
                )
    get_dispatcher().emit(
        ErrorLevel.INFO,
        "membership enumeration finished",
        context="binf_model.enumerate_members",
        data={"n": n, "depth": depth, "members": found},
    )


# ---------------------------------------------------------------------------
# Crystal element adapter
# ---------------------------------------------------------------------------

class XFormInfElement(CrystalElement):
    infinite = True

    def __init__(self, xform: XFormInf) -> None:
        self.xform = xform

    @property
    def n(self) -> int:
        return self.xform.n

    def canonical_key(self) -> str:
        return self.xform.canonical_key()

    def apply_f(self, i: int) -> Any:
        return XFormInfElement(f_sig(self.xform, i))

    def apply_e(self, i: int) -> Any:
        result = e_sig(self.xform, i)
        return ZERO if result is ZERO else XFormInfElement(result)

    def weight(self) -> Weight:
        return xform_weight(self.xform)

    def eps(self, i: int) -> int:
        return xform_eps(self.xform, i)

    def phi(self, i: int) -> int:
        return xform_phi(self.xform, i)


__all__ = [
    "XFormInf",
    "x_monomial",
    "m_infinity",
    "from_xform",
    "membership_violation",
    "is_member",
    "to_xform",
    "xform_signature",
    "f_sig",
    "e_sig",
    "xform_root_coefficients",
    "xform_weight",
    "xform_eps",
    "xform_phi",
    "phi_shift",
    "Phi",
    "Phi_inverse",
    "enumerate_xforms",
    "enumerate_members",
    "XFormInfElement",
]
