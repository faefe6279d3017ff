"""Plain and extended Nakajima monomials with their generic crystal structure.

A monomial is a finite product of variables Y_i(m)^y. Plain monomials carry
integer exponents; extended ones carry pairs (y0, y1) ordered
lexicographically. The operators here are the reference implementation
that the signature-rule operators of the M(infinity) and M(lambda) models
are checked against.

Usage:
    c = CMatrix.default(2)
    m = ExtMonomial(2, [(1, -1, ExpPair(1, 0)), (2, -2, ExpPair(1, 0))])
    child = f_tilde(m, 1, c)
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Any, ClassVar, Iterable, Optional, Union

from .cartan import ExtWeight, Weight, check_index, check_rank, checked_int
from .crystal_graph import ZERO, CrystalElement
from .exceptions import DomainError


@dataclass(frozen=True, order=True)
class ExpPair:
    """Exponent of an extended variable; the dataclass order is lexicographic."""

    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", checked_int(self.a))
        object.__setattr__(self, "b", checked_int(self.b))

    def __add__(self, other: ExpPair) -> ExpPair:
        return ExpPair(self.a + other.a, self.b + other.b)

    def __sub__(self, other: ExpPair) -> ExpPair:
        return ExpPair(self.a - other.a, self.b - other.b)

    def __neg__(self) -> ExpPair:
        return ExpPair(-self.a, -self.b)

    def scale(self, k: int) -> ExpPair:
        return ExpPair(k * self.a, k * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


PAIR_ZERO = ExpPair(0, 0)

Exponent = Union[int, ExpPair]


# ---------------------------------------------------------------------------
# c-matrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CMatrix:
    """Off-diagonal integers with c_ij + c_ji = 1.

    Only the upper triangle is stored, row-major over pairs i < j; the lower
    triangle is implied.
    """

    n: int
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        check_rank(self.n)
        upper = tuple(checked_int(v) for v in self.upper)
        expected = self.n * (self.n - 1) // 2
        if len(upper) != expected:
            raise DomainError(f"c-matrix for n={self.n} needs {expected} upper entries, got {len(upper)}")
        object.__setattr__(self, "upper", upper)

    def _position(self, i: int, j: int) -> int:
        # rows 1..i-1 hold n-1, n-2, ... entries
        return (i - 1) * self.n - (i - 1) * i // 2 + (j - i - 1)

    def entry(self, i: int, j: int) -> int:
        check_index(self.n, i)
        check_index(self.n, j)
        if i == j:
            raise DomainError("c-matrix has no diagonal entries")
        if i < j:
            return self.upper[self._position(i, j)]
        return 1 - self.upper[self._position(j, i)]

    __call__ = entry

    def validate(self) -> bool:
        for i, j in combinations(range(1, self.n + 1), 2):
            if self.entry(i, j) + self.entry(j, i) != 1:
                return False
        return True

    @classmethod
    def default(cls, n: int) -> CMatrix:
        """c_ij = 1 for i < j and 0 for i > j."""
        check_rank(n)
        return cls(n, (1,) * (n * (n - 1) // 2))

    @classmethod
    def from_upper(cls, n: int, values: Iterable[int]) -> CMatrix:
        return cls(n, tuple(values))

    @classmethod
    def from_bits(cls, n: int, bits: str) -> CMatrix:
        if any(ch not in "01" for ch in bits):
            raise DomainError(f"c-matrix bit string must contain only 0/1, got {bits!r}")
        return cls(n, tuple(int(ch) for ch in bits))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> CMatrix:
        check_rank(n)
        return cls(n, tuple(rng.randint(-2, 2) for _ in range(n * (n - 1) // 2)))

    def describe(self) -> str:
        return ",".join(str(v) for v in self.upper) or "-"


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    """Finite product of Y_i(m)^e in canonical form.

    `factors` is sorted by (i, m) and holds no zero exponent. Any iterable
    of (i, m, e) triples is accepted on construction; repeated keys are
    multiplied together.
    """

    n: int
    factors: tuple[tuple[int, int, Any], ...] = ()

    extended: ClassVar[bool] = False

    def __post_init__(self) -> None:
        check_rank(self.n)
        collected: dict[tuple[int, int], Any] = {}
        for i, m, e in self.factors:
            check_index(self.n, i)
            key = (int(i), checked_int(m))
            collected[key] = collected.get(key, self.zero_exponent()) + self._coerce(e)
        canonical = tuple(
            (i, m, e) for (i, m), e in sorted(collected.items()) if e != self.zero_exponent()
        )
        object.__setattr__(self, "factors", canonical)

    @classmethod
    def zero_exponent(cls) -> Exponent:
        raise NotImplementedError()

    @classmethod
    def _coerce(cls, e: Any) -> Exponent:
        raise NotImplementedError()

    @classmethod
    def _scale(cls, e: Exponent, k: int) -> Exponent:
        raise NotImplementedError()

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls(n, ())

    @classmethod
    def from_exponents(cls, n: int, exps: dict[tuple[int, int], Any]) -> Monomial:
        return cls(n, tuple((i, m, e) for (i, m), e in exps.items()))

    def exponent(self, i: int, m: int) -> Exponent:
        for fi, fm, e in self.factors:
            if fi == i and fm == m:
                return e
        return self.zero_exponent()

    def as_dict(self) -> dict[tuple[int, int], Exponent]:
        return {(i, m): e for i, m, e in self.factors}

    def variables_of(self, i: int) -> list[tuple[int, Exponent]]:
        """Support of index i as (m, exponent), increasing in m."""
        return [(m, e) for fi, m, e in self.factors if fi == i]

    def is_one(self) -> bool:
        return not self.factors

    def _check_compatible(self, other: Monomial) -> None:
        if type(other) is not type(self):
            raise DomainError(f"cannot multiply {type(self).__name__} by {type(other).__name__}")
        if other.n != self.n:
            raise DomainError(f"rank mismatch: {self.n} vs {other.n}")

    def __mul__(self, other: Monomial) -> Monomial:
        self._check_compatible(other)
        return type(self)(self.n, self.factors + other.factors)

    def inverse(self) -> Monomial:
        return type(self)(self.n, tuple((i, m, -e) for i, m, e in self.factors))

    def __pow__(self, k: int) -> Monomial:
        return type(self)(self.n, tuple((i, m, self._scale(e, k)) for i, m, e in self.factors))

    def __str__(self) -> str:
        return canonical_serialize(self)


@dataclass(frozen=True)
class PlainMonomial(Monomial):
    extended: ClassVar[bool] = False

    @classmethod
    def zero_exponent(cls) -> int:
        return 0

    @classmethod
    def _coerce(cls, e: Any) -> int:
        if isinstance(e, ExpPair) or isinstance(e, bool):
            raise DomainError(f"plain exponent must be an integer, got {e!r}")
        return checked_int(e)

    @classmethod
    def _scale(cls, e: int, k: int) -> int:
        return checked_int(e * k)


@dataclass(frozen=True)
class ExtMonomial(Monomial):
    extended: ClassVar[bool] = True

    @classmethod
    def zero_exponent(cls) -> ExpPair:
        return PAIR_ZERO

    @classmethod
    def _coerce(cls, e: Any) -> ExpPair:
        if isinstance(e, ExpPair):
            return e
        if isinstance(e, (tuple, list)) and len(e) == 2:
            return ExpPair(int(e[0]), int(e[1]))
        raise DomainError(f"extended exponent must be a pair, got {e!r}")

    @classmethod
    def _scale(cls, e: ExpPair, k: int) -> ExpPair:
        return e.scale(k)


def _monomial_class(extended: bool) -> type[Monomial]:
    return ExtMonomial if extended else PlainMonomial


# ---------------------------------------------------------------------------
# Crystal structure
# ---------------------------------------------------------------------------

def a_multiplier(c: CMatrix, i: int, m: int, sign: int = 1, extended: bool = False) -> Monomial:
    """A_i(m)^sign = Y_i(m) Y_i(m+1) prod_{j != i} Y_j(m + c_ji)^{a_ji}, raised to sign."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    n = c.n
    check_index(n, i)

    def exp(v: int) -> Exponent:
        return ExpPair(0, v) if extended else v

    factors = [(i, m, exp(sign)), (i, m + 1, exp(sign))]
    for j in (i - 1, i + 1):
        # a_ji = -1 exactly for the neighbours of i in the A_n diagram
        if 1 <= j <= n:
            factors.append((j, m + c.entry(j, i), exp(-sign)))
    return _monomial_class(extended)(n, tuple(factors))


def weight(M: Monomial) -> Union[Weight, ExtWeight]:
    """wt for plain monomials, the pair-valued wt~ for extended ones."""
    sums = [M.zero_exponent() for _ in range(M.n)]
    for i, _, e in M.factors:
        sums[i - 1] = sums[i - 1] + e
    if M.extended:
        return ExtWeight(tuple((s.a, s.b) for s in sums))
    return Weight(tuple(sums))


def projected_weight(M: Monomial) -> Weight:
    wt = weight(M)
    return wt.projected() if isinstance(wt, ExtWeight) else wt


def _prefix_scan(M: Monomial, i: int) -> tuple[list[tuple[int, Exponent]], list[Exponent]]:
    check_index(M.n, i)
    support = M.variables_of(i)
    prefix = [M.zero_exponent()]
    for _, e in support:
        prefix.append(prefix[-1] + e)
    return support, prefix


def phi_tilde(M: Monomial, i: int) -> Exponent:
    """max over m of sum_{k<=m} y_i(k), the empty prefix included."""
    _, prefix = _prefix_scan(M, i)
    return max(prefix)


def eps_tilde(M: Monomial, i: int) -> Exponent:
    """max over m of -sum_{k>m} y_i(k), the empty suffix included."""
    _, prefix = _prefix_scan(M, i)
    return max(prefix) - prefix[-1]


def _second(e: Exponent) -> int:
    return e.b if isinstance(e, ExpPair) else e


def phi(M: Monomial, i: int) -> int:
    """Integer phi_i; for extended monomials the second component at the maximising prefix."""
    return _second(phi_tilde(M, i))


def eps(M: Monomial, i: int) -> int:
    return _second(eps_tilde(M, i))


def m_f(M: Monomial, i: int) -> int:
    """Least m at which the prefix sum reaches phi~_i(M).

    Raises:
        DomainError: phi~_i(M) is zero
    """
    support, prefix = _prefix_scan(M, i)
    best = max(prefix)
    if not best > M.zero_exponent():
        raise DomainError(f"m_f undefined: phi_{i} vanishes on {canonical_serialize(M)}")
    j = next(k for k in range(1, len(prefix)) if prefix[k] == best)
    return support[j - 1][0]


def m_e(M: Monomial, i: int) -> int:
    """Greatest m at which the suffix sum reaches eps~_i(M).

    Raises:
        DomainError: eps~_i(M) is zero
    """
    support, prefix = _prefix_scan(M, i)
    best = max(prefix)
    if not best - prefix[-1] > M.zero_exponent():
        raise DomainError(f"m_e undefined: eps_{i} vanishes on {canonical_serialize(M)}")
    j = max(k for k in range(len(prefix)) if prefix[k] == best)
    # j < len(support) because the full prefix does not attain the maximum
    return support[j][0] - 1


def f_tilde(M: Monomial, i: int, c: Optional[CMatrix] = None) -> Union[Monomial, Any]:
    c = c or CMatrix.default(M.n)
    if not phi_tilde(M, i) > M.zero_exponent():
        return ZERO
    return M * a_multiplier(c, i, m_f(M, i), -1, M.extended)


def e_tilde(M: Monomial, i: int, c: Optional[CMatrix] = None) -> Union[Monomial, Any]:
    c = c or CMatrix.default(M.n)
    if not eps_tilde(M, i) > M.zero_exponent():
        return ZERO
    return M * a_multiplier(c, i, m_e(M, i), 1, M.extended)


def embed_plain(M: PlainMonomial) -> ExtMonomial:
    """Y_i(m)^y -> Y_i(m)^(0,y)."""
    return ExtMonomial(M.n, tuple((i, m, ExpPair(0, e)) for i, m, e in M.factors))


def project_ext(M: ExtMonomial) -> PlainMonomial:
    """Inverse of `embed_plain`.

    Raises:
        DomainError: some exponent has a nonzero first component
    """
    for i, m, e in M.factors:
        if e.a != 0:
            raise DomainError(f"Y{i}({m}) has first exponent component {e.a}; cannot project")
    return PlainMonomial(M.n, tuple((i, m, e.b) for i, m, e in M.factors))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(r"Y(\d+)\((-?\d+)\)\^(?:\((-?\d+),(-?\d+)\)|(-?\d+))")


def canonical_serialize(M: Monomial) -> str:
    if M.is_one():
        return "1"
    return "*".join(f"Y{i}({m})^{e}" for i, m, e in M.factors)


def parse_canonical(text: str, n: int, extended: Optional[bool] = None) -> Monomial:
    """Inverse of `canonical_serialize`.

    `extended` is inferred from the exponent format when not given; the
    empty monomial "1" defaults to plain.
    """
    text = text.strip()
    if text == "1":
        return _monomial_class(bool(extended))(n, ())
    factors = []
    kinds = set()
    for chunk in text.split("*"):
        match = _FACTOR_RE.fullmatch(chunk.strip())
        if match is None:
            raise DomainError(f"cannot parse monomial factor {chunk!r}")
        i, m, a, b, plain = match.groups()
        if plain is not None:
            kinds.add(False)
            factors.append((int(i), int(m), int(plain)))
        else:
            kinds.add(True)
            factors.append((int(i), int(m), ExpPair(int(a), int(b))))
    if len(kinds) > 1:
        raise DomainError(f"monomial {text!r} mixes plain and pair exponents")
    inferred = kinds.pop()
    if extended is not None and extended != inferred:
        raise DomainError(f"monomial {text!r} is not {'extended' if extended else 'plain'}")
    return _monomial_class(inferred)(n, tuple(factors))


def monomial_to_dict(M: Monomial) -> dict:
    return {
        "kind": "ext" if M.extended else "plain",
        "n": M.n,
        "factors": [
            {"i": i, "m": m, "e": [e.a, e.b] if isinstance(e, ExpPair) else e}
            for i, m, e in M.factors
        ],
    }


def monomial_from_dict(data: dict) -> Monomial:
    try:
        kind = data["kind"]
        n = int(data["n"])
        raw = data.get("factors", [])
        if kind not in ("ext", "plain"):
            raise DomainError(f"unknown monomial kind {kind!r}")
        factors = []
        for factor in raw:
            e = factor["e"]
            exp = ExpPair(int(e[0]), int(e[1])) if kind == "ext" else int(e)
            factors.append((int(factor["i"]), int(factor["m"]), exp))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise DomainError(f"malformed monomial JSON: {exc}") from exc
    return _monomial_class(kind == "ext")(n, tuple(factors))


# ---------------------------------------------------------------------------
# Crystal element adapter
# ---------------------------------------------------------------------------

class MonomialElement(CrystalElement):
    """A monomial under the generic operators for a fixed c-matrix."""

    def __init__(self, monomial: Monomial, c: Optional[CMatrix] = None, infinite: Optional[bool] = None) -> None:
        self.monomial = monomial
        self.c = c or CMatrix.default(monomial.n)
        if self.c.n != monomial.n:
            raise DomainError(f"c-matrix rank {self.c.n} does not match monomial rank {monomial.n}")
        self.infinite = monomial.extended if infinite is None else infinite

    @property
    def n(self) -> int:
        return self.monomial.n

    def canonical_key(self) -> str:
        return canonical_serialize(self.monomial)

    def _wrap(self, result: Any) -> Any:
        if result is ZERO:
            return ZERO
        return MonomialElement(result, self.c, self.infinite)

    def apply_f(self, i: int) -> Any:
        return self._wrap(f_tilde(self.monomial, i, self.c))

    def apply_e(self, i: int) -> Any:
        return self._wrap(e_tilde(self.monomial, i, self.c))

    def weight(self) -> Weight:
        return projected_weight(self.monomial)

    def eps(self, i: int) -> int:
        return eps(self.monomial, i)

    def phi(self, i: int) -> int:
        return phi(self.monomial, i)


__all__ = [
    "ExpPair",
    "PAIR_ZERO",
    "CMatrix",
    "Monomial",
    "PlainMonomial",
    "ExtMonomial",
    "ZERO",
    "a_multiplier",
    "weight",
    "projected_weight",
    "phi_tilde",
    "eps_tilde",
    "phi",
    "eps",
    "m_f",
    "m_e",
    "f_tilde",
    "e_tilde",
    "embed_plain",
    "project_ext",
    "canonical_serialize",
    "parse_canonical",
    "monomial_to_dict",
    "monomial_from_dict",
    "MonomialElement",
]
