"""Cartan datum of type A_n.

Weights live in the fundamental-weight basis Lambda_1..Lambda_n; simple roots
are the columns of the Cartan matrix in that basis. The shape and dimension
helpers enumerate semistandard tableaux by backtracking and serve as the
independent cardinality oracle for B(lambda).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .exceptions import ArithmeticOverflowError, CartanIndexError, DomainError

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


def checked_int(value: int) -> int:
    """Return `value` unchanged, or raise if it leaves the signed 64-bit range."""
    value = int(value)
    if value < INT64_MIN or value > INT64_MAX:
        raise ArithmeticOverflowError(f"integer {value} exceeds the 64-bit range")
    return value


def check_rank(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"rank must be a positive integer, got {n!r}")
    return n


def check_index(n: int, i: int) -> int:
    if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= n:
        raise CartanIndexError(f"index {i!r} outside the index set 1..{n}")
    return i


@dataclass(frozen=True)
class Rank:
    """Validated rank n of A_n."""

    n: int

    def __post_init__(self) -> None:
        check_rank(self.n)


@dataclass(frozen=True)
class Weight:
    """Integral weight in the Lambda basis; `coeffs[i-1]` is the Lambda_i coefficient."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(checked_int(c) for c in self.coeffs))
        check_rank(len(self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """1-based coefficient lookup."""
        return self.coeffs[check_index(self.n, i) - 1]

    def _same_rank(self, other: Weight) -> None:
        if other.n != self.n:
            raise DomainError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: Weight) -> Weight:
        self._same_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Weight) -> Weight:
        self._same_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coeffs))

    def scale(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coeffs))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_dict(self) -> dict:
        return {"n": self.n, "lambda": list(self.coeffs)}

    @classmethod
    def from_dict(cls, data: dict) -> Weight:
        try:
            coeffs = tuple(int(c) for c in data["lambda"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed weight: {data!r}") from exc
        if "n" in data and int(data["n"]) != len(coeffs):
            raise DomainError(f"weight declares n={data['n']} but has {len(coeffs)} coefficients")
        return cls(coeffs)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class ExtWeight:
    """Weight with integer-pair coefficients, compared lexicographically per entry."""

    coeffs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "coeffs",
            tuple((checked_int(a), checked_int(b)) for a, b in self.coeffs),
        )
        check_rank(len(self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self.coeffs[check_index(self.n, i) - 1]

    def __add__(self, other: ExtWeight) -> ExtWeight:
        if other.n != self.n:
            raise DomainError(f"rank mismatch: {self.n} vs {other.n}")
        return ExtWeight(tuple((a + c, b + d) for (a, b), (c, d) in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: ExtWeight) -> ExtWeight:
        if other.n != self.n:
            raise DomainError(f"rank mismatch: {self.n} vs {other.n}")
        return ExtWeight(tuple((a - c, b - d) for (a, b), (c, d) in zip(self.coeffs, other.coeffs)))

    def projected(self) -> Weight:
        """Second components only: the ordinary weight of an extended monomial."""
        return Weight(tuple(b for _, b in self.coeffs))

    def to_dict(self) -> dict:
        return {"n": self.n, "lambda": [list(pair) for pair in self.coeffs]}


def zero_weight(n: int) -> Weight:
    return Weight((0,) * check_rank(n))


def fundamental_weight(n: int, i: int) -> Weight:
    check_index(check_rank(n), i)
    return Weight(tuple(1 if j == i else 0 for j in range(1, n + 1)))


def cartan_entry(n: int, i: int, j: int) -> int:
    """a_ij of the A_n Cartan matrix."""
    check_rank(n)
    check_index(n, i)
    check_index(n, j)
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def cartan_matrix(n: int) -> np.ndarray:
    check_rank(n)
    matrix = 2 * np.eye(n, dtype=np.int64)
    for k in range(n - 1):
        matrix[k, k + 1] = -1
        matrix[k + 1, k] = -1
    return matrix


def simple_root(n: int, i: int) -> Weight:
    """alpha_i in the Lambda basis, so that <h_j, alpha_i> = a_ji."""
    check_index(check_rank(n), i)
    return Weight(tuple(cartan_entry(n, j, i) for j in range(1, n + 1)))


def pairing(i: int, w: Weight) -> int:
    """<h_i, w>."""
    return w[i]


def root_coordinates(w: Weight) -> tuple[int, ...]:
    """Integers c with w = sum_j c_j alpha_j.

    Raises:
        DomainError: w is not in the root lattice
    """
    matrix = cartan_matrix(w.n)
    target = np.array(w.coeffs, dtype=np.int64)
    solution = np.rint(np.linalg.solve(matrix.astype(float), target.astype(float))).astype(np.int64)
    if not np.array_equal(matrix @ solution, target):
        raise DomainError(f"weight {w} is not in the root lattice")
    return tuple(checked_int(c) for c in solution.tolist())


def root_height(w: Weight) -> int:
    return sum(root_coordinates(w))


def shape_of(lam: Weight) -> tuple[int, ...]:
    """Partition of a dominant weight: row i has length l_i + ... + l_n."""
    if not lam.is_dominant():
        raise DomainError(f"weight {lam} is not dominant")
    rows = [sum(lam.coeffs[i:]) for i in range(lam.n)]
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)


def enumerate_semistandard(shape: Iterable[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every semistandard tableau of `shape` with entries in 1..n+1.

    Cells are filled row by row, left to right; the yield order is
    lexicographic in the row-reading word.
    """
    shape = tuple(int(r) for r in shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    top = n + 1

    def backtrack(pos: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if pos == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        row, col = cells[pos]
        low = 1
        if col > 0:
            low = max(low, grid[row][col - 1])
        if row > 0:
            low = max(low, grid[row - 1][col] + 1)
        # leave room for the strictly increasing entries still to come below
        high = top - (_column_height(shape, col) - 1 - row)
        for value in range(low, high + 1):
            grid[row][col] = value
            yield from backtrack(pos + 1)
        grid[row][col] = 0

    yield from backtrack(0)


def _column_height(shape: tuple[int, ...], col: int) -> int:
    return sum(1 for length in shape if length > col)


def dimension_oracle(lam: Weight) -> int:
    """|B(lambda)| counted by exhaustive tableau enumeration."""
    return sum(1 for _ in enumerate_semistandard(shape_of(lam), lam.n))


def dominant_weights(n: int, max_level: int) -> Iterator[Weight]:
    """Dominant weights with l_1 + ... + l_n <= max_level, in lexicographic order."""
    check_rank(n)
    for coeffs in itertools.product(range(max_level + 1), repeat=n):
        if sum(coeffs) <= max_level:
            yield Weight(coeffs)


__all__ = [
    "Rank",
    "Weight",
    "ExtWeight",
    "checked_int",
    "check_rank",
    "check_index",
    "zero_weight",
    "fundamental_weight",
    "cartan_entry",
    "cartan_matrix",
    "simple_root",
    "pairing",
    "root_coordinates",
    "root_height",
    "shape_of",
    "enumerate_semistandard",
    "dimension_oracle",
    "dominant_weights",
]
