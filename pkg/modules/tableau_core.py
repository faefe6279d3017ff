"""Tableau realizations of B(lambda) and B(infinity) for A_n.

Semistandard tableaux of shape lambda realize B(lambda); marginally large
tableaux realize B(infinity). Both crystal structures read the tableau in
the far-eastern order (columns right to left, each top to bottom) and act
through the i-signature of that word.
"""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from .cartan import Weight, check_index, check_rank, shape_of, simple_root, zero_weight
from .crystal_graph import ZERO, CrystalElement
from .exceptions import DomainError, TableauError


@dataclass(frozen=True)
class Tableau:
    """Row-list tableau with entries in 1..n+1; trailing empty rows are dropped."""

    n: int
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        check_rank(self.n)
        rows = [tuple(int(x) for x in row) for row in self.rows]
        while rows and not rows[-1]:
            rows.pop()
        object.__setattr__(self, "rows", tuple(rows))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def row(self, r: int) -> tuple[int, ...]:
        """1-based row; rows past the last are empty."""
        return self.rows[r - 1] if 1 <= r <= len(self.rows) else ()

    def count(self, r: int, k: int) -> int:
        """Number of k-boxes in row r."""
        return self.row(r).count(k)

    def boxes(self) -> int:
        return sum(self.shape)

    def replace(self, r: int, c: int, value: int) -> Tableau:
        """Copy with the box at 0-based (r, c) set to `value`."""
        rows = [list(row) for row in self.rows]
        rows[r][c] = value
        return Tableau(self.n, tuple(tuple(row) for row in rows))

    def canonical_key(self) -> str:
        return json.dumps([list(row) for row in self.rows], separators=(",", ":"))

    def render(self) -> str:
        if not self.rows:
            return "(empty)"
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    def to_dict(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> Tableau:
        try:
            return cls(int(data["n"]), tuple(tuple(int(x) for x in row) for row in data["rows"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed tableau JSON: {exc}") from exc

    def __str__(self) -> str:
        return self.canonical_key()


@dataclass(frozen=True)
class Box:
    """One box of a reading word; `row` and `col` are 0-based."""

    entry: int
    row: int
    col: int


@dataclass(frozen=True)
class Signature:
    """Reduced i-signature: surviving 1s (left) then surviving 0s (right)."""

    ones: tuple[Box, ...]
    zeros: tuple[Box, ...]

    @property
    def symbols(self) -> str:
        return "1" * len(self.ones) + "0" * len(self.zeros)

    def leftmost_zero(self) -> Optional[Box]:
        return self.zeros[0] if self.zeros else None

    def rightmost_one(self) -> Optional[Box]:
        return self.ones[-1] if self.ones else None


# ---------------------------------------------------------------------------
# Shape checks
# ---------------------------------------------------------------------------

def validate(T: Tableau, lam: Optional[Weight] = None) -> bool:
    """True iff T is semistandard (and of shape lambda when given)."""
    top = T.n + 1
    for r, row in enumerate(T.rows):
        if not row:
            return False
        if any(x < 1 or x > top for x in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if r > 0:
            above = T.rows[r - 1]
            if len(row) > len(above):
                return False
            if any(above[c] >= row[c] for c in range(len(row))):
                return False
    if lam is not None:
        if lam.n != T.n or not lam.is_dominant():
            return False
        if T.shape != shape_of(lam):
            return False
    return True


def is_large(T: Tableau) -> bool:
    if not validate(T) or len(T.rows) != T.n:
        return False
    return all(T.count(i, i) > len(T.row(i + 1)) for i in range(1, T.n + 1))


def is_marginally_large(T: Tableau) -> bool:
    if not is_large(T):
        return False
    return all(T.count(i, i) == len(T.row(i + 1)) + 1 for i in range(1, T.n + 1))


def t_infinity(n: int) -> Tableau:
    """The marginally large tableau with only i-boxes in row i."""
    check_rank(n)
    return Tableau(n, tuple((i,) * (n - i + 1) for i in range(1, n + 1)))


def highest_weight_tableau(lam: Weight) -> Tableau:
    return Tableau(lam.n, tuple((r,) * length for r, length in enumerate(shape_of(lam), start=1)))


# ---------------------------------------------------------------------------
# Reading word and signature rule
# ---------------------------------------------------------------------------

def far_eastern_reading(T: Tableau) -> tuple[Box, ...]:
    width = len(T.rows[0]) if T.rows else 0
    word = []
    for c in range(width - 1, -1, -1):
        for r, row in enumerate(T.rows):
            if c < len(row):
                word.append(Box(row[c], r, c))
    return tuple(word)


def reduce_signature(marked: Iterable[tuple[str, Any]]) -> tuple[tuple[Any, ...], tuple[Any, ...]]:
    """Cancel (0, 1) pairs in a word of ("0"|"1", origin) symbols.

    A 1 cancels the nearest uncancelled 0 to its left. Returns the origins
    of the surviving 1s and 0s, each in word order.
    """
    ones: list[Any] = []
    open_zeros: list[Any] = []
    for symbol, origin in marked:
        if symbol == "0":
            open_zeros.append(origin)
        elif open_zeros:
            open_zeros.pop()
        else:
            ones.append(origin)
    return tuple(ones), tuple(open_zeros)


def i_signature(T: Tableau, i: int) -> Signature:
    check_index(T.n, i)
    marked = []
    for box in far_eastern_reading(T):
        if box.entry == i:
            marked.append(("0", box))
        elif box.entry == i + 1:
            marked.append(("1", box))
    ones, zeros = reduce_signature(marked)
    return Signature(ones, zeros)


# ---------------------------------------------------------------------------
# B(lambda)
# ---------------------------------------------------------------------------

def f_bla(T: Tableau, i: int) -> Any:
    box = i_signature(T, i).leftmost_zero()
    if box is None:
        return ZERO
    return T.replace(box.row, box.col, box.entry + 1)


def e_bla(T: Tableau, i: int) -> Any:
    box = i_signature(T, i).rightmost_one()
    if box is None:
        return ZERO
    return T.replace(box.row, box.col, box.entry - 1)


def content_weight(T: Tableau) -> Weight:
    """Sum of box weights: coefficient i is #i - #(i+1)."""
    flat = [x for row in T.rows for x in row]
    return Weight(tuple(flat.count(i) - flat.count(i + 1) for i in range(1, T.n + 1)))


def wt_bla(T: Tableau) -> Weight:
    return content_weight(T)


def eps_bla(T: Tableau, i: int) -> int:
    return len(i_signature(T, i).ones)


def phi_bla(T: Tableau, i: int) -> int:
    return len(i_signature(T, i).zeros)


# ---------------------------------------------------------------------------
# T(infinity)
# ---------------------------------------------------------------------------

def _require_marginal(T: Tableau) -> None:
    if not is_marginally_large(T):
        raise TableauError(f"tableau {T} is not marginally large")


def _insert_column(T: Tableau, height: int) -> Tableau:
    """Add one k-box to row k for k = 1..height, keeping rows sorted."""
    rows = [list(row) for row in T.rows]
    for k in range(1, height + 1):
        bisect.insort(rows[k - 1], k)
    return Tableau(T.n, tuple(tuple(row) for row in rows))


def _remove_column(T: Tableau, height: int) -> Tableau:
    rows = [list(row) for row in T.rows]
    for k in range(1, height + 1):
        rows[k - 1].remove(k)
    return Tableau(T.n, tuple(tuple(row) for row in rows))


def f_tinf(T: Tableau, i: int) -> Tableau:
    """f_i on T(infinity); never ZERO because the signature always keeps a 0."""
    _require_marginal(T)
    box = i_signature(T, i).leftmost_zero()
    if box is None:
        raise TableauError(f"signature of {T} has no 0 for i={i}")
    changed = T.replace(box.row, box.col, box.entry + 1)
    if not is_large(changed):
        # the column 1..i goes left of the changed box; rows are sorted, so
        # inserting each k into row k places it there
        changed = _insert_column(changed, i)
    return changed


def e_tinf(T: Tableau, i: int) -> Any:
    _require_marginal(T)
    box = i_signature(T, i).rightmost_one()
    if box is None:
        return ZERO
    changed = T.replace(box.row, box.col, box.entry - 1)
    if is_large(changed) and not is_marginally_large(changed):
        changed = _remove_column(changed, i)
    return changed


def box_counts(T: Tableau) -> dict[tuple[int, int], int]:
    """{(row l, entry k): number of k-boxes in row l}, zero counts omitted."""
    counts: dict[tuple[int, int], int] = {}
    for l, row in enumerate(T.rows, start=1):
        for k in row:
            counts[(l, k)] = counts.get((l, k), 0) + 1
    return counts


def tableau_from_counts(n: int, counts: dict[tuple[int, int], int], marginal: bool = False) -> Tableau:
    """Rebuild a tableau from box counts.

    With `marginal`, diagonal counts are ignored and derived bottom-up so
    that row l holds one more l-box than row l+1 has boxes.
    """
    check_rank(n)
    rows: list[tuple[int, ...]] = [()] * n
    below = 0
    for l in range(n, 0, -1):
        row: list[int] = []
        diagonal = below + 1 if marginal else counts.get((l, l), 0)
        row.extend([l] * diagonal)
        for k in range(l + 1, n + 2):
            row.extend([k] * counts.get((l, k), 0))
        rows[l - 1] = tuple(row)
        below = len(row)
    return Tableau(n, tuple(rows))


def tinf_root_coefficients(T: Tableau) -> tuple[int, ...]:
    """c_j = sum_{l <= j} sum_{k > j} b_k^l, so that wt(T) = -sum_j c_j alpha_j."""
    n = T.n
    return tuple(
        sum(T.count(l, k) for l in range(1, j + 1) for k in range(j + 1, n + 2))
        for j in range(1, n + 1)
    )


def wt_tinf(T: Tableau) -> Weight:
    wt = zero_weight(T.n)
    for j, coeff in enumerate(tinf_root_coefficients(T), start=1):
        wt = wt - simple_root(T.n, j).scale(coeff)
    return wt


def eps_tinf(T: Tableau, i: int) -> int:
    return len(i_signature(T, i).ones)


def phi_tinf(T: Tableau, i: int) -> int:
    return eps_tinf(T, i) + wt_tinf(T)[i]


# ---------------------------------------------------------------------------
# Crystal element adapters
# ---------------------------------------------------------------------------

class TableauLaElement(CrystalElement):
    """Semistandard tableau of shape lambda in B(lambda)."""

    infinite = False

    def __init__(self, tableau: Tableau, lam: Weight, check: bool = True) -> None:
        if check and not validate(tableau, lam):
            raise TableauError(f"{tableau} is not a semistandard tableau of shape {shape_of(lam)}")
        self.tableau = tableau
        self.lam = lam

    @property
    def n(self) -> int:
        return self.tableau.n

    def canonical_key(self) -> str:
        return self.tableau.canonical_key()

    def _wrap(self, result: Any) -> Any:
        return ZERO if result is ZERO else TableauLaElement(result, self.lam, check=False)

    def apply_f(self, i: int) -> Any:
        return self._wrap(f_bla(self.tableau, i))

    def apply_e(self, i: int) -> Any:
        return self._wrap(e_bla(self.tableau, i))

    def weight(self) -> Weight:
        return wt_bla(self.tableau)

    def eps(self, i: int) -> int:
        return eps_bla(self.tableau, i)

    def phi(self, i: int) -> int:
        return phi_bla(self.tableau, i)


class TableauInfElement(CrystalElement):
    """Marginally large tableau in T(infinity)."""

    infinite = True

    def __init__(self, tableau: Tableau, check: bool = True) -> None:
        if check:
            _require_marginal(tableau)
        self.tableau = tableau

    @property
    def n(self) -> int:
        return self.tableau.n

    def canonical_key(self) -> str:
        return self.tableau.canonical_key()

    def apply_f(self, i: int) -> Any:
        return TableauInfElement(f_tinf(self.tableau, i), check=False)

    def apply_e(self, i: int) -> Any:
        result = e_tinf(self.tableau, i)
        return ZERO if result is ZERO else TableauInfElement(result, check=False)

    def weight(self) -> Weight:
        return wt_tinf(self.tableau)

    def eps(self, i: int) -> int:
        return eps_tinf(self.tableau, i)

    def phi(self, i: int) -> int:
        return phi_tinf(self.tableau, i)


__all__ = [
    "Tableau",
    "Box",
    "Signature",
    "validate",
    "is_large",
    "is_marginally_large",
    "t_infinity",
    "highest_weight_tableau",
    "far_eastern_reading",
    "reduce_signature",
    "i_signature",
    "f_bla",
    "e_bla",
    "content_weight",
    "wt_bla",
    "eps_bla",
    "phi_bla",
    "f_tinf",
    "e_tinf",
    "box_counts",
    "tableau_from_counts",
    "tinf_root_coefficients",
    "wt_tinf",
    "eps_tinf",
    "phi_tinf",
    "TableauLaElement",
    "TableauInfElement",
]
