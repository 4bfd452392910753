"""Partitions, Young tableaux, standard enumeration, and shape classification.

Boxes are indexed (row, column), 1-based, English convention: row 1 is the
longest.  A tableau is a bijective filling of the diagram by 1..n.  Letter
orders: natural (1 < 2 < ... < n) or inverse (n before n-1 before ... 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial


@dataclass(frozen=True)
class Partition:
    """A partition of n: weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def is_trivial(self) -> bool:
        """The one-row partition (n), excluded from Specht-ideal statements."""
        return len(self.parts) == 1

    def conjugate(self) -> "Partition":
        return Partition(
            tuple(
                sum(1 for p in self.parts if p > i) for i in range(self.parts[0])
            )
        )

    @staticmethod
    def from_text(text: str) -> "Partition":
        try:
            parts = tuple(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc
        return Partition(parts)

    def text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return f"({self.text()})"


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")

    def gen(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    return [Partition(parts) for parts in gen(n, n, ())]


def cm_shape_class(shape: Partition) -> str:
    """Classify a shape as hook / two_row / aa1 / other.

    These are the only shapes whose Specht-ideal quotients can be
    Cohen-Macaulay; overlaps resolve in that priority, so (a, 1) is a hook.
    """
    if shape.is_trivial:
        raise ValueError("the trivial one-row shape is excluded")
    parts = shape.parts
    if parts[1] == 1:
        return "hook"
    if len(parts) == 2:
        return "two_row"
    if len(parts) == 3 and parts[0] == parts[1] and parts[2] == 1:
        return "aa1"
    return "other"


@dataclass(frozen=True)
class LetterOrder:
    """Total order on the letters 1..n: natural or inverse."""

    kind: str = "natural"

    def __post_init__(self):
        if self.kind not in ("natural", "inverse"):
            raise ValueError(f"unknown letter order {self.kind!r}")

    def rank(self, letter: int, n: int) -> int:
        """1-based position of the letter in this order."""
        return letter if self.kind == "natural" else n + 1 - letter

    def letter_at(self, rank: int, n: int) -> int:
        return rank if self.kind == "natural" else n + 1 - rank


NATURAL = LetterOrder("natural")
INVERSE = LetterOrder("inverse")


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of a Young diagram by 1..n."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        Partition(tuple(lengths))  # validates the shape
        n = sum(lengths)
        seen = sorted(v for row in rows for v in row)
        if seen != list(range(1, n + 1)):
            raise ValueError(f"entries must be a bijection onto 1..{n}: {rows}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        ncols = len(self.rows[0])
        return [
            tuple(row[j] for row in self.rows if len(row) > j) for j in range(ncols)
        ]

    def is_standard(self, order: LetterOrder = NATURAL) -> bool:
        n = self.n
        rk = lambda v: order.rank(v, n)
        for row in self.rows:
            if any(rk(row[j]) >= rk(row[j + 1]) for j in range(len(row) - 1)):
                return False
        for col in self.columns():
            if any(rk(col[j]) >= rk(col[j + 1]) for j in range(len(col) - 1)):
                return False
        return True

    @staticmethod
    def from_text(text: str) -> "Tableau":
        try:
            rows = tuple(
                tuple(int(t) for t in part.split(",")) for part in text.split("/")
            )
        except ValueError as exc:
            raise ValueError(f"cannot parse tableau {text!r}") from exc
        return Tableau(rows)

    def text(self) -> str:
        return "/".join(",".join(str(v) for v in row) for row in self.rows)

    def __str__(self):
        return self.text()


def _standard_fillings(parts: tuple[int, ...]):
    """Yield row-tuples of natural-standard tableaux of the given shape."""
    n = sum(parts)
    nrows = len(parts)
    grid = [[0] * parts[i] for i in range(nrows)]
    fill = [0] * nrows  # boxes already used in each row

    def place(value: int):
        if value > n:
            yield tuple(tuple(row) for row in grid)
            return
        for i in range(nrows):
            j = fill[i]
            if j >= parts[i]:
                continue
            if i > 0 and fill[i - 1] <= j:
                continue
            grid[i][j] = value
            fill[i] += 1
            yield from place(value + 1)
            fill[i] -= 1

    yield from place(1)


def enumerate_standard_tableaux(
    shape: Partition, order: LetterOrder = NATURAL
) -> list[Tableau]:
    """All standard tableaux of the shape with respect to the letter order."""
    n = shape.n
    out = []
    for rows in _standard_fillings(shape.parts):
        if order.kind == "natural":
            out.append(Tableau(rows))
        else:
            relabeled = tuple(
                tuple(order.letter_at(v, n) for v in row) for row in rows
            )
            out.append(Tableau(relabeled))
    return out


@lru_cache(maxsize=None)
def _hook_count(parts: tuple[int, ...]) -> int:
    n = sum(parts)
    conj = Partition(parts).conjugate().parts
    product = 1
    for i, row_len in enumerate(parts):
        for j in range(row_len):
            product *= (row_len - j) + (conj[j] - i) - 1
    return factorial(n) // product


def count_standard_tableaux(shape: Partition) -> int:
    """Number of standard tableaux, by the hook length formula."""
    return _hook_count(shape.parts)


def normal_form(t: Tableau) -> tuple[Tableau, int]:
    """Canonical representative of the column-equivalence class, with sign.

    Sorts within each column (each in-column transposition flips the sign of
    the Specht polynomial) and then sorts columns of equal length by top
    entry (sign-free).  The Specht polynomial of the result equals
    sign * specht_poly(t).
    """
    cols = t.columns()
    sign = 1
    sorted_cols = []
    for col in cols:
        perm_sign, sorted_col = _sort_sign(col)
        sign *= perm_sign
        sorted_cols.append(sorted_col)
    # stable-sort runs of equal-length columns by top entry
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for col in sorted_cols:
        by_len.setdefault(len(col), []).append(col)
    arranged = []
    for length in sorted(by_len, reverse=True):
        arranged.extend(sorted(by_len[length], key=lambda c: c[0]))
    nrows = max(len(c) for c in arranged)
    rows = tuple(
        tuple(col[i] for col in arranged if len(col) > i) for i in range(nrows)
    )
    return Tableau(rows), sign


def _sort_sign(values: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting the values ascending."""
    vals = list(values)
    sign = 1
    for i in range(len(vals)):
        k = min(range(i, len(vals)), key=vals.__getitem__)
        if k != i:
            vals[i], vals[k] = vals[k], vals[i]
            sign = -sign
    return sign, tuple(vals)
