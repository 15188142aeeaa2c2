"""Words, partitions, compositions, and (skew) semistandard tableaux.

Conventions used throughout the package:

* a word is a tuple of positive integers (any letters allowed, no alphabet cap);
* rows of a tableau are numbered from the top, and all public cell
  coordinates are 1-based (row, col);
* weak compositions compare with trailing zeros ignored.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Iterable, Iterator

from .errors import (
    BadShapeError,
    ColumnNotStrictlyIncreasingError,
    RowNotWeaklyIncreasingError,
)

Word = tuple  # tuple[int, ...]


def word(letters: Iterable[int]) -> Word:
    """Normalize and validate a word: every letter a positive integer."""
    w = tuple(letters)
    for a in w:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise ValueError(f"letters must be positive integers, got {a!r}")
    return w


def parse_word(text: str) -> Word:
    """Parse '2,1,2' (canonical) or the bare digit shorthand '212'."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return word(int(part) for part in text.split(","))
    if text.isdigit():
        if "0" in text:
            raise ValueError(f"bare digit form cannot contain 0: {text!r}")
        return tuple(int(ch) for ch in text)
    raise ValueError(f"cannot parse word {text!r}")


def format_word(w: Iterable[int]) -> str:
    return ",".join(str(a) for a in w)


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def trim_zeros(comp: Iterable[int]) -> tuple:
    comp = tuple(comp)
    end = len(comp)
    while end and comp[end - 1] == 0:
        end -= 1
    return comp[:end]


def compositions_equal(a: Iterable[int], b: Iterable[int]) -> bool:
    """Equality of weak compositions, trailing zeros ignored."""
    return trim_zeros(a) == trim_zeros(b)


def dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff a is dominated by b: every prefix sum of a is <= that of b."""
    a = tuple(a)
    b = tuple(b)
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def row_count_filter(row: Iterable[int], u: int, strict: bool) -> int:
    """Number of entries of a weakly increasing row that are < u (strict) or <= u."""
    row = tuple(row)
    return bisect_left(row, u) if strict else bisect_right(row, u)


def _check_rows(rows: tuple) -> None:
    for i, row in enumerate(rows):
        if not row:
            raise BadShapeError(f"row {i + 1} is empty", cell=(i + 1, 1))
        for j, a in enumerate(row):
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise BadShapeError(
                    f"entries must be positive integers, got {a!r}", cell=(i + 1, j + 1)
                )
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                raise RowNotWeaklyIncreasingError(
                    f"{row[j]} > {row[j + 1]}", cell=(i + 1, j + 2)
                )
    for i in range(len(rows) - 1):
        if len(rows[i + 1]) > len(rows[i]):
            raise BadShapeError(
                f"row {i + 2} longer than row {i + 1}", cell=(i + 2, len(rows[i]) + 1)
            )
        for j in range(len(rows[i + 1])):
            if rows[i][j] >= rows[i + 1][j]:
                raise ColumnNotStrictlyIncreasingError(
                    f"{rows[i][j]} >= {rows[i + 1][j]}", cell=(i + 2, j + 1)
                )


class Tableau:
    """A semistandard Young tableau; immutable, hashable.

    ``rows`` is a tuple of row tuples, top row first.  The constructor
    validates semistandardness and raises RowNotWeaklyIncreasing /
    ColumnNotStrictlyIncreasing / BadShape naming the offending cell.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = (), *, validate: bool = True):
        rows = tuple(tuple(r) for r in rows)
        if validate:
            _check_rows(rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _unchecked(cls, rows: tuple) -> "Tableau":
        t = object.__new__(cls)
        object.__setattr__(t, "rows", rows)
        return t

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> tuple:
        """Row i (1-based); missing rows are empty."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else ()

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def columns(self) -> tuple:
        """Columns as tuples, left to right, read top to bottom."""
        if not self.rows:
            return ()
        cols = []
        for j in range(len(self.rows[0])):
            cols.append(tuple(row[j] for row in self.rows if j < len(row)))
        return tuple(cols)

    def row_word(self) -> Word:
        """Reading word: rows concatenated bottom to top."""
        out = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def alpha(self, b: int) -> tuple:
        """Weak composition counting occurrences of b in each row."""
        return tuple(row_count_filter(r, b, False) - row_count_filter(r, b, True) for r in self.rows)

    def max_entry(self) -> int:
        """Largest entry; 0 for the empty tableau."""
        return max((r[-1] for r in self.rows), default=0)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(("Tableau", self.rows))

    def __bool__(self):
        return bool(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]!r})"

    def __str__(self):
        return format_tableau(self)


def validate_ssyt(rows: Iterable[Iterable[int]]) -> Tableau:
    """Validate rows as a semistandard tableau, returning the Tableau."""
    return Tableau(rows)


def shape(t: Tableau) -> tuple:
    return t.shape


def row_word(t: Tableau) -> Word:
    return t.row_word()


def alpha(t: Tableau, b: int) -> tuple:
    return t.alpha(b)


def format_tableau(t: Tableau) -> str:
    """Canonical text form: one bracketed row per line."""
    return "\n".join("[" + ",".join(str(a) for a in row) + "]" for row in t.rows)


def parse_tableau(text: str) -> Tableau:
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        if not (line.startswith("[") and line.endswith("]")):
            raise ValueError(f"cannot parse tableau row {line!r}")
        body = line[1:-1].strip()
        rows.append(tuple(int(p) for p in body.split(",")) if body else ())
    return Tableau(rows)


class SkewTableau:
    """A skew semistandard tableau on the shape outer/inner.

    ``rows[i]`` holds the filled entries of row i+1, occupying columns
    inner_i+1 .. outer_i.  A row may be fully blank (inner_i == outer_i).
    """

    __slots__ = ("outer", "inner", "rows")

    def __init__(
        self,
        outer: Iterable[int] = (),
        inner: Iterable[int] = (),
        rows: Iterable[Iterable[int]] = (),
        *,
        validate: bool = True,
    ):
        outer = tuple(outer)
        inner = trim_zeros(inner)
        rows = tuple(tuple(r) for r in rows)
        if validate:
            self._check(outer, inner, rows)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)

    @staticmethod
    def _check(outer, inner, rows):
        if not is_partition(outer):
            raise BadShapeError(f"outer shape {outer} is not a partition")
        if not is_partition(inner):
            raise BadShapeError(f"inner shape {inner} is not a partition")
        if len(inner) > len(outer):
            raise BadShapeError("inner shape has more rows than outer shape")
        if len(rows) != len(outer):
            raise BadShapeError("need one entry row per outer-shape row")
        for i, out in enumerate(outer):
            inn = inner[i] if i < len(inner) else 0
            if inn > out:
                raise BadShapeError(f"inner row {i + 1} wider than outer", cell=(i + 1, inn))
            if len(rows[i]) != out - inn:
                raise BadShapeError(
                    f"row {i + 1} has {len(rows[i])} entries, expected {out - inn}",
                    cell=(i + 1, inn + 1),
                )
            for j, a in enumerate(rows[i]):
                if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                    raise BadShapeError(
                        f"entries must be positive integers, got {a!r}",
                        cell=(i + 1, inn + j + 1),
                    )
            for j in range(len(rows[i]) - 1):
                if rows[i][j] > rows[i][j + 1]:
                    raise RowNotWeaklyIncreasingError(
                        f"{rows[i][j]} > {rows[i][j + 1]}", cell=(i + 1, inn + j + 2)
                    )
        for i in range(len(outer) - 1):
            upper = inner[i] if i < len(inner) else 0
            lower = inner[i + 1] if i + 1 < len(inner) else 0
            for j in range(lower, outer[i + 1]):
                if j < upper:
                    continue
                a = rows[i][j - upper]
                b = rows[i + 1][j - lower]
                if a >= b:
                    raise ColumnNotStrictlyIncreasingError(f"{a} >= {b}", cell=(i + 2, j + 1))

    def __setattr__(self, name, value):
        raise AttributeError("SkewTableau is immutable")

    def inner_at(self, i: int) -> int:
        """Inner-shape width of row i (1-based); 0 beyond the inner shape."""
        return self.inner[i - 1] if 1 <= i <= len(self.inner) else 0

    def entry(self, i: int, j: int):
        """Entry at 1-based (i, j), or None for a blank/outside cell."""
        if not (1 <= i <= len(self.outer)):
            return None
        inn = self.inner_at(i)
        if inn < j <= self.outer[i - 1]:
            return self.rows[i - 1][j - inn - 1]
        return None

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_straight(self) -> bool:
        return not self.inner

    def to_tableau(self) -> Tableau:
        if self.inner:
            raise BadShapeError("skew tableau with nonempty inner shape")
        return Tableau(r for r in self.rows if r)

    def cells(self) -> Iterator[tuple]:
        """Filled cells as (i, j, entry), 1-based, row-major."""
        for i, row in enumerate(self.rows):
            inn = self.inner[i] if i < len(self.inner) else 0
            for j, a in enumerate(row):
                yield (i + 1, inn + j + 1, a)

    def __eq__(self, other):
        return (
            isinstance(other, SkewTableau)
            and self.outer == other.outer
            and self.inner == other.inner
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(("SkewTableau", self.outer, self.inner, self.rows))

    def __repr__(self):
        return f"SkewTableau(outer={self.outer!r}, inner={self.inner!r}, rows={[list(r) for r in self.rows]!r})"
