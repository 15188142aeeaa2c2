"""Exact counting of centralizer words.

Two independent routes are provided:

* ``count_centralizer`` enumerates words through the kernel (the oracle);
* ``count_by_shapes`` sums g_m(shape) * f(shape) over partitions of n,
  where g_m counts the insertion tableaux allowed by a family's
  characterization and f is the standard tableau count.  The tableaux with
  entries above the constrained first rows are counted through labeled
  cell posets and their order polynomials, which is what makes the count a
  polynomial in m in the binomial basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .centralizer import count_centralizer_words
from .errors import (
    BoundExceededError,
    UnsupportedFamilyError,
    ValidationFailedError,
)
from .tableau import Tableau, Word, is_partition, word

DEFAULT_EXTENSION_BOUND = 10


def binom(a: int, b: int) -> int:
    """C(a, b) with the combinatorial convention: 0 unless 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def iter_partitions(n: int) -> Iterator[tuple]:
    """Partitions of n as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def f_lambda(shape: Iterable[int]) -> int:
    """Number of standard tableaux of the given shape (hook lengths)."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    n = sum(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    q, r = divmod(math.factorial(n), hooks)
    assert r == 0
    return q


@dataclass(frozen=True)
class LabeledPoset:
    """A partial order on labels 1..size given by covering pairs (x, y), x below y."""

    size: int
    covers: frozenset

    def __post_init__(self):
        for x, y in self.covers:
            if not (1 <= x <= self.size and 1 <= y <= self.size) or x == y:
                raise ValueError(f"bad cover ({x}, {y})")
        # cycle check by Kahn's algorithm
        preds = self.predecessors()
        indeg = {v: len(preds[v]) for v in range(1, self.size + 1)}
        ready = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for x, y in self.covers:
                if x == v:
                    indeg[y] -= 1
                    if indeg[y] == 0:
                        ready.append(y)
        if seen != self.size:
            raise ValueError("cover relation has a cycle")

    def predecessors(self) -> dict:
        preds = {v: set() for v in range(1, self.size + 1)}
        for x, y in self.covers:
            preds[y].add(x)
        return preds


def shape_poset(shape: Iterable[int]) -> LabeledPoset:
    """The cell poset of a partition shape, ordered reverse component-wise
    ((i,j) below (i',j') when i >= i' and j >= j') and labeled row by row,
    right to left, starting with 1 in the first row."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    label = {}
    k = 0
    for i, row_len in enumerate(shape):
        for j in range(row_len - 1, -1, -1):
            k += 1
            label[(i, j)] = k
    covers = set()
    for i, row_len in enumerate(shape):
        for j in range(row_len):
            if j >= 1:
                covers.add((label[(i, j)], label[(i, j - 1)]))
            if i >= 1:
                covers.add((label[(i, j)], label[(i - 1, j)]))
    return LabeledPoset(sum(shape), frozenset(covers))


def linear_extensions(poset: LabeledPoset, bound: int = DEFAULT_EXTENSION_BOUND) -> list:
    """All linear extensions as permutations of 1..size, lexicographic."""
    if poset.size > bound:
        raise BoundExceededError(f"poset size {poset.size} exceeds the bound {bound}")
    preds = poset.predecessors()
    out = []
    placed: set = set()
    prefix: list = []

    def rec():
        if len(prefix) == poset.size:
            out.append(tuple(prefix))
            return
        for v in range(1, poset.size + 1):
            if v in placed or not preds[v] <= placed:
                continue
            placed.add(v)
            prefix.append(v)
            rec()
            prefix.pop()
            placed.remove(v)

    rec()
    return out


def descents(pi: tuple) -> int:
    return sum(1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1])


@dataclass(frozen=True)
class DescentPoly:
    """coefficients[j] = number of linear extensions with j descents."""

    coefficients: tuple

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                x = "x" if j == 1 else f"x^{j}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms) if terms else "0"


def descent_poly(poset: LabeledPoset, bound: int = DEFAULT_EXTENSION_BOUND) -> DescentPoly:
    exts = linear_extensions(poset, bound)
    coeffs = [0] * max(1, poset.size)
    for pi in exts:
        coeffs[descents(pi)] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return DescentPoly(tuple(coeffs))


def order_poly_count(poset: LabeledPoset, m: int, bound: int = DEFAULT_EXTENSION_BOUND) -> int:
    """Number of order-reversing maps f from the poset into {0, ..., m}
    that drop strictly across label descents (x below y with x > y forces
    f(x) > f(y)): the sum of C(m + n - des, n) over linear extensions."""
    if poset.size == 0:
        return 1
    n = poset.size
    return sum(binom(m + n - descents(pi), n) for pi in linear_extensions(poset, bound))


@lru_cache(maxsize=None)
def _extension_descents(shape: tuple, bound: int) -> tuple:
    return tuple(descents(pi) for pi in linear_extensions(shape_poset(shape), bound))


def ssyt_count(shape: Iterable[int], max_entry: int, bound: int = DEFAULT_EXTENSION_BOUND) -> int:
    """Number of semistandard tableaux of the shape with entries <= max_entry."""
    shape = tuple(shape)
    if not shape:
        return 1
    if max_entry <= 0:
        return 0
    n = sum(shape)
    return sum(binom(max_entry - 1 + n - d, n) for d in _extension_descents(shape, bound))


def iter_ssyt(shape: Iterable[int], max_entry: int) -> Iterator[Tableau]:
    """All semistandard tableaux of the shape with entries <= max_entry."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    rows = [[0] * row_len for row_len in shape]

    def rec(i, j):
        if i == len(shape):
            yield Tableau(tuple(tuple(r) for r in rows), validate=False)
            return
        ni, nj = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            rows[i][j] = v
            yield from rec(ni, nj)

    if not shape:
        yield Tableau(())
        return
    yield from rec(0, 0)


@dataclass(frozen=True)
class Family:
    """A word family with a closed-form counting rule: single(a), staircase(k), word12."""

    kind: str
    param: int = 0

    @property
    def constrained_rows(self) -> int:
        if self.kind == "single":
            return 1
        if self.kind == "staircase":
            return self.param
        if self.kind == "word12":
            return 2
        raise UnsupportedFamilyError(f"unknown family kind {self.kind!r}")


def single(a: int) -> Family:
    if a < 1:
        raise ValueError(f"letter must be positive, got {a}")
    return Family("single", a)


def staircase(k: int) -> Family:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return Family("staircase", k)


def word12() -> Family:
    return Family("word12")


def family_of_word(u: Iterable[int]) -> Family:
    """Match a word against the supported families.

    Powers a^k land in single(a) since C(a^k) = C(a); u = k, k-1, ..., 1
    is staircase(k); u = 1,2 is the two-letter increasing family.
    """
    u = word(u)
    if not u:
        raise UnsupportedFamilyError("the empty word is not in a supported family")
    if len(set(u)) == 1:
        return single(u[0])
    if u == tuple(range(len(u), 0, -1)):
        return staircase(len(u))
    if u == (1, 2):
        return word12()
    raise UnsupportedFamilyError(f"no closed-form counting rule wired up for u = {u}")


def _word12_head(l1: int, l2: int, max_entry: int) -> int:
    """Fillings of the two-row shape (l1, l2) allowed in the first two rows
    of an insertion tableau of a C(12) word: columns of height 2 contain
    both letters, singleton cells are 1s or 2s with both kinds present
    whenever any singleton exists."""
    count = 0
    for t in iter_ssyt((l1, l2) if l2 else ((l1,) if l1 else ()), min(2, max_entry)):
        cols = t.columns()
        singles = [col[0] for col in cols if len(col) == 1]
        if singles and (1 not in singles or 2 not in singles):
            continue
        if all(1 in col and 2 in col for col in cols if len(col) == 2):
            count += 1
    return count


def count_centralizer(u: Iterable[int], n: int, m: int, budget=None) -> int:
    """c_{n,m}(u): brute-force count of C(u) words of length n over [m]."""
    return count_centralizer_words(u, n, m, budget)


def count_by_shapes(family: Family, n: int, m: int, bound: int = DEFAULT_EXTENSION_BOUND) -> int:
    """c_{n,m}(u) for a supported family, summed over insertion-tableau shapes.

    For each partition of n the first ``r`` rows are counted under the
    family's characterization (capped at min(r, m) since entries never
    exceed m) and the remaining rows, which are forced above r, contribute
    a shifted semistandard count.  Multiplying by f(shape) counts words.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if m < 0:
        raise ValueError("m must be >= 0")
    r = family.constrained_rows
    if family.kind == "single" and family.param > m:
        # no word over [m] contains the letter, so only the empty word commutes
        return 1 if n == 0 else 0
    total = 0
    for lam in iter_partitions(n):
        head_shape = lam[:r]
        tail_shape = lam[r:]
        if family.kind == "single":
            head = 1
        elif family.kind == "staircase":
            head = ssyt_count(head_shape, min(r, m), bound)
        else:  # word12
            l1 = lam[0] if lam else 0
            l2 = lam[1] if len(lam) > 1 else 0
            head = _word12_head(l1, l2, m)
        if head == 0:
            continue
        tail = _shifted_ssyt_count(tail_shape, r, m, bound)
        if tail == 0:
            continue
        total += head * tail * f_lambda(lam)
    return total


def _shifted_ssyt_count(shape: tuple, r: int, m: int, bound: int) -> int:
    """Semistandard tableaux of ``shape`` with entries in {r+1, ..., m}."""
    return ssyt_count(shape, m - r, bound)


@dataclass(frozen=True)
class BinomialPoly:
    """A polynomial sum(a_k * C(m, k)); coefficients has a_k at index k,
    with no trailing zero unless the polynomial is zero."""

    coefficients: tuple

    def __call__(self, m: int) -> int:
        return sum(a * binom(m, k) for k, a in enumerate(self.coefficients))

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coefficients):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                base = f"C(m,{k})"
                terms.append(base if a == 1 else f"{a}*{base}")
        return " + ".join(terms) if terms else "0"


def _fit_binomial(sample_points: list, values: list) -> BinomialPoly:
    """Solve sum(a_k C(m, k)) = value exactly over the sample points."""
    d = len(sample_points) - 1
    matrix = [[Fraction(binom(mj, k)) for k in range(d + 1)] for mj in sample_points]
    rhs = [Fraction(v) for v in values]
    # Gaussian elimination over the rationals
    for col in range(d + 1):
        pivot = next(r for r in range(col, d + 1) if matrix[r][col] != 0)
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = 1 / matrix[col][col]
        matrix[col] = [x * inv for x in matrix[col]]
        rhs[col] *= inv
        for r in range(d + 1):
            if r != col and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[col])]
                rhs[r] -= factor * rhs[col]
    coeffs = []
    for x in rhs:
        if x.denominator != 1:
            raise ValidationFailedError(f"non-integer coefficient {x} in binomial fit")
        coeffs.append(int(x))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return BinomialPoly(tuple(coeffs))


def expand_binomial(u: Iterable[int], n: int, bound: int = DEFAULT_EXTENSION_BOUND) -> BinomialPoly:
    """The binomial-basis expansion of m -> c_{n,m}(u), degree n - r.

    Counts are sampled at the d+1 points m0, ..., m0+d through the shape
    sum, where m0 = max(n, family letter bound): below that the count can
    sit off the polynomial.  One extra sample validates the fit and raises
    ValidationFailed on mismatch.
    """
    u = word(u)
    family = family_of_word(u)
    r = family.constrained_rows
    if n < r:
        raise ValueError(f"need n >= {r} for u = {u}, got n = {n}")
    d = n - r
    m0 = max(n, max(u))
    points = list(range(m0, m0 + d + 1))
    values = [count_by_shapes(family, n, m, bound) for m in points]
    poly = _fit_binomial(points, values)
    check_m = m0 + d + 1
    expected = count_by_shapes(family, n, check_m, bound)
    if poly(check_m) != expected:
        raise ValidationFailedError(
            f"fit predicts {poly(check_m)} at m={check_m}, count gives {expected}"
        )
    return poly
