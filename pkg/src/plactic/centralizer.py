"""Membership in plactic centralizers.

C(u) is the set of words w with P(uw) = P(wu).  ``in_centralizer`` is the
brute oracle; the ``test_*`` functions are the fast characterizations for
the word families where one is known.  Each characterization reads off the
insertion tableau P(w) alone.
"""

from __future__ import annotations

import os
from typing import Iterable

from . import _kernels
from .errors import BudgetExceededError
from .rsk import lwi, lwi_ending_at, p_tableau
from .tableau import Tableau, Word, row_count_filter, word

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    """Word-enumeration budget; PLACTIC_BUDGET overrides the default 10^8."""
    raw = os.environ.get("PLACTIC_BUDGET")
    if raw:
        budget = int(raw)
        if budget <= 0:
            raise ValueError(f"PLACTIC_BUDGET must be positive, got {raw!r}")
        return budget
    return DEFAULT_BUDGET


def in_centralizer(u: Iterable[int], w: Iterable[int]) -> bool:
    """True iff P(uw) == P(wu)."""
    return _kernels.commutes(word(u), word(w))


def test_single_letter_rows(u: int, w: Iterable[int]) -> bool:
    """Row test for membership in C(u), u a single letter: every entry of
    the first row is <= u, and for each i the entries < u in row i match
    the entries <= u in row i+1 in number (missing rows count 0)."""
    t = p_tableau(word(w))
    rows = t.rows
    if rows and rows[0][-1] > u:
        return False
    for i in range(len(rows)):
        below = rows[i + 1] if i + 1 < len(rows) else ()
        if row_count_filter(rows[i], u, True) != row_count_filter(below, u, False):
            return False
    return True


def test_single_letter_cols(u: int, w: Iterable[int]) -> bool:
    """Column test, equivalent to the row test: every column of P(w)
    contains the letter u."""
    t = p_tableau(word(w))
    return all(u in col for col in t.columns())


def test_c1_lwi(w: Iterable[int]) -> bool:
    """Membership in C(1): some longest weakly increasing subsequence
    ends in a 1, i.e. lwi(w) == lwi_ending_at(w, 1)."""
    w = word(w)
    return lwi(w) == lwi_ending_at(w, 1)


def is_yamanouchi(w: Iterable[int]) -> bool:
    """Every suffix contains at least as many i's as (i+1)'s, for all i."""
    w = word(w)
    counts: dict = {}
    for a in reversed(w):
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def _columns(t: Tableau) -> tuple:
    return t.columns()


def test_c12(w: Iterable[int]) -> bool:
    """Membership in C(12) read off P(w): singleton columns hold 1s or 2s
    and, if any exist, both a singleton 1 and a singleton 2 occur; every
    column of height >= 2 contains both a 1 and a 2."""
    cols = _columns(p_tableau(word(w)))
    singles = [col[0] for col in cols if len(col) == 1]
    if singles:
        if any(a not in (1, 2) for a in singles):
            return False
        if 1 not in singles or 2 not in singles:
            return False
    return all(1 in col and 2 in col for col in cols if len(col) >= 2)


def test_c212(w: Iterable[int]) -> bool:
    """Membership in C(212): like C(12) but every singleton column must be
    a singleton 2."""
    cols = _columns(p_tableau(word(w)))
    for col in cols:
        if len(col) == 1:
            if col[0] != 2:
                return False
        elif 1 not in col or 2 not in col:
            return False
    return True


def test_staircase(m: int, w: Iterable[int]) -> bool:
    """Membership in C(m, m-1, ..., 1): rows 1..m of P(w) have max <= m."""
    t = p_tableau(word(w))
    return all(row[-1] <= m for row in t.rows[:m])


def test_power(a: int, k: int, w: Iterable[int]) -> bool:
    """Membership in C(a^k), which equals C(a) for every k >= 1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return test_single_letter_cols(a, w)


def _check_budget(n: int, m: int, budget) -> int:
    total = m**n if n else 1
    limit = default_budget() if budget is None else budget
    if total > limit:
        raise BudgetExceededError(
            f"enumerating [{m}]^{n} means {total} words, over the budget {limit}"
        )
    return total


def centralizer_words(u: Iterable[int], n: int, m: int, budget=None) -> list:
    """All w in [m]^n with P(uw) == P(wu), in lexicographic order.

    Raises BudgetExceeded when m^n is over the word budget.  Disjoint
    lexicographic blocks can be enumerated independently with the kernel
    interface; the result here is always the full sequential list.
    """
    u = word(u)
    _check_budget(n, m, budget)
    return _kernels.commuting_words(u, n, m)


def count_centralizer_words(u: Iterable[int], n: int, m: int, budget=None) -> int:
    """len(centralizer_words(u, n, m)) without materializing the words."""
    u = word(u)
    _check_budget(n, m, budget)
    return _kernels.count_commuting(u, n, m)
