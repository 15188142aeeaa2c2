"""Independent oracle implementations used to cross-check the package.

Everything here is deliberately written from the definitions, sharing no
code with the library: straight-line insertion without binary search,
brute-force subsequence scans, and exhaustive map enumeration.
"""

from __future__ import annotations

import itertools
from math import prod


def insert_oracle(rows, a):
    """Row insertion by linear scan."""
    rows = [list(r) for r in rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([a])
            return rows
        row = rows[i]
        for j, v in enumerate(row):
            if v > a:
                row[j], a = a, v
                break
        else:
            row.append(a)
            return rows
        i += 1


def p_oracle(w):
    rows = []
    for a in w:
        rows = insert_oracle(rows, a)
    return tuple(tuple(r) for r in rows)


def commutes_oracle(u, w):
    return p_oracle(tuple(u) + tuple(w)) == p_oracle(tuple(w) + tuple(u))


def centralizer_oracle(u, n, m):
    return [w for w in itertools.product(range(1, m + 1), repeat=n) if commutes_oracle(u, w)]


def lwi_oracle(w):
    """Longest weakly increasing subsequence by scanning every subset."""
    best = 0
    n = len(w)
    for mask in range(1 << n):
        sub = [w[i] for i in range(n) if mask >> i & 1]
        if all(x <= y for x, y in zip(sub, sub[1:])):
            best = max(best, len(sub))
    return best


def words_over(alphabet, max_len, min_len=0):
    for n in range(min_len, max_len + 1):
        yield from itertools.product(range(1, alphabet + 1), repeat=n)


def syt_count_oracle(shape):
    """Standard tableaux counted by placing 1..n one at a time."""
    shape = tuple(shape)
    n = sum(shape)
    if n == 0:
        return 1

    def rec(rows):
        filled = sum(rows)
        if filled == n:
            return 1
        total = 0
        for i, have in enumerate(rows):
            if have < shape[i] and (i == 0 or rows[i - 1] > have):
                total += rec(rows[:i] + (have + 1,) + rows[i + 1 :])
        return total

    return rec((0,) * len(shape))


def p_partition_maps_oracle(poset, m):
    """Count f: labels -> {0..m} that weakly decrease along the order and
    strictly decrease across covers where the lower label is larger."""
    n = poset.size
    if n == 0:
        return 1
    count = 0
    for values in itertools.product(range(m + 1), repeat=n):
        ok = True
        for x, y in poset.covers:
            # x below y in the poset
            if values[x - 1] < values[y - 1]:
                ok = False
                break
            if x > y and values[x - 1] <= values[y - 1]:
                ok = False
                break
        if ok:
            count += 1
    return count


def ssyt_fillings_oracle(shape, max_entry):
    """All SSYT of a shape by filtering raw fillings. Small shapes only."""
    shape = tuple(shape)
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    out = []
    for values in itertools.product(range(1, max_entry + 1), repeat=len(cells)):
        grid = {}
        for (i, j), v in zip(cells, values):
            grid[(i, j)] = v
        ok = True
        for (i, j), v in grid.items():
            if j > 0 and grid[(i, j - 1)] > v:
                ok = False
                break
            if i > 0 and grid[(i - 1, j)] >= v:
                ok = False
                break
        if ok:
            out.append(tuple(tuple(grid[(i, j)] for j in range(r)) for i, r in enumerate(shape)))
    return out


def hook_product(shape):
    shape = tuple(shape)
    if not shape:
        return 1
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])]
    return prod((r - j) + (conj[j] - i) - 1 for i, r in enumerate(shape) for j in range(r))
