"""Kernel backend selection.

The compiled backend is used when available; PLACTIC_PURE=1 forces the
pure-Python fallback.  Letters outside C int range overflow the compiled
insertion, so the thin wrappers retry those calls in pure Python.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("PLACTIC_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND

count_commuting = _impl.count_commuting
commuting_words = _impl.commuting_words


def insertion_rows(word):
    try:
        return _impl.insertion_rows(word)
    except OverflowError:
        return _pure.insertion_rows(word)


def insert_rows(rows, letters):
    try:
        return _impl.insert_rows(rows, letters)
    except OverflowError:
        return _pure.insert_rows(rows, letters)


def commutes(u, w):
    try:
        return _impl.commutes(u, w)
    except OverflowError:
        return _pure.commutes(u, w)
