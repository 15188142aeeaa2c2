import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plactic import (
    QNotStandardError,
    ShapeMismatchError,
    Tableau,
    dominates,
    inverse_rsk,
    lwi,
    lwi_ending_at,
    p_tableau,
    row_insert,
    rsk_pair,
)
from plactic.enumeration import iter_partitions, iter_ssyt

from helpers import lwi_oracle, p_oracle, words_over

words = st.lists(st.integers(min_value=1, max_value=5), max_size=9).map(tuple)


def test_row_insert_examples():
    t, trace = row_insert(Tableau(((2,),)), 1)
    assert t.rows == ((1,), (2,))
    assert trace == ((1, 1, 2), (2, 1, None))

    t, trace = row_insert(Tableau(((1, 2), (2,))), 2)
    assert t.rows == ((1, 2, 2), (2,))
    assert trace == ((1, 3, None),)

    t, _ = row_insert(Tableau(()), 7)
    assert t.rows == ((7,),)


def test_bump_trace_rows_strictly_increase():
    for w in words_over(3, 6):
        t = Tableau(())
        for a in w:
            t, trace = row_insert(t, a)
            rows_touched = [step[0] for step in trace]
            assert rows_touched == sorted(set(rows_touched))
            assert trace[-1][2] is None
            for step in trace[:-1]:
                assert step[2] is not None


def test_p_tableau_examples():
    assert p_tableau((2, 1, 2)).rows == ((1, 2), (2,))
    assert p_tableau(()).rows == ()
    assert p_tableau((1, 1, 3, 5)).rows == ((1, 1, 3, 5),)


def test_rsk_pair_example():
    p, q = rsk_pair((2, 1, 2))
    assert p.rows == ((1, 2), (2,))
    assert q.rows == ((1, 3), (2,))


def test_rsk_pair_increasing_word():
    p, q = rsk_pair((1, 2, 2, 4))
    assert q.rows == ((1, 2, 3, 4),)
    assert p.rows == ((1, 2, 2, 4),)


def test_inverse_rsk_examples():
    assert inverse_rsk(Tableau(((1, 2), (2,))), Tableau(((1, 3), (2,)))) == (2, 1, 2)
    assert inverse_rsk(Tableau(()), Tableau(())) == ()
    assert inverse_rsk(Tableau(((5,),)), Tableau(((1,),))) == (5,)


def test_inverse_rsk_errors():
    with pytest.raises(ShapeMismatchError):
        inverse_rsk(Tableau(((1, 2),)), Tableau(((1,), (2,))))
    with pytest.raises(QNotStandardError):
        inverse_rsk(Tableau(((1, 1),)), Tableau(((1, 1),)))
    with pytest.raises(QNotStandardError):
        inverse_rsk(Tableau(((1, 1),)), Tableau(((2, 3),)))


def test_rsk_roundtrip_exhaustive():
    for w in words_over(3, 6):
        p, q = rsk_pair(w)
        assert p.shape == q.shape
        assert inverse_rsk(p, q) == w


@given(words)
def test_rsk_roundtrip_property(w):
    p, q = rsk_pair(w)
    assert inverse_rsk(p, q) == w


@given(words)
def test_p_tableau_matches_oracle(w):
    assert p_tableau(w).rows == p_oracle(w)


@given(words)
def test_lwi_is_first_row_length(w):
    t = p_tableau(w)
    first = len(t.rows[0]) if t.rows else 0
    assert lwi(w) == first


@settings(max_examples=60)
@given(st.lists(st.integers(min_value=1, max_value=4), max_size=10).map(tuple))
def test_lwi_matches_subset_oracle(w):
    assert lwi(w) == lwi_oracle(w)


def test_lwi_long_mixed_word():
    w = (1, 6, 2, 7, 2, 4, 5, 3, 4)
    assert lwi(w) == 5
    assert lwi_ending_at(w, 3) == 4
    assert lwi_ending_at(w, 9) == 0
    assert lwi(()) == 0


def test_lwi_ending_at_uses_rightmost_occurrence():
    # the longest weakly increasing subsequence ending in 2 must end at
    # the last 2, picking up 1,2,2
    w = (2, 1, 2)
    assert lwi_ending_at(w, 2) == 2
    assert lwi_ending_at((1, 2, 2), 2) == 3


def test_p_of_row_word_is_identity():
    for n in range(0, 9):
        for lam in iter_partitions(n):
            for t in iter_ssyt(lam, 4):
                assert p_tableau(t.row_word()) == t


def test_lemma_dominance_suite():
    """Appending a letter tightens alpha from the right, prepending from
    the left, in dominance order."""
    for w in words_over(4, 5):
        pw = p_tableau(w)
        for a in range(1, 5):
            pwa = p_tableau(w + (a,))
            paw = p_tableau((a,) + w)
            for b in range(1, 5):
                if a == b:
                    continue
                assert dominates(pwa.alpha(b), pw.alpha(b))
                assert dominates(pw.alpha(b), paw.alpha(b))
