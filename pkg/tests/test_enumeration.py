import itertools

import pytest

from plactic import (
    BinomialPoly,
    BoundExceededError,
    LabeledPoset,
    UnsupportedFamilyError,
    ValidationFailedError,
    count_by_shapes,
    count_centralizer,
    descent_poly,
    expand_binomial,
    f_lambda,
    family_of_word,
    linear_extensions,
    order_poly_count,
    shape_poset,
    single,
    ssyt_count,
    staircase,
    word12,
)
from plactic.enumeration import (
    DescentPoly,
    _fit_binomial,
    binom,
    descents,
    iter_partitions,
    iter_ssyt,
)

from helpers import (
    hook_product,
    p_partition_maps_oracle,
    ssyt_fillings_oracle,
    syt_count_oracle,
)


def test_binom_guards():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(0, 0) == 1


def test_iter_partitions():
    assert list(iter_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(iter_partitions(0)) == [()]
    assert len(list(iter_partitions(8))) == 22


def test_f_lambda_examples():
    assert f_lambda((2, 2, 1)) == 5
    assert f_lambda((7,)) == 1
    assert f_lambda((2, 1)) == 2
    assert f_lambda(()) == 1


def test_f_lambda_matches_exhaustive_generation():
    for n in range(0, 7):
        for lam in iter_partitions(n):
            assert f_lambda(lam) == syt_count_oracle(lam), lam


def test_labeled_poset_validation():
    LabeledPoset(2, frozenset({(1, 2)}))
    with pytest.raises(ValueError):
        LabeledPoset(2, frozenset({(1, 2), (2, 1)}))
    with pytest.raises(ValueError):
        LabeledPoset(1, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        LabeledPoset(1, frozenset({(1, 5)}))


def test_shape_poset_hook():
    p = shape_poset((2, 1))
    assert p.size == 3
    # 2 sits on top, covering both 1 and 3
    assert p.covers == {(1, 2), (3, 2)}


def test_shape_poset_row_is_a_chain():
    p = shape_poset((3,))
    assert p.covers == {(1, 2), (2, 3)}
    assert linear_extensions(p) == [(1, 2, 3)]
    assert shape_poset((1,)).covers == frozenset()


def test_linear_extensions_examples():
    assert sorted(linear_extensions(shape_poset((2, 1)))) == [(1, 3, 2), (3, 1, 2)]
    antichain = LabeledPoset(3, frozenset())
    assert len(linear_extensions(antichain)) == 6
    assert linear_extensions(LabeledPoset(0, frozenset())) == [()]


def test_linear_extensions_bound():
    with pytest.raises(BoundExceededError):
        linear_extensions(shape_poset((11,)))
    with pytest.raises(BoundExceededError):
        linear_extensions(shape_poset((3,)), bound=2)
    assert linear_extensions(shape_poset((3,)), bound=3) == [(1, 2, 3)]


def test_linear_extensions_respect_the_order():
    for lam in [(2, 2), (3, 1), (2, 1, 1), (4,)]:
        p = shape_poset(lam)
        for pi in linear_extensions(p):
            pos = {v: i for i, v in enumerate(pi)}
            for x, y in p.covers:
                assert pos[x] < pos[y]


def test_descents():
    assert descents((1, 2, 3)) == 0
    assert descents((3, 1, 2)) == 1
    assert descents((3, 2, 1)) == 2
    assert descents(()) == 0


def test_descent_poly_examples():
    assert descent_poly(shape_poset((2, 1))).coefficients == (0, 2)
    assert str(descent_poly(shape_poset((2, 1)))) == "2*x"
    assert descent_poly(shape_poset((3,))).coefficients == (1,)
    two_antichain = LabeledPoset(2, frozenset())
    assert descent_poly(two_antichain).coefficients == (1, 1)
    assert str(descent_poly(two_antichain)) == "1 + x"


def test_descent_poly_coefficients_sum_to_extension_count():
    for lam in [(2, 2), (3, 1, 1), (2, 1)]:
        p = shape_poset(lam)
        assert sum(descent_poly(p).coefficients) == len(linear_extensions(p))


def test_order_poly_examples():
    hook = shape_poset((2, 1))
    for m in range(0, 6):
        assert order_poly_count(hook, m) == 2 * binom(m + 2, 3)
    assert order_poly_count(hook, 1) == 2
    one = shape_poset((1,))
    for m in range(0, 5):
        assert order_poly_count(one, m) == m + 1
    chain2 = LabeledPoset(2, frozenset({(1, 2)}))
    assert order_poly_count(chain2, 1) == 3
    assert order_poly_count(LabeledPoset(0, frozenset()), 3) == 1


def test_order_poly_matches_direct_map_enumeration():
    """The descent-sum formula counts exactly the order-reversing maps into
    {0..m} that drop strictly across label descents, for every shape poset
    with at most 5 cells and m <= 3."""
    for n in range(0, 6):
        for lam in iter_partitions(n):
            p = shape_poset(lam)
            for m in range(0, 4):
                assert order_poly_count(p, m) == p_partition_maps_oracle(p, m), (lam, m)


def test_ssyt_count_edges():
    assert ssyt_count((), 0) == 1
    assert ssyt_count((), 3) == 1
    assert ssyt_count((2, 1), 0) == 0
    assert ssyt_count((1, 1, 1), 2) == 0
    assert ssyt_count((1,), 1) == 1


def test_ssyt_count_matches_generation_and_oracle():
    for n in range(0, 6):
        for lam in iter_partitions(n):
            for q in range(0, 5):
                got = ssyt_count(lam, q)
                assert got == len(list(iter_ssyt(lam, q)))
                assert got == len(ssyt_fillings_oracle(lam, q))


def test_ssyt_count_is_order_poly_shifted():
    for lam in [(3,), (2, 2), (3, 1), (2, 1, 1)]:
        for q in range(1, 5):
            assert ssyt_count(lam, q) == order_poly_count(shape_poset(lam), q - 1)


def test_iter_ssyt_yields_valid_tableaux():
    seen = set()
    for t in iter_ssyt((2, 1), 3):
        assert t.shape == (2, 1)
        assert t.max_entry() <= 3
        seen.add(t.rows)
    assert ((1, 1), (2,)) in seen
    assert len(seen) == 8


def test_families():
    assert single(2).constrained_rows == 1
    assert staircase(3).constrained_rows == 3
    assert word12().constrained_rows == 2
    with pytest.raises(ValueError):
        single(0)
    with pytest.raises(ValueError):
        staircase(0)


def test_family_of_word():
    assert family_of_word((1,)) == single(1)
    assert family_of_word((2, 2, 2)) == single(2)
    assert family_of_word((2, 1)) == staircase(2)
    assert family_of_word((3, 2, 1)) == staircase(3)
    assert family_of_word((1, 2)) == word12()
    with pytest.raises(UnsupportedFamilyError):
        family_of_word((2, 1, 2))
    with pytest.raises(UnsupportedFamilyError):
        family_of_word(())


def test_count_centralizer_examples():
    assert count_centralizer((1,), 4, 2) == 6
    assert count_centralizer((3,), 2, 2) == 0
    assert count_centralizer((3,), 0, 2) == 1
    assert count_centralizer((1,), 3, 3) == 6


def test_central_binomial():
    for n in range(0, 13):
        assert count_centralizer((1,), n, 2) == binom(n, n // 2)


def test_shift_invariance():
    for m in range(1, 5):
        for u in range(1, m + 1):
            for n in range(0, 6):
                assert count_centralizer((u,), n, m) == count_centralizer((1,), n, m)
    for n in range(0, 6):
        assert count_centralizer((4,), n, 3) == (1 if n == 0 else 0)


def test_power_counting():
    for a in (1, 2, 3):
        for k in (1, 2, 3):
            for n in range(0, 5):
                for m in (1, 2, 3):
                    assert count_centralizer((a,) * k, n, m) == count_centralizer((a,), n, m)


def test_two_path_agreement():
    """Shape-sum counting equals brute force on every supported family for
    n <= 5, m <= 5."""
    cases = [
        (single(1), (1,)),
        (single(2), (2,)),
        (single(3), (3,)),
        (staircase(2), (2, 1)),
        (staircase(3), (3, 2, 1)),
        (word12(), (1, 2)),
    ]
    for family, u in cases:
        for n in range(0, 6):
            for m in range(0, 6):
                assert count_by_shapes(family, n, m) == count_centralizer(u, n, m), (
                    family,
                    n,
                    m,
                )


def test_single_letter_above_alphabet():
    assert count_by_shapes(single(6), 0, 3) == 1
    assert count_by_shapes(single(6), 4, 3) == 0


def test_hook_content_term():
    # the (2,2,1) shape contributes 5 standard tableaux times 2*C(m,3)
    # admissible fillings when counting length-5 words commuting with 1
    assert f_lambda((2, 2, 1)) == 5
    for m in range(0, 8):
        assert ssyt_count((2, 1), m - 1) == 2 * binom(m, 3)


def test_binomial_poly_str():
    assert str(BinomialPoly((0, 1, 4, 1))) == "C(m,1) + 4*C(m,2) + C(m,3)"
    assert str(BinomialPoly((1,))) == "1"
    assert str(BinomialPoly(())) == "0"
    assert BinomialPoly((0, 1, 4, 1))(3) == 3 + 4 * 3 + 1


def test_fit_binomial_rejects_non_integer_fit():
    with pytest.raises(ValidationFailedError):
        _fit_binomial([0, 2], [0, 1])


def test_fit_binomial_recovers_exact_coefficients():
    poly = BinomialPoly((0, 1, 4, 1))
    points = [4, 5, 6, 7]
    fitted = _fit_binomial(points, [poly(m) for m in points])
    assert fitted == poly


def test_expand_examples():
    assert expand_binomial((1,), 1).coefficients == (1,)
    assert expand_binomial((1,), 4).coefficients == (0, 1, 4, 1)
    assert str(expand_binomial((1,), 4)) == "C(m,1) + 4*C(m,2) + C(m,3)"


def test_expand_leading_coefficient_is_one():
    for n in range(1, 7):
        coeffs = expand_binomial((1,), n).coefficients
        assert coeffs[-1] == 1
        assert len(coeffs) == n


def test_expand_matches_counts_on_new_points():
    poly = expand_binomial((2, 1), 4)
    for m in range(4, 9):
        assert poly(m) == count_centralizer((2, 1), 4, m)


def test_expand_rejects_small_n():
    with pytest.raises(ValueError):
        expand_binomial((2, 1), 1)
    with pytest.raises(UnsupportedFamilyError):
        expand_binomial((2, 1, 2), 3)


def test_expand_validation_sample(monkeypatch):
    import plactic.enumeration as enumeration

    def not_a_polynomial(family, n, m, bound=10):
        return 2**m

    monkeypatch.setattr(enumeration, "count_by_shapes", not_a_polynomial)
    with pytest.raises(ValidationFailedError):
        enumeration.expand_binomial((1,), 3)


def test_hook_product_helper_agrees():
    # sanity for the oracle itself: hook length formula on small shapes
    from math import factorial

    for n in range(0, 7):
        for lam in iter_partitions(n):
            assert factorial(n) // hook_product(lam) == syt_count_oracle(lam)
