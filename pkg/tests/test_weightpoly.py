"""Exact polynomial ring in the weight symbols w(s, t)."""

import random

import pytest

from ellcomb.special_fn import DomainError, GenericWeights, QWeights, TableWeights
from ellcomb.weightpoly import WeightPolynomial


def w(s, t):
    return WeightPolynomial.symbol(s, t)


def test_constructors_and_zero_normalization():
    assert WeightPolynomial.zero().is_zero()
    assert not WeightPolynomial.one().is_zero()
    assert WeightPolynomial.from_int(0).is_zero()
    assert WeightPolynomial({(): 0, (((1, 1), 1),): 0}).is_zero()
    assert WeightPolynomial.from_int(3) == 3


def test_ring_axioms_on_random_elements():
    rng = random.Random(31)

    def random_poly():
        poly = WeightPolynomial.zero()
        for _ in range(rng.randint(0, 4)):
            term = WeightPolynomial.from_int(rng.randint(-3, 3))
            for _ in range(rng.randint(0, 2)):
                term = term * w(rng.randint(1, 3), rng.randint(1, 3))
            poly = poly + term
        return poly

    for _ in range(60):
        a, b, c = random_poly(), random_poly(), random_poly()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == WeightPolynomial.zero()
        assert a * WeightPolynomial.one() == a
        assert a * 0 == WeightPolynomial.zero()


def test_times_symbol_matches_multiplication():
    poly = 2 * w(1, 1) + 3 * w(2, 1) * w(1, 1) + WeightPolynomial.one()
    assert poly.times_symbol(1, 1) == poly * w(1, 1)


def test_shift_renames_symbols():
    poly = w(1, 2) * w(3, 1) + 5
    shifted = poly.shift(2, -1)
    assert shifted == w(3, 1) * w(5, 0) + 5
    assert poly.shift(0, 0) is poly


def test_str_rendering():
    assert str(WeightPolynomial.zero()) == "0"
    assert str(WeightPolynomial.one()) == "1"
    assert str(w(1, 1)) == "w(1,1)"
    assert str(w(1, 1) * w(1, 1)) == "w(1,1)^2"
    assert str(1 + w(1, 1)) == "1 + w(1,1)"
    assert str(2 * w(2, 1) * w(1, 1)) == "2*w(1,1)*w(2,1)"


def test_evaluate_against_families():
    poly = 1 + 2 * w(1, 1) + w(1, 1) * w(2, 2)
    got = poly.evaluate(QWeights(0.5))
    assert abs(got - (1 + 2 * 0.5 + 0.25)) < 1e-14
    table = TableWeights({(1, 1): 2.0, (2, 2): 3.0})
    assert abs(poly.evaluate(table) - (1 + 4 + 6)) < 1e-14


def test_evaluate_rejects_symbolic_family():
    with pytest.raises(DomainError):
        (1 + w(1, 1)).evaluate(GenericWeights())


def test_evaluate_shares_cache():
    poly = w(1, 1) * w(1, 1) + w(1, 1)
    cache = {}
    poly.evaluate(QWeights(0.3), cache)
    assert cache == {(1, 1): 0.3 + 0j}


def test_json_round_trip():
    rng = random.Random(32)
    for _ in range(30):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            mono = tuple(sorted(
                ((rng.randint(-2, 4), rng.randint(-2, 4)), rng.randint(1, 3))
                for _ in range(rng.randint(0, 3))))
            mono = tuple(dict(mono).items())
            terms[mono] = rng.randint(-5, 5)
        poly = WeightPolynomial(terms)
        back = WeightPolynomial.from_json(poly.to_json())
        assert back == poly


def test_equality_with_ints():
    assert WeightPolynomial.one() == 1
    assert WeightPolynomial.zero() == 0
    assert (w(1, 1) - w(1, 1)) == 0
    assert w(1, 1) != 1


def test_hash_consistency():
    a = 1 + w(1, 1)
    b = w(1, 1) + 1
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1
