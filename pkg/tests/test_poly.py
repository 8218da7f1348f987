import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import leibniz_minor
from rsct.poly import (
    Monomial,
    Polynomial,
    determinant,
    multidegree_by_column,
    multidegree_by_row,
    poly_add,
    poly_mul,
)


def z(n, i, j):
    return Polynomial.variable(n, i, j)


def as_triples(p: Polynomial) -> dict:
    return {tuple(sorted(m.triples())): c for m, c in p}


def test_monomial_storage():
    m = Monomial.from_triples(7, [(1, 7), (2, 5), (3, 1)])
    assert m.exponent(1, 7) == 1 and m.exponent(2, 5) == 1 and m.exponent(1, 1) == 0
    assert m.degree == 3
    assert str(m) == "z17*z25*z31"
    assert Monomial.from_matrix(m.as_matrix()) == m
    assert Monomial.from_triples(2, [(1, 1), (1, 1, 2)]).exponent(1, 1) == 3
    with pytest.raises(ValueError):
        Monomial.from_triples(2, [(3, 1)])


def test_add_trivial():
    p = z(2, 1, 1) * z(2, 2, 2)
    assert poly_add(p, Polynomial(2)) == p
    assert (z(2, 1, 1) + (-1) * z(2, 1, 1)).is_zero()
    assert z(2, 1, 1) - z(2, 1, 1) == Polynomial(2)


def test_add_builds_two_by_two_determinant():
    p = poly_add(z(2, 1, 1) * z(2, 2, 2), -(z(2, 1, 2) * z(2, 2, 1)))
    assert p == determinant((1, 2), 2)


def test_mul_trivial():
    p = z(3, 1, 2) + z(3, 2, 3)
    assert poly_mul(p, Polynomial.constant(3)) == p
    sq = poly_mul(z(2, 1, 1), z(2, 1, 1))
    assert sq.monomials() == [Monomial.from_triples(2, [(1, 1, 2)])]


def test_product_of_one_by_one_minors():
    assert poly_mul(determinant((1,), 2), determinant((2,), 2)) == z(2, 1, 1) * z(2, 1, 2)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        z(2, 1, 1) + z(3, 1, 1)
    with pytest.raises(ValueError):
        z(2, 1, 1) * z(3, 1, 1)


def test_determinant_157():
    p = determinant((1, 5, 7), 7)
    assert len(p) == 6
    assert {c for _, c in p.terms} == {1, -1}
    assert as_triples(p) == leibniz_minor((1, 5, 7))
    assert multidegree_by_column(p) == (1, 0, 0, 0, 1, 0, 1)
    assert multidegree_by_row(p) == (1, 1, 1, 0, 0, 0, 0)


def test_determinant_small():
    for k in range(1, 4):
        assert determinant((k,), 3) == z(3, 1, k)
    assert determinant((1, 2), 2) == z(2, 1, 1) * z(2, 2, 2) - z(2, 1, 2) * z(2, 2, 1)
    assert determinant((2, 2), 3).is_zero()
    with pytest.raises(ValueError):
        determinant((1, 4), 3)
    with pytest.raises(ValueError):
        determinant((1, 2, 3), 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_determinant_matches_leibniz(n):
    for k in range(1, n + 1):
        for cols in itertools.permutations(range(1, n + 1), k):
            assert as_triples(determinant(cols, n)) == leibniz_minor(cols), cols


def test_determinant_alternating():
    base = determinant((1, 3, 4), 4)
    assert determinant((3, 1, 4), 4) == -base
    assert determinant((1, 4, 3), 4) == -base
    assert determinant((4, 1, 3), 4) == base


def test_multidegree():
    assert multidegree_by_column(Polynomial.constant(3)) == (0, 0, 0)
    assert multidegree_by_column(Polynomial(3)) == (0, 0, 0)
    assert multidegree_by_column(z(2, 1, 1) + z(2, 1, 2)) is None


def test_json_roundtrip():
    p = determinant((1, 3), 3) * determinant((2,), 3) * 12345678901234567890
    data = p.to_json()
    assert all(isinstance(t["coeff"], str) for t in data)
    assert Polynomial.from_json(3, data) == p
    keys = [Monomial.from_triples(3, t["exps"]).exps for t in data]
    assert keys == sorted(keys, reverse=True)


def test_string_forms():
    p = determinant((1, 2), 2)
    assert str(p) in {"z12*z21 - z11*z22", "-z12*z21 + z11*z22"}
    assert str(Polynomial(2)) == "0"
    assert p.to_latex() == "-z_{12}z_{21} + z_{11}z_{22}"


small_polys = st.lists(
    st.tuples(st.integers(-3, 3), st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), max_size=3)),
    max_size=4,
).map(lambda ts: Polynomial(3, [(Monomial.from_triples(3, v), c) for c, v in ts]))


@given(small_polys, small_polys, small_polys)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b - b == a


@given(st.lists(st.sets(st.integers(1, 4), min_size=1, max_size=4), min_size=1, max_size=3))
def test_multidegree_additive(factors):
    polys = [determinant(sorted(f), 4) for f in factors]
    prod = Polynomial.constant(4)
    for p in polys:
        prod = prod * p
    expected = tuple(sum(v) for v in zip(*(multidegree_by_column(p) for p in polys)))
    assert multidegree_by_column(prod) == expected
