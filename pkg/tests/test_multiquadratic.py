import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from locdim.errors import PreconditionError
from locdim.multiquadratic import (
    MultiquadraticField,
    SquareClass,
    field_equals,
    parametrize_multiquadratic,
    specialize_E,
    square_class,
)

M = MultiquadraticField
SQUAREFREE = [
    n for n in range(-50, 51) if n not in (0, 1) and all(e == 1 for e in sympy.factorint(abs(n)).values())
]


def oracle_dimension(values) -> int:
    """Rank over F2 of sign and exponent-parity vectors, factoring with sympy."""
    values = [Fraction(v) for v in values]
    primes = sorted({p for v in values for n in (v.numerator, v.denominator) for p in sympy.primefactors(abs(n))})
    rows = []
    for v in values:
        row = [1 if v < 0 else 0]
        for p in primes:
            row.append((sympy.multiplicity(p, abs(v.numerator)) - sympy.multiplicity(p, v.denominator)) % 2)
        rows.append(row)
    return _rank_mod2(rows)


def _rank_mod2(rows):
    rows = [r[:] for r in rows]
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_square_class_examples():
    assert square_class(18) == SquareClass(1, (2,))
    assert square_class(-1) == SquareClass(-1, ())
    assert square_class("12/5") == SquareClass(1, (3, 5))
    assert square_class(1).is_trivial()
    with pytest.raises(PreconditionError):
        square_class(0)


@settings(max_examples=100, deadline=None)
@given(st.integers(-10**6, 10**6).filter(bool), st.integers(1, 10**3), st.integers(1, 50))
def test_square_class_ignores_squares(r, s, d):
    q = Fraction(r, d)
    assert square_class(q * s * s) == square_class(q)
    assert square_class(q).representative() * q > 0


@settings(max_examples=100, deadline=None)
@given(st.integers(-10**4, 10**4).filter(bool), st.integers(-10**4, 10**4).filter(bool))
def test_square_class_is_multiplicative(a, b):
    assert square_class(a * b) == square_class(a) * square_class(b)


def test_field_equality_examples():
    assert field_equals(M([2, 3]), M([3, 6]))
    assert not field_equals(M([2]), M([-2]))
    assert field_equals(M([2, 3, 6]), M([2, 3]))
    assert M([2, 3, 6]).dimension == 2
    assert M([1, 4, 9]).dimension == 0
    assert M([-1, 2]).contains(-2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(SQUAREFREE), min_size=1, max_size=6))
def test_dimension_matches_oracle(values):
    assert M(values).dimension == oracle_dimension(values)


def test_field_equals_is_an_equivalence():
    rng = random.Random(1)
    fields = [M(rng.sample(SQUAREFREE, rng.randint(1, 3))) for _ in range(25)]
    fields += [M([f.classes[0].representative() * 4, *f.classes[1:]]) for f in fields[:5]]
    for A in fields:
        assert field_equals(A, A)
    for A, B in itertools.product(fields, repeat=2):
        assert field_equals(A, B) == field_equals(B, A)
        if field_equals(A, B):
            assert hash(A) == hash(B)
    for A, B, C in itertools.product(fields[:12], repeat=3):
        if field_equals(A, B) and field_equals(B, C):
            assert field_equals(A, C)


def test_specialize_examples():
    L = specialize_E(1, 1, [2, 3, 5, 7])
    assert L.dimension == 4 and field_equals(L, M([2, 3, 5, 7]))
    assert field_equals(specialize_E(2, 1, [1, 1, 1, 1]), M([2]))
    L = specialize_E(4, -1, [2, 3, 5, 7])
    assert L.contains(-17) and L.dimension == 5
    with pytest.raises(PreconditionError):
        specialize_E(2, 1, [1, -1, 3, 5])
    with pytest.raises(PreconditionError):
        specialize_E(5, 1, [1, 2, 3, 5])
    with pytest.raises(PreconditionError):
        specialize_E(1, 1, [0, 2, 3, 5])


def check_result(a, r):
    assert r.i in (1, 2, 3, 4) and r.epsilon in (1, -1)
    assert sorted(r.permutation) == [1, 2, 3, 4]
    assert square_class(r.epsilon * sum(r.t_values[: r.i])) == square_class(a[4])
    assert field_equals(specialize_E(r.i, r.epsilon, r.t_values), M(a))
    x = r.witness
    assert x[4] != 0
    coeffs = [*a[:4], -r.form_sign * Fraction(a[4])]
    assert sum(Fraction(c) * v * v for c, v in zip(coeffs, x)) == 0


def test_parametrize_regression_value():
    a = (2, 3, 5, 7, -1)
    r = parametrize_multiquadratic(a)
    check_result(a, r)
    assert (r.i, r.epsilon, r.permutation) == (2, -1, (1, 4, 2, 3))
    assert r.t_values == (2, 7, 3, 5)
    assert r.witness == (1, 0, 0, 1, 3)


def test_parametrize_rejects_dependent_classes():
    with pytest.raises(PreconditionError):
        parametrize_multiquadratic([1, 1, 1, 1, 1])
    with pytest.raises(PreconditionError):
        parametrize_multiquadratic([2, 3, 6, 5, 7])
    with pytest.raises(PreconditionError):
        parametrize_multiquadratic([2, 3, 5, 7])


def test_parametrize_all_negative():
    a = (-2, -3, -5, -7, -11)
    r = parametrize_multiquadratic(a)
    check_result(a, r)


def test_parametrize_rationals():
    a = (Fraction(1, 2), Fraction(-3, 5), 7, Fraction(11, 9), -13)
    check_result(a, parametrize_multiquadratic(a))


def test_scaling_by_squares_gives_same_field():
    rng = random.Random(4)
    a = (2, 3, 5, 7, -1)
    u = [rng.randint(1, 9) for _ in range(5)]
    scaled = tuple(v * w * w for v, w in zip(a, u))
    r1 = parametrize_multiquadratic(a)
    r2 = parametrize_multiquadratic(scaled)
    check_result(scaled, r2)
    assert field_equals(specialize_E(r1.i, r1.epsilon, r1.t_values), specialize_E(r2.i, r2.epsilon, r2.t_values))


def test_json_shape():
    data = parametrize_multiquadratic([2, 3, 5, 7, -1]).to_json()
    assert {"a", "i", "sign", "permutation", "t", "witness", "verified"} <= set(data)
    assert data["verified"] is True
