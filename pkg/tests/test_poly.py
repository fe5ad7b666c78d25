import random

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings
from hypothesis import strategies as st

from locdim.errors import PolynomialSyntaxError, PreconditionError
from locdim.poly import (
    IntPolynomial,
    S,
    T,
    X,
    discriminant,
    discriminant_x,
    distinct_root_count,
    exact_divide,
    parse,
    poly_gcd,
    radical_t,
    reduce_mod,
    resultant,
    resultant_x,
    squarefree_degree_mod,
)

sx, st_, ss = sympy.symbols("x t s")


def to_sympy(f: IntPolynomial):
    return sympy.expand(sympy.sympify(str(f), locals={"x": sx, "t": st_, "s": ss}))


def random_poly(rng, degs, coeff=5, density=0.6):
    """Random polynomial with exponent bounds ``degs = (dx, dt, ds)``."""
    terms = {}
    for i in range(degs[0] + 1):
        for j in range(degs[1] + 1):
            for k in range(degs[2] + 1):
                if rng.random() < density:
                    c = rng.randint(-coeff, coeff)
                    if c:
                        terms[(i, j, k)] = c
    return IntPolynomial(terms)


def test_parse_examples():
    assert parse("x^2 - t") == X**2 - T
    assert parse("0").is_zero()
    assert parse("(t-s)*(t+s) - t^2") == -(S**2)
    assert str(parse("x^2 - (t^2 - 1)")) == "x^2 - t^2 + 1"
    assert parse("-3*x*t^2 + 2*s") == -3 * X * T**2 + 2 * S


@pytest.mark.parametrize("text", ["x^", "x + * t", "(x - t", "y^2", "x^-1", ""])
def test_parse_errors_report_position(text):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse(text)
    assert 0 <= info.value.position <= len(text)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_string_round_trip(seed):
    f = random_poly(random.Random(seed), (2, 2, 2), coeff=20)
    assert parse(str(f)) == f


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_ring_operations_match_sympy(seed):
    rng = random.Random(seed)
    f = random_poly(rng, (2, 2, 1))
    g = random_poly(rng, (2, 1, 2))
    assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))
    assert to_sympy(f - g) == sympy.expand(to_sympy(f) - to_sympy(g))
    assert to_sympy(f.derivative("t")) == sympy.diff(to_sympy(f), st_)
    if g:
        assert exact_divide(f * g, g) == f


def test_resultant_and_discriminant_examples():
    assert discriminant_x(X**2 - T) == 4 * T
    assert discriminant_x(X**2 - (T**2 - 1)) == 4 * T**2 - 4
    assert resultant_x(X - T, X - S) == T - S
    assert resultant_x(X, X**3 + 1) == IntPolynomial.constant(1)
    # a degree-one polynomial has discriminant 1
    assert discriminant(T - S, "t") == IntPolynomial.constant(1)
    with pytest.raises(PreconditionError):
        discriminant_x(2 * X**2 + T)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_resultant_matches_sylvester_determinant(seed):
    # sympy's own resultant can flip sign when deg f < deg g; the Sylvester
    # determinant is the definition
    rng = random.Random(seed)
    f = random_poly(rng, (rng.randint(1, 3), 2, 1))
    g = random_poly(rng, (rng.randint(1, 3), 1, 1))
    if f.degree("x") < 1 or g.degree("x") < 1:
        return
    ring = sympy.ZZ[st_, ss]
    M = DomainMatrix.from_Matrix(sylvester(to_sympy(f), to_sympy(g), sx)).convert_to(ring)
    expected = sympy.expand(ring.to_sympy(M.det()))
    got = resultant(f, g, "x")
    assert to_sympy(got) == expected
    assert resultant(f, g, "x", method="subresultant") == got


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.lists(st.integers(-6, 6), min_size=1, max_size=3))
def test_resultant_product_formula(roots_f, roots_g):
    f = IntPolynomial.constant(1)
    for r in roots_f:
        f = f * (T - r)
    g = IntPolynomial.constant(1)
    for r in roots_g:
        g = g * (T - r)
    expected = 1
    for a in roots_f:
        for b in roots_g:
            expected *= a - b
    assert resultant(f, g, "t").constant_value() == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_resultant_vanishes_iff_common_factor(seed):
    rng = random.Random(seed)
    f = random_poly(rng, (2, 0, 0), coeff=4)
    g = random_poly(rng, (2, 0, 0), coeff=4)
    if rng.random() < 0.5:
        h = random_poly(rng, (1, 0, 0), coeff=4)
        f, g = f * h, g * h
    if f.degree("x") < 1 or g.degree("x") < 1:
        return
    common = sympy.degree(sympy.gcd(to_sympy(f), to_sympy(g)), sx) > 0
    assert resultant_x(f, g).is_zero() == common


def test_discriminant_matches_sympy_on_univariate():
    rng = random.Random(7)
    for _ in range(30):
        f = X ** rng.randint(2, 4) + random_poly(rng, (1, 0, 0), coeff=9)
        ours = discriminant_x(f).constant_value()
        assert ours == sympy.discriminant(to_sympy(f), sx)


def test_radical_examples():
    assert radical_t(4 * T) == T
    assert radical_t((T - 1) ** 2 * (T + 2)) == T**2 + T - 2
    assert radical_t(T**2 - S) == T**2 - S
    assert radical_t(IntPolynomial.constant(12)) == IntPolynomial.constant(1)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_radical_degree_counts_distinct_roots(roots):
    f = IntPolynomial.constant(3)
    for r in roots:
        f = f * (T - r)
    assert radical_t(f).degree("t") == len(set(roots))
    assert distinct_root_count(f) == len(set(roots))


def test_gcd_with_parameter():
    f = (T - S) * (T + 1) ** 2
    g = (T - S) * (T - 3)
    assert poly_gcd(f, g) in (T - S, S - T)


def test_squarefree_degree_mod_examples():
    assert squarefree_degree_mod(reduce_mod(T**2 - 1, 2)) == 1
    assert squarefree_degree_mod(reduce_mod(T**2 - 1, 5)) == 2
    assert squarefree_degree_mod(reduce_mod(T**3, 7)) == 1
    # f' = 0 in characteristic p
    assert squarefree_degree_mod(reduce_mod(T**3 + 1, 3)) == 1
    with pytest.raises(PreconditionError):
        reduce_mod(T, 4)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5, 7, 11]))
def test_reduction_is_a_ring_homomorphism(seed, p):
    rng = random.Random(seed)
    f = random_poly(rng, (2, 2, 1), coeff=30)
    g = random_poly(rng, (2, 1, 1), coeff=30)
    assert reduce_mod(f * g, p) == reduce_mod(f, p) * reduce_mod(g, p)
    assert reduce_mod(f + g, p) == reduce_mod(f, p) + reduce_mod(g, p)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=1, max_size=5), st.sampled_from([3, 5, 7, 13]))
def test_squarefree_degree_mod_counts_roots_over_fp(roots, p):
    f = IntPolynomial.constant(1)
    for r in roots:
        f = f * (T - r)
    assert squarefree_degree_mod(reduce_mod(f, p)) == len({r % p for r in roots})
