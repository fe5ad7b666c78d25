import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locdim.errors import PreconditionError, SearchBudgetExceeded
from locdim.numbers import prime_factors
from locdim.qforms import (
    INFINITY,
    DiagonalQuadraticForm,
    certify,
    find_isotropic_vector,
    hilbert_symbol,
    is_isotropic,
    is_isotropic_Q,
    is_local_square,
    isotropy_obstruction,
)

nonzero = st.integers(-10**4, 10**4).filter(bool)
PLACES = [INFINITY, 2, 3, 5, 7]


def squarefree(n: int) -> bool:
    return n != 0 and all(abs(n) % (p * p) for p in range(2, math.isqrt(abs(n)) + 1))


def has_primitive_zero_mod(coeffs, p, k) -> bool:
    """Brute force: some x, not all divisible by p, with sum c_i x_i^2 = 0 mod p^k."""
    m = p**k
    axis = np.arange(m, dtype=np.int64)
    grids = np.meshgrid(*([axis] * len(coeffs)), indexing="ij")
    total = sum(int(c) * g * g for c, g in zip(coeffs, grids)) % m
    primitive = np.zeros_like(total, dtype=bool)
    for g in grids:
        primitive |= g % p != 0
    return bool(np.any((total == 0) & primitive))


def test_hilbert_examples():
    assert hilbert_symbol(-1, -1, INFINITY) == -1
    assert hilbert_symbol(-1, -1, "inf") == -1
    assert hilbert_symbol(2, 5, 5) == -1
    for v in PLACES:
        assert hilbert_symbol(1, 17, v) == 1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(Fraction(1, 2), 3, 3) == hilbert_symbol(2, 3, 3)
    with pytest.raises(PreconditionError):
        hilbert_symbol(0, 3, 3)
    with pytest.raises(PreconditionError):
        hilbert_symbol(2, 3, 4)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_hilbert_symbol_matches_brute_force_odd(p):
    # for squarefree a, b the equation z^2 = a x^2 + b y^2 has a p-adic zero
    # exactly when it has a primitive zero mod p^2
    vals = [n for n in range(-30, 31) if squarefree(n)]
    rng = random.Random(p)
    for _ in range(40):
        a, b = rng.choice(vals), rng.choice(vals)
        expected = 1 if has_primitive_zero_mod((a, b, -1), p, 2) else -1
        assert hilbert_symbol(a, b, p) == expected, (a, b)


def test_hilbert_symbol_matches_brute_force_at_2():
    vals = [n for n in range(-30, 31) if squarefree(n)]
    for a in vals[::3]:
        for b in vals[::4]:
            expected = 1 if has_primitive_zero_mod((a, b, -1), 2, 5) else -1
            assert hilbert_symbol(a, b, 2) == expected, (a, b)


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero)
def test_product_formula(a, b):
    places = [INFINITY, 2, *sorted(set(prime_factors(abs(a)) + prime_factors(abs(b))) - {2})]
    assert math.prod(hilbert_symbol(a, b, v) for v in places) == 1


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero, nonzero, st.sampled_from(PLACES))
def test_bimultiplicative_and_symmetric(a, a2, b, v):
    assert hilbert_symbol(a * a2, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v)
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a, -a, v) == 1


def test_local_squares():
    assert is_local_square(17, 2)
    assert not is_local_square(5, 2)
    assert is_local_square(4, 3) and not is_local_square(2, 3)
    assert not is_local_square(-1, INFINITY)
    assert is_local_square(Fraction(9, 4), 5)


def test_isotropy_examples():
    assert is_isotropic_Q([1, -1])
    assert isotropy_obstruction([1, 1, 1, 1, 1]) == INFINITY
    assert is_isotropic_Q([1, 1, 1, 1, -7])
    assert not is_isotropic_Q([1, 1, 1, -7]) and isotropy_obstruction([1, 1, 1, -7]) == 2
    assert not is_isotropic_Q([1])
    with pytest.raises(PreconditionError):
        DiagonalQuadraticForm([1, 0, 2])
    with pytest.raises(PreconditionError):
        DiagonalQuadraticForm([1] * 6)


def _holzer_isotropic(a, b, c) -> bool:
    bounds = [math.isqrt(abs(b * c)), math.isqrt(abs(a * c)), math.isqrt(abs(a * b))]
    for x in range(bounds[0] + 1):
        for y in range(bounds[1] + 1):
            for z in range(bounds[2] + 1):
                if (x, y, z) != (0, 0, 0) and a * x * x + b * y * y + c * z * z == 0:
                    return True
    return False


def test_ternary_isotropy_matches_holzer_search():
    # squarefree, pairwise coprime ternary forms have a zero within Holzer's bounds
    rng = random.Random(3)
    vals = [n for n in range(-40, 41) if squarefree(n)]
    checked = 0
    while checked < 150:
        a, b, c = (rng.choice(vals) for _ in range(3))
        if math.gcd(a, b) != 1 or math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
            continue
        checked += 1
        assert is_isotropic_Q([a, b, c]) == _holzer_isotropic(a, b, c), (a, b, c)


@pytest.mark.parametrize("n", [3, 4])
def test_local_anisotropy_confirmed_mod_prime_powers(n):
    rng = random.Random(n)
    vals = [v for v in range(-15, 16) if squarefree(v)]
    hits = 0
    for _ in range(150):
        coeffs = [rng.choice(vals) for _ in range(n)]
        for p in (2, 3, 5):
            # mod 8 is too coarse at 2: 3x^2 + 14y^2 - 2z^2 has a primitive
            # zero mod 8 but none mod 16
            k = 4 if p == 2 else 2
            local = is_isotropic(coeffs, p)
            hits += not local
            assert local == has_primitive_zero_mod(coeffs, p, k), (coeffs, p)
    assert hits > 10


def test_five_variables_local():
    for p in (2, 3, 5, 7):
        assert is_isotropic([1, 1, 1, 1, 1], p)
    assert not is_isotropic([1, 1, 1, 1, 1], INFINITY)


def test_witness_examples():
    assert find_isotropic_vector([1, -1]).witness == (1, 1)
    assert find_isotropic_vector([1, 1, -2]).witness == (1, 1, 1)
    w = find_isotropic_vector([2, 3, 5, 7, -1], require_nonzero_last=True).witness
    assert w[-1] != 0 and max(map(abs, w)) <= 3
    assert DiagonalQuadraticForm([2, 3, 5, 7, -1])(w) == 0
    assert find_isotropic_vector(["1/2", "1/3", "-5/6"]).witness == (1, 1, 1)


def test_witness_errors():
    with pytest.raises(PreconditionError):
        find_isotropic_vector([1, 1, 1])
    with pytest.raises(SearchBudgetExceeded):
        find_isotropic_vector([1, -(1009**2)], budget=50)


def test_meyer_five_variable_corpus():
    rng = random.Random(17)
    for _ in range(60):
        coeffs = [rng.choice([-1, 1]) * rng.randint(1, 200) for _ in range(5)]
        if all(c > 0 for c in coeffs) or all(c < 0 for c in coeffs):
            coeffs[0] = -coeffs[0]
        cert = certify(coeffs)
        assert cert.isotropic
        x = cert.witness
        assert any(x) and math.gcd(*x) == 1
        assert DiagonalQuadraticForm(coeffs)(x) == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 30).filter(bool), min_size=2, max_size=4))
def test_certificates_are_sound(coeffs):
    try:
        cert = certify(coeffs, budget=200_000)
    except SearchBudgetExceeded:
        return
    if cert.isotropic:
        assert DiagonalQuadraticForm(coeffs)(cert.witness) == 0
        assert any(cert.witness)
    else:
        assert not is_isotropic(coeffs, cert.obstruction_place)


def test_json_shape():
    form = DiagonalQuadraticForm([1, 1, 1])
    assert certify(form).to_json(form) == {
        "coefficients": ["1", "1", "1"],
        "isotropic": False,
        "obstruction": "infinity",
    }
    form = DiagonalQuadraticForm([1, -1])
    assert certify(form).to_json(form)["witness"] == [1, 1]


def test_search_is_deterministic():
    a = [find_isotropic_vector([3, 5, -7, 11, -13]).witness for _ in range(3)]
    assert a[0] == a[1] == a[2]
