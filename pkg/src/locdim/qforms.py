"""Hilbert symbols and isotropy of diagonal quadratic forms over Q.

Local isotropy is decided from Hilbert symbols and the discriminant (the
classical criteria for 2, 3 and 4 variables; every form in 5 or more
variables is isotropic at a finite place).  Global isotropy is the
conjunction over the real place, 2, and the primes dividing a coefficient.

Witnesses are found separately by growing-box search.  The search never
feeds back into the isotropy decision.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product

import numpy as np

from .errors import PreconditionError, SearchBudgetExceeded
from .numbers import is_prime, legendre, prime_factors

INFINITY = "infinity"
DEFAULT_BUDGET = 2_000_000

Place = int | str


def normalize_place(place) -> Place:
    if isinstance(place, str):
        if place.lower() in ("inf", "infinity", "oo", "real"):
            return INFINITY
        try:
            place = int(place)
        except ValueError:
            raise PreconditionError(f"unknown place {place!r}") from None
    if isinstance(place, float) and math.isinf(place):
        return INFINITY
    if not isinstance(place, int) or not is_prime(place):
        raise PreconditionError(f"finite place must be a prime, got {place!r}")
    return place


def _square_free_int(r: Fraction | int) -> int:
    """An integer in the same square class as ``r`` (numerator times denominator)."""
    r = Fraction(r)
    if r == 0:
        raise PreconditionError("zero has no square class")
    return r.numerator * r.denominator


def _unit_part(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a, b, place) -> int:
    """The Hilbert symbol ``(a, b)_v`` of two nonzero rationals."""
    place = normalize_place(place)
    a, b = _square_free_int(a), _square_free_int(b)
    if place == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    p = place
    alpha, u = _unit_part(a, p)
    beta, v = _unit_part(b, p)
    if p != 2:
        sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
        return sign * legendre(u, p) ** beta * legendre(v, p) ** alpha
    eps_u, eps_v = ((u - 1) // 2) % 2, ((v - 1) // 2) % 2
    om_u, om_v = ((u * u - 1) // 8) % 2, ((v * v - 1) // 8) % 2
    return -1 if (eps_u * eps_v + alpha * om_v + beta * om_u) % 2 else 1


def is_local_square(r, place) -> bool:
    place = normalize_place(place)
    n = _square_free_int(r)
    if place == INFINITY:
        return n > 0
    v, u = _unit_part(n, place)
    if v % 2:
        return False
    if place == 2:
        return u % 8 == 1
    return legendre(u, place) == 1


@dataclass(frozen=True)
class DiagonalQuadraticForm:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not 1 <= len(coeffs) <= 5:
            raise PreconditionError("a diagonal form here has 1 to 5 coefficients")
        if any(c == 0 for c in coeffs):
            raise PreconditionError("degenerate form: zero coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __call__(self, x: Sequence[int]) -> Fraction:
        return sum((c * v * v for c, v in zip(self.coefficients, x)), Fraction(0))

    def discriminant(self) -> Fraction:
        return reduce(lambda u, v: u * v, self.coefficients, Fraction(1))

    def hasse_invariant(self, place) -> int:
        a = self.coefficients
        out = 1
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                out *= hilbert_symbol(a[i], a[j], place)
        return out

    def relevant_places(self) -> list[Place]:
        primes = {2}
        for c in self.coefficients:
            for n in (c.numerator, c.denominator):
                if abs(n) > 1:
                    primes.update(prime_factors(n))
        return [INFINITY, *sorted(primes)]

    def integer_coefficients(self) -> tuple[int, ...]:
        """Coefficients scaled by a common denominator; same zeros."""
        den = reduce(math.lcm, (c.denominator for c in self.coefficients), 1)
        return tuple(int(c * den) for c in self.coefficients)


@dataclass(frozen=True)
class IsotropyCertificate:
    isotropic: bool
    witness: tuple[int, ...] | None = None
    obstruction_place: Place | None = None

    def to_json(self, form: DiagonalQuadraticForm) -> dict:
        out = {"coefficients": [str(c) for c in form.coefficients], "isotropic": self.isotropic}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.obstruction_place is not None:
            out["obstruction"] = self.obstruction_place
        return out


def _as_form(form) -> DiagonalQuadraticForm:
    return form if isinstance(form, DiagonalQuadraticForm) else DiagonalQuadraticForm(form)


def is_isotropic(form, place) -> bool:
    """Local isotropy at a prime or at the real place."""
    form = _as_form(form)
    place = normalize_place(place)
    a = form.coefficients
    n = len(a)
    if n == 1:
        return False
    if place == INFINITY:
        return any(c > 0 for c in a) and any(c < 0 for c in a)
    if n == 2:
        return is_local_square(-a[0] * a[1], place)
    d = form.discriminant()
    eps = form.hasse_invariant(place)
    if n == 3:
        return hilbert_symbol(-1, -d, place) == eps
    if n == 4:
        return not is_local_square(d, place) or eps == hilbert_symbol(-1, -1, place)
    return True


def isotropy_obstruction(form) -> Place | None:
    """First place (real place first, then primes ascending) where ``form`` is anisotropic."""
    form = _as_form(form)
    if len(form) == 1:
        return INFINITY
    for v in form.relevant_places():
        if not is_isotropic(form, v):
            return v
    return None


def is_isotropic_Q(form) -> bool:
    form = _as_form(form)
    if len(form) == 1:
        return False
    return isotropy_obstruction(form) is None


def find_isotropic_vector(
    form,
    require_nonzero_last: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> IsotropyCertificate:
    """A primitive integer zero of ``form``, found by box search.

    All coordinates but the last range over growing boxes ``[0, B]``; the
    last one is solved for exactly.  ``budget`` caps the number of candidate
    vectors examined.
    """
    form = _as_form(form)
    where = isotropy_obstruction(form)
    if where is not None:
        raise PreconditionError(f"form is anisotropic at {where}")
    c = form.integer_coefficients()
    x = _box_search(c, require_nonzero_last, budget)
    g = reduce(math.gcd, x)
    x = tuple(v // g for v in x)
    if form(x) != 0:  # pragma: no cover - exact arithmetic
        raise AssertionError("search returned a non-zero of the form")
    return IsotropyCertificate(True, x, None)


def certify(form, budget: int = DEFAULT_BUDGET) -> IsotropyCertificate:
    form = _as_form(form)
    where = isotropy_obstruction(form)
    if where is not None:
        return IsotropyCertificate(False, None, where)
    return find_isotropic_vector(form, False, budget)


def _box_search(c: Sequence[int], nonzero_last: bool, budget: int) -> tuple[int, ...]:
    n = len(c)
    head, last = c[:-1], c[-1]
    examined = 0
    prev = -1
    bound = 1
    while True:
        size = (bound + 1) ** (n - 1) - (prev + 1) ** (n - 1)
        if examined + size > budget:
            raise SearchBudgetExceeded(
                f"no isotropic vector with coordinates up to {prev} within budget {budget}"
            )
        hit = _search_shell(head, last, prev, bound, nonzero_last)
        examined += size
        if hit is not None:
            return hit
        prev, bound = bound, 2 * bound


def _search_shell(head, last, prev, bound, nonzero_last):
    """Search vectors with max coordinate in ``(prev, bound]``, lexicographically."""
    k = len(head)
    big = max(abs(v) for v in (*head, last)) * (k + 1) * bound * bound
    if big >= 2**62:
        return _search_shell_python(head, last, prev, bound, nonzero_last)
    axis = np.arange(bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * k), indexing="ij")
    ys = np.stack([g.ravel() for g in grids], axis=1)
    ys = ys[ys.max(axis=1) > prev]
    total = (ys * ys) @ np.asarray(head, dtype=np.int64)
    target = -total
    ok = np.zeros(len(ys), dtype=bool)
    divisible = target % last == 0
    q = np.where(divisible, target // last, -1)
    root = np.floor(np.sqrt(np.maximum(q, 0).astype(np.float64))).astype(np.int64)
    # float sqrt can be off by one near large squares
    for delta in (-1, 0, 1):
        r = root + delta
        ok |= divisible & (q > 0) & (r > 0) & (r * r == q)
    if not nonzero_last:
        ok |= (total == 0) & (ys.max(axis=1) > 0)
    idx = np.flatnonzero(ok)
    if idx.size == 0:
        return None
    i = int(idx[0])
    y = [int(v) for v in ys[i]]
    qi = int(q[i])
    xl = math.isqrt(qi) if qi > 0 else 0
    return (*y, xl)


def _search_shell_python(head, last, prev, bound, nonzero_last):
    for y in product(range(bound + 1), repeat=len(head)):
        if max(y) <= prev:
            continue
        total = sum(h * v * v for h, v in zip(head, y))
        if total == 0 and not nonzero_last and any(y):
            return (*y, 0)
        if (-total) % last == 0:
            q = -total // last
            if q > 0:
                r = math.isqrt(q)
                if r * r == q:
                    return (*y, r)
    return None
