"""Elementary integer helpers: primality, factorization, Legendre symbols."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import sympy

from .errors import FactorizationError, PreconditionError

TRIAL_DIVISION_CAP = 10**7


def is_prime(n: int) -> bool:
    return n >= 2 and bool(sympy.isprime(n))


def primes_up_to(n: int) -> list[int]:
    return list(sympy.primerange(2, n + 1))


def prime_factors(n: int) -> list[int]:
    """Sorted distinct primes dividing ``n`` (``n`` nonzero)."""
    if n == 0:
        raise PreconditionError("0 has no finite factorization")
    return sorted(int(q) for q in sympy.factorint(abs(n)))


def trial_factor(n: int, cap: int = TRIAL_DIVISION_CAP) -> dict[int, int]:
    """Factor ``n`` by trial division with divisors up to ``cap``.

    A leftover cofactor is accepted only when it is provably prime (either
    below ``cap**2`` or passing a primality test); otherwise this raises.
    """
    n = abs(n)
    if n == 0:
        raise PreconditionError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    limit = min(isqrt(n), cap)
    while d <= limit:
        for q in (d, d + 2):
            if n % q == 0:
                while n % q == 0:
                    out[q] = out.get(q, 0) + 1
                    n //= q
                limit = min(isqrt(n), cap)
        d += 6
    if n > 1:
        if n > cap * cap and not is_prime(n):
            raise FactorizationError(f"cofactor {n} not factored by trial division up to {cap}")
        out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))


def valuation(r: int | Fraction, p: int) -> int:
    r = Fraction(r)
    if r == 0:
        raise PreconditionError("valuation of 0 is infinite")
    v = 0
    num, den = r.numerator, r.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def legendre(a: int, p: int) -> int:
    """Legendre symbol for an odd prime ``p``."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def euler_phi(n: int) -> int:
    return int(sympy.totient(n))


def units_mod(n: int) -> list[int]:
    """Residues coprime to ``n``; for ``n = 1`` the single class ``0``."""
    if n == 1:
        return [0]
    return [a for a in range(1, n) if gcd(a, n) == 1]


@dataclass(frozen=True)
class FactorEffort:
    """Deterministic work limits for :func:`factor_with_budget`."""

    trial_limit: int = 10**5
    rho_steps: int = 20_000
    pm1_bound: int = 20_000
    ecm_curves: int = 8
    ecm_b1: int = 2_000
    ecm_b2: int = 50_000


DEFAULT_EFFORT = FactorEffort()


def factor_with_budget(n: int, effort: FactorEffort = DEFAULT_EFFORT) -> tuple[dict[int, int], list[int]]:
    """Factor ``|n|`` as far as ``effort`` allows.

    Returns the prime factorization found so far and the list of composite
    cofactors that resisted every method.  Seeds are fixed, so the result
    depends only on ``n`` and ``effort``.
    """
    n = abs(n)
    if n == 0:
        raise PreconditionError("cannot factor 0")
    primes: dict[int, int] = {}
    small = sympy.factorint(n, limit=effort.trial_limit, use_rho=False, use_pm1=False, use_ecm=False)
    pending = []
    for q, k in small.items():
        q, k = int(q), int(k)
        if is_prime(q):
            primes[q] = primes.get(q, 0) + k
        else:
            pending.extend([q] * k)
    unfactored = []
    while pending:
        m = pending.pop()
        if m == 1:
            continue
        if is_prime(m):
            primes[m] = primes.get(m, 0) + 1
            continue
        d = _split(m, effort)
        if d is None:
            unfactored.append(m)
        else:
            d = int(d)
            pending.extend([d, m // d])
    return dict(sorted(primes.items())), sorted(unfactored)


def _split(m: int, effort: FactorEffort) -> int | None:
    r = isqrt(m)
    if r * r == m:
        return r
    d = sympy.ntheory.pollard_rho(m, retries=2, seed=1, max_steps=effort.rho_steps)
    if d:
        return d
    d = sympy.ntheory.pollard_pm1(m, B=effort.pm1_bound, seed=1)
    if d:
        return d
    try:
        found = sympy.ntheory.ecm(m, B1=effort.ecm_b1, B2=effort.ecm_b2, max_curve=effort.ecm_curves, seed=1)
    except ValueError:
        return None
    found = sorted(q for q in found if q != m)
    return found[0] if found else None
