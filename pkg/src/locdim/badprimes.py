"""Primes at which the x-discriminant of a monic family degenerates.

For ``P(t, x)`` monic in ``x`` with discriminant ``D(t)``, a prime ``p`` is
bad when

* (A) ``p`` divides the leading coefficient of ``D``, or the reduction of the
  radical of ``D`` modulo ``p`` is inseparable or drops degree;
* (B) ``D`` vanishes modulo ``p``, or ``D`` mod ``p`` has fewer distinct
  roots over the algebraic closure than ``D`` has over Q-bar.

The two descriptions select the same primes, and every membership test here
evaluates both and refuses to answer if they disagree.  The bad primes are
exactly the prime divisors of ``lc(D) * disc(rad D)``, so listing them is an
integer factorization problem; the report says when that was incomplete.

For families ``P(s, t, x)`` the residue classes of ``s`` that make a prime
bad are bounded by ``d_P = a_P + b_P`` outside a finite set ``S_P``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import CharacterizationMismatch, PreconditionError
from .numbers import DEFAULT_EFFORT, FactorEffort, factor_with_budget, is_prime, prime_factors
from .poly import (
    IntPolynomial,
    discriminant,
    discriminant_x,
    is_separable_mod,
    radical,
    reduce_mod,
    squarefree_degree_mod,
)

DIVIDES_LEADING_COEFFICIENT = "divides_leading_coefficient"
RADICAL_INSEPARABLE = "radical_inseparable_mod_p"
DISCRIMINANT_VANISHES = "discriminant_vanishes_mod_p"


@dataclass(frozen=True)
class DiscriminantData:
    """``D = disc_x(P)`` in ``Z[t]`` with the pieces both tests need."""

    discriminant: IntPolynomial
    radical: IntPolynomial
    leading: int
    distinct_roots: int

    @classmethod
    def of_discriminant(cls, D: IntPolynomial) -> DiscriminantData:
        if not D:
            raise PreconditionError("discriminant is zero: P is inseparable in x")
        if set(D.variables()) - {"t"}:
            raise PreconditionError("expected a discriminant in Z[t]")
        rad = radical(D, "t")
        return cls(D, rad, D.leading_coefficient("t").constant_value(), max(rad.degree("t"), 0))

    @classmethod
    def of_polynomial(cls, P: IntPolynomial) -> DiscriminantData:
        _check_family(P, allow_s=False)
        return cls.of_discriminant(discriminant_x(P))

    def bad_prime_product(self) -> int:
        """``lc(D) * disc(rad D)``; its prime divisors are the bad primes."""
        d = 1
        if self.radical.degree("t") >= 2:
            d = discriminant(self.radical, "t").constant_value()
        return self.leading * d


def _check_family(P: IntPolynomial, allow_s: bool) -> None:
    if P.degree("x") < 1 or P.leading_coefficient("x") != 1:
        raise PreconditionError("P must be monic of positive degree in x")
    if not allow_s and P.degree("s") > 0:
        raise PreconditionError("P must have coefficients in Z[t]")


def reason_a(data: DiscriminantData, p: int) -> str | None:
    """Leading coefficient / inseparable radical test."""
    if data.leading % p == 0:
        if data.discriminant.integer_content() % p == 0:
            return DISCRIMINANT_VANISHES
        return DIVIDES_LEADING_COEFFICIENT
    rbar = reduce_mod(data.radical, p)
    if rbar.degree("t") < data.radical.degree("t") or not is_separable_mod(rbar, "t"):
        return RADICAL_INSEPARABLE
    return None


def reason_b(data: DiscriminantData, p: int) -> str | None:
    """Vanishing / distinct-root-count test."""
    dbar = reduce_mod(data.discriminant, p)
    if dbar.is_zero():
        return DISCRIMINANT_VANISHES
    if squarefree_degree_mod(dbar, "t") < data.distinct_roots:
        if data.leading % p == 0:
            return DIVIDES_LEADING_COEFFICIENT
        return RADICAL_INSEPARABLE
    return None


def bad_reason(data: DiscriminantData, p: int) -> str | None:
    """Why ``p`` is bad for ``data`` (``None`` if it is good); checks A against B."""
    a, b = reason_a(data, p), reason_b(data, p)
    if (a is None) != (b is None):
        raise CharacterizationMismatch(
            f"p={p}: leading-coefficient/radical test says {a}, root-count test says {b}"
        )
    return a


@dataclass(frozen=True)
class BadPrimeReport:
    poly: IntPolynomial
    discriminant: IntPolynomial
    primes: tuple[int, ...]
    reasons: dict[int, str]
    # composite cofactors of lc(D) * disc(rad D) that were not split; each of
    # their prime divisors is bad as well
    unfactored: tuple[int, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.unfactored

    def to_json(self) -> dict:
        return {
            "poly": str(self.poly),
            "discriminant": str(self.discriminant),
            "primes": list(self.primes),
            "reasons": {str(p): r for p, r in self.reasons.items()},
            "complete": self.complete,
            "unfactored": [str(m) for m in self.unfactored],
        }


def bad_prime_set(P: IntPolynomial, effort: FactorEffort = DEFAULT_EFFORT) -> BadPrimeReport:
    data = DiscriminantData.of_polynomial(P)
    factors, unfactored = factor_with_budget(data.bad_prime_product(), effort)
    reasons = {}
    for p in factors:
        why = bad_reason(data, p)
        if why is None:
            raise CharacterizationMismatch(f"{p} divides lc(D)*disc(rad D) but tests as good")
        reasons[p] = why
    return BadPrimeReport(P, data.discriminant, tuple(factors), reasons, tuple(unfactored))


# -- parametric families ----------------------------------------------------


@dataclass(frozen=True)
class ResidueBoundConstants:
    a_P: int
    b_P: int
    S_P: tuple[int, ...]
    leading: IntPolynomial  # a(s)
    radical: IntPolynomial  # radical of D in t over Q(s)
    radical_discriminant: IntPolynomial  # disc_t of the radical, in Z[s]

    @property
    def d_P(self) -> int:
        return self.a_P + self.b_P


@lru_cache(maxsize=256)
def residue_bound_constants(P: IntPolynomial) -> ResidueBoundConstants:
    _check_family(P, allow_s=True)
    D = _family_discriminant(P)
    if not D:
        raise PreconditionError("discriminant is zero: P is inseparable in x")
    a = D.leading_coefficient("t")
    rad = radical(D, "t")
    if rad.degree("t") >= 2:
        delta = discriminant(rad, "t")
    else:
        delta = IntPolynomial.constant(1)
    if delta.degree("t") > 0 or a.degree("t") > 0:  # pragma: no cover - algebraic invariant
        raise AssertionError("a(s) and disc_t(rad) must not involve t")
    bad = set(prime_factors(a.integer_content())) | set(prime_factors(delta.integer_content()))
    return ResidueBoundConstants(
        a_P=max(a.degree("s"), 0),
        b_P=max(delta.degree("s"), 0),
        S_P=tuple(sorted(bad)),
        leading=a,
        radical=rad,
        radical_discriminant=delta,
    )


@lru_cache(maxsize=256)
def _family_discriminant(P: IntPolynomial) -> IntPolynomial:
    return discriminant_x(P)


@dataclass(frozen=True)
class ResidueBoundReport:
    poly: IntPolynomial
    p: int
    lifts: int
    bad_residues: tuple[int, ...]
    reasons: dict[int, str]
    constants: ResidueBoundConstants = field(repr=False)

    @property
    def d_P(self) -> int:
        return self.constants.d_P

    @property
    def p_in_S_P(self) -> bool:
        return self.p in self.constants.S_P

    @property
    def within_bound(self) -> bool | None:
        """The bound is only claimed for ``p`` outside ``S_P``."""
        if self.p_in_S_P:
            return None
        return len(self.bad_residues) <= self.d_P

    def to_json(self) -> dict:
        c = self.constants
        return {
            "poly": str(self.poly),
            "p": self.p,
            "lifts": self.lifts,
            "a_P": c.a_P,
            "b_P": c.b_P,
            "d_P": c.d_P,
            "S_P": list(c.S_P),
            "p_in_S_P": self.p_in_S_P,
            "bad_residues": list(self.bad_residues),
            "within_bound": self.within_bound,
            "reasons": {str(r): why for r, why in self.reasons.items()},
        }


def specialization_bad_reason(D: IntPolynomial, s0: int, p: int) -> str | None:
    """Whether ``p`` is bad for ``P(s0, t, x)``, given ``D = disc_x(P)``.

    ``disc_x`` commutes with substituting ``s`` because ``P`` is monic in x.
    A specialization whose discriminant vanishes identically is reported as
    vanishing modulo every prime.
    """
    data = _specialized_data(D, s0)
    if data is None:
        return DISCRIMINANT_VANISHES
    return bad_reason(data, p)


@lru_cache(maxsize=4096)
def _specialized_data(D: IntPolynomial, s0: int) -> DiscriminantData | None:
    # the radical over Q does not depend on p, and lifts repeat across primes
    D0 = D.substitute("s", s0)
    return DiscriminantData.of_discriminant(D0) if D0 else None


def bad_residues_sampled(P: IntPolynomial, p: int, lifts_per_class: int = 3) -> ResidueBoundReport:
    """Residues ``r`` mod ``p`` with some sampled lift ``s0 = r + k p`` making ``p`` bad."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if lifts_per_class < 1:
        raise PreconditionError("lifts_per_class must be positive")
    constants = residue_bound_constants(P)
    D = _family_discriminant(P)
    bad = []
    reasons = {}
    for r in range(p):
        for k in range(lifts_per_class):
            why = specialization_bad_reason(D, r + k * p, p)
            if why is not None:
                bad.append(r)
                reasons[r] = why
                break
    return ResidueBoundReport(P, p, lifts_per_class, tuple(bad), reasons, constants)
