"""Square classes of Q, multiquadratic fields, and the (Z/2)^5 parametrization.

A square class is stored as a sign and the set of primes with odd exponent.
A multiquadratic field ``Q(sqrt a_1, ..., sqrt a_k)`` is determined by the
F2-span of the classes of the ``a_j``, so field equality is a comparison of
reduced row echelon forms over the coordinates ``{-1} ∪ primes``.

Every (Z/2)^5-extension of Q is a specialization of one of the eight fields

    E_{i,σ} = Q(t1, ..., t4)(sqrt t1, ..., sqrt t4, sqrt(σ (t1 + ... + ti)))

and :func:`parametrize_multiquadratic` finds the index, sign and
specialization point constructively from a zero of a diagonal 5-variable form.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import CharacterizationMismatch, PreconditionError
from .numbers import trial_factor
from .qforms import DEFAULT_BUDGET, DiagonalQuadraticForm, find_isotropic_vector

FACTOR_CAP = 10**7
SIGN = -1  # coordinate label for the sign of a class


@dataclass(frozen=True, order=True)
class SquareClass:
    sign: int
    support: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PreconditionError("square class sign must be +1 or -1")
        if list(self.support) != sorted(set(self.support)):
            raise PreconditionError("square class support must be sorted and distinct")

    def __mul__(self, other: SquareClass) -> SquareClass:
        return SquareClass(
            self.sign * other.sign,
            tuple(sorted(set(self.support) ^ set(other.support))),
        )

    def is_trivial(self) -> bool:
        return self.sign == 1 and not self.support

    def representative(self) -> int:
        """The squarefree integer in this class."""
        n = self.sign
        for p in self.support:
            n *= p
        return n

    def coordinates(self) -> frozenset[int]:
        return frozenset(self.support) | ({SIGN} if self.sign < 0 else frozenset())

    def __str__(self) -> str:
        return str(self.representative())


def square_class(r, cap: int = FACTOR_CAP) -> SquareClass:
    r = Fraction(r)
    if r == 0:
        raise PreconditionError("zero has no square class")
    odd: set[int] = set()
    for n in (abs(r.numerator), r.denominator):
        if n > 1:
            for p, k in trial_factor(n, cap).items():
                if k % 2:
                    odd ^= {p}
    return SquareClass(1 if r > 0 else -1, tuple(sorted(odd)))


def _as_class(c) -> SquareClass:
    return c if isinstance(c, SquareClass) else square_class(c)


class MultiquadraticField:
    """``Q(sqrt c : c in classes)``, kept as a reduced F2 basis."""

    def __init__(self, classes: Iterable):
        self.classes = tuple(_as_class(c) for c in classes)
        self.coordinates = tuple(
            sorted(set().union(*(c.coordinates() for c in self.classes)))
        )
        self.basis = _rref([_mask(c, self.coordinates) for c in self.classes])

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def span_in(self, coordinates: Sequence[int]) -> tuple[int, ...]:
        return _rref([_mask(c, coordinates) for c in self.classes])

    def contains(self, c) -> bool:
        return field_equals(self, MultiquadraticField((*self.classes, _as_class(c))))

    def basis_classes(self) -> list[SquareClass]:
        out = []
        for row in self.basis:
            coords = {x for k, x in enumerate(self.coordinates) if row >> k & 1}
            sign = -1 if SIGN in coords else 1
            out.append(SquareClass(sign, tuple(sorted(coords - {SIGN}))))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiquadraticField):
            return NotImplemented
        return field_equals(self, other)

    def __hash__(self):
        return hash(frozenset(self.basis_classes()))

    def __repr__(self) -> str:
        gens = ", ".join(f"sqrt({c})" for c in self.basis_classes())
        return f"Q({gens})" if gens else "Q"


def _mask(c: SquareClass, coordinates: Sequence[int]) -> int:
    index = {x: k for k, x in enumerate(coordinates)}
    m = 0
    for x in c.coordinates():
        m |= 1 << index[x]
    return m


def _rref(rows: list[int]) -> tuple[int, ...]:
    """Reduced row echelon form over F2 of bitmask rows; pivots are highest bits."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis = [min(b, b ^ r) for b in basis]
            basis.append(r)
    return tuple(sorted(basis, reverse=True))


def field_equals(L1: MultiquadraticField, L2: MultiquadraticField) -> bool:
    coords = tuple(sorted(set(L1.coordinates) | set(L2.coordinates)))
    return L1.span_in(coords) == L2.span_in(coords)


def specialize_E(i: int, epsilon: int, t_values: Sequence) -> MultiquadraticField:
    """``E_{i,epsilon}`` specialized at ``t = t_values``."""
    if i not in (1, 2, 3, 4):
        raise PreconditionError("i must be in 1..4")
    if epsilon not in (1, -1):
        raise PreconditionError("epsilon must be +1 or -1")
    t = [Fraction(v) for v in t_values]
    if len(t) != 4:
        raise PreconditionError("need exactly four t values")
    if any(v == 0 for v in t):
        raise PreconditionError("t values must be nonzero")
    partial = epsilon * sum(t[:i])
    if partial == 0:
        raise PreconditionError(f"degenerate specialization: t1 + ... + t{i} = 0")
    return MultiquadraticField([*t, partial])


@dataclass(frozen=True)
class ParametrizationResult:
    a: tuple[Fraction, ...]
    i: int
    epsilon: int  # the sign σ of the parametrizing extension E_{i,σ}
    form_sign: int  # ε in the form a1 X1^2 + ... + a4 X4^2 - ε a5 X5^2
    permutation: tuple[int, ...]  # 1-based; position j holds the original index
    t_values: tuple[Fraction, ...]
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "a": [str(v) for v in self.a],
            "i": self.i,
            "sign": self.epsilon,
            "form_sign": self.form_sign,
            "permutation": list(self.permutation),
            "t": [str(v) for v in self.t_values],
            "witness": list(self.witness),
            "verified": True,
        }


def parametrize_multiquadratic(a: Sequence, budget: int = DEFAULT_BUDGET) -> ParametrizationResult:
    a = tuple(Fraction(v) for v in a)
    if len(a) != 5:
        raise PreconditionError("need exactly five rationals")
    if any(v == 0 for v in a):
        raise PreconditionError("the a_i must be nonzero")
    target = MultiquadraticField(a)
    if target.dimension != 5:
        raise PreconditionError(
            f"square classes of a are dependent (span has dimension {target.dimension})"
        )
    eps = 1 if all(v > 0 for v in a) else -1
    coeffs = [*a[:4], -eps * a[4]]
    if all(c < 0 for c in coeffs) or all(c > 0 for c in coeffs):
        # only when every a_i is negative: the other orientation is indefinite
        eps = -eps
        coeffs[4] = -eps * a[4]
    cert = find_isotropic_vector(DiagonalQuadraticForm(coeffs), True, budget)
    x = cert.witness
    nonzero = [j for j in range(4) if x[j] != 0]
    perm = nonzero + [j for j in range(4) if x[j] == 0]
    i = len(nonzero)
    t = tuple(a[j] * x[j] ** 2 if k < i else a[j] for k, j in enumerate(perm))
    a5 = square_class(a[4])
    passing = []
    for sigma in (eps, -eps):
        if square_class(sigma * sum(t[:i])) != a5:
            continue
        if field_equals(specialize_E(i, sigma, t), target):
            passing.append(sigma)
    if len(passing) != 1:
        raise CharacterizationMismatch(f"sign verification passed for {passing} on a={a}")
    return ParametrizationResult(
        a=a,
        i=i,
        epsilon=passing[0],
        form_sign=eps,
        permutation=tuple(j + 1 for j in perm),
        t_values=t,
        witness=x,
    )
