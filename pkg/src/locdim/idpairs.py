"""Inertia/decomposition pairs over Q and the primes that realize them.

For ``I`` cyclic of order ``e`` and normal in ``D`` with ``D/I`` cyclic,
conjugation gives a homomorphism ``eta: D -> (Z/e)^*``; a tame prime ``q``
admits a local extension with decomposition group ``D`` and inertia ``I``
exactly when ``q mod e`` generates the image ``V`` of ``eta``.

:func:`local_realizable_bruteforce` decides the same question directly from
the tame presentation ``<s, t | s^-1 t s = t^q>`` and is used as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError, WildPrimeError
from .groups import (
    FiniteGroup,
    Subgroup,
    as_subgroup,
    centralizer,
    conjugate_subgroup,
    coset_order,
    cyclic_generators,
    generated_subgroup,
    is_cyclic,
    is_normal,
    is_subgroup_of,
    quotient_is_cyclic,
    subgroup_as_group,
    subgroups,
)
from .numbers import euler_phi, is_prime, units_mod


@dataclass(frozen=True)
class UnitsModE:
    """``(Z/e)^*``; for ``e = 1`` the single element is written ``0``."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise PreconditionError("modulus must be positive")

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(units_mod(self.modulus))

    @property
    def identity(self) -> int:
        return 1 % self.modulus

    def __contains__(self, a: int) -> bool:
        return a in self.elements

    def cyclic_subgroup(self, a: int) -> frozenset[int]:
        e = self.modulus
        out = {self.identity}
        x = a % e
        while x not in out:
            out.add(x)
            x = x * a % e
        return frozenset(out)


@dataclass(frozen=True)
class CongruenceClassSet:
    modulus: int
    residues: tuple[int, ...]

    @property
    def density(self) -> Fraction:
        return Fraction(len(self.residues), euler_phi(self.modulus))

    def __contains__(self, q: int) -> bool:
        return q % self.modulus in self.residues


@dataclass(frozen=True)
class IdPair:
    group: FiniteGroup = field(repr=False)
    I: Subgroup
    D: Subgroup
    e: int
    eta: dict[int, int] = field(repr=False, hash=False, compare=False)
    V: frozenset[int]

    @property
    def units(self) -> UnitsModE:
        return UnitsModE(self.e)

    @property
    def V_generators(self) -> tuple[int, ...]:
        """The smallest generator of the cyclic group ``V``."""
        U = self.units
        for a in U.elements:
            if a in self.V and U.cyclic_subgroup(a) == self.V:
                return (a,)
        raise AssertionError("V is not cyclic")  # pragma: no cover

    def to_json(self) -> dict:
        R = realizable_residues(self)
        d = R.density
        return {
            "I": list(self.I.elements),
            "D": list(self.D.elements),
            "e": self.e,
            "V_generators": list(self.V_generators),
            "residues_mod_e": list(R.residues),
            "density": f"{d.numerator}/{d.denominator}",
        }


def _discrete_logs(G: FiniteGroup, tau: int, e: int) -> dict[int, int]:
    logs = {}
    x = 0
    for k in range(e):
        logs[x] = k
        x = G.table[x][tau]
    return logs


def compute_eta(I: Subgroup, D: Subgroup) -> dict[int, int]:
    """``eta(d) = a`` with ``d^-1 tau d = tau^a``, for every ``d`` in ``D``."""
    G = I.parent
    if not is_cyclic(I):
        raise PreconditionError("I must be cyclic")
    if not is_normal(I, D):
        raise PreconditionError("I must be a normal subgroup of D")
    e = I.order
    maps = []
    for tau in cyclic_generators(I):
        logs = _discrete_logs(G, tau, e)
        maps.append({d: logs[G.conj(tau, d)] % e for d in D.elements})
    eta = maps[0]
    if any(m != eta for m in maps[1:]):  # pragma: no cover - (Z/e)^* is abelian
        raise AssertionError("eta depends on the choice of generator")
    t = G.table
    for a in D.generators:
        for b in D.elements:
            if eta[t[a][b]] != eta[a] * eta[b] % e:  # pragma: no cover
                raise AssertionError("eta is not a homomorphism")
    one = 1 % e
    kernel = tuple(d for d in D.elements if eta[d] == one)
    if kernel != centralizer(D, I).elements:  # pragma: no cover
        raise AssertionError("kernel of eta differs from the centralizer")
    return eta


def is_id_pair_over_Q(I: Subgroup, D: Subgroup) -> bool:
    if I.parent is not D.parent or not is_subgroup_of(I, D):
        return False
    if not is_cyclic(I) or not is_normal(I, D):
        return False
    return quotient_is_cyclic(D, I)


def make_id_pair(I: Subgroup, D: FiniteGroup | Subgroup) -> IdPair:
    D = as_subgroup(D)
    if not is_id_pair_over_Q(I, D):
        raise PreconditionError("not an ID pair: need I cyclic, normal in D, D/I cyclic")
    eta = compute_eta(I, D)
    V = frozenset(eta.values())
    if not any(UnitsModE(I.order).cyclic_subgroup(a) == V for a in V):  # pragma: no cover
        raise AssertionError("V is not cyclic")
    return IdPair(I.parent, I, D, I.order, eta, V)


def realizable_residues(pi: IdPair) -> CongruenceClassSet:
    U = pi.units
    res = tuple(q for q in U.elements if U.cyclic_subgroup(q) == pi.V)
    return CongruenceClassSet(pi.e, res)


def local_realizable_bruteforce(pi: IdPair, q: int) -> bool:
    """Search for ``tau`` generating ``I`` and ``d`` with ``tau^d = tau^q`` and ``dI`` generating ``D/I``."""
    if not is_prime(q):
        raise PreconditionError(f"{q} is not prime")
    if pi.e > 1 and pi.e % q == 0:
        raise WildPrimeError(f"q={q} divides e={pi.e}: wild, not decided by this criterion")
    G = pi.group
    index = pi.D.order // pi.I.order
    generating = [d for d in pi.D.elements if coset_order(pi.D, pi.I, d) == index]
    for tau in cyclic_generators(pi.I):
        target = G.power(tau, q)
        if any(G.conj(tau, d) == target for d in generating):
            return True
    return False


def _pair_key(I: Subgroup, D: Subgroup) -> tuple:
    return (D.order, I.order, D.elements, I.elements)


def _canonical_pair(I: Subgroup, D: Subgroup) -> tuple[Subgroup, Subgroup]:
    best = (I, D)
    for g in range(I.parent.order):
        cand = (conjugate_subgroup(I, g), conjugate_subgroup(D, g))
        if _pair_key(*cand) < _pair_key(*best):
            best = cand
    return best


def enumerate_id_pairs(G: FiniteGroup) -> list[IdPair]:
    """One pair per class under simultaneous conjugation, sorted by ``(|D|, |I|, D, I)``."""
    all_subgroups = subgroups(G)
    classes = subgroups(G, conjugacy_classes=True)
    seen = {}
    for D in classes:
        for I in all_subgroups:
            if I.order > D.order or D.order % I.order:
                continue
            if not is_id_pair_over_Q(I, D):
                continue
            ci, cd = _canonical_pair(I, D)
            key = _pair_key(ci, cd)
            if key not in seen:
                seen[key] = (ci, cd)
    return [make_id_pair(*seen[k]) for k in sorted(seen)]


def count_tame_epimorphism_classes(D: FiniteGroup | Subgroup, q: int) -> int:
    """Classes under simultaneous conjugation of pairs ``(d, tau)`` with
    ``tau^d = tau^q``, ``<d, tau> = D`` and ``<tau>`` normal in ``D``."""
    if not is_prime(q):
        raise PreconditionError(f"{q} is not prime")
    H = subgroup_as_group(D) if isinstance(D, Subgroup) else D
    n = H.order
    if n % q == 0:
        raise WildPrimeError(f"q={q} divides |D|={n}")
    whole = H.whole()
    pairs = set()
    for tau in range(n):
        T = generated_subgroup(H, [tau])
        if not is_normal(T, whole):
            continue
        target = H.power(tau, q)
        for d in range(n):
            if H.conj(tau, d) == target and generated_subgroup(H, [d, tau]).order == n:
                pairs.add((d, tau))
    classes = 0
    while pairs:
        d, tau = pairs.pop()
        classes += 1
        for g in range(n):
            pairs.discard((H.conj(d, g), H.conj(tau, g)))
    return classes
