"""Group-theoretic predicates bounding the local dimension of a finite group.

A group containing a noncyclic abelian subgroup has local dimension at least
2.  The groups without one are those whose Sylow subgroups are all cyclic or
generalized quaternion; both descriptions are computed and compared.

The classification predicate picks out cyclic groups of order 2 or of odd
prime power order, and faithful semidirect products ``C ⋊ D`` of two such
cyclic groups.  Passing it is reported, never turned into a claim that the
local dimension equals 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharacterizationMismatch
from .groups import (
    FiniteGroup,
    centralizer,
    is_abelian,
    is_cyclic,
    is_generalized_quaternion,
    is_normal,
    order_is_prime_power,
    subgroups,
    sylow_subgroup,
)
from .numbers import prime_factors

CYCLIC = "cyclic"
GENERALIZED_QUATERNION = "generalized_quaternion"
OTHER = "other"
AT_LEAST_2 = ">=2"
UNRESOLVED = "unresolved"


def sylow_profile(G: FiniteGroup) -> dict[int, str]:
    out = {}
    for p in prime_factors(G.order) if G.order > 1 else []:
        P = sylow_subgroup(G, p)
        if is_cyclic(P):
            out[p] = CYCLIC
        elif is_generalized_quaternion(P):
            out[p] = GENERALIZED_QUATERNION
        else:
            out[p] = OTHER
    return out


def _noncyclic_abelian_by_enumeration(G: FiniteGroup) -> bool:
    return any(is_abelian(H) and not is_cyclic(H) for H in subgroups(G))


def _noncyclic_abelian_by_sylow(G: FiniteGroup) -> bool:
    return any(kind == OTHER for kind in sylow_profile(G).values())


def has_noncyclic_abelian_subgroup(G: FiniteGroup) -> bool:
    a = _noncyclic_abelian_by_enumeration(G)
    b = _noncyclic_abelian_by_sylow(G)
    if a != b:
        raise CharacterizationMismatch(
            f"{G.name}: subgroup enumeration says {a}, Sylow criterion says {b}"
        )
    return a


def _admissible_order(n: int) -> bool:
    # 2, or a nontrivial power of an odd prime
    return n == 2 or (n % 2 == 1 and n > 1 and order_is_prime_power(n))


def matches_locdim1_classification(G: FiniteGroup) -> bool:
    if is_cyclic(G) and _admissible_order(G.order):
        return True
    whole = G.whole()
    candidates = [H for H in subgroups(G) if _admissible_order(H.order) and is_cyclic(H)]
    for C in candidates:
        if G.order % C.order or not is_normal(C, whole):
            continue
        for D in candidates:
            if C.order * D.order != G.order:
                continue
            if set(C.elements) & set(D.elements) != {0}:
                continue
            # faithful: only the identity of D centralizes C
            if centralizer(D, C).order == 1:
                return True
    return False


@dataclass(frozen=True)
class LocalDimensionReport:
    group_name: str
    order: int
    has_noncyclic_abelian: bool
    sylow_profile: dict[int, str]
    lower_bound: str
    matches_locdim1_classification: bool

    def to_json(self) -> dict:
        return {
            "group_name": self.group_name,
            "order": self.order,
            "has_noncyclic_abelian": self.has_noncyclic_abelian,
            "sylow_profile": {str(p): k for p, k in self.sylow_profile.items()},
            "lower_bound": self.lower_bound,
            "matches_locdim1_classification": self.matches_locdim1_classification,
        }


def classify(G: FiniteGroup, name: str | None = None) -> LocalDimensionReport:
    nca = has_noncyclic_abelian_subgroup(G)
    return LocalDimensionReport(
        group_name=name or G.name or f"group of order {G.order}",
        order=G.order,
        has_noncyclic_abelian=nca,
        sylow_profile=sylow_profile(G),
        lower_bound=AT_LEAST_2 if nca else UNRESOLVED,
        matches_locdim1_classification=matches_locdim1_classification(G),
    )
