"""Finite groups as explicit Cayley tables, and their subgroups.

Element ``0`` is always the identity.  Products are read left to right:
``table[i][j]`` is the index of ``g_i * g_j``, and for permutation groups
this means "apply ``g_i`` first, then ``g_j``".  Conjugation follows the
exponent convention ``x^g = g^-1 x g``.

Everything here is brute force on purpose.  The groups we care about have
at most a few dozen elements, and a full table makes every predicate easy
to audit.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from .errors import GroupTooLarge, PreconditionError
from .numbers import is_prime, prime_factors

MAX_CLOSURE_ORDER = 10**5
# Building the full table costs order**2 products in pure Python.
MAX_TABLE_ORDER = 4096
MAX_SUBGROUP_ORDER = 64


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        name: str | None = None,
        *,
        audit: bool = False,
    ):
        n = len(table)
        if n == 0:
            raise PreconditionError("a group has at least one element")
        rows = tuple(tuple(int(v) for v in row) for row in table)
        for row in rows:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise PreconditionError("table must be a square array of element indices")
        if rows[0] != tuple(range(n)) or any(rows[i][0] != i for i in range(n)):
            raise PreconditionError("element 0 must be a two-sided identity")
        inverse = []
        for i, row in enumerate(rows):
            try:
                inverse.append(row.index(0))
            except ValueError:
                raise PreconditionError(f"element {i} has no inverse") from None
        self.order = n
        self.table = rows
        self.inverse = tuple(inverse)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self._orders: tuple[int, ...] | None = None
        if audit:
            self.audit()

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, order={self.order})"

    def audit(self) -> None:
        """Check associativity and inverses with a full triple loop."""
        t = self.table
        n = self.order
        for i in range(n):
            if t[i][self.inverse[i]] != 0 or t[self.inverse[i]][i] != 0:
                raise PreconditionError(f"inverse of {i} is not two-sided")
            if self.inverse[self.inverse[i]] != i:
                raise PreconditionError(f"inverse is not an involution at {i}")
            ti = t[i]
            for j in range(n):
                tij = t[ti[j]]
                tj = t[j]
                for k in range(n):
                    if tij[k] != ti[tj[k]]:
                        raise PreconditionError(f"not associative at ({i}, {j}, {k})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        result = 0
        base = a
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def conj(self, x: int, g: int) -> int:
        """Return ``g^-1 x g``."""
        return self.table[self.table[self.inverse[g]][x]][g]

    def element_order(self, a: int) -> int:
        return self.element_orders()[a]

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            orders = []
            for a in range(self.order):
                k, x = 1, a
                while x != 0:
                    x = self.table[x][a]
                    k += 1
                orders.append(k)
            self._orders = tuple(orders)
        return self._orders

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def whole(self) -> Subgroup:
        cached = self.__dict__.get("_whole")
        if cached is None:
            cached = subgroup_from_elements(self, range(self.order))
            self._whole = cached
        return cached

    def trivial(self) -> Subgroup:
        return Subgroup(self, (0,), ())

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent``, stored as its sorted element indices."""

    parent: FiniteGroup = field(repr=False)
    elements: tuple[int, ...]
    generators: tuple[int, ...] = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self._members

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def _members(self) -> frozenset[int]:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_member_set", cached)
        return cached


def as_subgroup(H: FiniteGroup | Subgroup) -> Subgroup:
    return H.whole() if isinstance(H, FiniteGroup) else H


def _close(G: FiniteGroup, start: Iterable[int], gens: Sequence[int]) -> list[int]:
    t = G.table
    seen = bytearray(G.order)
    out = []
    for g in start:
        if not seen[g]:
            seen[g] = 1
            out.append(g)
    if not seen[0]:
        seen[0] = 1
        out.append(0)
    i = 0
    while i < len(out):
        row = t[out[i]]
        for s in gens:
            y = row[s]
            if not seen[y]:
                seen[y] = 1
                out.append(y)
        i += 1
    return out


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = tuple(g for g in gens if g != 0)
    return Subgroup(G, tuple(sorted(_close(G, [0], gens))), gens)


def subgroup_from_elements(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    """Wrap a set already known to be a subgroup, choosing generators greedily."""
    elems = sorted(set(elems))
    gens: list[int] = []
    reached = [0]
    members = set(reached)
    for g in elems:
        if g not in members:
            gens.append(g)
            reached = _close(G, reached, gens)
            members = set(reached)
    return Subgroup(G, tuple(elems), tuple(gens))


def _extend(H: Subgroup, g: int) -> Subgroup:
    gens = H.generators + (g,)
    return Subgroup(H.parent, tuple(sorted(_close(H.parent, H.elements, gens))), gens)


def conjugate_subgroup(H: Subgroup, g: int) -> Subgroup:
    G = H.parent
    return Subgroup(
        G,
        tuple(sorted(G.conj(h, g) for h in H.elements)),
        tuple(G.conj(h, g) for h in H.generators),
    )


def subgroups(
    G: FiniteGroup,
    conjugacy_classes: bool = False,
    cap: int = MAX_SUBGROUP_ORDER,
) -> list[Subgroup]:
    """All subgroups of ``G``, sorted by size and then by element tuple.

    Every subgroup is reached by adjoining one element at a time to a smaller
    subgroup, and adjoining ``g`` or ``hg`` (``h`` in ``H``) gives the same
    result, so one element per right coset suffices.
    """
    if G.order > cap:
        raise GroupTooLarge(f"subgroup enumeration capped at order {cap}, got {G.order}")
    trivial = G.trivial()
    found = {trivial.elements: trivial}
    queue = [trivial]
    t = G.table
    while queue:
        H = queue.pop()
        covered = bytearray(G.order)
        for h in H.elements:
            covered[h] = 1
        for g in range(G.order):
            if covered[g]:
                continue
            for h in H.elements:
                covered[t[h][g]] = 1
            K = _extend(H, g)
            if K.elements not in found:
                found[K.elements] = K
                queue.append(K)
    result = sorted(found.values(), key=lambda K: (K.order, K.elements))
    if conjugacy_classes:
        result = [K for K in result if canonical_conjugate(K).elements == K.elements]
    return result


def canonical_conjugate(H: Subgroup) -> Subgroup:
    """The conjugate of ``H`` with the lexicographically smallest element tuple."""
    best = H
    for g in range(H.parent.order):
        K = conjugate_subgroup(H, g)
        if K.elements < best.elements:
            best = K
    return best


def is_subgroup_of(H: Subgroup, K: Subgroup) -> bool:
    return all(h in K for h in H.elements)


def is_abelian(H: FiniteGroup | Subgroup) -> bool:
    H = as_subgroup(H)
    t = H.parent.table
    gens = H.generators
    return all(t[a][b] == t[b][a] for a in gens for b in gens)


def is_cyclic(H: FiniteGroup | Subgroup) -> bool:
    H = as_subgroup(H)
    orders = H.parent.element_orders()
    return any(orders[h] == H.order for h in H.elements)


def cyclic_generators(H: Subgroup) -> list[int]:
    orders = H.parent.element_orders()
    return [h for h in H.elements if orders[h] == H.order]


def centralizer(G: FiniteGroup | Subgroup, H: Subgroup) -> Subgroup:
    """``C_G(H)``: the elements of ``G`` commuting with every element of ``H``."""
    G = as_subgroup(G)
    t = G.parent.table
    gens = H.generators
    elems = [g for g in G.elements if all(t[g][h] == t[h][g] for h in gens)]
    return subgroup_from_elements(G.parent, elems)


def normalizer(G: FiniteGroup | Subgroup, H: Subgroup) -> Subgroup:
    G = as_subgroup(G)
    P = G.parent
    elems = [g for g in G.elements if all(P.conj(h, g) in H for h in H.generators)]
    return subgroup_from_elements(P, elems)


def is_normal(H: Subgroup, D: FiniteGroup | Subgroup) -> bool:
    """Whether ``H`` is a normal subgroup of ``D`` (``H`` must lie in ``D``)."""
    D = as_subgroup(D)
    if not is_subgroup_of(H, D):
        return False
    P = D.parent
    return all(P.conj(h, d) in H for d in D.generators for h in H.generators)


def coset_order(D: Subgroup, I: Subgroup, d: int) -> int:
    """Order of ``dI`` in ``D/I``."""
    P = D.parent
    k, x = 1, d
    while x not in I:
        x = P.table[x][d]
        k += 1
    return k


def quotient_is_cyclic(D: FiniteGroup | Subgroup, I: Subgroup) -> bool:
    D = as_subgroup(D)
    if not is_normal(I, D):
        raise PreconditionError("quotient_is_cyclic needs I normal in D")
    index = D.order // I.order
    return any(coset_order(D, I, d) == index for d in coset_representatives(D, I))


def coset_representatives(D: Subgroup, I: Subgroup) -> list[int]:
    """Smallest element of each coset ``dI``."""
    t = D.parent.table
    covered: set[int] = set()
    reps = []
    for d in D.elements:
        if d in covered:
            continue
        reps.append(d)
        covered.update(t[d][i] for i in I.elements)
    return reps


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_subgroup(G: FiniteGroup | Subgroup, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup, grown from the trivial group one step at a time.

    A non-maximal ``p``-subgroup ``P`` has ``p | [N(P):P]``, so some ``g`` in
    the normalizer has ``gP`` of order ``p``; adjoining it multiplies ``|P|``
    by ``p``.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    G = as_subgroup(G)
    target = p_part(G.order, p)
    P = G.parent
    S = P.trivial()
    while S.order < target:
        N = normalizer(G, S)
        for g in N.elements:
            if g not in S and P.power(g, p) in S:
                S = _extend(S, g)
                break
        else:  # pragma: no cover - excluded by Sylow's theorems
            raise AssertionError("no p-element in N(P)/P")
    return S


def involution_count(H: Subgroup) -> int:
    orders = H.parent.element_orders()
    return sum(1 for h in H.elements if orders[h] == 2)


def is_generalized_quaternion(H: FiniteGroup | Subgroup) -> bool:
    # Noncyclic 2-groups with a unique involution are exactly Q_{2^n}, n >= 3.
    H = as_subgroup(H)
    n = H.order
    if n < 8 or n & (n - 1):
        return False
    return not is_cyclic(H) and involution_count(H) == 1


def subgroup_as_group(H: Subgroup, name: str | None = None) -> FiniteGroup:
    """Re-index ``H`` as a standalone group (identity stays at 0)."""
    P = H.parent
    index = {h: k for k, h in enumerate(H.elements)}
    table = [[index[P.table[a][b]] for b in H.elements] for a in H.elements]
    labels = [P.label(h) for h in H.elements]
    return FiniteGroup(table, labels, name)


# -- construction by closure ------------------------------------------------


def from_generators(
    identity: Hashable,
    gens: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    label: Callable[[Hashable], str] = str,
    name: str | None = None,
    max_order: int = MAX_CLOSURE_ORDER,
) -> FiniteGroup:
    """Close ``gens`` under ``mul``, breadth first from ``identity``.

    Elements are indexed in discovery order, generators tried in input order.
    """
    index = {identity: 0}
    elems = [identity]
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gens:
            y = mul(x, g)
            if y not in index:
                if len(elems) >= max_order:
                    raise GroupTooLarge(f"group too large: more than {max_order} elements")
                index[y] = len(elems)
                elems.append(y)
        i += 1
    if len(elems) > MAX_TABLE_ORDER:
        raise GroupTooLarge(
            f"group too large: order {len(elems)} exceeds the Cayley table cap {MAX_TABLE_ORDER}"
        )
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, [label(x) for x in elems], name)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation such as ``(1 2)(3 4 5)`` into a 0-based image tuple."""
    text = text.strip()
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise PreconditionError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        parts = body.replace(",", " ").split()
        try:
            pts = [int(x) for x in parts]
        except ValueError:
            raise PreconditionError(f"malformed cycle notation: {text!r}") from None
        if any(x < 1 for x in pts) or len(set(pts)) != len(pts):
            raise PreconditionError(f"malformed cycle notation: {text!r}")
        cycles.append(pts)
    n = max([x for c in cycles for x in c], default=1)
    if degree is not None:
        if n > degree:
            raise PreconditionError(f"point {n} exceeds degree {degree}")
        n = degree
    image = list(range(n))
    moved: set[int] = set()
    for c in cycles:
        if moved & set(c):
            raise PreconditionError(f"cycles are not disjoint in {text!r}")
        moved.update(c)
        for a, b in zip(c, c[1:] + c[:1]):
            image[a - 1] = b - 1
    return tuple(image)


def cycle_string(perm: Sequence[int]) -> str:
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = perm[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def from_permutations(
    gens: Sequence[str],
    degree: int | None = None,
    name: str | None = None,
    max_order: int = MAX_CLOSURE_ORDER,
) -> FiniteGroup:
    """The permutation group generated by ``gens`` (cycle notation, 1-based)."""
    parsed = [parse_permutation(g) for g in gens]
    n = max([len(p) for p in parsed] + [degree or 1])
    if n > 12:
        raise PreconditionError(f"permutation degree {n} exceeds 12")
    perms = [p + tuple(range(len(p), n)) for p in parsed]

    def compose(a, b):
        # a first, then b
        return tuple(b[i] for i in a)

    return from_generators(tuple(range(n)), perms, compose, cycle_string, name, max_order)


def order_is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1
