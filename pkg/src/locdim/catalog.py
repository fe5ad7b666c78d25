"""Named small groups and the line-oriented group text format.

Names understood by :func:`group_by_name`::

    C<n>      cyclic of order n          D<n>   dihedral of order 2n
    Q<2^k>    generalized quaternion     Dic<m> dicyclic of order 4m
    S<n>      symmetric                  A<n>   alternating
    trivial   the group of order 1

Factors joined by ``x`` form direct products (``C4xC2``); ``F^k`` is the
k-fold power of ``F`` (``C2^5``).
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import PreconditionError
from .groups import FiniteGroup, from_generators, from_permutations


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("cyclic group order must be positive")
    gens = [1 % n] if n > 1 else []
    return from_generators(0, gens, lambda a, b: (a + b) % n, lambda a: f"a^{a}", f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; elements ``(k, f)`` mean ``r^k s^f``."""
    if n < 1:
        raise PreconditionError("dihedral parameter must be positive")

    def mul(x, y):
        (a, f), (b, g) = x, y
        return ((a + (-b if f else b)) % n, f ^ g)

    return from_generators((0, 0), [(1 % n, 0), (0, 1)], mul, _rs_label, f"D{n}")


def _rs_label(x) -> str:
    a, f = x
    return f"r^{a}" + ("s" if f else "")


def dicyclic(m: int) -> FiniteGroup:
    """``<a, b | a^2m = 1, b^2 = a^m, b^-1 a b = a^-1>``, order 4m."""
    if m < 1:
        raise PreconditionError("dicyclic parameter must be positive")

    def mul(x, y):
        (i, j), (k, l) = x, y
        if j == 0:
            return ((i + k) % (2 * m), l)
        if l == 0:
            return ((i - k) % (2 * m), 1)
        return ((i - k + m) % (2 * m), 0)

    def label(x):
        i, j = x
        return f"a^{i}" + ("b" if j else "")

    return from_generators((0, 0), [(1, 0), (0, 1)], mul, label, f"Dic{m}")


def quaternion(order: int) -> FiniteGroup:
    if order < 8 or order & (order - 1):
        raise PreconditionError("generalized quaternion order must be a power of 2, at least 8")
    G = dicyclic(order // 4)
    G.name = f"Q{order}"
    return G


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("symmetric degree must be positive")
    gens = []
    if n >= 2:
        gens.append("(1 2)")
    if n >= 3:
        gens.append("(" + " ".join(str(i) for i in range(1, n + 1)) + ")")
    return from_permutations(gens, degree=n, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("alternating degree must be positive")
    gens = [f"(1 2 {k})" for k in range(3, n + 1)]
    return from_permutations(gens, degree=n, name=f"A{n}")


def direct_product(*factors: FiniteGroup, name: str | None = None) -> FiniteGroup:
    if not factors:
        return cyclic(1)
    identity = tuple(0 for _ in factors)
    gens = []
    for k, F in enumerate(factors):
        for g in F.whole().generators:
            e = list(identity)
            e[k] = g
            gens.append(tuple(e))

    def mul(x, y):
        return tuple(F.table[a][b] for F, a, b in zip(factors, x, y))

    def label(x):
        return "(" + ", ".join(F.label(a) for F, a in zip(factors, x)) + ")"

    name = name or "x".join(F.name or "?" for F in factors)
    return from_generators(identity, gens, mul, label, name)


_ATOM = re.compile(r"^(C|D|Q|S|A|Dic)(\d+)$")


def _atom(token: str) -> FiniteGroup:
    if token.lower() in ("trivial", "1"):
        return cyclic(1)
    m = _ATOM.match(token)
    if not m:
        raise PreconditionError(f"unknown group name {token!r}")
    kind, n = m.group(1), int(m.group(2))
    builders = {
        "C": cyclic,
        "D": dihedral,
        "Q": quaternion,
        "S": symmetric,
        "A": alternating,
        "Dic": dicyclic,
    }
    return builders[kind](n)


def group_by_name(name: str) -> FiniteGroup:
    name = name.strip()
    factors = []
    for part in name.split("x"):
        part = part.strip()
        base, _, exp = part.partition("^")
        k = int(exp) if exp else 1
        if k < 1:
            raise PreconditionError(f"bad exponent in {part!r}")
        factors.extend([_atom(base.strip())] * k)
    if not factors:
        raise PreconditionError("empty group name")
    if len(factors) == 1:
        return factors[0]
    return direct_product(*factors, name=name)


def parse_group_text(text: str) -> FiniteGroup:
    """Parse ``perm: ...``, ``cayley: ...`` or ``name: ...`` group text."""
    text = text.strip()
    kind, sep, body = text.partition(":")
    if not sep:
        raise PreconditionError("group text must start with 'perm:', 'cayley:' or 'name:'")
    kind = kind.strip().lower()
    if kind == "name":
        return group_by_name(body)
    if kind == "perm":
        gens = [g.strip() for g in body.split(";") if g.strip()]
        return from_permutations(gens, name=text)
    if kind == "cayley":
        try:
            values = [int(v) for v in body.split()]
        except ValueError:
            raise PreconditionError("cayley rows must be integers") from None
        n = 1
        while n * n < len(values):
            n += 1
        if n * n != len(values):
            raise PreconditionError("cayley table is not square")
        rows = [values[i * n : (i + 1) * n] for i in range(n)]
        return FiniteGroup(rows, audit=True)
    raise PreconditionError(f"unknown group text kind {kind!r}")


def read_group_argument(arg: str) -> FiniteGroup:
    """CLI helper: ``@file`` reads the group text from a file."""
    if arg.startswith("@"):
        arg = Path(arg[1:]).read_text()
    if ":" not in arg:
        return group_by_name(arg)
    return parse_group_text(arg)


# The groups swept by the exhaustive checks, all of order at most 24.
CATALOG_NAMES = (
    "trivial",
    *(f"C{n}" for n in range(2, 25)),
    *(f"D{n}" for n in range(2, 13)),
    "Q8",
    "Q16",
    "Dic3",
    "Dic5",
    "Dic6",
    "S3",
    "S4",
    "A4",
    "C2xC2",
    "C2xC4",
    "C2^3",
    "C3xC3",
    "C2xC6",
    "C4xC4",
    "C2xC8",
    "C2^4",
    "C2^2xC4",
    "C2xQ8",
    "C2xD4",
    "C3xS3",
    "C2xS3",
    "C2xA4",
    "C3xQ8",
    "C2xDic3",
    "C3xD4",
)


def catalog(max_order: int = 24) -> list[FiniteGroup]:
    out = []
    for name in CATALOG_NAMES:
        G = group_by_name(name)
        if G.order <= max_order:
            G.name = name
            out.append(G)
    return out
