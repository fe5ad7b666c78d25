"""Exact polynomials over Z in the variables x, t, s.

A polynomial is a sparse map from exponent triples ``(deg_x, deg_t, deg_s)``
to nonzero Python integers.  The tower is ``Z[s][t][x]``: ``x`` is the main
variable of a family, ``t`` the function-field variable, ``s`` a parameter.

Resultants come in two independent flavours that must agree: a Bareiss
determinant of the Sylvester matrix (the reference) and a subresultant
pseudo-remainder sequence (the fast path).
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from math import gcd

from .errors import PolynomialSyntaxError, PreconditionError
from .numbers import is_prime

VARIABLES = ("x", "t", "s")
_INDEX = {v: i for i, v in enumerate(VARIABLES)}

Monomial = tuple[int, int, int]


def _var_index(var: str) -> int:
    try:
        return _INDEX[var]
    except KeyError:
        raise PreconditionError(f"unknown variable {var!r}") from None


class IntPolynomial:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: int(c) for m, c in (terms or {}).items() if c}
        self._hash: int | None = None

    # -- construction -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> IntPolynomial:
        e = [0, 0, 0]
        e[_var_index(name)] = 1
        return cls({tuple(e): 1})

    @classmethod
    def from_univariate(cls, coeffs: Sequence[IntPolynomial | int], var: str) -> IntPolynomial:
        """``sum coeffs[k] * var^k``; coefficients must not involve ``var``."""
        i = _var_index(var)
        out: dict[Monomial, int] = {}
        for k, c in enumerate(coeffs):
            if isinstance(c, int):
                c = IntPolynomial.constant(c)
            for m, v in c.terms.items():
                if m[i]:
                    raise PreconditionError(f"coefficient involves {var}")
                e = list(m)
                e[i] = k
                out[tuple(e)] = v
        return cls(out)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def variables(self) -> tuple[str, ...]:
        used = [False, False, False]
        for m in self.terms:
            for i in range(3):
                if m[i]:
                    used[i] = True
        return tuple(v for v, u in zip(VARIABLES, used) if u)

    def is_constant(self) -> bool:
        return all(m == (0, 0, 0) for m in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise PreconditionError("polynomial is not constant")
        return self.terms.get((0, 0, 0), 0)

    def degree(self, var: str) -> int:
        """Degree in ``var``; ``-1`` for the zero polynomial."""
        i = _var_index(var)
        return max((m[i] for m in self.terms), default=-1)

    def coefficients(self, var: str) -> list[IntPolynomial]:
        """Dense coefficient list in ``var`` (index = exponent)."""
        i = _var_index(var)
        n = self.degree(var)
        buckets: list[dict[Monomial, int]] = [{} for _ in range(n + 1)]
        for m, c in self.terms.items():
            e = list(m)
            k = e[i]
            e[i] = 0
            buckets[k][tuple(e)] = c
        return [IntPolynomial(b) for b in buckets]

    def leading_coefficient(self, var: str) -> IntPolynomial:
        if not self.terms:
            return IntPolynomial()
        return self.coefficients(var)[-1]

    def integer_content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def leading_term(self) -> tuple[Monomial, int]:
        m = max(self.terms)
        return m, self.terms[m]

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> IntPolynomial:
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPolynomial:
        other = _coerce(other)
        out: dict[Monomial, int] = {}
        for (a0, a1, a2), c in self.terms.items():
            for (b0, b1, b2), d in other.terms.items():
                m = (a0 + b0, a1 + b1, a2 + b2)
                out[m] = out.get(m, 0) + c * d
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise PreconditionError("negative exponent")
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> IntPolynomial:
        return IntPolynomial({m: v * c for m, v in self.terms.items()})

    def exact_div_int(self, c: int) -> IntPolynomial:
        out = {}
        for m, v in self.terms.items():
            q, r = divmod(v, c)
            if r:
                raise ArithmeticError(f"{c} does not divide the coefficients exactly")
            out[m] = q
        return IntPolynomial(out)

    def derivative(self, var: str) -> IntPolynomial:
        i = _var_index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = c * m[i]
        return IntPolynomial(out)

    def substitute(self, var: str, value: int) -> IntPolynomial:
        """Evaluate ``var`` at an integer value."""
        i = _var_index(var)
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            e = list(m)
            k = e[i]
            e[i] = 0
            key = tuple(e)
            out[key] = out.get(key, 0) + c * value**k
        return IntPolynomial(out)

    def evaluate(self, **values: int) -> int:
        total = 0
        for m, c in self.terms.items():
            term = c
            for v, k in zip(VARIABLES, m):
                if k:
                    term *= values[v] ** k
            total += term
        return total

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({to_string(self)!r})"


def _coerce(other) -> IntPolynomial:
    if isinstance(other, IntPolynomial):
        return other
    if isinstance(other, int):
        return IntPolynomial.constant(other)
    raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")


X = IntPolynomial.var("x")
T = IntPolynomial.var("t")
S = IntPolynomial.var("s")


def _monomial_string(m: Monomial) -> str:
    parts = []
    for v, k in zip(VARIABLES, m):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def to_string(f: IntPolynomial) -> str:
    """Canonical form: terms by descending ``(deg_x, deg_t, deg_s)``."""
    if not f.terms:
        return "0"
    out = []
    for k, m in enumerate(sorted(f.terms, reverse=True)):
        c = f.terms[m]
        mono = _monomial_string(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# -- parsing ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise PolynomialSyntaxError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse(self) -> IntPolynomial:
        if not self.text.strip():
            self.error("empty input")
        f = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return f

    def expr(self) -> IntPolynomial:
        f = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> IntPolynomial:
        f = self.unary()
        while self.peek() == "*":
            self.take()
            f = f * self.unary()
        return f

    def unary(self) -> IntPolynomial:
        ch = self.peek()
        if ch == "-":
            self.take()
            return -self.unary()
        if ch == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> IntPolynomial:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            return base ** self.integer()
        return base

    def atom(self) -> IntPolynomial:
        ch = self.peek()
        if ch == "(":
            self.take()
            f = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return f
        if ch.isdigit():
            return IntPolynomial.constant(self.integer())
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start : self.pos]
            if name not in _INDEX:
                self.error(f"unknown variable {name!r}", start)
            return IntPolynomial.var(name)
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")


def parse(text: str) -> IntPolynomial:
    """Parse integers, ``s``, ``t``, ``x``, ``+ - * ^`` and parentheses."""
    return _Parser(text).parse()


# -- exact division and gcd -------------------------------------------------


def exact_divide(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``a / b`` when ``b`` divides ``a`` in ``Z[x, t, s]``; raises otherwise.

    Plain multivariate division by leading terms in lex order: if ``b | a``
    every step cancels the leading term exactly.
    """
    if not b.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if b.is_constant():
        return a.exact_div_int(b.constant_value())
    bm, bc = b.leading_term()
    rem = dict(a.terms)
    quot: dict[Monomial, int] = {}
    while rem:
        am = max(rem)
        ac = rem[am]
        if any(x < y for x, y in zip(am, bm)) or ac % bc:
            raise ArithmeticError("polynomial division is not exact")
        qm = (am[0] - bm[0], am[1] - bm[1], am[2] - bm[2])
        qc = ac // bc
        quot[qm] = qc
        for m, c in b.terms.items():
            key = (m[0] + qm[0], m[1] + qm[1], m[2] + qm[2])
            v = rem.get(key, 0) - qc * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return IntPolynomial(quot)


def _ediv(a, b):
    if isinstance(b, IntPolynomial) and b.is_constant():
        b = b.constant_value()
    if isinstance(b, int):
        if isinstance(a, IntPolynomial):
            return a.exact_div_int(b)
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("integer division is not exact")
        return q
    return exact_divide(_coerce(a), b)


def _main_variable(*polys: IntPolynomial) -> str | None:
    for v in VARIABLES:
        if any(p.degree(v) > 0 for p in polys):
            return v
    return None


def pseudo_remainder(f: IntPolynomial, g: IntPolynomial, var: str) -> IntPolynomial:
    """``lc(g)^(deg f - deg g + 1) * f`` reduced modulo ``g`` in ``var``."""
    n = g.degree(var)
    if n < 0:
        raise ZeroDivisionError("pseudo-remainder by zero")
    gc = g.coefficients(var)
    lc = gc[-1]
    r = f.coefficients(var)
    e = len(r) - n
    if e <= 0:
        return f
    for _ in range(e):
        if len(r) - 1 < n:
            r = [c * lc for c in r]
            continue
        top = r[-1]
        shift = len(r) - 1 - n
        r = [c * lc for c in r[:-1]]
        for k in range(n):
            if gc[k]:
                r[k + shift] = r[k + shift] - top * gc[k]
        while r and not r[-1]:
            r.pop()
    return IntPolynomial.from_univariate(r, var)


def content(f: IntPolynomial, var: str) -> IntPolynomial:
    """gcd in ``Z[other variables]`` of the ``var``-coefficients of ``f``."""
    g = IntPolynomial()
    for c in f.coefficients(var):
        if c:
            g = poly_gcd(g, c)
            if g == 1:
                break
    return g


def primitive_part(f: IntPolynomial, var: str) -> IntPolynomial:
    """``f`` divided by its content in ``var``, with positive leading coefficient."""
    if not f:
        return f
    f = exact_divide(f, content(f, var))
    return -f if _sign_of_leading(f, var) < 0 else f


def _sign_of_leading(f: IntPolynomial, var: str) -> int:
    lc = f.leading_coefficient(var)
    return 1 if lc.leading_term()[1] > 0 else -1


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """gcd in ``Z[x, t, s]``, normalized to a positive leading coefficient."""
    if not f:
        return _normalize(g)
    if not g:
        return _normalize(f)
    var = _main_variable(f, g)
    if var is None:
        return IntPolynomial.constant(gcd(f.constant_value(), g.constant_value()))
    cf, cg = content(f, var), content(g, var)
    c = poly_gcd(cf, cg)
    a, b = exact_divide(f, cf), exact_divide(g, cg)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while b.degree(var) > 0:
        r = pseudo_remainder(a, b, var)
        if not r:
            break
        a, b = b, exact_divide(r, content(r, var))
    else:
        # b is a nonzero constant in var: primitive parts are coprime
        return _normalize(c)
    return _normalize(c * primitive_part(b, var))


def _normalize(f: IntPolynomial) -> IntPolynomial:
    if f and f.leading_term()[1] < 0:
        return -f
    return f


# -- resultants -------------------------------------------------------------


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial, var: str) -> list[list[IntPolynomial]]:
    m, n = f.degree(var), g.degree(var)
    fc = f.coefficients(var)[::-1]
    gc = g.coefficients(var)[::-1]
    size = m + n
    zero = IntPolynomial()
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: Sequence[Sequence]) -> IntPolynomial | int:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = _ediv(row_i[j] * akk - aik * row_k[j], prev)
        prev = akk
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def _as_ring_element(c: IntPolynomial):
    # integers are much faster than constant polynomials
    return c.constant_value() if c.is_constant() else c


def _check_resultant_args(f: IntPolynomial, g: IntPolynomial, var: str) -> None:
    if not f or not g:
        raise PreconditionError("resultant of the zero polynomial")
    _var_index(var)


def resultant_bareiss(f: IntPolynomial, g: IntPolynomial, var: str = "x") -> IntPolynomial:
    _check_resultant_args(f, g, var)
    if f.degree(var) == 0 and g.degree(var) == 0:
        return IntPolynomial.constant(1)
    rows = sylvester_matrix(f, g, var)
    if all(c.is_constant() for row in rows for c in row):
        rows = [[_as_ring_element(c) for c in row] for row in rows]
    return _coerce(bareiss_determinant(rows))


def resultant_subresultant(f: IntPolynomial, g: IntPolynomial, var: str = "x") -> IntPolynomial:
    """Resultant via the subresultant PRS (Collins / Brown-Traub)."""
    _check_resultant_args(f, g, var)
    m, n = f.degree(var), g.degree(var)
    sign = 1
    if m < n:
        f, g, m, n = g, f, n, m
        if (m * n) % 2:
            sign = -1
    if n == 0:
        return g.leading_coefficient(var) ** m * sign
    one = IntPolynomial.constant(1)
    a, b = f, g
    gfac = one  # g_i in the classical notation
    h = one
    while True:
        da, db = a.degree(var), b.degree(var)
        delta = da - db
        if (da * db) % 2:
            sign = -sign
        r = pseudo_remainder(a, b, var)
        if not r:
            return IntPolynomial()
        lcb = b.leading_coefficient(var)
        r = exact_divide(r, gfac * h**delta)
        a, b = b, r
        gfac = lcb
        if delta == 0:
            pass
        elif delta == 1:
            h = gfac
        else:
            h = exact_divide(gfac**delta, h ** (delta - 1))
        if b.degree(var) == 0:
            db_new = a.degree(var)
            lc0 = b.leading_coefficient(var)
            if db_new == 1:
                res = lc0
            else:
                res = exact_divide(lc0**db_new, h ** (db_new - 1))
            return res * sign


def resultant(f: IntPolynomial, g: IntPolynomial, var: str = "x", method: str = "bareiss") -> IntPolynomial:
    if method == "bareiss":
        return resultant_bareiss(f, g, var)
    if method == "subresultant":
        return resultant_subresultant(f, g, var)
    raise PreconditionError(f"unknown resultant method {method!r}")


def resultant_x(f: IntPolynomial, g: IntPolynomial, method: str = "bareiss") -> IntPolynomial:
    return resultant(f, g, "x", method)


def discriminant(f: IntPolynomial, var: str, method: str = "bareiss") -> IntPolynomial:
    """``(-1)^(n(n-1)/2) res(f, f') / lc(f)``; a degree-1 polynomial has discriminant 1."""
    n = f.degree(var)
    if n < 1:
        raise PreconditionError(f"discriminant needs positive degree in {var}")
    if n == 1:
        return IntPolynomial.constant(1)
    r = resultant(f, f.derivative(var), var, method)
    d = exact_divide(r, f.leading_coefficient(var))
    return -d if (n * (n - 1) // 2) % 2 else d


def is_monic(f: IntPolynomial, var: str) -> bool:
    return f.leading_coefficient(var) == 1


def discriminant_x(P: IntPolynomial, method: str = "bareiss") -> IntPolynomial:
    if not is_monic(P, "x"):
        raise PreconditionError("discriminant_x expects a polynomial monic in x")
    return discriminant(P, "x", method)


def radical(f: IntPolynomial, var: str) -> IntPolynomial:
    """Squarefree part of ``f`` in ``var`` over the fraction field of the other variables.

    The result is primitive over the ring of the other variables and has a
    positive leading coefficient.
    """
    if not f:
        raise PreconditionError("radical of the zero polynomial")
    if f.degree(var) <= 0:
        return IntPolynomial.constant(1)
    g = poly_gcd_in(f, f.derivative(var), var)
    return primitive_part(exact_divide(f, g), var)


def poly_gcd_in(f: IntPolynomial, g: IntPolynomial, var: str) -> IntPolynomial:
    """gcd over ``Frac(other variables)[var]``, primitive with positive lc."""
    if not g:
        return primitive_part(f, var)
    a, b = primitive_part(f, var), primitive_part(g, var)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while b.degree(var) > 0:
        r = pseudo_remainder(a, b, var)
        if not r:
            return primitive_part(b, var)
        a, b = b, primitive_part(r, var)
    return IntPolynomial.constant(1)


def radical_t(f: IntPolynomial) -> IntPolynomial:
    return radical(f, "t")


# -- reduction modulo p -----------------------------------------------------


class ModPPolynomial:
    """A polynomial with coefficients reduced into ``{0, ..., p-1}``."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[Monomial, int] | None = None):
        self.p = p
        self.terms = {m: c % p for m, c in (terms or {}).items() if c % p}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModPPolynomial):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self.terms.items())))

    def __add__(self, other: ModPPolynomial) -> ModPPolynomial:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ModPPolynomial(self.p, out)

    def __mul__(self, other: ModPPolynomial) -> ModPPolynomial:
        out: dict[Monomial, int] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                m = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
                out[m] = out.get(m, 0) + c * d
        return ModPPolynomial(self.p, out)

    def degree(self, var: str) -> int:
        i = _var_index(var)
        return max((m[i] for m in self.terms), default=-1)

    def dense(self, var: str) -> list[int]:
        """Coefficient list in ``var``; the polynomial must be univariate in it."""
        i = _var_index(var)
        out = [0] * (self.degree(var) + 1)
        for m, c in self.terms.items():
            if any(m[j] for j in range(3) if j != i):
                raise PreconditionError(f"polynomial is not univariate in {var}")
            out[m[i]] = c
        return out

    def __str__(self) -> str:
        return to_string(IntPolynomial(self.terms)) + f" (mod {self.p})"


def reduce_mod(f: IntPolynomial, p: int) -> ModPPolynomial:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    return ModPPolynomial(p, f.terms)


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] = (a[i + k] - c * bi) % p
        _fp_trim(a)
    return q, a


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _fp_derivative(a: list[int], p: int) -> list[int]:
    return _fp_trim([(k * a[k]) % p for k in range(1, len(a))])


def _fp_radical(a: list[int], p: int) -> list[int]:
    """Product of the distinct monic irreducible factors of ``a`` over F_p."""
    if len(a) <= 1:
        return [1]
    d = _fp_derivative(a, p)
    if not d:
        # a(t) = b(t^p) = b(t)^p since F_p is perfect with trivial Frobenius
        return _fp_radical(a[::p], p)
    g = _fp_gcd(a, d, p)
    w = _fp_divmod(a, g, p)[0]
    # irreducibles of a divide w (multiplicity 1 mod p) or g (multiplicity >= 2)
    rg = _fp_radical(g, p)
    common = _fp_gcd(w, rg, p)
    return _fp_mul(w, _fp_divmod(rg, common, p)[0], p)


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def squarefree_degree_mod(f: ModPPolynomial, var: str = "t") -> int:
    """Number of distinct roots of ``f`` over an algebraic closure of F_p.

    The zero polynomial returns 0; callers tell it apart via ``f.is_zero()``.
    """
    if f.is_zero():
        return 0
    a = f.dense(var)
    return len(_fp_radical(a, f.p)) - 1


def is_separable_mod(f: ModPPolynomial, var: str = "t") -> bool:
    """``gcd(f, f')`` is constant over F_p (nonzero constants are separable)."""
    if f.is_zero():
        return False
    a = f.dense(var)
    if len(a) <= 1:
        return True
    return len(_fp_gcd(a, _fp_derivative(a, f.p), f.p)) == 1


def distinct_root_count(f: IntPolynomial, var: str = "t") -> int:
    """Number of distinct complex roots of a nonzero univariate integer polynomial."""
    return max(radical(f, var).degree(var), 0)
