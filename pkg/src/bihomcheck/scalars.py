"""Exact coefficient arithmetic: Q, sparse polynomials over Q, and their fraction field.

Every identity the checkers decide is a polynomial identity in the declared
parameters, so the coefficient domain is the fraction field of Q[params].
Zero-testing is exact (a reduced numerator with no terms), never numeric
sampling.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as int_gcd

from .errors import DenominatorVanishes, DivisionByZero, ParseError, UnboundParameter

Rational = Fraction


def _grlex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    """Sparse multivariate polynomial over Q.

    ``params`` is the ordered tuple of parameter names; ``terms`` maps
    exponent tuples (same length as ``params``) to nonzero Fractions.
    Instances are immutable; all arithmetic returns new objects.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params, terms):
        self.params = tuple(params)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    @classmethod
    def constant(cls, params, value):
        value = Fraction(value)
        if value == 0:
            return cls(params, {})
        return cls(params, {(0,) * len(params): value})

    @classmethod
    def variable(cls, params, name):
        params = tuple(params)
        i = params.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(params)))
        return cls(params, {e: Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[(0,) * len(self.params)]

    def is_one(self):
        return self.is_constant() and self.constant_value() == 1

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def leading(self):
        """Leading (exponent, coefficient) in graded-lex order."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def occurring(self):
        """Names of parameters with a positive exponent somewhere."""
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k > 0:
                    used.add(self.params[i])
        return used

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.params == other.params
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.params, frozenset(self.terms.items())))

    def __neg__(self):
        return Polynomial(self.params, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if self.params != other.params:
            raise ValueError("parameter context mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(self.params, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.params != other.params:
            raise ValueError("parameter context mismatch")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.params, out)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return Polynomial(self.params, {})
        return Polynomial(self.params, {e: c * v for e, v in self.terms.items()})

    def evaluate(self, values):
        """Full evaluation; ``values`` maps every occurring name to a Fraction."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v *= values[self.params[i]] ** k
            total += v
        return total

    def __repr__(self):
        return f"Polynomial({self.params!r}, {self.terms!r})"


# -- gcd machinery -----------------------------------------------------------
#
# Reduction of fractions needs a multivariate gcd; content extraction plus a
# primitive pseudo-remainder sequence is enough at the tiny degrees this
# package meets.


def _int_normalize(p: Polynomial):
    """Split p = c * q with q integer-coefficient, coprime content, positive
    graded-lex leading coefficient. Returns (c, q); c = 0 for the zero poly."""
    if p.is_zero():
        return Fraction(0), p
    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        num_gcd = int_gcd(num_gcd, abs(c.numerator))
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    content = Fraction(num_gcd, den_lcm)
    _, lead = p.leading()
    if lead < 0:
        content = -content
    return content, p.scale(1 / content)


def _deg_in(p: Polynomial, var: int):
    return max((e[var] for e in p.terms), default=0)


def _coeff_wrt(p: Polynomial, var: int, k: int):
    """Coefficient of var^k, a polynomial with the var slot zeroed."""
    out = {}
    for e, c in p.terms.items():
        if e[var] == k:
            out[e[:var] + (0,) + e[var + 1 :]] = c
    return Polynomial(p.params, out)

def _shift_var(p: Polynomial, var: int, k: int):
    return Polynomial(p.params, {e[:var] + (e[var] + k,) + e[var + 1 :]: c for e, c in p.terms.items()})


def _content_wrt(p: Polynomial, var: int):
    """gcd of the var-coefficients (a polynomial free of var)."""
    c = Polynomial(p.params, {})
    for k in range(_deg_in(p, var) + 1):
        q = _coeff_wrt(p, var, k)
        if not q.is_zero():
            c = poly_gcd(c, q)
            if c.is_one():
                break
    return c


def _pseudo_rem(f: Polynomial, g: Polynomial, var: int):
    """Pseudo-remainder of f by g in the main variable var."""
    dg = _deg_in(g, var)
    lg = _coeff_wrt(g, var, dg)
    r = f
    while not r.is_zero():
        dr = _deg_in(r, var)
        if dr < dg:
            break
        lr = _coeff_wrt(r, var, dr)
        r = r * lg - _shift_var(lr * g, var, dr - dg)
    return r


def poly_divexact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient f/g; raises ArithmeticError if g does not divide f."""
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if f.is_zero():
        return f
    quot = {}
    ge, gc = g.leading()
    r = f
    while not r.is_zero():
        re, rc = r.leading()
        qe = tuple(a - b for a, b in zip(re, ge))
        if any(k < 0 for k in qe):
            raise ArithmeticError("inexact polynomial division")
        qc = rc / gc
        quot[qe] = quot.get(qe, Fraction(0)) + qc
        r = r - g * Polynomial(f.params, {qe: qc})
    return Polynomial(f.params, quot)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Primitive gcd over Q[params], positive leading coefficient; constants
    collapse to 1 (rational contents are units in the fraction field)."""
    if f.is_zero() and g.is_zero():
        return f
    if f.is_zero():
        return _int_normalize(g)[1]
    if g.is_zero():
        return _int_normalize(f)[1]
    f = _int_normalize(f)[1]
    g = _int_normalize(g)[1]
    if f.is_constant() or g.is_constant():
        return Polynomial.constant(f.params, 1)
    used = sorted(set().union(*(
        {i for i, k in enumerate(e) if k > 0} for p in (f, g) for e in p.terms
    )))
    var = used[-1]
    if _deg_in(f, var) == 0 or _deg_in(g, var) == 0:
        # var occurs in only one of the two: gcd divides the other's content
        cf = _content_wrt(f, var) if _deg_in(f, var) else f
        cg = _content_wrt(g, var) if _deg_in(g, var) else g
        return poly_gcd(cf, cg)
    cf = _content_wrt(f, var)
    cg = _content_wrt(g, var)
    c = poly_gcd(cf, cg)
    a = poly_divexact(f, cf)
    b = poly_divexact(g, cg)
    if _deg_in(a, var) < _deg_in(b, var):
        a, b = b, a
    while True:
        r = _pseudo_rem(a, b, var)
        if r.is_zero():
            break
        if _deg_in(r, var) == 0:
            return _int_normalize(c)[1]
        a, b = b, poly_divexact(r, _content_wrt(r, var))
    return _int_normalize(c * poly_divexact(b, _content_wrt(b, var)))[1]


class Scalar:
    """Element of the fraction field of Q[params], kept in reduced form.

    Canonical representation: the denominator is an integer-coefficient
    polynomial with coprime content and positive graded-lex leading
    coefficient (1 for parameter-free scalars); numerator and denominator
    have no common polynomial factor.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise DivisionByZero("scalar with zero denominator")
        if num.is_zero():
            den = Polynomial.constant(num.params, 1)
        elif den.is_one():
            pass
        elif den.is_constant():
            num = num.scale(1 / den.constant_value())
            den = Polynomial.constant(num.params, 1)
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
            c, den = _int_normalize(den)
            if den.is_one():
                num = num.scale(1 / c)
                den = Polynomial.constant(num.params, 1)
            else:
                num = num.scale(1 / c)
        self.num = num
        self.den = den

    @property
    def params(self):
        return self.num.params

    @classmethod
    def of(cls, params, value):
        """Constant scalar from an int or Fraction."""
        p = tuple(params)
        return cls(Polynomial.constant(p, value), Polynomial.constant(p, 1))

    @classmethod
    def param(cls, params, name):
        p = tuple(params)
        return cls(Polynomial.variable(p, name), Polynomial.constant(p, 1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"scalar {self} is not constant")
        return self.num.constant_value() / self.den.constant_value()

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.params != self.params:
                raise ValueError("parameter context mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.of(self.params, other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return Scalar(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            s = Scalar.__new__(Scalar)
            s.num = self.num + other.num
            s.den = self.den
            return s
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return Scalar.of(self.params, 0)
        if self.den.is_one() and other.den.is_one():
            s = Scalar.__new__(Scalar)
            s.num = self.num * other.num
            s.den = self.den
            return s
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of the zero scalar")
        return Scalar(self.den, self.num)

    def substitute(self, bindings) -> "Scalar":
        """Evaluate every occurring parameter; a ring homomorphism into Q.

        Raises UnboundParameter if an occurring parameter is missing from
        ``bindings`` and DenominatorVanishes if the binding hits a pole.
        """
        values = {k: Fraction(v) for k, v in bindings.items()}
        for name in sorted(self.num.occurring() | self.den.occurring()):
            if name not in values:
                raise UnboundParameter(f"parameter '{name}' is unbound")
        d = self.den.evaluate(values)
        if d == 0:
            raise DenominatorVanishes(f"denominator {poly_str(self.den)} vanishes")
        n = self.num.evaluate(values)
        return Scalar.of(self.params, n / d)

    def reparametrize(self, new_params) -> "Scalar":
        """Move to another parameter context; every occurring name must survive."""
        new_params = tuple(new_params)
        idx = {name: i for i, name in enumerate(new_params)}
        missing = (self.num.occurring() | self.den.occurring()) - set(new_params)
        if missing:
            raise UnboundParameter(
                f"parameters {sorted(missing)} do not exist in the new context"
            )

        def remap(p):
            out = {}
            for e, c in p.terms.items():
                ne = [0] * len(new_params)
                for i, k in enumerate(e):
                    if k:
                        ne[idx[p.params[i]]] = k
                out[tuple(ne)] = c
            return Polynomial(new_params, out)

        return Scalar(remap(self.num), remap(self.den))

    def __str__(self):
        return scalar_str(self)

    def __repr__(self):
        return f"Scalar({scalar_str(self)!r})"


# -- canonical printing ------------------------------------------------------


def poly_str(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[e]
        mono = "*".join(
            name if k == 1 else f"{name}^{k}"
            for name, k in zip(p.params, e)
            if k > 0
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _den_atomic(p: Polynomial) -> bool:
    # safe to print unparenthesized after '/': integer, or a power of one name
    if p.is_constant():
        return True
    if len(p.terms) != 1:
        return False
    (e, c), = p.terms.items()
    return c == 1 and sum(1 for k in e if k > 0) == 1


def scalar_str(s: Scalar) -> str:
    """Canonical text form; ``parse_scalar`` inverts it exactly."""
    if s.den.is_one():
        return poly_str(s.num)
    num = poly_str(s.num)
    if len(s.num.terms) > 1:
        num = f"({num})"
    den = poly_str(s.den)
    if not _den_atomic(s.den):
        den = f"({den})"
    return f"{num}/{den}"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].strip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", 1, pos + 1)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, params):
        self.tokens = tokens
        self.params = tuple(params)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, msg):
        kind, val, pos = self.peek()
        raise ParseError(msg, 1, pos + 1)

    def expr(self):
        v = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if w.is_zero():
                    self.fail("division by zero")
                v = v / w
        return v

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        v = self.primary()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.peek()
            if kind != "int":
                self.fail("exponent must be a nonnegative integer")
            self.take()
            out = Scalar.of(self.params, 1)
            for _ in range(val):
                out = out * v
            return out
        return v

    def primary(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Scalar.of(self.params, val)
        if kind == "name":
            if val not in self.params:
                raise ParseError(
                    f"unknown parameter {val!r} (declared: {', '.join(self.params) or 'none'})",
                    1,
                    pos + 1,
                )
            return Scalar.param(self.params, val)
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return v
        raise ParseError("expected a number, parameter, or '('", 1, pos + 1)


def parse_scalar(text: str, params=()) -> Scalar:
    """Parse the textual scalar syntax into a reduced Scalar."""
    p = _Parser(_tokenize(text), params)
    try:
        v = p.expr()
    except DivisionByZero:
        raise ParseError("division by zero", 1, 1) from None
    if p.peek()[0] != "end":
        p.fail("trailing input")
    return v
