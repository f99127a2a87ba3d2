"""Exact sparse bivariate Laurent polynomials and the transformation rules
used throughout the E-polynomial bookkeeping: shift, Tate twist, duality and
self-dual conversion.  No floating point is used anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConsistencyError, ParseError


class LaurentPoly2:
    """Bivariate Laurent polynomial with integer coefficients.

    Terms are stored sparsely as a map from exponent pairs to nonzero
    coefficients, e.g.

        {(0, 0): 1, (3, 3): -2}   <->   1 - 2*(x*y)^3

    Exponents may be negative.  Zero coefficients are never stored, so two
    polynomials are equal iff their term maps are equal.  All arithmetic is
    exact arbitrary-precision integer arithmetic.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for (a, b), c in terms.items():
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                if c:
                    cleaned[(int(a), int(b))] = c
        self.terms = cleaned

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_tate(self):
        """True iff every exponent pair has equal components (type (a, a))."""
        return all(a == b for (a, b) in self.terms)

    def coeff(self, a, b):
        return self.terms.get((a, b), 0)

    def support(self):
        """Exponent pairs in canonical (a, then b) ascending order."""
        return tuple(sorted(self.terms))

    # -- arithmetic ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = const(other)
        if isinstance(other, LaurentPoly2):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("exponent must be an integer")
        if k == 0:
            return ONE
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((a, b), c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError(
                    "negative power of a monomial with non-unit coefficient")
            return monomial(a * k, b * k, c if k % 2 else 1)
        acc = ONE
        for _ in range(k):
            acc = acc * self
        return acc

    # -- evaluation ---------------------------------------------------------

    def eval_at(self, x0, y0):
        """Exact value at (x0, y0) as a Fraction.

        Raises ZeroDivisionError when a negative exponent meets a zero
        argument.
        """
        x0 = Fraction(x0)
        y0 = Fraction(y0)
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * x0 ** a * y0 ** b
        return total

    def eval_q(self, q0):
        """Value at xy = q0 for a Tate-type polynomial; int when integral."""
        if not self.is_tate():
            raise ValueError("eval_q requires a Tate-type polynomial")
        total = Fraction(0)
        q0 = Fraction(q0)
        for (a, _), c in self.terms.items():
            total += c * q0 ** a
        return int(total) if total.denominator == 1 else total

    def __str__(self):
        return format_poly(self)

    __repr__ = __str__


def _raw(terms):
    p = LaurentPoly2.__new__(LaurentPoly2)
    p.terms = terms
    return p


def _as_poly(v):
    if isinstance(v, LaurentPoly2):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return const(v)
    return NotImplemented


def const(c):
    return _raw({(0, 0): c}) if c else _raw({})


def monomial(a, b, c=1):
    return _raw({(a, b): c}) if c else _raw({})


def q_power(k):
    """The monomial (x*y)^k."""
    return monomial(k, k)


ZERO = const(0)
ONE = const(1)
X = monomial(1, 0)
Y = monomial(0, 1)
Q = q_power(1)


# -- the four transformation rules ------------------------------------------

def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def shift_apply(p, k):
    """Shift rule: multiply by (-1)^k."""
    return -p if k % 2 else p


def twist_apply(p, k):
    """Tate twist rule: multiply by (x*y)^(-k)."""
    return p * q_power(-k)


def dualize(p):
    """Substitute (x, y) -> (1/x, 1/y) term by term."""
    return _raw({(-a, -b): c for (a, b), c in p.terms.items()})


def self_dual_convert(p, n):
    """Self-dual conversion: (x*y)^n * p(1/x, 1/y); involutive for fixed n."""
    return q_power(n) * dualize(p)


def eval_at(p, x0, y0):
    return p.eval_at(x0, y0)


def eval_q(p, q0):
    return p.eval_q(q0)


def is_tate(p):
    return p.is_tate()


# -- textual form -------------------------------------------------------------
#
# Canonical syntax, shared with the command line: signed integer
# coefficients, variables x and y, caret exponents, explicit '*', Tate-type
# monomials rendered as powers of (x*y).  Examples:
#
#     (x*y)^7 - (x*y)^10 - (x*y)^12
#     1 - x^3*y^3
#     -2*x^-1*y

def _mono_text(a, b):
    if a == b:
        if a == 0:
            return ""
        if a == 1:
            return "(x*y)"
        return f"(x*y)^{a}"
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts)


def format_poly(p):
    """Canonical text: terms sorted by (a, then b) ascending."""
    if not p.terms:
        return "0"
    chunks = []
    for e in sorted(p.terms):
        c = p.terms[e]
        mono = _mono_text(*e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


MAX_INPUT_BYTES = 64 * 1024


class _PolyScanner:
    _SYMBOLS = "+-*^()"

    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.tokens = []
        self._scan()
        self.i = 0

    def _scan(self):
        text = self.text
        n = len(text)
        pos = 0
        line, col = 1, 1
        while pos < n:
            ch = text[pos]
            if ch == "\n":
                pos += 1
                line += 1
                col = 1
                continue
            if ch in " \t\r":
                pos += 1
                col += 1
                continue
            if ch.isdigit():
                start = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                self.tokens.append(("INT", text[start:pos], line, col))
                col += pos - start
                continue
            if ch in "xy":
                self.tokens.append(("VAR", ch, line, col))
                pos += 1
                col += 1
                continue
            if ch in self._SYMBOLS:
                self.tokens.append((ch, ch, line, col))
                pos += 1
                col += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", line, col)
        self.tokens.append(("EOF", "", line, col))

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}",
                             tok[2], tok[3])
        return tok


def parse_poly(text):
    """Parse the canonical polynomial syntax into a LaurentPoly2.

    Grammar (whitespace insensitive):

        poly   := ['-'] term (('+'|'-') term)*
        term   := factor ('*' factor)*
        factor := base ['^' ['-'] INT]
        base   := INT | 'x' | 'y' | '(' poly ')'
    """
    if len(text.encode()) > MAX_INPUT_BYTES:
        raise ParseError("input exceeds 64 KiB", 1, 1)
    sc = _PolyScanner(text)
    p = _parse_sum(sc)
    tok = sc.peek()
    if tok[0] != "EOF":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2], tok[3])
    return p


def _parse_sum(sc):
    negate = False
    if sc.peek()[0] == "-":
        sc.next()
        negate = True
    acc = _parse_term(sc)
    if negate:
        acc = -acc
    while sc.peek()[0] in ("+", "-"):
        op = sc.next()[0]
        t = _parse_term(sc)
        acc = acc + t if op == "+" else acc - t
    return acc


def _parse_term(sc):
    acc = _parse_factor(sc)
    while sc.peek()[0] == "*":
        sc.next()
        acc = acc * _parse_factor(sc)
    return acc


def _parse_factor(sc):
    base = _parse_base(sc)
    if sc.peek()[0] != "^":
        return base
    sc.next()
    sign = 1
    if sc.peek()[0] == "-":
        sc.next()
        sign = -1
    tok = sc.expect("INT")
    k = sign * int(tok[1])
    try:
        return base ** k
    except ValueError as exc:
        raise ParseError(str(exc), tok[2], tok[3]) from None


def _parse_base(sc):
    tok = sc.next()
    kind = tok[0]
    if kind == "INT":
        return const(int(tok[1]))
    if kind == "VAR":
        return X if tok[1] == "x" else Y
    if kind == "(":
        p = _parse_sum(sc)
        sc.expect(")")
        return p
    raise ParseError(f"unexpected token {tok[1]!r}", tok[2], tok[3])


# -- Betti polynomials ---------------------------------------------------------

class BettiPoly:
    """Univariate polynomial with non-negative integer coefficients,
    indexed by cohomological degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for k, c in coeffs.items():
                if k < 0 or not isinstance(c, int) or isinstance(c, bool):
                    raise ValueError(f"bad Betti entry {k}: {c!r}")
                if c < 0:
                    raise ValueError(f"negative Betti number b_{k} = {c}")
                if c:
                    cleaned[int(k)] = c
        self.coeffs = cleaned

    @classmethod
    def from_one_plus_powers(cls, powers):
        """Product of (1 + t^k) over the given exponents."""
        acc = {0: 1}
        for k in powers:
            acc = _u_mul(acc, {0: 1, k: 1})
        return cls(acc)

    def coeff(self, k):
        return self.coeffs.get(k, 0)

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def total(self):
        """Sum of all Betti numbers, i.e. the value at t = 1."""
        return sum(self.coeffs.values())

    def euler(self):
        """Alternating sum of the coefficients."""
        return sum(c if k % 2 == 0 else -c for k, c in self.coeffs.items())

    def __mul__(self, other):
        return BettiPoly(_u_mul(self.coeffs, other.coeffs))

    def __eq__(self, other):
        if isinstance(other, BettiPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __str__(self):
        if not self.coeffs:
            return "0"
        chunks = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            else:
                chunks.append(f"{c}*{mono}")
        return " + ".join(chunks)

    __repr__ = __str__


# -- exact univariate helpers (dicts degree -> int, possibly negative) --------

def _u_mul(f, g):
    out = {}
    for a, c in f.items():
        for b, d in g.items():
            e = a + b
            s = out.get(e, 0) + c * d
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _u_div_exact(num, den):
    """Exact univariate polynomial division; nonzero remainder is fatal."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    num = dict(num)
    dd = max(den)
    dl = den[dd]
    out = {}
    while num:
        nd = max(num)
        if nd < dd:
            raise ConsistencyError("non-exact polynomial division (remainder)")
        lead = num[nd]
        if lead % dl:
            raise ConsistencyError("non-exact polynomial division (leading term)")
        c = lead // dl
        e = nd - dd
        out[e] = c
        for b, d in den.items():
            k = e + b
            s = num.get(k, 0) - c * d
            if s:
                num[k] = s
            else:
                num.pop(k, None)
    return out


# -- truncated power series with polynomial coefficients ----------------------

class PowerSeries1:
    """Power series in a formal variable z, truncated at a fixed order,
    with LaurentPoly2 coefficients.  All arithmetic is exact up to the
    truncation order; mixing orders truncates to the minimum.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        fixed = []
        for i in range(order + 1):
            c = coeffs[i] if i < len(coeffs) else ZERO
            p = _as_poly(c)
            if p is NotImplemented:
                raise TypeError(f"coefficient {c!r} is not a polynomial")
            fixed.append(p)
        self.coeffs = fixed
        self.order = order

    @classmethod
    def one(cls, order):
        return cls([ONE], order)

    @classmethod
    def geometric_inverse(cls, c, k, order):
        """(1 - c*z^k)^(-1) truncated: sum of c^j z^(jk)."""
        if k < 1:
            raise ValueError("exponent step must be >= 1")
        coeffs = [ZERO] * (order + 1)
        acc = ONE
        j = 0
        while j * k <= order:
            coeffs[j * k] = acc
            acc = acc * c
            j += 1
        return cls(coeffs, order)

    def coeff(self, n):
        if n > self.order:
            raise IndexError(f"degree {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other):
        order = min(self.order, other.order)
        return PowerSeries1(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [ZERO] * (order + 1)
        for i in range(order + 1):
            ci = self.coeffs[i]
            if ci.is_zero():
                continue
            for j in range(order + 1 - i):
                cj = other.coeffs[j]
                if not cj.is_zero():
                    out[i + j] = out[i + j] + ci * cj
        return PowerSeries1(out, order)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("series power must be a non-negative integer")
        acc = PowerSeries1.one(self.order)
        for _ in range(k):
            acc = acc * self
        return acc

    def integer_coefficients(self):
        """Coefficients as plain ints; fails if any is non-constant."""
        out = []
        for p in self.coeffs:
            extra = [e for e in p.terms if e != (0, 0)]
            if extra:
                raise ValueError("series coefficient is not a constant")
            out.append(p.coeff(0, 0))
        return out
