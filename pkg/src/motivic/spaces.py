"""Scissor calculus on spaces with known E-polynomials.

Expression trees of geometric spaces are evaluated to compactly supported
E-polynomials by structural recursion: catalog leaves, products and Zariski
locally trivial fibrations multiply, complements of registered closed
inclusions subtract, disjoint unions add.  The catalog stores each entry in
the form its source states it (ordinary E for the group-theoretic spaces
and the Milnor fibre, Betti polynomials for the compact ones) together with
a kind tag and smooth dimension; the evaluator works internally with E_c
and converts at the leaves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .counting import gaussian_binomial
from .errors import (MissingDimensionError, MissingInclusionError, ParseError)
from .laurent import (BettiPoly, ONE, _u_div_exact, _u_mul, const,
                      format_poly, q_power, self_dual_convert)


class SpaceExpr:
    """Base class for space-expression nodes."""

    __slots__ = ()

    def __str__(self):
        return format_space_expr(self)


@dataclass(frozen=True)
class Point(SpaceExpr):
    pass


@dataclass(frozen=True)
class Affine(SpaceExpr):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("affine dimension must be >= 0")


@dataclass(frozen=True)
class Torus(SpaceExpr):
    """The one-dimensional torus C^*."""


@dataclass(frozen=True)
class Proj(SpaceExpr):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("projective dimension must be >= 0")


@dataclass(frozen=True)
class Grass(SpaceExpr):
    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got grass({self.k},{self.n})")


@dataclass(frozen=True)
class GLGroup(SpaceExpr):
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("gl(m) needs m >= 1")


@dataclass(frozen=True)
class SpGroup(SpaceExpr):
    m: int  # Sp(m, C) with m even

    def __post_init__(self):
        if self.m < 2 or self.m % 2:
            raise ValueError("sp(m) needs even m >= 2")


@dataclass(frozen=True)
class HomSpaceM(SpaceExpr):
    """GL(2n)/Sp(2n): the open locus of nondegenerate skew 2n x 2n matrices."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("homM(n) needs n >= 1")


@dataclass(frozen=True)
class MilnorFibreF(SpaceExpr):
    """The global Milnor fibre {Pf = 1} of the 2n x 2n Pfaffian."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("milnorF(n) needs n >= 2")


@dataclass(frozen=True)
class PfaffianHypersurface(SpaceExpr):
    """{Pf = 0} inside the space of 2n x 2n skew matrices."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("pfhyp(n) needs n >= 1")


@dataclass(frozen=True)
class ConeOverPlucker(SpaceExpr):
    """Affine cone over a Grassmannian in its Pluecker embedding."""

    inner: Grass

    def __post_init__(self):
        if not isinstance(self.inner, Grass):
            raise ValueError("cone(...) takes a Grassmannian")


@dataclass(frozen=True)
class Product(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr


@dataclass(frozen=True)
class FibrationTotal(SpaceExpr):
    """Total space of a Zariski locally trivial fibration (asserted)."""

    base: SpaceExpr
    fibre: SpaceExpr


@dataclass(frozen=True)
class Complement(SpaceExpr):
    """whole minus closed; requires a registered closed inclusion or an
    explicit note asserting one."""

    whole: SpaceExpr
    closed: SpaceExpr
    note: str | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Disjoint(SpaceExpr):
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("disjoint union needs at least two parts")


# -- dimensions ----------------------------------------------------------------

def dimension(e):
    if isinstance(e, Point):
        return 0
    if isinstance(e, Affine):
        return e.n
    if isinstance(e, Torus):
        return 1
    if isinstance(e, Proj):
        return e.n
    if isinstance(e, Grass):
        return e.k * (e.n - e.k)
    if isinstance(e, GLGroup):
        return e.m * e.m
    if isinstance(e, SpGroup):
        n = e.m // 2
        return n * (2 * n + 1)
    if isinstance(e, HomSpaceM):
        return e.n * (2 * e.n - 1)
    if isinstance(e, MilnorFibreF):
        return 2 * e.n * e.n - e.n - 1
    if isinstance(e, PfaffianHypersurface):
        return e.n * (2 * e.n - 1) - 1
    if isinstance(e, ConeOverPlucker):
        return dimension(e.inner) + 1
    if isinstance(e, (Product, FibrationTotal)):
        a, b = _children(e)
        return dimension(a) + dimension(b)
    if isinstance(e, Complement):
        return dimension(e.whole)
    if isinstance(e, Disjoint):
        return max(dimension(p) for p in e.parts)
    raise TypeError(f"not a space expression: {e!r}")


def _children(e):
    if isinstance(e, Product):
        return e.left, e.right
    return e.base, e.fibre


# -- kinds and conversion --------------------------------------------------------

@dataclass(frozen=True)
class EKind:
    """Which E-polynomial convention a value is in, plus the smooth
    dimension needed to convert between the two."""

    compact: bool
    smooth_dim: int | None = None


def kind_convert(p, frm, to):
    """Convert between ordinary E and compactly supported E_c of a smooth
    variety: multiply by (xy)^dim after inverting the variables."""
    if frm.compact == to.compact:
        return p
    dim = frm.smooth_dim if frm.smooth_dim is not None else to.smooth_dim
    if dim is None:
        raise MissingDimensionError(
            "conversion between E and E_c needs a declared smooth dimension")
    return self_dual_convert(p, dim)


# -- the catalog -----------------------------------------------------------------

def catalog_e_GL(m):
    """Ordinary E of GL(m, C): product of (1 - q^i) for i = 1..m."""
    acc = ONE
    for i in range(1, m + 1):
        acc = acc * (ONE - q_power(i))
    return acc


def catalog_e_Sp(n):
    """Ordinary E of Sp(2n, C): product of (1 - q^(2i)) for i = 1..n."""
    acc = ONE
    for i in range(1, n + 1):
        acc = acc * (ONE - q_power(2 * i))
    return acc


def catalog_e_M(n):
    """Ordinary E of GL(2n)/Sp(2n): product of (1 - q^odd), odd = 1..2n-1."""
    acc = ONE
    for i in range(1, 2 * n, 2):
        acc = acc * (ONE - q_power(i))
    return acc


def catalog_e_F(n):
    """Ordinary E of the Pfaffian Milnor fibre: product of (1 - q^(2i-1))
    for i = 2..n; equals catalog_e_M(n) divided by E(C^*)."""
    if n < 2:
        raise ValueError("catalog_e_F needs n >= 2")
    acc = ONE
    for i in range(2, n + 1):
        acc = acc * (ONE - q_power(2 * i - 1))
    return acc


def catalog_betti_F(n):
    """Betti polynomial of the Milnor fibre: product of (1 + t^(4i-3)),
    i = 2..n."""
    if n < 2:
        raise ValueError("catalog_betti_F needs n >= 2")
    return BettiPoly.from_one_plus_powers([4 * i - 3 for i in range(2, n + 1)])


def catalog_betti_M1(n):
    """Betti polynomial of the compact model U(2n)/Q(n) of the open
    stratum: (1 + t) times the Milnor-fibre factors."""
    if n < 2:
        raise ValueError("catalog_betti_M1 needs n >= 2")
    return BettiPoly.from_one_plus_powers(
        [1] + [4 * i - 3 for i in range(2, n + 1)])


def betti_grassmannian(k=2, n=6):
    """Betti polynomial of Gr(k, n) by exact division of the product
    formula; only even degrees occur."""
    num = {0: 1}
    den = {0: 1}
    for i in range(1, k + 1):
        num = _u_mul(num, {0: 1, 2 * (n - k + i): -1})
        den = _u_mul(den, {0: 1, 2 * i: -1})
    return BettiPoly(_u_div_exact(num, den))


def catalog_entry(e):
    """The stated polynomial and kind tag of a catalog leaf."""
    if isinstance(e, Point):
        return ONE, EKind(compact=True, smooth_dim=0)
    if isinstance(e, Affine):
        return q_power(e.n), EKind(compact=True, smooth_dim=e.n)
    if isinstance(e, Torus):
        return q_power(1) - ONE, EKind(compact=True, smooth_dim=1)
    if isinstance(e, Proj):
        p = sum((q_power(i) for i in range(e.n + 1)), const(0))
        return p, EKind(compact=True, smooth_dim=e.n)
    if isinstance(e, Grass):
        return (gaussian_binomial(e.n, e.k),
                EKind(compact=True, smooth_dim=dimension(e)))
    if isinstance(e, GLGroup):
        return catalog_e_GL(e.m), EKind(compact=False, smooth_dim=e.m * e.m)
    if isinstance(e, SpGroup):
        return catalog_e_Sp(e.m // 2), EKind(compact=False,
                                             smooth_dim=dimension(e))
    if isinstance(e, HomSpaceM):
        return catalog_e_M(e.n), EKind(compact=False, smooth_dim=dimension(e))
    if isinstance(e, MilnorFibreF):
        return catalog_e_F(e.n), EKind(compact=False, smooth_dim=dimension(e))
    raise KeyError(f"no catalog entry for {format_space_expr(e)}")


# -- closed inclusions -------------------------------------------------------------

_registered_inclusions = set()


def register_closed_inclusion(whole, closed):
    _registered_inclusions.add((whole, closed))


def closed_inclusion_note(whole, closed):
    """A note naming the recognized closed inclusion, or None."""
    if (whole, closed) in _registered_inclusions:
        return "registered inclusion"
    if isinstance(closed, Point) and not isinstance(
            whole, (Product, FibrationTotal, Complement, Disjoint)):
        return "point in a variety"
    if (isinstance(whole, Affine) and isinstance(closed, PfaffianHypersurface)
            and whole.n == closed.n * (2 * closed.n - 1)):
        return "hypersurface in the skew-matrix space"
    if (isinstance(whole, PfaffianHypersurface) and whole.n == 3
            and closed == ConeOverPlucker(Grass(2, 6))):
        return "singular locus of the 6x6 Pfaffian hypersurface"
    if isinstance(whole, Affine) and isinstance(closed, Affine) \
            and closed.n < whole.n:
        return "coordinate subspace"
    if isinstance(whole, Proj) and isinstance(closed, Proj) \
            and closed.n < whole.n:
        return "linear subspace"
    return None


# -- the evaluator ------------------------------------------------------------------

def ec(e):
    """Compactly supported E-polynomial of a space expression."""
    return _ec(e, None)


def ec_traced(e):
    """E_c together with the post-order derivation steps."""
    steps = []
    value = _ec(e, steps)
    return value, steps


def _record(steps, e, rule, value):
    if steps is not None:
        steps.append({"space": format_space_expr(e), "rule": rule,
                      "ec": format_poly(value)})
    return value


def _ec(e, steps):
    if isinstance(e, ConeOverPlucker):
        # vertex plus a torus bundle over the projective base
        base = _ec(e.inner, steps)
        value = ONE + (q_power(1) - ONE) * base
        return _record(steps, e, "cone: vertex + torus bundle over the base",
                       value)
    if isinstance(e, PfaffianHypersurface):
        ambient = e.n * (2 * e.n - 1)
        open_part = _ec(HomSpaceM(e.n), steps)
        value = q_power(ambient) - open_part
        return _record(
            steps, e, "hypersurface: ambient affine space minus the open "
            "nondegenerate stratum", value)
    if isinstance(e, Product):
        value = _ec(e.left, steps) * _ec(e.right, steps)
        return _record(steps, e, "product: multiply factors", value)
    if isinstance(e, FibrationTotal):
        value = _ec(e.base, steps) * _ec(e.fibre, steps)
        return _record(
            steps, e,
            "fibration (Zariski local triviality asserted): multiply", value)
    if isinstance(e, Complement):
        note = e.note or closed_inclusion_note(e.whole, e.closed)
        if note is None:
            raise MissingInclusionError(
                f"no registered closed inclusion of "
                f"{format_space_expr(e.closed)} in "
                f"{format_space_expr(e.whole)}")
        value = _ec(e.whole, steps) - _ec(e.closed, steps)
        return _record(steps, e, f"complement ({note}): subtract", value)
    if isinstance(e, Disjoint):
        value = const(0)
        for part in e.parts:
            value = value + _ec(part, steps)
        return _record(steps, e, "disjoint union: add", value)
    stated, kind = catalog_entry(e)
    value = kind_convert(stated, kind, EKind(compact=True))
    rule = ("catalog leaf" if kind.compact else
            f"catalog leaf, converted from ordinary E "
            f"(smooth dimension {kind.smooth_dim})")
    return _record(steps, e, rule, value)


# -- textual grammar ----------------------------------------------------------------
#
#   expr := term (('+' | '\') term)*        consecutive '+' collect into one
#   term := atom ('*' atom)*                 disjoint union; left associative
#   atom := NAME '(' args ')' | NAME | '(' expr ')'
#
# Leaves: point, torus, affine(n), proj(n), grass(k,n), gl(m), sp(m),
# homM(n), milnorF(n), pfhyp(n), cone(grass(k,n)), fib(base; fibre).

MAX_INPUT_BYTES = 64 * 1024

_SYMBOLS = "*+\\();,"


class _Scanner:
    def __init__(self, text):
        self.tokens = []
        line, col = 1, 1
        pos = 0
        n = len(text)
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
            if ch.isalpha():
                start = pos
                while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                    pos += 1
                self.tokens.append(("NAME", text[start:pos], line, col))
                col += pos - start
                continue
            if ch in _SYMBOLS:
                self.tokens.append((ch, ch, line, col))
                pos += 1
                col += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", line, col)
        self.tokens.append(("EOF", "", line, col))
        self.i = 0

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


_LEAF_ARITY = {
    "point": 0, "torus": 0, "affine": 1, "proj": 1, "grass": 2, "gl": 1,
    "sp": 1, "homM": 1, "milnorF": 1, "pfhyp": 1, "cone": 1, "fib": 2,
}


def parse_space_expr(text):
    """Parse the space-expression grammar; round-trips with the printer."""
    if len(text.encode()) > MAX_INPUT_BYTES:
        raise ParseError("input exceeds 64 KiB", 1, 1)
    sc = _Scanner(text)
    e = _parse_expr(sc)
    tok = sc.peek()
    if tok[0] != "EOF":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2], tok[3])
    return e


def _parse_expr(sc):
    acc = _parse_term(sc)
    while sc.peek()[0] in ("+", "\\"):
        op = sc.next()[0]
        rhs = _parse_term(sc)
        if op == "+":
            if isinstance(acc, Disjoint):
                acc = Disjoint(acc.parts + (rhs,))
            else:
                acc = Disjoint((acc, rhs))
        else:
            acc = Complement(acc, rhs)
    return acc


def _parse_term(sc):
    acc = _parse_atom(sc)
    while sc.peek()[0] == "*":
        sc.next()
        acc = Product(acc, _parse_atom(sc))
    return acc


def _parse_int(sc):
    tok = sc.expect("INT")
    return int(tok[1])


def _parse_atom(sc):
    tok = sc.next()
    if tok[0] == "(":
        e = _parse_expr(sc)
        sc.expect(")")
        return e
    if tok[0] != "NAME":
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2], tok[3])
    name = tok[1]
    if name not in _LEAF_ARITY:
        raise ParseError(f"unknown space {name!r}", tok[2], tok[3])
    arity = _LEAF_ARITY[name]
    if arity == 0:
        return Point() if name == "point" else Torus()
    sc.expect("(")
    try:
        if name == "cone":
            inner = _parse_atom(sc)
            if not isinstance(inner, Grass):
                raise ParseError("cone(...) takes a Grassmannian",
                                 tok[2], tok[3])
            sc.expect(")")
            return ConeOverPlucker(inner)
        if name == "fib":
            base = _parse_expr(sc)
            sc.expect(";")
            fibre = _parse_expr(sc)
            sc.expect(")")
            return FibrationTotal(base, fibre)
        if name == "grass":
            k = _parse_int(sc)
            sc.expect(",")
            n = _parse_int(sc)
            sc.expect(")")
            return Grass(k, n)
        v = _parse_int(sc)
        sc.expect(")")
        ctor = {"affine": Affine, "proj": Proj, "gl": GLGroup, "sp": SpGroup,
                "homM": HomSpaceM, "milnorF": MilnorFibreF,
                "pfhyp": PfaffianHypersurface}[name]
        return ctor(v)
    except ValueError as exc:
        raise ParseError(str(exc), tok[2], tok[3]) from None


def format_space_expr(e):
    """Canonical text for a space expression; parse(format(e)) == e."""
    return _fmt(e, 0)


# precedence levels: 0 sum/complement, 1 product, 2 atom
def _fmt(e, level):
    if isinstance(e, Point):
        return "point"
    if isinstance(e, Torus):
        return "torus"
    if isinstance(e, Affine):
        return f"affine({e.n})"
    if isinstance(e, Proj):
        return f"proj({e.n})"
    if isinstance(e, Grass):
        return f"grass({e.k},{e.n})"
    if isinstance(e, GLGroup):
        return f"gl({e.m})"
    if isinstance(e, SpGroup):
        return f"sp({e.m})"
    if isinstance(e, HomSpaceM):
        return f"homM({e.n})"
    if isinstance(e, MilnorFibreF):
        return f"milnorF({e.n})"
    if isinstance(e, PfaffianHypersurface):
        return f"pfhyp({e.n})"
    if isinstance(e, ConeOverPlucker):
        return f"cone({_fmt(e.inner, 2)})"
    if isinstance(e, FibrationTotal):
        return f"fib({_fmt(e.base, 0)}; {_fmt(e.fibre, 0)})"
    if isinstance(e, Product):
        text = f"{_fmt(e.left, 1)} * {_fmt(e.right, 2)}"
        return f"({text})" if level > 1 else text
    if isinstance(e, Complement):
        text = f"{_fmt(e.whole, 0)} \\ {_fmt(e.closed, 1)}"
        return f"({text})" if level > 0 else text
    if isinstance(e, Disjoint):
        text = " + ".join(_fmt(p, 1) for p in e.parts)
        return f"({text})" if level > 0 else text
    raise TypeError(f"not a space expression: {e!r}")
