"""Strata of the Hilbert scheme of four points on affine 3-space, assembly
of the E-polynomial of its vanishing-cycle module, and the plane-partition
count that it categorifies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, ConsistencyError
from .laurent import (LaurentPoly2, ONE, PowerSeries1, const, format_poly,
                      parse_poly, q_power, shift_apply, twist_apply)
from .spaces import (Affine, ConeOverPlucker, FibrationTotal, Grass, Product,
                     Proj, ec, format_space_expr)
from .weights import ec_vanishing_cycles, phi4_restricted_object

PLANE_PARTITION_CAP = 12


# -- partitions and plane partitions ----------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Ordinary partition: weakly decreasing positive parts."""

    parts: tuple

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)


def partitions(n, max_part=None):
    """All partitions of n, first part descending, as tuples."""
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class PlanePartition:
    """Finite array of positive integers, weakly decreasing along rows and
    down columns; trailing zeros are not stored."""

    rows: tuple

    def __post_init__(self):
        prev = None
        for row in self.rows:
            if not row:
                raise ValueError("rows must be nonempty")
            if any(v <= 0 for v in row):
                raise ValueError("entries must be positive")
            if any(a < b for a, b in zip(row, row[1:])):
                raise ValueError("rows must be weakly decreasing")
            if prev is not None:
                if len(row) > len(prev):
                    raise ValueError("row lengths must be weakly decreasing")
                if any(v > prev[i] for i, v in enumerate(row)):
                    raise ValueError("columns must be weakly decreasing")
            prev = row

    @property
    def weight(self):
        return sum(sum(row) for row in self.rows)


def _rows_below(bound, budget):
    """Nonempty weakly decreasing rows pointwise <= bound with sum <= budget,
    in the same descending-lexicographic order as the partition generator."""
    out = []

    def rec(prefix, i, cap, left):
        if prefix:
            out.append(tuple(prefix))
        if i >= len(bound) or left == 0:
            return
        top = min(bound[i], cap, left)
        for v in range(top, 0, -1):
            prefix.append(v)
            rec(prefix, i + 1, v, left - v)
            prefix.pop()

    rec([], 0, budget, budget)
    return out


def plane_partitions(m, cap=PLANE_PARTITION_CAP):
    """Exhaustive, duplicate-free list of plane partitions of weight m, in
    lexicographic depth-first order over row profiles.  The count is
    cross-checked against the generating-function coefficient; disagreement
    is fatal."""
    if m < 0:
        raise ValueError("weight must be >= 0")
    if m > cap:
        raise CapExceededError(
            f"plane-partition enumeration of weight {m} exceeds cap {cap}")
    if m == 0:
        return [PlanePartition(())]
    out = []

    def rec(rows, prev, left):
        if left == 0:
            out.append(PlanePartition(tuple(rows)))
            return
        for row in _rows_below(prev, left):
            rows.append(row)
            rec(rows, row, left - sum(row))
            rows.pop()

    for w in range(m, 0, -1):
        for first in partitions(w):
            rec([first], first, m - w)
    expected = macmahon_series(m).integer_coefficients()[m]
    if len(out) != expected:
        raise ConsistencyError(
            f"enumerated {len(out)} plane partitions of weight {m}, "
            f"generating function says {expected}")
    return out


def macmahon_series(order):
    """Product over k of (1 - z^k)^(-k), truncated at the given order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    acc = PowerSeries1.one(order)
    for k in range(1, order + 1):
        acc = acc * PowerSeries1.geometric_inverse(ONE, k, order) ** k
    return acc


def dt_invariant(m, cap=PLANE_PARTITION_CAP):
    """Number of plane partitions of weight m."""
    return len(plane_partitions(m, cap))


# -- Hilbert schemes of points on a line and a plane --------------------------------

def hilb_line(n):
    """E_c of the Hilbert scheme of n points on the affine line: q^n."""
    if n < 0:
        raise ValueError("need n >= 0")
    return q_power(n)


def goettsche_series(order):
    """Generating series for E_c of Hilbert schemes of points on the affine
    plane: product over k >= 1 of (1 - q^(k+1) z^k)^(-1)."""
    acc = PowerSeries1.one(order)
    for k in range(1, order + 1):
        acc = acc * PowerSeries1.geometric_inverse(q_power(k + 1), k, order)
    return acc


def goettsche_coeff(n):
    """E_c of the Hilbert scheme of n points on the affine plane, computed
    two ways that must agree: the z^n series coefficient, and the partition
    statistic sum of q^(n + length)."""
    if n < 0:
        raise ValueError("need n >= 0")
    via_series = goettsche_series(max(n, 1)).coeff(n)
    via_partitions = const(0)
    for parts in partitions(n):
        via_partitions = via_partitions + q_power(n + len(parts))
    if via_series != via_partitions:
        raise ConsistencyError(
            f"generating-function and partition-statistic routes disagree "
            f"for n={n}: {format_poly(via_series)} vs "
            f"{format_poly(via_partitions)}")
    return via_series


# -- strata of the Hilbert scheme of four points -------------------------------------

LINES_IN_SPACE = FibrationTotal(Proj(2), Affine(2))
PLANES_IN_SPACE = FibrationTotal(Proj(2), Affine(1))
LINES_IN_PLANE = FibrationTotal(Proj(1), Affine(1))

V4_GEOMETRY = Product(Affine(3), ConeOverPlucker(Grass(2, 6)))

# the six-step duality chain behind the open-stratum contribution, kept as
# trace documentation; vc denotes the vanishing-cycle module on X
V4_DUALITY_TRACE = (
    "E_c(V4, p2^*(vc)[3](3))",
    "= E(V4, D(p2^*(vc)[3](3)); 1/x, 1/y)",
    "= E(V4, p2^!(vc(15))[-3](-3); 1/x, 1/y)",
    "= -E(V4, p2^*(vc(15)); 1/x, 1/y)  using p2^! = p2^*(3)[6]",
    "= -E(X, vc(15); 1/x, 1/y)",
    "= -E_c(X, D(vc(15)))",
    "= -E_c(X, vc)",
)


def ec_V4_contribution():
    """Contribution of the open stratum V4 = C^3 x X, computed by the short
    Kuenneth route: shift [3], twist (3), and the E_c of the vanishing-cycle
    module on X.  Must equal q^7*(q^5 + q^3 - 1)."""
    _, ec_vc = ec_vanishing_cycles("stalk-stratum")
    value = shift_apply(twist_apply(ec(Affine(3)) * ec_vc, 3), 3)
    quoted = parse_poly("(x*y)^7 * ((x*y)^5 + (x*y)^3 - 1)")
    if value != quoted:
        raise ConsistencyError(
            f"V4 contribution {format_poly(value)} does not match the "
            f"quoted {format_poly(quoted)}")
    return value


def ec_L4():
    """E_c of the stratum of four collinear points: four points on a line
    times the space of lines in C^3."""
    return hilb_line(4) * ec(LINES_IN_SPACE)


def contribution_L4():
    """Module contribution of L4: the restriction is the constant module
    with shift [12], so the sign is (+)."""
    return shift_apply(ec_L4(), 12)


def collinear_in_plane():
    """E_c of the locus of four collinear points inside a fixed plane."""
    return hilb_line(4) * ec(LINES_IN_PLANE)


def ec_P4_minus_L4():
    """Contribution of the strictly planar stratum: non-collinear four
    points on a plane, fibred over the planes in C^3."""
    in_plane = goettsche_coeff(4) - collinear_in_plane()
    value = shift_apply(in_plane * ec(PLANES_IN_SPACE), 12)
    quoted = parse_poly("(x*y)^7 * (1 + (x*y) + (x*y)^2)^2")
    if value != quoted:
        raise ConsistencyError(
            f"planar contribution {format_poly(value)} does not match the "
            f"quoted {format_poly(quoted)}")
    return value


HILB4_TOTAL_QUOTED = ("(x*y)^6 * ((x*y)^6 + (x*y)^5 + 3*(x*y)^4 + 3*(x*y)^3 "
                      "+ 3*(x*y)^2 + (x*y) + 1)")


def ec_hilb4_total():
    """E_c of the vanishing-cycle module on the Hilbert scheme of four
    points: the sum of the three strata contributions.  A mismatch with the
    quoted closed form is fatal."""
    total = ec_V4_contribution() + contribution_L4() + ec_P4_minus_L4()
    quoted = parse_poly(HILB4_TOTAL_QUOTED)
    if total != quoted:
        raise ConsistencyError(
            f"strata sum {format_poly(total)} does not match the quoted "
            f"total {format_poly(quoted)}")
    return total


def smooth_fixed_point_poly():
    """Cited constant: the contribution of the twelve planar torus-fixed
    points, computed elsewhere by localization."""
    return parse_poly("(x*y)^12 + 2*(x*y)^11 + 3*(x*y)^10 + (x*y)^9 "
                      "+ 3*(x*y)^8 + (x*y)^7 + (x*y)^6")


def singular_fixed_point_residual():
    """What the one non-planar fixed point must contribute: the total minus
    the smooth-fixed-point constant; must equal 2q^9 - q^11."""
    residual = ec_hilb4_total() - smooth_fixed_point_poly()
    quoted = parse_poly("2*(x*y)^9 - (x*y)^11")
    if residual != quoted:
        raise ConsistencyError(
            f"residual {format_poly(residual)} does not match the quoted "
            f"{format_poly(quoted)}")
    return residual


@dataclass(frozen=True)
class HilbStratum:
    label: str
    geometry: str
    coefficient: str
    citation: str
    contribution: LaurentPoly2
    derivation: tuple = ()

    def to_json_dict(self):
        d = {"label": self.label, "geometry": self.geometry,
             "coefficient": self.coefficient, "citation": self.citation,
             "contribution": format_poly(self.contribution)}
        if self.derivation:
            d["derivation"] = list(self.derivation)
        return d


def hilb4_strata():
    """The three strata with their module data and contributions."""
    phi4 = phi4_restricted_object()
    return [
        HilbStratum(
            label="V4",
            geometry=format_space_expr(V4_GEOMETRY),
            coefficient="pullback of the vanishing-cycle module on X, "
                        "shifted [3], twisted (3); weight factors "
                        + str(phi4.weights()),
            citation="Prop 3.4(ii)",
            contribution=ec_V4_contribution(),
            derivation=V4_DUALITY_TRACE,
        ),
        HilbStratum(
            label="L4",
            geometry=format_space_expr(
                FibrationTotal(LINES_IN_SPACE, Affine(4))),
            coefficient="constant module, shift [12]",
            citation="Thm 3.7 proof",
            contribution=contribution_L4(),
        ),
        HilbStratum(
            label="P4minusL4",
            geometry="fib(" + format_space_expr(PLANES_IN_SPACE)
                     + "; non-collinear four points on a plane)",
            coefficient="constant module, shift [12]",
            citation="Thm 3.7 proof",
            contribution=ec_P4_minus_L4(),
        ),
    ]
