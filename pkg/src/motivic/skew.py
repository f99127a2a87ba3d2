"""Skew-symmetric matrix algebra over the integers or a prime field:
Pfaffians by first-row expansion, exact rank by Gaussian elimination,
rank-stratum dimensions and the determinant equivariance identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CoeffDomain:
    """Coefficient domain: a prime field F_p, or the integers when p is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_field(self):
        return self.p is not None

    def normalize(self, v):
        return v % self.p if self.p is not None else v


INTEGERS = CoeffDomain()


def GF(p):
    return CoeffDomain(p)


class SkewMatrix:
    """Skew-symmetric matrix of even size, stored as its strict upper
    triangle in row-major order; the lower triangle is implied by
    antisymmetry and the diagonal is zero."""

    __slots__ = ("size", "upper", "domain")

    def __init__(self, size, upper, domain=INTEGERS):
        if size < 2 or size % 2:
            raise ValueError(f"size must be even and >= 2, got {size}")
        upper = tuple(domain.normalize(int(v)) for v in upper)
        want = size * (size - 1) // 2
        if len(upper) != want:
            raise ValueError(
                f"expected {want} upper-triangle entries, got {len(upper)}")
        self.size = size
        self.upper = upper
        self.domain = domain

    @classmethod
    def from_full(cls, rows, domain=INTEGERS):
        size = len(rows)
        for i in range(size):
            if len(rows[i]) != size:
                raise ValueError("matrix is not square")
            if domain.normalize(rows[i][i]) != 0:
                raise ValueError("diagonal entry is nonzero")
            for j in range(i):
                if domain.normalize(rows[i][j] + rows[j][i]) != 0:
                    raise ValueError("matrix is not skew-symmetric")
        upper = [rows[i][j] for i in range(size) for j in range(i + 1, size)]
        return cls(size, upper, domain)

    @classmethod
    def zero(cls, size, domain=INTEGERS):
        return cls(size, [0] * (size * (size - 1) // 2), domain)

    @classmethod
    def standard_rank(cls, n, k, domain=INTEGERS):
        """The standard 2n x 2n matrix of rank 2k: identity blocks in the
        (i, n+i) positions for i < k, zero elsewhere."""
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        size = 2 * n
        rows = [[0] * size for _ in range(size)]
        for i in range(k):
            rows[i][n + i] = 1
            rows[n + i][i] = -1
        return cls.from_full(rows, domain)

    def entry(self, i, j):
        if i == j:
            return 0
        if i < j:
            return self.upper[_pair_index(i, j, self.size)]
        return self.domain.normalize(-self.upper[_pair_index(j, i, self.size)])

    def full(self):
        return [[self.entry(i, j) for j in range(self.size)]
                for i in range(self.size)]

    def __eq__(self, other):
        if isinstance(other, SkewMatrix):
            return (self.size == other.size and self.upper == other.upper
                    and self.domain == other.domain)
        return NotImplemented

    def __repr__(self):
        return f"skew{self.size} [{','.join(str(v) for v in self.upper)}]"


def _pair_index(i, j, size):
    # row-major position of (i, j), i < j, in the strict upper triangle
    return i * (2 * size - i - 3) // 2 + j - 1


def parse_skew_literal(text, domain=INTEGERS):
    """Parse the test literal format, e.g. ``skew6 [0,1,0,1,0, 1,0,0,0, 1,0,0, 0,1, 0]``."""
    s = text.strip()
    if not s.startswith("skew"):
        raise ParseError("expected 'skew<size>' prefix", 1, 1)
    head, _, rest = s.partition("[")
    if not rest.endswith("]"):
        raise ParseError("expected closing ']'", 1, len(s))
    try:
        size = int(head[4:].strip())
    except ValueError:
        raise ParseError("bad size in 'skew<size>'", 1, 5) from None
    body = rest[:-1].strip()
    entries = [int(v) for v in body.split(",")] if body else []
    return SkewMatrix(size, entries, domain)


# -- Pfaffian ------------------------------------------------------------------

def pfaffian(A):
    """Pfaffian by recursive expansion along the first row:

        Pf(A) = sum_{j>=2} (-1)^j a_{1j} Pf(A with rows/columns 1, j removed)

    normalised so that the 4x4 matrix with upper entries (a,b,c,d,e,f)
    yields a*f - b*e + c*d.
    """
    return A.domain.normalize(_pf_rec(A, tuple(range(A.size))))


def _pf_rec(A, idx):
    if not idx:
        return 1
    if len(idx) == 2:
        return A.entry(idx[0], idx[1])
    i0 = idx[0]
    rest = idx[1:]
    acc = 0
    for pos, j in enumerate(rest):
        a = A.entry(i0, j)
        if a == 0:
            continue
        sub = rest[:pos] + rest[pos + 1:]
        term = a * _pf_rec(A, sub)
        acc += term if pos % 2 == 0 else -term
    return A.domain.normalize(acc)


@lru_cache(maxsize=None)
def pfaffian_pairings(size):
    """All (sign, pairing) terms of the size x size Pfaffian, generated by
    the same first-row recursion as :func:`pfaffian`.  The number of terms
    is (size-1)!! for even size."""
    return _pairings(tuple(range(size)))


def _pairings(idx):
    if not idx:
        return ((1, ()),)
    i0 = idx[0]
    rest = idx[1:]
    out = []
    for pos, j in enumerate(rest):
        sign = 1 if pos % 2 == 0 else -1
        sub = rest[:pos] + rest[pos + 1:]
        for s2, pairs in _pairings(sub):
            out.append((sign * s2, ((i0, j),) + pairs))
    return tuple(out)


# -- rank and dimensions ---------------------------------------------------------

def skew_rank(A):
    """Rank over a prime field, by Gaussian elimination.  Always even for a
    skew-symmetric matrix."""
    if not A.domain.is_field:
        raise ValueError("rank requires a field domain")
    p = A.domain.p
    M = A.full()
    size = A.size
    rank = 0
    for col in range(size):
        pivot = None
        for r in range(rank, size):
            if M[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = pow(M[rank][col], -1, p)
        M[rank] = [(v * inv) % p for v in M[rank]]
        for r in range(rank + 1, size):
            f = M[r][col] % p
            if f:
                M[r] = [(v - f * w) % p for v, w in zip(M[r], M[rank])]
        rank += 1
    return rank


def stratum_dim(n, k):
    """Dimension of the closure of the rank-2k stratum in the space of
    2n x 2n skew matrices: k*(4n - 2k - 1)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return k * (4 * n - 2 * k - 1)


# -- determinants and equivariance ------------------------------------------------

def bareiss_det(rows):
    """Exact integer determinant by fraction-free Gaussian elimination."""
    n = len(rows)
    M = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = None
            for r in range(k + 1, n):
                if M[r][k]:
                    swap = r
                    break
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _gauss_det_modp(rows, p):
    n = len(rows)
    M = [[v % p for v in r] for r in rows]
    det = 1
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if M[r][col]:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            det = -det
        det = det * M[col][col] % p
        inv = pow(M[col][col], -1, p)
        for r in range(col + 1, n):
            f = M[r][col] * inv % p
            if f:
                M[r] = [(v - f * w) % p for v, w in zip(M[r], M[col])]
    return det % p


def mat_det(rows, domain=INTEGERS):
    if domain.is_field:
        return _gauss_det_modp(rows, domain.p)
    return bareiss_det(rows)


def _mat_mul(A, B, domain):
    n = len(A)
    m = len(B[0])
    inner = len(B)
    return [[domain.normalize(sum(A[i][k] * B[k][j] for k in range(inner)))
             for j in range(m)] for i in range(n)]


def check_equivariance(A, g):
    """True iff Pf(g A g^t) = det(g) * Pf(A) exactly over A's domain."""
    size = A.size
    if len(g) != size or any(len(row) != size for row in g):
        raise ValueError(f"g must be {size} x {size}")
    domain = A.domain
    dg = mat_det(g, domain)
    if dg == 0:
        raise ValueError("g is not invertible over the domain")
    gt = [[g[j][i] for j in range(size)] for i in range(size)]
    B = _mat_mul(_mat_mul(g, A.full(), domain), gt, domain)
    conj = SkewMatrix.from_full(B, domain)
    return pfaffian(conj) == domain.normalize(dg * pfaffian(A))
