"""Laurent polynomials in t over a cyclotomic field, matrices over that
ring, and elementary-divisor (Smith form) computation.

The ring Q(zeta_n)[t, t^-1] is a localization of a Euclidean domain;
division works on the span (top exponent minus bottom exponent) after
clearing powers of t, which are units.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .errors import NotTorsion, ZeroPolynomial


class LaurentPoly:
    """Immutable Laurent polynomial; ``coeffs[i]`` multiplies
    ``t**(low+i)`` and both end coefficients are nonzero unless the
    polynomial is zero (empty coeffs)."""

    __slots__ = ("n", "low", "coeffs")

    def __init__(self, n, low, coeffs):
        cs = list(coeffs)
        # trim zero ends, keeping low in sync
        while cs and cs[-1].is_zero():
            cs.pop()
        while cs and cs[0].is_zero():
            cs.pop(0)
            low += 1
        if not cs:
            low = 0
        self.n = n
        self.low = low
        self.coeffs = tuple(cs)

    # constructors ----------------------------------------------------
    @classmethod
    def zero(cls, n):
        return cls(n, 0, [])

    @classmethod
    def one(cls, n):
        return cls(n, 0, [CyclotomicNumber.one(n)])

    @classmethod
    def monomial(cls, n, coeff, exp=0):
        if isinstance(coeff, (int, Fraction)):
            coeff = CyclotomicNumber.from_rational(n, coeff)
        return cls(n, exp, [coeff])

    @classmethod
    def from_int_coeffs(cls, n, coeffs, low=0):
        return cls(n, low, [CyclotomicNumber.from_rational(n, c) for c in coeffs])

    @classmethod
    def t_minus_one(cls, n):
        return cls.from_int_coeffs(n, [-1, 1])

    # predicates ------------------------------------------------------
    def is_zero(self):
        return not self.coeffs

    def is_unit(self):
        """Units of the Laurent ring are c * t^k with c != 0."""
        return len(self.coeffs) == 1

    @property
    def span(self):
        """Euclidean size: degree after clearing the power of t."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def high(self):
        return self.low + self.span

    # arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return LaurentPoly.monomial(self.n, other)
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError("mixed cyclotomic moduli")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        zero = CyclotomicNumber.zero(self.n)
        cs = [zero] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            cs[self.low - low + i] = cs[self.low - low + i] + c
        for i, c in enumerate(other.coeffs):
            cs[other.low - low + i] = cs[other.low - low + i] + c
        return LaurentPoly(self.n, low, cs)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.n, self.low, [-c for c in self.coeffs])

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
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero(self.n)
        zero = CyclotomicNumber.zero(self.n)
        cs = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                cs[i + j] = cs[i + j] + a * b
        return LaurentPoly(self.n, self.low + other.low, cs)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly(self.n, self.low + k, self.coeffs)

    def divmod(self, other):
        """a = q*b + r with span(r) < span(b)."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        quo = LaurentPoly.zero(self.n)
        inv_lead = other.coeffs[-1].inverse() if other.coeffs else None
        while not rem.is_zero() and rem.span >= other.span:
            c = rem.coeffs[-1] * inv_lead
            k = rem.high - other.high
            term = LaurentPoly(self.n, k, [c])
            quo = quo + term
            rem = rem - term * other
        return quo, rem

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other):
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def normalize(self):
        """Canonical unit representative: monic with lowest exponent 0."""
        if self.is_zero():
            return self
        inv = self.coeffs[-1].inverse()
        return LaurentPoly(self.n, 0, [c * inv for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.normalize() if not a.is_zero() else a

    # evaluation ------------------------------------------------------
    def at_one(self) -> CyclotomicNumber:
        total = CyclotomicNumber.zero(self.n)
        for c in self.coeffs:
            total = total + c
        return total

    def eval_complex(self, t: complex) -> complex:
        return sum(c.to_complex() * t ** (self.low + i)
                   for i, c in enumerate(self.coeffs))

    def derivative(self):
        cs = []
        low = self.low - 1
        for i, c in enumerate(self.coeffs):
            k = self.low + i
            cs.append(c * k)
        return LaurentPoly(self.n, low, cs)

    # comparisons -----------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.low, self.coeffs))

    def __repr__(self):
        return format_poly(self)


def format_poly(p: LaurentPoly) -> str:
    """Canonical text form ``(c)*t^k + ...`` with cyclotomic
    coefficients printed as ``[q0,q1,...]@n``."""
    if p.is_zero():
        return f"[0]@{p.n}*t^0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        terms.append(f"{c!r}*t^{p.low + i}")
    return " + ".join(terms)


def ord_at_one(f: LaurentPoly) -> int:
    """Largest k with (t-1)^k dividing f, by exact repeated division."""
    if f.is_zero():
        raise ZeroPolynomial("ord at t=1 of the zero polynomial")
    tm1 = LaurentPoly.t_minus_one(f.n)
    k = 0
    while f.at_one().is_zero():
        f = f.exact_div(tm1)
        k += 1
    return k


class LaurentMatrix:
    """Rectangular matrix of LaurentPoly entries."""

    def __init__(self, n, entries):
        self.n = n
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def zero(cls, n, rows, cols):
        z = LaurentPoly.zero(n)
        return cls(n, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n, size):
        m = cls.zero(n, size, size)
        for i in range(size):
            m.entries[i][i] = LaurentPoly.one(n)
        return m

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def copy(self):
        return LaurentMatrix(self.n, self.entries)

    def transpose(self):
        return LaurentMatrix(self.n, [[self.entries[i][j] for i in range(self.rows)]
                                      for j in range(self.cols)])

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        z = LaurentPoly.zero(self.n)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return LaurentMatrix(self.n, out)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)


def smith_form(m: LaurentMatrix) -> list[LaurentPoly]:
    """Elementary divisors d1 | d2 | ... of the cokernel presented by m.

    Returns min(rows, cols) normalized divisors; trailing zeros signal a
    non-torsion quotient (rank deficiency).
    """
    e = [row[:] for row in m.entries]
    rows, cols = m.rows, m.cols
    size = min(rows, cols)
    divisors = []
    n = m.n

    def find_pivot(k):
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                p = e[i][j]
                if not p.is_zero() and (best is None or p.span < e[best[0]][best[1]].span):
                    best = (i, j)
        return best

    k = 0
    while k < size:
        piv = find_pivot(k)
        if piv is None:
            break
        i0, j0 = piv
        e[k], e[i0] = e[i0], e[k]
        for row in e:
            row[k], row[j0] = row[j0], row[k]
        while True:
            dirty = False
            for i in range(k + 1, rows):
                if e[i][k].is_zero():
                    continue
                q, r = e[i][k].divmod(e[k][k])
                e[i] = [a - q * b for a, b in zip(e[i], e[k])]
                if not r.is_zero():
                    e[k], e[i] = e[i], e[k]
                    dirty = True
            for j in range(k + 1, cols):
                if e[k][j].is_zero():
                    continue
                q, r = e[k][j].divmod(e[k][k])
                for i in range(rows):
                    e[i][j] = e[i][j] - q * e[i][k]
                if not r.is_zero():
                    for i in range(rows):
                        e[i][k], e[i][j] = e[i][j], e[i][k]
                    dirty = True
            if dirty:
                continue
            if all(e[i][k].is_zero() for i in range(k + 1, rows)) and \
               all(e[k][j].is_zero() for j in range(k + 1, cols)):
                break
        # pivot must divide the whole remaining block
        offender = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if not e[k][k].divides(e[i][j]):
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            e[k] = [a + b for a, b in zip(e[k], e[offender])]
            continue
        divisors.append(e[k][k].normalize())
        k += 1

    while len(divisors) < size:
        divisors.append(LaurentPoly.zero(n))
    return divisors


def char_poly_from_divisors(divisors) -> LaurentPoly:
    """Characteristic polynomial of the t-action on the torsion module
    with the given elementary divisors: the product of the nonunit
    ones, normalized."""
    if not divisors:
        raise ValueError("empty divisor list")
    n = divisors[0].n
    out = LaurentPoly.one(n)
    for d in divisors:
        if d.is_zero():
            raise NotTorsion("module with zero elementary divisor")
        if not d.is_unit():
            out = out * d
    return out.normalize()
