"""Univariate polynomials over a generic exact coefficient ring.

Coefficients may be anything with ring operations (+, -, *), equality
against 0-like values, and -- for the Bareiss path -- exact division.
That covers F_p elements, Fractions, plain ints, and the sparse
multivariate polynomials of :mod:`howe_sextic.mpoly`, so the same
resultant code runs at field level and at symbolic level.

The Sylvester matrix layout is normative: for resultant(f, g) the first
deg(g) rows are shifted copies of f's coefficients in descending powers,
the next deg(f) rows are shifted copies of g's.  The sign conventions of
the model construction depend on this exact layout.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Sequence

from .exact_arith import FpElement, PrimeField, sqrt_in_field


class UnivariatePolynomial:
    """Dense univariate polynomial; coefficients[i] multiplies x^i.

    Trailing zeros are stripped on construction, so the representation is
    canonical: the zero polynomial has an empty coefficient list and
    degree -1 (used as the "-infinity" sentinel throughout).
    """

    __slots__ = ("coefficients", "ring")

    def __init__(self, coefficients: Sequence, ring):
        coeffs = list(coefficients)
        zero = ring.zero()
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.coefficients = coeffs
        self.ring = ring

    # -- construction helpers -------------------------------------------

    @classmethod
    def constant(cls, value, ring) -> "UnivariatePolynomial":
        return cls([value], ring)

    @classmethod
    def x(cls, ring) -> "UnivariatePolynomial":
        return cls([ring.zero(), ring.one()], ring)

    @classmethod
    def from_roots(cls, roots, ring) -> "UnivariatePolynomial":
        poly = cls([ring.one()], ring)
        for r in roots:
            poly = poly * cls([-ring(r), ring.one()], ring)
        return poly

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def leading_coefficient(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def coefficient(self, i: int):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return self.ring.zero()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return UnivariatePolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)], self.ring
        )

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return UnivariatePolynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)], self.ring
        )

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coefficients], self.ring)

    def __mul__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return UnivariatePolynomial(
                [c * other for c in self.coefficients], self.ring
            )
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial([], self.ring)
        zero = self.ring.zero()
        out = [zero] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return UnivariatePolynomial(out, self.ring)

    def __rmul__(self, other):
        return self * other

    def scale(self, scalar) -> "UnivariatePolynomial":
        return UnivariatePolynomial([c * scalar for c in self.coefficients], self.ring)

    def _coerce(self, other) -> "UnivariatePolynomial":
        if isinstance(other, UnivariatePolynomial):
            return other
        return UnivariatePolynomial([other], self.ring)

    def __eq__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients))

    def __call__(self, x):
        """Horner evaluation; x may live in an extension of the ring."""
        if self.is_zero():
            return self.ring.zero()
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficient(i)
            if c == self.ring.zero():
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"({c})*x")
            else:
                parts.append(f"({c})*x^{i}")
        return " + ".join(parts)

    # -- field-only operations ------------------------------------------

    def monic(self) -> "UnivariatePolynomial":
        if self.is_zero():
            return self
        inv = _field_inverse(self.leading_coefficient(), self.ring)
        return self.scale(inv)

    def divmod_over_field(self, divisor: "UnivariatePolynomial"):
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = UnivariatePolynomial(list(self.coefficients), self.ring)
        zero = self.ring.zero()
        q = [zero] * max(0, rem.degree - divisor.degree + 1)
        lead_inv = _field_inverse(divisor.leading_coefficient(), self.ring)
        while not rem.is_zero() and rem.degree >= divisor.degree:
            shift = rem.degree - divisor.degree
            factor = rem.leading_coefficient() * lead_inv
            q[shift] = factor
            sub = [zero] * shift + [c * factor for c in divisor.coefficients]
            rem = rem - UnivariatePolynomial(sub, self.ring)
        return UnivariatePolynomial(q, self.ring), rem

    def derivative(self) -> "UnivariatePolynomial":
        if self.degree < 1:
            return UnivariatePolynomial([], self.ring)
        out = []
        for i in range(1, len(self.coefficients)):
            term = self.coefficients[i]
            acc = self.ring.zero()
            for _ in range(i):  # i * c without assuming int coercion
                acc = acc + term
            out.append(acc)
        return UnivariatePolynomial(out, self.ring)


def _field_inverse(c, ring):
    if hasattr(c, "inverse"):
        return c.inverse()
    return ring.one() / c  # Fractions and similar


def gcd_over_field(
    f: UnivariatePolynomial, g: UnivariatePolynomial
) -> UnivariatePolynomial:
    """Monic gcd over a field; gcd(f, 0) = monic(f)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        _, r = a.divmod_over_field(b)
        a, b = b, r
    return a.monic()


class SylvesterMatrix:
    """The (deg f + deg g)-square Sylvester matrix of f and g.

    Rows 1..deg(g) carry f's coefficients in descending powers, shifted
    right one column per row; rows deg(g)+1..deg(g)+deg(f) carry g's the
    same way.  ``entries`` is a list of rows.
    """

    __slots__ = ("entries", "size", "ring")

    def __init__(self, f: UnivariatePolynomial, g: UnivariatePolynomial):
        if f.is_zero() or g.is_zero():
            raise ValueError("Sylvester matrix of the zero polynomial")
        self.ring = f.ring
        m, n = f.degree, g.degree
        self.size = m + n
        zero = self.ring.zero()
        rows: List[list] = []
        f_desc = list(reversed(f.coefficients))
        g_desc = list(reversed(g.coefficients))
        for shift in range(n):
            row = [zero] * shift + f_desc + [zero] * (self.size - shift - m - 1)
            rows.append(row)
        for shift in range(m):
            row = [zero] * shift + g_desc + [zero] * (self.size - shift - n - 1)
            rows.append(row)
        self.entries = rows

    def determinant(self):
        return bareiss_determinant(self.entries, self.ring)


def _exact_divide(numerator, denominator, ring):
    """Exact division dispatch for Bareiss pivots."""
    if hasattr(numerator, "exact_div"):
        return numerator.exact_div(denominator)
    if isinstance(numerator, int) and isinstance(denominator, int):
        q, r = divmod(numerator, denominator)
        if r:
            raise ArithmeticError("inexact division in Bareiss elimination")
        return q
    # Field elements and Fractions divide exactly.
    if hasattr(numerator, "inverse") or hasattr(denominator, "inverse"):
        return numerator * denominator.inverse()
    return numerator / denominator


def bareiss_determinant(matrix: Sequence[Sequence], ring):
    """Fraction-free determinant (Bareiss) over an integral domain.

    Divisions are exact at every step; row swaps flip the sign.  The input
    matrix is not modified.
    """
    n = len(matrix)
    if n == 0:
        return ring.one()
    a = [list(row) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    zero = ring.zero()
    sign_flip = False
    prev_pivot = ring.one()
    for k in range(n - 1):
        if a[k][k] == zero:
            for swap in range(k + 1, n):
                if a[swap][k] != zero:
                    a[k], a[swap] = a[swap], a[k]
                    sign_flip = not sign_flip
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            head = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - head * row_k[j]
                row_i[j] = _exact_divide(num, prev_pivot, ring)
            row_i[k] = zero
        prev_pivot = pivot
    det = a[n - 1][n - 1]
    return -det if sign_flip else det


def resultant(f: UnivariatePolynomial, g: UnivariatePolynomial):
    """Res_x(f, g): determinant of the Sylvester matrix defined above."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if f.degree == 0 and g.degree == 0:
        return f.ring.one()
    if f.degree == 0:
        return _ring_pow(f.coefficients[0], g.degree, f.ring)
    if g.degree == 0:
        return _ring_pow(g.coefficients[0], f.degree, f.ring)
    return SylvesterMatrix(f, g).determinant()


def _ring_pow(base, n: int, ring):
    acc = ring.one()
    for _ in range(n):
        acc = acc * base
    return acc


# ---------------------------------------------------------------------------
# Distinct roots in the coefficient field (prime fields and rationals).
# ---------------------------------------------------------------------------


def _inverse_of(c):
    return c.inverse() if hasattr(c, "inverse") else 1 / Fraction(c)


def roots_of_quadratic_or_less(poly: UnivariatePolynomial) -> List:
    """Exact roots of a degree <= 2 polynomial, in its own field only."""
    if poly.degree < 1:
        return []
    if poly.degree == 1:
        return [-poly.coefficient(0) * _inverse_of(poly.coefficient(1))]
    if poly.degree == 2:
        a, b, c = poly.coefficient(2), poly.coefficient(1), poly.coefficient(0)
        disc = b * b - 4 * (a * c)
        r = sqrt_in_field(disc)
        if r is None:
            return []
        half = _inverse_of(2 * a)
        roots = [(-b + r) * half, (-b - r) * half]
        return roots if roots[0] != roots[1] else roots[:1]
    raise ValueError(f"expected degree <= 2, got {poly.degree}")


def roots_in_field(poly: UnivariatePolynomial) -> List:
    """All distinct roots of poly lying in its own coefficient field."""
    if poly.degree < 1:
        return []
    if isinstance(poly.ring, PrimeField):
        return _fp_distinct_roots(poly)
    return _qq_roots(poly)


def _poly_powmod(base: UnivariatePolynomial, e: int, mod: UnivariatePolynomial):
    result = UnivariatePolynomial([mod.ring.one()], mod.ring)
    base = base.divmod_over_field(mod)[1]
    while e:
        if e & 1:
            result = (result * base).divmod_over_field(mod)[1]
        base = (base * base).divmod_over_field(mod)[1]
        e >>= 1
    return result


def _fp_distinct_roots(poly: UnivariatePolynomial) -> List[FpElement]:
    field = poly.ring
    p = field.p
    x = UnivariatePolynomial.x(field)
    xp = _poly_powmod(x, p, poly)
    linear_part = gcd_over_field(poly, xp - x)
    if linear_part.degree < 1:
        return []

    rng = random.Random(0xC0FFEE ^ p)
    roots: List[FpElement] = []
    stack = [linear_part.monic()]
    while stack:
        h = stack.pop()
        if h.degree < 1:
            continue
        if h.degree <= 2:
            roots.extend(roots_of_quadratic_or_less(h))
            continue
        # h splits into distinct linear factors; split with a random shift.
        while True:
            shift = UnivariatePolynomial([field(rng.randrange(p)), field.one()], field)
            probe = _poly_powmod(shift, (p - 1) // 2, h) - UnivariatePolynomial(
                [field.one()], field
            )
            if probe.is_zero():
                continue
            d = gcd_over_field(h, probe)
            if 0 < d.degree < h.degree:
                stack.append(d)
                stack.append(h.divmod_over_field(d)[0])
                break
    return roots


def _qq_roots(poly: UnivariatePolynomial) -> List[Fraction]:
    if poly.degree <= 2:
        return roots_of_quadratic_or_less(poly)
    # Rational root theorem on the primitive integer form, kept bounded:
    # callers treat a missed root as "no rational root found".
    from math import gcd as int_gcd

    denom_lcm = 1
    for c in poly.coefficients:
        denom_lcm = denom_lcm * c.denominator // int_gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in poly.coefficients]
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    content = 0
    for c in ints:
        content = int_gcd(content, abs(c))
    ints = [c // content for c in ints]
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 > 10**12 or an > 10**12:
        return [Fraction(0)] if shift else []

    def divisors(n: int) -> List[int]:
        out = []
        d = 1
        while d * d <= n and len(out) < 200:
            if n % d == 0:
                out.append(d)
                if d != n // d:
                    out.append(n // d)
            d += 1
        return out

    roots = [Fraction(0)] if shift else []
    for s in divisors(a0):
        for t in divisors(an):
            for cand in (Fraction(s, t), Fraction(-s, t)):
                if cand in roots:
                    continue
                if poly(cand) == Fraction(0):
                    roots.append(cand)
    return roots
