"""Exact arithmetic: prime fields F_p, quadratic extensions F_{p^2}, rationals.

Everything here is exact -- no floating point anywhere.  Elements are
immutable value objects; fields compare equal by their defining data, so
elements of two separately constructed ``PrimeField(31)`` objects mix freely.

The rational "field object" is :data:`QQ`, an adapter whose elements are
plain :class:`fractions.Fraction` values (already reduced, positive
denominator -- exactly the representation we need).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

# Largest modulus allowed: products must fit in 128-bit intermediates even
# on hosts where Python delegates to fixed-width scratch arithmetic.
MAX_MODULUS_BITS = 63

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3 * 10^24 with these bases."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FpElement:
    """An element of F_p in canonical representation 0 <= value < p."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: "PrimeField"):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other) -> Optional["FpElement"]:
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise ValueError("elements of different prime fields")
            return other
        if isinstance(other, int):
            return FpElement(other, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o.value - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(pow(self.value, n, self.field.p), self.field)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return FpElement(pow(self.value, self.field.p - 2, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}"


class PrimeField:
    """The field F_p for an odd prime p with 3 <= p < 2^63."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError(f"modulus must be an int, got {type(p).__name__}")
        if p.bit_length() > MAX_MODULUS_BITS:
            raise ValueError(f"modulus exceeds {MAX_MODULUS_BITS} bits: {p}")
        if p < 3 or p % 2 == 0 or not is_probable_prime(p):
            raise ValueError(f"modulus must be an odd prime >= 3, got {p}")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.field.p != self.p:
                raise ValueError("element of a different prime field")
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return FpElement(value, self)
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def zero(self) -> FpElement:
        return FpElement(0, self)

    def one(self) -> FpElement:
        return FpElement(1, self)

    def elements(self):
        for v in range(self.p):
            yield FpElement(v, self)

    def random_element(self, rng) -> FpElement:
        return FpElement(rng.randrange(self.p), self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"


def legendre_symbol(a) -> int:
    """Legendre symbol of a in F_p: 0 for 0, +1 for nonzero squares, -1 else."""
    if not isinstance(a, FpElement):
        raise TypeError("legendre_symbol expects an F_p element")
    p = a.field.p
    if a.value == 0:
        return 0
    e = pow(a.value, (p - 1) // 2, p)  # Euler's criterion
    return 1 if e == 1 else -1


def smallest_nonresidue(field: PrimeField) -> FpElement:
    """Smallest positive quadratic nonresidue of F_p (p odd, so one exists)."""
    for d in range(2, field.p):
        el = field(d)
        if legendre_symbol(el) == -1:
            return el
    raise AssertionError("odd prime field without nonresidue")  # unreachable


def _sqrt_mod_p(a: FpElement) -> Optional[FpElement]:
    """Tonelli-Shanks square root in F_p, or None if a is a nonsquare."""
    field = a.field
    p = field.p
    if a.value == 0:
        return field.zero()
    if legendre_symbol(a) == -1:
        return None
    if p % 4 == 3:
        return a ** ((p + 1) // 4)
    # General Tonelli-Shanks: write p - 1 = q * 2^s with q odd.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = smallest_nonresidue(field)  # deterministic generator choice
    m = s
    c = z ** q
    t = a ** q
    r = a ** ((q + 1) // 2)
    while t.value != 1:
        # Find least i with t^(2^i) = 1.
        i, t2 = 0, t
        while t2.value != 1:
            t2 = t2 * t2
            i += 1
        b = c ** (1 << (m - i - 1))
        m = i
        c = b * b
        t = t * c
        r = r * b
    return r


class Fp2Element:
    """An element a + b*t of F_{p^2} = F_p[t]/(t^2 - d)."""

    __slots__ = ("a", "b", "ext")

    def __init__(self, a: FpElement, b: FpElement, ext: "QuadraticExtension"):
        self.a = a
        self.b = b
        self.ext = ext

    def _coerce(self, other) -> Optional["Fp2Element"]:
        if isinstance(other, Fp2Element):
            if other.ext != self.ext:
                raise ValueError("elements of different quadratic extensions")
            return other
        if isinstance(other, (int, FpElement)):
            return self.ext(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Element(self.a + o.a, self.b + o.b, self.ext)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Element(self.a - o.a, self.b - o.b, self.ext)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.ext.nonresidue
        return Fp2Element(
            self.a * o.a + d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.ext,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Fp2Element(-self.a, -self.b, self.ext)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ext.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Fp2Element":
        return Fp2Element(self.a, -self.b, self.ext)

    def norm(self) -> FpElement:
        """Norm to F_p: (a + bt)(a - bt) = a^2 - d b^2."""
        return self.a * self.a - self.ext.nonresidue * self.b * self.b

    def inverse(self) -> "Fp2Element":
        n = self.norm()
        if n.value == 0:
            raise ZeroDivisionError("inverse of 0 in F_{p^2}")
        ninv = n.inverse()
        return Fp2Element(self.a * ninv, -self.b * ninv, self.ext)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Fp2Element):
            return self.ext == other.ext and self.a == other.a and self.b == other.b
        if isinstance(other, (int, FpElement)):
            return self.b.value == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b.value == 0:
            return hash(self.a)
        return hash((self.ext.base.p, self.ext.nonresidue.value, self.a.value, self.b.value))

    def __bool__(self):
        return self.a.value != 0 or self.b.value != 0

    @property
    def in_base_field(self) -> bool:
        return self.b.value == 0

    def to_base(self) -> FpElement:
        if not self.in_base_field:
            raise ValueError(f"{self!r} is not in the base field")
        return self.a

    def __repr__(self):
        if self.b.value == 0:
            return f"{self.a.value}"
        return f"{self.a.value}+{self.b.value}t"


class QuadraticExtension:
    """F_{p^2} as F_p[t]/(t^2 - d), d a verified quadratic nonresidue.

    By default d is the smallest positive nonresidue, which fixes canonical
    coordinates for reported square roots and singular points.
    """

    __slots__ = ("base", "nonresidue")

    def __init__(self, base: PrimeField, nonresidue=None):
        self.base = base
        d = smallest_nonresidue(base) if nonresidue is None else base(nonresidue)
        if legendre_symbol(d) != -1:
            raise ValueError(f"{d} is a square in F_{base.p}, not a valid nonresidue")
        self.nonresidue = d

    @property
    def characteristic(self) -> int:
        return self.base.p

    def __call__(self, value, b=None) -> Fp2Element:
        if b is not None:
            return Fp2Element(self.base(value), self.base(b), self)
        if isinstance(value, Fp2Element):
            if value.ext != self:
                raise ValueError("element of a different quadratic extension")
            return value
        if isinstance(value, (int, FpElement)):
            return Fp2Element(self.base(value), self.base.zero(), self)
        if isinstance(value, tuple) and len(value) == 2:
            return Fp2Element(self.base(value[0]), self.base(value[1]), self)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def zero(self) -> Fp2Element:
        return self(0)

    def one(self) -> Fp2Element:
        return self(1)

    def gen(self) -> Fp2Element:
        return Fp2Element(self.base.zero(), self.base.one(), self)

    def random_element(self, rng) -> Fp2Element:
        return self(rng.randrange(self.base.p), rng.randrange(self.base.p))

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticExtension)
            and other.base == self.base
            and other.nonresidue == self.nonresidue
        )

    def __hash__(self):
        return hash(("QuadraticExtension", self.base.p, self.nonresidue.value))

    def __repr__(self):
        return f"F_{self.base.p}^2"


def _sqrt_fp2(x: Fp2Element) -> Fp2Element:
    """Square root of a square in F_{p^2}.

    Every element of the base field F_p is a square in F_{p^2}; a general
    a + bt is a square exactly when its norm a^2 - d b^2 is a square in
    F_p.  Callers get None for nonsquares via sqrt_in_field; this helper
    assumes squareness and raises if handed anything else.
    """
    ext = x.ext
    base = ext.base
    d = ext.nonresidue
    if not x:
        return ext.zero()
    if x.b.value == 0:
        r = _sqrt_mod_p(x.a)
        if r is not None:
            return ext(r)
        # a is a nonsquare in F_p, so a = d * (a/d) with a/d a square:
        # sqrt(a) = sqrt(a/d) * t.
        s = _sqrt_mod_p(x.a / d)
        assert s is not None
        return Fp2Element(base.zero(), s, ext)
    # (u + vt)^2 = u^2 + d v^2 + 2uv t = a + bt with b != 0.  The norm of
    # x is (u^2 - d v^2)^2, so n := sqrt_Fp(norm) = +-(u^2 - d v^2) and
    # u^2 = (a +- n)/2; one choice of sign makes u^2 a square in F_p.
    n = _sqrt_mod_p(x.norm())
    if n is None:
        raise ValueError("element is not a square in F_{p^2}")
    two_inv = base(2).inverse()
    for sign in (1, -1):
        u2 = (x.a + sign * n) * two_inv
        u = _sqrt_mod_p(u2)
        if u is not None and u.value != 0:
            v = x.b * two_inv / u
            root = Fp2Element(u, v, ext)
            assert root * root == x
            return root
    raise ValueError("element is not a square in F_{p^2}")


def _is_square_fp2(x: Fp2Element) -> bool:
    # x is a square in F_{p^2} iff x^((p^2-1)/2) != -1, equivalently iff
    # norm(x) is a square in F_p (the norm map halves the index).
    if not x:
        return True
    return legendre_symbol(x.norm()) == 1


def sqrt_in_field(a) -> Optional[Union[FpElement, Fp2Element, Fraction]]:
    """Square root of ``a`` in its own field, or None for a nonsquare.

    Accepts F_p elements, F_{p^2} elements, and Fractions.  For an F_p
    element the root stays in F_p when one exists there; lifting a base
    element into F_{p^2} first (where a root always exists) is the
    caller's choice via ``ext(a)``.
    """
    if isinstance(a, FpElement):
        return _sqrt_mod_p(a)
    if isinstance(a, Fp2Element):
        if not _is_square_fp2(a):
            return None
        return _sqrt_fp2(a)
    if isinstance(a, Fraction):
        if a < 0:
            return None
        num, den = a.numerator, a.denominator
        rn = _isqrt_exact(num)
        rd = _isqrt_exact(den)
        if rn is None or rd is None:
            return None
        return Fraction(rn, rd)
    if isinstance(a, int) and not isinstance(a, bool):
        r = _isqrt_exact(a) if a >= 0 else None
        return r
    raise TypeError(f"sqrt_in_field cannot handle {type(a).__name__}")


def _isqrt_exact(n: int) -> Optional[int]:
    from math import isqrt

    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


class _IntegerRing:
    """Adapter giving arbitrary-precision integers the ring protocol."""

    characteristic = 0
    p = 0

    def __call__(self, value) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"expected an int, got {type(value).__name__}")
        return value

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def random_element(self, rng) -> int:
        return rng.randrange(-99, 100)

    def __eq__(self, other):
        return isinstance(other, _IntegerRing)

    def __hash__(self):
        return hash("_IntegerRing")

    def __repr__(self):
        return "ZZ"


ZZ = _IntegerRing()


class _RationalField:
    """Adapter giving the rationals the same protocol as PrimeField.

    Elements are plain ``fractions.Fraction`` values.
    """

    characteristic = 0
    p = 0  # sentinel: "not a prime field"

    def __call__(self, value) -> Fraction:
        if isinstance(value, float):
            raise TypeError("refusing to coerce a float into the rationals")
        return Fraction(value)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def random_element(self, rng) -> Fraction:
        return Fraction(rng.randrange(-99, 100), rng.randrange(1, 100))

    def __eq__(self, other):
        return isinstance(other, _RationalField)

    def __hash__(self):
        return hash("_RationalField")

    def __repr__(self):
        return "QQ"


QQ = _RationalField()
