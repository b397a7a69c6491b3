"""Sextic model construction and the small curve-family helper formulas.

A quintuple (a1, a2, a3, b2, b3) of pairwise-distinct field values, none
equal to 0 or 1, determines two genus-2 curves

    C1: y1^2 = phi(x) * Q1(x),   C2: y2^2 = phi(x) * Q2(x),

with phi = x(x-1)(x-a1), Q1 = (x-a2)(x-a3), Q2 = (x-b2)(x-b3).  The plane
model of the fiber product's normalization is the vanishing locus of

    f(Y, Z) = Res_x(f1, f2),   f1 = phi*Y^2 - Q1,   f2 = phi*Z^2 - Q2,

a polynomial in Y^2 and Z^2 of total degree 6 with no constant term.  Its
nine coefficients c_ij (of Y^i Z^j) are the SexticModel.  Everything here
is exact; the construction takes a constant number of field operations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

from .exact_arith import QQ, FpElement, PrimeField
from .upoly import UnivariatePolynomial, resultant

COEFF_NAMES = ("c60", "c42", "c40", "c24", "c22", "c20", "c06", "c04", "c02")
_NAME_TO_EXP = {
    "c60": (6, 0), "c42": (4, 2), "c40": (4, 0),
    "c24": (2, 4), "c22": (2, 2), "c20": (2, 0),
    "c06": (0, 6), "c04": (0, 4), "c02": (0, 2),
}


class NotHoweType(ValueError):
    """The quintuple violates distinctness or avoids-{0,1}."""


class UnsupportedCharacteristic(ValueError):
    """Only characteristic 0 and p >= 7 are supported."""


def _check_characteristic(field) -> None:
    ch = getattr(field, "characteristic", None)
    if ch is None or (ch != 0 and ch < 7):
        raise UnsupportedCharacteristic(
            f"characteristic must be 0 or >= 7, got field {field!r}"
        )


class Quintuple:
    """Validated branch parameters (a1, a2, a3, b2, b3) over a field.

    Construction rejects anything that is not "Howe type": the five
    values must be pairwise distinct and none may equal 0 or 1, so that
    the eight branch points {0, 1, infinity, a1, a2, a3, b2, b3} are
    honest and the two trailing pairs are disjoint.
    """

    __slots__ = ("field", "a1", "a2", "a3", "b2", "b3")

    NAMES = ("a1", "a2", "a3", "b2", "b3")

    def __init__(self, field, a1, a2, a3, b2, b3):
        _check_characteristic(field)
        self.field = field
        self.a1 = field(a1)
        self.a2 = field(a2)
        self.a3 = field(a3)
        self.b2 = field(b2)
        self.b3 = field(b3)
        values = self.values()
        zero, one = field.zero(), field.one()
        for name, v in zip(self.NAMES, values):
            if v == zero:
                raise NotHoweType(f"quintuple not of Howe type: {name} = 0")
            if v == one:
                raise NotHoweType(f"quintuple not of Howe type: {name} = 1")
        for i in range(5):
            for j in range(i + 1, 5):
                if values[i] == values[j]:
                    raise NotHoweType(
                        "quintuple not of Howe type: "
                        f"{self.NAMES[i]} = {self.NAMES[j]}"
                    )

    def values(self) -> Tuple:
        return (self.a1, self.a2, self.a3, self.b2, self.b3)

    def as_ints(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.values())

    # Elementary symmetric values of the three factor polynomials.  phi
    # has roots {0, 1, a1}, so its third symmetric value is always 0.
    def sigma(self) -> Tuple:
        one = self.field.one()
        return (one + self.a1, self.a1, self.field.zero())

    def tau(self) -> Tuple:
        return (self.a2 + self.a3, self.a2 * self.a3)

    def rho(self) -> Tuple:
        return (self.b2 + self.b3, self.b2 * self.b3)

    def __eq__(self, other):
        if not isinstance(other, Quintuple):
            return NotImplemented
        return self.field == other.field and self.values() == other.values()

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values())
        return f"Quintuple({self.field!r}; {vals})"


def phi_poly(q: Quintuple) -> UnivariatePolynomial:
    """phi = x(x-1)(x-a1) = x^3 - s1 x^2 + s2 x - s3 (s3 = 0)."""
    F = q.field
    return UnivariatePolynomial.from_roots([F.zero(), F.one(), q.a1], F)


def q1_poly(q: Quintuple) -> UnivariatePolynomial:
    return UnivariatePolynomial.from_roots([q.a2, q.a3], q.field)


def q2_poly(q: Quintuple) -> UnivariatePolynomial:
    return UnivariatePolynomial.from_roots([q.b2, q.b3], q.field)


def f1_f2_at(q: Quintuple, y, z) -> Tuple[UnivariatePolynomial, UnivariatePolynomial]:
    """The eliminants f1 = phi*Y^2 - Q1 and f2 = phi*Z^2 - Q2 at Y=y, Z=z.

    y and z may live in an extension; the returned x-polynomials then have
    coefficients there too.
    """
    phi, Q1, Q2 = phi_poly(q), q1_poly(q), q2_poly(q)
    y2, z2 = y * y, z * z
    ring = _CommonRing(y2) if not isinstance(y2, (FpElement, Fraction)) else q.field
    f1 = UnivariatePolynomial([c * y2 for c in phi.coefficients], ring) - _lift(Q1, ring)
    f2 = UnivariatePolynomial([c * z2 for c in phi.coefficients], ring) - _lift(Q2, ring)
    return f1, f2


class _CommonRing:
    """Ring adapter for polynomial coefficients living in an extension."""

    __slots__ = ("_sample",)

    def __init__(self, sample):
        self._sample = sample

    def zero(self):
        return self._sample - self._sample

    def one(self):
        return (self._sample - self._sample) + 1

    def __eq__(self, other):
        return isinstance(other, _CommonRing)

    def __repr__(self):
        return "ring-of(%r)" % (self._sample,)


def _lift(poly: UnivariatePolynomial, ring) -> UnivariatePolynomial:
    if poly.ring == ring:
        return poly
    return UnivariatePolynomial(list(poly.coefficients), ring)


# ---------------------------------------------------------------------------
# Bivariate scratch polynomials in u = Y^2, v = Z^2 over the base field.
# Only what the Sylvester/Bareiss path needs: exact ring ops and exact_div.
# ---------------------------------------------------------------------------


class _UVRing:
    __slots__ = ("field",)

    def __init__(self, field):
        self.field = field

    def zero(self) -> "_UVPoly":
        return _UVPoly({}, self)

    def one(self) -> "_UVPoly":
        return _UVPoly({(0, 0): self.field.one()}, self)

    def const(self, c) -> "_UVPoly":
        c = self.field(c)
        return _UVPoly({(0, 0): c} if c != self.field.zero() else {}, self)

    def term(self, i: int, j: int, c) -> "_UVPoly":
        c = self.field(c)
        return _UVPoly({(i, j): c} if c != self.field.zero() else {}, self)

    def __eq__(self, other):
        return isinstance(other, _UVRing) and other.field == self.field

    def __repr__(self):
        return f"{self.field!r}[u, v]"


class _UVPoly:
    __slots__ = ("terms", "ring")

    def __init__(self, terms: Dict[Tuple[int, int], object], ring: _UVRing):
        zero = ring.field.zero()
        self.terms = {e: c for e, c in terms.items() if c != zero}
        self.ring = ring

    def __add__(self, other):
        out = dict(self.terms)
        zero = self.ring.field.zero()
        for e, c in other.terms.items():
            s = out.get(e, zero) + c
            if s == zero:
                out.pop(e, None)
            else:
                out[e] = s
        return _UVPoly(out, self.ring)

    def __sub__(self, other):
        out = dict(self.terms)
        zero = self.ring.field.zero()
        for e, c in other.terms.items():
            s = out.get(e, zero) - c
            if s == zero:
                out.pop(e, None)
            else:
                out[e] = s
        return _UVPoly(out, self.ring)

    def __neg__(self):
        return _UVPoly({e: -c for e, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if not isinstance(other, _UVPoly):
            return _UVPoly({e: c * other for e, c in self.terms.items()}, self.ring)
        out: Dict[Tuple[int, int], object] = {}
        zero = self.ring.field.zero()
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                s = out.get(e, zero) + c1 * c2
                if s == zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return _UVPoly(out, self.ring)

    def __eq__(self, other):
        if isinstance(other, _UVPoly):
            return self.terms == other.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def exact_div(self, divisor: "_UVPoly") -> "_UVPoly":
        if not divisor.terms:
            raise ZeroDivisionError("exact_div by zero")
        if not self.terms:
            return self.ring.zero()
        de = max(divisor.terms, key=lambda e: (e[0] + e[1], e))
        dc = divisor.terms[de]
        remainder = self
        quotient: Dict[Tuple[int, int], object] = {}
        while remainder.terms:
            re = max(remainder.terms, key=lambda e: (e[0] + e[1], e))
            rc = remainder.terms[re]
            qe = (re[0] - de[0], re[1] - de[1])
            if qe[0] < 0 or qe[1] < 0:
                raise ArithmeticError("inexact division in u, v")
            qc = rc / dc
            quotient[qe] = qc
            remainder = remainder - _UVPoly({qe: qc}, self.ring) * divisor
        return _UVPoly(quotient, self.ring)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*u^{i}v^{j}" for (i, j), c in sorted(self.terms.items())
        )


@dataclass(frozen=True)
class SexticModel:
    """The nine coefficients of f(Y, Z), plus where they came from."""

    field: object
    c60: object
    c42: object
    c40: object
    c24: object
    c22: object
    c20: object
    c06: object
    c04: object
    c02: object
    source: Optional[Quintuple] = None
    normalized: bool = False

    def coefficients(self) -> Tuple:
        return tuple(getattr(self, n) for n in COEFF_NAMES)

    def coefficient_map(self) -> Dict[str, object]:
        return {n: getattr(self, n) for n in COEFF_NAMES}

    def normalize(self) -> "SexticModel":
        """Scale so that c06 = 1 (idempotent; c06 is nonzero by contract)."""
        if self.normalized:
            return self
        inv = _invert(self.c06)
        vals = {n: getattr(self, n) * inv for n in COEFF_NAMES}
        return SexticModel(
            field=self.field, source=self.source, normalized=True, **vals
        )

    def is_scalar_multiple_of(self, other: "SexticModel") -> bool:
        if self.field != other.field:
            return False
        return self.normalize().coefficients() == other.normalize().coefficients()

    def evaluate(self, y, z):
        """f(y, z); the arguments may live in an extension field."""
        u, v = y * y, z * z
        return self.evaluate_uv(u, v)

    def evaluate_uv(self, u, v):
        """f-hat(u, v), the cubic with f(Y, Z) = f-hat(Y^2, Z^2)."""
        return (
            self.c60 * u * u * u
            + self.c42 * u * u * v
            + self.c24 * u * v * v
            + self.c06 * v * v * v
            + self.c40 * u * u
            + self.c22 * u * v
            + self.c04 * v * v
            + self.c20 * u
            + self.c02 * v
        )

    def homogeneous_value(self, yy, zz, xx):
        """F(Y, Z, X), the degree-6 homogenization of f."""
        y2, z2, x2 = yy * yy, zz * zz, xx * xx
        return (
            self.c60 * y2 * y2 * y2
            + self.c42 * y2 * y2 * z2
            + self.c24 * y2 * z2 * z2
            + self.c06 * z2 * z2 * z2
            + self.c40 * y2 * y2 * x2
            + self.c22 * y2 * z2 * x2
            + self.c04 * z2 * z2 * x2
            + self.c20 * y2 * x2 * x2
            + self.c02 * z2 * x2 * x2
        )

    def gradient(self, yy, zz, xx) -> Tuple:
        """(F_Y, F_Z, F_X) at a projective point."""
        y2, z2, x2 = yy * yy, zz * zz, xx * xx
        fy = (yy + yy) * (
            3 * (self.c60 * y2 * y2)
            + 2 * (self.c42 * y2 * z2)
            + 2 * (self.c40 * y2 * x2)
            + self.c24 * z2 * z2
            + self.c22 * z2 * x2
            + self.c20 * x2 * x2
        )
        fz = (zz + zz) * (
            self.c42 * y2 * y2
            + 2 * (self.c24 * y2 * z2)
            + self.c22 * y2 * x2
            + 3 * (self.c06 * z2 * z2)
            + 2 * (self.c04 * z2 * x2)
            + self.c02 * x2 * x2
        )
        fx = (xx + xx) * (
            self.c40 * y2 * y2
            + self.c22 * y2 * z2
            + 2 * (self.c20 * y2 * x2)
            + self.c04 * z2 * z2
            + 2 * (self.c02 * z2 * x2)
        )
        return fy, fz, fx

    def to_text(self) -> str:
        """Y-degree-descending, Z-degree-descending polynomial display."""
        zero = _zero_like(self.c06)
        parts = []
        for name in COEFF_NAMES:
            c = getattr(self, name)
            if c == zero:
                continue
            i, j = _NAME_TO_EXP[name]
            mono = ""
            if i:
                mono += f"Y^{i}" if i > 1 else "Y"
            if j:
                mono += f"Z^{j}" if j > 1 else "Z"
            c_str = str(c)
            if c == zero + _one_like(self.c06) and mono:
                parts.append(mono)
            else:
                parts.append(f"{c_str}{mono}" if mono else c_str)
        return " + ".join(parts) if parts else "0"

    def to_json_dict(self) -> dict:
        p = getattr(self.field, "p", 0)
        coeffs = {}
        for n in COEFF_NAMES:
            c = getattr(self, n)
            coeffs[n] = int(c) if isinstance(c, FpElement) else str(c)
        out = {
            "p": p,
            "quintuple": None,
            "coefficients": coeffs,
            "normalized": self.normalized,
        }
        if self.source is not None:
            if p:
                out["quintuple"] = list(self.source.as_ints())
            else:
                out["quintuple"] = [str(v) for v in self.source.values()]
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "SexticModel":
        p = data["p"]
        field = PrimeField(p) if p else QQ
        coeffs = {
            n: field(v) if p else Fraction(v)
            for n, v in data["coefficients"].items()
        }
        source = None
        if data.get("quintuple"):
            vals = data["quintuple"]
            if not p:
                vals = [Fraction(v) for v in vals]
            source = Quintuple(field, *vals)
        return cls(
            field=field, source=source, normalized=data["normalized"], **coeffs
        )

    def __str__(self):
        return self.to_text()


def _invert(c):
    if hasattr(c, "inverse"):
        return c.inverse()
    return 1 / c if isinstance(c, Fraction) else Fraction(1, c)


def _zero_like(c):
    return c - c


def _one_like(c):
    return _zero_like(c) + 1


class ModelCrossCheckError(ArithmeticError):
    """An internal consistency identity failed during construction."""


def build_sextic(q: Quintuple) -> SexticModel:
    """Res_x(f1, f2) as a SexticModel, with construction-time cross-checks.

    The resultant is the determinant of the 6x6 Sylvester matrix whose
    first three rows carry f1 (descending x powers, shifted) and last
    three carry f2, eliminated fraction-free.  Four scalar resultants
    pin the corner coefficients:

        c60 = -Res_x(phi, Q2),  c06 = Res_x(phi, Q1),
        c20 = -Res_x(Q1, Q2),   c02 = Res_x(Q1, Q2),

    and the constant term of f must vanish.  Any failure raises
    ModelCrossCheckError (never expected on validated input).
    """
    F = q.field
    uv = _UVRing(F)
    s1, s2, s3 = q.sigma()
    t1, t2 = q.tau()
    r1, r2 = q.rho()

    # f1 = u*x^3 - (1 + s1*u)*x^2 + (t1 + s2*u)*x - (t2 + s3*u), u = Y^2.
    f1 = UnivariatePolynomial(
        [
            uv.term(1, 0, -s3) - uv.const(t2),
            uv.term(1, 0, s2) + uv.const(t1),
            uv.term(1, 0, -s1) - uv.const(F.one()),
            uv.term(1, 0, F.one()),
        ],
        uv,
    )
    # f2 is the same shape in v = Z^2 with (r1, r2) in place of (t1, t2).
    f2 = UnivariatePolynomial(
        [
            uv.term(0, 1, -s3) - uv.const(r2),
            uv.term(0, 1, s2) + uv.const(r1),
            uv.term(0, 1, -s1) - uv.const(F.one()),
            uv.term(0, 1, F.one()),
        ],
        uv,
    )
    res = resultant(f1, f2)

    zero = F.zero()
    coeff: Dict[str, object] = {n: zero for n in COEFF_NAMES}
    for (i, j), c in res.terms.items():
        if i + j == 0:
            raise ModelCrossCheckError("constant term of the sextic is nonzero")
        if i + j > 3:
            raise ModelCrossCheckError(f"total degree above 6: term u^{i} v^{j}")
        coeff[f"c{2 * i}{2 * j}"] = c

    model = SexticModel(field=F, source=q, **coeff)

    phi, Q1, Q2 = phi_poly(q), q1_poly(q), q2_poly(q)
    res_phi_q2 = resultant(phi, Q2)
    res_phi_q1 = resultant(phi, Q1)
    res_q1_q2 = resultant(Q1, Q2)
    checks = (
        model.c60 == -res_phi_q2,
        model.c06 == res_phi_q1,
        model.c20 == -res_q1_q2,
        model.c02 == res_q1_q2,
        model.c20 == -model.c02,
        model.c60 != zero,
        model.c06 != zero,
        model.c20 != zero,
    )
    if not all(checks):
        raise ModelCrossCheckError(
            f"corner-coefficient cross-checks failed: {checks}"
        )
    return model


def normalize(model: SexticModel) -> SexticModel:
    return model.normalize()


# ---------------------------------------------------------------------------
# Isomorphism-free labels and the helper formulas.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HoweTriple:
    """Canonical label (a1, {{a2, a3}, {b2, b3}}) for an unordered choice.

    Inner pairs are sorted by integer representative and the two pairs are
    sorted lexicographically, so each label is counted exactly once.
    """

    a1: int
    partition: Tuple[Tuple[int, int], Tuple[int, int]]

    @classmethod
    def from_quintuple(cls, q: Quintuple) -> "HoweTriple":
        ints = q.as_ints()
        pair_a = tuple(sorted(ints[1:3]))
        pair_b = tuple(sorted(ints[3:5]))
        return cls(ints[0], tuple(sorted((pair_a, pair_b))))

    def quintuple_orderings(self, field) -> Iterator[Quintuple]:
        """All 8 quintuples carrying this label (2 pair orders x 2 x 2)."""
        (p, q_) = self.partition
        for first, second in ((p, q_), (q_, p)):
            for x2, x3 in (first, reversed(first)):
                for y2, y3 in (second, reversed(second)):
                    yield Quintuple(field, self.a1, x2, x3, y2, y3)


def random_quintuple(field: PrimeField, rng: random.Random) -> Quintuple:
    """A uniformly random valid quintuple over a prime field (p >= 7)."""
    return Quintuple(field, *rng.sample(range(2, field.p), 5))


def iter_howe_triples(p: int) -> Iterator[HoweTriple]:
    """Every canonical HoweTriple over F_p, deterministically ordered."""
    if p < 7:
        raise ValueError("need p >= 7 for five distinct values outside {0, 1}")
    pool = range(2, p)  # representatives of F_p minus {0, 1}
    for four in itertools.combinations(pool, 4):
        partitions = (
            ((four[0], four[1]), (four[2], four[3])),
            ((four[0], four[2]), (four[1], four[3])),
            ((four[0], four[3]), (four[1], four[2])),
        )
        for a1 in pool:
            if a1 in four:
                continue
            for part in partitions:
                yield HoweTriple(a1, part)


def count_howe_triples(q: int) -> int:
    """(q-2)(q-3)(q-4)(q-5)(q-6)/8: Howe triples with parameters in F_q."""
    if not isinstance(q, int) or q < 7:
        raise ValueError(f"need a prime power q >= 7, got {q!r}")
    num = (q - 2) * (q - 3) * (q - 4) * (q - 5) * (q - 6)
    assert num % 8 == 0
    return num // 8


@dataclass(frozen=True)
class GenusProfile:
    genus: int
    is_hyperelliptic: bool
    g3: int
    criterion_requires_genus_ge_4: bool


def genus_generalized_howe(g1: int, g2: int, r: int) -> GenusProfile:
    """Genus bookkeeping for the normalized fiber product of two covers.

    genus = 2(g1 + g2) + 1 - r; the curve is hyperelliptic exactly when
    r = g1 + g2 + 1 (criterion stated for genus >= 4, which the returned
    flag records); the third quotient curve has genus g3 = g1 + g2 + 1 - r.
    """
    if not (0 < g1 <= g2):
        raise ValueError(f"need 0 < g1 <= g2, got g1={g1}, g2={g2}")
    if not (0 <= r <= g1 + g2 + 1):
        raise ValueError(f"need 0 <= r <= g1 + g2 + 1, got r={r}")
    genus = 2 * (g1 + g2) + 1 - r
    return GenusProfile(
        genus=genus,
        is_hyperelliptic=(r == g1 + g2 + 1),
        g3=g1 + g2 + 1 - r,
        criterion_requires_genus_ge_4=(genus >= 4),
    )


def legendre_lambda(q: Quintuple):
    """lambda = (a3 - b2)(b3 - a2) / ((a3 - a2)(b3 - b2)); never 0 or 1."""
    num = (q.a3 - q.b2) * (q.b3 - q.a2)
    den = (q.a3 - q.a2) * (q.b3 - q.b2)
    lam = num * _invert(den)
    zero, one = q.field.zero(), q.field.one()
    assert lam != zero and lam != one, "distinctness forces lambda outside {0, 1}"
    return lam
