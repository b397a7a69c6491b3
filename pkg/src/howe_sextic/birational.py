"""Mutually inverse rational maps between the fiber product and the sextic.

A Howe quintuple (a1, a2, a3, b2, b3) determines two double covers of the
line, y1^2 = phi(x)*Q1(x) and y2^2 = phi(x)*Q2(x); their fiber product
maps onto the plane sextic f(Y, Z) = 0 of :func:`howe_model.build_sextic`
by

    (x, y1, y2)  |->  (Y, Z) = (y1/phi(x), y2/phi(x)),

defined wherever phi(x) != 0.  Conversely a sextic point (Y, Z) away from
the exceptional locus pins x down as the unique common root of the cubics
f1 = phi*Y^2 - Q1 and f2 = phi*Z^2 - Q2.  That root is exposed by a short
remainder sequence,

    r1 = Y^2*f2 - Z^2*f1
    r2 = (Y^2 - Z^2)*f1 + Y^2*x*r1
    r3 = (Y^2 - Z^2)*r2 - W*r1,
    W  = (sigma1 - rho1)*Y^4 - (sigma1 - tau1)*Y^2*Z^2 + Y^2 - Z^2,

whose last row is linear in x:  r3 = h1*x + h2.  Wherever h1(Y, Z) != 0 the
common root is x = -h2/h1.  The closed forms of h1 and h2 are frozen in
:func:`h1_h2_forms`; the test suite replays the sequence above symbolically
so the frozen coefficients cannot drift from the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .exact_arith import (
    Fp2Element,
    FpElement,
    PrimeField,
    QuadraticExtension,
    sqrt_in_field,
)
from .howe_model import (
    Quintuple,
    SexticModel,
    build_sextic,
    f1_f2_at,
    phi_poly,
    q1_poly,
    q2_poly,
)
from .upoly import UnivariatePolynomial, roots_in_field


class MapUndefinedError(ArithmeticError):
    """The forward map has no image: phi(x) = 0 at the given point."""


class OutsideDomainError(ArithmeticError):
    """The inverse map is not defined: h1(Y, Z) = 0 (or (Y, Z) = (0, 0))."""


def _is_base_rational(value) -> bool:
    if isinstance(value, Fp2Element):
        return value.in_base_field
    return True


def _invert(c):
    if hasattr(c, "inverse"):
        return c.inverse()
    return 1 / Fraction(c)


@dataclass(frozen=True)
class FiberProductPoint:
    """An affine point (x, y1, y2) with y1^2 = phi*Q1 and y2^2 = phi*Q2 at x."""

    x: object
    y1: object
    y2: object

    def is_base_rational(self) -> bool:
        return all(_is_base_rational(c) for c in (self.x, self.y1, self.y2))

    def satisfies(self, q: Quintuple) -> bool:
        """Both defining equations hold in the ambient field."""
        phix = phi_poly(q)(self.x)
        return (
            self.y1 * self.y1 == phix * q1_poly(q)(self.x)
            and self.y2 * self.y2 == phix * q2_poly(q)(self.x)
        )


@dataclass(frozen=True)
class CurvePoint:
    """An affine point (Y, Z) of the plane sextic f(Y, Z) = 0."""

    Y: object
    Z: object

    def is_base_rational(self) -> bool:
        return _is_base_rational(self.Y) and _is_base_rational(self.Z)

    def on_curve(self, model: SexticModel) -> bool:
        return not model.evaluate(self.Y, self.Z)


# Model construction runs a 6x6 determinant, so maps over large samples
# memoise it per quintuple.  The cache is cleared rather than evicted;
# map workloads touch very few distinct quintuples.
_MODEL_CACHE: Dict[tuple, SexticModel] = {}
_MODEL_CACHE_LIMIT = 1024

_EXTENSIONS: Dict[int, QuadraticExtension] = {}


def model_for(q: Quintuple) -> SexticModel:
    """The sextic model of q, memoised by field characteristic and values."""
    key = (getattr(q.field, "p", 0), q.values())
    model = _MODEL_CACHE.get(key)
    if model is None:
        if len(_MODEL_CACHE) >= _MODEL_CACHE_LIMIT:
            _MODEL_CACHE.clear()
        model = _MODEL_CACHE.setdefault(key, build_sextic(q))
    return model


def _extension_of(field: PrimeField) -> QuadraticExtension:
    ext = _EXTENSIONS.get(field.p)
    if ext is None:
        ext = _EXTENSIONS.setdefault(field.p, QuadraticExtension(field))
    return ext


def h1_h2_forms(sigma, tau, rho, u, v) -> Tuple[object, object]:
    """The frozen coefficients (h1, h2) of the linear remainder r3 = h1*x + h2.

    ``sigma``, ``tau``, ``rho`` are the elementary symmetric values of phi,
    Q1, Q2 and u, v stand for Y^2, Z^2.  With s/t/r abbreviating those:

        h1 = (-s1*r1 + s2 + r1^2 - r2) Y^6
           + (s1*t1 + s1*r1 - 2*s2 - 2*t1*r1 + t2 + r2) Y^4 Z^2
           + (t1 - r1) Y^4
           + (-s1*t1 + s2 + t1^2 - t2) Y^2 Z^4
           + (-t1 + r1) Y^2 Z^2

        h2 = W*(r2*Y^2 - t2*Z^2) - (Y^2 - Z^2)^2 * (t2 + s3*Y^2)
        W  = (s1 - r1) Y^4 - (s1 - t1) Y^2 Z^2 + Y^2 - Z^2

    Only ring operations touch the inputs, so field elements and polynomial
    ring elements both work; the symbolic no-drift test relies on this.
    """
    s1, s2, s3 = sigma
    t1, t2 = tau
    r1, r2 = rho
    w = u - v
    c_u3 = r1 * r1 - s1 * r1 + s2 - r2
    c_u2v = s1 * t1 + s1 * r1 - 2 * s2 - 2 * t1 * r1 + t2 + r2
    c_u2 = t1 - r1
    c_uv2 = t1 * t1 - s1 * t1 + s2 - t2
    h1 = ((c_u3 * u + c_u2v * v + c_u2) * u + (c_uv2 * v - c_u2) * v) * u
    big_w = (s1 - r1) * u * u - (s1 - t1) * u * v + w
    h2 = big_w * (r2 * u - t2 * v) - w * w * (t2 + s3 * u)
    return h1, h2


def h1_h2(q: Quintuple, point: CurvePoint) -> Tuple[object, object]:
    """Evaluate (h1, h2) at a point; curve membership is not required."""
    u = point.Y * point.Y
    v = point.Z * point.Z
    return h1_h2_forms(q.sigma(), q.tau(), q.rho(), u, v)


def phi(q: Quintuple, point: FiberProductPoint) -> CurvePoint:
    """Forward map (x, y1, y2) -> (y1/phi(x), y2/phi(x)).

    Raises :class:`MapUndefinedError` when phi(x) = 0; otherwise the image
    is asserted to satisfy f = 0.
    """
    phix = phi_poly(q)(point.x)
    if not phix:
        raise MapUndefinedError("map undefined at this point: phi(x) = 0")
    assert point.satisfies(q), "point violates the fiber-product equations"
    # y1 = y2 = 0 with phi(x) != 0 would make x a common root of Q1 and Q2,
    # which are coprime for a Howe quintuple.
    assert point.y1 or point.y2, "common root of the coprime Q1, Q2"
    inv = _invert(phix)
    image = CurvePoint(point.y1 * inv, point.y2 * inv)
    assert image.on_curve(model_for(q)), "image does not satisfy f = 0"
    return image


def psi(q: Quintuple, point: CurvePoint) -> FiberProductPoint:
    """Inverse map (Y, Z) -> (x, phi(x)*Y, phi(x)*Z) with x = -h2/h1.

    Raises :class:`OutsideDomainError` at (0, 0) and wherever h1 vanishes;
    everywhere else the recovered x is asserted to be a common root of f1
    and f2 with phi(x) != 0.
    """
    if not point.Y and not point.Z:
        raise OutsideDomainError("outside the domain of psi: (Y, Z) = (0, 0)")
    h1v, h2v = h1_h2(q, point)
    if not h1v:
        raise OutsideDomainError("outside the domain of psi: h1(Y, Z) = 0")
    x = -h2v * _invert(h1v)
    phix = phi_poly(q)(x)
    assert phix, "phi vanishes at the recovered x"
    f1, f2 = f1_f2_at(q, point.Y, point.Z)
    assert not f1(x) and not f2(x), "recovered x is not a common root"
    return FiberProductPoint(x, phix * point.Y, phix * point.Z)


def _any_sqrt(field: PrimeField, value):
    """A square root of a base-field value, in F_p if possible, else F_{p^2}."""
    root = sqrt_in_field(value)
    if root is not None:
        return root
    root = sqrt_in_field(_extension_of(field)(value))
    assert root is not None, "every F_p element is a square in F_{p^2}"
    return root


def random_fiber_point(q: Quintuple, rng) -> FiberProductPoint:
    """A fiber-product point over a random x in F_p with phi(x) != 0.

    y1 and y2 are square roots of phi*Q1 and phi*Q2 drawn in F_p when they
    exist there and in F_{p^2} otherwise, with independently random signs.
    """
    field = q.field
    if not isinstance(field, PrimeField):
        raise ValueError("random fiber points require a prime field")
    phi_q, Q1, Q2 = phi_poly(q), q1_poly(q), q2_poly(q)
    while True:
        x = field.random_element(rng)
        phix = phi_q(x)
        if phix:
            break
    y1 = _any_sqrt(field, phix * Q1(x))
    y2 = _any_sqrt(field, phix * Q2(x))
    if rng.randrange(2):
        y1 = -y1
    if rng.randrange(2):
        y2 = -y2
    return FiberProductPoint(x, y1, y2)


def _strip_root(poly: UnivariatePolynomial, root) -> UnivariatePolynomial:
    """Divide out (x - root) to its full multiplicity."""
    field = poly.ring
    linear = UnivariatePolynomial([-root, field.one()], field)
    while True:
        quo, rem = poly.divmod_over_field(linear)
        if not rem.is_zero():
            return poly
        poly = quo


def _quadratic_roots_in_extension(
    quad: UnivariatePolynomial, ext: QuadraticExtension
) -> List[Fp2Element]:
    """Both roots of an irreducible F_p quadratic, taken in F_{p^2}."""
    a, b, c = quad.coefficient(2), quad.coefficient(1), quad.coefficient(0)
    disc = b * b - 4 * a * c
    root = sqrt_in_field(ext(disc))
    assert root is not None, "every F_p element is a square in F_{p^2}"
    inv = ext(a + a).inverse()
    return [(ext(-b) + root) * inv, (ext(-b) - root) * inv]


def _roots_in_extension(poly: UnivariatePolynomial, ext: QuadraticExtension) -> list:
    """Distinct roots of an F_p cubic (or lower) inside F_p union F_{p^2}."""
    roots = list(roots_in_field(poly))
    rem = poly
    for r0 in roots:
        rem = _strip_root(rem, r0)
    # After stripping every F_p root a linear factor cannot remain; what is
    # left is a unit, an irreducible quadratic, or an irreducible cubic
    # (whose roots lie in F_{p^3}, beyond the quadratic extension).
    assert rem.degree in (0, 2, 3), "unexpected factor after root stripping"
    if rem.degree == 2:
        roots.extend(_quadratic_roots_in_extension(rem, ext))
    return roots


def iter_curve_points(q: Quintuple) -> Iterator[CurvePoint]:
    """All affine sextic points with Y in F_p and Z in F_p or F_{p^2}.

    For each y0 in F_p the slice f(y0, Z) is a cubic in Z^2 with constant
    leading coefficient c06 != 0; each of its roots v in F_p or F_{p^2}
    yields Z = +-sqrt(v) whenever that square root stays inside F_{p^2}.
    Use :meth:`CurvePoint.is_base_rational` to tell F_p-rational points
    apart from the rest of the sweep.
    """
    field = q.field
    if not isinstance(field, PrimeField):
        raise ValueError("the sweep sampler requires a prime field")
    model = model_for(q)
    ext = _extension_of(field)
    c = model.coefficient_map()
    for y0 in field.elements():
        u = y0 * y0
        slice_cubic = UnivariatePolynomial(
            [
                ((c["c60"] * u + c["c40"]) * u + c["c20"]) * u,
                (c["c42"] * u + c["c22"]) * u + c["c02"],
                c["c24"] * u + c["c04"],
                c["c06"],
            ],
            field,
        )
        for v in _roots_in_extension(slice_cubic, ext):
            if not v:
                yield CurvePoint(y0, field.zero())
                continue
            z = sqrt_in_field(v)
            if z is None and isinstance(v, FpElement):
                z = sqrt_in_field(ext(v))
            if z is None:
                continue  # Z itself would land outside F_{p^2}
            yield CurvePoint(y0, z)
            yield CurvePoint(y0, -z)
