"""Tests for sparse integer multivariate polynomials."""

import random

import pytest

from howe_sextic.exact_arith import PrimeField
from howe_sextic.mpoly import (
    ALPHA_BETA_RING,
    MPoly,
    MPolyRing,
    mp_arith,
    schwartz_zippel_equal,
)

R = ALPHA_BETA_RING
a1, a2, a3, b2, b3, Y, Z = R.gens()


def random_poly(rng, ring, max_terms=50, max_exp=3, coeff_bound=20):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        e = tuple(rng.randrange(max_exp + 1) for _ in range(ring.nvars))
        terms[e] = rng.randrange(-coeff_bound, coeff_bound + 1)
    return MPoly(terms, ring)


def test_canonical_sparse_form():
    p = MPoly({(0,) * 7: 0, (1, 0, 0, 0, 0, 0, 0): 2}, R)
    assert list(p.terms.values()) == [2]
    assert R(0).is_zero()
    assert (a1 - a1).is_zero()
    assert R(0).terms == {}


def test_product_of_conjugates():
    assert (a2 - b2) * (a2 + b2) == a2**2 - b2**2


def test_ring_axioms_random():
    rng = random.Random(421)
    for _ in range(30):
        a = random_poly(rng, R)
        b = random_poly(rng, R)
        c = random_poly(rng, R)
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a - a == R(0)
        assert a * R(1) == a
        assert a * R(0) == R(0)


def test_pow():
    assert (a1 + 1) ** 0 == R(1)
    assert (a1 + 1) ** 1 == a1 + 1
    assert (a1 + 1) ** 2 == a1**2 + 2 * a1 + 1
    f = a1 + b2 * Z
    assert f**5 == f * f * f * f * f
    with pytest.raises(ValueError):
        f ** (-1)


def test_degree_queries():
    f = a1 * Y**2 * Z**4 + b3**2
    assert f.total_degree == 7
    assert f.degree_in("Y") == 2
    assert f.degree_in("Z") == 4
    assert f.degree_in("a2") == 0
    assert R(0).total_degree == -1
    assert R(5).as_int() == 5
    with pytest.raises(ValueError):
        f.as_int()


def test_substitute_composes_with_evaluate():
    rng = random.Random(7)
    for _ in range(20):
        f = random_poly(rng, R, max_terms=15)
        g = random_poly(rng, R, max_terms=3, max_exp=2)
        composed = f.substitute({"Y": g})
        point = {v: rng.randrange(-5, 6) for v in R.variables}
        g_at = g.evaluate(point)
        point_composed = dict(point)
        point_composed["Y"] = g_at
        assert composed.evaluate(point) == f.evaluate(point_composed)


def test_evaluate_matches_evaluate_mod():
    rng = random.Random(8)
    p = 101
    F = PrimeField(p)
    for _ in range(20):
        f = random_poly(rng, R, max_terms=20)
        point = {v: rng.randrange(p) for v in R.variables}
        field_point = {v: F(x) for v, x in point.items()}
        assert f.evaluate(point) % p == f.evaluate_mod(point, p)
        assert f.evaluate(field_point) == F(f.evaluate_mod(point, p))


def test_product_form_evaluation():
    prod = (a2 - b2) * (a2 - b3) * (a3 - b2) * (a3 - b3)
    point = dict(zip(("a1", "a2", "a3", "b2", "b3"), (3, 9, 27, 19, 26)))
    point.update({"Y": 0, "Z": 0})
    assert prod.evaluate(point) == (9 - 19) * (9 - 26) * (27 - 19) * (27 - 26)


def test_exact_div():
    f = (a2**2 - b2**2).exact_div(a2 - b2)
    assert f == a2 + b2
    assert (6 * a1 * Y).exact_div(R(3)) == 2 * a1 * Y
    rng = random.Random(9)
    for _ in range(50):
        q = random_poly(rng, R, max_terms=8, max_exp=2)
        d = random_poly(rng, R, max_terms=4, max_exp=2)
        if d.is_zero():
            continue
        assert (q * d).exact_div(d) == q
    with pytest.raises(ArithmeticError):
        (a2**2 + 1).exact_div(a2 - b2)
    with pytest.raises(ArithmeticError):
        (3 * a1).exact_div(R(2))
    with pytest.raises(ZeroDivisionError):
        a1.exact_div(R(0))


def test_leading_terms():
    f = a1 * b2 + a3**2 + a2  # same total degree 2 for the first two
    e, c = f.leading_term("lex")
    assert e == (1, 0, 0, 1, 0, 0, 0) and c == 1  # a1*b2 beats a3^2 in lex
    g = a2 + a3**2
    e, c = g.leading_term("lex")
    assert e == (0, 1, 0, 0, 0, 0, 0)  # lex: any a2 term beats a3^2
    e, c = g.leading_term("grlex")
    assert e == (0, 0, 2, 0, 0, 0, 0)  # grlex: degree 2 beats degree 1


def test_coefficients_in():
    f = 3 * Y**2 * Z**4 * a1 + Y**2 * b2 + 7
    coll = f.coefficients_in(("Y", "Z"))
    assert coll[(2, 4)] == 3 * a1
    assert coll[(2, 0)] == b2
    assert coll[(0, 0)] == R(7)
    rebuilt = R(0)
    for (i, j), cof in coll.items():
        rebuilt = rebuilt + cof * Y**i * Z**j
    assert rebuilt == f


def test_rename_into():
    S = MPolyRing(("s1", "s2", "Y", "Z"))
    f = S.gen("s1") * S.gen("Y") + S.gen("s2")
    g = f.rename_into(R, {"s1": "a1", "s2": "a2"})
    assert g == a1 * Y + a2


def test_printing():
    assert str(R(0)) == "0"
    assert str(a1 - b2) == "a1 - b2"
    assert str(2 * a1**2 * Y - Z + 1) == "2*a1^2*Y - Z + 1"
    assert str(-a1) == "-a1"


def test_mp_arith_dispatch():
    assert mp_arith("add", a1, b2) == a1 + b2
    assert mp_arith("sub", a1, b2) == a1 - b2
    assert mp_arith("mul", a1, b2) == a1 * b2
    assert mp_arith("pow", a1, 3) == a1**3
    assert mp_arith("substitute", a1 + Y, {"Y": b3}) == a1 + b3
    point = {v: 1 for v in R.variables}
    assert mp_arith("evaluate", a1 + Y, point) == 2
    with pytest.raises(ValueError):
        mp_arith("divide", a1, b2)


def test_cross_ring_operations_rejected():
    S = MPolyRing(("x", "y"))
    with pytest.raises(ValueError):
        a1 + S.gen("x")
    with pytest.raises(ValueError):
        R(S.gen("x"))


def test_schwartz_zippel_equal_and_unequal():
    d1_like = (a2 * a3 - b2 * b3) * (a1 * (a2 + a3 - b2 - b3) - a2 * a3 + b2 * b3)
    verdict = schwartz_zippel_equal(d1_like, d1_like, R.variables)
    assert verdict.equal and verdict.witness is None
    verdict = schwartz_zippel_equal(d1_like, d1_like + 1, R.variables)
    assert not verdict.equal
    assert verdict.witness is not None
    # The witness really does distinguish the two sides.
    w = verdict.witness
    assert d1_like.evaluate_mod(w, 2**31 - 1) != (d1_like + 1).evaluate_mod(
        w, 2**31 - 1
    )


def test_schwartz_zippel_with_builders():
    lhs = (a2 - b2) * (a2 + b2)

    def rhs(assignment, prime):
        return (assignment["a2"] ** 2 - assignment["b2"] ** 2) % prime

    assert schwartz_zippel_equal(lhs, rhs, R.variables).equal
    assert not schwartz_zippel_equal(lhs + 1, rhs, R.variables).equal


def test_schwartz_zippel_seed_stability():
    f = a1 * Y - Z
    v1 = schwartz_zippel_equal(f, f + 1, R.variables, seed=5)
    v2 = schwartz_zippel_equal(f, f + 1, R.variables, seed=5)
    assert v1.witness == v2.witness
