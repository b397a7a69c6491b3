"""Independent oracles used by the test suite.

These deliberately avoid the library's own fast paths: the determinant
oracle is naive cofactor expansion, and the resultant oracle works by
evaluation and interpolation instead of Sylvester elimination.
"""

from howe_sextic.upoly import UnivariatePolynomial


def cofactor_determinant(matrix, ring):
    """Determinant by recursive cofactor expansion along the first row.

    Memoized on (row, remaining-columns); exponential in principle but
    fine through 6x6, which is all the Sylvester sizes used here.
    """
    n = len(matrix)
    if n == 0:
        return ring.one()
    if any(len(row) != n for row in matrix):
        raise ValueError("non-square matrix")
    zero = ring.zero()
    memo = {}

    def minor(r, cols):
        if not cols:
            return ring.one()
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = zero
        positive = True
        for idx, c in enumerate(cols):
            entry = matrix[r][c]
            if entry != zero:
                term = entry * minor(r + 1, cols[:idx] + cols[idx + 1 :])
                acc = acc + term if positive else acc - term
            positive = not positive
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def formal_sylvester_determinant_3_3(f1, f2, field):
    """6x6 Sylvester determinant of two FORMAL degree-3 x-polynomials.

    Uses formal coefficient vectors (zero-padded to degree 3) so that the
    value at a point where the actual degree drops still agrees with that
    specialization of the generic resultant.  f1's shifted rows come
    first, then f2's; powers descend left to right.
    """
    a = [f1.coefficient(k) for k in range(3, -1, -1)]
    b = [f2.coefficient(k) for k in range(3, -1, -1)]
    zero = field.zero()
    rows = []
    for shift in range(3):
        rows.append([zero] * shift + a + [zero] * (2 - shift))
    for shift in range(3):
        rows.append([zero] * shift + b + [zero] * (2 - shift))
    return cofactor_determinant(rows, field)


def interpolation_resultant_sextic(f1_of, f2_of, field):
    """Res_x(f1, f2) as a bivariate polynomial in (Y, Z), by interpolation.

    ``f1_of(y, z)`` and ``f2_of(y, z)`` must return UnivariatePolynomials
    in x over ``field`` of formal degree 3.  The resultant is known a
    priori to be a polynomial of degree <= 6 in each of Y and Z, so
    evaluating the formal 6x6 determinant on a 7x7 grid and applying
    tensor-product Lagrange interpolation recovers every coefficient
    exactly.  (The formal determinant, not the scalar resultant of the
    specialized polynomials: at nodes where the leading coefficient
    vanishes the two differ, and only the former matches the generic
    resultant's specialization.)

    Returns a dict {(i, j): coefficient} for monomials Y^i Z^j.
    """
    if field.p < 7:
        raise ValueError("interpolation grid needs 7 distinct nodes in F_p")
    nodes = [field(v) for v in range(7)]
    values = {}
    for y in nodes:
        for z in nodes:
            values[(y.value, z.value)] = formal_sylvester_determinant_3_3(
                f1_of(y, z), f2_of(y, z), field
            )

    # Lagrange basis coefficients for each node, as dense univariate polys.
    basis = []
    for i, yi in enumerate(nodes):
        num = UnivariatePolynomial([field.one()], field)
        den = field.one()
        for j, yj in enumerate(nodes):
            if i == j:
                continue
            num = num * UnivariatePolynomial([-yj, field.one()], field)
            den = den * (yi - yj)
        basis.append(num.scale(den.inverse()))

    coeffs = {}
    for iy, by in enumerate(basis):
        for iz, bz in enumerate(basis):
            v = values[(nodes[iy].value, nodes[iz].value)]
            if v == field.zero():
                continue
            for a in range(7):
                ca = by.coefficient(a)
                if ca == field.zero():
                    continue
                for b in range(7):
                    cb = bz.coefficient(b)
                    if cb == field.zero():
                        continue
                    key = (a, b)
                    coeffs[key] = coeffs.get(key, field.zero()) + v * ca * cb
    return {k: v for k, v in coeffs.items() if v != field.zero()}
