"""Sparse multivariate polynomials over arbitrary-precision integers.

The canonical ring has the seven fixed variable slots
``(a1, a2, a3, b2, b3, Y, Z)`` -- the five branch parameters plus the two
model variables -- and carries every symbolic identity in the project.
Rings over other variable tuples (generic coefficients s, t, u, v, w;
elementary-symmetric values) share the same representation: a map from
exponent vectors to nonzero integer coefficients, so equality is plain
term-map equality.

Printing uses graded lexicographic order (total degree first, then the
variable tuple order); the pure lexicographic order needed by the
Groebner-basis check is exposed separately.
"""

from __future__ import annotations

from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple, Union

ExponentVector = Tuple[int, ...]

MAX_EXPONENT = 1 << 16  # paper-side degrees never exceed 14


class MPolyRing:
    """A polynomial ring ZZ[variables] with a fixed variable tuple."""

    __slots__ = ("variables", "_index")

    def __init__(self, variables: Sequence[str]):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.variables = variables
        self._index = {name: i for i, name in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __call__(self, value) -> "MPoly":
        if isinstance(value, MPoly):
            if value.ring != self:
                raise ValueError("polynomial from a different ring")
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into {self!r}")
        if value == 0:
            return MPoly({}, self)
        return MPoly({(0,) * self.nvars: value}, self)

    def zero(self) -> "MPoly":
        return MPoly({}, self)

    def one(self) -> "MPoly":
        return self(1)

    def gen(self, name: str) -> "MPoly":
        if name not in self._index:
            raise KeyError(f"no variable {name!r} in {self!r}")
        exp = [0] * self.nvars
        exp[self._index[name]] = 1
        return MPoly({tuple(exp): 1}, self)

    def gens(self) -> Tuple["MPoly", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, exponents: Mapping[str, int], coefficient: int = 1) -> "MPoly":
        exp = [0] * self.nvars
        for name, e in exponents.items():
            if not 0 <= e < MAX_EXPONENT:
                raise ValueError(f"exponent out of range: {name}^{e}")
            exp[self._index[name]] = e
        return MPoly({tuple(exp): coefficient} if coefficient else {}, self)

    def index_of(self, name: str) -> int:
        return self._index[name]

    def __eq__(self, other):
        return isinstance(other, MPolyRing) and other.variables == self.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"ZZ[{', '.join(self.variables)}]"


def _grlex_key(exp: ExponentVector):
    return (sum(exp), exp)


def _lex_key(exp: ExponentVector):
    return exp


class MPoly:
    """An element of an MPolyRing, in canonical sparse form."""

    __slots__ = ("terms", "ring")

    def __init__(self, terms: Dict[ExponentVector, int], ring: MPolyRing):
        self.terms = {e: c for e, c in terms.items() if c != 0}
        self.ring = ring

    # -- ring structure ---------------------------------------------------

    def _coerce(self, other) -> Optional["MPoly"]:
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(out, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(out, self.ring)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return self.ring.zero()
        out: Dict[ExponentVector, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self.terms == self.ring(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure queries --------------------------------------------------

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.index_of(name)
        return max(e[i] for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def as_int(self) -> int:
        """The value of a constant polynomial (raises otherwise)."""
        if not self.terms:
            return 0
        if self.total_degree > 0:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.constant_term()

    def leading_term(self, order: str = "grlex") -> Tuple[ExponentVector, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = _grlex_key if order == "grlex" else _lex_key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def coefficients_in(self, names: Sequence[str]) -> Dict[ExponentVector, "MPoly"]:
        """Collect by the given variables: {(exponents of names): cofactor}.

        The cofactors are polynomials in the remaining variables (still
        living in the same ring, with zero exponents on ``names``).
        """
        idxs = [self.ring.index_of(n) for n in names]
        out: Dict[ExponentVector, Dict[ExponentVector, int]] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idxs)
            rest = list(e)
            for i in idxs:
                rest[i] = 0
            bucket = out.setdefault(key, {})
            bucket[tuple(rest)] = bucket.get(tuple(rest), 0) + c
        return {k: MPoly(v, self.ring) for k, v in out.items()}

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, mapping: Mapping[str, Union["MPoly", int]]) -> "MPoly":
        """Replace each named variable by a polynomial of the same ring."""
        subs = {}
        for name, val in mapping.items():
            subs[self.ring.index_of(name)] = self.ring(val)
        out = self.ring.zero()
        power_cache: Dict[Tuple[int, int], MPoly] = {}
        for e, c in self.terms.items():
            term = self.ring(c)
            for i, exp in enumerate(e):
                if exp == 0:
                    continue
                if i in subs:
                    key = (i, exp)
                    if key not in power_cache:
                        power_cache[key] = subs[i] ** exp
                    term = term * power_cache[key]
                else:
                    term = term * MPoly(
                        {tuple(exp if j == i else 0 for j in range(self.ring.nvars)): 1},
                        self.ring,
                    )
            out = out + term
        return out

    def rename_into(self, ring: MPolyRing, mapping: Mapping[str, str]) -> "MPoly":
        """Transport this polynomial into another ring by renaming variables."""
        positions = {}
        for i, name in enumerate(self.ring.variables):
            target = mapping.get(name, name)
            positions[i] = ring.index_of(target)
        out: Dict[ExponentVector, int] = {}
        for e, c in self.terms.items():
            newe = [0] * ring.nvars
            for i, exp in enumerate(e):
                if exp:
                    newe[positions[i]] += exp
            key = tuple(newe)
            out[key] = out.get(key, 0) + c
        return MPoly(out, ring)

    def evaluate(self, assignment: Mapping[str, object]):
        """Full evaluation; values may be ints or field elements."""
        missing = [v for v in self.ring.variables if v not in assignment]
        if missing:
            raise KeyError(f"assignment missing variables: {missing}")
        values = [assignment[v] for v in self.ring.variables]
        total = None
        power_cache: Dict[Tuple[int, int], object] = {}
        for e, c in self.terms.items():
            term = c
            for i, exp in enumerate(e):
                if exp == 0:
                    continue
                key = (i, exp)
                if key not in power_cache:
                    power_cache[key] = values[i] ** exp
                term = term * power_cache[key]
            total = term if total is None else total + term
        if total is None:
            return 0
        return total

    def evaluate_mod(self, assignment: Mapping[str, int], p: int) -> int:
        """Fast full evaluation with plain ints mod p."""
        total = 0
        values = [assignment[v] % p for v in self.ring.variables]
        power_cache: Dict[Tuple[int, int], int] = {}
        for e, c in self.terms.items():
            term = c % p
            for i, exp in enumerate(e):
                if exp == 0:
                    continue
                key = (i, exp)
                if key not in power_cache:
                    power_cache[key] = pow(values[i], exp, p)
                term = term * power_cache[key] % p
            total = (total + term) % p
        return total

    # -- exact division -----------------------------------------------------

    def exact_div(self, divisor: Union["MPoly", int]) -> "MPoly":
        """Exact quotient self / divisor; raises ArithmeticError if inexact."""
        d = self._coerce(divisor)
        if d is None:
            raise TypeError(f"cannot divide by {divisor!r}")
        if d.is_zero():
            raise ZeroDivisionError("exact_div by zero polynomial")
        if not self.terms:
            return self.ring.zero()
        # Single-term divisors of the constant sort happen constantly in
        # Bareiss pivoting; fast-path them.
        if len(d.terms) == 1:
            (de, dc), = d.terms.items()
            out = {}
            for e, c in self.terms.items():
                q, r = divmod(c, dc)
                if r:
                    raise ArithmeticError("inexact coefficient division")
                newe = tuple(x - y for x, y in zip(e, de))
                if any(x < 0 for x in newe):
                    raise ArithmeticError("inexact monomial division")
                out[newe] = q
            return MPoly(out, self.ring)
        remainder = self
        quotient: Dict[ExponentVector, int] = {}
        de, dc = d.leading_term("grlex")
        while remainder.terms:
            re, rc = remainder.leading_term("grlex")
            qe = tuple(x - y for x, y in zip(re, de))
            if any(x < 0 for x in qe):
                raise ArithmeticError("inexact division: leading monomial")
            qc, rem = divmod(rc, dc)
            if rem:
                raise ArithmeticError("inexact division: leading coefficient")
            quotient[qe] = quotient.get(qe, 0) + qc
            remainder = remainder - MPoly({qe: qc}, self.ring) * d
        return MPoly(quotient, self.ring)

    # -- printing -------------------------------------------------------------

    def _monomial_str(self, e: ExponentVector) -> str:
        parts = []
        for name, exp in zip(self.ring.variables, e):
            if exp == 1:
                parts.append(name)
            elif exp > 1:
                parts.append(f"{name}^{exp}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        chunks = []
        for i, (e, c) in enumerate(items):
            mono = self._monomial_str(e)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = f"{mag}"
            if i == 0:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return str(self)


# The canonical seven-slot ring: branch parameters and model variables.
ALPHA_BETA_RING = MPolyRing(("a1", "a2", "a3", "b2", "b3", "Y", "Z"))


def mp_arith(op: str, *operands):
    """Uniform dispatch over the polynomial operations.

    ``op`` is one of add | sub | mul | pow | substitute | evaluate; the
    operands are passed through to the corresponding MPoly method.
    """
    if op == "add":
        a, b = operands
        return a + b
    if op == "sub":
        a, b = operands
        return a - b
    if op == "mul":
        a, b = operands
        return a * b
    if op == "pow":
        a, n = operands
        return a**n
    if op == "substitute":
        a, mapping = operands
        return a.substitute(mapping)
    if op == "evaluate":
        a, assignment = operands
        return a.evaluate(assignment)
    raise ValueError(f"unknown operation {op!r}")


class SZVerdict:
    """Outcome of a Schwartz-Zippel comparison."""

    __slots__ = ("equal", "witness")

    def __init__(self, equal: bool, witness: Optional[Dict[str, int]]):
        self.equal = equal
        self.witness = witness

    def __bool__(self):
        return self.equal

    def __repr__(self):
        if self.equal:
            return "equal-with-high-confidence"
        return f"unequal (witness {self.witness})"


Builder = Union[MPoly, Callable[[Mapping[str, int], int], int]]


def _eval_builder(side: Builder, assignment: Dict[str, int], prime: int) -> int:
    if isinstance(side, MPoly):
        return side.evaluate_mod(assignment, prime)
    return side(assignment, prime) % prime


def schwartz_zippel_equal(
    lhs: Builder,
    rhs: Builder,
    variables: Sequence[str],
    trials: int = 64,
    prime: int = 2**31 - 1,
    seed: int = 0,
) -> SZVerdict:
    """Randomized polynomial-identity test at ``trials`` points mod ``prime``.

    Each side is either an MPoly (evaluated directly) or a callable
    ``f(assignment, prime) -> int`` so that differently-constructed
    quantities can be compared without symbolic expansion.  Equality at
    all sample points is reported as "equal-with-high-confidence"; any
    disagreement returns the witness assignment.
    """
    import random as _random

    rng = _random.Random(seed)
    for _ in range(trials):
        assignment = {v: rng.randrange(prime) for v in variables}
        if _eval_builder(lhs, assignment, prime) != _eval_builder(rhs, assignment, prime):
            return SZVerdict(False, assignment)
    return SZVerdict(True, None)
