"""Exact integer polynomials and the q-side of the theory.

The cell sum ``p(q) = (-1)^{k(n-k)} sum_w (-1)^{l(w)} q^{eta(w)}`` carries the
Betti numbers and the F_q point count of Gr(k, n).  Everything here is
computed twice where possible: once by summing over cells and once by the
closed forms in terms of Gaussian binomials in ``q^2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .checkered import FillVariant, weight
from .errors import FalsificationError, RangeError, ValidationError
from .schubert import GrassmannShape, all_cells, partitions_in_box


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, ``coefficients[i]`` multiplying ``x^i``."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coefficients)
        if any(not isinstance(a, int) for a in c):
            raise ValidationError(f"coefficients must be integers: {c}")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], signs: Iterable[int] | None = None):
        """Sum of ``sign * x^e``; handy for cell sums."""
        acc: dict[int, int] = {}
        signs = signs if signs is not None else itertools.repeat(1)
        for e, s in zip(exponents, signs):
            acc[e] = acc.get(e, 0) + s
        top = max(acc, default=-1)
        return cls(tuple(acc.get(i, 0) for i in range(top + 1)))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __bool__(self):
        return bool(self.coefficients)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return IntPolynomial(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-a for a in self.coefficients))

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _lift(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        result = IntPolynomial.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def divmod(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division; the divisor's leading coefficient must divide each step exactly."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        d = divisor.coefficients
        lead = d[-1]
        quot = [0] * max(len(rem) - len(d) + 1, 0)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(d) - 1]
            if c % lead:
                raise FalsificationError(f"non-integral quotient dividing {self} by {divisor}")
            f = c // lead
            quot[i] = f
            if f:
                for j, y in enumerate(d):
                    rem[i + j] -= f * y
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem))

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod(divisor)
        if r:
            raise FalsificationError(f"{divisor} does not divide {self} (remainder {r})")
        return q

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc

    evaluate = __call__

    def substitute(self, m: int) -> IntPolynomial:
        """``p(x^m)``."""
        if m < 1:
            raise RangeError("substitution exponent must be positive")
        out = [0] * (m * self.degree + 1) if self else []
        for i, a in enumerate(self.coefficients):
            out[m * i] = a
        return IntPolynomial(tuple(out))

    def reverse(self, d: int) -> IntPolynomial:
        """``x^d p(1/x)``; requires ``d >= deg p``."""
        if d < self.degree:
            raise RangeError(f"reverse degree {d} below polynomial degree {self.degree}")
        padded = self.coefficients + (0,) * (d + 1 - len(self.coefficients))
        return IntPolynomial(padded[::-1])

    def shift(self, r: int) -> IntPolynomial:
        """``x^r p(x)``."""
        return IntPolynomial((0,) * r + self.coefficients) if self else self

    def lowest_degree(self) -> int:
        for i, a in enumerate(self.coefficients):
            if a:
                return i
        return -1

    def format(self, var: str = "q") -> str:
        if not self:
            return "0"
        terms = []
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((a < 0, body))
        text = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __str__(self):
        return self.format("q")


def _lift(x: IntPolynomial | int) -> IntPolynomial:
    return x if isinstance(x, IntPolynomial) else IntPolynomial.constant(x)


q = IntPolynomial.monomial(1)
ONE = IntPolynomial.constant(1)


def q_integer(m: int) -> IntPolynomial:
    """``[m]_q = 1 + q + ... + q^{m-1}``."""
    return IntPolynomial((1,) * m)


def gaussian_binomial(n: int, k: int, *, verify: bool = True) -> IntPolynomial:
    """``[n choose k]_q`` by exact stepwise division of q-integers.

    With ``verify`` the result is also compared with ``sum q^{|lambda|}`` over
    partitions in the k x (n-k) box.
    """
    if not 0 <= k <= n:
        raise RangeError(f"need 0 <= k <= n, got n={n}, k={k}")
    result = ONE
    for i in range(1, k + 1):
        # result == [n-k+i-1 choose i-1]_q before this step
        result = (result * q_integer(n - k + i)).exact_div(q_integer(i))
    if verify:
        by_cells = IntPolynomial.from_exponents(sum(t) for t in partitions_in_box(k, n - k))
        if by_cells != result:
            raise FalsificationError(f"[{n} {k}]_q: quotient {result} vs cell sum {by_cells}")
    return result


@dataclass(frozen=True)
class ParityCase:
    """Which closed form applies: case 1 unless (k, n) = (odd, even)."""

    case: int
    j: int
    m: int


def parity_case(shape: GrassmannShape) -> ParityCase:
    k, n = shape.k, shape.n
    if k % 2 == 1 and n % 2 == 0:
        return ParityCase(2, (k - 1) // 2, n // 2)
    return ParityCase(1, k // 2, n // 2)


def p_sum(shape: GrassmannShape, variant: FillVariant = FillVariant.STANDARD) -> IntPolynomial:
    cells = all_cells(shape)
    poly = IntPolynomial.from_exponents(
        (weight(lam, shape, variant) for lam in cells),
        ((-1) ** lam.size for lam in cells),
    )
    return poly if shape.dimension % 2 == 0 else -poly


def p_closed(shape: GrassmannShape) -> IntPolynomial:
    pc = parity_case(shape)
    if pc.case == 1:
        return gaussian_binomial(pc.m, pc.j).substitute(2)
    return (IntPolynomial.monomial(pc.m) - 1) * gaussian_binomial(pc.m - 1, pc.j).substitute(2)


def star_shift(shape: GrassmannShape) -> int:
    """Exponent s with ``p*(q) = q^s p(q)`` for odd n."""
    if shape.n % 2 == 0:
        raise RangeError(f"no closed form for p*(q) of {shape}: n is even")
    j, m = shape.k // 2, shape.n // 2
    return j if shape.k % 2 == 0 else m - j


def p_star_closed(shape: GrassmannShape) -> IntPolynomial:
    return p_closed(shape).shift(star_shift(shape))


def poincare_polynomial(shape: GrassmannShape) -> IntPolynomial:
    """Real Betti numbers as a polynomial in t."""
    pc = parity_case(shape)
    if pc.case == 1:
        return gaussian_binomial(pc.m, pc.j).substitute(4)
    return (IntPolynomial.monomial(2 * pc.m - 1) + 1) * gaussian_binomial(pc.m - 1, pc.j).substitute(4)


def euler_characteristic(shape: GrassmannShape) -> int:
    chi = poincare_polynomial(shape)(-1)
    pc = parity_case(shape)
    expected = comb(pc.m, pc.j) if pc.case == 1 else 0
    if chi != expected:
        raise FalsificationError(f"Euler characteristic of {shape}: P(-1)={chi}, expected {expected}")
    return chi


@dataclass(frozen=True)
class PointCount:
    """``|Gr(k,n)(F_q)| = q^shift * p(q)``, stated for fields containing sqrt(-1)."""

    shape: GrassmannShape
    polynomial: IntPolynomial
    shift_exponent: int

    @property
    def full(self) -> IntPolynomial:
        return self.polynomial.shift(self.shift_exponent)

    def __call__(self, field_size: int) -> int:
        if field_size < 2:
            raise RangeError("field size must be at least 2")
        return self.full(field_size)


def fq_point_count(shape: GrassmannShape) -> PointCount:
    p = p_closed(shape)
    return PointCount(shape, p, shape.dimension - p.degree)


def reciprocity_check(shape: GrassmannShape, p: IntPolynomial | None = None) -> bool:
    """``q^D p(1/q) == (-1)^{k(n-k)} p(q)`` with D = deg p."""
    p = p_sum(shape) if p is None else p
    sign = -1 if shape.dimension % 2 else 1
    return p.reverse(p.degree) == p * sign


def polynomial_from_ranks(ranks: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(tuple(ranks))
