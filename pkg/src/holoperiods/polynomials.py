"""Exact integer polynomials and the root-location tools built on them.

Everything here is exact: integer coefficients, with ``Fraction`` used only
inside gcd and Sturm computations. Coefficient tuples are stored constant
term first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from holoperiods.errors import RootOnCircle, ZeroConstantTerm
from holoperiods.matrix import IntMatrix


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in _trim(self.coeffs)))

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls(tuple(coeffs))

    @classmethod
    def x_power(cls, k: int) -> IntPolynomial:
        return cls((0,) * k + (1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def valuation(self) -> int:
        """Multiplicity of x as a factor (0 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def shift_down(self, k: int) -> IntPolynomial:
        """Divide by x^k; the low k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError("not divisible by x^k")
        return IntPolynomial(self.coeffs[k:])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


ONE = IntPolynomial((1,))


# -- rational helpers (lists of Fraction, constant first) ---------------------

def _q_divmod(num: Sequence[Fraction], den: Sequence[Fraction]):
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    rem = list(num)
    lead = den[-1]
    while len(rem) >= len(den) and rem:
        shift = len(rem) - len(den)
        c = rem[-1] / lead
        quot[shift] = c
        for i, d in enumerate(den):
            rem[shift + i] -= c * d
        rem = _trim(rem)
    return quot, rem


def _q_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _q_divmod(a, b)
        a, b = b, r
    return a


def _primitive(coeffs: Sequence[Fraction]) -> IntPolynomial:
    """Scale a nonzero rational polynomial to a primitive integer one with positive leading term."""
    coeffs = _trim(coeffs)
    if not coeffs:
        return IntPolynomial(())
    lcm = 1
    for c in coeffs:
        lcm = lcm * Fraction(c).denominator // math.gcd(lcm, Fraction(c).denominator)
    ints = [int(Fraction(c) * lcm) for c in coeffs]
    g = math.gcd(*ints)
    sign = 1 if ints[-1] > 0 else -1
    return IntPolynomial(tuple(sign * c // g for c in ints))


def _as_q(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q, positive leading coefficient (``ONE`` when coprime)."""
    return _primitive(_q_gcd(_as_q(p), _as_q(q)))


def exact_quotient(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """p / d, requiring zero remainder and an integral quotient."""
    quot, rem = _q_divmod(_as_q(p), _as_q(d))
    if rem:
        raise ArithmeticError(f"{d} does not divide {p}")
    if any(c.denominator != 1 for c in quot):
        raise ArithmeticError(f"quotient of {p} by {d} is not integral")
    return IntPolynomial(tuple(int(c) for c in quot))


def divides(d: IntPolynomial, p: IntPolynomial) -> bool:
    _, rem = _q_divmod(_as_q(p), _as_q(d))
    return not rem


# -- characteristic polynomial and nilpotency ---------------------------------

@lru_cache(maxsize=256)
def char_poly(a: IntMatrix) -> IntPolynomial:
    """det(xI - A) by the Faddeev-LeVerrier recurrence.

    M_k = A M_{k-1} + c_{n-k+1} I and c_{n-k} = -tr(A M_k) / k; every
    division is exact over the integers.
    """
    n = a.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = IntMatrix.zeros(n)
    eye = IntMatrix.identity(n)
    for k in range(1, n + 1):
        m = (a @ m if k > 1 else m) + eye.scale(coeffs[n - k + 1])
        t = a.trace_of_product(m)
        assert t % k == 0
        coeffs[n - k] = -t // k
    return IntPolynomial(tuple(coeffs))


def is_nilpotent(a: IntMatrix) -> bool:
    """True iff A^n = 0, by repeated multiplication."""
    if a.n == 0:
        return True
    p = a
    for _ in range(a.n - 1):
        if p.is_zero():
            return True
        p = p @ a
    return p.is_zero()


# -- reciprocal structure -------------------------------------------------------

def reciprocal(p: IntPolynomial) -> IntPolynomial:
    """x^deg p(1/x): the coefficient reversal."""
    if p.is_zero() or p.coeffs[0] == 0:
        raise ZeroConstantTerm(f"{p} has zero constant term")
    return IntPolynomial(tuple(reversed(p.coeffs)))


def self_inversive_part(p: IntPolynomial) -> IntPolynomial:
    """gcd(p, reciprocal(p)): holds every unit-circle root of p, plus any pairs r, 1/r."""
    return poly_gcd(p, reciprocal(p))


def _mobius(n: int) -> int:
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


def euler_phi(n: int) -> int:
    result, k, m = n, 2, n
    while k * k <= m:
        if m % k == 0:
            while m % k == 0:
                m //= k
            result -= result // k
        k += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> IntPolynomial:
    """Phi_k as prod over d | k of (x^d - 1)^mu(k/d)."""
    if k < 1:
        raise ValueError("order must be positive")
    num, den = ONE, ONE
    for d in range(1, k + 1):
        if k % d:
            continue
        mu = _mobius(k // d)
        factor = IntPolynomial((-1,) + (0,) * (d - 1) + (1,))
        if mu == 1:
            num = num * factor
        elif mu == -1:
            den = den * factor
    return exact_quotient(num, den)


def orders_with_phi_at_most(bound: int) -> list[int]:
    # phi(k) >= sqrt(k/2), so k <= 2 * bound**2 covers every candidate
    return [k for k in range(1, 2 * bound * bound + 3) if euler_phi(k) <= bound]


def cyclotomic_part(p: IntPolynomial) -> tuple[IntPolynomial, list[int]]:
    """Largest product of cyclotomic factors dividing p, with the orders found.

    Orders repeat once per occurrence of Phi_k (so x^2 - 2x + 1 gives [1, 1]).
    Uses trial division by every Phi_k with phi(k) <= deg p.
    """
    if p.is_zero() or p.coeffs[0] == 0:
        raise ZeroConstantTerm(f"{p} has zero constant term")
    rest = p
    product = ONE
    orders = []
    for k in orders_with_phi_at_most(p.degree):
        phi_k = cyclotomic_polynomial(k)
        while rest.degree >= phi_k.degree and divides(phi_k, rest):
            rest = exact_quotient(rest, phi_k)
            product = product * phi_k
            orders.append(k)
    return product, orders


def graeffe_step(p: IntPolynomial) -> IntPolynomial:
    """Monic-preserving root squaring: the result's roots are the squares of p's roots."""
    n = p.degree
    neg = IntPolynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(p.coeffs)))
    prod = p * neg
    out = IntPolynomial(prod.coeffs[::2])
    return -out if n % 2 else out


# -- root counting ---------------------------------------------------------------

def schur_cohn_matrix(p: IntPolynomial) -> IntMatrix:
    """Integer symmetric Bezoutian of p and its reciprocal.

    Entries are the coefficients of (p#(x)p#(y) - p(x)p(y)) / (1 - xy).
    Its positive/negative eigenvalue counts are the numbers of roots of p
    inside/outside the unit disk; it is singular iff p and p# share a root.
    """
    a = p.coeffs
    n = p.degree
    b = a[::-1]
    num = [[b[j] * b[k] - a[j] * a[k] for k in range(n + 1)] for j in range(n + 1)]
    rows = []
    for j in range(n):
        rows.append(tuple(sum(num[j - t][k - t] for t in range(min(j, k) + 1)) for k in range(n)))
    return IntMatrix(tuple(rows))


def _sign_changes(coeffs: Sequence) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots_outside_unit_disk(p: IntPolynomial) -> int:
    """Exact number of roots with |z| > 1, counted with multiplicity.

    Computes the inertia of the Schur-Cohn matrix from its characteristic
    polynomial: that polynomial is real-rooted, so Descartes' rule of signs
    counts its negative roots exactly.
    """
    if p.is_zero() or p.coeffs[0] == 0:
        raise ZeroConstantTerm(f"{p} has zero constant term")
    if p.degree == 0:
        return 0
    chi = char_poly(schur_cohn_matrix(p))
    if chi.coeffs[0] == 0:
        raise RootOnCircle(f"{p} shares a factor with its reciprocal; remove the self-inversive part first")
    mirrored = [c if k % 2 == 0 else -c for k, c in enumerate(chi.coeffs)]
    return _sign_changes(mirrored)


def _q_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def sturm_count(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of p in the open interval (lo, hi); endpoints must not be roots."""
    if p.degree <= 0:
        return 0
    if p(lo) == 0 or p(hi) == 0:
        raise ValueError("Sturm endpoint is a root")
    seq = [_as_q(p), _as_q(p.derivative())]
    while True:
        _, r = _q_divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])

    def variations(x):
        return _sign_changes([_q_eval(s, x) for s in seq])

    return variations(lo) - variations(hi)


def trace_form(p: IntPolynomial) -> IntPolynomial:
    """For palindromic p of degree 2d, the degree-d q with p(x) = x^d q(x + 1/x)."""
    a = p.coeffs
    if a != a[::-1] or p.degree % 2:
        raise ValueError(f"{p} is not palindromic of even degree")
    d = p.degree // 2
    # Dickson-type polynomials: x^j + x^-j = D_j(x + 1/x)
    d_prev, d_cur = IntPolynomial((2,)), IntPolynomial((0, 1))
    q = [0] * (d + 1)
    q[0] = a[d]
    for j in range(1, d + 1):
        for i, c in enumerate(d_cur.coeffs):
            q[i] += a[d + j] * c
        d_prev, d_cur = d_cur, _sub(IntPolynomial((0, 1)) * d_cur, d_prev)
    return IntPolynomial(tuple(q))


def _sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    pc = p.coeffs + (0,) * (n - len(p.coeffs))
    qc = q.coeffs + (0,) * (n - len(q.coeffs))
    return IntPolynomial(tuple(x - y for x, y in zip(pc, qc)))


def palindromic_circle_count(p: IntPolynomial) -> int:
    """Unit-circle roots (with multiplicity) of a palindromic p with p(1), p(-1) nonzero.

    Circle roots e^{it} map to real points 2cos t of (-2, 2) in the trace form,
    each simple root there accounting for a conjugate pair.
    """
    if p.degree <= 0:
        return 0
    q = trace_form(p)
    lo, hi = Fraction(-2), Fraction(2)
    total = 0
    g = q
    # a root of multiplicity mu survives mu rounds of g -> gcd(g, g')
    while g.degree > 0:
        total += sturm_count(g, lo, hi)
        g = poly_gcd(g, g.derivative())
    return 2 * total
