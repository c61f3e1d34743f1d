"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is stored by its coordinates in the power basis
1, zeta, ..., zeta^(phi(N)-1) of Q(zeta_N), where zeta = exp(2*pi*i/N) and
phi is Euler's totient.  Coordinates are rationals kept as an integer
numerator vector over one positive denominator with all common factors
removed, so equal values always have identical coordinate data and
equality is a plain tuple comparison.  Arithmetic reduces modulo the N-th
cyclotomic polynomial, which is irreducible over Q; hence every nonzero
scalar has an inverse.

The field Q(zeta_N) with 4 | N contains i = zeta^(N/4), so cosines and
sines of multiples of 2*pi/m embed exactly whenever lcm(4, m) divides N.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction]

#: Scalar modes accepted throughout the package.
EXACT = "exact"
FLOAT = "float"

#: Relative threshold for all floating-point rank/singularity decisions.
FLOAT_PIVOT_THRESHOLD = 1e-9


def validate_mode(mode: str) -> str:
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"unknown scalar mode {mode!r}; expected 'exact' or 'float'")
    return mode


def prime_factorization(n: int) -> tuple[tuple[int, int], ...]:
    """Prime/exponent pairs of n in increasing prime order."""
    if n < 1:
        raise ValueError("factorization requires a positive integer")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in prime_factorization(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_div_exact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Quotient of num by monic-leading den over Z; division must be exact."""
    num = list(num)
    ddeg = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - ddeg)
    for i in range(len(num) - 1, ddeg - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[i - ddeg] = q
        for j in range(ddeg + 1):
            num[i - ddeg + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by exact division of x^n - 1 by the product of the polynomials
    at every proper divisor of n.  Degree is phi(n).
    """
    if n < 1:
        raise ValueError("cyclotomic polynomial index must be >= 1")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _zeta_power_vectors(conductor: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of zeta^j mod Phi_N for j = 0 .. N-1."""
    phi_poly = cyclotomic_polynomial(conductor)
    deg = len(phi_poly) - 1
    powers = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(conductor):
        powers.append(tuple(cur))
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            # x * x^(deg-1) = x^deg = -(c_0 + ... + c_{deg-1} x^{deg-1})
            for i in range(deg):
                nxt[i] -= top * phi_poly[i]
        cur = nxt
    return tuple(powers)


def _reduce_vector(coeffs: list[int], conductor: int, deg: int) -> list[int]:
    """Reduce an integer coefficient vector of any length mod Phi_N."""
    if len(coeffs) <= deg:
        return coeffs + [0] * (deg - len(coeffs))
    powers = _zeta_power_vectors(conductor)
    out = coeffs[:deg]
    for j in range(deg, len(coeffs)):
        c = coeffs[j]
        if c:
            row = powers[j % conductor]
            for i in range(deg):
                out[i] += c * row[i]
    return out


class Cyclotomic:
    """Immutable element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("conductor", "_num", "_den")

    def __init__(self, conductor: int, num: tuple[int, ...], den: int):
        # Internal: callers must pass normalized data.  Use the factory
        # functions (zeta, rational, from_polynomial) instead.
        self.conductor = conductor
        self._num = num
        self._den = den

    # -- construction -------------------------------------------------

    @staticmethod
    def _build(conductor: int, nums: list[int], den: int) -> "Cyclotomic":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            nums = [-v for v in nums]
        g = den
        for v in nums:
            g = math.gcd(g, v)
            if g == 1:
                break
        if g > 1:
            den //= g
            nums = [v // g for v in nums]
        if not any(nums):
            den = 1
        return Cyclotomic(conductor, tuple(nums), den)

    @classmethod
    def from_polynomial(
        cls, conductor: int, coeffs: Sequence[RationalLike]
    ) -> "Cyclotomic":
        """Value of the polynomial sum(coeffs[j] * zeta^j), any length."""
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        nums = [int(f * den) for f in fracs]
        deg = euler_phi(conductor)
        return cls._build(conductor, _reduce_vector(nums, conductor, deg), den)

    # -- basic queries ------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Coordinates in the power basis, as rationals (length phi(N))."""
        return tuple(Fraction(v, self._den) for v in self._num)

    @property
    def is_zero(self) -> bool:
        return not any(self._num)

    @property
    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring/field operations ----------------------------------------

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise ValueError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            vec = [0] * len(self._num)
            vec[0] = f.numerator
            return Cyclotomic._build(self.conductor, vec, f.denominator)
        return None

    def __add__(self, other) -> "Cyclotomic":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._den, o._den
        l = math.lcm(a, b)
        sa, sb = l // a, l // b
        nums = [sa * x + sb * y for x, y in zip(self._num, o._num)]
        return Cyclotomic._build(self.conductor, nums, l)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, tuple(-v for v in self._num), self._den)

    def __sub__(self, other) -> "Cyclotomic":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Cyclotomic":
        return -(self - other)

    def __mul__(self, other) -> "Cyclotomic":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._num, o._num
        prod = [0] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        deg = len(a)
        nums = _reduce_vector(prod, self.conductor, deg)
        return Cyclotomic._build(self.conductor, nums, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero:
            raise ZeroDivisionError("zero element of Q(zeta_N) has no inverse")
        if self.is_rational:
            f = 1 / self.as_fraction()
            vec = [0] * len(self._num)
            vec[0] = f.numerator
            return Cyclotomic._build(self.conductor, vec, f.denominator)
        return _inverse_cached(self.conductor, self._num, self._den)

    def __truediv__(self, other) -> "Cyclotomic":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "Cyclotomic":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugate (zeta -> zeta^(N-1))."""
        n = self.conductor
        powers = _zeta_power_vectors(n)
        deg = len(self._num)
        out = [0] * deg
        for j, c in enumerate(self._num):
            if c:
                row = powers[(n - j) % n]
                for i in range(deg):
                    out[i] += c * row[i]
        return Cyclotomic._build(n, out, self._den)

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclotomic):
            return (
                self.conductor == other.conductor
                and self._num == other._num
                and self._den == other._den
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.as_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self._num[0], self._den))
        return hash((self.conductor, self._num, self._den))

    # -- conversions / rendering --------------------------------------

    def to_complex(self) -> complex:
        """Numerical value, evaluating the power basis at exp(2*pi*i/N)."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        acc = 0j
        for c in reversed(self._num):
            acc = acc * z + c
        return acc / self._den

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for j, v in enumerate(self._num):
            if not v:
                continue
            c = Fraction(v, self._den)
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if j == 0:
                body = str(mag)
            else:
                power = "z" if j == 1 else f"z^{j}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {str(self)!r})"


def _frac_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _frac_divmod(
    num: list[Fraction], den: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    dd = len(den) - 1
    lead = den[-1]
    rem = list(num)
    quot = [Fraction(0)] * max(len(num) - dd, 1)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c / lead
        quot[i - dd] = f
        for j, cj in enumerate(den):
            rem[i - dd + j] -= f * cj
    return _frac_trim(quot), _frac_trim(rem)


@lru_cache(maxsize=65536)
def _inverse_cached(conductor: int, num: tuple[int, ...], den: int) -> Cyclotomic:
    # Extended Euclid against Phi_N over Q[x]: track b with r = a*Phi + b*u,
    # stopping at a constant remainder c (Phi_N irreducible, u nonzero mod
    # Phi_N, so gcd is 1 up to scale); then u^{-1} = b/c mod Phi_N.
    r0 = [Fraction(c) for c in cyclotomic_polynomial(conductor)]
    r1 = _frac_trim([Fraction(v, den) for v in num])
    b0: list[Fraction] = []
    b1: list[Fraction] = [Fraction(1)]
    while len(r1) > 1:
        q, rem = _frac_divmod(r0, r1)
        b_new = list(b0) + [Fraction(0)] * max(
            0, len(q) + len(b1) - 1 - len(b0)
        )
        for i, qi in enumerate(q):
            if qi:
                for j, bj in enumerate(b1):
                    if bj:
                        b_new[i + j] -= qi * bj
        r0, r1 = r1, rem
        b0, b1 = b1, _frac_trim(b_new)
    if not r1:
        raise ZeroDivisionError("zero element of Q(zeta_N) has no inverse")
    c = r1[0]
    return Cyclotomic.from_polynomial(conductor, [bj / c for bj in b1])


# -- factory helpers ---------------------------------------------------


@lru_cache(maxsize=None)
def zero(conductor: int) -> Cyclotomic:
    return Cyclotomic(conductor, (0,) * euler_phi(conductor), 1)


@lru_cache(maxsize=None)
def one(conductor: int) -> Cyclotomic:
    vec = [0] * euler_phi(conductor)
    vec[0] = 1
    return Cyclotomic(conductor, tuple(vec), 1)


def rational(conductor: int, value: RationalLike) -> Cyclotomic:
    f = Fraction(value)
    vec = [0] * euler_phi(conductor)
    vec[0] = f.numerator
    return Cyclotomic._build(conductor, vec, f.denominator)


def zeta(conductor: int, power: int = 1) -> Cyclotomic:
    """zeta_N^power as an exact scalar."""
    vec = list(_zeta_power_vectors(conductor)[power % conductor])
    return Cyclotomic._build(conductor, vec, 1)


def min_conductor(m: int) -> int:
    """Smallest conductor containing i and all cos/sin(2*pi*k/m): lcm(4, m)."""
    return math.lcm(4, m)


def _check_conductor(m: int, conductor: int) -> None:
    if conductor % min_conductor(m) != 0:
        raise ValueError(
            f"conductor {conductor} is not a multiple of lcm(4, {m}) = {min_conductor(m)}"
        )


@lru_cache(maxsize=None)
def _trig_tables(
    m: int, conductor: int
) -> tuple[tuple[Cyclotomic, ...], tuple[Cyclotomic, ...]]:
    half = Fraction(1, 2)
    i_unit = zeta(conductor, conductor // 4)
    cos_row, sin_row = [], []
    for k in range(m):
        e = (k * (conductor // m)) % conductor
        z_pos = zeta(conductor, e)
        z_neg = zeta(conductor, (-e) % conductor)
        cos_row.append((z_pos + z_neg) * half)
        # 1/(2i) = -i/2
        sin_row.append((z_pos - z_neg) * (-i_unit) * half)
    return tuple(cos_row), tuple(sin_row)


def embed_cos(k: int, m: int, conductor: int | None = None) -> Cyclotomic:
    """Exact value of cos(2*pi*k/m) in Q(zeta_conductor)."""
    if conductor is None:
        conductor = min_conductor(m)
    _check_conductor(m, conductor)
    return _trig_tables(m, conductor)[0][k % m]


def embed_sin(k: int, m: int, conductor: int | None = None) -> Cyclotomic:
    """Exact value of sin(2*pi*k/m) in Q(zeta_conductor)."""
    if conductor is None:
        conductor = min_conductor(m)
    _check_conductor(m, conductor)
    return _trig_tables(m, conductor)[1][k % m]
