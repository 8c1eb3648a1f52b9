"""Exact arithmetic in the cyclotomic field Q(zeta_N).

An element is stored as an integer numerator vector over the power basis
1, zeta, ..., zeta^(phi(N)-1) together with a positive common denominator,
reduced so that gcd(numerators, denominator) == 1.  That makes the
representation canonical: equal field elements have identical
``(num, den)`` pairs, so equality and hashing are plain tuple operations.

Elements are read as complex numbers through the embedding
zeta -> exp(2*pi*i/N).  Signs of real and imaginary parts are decided
exactly: a canonical-form zero test first, then a float filter with a
generous error bound, then interval evaluation (mpmath.iv) at doubling
precision until the enclosure excludes zero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from mpmath import iv

from .errors import FieldMismatch

Number = Union[int, Fraction]

_FLOAT_FILTER = 1e-11


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficient lists are lowest degree first
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for t, d in enumerate(den):
                num[k + t] -= c * d
    rem = num[: len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class CyclotomicField:
    """The field Q(zeta_N).  Use :func:`cyclotomic_field` to get the shared instance."""

    def __init__(self, order: int) -> None:
        if order < 1:
            raise FieldMismatch(f"field order must be positive, got {order}")
        self.order = order
        self.degree = euler_phi(order)
        phi = self.degree
        cyc = cyclotomic_polynomial(order)
        # zeta^k in the power basis, for 0 <= k < max(N, 2*phi - 1)
        powers = []
        vec = [0] * phi
        vec[0] = 1
        for _ in range(max(order, 2 * phi - 1)):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [v - top * c for v, c in zip(vec, cyc[:phi])]
        self._powers = powers
        self._cos = [math.cos(2 * math.pi * k / order) for k in range(phi)]
        self._sin = [math.sin(2 * math.pi * k / order) for k in range(phi)]
        self._units = [k for k in range(1, order) if math.gcd(k, order) == 1]
        self.zero = Scalar(self, (0,) * phi, 1)
        self.one = self.rational(1)

    def __repr__(self) -> str:
        return f"CyclotomicField({self.order})"

    def __reduce__(self):
        return (cyclotomic_field, (self.order,))

    @property
    def has_i(self) -> bool:
        return self.order % 4 == 0

    def element(self, coefficients: Iterable[Number]) -> Scalar:
        coeffs = [Fraction(c) for c in coefficients]
        if len(coeffs) > self.degree:
            raise FieldMismatch(
                f"{len(coeffs)} coefficients given, Q(zeta_{self.order}) has degree {self.degree}"
            )
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        den = math.lcm(*(c.denominator for c in coeffs))
        return Scalar._make(self, [int(c * den) for c in coeffs], den)

    def rational(self, q: Number) -> Scalar:
        q = Fraction(q)
        return Scalar._make(self, [q.numerator] + [0] * (self.degree - 1), q.denominator)

    def zeta(self, k: int = 1) -> Scalar:
        return Scalar(self, self._powers[k % self.order], 1)

    @property
    def i(self) -> Scalar:
        if not self.has_i:
            raise FieldMismatch(f"i is not in Q(zeta_{self.order})")
        return self.zeta(self.order // 4)

    def root_of_unity(self, n: int, k: int = 1) -> Scalar:
        """exp(2*pi*i*k/n), which requires n | N."""
        if self.order % n:
            raise FieldMismatch(f"a primitive {n}-th root of unity is not in Q(zeta_{self.order})")
        return self.zeta((self.order // n) * k)

    def complex_rational(self, x: Number, y: Number) -> Scalar:
        """x + i*y for rational x, y."""
        return self.rational(x) + self.rational(y) * self.i


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


class Scalar:
    """Immutable element of a cyclotomic field."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CyclotomicField, num: tuple[int, ...], den: int) -> None:
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, field: CyclotomicField, num: list[int], den: int) -> Scalar:
        if den < 0:
            num = [-v for v in num]
            den = -den
        g = math.gcd(den, *num)
        if g != 1:
            num = [v // g for v in num]
            den //= g
        return cls(field, tuple(num), den)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Scalar._make(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        d1, d2 = self.den, other.den
        return Scalar._make(self.field, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Scalar:
        return (-self) + other

    def __mul__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        phi = field.degree
        a, b = self.num, other.num
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        res = prod[:phi]
        powers = field._powers
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                for t, p in enumerate(powers[k]):
                    if p:
                        res[t] += c * p
        return Scalar._make(field, res, self.den * other.den)

    __rmul__ = __mul__

    def galois(self, k: int) -> Scalar:
        """Image under the automorphism zeta -> zeta^k (gcd(k, N) == 1)."""
        field = self.field
        n = field.order
        res = [0] * field.degree
        for j, c in enumerate(self.num):
            if c:
                for t, p in enumerate(field._powers[(j * k) % n]):
                    if p:
                        res[t] += c * p
        return Scalar._make(field, res, self.den)

    def conjugate(self) -> Scalar:
        return self.galois(self.field.order - 1)

    conj = conjugate

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # product of the other Galois conjugates; x * rest is the norm, a rational
        rest = self.field.one
        for k in self.field._units[1:]:
            rest = rest * self.galois(k)
        norm = self * rest
        assert not any(norm.num[1:])
        return rest * Fraction(norm.den, norm.num[0])

    def __truediv__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if other.is_rational():
            return self * Fraction(other.den, other.num[0])
        return self * other.inverse()

    def __rtruediv__(self, other) -> Scalar:
        return self._coerce(other) / self

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == self.field.rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.order, self.num, self.den))
        return self._hash

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    # -- parts ------------------------------------------------------------

    def real(self) -> Scalar:
        return (self + self.conjugate()) * Fraction(1, 2)

    def imag(self) -> Scalar:
        i = self.field.i
        return (self - self.conjugate()) * Fraction(1, 2) * (-i)

    def abs2(self) -> Scalar:
        return self * self.conjugate()

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def sort_key(self) -> tuple:
        return self.coefficients

    # -- numerics ---------------------------------------------------------

    def _float_parts(self) -> tuple[float, float, float]:
        f = self.field
        re = im = mag = 0.0
        for c, co, si in zip(self.num, f._cos, f._sin):
            if c:
                fc = float(c)
                re += fc * co
                im += fc * si
                mag += abs(fc)
        d = float(self.den)
        return re / d, im / d, mag / d

    def __complex__(self) -> complex:
        re, im, _ = self._float_parts()
        return complex(re, im)

    def approx(self) -> tuple[float, float]:
        re, im, _ = self._float_parts()
        return re, im

    def _interval_parts(self, prec: int):
        f = self.field
        old = iv.prec
        iv.prec = prec
        try:
            re = iv.mpf(0)
            im = iv.mpf(0)
            two_pi_over_n = 2 * iv.pi / f.order
            for k, c in enumerate(self.num):
                if c:
                    ang = two_pi_over_n * k
                    re += iv.mpf(c) * iv.cos(ang)
                    im += iv.mpf(c) * iv.sin(ang)
            den = iv.mpf(self.den)
            return re / den, im / den
        finally:
            iv.prec = old

    def real_sign(self) -> int:
        """Exact sign of the real part."""
        return _sign(self, 0)

    def imag_sign(self) -> int:
        """Exact sign of the imaginary part."""
        return _sign(self, 1)

    def real_interval(self, prec: int = 80):
        return self._interval_parts(prec)[0]

    # -- formatting -------------------------------------------------------

    def literal(self) -> str:
        return "poly(" + ", ".join(str(c) for c in self.coefficients) + ")"

    def __repr__(self) -> str:
        return f"Scalar<{self.field.order}>{self.literal()[4:]}"

    __str__ = literal


def _sign(x: Scalar, part: int) -> int:
    try:
        re, im, mag = x._float_parts()
    except OverflowError:
        re = im = mag = math.inf
    value = (re, im)[part]
    if math.isfinite(mag) and abs(value) > _FLOAT_FILTER * mag:
        return 1 if value > 0 else -1
    c = x.conjugate()
    zero = (x + c) if part == 0 else (x - c)
    if zero.is_zero():
        return 0
    prec = 128
    while True:
        enclosure = x._interval_parts(prec)[part]
        if enclosure.a > 0:
            return 1
        if enclosure.b < 0:
            return -1
        prec *= 2


def compare_real(x: Scalar, y: Scalar) -> int:
    """Sign of Re(x) - Re(y)."""
    return (x - y).real_sign()
