"""Exact truncated power series and the generating functions of the package.

``C(z) = (1 - sqrt(1 - 4z)) / (2z)`` counts plane trees by edges and
``A(z) = z C(z)`` by vertices. A 4-tuple of trees contributes its vertex
count minus two to the semi-perimeter, hence the tuple series
``T(z) = A(z)^4 / z^2 = (1 - sqrt(1 - 4z))^4 / (16 z^2)``. Then

* primitive PPPs: ``sum_k k T^k / sqrt(1 - 4z) = z^2 (1 - 4z)^(-3/2)``
  (``k`` choices of thickness for ``k`` tuples, and ``1/sqrt(1 - 4z)`` for the
  marked vertex of the first tuple on top of ``T``);
* strips (necklaces of tuples): ``B(z) = -sum_i phi(i)/i log(1 - T(z^i))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


class BadConstantTerm(ValueError):
    pass


class NonIntegerCoefficient(ArithmeticError):
    pass


class PowerSeries:
    """Coefficients ``c[0..order]`` as exact rationals; products and
    compositions are truncated to the smaller order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if order is not None:
            c = (c + [Fraction(0)] * (order + 1))[:order + 1]
        if not c:
            raise ValueError("a series needs an order")
        self.coeffs = tuple(c)

    # construction -------------------------------------------------------
    @classmethod
    def z(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, value, order: int) -> "PowerSeries":
        return cls([value], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i <= self.order else Fraction(0)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms or ["0"]) + f" + O(z^{self.order + 1})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n + 1] == other.coeffs[:n + 1]

    def integers(self) -> list[int]:
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise NonIntegerCoefficient(f"coefficient {i} is {c}")
            out.append(c.numerator)
        return out

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs, order)

    # ring operations ----------------------------------------------------
    def _lift(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other) -> "PowerSeries":
        o = self._lift(other)
        n = min(self.order, o.order)
        return PowerSeries([self[i] + o[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._lift(other) - self

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            f = Fraction(other)
            return PowerSeries([c * f for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            out.append(sum(a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]))
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PowerSeries":
        if e < 0:
            return self.reciprocal() ** (-e)
        result = PowerSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        return self * (1 / Fraction(other))

    def reciprocal(self) -> "PowerSeries":
        a = self.coeffs
        if a[0] == 0:
            raise BadConstantTerm("reciprocal needs a nonzero constant term")
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, self.order + 1):
            b.append(-inv0 * sum(a[i] * b[k - i] for i in range(1, k + 1)))
        return PowerSeries(b)

    def sqrt(self) -> "PowerSeries":
        """Square root with constant term 1, from ``s^2 = f`` term by term."""
        a = self.coeffs
        if a[0] != 1:
            raise BadConstantTerm("sqrt needs constant term 1")
        s = [Fraction(1)]
        for k in range(1, self.order + 1):
            cross = sum(s[i] * s[k - i] for i in range(1, k))
            s.append((a[k] - cross) / 2)
        return PowerSeries(s)

    def differentiate(self) -> "PowerSeries":
        return PowerSeries([i * c for i, c in enumerate(self.coeffs)][1:] or [0])

    def integrate(self) -> "PowerSeries":
        """Antiderivative with zero constant term (order grows by one)."""
        return PowerSeries([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def log(self) -> "PowerSeries":
        """``log f`` for ``f(0) = 1``, from ``f (log f)' = f'``."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        a = self.coeffs
        n = self.order
        d = [Fraction(0)] * (n + 1)  # d = (log f)'
        for k in range(n):
            d[k] = (k + 1) * a[k + 1] - sum(a[i] * d[k - i] for i in range(1, k + 1))
        return PowerSeries([0] + [d[k] / (k + 1) for k in range(n)])

    def substitute_monomial(self, i: int) -> "PowerSeries":
        """``f(z^i)``, kept at the same order."""
        if i < 1:
            raise ValueError("exponent must be positive")
        out = [Fraction(0)] * (self.order + 1)
        for k, c in enumerate(self.coeffs):
            if k * i > self.order:
                break
            out[k * i] = c
        return PowerSeries(out)

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by ``z^k`` (``k`` may be negative if the low terms vanish)."""
        if k >= 0:
            return PowerSeries([0] * k + list(self.coeffs), self.order)
        if any(self.coeffs[:-k]):
            raise BadConstantTerm(f"cannot divide by z^{-k}")
        return PowerSeries(self.coeffs[-k:])


def series_from(coeffs: Sequence, order: int) -> PowerSeries:
    return PowerSeries(coeffs, order)


# ---------------------------------------------------------------------------
# Named series
# ---------------------------------------------------------------------------

def _sqrt_1_minus_4z(order: int) -> PowerSeries:
    return PowerSeries([1, -4], order).sqrt()


def catalan_gf(order: int) -> PowerSeries:
    """``C(z)``: plane trees counted by edges."""
    # (1 - sqrt(1 - 4z)) / (2z), computed one order higher before dividing
    s = _sqrt_1_minus_4z(order + 1)
    return ((1 - s) / 2).shift(-1)


def tree_gf(order: int) -> PowerSeries:
    """``A(z) = (1 - sqrt(1 - 4z)) / 2``: plane trees counted by vertices."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return (1 - _sqrt_1_minus_4z(order)) / 2


def tuple_gf(order: int) -> PowerSeries:
    """``T(z) = A(z)^4 / z^2``: 4-tuples of trees by semi-perimeter weight."""
    return tree_gf(order + 2).__pow__(4).shift(-2).truncate(order)


def primitive_gf(order: int) -> PowerSeries:
    """``z^2 (1 - 4z)^(-3/2)``."""
    if order < 2:
        raise ValueError("order must be at least 2")
    s = _sqrt_1_minus_4z(order)
    return (s * PowerSeries([1, -4], order)).reciprocal().shift(2)


def primitive_gf_summed(order: int) -> PowerSeries:
    """``sum_k k z^(2k) C^(4(k-1)) (1 - sqrt(1-4z))^4 / (16 z^4 sqrt(1-4z))``,
    summed until ``z^(2k)`` passes the order."""
    c = catalan_gf(order)
    s = _sqrt_1_minus_4z(order)
    c4 = c ** 4  # (1 - sqrt(1 - 4z))^4 / (16 z^4)
    total = PowerSeries.constant(0, order)
    k = 1
    while 2 * k <= order:
        total = total + (c ** (4 * (k - 1)) * c4).shift(2 * k) * k
        k += 1
    return total / s


def marked_first_tuple_gf(order: int) -> PowerSeries:
    """Tuples with a marking (the two roots or a non-root black vertex)."""
    return tuple_gf(order) / _sqrt_1_minus_4z(order)


@lru_cache(maxsize=None)
def totient(i: int) -> int:
    if i < 1:
        raise ValueError("totient is defined for positive integers")
    result, m, p = i, i, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def strip_gf(order: int) -> PowerSeries:
    """``B(z) = sum_i phi(i)/i L(z^i)`` with ``L = -log(1 - T)``."""
    if order < 2:
        raise ValueError("order must be at least 2")
    log_term = -(1 - tuple_gf(order)).log()
    total = PowerSeries.constant(0, order)
    for i in range(1, order // 2 + 1):
        total = total + log_term.substitute_monomial(i) * Fraction(totient(i), i)
    total.integers()
    return total


def primitive_coefficients(order: int) -> list[int]:
    return [(2 * (n - 2) + 1) * comb(2 * (n - 2), n - 2) if n >= 2 else 0
            for n in range(order + 1)]


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    b_n: int
    ratio: float  # b_n * 2n / 4^n

    @property
    def root(self) -> float:
        """``b_n^(1/n)``."""
        return float(self.b_n) ** (1 / self.n)


def asymptotic_table(max_n: int) -> list[AsymptoticRow]:
    if max_n < 10:
        raise ValueError("max_n must be at least 10")
    b = strip_gf(max_n).integers()
    return [AsymptoticRow(n, b[n], float(Fraction(b[n] * 2 * n, 4 ** n)))
            for n in range(1, max_n + 1)]
