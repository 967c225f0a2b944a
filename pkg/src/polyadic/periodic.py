"""Periodic complex-valued functions on the integers.

A :class:`PeriodicFunction` of period ``p`` is stored by its values on
``0 .. p-1`` and may be evaluated at any integer.  Periods need not be
minimal; binary operations first rebase both operands to the lcm period.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from numbers import Number
from typing import Sequence, Tuple

from .errors import IndexOutOfRange

__all__ = [
    "PeriodicFunction",
    "SymmetricBiPeriodicFunction",
    "constant",
    "conjugate",
    "decompose",
    "indicator",
    "reflect_fn",
    "res_function",
    "sym_basis_expand",
    "sym_from_product",
    "sym_from_sum",
    "uniform_norm",
]

DEFAULT_ATOL = 1e-9


@dataclass(frozen=True, eq=False)
class PeriodicFunction:
    period: int
    values: Tuple[complex, ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"period must be positive, got {self.period}")
        values = tuple(complex(v) for v in self.values)
        if len(values) != self.period:
            raise ValueError(
                f"expected {self.period} values, got {len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values: Sequence[complex]) -> PeriodicFunction:
        return cls(len(values), tuple(values))

    def __call__(self, k: int) -> complex:
        return self.values[k % self.period]

    def rebase(self, period: int) -> PeriodicFunction:
        """The same function described with the multiple period ``period``."""
        if period < 1 or period % self.period:
            raise ValueError(
                f"{period} is not a multiple of the period {self.period}")
        if period == self.period:
            return self
        return PeriodicFunction(period, self.values * (period // self.period))

    def _aligned(self, other: PeriodicFunction):
        p = lcm(self.period, other.period)
        return p, self.rebase(p).values, other.rebase(p).values

    def __add__(self, other):
        if isinstance(other, Number):
            return PeriodicFunction(self.period,
                                    tuple(v + other for v in self.values))
        if not isinstance(other, PeriodicFunction):
            return NotImplemented
        p, a, b = self._aligned(other)
        return PeriodicFunction(p, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, Number):
            return PeriodicFunction(self.period,
                                    tuple(v * other for v in self.values))
        if not isinstance(other, PeriodicFunction):
            return NotImplemented
        p, a, b = self._aligned(other)
        return PeriodicFunction(p, tuple(x * y for x, y in zip(a, b)))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def conjugate(self) -> PeriodicFunction:
        return PeriodicFunction(self.period,
                                tuple(v.conjugate() for v in self.values))

    def uniform_norm(self) -> float:
        return max(abs(v) for v in self.values)

    def __eq__(self, other):
        if not isinstance(other, PeriodicFunction):
            return NotImplemented
        _, a, b = self._aligned(other)
        return a == b

    def __hash__(self):
        raise TypeError("PeriodicFunction is unhashable")

    def isclose(self, other: PeriodicFunction,
                atol: float = DEFAULT_ATOL) -> bool:
        _, a, b = self._aligned(other)
        return all(abs(x - y) <= atol for x, y in zip(a, b))


def constant(c: complex = 1, period: int = 1) -> PeriodicFunction:
    """The constant function; ``constant()`` is the unit ``e``."""
    return PeriodicFunction(period, (c,) * period)


def indicator(p: int, m: int) -> PeriodicFunction:
    """Indicator of the residue class ``m`` modulo ``p``."""
    if p < 1:
        raise ValueError(f"period must be positive, got {p}")
    if not 0 <= m < p:
        raise IndexOutOfRange(f"class {m} outside [0, {p})")
    return PeriodicFunction(p, tuple(1 if k == m else 0 for k in range(p)))


def res_function(p: int) -> PeriodicFunction:
    """``k -> k mod p`` as a ``p``-periodic function."""
    return PeriodicFunction(p, tuple(range(p)))


def decompose(u: PeriodicFunction) -> list[complex]:
    """Coefficients of ``u`` in the indicator basis of its period.

    The coefficient of ``indicator(p, m)`` is simply ``u(m)``.
    """
    return list(u.values)


def conjugate(u: PeriodicFunction) -> PeriodicFunction:
    return u.conjugate()


def uniform_norm(u: PeriodicFunction) -> float:
    return u.uniform_norm()


def reflect_fn(u: PeriodicFunction) -> PeriodicFunction:
    """``k -> u(-k)``."""
    return PeriodicFunction(u.period, tuple(u(-k) for k in range(u.period)))


@dataclass(frozen=True, eq=False)
class SymmetricBiPeriodicFunction:
    """A function ``w(x, y) = w(y, x)`` that is ``period``-periodic in each slot."""

    period: int
    values: Tuple[Tuple[complex, ...], ...]

    def __post_init__(self):
        p = self.period
        if p < 1:
            raise ValueError(f"period must be positive, got {p}")
        rows = tuple(tuple(complex(v) for v in row) for row in self.values)
        if len(rows) != p or any(len(row) != p for row in rows):
            raise ValueError(f"expected a {p}x{p} value matrix")
        for j in range(p):
            for k in range(j):
                if rows[j][k] != rows[k][j]:
                    raise ValueError(
                        f"matrix is not symmetric at ({j}, {k})")
        object.__setattr__(self, "values", rows)

    def __call__(self, x: int, y: int) -> complex:
        p = self.period
        return self.values[x % p][y % p]

    def rebase(self, period: int) -> SymmetricBiPeriodicFunction:
        if period < 1 or period % self.period:
            raise ValueError(
                f"{period} is not a multiple of the period {self.period}")
        if period == self.period:
            return self
        return SymmetricBiPeriodicFunction(
            period,
            tuple(tuple(self(j, k) for k in range(period))
                  for j in range(period)))

    def __mul__(self, other):
        if isinstance(other, Number):
            return SymmetricBiPeriodicFunction(
                self.period,
                tuple(tuple(v * other for v in row) for row in self.values))
        if not isinstance(other, SymmetricBiPeriodicFunction):
            return NotImplemented
        p = lcm(self.period, other.period)
        a, b = self.rebase(p), other.rebase(p)
        return SymmetricBiPeriodicFunction(
            p,
            tuple(tuple(x * y for x, y in zip(ra, rb))
                  for ra, rb in zip(a.values, b.values)))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymmetricBiPeriodicFunction):
            return NotImplemented
        p = lcm(self.period, other.period)
        return self.rebase(p).values == other.rebase(p).values

    def __hash__(self):
        raise TypeError("SymmetricBiPeriodicFunction is unhashable")


def sym_from_sum(u: PeriodicFunction) -> SymmetricBiPeriodicFunction:
    """``(x, y) -> u(x + y)``."""
    p = u.period
    return SymmetricBiPeriodicFunction(
        p, tuple(tuple(u(j + k) for k in range(p)) for j in range(p)))


def sym_from_product(u: PeriodicFunction) -> SymmetricBiPeriodicFunction:
    """``(x, y) -> u(x * y)``."""
    p = u.period
    return SymmetricBiPeriodicFunction(
        p, tuple(tuple(u(j * k) for k in range(p)) for j in range(p)))


def sym_basis_expand(w: SymmetricBiPeriodicFunction) -> list[list[complex]]:
    """Coefficients of ``w`` on the products ``e_j(x) e_k(y)``.

    The coefficient of ``indicator(p, j)(x) * indicator(p, k)(y)`` is
    ``w(j, k)``.
    """
    return [list(row) for row in w.values]
