"""Polyadic integers truncated to a finite factorial depth.

A polyadic integer at depth ``K`` is a residue class modulo ``(K+1)!``,
stored canonically as its factorial digits ``nu_1 .. nu_K`` where digit
``nu_r`` has weight ``r!`` and satisfies ``0 <= nu_r <= r``.  Residues
modulo any divisor of ``(K+1)!`` are derived from the digits on demand.

>>> embed(23, 3).digits
FactorialDigits(digits=(1, 2, 3))
>>> residue_mod(embed(-2, 4), 5)
3
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, gcd, lcm
from typing import Iterable, Tuple

from .errors import DigitOutOfRange, Incompatible, InsufficientDepth

__all__ = [
    "DEFAULT_DEPTH",
    "FactorialDigits",
    "PolyadicInt",
    "ResidueClaim",
    "add",
    "crt_lift",
    "digits_of_value",
    "div_rem",
    "divisors",
    "embed",
    "eq_at_depth",
    "from_digits",
    "min_depth_for",
    "mul",
    "neg",
    "padic_digits",
    "residue_mod",
    "sub",
    "to_digits",
    "tower_modulus",
]

DEFAULT_DEPTH = 8


@lru_cache(maxsize=None)
def tower_modulus(depth: int) -> int:
    """Modulus ``(depth+1)!`` of the residue ring at ``depth``."""
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    return factorial(depth + 1)


def min_depth_for(n: int) -> int:
    """Smallest depth ``K`` with ``n | (K+1)!``."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    depth = 0
    while tower_modulus(depth) % n:
        depth += 1
    return depth


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def digits_of_value(value: int, depth: int) -> Tuple[int, ...]:
    """Factorial digits of ``value mod (depth+1)!``."""
    v = value % tower_modulus(depth)
    out = []
    for r in range(1, depth + 1):
        v, nu = divmod(v, r + 1)
        out.append(nu)
    return tuple(out)


@dataclass(frozen=True)
class FactorialDigits:
    """Digits ``nu_1 .. nu_K`` of a factorial expansion, ``0 <= nu_r <= r``."""

    digits: Tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        object.__setattr__(self, "digits", digits)
        for r, nu in enumerate(digits, start=1):
            if not 0 <= nu <= r:
                raise DigitOutOfRange(
                    f"digit nu_{r} = {nu} outside [0, {r}]")

    @property
    def depth(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        total, weight = 0, 1
        for r, nu in enumerate(self.digits, start=1):
            weight *= r
            total += nu * weight
        return total

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, r):
        return self.digits[r]


@dataclass(frozen=True)
class PolyadicInt:
    """A polyadic integer known modulo ``(depth+1)!``.

    Equality is exact: same depth and same digits.  Use :func:`eq_at_depth`
    to compare towers of different depths.  The arithmetic operators
    truncate to the smaller operand depth; plain ``int`` operands are
    embedded at the depth of the other operand.
    """

    digits: FactorialDigits
    value: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.digits, FactorialDigits):
            object.__setattr__(self, "digits", FactorialDigits(self.digits))
        object.__setattr__(self, "value", self.digits.value)

    @classmethod
    def _from_value(cls, value: int, depth: int) -> PolyadicInt:
        return cls(FactorialDigits(digits_of_value(value, depth)))

    @property
    def depth(self) -> int:
        return self.digits.depth

    @property
    def modulus(self) -> int:
        return tower_modulus(self.depth)

    def truncate(self, depth: int) -> PolyadicInt:
        if depth > self.depth:
            raise InsufficientDepth(
                f"cannot deepen a depth-{self.depth} tower to {depth}")
        if depth == self.depth:
            return self
        return PolyadicInt(FactorialDigits(self.digits.digits[:depth]))

    def _coerce(self, other):
        if isinstance(other, PolyadicInt):
            return other
        if isinstance(other, int):
            return embed(other, self.depth)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else mul(self, other)

    __rmul__ = __mul__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else sub(other, self)

    def __neg__(self):
        return neg(self)

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


@dataclass(frozen=True)
class ResidueClaim:
    """The statement ``x = residue (mod modulus)``."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue {self.residue} outside [0, {self.modulus})")

    @classmethod
    def of(cls, value: int, modulus: int) -> ResidueClaim:
        return cls(modulus, value % modulus)


def embed(m: int, depth: int = DEFAULT_DEPTH) -> PolyadicInt:
    """The integer polyadic number with value ``m``, truncated at ``depth``.

    Negative integers reduce modulo ``(depth+1)!``, so ``-1`` gets the
    maximal digits ``[1, 2, ..., depth]``.
    """
    return PolyadicInt._from_value(m, depth)


def to_digits(alpha: PolyadicInt) -> FactorialDigits:
    return alpha.digits


def from_digits(digits: FactorialDigits | Iterable[int],
                depth: int | None = None) -> PolyadicInt:
    if not isinstance(digits, FactorialDigits):
        digits = FactorialDigits(tuple(digits))
    if depth is not None and digits.depth != depth:
        raise ValueError(
            f"expected {depth} digits, got {digits.depth}")
    return PolyadicInt(digits)


def _require_divides(n: int, depth: int) -> None:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if tower_modulus(depth) % n:
        raise InsufficientDepth(
            f"{n} does not divide {depth + 1}! (depth {depth}); "
            f"need depth >= {min_depth_for(n)}")


def residue_mod(alpha: PolyadicInt, n: int) -> int:
    """Remainder of ``alpha`` on division by ``n``; needs ``n | (K+1)!``."""
    _require_divides(n, alpha.depth)
    return alpha.value % n


def _common_depth(alpha: PolyadicInt, beta: PolyadicInt) -> int:
    return min(alpha.depth, beta.depth)


def add(alpha: PolyadicInt, beta: PolyadicInt) -> PolyadicInt:
    depth = _common_depth(alpha, beta)
    return PolyadicInt._from_value(alpha.value + beta.value, depth)


def sub(alpha: PolyadicInt, beta: PolyadicInt) -> PolyadicInt:
    depth = _common_depth(alpha, beta)
    return PolyadicInt._from_value(alpha.value - beta.value, depth)


def neg(alpha: PolyadicInt) -> PolyadicInt:
    return PolyadicInt._from_value(-alpha.value, alpha.depth)


def mul(alpha: PolyadicInt, beta: PolyadicInt) -> PolyadicInt:
    depth = _common_depth(alpha, beta)
    return PolyadicInt._from_value(alpha.value * beta.value, depth)


def _quotient_depth(n: int, depth: int) -> int:
    """Largest ``K'`` with ``n * (K'+1)! | (depth+1)!``, or -1 if none."""
    modulus = tower_modulus(depth)
    best = -1
    for k in range(depth + 1):
        if modulus % (n * tower_modulus(k)) == 0:
            best = k
    return best


def div_rem(alpha: PolyadicInt, n: int,
            depth: int | None = None) -> tuple[PolyadicInt, int]:
    """Divide ``alpha`` by ``n``: ``alpha = n * gamma + r`` with ``0 <= r < n``.

    The quotient is exact only modulo ``(K'+1)!`` where ``n * (K'+1)!``
    divides the modulus of ``alpha``; by default the largest such ``K'``
    is used.  An explicit ``depth`` must also satisfy that condition.
    """
    if n < 1:
        raise ValueError(f"divisor must be positive, got {n}")
    best = _quotient_depth(n, alpha.depth)
    if best < 0:
        raise InsufficientDepth(
            f"{n} * 1! does not divide {alpha.depth + 1}!; "
            "no quotient depth available")
    if depth is None:
        depth = best
    elif depth < 0 or depth > best:
        raise InsufficientDepth(
            f"quotient depth {depth} unavailable; maximum is {best}")
    r = alpha.value % n
    gamma = PolyadicInt._from_value((alpha.value - r) // n, depth)
    return gamma, r


def crt_lift(a: ResidueClaim, b: ResidueClaim) -> ResidueClaim:
    """Combine two residue claims into one modulo ``lcm(a.modulus, b.modulus)``."""
    m, n = a.modulus, b.modulus
    g = gcd(m, n)
    diff = b.residue - a.residue
    if diff % g:
        raise Incompatible(
            f"{a.residue} mod {m} and {b.residue} mod {n} "
            f"disagree mod {g}")
    step = n // g
    t = (diff // g) * pow(m // g, -1, step) % step if step > 1 else 0
    big = lcm(m, n)
    return ResidueClaim(big, (a.residue + m * t) % big)


def padic_digits(alpha: PolyadicInt, p: int, k: int) -> list[int]:
    """The first ``k`` base-``p`` digits of ``alpha``; needs ``p**k | (K+1)!``.

    Any radix ``p >= 2`` is accepted; for prime ``p`` these are the
    leading Hensel digits.
    """
    if p < 2:
        raise ValueError(f"radix must be at least 2, got {p}")
    if k < 0:
        raise ValueError(f"digit count must be non-negative, got {k}")
    v = residue_mod(alpha, p ** k)
    out = []
    for _ in range(k):
        v, d = divmod(v, p)
        out.append(d)
    return out


def eq_at_depth(alpha: PolyadicInt, beta: PolyadicInt, depth: int) -> bool:
    if depth < 0 or depth > _common_depth(alpha, beta):
        raise InsufficientDepth(
            f"depth {depth} exceeds operand depths "
            f"{alpha.depth}, {beta.depth}")
    modulus = tower_modulus(depth)
    return alpha.value % modulus == beta.value % modulus
