"""Integer sequences as representatives of polyadic numbers.

Every predicate here is horizon-qualified: it inspects ``alpha_1 ..
alpha_N`` only and reports what that finite prefix evidences.  A sequence
counts as stabilized at depth ``K`` when its residues modulo ``(K+1)!``
are constant on a tail of at least ``window`` terms ending at the horizon.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Optional, Sequence

from .arith import (DEFAULT_DEPTH, PolyadicInt, divisors, embed,
                    min_depth_for, tower_modulus)
from .characters import Character, kappa
from .errors import NotYetStable
from .periodic import PeriodicFunction

__all__ = [
    "DEFAULT_HORIZON",
    "IntSequence",
    "StabilizationReport",
    "Stability",
    "classify_absolute_upto",
    "converges_check",
    "default_window",
    "final_value_upto",
    "is_prezero_upto",
    "is_zero_sequence_upto",
    "limit_upto",
    "named_sequence",
    "sequence_of_character",
]

DEFAULT_HORIZON = 200


def default_window(depth: int) -> int:
    return 2 * (depth + 1)


@dataclass(frozen=True)
class IntSequence:
    """A pure map from indices ``1, 2, ...`` to integers.

    ``length`` is set for finite data; horizons are clipped to it.
    """

    generator: Callable[[int], int]
    description: str = ""
    length: Optional[int] = None

    def __call__(self, k: int) -> int:
        if k < 1 or (self.length is not None and k > self.length):
            raise IndexError(f"index {k} outside the sequence")
        return self.generator(k)

    @classmethod
    def from_list(cls, values: Sequence[int],
                  description: str = "") -> IntSequence:
        values = tuple(int(v) for v in values)
        return cls(lambda k: values[k - 1],
                   description or f"list[{len(values)}]", len(values))

    @classmethod
    def constant(cls, m: int) -> IntSequence:
        return cls(lambda k: m, f"constant:{m}")

    def horizon(self, requested: int) -> int:
        if self.length is None:
            return requested
        return min(requested, self.length)

    def shift(self, steps: int = 1) -> IntSequence:
        """``(S alpha)_k = alpha_{k+steps}``."""
        gen = self.generator
        length = None if self.length is None else max(self.length - steps, 0)
        return IntSequence(lambda k: gen(k + steps),
                           f"shift^{steps}({self.description})", length)

    def _combine(self, other: IntSequence, op, symbol: str) -> IntSequence:
        f, g = self.generator, other.generator
        lengths = [n for n in (self.length, other.length) if n is not None]
        return IntSequence(lambda k: op(f(k), g(k)),
                           f"({self.description}){symbol}({other.description})",
                           min(lengths) if lengths else None)

    def __add__(self, other):
        if not isinstance(other, IntSequence):
            return NotImplemented
        return self._combine(other, lambda a, b: a + b, "+")

    def __sub__(self, other):
        if not isinstance(other, IntSequence):
            return NotImplemented
        return self._combine(other, lambda a, b: a - b, "-")

    def __mul__(self, other):
        if not isinstance(other, IntSequence):
            return NotImplemented
        return self._combine(other, lambda a, b: a * b, "*")

    def __neg__(self):
        f = self.generator
        return IntSequence(lambda k: -f(k), f"-({self.description})",
                           self.length)


@lru_cache(maxsize=None)
def _factorial_sum(k: int) -> int:
    return sum(factorial(j) for j in range(1, k + 1))


_NAMED = re.compile(
    r"^(?:constant:(?P<const>-?\d+)"
    r"|(?P<fsum>factorial-sum)"
    r"|(?P<fact>factorial(?::k!)?)"
    r"|affine:(?P<a>-?\d+),(?P<b>-?\d+))$")


def named_sequence(spec: str) -> IntSequence:
    """Built-in generators.

    ``constant:m``, ``factorial-sum`` (sum of j! for j <= k),
    ``factorial`` or ``factorial:k!`` (k!), ``affine:a,b`` (a*k + b).
    """
    match = _NAMED.match(spec.strip())
    if match is None:
        raise ValueError(f"unknown sequence generator {spec!r}")
    if match["const"] is not None:
        return IntSequence.constant(int(match["const"]))
    if match["fsum"]:
        return IntSequence(_factorial_sum, "factorial-sum")
    if match["fact"]:
        return IntSequence(factorial, "factorial")
    a, b = int(match["a"]), int(match["b"])
    return IntSequence(lambda k: a * k + b, f"affine:{a},{b}")


class Stability(enum.Enum):
    STABLE = "stable"
    NOT_YET_STABLE = "not-yet-stable"


@dataclass(frozen=True)
class StabilizationReport:
    target_depth: int
    witness_index: int
    checked_upto: int
    status: Stability
    window: int

    @property
    def tail_length(self) -> int:
        return self.checked_upto - self.witness_index + 1


def _tail_scan(residues: list[int]) -> int:
    """1-based index where the final constant run of ``residues`` starts."""
    start = len(residues)
    while start > 1 and residues[start - 2] == residues[-1]:
        start -= 1
    return start


def _stabilize(alpha: IntSequence, modulus: int, depth: int, horizon: int,
               window: Optional[int]) -> tuple[int, StabilizationReport]:
    if window is None:
        window = default_window(depth)
    if window < 1:
        raise ValueError(f"window must be positive, got {window}")
    n = alpha.horizon(horizon)
    if n < 1:
        raise NotYetStable("empty sequence prefix")
    residues = [alpha(k) % modulus for k in range(1, n + 1)]
    witness = _tail_scan(residues)
    stable = n - witness + 1 >= window
    report = StabilizationReport(
        depth, witness, n,
        Stability.STABLE if stable else Stability.NOT_YET_STABLE, window)
    if not stable:
        raise NotYetStable(
            f"residues mod {modulus} constant only on [{witness}, {n}] "
            f"({n - witness + 1} terms, window {window})", report)
    return residues[-1], report


def limit_upto(alpha: IntSequence, depth: int = DEFAULT_DEPTH,
               horizon: int = DEFAULT_HORIZON,
               window: Optional[int] = None
               ) -> tuple[PolyadicInt, StabilizationReport]:
    """The polyadic number a stabilized prefix of ``alpha`` evidences at ``depth``.

    Raises :class:`NotYetStable` (carrying the report) when the tail of
    constant residues is shorter than ``window`` (default ``2*(depth+1)``).
    """
    value, report = _stabilize(alpha, tower_modulus(depth), depth, horizon,
                               window)
    return embed(value, depth), report


def is_zero_sequence_upto(alpha: IntSequence, depth: int = DEFAULT_DEPTH,
                          horizon: int = DEFAULT_HORIZON,
                          window: Optional[int] = None) -> bool:
    limit, _ = limit_upto(alpha, depth, horizon, window)
    return limit.value == 0


def classify_absolute_upto(alpha: IntSequence, depth: int = DEFAULT_DEPTH,
                           horizon: int = DEFAULT_HORIZON,
                           window: Optional[int] = None,
                           bound: Optional[int] = None) -> Optional[int]:
    """Candidate integer value of ``alpha``, or ``None`` if none fits at ``depth``.

    The candidate is the representative ``m`` of the limit with smallest
    ``|m|``.  It is accepted only when ``|m| <= bound``.  The default
    bound ``depth!/2`` makes ``m`` also the smallest representative one
    level coarser, so a sequence whose candidate keeps growing with depth
    (such as the factorial sums) is rejected.
    """
    limit, _ = limit_upto(alpha, depth, horizon, window)
    modulus = limit.modulus
    r = limit.value
    m = r if 2 * r <= modulus else r - modulus
    if bound is None:
        bound = factorial(depth) // 2
    return m if abs(m) <= bound else None


def is_prezero_upto(alpha: IntSequence, p: int,
                    horizon: int = DEFAULT_HORIZON,
                    window: Optional[int] = None) -> bool:
    """Whether ``alpha`` stabilizes in the ideal of multiples of ``p``.

    Stabilization is checked at the least depth whose modulus ``p`` divides.
    """
    depth = min_depth_for(p)
    limit, _ = limit_upto(alpha, depth, horizon, window)
    return limit.value % p == 0


def final_value_upto(alpha: IntSequence, u: PeriodicFunction,
                     horizon: int = DEFAULT_HORIZON,
                     window: Optional[int] = None) -> complex:
    """The eventual value of ``u(alpha_k)``, read straight off the sequence."""
    n = alpha.horizon(horizon)
    if n < 1:
        raise NotYetStable("empty sequence prefix")
    if window is None:
        window = default_window(min_depth_for(u.period))
    values = [u(alpha(k)) for k in range(1, n + 1)]
    witness = _tail_scan(values)
    if n - witness + 1 < window:
        raise NotYetStable(
            f"u(alpha_k) constant only on [{witness}, {n}]")
    return values[-1]


def sequence_of_character(psi: Character) -> IntSequence:
    """``alpha_n = kappa(n!; psi)``, held constant once ``n!`` exceeds the tower."""
    top = psi.depth + 1
    values = tuple(kappa(psi, factorial(n)) for n in range(1, top + 1))

    def gen(n: int) -> int:
        return values[min(n, top) - 1]

    return IntSequence(gen, f"kappa-tower({psi.tower})")


def converges_check(betas: Sequence[PolyadicInt],
                    depth: int = DEFAULT_DEPTH) -> bool:
    """Finite-list convergence test on consecutive differences.

    For each ``m | (depth+1)!`` the differences ``beta_n - beta_{n+1}``
    must reach ``0 mod m`` and stay there until the end of the list.
    """
    if any(b.depth < depth for b in betas):
        raise ValueError(f"all entries need depth >= {depth}")
    modulus = tower_modulus(depth)
    diffs = [(a.value - b.value) % modulus for a, b in zip(betas, betas[1:])]
    if not diffs:
        return True
    for m in divisors(modulus):
        hits = [d % m == 0 for d in diffs]
        if True not in hits or not all(hits[hits.index(True):]):
            return False
    return True
