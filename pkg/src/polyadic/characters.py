"""Characters of the algebra of periodic functions.

Restricted to the ``n``-periodic functions, a character is evaluation at a
single point ``kappa(n) in [0, n)``, and these points form a coherent
residue tower.  A :class:`Character` therefore stores that tower as a
:class:`~polyadic.arith.PolyadicInt`; evaluation, the convolutions and the
cluster/Gelfand neighbourhoods are all derived from it.  ``char_of`` and
``tower_of`` are the two directions of the ring isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith
from .arith import PolyadicInt, embed, residue_mod
from .errors import InsufficientDepth
from .periodic import (PeriodicFunction, SymmetricBiPeriodicFunction,
                       indicator)

__all__ = [
    "Character",
    "GelfandNeighborhood",
    "char_of",
    "cluster_equal",
    "cluster_neighborhoods",
    "conv_dot",
    "conv_minus",
    "conv_plus",
    "direct_product_apply",
    "epsilon",
    "evaluate",
    "gelfand_contains",
    "in_cluster_intersection",
    "kappa",
    "point_evaluation",
    "reflect",
    "theta",
    "tower_of",
]


@dataclass(frozen=True)
class Character:
    tower: PolyadicInt

    @property
    def depth(self) -> int:
        return self.tower.depth

    def __call__(self, u: PeriodicFunction) -> complex:
        return evaluate(self, u)

    def __add__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return conv_plus(self, other)

    def __mul__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return conv_dot(self, other)

    def __neg__(self):
        return reflect(self)

    def __sub__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return conv_minus(self, other)


def char_of(alpha: PolyadicInt) -> Character:
    return Character(alpha)


def tower_of(psi: Character) -> PolyadicInt:
    return psi.tower


def point_evaluation(k: int, depth: int = arith.DEFAULT_DEPTH) -> Character:
    """The character ``u -> u(k)``."""
    return Character(embed(k, depth))


def theta(depth: int = arith.DEFAULT_DEPTH) -> Character:
    """Additive neutral element: evaluation at 0."""
    return point_evaluation(0, depth)


def epsilon(depth: int = arith.DEFAULT_DEPTH) -> Character:
    """Multiplicative neutral element: evaluation at 1."""
    return point_evaluation(1, depth)


def kappa(psi: Character, n: int) -> int:
    """The unique ``k in [0, n)`` with ``psi(u) = u(k)`` for ``n``-periodic ``u``."""
    return residue_mod(psi.tower, n)


def evaluate(psi: Character, u: PeriodicFunction) -> complex:
    return u(kappa(psi, u.period))


def direct_product_apply(phi: Character, psi: Character,
                         w: SymmetricBiPeriodicFunction) -> complex:
    """``(phi x psi) w``, summed over the product indicator basis."""
    p = w.period
    phi_e = [evaluate(phi, indicator(p, j)) for j in range(p)]
    psi_e = [evaluate(psi, indicator(p, k)) for k in range(p)]
    total = 0j
    for j in range(p):
        if not phi_e[j]:
            continue
        for k in range(p):
            if psi_e[k]:
                total += w(j, k) * phi_e[j] * psi_e[k]
    return total


def conv_plus(phi: Character, psi: Character) -> Character:
    return Character(arith.add(phi.tower, psi.tower))


def conv_dot(phi: Character, psi: Character) -> Character:
    return Character(arith.mul(phi.tower, psi.tower))


def reflect(psi: Character) -> Character:
    return Character(arith.neg(psi.tower))


def conv_minus(phi: Character, psi: Character) -> Character:
    return conv_plus(phi, reflect(psi))


def cluster_equal(phi: Character, psi: Character, n: int) -> bool:
    """Whether ``phi`` and ``psi`` agree on every ``n``-periodic function."""
    return kappa(phi, n) == kappa(psi, n)


@dataclass(frozen=True)
class GelfandNeighborhood:
    """``{phi : |phi(u) - anchor(u)| < radius}``."""

    anchor: Character
    test_function: PeriodicFunction
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if self.anchor.tower.modulus % self.test_function.period:
            raise InsufficientDepth(
                f"period {self.test_function.period} does not divide the "
                f"anchor modulus {self.anchor.tower.modulus}")

    def __contains__(self, phi: Character) -> bool:
        return gelfand_contains(self, phi)


def gelfand_contains(nbhd: GelfandNeighborhood, phi: Character) -> bool:
    u = nbhd.test_function
    return abs(evaluate(phi, u) - evaluate(nbhd.anchor, u)) < nbhd.radius


def cluster_neighborhoods(psi: Character, n: int,
                          radius: float) -> list[GelfandNeighborhood]:
    """The ``n`` indicator neighbourhoods whose intersection is the cluster."""
    return [GelfandNeighborhood(psi, indicator(n, j), radius)
            for j in range(n)]


def in_cluster_intersection(phi: Character, psi: Character, n: int,
                            radius: float) -> bool:
    return all(gelfand_contains(nb, phi)
               for nb in cluster_neighborhoods(psi, n, radius))
