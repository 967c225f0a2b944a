"""Grids: cosets ``center + n * P`` of the divisibility topology.

A grid of width ``n`` is determined by its center modulo ``n``, so two
grids are equal exactly when their widths agree and their centers are
congruent modulo the width.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial, lcm

from .arith import (PolyadicInt, ResidueClaim, crt_lift, embed,
                    min_depth_for, residue_mod, tower_modulus)
from .errors import (Incompatible, IndexOutOfRange, InsufficientDepth,
                     WidthMismatch)

__all__ = [
    "Grid",
    "Relation",
    "grid_contains",
    "grids_relation",
    "ideal",
    "intersect",
    "partition",
    "refine",
]


@dataclass(frozen=True, eq=False)
class Grid:
    width: int
    center: PolyadicInt

    def __post_init__(self):
        if self.width < 1:
            raise ValueError(f"width must be positive, got {self.width}")
        if self.center.modulus % self.width:
            raise InsufficientDepth(
                f"width {self.width} does not divide the center modulus "
                f"{self.center.modulus}")

    @property
    def residue(self) -> int:
        return residue_mod(self.center, self.width)

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return self.width == other.width and self.residue == other.residue

    def __hash__(self):
        return hash((self.width, self.residue))

    def __contains__(self, x: PolyadicInt) -> bool:
        return grid_contains(self, x)

    def __repr__(self):
        return f"Grid(width={self.width}, residue={self.residue})"


def ideal(n: int, depth: int | None = None) -> Grid:
    """The ideal of multiples of ``n``, as the grid centered at zero."""
    return Grid(n, embed(0, min_depth_for(n) if depth is None else depth))


def grid_contains(g: Grid, x: PolyadicInt) -> bool:
    return residue_mod(x - g.center, g.width) == 0


def partition(n: int, depth: int | None = None) -> list[Grid]:
    """The ``n`` disjoint width-``n`` grids centered at ``0 .. n-1``."""
    if n < 1:
        raise ValueError(f"width must be positive, got {n}")
    if depth is None:
        depth = min_depth_for(n)
    return [Grid(n, embed(r, depth)) for r in range(n)]


def refine(n: int, k: int) -> list[Grid]:
    """Split the width-``n!`` grid at ``k`` into ``n+1`` grids of width ``(n+1)!``."""
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    step = factorial(n)
    if not 0 <= k < step:
        raise IndexOutOfRange(f"center {k} outside [0, {step})")
    width = tower_modulus(n)
    return [Grid(width, embed(k + step * m, n)) for m in range(n + 1)]


class Relation(enum.Enum):
    ABSORBED = "absorbed"
    DISJOINT = "disjoint"


def grids_relation(outer: Grid, inner: Grid) -> Relation:
    """How a finer grid sits inside a coarser one: absorbed or disjoint."""
    if inner.width % outer.width:
        raise WidthMismatch(
            f"outer width {outer.width} does not divide inner width "
            f"{inner.width}")
    if grid_contains(outer, inner.center):
        return Relation.ABSORBED
    return Relation.DISJOINT


def intersect(g1: Grid, g2: Grid) -> Grid | None:
    """The lcm-width grid through the common points, or ``None`` if empty."""
    width = lcm(g1.width, g2.width)
    depth = min(g1.center.depth, g2.center.depth)
    if tower_modulus(depth) % width:
        raise InsufficientDepth(
            f"lcm width {width} does not divide {depth + 1}!")
    try:
        claim = crt_lift(ResidueClaim(g1.width, g1.residue),
                         ResidueClaim(g2.width, g2.residue))
    except Incompatible:
        return None
    return Grid(width, embed(claim.residue, depth))
