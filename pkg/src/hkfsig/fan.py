"""Exponent parsing and the planar fan cut out by the pairs (b_i, a_i)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import NonPositiveExponent, OddCount

Ray = tuple[int, int]

Y_AXIS: Ray = (0, 1)
X_AXIS: Ray = (1, 0)


@dataclass(frozen=True)
class ExponentData:
    """Exponent vectors of the two principal monomial ideals I = (x^a), J = (x^b)."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b) or not self.a:
            raise OddCount(f"need two exponent lists of equal positive length, got {len(self.a)} and {len(self.b)}")
        for e in self.a + self.b:
            if int(e) != e or e < 1:
                raise NonPositiveExponent(f"exponents must be positive integers, got {e!r}")

    @property
    def n(self) -> int:
        return len(self.a)

    def permuted(self, perm: Sequence[int]) -> "ExponentData":
        return ExponentData(tuple(self.a[i] for i in perm), tuple(self.b[i] for i in perm))

    def swapped(self) -> "ExponentData":
        return ExponentData(self.b, self.a)


@dataclass(frozen=True)
class Fan:
    rays: tuple[Ray, ...]

    @property
    def cones(self) -> list[tuple[Ray, Ray]]:
        return list(zip(self.rays, self.rays[1:]))


def parse_exponents(values: Sequence[int]) -> ExponentData:
    """Split a flat list ``a_1..a_n b_1..b_n`` in half."""
    values = list(values)
    if not values or len(values) % 2:
        raise OddCount(f"expected an even, nonzero number of exponents, got {len(values)}")
    for v in values:
        if int(v) != v or v < 1:
            raise NonPositiveExponent(f"exponents must be positive integers, got {v!r}")
    n = len(values) // 2
    return ExponentData(tuple(int(v) for v in values[:n]), tuple(int(v) for v in values[n:]))


def primitive(u: Ray) -> Ray:
    g = gcd(*u)
    return (u[0] // g, u[1] // g)


def det(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _slope(u: Ray) -> Fraction | float:
    return float("inf") if u[0] == 0 else Fraction(u[1], u[0])


def build_fan(data: ExponentData) -> Fan:
    """Rays from the y-axis to the x-axis in strictly decreasing slope order.

    Proportional pairs collapse onto one ray; since all exponents are positive,
    no interior ray ever coincides with an axis.
    """
    interior = {primitive((b, a)) for a, b in zip(data.a, data.b)}
    interior -= {Y_AXIS, X_AXIS}
    rays = [Y_AXIS] + sorted(interior, key=_slope, reverse=True) + [X_AXIS]
    return Fan(tuple(rays))
