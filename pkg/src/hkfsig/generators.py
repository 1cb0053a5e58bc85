"""Lift Hilbert-set points to generators (p, q, t_1..t_n) of the monoid of B."""

from __future__ import annotations

from dataclasses import dataclass

from .fan import ExponentData, build_fan
from .hilbert import HilbertSet, LatticePoint, hilbert_set


@dataclass(frozen=True)
class Generator:
    p: int
    q: int
    t: tuple[int, ...]

    def as_tuple(self) -> tuple[int, ...]:
        return (self.p, self.q) + self.t

    def __str__(self):
        return "(" + ", ".join(map(str, self.as_tuple())) + ")"


@dataclass(frozen=True)
class GeneratorSet:
    units: tuple[Generator, ...]
    hilbert: tuple[Generator, ...]

    def __iter__(self):
        yield from self.units
        yield from self.hilbert

    def __len__(self):
        return len(self.units) + len(self.hilbert)


def t_vector(v: LatticePoint, data: ExponentData) -> tuple[int, ...]:
    r, s = v
    return tuple(max(a * r, b * s) for a, b in zip(data.a, data.b))


def generator_set(h: HilbertSet, data: ExponentData) -> GeneratorSet:
    # The unit generators (0, 0, e_j) stand for the ring variables x_j in B.
    units = tuple(
        Generator(0, 0, tuple(int(i == j) for i in range(data.n))) for j in range(data.n)
    )
    lifted = tuple(Generator(r, s, t_vector((r, s), data)) for r, s in sorted(h.points))
    return GeneratorSet(units, lifted)


def generators_for(data: ExponentData) -> GeneratorSet:
    return generator_set(hilbert_set(build_fan(data)), data)
