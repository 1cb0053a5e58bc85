"""Independent membership tests and Monte-Carlo volume estimates.

Nothing here feeds reported results; it exists to cross-check the exact
engine.  Sampling uses numpy's PCG64 bit generator seeded through a
SeedSequence, one spawned child stream per chunk of ``CHUNK`` samples, so an
estimate is reproducible from ``(seed, samples)`` alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod, sqrt
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch
from .fan import ExponentData, build_fan
from .regions import RegionFormula

RNG_ALGORITHM = "numpy.PCG64/SeedSequence.spawn"
CHUNK = 200_000

Box = tuple[Fraction, ...]


@dataclass(frozen=True)
class MCResult:
    estimate: Fraction
    stderr: Fraction
    hits: int
    samples: int
    box: Box
    algorithm: str = RNG_ALGORITHM

    def agrees(self, exact, k: float = 4.0) -> bool:
        return abs(Fraction(exact) - self.estimate) <= k * self.stderr


def contains(region: RegionFormula, point: Sequence) -> bool:
    if len(point) != region.dim:
        raise DimensionMismatch(f"point has {len(point)} coordinates, region has {region.dim}")
    return region.holds([Fraction(v) for v in point])


def hk_box(data: ExponentData) -> Box:
    """A box that provably contains the Hilbert-Kunz region.

    The (x, y)-shadow lies in the union of the open fundamental parallelograms
    of the fan's cones, and z_i < max(a_i x, b_i y) + 1 on the whole region.
    """
    fan = build_fan(data)
    bx = max(u[0] + v[0] for u, v in fan.cones)
    by = max(u[1] + v[1] for u, v in fan.cones)
    zs = [max(a * bx, b * by) + 1 for a, b in zip(data.a, data.b)]
    return tuple(Fraction(v) for v in [bx, by, *zs])


def fsig_box(data: ExponentData) -> Box:
    return (Fraction(1), Fraction(1)) + tuple(Fraction(5 * max(a, b)) for a, b in zip(data.a, data.b))


def _mask(atoms, pts: np.ndarray) -> np.ndarray:
    """Vectorized truth values of a sequence of atoms (floating point)."""
    out = np.zeros(len(pts), dtype=bool)
    for atom in atoms:
        lhs = pts @ np.array([float(c) for c in atom.coeffs])
        c = float(atom.constant)
        if atom.relation == "<":
            out |= lhs < c
        elif atom.relation == "<=":
            out |= lhs <= c
        elif atom.relation == ">":
            out |= lhs > c
        else:
            out |= lhs >= c
    return out


def _hits(region: RegionFormula, pts: np.ndarray) -> int:
    inside = np.ones(len(pts), dtype=bool)
    for atom in region.base:
        inside &= _mask([atom], pts)
    for clause in region.clauses:
        inside &= _mask(clause.atoms, pts)
    return int(inside.sum())


def mc_volume(
    region: RegionFormula,
    box: Sequence | None = None,
    samples: int = 1_000_000,
    seed: int = 0,
) -> MCResult:
    """Hit-or-miss estimate of the region's volume inside ``[0, B_v]`` per variable.

    Only meaningful when the box contains the region.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    box = tuple(Fraction(b) for b in (box if box is not None else region.box_hints))
    if len(box) != region.dim:
        raise DimensionMismatch(f"box has {len(box)} bounds, region has {region.dim}")
    if any(b <= 0 for b in box):
        raise ValueError("box bounds must be positive")
    upper = np.array([float(b) for b in box])
    hits = 0
    streams = np.random.SeedSequence(seed).spawn((samples + CHUNK - 1) // CHUNK)
    for j, ss in enumerate(streams):
        m = min(CHUNK, samples - j * CHUNK)
        rng = np.random.Generator(np.random.PCG64(ss))
        hits += _hits(region, rng.random((m, region.dim)) * upper)
    vol = prod(box)
    p = hits / samples
    stderr = Fraction(float(vol) * sqrt(p * (1 - p) / samples))
    return MCResult(vol * Fraction(hits, samples), stderr, hits, samples, box)
