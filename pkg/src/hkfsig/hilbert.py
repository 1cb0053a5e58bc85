"""Hilbert bases of two-dimensional pointed rational cones.

Every Hilbert basis element of cone(u, v) other than u and v lies in the
closed fundamental parallelogram {lu + mv : 0 <= l, m <= 1}, so we scan that
parallelogram's lattice points and strip the reducible ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DegenerateCone
from .fan import Fan, Ray, det

LatticePoint = tuple[int, int]


@dataclass(frozen=True)
class HilbertSet:
    points: tuple[LatticePoint, ...]
    per_cone: tuple[frozenset[LatticePoint], ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in self.points


def in_cone(w: LatticePoint, u: Ray, v: Ray) -> bool:
    """Closed membership in cone(u, v), by exact determinant signs."""
    d = det(u, v)
    if d == 0:
        raise DegenerateCone(f"rays {u} and {v} are parallel")
    lam, mu = det(w, v), det(u, w)
    if d < 0:
        lam, mu = -lam, -mu
    return lam >= 0 and mu >= 0


def parallelogram_points(u: Ray, v: Ray) -> list[LatticePoint]:
    """Lattice points lu + mv with 0 <= l, m <= 1."""
    d = det(u, v)
    if d == 0:
        raise DegenerateCone(f"rays {u} and {v} are parallel")
    corners = [(0, 0), u, v, (u[0] + v[0], u[1] + v[1])]
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            lam, mu = det((x, y), v), det(u, (x, y))
            if d < 0:
                lam, mu = -lam, -mu
            if 0 <= lam <= abs(d) and 0 <= mu <= abs(d):
                out.append((x, y))
    return out


def cone_hilbert_basis(u: Ray, v: Ray) -> frozenset[LatticePoint]:
    candidates = {p for p in parallelogram_points(u, v) if p != (0, 0)}
    candidates |= {tuple(u), tuple(v)}
    basis = set()
    for w in candidates:
        reducible = False
        for c in candidates:
            if c == w:
                continue
            rest = (w[0] - c[0], w[1] - c[1])
            if rest != (0, 0) and in_cone(rest, u, v):
                reducible = True
                break
        if not reducible:
            basis.add(w)
    return frozenset(basis)


def union_sorted(sets: Iterable[Iterable[LatticePoint]]) -> tuple[LatticePoint, ...]:
    return tuple(sorted(set().union(*sets)))


def hilbert_set(fan: Fan) -> HilbertSet:
    per_cone = tuple(cone_hilbert_basis(u, v) for u, v in fan.cones)
    return HilbertSet(union_sorted(per_cone), per_cone)
