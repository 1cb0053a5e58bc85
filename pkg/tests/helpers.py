"""Oracles shared by several test modules.  None of them touch the volume engine."""

from fractions import Fraction
from itertools import product

import numpy as np

from hkfsig.fan import ExponentData, det


def cone_points(u, v, bound):
    """Lattice points of cone(u, v) in [0, bound]^2, by determinant signs."""
    d = det(u, v)
    pts = []
    for x, y in product(range(bound + 1), repeat=2):
        lam, mu = det((x, y), v), det(u, (x, y))
        if d < 0:
            lam, mu = -lam, -mu
        if lam >= 0 and mu >= 0:
            pts.append((x, y))
    return pts


def brute_hilbert_basis(u, v, bound):
    """Irreducible nonzero lattice points of the cone within the box."""
    pts = set(cone_points(u, v, bound)) - {(0, 0)}
    out = set()
    for w in pts:
        if not any((w[0] - p[0], w[1] - p[1]) in pts for p in pts if p != w):
            out.add(w)
    return out


def monoid_fiber_mc(data: ExponentData, bx, by, samples, seed):
    """Independent estimate of the Hilbert-Kunz volume.

    Uses only the description "cone P minus the translates of P by nonzero
    lattice points of P": sample (x, y) in [0, bx] x [0, by] and offsets
    w in [0, 1)^n, set z = m(x, y) + w, and reject if some lattice point
    (p, q) <= (x, y) pushes the whole point into a translate.
    Returns (estimate, stderr) as floats.
    """
    rng = np.random.default_rng(seed)
    a = np.array(data.a, dtype=float)
    b = np.array(data.b, dtype=float)
    x = rng.random(samples) * bx
    y = rng.random(samples) * by
    w = rng.random((samples, data.n))
    m = np.maximum(np.outer(x, a), np.outer(y, b))
    z = m + w
    inside = np.ones(samples, dtype=bool)
    for p in range(int(bx) + 1):
        for q in range(int(by) + 1):
            if p == q == 0:
                continue
            t = np.maximum(a * p, b * q)
            shifted = np.maximum(np.outer(x - p, a), np.outer(y - q, b))
            covered = (x >= p) & (y >= q) & np.all(z >= t + shifted, axis=1)
            inside &= ~covered
    p_hat = inside.mean()
    area = bx * by
    return area * p_hat, area * np.sqrt(p_hat * (1 - p_hat) / samples)


def rational_grid(box, step):
    axes = [[Fraction(k) * step for k in range(int(b / step) + 1)] for b in box]
    return product(*axes)
