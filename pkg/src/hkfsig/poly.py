"""Sparse multivariate polynomials with Fraction coefficients.

A polynomial is a dict mapping exponent tuples to nonzero coefficients.  A
linear form is ``(coeffs, const)`` with ``coeffs`` a dict index -> Fraction.
"""

from __future__ import annotations

from fractions import Fraction

Poly = dict[tuple[int, ...], Fraction]


def constant(c, nvars: int) -> Poly:
    c = Fraction(c)
    return {(0,) * nvars: c} if c else {}


def add_into(acc: Poly, p: Poly, scale=1):
    for e, c in p.items():
        v = acc.get(e, 0) + scale * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


def mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def linear(form, nvars: int) -> Poly:
    coeffs, const = form
    out = constant(const, nvars)
    for j, c in coeffs.items():
        if c:
            e = [0] * nvars
            e[j] = 1
            out[tuple(e)] = Fraction(c)
    return out


def antiderivative(p: Poly, k: int) -> Poly:
    out: Poly = {}
    for e, c in p.items():
        e2 = list(e)
        e2[k] += 1
        out[tuple(e2)] = c / e2[k]
    return out


def substitute(p: Poly, k: int, form, nvars: int) -> Poly:
    """Replace variable ``k`` by a linear form that does not involve ``k``."""
    lin = linear(form, nvars)
    powers = [constant(1, nvars)]
    out: Poly = {}
    for e, c in p.items():
        d = e[k]
        while len(powers) <= d:
            powers.append(mul(powers[-1], lin))
        rest = list(e)
        rest[k] = 0
        add_into(out, mul({tuple(rest): c}, powers[d]))
    return out


def evaluate(p: Poly, point) -> Fraction:
    total = Fraction(0)
    for e, c in p.items():
        term = c
        for v, d in zip(point, e):
            if d:
                term *= Fraction(v) ** d
        total += term
    return total


def integrate_univariate(coeffs: list[Fraction], lo: Fraction, hi: Fraction) -> Fraction:
    """Integral of sum(coeffs[k] t^k) over [lo, hi]."""
    return sum(
        (c * (hi ** (k + 1) - lo ** (k + 1)) / (k + 1) for k, c in enumerate(coeffs)),
        Fraction(0),
    )


def interpolate(ts: list[Fraction], values: list[Fraction]) -> list[Fraction]:
    """Coefficients (low degree first) of the polynomial through the given points."""
    m = len(ts)
    coeffs = [Fraction(0)] * m
    for i in range(m):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(m):
            if j == i:
                continue
            # multiply basis by (t - ts[j])
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * ts[j]
                nxt[k + 1] += c
            basis = nxt
            denom *= ts[i] - ts[j]
        scale = values[i] / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    return coeffs
