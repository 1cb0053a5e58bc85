"""Exact half-space rows and Fourier-Motzkin feasibility.

A row ``(coeffs, rhs)`` stands for ``sum(coeffs[j] * v[j]) <= rhs`` where the
coefficients are coprime integers and ``rhs`` is a Fraction.  Two rows with
the same coefficient vector describe parallel half-spaces, so a system never
needs more than one row per direction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Row = tuple[tuple[int, ...], Fraction]


def make_row(coeffs: Sequence, rhs) -> Row | None:
    """Normalize ``coeffs . v <= rhs``; returns None when all coefficients vanish."""
    coeffs = [Fraction(c) for c in coeffs]
    rhs = Fraction(rhs)
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = gcd(*ints)
    if g == 0:
        return None
    return tuple(c // g for c in ints), rhs * den / g


def _normalize_int(coeffs: list[int], rhs: Fraction) -> Row | None:
    g = gcd(*coeffs)
    if g == 0:
        return None
    if g == 1:
        return tuple(coeffs), rhs
    return tuple(c // g for c in coeffs), rhs / g


class System:
    """Conjunction of rows, keeping only the tightest row per direction."""

    __slots__ = ("dim", "rows", "infeasible", "degenerate")

    def __init__(self, dim: int, rows: Iterable[Row] = ()):
        self.dim = dim
        self.rows: dict[tuple[int, ...], Fraction] = {}
        # a constant row 0 <= c with c < 0 makes the set empty; c == 0 makes its
        # interior empty
        self.infeasible = False
        self.degenerate = False
        for row in rows:
            self.add(row)

    def copy(self) -> "System":
        s = System.__new__(System)
        s.dim = self.dim
        s.rows = dict(self.rows)
        s.infeasible = self.infeasible
        s.degenerate = self.degenerate
        return s

    def add(self, row: Row | None, constant: Fraction | None = None):
        if row is None:
            if constant is not None:
                if constant < 0:
                    self.infeasible = True
                elif constant == 0:
                    self.degenerate = True
            return
        coeffs, rhs = row
        old = self.rows.get(coeffs)
        if old is None or rhs < old:
            self.rows[coeffs] = rhs

    def add_raw(self, coeffs: Sequence, rhs):
        row = make_row(coeffs, rhs)
        if row is None:
            self.add(None, Fraction(rhs))
        else:
            self.add(row)

    def __iter__(self):
        return iter(self.rows.items())

    def __len__(self):
        return len(self.rows)


def eliminate(rows: dict, k: int, open_: bool, status: list) -> dict:
    """One Fourier-Motzkin step removing variable ``k``."""
    pos, neg, out = [], [], {}
    for coeffs, rhs in rows.items():
        c = coeffs[k]
        if c > 0:
            pos.append((coeffs, rhs))
        elif c < 0:
            neg.append((coeffs, rhs))
        else:
            out[coeffs] = rhs
    for pc, pr in pos:
        alpha = pc[k]
        for nc, nr in neg:
            beta = -nc[k]
            coeffs = [beta * p + alpha * q for p, q in zip(pc, nc)]
            rhs = beta * pr + alpha * nr
            row = _normalize_int(coeffs, rhs)
            if row is None:
                if rhs < 0 or (open_ and rhs == 0):
                    status[0] = False
                    return {}
                continue
            old = out.get(row[0])
            if old is None or row[1] < old:
                out[row[0]] = row[1]
    return out


def _opposite_check(rows: dict, open_: bool) -> bool:
    for coeffs, rhs in rows.items():
        neg = tuple(-c for c in coeffs)
        other = rows.get(neg)
        if other is not None:
            total = rhs + other
            if total < 0 or (open_ and total == 0):
                return False
    return True


def feasible(system: System, open_: bool = False) -> bool:
    """Exact emptiness test.

    With ``open_`` every row is read as strict, which decides whether the
    closed polyhedron has nonempty interior (is full-dimensional).
    """
    if system.infeasible or (open_ and system.degenerate):
        return False
    rows = dict(system.rows)
    live = set(range(system.dim))
    status = [True]
    while rows:
        if not _opposite_check(rows, open_):
            return False
        present = [k for k in live if any(c[k] for c in rows)]
        if not present:
            break
        best, best_cost = None, None
        for k in present:
            p = sum(1 for c in rows if c[k] > 0)
            n = sum(1 for c in rows if c[k] < 0)
            cost = p * n - p - n
            if best_cost is None or cost < best_cost:
                best, best_cost = k, cost
        rows = eliminate(rows, best, open_, status)
        if not status[0]:
            return False
        live.discard(best)
    return True


def bounds(system: System, k: int) -> tuple[Fraction | None, Fraction | None]:
    """Exact range of coordinate ``k`` over the closed polyhedron (None = unbounded)."""
    rows = dict(system.rows)
    status = [True]
    for j in range(system.dim):
        if j != k:
            rows = eliminate(rows, j, False, status)
            if not status[0]:
                raise ValueError("empty system has no bounds")
    lo = hi = None
    for coeffs, rhs in rows.items():
        c = coeffs[k]
        if c > 0:
            v = rhs / c
            hi = v if hi is None else min(hi, v)
        elif c < 0:
            v = rhs / c
            lo = v if lo is None else max(lo, v)
    return lo, hi


def remove_redundant(system: System) -> System:
    """Drop rows implied by the others (up to a measure-zero set)."""
    out = system.copy()
    for coeffs in list(out.rows):
        rhs = out.rows.pop(coeffs)
        probe = out.copy()
        # the row is redundant if the rest forces coeffs . v <= rhs on an open set
        probe.add((tuple(-c for c in coeffs), -rhs))
        if feasible(probe, open_=True):
            out.rows[coeffs] = rhs
    return out
