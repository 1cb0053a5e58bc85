"""Exact volumes of regions given as base constraints plus disjunctive clauses.

The region is split into pairwise disjoint convex cells by Shannon expansion
(clause ``A1 or ... or Ak`` becomes the disjoint cases ``A1``, ``not A1 and A2``,
...), pruning branches whose interior is empty.  Each cell is then integrated
exactly.  Strict and non-strict relations are treated alike throughout: the
difference is a null set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from . import poly as P
from .errors import UnboundedCell, UnboundedRegion
from .fan import ExponentData
from .linear import Row, System, bounds, feasible, make_row, remove_redundant
from .regions import LinearAtom, RegionFormula, fsig_region, hk_region


def atom_row(atom: LinearAtom) -> Row:
    if atom.relation in ("<=", "<"):
        return make_row(atom.coeffs, atom.constant)
    return make_row([-c for c in atom.coeffs], -atom.constant)


def negate_row(row: Row) -> Row:
    coeffs, rhs = row
    return tuple(-c for c in coeffs), -rhs


@dataclass(frozen=True)
class ConvexCell:
    """Closed polyhedron ``{v : coeffs . v <= rhs for every row}``."""

    dim: int
    rows: tuple[Row, ...]

    @classmethod
    def from_atoms(cls, atoms: Sequence[LinearAtom], dim: int | None = None) -> "ConvexCell":
        dim = len(atoms[0].coeffs) if dim is None else dim
        return cls(dim, tuple(atom_row(a) for a in atoms))

    @classmethod
    def from_system(cls, system: System) -> "ConvexCell":
        return cls(system.dim, tuple(system))

    def system(self) -> System:
        return System(self.dim, self.rows)

    def contains(self, point: Sequence) -> bool:
        return all(
            sum((c * Fraction(v) for c, v in zip(coeffs, point)), Fraction(0)) <= rhs
            for coeffs, rhs in self.rows
        )

    def atoms(self) -> tuple[LinearAtom, ...]:
        return tuple(LinearAtom(tuple(map(Fraction, c)), r, "<=") for c, r in self.rows)


def is_feasible(cell: ConvexCell) -> bool:
    return feasible(cell.system())


def is_bounded(cell: ConvexCell) -> bool:
    """True iff the recession cone ``{d : coeffs . d <= 0}`` is trivial."""
    cone = [(c, Fraction(0)) for c, _ in cell.rows]
    for k in range(cell.dim):
        for sign in (1, -1):
            probe = System(cell.dim, cone)
            e = [0] * cell.dim
            e[k] = -sign
            probe.add((tuple(e), Fraction(-1)))
            if feasible(probe):
                return False
    return True


# ---------------------------------------------------------------------------
# Shannon expansion


def _clause_rows(region: RegionFormula) -> list[list[Row]]:
    return [[atom_row(a) for a in clause.atoms] for clause in region.clauses]


def _with(system: System, *rows: Row) -> System:
    s = system.copy()
    for r in rows:
        s.add(r)
    return s


def iter_cells(region: RegionFormula) -> Iterator[ConvexCell]:
    base = System(region.dim, (atom_row(a) for a in region.base))
    if not feasible(base, open_=True):
        return
    clauses = _clause_rows(region)

    def expand(system: System, idx: int):
        while idx < len(clauses):
            live = []
            satisfied = False
            for row in clauses[idx]:
                if not feasible(_with(system, row), open_=True):
                    continue
                if not feasible(_with(system, negate_row(row)), open_=True):
                    satisfied = True
                    break
                live.append(row)
            if satisfied:
                idx += 1
                continue
            if not live:
                return
            for j, row in enumerate(live):
                child = _with(system, row, *(negate_row(r) for r in live[:j]))
                if j == 0 or feasible(child, open_=True):
                    yield from expand(child, idx + 1)
            return
        yield ConvexCell.from_system(system)

    yield from expand(base, 0)


def shannon_cells(region: RegionFormula) -> list[ConvexCell]:
    return list(iter_cells(region))


# ---------------------------------------------------------------------------
# exact integration of a single cell


def _bound_form(coeffs, rhs, k):
    """Solve ``coeffs . v <= rhs`` for variable ``k`` as a linear form."""
    ck = coeffs[k]
    return {j: Fraction(-c, ck) for j, c in enumerate(coeffs) if c and j != k}, rhs / ck


def _form_row(upper, lower, dim) -> tuple[list[Fraction], Fraction]:
    """Row expressing ``lower_form <= upper_form``."""
    coeffs = [Fraction(0)] * dim
    for j, c in lower[0].items():
        coeffs[j] += c
    for j, c in upper[0].items():
        coeffs[j] -= c
    return coeffs, upper[1] - lower[1]


def _integrate(system: System, integrand: P.Poly, remaining: list[int]) -> Fraction:
    k = remaining[-1]
    dim = system.dim
    uppers, lowers, rest = [], [], []
    for coeffs, rhs in system:
        c = coeffs[k]
        if c > 0:
            uppers.append(_bound_form(coeffs, rhs, k))
        elif c < 0:
            lowers.append(_bound_form(coeffs, rhs, k))
        else:
            rest.append((coeffs, rhs))
    if not uppers or not lowers:
        raise UnboundedCell(f"variable {k} is unbounded")
    anti = P.antiderivative(integrand, k)

    if len(remaining) == 1:
        lo = max(f[1] for f in lowers)
        hi = min(f[1] for f in uppers)
        if hi <= lo:
            return Fraction(0)
        coeffs = [Fraction(0)] * (max((e[k] for e in integrand), default=0) + 1)
        for e, c in integrand.items():
            coeffs[e[k]] += c
        return P.integrate_univariate(coeffs, lo, hi)

    total = Fraction(0)
    single = len(uppers) == 1 and len(lowers) == 1
    for ui, u in enumerate(uppers):
        for li, l in enumerate(lowers):
            sub = System(dim, rest)
            for uj, u2 in enumerate(uppers):
                if uj != ui:
                    sub.add_raw(*_form_row(u2, u, dim))
            for lj, l2 in enumerate(lowers):
                if lj != li:
                    sub.add_raw(*_form_row(l, l2, dim))
            sub.add_raw(*_form_row(u, l, dim))
            if sub.infeasible:
                continue
            if not single and not feasible(sub, open_=True):
                continue
            g = P.substitute(anti, k, u, dim)
            P.add_into(g, P.substitute(anti, k, l, dim), -1)
            if g:
                total += _integrate(sub, g, remaining[:-1])
    return total


def _substitute_value(system: System, k: int, value: Fraction) -> System:
    out = System(system.dim)
    for coeffs, rhs in system:
        c = coeffs[k]
        if c == 0:
            out.add((coeffs, rhs))
            continue
        new = list(coeffs)
        new[k] = 0
        out.add_raw(new, rhs - c * value)
    return out


def _solve(rows: Sequence[Row], variables: list[int]) -> list[Fraction] | None:
    """Unique intersection point of the hyperplanes, restricted to ``variables``."""
    m = len(variables)
    mat = [[Fraction(coeffs[v]) for v in variables] + [rhs] for coeffs, rhs in rows]
    for col in range(m):
        piv = next((r for r in range(col, m) if mat[r][col] != 0), None)
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        for r in range(m):
            if r != col and mat[r][col] != 0:
                f = mat[r][col] / mat[col][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    return [mat[i][m] / mat[i][i] for i in range(m)]


def _slice_volume(system: System, remaining: list[int], extra: Sequence[Fraction]) -> Fraction:
    if system.infeasible:
        return Fraction(0)
    t = remaining[-1]
    d = len(remaining)
    if not feasible(system):
        return Fraction(0)
    lo, hi = bounds(system, t)
    if lo is None or hi is None:
        raise UnboundedCell(f"variable {t} is unbounded")
    if hi <= lo:
        return Fraction(0)
    if d == 1:
        return hi - lo
    breaks = {lo, hi}
    breaks.update(b for b in extra if lo < b < hi)
    rows = [r for r in system if any(r[0][v] for v in remaining)]
    pos = remaining.index(t)
    for subset in combinations(rows, d):
        sol = _solve(subset, remaining)
        if sol is not None and lo < sol[pos] < hi:
            breaks.add(sol[pos])
    breaks = sorted(breaks)
    total = Fraction(0)
    for t0, t1 in zip(breaks, breaks[1:]):
        step = (t1 - t0) / (d + 1)
        ts = [t0 + j * step for j in range(1, d + 1)]
        vals = [_slice_volume(_substitute_value(system, t, s), remaining[:-1], ()) for s in ts]
        total += P.integrate_univariate(P.interpolate(ts, vals), t0, t1)
    return total


def cell_volume(
    cell: ConvexCell,
    method: str = "eliminate",
    order: Sequence[int] | None = None,
    extra_breakpoints: Sequence[Fraction] = (),
) -> Fraction:
    """Exact volume of a bounded convex cell.

    ``method="eliminate"`` integrates out one variable at a time, splitting the
    remaining polyhedron by which upper and lower bounds are active.
    ``method="slice"`` integrates piecewise-polynomial slice volumes, sampling
    each piece at interior points and interpolating; ``extra_breakpoints``
    apply to its outermost variable.  ``order`` lists variables in the order
    they are integrated out last-to-first (default: the natural order).
    """
    if not is_bounded(cell):
        raise UnboundedCell("cell has a nontrivial recession cone")
    system = cell.system()
    if not feasible(system, open_=True):
        return Fraction(0)
    remaining = list(order) if order is not None else list(range(cell.dim))
    if method == "slice":
        return _slice_volume(system, remaining, extra_breakpoints)
    if method != "eliminate":
        raise ValueError(f"unknown method {method!r}")
    system = remove_redundant(system)
    return _integrate(system, P.constant(1, cell.dim), remaining)


def region_volume(region: RegionFormula, method: str = "eliminate") -> Fraction:
    total = Fraction(0)
    for cell in iter_cells(region):
        if not is_bounded(cell):
            raise UnboundedRegion("region contains an unbounded cell")
        total += cell_volume(cell, method=method)
    return total


def compute_invariants(data: ExponentData) -> tuple[Fraction, Fraction]:
    """Hilbert-Kunz multiplicity and F-signature of the intersection algebra."""
    return region_volume(hk_region(data)), region_volume(fsig_region(data))
