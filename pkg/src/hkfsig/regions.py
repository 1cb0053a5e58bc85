"""Symbolic constraint systems for the Hilbert-Kunz and F-signature regions.

Both live in R^(n+2) with coordinates (x, y, z_1, ..., z_n).  A region is a
conjunction of base atoms together with a list of disjunctive clauses.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import EmptyClause
from .fan import ExponentData
from .generators import Generator, generators_for

RELATIONS = {
    ">=": operator.ge,
    ">": operator.gt,
    "<=": operator.le,
    "<": operator.lt,
}
NEGATION = {">=": "<", ">": "<=", "<=": ">", "<": ">="}

HK_BOX_XY = 100
HK_BOX_Z = 500


def variable_names(n: int) -> tuple[str, ...]:
    return ("x", "y") + tuple(f"z{i + 1}" for i in range(n))


@dataclass(frozen=True)
class LinearAtom:
    """``sum(coeffs[j] * v[j]) <relation> constant``."""

    coeffs: tuple[Fraction, ...]
    constant: Fraction
    relation: str

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if not any(self.coeffs):
            raise ValueError("atom has no variables")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "constant", Fraction(self.constant))

    def lhs(self, point: Sequence) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, point) if c), Fraction(0))

    def holds(self, point: Sequence) -> bool:
        return RELATIONS[self.relation](self.lhs(point), self.constant)

    def negated(self) -> "LinearAtom":
        return LinearAtom(self.coeffs, self.constant, NEGATION[self.relation])


@dataclass(frozen=True)
class Clause:
    atoms: tuple[LinearAtom, ...]

    def __post_init__(self):
        if not self.atoms:
            raise EmptyClause("a clause needs at least one atom")

    def holds(self, point: Sequence) -> bool:
        return any(a.holds(point) for a in self.atoms)


@dataclass(frozen=True)
class RegionFormula:
    vars: tuple[str, ...]
    base: tuple[LinearAtom, ...]
    clauses: tuple[Clause, ...] = ()
    box_hints: tuple[Fraction, ...] | None = None
    kind: str = field(default="custom", compare=False)

    @property
    def dim(self) -> int:
        return len(self.vars)

    def holds(self, point: Sequence) -> bool:
        return all(a.holds(point) for a in self.base) and all(c.holds(point) for c in self.clauses)


def _atom(n: int, terms: dict[int, int], relation: str, constant) -> LinearAtom:
    coeffs = [Fraction(0)] * (n + 2)
    for idx, c in terms.items():
        coeffs[idx] += c
    return LinearAtom(tuple(coeffs), Fraction(constant), relation)


X, Y = 0, 1


def _z(i: int) -> int:
    return 2 + i


def initial_constraints(data: ExponentData) -> tuple[LinearAtom, ...]:
    """x >= 0, y >= 0 and z_i >= a_i x, z_i >= b_i y for every i."""
    n = data.n
    atoms = [_atom(n, {X: 1}, ">=", 0), _atom(n, {Y: 1}, ">=", 0)]
    for i, (a, b) in enumerate(zip(data.a, data.b)):
        atoms.append(_atom(n, {_z(i): 1, X: -a}, ">=", 0))
        atoms.append(_atom(n, {_z(i): 1, Y: -b}, ">=", 0))
    return tuple(atoms)


def negation_clause(g: Generator, data: ExponentData) -> Clause:
    """Negate the initial constraints shifted to ``g``.

    Atoms that cannot hold anywhere on the base cone (bounds with a
    non-positive constant) are dropped.
    """
    n = data.n
    atoms = []
    if g.p > 0:
        atoms.append(_atom(n, {X: 1}, "<", g.p))
    if g.q > 0:
        atoms.append(_atom(n, {Y: 1}, "<", g.q))
    for i, (a, b) in enumerate(zip(data.a, data.b)):
        c = g.t[i] - a * g.p
        if c > 0:
            atoms.append(_atom(n, {_z(i): 1, X: -a}, "<", c))
        c = g.t[i] - b * g.q
        if c > 0:
            atoms.append(_atom(n, {_z(i): 1, Y: -b}, "<", c))
    if not atoms:
        raise EmptyClause(f"generator {g} yields an empty clause")
    return Clause(tuple(atoms))


def hk_region(data: ExponentData) -> RegionFormula:
    n = data.n
    clauses = tuple(negation_clause(g, data) for g in generators_for(data))
    box = (Fraction(HK_BOX_XY),) * 2 + (Fraction(HK_BOX_Z),) * n
    return RegionFormula(variable_names(n), initial_constraints(data), clauses, box, kind="hk")


def fsig_region(data: ExponentData) -> RegionFormula:
    """The cell a_i x <= z_i < 1 + a_i x, b_i y <= z_i < 1 + b_i y, with x, y in [0, 1]."""
    n = data.n
    atoms = [
        _atom(n, {X: 1}, ">=", 0),
        _atom(n, {X: 1}, "<=", 1),
        _atom(n, {Y: 1}, ">=", 0),
        _atom(n, {Y: 1}, "<=", 1),
    ]
    for i, (a, b) in enumerate(zip(data.a, data.b)):
        atoms.append(_atom(n, {_z(i): 1, X: -a}, ">=", 0))
        atoms.append(_atom(n, {_z(i): 1, X: -a}, "<", 1))
        atoms.append(_atom(n, {_z(i): 1, Y: -b}, ">=", 0))
        atoms.append(_atom(n, {_z(i): 1, Y: -b}, "<", 1))
    box = (Fraction(1),) * 2 + tuple(Fraction(5 * max(a, b)) for a, b in zip(data.a, data.b))
    return RegionFormula(variable_names(n), tuple(atoms), (), box, kind="fsig")
