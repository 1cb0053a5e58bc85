"""Export regions as Wolfram ``Integrate[Boole[...]]`` text or as JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import NameOverflow
from .regions import Clause, LinearAtom, RegionFormula

SCHEMA = "hk-fsig/1"
SHORT_NAMES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class ExportOptions:
    format: str = "wolfram"
    names: str = "indexed"  # or "short"
    box: Mapping[str, Fraction] | None = None


def display_names(region: RegionFormula, names: str) -> tuple[str, ...]:
    if names == "short":
        if region.dim > len(SHORT_NAMES):
            raise NameOverflow(f"short names x, y, z, w only cover n <= 2, region has n = {region.dim - 2}")
        return SHORT_NAMES[: region.dim]
    if names != "indexed":
        raise ValueError(f"unknown naming scheme {names!r}")
    return region.vars


def _num(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term(c: Fraction, name: str) -> str:
    if c.denominator == 1:
        return f"{c.numerator}*{name}"
    return f"({_num(c)})*{name}"


def _sum(terms: list[tuple[Fraction, str]], constant: Fraction, constant_first: bool) -> str:
    parts = [(c, _term(abs(c), n)) for c, n in terms]
    if constant:
        const = (constant, _num(abs(constant)))
        parts = [const] + parts if constant_first else parts + [const]
    if not parts:
        return "0"
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for c, text in parts[1:]:
        out += (" - " if c < 0 else " + ") + text
    return out


def render_atom(atom: LinearAtom, names, constant_first: bool = False) -> str:
    """``subject REL rest`` where the subject is the last variable with coefficient 1."""
    subject = next((j for j in reversed(range(len(names))) if atom.coeffs[j] == 1), None)
    if subject is None:
        lhs = _sum([(c, names[j]) for j, c in enumerate(atom.coeffs) if c], Fraction(0), False)
        return f"{lhs} {atom.relation} {_num(atom.constant)}"
    rest = [(-c, names[j]) for j, c in enumerate(atom.coeffs) if c and j != subject]
    return f"{names[subject]} {atom.relation} {_sum(rest, atom.constant, constant_first)}"


def _clause_text(clause: Clause, names) -> str:
    return " || ".join(render_atom(a, names) for a in clause.atoms)


def to_wolfram(region: RegionFormula, opts: ExportOptions = ExportOptions()) -> str:
    names = display_names(region, opts.names)
    constant_first = region.kind == "fsig"
    base = " && ".join(render_atom(a, names, constant_first) for a in region.base)
    if region.clauses:
        body = f"(({base}))" + "".join(f" && (({_clause_text(c, names)}))" for c in region.clauses)
    else:
        body = base
    box = list(region.box_hints) if region.box_hints is not None else [Fraction(1)] * region.dim
    if opts.box:
        for key, value in opts.box.items():
            idx = names.index(key) if key in names else region.vars.index(key)
            box[idx] = Fraction(value)
    bounds = ", ".join(f"{{{n}, 0, {_num(Fraction(b))}}}" for n, b in zip(names, box))
    return f"Integrate[Boole[{body}], {bounds}]"


def _atom_json(atom: LinearAtom) -> dict:
    return {
        "coeffs": [_num(c) for c in atom.coeffs],
        "constant": _num(atom.constant),
        "relation": atom.relation,
    }


def _atom_from_json(doc: dict) -> LinearAtom:
    return LinearAtom(
        tuple(Fraction(c) for c in doc["coeffs"]), Fraction(doc["constant"]), doc["relation"]
    )


def to_json(region: RegionFormula, indent: int | None = 2) -> str:
    doc = {
        "schema": SCHEMA,
        "kind": region.kind,
        "variables": list(region.vars),
        "base": [_atom_json(a) for a in region.base],
        "clauses": [[_atom_json(a) for a in c.atoms] for c in region.clauses],
        "box_hints": None if region.box_hints is None else [_num(b) for b in region.box_hints],
    }
    return json.dumps(doc, indent=indent)


def from_json(text: str) -> RegionFormula:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    box = doc.get("box_hints")
    return RegionFormula(
        tuple(doc["variables"]),
        tuple(_atom_from_json(a) for a in doc["base"]),
        tuple(Clause(tuple(_atom_from_json(a) for a in c)) for c in doc["clauses"]),
        None if box is None else tuple(Fraction(b) for b in box),
        kind=doc.get("kind", "custom"),
    )
