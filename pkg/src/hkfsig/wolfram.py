"""A small reader for the Wolfram subset that :mod:`hkfsig.emit` writes.

It understands ``Integrate[Boole[expr], {v, lo, hi}, ...]`` where ``expr``
combines linear (in)equalities, possibly chained, with ``&&``, ``||`` and
parentheses.  That is enough to evaluate exported text at points without a
Mathematica kernel, and to read back printed systems for comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .regions import Clause, LinearAtom, RegionFormula

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z][A-Za-z0-9]*|&&|\|\||>=|<=|==|[<>+\-*/()\[\]{},])")
_RELOPS = {"<", "<=", ">", ">=", "=="}


def tokenize(text: str) -> list[str]:
    text = text.strip()
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise SyntaxError(f"unexpected character {text[pos]!r} at {pos}")
        out.append(m.group(1))
        pos = m.end()
    return out


# AST nodes are tuples: ("num", Fraction) ("var", name) ("neg", e) ("+"|"-"|"*"|"/", l, r)
# ("cmp", [e0, e1, ...], [op0, ...]) ("and", [..]) ("or", [..])


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise SyntaxError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self):
        terms = [self.conj()]
        while self.peek() == "||":
            self.take()
            terms.append(self.conj())
        return terms[0] if len(terms) == 1 else ("or", terms)

    def conj(self):
        terms = [self.comparison()]
        while self.peek() == "&&":
            self.take()
            terms.append(self.comparison())
        return terms[0] if len(terms) == 1 else ("and", terms)

    def comparison(self):
        operands = [self.additive()]
        ops = []
        while self.peek() in _RELOPS:
            ops.append(self.take())
            operands.append(self.additive())
        return operands[0] if not ops else ("cmp", operands, ops)

    def additive(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            node = (op, node, self.unary())
        return node

    def unary(self):
        if self.peek() == "-":
            self.take()
            return ("neg", self.unary())
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.primary()

    def primary(self):
        tok = self.take()
        if tok == "(":
            node = self.expr()
            self.take(")")
            return node
        if tok.isdigit():
            return ("num", Fraction(int(tok)))
        if tok[0].isalpha():
            return ("var", tok)
        raise SyntaxError(f"unexpected token {tok!r}")


@dataclass(frozen=True)
class WolframIntegral:
    formula: tuple
    names: tuple[str, ...]
    bounds: tuple[tuple[Fraction, Fraction], ...]

    def holds(self, point) -> bool:
        return evaluate(self.formula, dict(zip(self.names, map(Fraction, point))))


def parse_expression(text: str):
    p = _Parser(tokenize(text))
    node = p.expr()
    if p.peek() is not None:
        raise SyntaxError(f"trailing input at token {p.peek()!r}")
    return node


def parse_integrate(text: str) -> WolframIntegral:
    p = _Parser(tokenize(text))
    p.take("Integrate")
    p.take("[")
    p.take("Boole")
    p.take("[")
    formula = p.expr()
    p.take("]")
    names, bounds = [], []
    while p.peek() == ",":
        p.take()
        p.take("{")
        names.append(p.take())
        p.take(",")
        lo = _constant(p.additive())
        p.take(",")
        hi = _constant(p.additive())
        p.take("}")
        bounds.append((lo, hi))
    p.take("]")
    return WolframIntegral(formula, tuple(names), tuple(bounds))


def _constant(node) -> Fraction:
    coeffs, const = linear_form(node)
    if any(coeffs.values()):
        raise SyntaxError("integration bound is not a constant")
    return const


def linear_form(node) -> tuple[dict[str, Fraction], Fraction]:
    kind = node[0]
    if kind == "num":
        return {}, node[1]
    if kind == "var":
        return {node[1]: Fraction(1)}, Fraction(0)
    if kind == "neg":
        c, k = linear_form(node[1])
        return {v: -x for v, x in c.items()}, -k
    if kind in ("+", "-"):
        c1, k1 = linear_form(node[1])
        c2, k2 = linear_form(node[2])
        sign = 1 if kind == "+" else -1
        out = dict(c1)
        for v, x in c2.items():
            out[v] = out.get(v, 0) + sign * x
        return out, k1 + sign * k2
    if kind in ("*", "/"):
        c1, k1 = linear_form(node[1])
        c2, k2 = linear_form(node[2])
        if kind == "/":
            if any(c2.values()):
                raise SyntaxError("division by a non-constant")
            return {v: x / k2 for v, x in c1.items()}, k1 / k2
        if any(c1.values()) and any(c2.values()):
            raise SyntaxError("product of two non-constants")
        if any(c1.values()):
            return {v: x * k2 for v, x in c1.items()}, k1 * k2
        return {v: x * k1 for v, x in c2.items()}, k1 * k2
    raise SyntaxError(f"not an arithmetic expression: {kind}")


def _value(node, env: Mapping[str, Fraction]) -> Fraction:
    coeffs, const = linear_form(node)
    return const + sum((x * env[v] for v, x in coeffs.items()), Fraction(0))


_CMP = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
}


def evaluate(node, env: Mapping[str, Fraction]) -> bool:
    kind = node[0]
    if kind == "and":
        return all(evaluate(t, env) for t in node[1])
    if kind == "or":
        return any(evaluate(t, env) for t in node[1])
    if kind == "cmp":
        vals = [_value(e, env) for e in node[1]]
        return all(_CMP[op](l, r) for op, l, r in zip(node[2], vals, vals[1:]))
    raise SyntaxError(f"not a boolean expression: {kind}")


def _atoms_of_cmp(node, names) -> list[LinearAtom]:
    out = []
    operands, ops = node[1], node[2]
    for op, left, right in zip(ops, operands, operands[1:]):
        cl, kl = linear_form(left)
        cr, kr = linear_form(right)
        coeffs = tuple(cl.get(n, 0) - cr.get(n, 0) for n in names)
        if op == "==":
            raise SyntaxError("equalities are not supported in regions")
        out.append(LinearAtom(coeffs, kr - kl, op))
    return out


def _flatten(node, kind):
    if node[0] == kind:
        for t in node[1]:
            yield from _flatten(t, kind)
    else:
        yield node


def to_region(integral: WolframIntegral) -> RegionFormula:
    """Read a conjunction of comparisons and disjunctions of comparisons."""
    names = integral.names
    base, clauses = [], []
    for term in _flatten(integral.formula, "and"):
        if term[0] == "cmp":
            base.extend(_atoms_of_cmp(term, names))
        elif term[0] == "or":
            atoms = []
            for alt in _flatten(term, "or"):
                if alt[0] != "cmp" or len(alt[2]) != 1:
                    raise SyntaxError("clause members must be single comparisons")
                atoms.extend(_atoms_of_cmp(alt, names))
            clauses.append(Clause(tuple(atoms)))
        else:
            raise SyntaxError(f"unsupported term {term[0]}")
    box = tuple(hi for _, hi in integral.bounds)
    return RegionFormula(tuple(names), tuple(base), tuple(clauses), box)
