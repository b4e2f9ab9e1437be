"""Structure-descriptor grammar for Hall subgroup shapes.

Descriptors are short strings over a fixed atom vocabulary:

    Z(m)       cyclic of order m          D(m)      dihedral of order m
    Sym(n)     symmetric                  Alt(n)    alternating
    SL2(q)     2x2 special linear         Q8        quaternion of order 8
    GL2(q,s)   2x2 general linear/unitary (s = + or -)
    p^k        elementary/other p-group   plain integers
    named constants: G2(2), Omega7(2), Omega8+(2), W(G2), W(F4), W(E6),
    W(E7), W(E8), M10, M22, L3(4), 2_2 (an order-2 outer class)

joined by the operators

    x  direct product        o   central product (shared central 2)
    :  split extension       .   extension (unspecified)
    wr wreath product (right factor Sym(n) or Z(n) acting on n points)
    / Z(d)  quotient by a central subgroup of order d
    "... cap Alt(n)"  even part (index-2 intersection)

Every atom has a definite order, so a descriptor string evaluates to the
order of the group it names; reports are checked against this evaluator.
"""

from __future__ import annotations

import math
import re
from typing import List

_NAMED_ORDERS = {
    "Q8": 8,
    "G2(2)": 12096,
    "Omega7(2)": 1451520,
    "Omega8+(2)": 174182400,
    "W(G2)": 12,
    "W(F4)": 1152,
    "W(E6)": 51840,
    "W(E7)": 2903040,
    "W(E8)": 696729600,
    "M10": 720,
    "M22": 443520,
    "L3(4)": 20160,
    "2_2": 2,
}

_TOKEN_RE = re.compile(
    r"""
    (?P<atom>
        W\(\w\d\)
      | Omega8\+\(2\) | Omega7\(2\) | G2\(2\) | L3\(4\) | M10 | M22 | Q8 | 2_2
      | Z\(\d+\) | D\(\d+\) | Sym\(\d+\) | Alt\(\d+\) | SL2\(\d+\)
      | GL2\(\d+,[+-]\)
      | \d+\^\d+
      | \d+
    )
    | (?P<op> wr | cap | x | o | : | \. | / )
    | (?P<lpar>\() | (?P<rpar>\))
    | (?P<ws>\s+)
    """,
    re.VERBOSE,
)


class StructureError(ValueError):
    pass


def atom_order(tok: str) -> int:
    if tok in _NAMED_ORDERS:
        return _NAMED_ORDERS[tok]
    m = re.fullmatch(r"Z\((\d+)\)", tok)
    if m:
        return int(m.group(1))
    m = re.fullmatch(r"D\((\d+)\)", tok)
    if m:
        return int(m.group(1))
    m = re.fullmatch(r"Sym\((\d+)\)", tok)
    if m:
        return math.factorial(int(m.group(1)))
    m = re.fullmatch(r"Alt\((\d+)\)", tok)
    if m:
        return math.factorial(int(m.group(1))) // 2
    m = re.fullmatch(r"SL2\((\d+)\)", tok)
    if m:
        q = int(m.group(1))
        return q * (q * q - 1)
    m = re.fullmatch(r"GL2\((\d+),([+-])\)", tok)
    if m:
        q = int(m.group(1))
        eta = 1 if m.group(2) == "+" else -1
        return q * (q - eta) * (q * q - 1)
    m = re.fullmatch(r"(\d+)\^(\d+)", tok)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    m = re.fullmatch(r"\d+", tok)
    if m:
        return int(tok)
    raise StructureError(f"unknown atom {tok!r}")


def _degree(tok: str) -> int:
    """Number of points moved by a wreath top written Sym(n) or Z(n)."""
    m = re.fullmatch(r"(?:Sym|Z)\((\d+)\)", tok)
    if not m:
        raise StructureError(f"wreath top must be Sym(n) or Z(n), got {tok!r}")
    return int(m.group(1))


def _tokenize(s: str) -> List[str]:
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m:
            raise StructureError(f"cannot tokenize {s!r} at position {pos}")
        pos = m.end()
        if m.lastgroup != "ws":
            tokens.append(m.group(0))
    return tokens


def structure_order(s: str) -> int:
    """Order of the group named by a descriptor string.

    Operators associate left to right; parenthesized subexpressions are
    evaluated first.  A central product divides the running product by 2
    (all central products in this grammar identify a common central 2).
    """
    tokens = _tokenize(s)

    def parse(i: int) -> tuple[int, str, int]:
        # returns (order, last-atom-token, next index); last atom drives wr
        value = None
        last_atom = ""
        pending_op = None
        while i < len(tokens):
            tok = tokens[i]
            if tok == ")":
                break
            if tok == "(":
                sub, _, i = parse(i + 1)
                if i >= len(tokens) or tokens[i] != ")":
                    raise StructureError(f"unbalanced parentheses in {s!r}")
                i += 1
                value = _apply(value, pending_op, sub, "", s)
                last_atom = ""
                pending_op = None
                continue
            if tok in ("x", "o", ":", ".", "wr", "/", "cap"):
                if value is None:
                    raise StructureError(f"operator {tok!r} with no left operand in {s!r}")
                pending_op = tok
                i += 1
                continue
            sub = atom_order(tok)
            value = _apply(value, pending_op, sub, tok, s)
            last_atom = tok
            pending_op = None
            i += 1
        if value is None:
            raise StructureError(f"empty descriptor {s!r}")
        if pending_op is not None:
            raise StructureError(f"dangling operator {pending_op!r} in {s!r}")
        return value, last_atom, i

    def _apply(value, op, rhs, rhs_tok, src):
        if value is None:
            if op is not None:
                raise StructureError(f"dangling operator in {src!r}")
            return rhs
        if op is None:
            raise StructureError(f"missing operator in {src!r}")
        if op in ("x", ":", "."):
            return value * rhs
        if op == "o":
            if (value * rhs) % 2 != 0:
                raise StructureError(f"central product of odd orders in {src!r}")
            return value * rhs // 2
        if op == "wr":
            deg = _degree(rhs_tok)
            return value**deg * rhs
        if op == "/":
            if value % rhs != 0:
                raise StructureError(f"quotient does not divide in {src!r}")
            return value // rhs
        if op == "cap":
            if value % 2 != 0:
                raise StructureError(f"even part of odd order in {src!r}")
            return value // 2
        raise StructureError(f"unknown operator {op!r}")

    value, _, i = parse(0)
    if i != len(tokens):
        raise StructureError(f"trailing tokens in {s!r}")
    return value
