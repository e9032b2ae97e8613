"""Expression grammar for scalars, torus elements and h_q elements.

Grammar (``*`` is mandatory, ``^`` binds tighter than ``*`` and ``/``)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ["-"] atom ["^" int]
    atom   := "q" | "t" | "Q" | "u" | "v" | digits | "(" expr ")"
    int    := ["-"] digits

The divisor of ``/`` must be a scalar.  The target ring is inferred from the
generators used: t/Q -> torus, u/v -> h_q, neither -> Q(q).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .qscalar import QScalar, _poly_terms

__all__ = [
    "ExprError",
    "Num",
    "Gen",
    "Neg",
    "BinOp",
    "Pow",
    "parse",
    "evaluate",
    "parse_element",
    "family_of",
    "format_scalar",
    "format_element",
]

TORUS_GENS = frozenset("tQ")
HOPF_GENS = frozenset("uv")


class ExprError(ValueError):
    """Syntax or typing error in an expression; ``pos`` is a 0-based offset."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Gen:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: int = 0


_TOKEN = re.compile(r"\s*(?:(\d+)|([qtQuv])|([-+*/^()]))")


def _tokenize(src):
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if not m:
            raise ExprError(f"unexpected character {src[pos]!r}", pos)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("", n))
    return tokens


class _Parser:
    def __init__(self, src):
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self):
        return self.tokens[self.i][1]

    def take(self, expected=None):
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            shown = repr(tok) if tok else "end of input"
            raise ExprError(f"expected {expected!r}, found {shown}", pos)
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            pos = self.pos()
            op = self.take()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.factor()
        while self.peek() in ("*", "/"):
            pos = self.pos()
            op = self.take()
            node = BinOp(op, node, self.factor(), pos)
        return node

    def factor(self):
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        node = self.atom()
        if self.peek() == "^":
            pos = self.pos()
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok, tpos = self.tokens[self.i]
            if not tok.isdigit():
                raise ExprError("exponent must be an integer literal", tpos)
            self.take()
            exp = sign * int(tok)
            if isinstance(node, Gen) and node.name == "v" and exp < 0:
                raise ExprError("negative power of v is not allowed", pos)
            node = Pow(node, exp, pos)
        return Neg(node) if neg else node

    def atom(self):
        tok, pos = self.tokens[self.i]
        if tok.isdigit():
            self.take()
            return Num(int(tok))
        if tok and tok in "qtQuv":
            self.take()
            return Gen(tok, pos)
        if tok == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        shown = repr(tok) if tok else "end of input"
        raise ExprError(f"unexpected {shown}", pos)


def _generators(node, acc):
    if isinstance(node, Gen):
        acc.append(node)
    elif isinstance(node, Neg):
        _generators(node.arg, acc)
    elif isinstance(node, BinOp):
        _generators(node.left, acc)
        _generators(node.right, acc)
    elif isinstance(node, Pow):
        _generators(node.base, acc)
    return acc


def family_of(node):
    """'torus', 'hopf' or 'scalar', raising ExprError on mixed generators."""
    gens = _generators(node, [])
    torus = [g for g in gens if g.name in TORUS_GENS]
    hopf = [g for g in gens if g.name in HOPF_GENS]
    if torus and hopf:
        bad = max(torus[0], hopf[0], key=lambda g: g.pos)
        raise ExprError("cannot mix t/Q with u/v in one expression", bad.pos)
    if torus:
        return "torus"
    if hopf:
        return "hopf"
    return "scalar"


def parse(src: str):
    """Parse ``src`` into an AST; checks generator families up front."""
    p = _Parser(src)
    node = p.expr()
    if p.peek():
        raise ExprError(f"unexpected {p.peek()!r}", p.pos())
    family_of(node)
    return node


def _element_class(family):
    if family == "torus":
        from .qtorus import TorusElement

        return TorusElement
    if family == "hopf":
        from .hopf import HopfElement

        return HopfElement
    return None


def evaluate(node, family=None):
    """Evaluate an AST to a QScalar, TorusElement or HopfElement."""
    fam = family_of(node)
    if family is not None and fam != "scalar" and fam != family:
        raise ExprError(f"expression lives in the {fam} ring, not {family}")
    cls = _element_class(family or fam)
    out = _eval(node, cls)
    if cls is not None and isinstance(out, QScalar):
        out = cls.scalar(out)
    return out


def _eval(node, cls):
    from .qtorus import monomial_inverse

    if isinstance(node, Num):
        return QScalar(node.value)
    if isinstance(node, Gen):
        if node.name == "q":
            return QScalar((0, 1))
        if node.name in ("t", "u"):
            return cls.monomial(1, 0)
        return cls.monomial(0, 1)
    if isinstance(node, Neg):
        return -_eval(node.arg, cls)
    if isinstance(node, Pow):
        base = _eval(node.base, cls)
        if isinstance(base, QScalar):
            if not base and node.exp < 0:
                raise ExprError("zero raised to a negative power", node.pos)
            return base ** node.exp
        if node.exp < 0:
            if not base.is_monomial():
                raise ExprError("only single terms can be raised to negative powers", node.pos)
            try:
                return monomial_inverse(base) ** (-node.exp)
            except ValueError as exc:
                raise ExprError(str(exc), node.pos) from None
        return base ** node.exp
    left = _eval(node.left, cls)
    right = _eval(node.right, cls)
    if node.op == "/":
        if not isinstance(right, QScalar):
            raise ExprError("divisor must be a scalar in q", node.pos)
        if not right:
            raise ExprError("division by zero", node.pos)
        return left * right.inv() if isinstance(left, QScalar) else left.scale(right.inv())
    if node.op == "*":
        if isinstance(left, QScalar) and not isinstance(right, QScalar):
            return right.scale(left)
        return left * right
    if node.op == "+":
        return left + right if not isinstance(left, QScalar) else right + left
    if isinstance(left, QScalar) and not isinstance(right, QScalar):
        return (-right) + left
    return left - right


def parse_element(src: str, family=None):
    return evaluate(parse(src), family)


# --- formatting -------------------------------------------------------------

def format_scalar(c: QScalar) -> str:
    return str(c)


def _coeff_prefix(c: QScalar) -> str:
    """Render c so that c_str + '*' + monomial parses back to c*monomial."""
    s = str(c)
    if c._d == (1,) and _poly_terms(c._n) > 1:
        return f"({s})"
    return s


def _mono_str(names, i, j):
    parts = []
    for name, e in ((names[0], i), (names[1], j)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _term_str(names, key, c, many):
    mono = _mono_str(names, *key)
    if not mono:
        s = str(c)
        if many and c._d == (1,) and _poly_terms(c._n) > 1:
            return f"({s})"
        return s
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{_coeff_prefix(c)}*{mono}"


def format_element(x) -> str:
    """Normal-form rendering that :func:`parse_element` reads back exactly."""
    if isinstance(x, QScalar):
        return str(x)
    items = x.sorted_terms()
    if not items:
        return "0"
    many = len(items) > 1
    out = ""
    for n, (key, c) in enumerate(items):
        s = _term_str(x.NAMES, key, c, many)
        if n == 0:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out
