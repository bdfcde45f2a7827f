"""Propositional MTL formulas: AST, parser, printer and schemata.

Only the four primitive connectives are stored.  Negation, disjunction,
the constant 1 and powers are expanded when a formula is built::

    ~a      ==>  a -> 0
    a \\/ b  ==>  ((a -> b) -> b) /\\ ((b -> a) -> a)
    1       ==>  0 -> 0
    a^3     ==>  (a & a) & a
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from .errors import FormulaSyntaxError, PowerZero

__all__ = [
    "Var", "Bot", "Conj", "Meet", "Impl", "Formula", "BOT", "TOP",
    "neg", "disj", "power", "parse", "show", "variables", "substitute",
    "depth", "size", "subformulas", "axiom_schemata", "schema", "instantiate",
    "random_formula",
]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Conj:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Meet:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Impl:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Bot, Conj, Meet, Impl]
Binary = (Conj, Meet, Impl)

BOT = Bot()
TOP = Impl(BOT, BOT)


def neg(f: Formula) -> Formula:
    return Impl(f, BOT)


def disj(a: Formula, b: Formula) -> Formula:
    return Meet(Impl(Impl(a, b), b), Impl(Impl(b, a), a))


def power(f: Formula, k: int) -> Formula:
    """``f & f & ... & f`` with k copies, nested to the left."""
    if k < 1:
        raise ValueError("power exponent must be positive")
    out = f
    for _ in range(k - 1):
        out = Conj(out, f)
    return out


# ---------------------------------------------------------------- lexer

_TOKEN = re.compile(
    r"\s*(?:(?P<op>->|/\\|\\/|[&~^()])|(?P<int>\d+)|(?P<var>[A-Za-z][A-Za-z0-9_]*))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise FormulaSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        if not text.isascii():
            bad = next(i for i, c in enumerate(text) if not c.isascii())
            raise FormulaSyntaxError("non-ASCII input", bad)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.take()
        if text != value or kind == "eof":
            found = "end of input" if kind == "eof" else repr(text)
            raise FormulaSyntaxError(f"expected {value!r}, found {found}", pos)

    def formula(self) -> Formula:
        f = self.impl()
        kind, text, pos = self.peek()
        if kind != "eof":
            raise FormulaSyntaxError(f"unexpected {text!r}", pos)
        return f

    def impl(self) -> Formula:
        left = self.junct()
        if self.peek()[1] == "->":
            self.take()
            return Impl(left, self.impl())
        return left

    def junct(self) -> Formula:
        f = self.conj()
        op = None
        while self.peek()[1] in ("/\\", "\\/"):
            kind, text, pos = self.take()
            if op is not None and text != op:
                raise FormulaSyntaxError(
                    "mixing /\\ and \\/ requires parentheses", pos
                )
            op = text
            rhs = self.conj()
            f = Meet(f, rhs) if op == "/\\" else disj(f, rhs)
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek()[1] == "&":
            self.take()
            f = Conj(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.peek()[1] == "~":
            self.take()
            return neg(self.unary())
        f = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, text, pos = self.take()
            if kind != "int":
                raise FormulaSyntaxError("expected exponent after '^'", pos)
            k = int(text)
            if k == 0:
                raise PowerZero("exponent 0 is not allowed", pos)
            f = power(f, k)
        return f

    def atom(self) -> Formula:
        kind, text, pos = self.take()
        if kind == "var":
            return Var(text)
        if kind == "int":
            if text == "0":
                return BOT
            if text == "1":
                return TOP
            raise FormulaSyntaxError(f"constant {text} is not 0 or 1", pos)
        if text == "(":
            f = self.impl()
            self.expect(")")
            return f
        found = "end of input" if kind == "eof" else repr(text)
        raise FormulaSyntaxError(f"unexpected {found}", pos)


def parse(text: str) -> Formula:
    """Parse a formula string into its primitive-connective tree.

    Raises FormulaSyntaxError (with ``pos``) on malformed input and
    PowerZero for ``^0``.
    """
    return _Parser(text).formula()


# -------------------------------------------------------------- printer

_SYMBOL = {Conj: "&", Meet: "/\\", Impl: "->"}
_LEVEL = {Impl: 1, Meet: 2, Conj: 3}


def show(f: Formula, full: bool = True) -> str:
    """Render ``f``; ``full=False`` drops parentheses the grammar can infer."""
    if full:
        return _show_full(f)
    return _show_min(f)


def _show_full(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Bot):
        return "0"
    return f"({_show_full(f.left)} {_SYMBOL[type(f)]} {_show_full(f.right)})"


def _level(f: Formula) -> int:
    return _LEVEL.get(type(f), 4)


def _show_min(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Bot):
        return "0"
    lvl = _LEVEL[type(f)]
    left, right = _show_min(f.left), _show_min(f.right)
    if isinstance(f, Impl):
        # right-associative
        if _level(f.left) <= lvl:
            left = f"({left})"
        if _level(f.right) < lvl:
            right = f"({right})"
    else:
        if _level(f.left) < lvl:
            left = f"({left})"
        if _level(f.right) <= lvl:
            right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


# ------------------------------------------------------ structural tools

def subformulas(f: Formula) -> Iterator[Formula]:
    """Post-order traversal; shared subtrees are visited once."""
    seen = set()
    stack = [(f, False)]
    while stack:
        g, expanded = stack.pop()
        if id(g) in seen:
            continue
        if expanded or not isinstance(g, Binary):
            seen.add(id(g))
            yield g
            continue
        stack.append((g, True))
        stack.append((g.right, False))
        stack.append((g.left, False))


def variables(f: Formula) -> tuple[str, ...]:
    """Sorted tuple of the variable names occurring in ``f``."""
    return tuple(sorted({g.name for g in subformulas(f) if isinstance(g, Var)}))


def depth(f: Formula) -> int:
    memo: dict[int, int] = {}
    for g in subformulas(f):
        if isinstance(g, Binary):
            memo[id(g)] = 1 + max(memo[id(g.left)], memo[id(g.right)])
        else:
            memo[id(g)] = 0
    return memo[id(f)]


def size(f: Formula) -> int:
    """Number of nodes in the tree, counting shared subtrees each time."""
    memo: dict[int, int] = {}
    for g in subformulas(f):
        if isinstance(g, Binary):
            memo[id(g)] = 1 + memo[id(g.left)] + memo[id(g.right)]
        else:
            memo[id(g)] = 1
    return memo[id(f)]


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    memo: dict[int, Formula] = {}
    for g in subformulas(f):
        if isinstance(g, Var):
            memo[id(g)] = mapping.get(g.name, g)
        elif isinstance(g, Bot):
            memo[id(g)] = g
        else:
            memo[id(g)] = type(g)(memo[id(g.left)], memo[id(g.right)])
    return memo[id(f)]


# ------------------------------------------------------------ schemata

METAVARIABLES = ("phi", "psi", "chi")

_SCHEMATA = {
    "A1": "(phi -> psi) -> ((psi -> chi) -> (phi -> chi))",
    "A2": "(phi & psi) -> phi",
    "A3": "(phi & psi) -> (psi & phi)",
    "A4": "(phi /\\ psi) -> phi",
    "A5": "(phi /\\ psi) -> (psi /\\ phi)",
    "A6": "(phi & (phi -> psi)) -> (psi /\\ phi)",
    "A7a": "(phi -> (psi -> chi)) -> ((phi & psi) -> chi)",
    "A7b": "((phi & psi) -> chi) -> (phi -> (psi -> chi))",
    "A8": "((phi -> psi) -> chi) -> (((psi -> phi) -> chi) -> chi)",
    "A9": "0 -> phi",
    "prelin": "(phi -> psi) \\/ (psi -> phi)",
}


def axiom_schemata() -> list[tuple[str, Formula]]:
    """The MTL axiom schemata A1-A9 (A7 in both directions) and prelinearity.

    Templates use the metavariables ``phi``, ``psi`` and ``chi``; fill them
    with :func:`instantiate`.
    """
    return [(name, parse(text)) for name, text in _SCHEMATA.items()]


def schema(name: str) -> Formula:
    try:
        return parse(_SCHEMATA[name])
    except KeyError:
        raise KeyError(f"unknown schema {name!r}") from None


def instantiate(template: Formula, **mapping: Formula) -> Formula:
    unknown = set(mapping) - set(METAVARIABLES)
    if unknown:
        raise KeyError(f"not a metavariable: {sorted(unknown)}")
    return substitute(template, mapping)


def random_formula(rng: random.Random, names: Sequence[str], max_depth: int,
                   derived: bool = True) -> Formula:
    """Random formula with at most ``max_depth`` surface connectives nested.

    With ``derived`` the surface connectives include negation and
    disjunction, which expand as usual.
    """
    if max_depth <= 0 or rng.random() < 0.25:
        if rng.random() < 0.1:
            return BOT if rng.random() < 0.5 else TOP
        return Var(rng.choice(list(names)))
    ops = ["&", "/\\", "->"] + (["~", "\\/"] if derived else [])
    op = rng.choice(ops)
    if op == "~":
        return neg(random_formula(rng, names, max_depth - 1, derived))
    a = random_formula(rng, names, max_depth - 1, derived)
    b = random_formula(rng, names, max_depth - 1, derived)
    if op == "&":
        return Conj(a, b)
    if op == "->":
        return Impl(a, b)
    return Meet(a, b) if op == "/\\" else disj(a, b)
