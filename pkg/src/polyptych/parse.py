"""Parser for polynomial expressions such as ``x1*x2 - y1^2 - 1``.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := number ['/' number] | ident ['^' ['-'] number]

A parsed expression is a list of ``(coefficient, {symbol: exponent})``
pairs; binding symbols to values is left to the caller.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .errors import ParseError, UnboundSymbol

Term = Tuple[Fraction, Dict[str, int]]

_TOKEN = re.compile(r"(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str):
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m.group(1):
            toks.append(("num", int(m.group(1)), pos))
        elif m.group(2):
            toks.append(("id", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise ParseError(f"unexpected character {ch!r}", pos)
            toks.append((ch, ch, pos))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind} but found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> List[Term]:
        terms = []
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append(self.term(sign))
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return terms

    def term(self, sign: int) -> Term:
        coef = Fraction(sign)
        powers: Dict[str, int] = {}
        self.factor(powers, coef_box := [coef])
        while self.peek()[0] == "*":
            self.take()
            self.factor(powers, coef_box)
        return coef_box[0], {k: v for k, v in powers.items() if v != 0}

    def factor(self, powers: Dict[str, int], coef_box) -> None:
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")
                if den[1] == 0:
                    raise ParseError("division by zero", den[2])
                value /= den[1]
            coef_box[0] *= value
            return
        if tok[0] == "id":
            self.take()
            exp = 1
            if self.peek()[0] == "^":
                self.take()
                neg = False
                if self.peek()[0] == "-":
                    self.take()
                    neg = True
                exp = self.take("num")[1] * (-1 if neg else 1)
            powers[tok[1]] = powers.get(tok[1], 0) + exp
            return
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"expected a number or a variable but found {what}", tok[2])


def parse_polynomial(text: str) -> List[Term]:
    return _Parser(text).expr()


def evaluate_terms(terms: List[Term], bind: Callable[[str, int], object], one):
    """Fold parsed terms into a value; ``bind(name, exponent)`` returns a power."""
    total = None
    for coef, powers in terms:
        value = one * coef
        for name in sorted(powers):
            value = value * bind(name, powers[name])
        total = value if total is None else total + value
    return total


_LAURENT = re.compile(r"^(y1|y2|t[1-9])$")
_VARS = re.compile(r"^(x1|x2|y1|y2|t[1-9])$")


def parse_algebra(text: str, s: int):
    """Parse an element of A_s[t1..t9] (negative exponents only on y1, y2, t*)."""
    from .algebra import AlgebraElement, Monomial

    terms = parse_polynomial(text)

    def bind(name: str, e: int):
        if not _VARS.match(name):
            raise UnboundSymbol(name)
        if e < 0 and not _LAURENT.match(name):
            raise ParseError(f"negative exponent on {name}", text.find(name))
        if name == "x1":
            return AlgebraElement.monomial(s, Monomial(e, 0, 0))
        if name == "x2":
            return AlgebraElement.monomial(s, Monomial(0, e, 0))
        if name == "y1":
            return AlgebraElement.monomial(s, Monomial(0, 0, e))
        if name == "y2":
            return AlgebraElement.const(s, 1)
        i = int(name[1])
        t = [0] * i
        t[i - 1] = e
        return AlgebraElement.monomial(s, Monomial(0, 0, 0, tuple(t)))

    return evaluate_terms(terms, bind, AlgebraElement.const(s, 1))
