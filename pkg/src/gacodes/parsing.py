"""Shared tokenizer and arithmetic-expression evaluator.

One grammar serves field literals, polynomial text, and algebra-element
expressions; the three callers differ only in how named symbols and integer
literals are lifted into their value type::

    expr   = ['-'] term (('+'|'-') term)*
    term   = factor ('*' factor)*
    factor = atom ['^' ['-'] INT]
    atom   = INT | NAME | '(' expr ')'

There is no implicit juxtaposition: ``2*u`` is valid, ``2u`` is not.
Exponents are integer literals only.
"""

from __future__ import annotations

from typing import Callable, Iterator, NamedTuple

from .errors import ParseError


class Token(NamedTuple):
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    pos: int


_OPS = set("+-*^()")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], i))
            i = j
            continue
        if c in _OPS:
            tokens.append(Token("op", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class ExpressionParser:
    """Recursive-descent evaluator over an abstract value type.

    ``resolve`` maps a symbol name (with its position, for error reporting)
    to a value; ``lift_int`` embeds integer literals. Values must support
    ``+``, ``-``, unary ``-``, ``*`` and ``** int``.
    """

    def __init__(
        self,
        resolve: Callable[[str, int], object],
        lift_int: Callable[[int], object],
    ):
        self._resolve = resolve
        self._lift = lift_int

    def parse(self, text: str):
        tokens = tokenize(text)
        self._tokens = tokens
        self._i = 0
        value = self._expr()
        tok = self._peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return value

    # -- token helpers --

    def _peek(self) -> Token:
        return self._tokens[self._i]

    def _next(self) -> Token:
        tok = self._tokens[self._i]
        self._i += 1
        return tok

    def _expect_op(self, op: str) -> Token:
        tok = self._next()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)
        return tok

    # -- grammar --

    def _expr(self):
        tok = self._peek()
        negate = False
        if tok.kind == "op" and tok.text == "-":
            self._next()
            negate = True
        value = self._term()
        if negate:
            value = -value
        while True:
            tok = self._peek()
            if tok.kind == "op" and tok.text in "+-":
                self._next()
                rhs = self._term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def _term(self):
        value = self._factor()
        while True:
            tok = self._peek()
            if tok.kind == "op" and tok.text == "*":
                self._next()
                value = value * self._factor()
            else:
                return value

    def _factor(self):
        value = self._atom()
        tok = self._peek()
        if tok.kind == "op" and tok.text == "^":
            self._next()
            value = value ** self._exponent()
        return value

    def _exponent(self) -> int:
        tok = self._next()
        sign = 1
        if tok.kind == "op" and tok.text == "-":
            sign = -1
            tok = self._next()
        if tok.kind != "int":
            raise ParseError("expected integer exponent", tok.pos)
        return sign * int(tok.text)

    def _atom(self):
        tok = self._next()
        if tok.kind == "int":
            return self._lift(int(tok.text))
        if tok.kind == "name":
            return self._resolve(tok.text, tok.pos)
        if tok.kind == "op" and tok.text == "(":
            value = self._expr()
            self._expect_op(")")
            return value
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse_arithmetic(
    text: str,
    resolve: Callable[[str, int], object],
    lift_int: Callable[[int], object],
):
    """Parse and evaluate ``text`` in one pass."""
    return ExpressionParser(resolve, lift_int).parse(text)
