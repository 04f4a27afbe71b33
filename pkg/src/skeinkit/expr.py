"""Element expression grammar shared by the library and the CLI.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom
    atom   := INT | 'v' | 's' | 'z' | NAME '[' body ']' | '(' expr ')'
    NAME   := p | h | e | s | Q | A | Abar | X
    body   := empty | INT (',' INT)* | '(' INT '|' INT ')'

p/h/e/s/A take a partition; Q is an alias of s; Abar and X take a single
integer.  Parse failures carry the character position of the offending
token.
"""

from __future__ import annotations

import re

from .partitions import Hook, Partition
from .ring import RatFunc, S, V, Z
from .symfunc import SymElement, complete, elementary, power_sum, schur

_TOKEN_RE = re.compile(r"\s*(\d+|[A-Za-z]+|[-+*()\[\],|])")

_ATOM_NAMES = {"p", "h", "e", "s", "Q", "A", "Abar", "X"}


class ExprParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            at = len(text) - len(stripped)
            raise ExprParseError(f"unexpected character {stripped[0]!r}", at)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def pos(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return len(self.text)

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, symbol):
        if self.peek() != symbol:
            raise ExprParseError(f"expected {symbol!r}", self.pos())
        return self.advance()

    # grammar

    def parse(self) -> SymElement:
        value = self.expr()
        if self.peek() is not None:
            raise ExprParseError(f"unexpected token {self.peek()!r}", self.pos())
        return value

    def expr(self) -> SymElement:
        value = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.advance()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> SymElement:
        value = self.factor()
        while self.peek() == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> SymElement:
        if self.peek() == "-":
            self.advance()
            return -self.factor()
        return self.atom()

    def atom(self) -> SymElement:
        tok = self.peek()
        if tok is None:
            raise ExprParseError("unexpected end of expression", self.pos())
        if tok == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if tok.isdigit():
            self.advance()
            return SymElement.unit() * int(tok)
        if tok in _ATOM_NAMES and self._next_is_bracket():
            name, at = self.advance()
            body = self.bracket_body(at)
            return self.build_atom(name, body, at)
        if tok == "v":
            self.advance()
            return SymElement.unit() * V
        if tok == "s":
            self.advance()
            return SymElement.unit() * S
        if tok == "z":
            self.advance()
            return SymElement.unit() * Z
        raise ExprParseError(f"unexpected token {tok!r}", self.pos())

    def _next_is_bracket(self) -> bool:
        return (
            self.index + 1 < len(self.tokens)
            and self.tokens[self.index + 1][0] == "["
        )

    def bracket_body(self, at: int) -> Partition:
        self.expect("[")
        if self.peek() == "]":
            self.advance()
            return Partition(())
        if self.peek() == "(":
            self.advance()
            arm = self.integer()
            self.expect("|")
            leg = self.integer()
            self.expect(")")
            self.expect("]")
            return Hook(arm, leg).partition()
        parts = [self.integer()]
        while self.peek() == ",":
            self.advance()
            parts.append(self.integer())
        self.expect("]")
        try:
            return Partition(tuple(parts))
        except ValueError as exc:
            raise ExprParseError(str(exc), at) from None

    def integer(self) -> int:
        tok = self.peek()
        if tok is None or not tok.isdigit():
            raise ExprParseError("expected an integer", self.pos())
        self.advance()
        return int(tok)

    def build_atom(self, name: str, lam: Partition, at: int) -> SymElement:
        from .skein import X_elem, abar_elem, eval_a_monomial

        if name in ("Abar", "X"):
            if lam.length != 1:
                raise ExprParseError(f"{name} takes a single integer", at)
            m = lam.parts[0]
            return abar_elem(m) if name == "Abar" else X_elem(m)
        if name == "p":
            return SymElement.term(lam)
        if name == "h":
            out = SymElement.unit()
            for part in lam.parts:
                out = out * complete(part)
            return out
        if name == "e":
            out = SymElement.unit()
            for part in lam.parts:
                out = out * elementary(part)
            return out
        if name in ("s", "Q"):
            return schur(lam)
        return eval_a_monomial(lam)


def parse_element(text: str) -> SymElement:
    """Parse an element expression into canonical power-sum form."""
    return _Parser(text).parse()
