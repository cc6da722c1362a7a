"""Parser and renderer for the variety-expression mini-language.

Grammar (whitespace insensitive):

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "pt" | "A(" int ")" | "P(" int ")" | "Gm"
            | "L" ["^(" int ")"]
            | "decl(" name ")"
            | "projbundle(" expr "," int ")"
            | "blowup(" expr ";" expr "," int ")"
            | "(" expr ")"

Sums and products associate to the left.  The renderer emits a string that
reparses to an equal tree.
"""

from __future__ import annotations

from .motivic import (
    Affine,
    BlowUp,
    Declared,
    Diff,
    Lefschetz,
    Proj,
    ProjBundle,
    Prod,
    Pt,
    Sum,
    Torus,
    VarietyExpr,
)


class ExprParseError(ValueError):
    """Syntax error with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def location(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        last_newline = self.text.rfind("\n", 0, pos)
        col = pos - last_newline
        return line, col

    def error(self, message: str, pos: int | None = None) -> ExprParseError:
        line, col = self.location(pos)
        return ExprParseError(message, line, col)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def try_consume(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def word(self) -> str:
        """A maximal identifier, or empty string."""
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.error("expected an integer", start)
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_expr(text: str) -> VarietyExpr:
    """Parse a variety expression; raise ExprParseError with line/column."""
    scanner = _Scanner(text)
    expr = _expr(scanner)
    if not scanner.at_end():
        raise scanner.error("unexpected trailing input")
    return expr


def _expr(s: _Scanner) -> VarietyExpr:
    node = _term(s)
    while True:
        if s.try_consume("+"):
            node = Sum(node, _term(s))
        elif s.try_consume("-"):
            node = Diff(node, _term(s))
        else:
            return node


def _term(s: _Scanner) -> VarietyExpr:
    node = _factor(s)
    while s.try_consume("*"):
        node = Prod(node, _factor(s))
    return node


def _factor(s: _Scanner) -> VarietyExpr:
    if s.try_consume("("):
        node = _expr(s)
        s.expect(")")
        return node
    start = s.pos
    word = s.word()
    if word == "pt":
        return Pt()
    if word == "Gm":
        return Torus()
    if word == "A":
        s.expect("(")
        n = s.integer()
        s.expect(")")
        if n < 0:
            raise s.error("affine space needs a non-negative dimension", start)
        return Affine(n)
    if word == "P":
        s.expect("(")
        n = s.integer()
        s.expect(")")
        if n < 0:
            raise s.error("projective space needs a non-negative dimension", start)
        return Proj(n)
    if word == "L":
        if s.try_consume("^"):
            s.expect("(")
            k = s.integer()
            s.expect(")")
            return Lefschetz(k)
        return Lefschetz(1)
    if word == "decl":
        s.expect("(")
        name = s.word()
        if not name:
            raise s.error("expected a declaration name")
        s.expect(")")
        return Declared(name)
    if word == "projbundle":
        s.expect("(")
        base = _expr(s)
        s.expect(",")
        r = s.integer()
        s.expect(")")
        if r < 0:
            raise s.error("fiber dimension must be non-negative", start)
        return ProjBundle(base, r)
    if word == "blowup":
        s.expect("(")
        base = _expr(s)
        s.expect(";")
        center = _expr(s)
        s.expect(",")
        c = s.integer()
        s.expect(")")
        if c < 1:
            raise s.error("blow-up codimension must be at least 1", start)
        return BlowUp(base, center, c)
    if word:
        raise s.error(f"unknown construct {word!r}", start)
    raise s.error("expected an expression")


def render_expr(e: VarietyExpr) -> str:
    """Canonical text form; reparsing yields an equal tree."""
    if isinstance(e, Pt):
        return "pt"
    if isinstance(e, Torus):
        return "Gm"
    if isinstance(e, Affine):
        return f"A({e.n})"
    if isinstance(e, Proj):
        return f"P({e.n})"
    if isinstance(e, Lefschetz):
        return "L" if e.k == 1 else f"L^({e.k})"
    if isinstance(e, Declared):
        return f"decl({e.name})"
    if isinstance(e, ProjBundle):
        return f"projbundle({render_expr(e.base)}, {e.fiber_dim})"
    if isinstance(e, BlowUp):
        return f"blowup({render_expr(e.base)}; {render_expr(e.center)}, {e.codim})"
    if isinstance(e, Sum):
        return f"{render_expr(e.a)} + {_wrap_additive(e.b)}"
    if isinstance(e, Diff):
        return f"{render_expr(e.a)} - {_wrap_additive(e.b)}"
    if isinstance(e, Prod):
        return f"{_wrap_factor(e.a, allow_prod=True)} * {_wrap_factor(e.b, allow_prod=False)}"
    raise TypeError(f"not a variety expression: {e!r}")


def _wrap_additive(e: VarietyExpr) -> str:
    # Right operands of +/- need parentheses to survive left association.
    text = render_expr(e)
    if isinstance(e, (Sum, Diff)):
        return f"({text})"
    return text


def _wrap_factor(e: VarietyExpr, allow_prod: bool) -> str:
    text = render_expr(e)
    if isinstance(e, (Sum, Diff)) or (isinstance(e, Prod) and not allow_prod):
        return f"({text})"
    return text
