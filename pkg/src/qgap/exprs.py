"""Parser for the monomial expression grammar.

    expr := term (('*' | whitespace) term)*
    term := gen ('^' signed-integer)?
    gen  := 'Delta' | 'Delta2' | 'j' | 'j2' | 'G(' even-int ')'
          | 'Egamma2' | 'E04' | 'Einf4' | 'E(' N ',inf,' k ')'
          | 'phi(' N ')' | 'Phi(' N ')' | 'S(' n ',' d ')'
          | 'T(' h ')' | 'T2(' h ')'

Whitespace-insensitive; a missing exponent means 1; exponents must be
nonzero.  Errors carry the offending position and what was expected.
"""

from __future__ import annotations

from qgap.catalog import FormExpr, Generator

__all__ = ["ParseError", "parse_expr"]

_GENERATOR_NAMES = (
    "Delta2", "Delta", "Egamma2", "E04", "Einf4", "E", "G",
    "j2", "j", "phi", "Phi", "S", "T2", "T",
)

_PARAMETERIZED = {"G", "E", "phi", "Phi", "S", "T", "T2"}


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"position {pos}: expected {expected}, found {found}")
        self.pos = pos
        self.expected = expected


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str, expected: str):
        if not self.take(literal):
            raise ParseError(self.text, self.pos, expected)

    def integer(self, signed: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError(self.text, self.pos,
                             "a signed integer" if signed else "an integer")
        return int(self.text[start:self.pos])


def _parse_generator(sc: _Scanner) -> Generator:
    sc.skip_ws()
    start = sc.pos
    name = None
    for cand in _GENERATOR_NAMES:
        if sc.text.startswith(cand, sc.pos):
            name = cand
            sc.pos += len(cand)
            break
    if name is None:
        raise ParseError(sc.text, start,
                         "a generator name (one of "
                         "Delta, Delta2, j, j2, G(h), Egamma2, E04, Einf4, "
                         "E(N,inf,k), phi(N), Phi(N), S(n,d), T(h), T2(h))")
    if name not in _PARAMETERIZED:
        return Generator(name)
    sc.expect("(", f"'(' after {name}")
    if name == "E":
        N = sc.integer()
        sc.expect(",", "','")
        sc.expect("inf", "'inf'")
        sc.expect(",", "','")
        k = sc.integer()
        params = (N, k)
    elif name == "S":
        n = sc.integer()
        sc.expect(",", "','")
        d = sc.integer()
        params = (n, d)
    else:
        params = (sc.integer(),)
    sc.expect(")", "')'")
    try:
        return Generator(name, params)
    except ValueError as exc:
        raise ParseError(sc.text, start, f"a valid generator ({exc})") from None


def parse_expr(text: str) -> FormExpr:
    """Parse an expression like 'G(4)^2 * Delta^-1' into a FormExpr."""
    sc = _Scanner(text)
    factors = []
    while True:
        gen = _parse_generator(sc)
        exponent = 1
        if sc.take("^"):
            pos = sc.pos
            exponent = sc.integer(signed=True)
            if exponent == 0:
                raise ParseError(text, pos, "a nonzero exponent")
        factors.append((gen, exponent))
        if sc.at_end():
            break
        sc.take("*")
        if sc.at_end():
            raise ParseError(text, sc.pos, "a term after '*'")
    return FormExpr(tuple(factors), text=text)
