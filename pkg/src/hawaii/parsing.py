"""Expression parsing for the command line.

Accepted form: a polynomial in z with exact rational coefficients,
optionally times exp(q) where q has degree at most 2, a nonpositive
z^2 coefficient, and no constant term.  Out-of-class inputs (zero
polynomial, positive Gaussian exponent, constant times a plain
exponential) are rejected with positioned diagnostics instead of being
normalized away.

parse("(z^2+1)*exp(-z^2+3*z)") gives p = z^2+1, a = 1, b = 3 in the
shape p(z)*exp(-a*z^2+b*z).
"""

from __future__ import annotations

from fractions import Fraction

from .lpstar import LPStarFn
from .polys import Poly


class ParseError(ValueError):
    """Syntax or class-membership error, with the offending position."""

    def __init__(self, message: str, pos: int, source: str = ""):
        self.message = message
        self.pos = pos
        self.source = source
        super().__init__(f"{message} (position {pos})")

    def pretty(self) -> str:
        lines = [f"parse error at position {self.pos}: {self.message}"]
        if self.source:
            lines.append("  " + self.source)
            lines.append("  " + " " * self.pos + "^")
        return "\n".join(lines)


class FunctionExpr:
    """Parsed input: source text plus the exact (p, a, b) triple."""

    __slots__ = ("source", "p", "a", "b")

    def __init__(self, source: str, p: Poly, a: Fraction, b: Fraction):
        self.source = source
        self.p = p
        self.a = a
        self.b = b

    def lpstar(self) -> LPStarFn:
        return LPStarFn(self.p, self.a, self.b)

    def canonical(self) -> str:
        return format_function(self.p, self.a, self.b)

    def __repr__(self):
        return f"FunctionExpr({self.canonical()!r})"


# -- tokens -------------------------------------------------------------------


_PUNCT = "+-*^/()"


def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _PUNCT:
            toks.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word not in ("z", "exp"):
                raise ParseError(f"unknown symbol {word!r}", i, text)
            toks.append((word, word, i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i, text)
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, ahead=0):
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind, what):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {what}", tok[2], self.text)
        return tok

    def fail(self, message):
        raise ParseError(message, self.peek()[2], self.text)

    # sum := ('+'|'-')* term (('+'|'-') term)*
    def poly_sum(self) -> Poly:
        total = Poly.zero()
        sign = 1
        while self.peek()[0] in "+-":
            if self.take()[0] == "-":
                sign = -sign
        total = total + Poly.constant(sign) * self.term()
        while self.peek()[0] in "+-":
            sign = 1
            while self.peek()[0] in "+-":
                if self.take()[0] == "-":
                    sign = -sign
            total = total + Poly.constant(sign) * self.term()
        return total

    # term := factor ('*'? factor)*, implicit product on adjacency;
    # a '*' that introduces the exp part is left for the caller
    def term(self) -> Poly:
        prod = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                if self.peek(1)[0] == "exp":
                    return prod
                self.take()
                prod = prod * self.factor()
            elif kind in ("int", "z", "("):
                prod = prod * self.factor()
            else:
                return prod

    # factor := base ('^' uint)?
    def factor(self) -> Poly:
        base = self.base()
        while self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise ParseError("negative exponents are not allowed",
                                 tok[2], self.text)
            tok = self.expect("int", "an integer exponent")
            base = base ** tok[1]
        return base

    def base(self) -> Poly:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                dtok = self.expect("int", "an integer denominator")
                if dtok[1] == 0:
                    raise ParseError("division by zero in a coefficient",
                                     dtok[2], self.text)
                return Poly.constant(Fraction(value, dtok[1]))
            return Poly.constant(value)
        if kind == "z":
            self.take()
            return Poly((0, 1))
        if kind == "(":
            self.take()
            inner = self.poly_sum()
            self.expect(")", "a closing parenthesis")
            return inner
        if kind == "exp":
            raise ParseError(
                "the exponential factor must follow the polynomial part "
                "with an explicit '*'", pos, self.text)
        self.fail("expected a coefficient, 'z', or '('")

    def quad(self) -> tuple[Fraction, Fraction]:
        """The exponent body, returned as (a, b) of -a*z^2 + b*z."""
        pos = self.peek()[2]
        q = self.poly_sum()
        if not q.is_zero and q.degree > 2:
            raise ParseError(
                f"the exponent must have degree at most 2, got {q.degree}",
                pos, self.text)
        cs = list(q.coeffs) + [Fraction(0)] * 3
        if cs[2] > 0:
            raise ParseError(
                "a positive z^2 coefficient in the exponent grows too fast "
                "for the class; only exp(-a*z^2 + b*z) with a >= 0 fits",
                pos, self.text)
        if cs[0] != 0:
            raise ParseError(
                "a constant term in the exponent has no exact "
                "representation here; scale the polynomial part instead",
                pos, self.text)
        return -cs[2], cs[1]


def parse(text: str) -> FunctionExpr:
    """Parse p(z) optionally times exp(-a*z^2+b*z).  Raises ParseError
    on syntax errors and on inputs outside the class."""
    parser = _Parser(text)
    poly_pos = parser.peek()[2]
    a = b = Fraction(0)
    if parser.peek()[0] == "exp":
        p = Poly.constant(1)  # bare exp(...): polynomial part 1
        has_exp = True
    else:
        p = parser.poly_sum()
        has_exp = parser.peek()[0] == "*" and parser.peek(1)[0] == "exp"
        if has_exp:
            parser.take()
        elif parser.peek()[0] == "exp":
            raise ParseError("expected '*' before the exponential factor",
                             parser.peek()[2], text)
    if has_exp:
        parser.take()
        parser.expect("(", "'(' after exp")
        a, b = parser.quad()
        parser.expect(")", "a closing parenthesis")
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError("unexpected trailing input", tok[2], text)

    if p.is_zero:
        raise ParseError("the zero polynomial is outside the class",
                         poly_pos, text)
    if p.degree == 0 and a == 0:
        raise ParseError(
            "a constant times exp(b*z) is excluded from the class by "
            "convention; nothing to analyze", poly_pos, text)
    return FunctionExpr(text, p, a, b)


def parse_polynomial(text: str) -> Poly:
    """A plain polynomial: no exponential factor, zero rejected."""
    parser = _Parser(text)
    pos = parser.peek()[2]
    p = parser.poly_sum()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError("a plain polynomial is required here", tok[2], text)
    if p.is_zero:
        raise ParseError("the zero polynomial has no isolatable roots",
                         pos, text)
    return p


# -- canonical printing -------------------------------------------------------


def format_poly(p: Poly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            zpow = "z" if k == 1 else f"z^{k}"
            body = zpow if mag == 1 else f"{mag}*{zpow}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_function(p: Poly, a, b) -> str:
    """Canonical text: parse(format_function(p, a, b)) recovers exactly
    (p, a, b), and printing is idempotent on the result."""
    if a == 0 and b == 0:
        return format_poly(p)
    exponent = Poly((0, b, -a))
    return f"({format_poly(p)})*exp({format_poly(exponent)})"
