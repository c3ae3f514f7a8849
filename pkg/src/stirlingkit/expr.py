"""A small exact expression language over integers and rationals.

Grammar, with precedence ^ above unary minus above * / above + - and
with ^ right-associative:

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := "-" unary | power
    power := atom ("^" unary)?
    atom  := INT | IDENT "(" args? ")" | IDENT | "(" expr ")"
           | "sum" "(" IDENT "=" expr ".." expr "," expr ")"
    args  := expr ("," expr)*

There are no rational literals: "/" is exact division, so 1/3 already
denotes the exact rational.  Summation is an inclusive fold whose empty
range is 0; ranges are capped at 1_000_000 terms.  Exponents must
evaluate to nonnegative integers, with 0^0 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import binomial, int_pow
from .seq import SeqContext

SUM_TERM_CAP = 1_000_000


class ExprError(Exception):
    pass


class ParseError(ExprError):
    def __init__(self, message: str, line: int, col: int, expected: frozenset[str] = frozenset()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected
        where = f"line {line}, column {col}"
        if expected:
            hint = ", ".join(sorted(expected))
            super().__init__(f"syntax error at {where}: {message} (expected {hint})")
        else:
            super().__init__(f"syntax error at {where}: {message}")


class EvalError(ExprError):
    pass


# -- tokens ----------------------------------------------------------

_PUNCT = ("..", "+", "-", "*", "/", "^", "(", ")", ",", "=")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "eof", or the punctuation itself
    text: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(Token("int", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(Token("ident", src[i:j], line, col))
            col += j - i
            i = j
            continue
        for punct in _PUNCT:
            if src.startswith(punct, i):
                tokens.append(Token(punct, punct, line, col))
                col += len(punct)
                i += len(punct)
                break
        else:
            raise ParseError(f"illegal character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


# -- syntax tree -----------------------------------------------------


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class RatLit:
    """Programmatic rational literal; the grammar itself never produces
    one (rationals arise from division)."""

    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / ^
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Sum:
    var: str
    lo: object
    hi: object
    body: object


# -- parser ----------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, expected: frozenset[str]) -> None:
        tok = self.peek()
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.line, tok.col, expected)

    def expect(self, kind: str) -> Token:
        if self.peek().kind != kind:
            self.fail(f"expected {kind!r}", frozenset({kind}))
        return self.take()

    def parse_expr(self):
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self):
        node = self.parse_unary()
        while self.peek().kind in ("*", "/"):
            op = self.take().kind
            node = BinOp(op, node, self.parse_unary())
        return node

    def parse_unary(self):
        if self.peek().kind == "-":
            self.take()
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek().kind == "^":
            self.take()
            return BinOp("^", base, self.parse_unary())
        return base

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return IntLit(int(tok.text))
        if tok.kind == "(":
            self.take()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            self.take()
            if tok.text == "sum" and self.peek().kind == "(":
                return self.parse_sum()
            if self.peek().kind == "(":
                self.take()
                args = []
                if self.peek().kind != ")":
                    args.append(self.parse_expr())
                    while self.peek().kind == ",":
                        self.take()
                        args.append(self.parse_expr())
                self.expect(")")
                return Call(tok.text, tuple(args))
            return Var(tok.text)
        self.fail("expected a value", frozenset({"int", "ident", "(", "-", "sum"}))

    def parse_sum(self):
        self.expect("(")
        var = self.expect("ident").text
        self.expect("=")
        lo = self.parse_expr()
        self.expect("..")
        hi = self.parse_expr()
        self.expect(",")
        body = self.parse_expr()
        self.expect(")")
        return Sum(var, lo, hi, body)


def parse(src: str):
    """Parse a complete expression; trailing input is an error."""
    parser = _Parser(tokenize(src))
    node = parser.parse_expr()
    if parser.peek().kind != "eof":
        parser.fail("expected end of input", frozenset({"eof"}))
    return node


# -- evaluation ------------------------------------------------------


@dataclass
class Env:
    """Variable bindings plus the sequence context builtins draw from."""

    bindings: dict[str, Fraction] = field(default_factory=dict)
    ctx: SeqContext = field(default_factory=SeqContext)


_BUILTINS = {
    "S": (2, lambda ctx, n, k: ctx.stirling2(n, k)),
    "s": (2, lambda ctx, n, k: ctx.stirling1(n, k)),
    "C": (2, lambda ctx, n, k: binomial(n, k)),
    "fact": (1, lambda ctx, n: ctx.factorial(n)),
    "H": (1, lambda ctx, n: ctx.harmonic(n)),
    "h": (2, lambda ctx, p, n: ctx.hyperharmonic(p, n)),
    "B": (1, lambda ctx, n: ctx.bernoulli(n)),
    "Bplus": (1, lambda ctx, n: ctx.bernoulli_plus(n)),
    "E": (1, lambda ctx, n: ctx.euler_number(n)),
    "D": (1, lambda ctx, n: ctx.derangement(n)),
    "bell": (1, lambda ctx, n: ctx.bell(n)),
    "fubini": (1, lambda ctx, n: ctx.fubini(n)),
    "M": (2, lambda ctx, n, p: ctx.moment(n, p)),
    "powsum": (2, lambda ctx, p, n: ctx.power_sum(p, n)),
}


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise EvalError(f"{what} must be an integer, got {value}")
    return int(value)


def evaluate(node, env: Env | None = None) -> Fraction:
    """Evaluate a syntax tree to an exact rational.

    Domain errors from the sequence layer (negative indices and the
    like) propagate as ValueError; language-level problems raise
    EvalError.
    """
    if env is None:
        env = Env()
    return _eval(node, env)


def _eval(node, env: Env) -> Fraction:
    if isinstance(node, IntLit):
        return Fraction(node.value)
    if isinstance(node, RatLit):
        return Fraction(node.value)
    if isinstance(node, Var):
        try:
            return Fraction(env.bindings[node.name])
        except KeyError:
            raise EvalError(f"unbound variable {node.name!r}") from None
    if isinstance(node, Neg):
        return -_eval(node.operand, env)
    if isinstance(node, BinOp):
        left = _eval(node.left, env)
        if node.op == "^":
            exponent = _eval(node.right, env)
            e = _as_int(exponent, "exponent")
            if e < 0:
                raise EvalError(f"exponent must be nonnegative, got {e}")
            return int_pow(left, e)
        right = _eval(node.right, env)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            if right == 0:
                raise EvalError("division by zero")
            return left / right
        raise EvalError(f"unknown operator {node.op!r}")
    if isinstance(node, Call):
        try:
            arity, fn = _BUILTINS[node.name]
        except KeyError:
            raise EvalError(f"unknown function {node.name!r}") from None
        if len(node.args) != arity:
            raise EvalError(f"{node.name} takes {arity} argument(s), got {len(node.args)}")
        args = [_as_int(_eval(a, env), f"argument of {node.name}") for a in node.args]
        return Fraction(fn(env.ctx, *args))
    if isinstance(node, Sum):
        lo = _as_int(_eval(node.lo, env), "summation lower bound")
        hi = _as_int(_eval(node.hi, env), "summation upper bound")
        if hi < lo:
            return Fraction(0)
        count = hi - lo + 1
        if count > SUM_TERM_CAP:
            raise EvalError(f"summation range has {count} terms; the cap is {SUM_TERM_CAP}")
        had_binding = node.var in env.bindings
        saved = env.bindings.get(node.var)
        total = Fraction(0)
        try:
            for i in range(lo, hi + 1):
                env.bindings[node.var] = Fraction(i)
                total += _eval(node.body, env)
        finally:
            if had_binding:
                env.bindings[node.var] = saved
            else:
                env.bindings.pop(node.var, None)
        return total
    raise EvalError(f"cannot evaluate node {node!r}")


# -- pretty printer --------------------------------------------------

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_UNARY, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _level(node) -> int:
    if isinstance(node, BinOp):
        if node.op in ("+", "-"):
            return _LEVEL_ADD
        if node.op in ("*", "/"):
            return _LEVEL_MUL
        return _LEVEL_POW
    if isinstance(node, Neg):
        return _LEVEL_UNARY
    return _LEVEL_ATOM


def _render(node, min_level: int) -> str:
    text = _render_raw(node)
    if _level(node) < min_level:
        return f"({text})"
    return text


def _render_raw(node) -> str:
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, RatLit):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return "-" + _render(node.operand, _LEVEL_UNARY)
    if isinstance(node, BinOp):
        if node.op in ("+", "-"):
            return f"{_render(node.left, _LEVEL_ADD)} {node.op} {_render(node.right, _LEVEL_MUL)}"
        if node.op in ("*", "/"):
            return f"{_render(node.left, _LEVEL_MUL)}{node.op}{_render(node.right, _LEVEL_UNARY)}"
        return f"{_render(node.left, _LEVEL_ATOM)}^{_render(node.right, _LEVEL_UNARY)}"
    if isinstance(node, Call):
        inside = ", ".join(_render(a, _LEVEL_ADD) for a in node.args)
        return f"{node.name}({inside})"
    if isinstance(node, Sum):
        lo = _render(node.lo, _LEVEL_ADD)
        hi = _render(node.hi, _LEVEL_ADD)
        body = _render(node.body, _LEVEL_ADD)
        return f"sum({node.var}={lo}..{hi}, {body})"
    raise TypeError(f"cannot render node {node!r}")


def to_source(node) -> str:
    """Canonical source text; printing then parsing is a fixpoint."""
    return _render(node, _LEVEL_ADD)
