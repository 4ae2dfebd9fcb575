"""
Expression language for user-supplied functions, periods and generators.

Grammar:
    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := "-" unary | power
    power := atom ("^" unary)?
    atom  := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"

``^`` is right-associative and binds tighter than a unary minus on its
left, so ``-x^2`` is ``-(x^2)`` and ``x^2^3`` is ``x^(2^3)``.
"""

import math
import re
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

from .errors import EvalError, ExprSyntaxError

FUNCTIONS: Dict[str, Callable[[float], float]] = {
    'log': math.log,
    'exp': math.exp,
    'sqrt': math.sqrt,
    'sin': math.sin,
    'cos': math.cos,
    'abs': abs,
}
CONSTANTS: Dict[str, float] = {'pi': math.pi, 'e': math.e}
VARIABLES = frozenset({'x', 'y', 't'})


# AST

@dataclass(frozen=True)
class Num:
    value: float

    def __str__(self) -> str:
        return to_source(self)


@dataclass(frozen=True)
class Name:
    ident: str

    def __str__(self) -> str:
        return to_source(self)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"

    def __str__(self) -> str:
        return to_source(self)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"

    def __str__(self) -> str:
        return to_source(self)


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"

    def __str__(self) -> str:
        return to_source(self)


Expr = Union[Num, Name, Neg, BinOp, Call]


def to_source(e: Expr) -> str:
    """Canonical, fully parenthesized text; parse(to_source(e)) == e."""
    if isinstance(e, Num):
        return repr(float(e.value))
    if isinstance(e, Name):
        return e.ident
    if isinstance(e, Neg):
        return f"(-{to_source(e.operand)})"
    if isinstance(e, BinOp):
        return f"({to_source(e.left)} {e.op} {to_source(e.right)})"
    return f"{e.func}({to_source(e.arg)})"


def free_names(e: Expr) -> FrozenSet[str]:
    """Identifiers that are neither constants nor function names."""
    if isinstance(e, Name):
        return frozenset() if e.ident in CONSTANTS else frozenset({e.ident})
    if isinstance(e, Neg):
        return free_names(e.operand)
    if isinstance(e, BinOp):
        return free_names(e.left) | free_names(e.right)
    if isinstance(e, Call):
        return free_names(e.arg)
    return frozenset()


# Tokenizer

_TOKEN_RE = re.compile(
    r'(?P<ws>\s+)'
    r'|(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)'
    r'|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)'
    r'|(?P<op>[-+*/^()])'
)


@dataclass(frozen=True)
class Token:
    kind: str        # 'number', 'ident', 'op' or 'eof'
    text: str
    offset: int      # byte offset into the UTF-8 source


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0

    def byte_offset(index: int) -> int:
        return len(source[:index].encode('utf-8'))

    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise ExprSyntaxError(f"unexpected character {source[pos]!r}", byte_offset(pos),
                                  {'number', 'identifier', 'operator'})
        kind = match.lastgroup
        if kind != 'ws':
            tokens.append(Token(kind, match.group(), byte_offset(pos)))
        pos = match.end()
    tokens.append(Token('eof', '', byte_offset(len(source))))
    return tokens


_ATOM_START = ('number', 'identifier', '(', '-')


class _Parser:
    """Recursive descent over the token list, one method per grammar rule."""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def at_op(self, *ops: str) -> bool:
        token = self.peek()
        return token.kind == 'op' and token.text in ops

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            self.fail([f"'{op}'"])
        return self.advance()

    def fail(self, expected) -> None:
        token = self.peek()
        found = "end of input" if token.kind == 'eof' else f"{token.text!r}"
        raise ExprSyntaxError(f"unexpected {found}", token.offset, expected)

    def expr(self) -> Expr:
        node = self.term()
        while self.at_op('+', '-'):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.at_op('*', '/'):
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.at_op('-'):
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at_op('^'):
            self.advance()
            return BinOp('^', base, self.unary())
        return base

    def atom(self) -> Expr:
        token = self.peek()
        if token.kind == 'number':
            self.advance()
            return Num(float(token.text))
        if token.kind == 'ident':
            self.advance()
            if token.text in FUNCTIONS:
                self.expect_op('(')
                arg = self.expr()
                self.expect_op(')')
                return Call(token.text, arg)
            return Name(token.text)
        if self.at_op('('):
            self.advance()
            inner = self.expr()
            self.expect_op(')')
            return inner
        self.fail(_ATOM_START)


def parse(source: str) -> Expr:
    """
    Parse an expression.

    Raises:
        ExprSyntaxError: With the byte offset of the offending token and
            the set of tokens that would have been accepted there
    """
    if not source.strip():
        raise ExprSyntaxError("empty expression", 0, _ATOM_START)
    parser = _Parser(tokenize(source))
    node = parser.expr()
    if parser.peek().kind != 'eof':
        parser.fail(["'+'", "'-'", "'*'", "'/'", "'^'", 'end of input'])
    return node


# Evaluation

def _power(base: float, exponent: float, node: Expr) -> float:
    if base < 0 and exponent != math.floor(exponent):
        raise EvalError("NegativeBaseFractionalPower", to_source(node))
    if base == 0 and exponent < 0:
        raise EvalError("DivisionByZero", to_source(node))
    return math.pow(base, exponent)


def _call(func: str, value: float, node: Expr) -> float:
    if func == 'log' and value <= 0:
        raise EvalError("LogOfNonPositive", to_source(node))
    if func == 'sqrt' and value < 0:
        raise EvalError("SqrtOfNegative", to_source(node))
    return FUNCTIONS[func](value)


def _evaluate(e: Expr, env: Mapping[str, float]) -> float:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Name):
        try:
            return env[e.ident]
        except KeyError:
            raise EvalError("UnboundName", e.ident) from None
    if isinstance(e, Neg):
        return -_evaluate(e.operand, env)
    if isinstance(e, Call):
        return _call(e.func, _evaluate(e.arg, env), e)
    left = _evaluate(e.left, env)
    right = _evaluate(e.right, env)
    if e.op == '+':
        return left + right
    if e.op == '-':
        return left - right
    if e.op == '*':
        return left * right
    if e.op == '/':
        if right == 0:
            raise EvalError("DivisionByZero", to_source(e))
        return left / right
    return _power(left, right, e)


def eval_expr(e: Expr, value: float, variable: str = 'x',
              bindings: Optional[Mapping[str, float]] = None) -> float:
    """
    Evaluate e with ``variable`` bound to value.

    Args:
        e: Parsed expression
        value: Value of the free variable
        variable: Name of the free variable ('x' for functions, 't' for generators)
        bindings: Further names, e.g. parameters from ``--param`` or y

    Raises:
        EvalError: On a domain violation or an unbound name
    """
    env: Dict[str, float] = dict(CONSTANTS)
    if bindings:
        env.update(bindings)
    env[variable] = float(value)
    try:
        return float(_evaluate(e, env))
    except OverflowError:
        raise EvalError("Overflow", to_source(e)) from None


def to_function(e: Expr, variable: str = 'x',
                bindings: Optional[Mapping[str, float]] = None) -> Callable[[float], float]:
    """One-variable callable view of an expression."""
    fixed = dict(bindings or {})
    return lambda value: eval_expr(e, value, variable=variable, bindings=fixed)


def to_function2(e: Expr, bindings: Optional[Mapping[str, float]] = None) -> Callable[[float, float], float]:
    """Two-variable (x, y) callable view, used for period functions."""
    fixed = dict(bindings or {})

    def evaluate(x: float, y: float) -> float:
        return eval_expr(e, x, variable='x', bindings={**fixed, 'y': y})
    return evaluate


def parse_param(text: str) -> Tuple[str, float]:
    """Read a ``name=value`` binding."""
    name, sep, value = text.partition('=')
    name = name.strip()
    if not sep or not re.fullmatch(r'[A-Za-z_][A-Za-z_0-9]*', name):
        raise ExprSyntaxError(f"parameter must look like name=value, got {text!r}", 0)
    if name in VARIABLES or name in CONSTANTS or name in FUNCTIONS:
        raise ExprSyntaxError(f"parameter name {name!r} is reserved", 0)
    try:
        return name, float(value)
    except ValueError:
        raise ExprSyntaxError(f"parameter value is not a number: {value!r}",
                              len(name) + 1, ['number']) from None
