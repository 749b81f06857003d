"""Generalized base-2 expansions whose digits are arbitrary nonnegative
rationals, plus a run-length pattern notation for writing digit families.

Pattern notation, tokens separated by whitespace::

    7          a digit (integer literal)
    (2q)       a digit given by an expression; implicit products like 2q allowed
    (3/2)      a rational digit
    0^{q-2}    a digit repeated; the exponent is an expression, bare names/ints
               need no braces (1^a, 2^3)
    0..(k-1)   ascending run a, a+1, ..., b (empty when a > b)
    ~(p-1)..1  descending run a, a-1, ..., b (empty when a < b)

Expressions use integers, parameter names and ``+ - * / //``.
"""

from __future__ import annotations

import ast
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction | int


@dataclass(frozen=True)
class GenExpansion:
    digits: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        digits = tuple(Fraction(d) for d in self.digits)
        if not digits:
            raise ValueError("expansion needs at least one digit")
        if any(d < 0 for d in digits):
            raise ValueError("digits must be nonnegative")
        object.__setattr__(self, "digits", digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        parts = []
        for d in self.digits:
            text = str(d)
            parts.append(text if len(text) == 1 else f"({text})")
        return "(" + "".join(parts) + ")_2"


def expansion(digits: Iterable[Rational]) -> GenExpansion:
    return GenExpansion(tuple(digits))


def evaluate(e: GenExpansion) -> Fraction:
    """Exact value ``sum(a_i * 2**(n - i))``."""
    total = Fraction(0)
    for d in e.digits:
        total = total * 2 + d
    return total


def scale(e: GenExpansion, c: Rational) -> GenExpansion:
    """Digitwise multiplication by a nonnegative rational."""
    c = Fraction(c)
    if c < 0:
        raise ValueError("scale factor must be nonnegative")
    return GenExpansion(tuple(d * c for d in e.digits))


def carry(e: GenExpansion, i: int) -> GenExpansion:
    """Rewrite ``(.., a_i, a_{i+1}, ..)`` as ``(.., a_i + 1, a_{i+1} - 2, ..)``.

    The value is unchanged; ``a_{i+1}`` must be at least 2.
    """
    d = list(e.digits)
    if not 0 <= i < len(d) - 1:
        raise IndexError(f"carry position {i} out of range")
    if d[i + 1] < 2:
        raise ValueError(f"digit {d[i + 1]} at position {i + 1} is below 2")
    d[i] += 1
    d[i + 1] -= 2
    return GenExpansion(tuple(d))


# --- pattern notation -------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.FloorDiv: operator.floordiv,
}

_IMPLICIT_MUL = re.compile(r"(\d)\s*([A-Za-z_(])")


def eval_expr(text: str, env: Mapping[str, Rational]) -> Fraction:
    """Evaluate a small arithmetic expression exactly."""
    source = _IMPLICIT_MUL.sub(r"\1*\2", text.strip())
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"bad expression {text!r}") from exc

    def walk(node: ast.AST) -> Fraction:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise ValueError(f"unbound name {node.id!r} in {text!r}")
            return Fraction(env[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -walk(node.operand)
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return Fraction(_BINOPS[type(node.op)](walk(node.left), walk(node.right)))
        raise ValueError(f"unsupported syntax in {text!r}")

    return walk(tree)


def _split_tokens(pattern: str) -> list[str]:
    tokens, buf, depth = [], [], 0
    for ch in pattern:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced brackets in {pattern!r}")
        if ch.isspace() and depth == 0:
            if buf:
                tokens.append("".join(buf))
                buf = []
        else:
            buf.append(ch)
    if depth:
        raise ValueError(f"unbalanced brackets in {pattern!r}")
    if buf:
        tokens.append("".join(buf))
    return tokens


def _strip(group: str, open_: str, close: str) -> str:
    if group.startswith(open_) and group.endswith(close):
        return group[1:-1]
    return group


_ATOM = r"\([^()]*(?:\([^()]*\)[^()]*)*\)|[A-Za-z0-9_/]+"
_TOKEN = re.compile(
    rf"^(?P<desc>~)?(?P<a>{_ATOM})(?:\.\.(?P<b>{_ATOM}))?(?:\^(?P<exp>\{{[^{{}}]*\}}|[A-Za-z0-9_]+))?$"
)


def _integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{what} must be an integer, got {value}")
    return int(value)


def pattern_digits(pattern: str, **env: Rational) -> list[Fraction]:
    """Expand a pattern to its digit list."""
    digits: list[Fraction] = []
    for token in _split_tokens(pattern):
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"cannot parse pattern token {token!r}")
        a = eval_expr(_strip(m["a"], "(", ")"), env)
        if m["b"] is not None:
            if m["exp"] is not None:
                raise ValueError(f"a run cannot carry an exponent: {token!r}")
            lo = _integer(a, "run bound")
            hi = _integer(eval_expr(_strip(m["b"], "(", ")"), env), "run bound")
            step = -1 if m["desc"] else 1
            digits.extend(Fraction(x) for x in range(lo, hi + step, step))
            continue
        if m["desc"]:
            raise ValueError(f"'~' only applies to runs: {token!r}")
        count = 1
        if m["exp"] is not None:
            count = _integer(eval_expr(_strip(m["exp"], "{", "}"), env), "exponent")
            if count < 0:
                raise ValueError(f"negative run length {count} in {token!r}")
        digits.extend([a] * count)
    return digits


def from_pattern(pattern: str, **env: Rational) -> GenExpansion:
    digits = pattern_digits(pattern, **env)
    if not digits:
        raise ValueError(f"pattern {pattern!r} expands to an empty expansion")
    return GenExpansion(tuple(digits))


def format_rational(x: Fraction) -> str:
    """Exact ``num/den`` string."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
