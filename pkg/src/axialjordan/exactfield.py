"""Exact arithmetic in multiquadratic extensions of the rationals.

A :class:`Scalar` is a finite sum ``sum(c_K * sqrt(prod(K)))`` where each key
``K`` is a set of distinct primes (and possibly ``-1`` for ``sqrt(-1)``) and
each ``c_K`` is a :class:`fractions.Fraction`.  Square roots of distinct
square-free integers are linearly independent over Q, so the representation
is unique once zero coefficients are dropped; equality and zero-testing are
therefore exact.

Plain ``int`` and ``Fraction`` values interoperate with ``Scalar`` through the
usual operators, so code that never takes a root stays on the fast
``Fraction`` path.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Union

from .errors import DivisionByZero, NestedRadical, ParseError

_RATIONAL_KEY: frozenset = frozenset()

Number = Union[int, Fraction, "Scalar"]


@lru_cache(maxsize=4096)
def _key_product(k1: frozenset, k2: frozenset) -> tuple[frozenset, int]:
    coef = 1
    for p in k1 & k2:
        coef *= p
    return k1 ^ k2, coef


def _radicand(key: frozenset) -> int:
    m = 1
    for p in key:
        m *= p
    return m


class Scalar:
    """Immutable element of Q(sqrt(d1), ..., sqrt(dk))."""

    __slots__ = ("_terms",)

    def __init__(self, value: Number | str = 0):
        if isinstance(value, Scalar):
            terms = value._terms
        elif isinstance(value, str):
            terms = normalize(value)._terms
        elif isinstance(value, Rational):
            terms = {_RATIONAL_KEY: Fraction(value)} if value else {}
        else:
            raise TypeError(f"cannot build a Scalar from {type(value).__name__}")
        object.__setattr__(self, "_terms", terms)

    @classmethod
    def _from_terms(cls, terms: dict) -> "Scalar":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- structure -------------------------------------------------------
    @property
    def terms(self) -> dict:
        """Mapping radicand (signed square-free int) -> rational coefficient."""
        return {_radicand(k): c for k, c in self._terms.items()}

    @property
    def radicands(self) -> tuple[int, ...]:
        primes: set[int] = set()
        for k in self._terms:
            primes.update(k)
        return tuple(sorted(primes))

    @property
    def tower(self) -> "FieldTower":
        return FieldTower(self.radicands)

    def is_rational(self) -> bool:
        return all(not k for k in self._terms)

    def rational_part(self) -> Fraction:
        return self._terms.get(_RATIONAL_KEY, Fraction(0))

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.rational_part()

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Scalar | None":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, Rational):
            return Scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for k, c in o._terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return Scalar._from_terms(terms)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._from_terms({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return Scalar()
            f = Fraction(other)
            return Scalar._from_terms({k: c * f for k, c in self._terms.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        terms: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k, m = _key_product(k1, k2)
                terms[k] = terms.get(k, 0) + c1 * c2 * m
        return Scalar._from_terms({k: c for k, c in terms.items() if c})

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self._terms:
            raise DivisionByZero("division by an exactly-zero scalar")
        if self.is_rational():
            return Scalar._from_terms({_RATIONAL_KEY: 1 / self.rational_part()})
        # x = u + v*sqrt(p); x * (u - v*sqrt(p)) = u^2 - p v^2 has no sqrt(p)
        p = max(self.radicands, key=abs)
        pk = frozenset((p,))
        u: dict = {}
        v: dict = {}
        for k, c in self._terms.items():
            if p in k:
                v[k - pk] = c
            else:
                u[k] = c
        u_s, v_s = Scalar._from_terms(u), Scalar._from_terms(v)
        conj = u_s - v_s * Scalar._from_terms({pk: Fraction(1)})
        norm = u_s * u_s - v_s * v_s * p
        return conj * norm.inverse()

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, Rational):
            if not other:
                raise DivisionByZero("division by an exactly-zero scalar")
            return self * (1 / Fraction(other))
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Scalar(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._terms == other._terms
        if isinstance(other, Rational):
            if not other:
                return not self._terms
            return self.is_rational() and self.rational_part() == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_part())
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- text ------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        items = sorted(self._terms.items(), key=lambda kc: (abs(_radicand(kc[0])), _radicand(kc[0])))
        parts = []
        for k, c in items:
            if not k:
                body, sign = str(abs(c)), c < 0
            else:
                root = f"sqrt({_radicand(k)})"
                sign = c < 0
                body = root if abs(c) == 1 else f"{abs(c)}*{root}"
            if not parts:
                parts.append(f"-{body}" if sign else body)
            else:
                parts.append(f" - {body}" if sign else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Scalar('{self}')"

    def __reduce__(self):
        return (Scalar, (str(self),))


@dataclass(frozen=True)
class FieldTower:
    """The multiquadratic field Q(sqrt(r) for r in radicands).

    Radicands are primes (and ``-1``), which keeps them pairwise coprime and
    square-free; the products of distinct roots form a basis.
    """

    radicands: tuple[int, ...] = ()

    @classmethod
    def of(cls, *values: Number) -> "FieldTower":
        primes: set[int] = set()
        for x in values:
            if isinstance(x, Scalar):
                primes.update(x.radicands)
        return cls(tuple(sorted(primes)))

    @property
    def degree(self) -> int:
        return 2 ** len(self.radicands)

    def __contains__(self, x) -> bool:
        if isinstance(x, Scalar):
            return set(x.radicands) <= set(self.radicands)
        return isinstance(x, Rational)

    def join(self, other: "FieldTower") -> "FieldTower":
        return FieldTower(tuple(sorted(set(self.radicands) | set(other.radicands))))


def _factor(n: int) -> dict[int, int]:
    from sympy import factorint

    return factorint(n)


def sqrt(x: Number | str) -> Scalar:
    """Square root of a rational, adjoining a new radicand when needed.

    Positive rationals get the positive root; ``sqrt(-q) = sqrt(-1) * sqrt(q)``.
    Irrational arguments raise :class:`NestedRadical`.
    """
    if isinstance(x, str):
        x = normalize(x)
    if isinstance(x, Scalar):
        if not x.is_rational():
            raise NestedRadical(f"sqrt of irrational value {x}")
        q = x.rational_part()
    else:
        q = Fraction(x)
    if q == 0:
        return Scalar()
    num = abs(q.numerator) * q.denominator
    square, primes = 1, set()
    for p, e in _factor(num).items():
        square *= p ** (e // 2)
        if e % 2:
            primes.add(p)
    if q < 0:
        primes.add(-1)
    return Scalar._from_terms({frozenset(primes): Fraction(square, q.denominator)})


def is_zero(x: Number) -> bool:
    return x == 0


def as_scalar(x: Number | str) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def simplify(x: Number) -> Number:
    """Demote rational Scalars to Fraction (keeps later arithmetic fast)."""
    if isinstance(x, Scalar) and x.is_rational():
        return x.rational_part()
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


def fmt(x: Number) -> str:
    """Render any field element in the scalar grammar."""
    if isinstance(x, Scalar):
        return str(x)
    return str(Fraction(x))


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
}


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Scalar(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Div):
            return left / right
        if type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](left, right)
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "sqrt"
        and len(node.args) == 1
        and not node.keywords
    ):
        return sqrt(_eval(node.args[0]))
    raise ParseError(f"unsupported syntax: {ast.dump(node)}")


def normalize(expr: str) -> Scalar:
    """Parse and evaluate a scalar expression such as ``"1/2 - 3*sqrt(8)"``."""
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse scalar {expr!r}") from exc
    return _eval(tree)


def parse_number(text: str) -> Number:
    """Parse to the cheapest exact representation (Fraction when rational)."""
    return simplify(normalize(text))


def parse_list(text: str) -> list[Number]:
    return [parse_number(t) for t in _split_top_level(text)]


def _split_top_level(text: str) -> Iterable[str]:
    depth, start = 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[start:i]
            start = i + 1
    yield text[start:]
