"""Structure-constant engine for finite-dimensional commutative algebras."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DimensionMismatch, NotAnIdeal
from .exactfield import Number, fmt, normalize, simplify
from .linalg import Echelon, Subspace, nullspace, solve


class Algebra:
    """Commutative algebra given by ``sc[i][j]`` = coordinates of e_i e_j."""

    def __init__(self, labels: Sequence[str], sc, check: bool = True):
        self.labels = tuple(labels)
        n = len(self.labels)
        if n < 1:
            raise ValueError("an algebra needs at least one basis element")
        sc = [[tuple(simplify(x) for x in sc[i][j]) for j in range(n)] for i in range(n)]
        if check:
            for i in range(n):
                for j in range(n):
                    if len(sc[i][j]) != n:
                        raise DimensionMismatch(f"product e{i}e{j} has wrong length")
                    if sc[i][j] != sc[j][i]:
                        raise ValueError(
                            f"structure constants are not commutative at ({self.labels[i]}, {self.labels[j]})"
                        )
        self.sc = tuple(tuple(row) for row in sc)
        self._table = [
            (i, j, k, c)
            for i in range(n)
            for j in range(n)
            for k, c in enumerate(self.sc[i][j])
            if c != 0
        ]
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self):
        return f"Algebra(dim={self.dim}, labels={list(self.labels)})"

    # -- elements --------------------------------------------------------
    def element(self, coords: Sequence[Number]) -> "Element":
        return Element(self, tuple(simplify(c) for c in coords))

    def zero(self) -> "Element":
        return Element(self, (Fraction(0),) * self.dim)

    def basis(self) -> list["Element"]:
        return [self.unit_vector(i) for i in range(self.dim)]

    def unit_vector(self, i: int) -> "Element":
        return Element(self, tuple(Fraction(int(i == j)) for j in range(self.dim)))

    def __getitem__(self, label: str) -> "Element":
        return self.unit_vector(self._index[label])

    def from_dict(self, coeffs: dict[str, Number]) -> "Element":
        v = [Fraction(0)] * self.dim
        for lab, c in coeffs.items():
            v[self._index[lab]] += c
        return self.element(v)

    # -- products ----------------------------------------------------------
    def mul_vec(self, x: Sequence, y: Sequence) -> tuple:
        out = [0] * self.dim
        for i, j, k, c in self._table:
            xi = x[i]
            if xi == 0:
                continue
            yj = y[j]
            if yj == 0:
                continue
            out[k] = out[k] + xi * yj * c
        return tuple(simplify(v) for v in out)

    def ad_matrix(self, x: Sequence) -> list[list]:
        """Matrix of y -> xy (column j is x e_j)."""
        cols = [self.mul_vec(x, self.unit_vector(j).coords) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def restrict(self, vectors: Sequence[Sequence], labels: Sequence[str] | None = None) -> "Algebra":
        """Structure constants of the subalgebra on a given basis of a closed subspace."""
        vectors = [tuple(v) for v in vectors]
        if labels is None:
            labels = [f"s{i}" for i in range(len(vectors))]
        cols = [[v[r] for v in vectors] for r in range(self.dim)]
        sc = []
        for i, vi in enumerate(vectors):
            row = []
            for j, vj in enumerate(vectors):
                prod = self.mul_vec(vi, vj)
                coords = solve(cols, prod)
                if coords is None:
                    raise ValueError("the given vectors do not span a subalgebra")
                row.append(coords)
            sc.append(row)
        return Algebra(labels, sc)

    def is_associative(self) -> bool:
        e = self.basis()
        return all((x * y) * z == x * (y * z) for x in e for y in e for z in e)

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "sc": [[[fmt(c) for c in self.sc[i][j]] for j in range(self.dim)] for i in range(self.dim)],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "Algebra":
        if isinstance(data, str):
            data = json.loads(data)
        sc = [[[normalize(c) for c in cell] for cell in row] for row in data["sc"]]
        return cls(data["labels"], sc)


@dataclass(frozen=True, eq=False)
class Element:
    algebra: Algebra
    coords: tuple

    def _check(self, other: "Element"):
        if other.algebra is not self.algebra:
            raise DimensionMismatch("elements belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.algebra, tuple(simplify(a + b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.algebra, tuple(simplify(a - b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra, self.algebra.mul_vec(self.coords, other.coords))
        return Element(self.algebra, tuple(simplify(a * other) for a in self.coords))

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return Element(self.algebra, tuple(simplify(a / other) for a in self.coords))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        parts = []
        for lab, c in zip(self.algebra.labels, self.coords):
            if c != 0:
                parts.append(f"({fmt(c)})*{lab}")
        return " + ".join(parts) if parts else "0"


def multiply(A: Algebra, x: Element, y: Element) -> Element:
    if x.algebra is not A or y.algebra is not A:
        raise DimensionMismatch("elements do not belong to the algebra")
    return x * y


def ad_eigenspace(A: Algebra, a: Element, lam: Number) -> Subspace:
    """Exact kernel of ad_a - lam * id."""
    M = A.ad_matrix(a.coords)
    for i in range(A.dim):
        M[i][i] = M[i][i] - lam
    return Subspace(A.dim, nullspace(M, A.dim))


def _closure(A: Algebra, gens: Sequence[Element], ideal: bool) -> Subspace:
    ech = Echelon(A.dim)
    found: list[tuple] = []
    queue: list[tuple] = []
    for g in gens:
        if ech.add(g.coords):
            queue.append(tuple(g.coords))
    basis_vecs = [e.coords for e in A.basis()]
    while queue:
        v = queue.pop()
        found.append(v)
        partners = basis_vecs if ideal else found
        for w in partners:
            p = A.mul_vec(v, w)
            if ech.add(p):
                queue.append(p)
    return ech.freeze()


@dataclass(frozen=True)
class Closure:
    subspace: Subspace
    algebra: Algebra

    @property
    def dim(self) -> int:
        return self.subspace.dim


def subalgebra_closure(A: Algebra, gens: Sequence[Element]) -> Closure:
    """Smallest product-closed subspace containing ``gens``, with its induced algebra."""
    if not gens:
        raise ValueError("need at least one generator")
    S = _closure(A, gens, ideal=False)
    if S.dim == 0:
        return Closure(S, Algebra(["0"], [[(Fraction(0),)]]))
    return Closure(S, A.restrict(S.basis))


def ideal_closure(A: Algebra, gens: Sequence[Element]) -> Subspace:
    return _closure(A, gens, ideal=True)


def is_ideal(A: Algebra, I: Subspace) -> bool:
    return all(I.contains(A.mul_vec(v, e.coords)) for v in I.basis for e in A.basis())


@dataclass(frozen=True)
class Quotient:
    """A / I on the complement spanned by the non-pivot standard basis vectors."""

    algebra: Algebra
    ideal: Subspace
    complement: tuple[int, ...]
    source: Algebra

    def project(self, x: Element) -> Element:
        r = self.ideal.reduce(x.coords)
        return self.algebra.element([r[k] for k in self.complement])

    def lift(self, y: Element) -> Element:
        v = [Fraction(0)] * self.source.dim
        for k, c in zip(self.complement, y.coords):
            v[k] = c
        return self.source.element(v)


def quotient(A: Algebra, I: Subspace) -> Quotient:
    if not is_ideal(A, I):
        raise NotAnIdeal("subspace is not closed under multiplication by the algebra")
    comp = tuple(k for k in range(A.dim) if k not in I.pivots)
    if not comp:
        raise NotAnIdeal("quotient by the whole algebra is the zero space")
    sc = []
    for i in comp:
        row = []
        for j in comp:
            r = I.reduce(A.sc[i][j])
            row.append(tuple(r[k] for k in comp))
        sc.append(row)
    Q = Algebra([A.labels[k] for k in comp], sc)
    return Quotient(Q, I, comp, A)


def change_basis(A: Algebra, P: Sequence[Sequence[Number]], labels: Sequence[str] | None = None) -> tuple[Algebra, Callable]:
    """Re-express A in the basis whose i-th vector is row P[i].

    Returns the new algebra and a map sending elements of A to it.
    """
    B = A.restrict(P, labels or [f"f{i}" for i in range(A.dim)])
    cols = [[P[i][r] for i in range(A.dim)] for r in range(A.dim)]

    def transport(x: Element) -> Element:
        coords = solve(cols, x.coords)
        if coords is None:
            raise ValueError("basis change matrix is singular")
        return B.element(coords)

    return B, transport


def direct_sum(A: Algebra, B: Algebra) -> tuple[Algebra, Callable, Callable]:
    n, m = A.dim, B.dim
    labels = [f"{l}" for l in A.labels] + [f"{l}'" if l in A.labels else l for l in B.labels]
    zero = Fraction(0)
    sc = [[(zero,) * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            sc[i][j] = tuple(A.sc[i][j]) + (zero,) * m
    for i in range(m):
        for j in range(m):
            sc[n + i][n + j] = (zero,) * n + tuple(B.sc[i][j])
    S = Algebra(labels, sc)
    return (
        S,
        lambda x: S.element(tuple(x.coords) + (zero,) * m),
        lambda y: S.element((zero,) * n + tuple(y.coords)),
    )
