"""Exact Gaussian elimination over any field whose elements support + - * /.

Rows are kept sparse (``dict`` column -> nonzero value) and fully reduced, so
the echelon basis of a subspace is unique and membership tests are a single
pass over the pivots.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exactfield import simplify


def _sparse(v: Sequence) -> dict:
    return {i: simplify(x) for i, x in enumerate(v) if x != 0}


def _dense(row: dict, n: int) -> tuple:
    return tuple(row.get(i, 0) for i in range(n))


class Echelon:
    """Mutable reduced row echelon basis, grown one vector at a time."""

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    def reduce_sparse(self, v: dict) -> dict:
        v = dict(v)
        for p, row in self.rows.items():
            c = v.get(p)
            if c is None:
                continue
            for j, r in row.items():
                s = v.get(j, 0) - c * r
                if s != 0:
                    v[j] = s
                else:
                    v.pop(j, None)
        return v

    def add_sparse(self, v: dict) -> bool:
        r = self.reduce_sparse(v)
        if not r:
            return False
        p = min(r)
        inv = Fraction(1) / r[p]
        r = {j: simplify(x * inv) for j, x in r.items()}
        r[p] = Fraction(1)
        for row in self.rows.values():
            c = row.get(p)
            if c is None:
                continue
            for j, x in r.items():
                s = row.get(j, 0) - c * x
                if s != 0:
                    row[j] = simplify(s)
                else:
                    row.pop(j, None)
        self.rows[p] = r
        return True

    def add(self, v: Sequence) -> bool:
        return self.add_sparse(_sparse(v))

    def contains(self, v: Sequence) -> bool:
        return not self.reduce_sparse(_sparse(v))

    def nullspace(self) -> list[tuple]:
        """Basis of the solutions x of ``row . x = 0`` for all stored rows."""
        pivots = set(self.rows)
        basis = []
        for f in range(self.n):
            if f in pivots:
                continue
            x = {f: Fraction(1)}
            for p, row in self.rows.items():
                c = row.get(f)
                if c is not None:
                    x[p] = -c
            basis.append(_dense(x, self.n))
        return basis

    def freeze(self) -> "Subspace":
        return Subspace._from_rows(self.n, self.rows)


class Subspace:
    """Immutable subspace of F^n stored by its reduced echelon basis."""

    __slots__ = ("n", "basis", "pivots", "_rows")

    def __init__(self, n: int, vectors: Iterable[Sequence] = ()):
        ech = Echelon(n)
        for v in vectors:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in a space of dimension {n}")
            ech.add(v)
        self._init(n, ech.rows)

    @classmethod
    def _from_rows(cls, n: int, rows: dict) -> "Subspace":
        obj = cls.__new__(cls)
        obj._init(n, rows)
        return obj

    def _init(self, n, rows):
        self.n = n
        self.pivots = tuple(sorted(rows))
        self._rows = {p: dict(rows[p]) for p in self.pivots}
        self.basis = tuple(_dense(self._rows[p], n) for p in self.pivots)

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def echelon(self) -> Echelon:
        ech = Echelon(self.n)
        ech.rows = {p: dict(r) for p, r in self._rows.items()}
        return ech

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of v modulo the subspace (zero exactly at the pivots)."""
        return _dense(self.echelon().reduce_sparse(_sparse(v)), self.n)

    def contains(self, v: Sequence) -> bool:
        return not self.echelon().reduce_sparse(_sparse(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of v in the echelon basis; v must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(simplify(v[p]) for p in self.pivots)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def rank(vectors: Iterable[Sequence]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return Subspace(len(vectors[0]), vectors).dim


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[tuple]:
    """Basis of {x : matrix @ x = 0}."""
    if ncols is None:
        ncols = len(matrix[0])
    ech = Echelon(ncols)
    for row in matrix:
        ech.add(row)
    return ech.nullspace()


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> tuple | None:
    """One solution of matrix @ x = rhs, or None if inconsistent."""
    n = len(matrix[0])
    ech = Echelon(n + 1)
    for row, b in zip(matrix, rhs):
        ech.add(list(row) + [-b])
    if n in ech.rows:
        return None
    x = [Fraction(0)] * n
    for p, row in ech.rows.items():
        x[p] = simplify(-row.get(n, 0))
    return tuple(x)
