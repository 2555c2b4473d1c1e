"""Axes of Jordan type 1/2, Peirce decomposition, Miyamoto involutions and
the Frobenius form with its radical."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, Element, ad_eigenspace, ideal_closure, quotient, subalgebra_closure
from .errors import (
    DecompositionIncomplete,
    KernelNotIdeal,
    NonUnique,
    NoSolution,
    NotAnAxis,
    Unclassifiable,
)
from .exactfield import Number, fmt, normalize, simplify
from .linalg import Echelon, Subspace, solve

HALF = Fraction(1, 2)
EIGENVALUES = (Fraction(0), Fraction(1), HALF)

# (left, right, allowed targets): A_left * A_right must lie in the sum of the targets.
FUSION_RULES = (
    (0, 0, (0,)),
    (1, 1, (1,)),
    (0, 1, ()),
    (0, HALF, (HALF,)),
    (1, HALF, (HALF,)),
    (HALF, HALF, (0, 1)),
)


@dataclass
class AxisReport:
    is_idempotent: bool
    dim_A1: int
    decomposition_complete: bool
    fusion_ok: bool
    violations: list[str] = field(default_factory=list)

    @property
    def is_axis(self) -> bool:
        return self.is_idempotent and self.dim_A1 == 1 and self.decomposition_complete and self.fusion_ok


def peirce_spaces(A: Algebra, a: Element) -> dict:
    return {lam: ad_eigenspace(A, a, lam) for lam in EIGENVALUES}


def axis_report(A: Algebra, a: Element) -> AxisReport:
    violations = []
    idem = a * a == a
    if not idem:
        violations.append("a^2 != a")
    spaces = peirce_spaces(A, a)
    dim1 = spaces[1].dim
    if dim1 != 1:
        violations.append(f"dim A_1(a) = {dim1}")
    total = Subspace(A.dim, [v for S in spaces.values() for v in S.basis])
    complete = total.dim == A.dim
    if not complete:
        violations.append(f"eigenspaces span only {total.dim} of {A.dim} dimensions")
    fusion_ok = True
    for l, r, targets in FUSION_RULES:
        target = Subspace(A.dim, [v for t in targets for v in spaces[t].basis])
        for u in spaces[l].basis:
            for w in spaces[r].basis:
                if not target.contains(A.mul_vec(u, w)):
                    fusion_ok = False
                    violations.append(f"A_{l} * A_{r} not inside {'+'.join(f'A_{t}' for t in targets) or '0'}")
                    break
            else:
                continue
            break
    return AxisReport(idem, dim1, complete, fusion_ok, violations)


def require_axis(A: Algebra, a: Element) -> dict:
    rep = axis_report(A, a)
    if not rep.is_idempotent or rep.dim_A1 != 1 or not rep.fusion_ok:
        raise NotAnAxis("; ".join(rep.violations))
    if not rep.decomposition_complete:
        raise DecompositionIncomplete("; ".join(rep.violations))
    return peirce_spaces(A, a)


def _split(A: Algebra, spaces: dict, x: Element) -> tuple[Element, Element, Element]:
    vecs = [(lam, v) for lam in EIGENVALUES for v in spaces[lam].basis]
    cols = [[v[r] for _, v in vecs] for r in range(A.dim)]
    coeffs = solve(cols, x.coords)
    if coeffs is None:
        raise DecompositionIncomplete("x is not in the sum of the eigenspaces")
    parts = {lam: A.zero() for lam in EIGENVALUES}
    for (lam, v), c in zip(vecs, coeffs):
        if c != 0:
            parts[lam] = parts[lam] + A.element(v) * c
    return parts[0], parts[1], parts[HALF]


def peirce_decompose(A: Algebra, a: Element, x: Element) -> tuple[Element, Element, Element]:
    """Return (x0, x1, x_half) with x = x0 + x1 + x_half."""
    return _split(A, require_axis(A, a), x)


class Miyamoto:
    """tau_a as a reusable map (eigenspaces computed once)."""

    def __init__(self, A: Algebra, a: Element):
        self.A, self.a = A, a
        self.spaces = require_axis(A, a)

    def phi(self, y: Element) -> Element:
        return _split(self.A, self.spaces, y)[1]

    def __call__(self, y: Element) -> Element:
        return y - (y * self.a) * 4 + self.phi(y) * 4


def miyamoto(A: Algebra, a: Element, y: Element) -> Element:
    """y - 4ya + 4 phi_a(y), phi_a the projection onto A_1(a)."""
    return Miyamoto(A, a)(y)


@dataclass(frozen=True)
class GramForm:
    """Symmetric matrix of the Frobenius form on the algebra basis."""

    algebra: Algebra
    matrix: tuple
    solution_dim: int = 1

    def __call__(self, x: Element, y: Element) -> Number:
        total = 0
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            row = self.matrix[i]
            for j, yj in enumerate(y.coords):
                if yj != 0 and row[j] != 0:
                    total = total + xi * row[j] * yj
        return simplify(total)

    value = __call__

    def is_symmetric(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == self.matrix[j][i] for i in range(n) for j in range(n))

    def association_defects(self) -> list[tuple]:
        """Triples (i, j, k) with (e_i e_j, e_k) != (e_i, e_j e_k)."""
        e = self.algebra.basis()
        bad = []
        for i, x in enumerate(e):
            for j, y in enumerate(e):
                xy = x * y
                for k, z in enumerate(e):
                    if self(xy, z) != self(x, y * z):
                        bad.append((i, j, k))
        return bad

    def kernel(self) -> Subspace:
        from .linalg import nullspace

        n = len(self.matrix)
        return Subspace(n, nullspace([list(r) for r in self.matrix], n))

    def to_json(self) -> list:
        return [[fmt(c) for c in row] for row in self.matrix]

    @classmethod
    def from_json(cls, algebra: Algebra, data: list) -> "GramForm":
        return cls(algebra, tuple(tuple(simplify(normalize(c)) for c in row) for row in data))


def frobenius_form(A: Algebra, axes: Sequence[Element], check_generation: bool = True) -> GramForm:
    """Unique associating symmetric form with (a, a) = 1 on the given axes.

    Unknowns are the n(n+1)/2 Gram entries plus a homogenizing scale t; the
    normalization rows read (a, a) = t.  The system must have a one-dimensional
    solution space whose generator has t != 0.
    """
    n = A.dim
    if check_generation and subalgebra_closure(A, list(axes)).dim != n:
        raise ValueError("designated axes do not generate the algebra")
    idx = {}
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = len(idx)
    t = len(idx)

    def var(i, j):
        return idx[(i, j)] if i <= j else idx[(j, i)]

    ech = Echelon(t + 1)
    sc = A.sc
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                # (e_i e_j, e_k) - (e_i, e_j e_k) = 0
                row: dict = {}
                for l, c in enumerate(sc[i][j]):
                    if c != 0:
                        v = var(l, k)
                        row[v] = row.get(v, 0) + c
                for l, c in enumerate(sc[j][k]):
                    if c != 0:
                        v = var(i, l)
                        row[v] = row.get(v, 0) - c
                row = {v: c for v, c in row.items() if c != 0}
                if row:
                    ech.add_sparse(row)
    for a in axes:
        row = {}
        for i, ai in enumerate(a.coords):
            if ai == 0:
                continue
            for j, aj in enumerate(a.coords):
                if aj == 0:
                    continue
                v = var(i, j)
                row[v] = row.get(v, 0) + ai * aj
        row[t] = row.get(t, 0) - 1
        ech.add_sparse({v: c for v, c in row.items() if c != 0})
    sols = ech.nullspace()
    if not sols or all(s[t] == 0 for s in sols):
        raise NoSolution("no associating form normalizes the designated axes")
    if len(sols) > 1:
        raise NonUnique(f"associating forms normalized on the axes form a {len(sols) - 1}-parameter family")
    s = sols[0]
    scale = Fraction(1) / s[t]
    G = [[simplify(s[var(i, j)] * scale) for j in range(n)] for i in range(n)]
    return GramForm(A, tuple(tuple(r) for r in G), solution_dim=len(sols))


def radical(A: Algebra, G: GramForm) -> Subspace:
    """Kernel of the Gram matrix, verified to be an ideal."""
    if not G.is_symmetric():
        raise ValueError("Gram matrix is not symmetric")
    K = G.kernel()
    if K.dim and ideal_closure(A, [A.element(v) for v in K.basis]) != K:
        raise KernelNotIdeal("form kernel is not closed under multiplication")
    return K


def classify_2gen(A: Algebra, a: Element, b: Element, G: GramForm | None = None) -> int:
    """Case number 1..6 of the two-generated classification for A = <<a, b>>."""
    dim = subalgebra_closure(A, [a, b]).dim
    if dim != A.dim:
        raise ValueError("a and b do not generate the algebra")
    if dim > 3:
        raise Unclassifiable(f"two axes generate a {dim}-dimensional algebra")
    if G is None:
        G = frobenius_form(A, [a, b], check_generation=False)
    alpha = G(a, b)
    if dim == 1:
        return 1
    if dim == 2:
        if alpha == 0:
            return 2
        if alpha == 1:
            return 3
        raise Unclassifiable(f"two-dimensional algebra with (a,b) = {fmt(alpha)}")
    if alpha == 0:
        return 4
    if alpha == 1:
        return 5
    return 6


# case -> (dim A, dim R(A))
TWO_GEN_CASES = {1: (1, 0), 2: (2, 0), 3: (2, 1), 4: (3, 1), 5: (3, 2), 6: (3, 0)}


@dataclass
class IdentityReport:
    alpha: Number
    residuals: dict[str, Element]

    @property
    def ok(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())

    def failures(self) -> list[str]:
        return [k for k, r in self.residuals.items() if not r.is_zero()]


def verify_axis_identities(A: Algebra, a: Element, b: Element, alpha: Number | None = None) -> IdentityReport:
    """Residuals of the Peirce-component and product identities for axes a, b.

    a_l(b) denotes the component of b in A_l(a), so b = a_0(b) + alpha a + a_half(b):
      a_0(b)^2 = (1-alpha) a_0(b)
      a_half(b)^2 = alpha a_0(b) + (alpha - alpha^2) a
      a_0(b) a_half(b) = (1-alpha)/2 a_half(b)
      a(ab) = (alpha a + ab)/2,  (ab)b = (alpha b + ab)/2,  (ab)^2 = alpha/4 (a + b + 2ab)
    """
    if alpha is None:
        gens = subalgebra_closure(A, [a, b])
        alpha = _pair_form_value(A, gens, a, b)
    alpha = simplify(alpha)
    b0, b1, bh = peirce_decompose(A, a, b)
    ab = a * b
    res = {
        "a_0(b)^2": b0 * b0 - b0 * (1 - alpha),
        "a_half(b)^2": bh * bh - b0 * alpha - a * (alpha - alpha * alpha),
        "a_0(b) a_half(b)": b0 * bh - bh * ((1 - alpha) / 2),
        "a(ab)": a * ab - (a * alpha + ab) * HALF,
        "(ab)b": ab * b - (b * alpha + ab) * HALF,
        "(ab)^2": ab * ab - (a + b + ab * 2) * (alpha / 4),
        "a_1(b) = alpha a": b1 - a * alpha,
    }
    return IdentityReport(alpha, res)


def _pair_form_value(A: Algebra, closure, a: Element, b: Element) -> Number:
    """(a, b) computed inside <<a, b>> (the form there is the restriction)."""
    S = closure.subspace
    sub = closure.algebra
    ea = sub.element(S.coordinates(a.coords))
    eb = sub.element(S.coordinates(b.coords))
    G = frobenius_form(sub, [ea, eb], check_generation=False)
    return G(ea, eb)


@dataclass
class QuotientFormReport:
    mismatches: list[tuple]
    quotient_dim: int
    induced: GramForm | None = None

    @property
    def ok(self) -> bool:
        return not self.mismatches


def quotient_form_check(A: Algebra, G: GramForm, axes: Sequence[Element], I: Subspace | None = None) -> QuotientFormReport:
    """Compare G with the Frobenius form of A/I on coset representatives."""
    if I is None:
        I = radical(A, G)
    Q = quotient(A, I)
    qaxes = [Q.project(a) for a in axes]
    H = frobenius_form(Q.algebra, qaxes)
    mismatches = []
    for p, i in enumerate(Q.complement):
        for q, j in enumerate(Q.complement):
            if G.matrix[i][j] != H.matrix[p][q]:
                mismatches.append((A.labels[i], A.labels[j], G.matrix[i][j], H.matrix[p][q]))
    # representatives may also be arbitrary lifts: (x + r, y + s) = (x, y) for r, s in I
    for r in I.basis:
        for e in A.basis():
            if G(A.element(r), e) != 0:
                mismatches.append(("radical", e, G(A.element(r), e), 0))
                break
    return QuotientFormReport(mismatches, Q.algebra.dim, H)
