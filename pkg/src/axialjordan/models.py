"""Concrete algebras of Jordan type 1/2 and explicit generating axes.

Every builder returns a :class:`ModelAlgebra`: an ambient algebra in a
standard basis plus designated axes ``a, b, c`` (or fewer).  Matrix models
also keep their :class:`MatrixSpace` so the trace form can be compared with
the Frobenius form.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .algebra import Algebra, Element, direct_sum, subalgebra_closure
from .axial import Miyamoto, frobenius_form
from .errors import (
    BranchRootMissing,
    DegenerateParameters,
    ModelUnrealizable,
    NestedRadical,
    NoRationalSolution,
)
from .exactfield import Number, fmt, parse_list, simplify, sqrt
from .linalg import nullspace, solve

log = logging.getLogger(__name__)

F = Fraction
HALF = F(1, 2)

# index pair -> position in (alpha, beta, gamma)
_PAIR_SLOT = {frozenset((0, 1)): 0, frozenset((1, 2)): 1, frozenset((0, 2)): 2}


class ParameterTuple(NamedTuple):
    """alpha = (a,b), beta = (b,c), gamma = (a,c), psi = (ab,c)."""

    alpha: Number
    beta: Number
    gamma: Number
    psi: Number

    @classmethod
    def parse(cls, text: str) -> "ParameterTuple":
        values = parse_list(text)
        if len(values) != 4:
            raise ValueError(f"expected four comma-separated scalars, got {len(values)}")
        return cls(*values)

    @classmethod
    def of(cls, *values) -> "ParameterTuple":
        if len(values) == 1:
            values = tuple(values[0])
        return cls(*(simplify(F(v) if isinstance(v, (int, str)) else v) for v in values))

    def pair(self, i: int, j: int) -> Number:
        """Form value between generators i and j (0 = a, 1 = b, 2 = c)."""
        if i == j:
            return F(1)
        return self[_PAIR_SLOT[frozenset((i, j))]]

    def permuted(self, perm: Sequence[int]) -> "ParameterTuple":
        """Parameters of the generator triple (g[perm[0]], g[perm[1]], g[perm[2]])."""
        x, y, z = perm
        return ParameterTuple(self.pair(x, y), self.pair(y, z), self.pair(x, z), self.psi)

    def __str__(self):
        return ",".join(fmt(v) for v in self)

    def to_json(self) -> dict:
        return {k: fmt(v) for k, v in self._asdict().items()}

    def simplicity_factor(self) -> Number:
        a, b, g, p = self
        return simplify((a + b + g - 2 * p - 1) * (a * b * g - p * p))


@dataclass
class ModelAlgebra:
    algebra: Algebra
    axes: list[Element]
    provenance: str
    params: ParameterTuple | None = None
    matrices: "MatrixSpace | None" = None
    lambdas: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    table_axes: list[Element] | None = None
    extras: dict = field(default_factory=dict)

    @property
    def designated_axes(self) -> list[Element]:
        return self.axes

    @property
    def a(self) -> Element:
        return self.axes[0]

    @property
    def b(self) -> Element:
        return self.axes[1]

    @property
    def c(self) -> Element:
        return self.axes[2]

    def form(self):
        return frobenius_form(self.algebra, self.axes)

    def recovered_params(self, G=None) -> ParameterTuple:
        G = G or self.form()
        a, b, c = self.axes[:3]
        return ParameterTuple(G(a, b), G(b, c), G(a, c), G(a * b, c))

    def to_json(self, with_form: bool = True) -> dict:
        out = {
            "provenance": self.provenance,
            "params": self.params.to_json() if self.params else None,
            **self.algebra.to_json(),
            "axes": [[fmt(c) for c in x.coords] for x in self.axes],
            "notes": list(self.notes),
        }
        if self.lambdas:
            out["lambdas"] = {k: v if isinstance(v, str) else fmt(v) for k, v in self.lambdas.items()}
        if with_form:
            out["gram"] = self.form().to_json()
        return out


# ---------------------------------------------------------------- matrices


def matmul(X, Y):
    n, m, p = len(X), len(Y), len(Y[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        for k in range(m):
            xik = X[i][k]
            if xik == 0:
                continue
            for j in range(p):
                if Y[k][j] != 0:
                    out[i][j] = out[i][j] + xik * Y[k][j]
    return [[simplify(v) for v in row] for row in out]


def jordan_product(X, Y):
    XY, YX = matmul(X, Y), matmul(Y, X)
    return [[simplify((u + v) / 2) for u, v in zip(r, s)] for r, s in zip(XY, YX)]


def trace(X) -> Number:
    return simplify(sum((X[i][i] for i in range(len(X))), F(0)))


def outer(u, v):
    return [[simplify(x * y) for y in v] for x in u]


def transpose(X):
    return [list(r) for r in zip(*X)]


class MatrixSpace:
    """Coordinates for M_n (kind 'full') or symmetric n x n matrices ('symmetric')."""

    def __init__(self, n: int, kind: str = "full"):
        self.n, self.kind = n, kind
        if kind == "full":
            self.slots = [(i, j) for i in range(n) for j in range(n)]
            self.labels = [f"e{i + 1}{j + 1}" for i, j in self.slots]
        elif kind == "symmetric":
            self.slots = [(i, i) for i in range(n)] + [(i, j) for i in range(n) for j in range(i + 1, n)]
            self.labels = [f"h{i + 1}{j + 1}" for i, j in self.slots]
        else:
            raise ValueError(kind)

    def basis_matrix(self, k: int):
        i, j = self.slots[k]
        M = [[F(0)] * self.n for _ in range(self.n)]
        M[i][j] = F(1)
        if self.kind == "symmetric":
            M[j][i] = F(1)
        return M

    def coords(self, M) -> tuple:
        if self.kind == "symmetric":
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    if M[i][j] != M[j][i]:
                        raise ValueError("matrix is not symmetric")
        return tuple(simplify(M[i][j]) for i, j in self.slots)

    def matrix(self, coords) -> list:
        M = [[F(0)] * self.n for _ in range(self.n)]
        for c, (i, j) in zip(coords, self.slots):
            if c == 0:
                continue
            M[i][j] = simplify(M[i][j] + c)
            if self.kind == "symmetric" and i != j:
                M[j][i] = simplify(M[j][i] + c)
        return M

    def algebra(self) -> Algebra:
        mats = [self.basis_matrix(k) for k in range(len(self.slots))]
        sc = [[self.coords(jordan_product(X, Y)) for Y in mats] for X in mats]
        return Algebra(self.labels, sc)


_ALGEBRA_CACHE: dict = {}


def _matrix_algebra(n: int, kind: str) -> tuple[MatrixSpace, Algebra]:
    key = (n, kind)
    if key not in _ALGEBRA_CACHE:
        space = MatrixSpace(n, kind)
        _ALGEBRA_CACHE[key] = (space, space.algebra())
    return _ALGEBRA_CACHE[key]


class MatrixModel(ModelAlgebra):
    def element(self, M) -> Element:
        return self.algebra.element(self.matrices.coords(M))

    def to_matrix(self, x: Element):
        return self.matrices.matrix(x.coords)

    def trace_form(self, x: Element, y: Element) -> Number:
        return trace(jordan_product(self.to_matrix(x), self.to_matrix(y)))


# ---------------------------------------------------------------- builders


def build_Fn(n: int) -> ModelAlgebra:
    """F^n with componentwise product; axes are the unit vectors."""
    if n not in (1, 2, 3):
        raise ValueError("n must be 1, 2 or 3")
    z = F(0)
    sc = [[tuple(F(int(i == j == k)) for k in range(n)) for j in range(n)] for i in range(n)]
    A = Algebra([f"e{i + 1}" for i in range(n)], sc)
    return ModelAlgebra(A, A.basis(), "Fn")


def build_jform(phi: Sequence[Sequence[Number]], axis_vectors: Sequence[Sequence[Number]] = ()) -> ModelAlgebra:
    """Jordan algebra of a symmetric bilinear form on F + V.

    (x + v)(y + w) = (xy + phi(v, w)) + (xw + yv).  Each vector v in
    ``axis_vectors`` gives the axis 1/2 + v, which requires phi(v, v) = 1/4.
    """
    k = len(phi)
    for i in range(k):
        for j in range(k):
            if phi[i][j] != phi[j][i]:
                raise ValueError("phi must be symmetric")
    n = k + 1
    zero = F(0)
    sc = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == 0:
                sc[i][j] = tuple(F(int(t == j)) for t in range(n))
            elif j == 0:
                sc[i][j] = tuple(F(int(t == i)) for t in range(n))
            else:
                sc[i][j] = (simplify(phi[i - 1][j - 1]),) + (zero,) * k
    A = Algebra(["1"] + [f"v{i + 1}" for i in range(k)], sc)
    axes = [jform_axis(A, phi, v) for v in axis_vectors]
    return ModelAlgebra(A, axes, "JForm")


def jform_axis(A: Algebra, phi, v: Sequence[Number]) -> Element:
    norm = simplify(sum((v[i] * phi[i][j] * v[j] for i in range(len(v)) for j in range(len(v))), F(0)))
    if norm != F(1, 4):
        raise ValueError(f"1/2 + v is an axis only when phi(v, v) = 1/4 (got {fmt(norm)})")
    return A.element((HALF,) + tuple(v))


def jform2_model(alpha: Number, beta: Number, gamma: Number) -> ModelAlgebra:
    """Three axes 1/2 + v_i of JForm_2 with prescribed pairwise form values.

    (1/2 + u, 1/2 + v) = 1/2 + 2 phi(u, v), so phi(u, v) = (value - 1/2)/2.
    Two axes whose value is not 0 or 1 span V; phi is their Gram matrix and
    the third vector is solved linearly, so no square roots are needed.
    """
    p = ParameterTuple(alpha, beta, gamma, 0)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if p.pair(i, j) not in (0, 1):
            break
    else:
        raise ModelUnrealizable("JForm_2 model needs a pair of axes with form value outside {0, 1}")
    k = 3 - i - j
    g = simplify((p.pair(i, j) - HALF) / 2)
    phi = [[F(1, 4), g], [g, F(1, 4)]]
    vecs = {i: (F(1), F(0)), j: (F(0), F(1))}
    rhs = [simplify((p.pair(k, i) - HALF) / 2), simplify((p.pair(k, j) - HALF) / 2)]
    vk = solve(phi, rhs)
    norm = simplify(sum((vk[r] * phi[r][s] * vk[s] for r in range(2) for s in range(2)), F(0)))
    if norm != F(1, 4):
        raise ModelUnrealizable("three axes with these form values do not fit in JForm_2")
    vecs[k] = vk
    model = build_jform(phi, [vecs[0], vecs[1], vecs[2]])
    model.provenance = "JForm"
    return model


def jform2_pair(value: Number) -> ModelAlgebra:
    """JForm_2 generated by two axes with (a, b) = value (value not 0 or 1)."""
    if value in (0, 1):
        raise DegenerateParameters("two axes with form value 0 or 1 do not generate JForm_2")
    g = simplify((value - HALF) / 2)
    phi = [[F(1, 4), g], [g, F(1, 4)]]
    model = build_jform(phi, [(F(1), F(0)), (F(0), F(1))])
    model.provenance = "JForm"
    return model


def two_generated(alpha: Number) -> ModelAlgebra:
    """Three-dimensional algebra on a, b, ab with the identities forced by (a, b) = alpha."""
    alpha = simplify(F(alpha) if isinstance(alpha, int) else alpha)
    z = F(0)
    a, b, ab = (F(1), z, z), (z, F(1), z), (z, z, F(1))
    a_ab = (alpha / 2, z, HALF)
    b_ab = (z, alpha / 2, HALF)
    ab_ab = (alpha / 4, alpha / 4, alpha / 2)
    sc = [[a, ab, a_ab], [ab, b, b_ab], [a_ab, b_ab, ab_ab]]
    A = Algebra(["a", "b", "ab"], sc)
    return ModelAlgebra(A, [A["a"], A["b"]], "TwoGen")


def two_generated_case(case: int, alpha: Number = F(1, 3)) -> ModelAlgebra:
    """Representative two-generated algebra for each of the six cases."""
    from .algebra import ideal_closure, quotient

    if case == 1:
        m = build_Fn(1)
        return ModelAlgebra(m.algebra, [m.a, m.a], "TwoGen")
    if case == 2:
        return build_Fn(2)
    if case == 3:
        B = two_generated(1)
        A = B.algebra
        r = A["a"] + A["b"] - A["ab"] * 2
        Q = quotient(A, ideal_closure(A, [r]))
        return ModelAlgebra(Q.algebra, [Q.project(A["a"]), Q.project(A["b"])], "TwoGen")
    if case == 4:
        return two_generated(0)
    if case == 5:
        return two_generated(1)
    if case == 6:
        return two_generated(alpha)
    raise ValueError("case must be 1..6")


def build_matrix_jordan(n: int) -> MatrixModel:
    """M_n^+ with diagonal matrix units as designated axes."""
    if n < 2:
        raise ValueError("n >= 2")
    space, A = _matrix_algebra(n, "full")
    axes = [A[f"e{i + 1}{i + 1}"] for i in range(n)]
    return MatrixModel(A, axes, "MatrixJordan", matrices=space)


def build_hermitian_jordan(n: int) -> MatrixModel:
    """H(M_n, transpose): symmetric matrices under the Jordan product."""
    if n < 2:
        raise ValueError("n >= 2")
    space, A = _matrix_algebra(n, "symmetric")
    axes = [A[f"h{i + 1}{i + 1}"] for i in range(n)]
    return MatrixModel(A, axes, "Hermitian", matrices=space)


def _root(x: Number, what: str) -> Number:
    try:
        return simplify(sqrt(x))
    except NestedRadical as exc:
        raise BranchRootMissing(f"{what}: square root of irrational value {fmt(x)}") from exc


def miyamoto_redesignation(p: ParameterTuple) -> ParameterTuple:
    """Parameters of (a, b, c^{tau_b}) in terms of those of (a, b, c).

    (a, c^tau_b) = gamma - 4 psi + 4 alpha beta and (ab, c^tau_b) = 2 alpha beta - psi.
    """
    a, b, g, s = p
    return ParameterTuple(a, b, simplify(g - 4 * s + 4 * a * b), simplify(2 * a * b - s))


def s7_generators(p: ParameterTuple, branch: str = "minus") -> MatrixModel:
    """Three axes generating M_2^+ with prescribed (alpha, beta, gamma, psi).

    Uses the matrices
        P = [[1-lc, 1], [lc(1-lc), lc]],  Q = [[1, 0], [lb, 0]],  R = [[1, la], [0, 0]]
    with a -> Q, b -> P, c -> R, for which
        (a,b) = 1 - lc + lb,  (b,c) = 1 - lc + la lc (1-lc),  (a,c) = 1 + la lb.
    Eliminating la, lb leaves gamma lc^2 - 2(gamma - psi) lc + (alpha-1)(beta-1) = 0
    once alpha + beta + gamma = 2 psi + 1, so
        lc = ((gamma - psi) -+ sqrt(psi^2 - alpha beta gamma)) / gamma,
        lb = alpha - 1 + lc,  la = (gamma - 1) / lb.
    For alpha = 0 only the root lc = (1 - beta)/gamma is nondegenerate.
    ``branch`` picks the sign of the root ('minus' or 'plus').

    When the requested branch degenerates (gamma = 0 or lb = 0) the other sign
    is tried, then reorderings of the generators, then c -> c^{tau_b}; each
    fallback is recorded in ``notes``.
    """
    if branch not in ("minus", "plus"):
        raise ValueError("branch must be 'minus' or 'plus'")
    p = ParameterTuple.of(p)
    al, be, ga, ps = p
    if al + be + ga != 2 * ps + 1:
        raise DegenerateParameters("M_2^+ generators need alpha + beta + gamma = 2 psi + 1")
    if ps * ps == al * be * ga:
        raise DegenerateParameters("psi^2 = alpha beta gamma: three such axes generate at most JForm_2")
    if al == 1:
        raise DegenerateParameters("alpha = 1")
    other = "plus" if branch == "minus" else "minus"
    for perm in itertools.permutations(range(3)):
        q = p.permuted(perm)
        for br in (branch, other):
            try:
                inner = _s7_core(q, br)
            except DegenerateParameters:
                continue
            if perm != (0, 1, 2):
                reorder_axes(inner, perm)
                inner.notes.append(f"built for generator order {''.join('abc'[i] for i in perm)}")
                log.info("s7: generator order %s", perm)
            if br != branch:
                inner.notes.append(f"branch {branch!r} degenerates; used {br!r}")
            inner.params = p
            inner.lambdas["branch"] = br
            return inner
    # (a, b, c) -> (a, b, c^tau_b); tau_b is an involution, so c = (c')^tau_b
    q = miyamoto_redesignation(p)
    for br in (branch, other):
        try:
            inner = _s7_core(q, br)
        except DegenerateParameters:
            continue
        a, b, c_prime = inner.axes
        inner.axes = [a, b, Miyamoto(inner.algebra, b)(c_prime)]
        inner.params = p
        inner.lambdas["branch"] = br
        inner.notes.append(f"c redesignated as c^tau_b; built from {q}")
        log.info("s7: redesignated c -> c^tau_b with parameters %s", q)
        return inner
    raise DegenerateParameters(f"no branch or redesignation realizes {p} in M_2^+")


def reorder_axes(model: ModelAlgebra, perm) -> None:
    """Axes were built for the order (g[perm[0]], g[perm[1]], g[perm[2]]); restore (a, b, c)."""
    axes = [None] * 3
    for pos, src in enumerate(perm):
        axes[src] = model.axes[pos]
    model.axes = axes


def _s7_core(p: ParameterTuple, branch: str) -> MatrixModel:
    al, be, ga, ps = p
    if al == 1 or ga == 0:
        raise DegenerateParameters("needs alpha != 1 and gamma != 0")
    if al == 0:
        if branch != "minus":
            raise DegenerateParameters("alpha = 0 has a single nondegenerate root")
        lc = simplify((1 - be) / ga)
    else:
        root = _root(ps * ps - al * be * ga, "psi^2 - alpha beta gamma")
        sign = -1 if branch == "minus" else 1
        lc = simplify(((ga - ps) + sign * root) / ga)
    lb = simplify(al - 1 + lc)
    if lb == 0:
        raise DegenerateParameters("lambda_b = 0 for this branch")
    la = simplify((ga - 1) / lb)

    space, A = _matrix_algebra(2, "full")
    P = [[1 - lc, F(1)], [lc * (1 - lc), lc]]
    Q = [[F(1), F(0)], [lb, F(0)]]
    R = [[F(1), la], [F(0), F(0)]]
    model = MatrixModel(A, [], "S7gen", params=p, matrices=space, lambdas={"lambda_a": la, "lambda_b": lb, "lambda_c": lc})
    a, b, c = model.element(Q), model.element(P), model.element(R)
    model.axes = [a, b, c]
    model.table_axes = [a, b, c]
    model.extras["matrices"] = {"A": P, "B": Q, "C": R}
    if subalgebra_closure(A, model.axes).dim != 4:
        raise DegenerateParameters("generators do not span M_2^+")
    return model


@dataclass(frozen=True)
class TraceIdentity:
    name: str
    lhs: Number
    rhs: Number

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def s7_trace_report(model: ModelAlgebra) -> list[TraceIdentity]:
    """Trace identities of the M_2^+ generator matrices P (for b), Q (for a), R (for c).

    Both the printed-form variant of tr(P o Q) and the one that follows from
    the matrices are listed; so are both candidate psi relations.
    """
    mats = model.extras.get("matrices")
    if mats is None:
        raise ValueError("model was not built by s7_generators")
    P, Q, R = mats["A"], mats["B"], mats["C"]
    la, lb, lc = (model.lambdas[k] for k in ("lambda_a", "lambda_b", "lambda_c"))
    t = lambda X, Y: trace(jordan_product(X, Y))
    pq, qr, pr = t(P, Q), t(Q, R), t(P, R)
    psi = trace(jordan_product(P, jordan_product(Q, R)))
    return [
        TraceIdentity("tr(A o B) = 1 - lambda_a + lambda_b", pq, simplify(1 - la + lb)),
        TraceIdentity("tr(A o B) = 1 - lambda_c + lambda_b", pq, simplify(1 - lc + lb)),
        TraceIdentity("tr(B o C) = 1 + lambda_a lambda_b", qr, simplify(1 + la * lb)),
        TraceIdentity("tr(A o C) = 1 - lambda_c + lambda_a lambda_c (1 - lambda_c)", pr, simplify(1 - lc + la * lc * (1 - lc))),
        TraceIdentity("alpha + beta + gamma = 2 psi + 1", simplify(pq + qr + pr), simplify(2 * psi + 1)),
        TraceIdentity("psi = (1 - alpha - beta - gamma)/2", psi, simplify((1 - pq - qr - pr) / 2)),
    ]


def s8_generators(beta: Number, gamma: Number) -> MatrixModel:
    """Axes A = E11 and two rank-one projections B, C of H(M_3) with
    (A,B) = 0, (B,C) = beta, (A,C) = gamma, psi = 0.

    The diagonal entries (1 +- s)/2 use the root s of 1 - 4 lambda^2 that the
    trace equations require: s_c = 2 gamma - 1, s_b = 1 - 2 beta/(1 - gamma).
    """
    beta, gamma = simplify(beta), simplify(gamma)
    if gamma == 0 or gamma == 1:
        raise DegenerateParameters("gamma must avoid 0 and 1")
    if beta == 0:
        raise DegenerateParameters("beta = 0")
    s_c = simplify(2 * gamma - 1)
    s_b = simplify(1 - 2 * beta / (1 - gamma))
    lc2 = simplify(gamma - gamma * gamma)
    lb2 = simplify((1 - s_b * s_b) / 4)
    if lb2 == 0:
        raise DegenerateParameters("lambda_b = 0 (beta + gamma = 1)")
    lc = simplify(sqrt(lc2))
    lb = simplify(sqrt(lb2))
    z = F(0)
    Am = [[F(1), z, z], [z, z, z], [z, z, z]]
    Bm = [[z, z, z], [z, simplify((1 + s_b) / 2), lb], [z, lb, simplify((1 - s_b) / 2)]]
    Cm = [[simplify((1 + s_c) / 2), z, lc], [z, z, z], [lc, z, simplify((1 - s_c) / 2)]]
    space, A = _matrix_algebra(3, "symmetric")
    model = MatrixModel(
        A, [], "S8gen", params=ParameterTuple(F(0), beta, gamma, F(0)), matrices=space,
        lambdas={"lambda_b": lb, "lambda_c": lc, "s_b": s_b, "s_c": s_c},
    )
    model.axes = [model.element(Am), model.element(Bm), model.element(Cm)]
    model.table_axes = list(model.axes)
    if subalgebra_closure(A, model.axes).dim != 6:
        raise DegenerateParameters("generators do not span H(M_3)")
    return model


def derived_axis(A: Algebra, a: Element, b: Element, alpha: Number) -> Element:
    """d = (2ab - alpha a - b)/(alpha - 1), an axis orthogonal to a."""
    if alpha == 0 or alpha == 1:
        raise DegenerateParameters("derived axis needs alpha outside {0, 1}")
    return (a * b * 2 - a * alpha - b) / (alpha - 1)


def _half_half_line(A: Algebra, x: Element, d: Element) -> list:
    Mx, Md = A.ad_matrix(x.coords), A.ad_matrix(d.coords)
    rows = []
    for M in (Mx, Md):
        for i in range(A.dim):
            rows.append([simplify(M[i][j] - (HALF if i == j else 0)) for j in range(A.dim)])
    return nullspace(rows, A.dim)


def switch_model(p: ParameterTuple) -> MatrixModel:
    """H(M_3) model of an A9-type tuple through the derived axis d = x_a(b).

    For an ordering (x, y, z) of the generators with (x, y) outside {0, 1},
    the triple (x, d, z) has (x, d) = 0, (d, z) = (2 psi - (y,z) - (x,y)(x,z))/((x,y) - 1)
    and is realized by the S8 matrices.  y is then rebuilt as
    (x,y) x + (1 - (x,y)) d + k h with h spanning A_1/2(x) and A_1/2(d).
    """
    p = ParameterTuple.of(p)
    ps = p.psi
    for order in itertools.permutations(range(3)):
        x, y, z = order
        pxy, pxz, pyz = p.pair(x, y), p.pair(x, z), p.pair(y, z)
        if pxy in (0, 1):
            continue
        bbar = simplify((2 * ps - pyz - pxy * pxz) / (pxy - 1))
        gbar = pxz
        if gbar in (0, 1) or bbar == 0 or bbar + gbar == 1:
            continue
        try:
            base = s8_generators(bbar, gbar)
        except (DegenerateParameters, NestedRadical):
            continue
        A = base.algebra
        X, D, Z = base.axes
        G = frobenius_form(A, [X, D, Z], check_generation=False)
        line = _half_half_line(A, X, D)
        if len(line) != 1:
            continue
        h = A.element(line[0])
        h2, unit = h * h, X + D
        piv = next(i for i, v in enumerate(unit.coords) if v != 0)
        m = simplify(h2.coords[piv] / unit.coords[piv])
        if h2 != unit * m or m == 0:
            continue
        hz = G(h, Z)
        if hz != 0:
            k = simplify(2 * (ps - pxy * pxz) / hz)
        elif ps == pxy * pxz:
            try:
                k = simplify(sqrt(simplify(pxy * (1 - pxy) / m)))
            except NestedRadical:
                continue
        else:
            continue
        Y = X * pxy + D * (1 - pxy) + h * k
        if Y * Y != Y:
            continue
        axes = [None] * 3
        axes[x], axes[y], axes[z] = X, Y, Z
        base.axes = axes
        base.params = p
        base.provenance = "S8gen"
        base.lambdas["k"] = k
        base.notes.append(
            f"generators ({'abc'[x]}, d, {'abc'[z]}) with d = x_{'abc'[x]}({'abc'[y]}) realized as S8 with beta={fmt(bbar)}, gamma={fmt(gbar)}"
        )
        return base
    raise ModelUnrealizable("no generator ordering gives a realizable S8 triple")


def congruence_factor(G: Sequence[Sequence[Number]]) -> list[list]:
    """M with M^T M = G for a nondegenerate symmetric G (square roots adjoined as needed)."""
    n = len(G)
    W = [[simplify(v) for v in row] for row in G]
    P = [[F(int(i == j)) for j in range(n)] for i in range(n)]  # columns = new basis

    def add_to(i, j, c):
        # basis vector i += c * basis vector j (congruence on W)
        for r in range(n):
            W[r][i] = simplify(W[r][i] + c * W[r][j])
        for r in range(n):
            W[i][r] = simplify(W[i][r] + c * W[j][r])
        for r in range(n):
            P[r][i] = simplify(P[r][i] + c * P[r][j])

    for i in range(n):
        if W[i][i] == 0:
            j = next((j for j in range(i + 1, n) if W[i][j] != 0), None)
            if j is None:
                raise ModelUnrealizable("Gram matrix is degenerate")
            add_to(i, j, F(1) if W[i][i] + 2 * W[i][j] + W[j][j] != 0 else F(2))
        for j in range(i + 1, n):
            if W[i][j] != 0:
                add_to(j, i, simplify(-W[i][j] / W[i][i]))
    roots = [simplify(sqrt(W[i][i])) for i in range(n)]
    # P^T G P = diag(W) -> G = P^-T diag P^-1, M = sqrt(diag) P^-1
    Pinv = [solve(P, [F(int(r == c)) for r in range(n)]) for c in range(n)]  # columns of P^-1
    return [[simplify(roots[i] * Pinv[c][i]) for c in range(n)] for i in range(n)]


def hermitian_model(p: ParameterTuple) -> MatrixModel:
    """Rank-one projections u u^T of H(M_3) from unit vectors with prescribed Gram matrix.

    (uu^T, vv^T) = (u.v)^2 and psi = (u.v)(v.w)(u.w); valid when psi^2 = alpha beta gamma
    and 1 + 2 psi - alpha - beta - gamma != 0 (vectors independent).
    """
    p = ParameterTuple.of(p)
    al, be, ga, ps = p
    if ps * ps != al * be * ga:
        raise ModelUnrealizable("rank-one symmetric projections force psi^2 = alpha beta gamma")
    if 1 + 2 * ps - al - be - ga == 0:
        raise ModelUnrealizable("coplanar vectors: the axes generate JForm_2, not H(M_3)")
    # pivots of the factorization are 1, 1 - alpha and det/(1 - alpha): keep them rational
    perm = next((q for q in itertools.permutations(range(3)) if p.permuted(q).alpha != 1), (0, 1, 2))
    al, be, ga, ps = p.permuted(perm)
    try:
        if ps != 0:
            x, y = simplify(sqrt(al)), simplify(sqrt(be))
            z = simplify(ps / (x * y))
        else:
            x, y, z = (simplify(sqrt(v)) for v in (al, be, ga))
        G = [[F(1), x, z], [x, F(1), y], [z, y, F(1)]]
        M = congruence_factor(G)
    except NestedRadical as exc:
        raise ModelUnrealizable(f"unit vectors need a nested radical: {exc}") from exc
    space, A = _matrix_algebra(3, "symmetric")
    model = MatrixModel(A, [], "Hermitian", params=p, matrices=space)
    model.axes = [model.element(outer(u, u)) for u in transpose(M)]
    reorder_axes(model, perm)
    model.notes.append("axes u u^T from a congruence factorization of the Gram matrix of u, v, w")
    return model


def realize_universal(p: ParameterTuple) -> MatrixModel:
    """Three rank-one idempotents of M_3^+ realizing a tuple off the non-simple locus.

    E_i = u_i v_i^T with v_i . u_i = 1, u1 = v1 = e1, u2 = (p, 1, 0), u3 = (r, s, 1).
    With X = v2 . u3 and Y = v3 . u2 the trace conditions read
        alpha = pq,  gamma = rt,  beta = X Y,  2 psi = pt X + qr Y,
    so pt X^2 - 2 psi X + qr beta = 0, whose discriminant is 4(psi^2 - alpha beta gamma).
    alpha = 1 needs v2 = (1, 0, 1) instead of (q, 1 - pq, 0); see ``_universal_candidates``.
    """
    p = ParameterTuple.of(p)
    if p.simplicity_factor() == 0:
        raise DegenerateParameters(
            "(alpha + beta + gamma - 2 psi - 1)(alpha beta gamma - psi^2) = 0: the universal algebra is not simple"
        )
    space, A = _matrix_algebra(3, "full")
    for perm in itertools.permutations(range(3)):
        q = p.permuted(perm)
        try:
            candidates = list(_universal_candidates(q))
        except NestedRadical as exc:
            raise NoRationalSolution(str(exc)) from exc
        for mats in candidates:
            if _trace_params(mats) != tuple(q):
                continue
            model = MatrixModel(A, [], "Universal", params=p, matrices=space)
            model.axes = [model.element(E) for E in mats]
            if subalgebra_closure(A, model.axes).dim != 9:
                continue
            reorder_axes(model, perm)
            if perm != (0, 1, 2):
                model.notes.append(f"solved for generator order {''.join('abc'[i] for i in perm)}")
            return model
    raise DegenerateParameters(f"no parametrization of {p} produced a 9-dimensional closure")


def _trace_params(mats) -> tuple:
    E1, E2, E3 = mats
    t = lambda X, Y: trace(jordan_product(X, Y))
    return (t(E1, E2), t(E2, E3), t(E1, E3), t(jordan_product(E1, E2), E3))


def _roots(a2, a1, a0) -> list:
    """Roots of a2 x^2 + a1 x + a0 (linear when a2 = 0)."""
    if a2 == 0:
        return [simplify(-a0 / a1)] if a1 != 0 else []
    root = simplify(sqrt(simplify(a1 * a1 - 4 * a2 * a0)))
    return [simplify((-a1 - root) / (2 * a2)), simplify((-a1 + root) / (2 * a2))]


def _universal_candidates(q: ParameterTuple):
    al, be, ga, ps = q
    one, zero = F(1), F(0)
    e1 = (one, zero, zero)
    if al != 1:
        pq_choices = [(one, al)] + ([(zero, one)] if al == 0 else [])
        rt_choices = [(one, ga)] + ([(zero, one)] if ga == 0 else [])
        for (pp, qq), (r, t) in itertools.product(pq_choices, rt_choices):
            A_, B_ = pp * t, qq * r
            # B Y = 2 psi - A X and X Y = beta
            if B_ != 0:
                xs = _roots(A_, -2 * ps, B_ * be)
            elif A_ != 0:
                xs = [simplify(2 * ps / A_)]
            else:
                continue
            for X in xs:
                if B_ != 0:
                    Y = simplify((2 * ps - A_ * X) / B_)
                elif X != 0:
                    Y = simplify(be / X)
                else:
                    continue
                s = simplify((X - qq * r) / (1 - pp * qq))
                w = simplify(Y - t * pp)
                u = [e1, (pp, one, zero), (r, s, one)]
                v = [e1, (qq, simplify(1 - pp * qq), zero), (t, w, simplify(1 - r * t - s * w))]
                yield [outer(ui, vi) for ui, vi in zip(u, v)]
    else:
        # alpha = 1: u2 = (1, 1, 0), v2 = (1, 0, 1); X = r + 1, t = gamma / r,
        # 2 psi r (r + 1) = gamma (r + 1)^2 + beta r^2
        for r in _roots(2 * ps - ga - be, 2 * ps - 2 * ga, -ga):
            if r == 0 or r == -1:
                continue
            t = simplify(ga / r)
            X = simplify(r + 1)
            w = simplify(be / X - t)
            u = [e1, (one, one, zero), (r, zero, one)]
            v = [e1, (one, zero, one), (t, w, simplify(1 - r * t))]
            yield [outer(ui, vi) for ui, vi in zip(u, v)]


def with_f(model: ModelAlgebra, pair: tuple[int, int], isolated: int) -> ModelAlgebra:
    """F + model: the new F summand carries the generator ``isolated``."""
    f = build_Fn(1)
    S, inj_model, inj_f = direct_sum(model.algebra, f.algebra)
    axes = [None] * 3
    axes[pair[0]] = inj_model(model.axes[0])
    axes[pair[1]] = inj_model(model.axes[1])
    axes[isolated] = inj_f(f.a)
    return ModelAlgebra(S, axes, "Fn+JForm")
