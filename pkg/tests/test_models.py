from fractions import Fraction as F

import pytest
import sympy as sp

from axialjordan.axial import axis_report, frobenius_form, miyamoto
from axialjordan.errors import DegenerateParameters, ModelUnrealizable, NoRationalSolution
from axialjordan.exactfield import sqrt
from axialjordan.models import (
    ParameterTuple,
    build_Fn,
    build_hermitian_jordan,
    build_jform,
    build_matrix_jordan,
    congruence_factor,
    derived_axis,
    hermitian_model,
    jform2_model,
    miyamoto_redesignation,
    realize_universal,
    s7_generators,
    s7_trace_report,
    s8_generators,
    switch_model,
)

from oracles import closure_dim, jordan, smat, to_sympy

P = ParameterTuple.of


def sym_params(mats):
    """(alpha, beta, gamma, psi) of three matrices via sympy traces."""
    A, B, C = (smat(M) for M in mats)
    t = lambda X, Y: sp.simplify(jordan(X, Y).trace())
    return (t(A, B), t(B, C), t(A, C), sp.simplify(jordan(jordan(A, B), C).trace()))


def model_mats(m):
    return [m.to_matrix(x) for x in m.axes]


def same(pkg_values, sym_values):
    return all(sp.simplify(to_sympy(x) - y) == 0 for x, y in zip(pkg_values, sym_values))


def test_parameter_tuple_parse_and_permute():
    p = ParameterTuple.parse("1/2, 2, sqrt(2), 3/2")
    assert p == (F(1, 2), F(2), sqrt(2), F(3, 2))
    # (b, a, c): (b,a) = alpha, (a,c) = gamma, (b,c) = beta
    assert p.permuted((1, 0, 2)) == (F(1, 2), sqrt(2), F(2), F(3, 2))
    assert str(P(0, "1/3", 1, 0)) == "0,1/3,1,0"
    with pytest.raises(ValueError):
        ParameterTuple.parse("1, 2, 3")


def test_simplicity_factor():
    assert P("1/2", 2, 2, "3/2").simplicity_factor() == F(-1, 8)
    assert P(0, 0, 0, 0).simplicity_factor() == 0


@pytest.mark.parametrize("n,dim", [(2, 4), (3, 9)])
def test_full_matrix_algebras(n, dim):
    m = build_matrix_jordan(n)
    assert m.algebra.dim == dim
    x = m.element([[F(i + 2 * j) for j in range(n)] for i in range(n)])
    y = m.element([[F(i * j - 1) for j in range(n)] for i in range(n)])
    X, Y = smat(m.to_matrix(x)), smat(m.to_matrix(y))
    assert smat(m.to_matrix(x * y)) == jordan(X, Y)


def test_hermitian_is_six_dimensional_and_closed():
    m = build_hermitian_jordan(3)
    assert m.algebra.dim == 6
    with pytest.raises(ValueError):
        m.element([[F(0), F(1), F(0)], [F(0)] * 3, [F(0)] * 3])


def test_jform2_model_parameters_and_dimension():
    m = jform2_model(F(1, 3), F(1, 3), F(1, 9))
    assert m.algebra.dim == 3
    assert m.recovered_params()[:3] == (F(1, 3), F(1, 3), F(1, 9))
    for x in m.axes:
        assert axis_report(m.algebra, x).is_axis


def test_jform_rejects_non_quarter_axis():
    with pytest.raises(ValueError):
        build_jform([[F(1)]], [(F(1),)])


@pytest.mark.parametrize(
    "params",
    [
        ("1/2", "1/3", 2, "11/12"),
        (0, 2, 3, 2),
        (2, "1/2", "1/2", 1),
        (-1, 2, 2, 1),
        (3, -1, 1, 1),
    ],
)
def test_s7_generators_match_sympy_traces(params):
    p = P(*params)
    m = s7_generators(p)
    assert same(p, sym_params(model_mats(m)))
    assert closure_dim([smat(M) for M in model_mats(m)]) == 4
    for x in m.axes:
        assert axis_report(m.algebra, x).is_axis


def test_s7_plus_branch_differs_but_realizes_same_tuple():
    p = P("1/2", "1/3", 2, "11/12")
    lo, hi = s7_generators(p, "minus"), s7_generators(p, "plus")
    assert lo.lambdas["lambda_c"] != hi.lambdas["lambda_c"]
    assert lo.recovered_params() == hi.recovered_params() == p


def test_s7_rejects_off_locus():
    with pytest.raises(DegenerateParameters):
        s7_generators(P("1/2", 2, 2, "3/2"))
    with pytest.raises(ValueError):
        s7_generators(P("1/2", "1/3", 2, "11/12"), branch="left")


def test_miyamoto_redesignation_formula():
    m = s7_generators(P("1/2", "1/3", 2, "11/12"))
    A, a, b, c = m.algebra, m.a, m.b, m.c
    c2 = miyamoto(A, b, c)
    G = m.form()
    assert (G(a, b), G(b, c2), G(a, c2), G(a * b, c2)) == tuple(miyamoto_redesignation(m.params))


@pytest.mark.parametrize("beta,gamma", [(F(1, 4), F(1, 2)), (F(1, 4), F(2, 3)), (F(3), F(-1))])
def test_s8_generators_against_sympy(beta, gamma):
    m = s8_generators(beta, gamma)
    assert same((0, beta, gamma, 0), sym_params(model_mats(m)))
    assert closure_dim([smat(M) for M in model_mats(m)]) == 6


@pytest.mark.parametrize("beta,gamma", [(F(1, 2), F(1)), (F(0), F(1, 2)), (F(1, 2), F(1, 2))])
def test_s8_degenerate(beta, gamma):
    with pytest.raises(DegenerateParameters):
        s8_generators(beta, gamma)


def test_derived_axis_at_half():
    m = s7_generators(P("1/2", "1/3", 2, "11/12"))
    A, a, b = m.algebra, m.a, m.b
    d = derived_axis(A, a, b, F(1, 2))
    assert d == a + b * 2 - a * b * 4
    assert d * d == d and (a * d).is_zero()
    assert axis_report(A, d).is_axis
    with pytest.raises(DegenerateParameters):
        derived_axis(A, a, b, F(1))


def test_switch_model_recovers_parameters():
    p = P("1/2", "1/2", "1/16", "1/8")
    m = switch_model(p)
    assert m.recovered_params() == p
    assert same(p, sym_params(model_mats(m)))


def test_matrix_trace_form_is_the_frobenius_form():
    m = s8_generators(F(1, 4), F(2, 3))
    G = m.form()
    basis = m.algebra.basis()
    for x in basis:
        for y in basis:
            assert G(x, y) == m.trace_form(x, y)


@pytest.mark.parametrize(
    "G",
    [
        [[1, F(1, 2), 0], [F(1, 2), 1, F(1, 3)], [0, F(1, 3), 1]],
        [[0, 1], [1, 0]],
        [[2, 1], [1, 3]],
    ],
)
def test_congruence_factor(G):
    G = [[F(v) for v in r] for r in G]
    M = smat(congruence_factor(G))
    assert sp.simplify(M.T * M - smat(G)) == sp.zeros(len(G))


def test_congruence_factor_degenerate():
    with pytest.raises(ModelUnrealizable):
        congruence_factor([[F(1), F(1)], [F(1), F(1)]])


def test_hermitian_model_realizes_all_ones_with_negative_psi():
    # Gram matrix of three unit vectors with pairwise dot products -1
    p = P(1, 1, 1, -1)
    m = hermitian_model(p)
    assert m.recovered_params() == p
    assert closure_dim([smat(M) for M in model_mats(m)]) == 6


def test_hermitian_model_rejects_coplanar_and_wrong_psi():
    with pytest.raises(ModelUnrealizable):
        hermitian_model(P(1, 1, 1, 1))
    with pytest.raises(ModelUnrealizable):
        hermitian_model(P("1/2", "1/2", "1/2", "1/2"))


@pytest.mark.parametrize(
    "params",
    [("1/2", 2, 2, "3/2"), (1, 2, 3, 1), (0, 1, 2, 3), (0, 0, 0, 1), (2, 3, 4, 0), (1, 1, 1, 0)],
)
def test_realize_universal_against_sympy(params):
    p = P(*params)
    m = realize_universal(p)
    mats = model_mats(m)
    assert same(p, sym_params(mats))
    assert closure_dim([smat(M) for M in mats]) == 9
    assert frobenius_form(m.algebra, m.axes).matrix is not None


def test_realize_universal_preconditions():
    with pytest.raises(DegenerateParameters):
        realize_universal(P(0, 0, 0, 0))
    with pytest.raises(NoRationalSolution):
        realize_universal(P(sqrt(2), 1, 1, 0))  # needs sqrt(-4 sqrt(2))


def test_fn_axes():
    m = build_Fn(3)
    assert [axis_report(m.algebra, x).is_axis for x in m.axes] == [True] * 3
    with pytest.raises(ValueError):
        build_Fn(4)


def test_s7_trace_report_variants():
    # tr(P o Q) follows 1 - lambda_c + lambda_b; psi = (alpha + beta + gamma - 1)/2
    for params in [("1/2", "1/3", 2, "11/12"), (0, "1/2", "3/2", "1/2")]:
        rep = {t.name: t.holds for t in s7_trace_report(s7_generators(P(*params)))}
        assert rep["tr(A o B) = 1 - lambda_c + lambda_b"]
        assert rep["alpha + beta + gamma = 2 psi + 1"]
        assert not rep["psi = (1 - alpha - beta - gamma)/2"]
