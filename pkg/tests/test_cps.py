from fractions import Fraction

import pytest

from conftest import algebra_of, basis_of, default_cps
from cpstruct.cps import (
    CpsTriple,
    build_basis,
    build_ops,
    build_parametric,
    complexify_cps,
    index_pairs,
    induce_hypercomplex,
    is_in_su,
    label,
    middle_block_algebra,
    orthonormal_z_basis,
    outer_chain,
    parse_label,
    peel_outer,
    strip_subspace,
    su_hermitian_form,
)
from cpstruct.errors import ConstructionError, DomainError, RankError
from cpstruct.exact import GaussRational, Surd, elementary, sparse
from cpstruct.lie import EndoOp, SymForm, is_subalgebra, trace_form

I = GaussRational(0, 1)


def E(n, r, c, coeff=1):
    return elementary(n, r, c, coeff)


def unit(d, a, c=1):
    return tuple(Fraction(c) if i == a else Fraction(0) for i in range(d))


# --- labels and bases -------------------------------------------------------

def test_labels():
    assert label("U", 1) == "U^1"
    assert label("S", 1, 4) == "S_1^4"
    assert parse_label("iT_2^3") == (True, "T", 2, 3)
    assert parse_label("V^2") == (False, "V", 2, None)
    with pytest.raises(DomainError):
        parse_label("X^1")


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_index_range_count(m):
    # oracle: j < k < 2m - j counted directly, plus the m - 1 single labels
    pairs = [(j, k) for j in range(1, m) for k in range(j + 1, 2 * m - j)]
    assert index_pairs(m) == pairs
    assert 4 * (len(pairs) + m - 1) == 4 * m * m - 4 * m


def test_m3_count_matches_range():
    assert [k for j, k in index_pairs(3) if j == 1] == [2, 3, 4]
    assert [k for j, k in index_pairs(3) if j == 2] == [3]
    assert build_basis("sl_real", 3).dim == 24 == 4 * 9 - 12


def test_sl_single_index_formulas():
    m, n = 3, 5
    b = basis_of("sl_real", m)
    for j in (1, 2):
        jb = 2 * m - j
        x = lambda lab: b.matrices[b.index(lab)]
        assert x(f"U^{j}") == E(n, j, j) + E(n, jb, jb) - E(n, m, m, 2)
        assert x(f"T^{j}") == E(n, j, j) - E(n, jb, jb)
        assert x(f"V^{j}") == E(n, j, jb) - E(n, jb, j)
        assert x(f"S^{j}") == E(n, j, jb) + E(n, jb, j)


def test_m2_entries():
    sl = basis_of("sl_real", 2)
    assert sl.matrices[sl.index("U^1")] == E(3, 1, 1) + E(3, 3, 3) - E(3, 2, 2, 2)
    assert sl.dim == 8
    su = basis_of("su_pq", 2)
    assert su.matrices[su.index("V^1")] == (E(3, 1, 1) - E(3, 3, 3)) * I
    assert su.matrices[su.index("S_1^2")] == E(3, 2, 3) + E(3, 3, 2)
    su3 = basis_of("su_pq", 3)
    assert su3.matrices[su3.index("S_1^4")] == -(E(5, 1, 4) + E(5, 4, 1))


def test_m2_su_labels_and_order():
    assert basis_of("su_pq", 2).labels == ("U^1", "V^1", "S^1", "T^1", "U_1^2", "V_1^2", "S_1^2", "T_1^2")


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_bases_are_real_or_su(m):
    sl = basis_of("sl_real", m)
    assert all(x.is_real() and not x.trace() for x in sl.matrices)
    su = basis_of("su_pq", m)
    f = su_hermitian_form(m)
    for x in su.matrices:
        assert not x.trace()
        assert (x.conj_transpose() @ f + f @ x).is_zero()
        assert is_in_su(x, m)


def test_m_below_two_rejected():
    for kind in ("sl_real", "su_pq", "sl_c_realified"):
        with pytest.raises(DomainError):
            build_basis(kind, 1)
    with pytest.raises(DomainError):
        build_basis("so_real", 2)


def test_realified_basis_order():
    b = basis_of("sl_c_realified", 2)
    real = basis_of("su_pq", 2)
    assert b.dim == 16
    assert b.labels[8:] == tuple("i" + lab for lab in real.labels)
    assert b.matrices[8:] == tuple(x * I for x in real.matrices)


# --- operators --------------------------------------------------------------

def test_build_ops_rules():
    b = basis_of("sl_real", 3)
    cps = default_cps("sl_real", 3)
    d = b.dim
    ix = b.index
    assert cps.J.column(ix("U^1")) == {ix("V^1"): 1}
    assert cps.J.column(ix("V^1")) == {ix("U^1"): -1}
    assert cps.P.column(ix("U_1^2")) == {ix("T_1^2"): 1}
    assert cps.P.column(ix("T_1^2")) == {ix("U_1^2"): 1}
    for j in (1, 2):
        assert cps.Q.column(ix(f"U^{j}")) == {ix(f"S^{j}"): -1}
    assert cps.P @ cps.P == EndoOp.identity(d)
    assert cps.J @ cps.J == -EndoOp.identity(d)


def test_parametric_identity_reproduces_default():
    b = basis_of("su_pq", 3)
    zs = [unit(b.dim, q[0]) for q in b.single_quadruples()]
    assert build_parametric(b, zs) == build_ops(b)


def test_parametric_m3_mixed_and_m2_scaled():
    b = basis_of("su_pq", 3)
    u1, u2 = b.index("U^1"), b.index("U^2")
    z1 = tuple(Fraction(int(i in (u1, u2))) for i in range(b.dim))
    z2 = unit(b.dim, u2)
    cps = build_parametric(b, [z1, z2])
    assert cps != build_ops(b)
    # J(Z^1) = V^1, P(Z^1) = T^1
    z1d = sparse(z1)
    assert cps.J.apply(z1d) == {b.index("V^1"): 1}
    assert cps.P.apply(z1d) == {b.index("T^1"): 1}
    b2 = basis_of("sl_real", 2)
    cps2 = build_parametric(b2, [unit(b2.dim, 0, 2)])
    assert cps2.J.column(0) == {1: Fraction(1, 2)}
    assert cps2.J.column(1) == {0: -2}
    assert cps2 != build_ops(b2)


def test_parametric_errors():
    b = basis_of("sl_real", 3)
    d = b.dim
    with pytest.raises(RankError):
        build_parametric(b, [unit(d, 0)])
    with pytest.raises(RankError):
        build_parametric(b, [unit(d, 0), unit(d, 0, 3)])
    with pytest.raises(DomainError):
        build_parametric(b, [unit(d, 0), unit(d, b.index("V^2"))])
    with pytest.raises(DomainError):
        build_parametric(basis_of("sl_c_realified", 2), [unit(16, 0)])


@pytest.mark.parametrize("m", [2, 3, 4])
def test_orthonormal_z_basis(m):
    b = basis_of("su_pq", m)
    alg = algebra_of("su_pq", m)
    g = trace_form(alg)
    zs = orthonormal_z_basis(alg, b)
    for i, zi in enumerate(zs):
        for j, zj in enumerate(zs):
            assert g.value(sparse(zi), sparse(zj)) == (-1 if i == j else 0)
    if m == 2:
        assert zs[0][0] == 1 / Surd.sqrt(3)


def test_orthonormal_on_sl_and_indefinite_form():
    b = basis_of("sl_real", 3)
    alg = algebra_of("sl_real", 3)
    g = trace_form(alg)
    zs = orthonormal_z_basis(alg, b)
    assert [g.value(sparse(z), sparse(z)) for z in zs] == [1, 1]
    d = alg.dim
    u2 = b.index("U^2")
    indefinite = SymForm([[(-1 if i == u2 else 1) if i == j else 0 for j in range(d)] for i in range(d)])
    with pytest.raises(DomainError):
        orthonormal_z_basis(alg, b, indefinite)


def test_complexify_rules():
    real_b = basis_of("su_pq", 2)
    alg = algebra_of("su_pq", 2)
    realified, ext = complexify_cps(alg, build_ops(real_b))
    d = real_b.dim
    ix = real_b.index
    assert realified.dim == 2 * d
    assert ext.J.column(ix("U^1") + d) == {ix("V^1") + d: 1}
    assert ext.P.column(ix("V^1") + d) == {ix("S^1") + d: 1}
    i_op = realified.complex_structure
    assert i_op @ ext.P == ext.P @ i_op


def test_induce_hypercomplex_relations():
    alg = algebra_of("su_pq", 2)
    realified, ext = complexify_cps(alg, build_ops(basis_of("su_pq", 2)))
    h = induce_hypercomplex(realified, ext)
    one = EndoOp.identity(realified.dim)
    for op in (h.J1, h.J2, h.J3):
        assert op @ op == -one
    assert h.J3 == h.J1 @ h.J2
    assert (h.J1 @ h.J2 + h.J2 @ h.J1).is_zero()


def test_induce_hypercomplex_rejects_non_linear_structure():
    alg = algebra_of("su_pq", 2)
    realified, ext = complexify_cps(alg, build_ops(basis_of("su_pq", 2)))
    d = realified.dim
    # conjugate-linear twist: swap the roles of X and iX on one quadruple in P
    cols = list(ext.P.columns)
    cols[0], cols[8] = cols[8], cols[0]
    bad = CpsTriple.from_pj(EndoOp(d, cols), ext.J)
    with pytest.raises(ConstructionError):
        induce_hypercomplex(realified, bad)
    with pytest.raises(DomainError):
        induce_hypercomplex(alg, build_ops(basis_of("su_pq", 2)))


# --- strips -----------------------------------------------------------------

def test_outer_m3_is_m2_construction():
    b = basis_of("sl_real", 3)
    alg = algebra_of("sl_real", 3)
    s = strip_subspace(b, "outer")
    assert s.dim == 8
    assert is_subalgebra(alg, s)
    assert peel_outer(b, 1).entries == basis_of("sl_real", 2).entries


@pytest.mark.parametrize("kind", ["sl_real", "su_pq"])
def test_outer_chain_iterates_to_m2(kind):
    b = basis_of(kind, 5)
    chain = outer_chain(b)
    assert [s.dim for s in chain] == [4 * k * k - 4 * k for k in (4, 3, 2)]
    for s, t in zip(chain, chain[1:]):
        assert s.contains_subspace(t)
    assert peel_outer(b, 3).entries == basis_of(kind, 2).entries


@pytest.mark.parametrize("kind,name", [("su_pq", "u_pq"), ("sl_real", "gl_real")])
def test_middle_strip(kind, name):
    b = basis_of(kind, 2)
    alg = algebra_of(kind, 2)
    cps = default_cps(kind, 2)
    s = strip_subspace(b, "middle")
    assert s.dim == 4
    assert is_subalgebra(alg, s)
    assert s.is_invariant(cps.P) and s.is_invariant(cps.J)
    blk = middle_block_algebra(b)
    assert blk.name == name and blk.dim == 4 and blk.n == 2


def test_middle_block_m3():
    blk = middle_block_algebra(basis_of("sl_real", 3))
    assert blk.dim == 16 and blk.n == 4


def test_strip_errors():
    b = basis_of("sl_real", 3)
    with pytest.raises(DomainError):
        strip_subspace(b, "diagonal")
    with pytest.raises(DomainError):
        strip_subspace(b, "outer", depth=3)
    with pytest.raises(DomainError):
        peel_outer(b, 2)
