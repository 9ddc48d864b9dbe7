"""Kernel/solve/quotient/dual-basis behavior, frozen examples first."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from halg.fields import QQ, GF
from halg.linalg import (
    IdempotentNotIdempotent,
    LinearMap,
    NoSolution,
    PreparedSolve,
    Subspace,
    dual_basis,
    kernel,
    quotient_by,
    rank,
    solve,
    vec_sub,
)


def fr(x):
    return Fraction(x)


def dense(rows):
    return LinearMap.from_rows([[fr(c) for c in row] for row in rows], QQ)


# --- kernel -----------------------------------------------------------------

def test_kernel_zero_map_is_everything():
    f = LinearMap.zero(3, 3)
    assert kernel(f).dim == 3


def test_kernel_identity_is_zero():
    f = LinearMap.identity(3, QQ)
    assert kernel(f).dim == 0


def test_kernel_frozen_example():
    # matrix [[1,1],[2,2]] over QQ has kernel spanned by (1,-1)
    f = dense([[1, 1], [2, 2]])
    k = kernel(f)
    assert k.dim == 1
    assert k.contains({0: fr(1), 1: fr(-1)})
    assert not k.contains({0: fr(1), 1: fr(1)})


def test_kernel_vectors_really_die():
    f = dense([[1, 2, 3], [0, 1, 1], [1, 3, 4]])
    k = kernel(f)
    for v in k.basis:
        assert f.apply(v) == {}
    assert k.dim + rank(f) == f.domain_dim


# --- solve ------------------------------------------------------------------

def test_solve_identity():
    f = LinearMap.identity(2, QQ)
    t = {0: fr(3), 1: fr(-1)}
    assert solve(f, t) == t


def test_solve_rank_deficient():
    f = dense([[1, 0], [0, 0]])
    with pytest.raises(NoSolution):
        solve(f, {1: fr(1)})


def test_solve_scalar_division():
    f = dense([[2]])
    assert solve(f, {0: fr(1)}) == {0: Fraction(1, 2)}


def test_solve_free_variables_zero():
    # x + y = 1 has canonical solution x = 1, y = 0
    f = dense([[1, 1]])
    assert solve(f, {0: fr(1)}) == {0: fr(1)}


def test_prepared_solve_agrees_and_verifies():
    f = dense([[1, 2, 0], [0, 1, 1]])
    ps = PreparedSolve(f)
    for t in ({0: fr(1)}, {1: fr(5)}, {0: fr(2), 1: fr(-7)}):
        v = ps.solve(t)
        assert f.apply(v) == t


# --- subspaces and quotients --------------------------------------------------

def test_quotient_trivial_relations():
    q = quotient_by(Subspace.from_vectors(3, []))
    assert q.dim == 3
    assert q.section.cols == LinearMap.identity(3, QQ).cols


def test_quotient_full_relations():
    vs = [{0: fr(1)}, {1: fr(1)}]
    q = quotient_by(Subspace.from_vectors(2, vs))
    assert q.dim == 0
    assert q.canonical({0: fr(5), 1: fr(2)}) == {}


def test_quotient_frozen_example():
    # ambient dim 4 with relations span{(1,0,0,-1)} has quotient dim 3
    rel = Subspace.from_vectors(4, [{0: fr(1), 3: fr(-1)}])
    q = quotient_by(rel)
    assert q.dim == 3
    # e0 and e3 agree in the quotient
    assert q.equal({0: fr(1)}, {3: fr(1)})


def test_project_section_roundtrip():
    rel = Subspace.from_vectors(3, [{0: fr(1), 2: fr(2)}])
    q = quotient_by(rel)
    for i in range(q.dim):
        coords = {i: fr(1)}
        assert q.project(q.section_vec(coords)) == coords


# --- dual basis ----------------------------------------------------------------

def test_dual_basis_free_module():
    e = LinearMap.identity(3, QQ)
    gens, cogens = dual_basis(e)
    assert gens == [{0: fr(1)}, {1: fr(1)}, {2: fr(1)}]
    assert cogens == [{0: fr(1)}, {1: fr(1)}, {2: fr(1)}]


def test_dual_basis_projector():
    e = dense([[1, 0], [0, 0]])
    gens, cogens = dual_basis(e)
    assert gens == [{0: fr(1)}]
    assert cogens == [{0: fr(1)}]


def test_dual_basis_nontrivial_idempotent():
    # [[1,1],[0,0]] is idempotent; reconstruction holds on its image
    e = dense([[1, 1], [0, 0]])
    gens, cogens = dual_basis(e)
    span = [e.apply({0: fr(1)}), e.apply({1: fr(1)})]
    for m in span:
        recon = {}
        for g, cg in zip(gens, cogens):
            c = sum((cg.get(k, fr(0)) * v for k, v in m.items()), fr(0))
            for k, gv in g.items():
                recon[k] = recon.get(k, fr(0)) + gv * c
        recon = {k: v for k, v in recon.items() if v}
        assert recon == m


def test_dual_basis_rejects_non_idempotent():
    with pytest.raises(IdempotentNotIdempotent):
        dual_basis(dense([[2, 0], [0, 1]]))


# --- prime field sanity ---------------------------------------------------------

def test_gf2_arithmetic_in_reduction():
    F = GF(2)
    one = F.one
    f = LinearMap.from_rows([[one, one], [one, one]], F)
    k = kernel(f)
    assert k.dim == 1
    assert k.contains({0: one, 1: one})


def test_gf_division():
    F = GF(7)
    a = F.of(3)
    assert a / a == F.one
    assert (F.of(2) / F.of(5)) * F.of(5) == F.of(2)


# --- property tests ---------------------------------------------------------------

small_scalar = st.integers(min_value=-4, max_value=4).map(Fraction)


@st.composite
def random_map(draw, max_dim=5):
    n = draw(st.integers(min_value=1, max_value=max_dim))
    m = draw(st.integers(min_value=1, max_value=max_dim))
    rows = [[draw(small_scalar) for _ in range(n)] for _ in range(m)]
    return LinearMap.from_rows(rows, QQ)


@settings(max_examples=60, deadline=None)
@given(random_map())
def test_rank_nullity(f):
    assert kernel(f).dim + rank(f) == f.domain_dim


@settings(max_examples=60, deadline=None)
@given(random_map())
def test_kernel_members_vanish(f):
    for v in kernel(f).basis:
        assert f.apply(v) == {}


@settings(max_examples=40, deadline=None)
@given(random_map(max_dim=4))
def test_quotient_of_image_relations(f):
    rel = Subspace.from_vectors(f.codomain_dim, list(f.cols))
    q = quotient_by(rel)
    assert q.dim == f.codomain_dim - rank(f)
    for col in f.cols:
        assert q.is_zero(col)
    for i in range(q.dim):
        assert q.project(q.section_vec({i: Fraction(1)})) == {i: Fraction(1)}


@settings(max_examples=40, deadline=None)
@given(random_map(max_dim=4), st.lists(small_scalar, min_size=4, max_size=4))
def test_solve_solutions_verify(f, tvals):
    t = {i: c for i, c in enumerate(tvals[: f.codomain_dim]) if c}
    try:
        v = solve(f, t)
    except NoSolution:
        ps = PreparedSolve(f)
        assert not ps.in_image(t)
        return
    assert vec_sub(f.apply(v), t) == {}
