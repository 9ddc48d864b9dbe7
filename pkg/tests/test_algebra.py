from fractions import Fraction

import pytest

from halg.fields import QQ
from halg.algebra import (
    AlgebraMap,
    AModuleAction,
    FiniteAlgebra,
    check_algebra_axioms,
    enveloping,
    opposite,
    regular_bimodule,
    scalar_algebra,
    tensor_in_enveloping,
)
from halg.linalg import LinearMap

from algebras import dual_numbers, group_algebra_c2, sweedler_h4, upper_triangular_2x2

ONE = Fraction(1)


def test_kc2_passes_axioms():
    assert check_algebra_axioms(group_algebra_c2()).ok


def test_sweedler_passes_axioms():
    assert check_algebra_axioms(sweedler_h4()).ok


def test_perturbed_constant_names_triple():
    A = upper_triangular_2x2()
    bad = list(list(row) for row in A.mult)
    bad[1][2] = {0: ONE}  # e12*e22 = e11 breaks associativity on (e12,e22,e22)
    B = FiniteAlgebra(QQ, 3, tuple(tuple(r) for r in bad), dict(A.unit),
                      A.basis_names, name="upper2-broken")
    rep = check_algebra_axioms(B)
    assert not rep.ok
    assert "ALG-ASSOC" in rep.failed_ids()
    assert any("e12" in w and "e22" in w for w in rep.failures[0].witnesses)


def test_opposite_is_involution():
    for A in (group_algebra_c2(), upper_triangular_2x2(), sweedler_h4()):
        B = opposite(opposite(A))
        assert B.mult == A.mult and B.unit == A.unit


def test_opposite_commutative_unchanged():
    A = dual_numbers()
    assert opposite(A).mult == A.mult


def test_opposite_transposes_table():
    A = upper_triangular_2x2()
    B = opposite(A)
    for i in range(A.dim):
        for j in range(A.dim):
            assert B.mult[i][j] == A.mult[j][i]
    assert check_algebra_axioms(B).ok


def test_enveloping_of_scalars():
    k = scalar_algebra(QQ)
    E = enveloping(k)
    assert E.dim == 1
    assert check_algebra_axioms(E).ok


def test_enveloping_dimension():
    A = group_algebra_c2()
    assert enveloping(A).dim == 4


def test_enveloping_associative_dual_numbers():
    E = enveloping(dual_numbers())
    assert E.dim == 4
    assert check_algebra_axioms(E).ok


def test_enveloping_second_factor_reversed():
    A = upper_triangular_2x2()
    E = enveloping(A)
    a = tensor_in_enveloping(A, A.basis_vec(1), A.basis_vec(0))  # e12 (x) e11
    b = tensor_in_enveloping(A, A.basis_vec(2), A.basis_vec(1))  # e22 (x) e12
    # first factors multiply forward (e12*e22 = e12); second factors reverse
    # (e12*e11 = 0 reversed, e11*e12 = e12 forward), so the product pairs
    # e12 with e12*e11 = 0... check against the direct formula instead
    prod = E.multiply(a, b)
    expect = tensor_in_enveloping(A, A.multiply(A.basis_vec(1), A.basis_vec(2)),
                                  A.multiply(A.basis_vec(1), A.basis_vec(0)))
    assert prod == expect


def test_algebra_map_eager_validation():
    A = group_algebra_c2()
    # sending g to -g is a valid automorphism
    AlgebraMap(A, A, LinearMap.from_cols(2, 2, [{0: ONE}, {1: -ONE}]), name="flip")
    # sending g to 1+g is not multiplicative
    with pytest.raises(ValueError):
        AlgebraMap(A, A, LinearMap.from_cols(2, 2, [{0: ONE}, {0: ONE, 1: ONE}]))
    # not unital
    with pytest.raises(ValueError):
        AlgebraMap(A, A, LinearMap.from_cols(2, 2, [{0: ONE + ONE}, {1: ONE}]))


def test_module_action_check():
    A = dual_numbers()
    # A acting on itself on the left
    act = AModuleAction(A, "left", 2,
                        tuple(A.left_mult_map(A.basis_vec(i)) for i in range(2)))
    assert act.check() == []
    # x acting as the identity is not a module action
    bad = AModuleAction(A, "left", 2,
                        (A.left_mult_map(A.unit), LinearMap.identity(2, QQ)))
    assert bad.check()


def test_regular_bimodule():
    for A in (group_algebra_c2(), upper_triangular_2x2()):
        assert regular_bimodule(A).check().ok
