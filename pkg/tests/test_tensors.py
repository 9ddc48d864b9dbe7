"""Balanced tensor squares, Takeuchi subspaces, and leg combinators.

Frozen oracle values:
  * U = A^e over A = k[x]/(x^2): dim(U (x)_A U) = 8  (16 ambient - 8 relations)
  * pair groupoid over k x k:    dim(U (x)_A U) = 8  (classes g_ij (x) g_il)
  * pair groupoid Takeuchi subspace of U (x)_A U: dim 4 (classes g_ij (x) g_ij)
  * pair groupoid U (x)_{Aop} U Takeuchi: dim 4 (classes g_ij (x) g_ji)
"""

from fractions import Fraction

import pytest

from halg.fields import QQ
from halg.algebra import AlgebraMap, AModuleAction, enveloping
from halg.linalg import LinearMap
from halg.tensors import (
    ActionSideMismatch,
    AeRing,
    ExchangeRule,
    aop_takeuchi,
    balanced_tensor,
    check_aering,
    check_takeuchi_subalgebra,
    contract_counit,
    coring_square,
    expand_leg,
    factorwise_product,
    flatten_index,
    left_hopf_square,
    left_takeuchi,
    mult_legs,
    permute_legs,
    right_hopf_square,
    sup_takeuchi,
    tensor_of,
    u_leg,
    unflatten_index,
)

from algebras import dual_numbers, pair_groupoid, two_points

ONE = Fraction(1)


def enveloping_ring() -> AeRing:
    A = dual_numbers()
    U = enveloping(A)
    eta = AlgebraMap(U, U, LinearMap.identity(U.dim, QQ), name="id")
    return AeRing(A, U, eta)


def groupoid_ring() -> AeRing:
    A = two_points()
    U = pair_groupoid()
    g11, g22 = 0, 3
    diag = LinearMap(2, 4, ({g11: ONE}, {g22: ONE}))
    return AeRing.from_source_target(A, U, diag, diag)


G11, G12, G21, G22 = 0, 1, 2, 3


class TestAeRing:
    def test_enveloping_ring_checks(self):
        rep = check_aering(enveloping_ring())
        assert rep.ok, rep.describe()

    def test_groupoid_ring_checks(self):
        rep = check_aering(groupoid_ring())
        assert rep.ok, rep.describe()

    def test_groupoid_source_target_pick_indices(self):
        R = groupoid_ring()
        # left multiplication reads the target (first) index
        assert R.ract({G12: ONE}, {0: ONE}) == {G12: ONE}      # t(p1) g12 = g12
        assert R.ract({G12: ONE}, {1: ONE}) == {}              # t(p2) g12 = 0
        # right multiplication reads the source (second) index
        assert R.bract({G12: ONE}, {1: ONE}) == {G12: ONE}     # g12 s(p2) = g12
        assert R.bract({G12: ONE}, {0: ONE}) == {}
        assert R.blact({0: ONE}, {G12: ONE}) == {}             # g12 t(p1) = 0
        assert R.blact({1: ONE}, {G12: ONE}) == {G12: ONE}

    def test_enveloping_source_target(self):
        R = enveloping_ring()
        x = {1: ONE}
        # basis of U = A (x) A: (1(x)1, 1(x)x, x(x)1, x(x)x)
        assert R.source(x) == {2: ONE}
        assert R.target(x) == {1: ONE}

    def test_action_sides(self):
        R = groupoid_ring()
        assert R.action("lact").side == "left"
        assert R.action("ract").side == "right"
        assert R.action("blact").side == "left"
        assert R.action("bract").side == "right"


class TestBalancedSquares:
    def test_enveloping_coring_square_dim(self):
        sq = coring_square(enveloping_ring())
        assert sq.space.ambient_dim == 16
        assert sq.space.relations.dim == 8
        assert sq.dim == 8

    def test_groupoid_coring_square_dim(self):
        sq = coring_square(groupoid_ring())
        assert sq.dim == 8

    def test_groupoid_square_kills_mismatched_targets(self):
        sq = coring_square(groupoid_ring())
        # g12 (x) g21 has targets 1 and 2: collapses to zero
        assert sq.space.is_zero(tensor_of(sq.dims, {G12: ONE}, {G21: ONE}))
        # g12 (x) g11 shares the target 1: survives
        assert not sq.space.is_zero(tensor_of(sq.dims, {G12: ONE}, {G11: ONE}))

    def test_groupoid_other_squares_dim(self):
        R = groupoid_ring()
        assert left_hopf_square(R).dim == 8
        assert right_hopf_square(R).dim == 8

    def test_balancing_moves_base_elements(self):
        R = enveloping_ring()
        sq = coring_square(R)
        x = {1: ONE}
        u = {0: ONE}  # 1 in U
        left = tensor_of(sq.dims, R.ract(u, x), u)
        right = tensor_of(sq.dims, u, R.lact(x, u))
        assert sq.equal(left, right)

    def test_side_mismatch_rejected(self):
        leg = u_leg(groupoid_ring())
        with pytest.raises(ActionSideMismatch):
            balanced_tensor(leg, "lact", leg, "lact", "A")
        with pytest.raises(ActionSideMismatch):
            balanced_tensor(leg, "ract", leg, "ract", "Aop")
        with pytest.raises(ActionSideMismatch):
            balanced_tensor(leg, "ract", leg, "lact", "nonsense")
        with pytest.raises(ActionSideMismatch):
            balanced_tensor(leg, "missing", leg, "lact", "A")


class TestTakeuchi:
    def test_groupoid_left_takeuchi(self):
        R = groupoid_ring()
        tk = left_takeuchi(R)
        assert tk.dim == 4
        sq = tk.ambient
        for g in (G11, G12, G21, G22):
            assert tk.contains_ambient(tensor_of(sq.dims, {g: ONE}, {g: ONE}))
        assert not tk.contains_ambient(tensor_of(sq.dims, {G12: ONE}, {G11: ONE}))
        unit = tensor_of(sq.dims, R.U.unit, R.U.unit)
        assert tk.contains_ambient(unit)

    def test_groupoid_aop_takeuchi(self):
        R = groupoid_ring()
        tk = aop_takeuchi(R)
        assert tk.dim == 4
        sq = tk.ambient
        for i, j, gij, gji in ((1, 1, G11, G11), (1, 2, G12, G21),
                               (2, 1, G21, G12), (2, 2, G22, G22)):
            assert tk.contains_ambient(tensor_of(sq.dims, {gij: ONE}, {gji: ONE}))
        assert not tk.contains_ambient(tensor_of(sq.dims, {G12: ONE}, {G22: ONE}))

    def test_groupoid_sup_takeuchi_contains_unit(self):
        R = groupoid_ring()
        tk = sup_takeuchi(R)
        sq = tk.ambient
        assert tk.contains_ambient(tensor_of(sq.dims, R.U.unit, R.U.unit))

    def test_takeuchi_subalgebra(self):
        R = groupoid_ring()
        rep = check_takeuchi_subalgebra(R, left_takeuchi(R))
        assert rep.ok, rep.describe()

    def test_enveloping_takeuchi_subalgebra(self):
        R = enveloping_ring()
        rep = check_takeuchi_subalgebra(R, left_takeuchi(R))
        assert rep.ok, rep.describe()

    def test_factorwise_product_on_groupoid(self):
        # the product is only well-defined on Takeuchi members
        R = groupoid_ring()
        sq = coring_square(R)
        x = sq.tensor({G12: ONE}, {G12: ONE})
        y = sq.tensor({G21: ONE}, {G21: ONE})
        prod = factorwise_product(sq, R.U, x, y)
        assert sq.equal(prod, sq.tensor({G11: ONE}, {G11: ONE}))


class TestCombinators:
    def test_flatten_roundtrip(self):
        dims = (3, 4, 2)
        for flat in range(24):
            assert flatten_index(unflatten_index(flat, dims), dims) == flat

    def test_tensor_of_bilinearity(self):
        dims = (2, 2)
        a = {0: ONE, 1: Fraction(2)}
        b = {1: Fraction(3)}
        c = {0: Fraction(-1), 1: ONE}
        lhs = tensor_of(dims, a, {k: b.get(k, 0) + c.get(k, 0) for k in {*b, *c}})
        rhs = {}
        for k, v in tensor_of(dims, a, b).items():
            rhs[k] = rhs.get(k, 0) + v
        for k, v in tensor_of(dims, a, c).items():
            rhs[k] = rhs.get(k, 0) + v
        rhs = {k: v for k, v in rhs.items() if v}
        assert lhs == rhs

    def test_permute_legs(self):
        dims = (2, 3)
        v = tensor_of(dims, {1: ONE}, {2: Fraction(5)})
        w, wd = permute_legs(v, dims, (1, 0))
        assert wd == (3, 2)
        assert w == tensor_of(wd, {2: Fraction(5)}, {1: ONE})

    def test_permute_three_legs(self):
        dims = (2, 3, 4)
        v = tensor_of(dims, {0: ONE}, {1: ONE}, {3: ONE})
        w, wd = permute_legs(v, dims, (1, 2, 0))
        assert wd == (3, 4, 2)
        assert w == tensor_of(wd, {1: ONE}, {3: ONE}, {0: ONE})

    def test_mult_legs_function_composition(self):
        U = pair_groupoid()
        dims = (4, 4)
        v = tensor_of(dims, {G12: ONE}, {G21: ONE})
        w, wd = mult_legs(v, dims, 0, 1, U)
        assert wd == (4,)
        assert w == {G11: ONE}  # g12 g21 = g11
        w2, _ = mult_legs(v, dims, 0, 1, U, reverse=True)
        assert w2 == {G22: ONE}  # g21 g12 = g22

    def test_mult_legs_in_triple(self):
        U = pair_groupoid()
        dims = (4, 4, 4)
        v = tensor_of(dims, {G12: ONE}, {G11: ONE}, {G21: ONE})
        w, wd = mult_legs(v, dims, 0, 2, U)
        assert wd == (4, 4)
        assert w == tensor_of(wd, {G11: ONE}, {G11: ONE})

    def test_expand_leg(self):
        # duplicate each groupoid arrow, as a coproduct table would
        dims = (4,)
        table = tuple({flatten_index((g, g), (4, 4)): ONE} for g in range(4))
        v = {G21: Fraction(7)}
        w, wd = expand_leg(v, dims, 0, table, (4, 4))
        assert wd == (4, 4)
        assert w == {flatten_index((G21, G21), (4, 4)): Fraction(7)}

    def test_contract_counit(self):
        R = groupoid_ring()
        # counit reads off the target index
        eps = LinearMap(4, 2, ({0: ONE}, {0: ONE}, {1: ONE}, {1: ONE}))
        dims = (4, 4)
        act = R.action("blact")
        v = tensor_of(dims, {G12: ONE}, {G22: ONE})
        w, wd = contract_counit(v, dims, 1, 0, eps, act)
        assert wd == (4,)
        assert w == {G12: ONE}  # eps(g22) = p2 acts by right mult with t(p2)
        v2 = tensor_of(dims, {G12: ONE}, {G11: ONE})
        w2, _ = contract_counit(v2, dims, 1, 0, eps, act)
        assert w2 == {}  # eps(g11) = p1, and g12 t(p1) = 0


class TestOuterActions:
    def test_takeuchi_pair_descends(self):
        R = groupoid_ring()
        sq = coring_square(R)
        assert sq.outer_action_wellformed(0, R.action("blact"))
        assert sq.outer_action_wellformed(1, R.action("bract"))

    def test_illegitimate_action_detected(self):
        R = groupoid_ring()
        sq = coring_square(R)
        # transposing arrows on the first leg does not respect the balancing
        swap = LinearMap(4, 4, ({G11: ONE}, {G21: ONE}, {G12: ONE}, {G22: ONE}))
        ident = LinearMap.identity(4, QQ)
        fake = AModuleAction(R.A, "left", 4, (swap, ident.sub(swap)))
        assert not sq.outer_action_wellformed(0, fake)
