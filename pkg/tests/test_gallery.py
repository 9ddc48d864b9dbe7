"""Frozen structure oracles for the curated instances."""

from fractions import Fraction

import pytest

from halg.gallery import GalleryInstance, UnknownInstance, build_gallery_instance, gallery_ids
from halg.linalg import LinearMap
from halg.fields import QQ
from halg.tensors import flatten_index

ONE = Fraction(1)


def test_dims():
    assert build_gallery_instance("EX-HOPF").left.U.dim == 2
    assert build_gallery_instance("EX-SW").left.U.dim == 4
    assert build_gallery_instance("EX-GPD").left.U.dim == 4
    assert build_gallery_instance("EX-AE").left.U.dim == 4


def test_unknown_instances_rejected():
    for bad in ("EX-XX", "EX-LR", "EX-LR()", "EX-LR(zero)", "EX-LR(0)", ""):
        with pytest.raises(UnknownInstance):
            build_gallery_instance(bad)


def test_gallery_ids():
    assert set(gallery_ids()) == {"EX-HOPF", "EX-SW", "EX-GPD", "EX-AE", "EX-LR(3)"}
    assert "EX-LR(3)" not in gallery_ids(include_truncated=False)


class TestSweedler:
    def test_antipode_matrix(self):
        inst = build_gallery_instance("EX-SW")
        I, G, X, GX = 0, 1, 2, 3
        S = inst.antipode
        assert S.apply({X: ONE}) == {GX: -ONE}
        assert S.apply({GX: ONE}) == {X: ONE}
        assert S.apply({G: ONE}) == {G: ONE}

    def test_antipode_has_order_four(self):
        inst = build_gallery_instance("EX-SW")
        S = inst.antipode
        S2 = S.compose(S)
        ident = LinearMap.identity(4, QQ)
        assert S2 != ident
        assert S2.compose(S2) == ident

    def test_antipode_inverse(self):
        inst = build_gallery_instance("EX-SW")
        ident = LinearMap.identity(4, QQ)
        assert inst.antipode.compose(inst.antipode_inverse) == ident
        assert inst.antipode_inverse.compose(inst.antipode) == ident

    def test_coproduct_of_x(self):
        inst = build_gallery_instance("EX-SW")
        I, G, X = 0, 1, 2
        n = 4
        assert inst.left.coproduct[X] == {
            flatten_index((X, I), (n, n)): ONE,
            flatten_index((G, X), (n, n)): ONE,
        }


class TestGroupC2:
    def test_antipode_is_identity(self):
        inst = build_gallery_instance("EX-HOPF")
        assert inst.antipode == LinearMap.identity(2, QQ)

    def test_grouplike_coproduct(self):
        inst = build_gallery_instance("EX-HOPF")
        assert inst.left.coproduct[1] == {flatten_index((1, 1), (2, 2)): ONE}


class TestPairGroupoid:
    def test_antipode_reverses_arrows(self):
        inst = build_gallery_instance("EX-GPD")
        G11, G12, G21, G22 = 0, 1, 2, 3
        S = inst.antipode
        assert S.apply({G12: ONE}) == {G21: ONE}
        assert S.apply({G21: ONE}) == {G12: ONE}
        assert S.apply({G11: ONE}) == {G11: ONE}

    def test_counit_and_augmentation_read_opposite_ends(self):
        inst = build_gallery_instance("EX-GPD")
        G12 = 1
        assert inst.left.counit.apply({G12: ONE}) == {0: ONE}
        assert inst.right.augmentation.apply({G12: ONE}) == {1: ONE}

    def test_augmentation_is_counit_after_antipode(self):
        inst = build_gallery_instance("EX-GPD")
        assert inst.right.augmentation == inst.left.counit.compose(inst.antipode)


class TestEnvelopingInstance:
    def test_counit_multiplies_factors(self):
        inst = build_gallery_instance("EX-AE")
        eps = inst.left.counit
        # basis 1(x)1, 1(x)x, x(x)1, x(x)x; counit lands in (1, x)
        assert eps.apply({0: ONE}) == {0: ONE}
        assert eps.apply({1: ONE}) == {1: ONE}
        assert eps.apply({2: ONE}) == {1: ONE}
        assert eps.apply({3: ONE}) == {}

    def test_coproduct_splits_factors(self):
        inst = build_gallery_instance("EX-AE")
        n = 4

        def e(p, q):
            return 2 * p + q

        for p in (0, 1):
            for q in (0, 1):
                assert inst.left.coproduct[e(p, q)] == {
                    flatten_index((e(p, 0), e(0, q)), (n, n)): ONE}

    def test_antipode_swaps_factors(self):
        inst = build_gallery_instance("EX-AE")
        assert inst.antipode.apply({1: ONE}) == {2: ONE}
        assert inst.antipode.apply({2: ONE}) == {1: ONE}
