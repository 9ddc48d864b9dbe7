"""Small structure-constant algebras shared across test modules."""

from fractions import Fraction

from halg.fields import QQ
from halg.algebra import FiniteAlgebra

ONE = Fraction(1)


def group_algebra_c2() -> FiniteAlgebra:
    # basis (1, g), g^2 = 1
    return FiniteAlgebra.build(
        QQ, ("1", "g"),
        {
            (0, 0): {0: ONE}, (0, 1): {1: ONE},
            (1, 0): {1: ONE}, (1, 1): {0: ONE},
        },
        {0: ONE}, name="kC2")


def dual_numbers() -> FiniteAlgebra:
    # k[x]/(x^2), basis (1, x)
    return FiniteAlgebra.build(
        QQ, ("1", "x"),
        {
            (0, 0): {0: ONE}, (0, 1): {1: ONE},
            (1, 0): {1: ONE}, (1, 1): {},
        },
        {0: ONE}, name="k[x]/(x^2)")


def upper_triangular_2x2() -> FiniteAlgebra:
    # basis e11, e12, e22
    n = {}
    e11, e12, e22 = 0, 1, 2
    for i in range(3):
        for j in range(3):
            n[(i, j)] = {}
    n[(e11, e11)] = {e11: ONE}
    n[(e11, e12)] = {e12: ONE}
    n[(e12, e22)] = {e12: ONE}
    n[(e22, e22)] = {e22: ONE}
    return FiniteAlgebra.build(QQ, ("e11", "e12", "e22"), n,
                               {e11: ONE, e22: ONE}, name="upper2")


def two_points() -> FiniteAlgebra:
    # k x k with pointwise product, basis (p1, p2)
    return FiniteAlgebra.build(
        QQ, ("p1", "p2"),
        {
            (0, 0): {0: ONE}, (0, 1): {},
            (1, 0): {}, (1, 1): {1: ONE},
        },
        {0: ONE, 1: ONE}, name="kxk")


def pair_groupoid() -> FiniteAlgebra:
    """Arrows g_ij between two points, composed like functions.

    g_ij goes j -> i (target first); g_ij g_kl = g_il when j = k, else 0.
    """
    names = ("g11", "g12", "g21", "g22")
    idx = {(i, j): 2 * (i - 1) + (j - 1) for i in (1, 2) for j in (1, 2)}
    table = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            table[(a, b)] = {idx[(i, l)]: ONE} if j == k else {}
    unit = {idx[(1, 1)]: ONE, idx[(2, 2)]: ONE}
    return FiniteAlgebra.build(QQ, names, table, unit, name="pairgpd")


def sweedler_h4() -> FiniteAlgebra:
    # basis (1, g, x, gx); g^2 = 1, x^2 = 0, xg = -gx
    names = ("1", "g", "x", "gx")
    I, G, X, GX = 0, 1, 2, 3
    t = {
        (I, I): {I: ONE}, (I, G): {G: ONE}, (I, X): {X: ONE}, (I, GX): {GX: ONE},
        (G, I): {G: ONE}, (G, G): {I: ONE}, (G, X): {GX: ONE}, (G, GX): {X: ONE},
        (X, I): {X: ONE}, (X, G): {GX: -ONE}, (X, X): {}, (X, GX): {},
        (GX, I): {GX: ONE}, (GX, G): {X: -ONE}, (GX, X): {}, (GX, GX): {},
    }
    return FiniteAlgebra.build(QQ, names, t, {I: ONE}, name="H4")
