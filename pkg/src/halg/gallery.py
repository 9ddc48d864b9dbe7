"""Curated desk-scale instances exercising every construction.

Available instances:

  EX-HOPF   group algebra of the two-element group over the rationals
  EX-SW     the four-dimensional Taft-type algebra (group-like g, skew
            primitive x with x^2 = 0, xg = -gx); antipode of order four
  EX-GPD    the pair groupoid on two points over k x k
  EX-AE     the enveloping ring A (x) A^op for A = k[x]/(x^2)
  EX-LR(N)  degree-truncated differential-operator ring on k[x]/(x^2)
            over GF(2), with its filtration-degree dual tower

The first four return a GalleryInstance bundling a left bialgebroid, the
matching right bialgebroid on the same ring, and the antipode that links
them.  EX-LR(N) returns the truncated-envelope bundle from the
lierinehart module.

Convention sheet for EX-GPD: arrows g_ij run j -> i and compose like
functions (g_ij g_jk = g_ik); both structure maps are the diagonal
embedding of k x k, so left multiplication by an embedded function reads
the target index and right multiplication reads the source index; the
counit sends an arrow to the indicator of the index read by left
multiplication.  These choices make every axiom check pass; flipping the
counit to the other index breaks the counit laws (used as a fault
fixture in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraMap, FiniteAlgebra, enveloping, scalar_algebra
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .fields import QQ
from .linalg import LinearMap, inverse
from .tensors import AeRing, flatten_index


class UnknownInstance(ValueError):
    """Raised for instance names outside the curated list."""


@dataclass(frozen=True, eq=False)
class GalleryInstance:
    instance_id: str
    description: str
    left: LeftBialgebroid
    right: RightBialgebroid
    antipode: LinearMap
    antipode_inverse: LinearMap


ONE = Fraction(1)


def _pair(n: int, i: int, j: int, c=ONE) -> dict:
    return {flatten_index((i, j), (n, n)): c}


def _group_c2() -> GalleryInstance:
    A = scalar_algebra(QQ)
    U = FiniteAlgebra.build(
        QQ, ("1", "g"),
        {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 0): {1: ONE}, (1, 1): {0: ONE}},
        {0: ONE}, name="kC2")
    unit_embed = LinearMap(1, 2, ({0: ONE},))
    ring = AeRing.from_source_target(A, U, unit_embed, unit_embed)
    coproduct = (_pair(2, 0, 0), _pair(2, 1, 1))
    counit = LinearMap(2, 1, ({0: ONE}, {0: ONE}))
    left = LeftBialgebroid(ring, coproduct, counit, name="EX-HOPF")
    right = RightBialgebroid(ring, coproduct, counit, name="EX-HOPF (right)")
    S = LinearMap.identity(2, QQ)
    return GalleryInstance("EX-HOPF", "group algebra of C2", left, right, S, S)


def _sweedler() -> GalleryInstance:
    A = scalar_algebra(QQ)
    I, G, X, GX = 0, 1, 2, 3
    table = {
        (I, I): {I: ONE}, (I, G): {G: ONE}, (I, X): {X: ONE}, (I, GX): {GX: ONE},
        (G, I): {G: ONE}, (G, G): {I: ONE}, (G, X): {GX: ONE}, (G, GX): {X: ONE},
        (X, I): {X: ONE}, (X, G): {GX: -ONE}, (X, X): {}, (X, GX): {},
        (GX, I): {GX: ONE}, (GX, G): {X: -ONE}, (GX, X): {}, (GX, GX): {},
    }
    U = FiniteAlgebra.build(QQ, ("1", "g", "x", "gx"), table, {I: ONE}, name="H4")
    unit_embed = LinearMap(1, 4, ({I: ONE},))
    ring = AeRing.from_source_target(A, U, unit_embed, unit_embed)
    n = 4
    coproduct = (
        _pair(n, I, I),
        _pair(n, G, G),
        {flatten_index((X, I), (n, n)): ONE, flatten_index((G, X), (n, n)): ONE},
        {flatten_index((GX, G), (n, n)): ONE, flatten_index((I, GX), (n, n)): ONE},
    )
    counit = LinearMap(4, 1, ({0: ONE}, {0: ONE}, {}, {}))
    left = LeftBialgebroid(ring, coproduct, counit, name="EX-SW")
    right = RightBialgebroid(ring, coproduct, counit, name="EX-SW (right)")
    S = LinearMap(4, 4, ({I: ONE}, {G: ONE}, {GX: -ONE}, {X: ONE}))
    return GalleryInstance("EX-SW", "Taft-type algebra of dimension 4",
                           left, right, S, inverse(S))


def _pair_groupoid() -> GalleryInstance:
    A = FiniteAlgebra.build(
        QQ, ("p1", "p2"),
        {(0, 0): {0: ONE}, (0, 1): {}, (1, 0): {}, (1, 1): {1: ONE}},
        {0: ONE, 1: ONE}, name="kxk")
    idx = {(i, j): 2 * (i - 1) + (j - 1) for i in (1, 2) for j in (1, 2)}
    table = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            table[(a, b)] = {idx[(i, l)]: ONE} if j == k else {}
    U = FiniteAlgebra.build(QQ, ("g11", "g12", "g21", "g22"), table,
                            {idx[(1, 1)]: ONE, idx[(2, 2)]: ONE}, name="pairgpd")
    diag = LinearMap(2, 4, ({idx[(1, 1)]: ONE}, {idx[(2, 2)]: ONE}))
    ring = AeRing.from_source_target(A, U, diag, diag)
    n = 4
    coproduct = tuple(_pair(n, a, a) for a in range(4))
    # counit reads the index picked out by left multiplication (the target)
    counit = LinearMap(4, 2, ({0: ONE}, {0: ONE}, {1: ONE}, {1: ONE}))
    left = LeftBialgebroid(ring, coproduct, counit, name="EX-GPD")
    # the augmentation reads the other end of each arrow
    partial = LinearMap(4, 2, ({0: ONE}, {1: ONE}, {0: ONE}, {1: ONE}))
    right = RightBialgebroid(ring, coproduct, partial, name="EX-GPD (right)")
    S = LinearMap(4, 4, ({idx[(1, 1)]: ONE}, {idx[(2, 1)]: ONE},
                         {idx[(1, 2)]: ONE}, {idx[(2, 2)]: ONE}))
    return GalleryInstance("EX-GPD", "pair groupoid on two points over kxk",
                           left, right, S, S)


def _enveloping_instance() -> GalleryInstance:
    A = FiniteAlgebra.build(
        QQ, ("1", "x"),
        {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 0): {1: ONE}, (1, 1): {}},
        {0: ONE}, name="k[x]/(x^2)")
    U = enveloping(A)  # basis: 1(x)1, 1(x)x, x(x)1, x(x)x (flattened p*2+q)
    ring = AeRing(A, U, AlgebraMap(U, U, LinearMap.identity(4, QQ), name="id"))
    n = 4

    def e(p, q):
        return 2 * p + q

    coproduct = tuple(_pair(n, e(p, 0), e(0, q))
                      for p in (0, 1) for q in (0, 1))
    # counit multiplies the two tensor factors inside A
    counit = LinearMap(4, 2, ({0: ONE}, {1: ONE}, {1: ONE}, {}))
    left = LeftBialgebroid(ring, coproduct, counit, name="EX-AE")
    # right structure: source 1(x)a, target a(x)1, same coproduct table
    src = LinearMap(2, 4, ({e(0, 0): ONE}, {e(0, 1): ONE}))
    tgt = LinearMap(2, 4, ({e(0, 0): ONE}, {e(1, 0): ONE}))
    right_ring = AeRing.from_source_target(A, U, src, tgt)
    right = RightBialgebroid(right_ring, coproduct, counit, name="EX-AE (right)")
    S = LinearMap(4, 4, ({e(0, 0): ONE}, {e(1, 0): ONE}, {e(0, 1): ONE}, {e(1, 1): ONE}))
    return GalleryInstance("EX-AE", "enveloping ring of k[x]/(x^2)",
                           left, right, S, S)


_BUILDERS = {
    "EX-HOPF": _group_c2,
    "EX-SW": _sweedler,
    "EX-GPD": _pair_groupoid,
    "EX-AE": _enveloping_instance,
}


def build_gallery_instance(name: str):
    """Look up an instance by id; EX-LR takes its degree cap in parentheses."""
    key = name.strip()
    if key in _BUILDERS:
        return _BUILDERS[key]()
    if key.startswith("EX-LR(") and key.endswith(")"):
        arg = key[len("EX-LR("):-1]
        try:
            cap = int(arg)
        except ValueError:
            raise UnknownInstance("bad degree cap %r in %r" % (arg, name))
        if cap < 1:
            raise UnknownInstance("degree cap must be at least 1")
        from .lierinehart import build_truncated_instance
        return build_truncated_instance(cap)
    raise UnknownInstance("no instance named %r (try EX-HOPF, EX-SW, EX-GPD, "
                          "EX-AE, or EX-LR(N))" % name)


def gallery_ids(include_truncated: bool = True) -> tuple:
    ids = tuple(_BUILDERS) + (("EX-LR(3)",) if include_truncated else ())
    return ids
