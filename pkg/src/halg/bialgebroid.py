"""Left and right bialgebroids over a fixed base algebra, with axiom checks.

A left bialgebroid is an A^e-ring U together with a coproduct landing in
U (x)_A U and a counit landing in A, subject to: the coproduct corestricts
to the Takeuchi subspace, is coassociative and counital, is multiplicative
(factorwise on Takeuchi members) and unital; the counit is a bimodule map
sending 1 to 1 and absorbing products through either structure map.

Right bialgebroids are checked through a mirror: the structure
(W, A, s, t, coproduct, augmentation) is accepted exactly when
(W^op, A, source := t, target := s, same coproduct, counit := augmentation)
passes the left-sided checks.  The mirror turns the right-sided balancing
w s(a) (x) w' ~ w (x) w' t(a) into the standard left-sided one, so every
right-sided axiom appears under its mirrored name.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import FiniteAlgebra, check_algebra_axioms, opposite
from .linalg import LinearMap, vec_sub
from .report import CheckResult, Report
from .tensors import (
    AeRing,
    BalancedTensor,
    RelationSpec,
    TakeuchiProduct,
    TensorQuotient,
    check_aering,
    contract_counit,
    coring_square,
    expand_leg,
    factorwise_product,
    left_takeuchi,
    permute_legs,
    tensor_of,
)


@dataclass(frozen=True, eq=False)
class LeftBialgebroid:
    """Coproduct entries are flat vectors over (dim U, dim U), one per basis."""

    ring: AeRing
    coproduct: tuple
    counit: LinearMap
    name: str = ""

    def __post_init__(self):
        n = self.ring.U.dim
        if len(self.coproduct) != n:
            raise ValueError("coproduct needs one entry per basis element")
        if self.counit.domain_dim != n or self.counit.codomain_dim != self.ring.A.dim:
            raise ValueError("counit must map U to A")

    @property
    def A(self) -> FiniteAlgebra:
        return self.ring.A

    @property
    def U(self) -> FiniteAlgebra:
        return self.ring.U

    def delta(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for k, c2 in self.coproduct[i].items():
                s = out.get(k)
                s = c * c2 if s is None else s + c * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def eps(self, u: dict) -> dict:
        return self.counit.apply(u)

    @cached_property
    def square(self) -> BalancedTensor:
        return coring_square(self.ring)

    @cached_property
    def takeuchi(self) -> TakeuchiProduct:
        return left_takeuchi(self.ring, self.square)

    @cached_property
    def coassoc_space(self) -> TensorQuotient:
        n = self.U.dim
        ract = self.ring.action("ract")
        lact = self.ring.action("lact")
        return TensorQuotient(
            (n, n, n),
            (RelationSpec(0, ract, 1, lact), RelationSpec(1, ract, 2, lact)),
            label="U(x)_A U(x)_A U")


def check_left_bialgebroid(L: LeftBialgebroid) -> Report:
    rep = Report(title=L.name or "left bialgebroid")
    rep.extend(check_algebra_axioms(L.A), tag="A")
    rep.extend(check_algebra_axioms(L.U), tag="U")
    rep.extend(check_aering(L.ring))

    U, A = L.U, L.A
    n = U.dim
    dims2 = (n, n)
    sq = L.square
    names = U.basis_names

    bad = []
    for i in range(n):
        if not L.takeuchi.contains_ambient(L.coproduct[i]):
            bad.append(names[i])
    rep.record("LBA-TAKEUCHI", bad,
               note="coproduct lands in the exchange subspace")

    tri = L.coassoc_space
    bad = []
    for i in range(n):
        lhs, _ = expand_leg(L.coproduct[i], dims2, 0, L.coproduct, dims2)
        rhs, _ = expand_leg(L.coproduct[i], dims2, 1, L.coproduct, dims2)
        if not tri.equal(lhs, rhs):
            bad.append(names[i])
    rep.record("LBA-COASSOC", bad)

    lact = L.ring.action("lact")
    ract = L.ring.action("ract")
    bad = []
    for i in range(n):
        v, _ = contract_counit(L.coproduct[i], dims2, 0, 1, L.counit, lact)
        if vec_sub(v, {i: A.field_obj.one}):
            bad.append(names[i])
    rep.record("LBA-COUNIT-LEFT", bad)
    bad = []
    for i in range(n):
        v, _ = contract_counit(L.coproduct[i], dims2, 1, 0, L.counit, ract)
        if vec_sub(v, {i: A.field_obj.one}):
            bad.append(names[i])
    rep.record("LBA-COUNIT-RIGHT", bad)

    rep.record("LBA-DELTA-UNIT",
               [] if sq.equal(L.delta(U.unit), tensor_of(dims2, U.unit, U.unit))
               else ["coproduct of 1 is not 1 (x) 1"])

    bad = []
    for i in range(n):
        for j in range(n):
            lhs = factorwise_product(sq, U, L.coproduct[i], L.coproduct[j])
            if not sq.equal(lhs, L.delta(U.mult[i][j])):
                bad.append("(%s, %s)" % (names[i], names[j]))
    rep.record("LBA-DELTA-MULT", bad)

    rep.record("LBA-EPS-UNIT",
               [] if not vec_sub(L.eps(U.unit), A.unit) else ["eps(1) differs from 1"])

    bad = []
    for ai in range(A.dim):
        a = A.basis_vec(ai)
        for bi in range(A.dim):
            b = A.basis_vec(bi)
            for i in range(n):
                u = U.basis_vec(i)
                lhs = L.eps(U.multiply(L.ring.source(a), U.multiply(L.ring.target(b), u)))
                rhs = A.multiply(a, A.multiply(L.eps(u), b))
                if vec_sub(lhs, rhs):
                    bad.append("(%s, %s, %s)" % (A.basis_names[ai], A.basis_names[bi], names[i]))
    rep.record("LBA-EPS-BIMOD", bad)

    bad = []
    for i in range(n):
        u = U.basis_vec(i)
        for j in range(n):
            v = U.basis_vec(j)
            whole = L.eps(U.multiply(u, v))
            via_s = L.eps(U.multiply(u, L.ring.source(L.eps(v))))
            via_t = L.eps(U.multiply(u, L.ring.target(L.eps(v))))
            if vec_sub(whole, via_s) or vec_sub(whole, via_t):
                bad.append("(%s, %s)" % (names[i], names[j]))
    rep.record("LBA-EPS-MULT", bad)

    bad = []
    for ai in range(A.dim):
        a = A.basis_vec(ai)
        if vec_sub(L.eps(L.ring.source(a)), a):
            bad.append(A.basis_names[ai])
    rep.record("LBA-EPS-S", bad)
    bad = []
    for ai in range(A.dim):
        a = A.basis_vec(ai)
        if vec_sub(L.eps(L.ring.target(a)), a):
            bad.append(A.basis_names[ai])
    rep.record("LBA-EPS-T", bad)

    mats = base_action_maps(L)
    bad = []
    for i in range(n):
        u = U.basis_vec(i)
        for ai in range(A.dim):
            a = A.basis_vec(ai)
            via_t = L.eps(U.multiply(u, L.ring.target(a)))
            if vec_sub(mats[i].apply(a), via_t):
                bad.append("(%s, %s)" % (names[i], A.basis_names[ai]))
    rep.record("LBA-BASE-ACTION", bad,
               note="acting on the base reads the same through either structure map")

    bad = []
    ident = LinearMap.identity(A.dim, A.field_obj)
    unit_mat = _combine_base_maps(mats, U.unit, A)
    if unit_mat != ident:
        bad.append("1 does not act as the identity on A")
    for i in range(n):
        for j in range(n):
            prod = _combine_base_maps(mats, U.mult[i][j], A)
            if mats[i].compose(mats[j]) != prod:
                bad.append("(%s, %s)" % (names[i], names[j]))
    rep.record("LBA-BASE-MODULE", bad)
    return rep


def base_action_maps(L: LeftBialgebroid) -> tuple:
    """Per-basis matrices of the action of U on its base, u . a = eps(u s(a))."""
    out = []
    for i in range(L.U.dim):
        u = L.U.basis_vec(i)
        cols = []
        for ai in range(L.A.dim):
            a = L.A.basis_vec(ai)
            cols.append(L.eps(L.U.multiply(u, L.ring.source(a))))
        out.append(LinearMap(L.A.dim, L.A.dim, tuple(cols)))
    return tuple(out)


def action_on_base(L: LeftBialgebroid, u: dict, a: dict) -> dict:
    return L.eps(L.U.multiply(u, L.ring.source(a)))


def _combine_base_maps(mats: tuple, u: dict, A: FiniteAlgebra) -> LinearMap:
    out = LinearMap.zero(A.dim, A.dim)
    for i, c in u.items():
        out = out.add(mats[i].scale(c))
    return out


# ---------------------------------------------------------------------------
# right bialgebroids


@dataclass(frozen=True, eq=False)
class RightBialgebroid:
    """Same data layout as the left case; the counit slot is the augmentation."""

    ring: AeRing
    coproduct: tuple
    augmentation: LinearMap
    name: str = ""

    def __post_init__(self):
        n = self.ring.U.dim
        if len(self.coproduct) != n:
            raise ValueError("coproduct needs one entry per basis element")
        if (self.augmentation.domain_dim != n
                or self.augmentation.codomain_dim != self.ring.A.dim):
            raise ValueError("augmentation must map the ring to the base")

    @property
    def A(self) -> FiniteAlgebra:
        return self.ring.A

    @property
    def U(self) -> FiniteAlgebra:
        return self.ring.U

    def delta(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for k, c2 in self.coproduct[i].items():
                s = out.get(k)
                s = c * c2 if s is None else s + c * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def partial(self, u: dict) -> dict:
        return self.augmentation.apply(u)

    @cached_property
    def mirror(self) -> LeftBialgebroid:
        return mirror_right_to_left(self)

    @cached_property
    def square(self) -> TensorQuotient:
        """The right coring square w s(a) (x) w' ~ w (x) w' t(a)."""
        n = self.ring.U.dim
        bract = self.ring.action("bract")
        blact = self.ring.action("blact")
        return TensorQuotient((n, n), (RelationSpec(0, bract, 1, blact),),
                              label="W(x)_A W (right)")


def mirror_right_to_left(R: RightBialgebroid) -> LeftBialgebroid:
    """The opposite-ring presentation on which right axioms read left-handed."""
    Wop = opposite(R.ring.U)
    ring = AeRing.from_source_target(R.A, Wop, R.ring.target_map(), R.ring.source_map())
    return LeftBialgebroid(ring, R.coproduct, R.augmentation,
                           name=(R.name + " (mirrored)") if R.name else "mirrored")


def check_right_bialgebroid(R: RightBialgebroid) -> Report:
    inner = check_left_bialgebroid(R.mirror)
    rep = Report(title=R.name or "right bialgebroid")
    for c in inner.checks:
        cid = c.check_id.replace("LBA-", "RBA-")
        rep.checks.append(CheckResult(cid, c.status, list(c.witnesses), c.note))
    return rep


def op_coop_of_right(R: RightBialgebroid, nu: LinearMap,
                     nu_inv: LinearMap, A: FiniteAlgebra,
                     name: str = "") -> LeftBialgebroid:
    """The opposite-and-coopposite of a right bialgebroid, as a left one.

    nu is an algebra isomorphism from A to the opposite of the right base;
    the result lives on the opposite ring, with source s . nu, target
    t . nu, flipped coproduct, and counit nu^{-1} . augmentation.
    """
    Wop = opposite(R.ring.U)
    n = Wop.dim
    src = R.ring.source_map().compose(nu)
    tgt = R.ring.target_map().compose(nu)
    ring = AeRing.from_source_target(A, Wop, src, tgt)
    flipped = tuple(permute_legs(entry, (n, n), (1, 0))[0] for entry in R.coproduct)
    counit = nu_inv.compose(R.augmentation)
    return LeftBialgebroid(ring, flipped, counit, name=name or "op-coop")


def op_coop_of_left(L: LeftBialgebroid, mu: LinearMap,
                    mu_inv: LinearMap, B: FiniteAlgebra,
                    name: str = "") -> RightBialgebroid:
    """The opposite-and-coopposite of a left bialgebroid, as a right one.

    mu is an algebra isomorphism from B to the opposite of the left base;
    the result lives on the opposite ring, with flipped coproduct and
    augmentation mu^{-1} . counit.
    """
    Uop = opposite(L.ring.U)
    n = Uop.dim
    src = L.ring.source_map().compose(mu)
    tgt = L.ring.target_map().compose(mu)
    ring = AeRing.from_source_target(B, Uop, src, tgt)
    flipped = tuple(permute_legs(entry, (n, n), (1, 0))[0] for entry in L.coproduct)
    aug = mu_inv.compose(L.counit)
    return RightBialgebroid(ring, flipped, aug, name=name or "op-coop")


# ---------------------------------------------------------------------------
# pairings


class Pairing:
    """An A-valued pairing between two A^e-rings, of left or right kind.

    form[i][j] is the A-element pairing the i-th basis vector of the first
    ring with the j-th basis vector of the second.  The kind fixes which
    action on one slot transposes to which action on the other.
    """

    def __init__(self, kind: str, first: AeRing, second: AeRing, form: tuple,
                 name: str = ""):
        if kind not in ("left", "right"):
            raise ValueError("kind must be left or right")
        if first.A is not second.A and first.A.mult != second.A.mult:
            raise ValueError("both sides must share the base algebra")
        self.kind = kind
        self.first = first
        self.second = second
        self.form = form
        self.name = name

    def value(self, u: dict, w: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for j, c2 in w.items():
                for k, c3 in self.form[i][j].items():
                    s = out.get(k)
                    add = c * c2 * c3
                    s = add if s is None else s + add
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out


def check_pairing(P: Pairing) -> Report:
    """The five transposition laws of the declared kind, on all basis triples."""
    rep = Report(title=P.name or ("%s pairing" % P.kind))
    A = P.first.A
    F, S = P.first, P.second

    if P.kind == "left":
        laws = [
            ("PAIR-L1", lambda u, w, a: P.value(u, S.lact(a, w)),
             lambda u, w, a: P.value(F.ract(u, a), w)),
            ("PAIR-L2", lambda u, w, a: P.value(u, S.ract(w, a)),
             lambda u, w, a: P.value(F.blact(a, u), w)),
            ("PAIR-L3", lambda u, w, a: P.value(u, S.blact(a, w)),
             lambda u, w, a: P.value(F.bract(u, a), w)),
            ("PAIR-L4", lambda u, w, a: P.value(u, S.bract(w, a)),
             lambda u, w, a: A.multiply(P.value(u, w), a)),
            ("PAIR-L5", lambda u, w, a: P.value(F.lact(a, u), w),
             lambda u, w, a: A.multiply(a, P.value(u, w))),
        ]
    else:
        laws = [
            ("PAIR-R1", lambda u, w, a: P.value(u, S.ract(w, a)),
             lambda u, w, a: P.value(F.lact(a, u), w)),
            ("PAIR-R2", lambda u, w, a: P.value(u, S.lact(a, w)),
             lambda u, w, a: P.value(F.bract(u, a), w)),
            ("PAIR-R3", lambda u, w, a: P.value(u, S.bract(w, a)),
             lambda u, w, a: P.value(F.blact(a, u), w)),
            ("PAIR-R4", lambda u, w, a: P.value(u, S.blact(a, w)),
             lambda u, w, a: A.multiply(a, P.value(u, w))),
            ("PAIR-R5", lambda u, w, a: P.value(F.ract(u, a), w),
             lambda u, w, a: A.multiply(P.value(u, w), a)),
        ]

    for cid, lhs, rhs in laws:
        bad = []
        for ai in range(A.dim):
            a = A.basis_vec(ai)
            for i in range(F.U.dim):
                u = F.U.basis_vec(i)
                for j in range(S.U.dim):
                    w = S.U.basis_vec(j)
                    if vec_sub(lhs(u, w, a), rhs(u, w, a)):
                        bad.append("(%s, %s, %s)" % (F.U.basis_names[i],
                                                     S.U.basis_names[j],
                                                     A.basis_names[ai]))
        rep.record(cid, bad)
    return rep
