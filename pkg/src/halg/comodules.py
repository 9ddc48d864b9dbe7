"""Left and right comodules of a left bialgebroid, and the switch functors.

A right comodule is a finite-dimensional right A-module together with a
coaction into the balanced tensor carrier (x)_A U; a left comodule mirrors
this with the ring leg on the left.  Every coaction induces a second
A-action by reading the ring leg through the counit, making the carrier an
A-bimodule for which the coaction is linear on both sides and satisfies an
exchange condition between the induced action and right multiplication by
a structure map.

Left translation data turns a right comodule into a left one on the same
carrier: the ring leg is split into its two translation legs, the plus leg
is absorbed through the counit, and the minus leg becomes the new ring
leg.  Right translation data gives the reverse switch; the two are
mutually inverse and strict monoidal for the tensor-product coactions (the
right-comodule side multiplies the ring legs in flipped order), and both
fix the base comodule.

Comodules also correspond to modules over the duals: feeding the ring leg
of a right coaction to a source-linear functional gives a right module
over that dual, and a left coaction pairs the same way with the
target-linear dual.  When the source action on the ring has a dual basis
the module-to-comodule direction exists too, and chaining it with the
comodule switch and the target-linear pairing yields a derived action of
the target-linear dual on any module over the source-linear one; that
derived action is plain right multiplication by the image of the linking
morphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import AModuleAction
from .amodules import DualBasisData, NotFinitelyGeneratedProjective
from .bialgebroid import LeftBialgebroid
from .duals import DualBialgebroid, evaluate_flat
from .hopf import TranslationData
from .linalg import LinearMap, vec_axpy
from .report import Report
from .sstar import compute_sstar, pair_eval
from .tensors import (
    RelationSpec,
    TensorQuotient,
    apply_at_leg,
    contract_counit,
    expand_leg,
    flatten_index,
    mult_legs,
    permute_legs,
    tensor_of,
    unflatten_index,
)


class SideMismatch(ValueError):
    """A comodule or dual was passed on the side the operation cannot use."""


# ---------------------------------------------------------------------------
# comodules


@dataclass(eq=False)
class Comodule:
    """A finite-dimensional comodule, stored through canonical representatives.

    For side "right" the coaction table holds one flat vector per carrier
    basis element over (carrier, ring) legs; for side "left" the legs are
    (ring, carrier).  base_action is the input A-action on the carrier
    (right action for right comodules, left action for left ones); the
    opposite-side action induced through the counit is computed, not taken
    as input.
    """

    side: str
    bialgebroid: LeftBialgebroid
    base_action: AModuleAction
    coaction: tuple
    name: str = ""

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be left or right")
        want = "right" if self.side == "right" else "left"
        if self.base_action.side != want:
            raise SideMismatch("a %s comodule needs a %s A-action on its carrier"
                               % (self.side, want))
        if len(self.coaction) != self.base_action.carrier_dim:
            raise ValueError("coaction needs one entry per carrier basis vector")
        self.coaction = tuple(self.square.canon(v) for v in self.coaction)

    @property
    def dim(self) -> int:
        return self.base_action.carrier_dim

    @property
    def dims(self) -> tuple:
        n = self.bialgebroid.U.dim
        return (self.dim, n) if self.side == "right" else (n, self.dim)

    @cached_property
    def square(self) -> TensorQuotient:
        R = self.bialgebroid.ring
        if self.side == "right":
            rel = RelationSpec(0, self.base_action, 1, R.action("lact"))
        else:
            rel = RelationSpec(0, R.action("ract"), 1, self.base_action)
        return TensorQuotient(self.dims, (rel,),
                              label="%s comodule carrier" % self.side)

    @cached_property
    def induced_action(self) -> AModuleAction:
        """The opposite-side A-action read off through the counit.

        Right side: a . m = m_(0) . eps(m_(1) t(a)); left side mirrors with
        the source map, n . a = eps(n_(-1) s(a)) . n_(0).
        """
        B = self.bialgebroid
        U, A = B.U, B.A
        mats = []
        for ai in range(A.dim):
            a = A.basis_vec(ai)
            cols = []
            if self.side == "right":
                move = U.right_mult_map(B.ring.target(a))
                for v in self.coaction:
                    w, d = apply_at_leg(v, self.dims, 1, move)
                    w, _ = contract_counit(w, d, 1, 0, B.counit, self.base_action)
                    cols.append(w)
            else:
                move = U.right_mult_map(B.ring.source(a))
                for v in self.coaction:
                    w, d = apply_at_leg(v, self.dims, 0, move)
                    w, _ = contract_counit(w, d, 0, 1, B.counit, self.base_action)
                    cols.append(w)
            mats.append(LinearMap(self.dim, self.dim, tuple(cols)))
        side = "left" if self.side == "right" else "right"
        return AModuleAction(A, side, self.dim, tuple(mats))

    def coact(self, m: dict) -> dict:
        """The coaction of a carrier vector, as a canonical representative."""
        out: dict = {}
        for i, c in m.items():
            vec_axpy(out, c, self.coaction[i])
        return out


def check_comodule(M: Comodule) -> Report:
    """Coassociativity, counitality, two-sided linearity, and the exchange law."""
    B = M.bialgebroid
    U, A = B.U, B.A
    n = U.dim
    rep = Report(title=M.name or ("%s comodule" % M.side))

    rep.record("COMOD-BASE-ACTION", M.base_action.check())
    induced = M.induced_action
    rep.record("COMOD-INDUCED-MODULE", induced.check())

    bad = []
    for i, li in enumerate(induced.matrices if M.side == "right"
                           else M.base_action.matrices):
        for j, rj in enumerate(M.base_action.matrices if M.side == "right"
                               else induced.matrices):
            if li.compose(rj) != rj.compose(li):
                bad.append("(%s, %s)" % (A.basis_names[i], A.basis_names[j]))
    rep.record("COMOD-BIMODULE", bad,
               note="input and induced actions commute")

    sq = M.square
    ract = B.ring.action("ract")
    lact = B.ring.action("lact")

    bad = []
    for ai in range(A.dim):
        for c in range(M.dim):
            lhs = M.coact(M.base_action.matrices[ai].cols[c])
            if M.side == "right":
                rhs, _ = apply_at_leg(M.coaction[c], M.dims, 1, ract.matrices[ai])
            else:
                rhs, _ = apply_at_leg(M.coaction[c], M.dims, 0, lact.matrices[ai])
            if not sq.equal(lhs, rhs):
                bad.append("(%s, basis %d)" % (A.basis_names[ai], c))
    rep.record("COMOD-LINEAR", bad,
               note="coaction is linear for the input action")

    bad = []
    for ai in range(A.dim):
        a = A.basis_vec(ai)
        for c in range(M.dim):
            lhs = M.coact(induced.matrices[ai].cols[c])
            if M.side == "right":
                mat = U.right_mult_map(B.ring.target(a))
                rhs, _ = apply_at_leg(M.coaction[c], M.dims, 1, mat)
            else:
                mat = U.right_mult_map(B.ring.source(a))
                rhs, _ = apply_at_leg(M.coaction[c], M.dims, 0, mat)
            if not sq.equal(lhs, rhs):
                bad.append("(%s, basis %d)" % (A.basis_names[ai], c))
    rep.record("COMOD-INDUCED-LINEAR", bad,
               note="coaction is linear for the induced action")

    if M.side == "right":
        tri = TensorQuotient((M.dim, n, n),
                             (RelationSpec(0, M.base_action, 1, lact),
                              RelationSpec(1, ract, 2, lact)))
    else:
        tri = TensorQuotient((n, n, M.dim),
                             (RelationSpec(0, ract, 1, lact),
                              RelationSpec(1, ract, 2, M.base_action)))
    bad = []
    for c in range(M.dim):
        if M.side == "right":
            lhs, _ = expand_leg(M.coaction[c], M.dims, 0, M.coaction, M.dims)
            rhs, _ = expand_leg(M.coaction[c], M.dims, 1, B.coproduct, (n, n))
        else:
            lhs, _ = expand_leg(M.coaction[c], M.dims, 0, B.coproduct, (n, n))
            rhs, _ = expand_leg(M.coaction[c], M.dims, 1, M.coaction, M.dims)
        if not tri.equal(lhs, rhs):
            bad.append("basis %d" % c)
    rep.record("COMOD-COASSOC", bad)

    one = A.field_obj.one
    bad = []
    for c in range(M.dim):
        if M.side == "right":
            v, _ = contract_counit(M.coaction[c], M.dims, 1, 0,
                                   B.counit, M.base_action)
        else:
            v, _ = contract_counit(M.coaction[c], M.dims, 0, 1,
                                   B.counit, M.base_action)
        if v != {c: one}:
            bad.append("basis %d" % c)
    rep.record("COMOD-COUNIT", bad)

    bad = []
    for ai in range(A.dim):
        a = A.basis_vec(ai)
        for c in range(M.dim):
            if M.side == "right":
                lhs, _ = apply_at_leg(M.coaction[c], M.dims, 0,
                                      induced.matrices[ai])
                rhs, _ = apply_at_leg(M.coaction[c], M.dims, 1,
                                      U.right_mult_map(B.ring.source(a)))
            else:
                lhs, _ = apply_at_leg(M.coaction[c], M.dims, 0,
                                      U.right_mult_map(B.ring.target(a)))
                rhs, _ = apply_at_leg(M.coaction[c], M.dims, 1,
                                      induced.matrices[ai])
            if not sq.equal(lhs, rhs):
                bad.append("(%s, basis %d)" % (A.basis_names[ai], c))
    rep.record("COMOD-TAKEUCHI", bad,
               note="induced action exchanges with the structure-map leg")
    return rep


# ---------------------------------------------------------------------------
# stock comodules


def regular_comodule(B: LeftBialgebroid, side: str = "right") -> Comodule:
    """The ring coacting on itself through its coproduct."""
    code = "ract" if side == "right" else "lact"
    return Comodule(side, B, B.ring.action(code), B.coproduct,
                    name="regular %s comodule of %s" % (side, B.name or "?"))


def base_comodule(B: LeftBialgebroid, side: str = "right") -> Comodule:
    """The base algebra with the structure-map coaction (the unit object)."""
    A = B.A
    n = B.U.dim
    da = A.dim
    if side == "right":
        act = AModuleAction(A, "right", da,
                            tuple(A.right_mult_map(A.basis_vec(i))
                                  for i in range(da)))
        table = tuple(tensor_of((da, n), A.unit, B.ring.target(A.basis_vec(i)))
                      for i in range(da))
    else:
        act = AModuleAction(A, "left", da,
                            tuple(A.left_mult_map(A.basis_vec(i))
                                  for i in range(da)))
        table = tuple(tensor_of((n, da), B.ring.source(A.basis_vec(i)), A.unit)
                      for i in range(da))
    return Comodule(side, B, act, table,
                    name="base %s comodule of %s" % (side, B.name or "?"))


# ---------------------------------------------------------------------------
# the switch functors


def functor_F(M: Comodule, left_td: TranslationData) -> Comodule:
    """Turn a right comodule into a left one on the same carrier.

    The ring leg of the coaction is split into its translation legs; the
    plus leg is absorbed into the carrier through the counit and the minus
    leg becomes the new ring leg.  The carrier keeps its A-bimodule
    structure: the new input action is the old induced one.
    """
    if M.side != "right":
        raise SideMismatch("the left switch starts from a right comodule")
    if left_td.kind != "left":
        raise ValueError("left translation data required, got %r" % left_td.kind)
    B = M.bialgebroid
    n = B.U.dim
    table = []
    for c in range(M.dim):
        v, d = expand_leg(M.coaction[c], M.dims, 1, left_td.table, (n, n))
        v, d = contract_counit(v, d, 1, 0, B.counit, M.base_action)
        v, _ = permute_legs(v, d, (1, 0))
        table.append(v)
    return Comodule("left", B, M.induced_action, tuple(table),
                    name="switched(%s)" % (M.name or "right comodule"))


def functor_G(N: Comodule, right_td: TranslationData) -> Comodule:
    """Turn a left comodule into a right one on the same carrier.

    Mirror of the left switch: the ring leg splits through the right
    translation data, the plus leg is absorbed through the counit, and the
    minus leg moves to the right of the carrier.
    """
    if N.side != "left":
        raise SideMismatch("the right switch starts from a left comodule")
    if right_td.kind != "right":
        raise ValueError("right translation data required, got %r" % right_td.kind)
    B = N.bialgebroid
    n = B.U.dim
    table = []
    for c in range(N.dim):
        v, d = expand_leg(N.coaction[c], N.dims, 0, right_td.table, (n, n))
        v, d = contract_counit(v, d, 0, 2, B.counit, N.base_action)
        v, _ = permute_legs(v, d, (1, 0))
        table.append(v)
    return Comodule("right", B, N.induced_action, tuple(table),
                    name="switched(%s)" % (N.name or "left comodule"))


def check_quasi_inverse(M: Comodule, left_td: TranslationData,
                        right_td: TranslationData) -> Report:
    """Round-trip a comodule through both switches and compare everything."""
    rep = Report(title="switch round trip (%s)" % (M.name or M.side))
    if M.side == "right":
        forward = functor_F(M, left_td)
        back = functor_G(forward, right_td)
        cid = "FUN-ROUNDTRIP-RIGHT"
    else:
        forward = functor_G(M, right_td)
        back = functor_F(forward, left_td)
        cid = "FUN-ROUNDTRIP-LEFT"

    bad = []
    if forward.base_action.matrices != M.induced_action.matrices:
        bad.append("input action of the switched comodule")
    if forward.induced_action.matrices != M.base_action.matrices:
        bad.append("induced action of the switched comodule")
    rep.record("FUN-AE-PRESERVED", bad,
               note="the switch keeps the carrier A-bimodule")

    bad = []
    if back.base_action.matrices != M.base_action.matrices:
        bad.append("carrier action differs after the round trip")
    for c in range(M.dim):
        if not M.square.equal(back.coaction[c], M.coaction[c]):
            bad.append("coaction on basis %d" % c)
    rep.record(cid, bad)
    return rep


# ---------------------------------------------------------------------------
# tensor products and monoidality


def _descend_action(quot: TensorQuotient, leg: int,
                    action: AModuleAction) -> AModuleAction:
    """An A-action on one tensor leg, rewritten on quotient coordinates."""
    sec = quot.space.section
    mats = []
    for mat in action.matrices:
        cols = []
        for c in range(quot.dim):
            moved, _ = apply_at_leg(sec.cols[c], quot.dims, leg, mat)
            cols.append(quot.space.project(moved))
        mats.append(LinearMap(quot.dim, quot.dim, tuple(cols)))
    return AModuleAction(action.algebra, action.side, quot.dim, tuple(mats))


def _fold_pair(vec: dict, dims: tuple, leg: int, quot: TensorQuotient) -> dict:
    """Project legs (leg, leg+1) through a quotient, leaving its coordinate."""
    d2 = dims[leg + 1]
    new_dims = dims[:leg] + (quot.dim,) + dims[leg + 2:]
    out: dict = {}
    for flat, c in vec.items():
        idx = unflatten_index(flat, dims)
        coords = quot.space.project({idx[leg] * d2 + idx[leg + 1]: c})
        for k, ck in coords.items():
            nflat = flatten_index(idx[:leg] + (k,) + idx[leg + 2:], new_dims)
            s = out.get(nflat)
            s = ck if s is None else s + ck
            if s:
                out[nflat] = s
            else:
                out.pop(nflat, None)
    return out


def tensor_comodule(M: Comodule, Mp: Comodule, name: str = "") -> Comodule:
    """The tensor product of two same-side comodules over the base.

    The carrier is the balanced tensor of the two carriers (first factor's
    outer action against the second factor's induced one); the coaction is
    codiagonal, with the two ring legs multiplied in flipped order on the
    right-comodule side and in plain order on the left-comodule side.
    """
    if M.side != Mp.side:
        raise SideMismatch("tensor factors live on different sides")
    B = M.bialgebroid
    if Mp.bialgebroid is not B:
        raise ValueError("tensor factors belong to different bialgebroids")
    n = B.U.dim
    if M.side == "right":
        quot = TensorQuotient(
            (M.dim, Mp.dim),
            (RelationSpec(0, M.base_action, 1, Mp.induced_action),))
        base = _descend_action(quot, 1, Mp.base_action)
    else:
        quot = TensorQuotient(
            (M.dim, Mp.dim),
            (RelationSpec(0, M.induced_action, 1, Mp.base_action),))
        base = _descend_action(quot, 0, M.base_action)
    sec = quot.space.section
    table = []
    for c in range(quot.dim):
        if M.side == "right":
            v, d = expand_leg(sec.cols[c], quot.dims, 0, M.coaction, M.dims)
            v, d = expand_leg(v, d, 2, Mp.coaction, Mp.dims)
            v, d = permute_legs(v, d, (0, 2, 3, 1))
            v, d = mult_legs(v, d, 2, 3, B.U)
            table.append(_fold_pair(v, d, 0, quot))
        else:
            v, d = expand_leg(sec.cols[c], quot.dims, 0, M.coaction, M.dims)
            v, d = expand_leg(v, d, 2, Mp.coaction, Mp.dims)
            v, d = permute_legs(v, d, (0, 2, 1, 3))
            v, d = mult_legs(v, d, 0, 1, B.U)
            table.append(_fold_pair(v, d, 1, quot))
    label = name or "(%s)(x)(%s)" % (M.name or "?", Mp.name or "?")
    return Comodule(M.side, B, base, tuple(table), name=label)


def check_monoidality(functor: str, M: Comodule, Mp: Comodule,
                      td: TranslationData) -> Report:
    """The switch of a tensor product against the tensor of the switches.

    functor is "F" (right comodules with left translation data) or "G"
    (left comodules with right translation data).  Also checks that the
    base comodule goes to the base comodule.
    """
    if functor not in ("F", "G"):
        raise ValueError("functor must be F or G")
    B = M.bialgebroid
    rep = Report(title="monoidality of the %s switch" % functor)
    if functor == "F":
        switch = lambda X: functor_F(X, td)
        unit_in = base_comodule(B, "right")
        unit_out = base_comodule(B, "left")
    else:
        switch = lambda X: functor_G(X, td)
        unit_in = base_comodule(B, "left")
        unit_out = base_comodule(B, "right")

    T = tensor_comodule(M, Mp)
    rep.extend(check_comodule(T), tag="tensor")

    lhs = switch(T)
    rhs = tensor_comodule(switch(M), switch(Mp))
    bad = []
    if lhs.dim != rhs.dim:
        bad.append("carrier dimensions differ: %d vs %d" % (lhs.dim, rhs.dim))
    elif lhs.base_action.matrices != rhs.base_action.matrices:
        bad.append("carrier actions differ")
    else:
        for c in range(lhs.dim):
            if not lhs.square.equal(lhs.coaction[c], rhs.coaction[c]):
                bad.append("coaction on basis %d" % c)
    rep.record("MONO-PRODUCT", bad,
               note="switch of the product equals product of the switches")

    switched_unit = switch(unit_in)
    bad = []
    if switched_unit.base_action.matrices != unit_out.base_action.matrices:
        bad.append("carrier action of the switched base comodule")
    for c in range(unit_out.dim):
        if not unit_out.square.equal(switched_unit.coaction[c],
                                     unit_out.coaction[c]):
            bad.append("coaction on basis %d" % c)
    rep.record("MONO-UNIT", bad, note="the base comodule is fixed")
    return rep


# ---------------------------------------------------------------------------
# modules over the duals


@dataclass(eq=False)
class DualModule:
    """A right module over the ring of one of the two duals.

    matrices[k] is the right action of the k-th dual basis element;
    left_matrices, when present, is a commuting left action (the regular
    module carries both) used for equivariance statements.
    """

    dual: DualBialgebroid
    carrier_dim: int
    matrices: tuple
    left_matrices: tuple | None = None
    name: str = ""

    def act(self, m: dict, coords: dict) -> dict:
        out: dict = {}
        for k, c in coords.items():
            vec_axpy(out, c, self.matrices[k].apply(m))
        return out

    def action_map(self, coords: dict) -> LinearMap:
        out = LinearMap.zero(self.carrier_dim, self.carrier_dim)
        for k, c in coords.items():
            out = out.add(self.matrices[k].scale(c))
        return out


def regular_dual_module(D: DualBialgebroid) -> DualModule:
    """The dual ring acting on itself by multiplication on both sides."""
    V = D.V
    right = tuple(V.right_mult_map(V.basis_vec(k)) for k in range(V.dim))
    left = tuple(V.left_mult_map(V.basis_vec(k)) for k in range(V.dim))
    return DualModule(D, V.dim, right, left,
                      name="regular module of %s" % (V.name or "dual"))


def check_dual_module(DM: DualModule) -> Report:
    """Unit and associativity of the right action, on all basis pairs."""
    V = DM.dual.V
    rep = Report(title=DM.name or "dual module")
    ident = LinearMap.identity(DM.carrier_dim, V.field_obj)
    rep.record("DMOD-UNIT",
               [] if DM.action_map(V.unit) == ident
               else ["the dual unit does not act as the identity"])
    bad = []
    for k in range(V.dim):
        for m in range(V.dim):
            prod = DM.action_map(V.mult[k][m])
            if prod != DM.matrices[m].compose(DM.matrices[k]):
                bad.append("(%s, %s)" % (V.basis_names[k], V.basis_names[m]))
    rep.record("DMOD-ASSOC", bad)
    return rep


def comodule_to_dual_module(M: Comodule, D: DualBialgebroid) -> DualModule:
    """The dual-module action read off a coaction through evaluation.

    A right comodule feeds its ring leg to a source-linear functional,
    m . psi = m_(0) . psi(m_(1)); a left comodule pairs with the
    target-linear dual, n . phi = phi(n_(-1)) . n_(0).  Either way the
    A-value acts through the comodule's input action.
    """
    want = "leftdual" if M.side == "right" else "rightdual"
    if D.side != want:
        raise SideMismatch("a %s comodule pairs with the %s, not the %s"
                           % (M.side, want, D.side))
    if D.parent is not M.bialgebroid:
        raise ValueError("the dual and the comodule belong to different rings")
    B = M.bialgebroid
    n = B.U.dim
    da = B.A.dim
    one = B.A.field_obj.one
    mats = []
    for f in D._basis_flat:
        cols = []
        for c in range(M.dim):
            out: dict = {}
            for flat, coeff in M.coaction[c].items():
                if M.side == "right":
                    i, u = divmod(flat, n)
                else:
                    u, i = divmod(flat, M.dim)
                a = evaluate_flat(f, {u: coeff}, da)
                if a:
                    vec_axpy(out, one, M.base_action.act(a, {i: one}))
            cols.append(out)
        mats.append(LinearMap(M.dim, M.dim, tuple(cols)))
    return DualModule(D, M.dim, tuple(mats),
                      name="%s acting on %s" % (D.V.name or D.side,
                                                M.name or "comodule"))


def dual_module_to_comodule(Mmod: DualModule,
                            dual_basis: DualBasisData | None = None) -> Comodule:
    """Rebuild the right comodule underneath a module over the source-linear dual.

    The coaction sends m to the sum of m . e^i (x) e_i over a dual basis of
    the source action on the ring; the carrier's right A-action is the
    restriction of the module action along the dual's source embedding.
    """
    D = Mmod.dual
    if D.side != "leftdual":
        raise SideMismatch(
            "the comodule direction needs a module over the source-linear dual")
    db = dual_basis if dual_basis is not None else D.dual_basis
    if db is None:
        raise NotFinitelyGeneratedProjective(
            D.obstruction or "the source action on the ring has no dual basis")
    B = D.parent
    A = B.A
    n = B.U.dim
    dm = Mmod.carrier_dim
    one = A.field_obj.one
    gen_coords = tuple(D.coordinates(cg) for cg in db.cogenerators)
    base = AModuleAction(
        A, "right", dm,
        tuple(Mmod.action_map(D.ring.source(A.basis_vec(ai)))
              for ai in range(A.dim)))
    table = []
    for c in range(dm):
        out: dict = {}
        for i in range(db.size):
            piece = Mmod.act({c: one}, gen_coords[i])
            for m2, cm in piece.items():
                for u2, cu in db.generators[i].items():
                    key = m2 * n + u2
                    s = out.get(key)
                    s = cm * cu if s is None else s + cm * cu
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        table.append(out)
    return Comodule("right", B, base, tuple(table),
                    name="comodule of %s" % (Mmod.name or "dual module"))


# ---------------------------------------------------------------------------
# the derived action of the target-linear dual


def derived_ustar_action(Mmod: DualModule, left_td: TranslationData,
                         rightdual: DualBialgebroid,
                         dual_basis: DualBasisData | None = None) -> DualModule:
    """Push a module over the source-linear dual to one over the target-linear dual.

    The action of a target-linear functional phi is the dual-basis sum of
    m . e^i scaled by eps(e_i_plus s(phi(e_i_minus))), with the scalar
    acting through the source embedding of the source-linear dual.
    """
    D = Mmod.dual
    if D.side != "leftdual":
        raise SideMismatch(
            "the derived action starts from a module over the source-linear dual")
    if rightdual.side != "rightdual":
        raise SideMismatch("the derived action is by the target-linear dual")
    if left_td.kind != "left":
        raise ValueError("left translation data required, got %r" % left_td.kind)
    db = dual_basis if dual_basis is not None else D.dual_basis
    if db is None:
        raise NotFinitelyGeneratedProjective(
            D.obstruction or "the source action on the ring has no dual basis")
    B = D.parent
    dm = Mmod.carrier_dim
    one = B.A.field_obj.one
    gen_coords = tuple(D.coordinates(cg) for cg in db.cogenerators)
    mats = []
    for f in rightdual._basis_flat:
        cols = []
        for c in range(dm):
            out: dict = {}
            for i in range(db.size):
                a = pair_eval(B, left_td.table[i], f, B.ring.source)
                if not a:
                    continue
                piece = Mmod.act(Mmod.act({c: one}, gen_coords[i]),
                                 D.ring.source(a))
                vec_axpy(out, one, piece)
            cols.append(out)
        mats.append(LinearMap(dm, dm, tuple(cols)))
    return DualModule(rightdual, dm, tuple(mats),
                      name="derived action on %s" % (Mmod.name or "module"))


def check_derived_action(Mmod: DualModule, left_td: TranslationData,
                         rightdual: DualBialgebroid) -> Report:
    """The derived action against right multiplication by the linking image."""
    D = Mmod.dual
    B = D.parent
    rep = Report(title="derived dual action on %s" % (Mmod.name or "module"))
    derived = derived_ustar_action(Mmod, left_td, rightdual)
    rep.extend(check_dual_module(derived), tag="derived")

    ident = LinearMap.identity(Mmod.carrier_dim, B.A.field_obj)
    rep.record("DERIVED-UNIT",
               [] if derived.action_map(rightdual.V.unit) == ident
               else ["the unit functional does not act as the identity"])

    link = compute_sstar(B, left_td, rightdual=rightdual, leftdual=D)
    bad = []
    for k in range(rightdual.dim):
        if derived.matrices[k] != Mmod.action_map(link.linear_part.cols[k]):
            bad.append(rightdual.V.basis_names[k])
    rep.record("DERIVED-MATCHES-LINK", bad,
               note="derived action is right multiplication by the linked image")

    if Mmod.left_matrices is None:
        rep.add_skip("DERIVED-EQUIVARIANCE", "no companion left action")
    else:
        bad = []
        for k, lm in enumerate(Mmod.left_matrices):
            for j in range(rightdual.dim):
                if derived.matrices[j].compose(lm) != lm.compose(derived.matrices[j]):
                    bad.append("(%s, %s)" % (D.V.basis_names[k],
                                             rightdual.V.basis_names[j]))
        rep.record("DERIVED-EQUIVARIANCE", bad,
                   note="derived action commutes with the left action")
    return rep


def check_module_comodule_square(M: Comodule, left_td: TranslationData,
                                 leftdual: DualBialgebroid,
                                 rightdual: DualBialgebroid) -> Report:
    """Both routes from a right comodule to a target-linear dual module agree.

    Solid route: switch the comodule to the left side, then pair with the
    target-linear dual.  Dotted route: pair with the source-linear dual,
    then push through the derived action.
    """
    if M.side != "right":
        raise SideMismatch("the square starts from a right comodule")
    rep = Report(title="module-comodule square on %s" % (M.name or "comodule"))
    upper = comodule_to_dual_module(M, leftdual)
    dotted = derived_ustar_action(upper, left_td, rightdual)
    solid = comodule_to_dual_module(functor_F(M, left_td), rightdual)
    bad = []
    for k in range(rightdual.dim):
        if dotted.matrices[k] != solid.matrices[k]:
            bad.append(rightdual.V.basis_names[k])
    rep.record("MODCOMOD-SQUARE", bad,
               note="derived route equals the switched pairing route")
    return rep
