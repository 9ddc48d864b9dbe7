"""Linking morphisms between the two duals of a left bialgebroid.

When the Galois maps of a left bialgebroid U invert, the translation
elements turn a functional on U into another functional on U, exchanging
the two linearity constraints:

    rightdual -> leftdual    phi  |->  [u -> eps(u_+  t(phi(u_-)))]
    leftdual  -> rightdual   psi  |->  [u -> eps(u_(+) s(psi(u_(-))))]

The first uses the left translation table, the second the right one.
Both are honest morphisms of the dual right bialgebroids (structure maps,
augmentation, multiplication, coproduct), they are mutually inverse when
both translations exist, and the first coincides with the dual-basis
action route on the left dual; `check_theorem_morphism` and
`check_theorem_inverse` verify all of this per basis element.

Two larger consequences are mechanised as well: `transpose_antipode_square`
checks that precomposition with a full-algebroid antipode closes a
commuting square with the two linking morphisms, and
`check_cocommutative_full_hopf` materialises the full Hopf algebroid that
the two duals of a cocommutative instance merge into.  Finally
`mixed_distributive_law` builds the entwining map between the two duals
and verifies the four axioms of that notion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bialgebroid import (LeftBialgebroid, check_left_bialgebroid,
                          op_coop_of_right)
from .duals import DualBialgebroid, build_dual, evaluate_flat, flatten_functional
from .hopf import (AntipodeNotInvertible, FullHopfAlgebroid, NotInvertible,
                   NotIso, TranslationData, invert_galois, nu_mu_isomorphisms,
                   translation_from_antipode)
from .linalg import LinearMap, inverse, vec_axpy, vec_sub
from .report import Report
from .tensors import (RelationSpec, TensorQuotient, apply_at_leg, expand_leg,
                      flatten_index, mult_legs, permute_legs, tensor_of,
                      unflatten_index)

DIRECTIONS = ("rightdual->leftdual", "leftdual->rightdual")


class NotCocommutative(ValueError):
    """The instance lacks a precondition of the cocommutative merge."""


@dataclass(eq=False)
class LinkingMorphism:
    """One of the two translation-induced maps between the duals.

    `linear_part` is expressed in the carrier coordinates of the two
    duals; `translation` is the table the formula was evaluated with.
    """

    direction: str
    source: DualBialgebroid
    target: DualBialgebroid
    linear_part: LinearMap
    translation: TranslationData

    def apply(self, coords: dict) -> dict:
        return self.linear_part.apply(coords)


# ---------------------------------------------------------------------------
# the two closed formulas


def pair_eval(B: LeftBialgebroid, tvec: dict, f_flat: dict, embed) -> dict:
    """The A-valued sum eps(u_p embed(f(u_q))) over a two-leg vector."""
    U = B.U
    n = U.dim
    da = B.A.dim
    acc: dict = {}
    for key, c in tvec.items():
        p, q = divmod(key, n)
        a = evaluate_flat(f_flat, {q: B.A.field_obj.one}, da)
        if not a:
            continue
        w = U.multiply(U.basis_vec(p), embed(a))
        vec_axpy(acc, c, B.eps(w))
    return acc


def _link_flat(B: LeftBialgebroid, td: TranslationData, embed, f_flat: dict) -> dict:
    """The image functional of the linking formula, as a flat vector."""
    da = B.A.dim
    out: dict = {}
    for i in range(B.U.dim):
        for r, v in pair_eval(B, td.table[i], f_flat, embed).items():
            out[i * da + r] = v
    return out


def _linked_coordinates(B, td, embed, dual_in, dual_out, k):
    img = _link_flat(B, td, embed, dual_in._basis_flat[k])
    try:
        return dual_out.carrier.coordinates(img)
    except ValueError:
        raise ValueError(
            "linked image of %s violates the %s constraint; the input is "
            "not a genuine half-Hopf structure" %
            (dual_in.V.basis_names[k], dual_out.side))


def compute_sstar(B: LeftBialgebroid, left_td: TranslationData,
                  rightdual: DualBialgebroid | None = None,
                  leftdual: DualBialgebroid | None = None) -> LinkingMorphism:
    """The map phi |-> eps(u_+ t(phi(u_-))) from the right dual to the left.

    Prebuilt duals can be passed to avoid recomputing them; otherwise both
    are constructed here.
    """
    if left_td.kind != "left":
        raise ValueError("expected a left translation table, got %r" % left_td.kind)
    src = rightdual if rightdual is not None else build_dual(B, "rightdual")
    tgt = leftdual if leftdual is not None else build_dual(B, "leftdual")
    cols = tuple(_linked_coordinates(B, left_td, B.ring.target, src, tgt, k)
                 for k in range(src.dim))
    lin = LinearMap(src.dim, tgt.dim, cols)
    return LinkingMorphism(DIRECTIONS[0], src, tgt, lin, left_td)


def compute_sstardown(B: LeftBialgebroid, right_td: TranslationData,
                      leftdual: DualBialgebroid | None = None,
                      rightdual: DualBialgebroid | None = None) -> LinkingMorphism:
    """The map psi |-> eps(u_(+) s(psi(u_(-)))) from the left dual to the right."""
    if right_td.kind != "right":
        raise ValueError("expected a right translation table, got %r" % right_td.kind)
    src = leftdual if leftdual is not None else build_dual(B, "leftdual")
    tgt = rightdual if rightdual is not None else build_dual(B, "rightdual")
    cols = tuple(_linked_coordinates(B, right_td, B.ring.source, src, tgt, k)
                 for k in range(src.dim))
    lin = LinearMap(src.dim, tgt.dim, cols)
    return LinkingMorphism(DIRECTIONS[1], src, tgt, lin, right_td)


# ---------------------------------------------------------------------------
# morphism property


def _exotic_action_flat(B: LeftBialgebroid, td: TranslationData,
                        i: int, f_flat: dict) -> dict:
    """The functional w -> eps(u_p s(f(u_q w))) for the i-th basis element.

    This is the translation-twisted action of U on either dual; evaluated
    at the unit it recovers the linking formula.
    """
    U = B.U
    n = U.dim
    da = B.A.dim
    one = B.A.field_obj.one
    out: dict = {}
    for m in range(n):
        acc: dict = {}
        for key, c in td.table[i].items():
            p, q = divmod(key, n)
            a = evaluate_flat(f_flat, U.multiply({q: one}, {m: one}), da)
            if not a:
                continue
            w = U.multiply({p: one}, B.ring.source(a))
            vec_axpy(acc, c, B.eps(w))
        for r, v in acc.items():
            out[m * da + r] = v
    return out


def _precompose_right_mult(B: LeftBialgebroid, f_flat: dict, i: int) -> dict:
    """The functional v -> f(v u_i), as a flat vector."""
    U = B.U
    da = B.A.dim
    one = B.A.field_obj.one
    out: dict = {}
    for m in range(U.dim):
        for r, v in evaluate_flat(f_flat, U.multiply({m: one}, {i: one}), da).items():
            out[m * da + r] = v
    return out


def _ring_morphism_checks(rep: Report, prefix: str, src: DualBialgebroid,
                          tgt: DualBialgebroid, lin: LinearMap) -> None:
    """Structure maps, augmentation, unit, multiplication."""
    A = src.A
    bad = []
    for r in range(A.dim):
        a = A.basis_vec(r)
        if vec_sub(lin.apply(src.ring.source(a)), tgt.ring.source(a)):
            bad.append(A.basis_names[r])
    rep.record(prefix + "-SOURCE", bad)

    bad = []
    for r in range(A.dim):
        a = A.basis_vec(r)
        if vec_sub(lin.apply(src.ring.target(a)), tgt.ring.target(a)):
            bad.append(A.basis_names[r])
    rep.record(prefix + "-TARGET", bad)

    bad = []
    for k in range(src.dim):
        want = src.augmentation.apply({k: A.field_obj.one})
        if vec_sub(tgt.augmentation.apply(lin.cols[k]), want):
            bad.append(src.V.basis_names[k])
    rep.record(prefix + "-AUG", bad)

    if vec_sub(lin.apply(src.V.unit), tgt.V.unit):
        rep.add_fail(prefix + "-UNIT", ["image of the unit differs"])
    else:
        rep.add_pass(prefix + "-UNIT")

    one = A.field_obj.one
    bad = []
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = lin.apply(src.V.multiply({i: one}, {j: one}))
            rhs = tgt.V.multiply(lin.cols[i], lin.cols[j])
            if vec_sub(lhs, rhs):
                bad.append("(%s, %s)" % (src.V.basis_names[i], src.V.basis_names[j]))
    rep.record(prefix + "-MULT", bad)


def _coproduct_morphism_check(rep: Report, cid: str, src: DualBialgebroid,
                              tgt: DualBialgebroid, lin: LinearMap) -> None:
    if src.bialgebroid is None or tgt.bialgebroid is None:
        rep.add_skip(cid, src.obstruction or tgt.obstruction or "no dual coproduct")
        return
    sq = tgt.bialgebroid.square
    dims = (src.dim, src.dim)
    one = src.A.field_obj.one
    bad = []
    for k in range(src.dim):
        lhs = tgt.bialgebroid.delta(lin.apply({k: one}))
        rhs, d = apply_at_leg(src.bialgebroid.coproduct[k], dims, 0, lin)
        rhs, d = apply_at_leg(rhs, d, 1, lin)
        if not sq.equal(lhs, rhs):
            bad.append(src.V.basis_names[k])
    rep.record(cid, bad)


def check_theorem_morphism(B: LeftBialgebroid, link: LinkingMorphism) -> Report:
    """Everything that makes a linking map a morphism of the dual structures.

    Beyond the ring and coproduct morphism properties this includes the
    action compatibilities: the formula agrees with the translation-twisted
    action evaluated at the unit, intertwines that action with
    precomposition by right multiplication, and (for the rightdual ->
    leftdual direction) matches the dual-basis route together with its
    module equivariance.
    """
    rep = Report(title="dual-linking morphism (%s)" % link.direction)
    src, tgt = link.source, link.target
    lin = link.linear_part
    td = link.translation
    U = B.U
    da = B.A.dim
    one = B.A.field_obj.one

    _ring_morphism_checks(rep, "SSTAR", src, tgt, lin)
    _coproduct_morphism_check(rep, "SSTAR-COPRODUCT", src, tgt, lin)

    img_flat = [flatten_functional(tgt.functional(lin.cols[k]))
                for k in range(src.dim)]

    bad = []
    for k in range(src.dim):
        for i in range(U.dim):
            exotic = _exotic_action_flat(B, td, i, src._basis_flat[k])
            via_action = evaluate_flat(exotic, U.unit, da)
            direct = evaluate_flat(img_flat[k], {i: one}, da)
            if vec_sub(via_action, direct):
                bad.append("(%s, %s)" % (U.basis_names[i], src.V.basis_names[k]))
    rep.record("SSTAR-VIA-ACTION", bad,
               note="link = twisted action evaluated at the unit")

    bad = []
    for k in range(src.dim):
        for i in range(U.dim):
            exotic = _exotic_action_flat(B, td, i, src._basis_flat[k])
            try:
                coords = src.carrier.coordinates(exotic)
            except ValueError:
                bad.append("(%s, %s): twisted action leaves the carrier"
                           % (U.basis_names[i], src.V.basis_names[k]))
                continue
            lhs = lin.apply(coords)
            rhs_flat = _precompose_right_mult(B, img_flat[k], i)
            try:
                rhs = tgt.carrier.coordinates(rhs_flat)
            except ValueError:
                bad.append("(%s, %s): precomposition leaves the carrier"
                           % (U.basis_names[i], src.V.basis_names[k]))
                continue
            if vec_sub(lhs, rhs):
                bad.append("(%s, %s)" % (U.basis_names[i], src.V.basis_names[k]))
    rep.record("SSTAR-ULINEAR", bad,
               note="twisted action on the source, precomposition on the target")

    if link.direction != DIRECTIONS[0]:
        rep.add_skip("SSTAR-DIQUA",
                     "dual-basis action route applies to rightdual->leftdual")
        rep.add_skip("SSTAR-EQUIVARIANCE",
                     "dual-basis action route applies to rightdual->leftdual")
        return rep
    db = tgt.dual_basis
    if db is None:
        rep.add_skip("SSTAR-DIQUA", tgt.obstruction or "no dual basis")
        rep.add_skip("SSTAR-EQUIVARIANCE", tgt.obstruction or "no dual basis")
        return rep

    e_coords = [tgt.coordinates(cg) for cg in db.cogenerators]
    scalars = []
    for k in range(src.dim):
        row = []
        for g in db.generators:
            a = pair_eval(B, td.translate(g), src._basis_flat[k], B.ring.source)
            row.append(tgt.ring.source(a))
        scalars.append(row)

    def dual_basis_route(m_coords: dict, k: int) -> dict:
        out: dict = {}
        for i in range(db.size):
            step = tgt.V.multiply(tgt.V.multiply(m_coords, e_coords[i]),
                                  scalars[k][i])
            vec_axpy(out, one, step)
        return out

    bad = []
    for k in range(src.dim):
        for m in range(tgt.dim):
            lhs = dual_basis_route({m: one}, k)
            rhs = tgt.V.multiply({m: one}, lin.cols[k])
            if vec_sub(lhs, rhs):
                bad.append("(%s, %s)" % (tgt.V.basis_names[m], src.V.basis_names[k]))
    rep.record("SSTAR-DIQUA", bad,
               note="dual-basis route = right multiplication by the image")

    bad = []
    for k in range(src.dim):
        for m1 in range(tgt.dim):
            for m2 in range(tgt.dim):
                prod = tgt.V.multiply({m1: one}, {m2: one})
                lhs = dual_basis_route(prod, k)
                rhs = tgt.V.multiply({m1: one}, dual_basis_route({m2: one}, k))
                if vec_sub(lhs, rhs):
                    bad.append("(%s, %s, %s)" % (tgt.V.basis_names[m1],
                                                 tgt.V.basis_names[m2],
                                                 src.V.basis_names[k]))
    rep.record("SSTAR-EQUIVARIANCE", bad)
    return rep


def check_theorem_inverse(down: LinkingMorphism, up: LinkingMorphism) -> Report:
    """The two linking morphisms invert each other exactly."""
    if {down.direction, up.direction} != set(DIRECTIONS):
        raise ValueError("need one linking morphism in each direction")
    if down.direction != DIRECTIONS[0]:
        down, up = up, down
    if (down.source.dim != up.target.dim or down.target.dim != up.source.dim):
        raise ValueError("the two morphisms do not connect the same duals")
    rep = Report(title="linking morphisms are mutually inverse")
    field = down.source.A.field_obj

    bad = []
    composite = up.linear_part.compose(down.linear_part)
    ident = LinearMap.identity(down.source.dim, field)
    for k in range(down.source.dim):
        if vec_sub(composite.cols[k], ident.cols[k]):
            bad.append(down.source.V.basis_names[k])
    rep.record("SSTAR-INVERSE-RIGHTDUAL", bad)

    bad = []
    composite = down.linear_part.compose(up.linear_part)
    ident = LinearMap.identity(up.source.dim, field)
    for k in range(up.source.dim):
        if vec_sub(composite.cols[k], ident.cols[k]):
            bad.append(up.source.V.basis_names[k])
    rep.record("SSTAR-INVERSE-LEFTDUAL", bad)
    return rep


# ---------------------------------------------------------------------------
# the transpose-antipode square


def transpose_antipode_square(H: FullHopfAlgebroid) -> Report:
    """Precomposition with the antipode commutes with the linking morphisms.

    The antipode identifies the left part with the op-coop of the right
    part, so its transpose carries functionals on the latter to functionals
    on the former, on both duals.  Each transpose must itself be a morphism
    of the dual right bialgebroids, and the square they close with the two
    linking morphisms must commute.  Raises NotIso (via the base comparison
    maps) when the input is not a coherent full structure.
    """
    L = H.left_part
    A = L.A
    nu, _mu = nu_mu_isomorphisms(H)
    nu_lin = nu.linear_part
    nu_inv = inverse(nu_lin)
    hat = op_coop_of_right(H.right_part, nu_lin, nu_inv, A,
                           name="op-coop of right part")

    left_td = invert_galois(L, "left")
    left_td_hat = invert_galois(hat, "left")
    DL_r = build_dual(L, "rightdual")
    DL_l = build_dual(L, "leftdual")
    Dh_r = build_dual(hat, "rightdual")
    Dh_l = build_dual(hat, "leftdual")
    link_L = compute_sstar(L, left_td, rightdual=DL_r, leftdual=DL_l)
    link_hat = compute_sstar(hat, left_td_hat, rightdual=Dh_r, leftdual=Dh_l)

    rep = Report(title="transpose-antipode square (%s)" % (H.name or L.name or "?"))
    S = H.antipode

    def transpose_into(src_dual, tgt_dual, cid):
        cols = []
        bad = []
        for k in range(src_dual.dim):
            composed = src_dual.functional({k: A.field_obj.one}).compose(S)
            try:
                cols.append(tgt_dual.carrier.coordinates(
                    flatten_functional(composed)))
            except ValueError:
                bad.append(src_dual.V.basis_names[k])
                cols.append({})
        rep.record(cid, bad, note="images satisfy the other instance's constraint")
        if bad:
            return None
        return LinearMap(src_dual.dim, tgt_dual.dim, tuple(cols))

    Ttop = transpose_into(Dh_r, DL_r, "TSQUARE-TOP-CARRIER")
    Tbot = transpose_into(Dh_l, DL_l, "TSQUARE-BOTTOM-CARRIER")
    if Ttop is None or Tbot is None:
        rep.add_skip("TSQUARE-COMMUTES", "a transpose left its carrier")
        return rep

    _ring_morphism_checks(rep, "TSQUARE-TOP", Dh_r, DL_r, Ttop)
    _coproduct_morphism_check(rep, "TSQUARE-TOP-COPRODUCT", Dh_r, DL_r, Ttop)
    _ring_morphism_checks(rep, "TSQUARE-BOTTOM", Dh_l, DL_l, Tbot)
    _coproduct_morphism_check(rep, "TSQUARE-BOTTOM-COPRODUCT", Dh_l, DL_l, Tbot)

    lhs = link_L.linear_part.compose(Ttop)
    rhs = Tbot.compose(link_hat.linear_part)
    bad = [Dh_r.V.basis_names[k] for k in range(Dh_r.dim)
           if vec_sub(lhs.cols[k], rhs.cols[k])]
    rep.record("TSQUARE-COMMUTES", bad)
    return rep


# ---------------------------------------------------------------------------
# cocommutative instances: the duals merge into one full Hopf algebroid


def _require_cocommutative(B: LeftBialgebroid) -> None:
    if not B.A.is_commutative():
        raise NotCocommutative("base algebra %s is not commutative"
                               % (B.A.name or "?"))
    if B.ring.source_map() != B.ring.target_map():
        raise NotCocommutative("source and target embeddings differ")
    n = B.U.dim
    sq = B.square
    for i in range(n):
        flipped, _ = permute_legs(B.coproduct[i], (n, n), (1, 0))
        if not sq.equal(B.coproduct[i], flipped):
            raise NotCocommutative("coproduct of %s is not flip-invariant"
                                   % B.U.basis_names[i])


def check_cocommutative_full_hopf(B: LeftBialgebroid, link_down: LinkingMorphism,
                                  link_up: LinkingMorphism) -> Report:
    """For cocommutative B the two duals coincide and carry one antipode.

    Raises NotCocommutative unless the base is commutative, source equals
    target, and every coproduct entry is flip-invariant.  The checks then
    establish that the two carriers are equal, the dual rings agree and
    are commutative, the structure maps swap, the coproducts flip into one
    another, the two linking morphisms agree and are involutive, and the
    resulting pair (coop of the left dual, right dual) with that involution
    is a genuine full Hopf algebroid.
    """
    _require_cocommutative(B)
    if link_down.direction != DIRECTIONS[0] or link_up.direction != DIRECTIONS[1]:
        raise ValueError("pass the rightdual->leftdual morphism first")
    D_r, D_l = link_down.source, link_down.target
    A = B.A
    rep = Report(title="cocommutative merge (%s)" % (B.name or "?"))

    if D_l.carrier.basis != D_r.carrier.basis:
        rep.add_fail("COCOMM-CARRIERS",
                     ["the two constraint subspaces differ"])
        return rep
    rep.add_pass("COCOMM-CARRIERS")

    bad = []
    for i in range(D_r.dim):
        for j in range(D_r.dim):
            if D_r.V.mult[i][j] != D_r.V.mult[j][i]:
                bad.append("(%s, %s)" % (D_r.V.basis_names[i], D_r.V.basis_names[j]))
    rep.record("COCOMM-DUAL-COMMUTATIVE", bad)

    bad = []
    for i in range(D_r.dim):
        for j in range(D_r.dim):
            if D_r.V.mult[i][j] != D_l.V.mult[i][j]:
                bad.append("(%s, %s)" % (D_r.V.basis_names[i], D_r.V.basis_names[j]))
    if D_r.V.unit != D_l.V.unit:
        bad.append("units differ")
    rep.record("COCOMM-PRODUCT", bad)

    bad = []
    for r in range(A.dim):
        a = A.basis_vec(r)
        if vec_sub(D_r.ring.source(a), D_l.ring.target(a)):
            bad.append("source/target at %s" % A.basis_names[r])
        if vec_sub(D_r.ring.target(a), D_l.ring.source(a)):
            bad.append("target/source at %s" % A.basis_names[r])
    rep.record("COCOMM-STRUCTURE-SWAP", bad)

    if D_r.augmentation == D_l.augmentation:
        rep.add_pass("COCOMM-AUG")
    else:
        rep.add_fail("COCOMM-AUG", ["augmentations differ"])

    if D_r.bialgebroid is None or D_l.bialgebroid is None:
        rep.add_skip("COCOMM-COPRODUCT-FLIP",
                     D_r.obstruction or D_l.obstruction or "no dual coproduct")
    else:
        nv = D_r.dim
        sq = D_r.bialgebroid.square
        bad = []
        for k in range(nv):
            flipped, _ = permute_legs(D_l.bialgebroid.coproduct[k], (nv, nv), (1, 0))
            if not sq.equal(D_r.bialgebroid.coproduct[k], flipped):
                bad.append(D_r.V.basis_names[k])
        rep.record("COCOMM-COPRODUCT-FLIP", bad)

    bad = [D_r.V.basis_names[k] for k in range(D_r.dim)
           if vec_sub(link_down.linear_part.cols[k], link_up.linear_part.cols[k])]
    rep.record("COCOMM-LINKS-EQUAL", bad)

    ident = LinearMap.identity(D_r.dim, A.field_obj)
    if link_down.linear_part.compose(link_down.linear_part) == ident:
        rep.add_pass("COCOMM-INVOLUTIVE")
    else:
        rep.add_fail("COCOMM-INVOLUTIVE", ["square of the merged map is not 1"])

    if D_r.bialgebroid is None or D_l.bialgebroid is None:
        rep.add_skip("COCOMM-FULL-HOPF",
                     D_r.obstruction or D_l.obstruction or "no dual coproduct")
        return rep
    nv = D_l.dim
    flipped = tuple(permute_legs(D_l.bialgebroid.coproduct[k], (nv, nv), (1, 0))[0]
                    for k in range(nv))
    left_dual_part = LeftBialgebroid(D_l.ring, flipped, D_l.augmentation,
                                     name="coop of %s" % (D_l.V.name or "left dual"))
    rep.extend(check_left_bialgebroid(left_dual_part), tag="dual")
    try:
        Hd = FullHopfAlgebroid(left_dual_part, D_r.bialgebroid,
                               link_down.linear_part,
                               name="merged dual of %s" % (B.name or "?"))
        translation_from_antipode(Hd)
        nu_mu_isomorphisms(Hd)
    except (NotIso, NotInvertible, AntipodeNotInvertible, ValueError) as exc:
        rep.add_fail("COCOMM-FULL-HOPF", [str(exc)])
        return rep
    rep.add_pass("COCOMM-FULL-HOPF",
                 note="translation tables and base comparison maps check out")
    return rep


# ---------------------------------------------------------------------------
# the mixed distributive law between the two duals


def _apply_leg_pair(vec: dict, dims: tuple, leg: int, f: LinearMap,
                    out_pair: tuple) -> tuple:
    """Apply a map defined on two adjacent legs (flattened) to those legs."""
    d2 = dims[leg + 1]
    e1, e2 = out_pair
    new_dims = dims[:leg] + (e1, e2) + dims[leg + 2:]
    out: dict = {}
    for flat, c in vec.items():
        idx = unflatten_index(flat, dims)
        img = f.cols[idx[leg] * d2 + idx[leg + 1]]
        for pk, pc in img.items():
            a, b = divmod(pk, e2)
            nidx = idx[:leg] + (a, b) + idx[leg + 2:]
            key = flatten_index(nidx, new_dims)
            s = out.get(key)
            s = c * pc if s is None else s + c * pc
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out, new_dims


def mixed_distributive_law(B: LeftBialgebroid,
                           link: LinkingMorphism) -> tuple:
    """The entwining between the two duals, with its four axioms checked.

    chi sends psi (x) phi to phi^(1) (x) psi.link(phi^(2)), mapping the
    balanced product (left dual, right dual) to (right dual, left dual).
    Returns the ambient matrix of chi together with the report; the report
    covers descent to the balanced quotient, the unit and multiplication
    axioms against the right-dual ring, and the counit and comultiplication
    axioms against the left-dual coring.
    """
    if link.direction != DIRECTIONS[0]:
        raise ValueError("the law needs the rightdual->leftdual morphism")
    Bb, C = link.source, link.target
    if Bb.bialgebroid is None or C.bialgebroid is None:
        raise ValueError("both dual coproducts are needed: %s"
                         % (Bb.obstruction or C.obstruction))
    nb, nc = Bb.dim, C.dim
    one = B.A.field_obj.one

    cols = []
    for i in range(nc):
        for k in range(nb):
            col: dict = {}
            for key, c in Bb.bialgebroid.coproduct[k].items():
                p, q = divmod(key, nb)
                right = C.V.multiply({i: one}, link.linear_part.cols[q])
                for m, cv in right.items():
                    pos = p * nc + m
                    s = col.get(pos)
                    s = c * cv if s is None else s + c * cv
                    if s:
                        col[pos] = s
                    else:
                        col.pop(pos, None)
            cols.append(col)
    chi = LinearMap(nc * nb, nb * nc, tuple(cols))

    bract_C = C.ring.action("bract")
    blact_C = C.ring.action("blact")
    lact_B = Bb.ring.action("lact")
    bract_B = Bb.ring.action("bract")
    domain = TensorQuotient((nc, nb), (RelationSpec(0, bract_C, 1, lact_B),),
                            label="leftdual (x)_A rightdual")
    codomain = TensorQuotient((nb, nc), (RelationSpec(0, bract_B, 1, blact_C),),
                              label="rightdual (x)_A leftdual")
    triple = TensorQuotient((nb, nc, nc),
                            (RelationSpec(0, bract_B, 1, blact_C),
                             RelationSpec(1, bract_C, 2, blact_C)),
                            label="rightdual (x)_A leftdual (x)_A leftdual")

    rep = Report(title="mixed distributive law (%s)" % (B.name or "?"))

    bad = []
    for idx, rel in enumerate(domain.space.relations.basis):
        if not codomain.is_zero(chi.apply(rel)):
            bad.append("relation %d" % idx)
    rep.record("CHI-WELLDEFINED", bad,
               note="chi kills the balancing relations of its domain")

    bad = []
    for i in range(nc):
        lhs = chi.apply(tensor_of((nc, nb), {i: one}, Bb.V.unit))
        rhs = tensor_of((nb, nc), Bb.V.unit, {i: one})
        if not codomain.equal(lhs, rhs):
            bad.append(C.V.basis_names[i])
    rep.record("CHI-UNIT", bad)

    bad = []
    for i in range(nc):
        for k in range(nb):
            for k2 in range(nb):
                start = {flatten_index((i, k, k2), (nc, nb, nb)): one}
                merged, d = mult_legs(start, (nc, nb, nb), 1, 2, Bb.V)
                lhs = chi.apply(merged)
                s1, d = _apply_leg_pair(start, (nc, nb, nb), 0, chi, (nb, nc))
                s2, d = _apply_leg_pair(s1, d, 1, chi, (nb, nc))
                rhs, d = mult_legs(s2, d, 0, 1, Bb.V)
                if not codomain.equal(lhs, rhs):
                    bad.append("(%s, %s, %s)" % (C.V.basis_names[i],
                                                 Bb.V.basis_names[k],
                                                 Bb.V.basis_names[k2]))
    rep.record("CHI-MULT", bad)

    bad = []
    for i in range(nc):
        for k in range(nb):
            lhs, _ = expand_leg(chi.cols[i * nb + k], (nb, nc), 1,
                                C.bialgebroid.coproduct, (nc, nc))
            start = {flatten_index((i, k), (nc, nb)): one}
            s1, d = expand_leg(start, (nc, nb), 0,
                               C.bialgebroid.coproduct, (nc, nc))
            s2, d = _apply_leg_pair(s1, d, 1, chi, (nb, nc))
            rhs, d = _apply_leg_pair(s2, d, 0, chi, (nb, nc))
            if not triple.equal(lhs, rhs):
                bad.append("(%s, %s)" % (C.V.basis_names[i], Bb.V.basis_names[k]))
    rep.record("CHI-COMULT", bad)

    bad = []
    for i in range(nc):
        for k in range(nb):
            lhs: dict = {}
            for key, c in chi.cols[i * nb + k].items():
                p, m = divmod(key, nc)
                attach = Bb.ring.source(C.augmentation.apply({m: one}))
                vec_axpy(lhs, c, Bb.V.multiply({p: one}, attach))
            rhs = Bb.V.multiply(Bb.ring.source(C.augmentation.apply({i: one})),
                                {k: one})
            if vec_sub(lhs, rhs):
                bad.append("(%s, %s)" % (C.V.basis_names[i], Bb.V.basis_names[k]))
    rep.record("CHI-COUNIT", bad)
    return chi, rep
