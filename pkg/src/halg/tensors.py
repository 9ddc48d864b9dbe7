"""A^e-rings, balanced tensor products, and Takeuchi subspaces.

An A^e-ring is an algebra U together with a unital algebra map eta from the
enveloping algebra of A.  Restricting eta to the two factors gives the
source and target maps, and these induce the four A-actions on U used
throughout:

    lact:  a |> u  =  s(a) u          (left action via left multiplication)
    ract:  u <| b  =  t(b) u          (right action via left multiplication)
    blact: a |>> u =  u t(a)          (left action via right multiplication)
    bract: u <<| b =  u s(b)          (right action via right multiplication)

Balanced tensor products of carriers are quotient spaces of the plain
tensor product by relations (x.a) (x) y - x (x) (a.y); Takeuchi subspaces
cut out the members on which a second pair of ill-defined outer actions
agree.  Multi-leg tensor quotients (used for triple-tensor identities) are
built in one step from the sum of all relation families, never by nesting
quotients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraMap, AModuleAction, FiniteAlgebra, enveloping, tensor_in_enveloping
from .linalg import LinearMap, Subspace, QuotientSpace, kernel, quotient_by, vec_sub
from .report import Report


class ActionSideMismatch(ValueError):
    """Raised when a balanced tensor is asked to balance wrong-sided actions."""


# The four canonical action families on an A^e-ring, keyed by short code.
#   code: (which multiplication, which structure map, module side)
ACTION_FAMILIES = {
    "lact": ("left", "s", "left"),
    "ract": ("left", "t", "right"),
    "blact": ("right", "t", "left"),
    "bract": ("right", "s", "right"),
}


@dataclass(frozen=True)
class AeRing:
    """An algebra U with a unital algebra map from the enveloping algebra of A."""

    A: FiniteAlgebra
    U: FiniteAlgebra
    eta: AlgebraMap

    def __post_init__(self):
        if self.eta.target is not self.U and self.eta.target.mult != self.U.mult:
            raise ValueError("eta must land in U")
        if self.eta.source.dim != self.A.dim ** 2:
            raise ValueError("eta must come from the enveloping algebra of A")

    @staticmethod
    def from_source_target(A: FiniteAlgebra, U: FiniteAlgebra,
                           source: LinearMap, target: LinearMap) -> "AeRing":
        """Assemble eta(a (x) b) = s(a) t(b) from separate structure maps."""
        env = enveloping(A)
        cols = []
        for i in range(A.dim):
            si = source.apply(A.basis_vec(i))
            for j in range(A.dim):
                tj = target.apply(A.basis_vec(j))
                cols.append(U.multiply(si, tj))
        eta = AlgebraMap(env, U, LinearMap(env.dim, U.dim, tuple(cols)), name="eta")
        return AeRing(A, U, eta)

    def source(self, a: dict) -> dict:
        """s(a) = eta(a (x) 1)."""
        return self.eta.apply(tensor_in_enveloping(self.A, a, self.A.unit))

    def target(self, b: dict) -> dict:
        """t(b) = eta(1 (x) b)."""
        return self.eta.apply(tensor_in_enveloping(self.A, self.A.unit, b))

    def source_map(self) -> LinearMap:
        return LinearMap(self.A.dim, self.U.dim,
                         tuple(self.source(self.A.basis_vec(i)) for i in range(self.A.dim)))

    def target_map(self) -> LinearMap:
        return LinearMap(self.A.dim, self.U.dim,
                         tuple(self.target(self.A.basis_vec(i)) for i in range(self.A.dim)))

    def lact(self, a: dict, u: dict) -> dict:
        return self.U.multiply(self.source(a), u)

    def ract(self, u: dict, b: dict) -> dict:
        return self.U.multiply(self.target(b), u)

    def blact(self, a: dict, u: dict) -> dict:
        return self.U.multiply(u, self.target(a))

    def bract(self, u: dict, b: dict) -> dict:
        return self.U.multiply(u, self.source(b))

    def action(self, code: str) -> AModuleAction:
        """The named action family as an explicit AModuleAction."""
        mult_side, struct, module_side = ACTION_FAMILIES[code]
        mats = []
        for i in range(self.A.dim):
            img = self.source(self.A.basis_vec(i)) if struct == "s" else self.target(self.A.basis_vec(i))
            if mult_side == "left":
                mats.append(self.U.left_mult_map(img))
            else:
                mats.append(self.U.right_mult_map(img))
        return AModuleAction(self.A, module_side, self.U.dim, tuple(mats))


def check_aering(R: AeRing) -> Report:
    """Commuting source/target images and the four module laws."""
    rep = Report(title="A^e-ring structure")
    bad = []
    for i in range(R.A.dim):
        si = R.source(R.A.basis_vec(i))
        for j in range(R.A.dim):
            tj = R.target(R.A.basis_vec(j))
            if R.U.multiply(si, tj) != R.U.multiply(tj, si):
                bad.append("s(%s) and t(%s) do not commute"
                           % (R.A.basis_names[i], R.A.basis_names[j]))
    rep.record("AERING-ST-COMMUTE", bad)
    for code in ACTION_FAMILIES:
        rep.record("AERING-ACTION-%s" % code.upper(), R.action(code).check())
    return rep


# ---------------------------------------------------------------------------
# flat index bookkeeping for tensor legs


def flatten_index(idx: tuple, dims: tuple) -> int:
    out = 0
    for i, d in zip(idx, dims):
        out = out * d + i
    return out


def unflatten_index(flat: int, dims: tuple) -> tuple:
    out = []
    for d in reversed(dims):
        out.append(flat % d)
        flat //= d
    return tuple(reversed(out))


def tensor_of(dims: tuple, *vecs: dict) -> dict:
    """The tensor v1 (x) ... (x) vn as a flat sparse vector."""
    if len(vecs) != len(dims):
        raise ValueError("dims/vectors mismatch")
    res: dict = {}

    def rec(k, idx, coeff):
        if k == len(vecs):
            flat = flatten_index(idx, dims)
            prev = res.get(flat)
            res[flat] = coeff if prev is None else prev + coeff
            return
        for i, c in vecs[k].items():
            rec(k + 1, idx + (i,), c if coeff is None else coeff * c)

    rec(0, (), None)
    return {k: v for k, v in res.items() if v}


def apply_at_leg(vec: dict, dims: tuple, leg: int, f: LinearMap) -> tuple:
    """Apply a linear map to one leg; returns (new_vec, new_dims)."""
    new_dims = tuple(f.codomain_dim if i == leg else d for i, d in enumerate(dims))
    out: dict = {}
    for flat, c in vec.items():
        idx = unflatten_index(flat, dims)
        img = f.cols[idx[leg]] if idx[leg] < len(f.cols) else {}
        for i2, c2 in img.items():
            nidx = idx[:leg] + (i2,) + idx[leg + 1:]
            nflat = flatten_index(nidx, new_dims)
            s = out.get(nflat)
            s = c * c2 if s is None else s + c * c2
            if s:
                out[nflat] = s
            else:
                out.pop(nflat, None)
    return out, new_dims


def expand_leg(vec: dict, dims: tuple, leg: int, table, leg_dims: tuple) -> tuple:
    """Replace one leg by a two-leg expansion given per-basis (e.g. a coproduct).

    table[i] is a flat sparse vector over leg_dims (a pair of dimensions).
    Returns (new_vec, new_dims) with the two new legs in place of the old one.
    """
    d1, d2 = leg_dims
    new_dims = dims[:leg] + (d1, d2) + dims[leg + 1:]
    out: dict = {}
    for flat, c in vec.items():
        idx = unflatten_index(flat, dims)
        for pair_flat, c2 in table[idx[leg]].items():
            p, q = unflatten_index(pair_flat, leg_dims)
            nidx = idx[:leg] + (p, q) + idx[leg + 1:]
            nflat = flatten_index(nidx, new_dims)
            s = out.get(nflat)
            s = c * c2 if s is None else s + c * c2
            if s:
                out[nflat] = s
            else:
                out.pop(nflat, None)
    return out, new_dims


def mult_legs(vec: dict, dims: tuple, i: int, j: int, algebra: FiniteAlgebra,
              reverse: bool = False) -> tuple:
    """Merge legs i and j by multiplying them in the given algebra.

    The product is (leg i) * (leg j), or (leg j) * (leg i) when reverse is
    set; the merged leg sits at position min(i, j) and the other slot is
    removed.  Both legs must have the algebra's dimension.
    """
    if i == j:
        raise ValueError("cannot merge a leg with itself")
    lo, hi = (i, j) if i < j else (j, i)
    if dims[i] != algebra.dim or dims[j] != algebra.dim:
        raise ValueError("legs are not carried by the algebra")
    new_dims = tuple(d for k, d in enumerate(dims) if k != hi)
    out: dict = {}
    for flat, c in vec.items():
        idx = unflatten_index(flat, dims)
        a, b = idx[i], idx[j]
        prod = algebra.mult[b][a] if reverse else algebra.mult[a][b]
        for m, c2 in prod.items():
            nidx = list(idx)
            nidx[lo] = m
            del nidx[hi]
            nflat = flatten_index(tuple(nidx), new_dims)
            s = out.get(nflat)
            s = c * c2 if s is None else s + c * c2
            if s:
                out[nflat] = s
            else:
                out.pop(nflat, None)
    return out, new_dims


def permute_legs(vec: dict, dims: tuple, perm: tuple) -> tuple:
    """Reorder legs; perm[k] is the old position feeding new position k."""
    new_dims = tuple(dims[p] for p in perm)
    out: dict = {}
    for flat, c in vec.items():
        idx = unflatten_index(flat, dims)
        nidx = tuple(idx[p] for p in perm)
        out[flatten_index(nidx, new_dims)] = c
    return out, new_dims


def contract_counit(vec: dict, dims: tuple, eps_leg: int, target_leg: int,
                    eps: LinearMap, action: AModuleAction) -> tuple:
    """Absorb one leg through a counit into an action on another leg.

    Terms x (x) u at (target_leg, eps_leg) become eps(u).x using the given
    A-action; the eps leg disappears.
    """
    new_dims = tuple(d for k, d in enumerate(dims) if k != eps_leg)
    tpos = target_leg if target_leg < eps_leg else target_leg - 1
    out: dict = {}
    for flat, c in vec.items():
        idx = unflatten_index(flat, dims)
        aval = eps.cols[idx[eps_leg]]
        acted = action.act(aval, {idx[target_leg]: c})
        for m, c2 in acted.items():
            nidx = list(v for k, v in enumerate(idx) if k != eps_leg)
            nidx[tpos] = m
            nflat = flatten_index(tuple(nidx), new_dims)
            s = out.get(nflat)
            s = c2 if s is None else s + c2
            if s:
                out[nflat] = s
            else:
                out.pop(nflat, None)
    return out, new_dims


# ---------------------------------------------------------------------------
# balanced tensors


@dataclass(frozen=True)
class LegActions:
    """A tensor leg: its dimension plus the A-actions available on it."""

    dim: int
    actions: dict  # name -> AModuleAction


def u_leg(R: AeRing) -> LegActions:
    return LegActions(R.U.dim, {code: R.action(code) for code in ACTION_FAMILIES})


@dataclass(frozen=True)
class RelationSpec:
    """One balancing family: action at one leg matched against another."""

    leg_a: int
    action_a: AModuleAction
    leg_b: int
    action_b: AModuleAction


class TensorQuotient:
    """A quotient of a plain multi-leg tensor space by balancing relations.

    All relation families are imposed in a single quotient; elements are
    always handled through canonical representatives.
    """

    def __init__(self, dims: tuple, relations: tuple, label: str = ""):
        self.dims = tuple(dims)
        self.relspecs = tuple(relations)
        self.label = label
        ambient = 1
        for d in dims:
            ambient *= d
        self.ambient_dim = ambient
        vecs = []
        for spec in self.relspecs:
            A = spec.action_a.algebra
            one = A.field_obj.one
            for ai in range(A.dim):
                fa = spec.action_a.matrices[ai]
                fb = spec.action_b.matrices[ai]
                for flat in range(ambient):
                    va, _ = apply_at_leg({flat: one}, self.dims, spec.leg_a, fa)
                    vb, _ = apply_at_leg({flat: one}, self.dims, spec.leg_b, fb)
                    rel = vec_sub(va, vb)
                    if rel:
                        vecs.append(rel)
        self.space: QuotientSpace = quotient_by(Subspace.from_vectors(ambient, vecs))

    @property
    def dim(self) -> int:
        return self.space.dim

    def canon(self, v: dict) -> dict:
        return self.space.canonical(v)

    def equal(self, u: dict, v: dict) -> bool:
        return self.space.equal(u, v)

    def is_zero(self, v: dict) -> bool:
        return self.space.is_zero(v)

    def tensor(self, *vecs: dict) -> dict:
        return self.canon(tensor_of(self.dims, *vecs))


class BalancedTensor:
    """A two-leg balanced tensor product M (x)_A N as a quotient space.

    base_ring records which base the balancing runs over ("A", "Aop", or
    "Asup" for the over-A variant balanced through the other structure
    map); the side check rejects combinations whose actions live on the
    wrong sides.
    """

    EXPECTED_SIDES = {
        "A": ("right", "left"),
        "Aop": ("left", "right"),
        "Asup": ("right", "left"),
    }

    def __init__(self, left: LegActions, left_action: str,
                 right: LegActions, right_action: str, base_ring: str = "A",
                 label: str = ""):
        try:
            act1 = left.actions[left_action]
            act2 = right.actions[right_action]
        except KeyError as exc:
            raise ActionSideMismatch("leg does not carry action %s" % exc)
        want = self.EXPECTED_SIDES.get(base_ring)
        if want is None:
            raise ActionSideMismatch("unknown base ring tag %r" % base_ring)
        if (act1.side, act2.side) != want:
            raise ActionSideMismatch(
                "balancing over %s needs a (%s, %s) action pair, got (%s, %s)"
                % (base_ring, want[0], want[1], act1.side, act2.side))
        self.left = left
        self.right = right
        self.left_action = left_action
        self.right_action = right_action
        self.base_ring = base_ring
        self.label = label
        self.quot = TensorQuotient(
            (left.dim, right.dim),
            (RelationSpec(0, act1, 1, act2),),
            label=label)
        self.dims = self.quot.dims
        self.space = self.quot.space

    @property
    def dim(self) -> int:
        return self.space.dim

    def canon(self, v: dict) -> dict:
        return self.space.canonical(v)

    def equal(self, u: dict, v: dict) -> bool:
        return self.space.equal(u, v)

    def tensor(self, u: dict, v: dict) -> dict:
        return self.canon(tensor_of(self.dims, u, v))

    def outer_action_wellformed(self, leg: int, action: AModuleAction) -> bool:
        """Does the given action on one leg descend to the quotient?"""
        for rel in self.space.relations.basis:
            for i in range(action.algebra.dim):
                moved, _ = apply_at_leg(rel, self.dims, leg, action.matrices[i])
                if not self.space.is_zero(moved):
                    return False
        return True


def balanced_tensor(left: LegActions, left_action: str,
                    right: LegActions, right_action: str,
                    base_ring: str = "A", label: str = "") -> BalancedTensor:
    return BalancedTensor(left, left_action, right, right_action, base_ring, label)


# The three balanced squares of an A^e-ring used everywhere downstream.

def coring_square(R: AeRing) -> BalancedTensor:
    """U_ract (x)_A lact_U, the home of a left coproduct."""
    leg = u_leg(R)
    return balanced_tensor(leg, "ract", leg, "lact", "A", label="U(x)_A U")


def left_hopf_square(R: AeRing) -> BalancedTensor:
    """blact_U (x)_{Aop} U_ract, the domain of the left Galois map."""
    leg = u_leg(R)
    return balanced_tensor(leg, "blact", leg, "ract", "Aop", label="U(x)_{Aop} U")


def right_hopf_square(R: AeRing) -> BalancedTensor:
    """U_bract (x)^A lact_U, the domain of the right Galois map."""
    leg = u_leg(R)
    return balanced_tensor(leg, "bract", leg, "lact", "Asup", label="U(x)^A U")


@dataclass(frozen=True)
class ExchangeRule:
    """A Takeuchi condition: two outer actions that must agree memberwise."""

    leg_a: int
    action_a: AModuleAction
    leg_b: int
    action_b: AModuleAction


class TakeuchiProduct:
    """The subspace of a balanced square where an exchange rule holds."""

    def __init__(self, ambient: BalancedTensor, rule: ExchangeRule, label: str = ""):
        self.ambient = ambient
        self.rule = rule
        self.label = label
        # members (in quotient coordinates) are the joint kernel over a
        # basis of A of: project . (act@leg_a - act@leg_b) . section
        q = ambient.space
        sec = q.section
        n = q.dim
        stacked_cols = [dict() for _ in range(n)]
        offset = 0
        A = rule.action_a.algebra
        for ai in range(A.dim):
            for col in range(n):
                amb = sec.cols[col]
                va, _ = apply_at_leg(amb, ambient.dims, rule.leg_a, rule.action_a.matrices[ai])
                vb, _ = apply_at_leg(amb, ambient.dims, rule.leg_b, rule.action_b.matrices[ai])
                diff = q.project(vec_sub(va, vb))
                for r, c in diff.items():
                    stacked_cols[col][offset + r] = c
            offset += n
        f = LinearMap(n, offset, tuple(stacked_cols))
        self.space: Subspace = kernel(f)

    @property
    def dim(self) -> int:
        return self.space.dim

    def contains_ambient(self, v: dict) -> bool:
        return self.space.contains(self.ambient.space.project(v))

    def basis_ambient(self) -> list:
        sec = self.ambient.space.section
        return [sec.apply(b) for b in self.space.basis]


def takeuchi_subspace(T: BalancedTensor, rule: ExchangeRule, label: str = "") -> TakeuchiProduct:
    return TakeuchiProduct(T, rule, label=label)


def left_takeuchi(R: AeRing, square: BalancedTensor | None = None) -> TakeuchiProduct:
    """Members of U (x)_A U with sum u_i t(a) (x) u'_i = sum u_i (x) u'_i s(a)."""
    sq = square or coring_square(R)
    rule = ExchangeRule(0, R.action("blact"), 1, R.action("bract"))
    return takeuchi_subspace(sq, rule, label="U x_A U")


def aop_takeuchi(R: AeRing, square: BalancedTensor | None = None) -> TakeuchiProduct:
    """Members of U (x)_{Aop} U with sum t(a) u_i (x) u'_i = sum u_i (x) u'_i t(a)."""
    sq = square or left_hopf_square(R)
    rule = ExchangeRule(0, R.action("ract"), 1, R.action("blact"))
    return takeuchi_subspace(sq, rule, label="U x_{Aop} U")


def sup_takeuchi(R: AeRing, square: BalancedTensor | None = None) -> TakeuchiProduct:
    """Members of U (x)^A U with sum s(a) u_i (x) u'_i = sum u_i (x) u'_i s(a)."""
    sq = square or right_hopf_square(R)
    rule = ExchangeRule(0, R.action("lact"), 1, R.action("bract"))
    return takeuchi_subspace(sq, rule, label="U x^A U")


def factorwise_product(sq: BalancedTensor, U: FiniteAlgebra, x: dict, y: dict) -> dict:
    """(u (x) v)(u' (x) v') = uu' (x) vv' on canonical representatives."""
    out: dict = {}
    dims = sq.dims
    for f1, c1 in x.items():
        i1, j1 = unflatten_index(f1, dims)
        for f2, c2 in y.items():
            i2, j2 = unflatten_index(f2, dims)
            left = U.mult[i1][i2]
            right = U.mult[j1][j2]
            c = c1 * c2
            for m, cm in left.items():
                for n, cn in right.items():
                    flat = flatten_index((m, n), dims)
                    s = out.get(flat)
                    add = c * cm * cn
                    s = add if s is None else s + add
                    if s:
                        out[flat] = s
                    else:
                        out.pop(flat, None)
    return sq.canon(out)


def check_takeuchi_subalgebra(R: AeRing, tk: TakeuchiProduct) -> Report:
    """Factorwise product well-defined, closed, unital on the Takeuchi space."""
    rep = Report(title="Takeuchi product as an algebra")
    sq = tk.ambient
    basis = tk.basis_ambient()
    bad = []
    for rel in sq.space.relations.basis:
        for b in basis:
            if not sq.space.is_zero(factorwise_product(sq, R.U, rel, b)):
                bad.append("left factor relation escapes")
            if not sq.space.is_zero(factorwise_product(sq, R.U, b, rel)):
                bad.append("right factor relation escapes")
    rep.record("TAKEUCHI-WELLDEF", bad)
    bad = []
    for x in basis:
        for y in basis:
            if not tk.contains_ambient(factorwise_product(sq, R.U, x, y)):
                bad.append("product of members leaves the subspace")
    rep.record("TAKEUCHI-CLOSED", bad)
    unit = tensor_of(sq.dims, R.U.unit, R.U.unit)
    rep.record("TAKEUCHI-UNIT",
               [] if tk.contains_ambient(unit) else ["1 (x) 1 not a member"])
    return rep
