"""Galois maps, translation data, the 21-identity suite, full Hopf algebroids.

The two Galois maps of a left bialgebroid,

    alpha_l : U (x)_{Aop} U -> U (x)_A U,   u (x) v  |->  u(1) (x) u(2) v
    alpha_r : U (x)^A   U -> U (x)_A U,     u (x) v  |->  u(1) v (x) u(2)

are linear on the balanced quotients; inverting them exactly produces the
left/right translation tables u |-> u+ (x) u- and u |-> u(+) (x) u(-).
The identity suite then checks, per basis element and inside the correct
balanced space, the frozen list SCH1..SCH9, TCH1..TCH9, MIX1..MIX3 of
relations these tables satisfy.

Identity evaluation is degree-aware: on a cap-truncated ring a product
whose true value overflows the cap raises DegreeCapExceeded, and the
affected element (or pair) is reported as skipped rather than silently
passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraMap, FiniteAlgebra, opposite
from .bialgebroid import (
    LeftBialgebroid,
    RightBialgebroid,
    op_coop_of_left,
    op_coop_of_right,
)
from .errors import DegreeCapExceeded
from .linalg import LinearMap, NoSolution, PreparedSolve, inverse, vec_sub
from .report import Report
from .tensors import (
    BalancedTensor,
    ExchangeRule,
    LegActions,
    RelationSpec,
    TakeuchiProduct,
    TensorQuotient,
    apply_at_leg,
    contract_counit,
    expand_leg,
    mult_legs,
    permute_legs,
    tensor_of,
    unflatten_index,
)


class NotInvertible(ValueError):
    """A Galois map failed to be bijective; the message carries the ranks."""


class AntipodeNotInvertible(ValueError):
    pass


class NotIso(ValueError):
    """A base-algebra comparison map failed to be an algebra isomorphism."""


# the three two-leg balanced squares, as (action, action, base tag)
_TWO_LEG = {
    "OT_A": ("ract", "lact", "A"),
    "OT_AOP": ("blact", "ract", "Aop"),
    "OT_UPA": ("bract", "lact", "Asup"),
}

# relation layouts of the triple spaces the identities live in;
# entries are (leg, action-code, leg, action-code)
_SPACE_RELS = {
    "SCH4": [(0, "ract", 1, "lact"), (1, "blact", 2, "ract")],
    "SCH5": [(0, "blact", 2, "ract"), (1, "ract", 2, "lact")],
    "TCH4": [(0, "bract", 1, "lact"), (0, "ract", 2, "lact")],
    "TCH5": [(0, "bract", 1, "lact"), (1, "ract", 2, "lact")],
    "MIX1": [(0, "blact", 1, "ract"), (0, "bract", 2, "lact")],
    "MIX2": [(0, "blact", 1, "ract"), (1, "bract", 2, "lact")],
    "MIX3": [(0, "bract", 1, "lact"), (1, "blact", 2, "ract")],
}

# Takeuchi-style exchange rules on top of a two-leg space
_EXCHANGE_RULES = {
    "TAK_A": ("OT_A", 0, "blact", 1, "bract"),
    "TAK_AOP": ("OT_AOP", 0, "ract", 1, "blact"),
    "TAK_SUP": ("OT_UPA", 0, "lact", 1, "bract"),
}


@dataclass(eq=False)
class IdentityOps:
    """Everything the identity evaluator needs, independent of its origin.

    U may be a FiniteAlgebra or any stand-in exposing dim, unit,
    basis_names and a mult table whose entries may raise
    DegreeCapExceeded.  pair_guard limits which basis pairs the binary
    identities run on (used by capped rings); incap limits which
    two-leg ambient coordinates the Galois inversion may touch.
    """

    label: str
    U: object
    A: FiniteAlgebra
    actions: dict
    delta: tuple
    eps: LinearMap
    source_map: LinearMap
    target_map: LinearMap
    pair_guard: object = None
    incap: object = None
    _spaces: dict = field(default_factory=dict)

    @staticmethod
    def from_bialgebroid(L: LeftBialgebroid) -> "IdentityOps":
        ring = L.ring
        return IdentityOps(
            label=L.name or "left bialgebroid",
            U=L.U,
            A=L.A,
            actions={code: ring.action(code)
                     for code in ("lact", "ract", "blact", "bract")},
            delta=L.coproduct,
            eps=L.counit,
            source_map=ring.source_map(),
            target_map=ring.target_map(),
        )

    @property
    def n(self) -> int:
        return self.U.dim

    def space(self, name: str):
        got = self._spaces.get(name)
        if got is not None:
            return got
        if name in _TWO_LEG:
            c1, c2, base = _TWO_LEG[name]
            leg = LegActions(self.n, self.actions)
            built = BalancedTensor(leg, c1, leg, c2, base, label=name)
        elif name in _SPACE_RELS:
            rels = _SPACE_RELS[name]
            legs = 1 + max(max(r[0], r[2]) for r in rels)
            dims = (self.n,) * legs
            specs = tuple(RelationSpec(l1, self.actions[c1], l2, self.actions[c2])
                          for (l1, c1, l2, c2) in rels)
            built = TensorQuotient(dims, specs, label=name)
        elif name in _EXCHANGE_RULES:
            base, l1, c1, l2, c2 = _EXCHANGE_RULES[name]
            rule = ExchangeRule(l1, self.actions[c1], l2, self.actions[c2])
            built = TakeuchiProduct(self.space(base), rule, label=name)
        else:
            raise KeyError(name)
        self._spaces[name] = built
        return built

    # ---- leg helpers ---------------------------------------------------

    def expand(self, vec: dict, dims: tuple, leg: int, table: tuple) -> tuple:
        return expand_leg(vec, dims, leg, table, (self.n, self.n))

    def mul(self, vec: dict, dims: tuple, i: int, j: int,
            reverse: bool = False) -> tuple:
        return mult_legs(vec, dims, i, j, self.U, reverse)

    def table_apply(self, table: tuple, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for k, c2 in table[i].items():
                s = out.get(k)
                s = c * c2 if s is None else s + c * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def mult_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for j, c2 in v.items():
                for k, c3 in self.U.mult[i][j].items():
                    s = out.get(k)
                    add = c * c2 * c3
                    s = add if s is None else s + add
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def pair_ok(self, i: int, j: int) -> bool:
        return self.pair_guard is None or self.pair_guard(i, j)


# ---------------------------------------------------------------------------
# Galois maps


@dataclass(eq=False)
class GaloisMap:
    kind: str
    domain: BalancedTensor
    codomain: BalancedTensor
    linear_part: LinearMap
    domain_positions: tuple   # restricted quotient coordinate positions
    codomain_positions: tuple

    def domain_coords(self, ambient: dict) -> dict:
        full = self.domain.space.project(ambient)
        pos = {p: k for k, p in enumerate(self.domain_positions)}
        out = {}
        for p, c in full.items():
            if p not in pos:
                raise NotInvertible("vector leaves the in-cap span")
            out[pos[p]] = c
        return out

    def codomain_coords(self, ambient: dict) -> dict:
        full = self.codomain.space.project(ambient)
        pos = {p: k for k, p in enumerate(self.codomain_positions)}
        out = {}
        for p, c in full.items():
            if p not in pos:
                raise NotInvertible("vector leaves the in-cap span")
            out[pos[p]] = c
        return out

    def domain_ambient(self, coords: dict) -> dict:
        free = self.domain.space.free_columns
        return {free[self.domain_positions[k]]: c for k, c in coords.items()}


def _apply_galois_formula(ops: IdentityOps, kind: str, vec: dict) -> dict:
    dims = (ops.n, ops.n)
    v, d = ops.expand(vec, dims, 0, ops.delta)
    if kind == "left":
        v, d = ops.mul(v, d, 1, 2)
    else:
        v, d = ops.mul(v, d, 0, 2)
    return v


def galois_map(ops: IdentityOps, kind: str) -> GaloisMap:
    if kind not in ("left", "right"):
        raise ValueError("kind must be left or right")
    domain = ops.space("OT_AOP" if kind == "left" else "OT_UPA")
    codomain = ops.space("OT_A")

    def positions(space):
        free = space.space.free_columns
        if ops.incap is None:
            return tuple(range(len(free)))
        keep = []
        for p, col in enumerate(free):
            i, j = unflatten_index(col, space.dims)
            if ops.incap(i, j):
                keep.append(p)
        return tuple(keep)

    dpos = positions(domain)
    cpos = positions(codomain)
    cfree = codomain.space.free_columns
    cindex = {cfree[p]: k for k, p in enumerate(cpos)}
    dfree = domain.space.free_columns
    cols = []
    for p in dpos:
        ambient = {dfree[p]: ops.A.field_obj.one}
        image = _apply_galois_formula(ops, kind, ambient)
        can = codomain.space.canonical(image)
        col = {}
        for flatcol, c in can.items():
            if flatcol not in cindex:
                raise NotInvertible("Galois image leaves the in-cap span")
            col[cindex[flatcol]] = c
        cols.append(col)
    lin = LinearMap(len(dpos), len(cpos), tuple(cols))
    return GaloisMap(kind, domain, codomain, lin, dpos, cpos)


@dataclass(frozen=True, eq=False)
class TranslationData:
    """Per-basis canonical representatives of the translation elements."""

    kind: str
    table: tuple

    def translate(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for k, c2 in self.table[i].items():
                s = out.get(k)
                s = c * c2 if s is None else s + c * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out


def invert_galois(B, kind: str = "left") -> TranslationData:
    """Solve alpha(t) = u (x) 1 (left) or 1 (x) u (right) for every basis u."""
    ops = B if isinstance(B, IdentityOps) else IdentityOps.from_bialgebroid(B)
    g = galois_map(ops, kind)
    n_dom = g.linear_part.domain_dim
    n_cod = g.linear_part.codomain_dim
    if n_dom != n_cod:
        raise NotInvertible("balanced squares differ in dimension: %d vs %d"
                            % (n_dom, n_cod))
    ps = PreparedSolve(g.linear_part)
    if ps.rank < n_dom:
        raise NotInvertible("rank defect %d on a square of dimension %d"
                            % (n_dom - ps.rank, n_dom))
    table = []
    unit = ops.U.unit
    one = ops.A.field_obj.one
    dims = (ops.n, ops.n)
    for i in range(ops.n):
        u = {i: one}
        target = tensor_of(dims, u, unit) if kind == "left" else tensor_of(dims, unit, u)
        coords = g.codomain_coords(target)
        try:
            sol = ps.solve(coords)
        except NoSolution as exc:
            raise NotInvertible("no preimage for basis element %d: %s" % (i, exc))
        ambient = g.domain_ambient(sol)
        # safety: confirm the claimed preimage maps back onto the target
        back = _apply_galois_formula(ops, kind, ambient)
        if not g.codomain.space.equal(back, target):
            raise NotInvertible("inversion check failed on basis element %d" % i)
        table.append(g.domain.space.canonical(ambient))
    return TranslationData(kind, tuple(table))


# ---------------------------------------------------------------------------
# the identity suite


def _per_basis(rep: Report, cid: str, ops: IdentityOps, fn, note: str = ""):
    bad = []
    skipped = 0
    for i in range(ops.n):
        try:
            w = fn(i)
        except DegreeCapExceeded:
            skipped += 1
            continue
        if w:
            bad.append(w)
    if skipped:
        note = (note + "; " if note else "") + "%d elements beyond cap" % skipped
    rep.record(cid, bad, note=note)


def _per_pair(rep: Report, cid: str, ops: IdentityOps, fn, note: str = ""):
    bad = []
    skipped = 0
    for i in range(ops.n):
        for j in range(ops.n):
            if not ops.pair_ok(i, j):
                skipped += 1
                continue
            try:
                w = fn(i, j)
            except DegreeCapExceeded:
                skipped += 1
                continue
            if w:
                bad.append(w)
    if skipped:
        note = (note + "; " if note else "") + "%d pairs beyond cap" % skipped
    rep.record(cid, bad, note=note)


def _outer4(v1: dict, v2: dict, n: int) -> dict:
    block = n * n
    out = {}
    for f1, c1 in v1.items():
        for f2, c2 in v2.items():
            out[f1 * block + f2] = c1 * c2
    return out


def verify_translation_identities(B, left_td: TranslationData | None = None,
                                  right_td: TranslationData | None = None) -> Report:
    """Check SCH1..9 / TCH1..9 / MIX1..3 on every basis element (or pair)."""
    ops = B if isinstance(B, IdentityOps) else IdentityOps.from_bialgebroid(B)
    rep = Report(title="translation identities (%s)" % ops.label)
    n = ops.n
    dims2 = (n, n)
    one = ops.A.field_obj.one
    names = ops.U.basis_names
    unit = ops.U.unit
    tt = left_td.table if left_td is not None else None
    wt = right_td.table if right_td is not None else None

    def nm(i):
        return names[i]

    if tt is None:
        for cid in ("SCH%d" % k for k in range(1, 10)):
            rep.add_skip(cid, "no left translation data")
    else:
        ot_a, ot_aop = ops.space("OT_A"), ops.space("OT_AOP")

        def sch1(i):
            if not ops.space("TAK_AOP").contains_ambient(tt[i]):
                return nm(i)

        def sch2(i):
            v, d = ops.expand(tt[i], dims2, 0, ops.delta)
            v, d = ops.mul(v, d, 1, 2)
            if not ot_a.equal(v, tensor_of(dims2, {i: one}, unit)):
                return nm(i)

        def sch3(i):
            v, d = ops.expand(ops.delta[i], dims2, 0, tt)
            v, d = ops.mul(v, d, 1, 2)
            if not ot_aop.equal(v, tensor_of(dims2, {i: one}, unit)):
                return nm(i)

        def sch4(i):
            lhs, _ = ops.expand(tt[i], dims2, 0, ops.delta)
            rhs, _ = ops.expand(ops.delta[i], dims2, 1, tt)
            if not ops.space("SCH4").equal(lhs, rhs):
                return nm(i)

        def sch5(i):
            lhs, _ = ops.expand(tt[i], dims2, 1, ops.delta)
            rhs, d = ops.expand(tt[i], dims2, 0, tt)
            rhs, _ = permute_legs(rhs, d, (0, 2, 1))
            if not ops.space("SCH5").equal(lhs, rhs):
                return nm(i)

        def sch6(i, j):
            lhs = ops.table_apply(tt, ops.U.mult[i][j])
            rhs = _outer4(tt[i], tt[j], n)
            d = (n, n, n, n)
            rhs, d = ops.mul(rhs, d, 0, 2)
            rhs, d = ops.mul(rhs, d, 2, 1)
            if not ot_aop.equal(lhs, rhs):
                return "(%s, %s)" % (nm(i), nm(j))

        def sch7(i):
            v, _ = ops.mul(tt[i], dims2, 0, 1)
            if vec_sub(v, ops.source_map.apply(ops.eps.cols[i])):
                return nm(i)

        def sch8(i):
            v, _ = contract_counit(tt[i], dims2, 1, 0, ops.eps, ops.actions["blact"])
            if vec_sub(v, {i: one}):
                return nm(i)

        _per_basis(rep, "SCH1", ops, sch1)
        _per_basis(rep, "SCH2", ops, sch2)
        _per_basis(rep, "SCH3", ops, sch3)
        _per_basis(rep, "SCH4", ops, sch4)
        _per_basis(rep, "SCH5", ops, sch5)
        _per_pair(rep, "SCH6", ops, sch6)
        _per_basis(rep, "SCH7", ops, sch7)
        _per_basis(rep, "SCH8", ops, sch8)

        bad = []
        for ai in range(ops.A.dim):
            a = ops.A.basis_vec(ai)
            sa = ops.source_map.apply(a)
            for bi in range(ops.A.dim):
                b = ops.A.basis_vec(bi)
                elem = ops.mult_vec(sa, ops.target_map.apply(b))
                lhs = ops.table_apply(tt, elem)
                rhs = tensor_of(dims2, sa, ops.source_map.apply(b))
                if not ot_aop.equal(lhs, rhs):
                    bad.append("(%s, %s)" % (ops.A.basis_names[ai], ops.A.basis_names[bi]))
        rep.record("SCH9", bad)

    if wt is None:
        for cid in ("TCH%d" % k for k in range(1, 10)):
            rep.add_skip(cid, "no right translation data")
    else:
        ot_a, ot_upa = ops.space("OT_A"), ops.space("OT_UPA")

        def tch1(i):
            if not ops.space("TAK_SUP").contains_ambient(wt[i]):
                return nm(i)

        def tch2(i):
            v, d = ops.expand(wt[i], dims2, 0, ops.delta)
            v, d = ops.mul(v, d, 0, 2)
            if not ot_a.equal(v, tensor_of(dims2, unit, {i: one})):
                return nm(i)

        def tch3(i):
            v, d = ops.expand(ops.delta[i], dims2, 1, wt)
            v, d = ops.mul(v, d, 2, 0)
            v, d = permute_legs(v, d, (1, 0))
            if not ot_upa.equal(v, tensor_of(dims2, {i: one}, unit)):
                return nm(i)

        def tch4(i):
            lhs, d = ops.expand(wt[i], dims2, 0, ops.delta)
            lhs, _ = permute_legs(lhs, d, (0, 2, 1))
            rhs, _ = ops.expand(ops.delta[i], dims2, 0, wt)
            if not ops.space("TCH4").equal(lhs, rhs):
                return nm(i)

        def tch5(i):
            lhs, _ = ops.expand(wt[i], dims2, 0, wt)
            rhs, _ = ops.expand(wt[i], dims2, 1, ops.delta)
            if not ops.space("TCH5").equal(lhs, rhs):
                return nm(i)

        def tch6(i, j):
            lhs = ops.table_apply(wt, ops.U.mult[i][j])
            rhs = _outer4(wt[i], wt[j], n)
            d = (n, n, n, n)
            rhs, d = ops.mul(rhs, d, 0, 2)
            rhs, d = ops.mul(rhs, d, 2, 1)
            if not ot_upa.equal(lhs, rhs):
                return "(%s, %s)" % (nm(i), nm(j))

        def tch7(i):
            v, _ = ops.mul(wt[i], dims2, 0, 1)
            if vec_sub(v, ops.target_map.apply(ops.eps.cols[i])):
                return nm(i)

        def tch8(i):
            v, _ = contract_counit(wt[i], dims2, 1, 0, ops.eps, ops.actions["bract"])
            if vec_sub(v, {i: one}):
                return nm(i)

        _per_basis(rep, "TCH1", ops, tch1)
        _per_basis(rep, "TCH2", ops, tch2)
        _per_basis(rep, "TCH3", ops, tch3)
        _per_basis(rep, "TCH4", ops, tch4)
        _per_basis(rep, "TCH5", ops, tch5)
        _per_pair(rep, "TCH6", ops, tch6)
        _per_basis(rep, "TCH7", ops, tch7)
        _per_basis(rep, "TCH8", ops, tch8)

        bad = []
        for ai in range(ops.A.dim):
            a = ops.A.basis_vec(ai)
            ta = ops.target_map.apply(a)
            for bi in range(ops.A.dim):
                b = ops.A.basis_vec(bi)
                elem = ops.mult_vec(ops.source_map.apply(a), ops.target_map.apply(b))
                lhs = ops.table_apply(wt, elem)
                rhs = tensor_of(dims2, ops.target_map.apply(b), ta)
                if not ot_upa.equal(lhs, rhs):
                    bad.append("(%s, %s)" % (ops.A.basis_names[ai], ops.A.basis_names[bi]))
        rep.record("TCH9", bad)

    if tt is None or wt is None:
        for cid in ("MIX1", "MIX2", "MIX3"):
            rep.add_skip(cid, "needs both translation tables")
    else:
        def mix1(i):
            lhs, d = ops.expand(tt[i], dims2, 0, wt)
            lhs, _ = permute_legs(lhs, d, (0, 2, 1))
            rhs, _ = ops.expand(wt[i], dims2, 0, tt)
            if not ops.space("MIX1").equal(lhs, rhs):
                return nm(i)

        def mix2(i):
            lhs, _ = ops.expand(tt[i], dims2, 1, wt)
            rhs, _ = ops.expand(ops.delta[i], dims2, 0, tt)
            if not ops.space("MIX2").equal(lhs, rhs):
                return nm(i)

        def mix3(i):
            lhs, _ = ops.expand(wt[i], dims2, 1, tt)
            rhs, d = ops.expand(ops.delta[i], dims2, 1, wt)
            rhs, _ = permute_legs(rhs, d, (1, 2, 0))
            if not ops.space("MIX3").equal(lhs, rhs):
                return nm(i)

        _per_basis(rep, "MIX1", ops, mix1)
        _per_basis(rep, "MIX2", ops, mix2)
        _per_basis(rep, "MIX3", ops, mix3)

    return rep


# ---------------------------------------------------------------------------
# full Hopf algebroids


@dataclass(eq=False)
class FullHopfAlgebroid:
    """A left and a right bialgebroid on one ring, linked by an antipode."""

    left_part: LeftBialgebroid
    right_part: RightBialgebroid
    antipode: LinearMap
    antipode_inverse: LinearMap | None = None
    name: str = ""

    def __post_init__(self):
        if self.left_part.U.dim != self.right_part.U.dim:
            raise ValueError("the two constituents must share the ring")
        if self.antipode_inverse is None:
            try:
                self.antipode_inverse = inverse(self.antipode)
            except NoSolution:
                raise AntipodeNotInvertible("antipode matrix is singular")

    @property
    def partial(self) -> LinearMap:
        return self.right_part.augmentation


def translation_from_antipode(H: FullHopfAlgebroid):
    """Translation tables read off the antipode, cross-checked by inversion.

    The left table pairs the first coproduct leg with the antipode of the
    second; the right table pairs the second leg with the inverse antipode
    of the first.
    """
    L = H.left_part
    n = L.U.dim
    dims = (n, n)
    S = H.antipode
    if H.antipode_inverse is None:
        raise AntipodeNotInvertible("antipode matrix is singular")
    Sinv = H.antipode_inverse
    ttable = []
    wtable = []
    for i in range(n):
        t, _ = apply_at_leg(L.coproduct[i], dims, 1, S)
        ttable.append(t)
        w, d = permute_legs(L.coproduct[i], dims, (1, 0))
        w, _ = apply_at_leg(w, d, 1, Sinv)
        wtable.append(w)
    left_td = TranslationData("left", tuple(ttable))
    right_td = TranslationData("right", tuple(wtable))

    ops = IdentityOps.from_bialgebroid(L)
    solved_l = invert_galois(ops, "left")
    solved_r = invert_galois(ops, "right")
    aop = ops.space("OT_AOP")
    upa = ops.space("OT_UPA")
    for i in range(n):
        if not aop.equal(left_td.table[i], solved_l.table[i]):
            raise ValueError("antipode-derived left translation disagrees with "
                             "the Galois inverse on %s" % L.U.basis_names[i])
        if not upa.equal(right_td.table[i], solved_r.table[i]):
            raise ValueError("antipode-derived right translation disagrees with "
                             "the Galois inverse on %s" % L.U.basis_names[i])
    return left_td, right_td


def nu_mu_isomorphisms(H: FullHopfAlgebroid):
    """The base comparison maps: nu = partial . source, mu = counit . source.

    Returns them as validated algebra maps into the opposite bases, after
    checking that the antipode is a bialgebroid morphism onto either
    op-coop structure.  Raises NotIso with a witness on any failure.
    """
    L, R = H.left_part, H.right_part
    A, B = L.A, R.A
    nu_lin = R.augmentation.compose(L.ring.source_map())
    mu_lin = L.counit.compose(R.ring.source_map())
    try:
        nu = AlgebraMap(A, opposite(B), nu_lin, name="nu")
    except ValueError as exc:
        raise NotIso("nu = partial . source is not an algebra map into the "
                     "opposite base: %s" % exc)
    try:
        mu = AlgebraMap(B, opposite(A), mu_lin, name="mu")
    except ValueError as exc:
        raise NotIso("mu = counit . source is not an algebra map into the "
                     "opposite base: %s" % exc)
    try:
        nu_inv = inverse(nu_lin)
    except NoSolution:
        raise NotIso("nu is not bijective")
    try:
        mu_inv = inverse(mu_lin)
    except NoSolution:
        raise NotIso("mu is not bijective")

    S, Sinv = H.antipode, H.antipode_inverse
    n = L.U.dim
    dims = (n, n)

    hat = op_coop_of_right(R, nu_lin, nu_inv, A, name="op-coop of right part")
    if S.compose(L.ring.source_map()) != hat.ring.source_map():
        raise NotIso("antipode does not intertwine the source maps")
    if S.compose(L.ring.target_map()) != hat.ring.target_map():
        raise NotIso("antipode does not intertwine the target maps")
    if hat.counit.compose(S) != L.counit:
        raise NotIso("antipode does not intertwine counit and augmentation")
    sq = hat.square
    for i in range(n):
        lhs = hat.delta(S.cols[i])
        rhs, _ = apply_at_leg(L.coproduct[i], dims, 0, S)
        rhs, _ = apply_at_leg(rhs, dims, 1, S)
        if not sq.equal(lhs, rhs):
            raise NotIso("antipode fails the left coproduct intertwining on %s"
                         % L.U.basis_names[i])

    hat2 = op_coop_of_left(L, mu_lin, mu_inv, B, name="op-coop of left part")
    if S.compose(R.ring.source_map()) != hat2.ring.source_map():
        raise NotIso("antipode does not intertwine the right source maps")
    if S.compose(R.ring.target_map()) != hat2.ring.target_map():
        raise NotIso("antipode does not intertwine the right target maps")
    if hat2.augmentation.compose(S) != R.augmentation:
        raise NotIso("antipode does not intertwine augmentation and counit")
    sq2 = hat2.square
    for i in range(n):
        lhs = hat2.delta(S.cols[i])
        rhs, _ = apply_at_leg(R.coproduct[i], dims, 0, S)
        rhs, _ = apply_at_leg(rhs, dims, 1, S)
        if not sq2.equal(lhs, rhs):
            raise NotIso("antipode fails the right coproduct intertwining on %s"
                         % L.U.basis_names[i])

    bad = None
    for i in range(n):
        for j in range(n):
            lhs = S.apply(L.U.mult[i][j])
            rhs = L.U.multiply(S.cols[j], S.cols[i])
            if vec_sub(lhs, rhs):
                bad = (i, j)
                break
        if bad:
            break
    if bad:
        raise NotIso("antipode is not anti-multiplicative on (%s, %s)"
                     % (L.U.basis_names[bad[0]], L.U.basis_names[bad[1]]))
    return nu, mu
