"""Dual rings of a left bialgebroid and their right-bialgebroid structure.

A finite-dimensional left bialgebroid U over A has two spaces of A-valued
functionals singled out by its structure maps:

    left dual   psi(s(a) u) = a psi(u)     (linear for the source action)
    right dual  phi(t(a) u) = phi(u) a     (linear for the target action)

Both are rings: the product transposes the coproduct of U through the
evaluation pairing, the unit is the counit of U, and a -> [eps(.) a] and
a -> [eps(. t(a))] (resp. their mirror images) embed A and turn the dual
into an A^e-ring with augmentation phi -> phi(1).

When the module that defines the linearity constraint is finitely
generated projective over A, a dual basis {e_i, e^i} of that module
additionally yields a coproduct transposing the multiplication of U,

    left dual    psi  |->  sum_ij  e^i (x) e^j . psi(e_j e_i)
    right dual   phi  |->  sum_ij  phi(f_i f_j) . f^i (x) f^j

and the dual becomes a right bialgebroid over A.  Swapping the product
order inside psi(-), or moving the scalar to the other tensor leg, breaks
counitality on the pair-groupoid instance, which is how the stated forms
were singled out; the two sides mirror each other under swapping both
axes at once.

Functionals are stored as flat sparse vectors over pairs of basis indices,
flat[j * dim A + r] being the coefficient of the r-th A-basis vector in
the value on the j-th ring basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import FiniteAlgebra, check_algebra_axioms
from .amodules import (DualBasisData, NotFinitelyGeneratedProjective,
                       module_dual_basis)
from .bialgebroid import (LeftBialgebroid, Pairing, RightBialgebroid,
                          check_pairing, check_right_bialgebroid)
from .linalg import LinearMap, Subspace, kernel, vec_axpy, vec_sub
from .report import Report
from .tensors import AeRing, check_aering

SIDES = ("leftdual", "rightdual")


# ---------------------------------------------------------------------------
# flat functional helpers


def flatten_functional(f: LinearMap) -> dict:
    """Store a map U -> A as one sparse vector over (U index, A index)."""
    dim_a = f.codomain_dim
    out = {}
    for j, col in enumerate(f.cols):
        for r, c in col.items():
            out[j * dim_a + r] = c
    return out


def unflatten_functional(flat: dict, dim_u: int, dim_a: int) -> LinearMap:
    cols = [dict() for _ in range(dim_u)]
    for k, c in flat.items():
        j, r = divmod(k, dim_a)
        cols[j][r] = c
    return LinearMap(dim_u, dim_a, tuple(cols))


def evaluate_flat(flat: dict, u: dict, dim_a: int) -> dict:
    """The A-valued result of applying a flat functional to a ring vector."""
    out: dict = {}
    for j, c in u.items():
        base = j * dim_a
        for r in range(dim_a):
            v = flat.get(base + r)
            if v:
                s = out.get(r)
                s = c * v if s is None else s + c * v
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
    return out


# ---------------------------------------------------------------------------
# the dual as a structured object


@dataclass(eq=False)
class DualBialgebroid:
    """One of the two duals, with as much structure as the input affords.

    The ring and the augmentation always exist.  The right-bialgebroid
    wrapper is present exactly when the defining module admitted a dual
    basis; otherwise `obstruction` says why it is missing.
    """

    side: str
    parent: LeftBialgebroid
    carrier: Subspace
    ring: AeRing
    augmentation: LinearMap
    bialgebroid: RightBialgebroid | None
    obstruction: str | None
    dual_basis: DualBasisData | None

    @property
    def A(self) -> FiniteAlgebra:
        return self.ring.A

    @property
    def V(self) -> FiniteAlgebra:
        return self.ring.U

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @cached_property
    def _basis_flat(self) -> tuple:
        return tuple(self.carrier.basis)

    def functional(self, coords: dict) -> LinearMap:
        """The element with the given dual-ring coordinates, as a map U -> A."""
        flat: dict = {}
        for k, c in coords.items():
            vec_axpy(flat, c, self._basis_flat[k])
        return unflatten_functional(flat, self.parent.U.dim,
                                    self.parent.A.dim)

    def evaluate(self, coords: dict, u: dict) -> dict:
        """Apply an element (in dual-ring coordinates) to a ring vector."""
        dim_a = self.parent.A.dim
        out: dict = {}
        for k, c in coords.items():
            for r, v in evaluate_flat(self._basis_flat[k], u, dim_a).items():
                s = out.get(r)
                s = c * v if s is None else s + c * v
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def coordinates(self, f: LinearMap) -> dict:
        """Express a functional U -> A in dual-ring coordinates.

        Raises ValueError when the map violates the linearity constraint
        of this side.
        """
        return self.carrier.coordinates(flatten_functional(f))


# ---------------------------------------------------------------------------
# carrier and structure constants


def _carrier_subspace(B: LeftBialgebroid, side: str) -> Subspace:
    U, A = B.U, B.A
    n, da = U.dim, A.dim
    field = A.field_obj
    rows = []
    for r in range(da):
        struct = (B.ring.source(A.basis_vec(r)) if side == "leftdual"
                  else B.ring.target(A.basis_vec(r)))
        for j in range(n):
            moved = U.multiply(struct, U.basis_vec(j))
            for x in range(da):
                row: dict = {}
                for m, cm in moved.items():
                    key = m * da + x
                    row[key] = row.get(key, field.zero) + cm
                # subtract the scalar side: a_r psi(u_j) resp. psi(u_j) a_r
                for y in range(da):
                    prod = (A.mult[r][y] if side == "leftdual"
                            else A.mult[y][r])
                    c = prod.get(x)
                    if c:
                        key = j * da + y
                        row[key] = row.get(key, field.zero) - c
                rows.append({k: v for k, v in row.items() if v})
    cols: list = [dict() for _ in range(n * da)]
    for i, row in enumerate(rows):
        for k, c in row.items():
            cols[k][i] = c
    constraint = LinearMap(n * da, len(rows), tuple(cols))
    return kernel(constraint)


def _dual_product(B: LeftBialgebroid, side: str, f1: dict, f2: dict) -> dict:
    """The flat functional (f1 f2), transposing the coproduct of U."""
    U, A = B.U, B.A
    n, da = U.dim, A.dim
    out: dict = {}
    for j in range(n):
        val: dict = {}
        for k, c in B.coproduct[j].items():
            p, q = divmod(k, n)
            if side == "leftdual":
                a = evaluate_flat(f1, U.basis_vec(q), da)
                w = U.multiply(B.ring.target(a), U.basis_vec(p))
            else:
                a = evaluate_flat(f1, U.basis_vec(p), da)
                w = U.multiply(B.ring.source(a), U.basis_vec(q))
            for r, v in evaluate_flat(f2, w, da).items():
                s = val.get(r)
                s = c * v if s is None else s + c * v
                if s:
                    val[r] = s
                else:
                    val.pop(r, None)
        for r, v in val.items():
            out[j * da + r] = v
    return out


def _structure_functionals(B: LeftBialgebroid, side: str):
    """Flat source and target images of each A-basis vector, plus the unit."""
    U, A = B.U, B.A
    da = A.dim
    eps_cols = B.counit.cols
    sources, targets = [], []
    for r in range(da):
        a = A.basis_vec(r)
        s_flat: dict = {}
        t_flat: dict = {}
        for j in range(U.dim):
            if side == "leftdual":
                sval = A.multiply(eps_cols[j], a)
                tval = B.eps(U.multiply(U.basis_vec(j), B.ring.target(a)))
            else:
                sval = B.eps(U.multiply(U.basis_vec(j), B.ring.source(a)))
                tval = A.multiply(a, eps_cols[j])
            for r2, c in sval.items():
                s_flat[j * da + r2] = c
            for r2, c in tval.items():
                t_flat[j * da + r2] = c
        sources.append(s_flat)
        targets.append(t_flat)
    return sources, targets


def _dual_coproduct(B: LeftBialgebroid, carrier: Subspace,
                    db: DualBasisData, side: str) -> tuple:
    """Coproduct columns over the carrier basis, from a dual basis of U."""
    U, A = B.U, B.A
    da = A.dim
    nv = carrier.dim
    gen_cols = [flatten_functional(g) for g in db.cogenerators]
    gen_coords = [carrier.coordinates(g) for g in gen_cols]
    cols = []
    for psi in carrier.basis:
        col: dict = {}
        for i in range(db.size):
            vi = gen_coords[i]
            for j in range(db.size):
                if side == "leftdual":
                    prod = U.multiply(db.generators[j], db.generators[i])
                else:
                    prod = U.multiply(db.generators[i], db.generators[j])
                a = evaluate_flat(psi, prod, da)
                if not a:
                    continue
                scaled: dict = {}
                if side == "leftdual":
                    # second leg, value postmultiplied: (e^j <| a)(u) = e^j(u) a
                    for m in range(U.dim):
                        for r, c in A.multiply(
                                db.cogenerators[j].cols[m], a).items():
                            scaled[m * da + r] = c
                    left, right = vi, carrier.coordinates(scaled)
                else:
                    # first leg, value premultiplied: (a |> f^i)(u) = a f^i(u)
                    for m in range(U.dim):
                        for r, c in A.multiply(
                                a, db.cogenerators[i].cols[m]).items():
                            scaled[m * da + r] = c
                    left, right = carrier.coordinates(scaled), gen_coords[j]
                for p, cp in left.items():
                    for q, cq in right.items():
                        key = p * nv + q
                        s = col.get(key)
                        s = cp * cq if s is None else s + cp * cq
                        if s:
                            col[key] = s
                        else:
                            col.pop(key, None)
        cols.append(col)
    return tuple(cols)


def build_dual(B: LeftBialgebroid, side: str = "leftdual") -> DualBialgebroid:
    """Construct the left or right dual with all available structure.

    The A^e-ring with its augmentation is always produced.  The coproduct
    needs a dual basis for the module cut out by the linearity constraint
    (source action for the left dual, target action for the right dual);
    when none exists the result carries `obstruction` instead of a
    right-bialgebroid wrapper.
    """
    if side not in SIDES:
        raise ValueError("side must be one of %s" % (SIDES,))
    U, A = B.U, B.A
    carrier = _carrier_subspace(B, side)
    basis = carrier.basis
    nv = carrier.dim
    tag = "psi" if side == "leftdual" else "phi"
    names = tuple("%s%d" % (tag, k) for k in range(nv))

    entries = {}
    for i, f1 in enumerate(basis):
        for j, f2 in enumerate(basis):
            entries[(i, j)] = carrier.coordinates(_dual_product(B, side, f1, f2))
    try:
        unit = carrier.coordinates(flatten_functional(B.counit))
    except ValueError:
        raise ValueError("the counit violates the %s linearity constraint, "
                         "so it cannot serve as the dual unit" % side)
    V = FiniteAlgebra.build(A.field_obj, names, entries, unit,
                            name="%s(%s)" % (side, B.name or "?"))

    src_flat, tgt_flat = _structure_functionals(B, side)
    src = LinearMap(A.dim, nv, tuple(carrier.coordinates(f) for f in src_flat))
    tgt = LinearMap(A.dim, nv, tuple(carrier.coordinates(f) for f in tgt_flat))
    ring = AeRing.from_source_target(A, V, src, tgt)

    aug = LinearMap(nv, A.dim,
                    tuple(evaluate_flat(f, U.unit, A.dim) for f in basis))

    action = B.ring.action("lact" if side == "leftdual" else "ract")
    try:
        db = module_dual_basis(action)
    except NotFinitelyGeneratedProjective as exc:
        return DualBialgebroid(side, B, carrier, ring, aug, None,
                               str(exc), None)
    coproduct = _dual_coproduct(B, carrier, db, side)
    rb = RightBialgebroid(ring, coproduct, aug,
                          name="%s(%s)" % (side, B.name or "?"))
    return DualBialgebroid(side, B, carrier, ring, aug, rb, None, db)


# ---------------------------------------------------------------------------
# evaluation pairing and the duality checks


def evaluation_pairing(B: LeftBialgebroid, D: DualBialgebroid) -> Pairing:
    """The A-valued pairing (u, f) -> f(u), typed by the dual's side."""
    da = B.A.dim
    form = tuple(tuple(evaluate_flat(f, B.U.basis_vec(i), da)
                       for f in D._basis_flat)
                 for i in range(B.U.dim))
    kind = "left" if D.side == "leftdual" else "right"
    return Pairing(kind, B.ring, D.ring, form,
                   name="evaluation pairing (%s)" % D.side)


def pairing_ranks(P: Pairing) -> tuple:
    """Ranks of the two flattened slot maps of an A-valued pairing.

    The pairing is nondegenerate exactly when these equal the two ring
    dimensions.
    """
    da = P.first.A.dim
    n1, n2 = P.first.U.dim, P.second.U.dim
    rows1 = []
    for i in range(n1):
        row: dict = {}
        for j in range(n2):
            for r, c in P.form[i][j].items():
                row[j * da + r] = c
        rows1.append(row)
    rows2 = []
    for j in range(n2):
        row = {}
        for i in range(n1):
            for r, c in P.form[i][j].items():
                row[i * da + r] = c
        rows2.append(row)
    return (Subspace.from_vectors(n2 * da, rows1).dim,
            Subspace.from_vectors(n1 * da, rows2).dim)


def double_transposition_check(B: LeftBialgebroid, D: DualBialgebroid) -> Report:
    """Recover the coproduct of U from the dual's multiplication table.

    Feeding the table back through a dual basis must reproduce each
    coproduct entry inside the coring square; this exercises the whole
    chain (carrier coordinates, structure constants, balanced equality)
    rather than restating the defining formula.
    """
    rep = Report(title="double transposition (%s)" % D.side)
    if D.dual_basis is None:
        rep.add_skip("DUAL-BITRANSPOSE", D.obstruction or "no dual basis")
        return rep
    U = B.U
    n = U.dim
    db = D.dual_basis
    coords = [D.coordinates(g) for g in db.cogenerators]
    square = B.square
    bad = []
    for m in range(n):
        u = U.basis_vec(m)
        got: dict = {}
        for i in range(db.size):
            for j in range(db.size):
                val = D.evaluate(D.V.multiply(coords[i], coords[j]), u)
                if not val:
                    continue
                if D.side == "leftdual":
                    first = U.multiply(B.ring.source(val), db.generators[j])
                    second = db.generators[i]
                else:
                    first = db.generators[i]
                    second = U.multiply(B.ring.target(val), db.generators[j])
                for p, cp in first.items():
                    for q, cq in second.items():
                        key = p * n + q
                        s = got.get(key)
                        s = cp * cq if s is None else s + cp * cq
                        if s:
                            got[key] = s
                        else:
                            got.pop(key, None)
        if not square.equal(got, B.coproduct[m]):
            bad.append(U.basis_names[m])
    rep.record("DUAL-BITRANSPOSE", bad)
    return rep


def check_dual(B: LeftBialgebroid, D: DualBialgebroid) -> Report:
    """Everything verifiable about one dual: ring, pairing, bialgebroid."""
    rep = Report(title="dual of %s (%s)" % (B.name or "?", D.side))
    rep.extend(check_algebra_axioms(D.V), tag="dual")
    rep.extend(check_aering(D.ring), tag="dual")

    bad = []
    for k, f in enumerate(D._basis_flat):
        want = evaluate_flat(f, B.U.unit, B.A.dim)
        if vec_sub(D.augmentation.cols[k], want):
            bad.append(D.V.basis_names[k])
    rep.record("DUAL-AUGMENTATION", bad)

    pairing = evaluation_pairing(B, D)
    rep.extend(check_pairing(pairing))
    r1, r2 = pairing_ranks(pairing)
    if r1 == B.U.dim and r2 == D.dim:
        rep.add_pass("DUAL-NONDEGENERATE")
    else:
        rep.add_fail("DUAL-NONDEGENERATE",
                     ["ranks (%d, %d), expected (%d, %d)"
                      % (r1, r2, B.U.dim, D.dim)])

    rep.extend(double_transposition_check(B, D))

    if D.bialgebroid is not None:
        rep.extend(check_right_bialgebroid(D.bialgebroid), tag="dual")
    else:
        rep.add_skip("DUAL-COPRODUCT", D.obstruction or "no dual basis")
    return rep
