"""Exact linear algebra: maps, kernels, solving, subspaces, quotients, dual bases.

Vectors are dictionaries mapping basis index to a nonzero scalar; the zero
vector is the empty dict.  All row reduction is exact and uses a fixed
leftmost-pivot convention so every computed object (echelon basis, canonical
quotient representative, solution with free variables zeroed) is
deterministic for a given basis order.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class NoSolution(Exception):
    """Raised by solve() when the target is not in the image."""


class IdempotentNotIdempotent(Exception):
    """Raised by dual_basis() when the presenting endomorphism fails e*e = e."""


# ---------------------------------------------------------------------------
# sparse vector helpers


def vec_add(u: dict, v: dict) -> dict:
    if len(u) < len(v):
        u, v = v, u
    out = dict(u)
    for k, c in v.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def vec_sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def vec_scale(c, v: dict) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_axpy(out: dict, c, v: dict) -> None:
    """In-place out += c*v (out is a plain dict being assembled)."""
    if not c:
        return
    for k, x in v.items():
        s = out.get(k)
        if s is None:
            out[k] = c * x
        else:
            s = s + c * x
            if s:
                out[k] = s
            else:
                del out[k]


def vec_from_dense(seq, zero) -> dict:
    return {i: c for i, c in enumerate(seq) if c != zero}


def vec_to_dense(v: dict, n: int, zero) -> list:
    out = [zero] * n
    for k, c in v.items():
        out[k] = c
    return out


def vec_eq(u: dict, v: dict) -> bool:
    return u == v


# ---------------------------------------------------------------------------
# row reduction


class _Echelon:
    """A fully reduced sparse row-echelon form, built incrementally.

    Rows are kept keyed by pivot column; every row is normalized to pivot
    coefficient 1 and contains no other row's pivot column, so reducing a
    vector is a single elimination pass.
    """

    def __init__(self):
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        rows = self.rows
        hits = [k for k in v if k in rows]
        if not hits:
            return dict(v)
        out = dict(v)
        for k in hits:
            c = out.get(k)
            if not c:
                continue
            vec_axpy(out, -c, rows[k])
        return out

    def add(self, v: dict) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p]
        row = {k: c / inv for k, c in r.items()}
        for q, other in self.rows.items():
            c = other.get(p)
            if c:
                vec_axpy(other, -c, row)
        self.rows[p] = row
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def sorted_rows(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^ambient_dim with a reduced-echelon basis."""

    ambient_dim: int
    _ech: _Echelon = field(repr=False)

    @staticmethod
    def from_vectors(ambient_dim: int, vectors) -> "Subspace":
        ech = _Echelon()
        for v in vectors:
            for k in v:
                if not (0 <= k < ambient_dim):
                    raise ValueError("coordinate %d outside ambient dimension %d"
                                     % (k, ambient_dim))
            ech.add(v)
        return Subspace(ambient_dim, ech)

    @property
    def dim(self) -> int:
        return self._ech.rank

    @property
    def basis(self) -> list[dict]:
        return self._ech.sorted_rows()

    def pivot_columns(self) -> list[int]:
        return sorted(self._ech.rows)

    def contains(self, v: dict) -> bool:
        return self._ech.contains(v)

    def reduce(self, v: dict) -> dict:
        """Residue of v after eliminating all pivot coordinates."""
        return self._ech.reduce(v)

    def coordinates(self, v: dict) -> dict:
        """Express a member vector in the echelon basis (by pivot position).

        Raises ValueError when v is not in the subspace.
        """
        pivots = self.pivot_columns()
        coords = {}
        rest = dict(v)
        for i, p in enumerate(pivots):
            c = rest.get(p)
            if c:
                coords[i] = c
                vec_axpy(rest, -c, self._ech.rows[p])
        if rest:
            raise ValueError("vector is not in the subspace")
        return coords


@dataclass(frozen=True)
class LinearMap:
    """An exact linear map, stored column-wise (sparse) with dense access."""

    domain_dim: int
    codomain_dim: int
    cols: tuple

    @staticmethod
    def from_cols(domain_dim: int, codomain_dim: int, cols) -> "LinearMap":
        return LinearMap(domain_dim, codomain_dim, tuple(dict(c) for c in cols))

    @staticmethod
    def from_rows(rows, field_obj) -> "LinearMap":
        """Build from a dense grid (codomain_dim x domain_dim)."""
        m = len(rows)
        n = len(rows[0]) if m else 0
        zero = field_obj.zero
        cols = [dict() for _ in range(n)]
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("ragged matrix")
            for j, c in enumerate(row):
                if c != zero:
                    cols[j][i] = c
        return LinearMap(n, m, tuple(cols))

    @staticmethod
    def identity(n: int, field_obj) -> "LinearMap":
        one = field_obj.one
        return LinearMap(n, n, tuple({i: one} for i in range(n)))

    @staticmethod
    def zero(domain_dim: int, codomain_dim: int) -> "LinearMap":
        return LinearMap(domain_dim, codomain_dim, tuple({} for _ in range(domain_dim)))

    def matrix(self, field_obj) -> list[list]:
        """Dense grid, codomain_dim rows by domain_dim columns."""
        zero = field_obj.zero
        grid = [[zero] * self.domain_dim for _ in range(self.codomain_dim)]
        for j, col in enumerate(self.cols):
            for i, c in col.items():
                grid[i][j] = c
        return grid

    def apply(self, v: dict) -> dict:
        out: dict = {}
        for j, c in v.items():
            vec_axpy(out, c, self.cols[j])
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.codomain_dim != self.domain_dim:
            raise ValueError("dimension mismatch in composition")
        cols = tuple(self.apply(c) for c in other.cols)
        return LinearMap(other.domain_dim, self.codomain_dim, cols)

    def add(self, other: "LinearMap") -> "LinearMap":
        if (other.domain_dim, other.codomain_dim) != (self.domain_dim, self.codomain_dim):
            raise ValueError("dimension mismatch in sum")
        return LinearMap(self.domain_dim, self.codomain_dim,
                         tuple(vec_add(a, b) for a, b in zip(self.cols, other.cols)))

    def sub(self, other: "LinearMap") -> "LinearMap":
        if (other.domain_dim, other.codomain_dim) != (self.domain_dim, self.codomain_dim):
            raise ValueError("dimension mismatch in difference")
        return LinearMap(self.domain_dim, self.codomain_dim,
                         tuple(vec_sub(a, b) for a, b in zip(self.cols, other.cols)))

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.domain_dim, self.codomain_dim,
                         tuple(vec_scale(c, col) for col in self.cols))

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def __eq__(self, other):
        return (isinstance(other, LinearMap)
                and self.domain_dim == other.domain_dim
                and self.codomain_dim == other.codomain_dim
                and self.cols == other.cols)

    def __hash__(self):
        return hash((self.domain_dim, self.codomain_dim,
                     tuple(tuple(sorted(c.items())) for c in self.cols)))


def kernel(f: LinearMap) -> Subspace:
    """The exact kernel {v : f(v) = 0} as a Subspace of the domain."""
    # Row-reduce the matrix; free columns parameterize the kernel.
    ech = _Echelon()
    # rows of the matrix live in domain coordinates; build them from columns
    rows: dict[int, dict] = {}
    for j, col in enumerate(f.cols):
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    for i in sorted(rows):
        ech.add(rows[i])
    pivots = sorted(ech.rows)
    pivset = set(pivots)
    one = _find_unit(f.cols)
    basis = []
    for j in range(f.domain_dim):
        if j in pivset:
            continue
        # kernel vector: x_j = 1, x_p = -row_p[j] for each pivot p
        v = {}
        for p in pivots:
            c = ech.rows[p].get(j)
            if c:
                v[p] = -c
        v[j] = one
        basis.append(v)
    return Subspace.from_vectors(f.domain_dim, basis)


def _find_unit(vecs):
    """A multiplicative unit scalar scraped from any nonzero entry.

    Falls back to Fraction(1), which is only reached for all-zero data and
    keeps arithmetic exact either way.
    """
    for v in vecs:
        for c in v.values():
            return c / c
    from fractions import Fraction
    return Fraction(1)


def rank(f: LinearMap) -> int:
    ech = _Echelon()
    for col in f.cols:
        ech.add(col)
    return ech.rank


class PreparedSolve:
    """Row reduction of a map, factored once so many targets can be solved.

    Solutions are canonical: free variables are set to zero in echelon
    order, matching the documented convention.
    """

    def __init__(self, f: LinearMap):
        self.f = f
        # Gaussian elimination on the augmented system, tracked as an
        # elimination recipe: echelon over codomain coordinates together
        # with the row operations applied, encoded by keeping, for each
        # pivot row, the expression of that row in terms of domain basis
        # columns.
        self._ech = _Echelon()
        self._expr: dict[int, dict] = {}  # pivot codomain coord -> domain combo
        for j, col in enumerate(f.cols):
            if not col:
                continue
            unit = next(iter(col.values()))
            unit = unit / unit
            r, combo = self._reduce_tracked(col, {j: unit})
            if not r:
                continue
            p = min(r)
            inv = r[p]
            r = {k: c / inv for k, c in r.items()}
            combo = {k: c / inv for k, c in combo.items()}
            for q in list(self._ech.rows):
                other = self._ech.rows[q]
                c = other.get(p)
                if c:
                    vec_axpy(other, -c, r)
                    vec_axpy(self._expr[q], -c, combo)
            self._ech.rows[p] = r
            self._expr[p] = combo
        self.rank = self._ech.rank

    def _reduce_tracked(self, v: dict, combo: dict):
        out = dict(v)
        comb = dict(combo)
        hits = [k for k in out if k in self._ech.rows]
        for k in hits:
            c = out.get(k)
            if not c:
                continue
            vec_axpy(out, -c, self._ech.rows[k])
            vec_axpy(comb, -c, self._expr[k])
        return out, comb

    def solve(self, target: dict) -> dict:
        # reducing target subtracts rows, so the tracked combo carries the
        # opposite sign of the solution
        res, combo = self._reduce_tracked(target, {})
        if res:
            raise NoSolution("target outside the image (residual on %s)"
                             % sorted(res))
        return {k: -c for k, c in combo.items()}

    def in_image(self, target: dict) -> bool:
        res, _ = self._reduce_tracked(target, {})
        return not res


def solve(f: LinearMap, target: dict) -> dict:
    """One vector v with f(v) = target, free variables zero; NoSolution otherwise."""
    return PreparedSolve(f).solve(target)


def inverse(f: LinearMap) -> LinearMap:
    """The two-sided inverse of a square bijective map; NoSolution if singular."""
    if f.domain_dim != f.codomain_dim:
        raise NoSolution("only square maps can be inverted")
    ps = PreparedSolve(f)
    one = _find_unit(f.cols)
    cols = tuple(ps.solve({i: one}) for i in range(f.codomain_dim))
    return LinearMap(f.codomain_dim, f.domain_dim, cols)


@dataclass(frozen=True)
class QuotientSpace:
    """k^ambient_dim modulo a relations subspace, with canonical representatives.

    The canonical representative of a class is the unique member supported
    on the non-pivot (free) columns of the relations echelon; project reads
    off those coordinates and section re-embeds them.
    """

    ambient_dim: int
    relations: Subspace

    def __post_init__(self):
        if self.relations.ambient_dim != self.ambient_dim:
            raise ValueError("relations live in the wrong ambient space")

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.relations.dim

    @property
    def free_columns(self) -> list[int]:
        piv = set(self.relations.pivot_columns())
        return [j for j in range(self.ambient_dim) if j not in piv]

    def canonical(self, v: dict) -> dict:
        return self.relations.reduce(v)

    def project(self, v: dict) -> dict:
        """Coordinates of the class of v in the quotient basis."""
        can = self.canonical(v)
        free = self.free_columns
        pos = {c: i for i, c in enumerate(free)}
        return {pos[k]: c for k, c in can.items()}

    def section_vec(self, coords: dict) -> dict:
        free = self.free_columns
        return {free[i]: c for i, c in coords.items()}

    @property
    def section(self) -> LinearMap:
        """The canonical-representative embedding, quotient -> ambient."""
        free = self.free_columns
        one = _find_unit(self.relations.basis)
        return LinearMap(len(free), self.ambient_dim,
                         tuple({c: one} for c in free))

    def equal(self, u: dict, v: dict) -> bool:
        return not self.canonical(vec_sub(u, v))

    def is_zero(self, v: dict) -> bool:
        return not self.canonical(v)


def quotient_by(relations: Subspace) -> QuotientSpace:
    return QuotientSpace(relations.ambient_dim, relations)


def dual_basis(idempotent: LinearMap):
    """Generators and cogenerators of the module presented by an idempotent.

    The module is the image of ``idempotent`` acting on a free module.  The
    generators are the images of the standard generators (zero columns are
    dropped); the cogenerators are the matching coordinate functionals.
    Together they satisfy m = sum_j e_j * e^j(m) for every m in the image.

    Raises IdempotentNotIdempotent when e*e differs from e.
    """
    if idempotent.domain_dim != idempotent.codomain_dim:
        raise IdempotentNotIdempotent("endomorphism expected, got %d -> %d"
                                      % (idempotent.domain_dim, idempotent.codomain_dim))
    if idempotent.compose(idempotent) != idempotent:
        raise IdempotentNotIdempotent("e*e differs from e")
    gens = []
    cogens = []
    one = _find_unit(idempotent.cols)
    for j, col in enumerate(idempotent.cols):
        if col:
            gens.append(dict(col))
            cogens.append({j: one})
    return gens, cogens
