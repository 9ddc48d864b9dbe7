"""Finite-dimensional unital associative algebras given by structure constants.

An algebra is a basis (with printable names), a multiplication table giving
each product of basis elements as a vector, and a unit vector.  Opposite and
enveloping algebras are derived constructions; modules and bimodules are
explicit action matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .linalg import LinearMap, vec_axpy, vec_scale, vec_sub
from .report import Report


@dataclass(frozen=True)
class FiniteAlgebra:
    field_obj: object
    dim: int
    mult: tuple  # mult[i][j]: sparse vector, the product of basis i and basis j
    unit: dict
    basis_names: tuple
    name: str = ""

    def __post_init__(self):
        if len(self.mult) != self.dim or any(len(r) != self.dim for r in self.mult):
            raise ValueError("multiplication table has wrong shape")
        if len(self.basis_names) != self.dim:
            raise ValueError("need %d basis names" % self.dim)

    @staticmethod
    def build(field_obj, names, mult_entries, unit, name="") -> "FiniteAlgebra":
        """Build from a dict {(i, j): sparse product}; missing entries are zero."""
        dim = len(names)
        table = [[{} for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in mult_entries.items():
            table[i][j] = dict(v)
        return FiniteAlgebra(field_obj, dim, tuple(tuple(r) for r in table),
                             dict(unit), tuple(names), name)

    def multiply(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            row = self.mult[i]
            for j, b in v.items():
                vec_axpy(out, a * b, row[j])
        return out

    def power(self, u: dict, n: int) -> dict:
        out = dict(self.unit)
        for _ in range(n):
            out = self.multiply(out, u)
        return out

    def basis_vec(self, i: int) -> dict:
        return {i: self.field_obj.one}

    def element(self, coeffs: dict) -> dict:
        f = self.field_obj
        return {i: f.of(c) for i, c in coeffs.items() if f.of(c)}

    def left_mult_map(self, u: dict) -> LinearMap:
        cols = tuple(self.multiply(u, self.basis_vec(j)) for j in range(self.dim))
        return LinearMap(self.dim, self.dim, cols)

    def right_mult_map(self, u: dict) -> LinearMap:
        cols = tuple(self.multiply(self.basis_vec(j), u) for j in range(self.dim))
        return LinearMap(self.dim, self.dim, cols)

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mult[i][j] != self.mult[j][i]:
                    return False
        return True

    def show(self, v: dict) -> str:
        """Render a vector against the basis names."""
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            c = self.field_obj.format(v[i])
            parts.append("%s*%s" % (c, self.basis_names[i]))
        return " + ".join(parts)


def check_algebra_axioms(A: FiniteAlgebra) -> Report:
    """Brute-force associativity and two-sided unit check."""
    rep = Report(title="algebra axioms: %s" % (A.name or "?"))
    bad = []
    for i, j, k in product(range(A.dim), repeat=3):
        left = A.multiply(A.mult[i][j], A.basis_vec(k))
        right = A.multiply(A.basis_vec(i), A.mult[j][k])
        if left != right:
            bad.append("(%s*%s)*%s != %s*(%s*%s)" % (
                A.basis_names[i], A.basis_names[j], A.basis_names[k],
                A.basis_names[i], A.basis_names[j], A.basis_names[k]))
    rep.record("ALG-ASSOC", bad)
    bad = []
    for i in range(A.dim):
        e = A.basis_vec(i)
        if A.multiply(A.unit, e) != e:
            bad.append("1*%s" % A.basis_names[i])
        if A.multiply(e, A.unit) != e:
            bad.append("%s*1" % A.basis_names[i])
    rep.record("ALG-UNIT", bad)
    return rep


def opposite(A: FiniteAlgebra) -> FiniteAlgebra:
    """Same space, reversed multiplication."""
    table = tuple(tuple(A.mult[j][i] for j in range(A.dim)) for i in range(A.dim))
    return FiniteAlgebra(A.field_obj, A.dim, table, dict(A.unit), A.basis_names,
                         name=(A.name + "^op") if A.name else "op")


def enveloping(A: FiniteAlgebra) -> FiniteAlgebra:
    """A (x) A^op with factorwise product, second factor reversed.

    Basis (i, j) is flattened as i * dim + j; names look like "a(x)b".
    """
    n = A.dim
    names = tuple("%s(x)%s" % (A.basis_names[i], A.basis_names[j])
                  for i in range(n) for j in range(n))
    table = [[{} for _ in range(n * n)] for _ in range(n * n)]
    for i1, j1 in product(range(n), repeat=2):
        for i2, j2 in product(range(n), repeat=2):
            left = A.mult[i1][i2]
            right = A.mult[j2][j1]  # opposite order in second factor
            out: dict = {}
            for p, c in left.items():
                for q, d in right.items():
                    out[p * n + q] = c * d
            table[i1 * n + j1][i2 * n + j2] = {k: v for k, v in out.items() if v}
    unit: dict = {}
    for p, c in A.unit.items():
        for q, d in A.unit.items():
            if c * d:
                unit[p * n + q] = c * d
    return FiniteAlgebra(A.field_obj, n * n, tuple(tuple(r) for r in table),
                         unit, names, name=(A.name + "^e") if A.name else "env")


def tensor_in_enveloping(A: FiniteAlgebra, a: dict, b: dict) -> dict:
    """The element a (x) b of the enveloping algebra."""
    n = A.dim
    out: dict = {}
    for p, c in a.items():
        for q, d in b.items():
            if c * d:
                out[p * n + q] = c * d
    return out


class AlgebraMap:
    """A unital algebra morphism, validated eagerly at construction."""

    def __init__(self, source: FiniteAlgebra, target: FiniteAlgebra,
                 linear_part: LinearMap, name: str = ""):
        if linear_part.domain_dim != source.dim or linear_part.codomain_dim != target.dim:
            raise ValueError("linear part has wrong shape for %s" % (name or "map"))
        self.source = source
        self.target = target
        self.linear_part = linear_part
        self.name = name
        self._validate()

    def _validate(self):
        f = self.linear_part
        if vec_sub(f.apply(self.source.unit), self.target.unit):
            raise ValueError("%s does not preserve the unit" % (self.name or "algebra map"))
        for i in range(self.source.dim):
            fi = f.cols[i]
            for j in range(self.source.dim):
                lhs = f.apply(self.source.mult[i][j])
                rhs = self.target.multiply(fi, f.cols[j])
                if vec_sub(lhs, rhs):
                    raise ValueError(
                        "%s is not multiplicative on (%s, %s)"
                        % (self.name or "algebra map",
                           self.source.basis_names[i], self.source.basis_names[j]))

    def apply(self, v: dict) -> dict:
        return self.linear_part.apply(v)

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        return AlgebraMap(other.source, self.target,
                          self.linear_part.compose(other.linear_part),
                          name="%s.%s" % (self.name, other.name))


@dataclass(frozen=True)
class AModuleAction:
    """An A-module structure on a k-vector space, one matrix per basis of A.

    side is "left"  (a.(b.m) = (ab).m) or "right" (m.(ab) = (m.a).b).
    """

    algebra: FiniteAlgebra
    side: str
    carrier_dim: int
    matrices: tuple  # LinearMap per A-basis index

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be left or right")
        if len(self.matrices) != self.algebra.dim:
            raise ValueError("need one matrix per basis element of A")

    def act(self, a: dict, m: dict) -> dict:
        out: dict = {}
        for i, c in a.items():
            vec_axpy(out, c, self.matrices[i].apply(m))
        return out

    def action_map(self, a: dict) -> LinearMap:
        out = LinearMap.zero(self.carrier_dim, self.carrier_dim)
        for i, c in a.items():
            out = out.add(self.matrices[i].scale(c))
        return out

    def check(self) -> list[str]:
        """Unitality and the (side-appropriate) associativity law."""
        A = self.algebra
        bad = []
        unit_map = self.action_map(A.unit)
        if unit_map != LinearMap.identity(self.carrier_dim, A.field_obj):
            bad.append("unit of A does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                prod = self.action_map(A.mult[i][j])
                if self.side == "left":
                    two = self.matrices[i].compose(self.matrices[j])
                else:
                    two = self.matrices[j].compose(self.matrices[i])
                if prod != two:
                    bad.append("action law fails on (%s, %s)"
                               % (A.basis_names[i], A.basis_names[j]))
        return bad


@dataclass(frozen=True)
class BimoduleStructure:
    """Commuting left and right A-actions on one carrier."""

    carrier_dim: int
    left_action: AModuleAction
    right_action: AModuleAction

    def __post_init__(self):
        if self.left_action.side != "left" or self.right_action.side != "right":
            raise ValueError("actions passed on the wrong sides")
        if (self.left_action.carrier_dim != self.carrier_dim
                or self.right_action.carrier_dim != self.carrier_dim):
            raise ValueError("carrier dimension mismatch")

    def check(self) -> Report:
        rep = Report(title="bimodule axioms")
        rep.record("BIMOD-LEFT", self.left_action.check())
        rep.record("BIMOD-RIGHT", self.right_action.check())
        bad = []
        for i, li in enumerate(self.left_action.matrices):
            for j, rj in enumerate(self.right_action.matrices):
                if li.compose(rj) != rj.compose(li):
                    bad.append("left %d and right %d do not commute" % (i, j))
        rep.record("BIMOD-COMMUTE", bad)
        return rep


def regular_bimodule(A: FiniteAlgebra) -> BimoduleStructure:
    """A acting on itself by multiplication on both sides."""
    left = AModuleAction(A, "left", A.dim,
                         tuple(A.left_mult_map(A.basis_vec(i)) for i in range(A.dim)))
    right = AModuleAction(A, "right", A.dim,
                          tuple(A.right_mult_map(A.basis_vec(i)) for i in range(A.dim)))
    return BimoduleStructure(A.dim, left, right)


def scalar_algebra(field_obj) -> FiniteAlgebra:
    """The ground field as a one-dimensional algebra."""
    one = field_obj.one
    return FiniteAlgebra(field_obj, 1, (({0: one},),), {0: one}, ("1",), name="k")
