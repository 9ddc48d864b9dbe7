"""Finite dual bases for module actions of a base algebra.

A left module M over A is finitely generated projective exactly when a
free cover A^n -> M splits A-linearly.  Here the cover sends the i-th
free generator to the i-th k-basis vector of M, and the splitting is
found by exact linear solving; its components are the dual-basis
functionals e^i, satisfying

    m = sum_i  e^i(m) . e_i        (left modules,  e^i(a.m) = a e^i(m))
    m = sum_i  e_i . e^i(m)        (right modules, e^i(m.a) = e^i(m) a)

No attempt is made to minimize the number of generators; downstream
formulas only need the reconstruction identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AModuleAction, FiniteAlgebra
from .linalg import LinearMap, NoSolution, PreparedSolve


class NotFinitelyGeneratedProjective(ValueError):
    """The module admits no A-linear splitting of its free cover."""


@dataclass(frozen=True)
class DualBasisData:
    """Generators e_i of M with A-valued coordinate functionals e^i."""

    action: AModuleAction
    generators: tuple      # sparse vectors in M
    cogenerators: tuple    # LinearMaps M -> A, A-linear on the action side

    @property
    def size(self) -> int:
        return len(self.generators)


def module_dual_basis(action: AModuleAction) -> DualBasisData:
    """Dual bases for the module, or NotFinitelyGeneratedProjective."""
    A = action.algebra
    m_dim = action.carrier_dim
    a_dim = A.dim
    n = m_dim  # one generator per k-basis vector of M
    unknowns = n * m_dim * a_dim

    def var(i: int, c: int, r: int) -> int:
        # coefficient of A-basis r in e^i applied to M-basis c
        return (i * m_dim + c) * a_dim + r

    # constraint rows live in a stacked space: first the reconstruction
    # block (m_dim^2 rows), then one A-linearity block per (a, i, c)
    cols = [dict() for _ in range(unknowns)]
    row_base = 0

    # sum_i e^i(m_c) . e_i = m_c ; generator e_i is M-basis vector i
    rhs = {}
    for c in range(m_dim):
        for i in range(n):
            for r in range(a_dim):
                acted = action.matrices[r].cols[i]
                for t, coeff in acted.items():
                    key = row_base + c * m_dim + t
                    col = cols[var(i, c, r)]
                    s = col.get(key)
                    s = coeff if s is None else s + coeff
                    if s:
                        col[key] = s
                    else:
                        col.pop(key, None)
        rhs[row_base + c * m_dim + c] = A.field_obj.one
    row_base += m_dim * m_dim

    # e^i(a_k . m_c) = a_k * e^i(m_c)  (or reversed product on the right side)
    for k in range(a_dim):
        moved = action.matrices[k]  # action of A-basis k on M
        for i in range(n):
            for c in range(m_dim):
                for c2, coeff in moved.cols[c].items():
                    for r in range(a_dim):
                        col = cols[var(i, c2, r)]
                        key = row_base + r
                        s = col.get(key)
                        s = coeff if s is None else s + coeff
                        if s:
                            col[key] = s
                        else:
                            col.pop(key, None)
                for r in range(a_dim):
                    if action.side == "left":
                        prod = A.mult[k][r]
                    else:
                        prod = A.mult[r][k]
                    for t, coeff in prod.items():
                        col = cols[var(i, c, r)]
                        key = row_base + t
                        s = col.get(key)
                        s = (-coeff) if s is None else s - coeff
                        if s:
                            col[key] = s
                        else:
                            col.pop(key, None)
                row_base += a_dim

    system = LinearMap(unknowns, row_base, tuple(cols))
    try:
        sol = PreparedSolve(system).solve(rhs)
    except NoSolution:
        raise NotFinitelyGeneratedProjective(
            "no A-linear splitting of the free cover of rank %d" % n)

    gens = tuple({i: A.field_obj.one} for i in range(n))
    cogens = []
    for i in range(n):
        fcols = []
        for c in range(m_dim):
            fcols.append({r: sol[var(i, c, r)]
                          for r in range(a_dim) if sol.get(var(i, c, r))})
        cogens.append(LinearMap(m_dim, a_dim, tuple(fcols)))
    return DualBasisData(action, gens, tuple(cogens))


def check_dual_basis(data: DualBasisData) -> list:
    """Violations of A-linearity or of the reconstruction identity."""
    action = data.action
    A = action.algebra
    bad = []
    for i, cg in enumerate(data.cogenerators):
        for k in range(A.dim):
            a = A.basis_vec(k)
            for c in range(action.carrier_dim):
                m = {c: A.field_obj.one}
                lhs = cg.apply(action.act(a, m))
                if action.side == "left":
                    rhs = A.multiply(a, cg.apply(m))
                else:
                    rhs = A.multiply(cg.apply(m), a)
                if lhs != rhs:
                    bad.append("functional %d is not A-linear at (%s, basis %d)"
                               % (i, A.basis_names[k], c))
    for c in range(action.carrier_dim):
        m = {c: A.field_obj.one}
        total = {}
        for gen, cg in zip(data.generators, data.cogenerators):
            piece = action.act(cg.apply(m), gen)
            for t, coeff in piece.items():
                s = total.get(t)
                s = coeff if s is None else s + coeff
                if s:
                    total[t] = s
                else:
                    total.pop(t, None)
        if total != m:
            bad.append("reconstruction fails on basis %d" % c)
    return bad
