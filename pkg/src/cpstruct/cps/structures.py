"""The operators P, J, Q on the quadruple bases, and structures derived from them.

On each quadruple ``(U, V, S, T)``::

    J: U -> V -> -U,  S -> T -> -S
    P: U <-> T,       V <-> S
    Q = J o P: U -> -S, V -> T, S -> -U, T -> V

The parametric family replaces ``U^1..U^{m-1}`` by an arbitrary basis
``Z^1..Z^{m-1}`` of their span and sends ``Z^j`` where the default sends
``U^j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import ConstructionError, DimensionError, DomainError, RankError
from ..exact.linalg import inverse, rank, sparse
from ..exact.scalars import Surd
from ..lie.algebra import LieAlgebraRep, realify
from ..lie.forms import SymForm, trace_form
from ..lie.nijenhuis import nijenhuis_failure
from ..lie.operators import EndoOp
from .basis import LabeledBasis

__all__ = [
    "CpsTriple",
    "HypercomplexTriple",
    "build_ops",
    "build_parametric",
    "orthonormal_z_basis",
    "complexify_cps",
    "extend_i_linear",
    "induce_hypercomplex",
]

ONE = Fraction(1)


@dataclass(frozen=True, eq=False)
class CpsTriple:
    P: EndoOp
    J: EndoOp
    Q: EndoOp

    @classmethod
    def from_pj(cls, P: EndoOp, J: EndoOp) -> "CpsTriple":
        return cls(P, J, J @ P)

    @property
    def dim(self) -> int:
        return self.P.dim

    def __eq__(self, other):
        if not isinstance(other, CpsTriple):
            return NotImplemented
        return self.P == other.P and self.J == other.J and self.Q == other.Q


@dataclass(frozen=True, eq=False)
class HypercomplexTriple:
    J1: EndoOp
    J2: EndoOp
    J3: EndoOp


def _quadruple_columns(basis: LabeledBasis):
    d = basis.dim
    P: list[dict] = [{} for _ in range(d)]
    J: list[dict] = [{} for _ in range(d)]
    for u, v, s, t in basis.quadruples():
        J[u], J[v], J[s], J[t] = {v: ONE}, {u: -ONE}, {t: ONE}, {s: -ONE}
        P[u], P[t], P[v], P[s] = {t: ONE}, {u: ONE}, {s: ONE}, {v: ONE}
    return P, J


def build_ops(basis: LabeledBasis) -> CpsTriple:
    P, J = _quadruple_columns(basis)
    return CpsTriple.from_pj(EndoOp(basis.dim, P), EndoOp(basis.dim, J))


def build_parametric(basis: LabeledBasis, z_basis: Sequence[Sequence]) -> CpsTriple:
    """The structure with ``J(Z^j) = V^j``, ``P(Z^j) = T^j`` for a basis Z of span{U^j}.

    ``z_basis`` holds coordinate vectors (length ``basis.dim``).  Entries may
    be rationals or surds.
    """
    if basis.algebra_kind == "sl_c_realified":
        raise DomainError("build the parametric structure on the real form, then complexify")
    m, d = basis.m, basis.dim
    singles = basis.single_quadruples()
    u_idx = [q[0] for q in singles]
    if len(z_basis) != m - 1:
        raise RankError(f"need {m - 1} vectors for a basis of the abelian subalgebra, got {len(z_basis)}")
    uset = set(u_idx)
    for z in z_basis:
        if len(z) != d:
            raise DimensionError(f"coordinate vector of length {len(z)}, expected {d}")
        stray = [a for a, x in enumerate(z) if x and a not in uset]
        if stray:
            raise DomainError(
                f"z-basis vector has components outside span{{U^j}} at {basis.labels[stray[0]]}"
            )
    # Z^j = sum_i M[j][i] U^i
    M = [[z[u] for u in u_idx] for z in z_basis]
    if rank([sparse(r) for r in M]) < m - 1:
        raise RankError("z-basis vectors are linearly dependent")
    Minv = inverse(M)
    P, J = _quadruple_columns(basis)
    for i, (u, _, _, _) in enumerate(singles):
        J[u] = {singles[j][1]: Minv[i][j] for j in range(m - 1) if Minv[i][j]}
        P[u] = {singles[j][3]: Minv[i][j] for j in range(m - 1) if Minv[i][j]}
    for j, (_, v, _, t) in enumerate(singles):
        J[v] = {u_idx[i]: -M[j][i] for i in range(m - 1) if M[j][i]}
        P[t] = {u_idx[i]: M[j][i] for i in range(m - 1) if M[j][i]}
    return CpsTriple.from_pj(EndoOp(d, P), EndoOp(d, J))


def orthonormal_z_basis(alg: LieAlgebraRep, basis: LabeledBasis, form: SymForm | None = None):
    """Gram-Schmidt on ``U^1..U^{m-1}``: a basis of their span with ``<Z^j, Z^k> = +-delta``.

    Norms are generally not rational squares, so coordinates are surds.
    The form must be definite on the span (it is for the trace form).
    """
    if form is None:
        form = trace_form(alg)
    d = alg.dim
    ws: list[dict] = []
    norms: list[Fraction] = []
    for q in basis.single_quadruples():
        w = {q[0]: ONE}
        u = dict(w)
        for wl, nl in zip(ws, norms):
            c = form.value(u, wl) / nl
            for k, v in wl.items():
                w[k] = w.get(k, 0) - c * v
        w = {k: v for k, v in w.items() if v}
        nw = form.value(w, w)
        if not nw or (norms and (nw > 0) != (norms[0] > 0)):
            raise DomainError("form is not definite on span{U^j}")
        ws.append(w)
        norms.append(nw)
    out = []
    for w, nw in zip(ws, norms):
        s = Surd.sqrt(abs(nw))
        out.append(tuple(w.get(a, Fraction(0)) / s for a in range(d)))
    return out


def extend_i_linear(op: EndoOp) -> EndoOp:
    """``op`` on X_1..X_d extended to X, iX by ``op(iX) = i op(X)``."""
    d = op.dim
    cols = list(op.columns) + [{k + d: v for k, v in c.items()} for c in op.columns]
    return EndoOp(2 * d, cols)


def complexify_cps(alg: LieAlgebraRep, cps: CpsTriple) -> tuple[LieAlgebraRep, CpsTriple]:
    if cps.dim != alg.dim:
        raise DimensionError("structure and algebra differ in dimension")
    real = realify(alg)
    ext = CpsTriple(extend_i_linear(cps.P), extend_i_linear(cps.J), extend_i_linear(cps.Q))
    return real, ext


def induce_hypercomplex(realified: LieAlgebraRep, cps: CpsTriple) -> HypercomplexTriple:
    """``J1 = J``, ``J2 = I o P``, ``J3 = J1 o J2`` with ``I`` the multiplication by i.

    Both the quaternion identities and integrability of all three are
    verified; a failure raises ``ConstructionError``.
    """
    i_op = realified.complex_structure
    if i_op is None:
        raise DomainError("algebra carries no complex structure; realify it first")
    if cps.dim != realified.dim:
        raise DimensionError("structure and algebra differ in dimension")
    if i_op @ cps.P != cps.P @ i_op or i_op @ cps.J != cps.J @ i_op:
        raise ConstructionError("P and J must commute with multiplication by i")
    j1 = cps.J
    j2 = i_op @ cps.P
    j3 = j1 @ j2
    minus_one = -EndoOp.identity(realified.dim)
    for name, op in (("J1", j1), ("J2", j2), ("J3", j3)):
        if op @ op != minus_one:
            raise ConstructionError(f"{name}^2 != -1")
    for (na, a), (nb, b) in ((("J1", j1), ("J2", j2)), (("J2", j2), ("J3", j3)), (("J3", j3), ("J1", j1))):
        if not (a @ b + b @ a).is_zero():
            raise ConstructionError(f"{na} and {nb} do not anticommute")
    for name, op in (("J1", j1), ("J2", j2), ("J3", j3)):
        bad = nijenhuis_failure(realified, op, -1)
        if bad is not None:
            raise ConstructionError(f"{name} is not integrable: N({bad[0]}, {bad[1]}) != 0")
    return HypercomplexTriple(j1, j2, j3)
