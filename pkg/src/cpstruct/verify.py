"""Exact pass/fail checks for complex product structures.

Every check returns a :class:`CheckReport`.  A failing report always
carries a witness: the offending basis indices plus the exact nonzero
residual, so the failure can be re-derived by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cps.basis import LabeledBasis, build_basis, is_in_su
from .cps.strips import middle_block_algebra, outer_chain, peel_outer, strip_subspace
from .cps.structures import CpsTriple, induce_hypercomplex
from .errors import CpsError
from .exact.linalg import axpy, dense, kernel, rank, sparse
from .exact.scalars import format_scalar
from .lie.algebra import LieAlgebraRep, subalgebra_witness
from .lie.forms import SymForm, signature
from .lie.nijenhuis import nijenhuis_failure
from .lie.operators import EndoOp
from .lie.subspace import Subspace

__all__ = [
    "CheckReport",
    "check_involutions",
    "nijenhuis_P",
    "nijenhuis_J",
    "eigenspace",
    "kernel_of",
    "check_eigen_subalgebras",
    "check_compatibility",
    "check_module_decomposition",
    "quadruple_subspaces",
    "check_z_equivariance",
    "check_dimension",
    "check_embeddings",
    "check_hypercomplex",
    "isotropic",
]


@dataclass
class CheckReport:
    check_name: str
    algebra: str
    m: int | None
    passed: bool
    witness: dict | None = None
    facts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"check": self.check_name, "algebra": self.algebra, "m": self.m, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.facts:
            out["facts"] = self.facts
        return out


def _strings(vec: dict, dim: int) -> list[str]:
    return [format_scalar(x) for x in dense(vec, dim)]


def _ctx(alg: LieAlgebraRep | None, algebra: str, m):
    if alg is not None:
        return algebra or alg.name, alg.m if m is None else m
    return algebra, m


# --- operator identities ---------------------------------------------------

def check_involutions(cps: CpsTriple, *, algebra: str = "", m: int | None = None) -> CheckReport:
    """``P^2 = Q^2 = -J^2 = 1`` and the six product rules among P, J, Q."""
    P, J, Q = cps.P, cps.J, cps.Q
    one = EndoOp.identity(cps.dim)
    relations = [
        ("P^2 = 1", P @ P, one),
        ("J^2 = -1", J @ J, -one),
        ("PJ = -JP", P @ J, -(J @ P)),
        ("JP = Q", J @ P, Q),
        ("Q^2 = 1", Q @ Q, one),
        ("PJ = -Q", P @ J, -Q),
        ("QP = J", Q @ P, J),
        ("PQ = -J", P @ Q, -J),
        ("QJ = P", Q @ J, P),
        ("JQ = -P", J @ Q, -P),
    ]
    facts = {"trace_P": format_scalar(P.trace()), "trace_Q": format_scalar(Q.trace())}
    for name, lhs, rhs in relations:
        diff = lhs - rhs
        a = diff.first_nonzero_column()
        if a is not None:
            witness = {"relation": name, "column": a, "residual": _strings(diff.column(a), cps.dim)}
            return CheckReport("involutions", algebra, m, False, witness, facts)
    if P.trace() or Q.trace():
        witness = {"relation": "tr P = tr Q = 0", "column": None,
                   "residual": [facts["trace_P"], facts["trace_Q"]]}
        return CheckReport("involutions", algebra, m, False, witness, facts)
    facts["relations_checked"] = len(relations)
    return CheckReport("involutions", algebra, m, True, None, facts)


def _nijenhuis_report(name, alg, op, sign, algebra, m) -> CheckReport:
    algebra, m = _ctx(alg, algebra, m)
    facts = {"pairs_checked": alg.dim * (alg.dim - 1) // 2}
    bad = nijenhuis_failure(alg, op, sign)
    if bad is None:
        return CheckReport(name, algebra, m, True, None, facts)
    a, b, res = bad
    witness = {"pair": [a, b], "residual": _strings(res, alg.dim)}
    if alg.labels:
        witness["labels"] = [alg.labels[a], alg.labels[b]]
    return CheckReport(name, algebra, m, False, witness, facts)


def nijenhuis_P(alg: LieAlgebraRep, P: EndoOp, *, name: str = "nijenhuis_P",
                algebra: str = "", m: int | None = None) -> CheckReport:
    """``[PX,PY] + [X,Y] - P[PX,Y] - P[X,PY] = 0`` on all basis pairs."""
    return _nijenhuis_report(name, alg, P, 1, algebra, m)


def nijenhuis_J(alg: LieAlgebraRep, J: EndoOp, *, name: str = "nijenhuis_J",
                algebra: str = "", m: int | None = None) -> CheckReport:
    """``[JX,JY] - [X,Y] - J[JX,Y] - J[X,JY] = 0`` on all basis pairs."""
    return _nijenhuis_report(name, alg, J, -1, algebra, m)


# --- eigenspaces -----------------------------------------------------------

def kernel_of(op: EndoOp) -> Subspace:
    rows: list[dict] = [{} for _ in range(op.dim)]
    for j, col in enumerate(op.columns):
        for i, v in col.items():
            rows[i][j] = v
    return Subspace(op.dim, kernel(rows, op.dim))


def eigenspace(op: EndoOp, eigenvalue) -> Subspace:
    return kernel_of(op - EndoOp.identity(op.dim) * eigenvalue)


def check_eigen_subalgebras(alg: LieAlgebraRep, cps: CpsTriple, *, algebra: str = "",
                            m: int | None = None) -> CheckReport:
    """P+-, Q+- are subalgebras of half dimension and J(P+) = P-.

    On a realified algebra (one carrying multiplication by i, written I)
    the +-i eigenspaces of the i-linear J are ker(J - I) and ker(J + I);
    these must be subalgebras as well.
    """
    algebra, m = _ctx(alg, algebra, m)
    spaces = {
        "P+": eigenspace(cps.P, 1),
        "P-": eigenspace(cps.P, -1),
        "Q+": eigenspace(cps.Q, 1),
        "Q-": eigenspace(cps.Q, -1),
    }
    i_op = alg.complex_structure
    if i_op is not None:
        spaces["J+i"] = kernel_of(cps.J - i_op)
        spaces["J-i"] = kernel_of(cps.J + i_op)
    facts = {"dims": {k: s.dim for k, s in spaces.items()}}
    half = alg.dim // 2
    for name, s in spaces.items():
        if s.dim * 2 != alg.dim:
            witness = {"subspace": name, "dim": s.dim, "expected": half, "residual": None}
            return CheckReport("eigen_subalgebras", algebra, m, False, witness, facts)
    for name, s in spaces.items():
        bad = subalgebra_witness(alg, s)
        if bad is not None:
            i, j, res = bad
            witness = {"subspace": name, "generators": [i, j], "residual": _strings(res, alg.dim)}
            return CheckReport("eigen_subalgebras", algebra, m, False, witness, facts)
    swap = spaces["P+"].image(cps.J) == spaces["P-"]
    facts["J(P+) = P-"] = swap
    if not swap:
        gen = next(r for r in spaces["P+"].rows if not spaces["P-"].contains(cps.J.apply(r)))
        res = spaces["P-"].residual(cps.J.apply(gen))
        witness = {"subspace": "J(P+)", "residual": _strings(res, alg.dim)}
        return CheckReport("eigen_subalgebras", algebra, m, False, witness, facts)
    return CheckReport("eigen_subalgebras", algebra, m, True, None, facts)


# --- metric ----------------------------------------------------------------

def isotropic(form: SymForm, s: Subspace) -> bool:
    rows = s.rows
    return all(not form.value(u, v) for i, u in enumerate(rows) for v in rows[i:])


def check_compatibility(form: SymForm, cps: CpsTriple, *, name: str = "compatibility",
                        algebra: str = "", m: int | None = None) -> CheckReport:
    """``g(JX, JY) = g(X, Y)`` and ``g(PX, PY) = -g(X, Y)`` on all basis pairs."""
    if form.dim != cps.dim:
        raise ValueError("form and structure differ in dimension")
    pos, neg, null = signature(form)
    facts = {"signature": [pos, neg, null], "neutral": pos == neg and null == 0}
    P, J = cps.P, cps.J
    for a in range(form.dim):
        for b in range(a, form.dim):
            g = form.gram[a][b]
            for rel, op, sgn in (("g(JX,JY) = g(X,Y)", J, 1), ("g(PX,PY) = -g(X,Y)", P, -1)):
                diff = form.value(op.column(a), op.column(b)) - sgn * g
                if diff:
                    witness = {"relation": rel, "pair": [a, b], "residual": [format_scalar(diff)]}
                    return CheckReport(name, algebra, m, False, witness, facts)
    facts["isotropic_P+"] = isotropic(form, eigenspace(P, 1))
    facts["isotropic_P-"] = isotropic(form, eigenspace(P, -1))
    return CheckReport(name, algebra, m, True, None, facts)


# --- quadruple decomposition -----------------------------------------------

def _generated_algebra_dim(blocks: Sequence[list[list]]) -> int:
    """Dimension of the associative algebra generated by 1 and the blocks."""
    k = len(blocks[0])

    def flat(a):
        return {i * k + j: a[i][j] for i in range(k) for j in range(k) if a[i][j]}

    def mul(a, b):
        return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(k)]
                for i in range(k)]

    ident = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    elems = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in blocks:
                y = mul(g, x)
                if rank([flat(e) for e in elems + [y]]) > len(elems):
                    elems.append(y)
                    new.append(y)
        frontier = new
    return len(elems)


def _cyclic_span(x: dict, ops: Sequence[EndoOp], dim: int) -> Subspace:
    s = Subspace(dim, [x])
    while True:
        grown = Subspace(dim, s.rows + [op.apply(r) for op in ops for r in s.rows])
        if grown.dim == s.dim:
            return s
        s = grown


def _restrict(op: EndoOp, w: Subspace) -> list[list]:
    """Matrix of ``op`` on an invariant ``w`` in its echelon basis."""
    images = [op.apply(r) for r in w.rows]
    return [[img.get(p, Fraction(0)) for img in images] for p in w.pivots]


def quadruple_subspaces(basis: LabeledBasis, z_vectors: Sequence | None = None):
    """``(labels, span)`` per quadruple; ``U^j`` is replaced by ``Z^j`` when given.

    On a realified basis the copies ``iU^j`` are replaced by ``iZ^j``.
    """
    d = basis.dim
    realified = basis.algebra_kind == "sl_c_realified"
    half_d, half_q = (d // 2, d // 8) if realified else (d, d // 4)
    out = []
    for qi, q in enumerate(basis.quadruples()):
        vecs = [{a: 1} for a in q]
        local = qi % half_q
        if z_vectors is not None and local < basis.m - 1:
            z = z_vectors[local]
            z = z if isinstance(z, dict) else sparse(z)
            shift = half_d if qi >= half_q else 0
            vecs[0] = {a + shift: v for a, v in z.items()}
        out.append(([basis.labels[a] for a in q], Subspace(d, vecs)))
    return out


def check_module_decomposition(basis: LabeledBasis, cps: CpsTriple, *,
                               z_vectors: Sequence | None = None, algebra: str = "",
                               m: int | None = None) -> CheckReport:
    """Each label quadruple spans a {P, J, Q}-invariant, irreducible subspace.

    For a parametric structure pass its ``z_vectors``: the quadruples are
    then ``(Z^j, V^j, S^j, T^j)``.  Any invariant subspace is P-stable,
    hence contains a vector x of the +1 eigenspace of P; it then contains
    the cyclic module generated by x.  Irreducibility therefore holds
    exactly when the cyclic module of every basis vector of that
    eigenspace is the whole quadruple, and a smaller cyclic module is an
    explicit invariant subspace.
    """
    algebra = algebra or basis.algebra_kind
    m = basis.m if m is None else m
    d = basis.dim
    ops = (cps.P, cps.J, cps.Q)
    quads = quadruple_subspaces(basis, z_vectors)
    facts = {"quadruples": len(quads)}
    total = Subspace(d, [r for _, w in quads for r in w.rows])
    partition = total.dim == d == sum(w.dim for _, w in quads)
    facts["partition"] = partition
    alg_dims = set()
    witness = None
    for labels, w in quads:
        for op, nm in zip(ops, "PJQ"):
            for r in w.rows:
                res = w.residual(op.apply(r))
                if res:
                    facts["invariant"] = False
                    witness = {"quadruple": labels, "operator": nm, "residual": _strings(res, d)}
                    return CheckReport("module_decomposition", algebra, m, False, witness, facts)
        blocks = [_restrict(op, w) for op in ops]
        alg_dims.add(_generated_algebra_dim(blocks))
        if witness is None:
            k = w.dim
            p_minus_1 = [[blocks[0][i][j] - (1 if i == j else 0) for j in range(k)] for i in range(k)]
            for c in kernel([sparse(r) for r in p_minus_1], k):
                x: dict = {}
                for t, ct in c.items():
                    axpy(x, ct, w.rows[t])
                cyc = _cyclic_span(x, ops, d)
                if cyc.dim < w.dim:
                    outside = next(r for r in w.rows if not cyc.contains(r))
                    witness = {
                        "quadruple": labels,
                        "invariant_subspace": [_strings(r, d) for r in cyc.rows],
                        "residual": _strings(cyc.residual(outside), d),
                    }
                    break
    irreducible = witness is None
    facts["invariant"] = True
    facts["generated_algebra_dims"] = sorted(alg_dims)
    facts["irreducible"] = irreducible
    if not partition and witness is None:
        witness = {"reason": "quadruple spans do not partition the algebra", "residual": None}
    return CheckReport("module_decomposition", algebra, m, partition and irreducible, witness, facts)


# --- further structural checks ---------------------------------------------

def check_z_equivariance(alg: LieAlgebraRep, cps: CpsTriple, z_vectors: Sequence, *,
                         algebra: str = "", m: int | None = None) -> CheckReport:
    """``[Z, JX] = J[Z, X]`` and ``[Z, PX] = P[Z, X]`` for Z in the given vectors."""
    algebra, m = _ctx(alg, algebra, m)
    for zi, z in enumerate(z_vectors):
        zd = z if isinstance(z, dict) else sparse(z)
        for b in range(alg.dim):
            e = {b: 1}
            zx = alg.bracket(zd, e)
            for nm, op in (("J", cps.J), ("P", cps.P)):
                diff = alg.bracket(zd, op.column(b))
                axpy(diff, -1, op.apply(zx))
                if diff:
                    witness = {"relation": f"[Z,{nm}X] = {nm}[Z,X]", "z": zi, "basis": b,
                               "residual": _strings(diff, alg.dim)}
                    return CheckReport("z_equivariance", algebra, m, False, witness)
    return CheckReport("z_equivariance", algebra, m, True, None, {"z_vectors": len(z_vectors)})


def check_dimension(basis: LabeledBasis, *, algebra: str = "") -> CheckReport:
    """Basis size ``4m^2 - 4m`` (doubled when realified), traceless, independent, closed."""
    m = basis.m
    algebra = algebra or basis.algebra_kind
    expected = 4 * m * m - 4 * m
    if basis.algebra_kind == "sl_c_realified":
        expected *= 2
    facts = {"expected": expected, "size": basis.dim}
    bad = next((lab for lab, x in basis.entries if x.trace()), None)
    if bad is not None:
        return CheckReport("dimension", algebra, m, False, {"label": bad, "residual": None}, facts)
    if basis.algebra_kind == "su_pq":
        bad = next((lab for lab, x in basis.entries if not is_in_su(x, m)), None)
        if bad is not None:
            return CheckReport("dimension", algebra, m, False,
                               {"label": bad, "reason": "not in su(m, m-1)", "residual": None}, facts)
    try:
        alg = basis.algebra()
    except CpsError as exc:
        return CheckReport("dimension", algebra, m, False,
                           {"error": type(exc).__name__, "message": str(exc), "residual": None}, facts)
    facts["dim"] = alg.dim
    passed = alg.dim == basis.dim == expected
    witness = None if passed else {"reason": "size mismatch", "residual": None}
    return CheckReport("dimension", algebra, m, passed, witness, facts)


def check_embeddings(basis: LabeledBasis, alg: LieAlgebraRep, cps: CpsTriple, *,
                     algebra: str = "") -> CheckReport:
    """Outer-strip chain and middle-strip subspaces are closed and (P, J)-invariant.

    The middle cross (its complement) must be (P, J)-invariant of dim 4m - 4.

    Meant for the default structure: a z-basis that mixes the ``U^j``
    does not preserve the outer strips.

    Each outer level, with the stripped rows and columns deleted, must be
    exactly the basis built for the smaller ``m``.
    """
    algebra = algebra or basis.algebra_kind
    m = basis.m
    levels = [("outer", depth, s) for depth, s in enumerate(outer_chain(basis), start=1)]
    levels.append(("middle", 0, strip_subspace(basis, "middle")))
    levels.append(("cross", 0, strip_subspace(basis, "cross")))
    facts = {"levels": []}
    for mode, depth, s in levels:
        closed = subalgebra_witness(alg, s) if mode != "cross" else None
        inv = s.is_invariant(cps.P) and s.is_invariant(cps.J)
        info = {"mode": mode, "depth": depth, "dim": s.dim, "closed": closed is None, "invariant": inv}
        if mode == "cross":
            info["closed"] = None
            info["matches_smaller_m"] = s.dim == 4 * m - 4
        elif mode == "outer":
            peeled = peel_outer(basis, depth)
            info["matches_smaller_m"] = peeled.entries == build_basis(basis.algebra_kind, m - depth).entries
        else:
            sub = middle_block_algebra(basis)
            info["block_algebra"] = sub.name
            info["block_dim"] = sub.dim
            info["matches_smaller_m"] = sub.dim == 4 * (m - 1) ** 2
        facts["levels"].append(info)
        if closed is not None or not inv or not info["matches_smaller_m"]:
            reason = "not closed" if closed is not None else (
                "not (P, J)-invariant" if not inv else "unexpected dimension or block algebra")
            witness = {"mode": mode, "depth": depth, "reason": reason, "residual": None}
            if closed is not None:
                witness["generators"] = [closed[0], closed[1]]
                witness["residual"] = _strings(closed[2], alg.dim)
            return CheckReport("embeddings", algebra, m, False, witness, facts)
    return CheckReport("embeddings", algebra, m, True, None, facts)


def check_hypercomplex(realified: LieAlgebraRep, cps: CpsTriple, *, algebra: str = "",
                       m: int | None = None) -> CheckReport:
    algebra, m = _ctx(realified, algebra, m)
    try:
        induce_hypercomplex(realified, cps)
    except CpsError as exc:
        return CheckReport("hypercomplex", algebra, m, False,
                           {"error": type(exc).__name__, "message": str(exc), "residual": None})
    return CheckReport("hypercomplex", algebra, m, True, None,
                       {"quaternion_relations": True, "integrable": ["J1", "J2", "J3"]})
