"""JSON fixtures: a labeled basis plus the operators P, J, Q.

Layout (keys in this order)::

    {"name", "kind", "n", "m", "dim", "labels", "basis", "P", "J", "Q"}

``basis`` holds one row-major list of canonical scalar strings per basis
element; ``P``, ``J``, ``Q`` are ``dim x dim`` arrays of strings with
``M[i][j]`` the coefficient of ``e_i`` in ``op(e_j)``.  Output is
byte-deterministic for equal inputs.
"""

from __future__ import annotations

import json
from pathlib import Path

from .cps.basis import KINDS, LabeledBasis
from .cps.structures import CpsTriple
from .errors import DimensionError, DomainError
from .exact.linalg import sparse
from .exact.matn import MatN
from .exact.scalars import format_scalar, parse_scalar
from .lie.algebra import LieAlgebraRep
from .lie.operators import EndoOp

__all__ = ["fixture_dict", "dumps_fixture", "dump_fixture", "loads_fixture", "load_fixture"]

_ALGEBRA_NAME = {"sl_real": "sl_real", "su_pq": "su_pq", "sl_c_realified": "sl_complex_realified"}


def _op_strings(op: EndoOp) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in op.mat]


def fixture_dict(basis: LabeledBasis, cps: CpsTriple | None = None) -> dict:
    out = {
        "name": _ALGEBRA_NAME[basis.algebra_kind],
        "kind": basis.algebra_kind,
        "n": basis.n,
        "m": basis.m,
        "dim": basis.dim,
        "labels": list(basis.labels),
        "basis": [x.to_strings() for x in basis.matrices],
    }
    if cps is not None:
        if cps.dim != basis.dim:
            raise DimensionError("structure and basis differ in dimension")
        out.update(P=_op_strings(cps.P), J=_op_strings(cps.J), Q=_op_strings(cps.Q))
    return out


def dumps_fixture(basis: LabeledBasis, cps: CpsTriple | None = None) -> str:
    return json.dumps(fixture_dict(basis, cps), indent=1, ensure_ascii=True) + "\n"


def dump_fixture(path: str | Path, basis: LabeledBasis, cps: CpsTriple | None = None) -> Path:
    path = Path(path)
    path.write_text(dumps_fixture(basis, cps), encoding="ascii")
    return path


def _op_from(rows: list[list[str]], dim: int) -> EndoOp:
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise DimensionError(f"operator must be {dim}x{dim}")
    mat = [[parse_scalar(s) for s in r] for r in rows]
    return EndoOp(dim, [sparse([mat[i][j] for i in range(dim)]) for j in range(dim)])


def loads_fixture(text: str) -> tuple[LabeledBasis, LieAlgebraRep, CpsTriple | None]:
    """Parse a fixture and rebuild (closure and rank are re-verified)."""
    data = json.loads(text)
    kind = data.get("kind")
    if kind not in KINDS:
        raise DomainError(f"unknown algebra kind {kind!r}")
    n, m, dim = data["n"], data["m"], data["dim"]
    labels, mats = data["labels"], data["basis"]
    if len(labels) != dim or len(mats) != dim:
        raise DimensionError("labels/basis length does not match dim")
    entries = tuple((lab, MatN.from_strings(n, items)) for lab, items in zip(labels, mats))
    basis = LabeledBasis(m, kind, entries)
    alg = basis.algebra()
    cps = None
    if "P" in data:
        cps = CpsTriple(_op_from(data["P"], dim), _op_from(data["J"], dim), _op_from(data["Q"], dim))
    return basis, alg, cps


def load_fixture(path: str | Path):
    return loads_fixture(Path(path).read_text(encoding="ascii"))
