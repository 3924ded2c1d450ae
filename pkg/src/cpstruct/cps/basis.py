"""Labeled bases of sl(2m-1, R) and su(m, m-1) adapted to the quadruple structure.

Every basis comes in label quadruples ``(U, V, S, T)``: first the
single-index ones for ``j = 1..m-1``, then the double-index ones for
``(j, k)`` in lexicographic order over ``1 <= j <= m-1``, ``j < k < 2m-j``.
``E(r, c)`` below is the matrix unit with a 1 in row ``r``, column ``c``
(1-based).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import DomainError
from ..exact.matn import MatN, elementary
from ..exact.scalars import GaussRational
from ..lie.algebra import LieAlgebraRep, attach_complex_structure, build_algebra

__all__ = [
    "LabeledBasis",
    "FAMILIES",
    "build_basis",
    "build_basis_sl",
    "build_basis_su",
    "index_pairs",
    "label",
    "parse_label",
    "realified_basis",
    "su_hermitian_form",
    "is_in_su",
]

FAMILIES = ("U", "V", "S", "T")
KINDS = ("sl_real", "su_pq", "sl_c_realified")

_I = GaussRational(0, 1)
_LABEL_RE = re.compile(r"^(i?)([UVST])(?:_(\d+))?\^(\d+)$")


def label(family: str, j: int, k: int | None = None) -> str:
    """``U^j`` for single-index labels, ``U_j^k`` for double-index ones."""
    return f"{family}^{j}" if k is None else f"{family}_{j}^{k}"


def parse_label(text: str) -> tuple[bool, str, int, int | None]:
    """Split a label into ``(imaginary_copy, family, j, k)``."""
    m = _LABEL_RE.match(text)
    if not m:
        raise DomainError(f"malformed label {text!r}")
    imag, fam, sub, sup = m.groups()
    if sub is None:
        return bool(imag), fam, int(sup), None
    return bool(imag), fam, int(sub), int(sup)


def index_pairs(m: int) -> list[tuple[int, int]]:
    """All ``(j, k)`` with ``1 <= j <= m-1`` and ``j < k < 2m-j``."""
    return [(j, k) for j in range(1, m) for k in range(j + 1, 2 * m - j)]


@dataclass(frozen=True)
class LabeledBasis:
    m: int
    algebra_kind: str
    entries: tuple[tuple[str, MatN], ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.entries)

    @property
    def matrices(self) -> tuple[MatN, ...]:
        return tuple(x for _, x in self.entries)

    @property
    def n(self) -> int:
        return self.entries[0][1].n

    @property
    def dim(self) -> int:
        return len(self.entries)

    def index(self, lab: str) -> int:
        return self.labels.index(lab)

    def quadruples(self) -> list[tuple[int, int, int, int]]:
        """Index quadruples ``(U, V, S, T)`` in basis order."""
        return [tuple(range(q, q + 4)) for q in range(0, self.dim, 4)]

    def single_quadruples(self) -> list[tuple[int, int, int, int]]:
        """Quadruples of the single-index labels ``U^j, V^j, S^j, T^j`` (real block only)."""
        return self.quadruples()[: self.m - 1]

    def algebra(self) -> LieAlgebraRep:
        """Build (and verify) the Lie algebra spanned by the basis."""
        name = {"sl_c_realified": "sl_complex_realified"}.get(self.algebra_kind, self.algebra_kind)
        alg = build_algebra(name, self.matrices, labels=self.labels, m=self.m)
        if self.algebra_kind == "sl_c_realified":
            attach_complex_structure(alg)
        return alg


def _check_m(m: int):
    if not isinstance(m, int) or m < 2:
        raise DomainError(f"m must be an integer >= 2, got {m!r}")


def build_basis_sl(m: int) -> LabeledBasis:
    """The quadruple basis of sl(2m-1, R)."""
    _check_m(m)
    n = 2 * m - 1

    def E(r, c):
        return elementary(n, r, c)

    out = []
    for j in range(1, m):
        jb = 2 * m - j
        out += [
            (label("U", j), E(j, j) + E(jb, jb) - E(m, m) * 2),
            (label("V", j), E(j, jb) - E(jb, j)),
            (label("S", j), E(j, jb) + E(jb, j)),
            (label("T", j), E(j, j) - E(jb, jb)),
        ]
    for j, k in index_pairs(m):
        jb = 2 * m - j
        out += [
            (label("U", j, k), E(j, k) - E(k, j)),
            (label("V", j, k), E(k, jb) - E(jb, k)),
            (label("S", j, k), E(k, jb) + E(jb, k)),
            (label("T", j, k), E(j, k) + E(k, j)),
        ]
    return LabeledBasis(m, "sl_real", tuple(out))


def build_basis_su(m: int) -> LabeledBasis:
    """The quadruple basis of su(m, m-1), for the form diag(I_m, -I_{m-1})."""
    _check_m(m)
    n = 2 * m - 1

    def E(r, c):
        return elementary(n, r, c)

    out = []
    for j in range(1, m):
        jb = 2 * m - j
        out += [
            (label("U", j), (E(j, j) + E(jb, jb) - E(m, m) * 2) * _I),
            (label("V", j), (E(j, j) - E(jb, jb)) * _I),
            (label("S", j), E(j, jb) + E(jb, j)),
            (label("T", j), (E(j, jb) - E(jb, j)) * _I),
        ]
    for j, k in index_pairs(m):
        jb = 2 * m - j
        if k <= m:
            quad = [
                E(j, k) - E(k, j),
                (E(j, k) + E(k, j)) * _I,
                E(k, jb) + E(jb, k),
                (E(k, jb) - E(jb, k)) * _I,
            ]
        else:
            quad = [
                E(k, jb) - E(jb, k),
                (E(k, jb) + E(jb, k)) * _I,
                -(E(j, k) + E(k, j)),
                (E(k, j) - E(j, k)) * _I,
            ]
        out += [(label(f, j, k), x) for f, x in zip(FAMILIES, quad)]
    return LabeledBasis(m, "su_pq", tuple(out))


def build_basis(kind: str, m: int) -> LabeledBasis:
    if kind == "sl_real":
        return build_basis_sl(m)
    if kind == "su_pq":
        return build_basis_su(m)
    if kind == "sl_c_realified":
        return realified_basis(build_basis_su(m))
    raise DomainError(f"unknown algebra kind {kind!r}")


def realified_basis(basis: LabeledBasis) -> LabeledBasis:
    """Append ``iX`` for every entry, in the same order, labels prefixed by ``i``."""
    if basis.algebra_kind == "sl_c_realified":
        raise DomainError("basis is already realified")
    doubled = basis.entries + tuple(("i" + lab, x * _I) for lab, x in basis.entries)
    return LabeledBasis(basis.m, "sl_c_realified", doubled)


def su_hermitian_form(m: int) -> MatN:
    """``F = diag(I_m, -I_{m-1})``."""
    n = 2 * m - 1
    return MatN.from_entries(n, {(i, i): 1 if i < m else -1 for i in range(n)})


def is_in_su(x: MatN, m: int) -> bool:
    """Traceless and ``X^* F + F X = 0`` for ``F = diag(I_m, -I_{m-1})``."""
    f = su_hermitian_form(m)
    return not x.trace() and (x.conj_transpose() @ f + f @ x).is_zero()
