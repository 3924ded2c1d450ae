"""Curvature of biinvariant metrics on semisimple Lie algebras.

For a biinvariant metric the Levi-Civita connection on left-invariant
fields is ``nabla_X Y = [X, Y] / 2`` and, with the convention
``R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z``,

    R(X, Y) Z = -[[X, Y], Z] / 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NotEinsteinError
from .exact.linalg import axpy, dense, scaled
from .lie.algebra import LieAlgebraRep
from .lie.forms import SymForm, killing_form, signature
from .verify import CheckReport

__all__ = [
    "CurvatureTensor",
    "curvature_biinvariant",
    "ricci_biinvariant",
    "einstein_constant",
    "nonflat_witness",
    "check_einstein",
    "metric_compatibility_failure",
    "bianchi_failure",
]

QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class CurvatureTensor:
    """``R(e_a, e_b) e_c`` as sparse vectors, keyed by ``(a, b, c)``; absent means zero."""

    dim: int
    R: dict

    def apply(self, a: int, b: int, c: int) -> dict:
        return self.R.get((a, b, c), {})

    def component(self, a: int, b: int, c: int, d: int):
        return self.R.get((a, b, c), {}).get(d, Fraction(0))

    def vector(self, a: int, b: int, c: int) -> tuple:
        return dense(self.apply(a, b, c), self.dim)

    def is_zero(self) -> bool:
        return not self.R


def _require_semisimple(alg: LieAlgebraRep, killing: SymForm | None) -> SymForm:
    b = killing if killing is not None else killing_form(alg)
    if signature(b)[2]:
        raise DomainError(f"Killing form of {alg.name} is degenerate; the algebra is not semisimple")
    return b


def curvature_biinvariant(alg: LieAlgebraRep, killing: SymForm | None = None, *,
                          require_semisimple: bool = True) -> CurvatureTensor:
    """``R(e_a, e_b) e_c = -[[e_a, e_b], e_c] / 4``.

    The Killing form must be nondegenerate unless ``require_semisimple`` is
    off (any metric on an abelian algebra is biinvariant, for instance).
    """
    if require_semisimple:
        _require_semisimple(alg, killing)
    d = alg.dim
    R = {}
    for a in range(d):
        for b in range(a + 1, d):
            ab = alg.bracket_basis(a, b)
            if not ab:
                continue
            for c in range(d):
                v = alg.bracket(ab, {c: 1})
                if v:
                    v = scaled(v, -QUARTER)
                    R[(a, b, c)] = v
                    R[(b, a, c)] = scaled(v, -1)
    return CurvatureTensor(d, R)


def ricci_biinvariant(alg: LieAlgebraRep, curvature: CurvatureTensor | None = None) -> SymForm:
    """``Ric(X, Y) = tr(Z -> R(Z, X) Y)``, computed from the curvature tensor."""
    if curvature is None:
        curvature = curvature_biinvariant(alg)
    d = alg.dim
    gram = [[Fraction(0)] * d for _ in range(d)]
    for x in range(d):
        for y in range(x, d):
            acc = Fraction(0)
            for z in range(d):
                v = curvature.R.get((z, x, y))
                if v:
                    acc += v.get(z, 0)
            gram[x][y] = gram[y][x] = acc
    return SymForm(gram)


def einstein_constant(alg: LieAlgebraRep, metric: SymForm, ricci: SymForm | None = None) -> Fraction:
    """``lam`` with ``Ric = lam * metric`` exactly; ``NotEinsteinError`` otherwise."""
    if signature(metric)[2]:
        raise DomainError("metric is degenerate")
    if ricci is None:
        ricci = ricci_biinvariant(alg)
    lam = ricci.ratio_to(metric)
    if lam is None:
        raise NotEinsteinError(f"Ricci form of {alg.name} is not proportional to the metric")
    return lam


def nonflat_witness(curvature: CurvatureTensor):
    """First ``(a, b, c)`` (lexicographic) with ``R(e_a, e_b) e_c != 0``, or ``None``."""
    if not curvature.R:
        return None
    return min(curvature.R)


def check_einstein(alg: LieAlgebraRep, metric: SymForm, *, algebra: str = "",
                   m: int | None = None) -> CheckReport:
    """``Ric = -B/4``, Einstein for ``metric``, and non-flat."""
    algebra = algebra or alg.name
    m = alg.m if m is None else m
    b = killing_form(alg)
    curv = curvature_biinvariant(alg, b)
    ric = ricci_biinvariant(alg, curv)
    facts = {}
    if ric != b * -QUARTER:
        diff = next((i, j) for i in range(alg.dim) for j in range(alg.dim)
                    if ric.gram[i][j] != -QUARTER * b.gram[i][j])
        witness = {"relation": "Ric = -B/4", "pair": list(diff),
                   "residual": [str(ric.gram[diff[0]][diff[1]] + QUARTER * b.gram[diff[0]][diff[1]])]}
        return CheckReport("einstein", algebra, m, False, witness, facts)
    try:
        facts["einstein_constant_metric"] = str(einstein_constant(alg, metric, ric))
        facts["einstein_constant_killing"] = str(einstein_constant(alg, b, ric))
    except NotEinsteinError as exc:
        return CheckReport("einstein", algebra, m, False, {"message": str(exc), "residual": None}, facts)
    w = nonflat_witness(curv)
    if w is None:
        return CheckReport("einstein", algebra, m, False, {"reason": "flat", "residual": None}, facts)
    facts["nonflat_witness"] = {"indices": list(w), "value": [str(x) for x in curv.vector(*w)]}
    facts["metric_signature"] = list(signature(metric))
    return CheckReport("einstein", algebra, m, True, None, facts)


def metric_compatibility_failure(curvature: CurvatureTensor, metric: SymForm):
    """First ``(a, b, c, d)`` with ``g(R(a,b)c, d) + g(c, R(a,b)d) != 0``, or ``None``."""
    d = curvature.dim
    for a in range(d):
        for b in range(a + 1, d):
            for c in range(d):
                rc = curvature.apply(a, b, c)
                for e in range(c, d):
                    re_ = curvature.apply(a, b, e)
                    val = metric.value(rc, {e: 1}) + metric.value({c: 1}, re_)
                    if val:
                        return a, b, c, e
    return None


def bianchi_failure(curvature: CurvatureTensor):
    """First ``(a, b, c)`` violating the first Bianchi identity, or ``None``."""
    d = curvature.dim
    for a in range(d):
        for b in range(a + 1, d):
            for c in range(b + 1, d):
                s: dict = dict(curvature.apply(a, b, c))
                axpy(s, 1, curvature.apply(b, c, a))
                axpy(s, 1, curvature.apply(c, a, b))
                if s:
                    return a, b, c
    return None
