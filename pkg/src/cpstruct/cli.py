"""Command-line front end: build, check, report, dump.

Exit status: 0 when every selected check passed, 1 when at least one
failed, 2 on configuration or build errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cps.basis import KINDS, LabeledBasis, build_basis
from .cps.structures import CpsTriple, build_ops, build_parametric, complexify_cps, orthonormal_z_basis
from .errors import CpsError
from .exact.linalg import determinant
from .fixtures import dump_fixture
from .geometry import check_einstein
from .lie.algebra import LieAlgebraRep
from .lie.forms import SymForm, killing_form, trace_form
from .verify import (
    CheckReport,
    check_compatibility,
    check_dimension,
    check_eigen_subalgebras,
    check_embeddings,
    check_hypercomplex,
    check_involutions,
    check_module_decomposition,
    check_z_equivariance,
    nijenhuis_J,
    nijenhuis_P,
)

__all__ = ["CHECKS", "RunConfig", "Setup", "seeded_z_matrix", "build_setup", "run", "main"]

# Declared report order.
CHECKS = (
    "dimension",
    "involutions",
    "nijenhuis_P",
    "nijenhuis_J",
    "nijenhuis_Q",
    "eigen_subalgebras",
    "z_equivariance",
    "module_decomposition",
    "trace_compatibility",
    "killing_compatibility",
    "hypercomplex",
    "embeddings",
    "einstein",
)

_ONLY_REALIFIED = {"hypercomplex"}
_NOT_REALIFIED = {"embeddings"}

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    kind: str
    m: int = 2
    checks: tuple[str, ...] = CHECKS
    parametric_seed: int | None = None
    output_format: str = "text"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if not isinstance(self.m, int) or self.m < 2:
            raise ConfigError(f"m must be an integer >= 2, got {self.m!r}")
        if self.output_format not in ("text", "json"):
            raise ConfigError(f"unknown format {self.output_format!r}")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ConfigError(f"unknown check(s): {', '.join(unknown)}")
        bad = [c for c in self.checks if not applicable(c, self.kind)]
        if bad:
            raise ConfigError(f"check(s) {', '.join(bad)} do not apply to {self.kind}")
        selected = set(self.checks)
        self.checks = tuple(c for c in CHECKS if c in selected)


def applicable(check: str, kind: str) -> bool:
    if check in _ONLY_REALIFIED:
        return kind == "sl_c_realified"
    if check in _NOT_REALIFIED:
        return kind != "sl_c_realified"
    return True


def default_checks(kind: str) -> tuple[str, ...]:
    return tuple(c for c in CHECKS if applicable(c, kind))


def seeded_z_matrix(seed: int, m: int) -> list[list[int]]:
    """Invertible ``(m-1) x (m-1)`` integer matrix, entries in [-3, 3], from ``seed``."""
    rng = random.Random(seed)
    k = m - 1
    while True:
        mat = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(k)]
        if determinant([[Fraction(x) for x in r] for r in mat]):
            return mat


def _z_vectors(basis: LabeledBasis, M: Sequence[Sequence]) -> list[tuple]:
    u_idx = [q[0] for q in basis.single_quadruples()]
    out = []
    for row in M:
        z = [Fraction(0)] * basis.dim
        for i, c in zip(u_idx, row):
            z[i] = c
        out.append(tuple(z))
    return out


def _pad_complex(zs: Sequence[Sequence], d: int) -> list[dict]:
    """Real z-vectors of the real form, plus their i-multiples, in the realified coordinates."""
    real = [{a: x for a, x in enumerate(z) if x} for z in zs]
    return real + [{a + d: x for a, x in z.items()} for z in real]


@dataclass
class Setup:
    """Everything the checks need for one ``(kind, m, seed)``.

    ``cps`` is the configured structure (default, or seeded z-basis);
    ``metric_cps`` is the structure the compatibility checks evaluate
    (orthonormal z-basis on su and its realification); ``default_cps`` is
    the structure with ``Z = U`` used for the strip embeddings.
    """

    kind: str
    m: int
    basis: LabeledBasis
    alg: LieAlgebraRep
    cps: CpsTriple
    z_vectors: list
    default_cps: CpsTriple
    metric_cps: CpsTriple
    metric_structure: str
    structure: str
    real_alg: LieAlgebraRep | None = None
    forms: dict = field(default_factory=dict)

    def form(self, name: str) -> SymForm:
        if name not in self.forms:
            if name == "killing":
                self.forms[name] = killing_form(self.alg)
            elif self.kind == "sl_c_realified":
                self.forms[name] = trace_form(self.alg, real_part_only=True)
            else:
                self.forms[name] = trace_form(self.alg)
        return self.forms[name]


def build_setup(kind: str, m: int, seed: int | None = None) -> Setup:
    real_kind = "su_pq" if kind == "sl_c_realified" else kind
    rbasis = build_basis(real_kind, m)
    ralg = rbasis.algebra()
    structure = "default" if seed is None else f"seeded({seed})"
    M = [[Fraction(int(i == j)) for j in range(m - 1)] for i in range(m - 1)]
    if seed is not None:
        M = seeded_z_matrix(seed, m)
    zs = _z_vectors(rbasis, M)
    r_default = build_ops(rbasis)
    r_cps = r_default if seed is None else build_parametric(rbasis, zs)
    if real_kind == "su_pq":
        r_metric = build_parametric(rbasis, orthonormal_z_basis(ralg, rbasis))
        metric_structure = "orthonormal"
    else:
        r_metric, metric_structure = r_cps, structure
    if kind != "sl_c_realified":
        return Setup(kind, m, rbasis, ralg, r_cps, zs, r_default, r_metric, metric_structure, structure)
    basis = build_basis(kind, m)
    alg, cps = complexify_cps(ralg, r_cps)
    _, default = complexify_cps(ralg, r_default)
    _, metric = complexify_cps(ralg, r_metric)
    return Setup(kind, m, basis, alg, cps, _pad_complex(zs, rbasis.dim), default, metric,
                 metric_structure, structure, real_alg=ralg)


def _run_check(name: str, s: Setup) -> CheckReport:
    kw = {"algebra": s.kind, "m": s.m}
    if name == "dimension":
        return check_dimension(s.basis, algebra=s.kind)
    if name == "involutions":
        rep = check_involutions(s.cps, **kw)
    elif name == "nijenhuis_P":
        rep = nijenhuis_P(s.alg, s.cps.P, **kw)
    elif name == "nijenhuis_J":
        rep = nijenhuis_J(s.alg, s.cps.J, **kw)
    elif name == "nijenhuis_Q":
        rep = nijenhuis_P(s.alg, s.cps.Q, name="nijenhuis_Q", **kw)
    elif name == "eigen_subalgebras":
        rep = check_eigen_subalgebras(s.alg, s.cps, **kw)
    elif name == "z_equivariance":
        rep = check_z_equivariance(s.alg, s.cps, s.z_vectors, **kw)
    elif name == "module_decomposition":
        zs = s.z_vectors[: s.m - 1]  # real-form vectors; iZ copies are derived
        rep = check_module_decomposition(s.basis, s.cps, z_vectors=zs, **kw)
    elif name in ("trace_compatibility", "killing_compatibility"):
        form = s.form("trace" if name == "trace_compatibility" else "killing")
        rep = check_compatibility(form, s.metric_cps, name=name, **kw)
        rep.facts["structure"] = s.metric_structure
        return rep
    elif name == "hypercomplex":
        rep = check_hypercomplex(s.alg, s.cps, **kw)
    elif name == "embeddings":
        rep = check_embeddings(s.basis, s.alg, s.default_cps, algebra=s.kind)
        rep.facts["structure"] = "default"
        return rep
    elif name == "einstein":
        return check_einstein(s.alg, s.form("trace"), **kw)
    else:  # pragma: no cover - guarded by RunConfig
        raise ConfigError(name)
    rep.facts["structure"] = s.structure
    return rep


def _error_record(kind: str, m: int, exc: Exception) -> dict:
    return {"check": "build", "algebra": kind, "m": m, "passed": False,
            "error": type(exc).__name__, "message": str(exc)}


def run(config: RunConfig, emit=None) -> tuple[int, list[dict]]:
    """Run the selected checks; returns ``(exit_status, records)``.

    ``emit`` (if given) is called with each record as soon as it exists.
    """
    records: list[dict] = []

    def push(rec: dict):
        records.append(rec)
        if emit is not None:
            emit(rec)

    try:
        setup = build_setup(config.kind, config.m, config.parametric_seed)
    except CpsError as exc:
        push(_error_record(config.kind, config.m, exc))
        return EXIT_CONFIG, records
    failures = 0
    for name in config.checks:
        rec = _run_check(name, setup).to_dict()
        failures += not rec["passed"]
        push(rec)
    return (EXIT_FAIL if failures else EXIT_OK), records


def _text_line(rec: dict) -> str:
    status = "PASS" if rec["passed"] else "FAIL"
    head = f"{status} {rec['check']:<22} {rec['algebra']} m={rec['m']}"
    if "error" in rec:
        return f"{head}  {rec['error']}: {rec['message']}"
    facts = rec.get("facts", {})
    extras = []
    for key in ("structure", "signature", "einstein_constant_metric", "dim", "irreducible"):
        if key in facts:
            extras.append(f"{key}={json.dumps(facts[key])}")
    line = head + ("  " + " ".join(extras) if extras else "")
    if not rec["passed"] and "witness" in rec:
        line += "\n    witness: " + json.dumps(rec["witness"], sort_keys=True)
    return line


def _parse_args(argv: Sequence[str] | None):
    p = argparse.ArgumentParser(prog="cpstruct", description=(
        "Build complex product structures on real forms of sl(2m-1) (see --kind) "
        "and verify their properties in exact arithmetic."))
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--m", type=int, default=2, help="size parameter, n = 2m-1 (default 2)")
    p.add_argument("--checks", default="all",
                   help="comma-separated check names or 'all' (default). Known: " + ", ".join(CHECKS))
    p.add_argument("--parametric-seed", type=int, default=None,
                   help="use a seeded random integer z-basis instead of Z = U")
    p.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    p.add_argument("--dump", metavar="PATH", default=None,
                   help="write the basis and P, J, Q fixture to PATH before running checks")
    p.add_argument("--max-m", type=int, default=None, help="sweep m = 2..MAX_M")
    return p.parse_args(argv)


def _configs(args) -> list[RunConfig]:
    if args.max_m is not None and args.max_m < 2:
        raise ConfigError("--max-m must be >= 2")
    ms = range(2, args.max_m + 1) if args.max_m is not None else [args.m]
    out = []
    for m in ms:
        if args.checks.strip() == "all":
            checks = default_checks(args.kind)
        else:
            checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
            if not checks:
                raise ConfigError("empty --checks list")
        out.append(RunConfig(args.kind, m, checks, args.parametric_seed, args.output_format))
    return out


def main(argv: Sequence[str] | None = None) -> int:
    args = _parse_args(argv)
    try:
        configs = _configs(args)
        if args.dump is not None and len(configs) != 1:
            raise ConfigError("--dump needs a single m, not a sweep")
    except ConfigError as exc:
        print(f"cpstruct: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    text = args.output_format == "text"
    if args.dump is not None:
        try:
            s = build_setup(args.kind, configs[0].m, args.parametric_seed)
            dump_fixture(args.dump, s.basis, s.cps)
        except (CpsError, OSError) as exc:
            print(f"cpstruct: error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        if text:
            print(f"wrote fixture {args.dump}")
    emit = (lambda rec: print(_text_line(rec), flush=True)) if text else None
    status = EXIT_OK
    all_records: list[dict] = []
    for cfg in configs:
        code, recs = run(cfg, emit)
        all_records += recs
        status = max(status, code)
    if text:
        failed = sum(not r["passed"] for r in all_records)
        print(f"{len(all_records) - failed} passed, {failed} failed")
    else:
        json.dump(all_records, sys.stdout, indent=1)
        sys.stdout.write("\n")
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
