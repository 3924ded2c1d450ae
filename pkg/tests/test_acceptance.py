"""Acceptance criteria, all exact (zero tolerance).

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary, or directly when this file is run as a script.
"""

from __future__ import annotations

import io
import sys
import tempfile
import time
import traceback
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

from cpstruct.cli import build_setup, main
from cpstruct.cps import build_basis, build_ops, complexify_cps
from cpstruct.geometry import check_einstein, curvature_biinvariant, nonflat_witness, ricci_biinvariant
from cpstruct.lie import killing_form, signature, trace_form
from cpstruct.verify import (
    check_compatibility,
    check_dimension,
    check_eigen_subalgebras,
    check_embeddings,
    check_hypercomplex,
    check_involutions,
    check_module_decomposition,
    check_z_equivariance,
    eigenspace,
    isotropic,
    nijenhuis_J,
    nijenhuis_P,
)

RESULTS: dict[int, str] = {}
KINDS = ("sl_real", "su_pq")
SEEDS = range(5)


class Criterion:
    """Collects failures for one criterion and records the summary line."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.failures: list[str] = []
        self.notes: list[str] = []
        self.t0 = time.perf_counter()

    def expect(self, ok: bool, what: str):
        if not ok:
            self.failures.append(what)

    def finish(self):
        elapsed = time.perf_counter() - self.t0
        status = "FAIL" if self.failures else "PASS"
        line = f"[{status}] criterion {self.number:>2}: {self.title} ({elapsed:.2f}s)"
        if self.notes:
            line += "; " + "; ".join(self.notes)
        if self.failures:
            shown = "; ".join(self.failures[:3])
            more = len(self.failures) - 3
            line += f" -- {shown}" + (f" (+{more} more)" if more > 0 else "")
        RESULTS[self.number] = line
        print(line)
        assert not self.failures, line


def _structure_checks(c: Criterion, tag: str, alg, cps, half: int):
    """Criteria 2-3 on one structure."""
    c.expect(check_involutions(cps).passed, f"{tag}: involutions")
    c.expect(nijenhuis_P(alg, cps.P).passed, f"{tag}: N_P")
    c.expect(nijenhuis_J(alg, cps.J).passed, f"{tag}: N_J")
    c.expect(nijenhuis_P(alg, cps.Q).passed, f"{tag}: N_Q")
    rep = check_eigen_subalgebras(alg, cps)
    c.expect(rep.passed, f"{tag}: eigen subalgebras {rep.witness}")
    dims = rep.facts["dims"]
    c.expect(all(dims[k] == half for k in ("P+", "P-", "Q+", "Q-")), f"{tag}: eigenspace dims {dims}")


def test_criterion_01_dimension_law():
    c = Criterion(1, "dimension law 4m^2-4m, m=2..5, sl and su")
    slowest = 0.0
    for kind in KINDS:
        for m in range(2, 6):
            t = time.perf_counter()
            rep = check_dimension(build_basis(kind, m))
            dt = time.perf_counter() - t
            slowest = max(slowest, dt)
            c.expect(rep.passed and rep.facts["dim"] == 4 * m * m - 4 * m, f"{kind} m={m}: {rep.facts}")
            c.expect(dt < 1.0, f"{kind} m={m}: {dt:.2f}s > 1s")
    c.notes.append(f"slowest case {slowest:.2f}s")
    c.finish()


def test_criterion_02_theorem_integrability():
    c = Criterion(2, "relations and N_P = N_J = N_Q = 0, m=2..5, sl and su")
    for kind in KINDS:
        for m in range(2, 6):
            b = build_basis(kind, m)
            alg, cps = b.algebra(), build_ops(b)
            tag = f"{kind} m={m}"
            c.expect(check_involutions(cps).passed, f"{tag}: involutions")
            c.expect(nijenhuis_P(alg, cps.P).passed, f"{tag}: N_P")
            c.expect(nijenhuis_J(alg, cps.J).passed, f"{tag}: N_J")
            c.expect(nijenhuis_P(alg, cps.Q).passed, f"{tag}: N_Q")
    elapsed = time.perf_counter() - c.t0
    c.expect(elapsed < 10.0, f"total {elapsed:.1f}s > 10s")
    c.finish()


def test_criterion_03_eigenspace_subalgebras():
    c = Criterion(3, "P+-, Q+- subalgebras of dim 2m^2-2m and J(P+) = P-, every structure")
    count = 0
    for kind in KINDS:
        for m in range(2, 6):
            s = build_setup(kind, m)
            half = 2 * m * m - 2 * m
            for tag, cps in ((f"{kind} m={m} default", s.cps), (f"{kind} m={m} metric", s.metric_cps)):
                rep = check_eigen_subalgebras(s.alg, cps)
                dims = rep.facts["dims"]
                c.expect(rep.passed and rep.facts.get("J(P+) = P-") is True, f"{tag}: {rep.witness}")
                c.expect(all(v == half for v in dims.values()), f"{tag}: dims {dims}")
                # agreement with the Nijenhuis criterion on the same structure
                c.expect(nijenhuis_P(s.alg, cps.P).passed == rep.passed, f"{tag}: criteria disagree")
                count += 1
    c.notes.append(f"{count} structures")
    c.finish()


def test_criterion_04_parametric_family():
    c = Criterion(4, "seeded z-bases (5 per kind and m, m=2..5) pass criteria 2-3 and z-equivariance")
    for kind in KINDS:
        for m in range(2, 6):
            for seed in SEEDS:
                s = build_setup(kind, m, seed)
                tag = f"{kind} m={m} seed={seed}"
                _structure_checks(c, tag, s.alg, s.cps, 2 * m * m - 2 * m)
                rep = check_z_equivariance(s.alg, s.cps, s.z_vectors)
                c.expect(rep.passed, f"{tag}: z-equivariance {rep.witness}")
    c.finish()


def test_criterion_05_complexification():
    c = Criterion(5, "i-linear extension to realified sl(2m-1,C), dim 2(4m^2-4m), passes criteria 2-3, m=2..4")
    for m in range(2, 5):
        b = build_basis("su_pq", m)
        realified, ext = complexify_cps(b.algebra(), build_ops(b))
        c.expect(realified.dim == 2 * (4 * m * m - 4 * m), f"m={m}: dim {realified.dim}")
        _structure_checks(c, f"m={m}", realified, ext, 4 * m * m - 4 * m)
        dims = check_eigen_subalgebras(realified, ext).facts["dims"]
        c.expect("J+i" in dims and "J-i" in dims, f"m={m}: J eigenspaces not checked")
    c.finish()


COMPATIBLE_PAIRS: list = []


def test_criterion_06_metric_compatibility():
    c = Criterion(6, "trace form on su and K on realified sl compatible with neutral signature; sl Killing not")
    for m in range(2, 5):
        s = build_setup("su_pq", m)
        g = trace_form(s.alg)
        rep = check_compatibility(g, s.metric_cps)
        half = 2 * m * m - 2 * m
        c.expect(rep.passed and rep.facts["signature"] == [half, half, 0], f"su m={m}: {rep.facts} {rep.witness}")
        COMPATIBLE_PAIRS.append((f"su m={m}", g, s.metric_cps))
    for m in range(2, 4):
        s = build_setup("sl_c_realified", m)
        K = trace_form(s.alg, real_part_only=True)
        rep = check_compatibility(K, s.metric_cps)
        c.expect(rep.passed and rep.facts["neutral"], f"realified m={m}: {rep.facts} {rep.witness}")
        COMPATIBLE_PAIRS.append((f"realified m={m}", K, s.metric_cps))
    for m in range(2, 6):
        n = 2 * m - 1
        b = build_basis("sl_real", m)
        alg = b.algebra()
        B = killing_form(alg)
        sig = signature(B)
        c.expect(sig == (n * (n + 1) // 2 - 1, n * (n - 1) // 2, 0), f"sl m={m}: Killing signature {sig}")
        c.expect(not check_compatibility(B, build_ops(b)).passed, f"sl m={m}: Killing form reported compatible")
    c.finish()


def test_criterion_07_isotropy():
    c = Criterion(7, "P+ and P- totally isotropic on every compatible pair")
    if not COMPATIBLE_PAIRS:
        for m in range(2, 5):
            s = build_setup("su_pq", m)
            COMPATIBLE_PAIRS.append((f"su m={m}", trace_form(s.alg), s.metric_cps))
        for m in range(2, 4):
            s = build_setup("sl_c_realified", m)
            COMPATIBLE_PAIRS.append((f"realified m={m}", trace_form(s.alg, real_part_only=True), s.metric_cps))
    for tag, g, cps in COMPATIBLE_PAIRS:
        for ev in (1, -1):
            s = eigenspace(cps.P, ev)
            c.expect(isotropic(g, s), f"{tag}: P{'+' if ev > 0 else '-'} not isotropic")
    c.notes.append(f"{len(COMPATIBLE_PAIRS)} pairs")
    c.finish()


def test_criterion_08_hypercomplex():
    c = Criterion(8, "induced (J1, J2, J3) on realified sl: quaternion relations and integrable, m=2..3")
    for m in (2, 3):
        for seed in (None, 0):
            s = build_setup("sl_c_realified", m, seed)
            rep = check_hypercomplex(s.alg, s.cps)
            c.expect(rep.passed, f"m={m} seed={seed}: {rep.witness}")
    c.finish()


def test_criterion_09_embeddings():
    c = Criterion(9, "outer chain and middle strips closed and (P, J)-invariant, chain reaches m=2, m=2..4")
    for kind in KINDS:
        for m in range(2, 5):
            b = build_basis(kind, m)
            rep = check_embeddings(b, b.algebra(), build_ops(b))
            c.expect(rep.passed, f"{kind} m={m}: {rep.witness}")
            outer = [lv for lv in rep.facts["levels"] if lv["mode"] == "outer"]
            c.expect(len(outer) == m - 2, f"{kind} m={m}: chain length {len(outer)}")
            c.expect(all(lv["matches_smaller_m"] for lv in outer), f"{kind} m={m}: peeled basis differs")
    c.finish()


def test_criterion_10_einstein():
    c = Criterion(10, "Ric = -B/4, Einstein constant -(2m-1) for the trace form on su, non-flat, m=2..3")
    for kind in ("su_pq", "sl_c_realified"):
        for m in (2, 3):
            b = build_basis(kind, m)
            alg = b.algebra()
            R = curvature_biinvariant(alg)
            ric = ricci_biinvariant(alg, R)
            c.expect(ric == killing_form(alg) * Fraction(-1, 4), f"{kind} m={m}: Ric != -B/4")
            c.expect(nonflat_witness(R) is not None, f"{kind} m={m}: flat")
            metric = trace_form(alg, real_part_only=(kind != "su_pq"))
            rep = check_einstein(alg, metric)
            c.expect(rep.passed, f"{kind} m={m}: {rep.witness}")
            if kind == "su_pq":
                lam = rep.facts.get("einstein_constant_metric")
                c.expect(lam == str(-(2 * m - 1)), f"su m={m}: lambda {lam}")
    elapsed = time.perf_counter() - c.t0
    c.expect(elapsed < 120, f"{elapsed:.0f}s > 2 min")
    c.finish()


def _in_labels(vec: list[str], labels) -> str:
    terms = [f"{'' if x == '1' else '-' if x == '-1' else x + '*'}{lab}" for x, lab in zip(vec, labels) if x != "0"]
    return " + ".join(terms).replace("+ -", "- ")


def test_criterion_11_quadruples_irreducible():
    c = Criterion(11, "every label quadruple {P,J,Q}-invariant with no proper nonzero invariant subspace")
    for kind in KINDS:
        for m in (2, 3):
            s = build_setup(kind, m)
            rep = check_module_decomposition(s.basis, s.cps, z_vectors=s.z_vectors)
            c.expect(rep.facts.get("invariant") is True, f"{kind} m={m}: quadruple not invariant")
            if not rep.passed:
                w = rep.witness
                plane = ", ".join(_in_labels(v, s.basis.labels) for v in w["invariant_subspace"])
                c.expect(False, f"{kind} m={m}: {'/'.join(w['quadruple'])} has invariant span{{{plane}}}")
    c.finish()


def test_criterion_12_determinism():
    c = Criterion(12, "fixture dumps byte-identical across runs")
    configs = [("sl_real", 2, None), ("su_pq", 3, 7), ("sl_c_realified", 2, None), ("su_pq", 4, 0)]
    with tempfile.TemporaryDirectory() as tmp:
        for kind, m, seed in configs:
            blobs = []
            for run in range(2):
                p = Path(tmp) / f"{kind}-{m}-{seed}-{run}.json"
                argv = ["--kind", kind, "--m", str(m), "--dump", str(p), "--checks", "dimension", "--format", "json"]
                if seed is not None:
                    argv += ["--parametric-seed", str(seed)]
                with redirect_stdout(io.StringIO()):
                    code = main(argv)
                c.expect(code == 0, f"{kind} m={m}: exit {code}")
                blobs.append(p.read_bytes())
            c.expect(blobs[0] == blobs[1], f"{kind} m={m} seed={seed}: dumps differ")
    c.finish()


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
        except Exception:
            failed += 1
            traceback.print_exc()
    print(f"{len(tests) - failed}/{len(tests)} criteria passed")
    sys.exit(1 if failed else 0)
