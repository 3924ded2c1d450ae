from __future__ import annotations

from functools import lru_cache

from cpstruct.cli import build_setup
from cpstruct.cps import build_basis, build_ops


@lru_cache(maxsize=None)
def basis_of(kind: str, m: int):
    return build_basis(kind, m)


@lru_cache(maxsize=None)
def algebra_of(kind: str, m: int):
    return basis_of(kind, m).algebra()


@lru_cache(maxsize=None)
def default_cps(kind: str, m: int):
    return build_ops(basis_of(kind, m))


@lru_cache(maxsize=None)
def setup_of(kind: str, m: int, seed: int | None = None):
    return build_setup(kind, m, seed)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
