from __future__ import annotations

import sys

import pytest

from polargrass.geometry import GeometrySpec, Variant
from polargrass.gf import field_of_order


def geometry(variant: str, q: int, n: int) -> GeometrySpec:
    return GeometrySpec(Variant(variant), n, field_of_order(q))


@pytest.fixture
def orth32() -> GeometrySpec:
    return geometry("orth", 3, 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
