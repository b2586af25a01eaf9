import json

import numpy as np
import pytest

from wrep.catalog import catalog_entries, get_entry
from wrep.errors import AllSamplesSkippedError
from wrep.geometry import Sphere, WavyGraph
from wrep.mesh import ParamDomain
from wrep.verification import (
    DEFAULT_TOLERANCES, SCHEMA, mutate_second_component, verify, verify_parametric,
)
from wrep.weierstrass import make_phi

CHECKS = [
    "phi_square_zero", "lemma_1", "lemma_2", "orthogonality", "equal_norms", "harmonicity",
    "mean_curvature_zero", "crosscheck_zero", "fd_consistency", "path_independence",
]


@pytest.fixture(scope="module")
def reports():
    return {e.name: verify(e.data, e.default_domain.with_resolution(32, 32), name=e.name)
            for e in catalog_entries()}


def test_every_catalog_entry_passes(reports):
    for name, r in reports.items():
        assert r.overall, (name, r.summary_lines())
        assert [c.name for c in r.checks] == CHECKS
        assert r["mean_curvature_zero"].max_abs_residual <= 1e-8


def test_report_fields_and_schema(reports):
    doc = json.loads(reports["catenoid"].to_json())
    assert doc["schema"] == SCHEMA == "wrep-report/1"
    assert doc["overall"] is True
    assert doc["convention_constant"] == pytest.approx(2.0)
    rec = doc["checks"][0]
    assert set(rec) == {"name", "max_abs_residual", "relative_scale", "tolerance",
                        "samples_checked", "samples_skipped", "pass"}
    assert all(np.isfinite(c["max_abs_residual"]) for c in doc["checks"])
    assert doc["domain"]["shape"] == "rect"


def test_default_tolerances():
    assert DEFAULT_TOLERANCES["lemma_1"] == 1e-10
    assert DEFAULT_TOLERANCES["mean_curvature_zero"] == 1e-8
    assert DEFAULT_TOLERANCES["fd_consistency"] == 1e-5
    assert DEFAULT_TOLERANCES["path_independence"] == 1e-9


def test_mutated_phi_fails_null_check():
    e = get_entry("enneper")
    r = verify(mutate_second_component(e.data), e.default_domain.with_resolution(16, 16))
    assert not r["phi_square_zero"].passed
    assert r["phi_square_zero"].max_abs_residual >= 1e-2
    assert not r.overall


def test_mutation_oracle_value():
    # for Enneper data the mutated square is 4 z^2
    from wrep.cplx import cvec_square
    from wrep.weierstrass import phi_at
    d = mutate_second_component(make_phi("1", "z"))
    z = 0.6 - 0.3j
    assert cvec_square(phi_at(d, z)) == pytest.approx(4 * z**2)


def test_sphere_control_fails_with_convention_constant():
    r = verify_parametric(Sphere(1.0), ParamDomain.rectangle(-1, 1, -1, 1, 16, 16))
    rec = r["mean_curvature_zero"]
    assert not rec.passed
    assert rec.max_abs_residual == pytest.approx(r.convention_constant * 1.0, rel=1e-9)
    assert not r["crosscheck_zero"].passed
    assert not r.overall


def test_wavy_graph_fails():
    r = verify_parametric(WavyGraph(), ParamDomain.rectangle(-1, 1, -1, 1, 8, 8))
    assert not r["mean_curvature_zero"].passed


def test_tolerance_override_can_make_checks_fail():
    e = get_entry("enneper")
    r = verify(e.data, e.default_domain.with_resolution(8, 8),
               tolerances={"fd_consistency": 1e-12})
    assert not r["fd_consistency"].passed
    with pytest.raises(KeyError):
        verify(e.data, e.default_domain, tolerances={"bogus": 1})


def test_residuals_do_not_grow_with_resolution():
    for e in catalog_entries():
        coarse = verify(e.data, e.default_domain.with_resolution(8, 8))
        fine = verify(e.data, e.default_domain.with_resolution(40, 40))
        for c, f in zip(coarse.checks, fine.checks):
            assert f.passed
            assert f.max_abs_residual <= 10 * c.max_abs_residual + 0.1 * f.tolerance


def test_degenerate_samples_counted_not_hidden():
    # f = z, g = 1 has a branch point at 0
    d = make_phi("z", "1")
    r = verify(d, ParamDomain.rectangle(-1, 1, -1, 1, 5, 5))
    assert r.skip_counts["degenerate"] == 1
    assert all(c.samples_skipped == 1 for c in r.checks)
    assert all(c.samples_checked == 24 for c in r.checks)


def test_all_skipped_raises():
    dom = ParamDomain.rectangle(-1, 1, -1, 1, 3, 3, excluded=[(0, 5)])
    with pytest.raises(AllSamplesSkippedError):
        verify(make_phi("1", "z"), dom)


def test_summary_lines(reports):
    lines = reports["plane"].summary_lines()
    assert len(lines) == len(CHECKS) + 1
    assert lines[0].startswith("PASS phi_square_zero")
    assert lines[-1] == "overall: pass"


def test_worker_count_does_not_change_report():
    e = get_entry("helicoid")
    dom = e.default_domain.with_resolution(12, 12)
    assert verify(e.data, dom, workers=1).to_json() == verify(e.data, dom, workers=4).to_json()
