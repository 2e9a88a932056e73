import math

import numpy as np
import pytest

import triwell as tw


def test_slater_determinant_basics():
    psi = tw.slater_determinant([1, 3, 4], 6)
    assert psi.norm() == pytest.approx(1.0, abs=1e-14)
    assert psi.is_antisymmetric()
    with pytest.raises(ValueError):
        tw.slater_determinant([1, 1], 4)


def test_expansion_round_trip():
    psi = tw.slater_determinant([2, 3, 5], 6)
    coeffs = tw.to_slater_expansion(psi)
    assert coeffs[(2, 3, 5)] == pytest.approx(1.0, abs=1e-14)
    back = tw.from_slater_expansion(coeffs)
    assert np.max(np.abs(back.amplitudes - psi.amplitudes)) < 1e-14


def test_optimal_protocol_point():
    sol = tw.symmetric_solution(math.pi / 4)
    t = tw.symmetric_matrix_entries(sol)
    outcome = tw.run_protocol(t)
    assert outcome.probability == pytest.approx(1 / 3, abs=1e-12)
    assert outcome.classification == "w_type"
    assert outcome.c3f == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-12)
    assert outcome.tau_f == pytest.approx(0.0, abs=1e-10)
    mods = sorted(abs(v) for v in outcome.slater.values())
    assert mods == pytest.approx([1 / math.sqrt(3)] * 3, abs=1e-12)


def test_euler_matrix_is_unitary_and_matches_eta_closed_form():
    angles = [0.3, 0.7, 1.1, 0.9, 0.2, 0.5, 1.3, 2.1]
    t = tw.euler_to_matrix(angles)
    assert np.max(np.abs(t.conj().T @ t - np.eye(3))) < 1e-12
    closed = tw.eta_differences_closed_form(angles)
    eta = tw.eta_params(t)
    direct = [abs(eta.d1()) ** 2, abs(eta.d2()) ** 2, abs(eta.d3()) ** 2]
    assert closed == pytest.approx(direct, abs=1e-12)


def test_probability_curve_peak():
    rows = tw.probability_curves([0.4, math.pi / 4, 1.1])
    mid = rows[1]
    for value in (mid.p_ab, mid.p_bc, mid.p_aa, mid.p_bb, mid.P):
        assert value == pytest.approx(1 / 3, abs=1e-12)
    assert mid.cos_theta4 == pytest.approx(1 / math.sqrt(3), abs=1e-12)


def test_no_go_scan_smoke():
    report = tw.ghz_no_go_scan(50, seed=3)
    assert report.ok()
    assert report.counts["ghz_type"] == 0
    assert sum(report.counts.values()) == report.samples


def test_freeze_identity():
    outcome = tw.run_protocol(tw.symmetric_matrix_entries(tw.symmetric_solution(0.6)))
    report = tw.verify_measure_identity(outcome.final_state)
    assert report.identity_ok
    assert report.c3f == pytest.approx(report.ratio, abs=1e-10)
    assert report.tau == pytest.approx(0.0, abs=1e-10)


def test_two_well_protocol():
    outcome = tw.two_well_protocol(0.5)
    assert outcome.probability == pytest.approx(0.5, abs=1e-12)
    assert outcome.c2f == pytest.approx(1.0, abs=1e-10)
    assert outcome.c2_frozen == pytest.approx(1.0, abs=1e-10)
    frozen = tw.freeze_pair(outcome.final_state)
    assert tw.concurrence2(frozen) == pytest.approx(1.0, abs=1e-10)


def test_measures_on_reference_states():
    ghz = tw.from_slater_expansion(
        {(1, 2, 3): 1 / math.sqrt(2), (4, 5, 6): 1 / math.sqrt(2)}
    )
    assert tw.fermionic_concurrence(ghz) == pytest.approx(1.0, abs=1e-10)
    assert tw.fermionic_tangle(ghz) == pytest.approx(1.0, abs=1e-10)
    assert tw.fermionic_concurrence(tw.slater_determinant([1, 3, 4], 6)) == 0.0


def test_haar_unitary_is_deterministic_and_unitary():
    a = tw.haar_unitary(3, seed=11)
    b = tw.haar_unitary(3, seed=11)
    assert np.array_equal(a, b)
    assert np.max(np.abs(a.conj().T @ a - np.eye(3))) < 1e-12
