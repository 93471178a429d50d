import math
from dataclasses import replace

import numpy as np
import pytest

from steklame.bounds import rayleigh_upper_bound
from steklame.config import MfsConfig
from steklame.disk_analytic import (
    Branch,
    disk_eigenfunction,
    disk_spectrum,
    expand_values,
    normalized,
)
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InsufficientResolutionError, UntrustworthyPairError
from steklame.geometry import FourierBoundary, discretize, sample_boundary
from steklame.mfs import (
    assemble,
    boundary_gram,
    compute_spectrum,
    condition_estimate,
    eigenfunction_grid,
    eval_eigenfunction,
    first_value_cutoff,
    orthonormalize_cluster,
    residual_certificate,
    rigid_motion_cutoff,
    solve_spectrum,
)
from tests.constants import UNIT_AREA_RADIUS

REFERENCE_CONFIG = MfsConfig(sources=100, alpha=0.015)
FINE_CONFIG = MfsConfig(sources=160)


@pytest.fixture()
def disk_solution(unit_disk, params):
    return compute_spectrum(unit_disk, params, REFERENCE_CONFIG, 8)


def rigid_motions(points: np.ndarray) -> list[np.ndarray]:
    ones = np.ones(len(points))
    zeros = np.zeros(len(points))
    return [
        np.column_stack([ones, zeros]),
        np.column_stack([zeros, ones]),
        np.column_stack([-points[:, 1], points[:, 0]]),
    ]


def test_circle_blocks_are_symmetric(unit_circle, params):
    db = discretize(unit_circle, collocation=4, sources=4, alpha=0.1)
    pencil = assemble(db, params)
    assert pencil.shape == (8, 8)
    assert pencil.square
    blocks = pencil.displacement.reshape(4, 2, 4, 2).transpose(0, 2, 1, 3)
    assert np.allclose(blocks, np.swapaxes(blocks, -1, -2))


def test_condition_grows_with_offset(unit_disk, params):
    conditions = [
        condition_estimate(assemble(discretize(unit_disk, 200, 100, alpha), params))
        for alpha in (0.015, 0.03)
    ]
    assert conditions[1] > conditions[0]


def test_assemble_is_permutation_equivariant(unit_circle, params):
    db = discretize(unit_circle, collocation=16, sources=8, alpha=0.2)
    pencil = assemble(db, params)
    permutation = np.random.default_rng(5).permutation(16)
    rows = np.stack([2 * permutation, 2 * permutation + 1], axis=1).ravel()
    shuffled = replace(
        db,
        t=db.t[permutation],
        points=db.points[permutation],
        normals=db.normals[permutation],
    )
    permuted = assemble(shuffled, params)
    assert np.allclose(permuted.traction, pencil.traction[rows])
    assert np.allclose(permuted.displacement, pencil.displacement[rows])


def test_disk_first_eigenvalue(disk_solution):
    spectrum, _ = disk_solution
    assert abs(spectrum[0].value - math.sqrt(math.pi)) < 1e-6
    assert spectrum[0].multiplicity == 2


def test_disk_spectrum_matches_analytic_values(disk_solution, params):
    spectrum, _ = disk_solution
    expected = expand_values(disk_spectrum(UNIT_AREA_RADIUS, params, 8), 8)
    assert np.allclose(spectrum.values, expected, rtol=1e-5)


def test_disk_rigid_motions_discarded(disk_solution):
    spectrum, _ = disk_solution
    assert len(spectrum.rigid) == 3
    assert np.all(np.abs(spectrum.rigid) <= spectrum.zero_tol)


def test_traces_are_normalized(disk_solution, unit_disk, params):
    spectrum, db = disk_solution
    check_count = REFERENCE_CONFIG.check_count
    fine = sample_boundary(unit_disk, check_count, math.pi / check_count)
    for pair in spectrum:
        trace = eval_eigenfunction(pair, db, params, fine.points)
        assert fine.l2_norm(trace) == pytest.approx(1.0, abs=1e-10)


def test_traces_orthogonal_to_rigid_motions(disk_solution, unit_disk, params):
    spectrum, _ = disk_solution
    sample = sample_boundary(unit_disk, 512)
    for pair in spectrum:
        trace = pair.displacement(sample.points, params)
        for motion in rigid_motions(sample.points):
            assert abs(sample.integrate(np.sum(trace * motion, axis=1))) < 1e-6


@pytest.fixture()
def omega_one_solution(omega_one, params):
    return compute_spectrum(omega_one, params, FINE_CONFIG, 8)


def test_omega_one_traces_orthogonal(omega_one_solution, omega_one, params):
    spectrum, _ = omega_one_solution
    sample = sample_boundary(omega_one, 1024)
    for pair in spectrum:
        trace = pair.displacement(sample.points, params)
        for motion in rigid_motions(sample.points):
            assert abs(sample.integrate(np.sum(trace * motion, axis=1))) < 1e-6

    gram = boundary_gram(list(spectrum), sample, params)
    values = spectrum.values
    for i in range(len(values)):
        for j in range(len(values)):
            if abs(values[i] - values[j]) / values[i] > 1e-3:
                assert abs(gram[i, j]) < 1e-5


def test_well_separated_traces_orthogonal(disk_solution, unit_disk, params):
    spectrum, _ = disk_solution
    sample = sample_boundary(unit_disk, 512)
    gram = boundary_gram(list(spectrum), sample, params)
    values = spectrum.values
    for i in range(len(values)):
        for j in range(len(values)):
            if abs(values[i] - values[j]) / values[i] > 1e-3:
                assert abs(gram[i, j]) < 1e-5


def test_first_eigenfunction_is_shear(disk_solution, unit_disk, params):
    spectrum, _ = disk_solution
    sample = sample_boundary(unit_disk, 512)
    pair = spectrum[0]
    trace = pair.displacement(sample.points, params)
    x1, x2 = sample.points[:, 0], sample.points[:, 1]
    basis = [np.column_stack([x1, -x2]), np.column_stack([x2, x1])]
    basis = [field / sample.l2_norm(field) for field in basis]
    captured = sum(
        sample.integrate(np.sum(trace * field, axis=1)) ** 2 for field in basis
    )
    assert captured >= 1 - 1e-6


def test_zero_coefficients_give_zero_field(disk_solution, params):
    spectrum, db = disk_solution
    pair = replace(spectrum[0], coefficients=np.zeros_like(spectrum[0].coefficients))
    assert np.all(eval_eigenfunction(pair, db, params, db.points * 0.5) == 0)


def test_eigenfunction_is_linear_in_coefficients(disk_solution, params):
    spectrum, db = disk_solution
    a, b = spectrum[0], spectrum[3]
    combined = replace(a, coefficients=a.coefficients + b.coefficients)
    points = 0.3 * db.points[:10]
    left = eval_eigenfunction(combined, db, params, points)
    right = eval_eigenfunction(a, db, params, points) + eval_eigenfunction(
        b, db, params, points
    )
    assert np.allclose(left, right, atol=1e-14 * np.max(np.abs(right)) + 1e-14)


def test_certificate_of_analytic_eigenfunction(params):
    radius = 1.0
    boundary = FourierBoundary.circle(radius)
    for branch, mode in [(Branch.N1, None), (Branch.HIGH, 3), (Branch.LOW, 4)]:
        function = normalized(disk_eigenfunction(branch, mode, radius, params), radius)
        certificate = residual_certificate(function, boundary, params, 256)
        assert certificate.residual < 1e-10
        assert certificate.bound < 1e-10


def test_certificate_contains_analytic_value(disk_solution, unit_disk, params):
    spectrum, _ = disk_solution
    certificate = residual_certificate(
        spectrum[0], unit_disk, params, REFERENCE_CONFIG.check_count
    )
    assert certificate.contains(math.sqrt(math.pi))
    assert certificate.bound == pytest.approx(spectrum[0].bound, rel=1e-6)


@pytest.mark.parametrize("index", [1, 20])
def test_certificate_bound_covers_disk_error(unit_disk, params, index):
    spectrum, _ = compute_spectrum(unit_disk, params, FINE_CONFIG, 20)
    expected = expand_values(disk_spectrum(UNIT_AREA_RADIUS, params, 20), 20)
    pair = spectrum[index - 1]
    certificate = residual_certificate(
        pair, unit_disk, params, FINE_CONFIG.check_count
    )
    assert abs(pair.value - expected[index - 1]) <= pair.bound
    assert certificate.contains(expected[index - 1])


def test_certificate_rejects_vanishing_trace(params, unit_disk):
    function = disk_eigenfunction(Branch.RADIAL, None, 1.0, params)
    silent = replace(function, terms=((0j, 1, 0),))
    with pytest.raises(UntrustworthyPairError):
        residual_certificate(silent, unit_disk, params, 64)


def test_insufficient_resolution(unit_disk, params):
    with pytest.raises(InsufficientResolutionError) as error:
        compute_spectrum(unit_disk, params, MfsConfig(sources=8, alpha=0.05), 40)
    assert error.value.requested == 40
    assert error.value.survivors < 40


def test_no_certified_value_is_insufficient(omega_one):
    params = LameParameters(lam=1.0, mu=3.0)
    config = MfsConfig(sources=100, residual_tol=1e-300)
    with pytest.raises(InsufficientResolutionError) as error:
        compute_spectrum(omega_one, params, config, 40)
    assert error.value.survivors == 0


def test_residual_gate_is_absolute(unit_disk, params):
    spectrum, _ = compute_spectrum(unit_disk, params, FINE_CONFIG, 20)
    assert spectrum[-1].value > 1
    assert all(pair.residual <= FINE_CONFIG.residual_tol for pair in spectrum)


def test_square_pencil_variant(unit_disk, params):
    config = MfsConfig(sources=100, alpha=0.015, square=True, residual_tol=1e-4)
    spectrum, db = compute_spectrum(unit_disk, params, config, 4)
    assert db.collocation_count == 100
    assert spectrum[0].value == pytest.approx(math.sqrt(math.pi), rel=1e-4)


def test_rigid_motion_cutoff():
    values = np.array([1e-13, -2e-13, 5e-14, 1.7, 1.7, 2.1])
    cutoff = rigid_motion_cutoff(values, 1e-6)
    assert 2e-13 < cutoff < 1.7


def test_first_value_cutoff():
    values = np.array([1e-13, -2e-13, 5e-14, 1.7, 1.7, 2.1])
    assert first_value_cutoff(values, 1e-6) == pytest.approx(1.7e-6)
    assert first_value_cutoff(np.array([]), 1e-6) == 0.0


def test_zero_tol_rules_agree_on_disk(unit_disk, params):
    jump = REFERENCE_CONFIG.model_copy(update={"zero_tol_rule": "jump"})
    first, _ = compute_spectrum(unit_disk, params, REFERENCE_CONFIG, 4)
    other, _ = compute_spectrum(unit_disk, params, jump, 4)
    assert first.zero_tol == pytest.approx(1e-6 * first[0].value, rel=1e-6)
    assert len(first.rigid) == len(other.rigid) == 3
    assert np.allclose(first.values, other.values)


def test_solve_spectrum_reuses_pencil(unit_disk, params):
    db = discretize(unit_disk, 200, 100, 0.015)
    pencil = assemble(db, params)
    first = solve_spectrum(pencil, db, REFERENCE_CONFIG, 4)
    second = solve_spectrum(pencil, db, REFERENCE_CONFIG, 6)
    assert np.allclose(first.values, second.values[:4])


@pytest.mark.parametrize("factor", [0.5, 2.0])
def test_homothety_scaling(omega_one, params, factor):
    base, _ = compute_spectrum(omega_one, params, FINE_CONFIG, 6)
    scaled, _ = compute_spectrum(omega_one.scaled(factor), params, FINE_CONFIG, 6)
    assert np.allclose(scaled.values, base.values / factor, rtol=1e-6)


@pytest.mark.parametrize("factor", [0.5, 2.0])
def test_parameter_scaling(omega_one, params, factor):
    base, _ = compute_spectrum(omega_one, params, REFERENCE_CONFIG, 6)
    scaled, _ = compute_spectrum(omega_one, params.scaled(factor), REFERENCE_CONFIG, 6)
    assert np.allclose(scaled.values, factor * base.values, rtol=1e-8)


def test_rotation_equivariance_on_disk(unit_disk, params):
    base, _ = compute_spectrum(unit_disk, params, REFERENCE_CONFIG, 8)
    rotated, _ = compute_spectrum(unit_disk, params, REFERENCE_CONFIG, 8, math.pi / 7)
    assert np.allclose(rotated.values, base.values, rtol=1e-8)


def test_error_decreases_with_sources(unit_disk, params):
    errors = []
    for sources in (40, 120):
        config = MfsConfig(sources=sources, alpha=0.015, residual_tol=1e-2)
        spectrum, _ = compute_spectrum(unit_disk, params, config, 1)
        errors.append(abs(spectrum[0].value - math.sqrt(math.pi)))
    assert errors[1] * 1e3 <= errors[0]


def test_omega_one_below_rayleigh_bound(omega_one, params):
    spectrum, _ = compute_spectrum(omega_one, params, REFERENCE_CONFIG, 1)
    assert spectrum[0].value <= rayleigh_upper_bound(omega_one, params)


def test_orthonormalize_cluster(disk_solution, unit_disk, params):
    spectrum, _ = disk_solution
    cluster = spectrum.cluster_of(0)
    assert len(cluster) == 2
    sample = sample_boundary(unit_disk, 512)
    members = orthonormalize_cluster(cluster, sample, params)
    gram = boundary_gram(members, sample, params)
    assert np.allclose(gram, np.eye(2), atol=1e-10)
    assert [member.value for member in members] == [pair.value for pair in cluster]


def test_eigenfunction_grid_inside_domain(disk_solution, params):
    spectrum, db = disk_solution
    rows = eigenfunction_grid(spectrum[0], db, params, resolution=16)
    assert rows.shape[1] == 4
    assert np.all(np.hypot(rows[:, 0], rows[:, 1]) < UNIT_AREA_RADIUS)


@pytest.mark.slow
def test_omega_one_hundred_certified_values():
    params = LameParameters(lam=1.0, mu=3.0)
    config = MfsConfig(sources=300, residual_tol=1e-5)
    spectrum, _ = compute_spectrum(FourierBoundary.omega_one(), params, config, 100)
    assert len(spectrum) == 100
    assert all(pair.residual <= config.residual_tol for pair in spectrum)
    residuals = [spectrum[i].residual for i in (0, 19, 99)]
    assert residuals[0] < residuals[2]
