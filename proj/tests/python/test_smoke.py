"""Smoke tests for the resinfo Python bindings."""

import math

import numpy as np
import pytest

import resinfo as ri


def test_special_functions():
    assert ri.std_normal_cdf(0.0) == 0.5
    assert abs(ri.std_normal_cdf(2.13) - 0.98341419331639499) < 1e-14
    assert abs(ri.std_normal_quantile(0.9) - 1.2815515655446004) < 1e-12
    assert abs(ri.std_normal_tail(10.0) - 7.619853024160526e-24) < 1e-36
    with pytest.raises(ValueError):
        ri.std_normal_quantile(0.0)


def test_resolution_paper_values():
    assert abs(ri.resolution_info_region(0.1, 0.1) - 1.7577796618689755) < 1e-12
    assert abs(ri.resolution_info_region(0.1, 0.01) - 2.2246113128658361) < 1e-12
    assert ri.resolution_info_region(0.6, 0.5) == 0.0


def test_partition_resolution():
    p0 = ri.DiscreteBelief([0.3, 0.7])
    partition = ri.SemanticPartition([[0], [1]])
    result = ri.resolution_info_partition(p0, partition, 0.1)
    assert abs(result.info_nats - 0.1163217565860045) < 1e-12
    assert result.binding_region_index == 1
    assert not result.feasible_at_prior
    posterior = result.achieving_posterior
    assert abs(posterior[1] - 0.9) < 1e-12
    assert abs(ri.kl_divergence(posterior, p0) - result.info_nats) < 1e-12


def test_brute_force_oracle_agrees():
    p0 = ri.DiscreteBelief([0.25, 0.25, 0.25, 0.25])
    estimate = ri.brute_force_projection(p0, ri.Region([0, 1]), 0.1)
    assert estimate.converged
    assert abs(estimate.info_nats - ri.binary_divergence(0.9, 0.5)) < 1e-6


def test_gaussian_halfspace_roundtrip():
    p0 = ri.GaussianBelief(np.zeros(3), np.eye(3))
    h = ri.HalfSpace(np.array([1.0, 0.0, 0.0]), 0.0)
    assert ri.halfspace_mass(p0, h) == 0.5
    delta0 = ri.halfspace_delta0(p0, h)
    info = ri.halfspace_resolution_info(delta0, 0.1)
    shift = ri.halfspace_optimal_shift(p0, h, 0.1)
    moved = ri.GaussianBelief(p0.mean + shift, p0.covariance)
    assert abs(ri.gaussian_kl(moved, p0) - info) < 1e-9
    assert abs(ri.halfspace_mass(moved, h) - 0.9) < 1e-9
    with pytest.raises(ValueError):
        ri.GaussianBelief(np.zeros(2), np.array([[1.0, 3.0], [3.0, 1.0]]))


def test_polytope_floor():
    floor = ri.ambiguity_floor(ri.OrthantPolytope(5, 2.13), ri.PrecisionLimit(1.0))
    assert abs(floor.epsilon_min - 0.08022339219692124) < 1e-12
    assert abs(floor.mu_max - 2.13) < 1e-15

    res = ri.polytope_resolution_info(
        1.0, ri.OrthantPolytope(5, 1.0), ri.PrecisionLimit(1.0 / 2.13), 0.05
    )
    assert not res.feasible
    assert math.isinf(res.info_nats)


def test_curves_and_resolvability():
    grid = [0.0, 1.0, 10.0, 50.0]
    half = ri.halfspace_ambiguity_curve(0.0, grid)
    assert half[0].ambiguity == 0.5
    assert half[-1].ambiguity < 1e-10

    poly = ri.polytope_ambiguity_curve(
        3.0, ri.OrthantPolytope(5, 1.0), ri.PrecisionLimit(1.0 / 2.13), grid
    )
    floor = ri.ambiguity_floor(ri.OrthantPolytope(5, 1.0), ri.PrecisionLimit(1.0 / 2.13))
    assert all(pt.ambiguity >= floor.epsilon_min - 1e-12 for pt in poly)

    bound = ri.gaussian_resolvability_bound(
        0.9, ri.OrthantPolytope(5, 2.13), ri.PrecisionLimit(1.0), 1.0
    )
    assert bound.bounded
    assert abs(bound.value - 2.4175796177019035) < 1e-12


def test_large_deviations():
    assert abs(ri.binomial_tail_exact(1, 0.3, 0.5) - math.log(0.3)) < 1e-14
    estimate = ri.sanov_rate_check(0.3, 0.7, [500, 1000, 2000])
    assert estimate.relative_gap() <= 0.05

    p0 = ri.DiscreteBelief([0.4, 0.6])
    partition = ri.SemanticPartition([[0], [1]])
    first = ri.monte_carlo_ambiguity(p0, partition, 0.32, k=200, trials=500, seed=11)
    second = ri.monte_carlo_ambiguity(p0, partition, 0.32, k=200, trials=500, seed=11)
    assert first.frequency == second.frequency

    model = ri.DecayModel(0.9, 1.0, 0.5, 0.08)
    assert ri.decay_model_ambiguity(model, 10) == 0.08
    assert abs(ri.resolvability_bound(model).value - math.log(0.9 / 0.08)) < 1e-12


def test_validation_maps_to_python_errors():
    with pytest.raises(ValueError):
        ri.DiscreteBelief([0.5, 0.6])
    with pytest.raises(ValueError):
        ri.SemanticPartition([[0], [0, 1]])
    with pytest.raises(ValueError):
        ri.binary_divergence(0.5, 0.0)
    with pytest.raises(ValueError):
        ri.OrthantPolytope(0, 1.0)
