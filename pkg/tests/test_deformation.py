"""Metric deformations, scaled Ricci limits, and closed-form extremal
candidates, each cross-checked against an independent direct computation."""

import numpy as np
import pytest

from nilcurv import (
    CandidateError,
    DeformationSpec,
    Metric,
    OverflowGuardError,
    build,
    candidate_e1u2,
    candidate_min_u1,
    candidate_T1_T2,
    candidate_two_step,
    convergence_check,
    deformed_metric,
    deformed_ricci,
    derived_complement_frame,
    extremal_T,
    lemma5a_deformation,
    projective_distance,
    ricci_operator,
    scaled_ricci_limit,
    spec_for_pattern,
)
from nilcurv.deformation import deformed_ricci_frame


def _spec(alg, lambdas, seed=0):
    rng = np.random.default_rng(seed)
    return DeformationSpec(base=Metric.random(alg.n, rng),
                           lambdas=np.asarray(lambdas, float))


def test_two_path_equality():
    """deformed_ricci agrees with ricci_operator of the deformed Gram."""
    alg = build("filiform_standard", n=5)
    spec = _spec(alg, [1.0, 0.5, 0.0, -0.5, -1.0], seed=2)
    for t in (0.0, 0.7, 2.0):
        direct = ricci_operator(alg, deformed_metric(spec, t))
        via = deformed_ricci(spec, alg, t)
        assert np.abs(np.sort(direct.eigenvalues)
                      - np.sort(via.eigenvalues)).max() \
            < 1e-8 * (np.abs(direct.eigenvalues).max() + 1.0)


def test_deformed_metric_at_zero_is_base():
    alg = build("heisenberg", m=1)
    spec = _spec(alg, [1.0, -1.0, 0.0], seed=3)
    assert np.abs(deformed_metric(spec, 0.0).gram - spec.base.gram).max() \
        < 1e-12


def test_overflow_guard():
    alg = build("heisenberg", m=1)
    spec = _spec(alg, [1.0, -1.0, 0.0])
    with pytest.raises(OverflowGuardError):
        deformed_ricci(spec, alg, 1e6)


def test_scaled_limit_block_spectrum():
    """eig(Phi0) = eig(A) u {0}^(n-p-q) u eig(sum J_k^2) for (p, q)
    patterns, and 2 e^{-td} ric_t approaches Phi0."""
    rng = np.random.default_rng(5)
    for key, params, p, q in (("heisenberg", {"m": 2}, 1, 4),
                              ("L5_lemma7a", {}, 2, 3),
                              ("L6_2", {}, 3, 3)):
        alg = build(key, **params)
        n = alg.n
        lambdas = np.array([1.0] * p + [0.0] * (n - p - q) + [-1.0] * q)
        spec = DeformationSpec(base=Metric.random(n, rng), lambdas=lambdas)
        limit = scaled_ricci_limit(spec, alg)
        assert limit.has_block_structure and (limit.p, limit.q) == (p, q)
        expected = np.concatenate([
            np.linalg.eigvalsh(limit.A),
            np.zeros(n - p - q),
            np.linalg.eigvalsh(limit.sum_J_squared())])
        got = np.linalg.eigvals(limit.phi0).real  # block triangular
        assert np.abs(np.sort(expected) - np.sort(got)).max() < 1e-9
        t = 40.0 / limit.gap
        approx = 2.0 * np.exp(-t * limit.d) * deformed_ricci_frame(
            spec, alg, t)
        assert np.abs(approx - limit.phi0).max() < 1e-6


def test_extremal_T_satisfies_limit_eigen_equation():
    alg = build("L5_lemma7a")
    rng = np.random.default_rng(6)
    spec = DeformationSpec(base=Metric.random(5, rng),
                           lambdas=np.array([1.0, 1.0, -1.0, -1.0, -1.0]))
    limit = scaled_ricci_limit(spec, alg)
    cand = extremal_T(limit, alg)
    tf = np.linalg.solve(spec.frame, cand.T)
    resid = np.abs(limit.phi0 @ tf - cand.lambda_extreme * tf).max()
    assert resid < 1e-8 * (np.abs(tf).max() + 1.0)


def test_candidate_two_step_h3():
    alg = build("heisenberg", m=1)
    metric = Metric.identity(3)
    z = np.array([0.0, 0.0, 1.0])
    cand = candidate_two_step(alg, metric, z)
    assert np.abs(cand.T - 2.0 * z).max() < 1e-12
    u = derived_complement_frame(alg, metric)
    spec = spec_for_pattern(alg, metric, [z],
                            [u[:, i] for i in range(u.shape[1])])
    trace = convergence_check(spec, alg, cand)
    assert trace.converged and trace.best_distance() < 1e-4


def test_lemma5a_filiform4():
    alg = build("filiform4")
    metric = Metric.identity(4)
    w, x, _, z = (np.eye(4)[:, i] for i in range(4))
    spec, cand = lemma5a_deformation(alg, metric, z, w, x)
    assert np.abs(cand.T + x).max() < 1e-12   # T = -X
    trace = convergence_check(spec, alg, cand)
    assert trace.converged


def test_candidate_e1u2_requires_orthonormal():
    alg = build("filiform4")
    metric = Metric.identity(4)
    with pytest.raises(CandidateError):
        candidate_e1u2(alg, metric, np.eye(4)[:, 3], np.eye(4)[:, 3],
                       np.eye(4)[:, 0])


def test_candidate_min_u1_converges():
    from nilcurv import normal_form_frame
    frame = normal_form_frame("L5_lemma7a", (1.0, 0.5, 2.0))
    cand = candidate_min_u1(frame.algebra, frame.metric,
                            *frame.e_vectors, *frame.u_vectors)
    assert cand.kind == "min" and cand.simple
    trace = convergence_check(frame.spec(), frame.algebra, cand)
    assert trace.converged


def test_candidate_T1_T2_requires_a_gt_b():
    from nilcurv import normal_form_frame
    frame = normal_form_frame("L5_lemma7a", (1.0, 1.0, 1.0))
    t1, t2 = candidate_T1_T2(frame.algebra, frame.metric,
                             *frame.e_vectors, *frame.u_vectors)
    assert t1.construction == "e2u3_T1" and t2.construction == "e2u3_T2"


def test_projective_distance_properties():
    rng = np.random.default_rng(7)
    for _ in range(20):
        u = rng.uniform(-1, 1, 5)
        v = rng.uniform(-1, 1, 5)
        d = projective_distance(u, v)
        assert 0.0 <= d <= 1.0
        assert projective_distance(u, -3.0 * u) < 1e-7
        assert abs(projective_distance(u, v)
                   - projective_distance(v, u)) < 1e-12
    with pytest.raises(ValueError):
        projective_distance(np.zeros(3), np.ones(3))


def test_convergence_rejects_non_simple():
    alg = build("filiform4")
    metric = Metric.identity(4)
    w, x, _, z = (np.eye(4)[:, i] for i in range(4))
    cand = candidate_e1u2(alg, metric, z, w, x)  # <z,[w,x]> = 0: not simple
    assert not cand.simple
    spec = spec_for_pattern(alg, metric, [z], [w, x])
    with pytest.raises(CandidateError):
        convergence_check(spec, alg, cand)


def test_spec_for_pattern_exponents():
    alg = build("heisenberg", m=1)
    metric = Metric.identity(3)
    z = np.array([0.0, 0.0, 1.0])
    x = np.eye(3)[:, 0]
    y = np.eye(3)[:, 1]
    spec = spec_for_pattern(alg, metric, [z], [x, y])
    assert sorted(spec.lambdas.tolist()) == [-1.0, -1.0, 1.0]
    limit = scaled_ricci_limit(spec, alg)
    assert (limit.p, limit.q) == (1, 2)
