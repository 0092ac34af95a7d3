"""Metric-independent curvature-sign sets: vector/plane labels, the
deformation expansion of sectional curvature, and witness searches."""

import numpy as np
import pytest

from nilcurv import (
    Metric,
    build,
    classify_plane,
    classify_ric_vector,
    find_negative_K_witness,
    find_negative_ric_witness,
    find_positive_ric_witness,
    knonneg_value,
    ricci_form,
    secdef_coefficients,
    sectional_K,
)
from nilcurv.sign_sets import PreconditionError, _pencil_condition


X3, Y3, Z3 = np.eye(3)


def test_classify_ric_vector_h3():
    a = build("heisenberg", m=1)
    assert classify_ric_vector(a, Z3) == "g_pos"
    assert classify_ric_vector(a, X3) == "outside"
    assert classify_ric_vector(a, [0, 0, 0]) == "g_zero_trivial"


def test_classify_ric_vector_central_not_derived():
    a = build("heisenberg_x_abelian", l=1, pad=1)
    pad_dir = np.eye(4)[:, 3]
    assert classify_ric_vector(a, pad_dir) == "g_geq_only"


def test_classify_plane_h3():
    a = build("heisenberg", m=1)
    # non-abelian plane: no labels at all
    assert classify_plane(a, X3, Y3) == set()
    # plane through the center: G1, hence G_geq
    labels = classify_plane(a, X3, Z3)
    assert "G1" in labels and "G_geq" in labels
    with pytest.raises(PreconditionError):
        classify_plane(a, X3, 2.0 * X3)


def test_central_plane_is_G_zero():
    a = build("heisenberg_x_abelian", l=1, pad=1)
    z1 = np.eye(4)[:, 2]
    z2 = np.eye(4)[:, 3]
    labels = classify_plane(a, z1, z2)
    assert "G_zero" in labels and "G_geq" in labels


def test_pencil_condition_matches_random_probes():
    """Exact pencil condition agrees with numeric rank-1 checks of the
    stacked bracket images on random probes."""
    rng = np.random.default_rng(0)
    for key in ("heisenberg", "filiform4", "L5_lemma7a"):
        a = build(key, m=2) if key == "heisenberg" else build(key)
        for _ in range(15):
            x = rng.integers(-2, 3, a.n)
            y = rng.integers(-2, 3, a.n)
            if np.linalg.matrix_rank(np.stack([x, y])) != 2:
                continue
            exact = _pencil_condition(a, [int(v) for v in x],
                                      [int(v) for v in y])
            # numeric oracle: for 30 random Z, [x,Z] and [y,Z] parallel
            ok = True
            for _ in range(30):
                z = rng.uniform(-1, 1, a.n)
                m = np.stack([a.bracket_float(x, z), a.bracket_float(y, z)])
                if np.linalg.matrix_rank(m, tol=1e-8) > 1:
                    ok = False
                    break
            assert exact == ok


def test_secdef_matches_deformed_sectional():
    """The (Psi, Phi) expansion reproduces K of the deformed metric."""
    alg = build("filiform_standard", n=5)
    rng = np.random.default_rng(3)
    metric = Metric.random(5, rng)
    lam = np.array([2.0, 1.0, 0.0, -1.0, -0.5])
    x, y = rng.uniform(-1, 1, (2, 5))
    co = secdef_coefficients(alg, metric, lam, x, y)
    finv = np.linalg.inv(metric.frame)
    for t in (0.0, 0.3, 1.0):
        gram_t = finv.T @ np.diag(np.exp(lam * t)) @ finv
        k = sectional_K(alg, Metric(gram_t), x, y)
        assert abs(co["evaluate"](t) - k) < 1e-9 * (1.0 + abs(k))


def test_knonneg_value():
    a = build("heisenberg", m=1)
    v = knonneg_value(a, Metric.identity(3), X3, Z3)
    assert v >= 0.0
    with pytest.raises(PreconditionError):
        knonneg_value(a, Metric.identity(3), X3, Y3)


def test_positive_ric_witness_central_derived():
    a = build("heisenberg", m=2)
    z = np.eye(5)[:, 4]
    w = find_positive_ric_witness(a, z, seed=0)
    assert w.kind == "ric_positive" and w.value > 1e-12
    assert ricci_form(a, Metric(w.gram), z, z) > 1e-12


def test_positive_ric_witness_central_not_derived_uses_deformation():
    a = build("heisenberg_x_abelian", l=1, pad=1)
    pad_dir = np.eye(4)[:, 3]
    w = find_positive_ric_witness(a, pad_dir, seed=0)
    assert w.value > 1e-12
    if w.scaled_value is not None:
        rel = abs(w.scaled_value - w.scaled_target) \
            / max(abs(w.scaled_target), 1e-30)
        assert rel < 0.05


def test_negative_ric_witness():
    a = build("filiform4")
    x = np.eye(4)[:, 0]   # W is not central
    w = find_negative_ric_witness(a, x, seed=0)
    assert w.kind == "ric_negative" and w.value < -1e-12
    assert ricci_form(a, Metric(w.gram), x, x) < -1e-12


def test_negative_K_witness_nonabelian_plane():
    a = build("heisenberg", m=1)
    w = find_negative_K_witness(a, X3, Y3, seed=0)
    assert w.kind == "K_negative" and w.value < -1e-9
    if w.frame is None and w.t is None:
        assert sectional_K(a, Metric(w.gram), X3, Y3) < -1e-9


def test_negative_K_witness_abelian_plane_without_pencil():
    """Abelian plane failing the pencil condition still gets a witness
    (via the adapted deformation recipe)."""
    a = build("filiform_standard", n=5)
    x = np.array([0.0, 1.0, -1.0, 1.0, -1.0])
    y = np.array([0.0, 0.0, 0.0, 1.0, 1.0])
    labels = classify_plane(a, x, y)
    assert "G_geq" not in labels
    w = find_negative_K_witness(a, x, y, seed=0)
    assert w.value < -1e-9


def test_witness_reproducibility():
    a = build("heisenberg", m=1)
    w1 = find_negative_K_witness(a, X3, Y3, seed=5)
    w2 = find_negative_K_witness(a, X3, Y3, seed=5)
    assert np.array_equal(w1.gram, w2.gram) and w1.value == w2.value
