"""Structural algebra operations: brackets, series, ideals, subspaces."""

from fractions import Fraction

import numpy as np
import pytest

from nilcurv import NilpotentAlgebra, Subspace, build, list_catalog
from nilcurv.algebra import basis_vector


def h3():
    return build("heisenberg", m=1)


def test_bracket_antisymmetry_and_bilinearity():
    a = build("filiform_standard", n=5)
    rng = np.random.default_rng(0)
    for _ in range(10):
        x = [Fraction(int(v)) for v in rng.integers(-4, 5, a.n)]
        y = [Fraction(int(v)) for v in rng.integers(-4, 5, a.n)]
        xy = a.bracket(x, y)
        yx = a.bracket(y, x)
        assert all(u == -v for u, v in zip(xy, yx))
        two_x = [2 * v for v in x]
        assert a.bracket(two_x, y) == [2 * v for v in xy]


def test_jacobi_holds_on_all_catalog_entries():
    for entry in list_catalog():
        a = entry.build()
        assert a.jacobi_failures() == []
        rep = a.validate()
        assert rep.valid and rep.nilpotent


def test_expected_facts_match():
    for entry in list_catalog():
        a = entry.build()
        facts = entry.expected_facts
        if "nilpotency_class" in facts:
            assert a.nilpotency_class() == facts["nilpotency_class"]
        if "center_dim" in facts:
            assert a.center().dim == facts["center_dim"]
        if "two_step" in facts:
            assert a.is_two_step() == facts["two_step"]
        if "codim1_abelian" in facts:
            assert (a.find_codim1_abelian_ideal() is not None) \
                == facts["codim1_abelian"]


def test_h3_center_and_derived():
    a = h3()
    assert a.center().dim == 1
    assert a.derived_algebra().dim == 1
    z = basis_vector(3, 2)
    assert a.center().contains(z)
    assert a.derived_algebra().contains(z)


def test_lower_central_series_strictly_decreasing():
    for key, params in (("filiform_standard", {"n": 6}),
                        ("L6_2", {}), ("heisenberg", {"m": 2})):
        a = build(key, **params)
        dims = [s.dim for s in a.lower_central_series()]
        assert dims[0] == a.n and dims[-1] == 0
        assert all(d1 > d2 for d1, d2 in zip(dims, dims[1:]))


def test_filiform_standard_class_and_center():
    for n in (4, 5, 6):
        a = build("filiform_standard", n=n)
        assert a.nilpotency_class() == n - 1
        assert a.center().dim == 1


def test_non_nilpotent_rejected():
    # sl2-like relation is not nilpotent: [e1,e2]=e2 stalls the series
    a = NilpotentAlgebra(2, {(0, 1): {1: Fraction(1)}})
    rep = a.validate()
    assert not rep.nilpotent


def test_jacobi_failure_detected():
    # [e1,e2]=e3, [e1,e3]=e1: the (e1,e2,e3) Jacobiator is -e3
    bad = NilpotentAlgebra(3, {(0, 1): {2: Fraction(1)},
                               (0, 2): {0: Fraction(1)}})
    assert bad.jacobi_failures() != []


def test_subspace_operations():
    s1 = Subspace([[1, 0, 0], [0, 1, 0]], 3)
    s2 = Subspace([[0, 1, 0], [0, 0, 1]], 3)
    assert s1.intersection(s2).dim == 1
    assert s1.sum(s2).dim == 3
    assert s1.contains([2, 3, 0])
    assert not s1.contains([0, 0, 1])
    assert s1.contains_subspace(Subspace([[1, 1, 0]], 3))


def test_codim1_abelian_ideal():
    a = build("filiform4")
    ideal = a.find_codim1_abelian_ideal()
    assert ideal is not None and ideal.dim == 3
    assert a.is_ideal(ideal) and a.is_abelian_subspace(ideal)
    assert build("heisenberg", m=2).find_codim1_abelian_ideal() is None


def test_span_with_brackets():
    a = build("filiform_standard", n=5)
    t = tuple(basis_vector(5, i) for i in (0, 1, 2))
    sp = a.span_with_brackets(*t)
    assert sp.dim == 5


def test_bracket_key_validation():
    with pytest.raises(ValueError):
        NilpotentAlgebra(3, {(1, 0): {2: Fraction(1)}})
    with pytest.raises(ValueError):
        NilpotentAlgebra(2, {(0, 1): {5: Fraction(1)}})
