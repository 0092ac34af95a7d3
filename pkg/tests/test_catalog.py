"""Catalog families and their documented structural properties."""

import itertools
from fractions import Fraction

import pytest

from nilcurv import build, list_catalog
from nilcurv.algebra import basis_vector


def test_unknown_key_raises():
    with pytest.raises(KeyError):
        build("nope")


def test_default_catalog_size_and_validity():
    entries = list_catalog()
    assert len(entries) >= 14
    labels = [e.label for e in entries]
    assert len(set(labels)) == len(labels)
    for e in entries:
        assert e.build().validate().valid


def test_filters():
    two_step = {(e.key, tuple(sorted(e.params.items())))
                for e in list_catalog("two-step")}
    assert ("heisenberg", (("m", 1),)) in two_step
    assert ("filiform4", ()) not in two_step
    codim1 = {e.key for e in list_catalog("codim1-abelian")}
    assert "filiform4" in codim1
    # with the (j - i) normalization, filiform_standard(n) has a
    # codimension-one abelian ideal only for n = 4, and the catalog
    # carries the n = 5, 6 instances
    assert "filiform_standard" not in codim1
    assert build("filiform_standard",
                 n=4).find_codim1_abelian_ideal() is not None
    assert {e.key for e in list_catalog("abelian")} == {"abelian"}


def test_heisenberg_relations():
    a = build("heisenberg", m=2)
    assert a.n == 5
    assert a.bracket(basis_vector(5, 0), basis_vector(5, 1)) \
        == basis_vector(5, 4)
    assert a.bracket(basis_vector(5, 2), basis_vector(5, 3)) \
        == basis_vector(5, 4)


def test_L6_1_relations():
    a = build("L6_1")
    c, x, y, _, a1, _ = (basis_vector(6, i) for i in range(6))
    assert a.bracket(c, x) == basis_vector(6, 4)      # [c,X]=A1
    assert a.bracket(c, a1) == basis_vector(6, 5)     # [c,A1]=A2
    assert a.bracket(x, y) == basis_vector(6, 3)      # [X,Y]=Z


def test_family_parameter_constraints():
    with pytest.raises(ValueError):
        build("remark_famA", k=1, l=2)
    with pytest.raises(ValueError):
        build("remark_famB", k=2, l=0)
    with pytest.raises(ValueError):
        build("filiform_standard", n=2)
    with pytest.raises(ValueError):
        build("heisenberg", m=0)


def test_L5_derivation_square_property():
    """[DX, X] = 0 for D = ad_c on the codimension-one ideal, checked by
    polarization over basis pairs."""
    a = build("L5_lemma7a")
    c = basis_vector(5, 0)
    ideal = [basis_vector(5, i) for i in range(1, 5)]
    for u, v in itertools.combinations_with_replacement(ideal, 2):
        du = a.bracket(c, u)
        dv = a.bracket(c, v)
        s = [x + y for x, y in zip(a.bracket(du, v), a.bracket(dv, u))]
        assert all(t == 0 for t in s)


@pytest.mark.parametrize("key", ["L6_1", "L6_2", "L6_3"])
def test_L6_duv_identity(key):
    """D[U,V] = 2[DU,V] = 2[U,DV] exactly on basis pairs of the two-step
    ideal, for D = ad_c."""
    a = build(key)
    c = basis_vector(6, 0)
    ideal = [basis_vector(6, i) for i in range(1, 6)]
    for u, v in itertools.combinations(ideal, 2):
        uv = a.bracket(u, v)
        duv = a.bracket(c, uv)
        lhs1 = [2 * t for t in a.bracket(a.bracket(c, u), v)]
        lhs2 = [2 * t for t in a.bracket(u, a.bracket(c, v))]
        assert duv == lhs1 == lhs2


def test_L54_L52_isomorphic_invariants():
    """L54 matches h5 and L52 matches h3 x R^2 on basic invariants."""
    from nilcurv.classification import invariant_tuple
    assert invariant_tuple(build("L54")) == invariant_tuple(
        build("heisenberg", m=2))
    assert invariant_tuple(build("L52")) == invariant_tuple(
        build("heisenberg_x_abelian", l=1, pad=2))


def test_expected_identity_spectra_recorded():
    from nilcurv import Metric, ricci_operator
    for e in list_catalog():
        spec = e.expected_facts.get("ricci_spectrum_identity")
        if spec is None:
            continue
        a = e.build()
        vals = ricci_operator(a, Metric.identity(a.n)).eigenvalues
        assert max(abs(vals[i] - spec[i]) for i in range(a.n)) < 1e-10
