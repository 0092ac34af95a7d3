"""Canonical constructors for the named algebra families.

All relations not listed are zero (up to skew-symmetry). Every builder
output passes NilpotentAlgebra.validate(); the test suite checks the
expected_facts records against the structural queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import NilpotentAlgebra

Brackets = dict[tuple[int, int], dict[int, Fraction]]


def abelian(n: int) -> NilpotentAlgebra:
    if n < 1:
        raise ValueError("abelian: n must be >= 1")
    return NilpotentAlgebra(n, {}, name=f"abelian{n}")


def heisenberg(m: int) -> NilpotentAlgebra:
    """h_{2m+1}: [X_{2i-1}, X_{2i}] = X_{2m+1}."""
    if m < 1:
        raise ValueError("heisenberg: m must be >= 1")
    br: Brackets = {(2 * i, 2 * i + 1): {2 * m: Fraction(1)}
                    for i in range(m)}
    return NilpotentAlgebra(2 * m + 1, br, name=f"heisenberg{2 * m + 1}")


def heisenberg_x_abelian(l: int, pad: int) -> NilpotentAlgebra:
    """Direct product of h_{2l+1} with a pad-dimensional abelian ideal."""
    if l < 1 or pad < 0:
        raise ValueError("heisenberg_x_abelian: need l >= 1, pad >= 0")
    br: Brackets = {(2 * i, 2 * i + 1): {2 * l: Fraction(1)}
                    for i in range(l)}
    return NilpotentAlgebra(2 * l + 1 + pad, br,
                            name=f"h{2 * l + 1}xA{pad}")


def filiform_standard(n: int) -> NilpotentAlgebra:
    """[X_i, X_j] = (j - i) X_{i+j} for 1 <= i < j, i + j <= n."""
    if n < 3:
        raise ValueError("filiform_standard: n must be >= 3")
    br: Brackets = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if i + j <= n:
                br[(i - 1, j - 1)] = {i + j - 1: Fraction(j - i)}
    return NilpotentAlgebra(n, br, name=f"filiform{n}")


def filiform4() -> NilpotentAlgebra:
    """Span(W, X, Y, Z) with [W,X] = Y, [W,Y] = Z."""
    br: Brackets = {(0, 1): {2: Fraction(1)}, (0, 2): {3: Fraction(1)}}
    return NilpotentAlgebra(4, br, name="filiform4")


def L5_lemma7a() -> NilpotentAlgebra:
    """Span(c, X, Y, Z, A) with [c,X] = A, [c,A] = Z, [X,Y] = Z."""
    br: Brackets = {
        (0, 1): {4: Fraction(1)},
        (0, 4): {3: Fraction(1)},
        (1, 2): {3: Fraction(1)},
    }
    return NilpotentAlgebra(5, br, name="L5_lemma7a")


def L6_1() -> NilpotentAlgebra:
    """Span(c, X, Y, Z, A1, A2): [c,X]=A1, [c,A1]=A2, [X,Y]=Z."""
    br: Brackets = {
        (0, 1): {4: Fraction(1)},
        (0, 4): {5: Fraction(1)},
        (1, 2): {3: Fraction(1)},
    }
    return NilpotentAlgebra(6, br, name="L6_1")


def L6_2() -> NilpotentAlgebra:
    """Span(c, X, Y, Z, A1, A2): [c,X]=A1, [c,Y]=A2, [c,A1]=Z, [X,Y]=Z."""
    br: Brackets = {
        (0, 1): {4: Fraction(1)},
        (0, 2): {5: Fraction(1)},
        (0, 4): {3: Fraction(1)},
        (1, 2): {3: Fraction(1)},
    }
    return NilpotentAlgebra(6, br, name="L6_2")


def L6_3() -> NilpotentAlgebra:
    """Span(c, X, Y, Z, A1, A2): [c,X]=A1, [c,A1]=A2, [c,A2]=Z, [X,Y]=Z."""
    br: Brackets = {
        (0, 1): {4: Fraction(1)},
        (0, 4): {5: Fraction(1)},
        (0, 5): {3: Fraction(1)},
        (1, 2): {3: Fraction(1)},
    }
    return NilpotentAlgebra(6, br, name="L6_3")


def L54() -> NilpotentAlgebra:
    """The five-dimensional Heisenberg algebra h5."""
    a = heisenberg(2)
    a.name = "L54"
    return a


def L52() -> NilpotentAlgebra:
    """h3 x abelian two-plane."""
    a = heisenberg_x_abelian(1, 2)
    a.name = "L52"
    return a


def L58() -> NilpotentAlgebra:
    """Span(X, Y1, Y2, Z1, Z2) with [X,Y1] = Z1, [X,Y2] = Z2."""
    br: Brackets = {(0, 1): {3: Fraction(1)}, (0, 2): {4: Fraction(1)}}
    return NilpotentAlgebra(5, br, name="L58")


def remark_famA(k: int, l: int) -> NilpotentAlgebra:
    """[X_i,Y_i] = Z_1 (i=1..k), [X_1,Z_2] = Y_1; needs k >= 2, l >= 2.

    Basis order: X_1..X_k, Y_1..Y_k, Z_1..Z_l.
    """
    if k < 2 or l < 2:
        raise ValueError("remark_famA: needs k >= 2 and l >= 2")
    br: Brackets = {(i, k + i): {2 * k: Fraction(1)} for i in range(k)}
    br[(0, 2 * k + 1)] = {k: Fraction(1)}
    return NilpotentAlgebra(2 * k + l, br, name=f"remark_famA_k{k}_l{l}")


def remark_famB(k: int, l: int) -> NilpotentAlgebra:
    """[X_i,Y_i] = Z_1 (i=1..k), [X_1,X_2] = Y_1; needs k >= 2, l >= 1."""
    if k < 2 or l < 1:
        raise ValueError("remark_famB: needs k >= 2 and l >= 1")
    br: Brackets = {(i, k + i): {2 * k: Fraction(1)} for i in range(k)}
    br[(0, 1)] = {k: Fraction(1)}
    return NilpotentAlgebra(2 * k + l, br, name=f"remark_famB_k{k}_l{l}")


_BUILDERS: dict[str, Callable[..., NilpotentAlgebra]] = {
    "abelian": abelian,
    "heisenberg": heisenberg,
    "heisenberg_x_abelian": heisenberg_x_abelian,
    "filiform_standard": filiform_standard,
    "filiform4": filiform4,
    "L5_lemma7a": L5_lemma7a,
    "L6_1": L6_1,
    "L6_2": L6_2,
    "L6_3": L6_3,
    "L54": L54,
    "L52": L52,
    "L58": L58,
    "remark_famA": remark_famA,
    "remark_famB": remark_famB,
}


def build(key: str, **params) -> NilpotentAlgebra:
    if key not in _BUILDERS:
        raise KeyError(f"unknown catalog key: {key!r}")
    return _BUILDERS[key](**params)


@dataclass
class CatalogEntry:
    key: str
    params: dict = field(default_factory=dict)
    expected_facts: dict = field(default_factory=dict)

    def build(self) -> NilpotentAlgebra:
        return build(self.key, **self.params)

    @property
    def label(self) -> str:
        return self.build().name


_DEFAULT_ENTRIES: list[CatalogEntry] = [
    CatalogEntry("abelian", {"n": 3},
                 {"nilpotency_class": 1, "center_dim": 3, "two_step": True}),
    CatalogEntry("heisenberg", {"m": 1},
                 {"nilpotency_class": 2, "center_dim": 1, "two_step": True,
                  "ricci_spectrum_identity": [-0.5, -0.5, 0.5]}),
    CatalogEntry("heisenberg", {"m": 2},
                 {"nilpotency_class": 2, "center_dim": 1, "two_step": True,
                  "ricci_spectrum_identity": [-0.5, -0.5, -0.5, -0.5, 1.0]}),
    CatalogEntry("heisenberg_x_abelian", {"l": 1, "pad": 1},
                 {"nilpotency_class": 2, "center_dim": 2, "two_step": True}),
    CatalogEntry("heisenberg_x_abelian", {"l": 1, "pad": 2},
                 {"nilpotency_class": 2, "center_dim": 3, "two_step": True}),
    CatalogEntry("heisenberg_x_abelian", {"l": 2, "pad": 2},
                 {"nilpotency_class": 2, "center_dim": 3, "two_step": True}),
    CatalogEntry("filiform_standard", {"n": 5},
                 {"nilpotency_class": 4, "center_dim": 1, "two_step": False}),
    CatalogEntry("filiform_standard", {"n": 6},
                 {"nilpotency_class": 5, "center_dim": 1, "two_step": False}),
    CatalogEntry("filiform4",
                 {},
                 {"nilpotency_class": 3, "center_dim": 1, "two_step": False,
                  "codim1_abelian": True,
                  "ricci_spectrum_identity": [-1.0, -0.5, 0.0, 0.5]}),
    CatalogEntry("L5_lemma7a", {},
                 {"nilpotency_class": 3, "two_step": False}),
    CatalogEntry("L6_1", {}, {"two_step": False}),
    CatalogEntry("L6_2", {}, {"two_step": False}),
    CatalogEntry("L6_3", {}, {"two_step": False}),
    CatalogEntry("L54", {}, {"two_step": True}),
    CatalogEntry("L52", {}, {"two_step": True}),
    CatalogEntry("L58", {}, {"two_step": True}),
    CatalogEntry("remark_famA", {"k": 2, "l": 2}, {"two_step": False}),
    CatalogEntry("remark_famB", {"k": 2, "l": 1}, {"two_step": False}),
]


def list_catalog(filter_class: str | None = None) -> list[CatalogEntry]:
    """Catalog entries in deterministic order, optionally filtered.

    filter_class: None, "two-step", "codim1-abelian", or "abelian".
    """
    entries = list(_DEFAULT_ENTRIES)
    if filter_class is None:
        return entries
    out = []
    for e in entries:
        a = e.build()
        if filter_class == "two-step":
            keep = a.is_two_step()
        elif filter_class == "codim1-abelian":
            keep = a.find_codim1_abelian_ideal() is not None
        elif filter_class == "abelian":
            keep = a.is_abelian()
        else:
            raise ValueError(f"unknown filter: {filter_class!r}")
        if keep:
            out.append(e)
    return out
