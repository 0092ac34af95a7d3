"""Nilpotent Lie algebras given by exact rational structure constants.

Structure constants are stored sparsely for i < j (0-based); skew-symmetry
is implied by the storage convention. Every structural query (center,
series, ideal search, rank) runs over the rationals so that predicates
such as "is this bracket zero" are decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .rational import (
    Matrix,
    as_fraction,
    identity,
    in_row_space,
    rank,
    nullspace,
    rref,
)

VectorLike = Sequence


def exact_vector(v: VectorLike) -> list[Fraction]:
    return [as_fraction(x) for x in v]


def basis_vector(n: int, i: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


class Subspace:
    """Subspace of coordinate space, canonicalized as rational RREF rows."""

    def __init__(self, vectors: Sequence[VectorLike], n: int):
        self.n = n
        self.basis: Matrix = rref([exact_vector(v) for v in vectors])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: VectorLike) -> bool:
        vv = exact_vector(v)
        if all(x == 0 for x in vv):
            return True
        return in_row_space(self.basis, vv)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.n == other.n
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.n, tuple(tuple(r) for r in self.basis)))

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(list(self.basis) + list(other.basis), self.n)

    def intersection(self, other: "Subspace") -> "Subspace":
        # null space of the stacked annihilator conditions
        ann_self = nullspace(self.basis, self.n)
        ann_other = nullspace(other.basis, self.n)
        return Subspace(nullspace(ann_self + ann_other, self.n), self.n)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


@dataclass
class ValidationReport:
    valid: bool
    jacobi_failures: list[tuple[int, int, int]]
    nilpotent: bool
    nilpotency_class: int | None
    abelian: bool

    def __bool__(self):
        return self.valid


@dataclass
class NilpotentAlgebra:
    """Lie algebra of dimension n with sparse rational structure constants.

    brackets maps (i, j) with i < j (0-based) to {k: c} meaning
    [e_i, e_j] = sum_k c * e_k.
    """

    n: int
    brackets: dict[tuple[int, int], dict[int, Fraction]] = field(
        default_factory=dict)
    name: str = ""

    def __post_init__(self):
        clean: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), comps in self.brackets.items():
            if not (0 <= i < j < self.n):
                raise ValueError(f"bracket key ({i},{j}) must satisfy 0<=i<j<n")
            entry = {k: as_fraction(c) for k, c in comps.items()
                     if as_fraction(c) != 0}
            for k in entry:
                if not 0 <= k < self.n:
                    raise ValueError(f"target index {k} out of range")
            if entry:
                clean[(i, j)] = entry
        self.brackets = clean
        self._structure_float: np.ndarray | None = None
        self._center: Subspace | None = None
        self._derived: Subspace | None = None

    # -- bracket ---------------------------------------------------------

    def basis_bracket(self, i: int, j: int) -> list[Fraction]:
        out = [Fraction(0)] * self.n
        if i == j:
            return out
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in self.brackets.get((i, j), {}).items():
            out[k] = sign * c
        return out

    def bracket(self, x: VectorLike, y: VectorLike) -> list[Fraction]:
        """[x, y] in exact arithmetic (floats are rationalized first)."""
        if len(x) != self.n or len(y) != self.n:
            raise ValueError("vector length must equal algebra dimension")
        xv, yv = exact_vector(x), exact_vector(y)
        out = [Fraction(0)] * self.n
        for (i, j), comps in self.brackets.items():
            coef = xv[i] * yv[j] - xv[j] * yv[i]
            if coef == 0:
                continue
            for k, c in comps.items():
                out[k] += coef * c
        return out

    def structure_tensor(self) -> np.ndarray:
        """Dense float tensor C with [e_i,e_j] = sum_k C[i,j,k] e_k."""
        if self._structure_float is None:
            c = np.zeros((self.n, self.n, self.n))
            for (i, j), comps in self.brackets.items():
                for k, v in comps.items():
                    c[i, j, k] = float(v)
                    c[j, i, k] = -float(v)
            self._structure_float = c
        return self._structure_float

    def bracket_float(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        c = self.structure_tensor()
        return np.einsum("i,j,ijk->k", np.asarray(x, float),
                         np.asarray(y, float), c)

    def ad(self, x: VectorLike) -> Matrix:
        """Matrix of ad_x (columns are [x, e_j])."""
        cols = [self.bracket(x, basis_vector(self.n, j))
                for j in range(self.n)]
        return [[cols[j][k] for j in range(self.n)] for k in range(self.n)]

    # -- structural queries ---------------------------------------------

    def is_abelian(self) -> bool:
        return not self.brackets

    def derived_algebra(self) -> Subspace:
        if self._derived is None:
            gens = [self.basis_bracket(i, j)
                    for (i, j) in self.brackets]
            self._derived = Subspace(gens, self.n)
        return self._derived

    def lower_central_series(self) -> list[Subspace]:
        """g = g^0 >= g^1 >= ... strictly decreasing to zero."""
        series = [Subspace(identity(self.n), self.n)]
        current = series[0]
        while current.dim > 0:
            gens = []
            for i in range(self.n):
                ei = basis_vector(self.n, i)
                for v in current.basis:
                    w = self.bracket(ei, v)
                    if any(x != 0 for x in w):
                        gens.append(w)
            nxt = Subspace(gens, self.n)
            if nxt.dim >= current.dim:
                # not nilpotent: series stalled
                series.append(nxt)
                return series
            series.append(nxt)
            current = nxt
        return series

    def is_nilpotent(self) -> bool:
        series = self.lower_central_series()
        return series[-1].dim == 0

    def nilpotency_class(self) -> int | None:
        series = self.lower_central_series()
        if series[-1].dim != 0:
            return None
        return len(series) - 1

    def center(self) -> Subspace:
        """Exact null space of the stacked ad-matrices of the basis."""
        if self._center is None:
            stacked: Matrix = []
            for i in range(self.n):
                stacked.extend(self.ad(basis_vector(self.n, i)))
            self._center = Subspace(nullspace(stacked, self.n), self.n)
        return self._center


    def is_two_step(self) -> bool:
        """True iff [g, [g, g]] = 0 (abelian counts as degenerate two-step)."""
        for (i, j) in self.brackets:
            w = self.basis_bracket(i, j)
            for m in range(self.n):
                t = self.bracket(basis_vector(self.n, m), w)
                if any(x != 0 for x in t):
                    return False
        return True

    def jacobi_failures(self) -> list[tuple[int, int, int]]:
        bad = []
        for i in range(self.n):
            ei = basis_vector(self.n, i)
            for j in range(i + 1, self.n):
                ej = basis_vector(self.n, j)
                for k in range(j + 1, self.n):
                    ek = basis_vector(self.n, k)
                    s = [a + b + c for a, b, c in zip(
                        self.bracket(ei, self.bracket(ej, ek)),
                        self.bracket(ej, self.bracket(ek, ei)),
                        self.bracket(ek, self.bracket(ei, ej)))]
                    if any(x != 0 for x in s):
                        bad.append((i, j, k))
        return bad

    def validate(self) -> ValidationReport:
        failures = self.jacobi_failures()
        nilpotent = self.is_nilpotent() if not failures else False
        cls = self.nilpotency_class() if nilpotent else None
        return ValidationReport(
            valid=(not failures) and nilpotent,
            jacobi_failures=failures,
            nilpotent=nilpotent,
            nilpotency_class=cls,
            abelian=self.is_abelian(),
        )

    def span_with_brackets(self, x1: VectorLike, x2: VectorLike,
                           x3: VectorLike) -> Subspace:
        """L(X1,X2,X3): the three vectors plus their pairwise brackets."""
        vs = [exact_vector(x1), exact_vector(x2), exact_vector(x3)]
        vs.append(self.bracket(x1, x2))
        vs.append(self.bracket(x2, x3))
        vs.append(self.bracket(x1, x3))
        return Subspace(vs, self.n)

    def is_ideal(self, s: Subspace) -> bool:
        for i in range(self.n):
            ei = basis_vector(self.n, i)
            for v in s.basis:
                if not s.contains(self.bracket(ei, v)):
                    return False
        return True

    def is_abelian_subspace(self, s: Subspace) -> bool:
        bs = s.basis
        for a in range(len(bs)):
            for b in range(a + 1, len(bs)):
                if any(x != 0 for x in self.bracket(bs[a], bs[b])):
                    return False
        return True

    def find_codim1_abelian_ideal(self) -> Subspace | None:
        """A codimension-one abelian ideal, if one exists.

        Any such ideal contains g' (the quotient is one-dimensional, hence
        abelian), so hyperplanes are enumerated through the quotient g/g'.
        The quotient has small dimension for everything in the catalog; we
        parametrize hyperplanes by rational normal directions on the
        quotient with a bounded coefficient sweep, verifying each candidate
        exactly.
        """
        if self.is_abelian():
            if self.n == 0:
                return None
            # canonical choice: drop the last coordinate
            return Subspace([basis_vector(self.n, i)
                             for i in range(self.n - 1)], self.n)
        gp = self.derived_algebra()
        if gp.dim == self.n:
            return None
        # complement directions of g' among the standard basis
        comp = []
        cur = Subspace(gp.basis, self.n)
        for i in range(self.n):
            e = basis_vector(self.n, i)
            if not cur.contains(e):
                comp.append(e)
                cur = cur.sum(Subspace([e], self.n))
        q = len(comp)  # dim g/g'
        # hyperplane = g' + span of q-1 independent combinations of comp;
        # parametrized by a projective normal covector on the quotient.
        coeff_range = [Fraction(v) for v in range(-3, 4)]

        def candidates_for_normal(normal: list[Fraction]):
            # kernel of the covector on the quotient
            kern = nullspace([normal], q)
            vecs = list(gp.basis)
            for kv in kern:
                w = [Fraction(0)] * self.n
                for c, base in zip(kv, comp):
                    for t in range(self.n):
                        w[t] += c * base[t]
                vecs.append(w)
            return Subspace(vecs, self.n)

        normals: list[list[Fraction]] = []
        if q <= 4:
            def gen(prefix: list[Fraction]):
                if len(prefix) == q:
                    if any(x != 0 for x in prefix):
                        normals.append(list(prefix))
                    return
                for c in coeff_range:
                    gen(prefix + [c])
            gen([])
        else:
            # randomized fallback, exact verification of each candidate
            import random
            rng = random.Random(0)
            for _ in range(500):
                normals.append([Fraction(rng.randint(-5, 5)) for _ in range(q)])
        seen = set()
        for normal in normals:
            h = candidates_for_normal(normal)
            key = tuple(tuple(r) for r in h.basis)
            if key in seen or h.dim != self.n - 1:
                continue
            seen.add(key)
            if self.is_abelian_subspace(h) and self.is_ideal(h):
                return h
        return None

    def __repr__(self):
        label = self.name or "algebra"
        return f"NilpotentAlgebra({label}, n={self.n}, brackets={len(self.brackets)})"
