"""Curvature of a left-invariant metric: U-operator, sectional curvature,
Ricci form, Ricci operator and its spectrum.

All numerics are float; rational cross-checks live in the test suite. The
orthonormal frame of a metric is fixed deterministically as the inverse
transpose of the lower Cholesky factor of the Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import NilpotentAlgebra

EIG_CLUSTER_REL = 1e-8


class MetricError(ValueError):
    """Gram matrix not symmetric positive definite."""


class DegeneratePlaneError(ValueError):
    """Normalized sectional curvature requested for a degenerate plane."""


class Metric:
    """Inner product on the algebra, as an SPD Gram matrix on the basis."""

    def __init__(self, gram: np.ndarray):
        g = np.asarray(gram, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise MetricError("gram must be square")
        if not np.allclose(g, g.T, atol=1e-12 * (1 + np.abs(g).max())):
            raise MetricError("gram must be symmetric")
        self.gram = 0.5 * (g + g.T)
        try:
            self._chol = np.linalg.cholesky(self.gram)
        except np.linalg.LinAlgError:
            raise MetricError("gram must be positive definite")
        # columns are an orthonormal frame: F^T G F = I
        self.frame = np.linalg.inv(self._chol).T
        self._inv = np.linalg.inv(self.gram)

    @property
    def n(self) -> int:
        return self.gram.shape[0]

    @classmethod
    def identity(cls, n: int) -> "Metric":
        return cls(np.eye(n))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "Metric":
        """Gram = B^T B + 1e-6 I with B entries uniform on [-1, 1]."""
        b = rng.uniform(-1.0, 1.0, size=(n, n))
        return cls(b.T @ b + 1e-6 * np.eye(n))

    def inner(self, x, y) -> float:
        return float(np.asarray(x, float) @ self.gram @ np.asarray(y, float))

    def norm2(self, x) -> float:
        return self.inner(x, x)

    def to_frame(self, x) -> np.ndarray:
        """Coordinates of x in the orthonormal frame."""
        return np.linalg.solve(self.frame, np.asarray(x, float))

    def from_frame(self, coords) -> np.ndarray:
        return self.frame @ np.asarray(coords, float)


def frame_structure(algebra: NilpotentAlgebra, metric: Metric,
                    frame: np.ndarray | None = None) -> np.ndarray:
    """c[i,j,k] = <F_k, [F_i, F_j]> for an orthonormal frame F (columns)."""
    f = metric.frame if frame is None else np.asarray(frame, float)
    c0 = algebra.structure_tensor()
    # brackets of frame vectors, in basis coordinates
    b = np.einsum("ia,jb,ijk->abk", f, f, c0)
    return np.einsum("abk,kl,lc->abc", b, metric.gram, f)


def u_operator(algebra: NilpotentAlgebra, metric: Metric, v, w) -> np.ndarray:
    """U(v, w): <U(v,w), z> = (1/2)(<v,[z,w]> + <w,[z,v]>) for all z."""
    v = np.asarray(v, float)
    w = np.asarray(w, float)
    if len(v) != algebra.n or len(w) != algebra.n:
        raise ValueError("vector length must equal algebra dimension")
    c = algebra.structure_tensor()
    g = metric.gram
    # f_m = (1/2)(<v, [e_m, w]> + <w, [e_m, v]>)
    zw = np.einsum("mjk,j->mk", c, w)  # [e_m, w]
    zv = np.einsum("mjk,j->mk", c, v)
    f = 0.5 * (zw @ g @ v + zv @ g @ w)
    return metric._inv @ f


def sectional_K(algebra: NilpotentAlgebra, metric: Metric, x, y) -> float:
    """Unnormalized sectional curvature K(x, y)."""
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    uxy = u_operator(algebra, metric, x, y)
    uxx = u_operator(algebra, metric, x, x)
    uyy = u_operator(algebra, metric, y, y)
    bxy = algebra.bracket_float(x, y)
    bxxy = algebra.bracket_float(x, bxy)
    byyx = algebra.bracket_float(y, -bxy)
    return (metric.norm2(uxy) - metric.inner(uxx, uyy)
            - 0.75 * metric.norm2(bxy)
            - 0.5 * metric.inner(bxxy, y)
            - 0.5 * metric.inner(byyx, x))


def sectional_kappa(algebra: NilpotentAlgebra, metric: Metric, x, y) -> float:
    """Normalized sectional curvature K / |x ^ y|^2."""
    area2 = metric.norm2(x) * metric.norm2(y) - metric.inner(x, y) ** 2
    scale = metric.norm2(x) * metric.norm2(y)
    if area2 <= 1e-14 * (scale + 1.0):
        raise DegeneratePlaneError("x and y are linearly dependent")
    return sectional_K(algebra, metric, x, y) / area2


def ricci_form_matrix(algebra: NilpotentAlgebra, metric: Metric) -> np.ndarray:
    """Matrix R with Ric(X, Y) = X^T R Y in the original basis."""
    c = frame_structure(algebra, metric)
    r_frame = 0.25 * np.einsum("ija,ijb->ab", c, c) \
        - 0.5 * np.einsum("aik,bik->ab", c, c)
    finv = np.linalg.inv(metric.frame)
    return finv.T @ r_frame @ finv


def ricci_form(algebra: NilpotentAlgebra, metric: Metric, x, y) -> float:
    r = ricci_form_matrix(algebra, metric)
    return float(np.asarray(x, float) @ r @ np.asarray(y, float))


@dataclass
class RicciReport:
    operator: np.ndarray          # matrix of ric in the original basis
    eigenvalues: np.ndarray       # ascending
    eigenvectors: np.ndarray      # columns, basis coordinates, g-orthonormal
    min_simple: bool
    max_simple: bool

    @property
    def max_eigenvector(self) -> np.ndarray:
        return self.eigenvectors[:, -1]

    @property
    def min_eigenvector(self) -> np.ndarray:
        return self.eigenvectors[:, 0]


def ricci_operator(algebra: NilpotentAlgebra, metric: Metric) -> RicciReport:
    """Ricci operator ric with <ric X, Y> = Ric(X, Y), plus its spectrum."""
    c = frame_structure(algebra, metric)
    r_frame = 0.25 * np.einsum("ija,ijb->ab", c, c) \
        - 0.5 * np.einsum("aik,bik->ab", c, c)
    r_frame = 0.5 * (r_frame + r_frame.T)
    vals, vecs_frame = np.linalg.eigh(r_frame)
    vecs = metric.frame @ vecs_frame
    op = metric.frame @ r_frame @ np.linalg.inv(metric.frame)
    gap_tol = EIG_CLUSTER_REL * (np.abs(vals).max() + 1.0)
    n = len(vals)
    min_simple = n < 2 or (vals[1] - vals[0]) > gap_tol
    max_simple = n < 2 or (vals[-1] - vals[-2]) > gap_tol
    return RicciReport(operator=op, eigenvalues=vals, eigenvectors=vecs,
                       min_simple=min_simple, max_simple=max_simple)
