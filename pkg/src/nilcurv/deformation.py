"""One-parameter metric deformations, scaled Ricci limits, and the
closed-form Ricci-extremal candidate vectors.

A deformation moves along a diagonal geodesic in the space of inner
products: g_t(U, V) = <exp(D t) U, V> with D diagonal in a chosen
orthonormal frame. After scaling by 2 exp(-t d), the deformed Ricci
operator converges to a limit operator whose extremal eigenvectors have
closed forms when the exponent pattern is (+1 x p, 0, -1 x q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import NilpotentAlgebra, Subspace
from .curvature import Metric, RicciReport, frame_structure, ricci_operator

OVERFLOW_LIMIT = 700.0
DEFAULT_T_GRID = tuple(float(2 ** k) for k in range(0, 11))


class OverflowGuardError(ValueError):
    """|lambda_i * t| too large for a stable exponential."""


class CandidateError(ValueError):
    """Preconditions of a closed-form candidate construction violated."""


@dataclass
class DeformationSpec:
    base: Metric
    lambdas: np.ndarray
    frame: np.ndarray | None = None  # columns; defaults to base.frame

    def __post_init__(self):
        self.lambdas = np.asarray(self.lambdas, dtype=float)
        if self.frame is None:
            self.frame = self.base.frame
        self.frame = np.asarray(self.frame, dtype=float)
        n = self.base.n
        if self.lambdas.shape != (n,):
            raise ValueError("lambdas must have length n")
        if not np.all(np.isfinite(self.lambdas)):
            raise ValueError("lambdas must be finite")
        gram_err = np.abs(self.frame.T @ self.base.gram @ self.frame
                          - np.eye(n)).max()
        if gram_err > 1e-8:
            raise ValueError(f"frame not orthonormal for base ({gram_err:.2e})")

    @property
    def n(self) -> int:
        return self.base.n


def _check_t(spec: DeformationSpec, t: float) -> None:
    if not np.isfinite(t):
        raise OverflowGuardError("t must be finite")
    if np.abs(spec.lambdas * t).max(initial=0.0) > OVERFLOW_LIMIT:
        raise OverflowGuardError(f"|lambda_i * t| exceeds {OVERFLOW_LIMIT}")


def deformed_metric(spec: DeformationSpec, t: float) -> Metric:
    """Gram matrix of g_t in the original basis."""
    _check_t(spec, t)
    finv = np.linalg.inv(spec.frame)
    gram = finv.T @ np.diag(np.exp(spec.lambdas * t)) @ finv
    return Metric(0.5 * (gram + gram.T))


def deformed_frame(spec: DeformationSpec, t: float) -> np.ndarray:
    """Columns E_i = exp(-lambda_i t / 2) e_i, orthonormal for g_t."""
    _check_t(spec, t)
    return spec.frame @ np.diag(np.exp(-spec.lambdas * t / 2.0))


def _ric_frame_matrix(c: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Ricci-type operator in frame coordinates from weighted triples.

    c[i,j,k] = <e_k, [e_i, e_j]>; weights[i,j,k] multiplies each triple
    with i > j. Returns (1/2) sum w c_kij (B_ij (x) e_k^*
    - e_j (x) e_k^* ad_i + e_i (x) e_k^* ad_j).
    """
    n = c.shape[0]
    tri = np.tril(np.ones((n, n)), k=-1)  # i > j selector
    wc = weights * c * tri[:, :, None]
    m = np.zeros((n, n))
    # term 1: [e_i,e_j] in column m, row picks e_k^*
    m += np.einsum("ijk,ijm->mk", wc, c)
    # term 2: -delta_{m j} c[i,s,k]
    m -= np.einsum("ijk,isk->js", wc, c)
    # term 3: +delta_{m i} c[j,s,k]
    m += np.einsum("ijk,jsk->is", wc, c)
    return 0.5 * m


def deformed_ricci_frame(spec: DeformationSpec, algebra: NilpotentAlgebra,
                         t: float) -> np.ndarray:
    """Matrix of ric_t in the coordinates of the (undeformed) frame.

    Independent of ricci_operator(deformed_metric(...)): computed from
    the exponentially weighted structure-constant expansion.
    """
    _check_t(spec, t)
    lam = spec.lambdas
    c = frame_structure(algebra, spec.base, spec.frame)
    expo = lam[None, None, :] - lam[:, None, None] - lam[None, :, None]
    return _ric_frame_matrix(c, np.exp(expo * t))


def deformed_ricci(spec: DeformationSpec, algebra: NilpotentAlgebra,
                   t: float) -> RicciReport:
    """Ricci report of g_t, computed in the g_t-orthonormal frame.

    The frame structure constants of g_t are the base ones scaled by
    exp((lambda_k - lambda_i - lambda_j) t / 2); a common exponent shift
    keeps the eigenproblem finite even when the raw entries overflow.
    For moderate t this agrees with ricci_operator on deformed_metric.
    """
    _check_t(spec, t)
    lam = spec.lambdas
    c = frame_structure(algebra, spec.base, spec.frame)
    expo = 0.5 * t * (lam[None, None, :] - lam[:, None, None]
                      - lam[None, :, None])
    # drop numerical-noise entries: their formal exponents would otherwise
    # dominate the shift and crush the genuine terms to zero
    cmax = np.abs(c).max()
    nz = np.abs(c) > 1e-12 * (cmax + 1.0)
    c = np.where(nz, c, 0.0)
    shift = float(expo[nz].max()) if nz.any() else 0.0
    ct = c * np.exp(expo - shift)
    r_scaled = 0.25 * np.einsum("ija,ijb->ab", ct, ct) \
        - 0.5 * np.einsum("aik,bik->ab", ct, ct)
    r_scaled = 0.5 * (r_scaled + r_scaled.T)
    vals_s, vecs_frame = np.linalg.eigh(r_scaled)
    ft = deformed_frame(spec, t)
    vecs = ft @ vecs_frame
    norms = np.linalg.norm(vecs, axis=0)
    norms[norms == 0.0] = 1.0
    vecs = vecs / norms
    with np.errstate(over="ignore"):
        scale = np.exp(2.0 * shift)
        vals = vals_s * scale
        op = ft @ (r_scaled * scale) @ np.linalg.inv(ft) \
            if np.isfinite(scale) else np.full((spec.n, spec.n), np.nan)
    from .curvature import EIG_CLUSTER_REL
    gap_tol = EIG_CLUSTER_REL * (np.abs(vals_s).max() + 1.0)
    n = len(vals_s)
    min_simple = n < 2 or (vals_s[1] - vals_s[0]) > gap_tol
    max_simple = n < 2 or (vals_s[-1] - vals_s[-2]) > gap_tol
    return RicciReport(operator=op, eigenvalues=vals, eigenvectors=vecs,
                       min_simple=min_simple, max_simple=max_simple)


@dataclass
class ScaledRicciLimit:
    spec: DeformationSpec
    d: float
    Lambda: list[tuple[int, int, int]]      # (i, j, k), i > j, 0-based
    phi0: np.ndarray                        # frame coordinates
    gap: float                              # d minus second-largest exponent
    p: int | None = None
    q: int | None = None
    J: list[np.ndarray] = field(default_factory=list)
    A: np.ndarray | None = None

    @property
    def has_block_structure(self) -> bool:
        return self.p is not None

    def phi0_basis(self) -> np.ndarray:
        f = self.spec.frame
        return f @ self.phi0 @ np.linalg.inv(f)

    def sum_J_squared(self) -> np.ndarray:
        return sum(j @ j for j in self.J)


def _lambda_triples(lam: np.ndarray) -> tuple[float, list, float]:
    """d, the maximizing set Lambda, and the gap to the runner-up.

    Ties are exact when all exponents are rational-valued floats on a
    small grid; otherwise decided with a relative tolerance, since
    membership in Lambda changes the limit discontinuously.
    """
    n = len(lam)
    frs = [Fraction(x).limit_denominator(10**6) for x in lam]
    exact = all(abs(float(f) - x) < 1e-13 * (abs(x) + 1)
                for f, x in zip(frs, lam))
    vals: dict[tuple[int, int, int], float] = {}
    for i in range(n):
        for j in range(i):
            for k in range(n):
                vals[(i, j, k)] = lam[k] - lam[i] - lam[j]
    d = max(vals.values())
    if exact:
        dfr = max(frs[k] - frs[i] - frs[j] for (i, j, k) in vals)
        lam_set = [t for t, (i, j, k) in zip(vals, vals)
                   if frs[t[2]] - frs[t[0]] - frs[t[1]] == dfr]
        d = float(dfr)
    else:
        tol = 1e-12 * (np.abs(lam).max() + 1.0)
        lam_set = [t for t, v in vals.items() if v >= d - tol]
    rest = [v for t, v in vals.items() if t not in set(lam_set)]
    gap = d - max(rest) if rest else np.inf
    return d, sorted(lam_set), gap


def _detect_pq(lam: np.ndarray) -> tuple[int, int] | None:
    """(p, q) if lambdas are (+1 x p, 0 x (n-p-q), -1 x q) in frame order."""
    n = len(lam)
    p = 0
    while p < n and abs(lam[p] - 1.0) < 1e-12:
        p += 1
    q = 0
    while q < n and abs(lam[n - 1 - q] + 1.0) < 1e-12:
        q += 1
    if p < 1 or q < 2 or p + q > n:
        return None
    if not np.all(np.abs(lam[p:n - q]) < 1e-12):
        return None
    return p, q


def scaled_ricci_limit(spec: DeformationSpec,
                       algebra: NilpotentAlgebra) -> ScaledRicciLimit:
    """Limit of 2 exp(-t d) ric_t as t -> infinity, in frame coordinates."""
    lam = spec.lambdas
    d, lam_set, gap = _lambda_triples(lam)
    c = frame_structure(algebra, spec.base, spec.frame)
    n = spec.n
    weights = np.zeros((n, n, n))
    for (i, j, k) in lam_set:
        weights[i, j, k] = 1.0
    phi0 = 2.0 * _ric_frame_matrix(c, weights)
    limit = ScaledRicciLimit(spec=spec, d=d, Lambda=lam_set, phi0=phi0,
                             gap=gap)
    pq = _detect_pq(lam)
    if pq is not None:
        p, q = pq
        limit.p, limit.q = p, q
        js = []
        for k in range(p):
            jk = np.array([[c[n - q + r, n - q + s, k] for s in range(q)]
                           for r in range(q)])
            js.append(jk)
        limit.J = js
        limit.A = np.array([[0.5 * np.trace(js[k] @ js[l].T)
                             for l in range(p)] for k in range(p)])
    return limit


@dataclass
class ExtremalCandidate:
    T: np.ndarray                 # basis coordinates
    lambda_extreme: float
    construction: str             # e1u2 | eumin | e2u3_T1 | e2u3_T2 |
                                  # two_step | generic_limit
    simple: bool
    kind: str = "max"             # max | min
    xi: np.ndarray | None = None
    eta: np.ndarray | None = None
    rotated_frame: bool = False

    @property
    def is_zero(self) -> bool:
        return bool(np.linalg.norm(self.T) < 1e-12)


def extremal_T(limit: ScaledRicciLimit,
               algebra: NilpotentAlgebra) -> ExtremalCandidate:
    """Closed-form top eigenvector of the scaled Ricci limit.

    Requires the (p, q) block structure and a simple top eigenvalue of the
    Gram block A. If the first frame vector is not aligned with A's top
    eigenvector, the first p frame vectors are rotated onto A's eigenbasis
    (the J_k transform contravariantly under that rotation).
    """
    if not limit.has_block_structure:
        raise CandidateError("exponent pattern is not (+1 x p, 0, -1 x q)")
    p, q = limit.p, limit.q
    a = limit.A
    avals, avecs = np.linalg.eigh(a)
    lam_max = avals[-1]
    if lam_max <= 1e-12:
        raise CandidateError("A has no positive top eigenvalue "
                             "(J_k all zero or degenerate)")
    gap_tol = 1e-8 * (np.abs(avals).max() + 1.0)
    simple = p < 2 or (avals[-1] - avals[-2]) > gap_tol
    if not simple:
        return ExtremalCandidate(T=np.zeros(limit.spec.n),
                                 lambda_extreme=lam_max,
                                 construction="generic_limit", simple=False)
    n = limit.spec.n
    frame = limit.spec.frame
    rotated = False
    js = limit.J
    e_plus = [frame[:, k] for k in range(p)]
    top = avecs[:, -1]
    if p > 1 and abs(abs(top[0]) - 1.0) > 1e-12:
        # realize assumption (II): rotate the first p frame vectors onto
        # the eigenbasis of A (the J_k transform the same way, keeping
        # J'_k attached to the rotated e'_k)
        order = np.argsort(avals)[::-1]
        o = avecs[:, order]
        js = [sum(o[l, k] * limit.J[l] for l in range(p)) for k in range(p)]
        e_plus = [frame[:, :p] @ o[:, k] for k in range(p)]
        rotated = True
    sum_j2 = sum(j @ j for j in js)
    # Y = sum_{r,s} (J_1)_{rs} [e_{n-q+r}, e_{n-q+s}]
    y = np.zeros(n)
    low = [frame[:, n - q + r] for r in range(q)]
    pair_brackets = [[algebra.bracket_float(low[r], low[s]) for s in range(q)]
                     for r in range(q)]
    for r in range(q):
        for s in range(q):
            y += js[0][r, s] * pair_brackets[r][s]
    # xi_r = sum_s sum_k (J_k)_{rs} <e_k, [e_{n-q+s}, Y]>
    g = limit.spec.base.gram
    xi = np.zeros(q)
    for r in range(q):
        acc = 0.0
        for s in range(q):
            bsy = algebra.bracket_float(low[s], y)
            for k in range(p):
                acc += js[k][r, s] * float(e_plus[k] @ g @ bsy)
        xi[r] = acc
    resolvent = lam_max * np.eye(q) - sum_j2
    eta = np.linalg.solve(resolvent, xi)
    t_vec = y + sum(eta[r] * low[r] for r in range(q))
    cand = ExtremalCandidate(T=t_vec, lambda_extreme=lam_max,
                             construction="generic_limit", simple=True,
                             xi=xi, eta=eta, rotated_frame=rotated)
    if not cand.is_zero:
        # eigen-equation check in frame coordinates
        tf = np.linalg.solve(frame, t_vec)
        resid = np.abs(limit.phi0 @ tf - lam_max * tf).max()
        if resid > 1e-6 * (np.abs(tf).max() + 1.0):
            raise CandidateError(f"limit eigen-equation failed ({resid:.2e})")
    return cand


def _require_orthonormal(metric: Metric, vectors: list[np.ndarray],
                         names: list[str], tol: float = 1e-10) -> None:
    for i, (v, nm) in enumerate(zip(vectors, names)):
        if abs(metric.norm2(v) - 1.0) > tol:
            raise CandidateError(f"{nm} is not a unit vector")
        for j in range(i):
            if abs(metric.inner(v, vectors[j])) > tol:
                raise CandidateError(f"{names[j]} and {nm} are not orthogonal")


def candidate_e1u2(algebra: NilpotentAlgebra, metric: Metric,
                   e, u1, u2) -> ExtremalCandidate:
    """T = 2<u12,e> u12 + <u212,e> u1 - <u112,e> u2 for orthonormal e,u1,u2."""
    e = np.asarray(e, float)
    u1 = np.asarray(u1, float)
    u2 = np.asarray(u2, float)
    _require_orthonormal(metric, [e, u1, u2], ["e", "u1", "u2"])
    u12 = algebra.bracket_float(u1, u2)
    u112 = algebra.bracket_float(u1, u12)
    u212 = algebra.bracket_float(u2, u12)
    t = (2.0 * metric.inner(u12, e) * u12
         + metric.inner(u212, e) * u1
         - metric.inner(u112, e) * u2)
    a = metric.inner(e, u12)
    return ExtremalCandidate(T=t, lambda_extreme=a * a,
                             construction="e1u2", simple=bool(abs(a) > 1e-12))


def lemma5a_deformation(algebra: NilpotentAlgebra, metric: Metric,
                        e, u1, u2, eps: float = 1e-5
                        ) -> tuple[DeformationSpec, ExtremalCandidate]:
    """Deformation realizing the candidate of candidate_e1u2 as the maximal
    Ricci eigendirection in the limit.

    When <e, [u1, u2]> != 0 the exponent pattern (+1 on e, -1 on u1, u2)
    works directly. When it vanishes, the maximal direction is reached by
    continuity: e is tilted by eps toward the component of [u1, u2]
    orthogonal to span(e, u1, u2), which makes the top limit eigenvalue
    simple while moving the limiting direction only O(eps) away from T.
    The returned candidate always carries the unperturbed T.
    """
    e = np.asarray(e, float)
    u1 = np.asarray(u1, float)
    u2 = np.asarray(u2, float)
    cand = candidate_e1u2(algebra, metric, e, u1, u2)
    if cand.is_zero:
        raise CandidateError("candidate vector T is zero")
    if cand.simple:
        spec = spec_for_pattern(algebra, metric, [e], [u1, u2])
        return spec, cand
    u12 = algebra.bracket_float(u1, u2)
    if metric.norm2(u12) < 1e-20:
        raise CandidateError("[u1, u2] = 0: no deformation available")
    w = u12.copy()
    for v in (e, u1, u2):
        w = w - metric.inner(w, v) * v
    nw = np.sqrt(max(metric.norm2(w), 0.0))
    if nw < 1e-12:
        raise CandidateError("[u1, u2] lies in span(e, u1, u2)")
    w = w / nw
    e_tilt = e + eps * w
    e_tilt = e_tilt / np.sqrt(metric.norm2(e_tilt))
    tilted = candidate_e1u2(algebra, metric, e_tilt, u1, u2)
    if not tilted.simple:
        raise CandidateError("tilt failed to make <e,[u1,u2]> nonzero")
    spec = spec_for_pattern(algebra, metric, [e_tilt], [u1, u2])
    return spec, ExtremalCandidate(T=cand.T, lambda_extreme=tilted.lambda_extreme,
                                   construction="e1u2", simple=True)


def _eu_inner_products(algebra, metric, e1, e2, u1, u2, u3):
    u12 = algebra.bracket_float(u1, u2)
    u13 = algebra.bracket_float(u1, u3)
    u23 = algebra.bracket_float(u2, u3)
    vals = {
        "<e1,u13>": metric.inner(e1, u13),
        "<e1,u23>": metric.inner(e1, u23),
        "<e2,u12>": metric.inner(e2, u12),
        "<e2,u23>": metric.inner(e2, u23),
    }
    a = metric.inner(e1, u12)
    b = metric.inner(e2, u13)
    return u12, vals, a, b


def _check_eu_preconditions(algebra, metric, e1, e2, u1, u2, u3,
                            tol: float = 1e-10):
    vecs = [np.asarray(v, float) for v in (e1, e2, u1, u2, u3)]
    _require_orthonormal(metric, vecs, ["e1", "e2", "u1", "u2", "u3"])
    e1, e2, u1, u2, u3 = vecs
    u12, vals, a, b = _eu_inner_products(algebra, metric, e1, e2, u1, u2, u3)
    for name, v in vals.items():
        if abs(v) > tol:
            raise CandidateError(f"precondition {name} = 0 violated "
                                 f"(got {v:.3e})")
    if abs(a) <= tol:
        raise CandidateError("precondition <e1,u12> != 0 violated")
    if abs(b) <= tol:
        raise CandidateError("precondition <e2,u13> != 0 violated")
    return e1, e2, u1, u2, u3, u12, a, b


def candidate_min_u1(algebra: NilpotentAlgebra, metric: Metric,
                     e1, e2, u1, u2, u3) -> ExtremalCandidate:
    """Ricci-minimal candidate u1; min eigenvalue -a^2 - b^2 is always
    simple since it lies strictly below both -a^2 and -b^2."""
    e1, e2, u1, u2, u3, u12, a, b = _check_eu_preconditions(
        algebra, metric, e1, e2, u1, u2, u3)
    return ExtremalCandidate(T=u1, lambda_extreme=-(a * a + b * b),
                             construction="eumin", simple=True, kind="min")


def candidate_T1_T2(algebra: NilpotentAlgebra, metric: Metric,
                    e1, e2, u1, u2, u3
                    ) -> tuple[ExtremalCandidate, ExtremalCandidate]:
    """The two Ricci-maximal candidates of the p=2, q=3 construction.

    Requires |a| > |b| on top of the orthogonality preconditions.
    """
    e1, e2, u1, u2, u3, u12, a, b = _check_eu_preconditions(
        algebra, metric, e1, e2, u1, u2, u3)
    if abs(a) <= abs(b):
        raise CandidateError(f"requires |a| > |b|, got |a|={abs(a):.3e}, "
                             f"|b|={abs(b):.3e}")
    u112 = algebra.bracket_float(u1, u12)
    u212 = algebra.bracket_float(u2, u12)
    u312 = algebra.bracket_float(u3, u12)
    p1 = metric.inner(e1, u212)
    p2 = metric.inner(e2, u312)
    p3 = metric.inner(e1, u112)
    p4 = metric.inner(e2, u112)
    t1 = (2.0 * (b * p1 + a * p2) * u1 - 3.0 * b * p3 * u2
          - 3.0 * a * p4 * u3 + 6.0 * a * b * u12)
    t2 = ((a * p1 + b * p2) / (2 * a * a + b * b) * u1
          - p3 / (2 * a) * u2
          - b * p4 / (a * a + b * b) * u3 + u12)
    c1 = ExtremalCandidate(T=t1, lambda_extreme=a * a,
                           construction="e2u3_T1", simple=True)
    c2 = ExtremalCandidate(T=t2, lambda_extreme=a * a,
                           construction="e2u3_T2", simple=True)
    return c1, c2


def derived_complement_frame(algebra: NilpotentAlgebra,
                             metric: Metric) -> np.ndarray:
    """g-orthonormal basis of the metric orthogonal complement of g'."""
    gp = algebra.derived_algebra()
    n = algebra.n
    if gp.dim == 0:
        w = np.zeros((0, n))
    else:
        w = np.array([[float(x) for x in row] for row in gp.basis])
    if w.shape[0] == 0:
        b = np.eye(n)
    else:
        _, s, vt = np.linalg.svd(w @ metric.gram)
        rank = int(np.sum(s > 1e-12 * max(s.max(), 1.0)))
        b = vt[rank:].T
    if b.shape[1] == 0:
        return b
    m = b.T @ metric.gram @ b
    chol = np.linalg.cholesky(m)
    return b @ np.linalg.inv(chol).T


def candidate_two_step(algebra: NilpotentAlgebra, metric: Metric,
                       e) -> ExtremalCandidate:
    """T = sum_{i,j} <e, u_ij> u_ij over a g-orthonormal basis of (g')^perp.

    Requires a two-step algebra and a unit e in g'. T is nonzero for
    nonzero e: the defining map is injective on g'.
    """
    if not algebra.is_two_step() or algebra.is_abelian():
        raise CandidateError("algebra must be two-step nilpotent "
                             "(and nonabelian)")
    e = np.asarray(e, float)
    gp = algebra.derived_algebra()
    if not gp.contains([Fraction(x).limit_denominator(10**9) for x in e]):
        raise CandidateError("e must lie in the derived algebra")
    if abs(metric.norm2(e) - 1.0) > 1e-10:
        raise CandidateError("e must be a unit vector")
    u = derived_complement_frame(algebra, metric)
    q = u.shape[1]
    t = np.zeros(algebra.n)
    lam = 0.0
    for i in range(q):
        for j in range(q):
            uij = algebra.bracket_float(u[:, i], u[:, j])
            coef = metric.inner(e, uij)
            t += coef * uij
            lam += coef * coef
    return ExtremalCandidate(T=t, lambda_extreme=lam,
                             construction="two_step", simple=True)


def spec_for_pattern(algebra: NilpotentAlgebra, metric: Metric,
                     plus: list[np.ndarray],
                     minus: list[np.ndarray]) -> DeformationSpec:
    """DeformationSpec with exponents +1 on `plus`, -1 on `minus`, 0 on a
    completed middle block; the given vectors must be g-orthonormal."""
    n = algebra.n
    p, q = len(plus), len(minus)
    chosen = [np.asarray(v, float) for v in plus + minus]
    _require_orthonormal(metric, chosen,
                         [f"v{i}" for i in range(len(chosen))])
    # complete to a g-orthonormal frame by Gram-Schmidt over the basis
    cols = list(plus)
    middle: list[np.ndarray] = []
    pool = chosen + [np.eye(n)[:, i] for i in range(n)]
    have = list(chosen)
    for v in pool[len(chosen):]:
        w = v.copy()
        for u in have:
            w = w - metric.inner(w, u) * u
        nrm = np.sqrt(max(metric.norm2(w), 0.0))
        if nrm > 1e-8:
            w = w / nrm
            have.append(w)
            middle.append(w)
        if len(have) == n:
            break
    if len(have) != n:
        raise CandidateError("could not complete frame")
    frame = np.column_stack(plus + middle + minus)
    lam = np.concatenate([np.ones(p), np.zeros(n - p - q), -np.ones(q)])
    return DeformationSpec(base=metric, lambdas=lam, frame=frame)


def projective_distance(u, v) -> float:
    """Sine of the principal angle between the lines R u and R v."""
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ValueError("projective distance undefined for the zero vector")
    c = np.dot(u, v) / (nu * nv)
    return float(np.sqrt(max(0.0, 1.0 - c * c)))


@dataclass
class ConvergenceTrace:
    rows: list[tuple[float, float, float]]  # (t, extreme eigenvalue, distance)
    clustered_at: list[float]
    converged: bool
    precision_limited_at: float | None = None

    def final_distance(self) -> float:
        return self.rows[-1][2]

    def best_distance(self) -> float:
        return min(r[2] for r in self.rows)


def convergence_check(spec: DeformationSpec, algebra: NilpotentAlgebra,
                      candidate: ExtremalCandidate,
                      t_grid=DEFAULT_T_GRID,
                      target: float = 1e-4) -> ConvergenceTrace:
    """Projective distance between the candidate line and the extremal
    eigendirection of ric_t along the grid.

    `converged` uses the best distance over the grid: once the eigenvector
    components across exponent blocks differ by more than the float
    precision (roughly exp(-spread * t) < machine epsilon), the recovered
    direction degrades again; that onset is recorded rather than treated
    as divergence.
    """
    if not candidate.simple:
        raise CandidateError("candidate eigenvalue is not certified simple")
    if candidate.is_zero:
        raise CandidateError("candidate vector is zero")
    spread = float(spec.lambdas.max() - spec.lambdas.min())
    precision_limit = (np.inf if spread == 0.0
                       else 2.0 * np.log(1e15) / spread)
    limited_at = None
    rows = []
    clustered = []
    for t in t_grid:
        if t > precision_limit and limited_at is None:
            limited_at = float(t)
        try:
            report = deformed_ricci(spec, algebra, t)
        except OverflowGuardError:
            break
        if candidate.kind == "max":
            vec = report.max_eigenvector
            lam = report.eigenvalues[-1]
            ok = report.max_simple
        else:
            vec = report.min_eigenvector
            lam = report.eigenvalues[0]
            ok = report.min_simple
        if not ok:
            clustered.append(t)
        rows.append((float(t), float(lam),
                     projective_distance(vec, candidate.T)))
    converged = bool(rows) and min(r[2] for r in rows) < target
    return ConvergenceTrace(rows=rows, clustered_at=clustered,
                            converged=converged,
                            precision_limited_at=limited_at)
