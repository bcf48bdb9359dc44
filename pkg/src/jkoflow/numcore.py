"""Dense linear algebra, keyed random streams, and finite-difference oracles.

Everything here is pure: results depend only on the arguments, and random
draws are keyed by a counter-based substream id, never by shared mutable
state. All arrays are contiguous float64.
"""

from dataclasses import dataclass

import numpy as np

from .errors import Breakdown, NotSPD

__all__ = [
    "RngStream",
    "rademacher",
    "cholesky_logdet",
    "cg_solve",
    "CgResult",
    "finite_diff_grad",
    "as_finite",
]


def as_finite(a, what="array"):
    """Return ``a`` as a float64 array, rejecting NaN/Inf entries."""
    a = np.asarray(a, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} contains non-finite entries")
    return a


class RngStream:
    """Counter-based random substreams keyed by integer ids.

    ``RngStream(seed).substream(step, particle, probe)`` returns a fresh
    ``numpy.random.Generator`` whose draws depend only on the seed and the
    id tuple, so parallel schedules cannot change results.
    """

    def __init__(self, seed):
        self.seed = int(seed)

    def substream(self, *ids):
        key = np.random.SeedSequence(
            entropy=self.seed, spawn_key=tuple(int(i) for i in ids)
        )
        return np.random.Generator(np.random.Philox(key))

    def __repr__(self):
        return f"RngStream(seed={self.seed})"


def rademacher(d, gen):
    """Vector of ±1 entries drawn from generator ``gen``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return 2.0 * gen.integers(0, 2, size=d).astype(np.float64) - 1.0


def cholesky_logdet(H):
    """Log-determinant of an SPD matrix via its Cholesky factor.

    Returns ``(logdet, L)`` with ``L`` lower triangular and
    ``L @ L.T == H``. Accepts a stack of matrices ``(..., d, d)``, in
    which case ``logdet`` has the leading shape.

    Raises ``NotSPD`` when a pivot is non-positive and ``ValueError`` when
    the input is not symmetric to 1e-10 relative.
    """
    H = np.asarray(H, dtype=np.float64)
    if H.ndim < 2 or H.shape[-1] != H.shape[-2]:
        raise ValueError(f"expected square matrix, got shape {H.shape}")
    sym_err = np.abs(H - np.swapaxes(H, -1, -2)).max()
    scale = max(np.abs(H).max(), 1.0)
    if sym_err > 1e-10 * scale:
        raise ValueError(f"matrix not symmetric: deviation {sym_err:.3e}")
    try:
        L = np.linalg.cholesky(H)
    except np.linalg.LinAlgError as e:
        raise NotSPD(f"Cholesky failed (non-positive pivot): {e}") from None
    diag = np.diagonal(L, axis1=-2, axis2=-1)
    logdet = 2.0 * np.sum(np.log(diag), axis=-1)
    return logdet, L


@dataclass
class CgResult:
    x: np.ndarray
    iterations: int
    converged: bool
    residual_norm: float


def cg_solve(matvec, v, tol=1e-10, max_iter=None, x0=None):
    """Conjugate gradients for ``H x = v`` given only the action of H.

    Stops when ``||H x - v|| <= tol * ||v||`` or after ``max_iter``
    iterations (default: problem dimension); the result metadata reports
    which. Raises ``Breakdown`` if a search direction has non-positive
    curvature, which signals a non-SPD operator.
    """
    v = as_finite(v, "rhs")
    n = v.shape[0]
    if max_iter is None:
        max_iter = n
    vnorm = np.linalg.norm(v)
    if vnorm == 0.0:
        return CgResult(np.zeros_like(v), 0, True, 0.0)
    x = np.zeros_like(v) if x0 is None else np.array(x0, dtype=np.float64)
    r = v - matvec(x) if x0 is not None else v.copy()
    p = r.copy()
    rs = float(r @ r)
    it = 0
    while np.sqrt(rs) > tol * vnorm and it < max_iter:
        Hp = matvec(p)
        curv = float(p @ Hp)
        if curv <= 0.0:
            raise Breakdown(f"non-positive curvature {curv:.3e} at iteration {it}")
        alpha = rs / curv
        x = x + alpha * p
        r = r - alpha * Hp
        rs_new = float(r @ r)
        p = r + (rs_new / rs) * p
        rs = rs_new
        it += 1
    res = np.sqrt(rs)
    return CgResult(x, it, bool(res <= tol * vnorm), float(res))


def finite_diff_grad(f, x, h=1e-5):
    """Central-difference gradient of a scalar function of a vector."""
    x = np.asarray(x, dtype=np.float64)
    g = np.empty_like(x)
    for i in range(x.size):
        xp = x.copy()
        xm = x.copy()
        xp.flat[i] += h
        xm.flat[i] -= h
        g.flat[i] = (f(xp) - f(xm)) / (2.0 * h)
    return g
