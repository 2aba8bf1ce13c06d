"""Complex linear algebra helpers: SVD, block-diagonal assembly, water-filling.

Matrices are numpy ``complex128`` arrays in row-major order.  All functions
are pure and never mutate their inputs.  The SVD is delegated to LAPACK via
numpy; the sizes that show up here (receive arrays times RF chains) are tiny,
so the only contract that matters is the reconstruction/unitarity tolerance,
which is checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SvdError",
    "SvdResult",
    "svd",
    "block_diag",
    "water_filling",
    "matmul",
    "hermitian",
    "frobenius_norm",
]


class SvdError(ArithmeticError):
    """SVD iteration failed to converge; message names the matrix shape."""


def _as_matrix(a, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.size == 0:
        raise ValueError(f"{name} must be a non-empty 2-D array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} entries must be finite")
    return a


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD ``a = u @ diag(sigma) @ vh``, sigma sorted non-increasing."""

    u: np.ndarray
    sigma: np.ndarray
    vh: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.sigma) @ self.vh


def svd(a) -> SvdResult:
    """Thin singular value decomposition of a complex matrix."""
    a = _as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise SvdError(
            f"SVD did not converge for {a.shape[0]}x{a.shape[1]} matrix"
        ) from exc
    return SvdResult(u=u, sigma=s, vh=vh)


def block_diag(blocks) -> np.ndarray:
    """Stack matrices along the diagonal; off-block entries are exactly zero.

    1-D blocks are treated as column vectors, so K length-P blocks give an
    (K*P) x K matrix.
    """
    mats = []
    for b in blocks:
        b = np.asarray(b, dtype=np.complex128)
        if b.ndim == 1:
            b = b[:, None]
        if b.ndim != 2:
            raise ValueError(f"blocks must be 1-D or 2-D, got ndim={b.ndim}")
        mats.append(b)
    if not mats:
        raise ValueError("block_diag needs at least one block")
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    out = np.zeros((rows, cols), dtype=np.complex128)
    r = c = 0
    for m in mats:
        out[r : r + m.shape[0], c : c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return out


def water_filling(gains, total_power: float) -> np.ndarray:
    """Water-filling power allocation over parallel channels.

    Returns p with p_i = max(0, mu - 1/gains_i) and sum(p) = total_power,
    where the water level mu is solved in closed form over the sorted
    inverse gains (no iteration).
    """
    g = np.asarray(gains, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise ValueError("gains must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(g)) or np.any(g <= 0.0):
        raise ValueError("gains must be positive and finite")
    if not (np.isfinite(total_power) and total_power > 0.0):
        raise ValueError("total_power must be positive and finite")
    inv = np.sort(1.0 / g)
    # Largest k for which the level (P + sum of the k smallest 1/g) / k still
    # covers the k-th inverse gain; channels beyond k get zero power.
    levels = (total_power + np.cumsum(inv)) / np.arange(1, g.size + 1)
    k = int(np.nonzero(levels >= inv)[0][-1]) + 1
    mu = levels[k - 1]
    p = np.maximum(0.0, mu - 1.0 / g)
    total = p.sum()
    if total > 0.0:
        # exact-budget rescale; drift is O(eps) except for near-degenerate gains
        return p * (total_power / total)
    # all active inverse gains so large that the budget vanished in rounding:
    # the channels are then indistinguishable, split evenly over the active set
    p[1.0 / g <= inv[k - 1]] = 1.0
    return p * (total_power / p.sum())


def matmul(a, b) -> np.ndarray:
    a = _as_matrix(a, "left factor")
    b = _as_matrix(b, "right factor")
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def hermitian(a) -> np.ndarray:
    """Conjugate transpose."""
    return _as_matrix(a).conj().T


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=np.complex128)))
