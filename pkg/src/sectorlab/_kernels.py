"""Bulk weighted geometric sums.

Both the character-sum table S_k = sum_n w_n exp(i k phi_n) and the
periodised-window coefficients c_k need the same object: all powers
k = 0..k_max of a fixed set of unimodular numbers, weighted and summed.
Doing this as k_max separate passes costs O(N k_max) trig calls; instead
each z_n = exp(i phi_n) is advanced by a blocked recurrence, and the
per-block contraction is a single complex matrix-vector product, so the
trig work is O(N) and the rest is BLAS.

Error note: the recurrence multiplies unimodular numbers, so the drift of
z_n^k after k steps is <= k half-ulps in phase, a relative ~1e-16 * k
perturbation of each term.  At the scales used here (k_max <= ~1e6,
partial sums ~1e4) that keeps every S_k well below the 1e-6 comparison
tolerances of the spectral cross-checks; outputs are bit-deterministic
because the block layout is fixed.
"""

from __future__ import annotations

import math

import numpy as np

_BLOCK = 64


def geometric_weighted_sums(phases: np.ndarray, weights: np.ndarray, k_max: int) -> np.ndarray:
    """out[k] = sum_n weights[n] * exp(i * k * phases[n]) for k = 0..k_max.

    out[0] is computed as an exactly real compensated sum of the weights.
    """
    phases = np.asarray(phases, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    if phases.shape != weights.shape or phases.ndim != 1:
        raise ValueError("phases and weights must be 1-d arrays of equal length")
    out = np.empty(k_max + 1, dtype=np.complex128)
    out[0] = math.fsum(weights)
    if k_max == 0:
        return out
    if phases.size == 0:
        out[1:] = 0.0
        return out
    z = np.exp(1j * phases)
    block = _BLOCK
    zpow = np.empty((block, phases.size), dtype=np.complex128)
    zpow[0] = z
    for r in range(1, block):
        np.multiply(zpow[r - 1], z, out=zpow[r])
    z_block = zpow[block - 1].copy()
    acc = weights.astype(np.complex128)
    k = 0
    while k < k_max:
        take = min(block, k_max - k)
        out[k + 1 : k + 1 + take] = zpow[:take] @ acc
        k += take
        if k < k_max:
            acc *= z_block
    return out
