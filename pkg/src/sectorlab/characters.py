"""Angular characters on Gaussian ideals and their weighted sums.

A nonzero ideal of Z[i] has a generator a + bi that is unique up to the
four unit rotations, so the angle theta = atan2(b, a) is well defined
modulo pi/2 and

    xi_k(a, b) = exp(4 i k theta)

depends only on the ideal.  Summing xi_k against a smooth cutoff in the
norm, with von Mangoldt weights, gives the character sums

    S_k(X) = sum_a Phi(N(a)/X) Lambda(a) xi_k(a),

the Fourier data behind every smoothed sector statistic here.  Cancella-
tion in S_k for k != 0 (against the trivial bound S_0) is exactly angular
equidistribution of the prime ideals.

Single sums are accumulated with math.fsum in the fixed (norm, theta)
ordering of the entry tables, so repeated runs are bit-identical; the
bulk table route uses the blocked kernel and is cross-checked against
the direct route in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import geometric_weighted_sums
from .errors import BadInput
from .ideals import _ideal_arrays, _lambda_arrays
from .windows import SmoothWindow


def xi(a: int, b: int, k: int) -> complex:
    """The character exp(4 i k theta) of the ideal generated by a + bi."""
    if a == 0 and b == 0:
        raise BadInput("xi is undefined at 0")
    theta = math.atan2(b, a)
    return complex(math.cos(4.0 * k * theta), math.sin(4.0 * k * theta))


def _norm_window(X: float, phi: SmoothWindow) -> tuple[int, int]:
    """Half-open integer norm range (lo, hi] on which Phi(n/X) can be nonzero."""
    lo = max(0, math.ceil(X * phi.lo) - 1)
    hi = math.floor(X * phi.hi)
    return lo, hi


def _weighted_entries(X, phi, variant, include_nonsplit):
    if variant not in ("powers", "primes"):
        raise BadInput(f"unknown variant {variant!r}")
    X = float(X)
    if not X >= 2.0:
        raise BadInput(f"scale X = {X} must be >= 2")
    if phi.lo < 0.0:
        raise BadInput(f"cutoff support [{phi.lo}, {phi.hi}] must sit in (0, inf)")
    lo, hi = _norm_window(X, phi)
    if variant == "powers":
        norms, thetas, logs, _ = _lambda_arrays(lo, hi, include_nonsplit)
    else:
        _, _, _, norms, _, thetas = _ideal_arrays(lo, hi, include_nonsplit)
        logs = np.log(norms.astype(np.float64))
    weights = phi(norms / X) * logs
    return norms, thetas, weights


def character_sum(
    k: int, X: float, phi: SmoothWindow,
    variant: str = "powers", include_nonsplit: bool = True,
) -> complex:
    """S_k(X) with cutoff Phi, compensated summation, deterministic order."""
    _, thetas, weights = _weighted_entries(X, phi, variant, include_nonsplit)
    angles = (4.0 * k) * thetas
    re = math.fsum(weights * np.cos(angles))
    im = math.fsum(weights * np.sin(angles)) if k != 0 else 0.0
    return complex(re, im)


def weyl_sum(k: int, norm_min: int, norm_max: int, include_nonsplit: bool = True) -> complex:
    """Unweighted sum of xi_k over prime ideals with norm in (norm_min, norm_max].

    k = 0 is rejected: the unnormalised count is not a cancellation probe.
    """
    if k == 0:
        raise BadInput("weyl_sum needs k != 0")
    _, _, _, _, _, thetas = _ideal_arrays(int(norm_min), int(norm_max), include_nonsplit)
    angles = (4.0 * k) * thetas
    return complex(math.fsum(np.cos(angles)), math.fsum(np.sin(angles)))


@dataclass(frozen=True)
class CharacterSumTable:
    """S_k for all k = 0..k_max at a fixed scale and cutoff.

    values[k] = S_k; values[0] is exactly real.  Built by the blocked
    geometric kernel, so the cost is one trig pass over the entries plus
    BLAS, independent of k_max up to memory.
    """

    X: float
    k_max: int
    variant: str
    phi_id: str
    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)

    def __getitem__(self, k: int) -> complex:
        if not 0 <= k <= self.k_max:
            raise BadInput(f"k = {k} outside table range 0..{self.k_max}")
        return complex(self.values[k])


def character_sum_table(
    X: float, k_max: int, phi: SmoothWindow,
    variant: str = "powers", include_nonsplit: bool = True,
) -> CharacterSumTable:
    """Tabulate S_0..S_{k_max} in one pass over the weighted entries."""
    if k_max < 0:
        raise BadInput(f"k_max = {k_max} must be >= 0")
    _, thetas, weights = _weighted_entries(X, phi, variant, include_nonsplit)
    values = geometric_weighted_sums(4.0 * thetas, weights, k_max)
    return CharacterSumTable(X=float(X), k_max=int(k_max), variant=variant,
                             phi_id=phi.window_id, values=values)
