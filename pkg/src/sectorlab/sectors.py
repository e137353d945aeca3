"""Sharp-cutoff sector statistics for Gaussian prime ideals.

The angles of prime ideals live on the quarter circle [0, pi/2).  A
sector is the half-open arc (beta, beta + gamma], taken modulo pi/2, and
the basic empirical question is how the ideal count in a sector compares
with its fair share gamma / (pi/2) of the total as the sector narrows.
This module provides the raw counts, the two natural normalisations of
the expected count, grid scans that measure how often narrow sectors
deviate from their share, the star discrepancy of the angle sample, and
the elementary exclusion zone around the axis: a split prime a^2 + b^2
with b >= 1 has angle > 1/(2 sqrt(norm)), so a neighbourhood of 0 shrinks
no faster than norm^(-1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadInput, BadSector, EmptyRange
from .ideals import _ideal_arrays

HALF_PI = math.pi / 2.0


@lru_cache(maxsize=32)
def _angle_tables(norm_min: int, norm_max: int, include_nonsplit: bool):
    """Angles sorted ascending, with log-norm weights aligned and prefix-summed."""
    _, _, _, norms, _, thetas = _ideal_arrays(norm_min, norm_max, include_nonsplit)
    order = np.argsort(thetas, kind="stable")
    th = thetas[order]
    w = np.log(norms[order].astype(np.float64))
    prefix = np.concatenate([[0.0], np.cumsum(w)])
    th.setflags(write=False)
    prefix.setflags(write=False)
    return th, prefix


def _validate_sector(beta: float, gamma: float):
    if not (0.0 <= beta < HALF_PI):
        raise BadSector(f"sector start {beta} outside [0, pi/2)")
    if not (0.0 < gamma <= HALF_PI):
        raise BadSector(f"sector width {gamma} outside (0, pi/2]")


def sector_count(
    beta: float, gamma: float, norm_min: int, norm_max: int,
    include_nonsplit: bool = True, weighted: bool = False,
) -> float:
    """Ideals with angle in the half-open arc (beta, beta + gamma] mod pi/2.

    Unweighted counts are exact ints; with weighted=True each ideal
    contributes log(norm) instead of 1 and the result is a float.
    """
    _validate_sector(beta, gamma)
    th, prefix = _angle_tables(int(norm_min), int(norm_max), include_nonsplit)
    n = th.size

    def rank(x):
        return int(np.searchsorted(th, x, side="right"))

    end = beta + gamma
    if end < HALF_PI:
        i, j = rank(beta), rank(end)
        if weighted:
            return float(prefix[j] - prefix[i])
        return j - i
    # arc reaching or passing pi/2 wraps through 0, where the inert angles
    # live: (beta, pi/2) plus [0, beta + (gamma - pi/2)]; that form of the
    # second endpoint makes gamma = pi/2 an exact full circle
    tail = rank(beta + (gamma - HALF_PI))
    i = rank(beta)
    if weighted:
        return float(prefix[n] - prefix[i] + prefix[tail])
    return n - i + tail


def expected_count(
    gamma: float, norm_min: int, norm_max: int,
    mode: str = "empirical", include_nonsplit: bool = True,
) -> float:
    """Fair share of a width-gamma sector.

    empirical mode: gamma/(pi/2) times the actual number of ideals in the
    norm range.  pit mode: gamma/(pi/2) times the integral-logarithm count
    int dt/log t over the norm range, the smooth prediction that needs no
    enumeration.
    """
    if not (0.0 < gamma <= HALF_PI):
        raise BadSector(f"sector width {gamma} outside (0, pi/2]")
    if mode == "empirical":
        th, _ = _angle_tables(int(norm_min), int(norm_max), include_nonsplit)
        return (gamma / HALF_PI) * th.size
    if mode == "pit":
        from .windows import adaptive_simpson

        lo = max(2.0, float(norm_min))
        hi = float(norm_max)
        if hi <= lo:
            return 0.0
        li = adaptive_simpson(lambda t: 1.0 / np.log(t), lo, hi, tol=1e-8)
        return (gamma / HALF_PI) * float(li)
    raise BadInput(f"unknown expected-count mode {mode!r}")


@dataclass(frozen=True)
class SectorScanReport:
    """Counts of a fixed-width sector slid through a uniform grid of offsets.

    Sector j starts at beta_j = j (pi/2) / grid_size and has width gamma =
    (pi/2) X^(-rho).  deviations[j] = counts[j]/expected - 1, and
    exceptional_fraction[delta] is the fraction of offsets with
    |deviation| > delta.
    """

    X: int
    rho: float
    gamma: float
    grid_size: int
    counts: np.ndarray
    expected: float
    deviations: np.ndarray
    exceptional_fraction: dict

    @property
    def betas(self) -> np.ndarray:
        return np.arange(self.grid_size) * (HALF_PI / self.grid_size)


def sector_scan(
    X: int, rho: float, grid_size: int,
    deltas: tuple = (0.1, 0.25, 0.5), include_nonsplit: bool = True,
) -> SectorScanReport:
    """Slide a width (pi/2) X^(-rho) sector around the quarter circle.

    rho = 0 is the full circle (every deviation is exactly zero); larger
    rho narrows the sector, and past the equidistribution range the
    deviations blow up for a growing fraction of offsets.
    """
    X = int(X)
    if X < 2:
        raise BadInput(f"norm bound X = {X} must be >= 2")
    if not (0.0 <= rho < 1.0):
        raise BadInput(f"narrowing exponent rho = {rho} outside [0, 1)")
    grid_size = int(grid_size)
    if grid_size < 1:
        raise BadInput(f"grid size {grid_size} must be >= 1")
    th, _ = _angle_tables(1, X, include_nonsplit)
    n = th.size
    if n == 0:
        raise EmptyRange(f"no prime ideals with norm in (1, {X}]")
    gamma = HALF_PI * X ** (-rho)
    betas = np.arange(grid_size) * (HALF_PI / grid_size)
    starts = np.searchsorted(th, betas, side="right")
    ends = betas + gamma
    wrapped = ends >= HALF_PI
    tail_pts = betas + (gamma - HALF_PI)
    counts = np.where(
        wrapped,
        n - starts + np.searchsorted(th, tail_pts, side="right"),
        np.searchsorted(th, ends, side="right") - starts,
    ).astype(np.int64)
    expected = (gamma / HALF_PI) * n
    deviations = counts / expected - 1.0
    fractions = {float(d): float(np.mean(np.abs(deviations) > d)) for d in deltas}
    counts.setflags(write=False)
    deviations.setflags(write=False)
    return SectorScanReport(
        X=X, rho=float(rho), gamma=float(gamma), grid_size=grid_size,
        counts=counts, expected=float(expected), deviations=deviations,
        exceptional_fraction=fractions,
    )


def forbidden_region_check(norm_max: int, include_nonsplit: bool = True) -> float:
    """Smallest positive angle among ideals with norm <= norm_max.

    Asserts the exclusion bound min_angle > 1/(2 sqrt(norm_max)) and
    returns the minimum.  Angle-zero ideals (the inert ones) are ignored.
    """
    th, _ = _angle_tables(1, int(norm_max), include_nonsplit)
    positive = th[th > 0.0]
    if positive.size == 0:
        raise EmptyRange(f"no ideals with positive angle and norm <= {norm_max}")
    min_angle = float(positive[0])
    assert min_angle > 1.0 / (2.0 * math.sqrt(norm_max))
    return min_angle


def discrepancy(norm_min: int, norm_max: int, include_nonsplit: bool = True) -> float:
    """Star discrepancy of the normalised angles theta/(pi/2) in [0, 1)."""
    th, _ = _angle_tables(int(norm_min), int(norm_max), include_nonsplit)
    if th.size == 0:
        raise EmptyRange(f"no prime ideals with norm in ({norm_min}, {norm_max}]")
    u = th / HALF_PI
    n = u.size
    i = np.arange(1, n + 1)
    return float(np.maximum(i / n - u, u - (i - 1) / n).max())
