"""Prime ideals of Z[i] with their angular coordinates.

Every nonzero prime ideal of the Gaussian integers sits above a rational
prime p and falls into one of three classes: p = 2 ramifies as (1+i)^2,
p = 1 mod 4 splits into a conjugate pair of degree-one ideals of norm p,
and p = 3 mod 4 stays inert with norm p^2.  A degree-one ideal has a
generator a + bi, unique up to units, and we normalise the generator to
the first quadrant (a > 0, b >= 0) so that the angle

    theta = atan2(b, a)  in  [0, pi/2)

is a well-defined invariant of the ideal.  Enumeration is driven by a
segmented sieve of rational primes; each split prime is resolved into
a^2 + b^2 = p by Cornacchia's algorithm, which needs a square root of
-1 mod p, supplied by Tonelli-Shanks.

All enumerations are over half-open norm windows (norm_min, norm_max]
so that disjoint windows partition exactly; results are sorted by
(norm, theta).  The array-level helpers at the bottom are cached and
immutable, and feed the statistical modules.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadInput, NonResidue

HALF_PI = math.pi / 2.0

_SEGMENT = 1 << 23  # sieve block length, keeps masks comfortably in cache


def sieve_rational_primes(limit: int) -> np.ndarray:
    """Return all rational primes <= limit as an ascending int64 array."""
    limit = int(limit)
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def _primes_in_range(lo: int, hi: int) -> np.ndarray:
    """Primes in the half-open window (lo, hi], sieved segment by segment."""
    lo, hi = int(lo), int(hi)
    if hi < 2 or hi <= lo:
        return np.empty(0, dtype=np.int64)
    lo = max(lo, 1)
    base = sieve_rational_primes(math.isqrt(hi))
    chunks = []
    start = lo + 1
    while start <= hi:
        stop = min(start + _SEGMENT - 1, hi)
        mask = np.ones(stop - start + 1, dtype=bool)
        for p in base.tolist():
            if p * p > stop:
                break
            first = max(p * p, ((start + p - 1) // p) * p)
            mask[first - start :: p] = False
        if start <= 1:
            mask[: 2 - start] = False
        chunks.append(np.nonzero(mask)[0] + start)
        start = stop + 1
    return np.concatenate(chunks).astype(np.int64) if chunks else np.empty(0, dtype=np.int64)


def sqrt_mod(n: int, p: int) -> int:
    """Solve r^2 = n (mod p) for odd prime p with gcd(n, p) = 1.

    Returns the canonical smaller root r with 1 <= r <= p - r.  Raises
    NonResidue when n is not a quadratic residue mod p.  The p = 3 mod 4
    and p = 5 mod 8 cases use direct exponentiation; the rest run the
    Tonelli-Shanks loop.
    """
    p = int(p)
    if p < 3 or p % 2 == 0:
        raise BadInput(f"modulus {p} is not an odd prime")
    n = int(n) % p
    if n == 0:
        raise BadInput("sqrt_mod requires gcd(n, p) = 1")
    if pow(n, (p - 1) // 2, p) != 1:
        raise NonResidue(f"{n} is not a square modulo {p}")
    if p % 4 == 3:
        r = pow(n, (p + 1) // 4, p)
    elif p % 8 == 5:
        r = pow(n, (p + 3) // 8, p)
        if r * r % p != n:
            r = r * pow(2, (p - 1) // 4, p) % p
    else:
        # Tonelli-Shanks: write p - 1 = q * 2^s with q odd
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        c = pow(z, q, p)
        r = pow(n, (q + 1) // 2, p)
        t = pow(n, q, p)
        m = s
        while t != 1:
            t2, i = t * t % p, 1
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m = i
            c = b * b % p
            r = r * b % p
            t = t * c % p
    return min(r, p - r)


def cornacchia(p: int) -> tuple[int, int]:
    """Decompose a prime p = 1 mod 4 as a^2 + b^2 with a odd, b even.

    Euclidean descent from a square root of -1 mod p; the first remainder
    at most sqrt(p) is one leg of the unique decomposition, and exactness
    of the other leg is asserted rather than trusted.
    """
    p = int(p)
    if p % 4 != 1 or p < 5:
        raise BadInput(f"{p} is not a prime congruent to 1 mod 4")
    x = sqrt_mod(p - 1, p)
    x = max(x, p - x)
    a, b = p, x
    s = math.isqrt(p)
    while b > s:
        a, b = b, a % b
    c = p - b * b
    r = math.isqrt(c)
    if r * r != c:
        raise ArithmeticError(f"descent failed for p = {p}")  # unreachable for prime p
    return (b, r) if b % 2 == 1 else (r, b)


class Splitting(str, enum.Enum):
    """How a rational prime decomposes in Z[i]."""

    SPLIT = "split"
    RAMIFIED = "ramified"
    INERT = "inert"


_SPLIT, _RAMIFIED, _INERT = 0, 1, 2
_CODE_TO_SPLITTING = {0: Splitting.SPLIT, 1: Splitting.RAMIFIED, 2: Splitting.INERT}


@dataclass(frozen=True, slots=True)
class GaussianPrimeIdeal:
    """A prime ideal of Z[i] with its normalised generator and angle."""

    p: int
    a: int
    b: int
    norm: int
    splitting: Splitting
    theta: float

    def __post_init__(self):
        if self.a * self.a + self.b * self.b != self.norm:
            raise BadInput(f"generator ({self.a}, {self.b}) does not have norm {self.norm}")
        if self.a <= 0 or self.b < 0:
            raise BadInput("generator must lie in the first quadrant: a > 0, b >= 0")


@dataclass(frozen=True, slots=True)
class LambdaEntry:
    """A prime-power ideal with the von Mangoldt weight of its base.

    The ideal is base^r; its norm is base.norm ** r, its angle is
    r * base.theta reduced mod pi/2, and the weight log(base.norm) does
    not depend on r.
    """

    base: GaussianPrimeIdeal
    r: int
    norm: int
    theta: float
    weight: float


def _validate_window(norm_min: int, norm_max: int) -> tuple[int, int]:
    try:
        norm_min, norm_max = int(norm_min), int(norm_max)
    except (TypeError, ValueError) as exc:
        raise BadInput("norm bounds must be integers") from exc
    if norm_min < 0 or norm_max < norm_min:
        raise BadInput(f"bad norm window ({norm_min}, {norm_max}]")
    return norm_min, norm_max


@lru_cache(maxsize=64)
def _ideal_arrays(norm_min: int, norm_max: int, include_nonsplit: bool = True):
    """Arrays (p, a, b, norm, code, theta) for ideals with norm in (norm_min, norm_max].

    Sorted by (norm, theta); all arrays are read-only so they can be shared
    freely between callers and threads.
    """
    norm_min, norm_max = _validate_window(norm_min, norm_max)
    ps, aa, bb, nn, cc = [], [], [], [], []

    split_p = _primes_in_range(norm_min, norm_max)
    split_p = split_p[split_p % 4 == 1]
    for p in split_p.tolist():
        a, b = cornacchia(p)
        ps += [p, p]
        aa += [a, b]
        bb += [b, a]
        nn += [p, p]
        cc += [_SPLIT, _SPLIT]

    if include_nonsplit:
        if norm_min < 2 <= norm_max:
            ps.append(2)
            aa.append(1)
            bb.append(1)
            nn.append(2)
            cc.append(_RAMIFIED)
        inert_p = _primes_in_range(math.isqrt(norm_min), math.isqrt(norm_max))
        inert_p = inert_p[inert_p % 4 == 3]
        for p in inert_p.tolist():
            ps.append(p)
            aa.append(p)
            bb.append(0)
            nn.append(p * p)
            cc.append(_INERT)

    p_arr = np.array(ps, dtype=np.int64)
    a_arr = np.array(aa, dtype=np.int64)
    b_arr = np.array(bb, dtype=np.int64)
    n_arr = np.array(nn, dtype=np.int64)
    c_arr = np.array(cc, dtype=np.int8)
    theta = np.arctan2(b_arr.astype(np.float64), a_arr.astype(np.float64))

    order = np.lexsort((theta, n_arr))
    out = (p_arr[order], a_arr[order], b_arr[order], n_arr[order], c_arr[order], theta[order])
    for arr in out:
        arr.setflags(write=False)
    return out


def _iroot(n: int, r: int) -> int:
    """Largest integer m with m**r <= n."""
    if n < 0 or r < 1:
        raise BadInput("bad arguments to integer root")
    if r == 1 or n < 2:
        return n
    m = int(round(n ** (1.0 / r)))
    while m > 0 and m**r > n:
        m -= 1
    while (m + 1) ** r <= n:
        m += 1
    return m


@lru_cache(maxsize=64)
def _lambda_arrays(norm_min: int, norm_max: int, include_nonsplit: bool = True):
    """Arrays (norm, theta, weight, r) for prime-power ideals in (norm_min, norm_max].

    Sorted by (norm, theta).  weight is log of the base norm; the r array
    lets callers separate genuine primes (r = 1) from higher powers.
    """
    norm_min, norm_max = _validate_window(norm_min, norm_max)
    parts_n, parts_t, parts_w, parts_r = [], [], [], []

    r = 1
    while norm_max >= 2**r:
        # base norms are capped at the integer r-th root, so powers fit in int64
        cap = _iroot(norm_max, r)
        _, _, _, n_arr, _, t_arr = _ideal_arrays(0, cap, include_nonsplit)
        powers = n_arr**r
        keep = powers > norm_min
        if np.any(keep):
            n_arr, t_arr, powers = n_arr[keep], t_arr[keep], powers[keep]
            theta = np.fmod(r * t_arr, HALF_PI) if r > 1 else t_arr
            parts_n.append(powers)
            parts_t.append(theta)
            parts_w.append(np.log(n_arr.astype(np.float64)))
            parts_r.append(np.full(n_arr.size, r, dtype=np.int32))
        r += 1

    if not parts_n:
        empty = (
            np.empty(0, dtype=np.int64),
            np.empty(0, dtype=np.float64),
            np.empty(0, dtype=np.float64),
            np.empty(0, dtype=np.int32),
        )
        for arr in empty:
            arr.setflags(write=False)
        return empty

    norm = np.concatenate(parts_n)
    theta = np.concatenate(parts_t)
    weight = np.concatenate(parts_w)
    rr = np.concatenate(parts_r)
    order = np.lexsort((theta, norm))
    out = (norm[order], theta[order], weight[order], rr[order])
    for arr in out:
        arr.setflags(write=False)
    return out


def enumerate_prime_ideals(
    norm_min: int, norm_max: int, include_nonsplit: bool = True
) -> list[GaussianPrimeIdeal]:
    """All prime ideals with norm in (norm_min, norm_max], sorted by (norm, theta)."""
    p_arr, a_arr, b_arr, n_arr, c_arr, theta = _ideal_arrays(norm_min, norm_max, include_nonsplit)
    return [
        GaussianPrimeIdeal(
            p=int(p), a=int(a), b=int(b), norm=int(n),
            splitting=_CODE_TO_SPLITTING[int(c)], theta=float(t),
        )
        for p, a, b, n, c, t in zip(
            p_arr.tolist(), a_arr.tolist(), b_arr.tolist(),
            n_arr.tolist(), c_arr.tolist(), theta.tolist(),
        )
    ]


def lambda_entries(
    norm_min: int, norm_max: int, include_nonsplit: bool = True
) -> list[LambdaEntry]:
    """Prime-power ideals base^r with norm in (norm_min, norm_max], sorted by (norm, theta).

    The weight attached to base^r is log(base.norm), so summing weights over
    entries recovers the von Mangoldt count for the window.
    """
    norm_min, norm_max = _validate_window(norm_min, norm_max)
    entries: list[LambdaEntry] = []
    r = 1
    while norm_max >= 2**r:
        cap = _iroot(norm_max, r)
        for ideal in enumerate_prime_ideals(0, cap, include_nonsplit):
            norm_r = ideal.norm**r
            if norm_r <= norm_min or norm_r > norm_max:
                continue
            theta = math.fmod(r * ideal.theta, HALF_PI) if r > 1 else ideal.theta
            entries.append(
                LambdaEntry(
                    base=ideal, r=r, norm=norm_r, theta=theta,
                    weight=math.log(ideal.norm),
                )
            )
        r += 1
    entries.sort(key=lambda e: (e.norm, e.theta))
    return entries
