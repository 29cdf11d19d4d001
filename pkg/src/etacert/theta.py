"""Ramanujan theta series, the triple product, and residue-class dissection.

Only the positive specializations f(q^alpha, q^beta) are needed here; the
bilateral sum and the triple product are built independently so either can
cross-check the other.
"""

from dataclasses import dataclass

from .series import TruncatedSeries, eta_factor, series_mul

__all__ = [
    "ThetaSpec",
    "DissectionBlocks",
    "ResidueClassSplit",
    "theta_series",
    "jtp_product",
    "psi_series",
    "jacobi_cube",
    "dissect",
    "extract_arithmetic_progression",
    "build_dissection_blocks",
]


@dataclass(frozen=True, slots=True)
class ThetaSpec:
    """f(q^alpha, q^beta) with alpha, beta >= 1."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError(f"theta exponents must be >= 1, got ({self.alpha}, {self.beta})")


@dataclass(frozen=True, slots=True)
class DissectionBlocks:
    """The three components of the 5-dissection of psi(q).

    block_a = f(q^10, q^15) and block_b = f(q^5, q^20) live on exponents
    divisible by 5; block_c = psi(q^25) on exponents divisible by 25.
    """

    block_a: TruncatedSeries
    block_b: TruncatedSeries
    block_c: TruncatedSeries


@dataclass(frozen=True, slots=True)
class ResidueClassSplit:
    """Full-length subseries per exponent residue class; classes sum to the input."""

    modulus: int
    classes: tuple[TruncatedSeries, ...]

    def recombine(self) -> TruncatedSeries:
        total = self.classes[0]
        for cls in self.classes[1:]:
            total = total + cls
        return total


def theta_series(spec: ThetaSpec, order: int) -> TruncatedSeries:
    """Bilateral sum over n of q^(alpha*n(n+1)/2 + beta*n(n-1)/2), truncated.

    Each direction of n is walked until its exponent exceeds the order; the
    exponent is checked per term rather than bounded in closed form.
    """
    out = [0] * (order + 1)
    n = 0
    while True:
        e = (spec.alpha * n * (n + 1) + spec.beta * n * (n - 1)) // 2
        if e > order:
            break
        out[e] += 1
        n += 1
    n = -1
    while True:
        e = (spec.alpha * n * (n + 1) + spec.beta * n * (n - 1)) // 2
        if e > order:
            break
        out[e] += 1
        n -= 1
    return TruncatedSeries(order, tuple(out))


def jtp_product(spec: ThetaSpec, order: int) -> TruncatedSeries:
    """Triple-product form (-q^a; q^(a+b)) (-q^b; q^(a+b)) (q^(a+b); q^(a+b))."""
    period = spec.alpha + spec.beta
    acc = [0] * (order + 1)
    acc[0] = 1
    for start in (spec.alpha, spec.beta):
        e = start
        while e <= order:
            # multiply in place by (1 + q^e)
            for i in range(order, e - 1, -1):
                if acc[i - e]:
                    acc[i] += acc[i - e]
            e += period
    return series_mul(TruncatedSeries(order, tuple(acc)), eta_factor(period, order))


def psi_series(scale: int, order: int) -> TruncatedSeries:
    """psi(q^scale) = sum over n >= 0 of q^(scale*n(n+1)/2)."""
    if scale < 1:
        raise ValueError(f"scale must be positive, got {scale}")
    out = [0] * (order + 1)
    n = 0
    while True:
        e = scale * n * (n + 1) // 2
        if e > order:
            break
        out[e] += 1
        n += 1
    return TruncatedSeries(order, tuple(out))


def jacobi_cube(order: int) -> TruncatedSeries:
    """Cube of (q;q)_inf as the weighted triangular series sum (-1)^n (2n+1) q^(n(n+1)/2)."""
    out = [0] * (order + 1)
    n = 0
    while True:
        e = n * (n + 1) // 2
        if e > order:
            break
        out[e] += (2 * n + 1) if n % 2 == 0 else -(2 * n + 1)
        n += 1
    return TruncatedSeries(order, tuple(out))


def dissect(s: TruncatedSeries, m: int) -> ResidueClassSplit:
    """Split s into m subseries by exponent residue class mod m."""
    if m < 1:
        raise ValueError(f"dissection modulus must be >= 1, got {m}")
    buckets = [[0] * (s.order + 1) for _ in range(m)]
    for n, c in enumerate(s.coeffs):
        if c:
            buckets[n % m][n] = c
    return ResidueClassSplit(
        m, tuple(TruncatedSeries(s.order, tuple(b)) for b in buckets)
    )


def extract_arithmetic_progression(s: TruncatedSeries, m: int, t: int) -> TruncatedSeries:
    """Series of coefficients s(m*n + t); order floor((s.order - t)/m)."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if not 0 <= t < m:
        raise ValueError(f"residue {t} outside 0..{m - 1}")
    if t > s.order:
        raise ValueError(f"no coefficient at exponent {t} is known (order {s.order})")
    out_order = (s.order - t) // m
    return TruncatedSeries(out_order, tuple(s.coeffs[m * n + t] for n in range(out_order + 1)))


def build_dissection_blocks(order: int) -> DissectionBlocks:
    """The a, b, c blocks of psi(q) = a + q b + q^3 c at the given order."""
    return DissectionBlocks(
        block_a=theta_series(ThetaSpec(10, 15), order),
        block_b=theta_series(ThetaSpec(5, 20), order),
        block_c=psi_series(25, order),
    )
