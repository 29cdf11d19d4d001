"""Truncated power series over the integers, and eta-quotient expansion.

Every series is a finite prefix of a formal power series in q: exact
arbitrary-precision integer coefficients for exponents 0..order, nothing
floating-point anywhere.  Binary operations truncate to the smaller order;
precision is never extended silently.
"""

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Mapping

__all__ = [
    "TruncatedSeries",
    "EtaQuotientSpec",
    "NonUnitConstantTerm",
    "ParseError",
    "series_add",
    "series_mul",
    "series_invert",
    "series_pow",
    "substitute_q_power",
    "eta_factor",
    "expand_eta_quotient",
    "reduce_mod",
]


class NonUnitConstantTerm(ValueError):
    """Inversion (or a negative power) of a series whose constant term is not +-1."""


class ParseError(ValueError):
    """Malformed eta-exponent string; `position` is the offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """Coefficients c(0)..c(order) of a power series in q, all exact ints."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"need exactly order+1 = {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "TruncatedSeries":
        cs = tuple(int(c) for c in coeffs)
        return cls(len(cs) - 1, cs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,) + (0,) * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        if not 0 <= exponent <= order:
            raise ValueError(f"exponent {exponent} outside 0..{order}")
        cs = [0] * (order + 1)
        cs[exponent] = coeff
        return cls(order, tuple(cs))

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} unknown beyond order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(n for n, c in enumerate(self.coeffs) if c)

    def to_json_dict(self) -> dict:
        # decimal strings: coefficients routinely exceed 64 bits
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "TruncatedSeries":
        return cls(int(data["order"]), tuple(int(c) for c in data["coeffs"]))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, -other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __pow__(self, e: int) -> "TruncatedSeries":
        return series_pow(self, e)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Exponent map delta -> r_delta over the positive divisors of `level`.

    Represents the product over delta of (q^delta; q^delta)_inf ** r_delta.
    Zero exponents are dropped on construction, so equal quotients compare
    equal; every key must divide the level.
    """

    level: int
    exponents: tuple[tuple[int, int], ...]

    def __init__(self, level: int, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if level < 1:
            raise ValueError(f"level must be positive, got {level}")
        items = dict(exponents)
        for delta in items:
            if delta < 1:
                raise ValueError(f"divisor {delta} must be positive")
            if level % delta != 0:
                raise ValueError(f"divisor {delta} does not divide level {level}")
        canonical = tuple(sorted((d, int(r)) for d, r in items.items() if r != 0))
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "exponents", canonical)

    @classmethod
    def from_string(cls, text: str, level: int | None = None) -> "EtaQuotientSpec":
        """Parse "delta:exp,delta:exp,..." pairs; level defaults to lcm of the deltas."""
        items: dict[int, int] = {}
        pos = 0
        for token in text.split(","):
            stripped = token.strip()
            if not stripped or ":" not in stripped:
                raise ParseError(f"expected 'delta:exponent', got {token!r}", pos)
            left, _, right = stripped.partition(":")
            try:
                delta, r = int(left), int(right)
            except ValueError:
                raise ParseError(f"non-integer entry in {token!r}", pos) from None
            if delta < 1:
                raise ParseError(f"divisor must be positive in {token!r}", pos)
            if delta in items:
                raise ParseError(f"duplicate divisor {delta}", pos)
            items[delta] = r
            pos += len(token) + 1
        if level is None:
            level = lcm(*items) if items else 1
        return cls(level, items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def exponent_sum(self) -> int:
        """Sum of the exponents r_delta."""
        return sum(r for _, r in self.exponents)

    def weighted_sum(self) -> int:
        """Sum of delta * r_delta."""
        return sum(d * r for d, r in self.exponents)

    def to_spec_string(self) -> str:
        return ",".join(f"{d}:{r}" for d, r in self.exponents)


# ---------------------------------------------------------------------------
# convolution kernel
# ---------------------------------------------------------------------------

# Below this product-size threshold the plain double loop wins; above it the
# coefficients are packed into one big integer per operand so the convolution
# runs inside CPython's native integer multiply.
_SCHOOLBOOK_LIMIT = 4096


def _convolve_schoolbook(a: tuple[int, ...], b: tuple[int, ...], out_len: int) -> list[int]:
    out = [0] * out_len
    for i, ai in enumerate(a):
        if i >= out_len:
            break
        if ai:
            for j, bj in enumerate(b[: out_len - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


def _convolve_packed(a: tuple[int, ...], b: tuple[int, ...], out_len: int) -> list[int]:
    """Exact signed convolution via fixed-width packing into big integers.

    Each coefficient occupies w bytes, with w chosen so every coefficient of
    the product stays strictly below 2**(8w - 1); adding that half-slot offset
    to the product makes all slots nonnegative, so they can be sliced back out
    of the byte representation without borrow propagation.
    """
    amax = max(map(abs, a))
    bmax = max(map(abs, b))
    if amax == 0 or bmax == 0:
        return [0] * out_len
    bound = min(len(a), len(b)) * amax * bmax
    w = (bound.bit_length() + 8) // 8

    def pack(coeffs: tuple[int, ...]) -> int:
        pos = bytearray(len(coeffs) * w)
        neg = bytearray(len(coeffs) * w)
        for i, c in enumerate(coeffs):
            if c > 0:
                pos[i * w : i * w + w] = c.to_bytes(w, "little")
            elif c < 0:
                neg[i * w : i * w + w] = (-c).to_bytes(w, "little")
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    n_slots = len(a) + len(b) - 1
    half = 1 << (8 * w - 1)
    offset = int.from_bytes(half.to_bytes(w, "little") * n_slots, "little")
    buf = (pack(a) * pack(b) + offset).to_bytes(n_slots * w, "little")
    take = min(out_len, n_slots)
    out = [int.from_bytes(buf[i * w : i * w + w], "little") - half for i in range(take)]
    out.extend([0] * (out_len - take))
    return out


def _convolve(a: tuple[int, ...], b: tuple[int, ...], out_len: int) -> list[int]:
    if out_len * min(len(a), len(b)) <= _SCHOOLBOOK_LIMIT:
        return _convolve_schoolbook(a, b, out_len)
    return _convolve_packed(a, b, out_len)


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum at order min(a.order, b.order)."""
    order = min(a.order, b.order)
    return TruncatedSeries(
        order, tuple(x + y for x, y in zip(a.coeffs[: order + 1], b.coeffs[: order + 1]))
    )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to order min(a.order, b.order)."""
    order = min(a.order, b.order)
    n = order + 1
    out = _convolve(a.coeffs[:n], b.coeffs[:n], n)
    return TruncatedSeries(order, tuple(out))


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term +-1.

    Forward recurrence b(n) = -a(0) * sum_{k>=1} a(k) b(n-k); zero terms of
    `a` are skipped, so sparse inputs (eta factors) invert in O(N sqrt N).
    """
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit in Z[[q]]")
    nz = [(k, ak) for k, ak in enumerate(a.coeffs) if ak and k]
    out = [0] * (a.order + 1)
    out[0] = c0
    for n in range(1, a.order + 1):
        acc = 0
        for k, ak in nz:
            if k > n:
                break
            if ak == 1:
                acc += out[n - k]
            elif ak == -1:
                acc -= out[n - k]
            else:
                acc += ak * out[n - k]
        out[n] = -c0 * acc
    return TruncatedSeries(a.order, tuple(out))


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """a**e on the truncated ring by repeated squaring; e < 0 inverts once first."""
    if e == 0:
        return TruncatedSeries.one(a.order)
    base = series_invert(a) if e < 0 else a
    e = abs(e)
    result = None
    while e:
        if e & 1:
            result = base if result is None else series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def substitute_q_power(a: TruncatedSeries, d: int, order: int | None = None) -> TruncatedSeries:
    """Replace q by q**d: result(d*n) = a(n), all other coefficients zero.

    Defaults to order a.order*d; an explicit `order` may cap the result or
    extend it up to a.order*d + d - 1 (the last exponents still determined
    by a's known prefix).
    """
    if d < 1:
        raise ValueError(f"substitution power must be positive, got {d}")
    known = a.order * d + d - 1
    out_order = a.order * d if order is None else min(order, known)
    if d == 1 and out_order == a.order:
        return a
    out = [0] * (out_order + 1)
    for n, c in enumerate(a.coeffs):
        if n * d > out_order:
            break
        out[n * d] = c
    return TruncatedSeries(out_order, tuple(out))


def eta_factor(delta: int, order: int) -> TruncatedSeries:
    """(q^delta; q^delta)_inf truncated at `order`.

    Pentagonal number theorem: exponents delta*k(3k-1)/2 over k in Z with
    sign (-1)^k, so only O(sqrt(order/delta)) terms are touched.
    """
    if delta < 1:
        raise ValueError(f"delta must be positive, got {delta}")
    out = [0] * (order + 1)
    out[0] = 1
    k = 1
    while True:
        e_pos = delta * k * (3 * k - 1) // 2
        if e_pos > order:
            break
        sign = -1 if k & 1 else 1
        out[e_pos] += sign
        e_neg = delta * k * (3 * k + 1) // 2
        if e_neg <= order:
            out[e_neg] += sign
        k += 1
    return TruncatedSeries(order, tuple(out))


def expand_eta_quotient(spec: EtaQuotientSpec, order: int) -> TruncatedSeries:
    """Expand prod_delta (q^delta; q^delta)_inf ** r_delta to the given order.

    Each factor is obtained from the delta = 1 series at the reduced order
    order//delta (inverted once there if r_delta < 0, then powered) and lifted
    by q -> q^delta; factors with positive exponents are multiplied first.
    The result does not depend on that evaluation order.
    """
    result = None
    factors = sorted(spec.exponents, key=lambda item: (item[1] < 0, item[0]))
    for delta, r in factors:
        base = eta_factor(1, order // delta)
        if r < 0:
            base = series_invert(base)
        powered = series_pow(base, abs(r))
        factor = substitute_q_power(powered, delta, order)
        result = factor if result is None else series_mul(result, factor)
    return TruncatedSeries.one(order) if result is None else result


def reduce_mod(a: TruncatedSeries, u: int) -> TruncatedSeries:
    """Replace every coefficient by its least nonnegative residue mod u."""
    if u < 2:
        raise ValueError(f"modulus must be >= 2, got {u}")
    return TruncatedSeries(a.order, tuple(c % u for c in a.coeffs))
