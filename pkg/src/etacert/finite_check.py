"""Finite coefficient checks that certify infinite congruence families.

An RSInstance packages a progression modulus m, an eta quotient r over the
divisors of M, an auxiliary quotient r' over the divisors of N and a
congruence modulus u.  When every cusp sum p_min + p_star is nonnegative,
checking c_r(m*n + t') == 0 (mod u) for all t' in the orbit P and all
n <= floor(v) proves the congruence for every n; the derived constants and
the checked residues are emitted as a machine-readable certificate.
"""

import hashlib
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Mapping

from .series import EtaQuotientSpec, expand_eta_quotient, reduce_mod

__all__ = [
    "RSInstance",
    "CosetRep",
    "CuspEntry",
    "RSCertificate",
    "InternalAssertionFailure",
    "OrderCapExceeded",
    "DEFAULT_ORDER_CAP",
    "CERTIFICATE_SCHEMA_VERSION",
    "divisors",
    "kappa",
    "compute_p_set",
    "index_gamma0",
    "coset_representatives",
    "p_min",
    "p_star",
    "v_bound",
    "verify_instance",
    "instance_from_dict",
    "revalidate_certificate",
]

DEFAULT_ORDER_CAP = 10**6
CERTIFICATE_SCHEMA_VERSION = 1

STATUS_VERIFIED = "verified"
STATUS_HYPOTHESIS_VIOLATION = "hypothesis_violation"
STATUS_COUNTEREXAMPLE = "counterexample"
STATUS_DELTA_STAR_UNVERIFIED = "delta_star_unverified"


class InternalAssertionFailure(RuntimeError):
    """An enumerated square unit failed the s = 1 (mod 24) sanity check."""


class OrderCapExceeded(RuntimeError):
    """The required expansion order would exceed the configured cap."""


def divisors(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return tuple(small + large[::-1])


@dataclass(frozen=True, slots=True)
class RSInstance:
    """One verification problem (m, M, N, t, r, r', u)."""

    m: int
    M: int
    N: int
    t: int
    r: EtaQuotientSpec
    r_prime: EtaQuotientSpec
    u: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if not 0 <= self.t < self.m:
            raise ValueError(f"t = {self.t} outside 0..{self.m - 1}")
        if self.r.level != self.M:
            raise ValueError(f"r has level {self.r.level}, expected M = {self.M}")
        if self.r_prime.level != self.N:
            raise ValueError(f"r' has level {self.r_prime.level}, expected N = {self.N}")
        if self.u < 2:
            raise ValueError(f"congruence modulus must be >= 2, got {self.u}")

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "M": self.M,
            "N": self.N,
            "t": self.t,
            "r": {str(d): r for d, r in self.r.exponents},
            "r_prime": {str(d): r for d, r in self.r_prime.exponents},
            "u": self.u,
        }


def instance_from_dict(data: Mapping) -> RSInstance:
    return RSInstance(
        m=int(data["m"]),
        M=int(data["M"]),
        N=int(data["N"]),
        t=int(data["t"]),
        r=EtaQuotientSpec(int(data["M"]), {int(d): int(r) for d, r in data["r"].items()}),
        r_prime=EtaQuotientSpec(
            int(data["N"]), {int(d): int(r) for d, r in data["r_prime"].items()}
        ),
        u=int(data["u"]),
    )


@dataclass(frozen=True, slots=True)
class CosetRep:
    """Integer matrix (a b; c d) with determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of ({self.a} {self.b}; {self.c} {self.d}) is not 1")


@dataclass(frozen=True, slots=True)
class CuspEntry:
    """Exact cusp sums at the representative with lower-left entry `delta`."""

    delta: int
    p_min: Fraction
    p_star: Fraction


@dataclass(frozen=True, slots=True)
class RSCertificate:
    instance: RSInstance
    kappa: int
    p_set: tuple[int, ...]
    t_min: int
    index: int
    cusp_table: tuple[CuspEntry, ...]
    v_exact: Fraction
    v_floor: int
    checked_upto: int
    residues_ok: tuple[tuple[int, tuple[bool, ...]], ...]
    status: str
    witness: dict | None
    delta_star: str
    series_hash: str

    @property
    def verified(self) -> bool:
        return self.status == STATUS_VERIFIED

    def to_json_dict(self) -> dict:
        out = {
            "schema_version": CERTIFICATE_SCHEMA_VERSION,
            "instance": self.instance.to_json_dict(),
            "kappa": self.kappa,
            "p_set": list(self.p_set),
            "t_min": self.t_min,
            "index": self.index,
            "cusp_table": [
                {
                    "delta": e.delta,
                    "p_min_num": e.p_min.numerator,
                    "p_min_den": e.p_min.denominator,
                    "p_star_num": e.p_star.numerator,
                    "p_star_den": e.p_star.denominator,
                }
                for e in self.cusp_table
            ],
            "v": {
                "num": self.v_exact.numerator,
                "den": self.v_exact.denominator,
                "floor": self.v_floor,
            },
            "checked_upto": self.checked_upto,
            "status": self.status,
            "delta_star": self.delta_star,
            "series_hash": self.series_hash,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def kappa(m: int) -> int:
    """gcd(m^2 - 1, 24)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return gcd(m * m - 1, 24)


def compute_p_set(instance: RSInstance) -> tuple[int, ...]:
    """Orbit of t under t -> t*s + (s-1)/24 * sum(delta r_delta), s a square unit mod 24m.

    Every square of a unit mod 24m is 1 mod 24, which keeps (s-1)/24
    integral; that is asserted during enumeration rather than trusted.
    """
    m = instance.m
    modulus = 24 * m
    sigma = instance.r.weighted_sum()
    squares = set()
    for x in range(1, modulus):
        if gcd(x, modulus) == 1:
            squares.add(x * x % modulus)
    out = set()
    for s in squares:
        if s % 24 != 1:
            raise InternalAssertionFailure(
                f"square unit {s} mod {modulus} is not 1 mod 24"
            )
        out.add((instance.t * s + (s - 1) // 24 * sigma) % m)
    return tuple(sorted(out))


def index_gamma0(N: int) -> int:
    """Index of the level-N congruence subgroup: N * prod over p | N of (1 + 1/p)."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    idx = N
    n = N
    p = 2
    while p * p <= n:
        if n % p == 0:
            idx = idx // p * (p + 1)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        idx = idx // n * (n + 1)
    return idx


def coset_representatives(N: int) -> tuple[CosetRep, ...]:
    """The family (1 0; delta 1) over the positive divisors delta of N."""
    return tuple(CosetRep(1, 0, d, 1) for d in divisors(N))


def p_min(instance: RSInstance, gamma: CosetRep) -> Fraction:
    """min over lambda in 0..m-1 of (1/24) sum_delta r_delta gcd^2(delta(a + kappa lambda c), mc) / (delta m)."""
    if gamma.c == 0:
        raise ValueError("representative must have a nonzero lower-left entry")
    m = instance.m
    kap = kappa(m)
    mc = abs(m * gamma.c)
    best = None
    for lam in range(m):
        total = Fraction(0)
        for delta, r in instance.r.exponents:
            g = gcd(abs(delta * (gamma.a + kap * lam * gamma.c)), mc)
            total += Fraction(r * g * g, 24 * delta * m)
        if best is None or total < best:
            best = total
    return Fraction(0) if best is None else best


def p_star(instance: RSInstance, gamma: CosetRep) -> Fraction:
    """(1/24) sum over delta | N of r'_delta gcd^2(delta, c) / delta."""
    total = Fraction(0)
    for delta, r in instance.r_prime.exponents:
        g = gcd(delta, abs(gamma.c))
        total += Fraction(r * g * g, 24 * delta)
    return total


def _v_exact(instance: RSInstance, t_min: int) -> Fraction:
    idx = index_gamma0(instance.N)
    head = (instance.r.exponent_sum() + instance.r_prime.exponent_sum()) * idx
    return (
        Fraction(head - instance.r_prime.weighted_sum(), 24)
        - Fraction(instance.r.weighted_sum(), 24 * instance.m)
        - Fraction(t_min, instance.m)
    )


def v_bound(instance: RSInstance) -> tuple[Fraction, int]:
    """Exact rational check bound v and its floor; floor is taken only here."""
    t_min = min(compute_p_set(instance))
    v = _v_exact(instance, t_min)
    return v, math.floor(v)


def _series_hash(
    instance: RSInstance, p_set: tuple[int, ...], checked_upto: int, residues: dict[int, list[int]]
) -> str:
    block = {
        "m": instance.m,
        "u": instance.u,
        "p_set": list(p_set),
        "checked_upto": checked_upto,
        "residues": {str(t): [str(v) for v in vals] for t, vals in residues.items()},
    }
    payload = json.dumps(block, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return "sha256:" + hashlib.sha256(payload).hexdigest()


def verify_instance(
    instance: RSInstance,
    *,
    assume_delta_star: bool = True,
    check_upto: int | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> RSCertificate:
    """Run the full finite check for one instance and assemble its certificate.

    Expands f_r exactly to order m*checked_upto + max(P), reduces mod u and
    scans every progression in the orbit.  The certificate status is
    "verified" only when the cusp-sum hypothesis holds, every scanned residue
    vanishes, and membership of the instance tuple in the admissible set was
    asserted (assume_delta_star=True; the membership conditions live in an
    external source and are not checked here).  With assume_delta_star=False
    the same checks run but the status stays "delta_star_unverified".

    checked_upto may exceed floor(v) for empirical over-checking; it may not
    undercut it.  The expansion order is validated against order_cap before
    any series work starts.
    """
    kap = kappa(instance.m)
    p_set = compute_p_set(instance)
    t_min = min(p_set)
    idx = index_gamma0(instance.N)
    cusp_table = tuple(
        CuspEntry(g.c, p_min(instance, g), p_star(instance, g))
        for g in coset_representatives(instance.N)
    )
    violation = next((e for e in cusp_table if e.p_min + e.p_star < 0), None)
    v = _v_exact(instance, t_min)
    v_floor = math.floor(v)
    if check_upto is None:
        checked_upto = v_floor
    elif check_upto < v_floor:
        raise ValueError(f"check_upto = {check_upto} undercuts the bound floor(v) = {v_floor}")
    else:
        checked_upto = check_upto

    required_order = instance.m * checked_upto + max(p_set)
    if required_order > order_cap:
        raise OrderCapExceeded(
            f"required order {required_order} exceeds cap {order_cap}"
        )

    delta_star = "assumed" if assume_delta_star else "unverified"
    witness = None
    residues: dict[int, list[int]] = {}
    residues_ok: list[tuple[int, tuple[bool, ...]]] = []

    if violation is not None:
        status = STATUS_HYPOTHESIS_VIOLATION
        witness = {
            "delta": violation.delta,
            "p_min": f"{violation.p_min}",
            "p_star": f"{violation.p_star}",
        }
    else:
        reduced = reduce_mod(expand_eta_quotient(instance.r, required_order), instance.u)
        for t_prime in p_set:
            vals = [reduced.coeffs[instance.m * n + t_prime] for n in range(checked_upto + 1)]
            residues[t_prime] = vals
            residues_ok.append((t_prime, tuple(val == 0 for val in vals)))
            if witness is None:
                for n, val in enumerate(vals):
                    if val != 0:
                        witness = {
                            "t_prime": t_prime,
                            "n": n,
                            "exponent": instance.m * n + t_prime,
                            "value": val,
                        }
                        break
        if witness is not None:
            status = STATUS_COUNTEREXAMPLE
        elif not assume_delta_star:
            status = STATUS_DELTA_STAR_UNVERIFIED
        else:
            status = STATUS_VERIFIED

    return RSCertificate(
        instance=instance,
        kappa=kap,
        p_set=p_set,
        t_min=t_min,
        index=idx,
        cusp_table=cusp_table,
        v_exact=v,
        v_floor=v_floor,
        checked_upto=checked_upto,
        residues_ok=tuple(residues_ok),
        status=status,
        witness=witness,
        delta_star=delta_star,
        series_hash=_series_hash(instance, p_set, checked_upto, residues),
    )


def revalidate_certificate(data: Mapping, *, order_cap: int = DEFAULT_ORDER_CAP) -> bool:
    """Replay a certificate dict against a fresh expansion; True iff it reproduces."""
    if data.get("schema_version") != CERTIFICATE_SCHEMA_VERSION:
        return False
    try:
        instance = instance_from_dict(data["instance"])
        fresh = verify_instance(
            instance,
            assume_delta_star=data.get("delta_star") == "assumed",
            check_upto=int(data["checked_upto"]),
            order_cap=order_cap,
        )
    except (KeyError, TypeError, ValueError):
        # malformed or internally inconsistent input cannot reproduce anything
        return False
    return fresh.to_json_dict() == dict(data)
