"""Series kernel: frozen examples, oracle cross-checks, ring properties."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from etacert import (
    EtaQuotientSpec,
    NonUnitConstantTerm,
    ParseError,
    TruncatedSeries,
    eta_factor,
    expand_eta_quotient,
    reduce_mod,
    series_add,
    series_invert,
    series_mul,
    series_pow,
    substitute_q_power,
)
from etacert.oracle import naive_eta, naive_invert, naive_mul
from etacert.series import _convolve_packed, _convolve_schoolbook


def S(*coeffs):
    return TruncatedSeries.from_coeffs(coeffs)


# --- strategies -------------------------------------------------------------

small_coeffs = st.integers(min_value=-50, max_value=50)
series_64 = st.lists(small_coeffs, min_size=65, max_size=65).map(TruncatedSeries.from_coeffs)
series_any = st.lists(small_coeffs, min_size=1, max_size=40).map(TruncatedSeries.from_coeffs)
unit_series = st.tuples(
    st.sampled_from((1, -1)), st.lists(small_coeffs, min_size=0, max_size=48)
).map(lambda t: TruncatedSeries.from_coeffs([t[0], *t[1]]))


# --- TruncatedSeries basics -------------------------------------------------

class TestTruncatedSeries:
    def test_length_invariant(self):
        with pytest.raises(ValueError):
            TruncatedSeries(3, (1, 2))
        with pytest.raises(ValueError):
            TruncatedSeries(-1, ())

    def test_coefficient_bounds(self):
        s = S(1, 2, 3)
        assert s.coefficient(2) == 3
        with pytest.raises(IndexError):
            s.coefficient(3)

    def test_truncate(self):
        s = S(1, 2, 3, 4)
        assert s.truncate(1) == S(1, 2)
        assert s.truncate(3) is s
        with pytest.raises(ValueError):
            s.truncate(4)

    def test_json_roundtrip_big_coefficients(self):
        s = expand_eta_quotient(EtaQuotientSpec(1, {1: -3}), 300)
        assert max(map(abs, s.coeffs)) > 2**64  # decimal strings are load-bearing
        assert TruncatedSeries.from_json_dict(s.to_json_dict()) == s

    def test_json_rejects_inconsistent_length(self):
        with pytest.raises(ValueError):
            TruncatedSeries.from_json_dict({"order": 3, "coeffs": ["1", "2"]})

    def test_monomial(self):
        assert TruncatedSeries.monomial(2, 4).coeffs == (0, 0, 1, 0, 0)
        with pytest.raises(ValueError):
            TruncatedSeries.monomial(5, 4)


# --- add / mul / invert / pow ----------------------------------------------

class TestRingOps:
    def test_add_cancellation(self):
        assert series_add(S(1, 1), S(1, -1)) == S(2, 0)

    def test_add_identity(self):
        s = S(5, -2, 7)
        assert series_add(s, TruncatedSeries.zero(2)) == s

    def test_add_eta_plus_partitions(self):
        # oracle: pentagonal eta plus its convolution inverse
        e = eta_factor(1, 6)
        total = series_add(e, naive_invert(naive_eta(1, 6)))
        assert total.coeffs == (2, 0, 1, 3, 5, 8, 11)

    def test_mul_telescoping(self):
        geometric = TruncatedSeries(10, (1,) * 11)
        assert series_mul(S(1, -1).truncate(1), geometric) == TruncatedSeries.one(1)
        one_minus_q = TruncatedSeries(10, (1, -1) + (0,) * 9)
        assert series_mul(one_minus_q, geometric) == TruncatedSeries.one(10)

    def test_mul_unit_roundtrip_f1(self):
        f1 = eta_factor(1, 50)
        assert series_mul(f1, series_invert(f1)) == TruncatedSeries.one(50)

    def test_cube_matches_weighted_triangular_sum(self):
        # independent evaluation of the alternating (2n+1) q^(n(n+1)/2) sum
        expected = [0] * 21
        n = 0
        while n * (n + 1) // 2 <= 20:
            expected[n * (n + 1) // 2] = (2 * n + 1) * (-1) ** n
            n += 1
        f1 = eta_factor(1, 20)
        cube = series_mul(series_mul(f1, f1), f1)
        assert cube == TruncatedSeries.from_coeffs(expected)

    def test_invert_one(self):
        assert series_invert(TruncatedSeries.one(5)) == TruncatedSeries.one(5)

    def test_invert_partition_numbers(self):
        inv = series_invert(eta_factor(1, 10))
        assert inv.coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)
        assert inv == naive_invert(naive_eta(1, 10))

    def test_invert_non_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_invert(S(2, 1))

    def test_invert_negative_unit(self):
        s = S(-1, 4, -2)
        assert series_mul(s, series_invert(s)) == TruncatedSeries.one(2)

    def test_pow_binomial(self):
        assert series_pow(S(1, 1, 0), 2) == S(1, 2, 1)

    def test_pow_zero_exponent(self):
        assert series_pow(S(3, 1, 4), 0) == TruncatedSeries.one(2)

    def test_pow_negative_gives_b_sequence(self):
        # oracle route: convolution inverse cubed, times (q^2;q^2)
        got = series_mul(series_pow(eta_factor(1, 10), -3), eta_factor(2, 10))
        inv = naive_invert(naive_eta(1, 10))
        want = naive_mul(naive_mul(naive_mul(inv, inv), inv), naive_eta(2, 10))
        assert got == want

    def test_pow_negative_non_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_pow(S(2, 1), -1)


# --- substitution and eta factors -------------------------------------------

class TestSubstitutionAndEta:
    def test_substitute_simple(self):
        assert substitute_q_power(S(1, 1), 5) == TruncatedSeries(5, (1, 0, 0, 0, 0, 1))

    def test_substitute_pentagonal_doubled(self):
        got = substitute_q_power(eta_factor(1, 7), 2)
        assert got.order == 14
        assert got.support() == (0, 2, 4, 10, 14)
        assert got == naive_eta(2, 14)

    def test_substitute_identity(self):
        s = S(4, 5, 6)
        assert substitute_q_power(s, 1) is s

    def test_substitute_order_cap_and_extension(self):
        s = S(1, 2)
        assert substitute_q_power(s, 3, order=2).coeffs == (1, 0, 0)
        # exponents 4 and 5 are still determined by the known prefix
        assert substitute_q_power(s, 3, order=9).order == 5

    def test_eta_factor_pentagonal(self):
        assert eta_factor(1, 12).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)
        assert eta_factor(1, 12) == naive_eta(1, 12)

    def test_eta_factor_scaled(self):
        assert eta_factor(5, 4) == TruncatedSeries(4, (1, 0, 0, 0, 0))
        assert eta_factor(2, 14) == substitute_q_power(eta_factor(1, 7), 2)


# --- eta quotient spec -------------------------------------------------------

class TestEtaQuotientSpec:
    def test_normalization_drops_zeros(self):
        assert EtaQuotientSpec(10, {1: -3, 2: 1, 10: 0}) == EtaQuotientSpec(10, {2: 1, 1: -3})

    def test_divisor_validation(self):
        with pytest.raises(ValueError):
            EtaQuotientSpec(10, {3: 1})
        with pytest.raises(ValueError):
            EtaQuotientSpec(10, {0: 1})
        with pytest.raises(ValueError):
            EtaQuotientSpec(0, {})

    def test_sums(self):
        spec = EtaQuotientSpec(10, {1: 22, 2: 1, 5: -5})
        assert spec.exponent_sum() == 18
        assert spec.weighted_sum() == -1

    def test_from_string(self):
        spec = EtaQuotientSpec.from_string("1:-3,2:1")
        assert spec.level == 2
        assert spec.as_dict() == {1: -3, 2: 1}
        assert EtaQuotientSpec.from_string("1:22,2:1,5:-5").level == 10

    def test_from_string_errors(self):
        with pytest.raises(ParseError):
            EtaQuotientSpec.from_string("1:")
        with pytest.raises(ParseError):
            EtaQuotientSpec.from_string("1:2,x:3")
        with pytest.raises(ParseError):
            EtaQuotientSpec.from_string("1:2,1:3")
        err = None
        try:
            EtaQuotientSpec.from_string("1:1,2:y")
        except ParseError as exc:
            err = exc
        assert err is not None and err.position == 4


# --- expansion ---------------------------------------------------------------

def _naive_expand(spec: EtaQuotientSpec, order: int) -> TruncatedSeries:
    """Independent expansion from oracle primitives only."""
    result = TruncatedSeries.one(order)
    for delta, r in spec.exponents:
        base = naive_eta(delta, order)
        if r < 0:
            base = naive_invert(base)
        for _ in range(abs(r)):
            result = naive_mul(result, base)
    return result


class TestExpandEtaQuotient:
    def test_b_sequence(self):
        got = expand_eta_quotient(EtaQuotientSpec(2, {1: -3, 2: 1}), 6)
        assert got == _naive_expand(EtaQuotientSpec(2, {1: -3, 2: 1}), 6)

    def test_congruent_form_mod25(self):
        lhs = expand_eta_quotient(EtaQuotientSpec(10, {1: 22, 2: 1, 5: -5}), 100)
        rhs = expand_eta_quotient(EtaQuotientSpec(2, {1: -3, 2: 1}), 100)
        assert reduce_mod(lhs, 25) == reduce_mod(rhs, 25)

    def test_empty_spec(self):
        assert expand_eta_quotient(EtaQuotientSpec(1, {}), 5) == TruncatedSeries.one(5)

    def test_order_zero(self):
        assert expand_eta_quotient(EtaQuotientSpec(2, {1: -3, 2: 1}), 0) == TruncatedSeries.one(0)

    @pytest.mark.parametrize(
        "level,exps",
        [
            (10, {1: 22, 2: 1, 5: -5}),
            (10, {1: 13}),
            (14, {1: 4, 2: 1, 7: -1}),
            (14, {1: 3}),
            (14, {1: 46, 2: 1, 7: -7}),
            (14, {1: 18}),
            (2, {1: -3, 2: 1}),
        ],
    )
    def test_matches_oracle_to_300(self, level, exps):
        spec = EtaQuotientSpec(level, exps)
        assert expand_eta_quotient(spec, 300) == _naive_expand(spec, 300)


# --- modular reduction -------------------------------------------------------

class TestReduceMod:
    def test_least_nonnegative(self):
        assert reduce_mod(S(1, -3, 0, 5), 5) == S(1, 2, 0, 0)

    def test_modulus_validation(self):
        with pytest.raises(ValueError):
            reduce_mod(S(1), 1)

    def test_idempotent(self):
        s = S(7, -9, 13, -2)
        assert reduce_mod(reduce_mod(s, 2), 2) == reduce_mod(s, 2)

    def test_cube_class3_vanishes(self):
        cube = series_pow(eta_factor(1, 30), 3)
        reduced = reduce_mod(cube, 5)
        for n, c in enumerate(reduced.coeffs):
            if n % 5 == 3:
                assert c == 0


# --- binomial congruence lemma ----------------------------------------------

@pytest.mark.parametrize("p,alpha", [(5, 1), (5, 2), (7, 1), (7, 2)])
def test_binomial_lemma(p, alpha):
    order = 300
    # f_alpha^p == f_(p*alpha)  (mod p)
    lhs = series_pow(eta_factor(alpha, order), p)
    rhs = eta_factor(p * alpha, order)
    assert reduce_mod(lhs, p) == reduce_mod(rhs, p)
    # f_1^(p^alpha) == f_p^(p^(alpha-1))  (mod p^alpha)
    lhs = series_pow(eta_factor(1, order), p**alpha)
    rhs = series_pow(eta_factor(p, order), p ** (alpha - 1))
    assert reduce_mod(lhs, p**alpha) == reduce_mod(rhs, p**alpha)


# --- convolution kernel equivalence ------------------------------------------

def test_packed_matches_schoolbook_random():
    rng = random.Random(20260810)
    for _ in range(300):
        la = rng.randint(1, 60)
        lb = rng.randint(1, 60)
        mag = rng.choice((1, 9, 10**6, 10**30))
        a = tuple(rng.randint(-mag, mag) for _ in range(la))
        b = tuple(rng.randint(-mag, mag) for _ in range(lb))
        out_len = rng.randint(1, la + lb)
        assert _convolve_packed(a, b, out_len) == _convolve_schoolbook(a, b, out_len)


def test_packed_edge_cases():
    assert _convolve_packed((0, 0), (0, 0, 0), 4) == [0, 0, 0, 0]
    assert _convolve_packed((-1,), (1, -1, 1), 3) == [-1, 1, -1]


# --- ring axioms (property) --------------------------------------------------

class TestRingAxioms:
    @settings(max_examples=40)
    @given(a=series_64, b=series_64, c=series_64)
    def test_mul_associative_commutative(self, a, b, c):
        assert series_mul(a, b) == series_mul(b, a)
        assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))

    @settings(max_examples=40)
    @given(a=series_64, b=series_64, c=series_64)
    def test_add_axioms_and_distributivity(self, a, b, c):
        assert series_add(a, b) == series_add(b, a)
        assert series_add(series_add(a, b), c) == series_add(a, series_add(b, c))
        lhs = series_mul(a, series_add(b, c))
        rhs = series_add(series_mul(a, b), series_mul(a, c))
        assert lhs == rhs

    @settings(max_examples=60)
    @given(a=series_any, b=series_any)
    def test_order_is_min(self, a, b):
        assert series_add(a, b).order == min(a.order, b.order)
        assert series_mul(a, b).order == min(a.order, b.order)

    @settings(max_examples=60)
    @given(a=unit_series)
    def test_invert_roundtrip(self, a):
        assert series_mul(a, series_invert(a)) == TruncatedSeries.one(a.order)

    @settings(max_examples=60)
    @given(a=series_any, b=series_any)
    def test_mul_matches_oracle(self, a, b):
        assert series_mul(a, b) == naive_mul(a, b)
