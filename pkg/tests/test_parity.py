from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copartitions import (
    CpParams,
    Factorization,
    TWO_SQUARES,
    X2_PLUS_3Y2,
    andrews_mod5_check,
    both_parities_prefix_check,
    brute_force_representable,
    copartition_parity,
    count_copartitions,
    density_report,
    even_guarantee_314,
    even_guarantee_516,
    factorize,
    form_equivalence_check,
    format_proportion,
    is_prime,
    is_sum_of_two_squares,
    is_x2_plus_3y2,
    lacunary_odd_support_check,
    odd_term_count_check,
    progression_family,
    theta_product_identity_check,
    verify_even_progression,
)


class TestFactorize:
    def test_examples(self):
        assert factorize(77).factors == ((7, 1), (11, 1))
        assert factorize(5).factors == ((5, 1),)
        assert factorize(1).factors == ()
        assert factorize(24 * 3 + 5).factors == ((7, 1), (11, 1))

    def test_round_trip_small(self):
        for n in range(1, 2000):
            f = factorize(n)
            assert f.n == n    # the dataclass itself checks the product

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            Factorization(12, ((2, 2),))            # product mismatch
        with pytest.raises(ValueError):
            Factorization(12, ((3, 1), (2, 2)))     # not increasing
        with pytest.raises(ValueError):
            Factorization(12, ((4, 1), (3, 1)))     # 4 is not prime

    def test_is_prime(self):
        primes = [p for p in range(60) if is_prime(p)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


class TestRepresentabilityPredicates:
    def test_two_squares_examples(self):
        assert is_sum_of_two_squares(5)
        assert not is_sum_of_two_squares(21)
        assert is_sum_of_two_squares(45)

    def test_x2_3y2_examples(self):
        assert is_x2_plus_3y2(7)
        assert is_x2_plus_3y2(31)
        assert not is_x2_plus_3y2(55)

    def test_brute_examples(self):
        assert brute_force_representable(25, TWO_SQUARES)
        assert not brute_force_representable(21, TWO_SQUARES)
        assert brute_force_representable(7, X2_PLUS_3Y2)
        with pytest.raises(ValueError):
            brute_force_representable(10, "x2_5y2")

    def test_agreement_on_residue_classes(self):
        # full 10^5 sweep lives in the acceptance suite
        for n in range(5, 10 ** 4, 24):
            assert is_sum_of_two_squares(n) == brute_force_representable(n, TWO_SQUARES)
        for n in range(1, 10 ** 4, 6):
            assert is_x2_plus_3y2(n) == brute_force_representable(n, X2_PLUS_3Y2)


class TestFormEquivalence:
    def test_examples(self):
        assert form_equivalence_check(7)
        assert form_equivalence_check(1)
        assert form_equivalence_check(55)

    def test_rejects_wrong_class(self):
        with pytest.raises(ValueError):
            form_equivalence_check(8)

    def test_small_sweep(self):
        assert all(form_equivalence_check(n) for n in range(1, 1501, 6))


class TestEvenGuarantees:
    def test_values_314(self):
        assert even_guarantee_314(3)          # 77 = 7 * 11
        assert not even_guarantee_314(0)      # 5 = 1 + 4

    def test_values_516(self):
        assert not even_guarantee_516(4)      # 25 = 5^2
        assert even_guarantee_516(9)          # 55 = 5 * 11
        assert not even_guarantee_516(5)      # 31 prime, 1 mod 3

    def test_sound_on_prefix(self):
        n = 1500
        p314 = copartition_parity(CpParams(3, 1, 4), n)
        p516 = copartition_parity(CpParams(5, 1, 6), n)
        for k in range(n + 1):
            if even_guarantee_314(k):
                assert p314.bit(k) == 0
            if even_guarantee_516(k):
                assert p516.bit(k) == 0

    def test_sufficient_only(self):
        # an even value the guarantee does not see
        assert count_copartitions(CpParams(5, 1, 6), 5) == 2
        assert not even_guarantee_516(5)


class TestProgressionFamilies:
    def test_known_residues(self):
        assert progression_family("cp314", 7).residues == (3, 17, 24, 31, 38, 45)
        assert progression_family("cp314", 11).residues == (3, 14, 36, 47, 58, 69, 80, 91, 102, 113)
        assert progression_family("cp516", 5).residues == (9, 14, 19, 24)
        assert progression_family("cp516", 11).residues == (9, 31, 42, 53, 64, 75, 86, 97, 108, 119)

    def test_delta_inverts_the_unit(self):
        fam = progression_family("cp314", 7)
        assert fam.modulus == 49 and (24 * fam.delta) % 49 == 1
        fam = progression_family("cp516", 5)
        assert fam.modulus == 25 and (6 * fam.delta) % 25 == 1

    def test_rejects_wrong_primes(self):
        with pytest.raises(ValueError):
            progression_family("cp314", 5)     # 5 = 1 mod 4
        with pytest.raises(ValueError):
            progression_family("cp314", 9)     # not prime
        with pytest.raises(ValueError):
            progression_family("cp516", 7)     # 7 = 1 mod 3
        with pytest.raises(ValueError):
            progression_family("cp400", 7)

    def test_verify_even_progression(self):
        n = 2500
        parity = copartition_parity(CpParams(3, 1, 4), n)
        check = verify_even_progression(CpParams(3, 1, 4), 49, 3, n, parity)
        assert check.passed and not check.vacuous
        # residue 0 mod 49 carries odd values
        check = verify_even_progression(CpParams(3, 1, 4), 49, 0, n, parity)
        assert not check.passed and check.counterexample is not None
        assert check.counterexample % 49 == 0
        assert parity.bit(check.counterexample) == 1

    def test_vacuous_range(self):
        check = verify_even_progression(CpParams(3, 1, 4), 49, 45, 10)
        assert check.passed and check.vacuous

    def test_residue_bounds(self):
        with pytest.raises(ValueError):
            verify_even_progression(CpParams(3, 1, 4), 49, 49, 100)


class TestDensityReport:
    def test_rounding_convention(self):
        assert format_proportion(1529, 2000) == "0.765"     # exact .7645 rounds away
        assert format_proportion(1, 2) == "0.500"
        assert format_proportion(999, 1000) == "0.999"
        assert format_proportion(1, 1) == "1.000"
        assert format_proportion(0, 7) == "0.000"
        with pytest.raises(ValueError):
            format_proportion(-1, 3)

    def test_counts_match_enumeration(self):
        params = CpParams(1, 1, 6)
        checkpoints = (10, 25, 40)
        report = density_report(params, checkpoints)
        for n, even in zip(checkpoints, report.even_counts):
            brute = sum(1 for k in range(1, n + 1)
                        if count_copartitions(params, k) % 2 == 0)
            assert even == brute

    def test_exact_proportions(self):
        report = density_report(CpParams(3, 3, 4), (100, 200))
        assert report.proportions[0] == Fraction(report.even_counts[0], 100)
        assert report.even_counts[0] <= report.even_counts[1]

    def test_checkpoint_validation(self):
        with pytest.raises(ValueError):
            density_report(CpParams(1, 1, 2), (200, 100))
        with pytest.raises(ValueError):
            density_report(CpParams(1, 1, 2), ())
        with pytest.raises(ValueError):
            density_report(CpParams(1, 1, 2), (0, 10))

    def test_supplied_parity_must_cover(self):
        p = copartition_parity(CpParams(1, 1, 2), 50)
        with pytest.raises(ValueError):
            density_report(CpParams(1, 1, 2), (100,), p)


class TestLacunaryOddSupport:
    def test_small_scales(self):
        assert lacunary_odd_support_check(1, 2000)
        assert lacunary_odd_support_check(3, 2000)

    def test_zero_window(self):
        assert lacunary_odd_support_check(1, 0)

    def test_rejects_even_scale(self):
        with pytest.raises(ValueError):
            lacunary_odd_support_check(2, 100)

    def test_odd_prefix_values(self):
        parity = copartition_parity(CpParams(1, 1, 2), 40)
        assert parity.odd_exponents() == [0, 4, 8, 20, 28]


class TestThetaProductIdentity:
    def test_sample_pairs(self):
        assert theta_product_identity_check(1, 4, 600)
        assert theta_product_identity_check(3, 8, 600)
        # the a = m/2 case degenerates to the scaled pentagonal series
        assert theta_product_identity_check(1, 2, 600)

    def test_identity_pins_the_parity_prefix(self):
        # back-substitution in counting * theta = pentagonal indicator
        # rederives the counting parity without the expansion machinery;
        # pins the disputed m=12 reference cell to 995 evens in [1, 2000]
        from copartitions import pentagonal_support, triple_product_theta
        a, m, n = 1, 12, 2000
        theta = triple_product_theta(a, m, n)
        marks = pentagonal_support(m, n)
        bits = [1]
        for k in range(1, n + 1):
            acc = 1 if k in marks else 0
            for j, c in enumerate(theta.coeffs[1:k + 1], start=1):
                if c & 1:
                    acc ^= bits[k - j]
            bits.append(acc)
        parity = copartition_parity(CpParams(a, m - a, m), n)
        assert bits == [parity.bit(k) for k in range(n + 1)]
        assert sum(1 for k in range(1, 2001) if bits[k] == 0) == 995

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            theta_product_identity_check(4, 4, 100)
        with pytest.raises(ValueError):
            theta_product_identity_check(0, 3, 100)


class TestOddTermCount:
    def test_sample_pairs(self):
        assert odd_term_count_check(1, 4, 12)
        assert odd_term_count_check(2, 5, 12)

    def test_block_convention_at_one(self):
        # the count at N=1 is a * 1: block 0 holds exponents 0..a-1
        assert odd_term_count_check(3, 8, 1)

    def test_rejects_a_above_half(self):
        with pytest.raises(ValueError):
            odd_term_count_check(2, 3, 5)
        with pytest.raises(ValueError):
            odd_term_count_check(1, 4, 0)


class TestBothParities:
    def test_sample_pairs(self):
        assert both_parities_prefix_check(1, 4, 2000, 10)
        assert both_parities_prefix_check(1, 2, 2000, 10)

    def test_witness_threshold_can_fail(self):
        # only 5 odd indices at or below 28 for the (1,1,2) family
        assert not both_parities_prefix_check(1, 2, 28, 6)
        assert both_parities_prefix_check(1, 2, 28, 5)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            both_parities_prefix_check(3, 3, 100, 1)


class TestAndrewsCongruence:
    def test_short_run(self):
        assert andrews_mod5_check(104, (4, 9))

    def test_rejects_unenumerable_sizes(self):
        with pytest.raises(ValueError):
            andrews_mod5_check(104, (5,))

    def test_divisibility_values(self):
        from copartitions import copartition_series
        series = copartition_series(CpParams(1, 1, 2), 54)
        assert series[4] == 5
        assert all(series[k] % 5 == 0 for k in range(4, 55, 5))
