"""Sequence comparator, pairwise-differing families, and the non-conjugacy criterion."""

import random
from fractions import Fraction
from math import lcm

import pytest

from planeaut import (BinarySequence, CERTIFICATE, CoeffSequence, CycNum,
                      DomainMismatchError, SATISFIABLE,
                      SparsePoly, TriangularAffine, differ_infinitely,
                      necessary_condition, omega0_family,
                      verify_subgroup_conjugator)

from conftest import random_cycnum


def brute_differ(lam, mu):
    """Independent oracle: scan three lcm-periods past both prefixes."""
    start = max(len(lam.prefix), len(mu.prefix))
    window = 3 * lcm(lam.period, mu.period)
    return any(lam.bit(start + o) != mu.bit(start + o) for o in range(window))


def random_binary(rng):
    prefix = [rng.randint(0, 1) for _ in range(rng.randint(0, 5))]
    tail = [rng.randint(0, 1) for _ in range(rng.randint(1, 6))]
    return BinarySequence(prefix, tail)


class TestDifferInfinitely:
    def test_equal_sequences(self):
        ones = BinarySequence((), (1,))
        assert not differ_infinitely(ones, ones)

    def test_alternating_vs_ones(self):
        ones = BinarySequence((), (1,))
        alt = BinarySequence((), (1, 0))
        assert differ_infinitely(ones, alt)

    def test_finite_flips_are_equivalent(self):
        lam = BinarySequence((1, 1, 1, 0, 1, 0, 1, 1), (1, 0, 1))
        flipped = list(lam.prefix)
        for i in range(3, 8):
            flipped[i] ^= 1
        mu = BinarySequence(flipped, lam.tail)
        assert not differ_infinitely(lam, mu)

    def test_matches_brute_force(self):
        rng = random.Random(97)
        for _ in range(300):
            lam, mu = random_binary(rng), random_binary(rng)
            assert differ_infinitely(lam, mu) == brute_differ(lam, mu)

    def test_symmetry(self):
        rng = random.Random(101)
        for _ in range(100):
            lam, mu = random_binary(rng), random_binary(rng)
            assert differ_infinitely(lam, mu) == differ_infinitely(mu, lam)


class TestOmega0Family:
    def test_count_two(self):
        fam = omega0_family(2)
        assert [s.period for s in fam] == [2, 3]
        assert differ_infinitely(fam[0], fam[1])

    def test_count_five_all_pairs(self):
        fam = omega0_family(5)
        for i in range(5):
            for j in range(i + 1, 5):
                assert differ_infinitely(fam[i], fam[j])

    def test_count_one_rejected(self):
        with pytest.raises(ValueError):
            omega0_family(1)


def seq_from_bits(p, bits):
    return CoeffSequence(p, bits.prefix, list(bits.tail))


class TestNecessaryCondition:
    def test_reflexive(self):
        rng = random.Random(103)
        for p in (2, 3):
            prefix = [random_cycnum(rng, p, max_level=1) for _ in range(3)]
            a = CoeffSequence(p, prefix, [1])
            report = necessary_condition(a, a, 0)
            assert report.verdict == SATISFIABLE
            assert report.beta == 1 and report.gamma == 1
            assert report.effective_from == 0

    def test_support_mismatch_certificate(self):
        ones = CoeffSequence(2, [], [1])
        odd_zeroed = CoeffSequence(2, [], [1, 0])
        report = necessary_condition(ones, odd_zeroed, 0)
        assert report.verdict == CERTIFICATE
        assert report.offsets == [1]
        assert report.period == 2

    def test_scaled_pair_satisfiable(self):
        # b_k = 2^(p^k + 1) * a_k, realized on finite supports
        a = CoeffSequence(2, [1, 1, 1])
        b = CoeffSequence(2, [2 ** (2 ** k + 1) for k in range(3)])
        report = necessary_condition(a, b, 0)
        assert report.verdict == SATISFIABLE
        assert report.beta == 2
        assert report.gamma == 1
        assert report.effective_from == 0

    def test_gamma_corrected_condition(self):
        # b_k = beta^(p^k+1)/gamma * a_k with gamma = 1/3
        beta, gamma = Fraction(2), Fraction(1, 3)
        a = CoeffSequence(2, [1, 1, 5])
        b = CoeffSequence(2, [a.coeff(k).as_fraction() * beta ** (2 ** k + 1) / gamma
                              for k in range(3)])
        report = necessary_condition(a, b, 0)
        assert report.verdict == SATISFIABLE
        assert report.beta == 2
        assert report.gamma == gamma
        # the witnessed scalars are exactly the scaling conjugator that works
        theta = TriangularAffine.scaling(gamma, beta)
        assert verify_subgroup_conjugator(a, b, theta, 3)

    def test_scaling_invariance(self):
        a = CoeffSequence(3, [1, 2], [1])
        b = CoeffSequence(3, [1, 2], [1])
        scaled = CoeffSequence(3, [5, 10], [5])
        assert necessary_condition(a, b, 0).verdict == SATISFIABLE
        report = necessary_condition(a, scaled, 0)
        assert report.verdict == SATISFIABLE
        assert report.gamma == Fraction(1, 5)

    def test_omega0_pairs_certified(self):
        fam = omega0_family(4)
        for i in range(4):
            for j in range(i + 1, 4):
                report = necessary_condition(seq_from_bits(2, fam[i]),
                                             seq_from_bits(2, fam[j]), 0)
                assert report.verdict == CERTIFICATE

    def test_nonconstant_ratio_certificate(self):
        a = CoeffSequence(2, [], [1, 2])
        b = CoeffSequence(2, [], [2, 1])
        report = necessary_condition(a, b, 0)
        assert report.verdict == CERTIFICATE
        assert report.offsets == [0, 1]

    def test_root_of_unity_witness(self):
        # b_k = zeta4^(p^k+1) a_k at p = 2: needs a genuinely complex beta
        z4 = CycNum.zeta(2, 2)
        a = CoeffSequence(2, [1, 1, 1])
        b = CoeffSequence(2, [z4 ** (2 ** k + 1) for k in range(3)])
        report = necessary_condition(a, b, 0)
        assert report.verdict == SATISFIABLE
        assert report.beta in (z4, -z4, z4.inverse(), -z4.inverse())

    def test_early_mismatch_raises_effective_start(self):
        a = CoeffSequence(2, [1, 0])
        b = CoeffSequence(2, [0, 1])
        report = necessary_condition(a, b, 0)
        assert report.verdict == SATISFIABLE
        assert report.effective_from == 2

    def test_default_k0_is_end_of_prefixes(self):
        a = CoeffSequence(2, [1, 0])
        b = CoeffSequence(2, [0, 1])
        assert necessary_condition(a, b).effective_from == 2

    def test_mixed_primes_rejected(self):
        with pytest.raises(DomainMismatchError):
            necessary_condition(CoeffSequence(2, [1]), CoeffSequence(3, [1]), 0)


class TestVerifyConjugator:
    def test_identity_on_equal_sequences(self):
        a = CoeffSequence(2, [1, 1], [1])
        assert verify_subgroup_conjugator(a, a, TriangularAffine.identity(), 3)

    def test_scaling_orientation(self):
        a = CoeffSequence(2, [1, 1])
        b = CoeffSequence(2, [2 ** (2 ** k + 1) for k in range(2)])
        good = TriangularAffine.scaling(1, 2)
        bad = TriangularAffine.scaling(1, Fraction(1, 2))
        assert verify_subgroup_conjugator(a, b, good, 2)
        assert not verify_subgroup_conjugator(a, b, bad, 2)

    def test_distinct_supports_fail_identity(self):
        a = CoeffSequence(2, [1, 0])
        b = CoeffSequence(2, [0, 1])
        assert not verify_subgroup_conjugator(a, b, TriangularAffine.identity(), 1)

    def test_soundness_link(self):
        # every verified conjugator pair also satisfies the scalar condition
        rng = random.Random(107)
        for _ in range(10):
            p = rng.choice([2, 3])
            beta = rng.choice([Fraction(2), Fraction(1, 2), Fraction(-3)])
            prefix = [rng.choice([1, 2, Fraction(1, 2)]) for _ in range(3)]
            a = CoeffSequence(p, prefix)
            b = CoeffSequence(p, [Fraction(prefix[k]) * beta ** (p ** k + 1)
                                  for k in range(3)])
            theta = TriangularAffine.scaling(1, beta)
            assert verify_subgroup_conjugator(a, b, theta, 3)
            report = necessary_condition(a, b, 0)
            assert report.verdict == SATISFIABLE
            assert report.beta == beta

    def test_certificate_pairs_defeat_random_conjugators(self):
        rng = random.Random(109)
        fam = omega0_family(3)
        a = seq_from_bits(2, fam[0])
        b = seq_from_bits(2, fam[1])
        assert necessary_condition(a, b, 0).verdict == CERTIFICATE
        pool = [CycNum.one(), CycNum.rational(-1), CycNum.rational(2),
                CycNum.zeta(2, 2), CycNum.rational(Fraction(1, 2))]
        for _ in range(60):
            g = SparsePoly({(0, d): rng.choice(pool + [CycNum.zero()])
                            for d in range(rng.randint(0, 3))})
            theta = TriangularAffine(rng.choice(pool), g, rng.choice(pool),
                                     rng.choice(pool + [CycNum.zero()]))
            assert not verify_subgroup_conjugator(a, b, theta, 3)
