import math
import random

import pytest

import quadcantor as qc
from quadcantor import IdealHNF, make_field


def _minpoly_value(field, r, p):
    if field.half_basis:
        return (r * r - r + (1 - field.d) // 4) % p
    return (r * r - field.d) % p


def _brute_roots(field, p):
    return [r for r in range(p) if _minpoly_value(field, r, p) == 0]


def _primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            for j in range(i * i, n + 1, i):
                sieve[j] = False
    return [i for i, v in enumerate(sieve) if v]


class TestHNF:
    def test_principal_two(self, gauss):
        ideal = qc.ideal_from_generators([gauss.element(2)])
        assert (ideal.a, ideal.b, ideal.c) == (2, 0, 2)
        assert ideal.norm == 4

    def test_one_plus_i(self, gauss):
        ideal = qc.ideal_from_generators([gauss.element(1, 1)])
        assert ideal.norm == 2
        assert ideal.contains(gauss.element(2))  # 2 = (1+i)(1-i)

    def test_redundant_generator(self, gauss):
        lone = qc.ideal_from_generators([gauss.element(1, 1)])
        both = qc.ideal_from_generators([gauss.element(2), gauss.element(1, 1)])
        assert lone == both

    def test_all_zero_rejected(self, gauss):
        with pytest.raises(ValueError):
            qc.ideal_from_generators([gauss.zero])

    def test_invariants_enforced(self, gauss):
        with pytest.raises(ValueError):
            IdealHNF(gauss, 4, 1, 2)  # c does not divide b


class TestIdealMul:
    def test_square_of_ramified(self, gauss):
        p = qc.ideal_from_generators([gauss.element(1, 1)])
        assert qc.ideal_mul(p, p) == qc.principal_ideal(gauss.element(2))

    def test_unit_identity(self, gauss):
        ideal = qc.ideal_from_generators([gauss.element(3, 2)])
        assert qc.ideal_mul(ideal, qc.unit_ideal(gauss)) == ideal

    def test_ideal_sum(self, gauss):
        two = qc.principal_ideal(gauss.element(2))
        three = qc.principal_ideal(gauss.element(3))
        assert qc.ideal_sum(two, three).is_unit()
        ram = qc.principal_ideal(gauss.element(1, 1))
        assert qc.ideal_sum(two, ram) == ram

    def test_norm_multiplicative_random(self):
        rng = random.Random(7)
        for d in (-1, -2, -3, -7, -11):
            field = make_field(d)
            for _ in range(25):
                g1 = field.element(rng.randint(-20, 20), rng.randint(-20, 20))
                g2 = field.element(rng.randint(-20, 20), rng.randint(-20, 20))
                if g1.is_zero() or g2.is_zero():
                    continue
                i, j = qc.principal_ideal(g1), qc.principal_ideal(g2)
                assert qc.ideal_mul(i, j).norm == i.norm * j.norm


class TestPrimeSplitting:
    def test_two_ramifies_in_gauss(self, gauss):
        s = qc.factor_rational_prime(gauss, 2)
        assert s.kind == "ramified"
        prime = s.primes[0]
        assert (prime.e, prime.f) == (2, 1)
        assert qc.ideal_mul(prime.hnf, prime.hnf) == qc.principal_ideal(gauss.element(2))

    def test_five_splits_in_gauss(self, gauss):
        s = qc.factor_rational_prime(gauss, 5)
        assert s.kind == "split"
        assert sorted(p.root for p in s.primes) == _brute_roots(gauss, 5) == [2, 3]

    def test_three_inert_in_gauss(self, gauss):
        s = qc.factor_rational_prime(gauss, 3)
        assert s.kind == "inert"
        assert s.primes[0].f == 2 and s.primes[0].norm == 9
        assert _brute_roots(gauss, 3) == []

    def test_composite_rejected(self, gauss):
        with pytest.raises(ValueError):
            qc.factor_rational_prime(gauss, 6)

    @pytest.mark.parametrize("d", [-1, -2, -3, -7, -11])
    def test_agrees_with_root_search(self, d):
        field = make_field(d)
        for p in _primes_upto(200):
            s = qc.factor_rational_prime(field, p)
            roots = _brute_roots(field, p)
            if not roots:
                assert s.kind == "inert"
            elif field.disc % p == 0:
                assert s.kind == "ramified"
                assert len(roots) == 1 and s.primes[0].root == roots[0]
            else:
                assert s.kind == "split"
                assert sorted(q.root for q in s.primes) == roots
            rebuilt = qc.unit_ideal(field)
            for prime, mult in s.factors():
                rebuilt = qc.ideal_mul(rebuilt, qc.ideal_pow(prime.hnf, mult))
            assert rebuilt == qc.principal_ideal(field.element(p))


class TestFactorElement:
    def test_ten(self, gauss):
        fact = qc.factor_element(gauss.element(10))
        by_key = {(p.p, p.root): b for p, b in fact.factors}
        assert by_key == {(2, 1): 2, (5, 2): 1, (5, 3): 1}

    def test_inert_three(self, gauss):
        fact = qc.factor_element(gauss.element(3))
        assert len(fact.factors) == 1
        prime, b = fact.factors[0]
        assert prime.f == 2 and b == 1 and prime.norm == 9

    def test_prime_norm_element(self, gauss):
        alpha = gauss.element(-4, 1)
        fact = qc.factor_element(alpha)
        assert alpha.norm() == 17
        assert len(fact.factors) == 1
        prime, b = fact.factors[0]
        assert b == 1 and prime.p == 17
        # brute root: w = r must make -4 + r vanish mod 17
        assert prime.root == 4 and prime.contains(alpha)

    def test_unit_and_zero_rejected(self, gauss):
        with pytest.raises(ValueError):
            qc.factor_element(gauss.one)
        with pytest.raises(ValueError):
            qc.factor_element(gauss.zero)

    def test_reconstruction_random(self):
        rng = random.Random(11)
        for d in (-1, -2, -3, -5, -7):
            field = make_field(d)
            done = 0
            while done < 15:
                alpha = field.element(rng.randint(-40, 40), rng.randint(-40, 40))
                if alpha.norm() < 2:
                    continue
                fact = qc.factor_element(alpha)
                assert fact.product_hnf() == qc.principal_ideal(alpha)
                assert math.prod(p.norm**b for p, b in fact.factors) == alpha.norm()
                done += 1


class TestValuation:
    def test_examples(self, gauss):
        p2 = qc.factor_rational_prime(gauss, 2).primes[0]
        p5 = next(p for p in qc.factor_rational_prime(gauss, 5).primes if p.root == 2)
        assert qc.valuation(gauss.element(4), p2) == 4
        assert qc.valuation(gauss.element(10), p5) == 1
        assert qc.valuation(gauss.element(3), p5) == 0

    def test_zero_rejected(self, gauss):
        p2 = qc.factor_rational_prime(gauss, 2).primes[0]
        with pytest.raises(ValueError):
            qc.valuation(gauss.zero, p2)

    def test_additive(self, gauss):
        rng = random.Random(3)
        p2 = qc.factor_rational_prime(gauss, 2).primes[0]
        p5 = next(p for p in qc.factor_rational_prime(gauss, 5).primes if p.root == 2)
        for prime in (p2, p5):
            for _ in range(20):
                z = gauss.element(rng.randint(-30, 30), rng.randint(-30, 30))
                w = gauss.element(rng.randint(-30, 30), rng.randint(-30, 30))
                if z.is_zero() or w.is_zero():
                    continue
                assert qc.valuation(z * w, prime) == qc.valuation(z, prime) + qc.valuation(
                    w, prime
                )


class TestCoprime:
    def test_examples(self, gauss):
        assert qc.are_coprime(gauss.element(2), gauss.element(3))
        assert not qc.are_coprime(gauss.element(1, 1), gauss.element(2))
        assert qc.are_coprime(gauss.element(-4, 1), gauss.element(-2, 1))

    def test_zero_rejected(self, gauss):
        with pytest.raises(ValueError):
            qc.are_coprime(gauss.zero, gauss.one)

    def test_matches_disjoint_supports(self):
        rng = random.Random(5)
        for d in (-1, -3, -5):
            field = make_field(d)
            done = 0
            while done < 15:
                a = field.element(rng.randint(-15, 15), rng.randint(-15, 15))
                b = field.element(rng.randint(-15, 15), rng.randint(-15, 15))
                if a.norm() < 2 or b.norm() < 2:
                    continue
                pa = {p.hnf for p, _ in qc.factor_element(a).factors}
                pb = {p.hnf for p, _ in qc.factor_element(b).factors}
                assert qc.are_coprime(a, b) == pa.isdisjoint(pb)
                done += 1


class TestReduceMod:
    def test_examples(self, gauss):
        p5 = next(p for p in qc.factor_rational_prime(gauss, 5).primes if p.root == 2)
        ideal = p5.hnf
        assert qc.reduce_mod(gauss.element(7), ideal) == qc.reduce_mod(gauss.element(2), ideal)
        assert qc.reduce_mod(gauss.omega, ideal) == qc.reduce_mod(gauss.element(2), ideal)
        assert qc.reduce_mod(gauss.zero, ideal) == gauss.zero

    def test_idempotent_and_compatible(self, gauss):
        rng = random.Random(9)
        ideal = qc.ideal_from_generators([gauss.element(4, 7)])
        for _ in range(30):
            a = gauss.element(rng.randint(-99, 99), rng.randint(-99, 99))
            b = gauss.element(rng.randint(-99, 99), rng.randint(-99, 99))
            ra = qc.reduce_mod(a, ideal)
            assert qc.reduce_mod(ra, ideal) == ra
            lhs = qc.reduce_mod(a * b, ideal)
            rhs = qc.reduce_mod(qc.reduce_mod(a, ideal) * qc.reduce_mod(b, ideal), ideal)
            assert lhs == rhs

    def test_residue_count(self, gauss):
        ideal = qc.ideal_from_generators([gauss.element(1, 2)])  # norm 5
        residues = {
            qc.reduce_mod(gauss.element(x, y), ideal)
            for x in range(-6, 7)
            for y in range(-6, 7)
        }
        assert len(residues) == ideal.norm

    def test_residue_count_half_basis(self, eisenstein):
        ideal = qc.ideal_from_generators([eisenstein.element(2, 1)])  # norm 7
        residues = {
            qc.reduce_mod(eisenstein.element(x, y), ideal)
            for x in range(-8, 9)
            for y in range(-8, 9)
        }
        assert len(residues) == ideal.norm
