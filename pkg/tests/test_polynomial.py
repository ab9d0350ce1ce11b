import random
from fractions import Fraction

import pytest
from sympy import Poly, cyclotomic_poly, divisors, primefactors, symbols

from nutcirc.errors import ParameterError
from nutcirc.polynomial import DensePoly, SparsePoly, cyclotomic, denseDivRem, eulerPhi, isDivisible, \
                               reduceModSigned, reduceModXb, residueClasses, xPowerMinusOne

Q3 = SparsePoly({5: 2, 4: 1, 3: -1, 2: 1, 1: -1, 0: -2})
U2 = SparsePoly({8: 1, 7: 2, 5: -2, 3: 2, 1: -2, 0: -1})


def randomSparse(rng, maxDegree=40, terms=6):
    return SparsePoly((rng.randrange(maxDegree + 1), rng.randint(-9, 9)) for _ in range(terms))


def test_dense_trims_trailing_zeros():
    p = DensePoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert DensePoly([0, 0]).isZero()
    assert DensePoly().degree == -1


def test_sparse_drops_zero_and_sums_duplicates():
    p = SparsePoly([(3, 2), (3, -2), (1, 4), (1, 1)])
    assert p.terms == {1: 5}
    assert p.termCount == 1


def test_sparse_rejects_negative_exponent():
    with pytest.raises(ParameterError):
        SparsePoly({-1: 1})


def test_float_coefficient_is_a_type_error():
    with pytest.raises(TypeError):
        DensePoly([1.5])


def test_dense_and_sparse_compare_structurally():
    assert Q3 == Q3.toDense()
    assert Q3.toDense().toSparse() == Q3
    assert DensePoly([-1, 0, 1]) == SparsePoly({2: 1, 0: -1})


def test_arithmetic():
    a = DensePoly([1, 1])
    b = DensePoly([-1, 1])
    assert a * b == DensePoly([-1, 0, 1])
    assert a + b == DensePoly([0, 2])
    assert a - a == DensePoly()
    assert Q3 - Q3 == SparsePoly()
    assert SparsePoly({1: 1}) * SparsePoly({1: 1, 0: 1}) == SparsePoly({2: 1, 1: 1})


def test_div_rem_factorization():
    quotient, remainder = denseDivRem(DensePoly([-1, 0, 1]), DensePoly([-1, 1]))
    assert quotient == DensePoly([1, 1])
    assert remainder.isZero()


def test_div_rem_appendix_row():
    remainder = denseDivRem(DensePoly([-3, 0, 3]), cyclotomic(3))[1]
    assert remainder == DensePoly([-6, -3])


def test_div_rem_by_phi4_is_nonzero():
    z1 = SparsePoly({10: 2, 5: 1, 0: 2})
    remainder = denseDivRem(z1, cyclotomic(4))[1]
    assert remainder == DensePoly([0, 1])


def test_div_rem_non_monic_divisor_is_exact():
    quotient, remainder = denseDivRem(DensePoly([0, 0, 1]), DensePoly([0, 2]))
    assert quotient.coeffs == (0, Fraction(1, 2))
    assert remainder.isZero()


def test_div_by_zero_polynomial():
    with pytest.raises(ParameterError):
        denseDivRem(DensePoly([1, 1]), DensePoly())


def test_div_rem_round_trip_random_monic():
    rng = random.Random(7)
    for _ in range(200):
        a = DensePoly(rng.randint(-20, 20) for _ in range(rng.randint(1, 30)))
        b = DensePoly([rng.randint(-5, 5) for _ in range(rng.randint(0, 8))] + [1])
        quotient, remainder = denseDivRem(a, b)
        assert quotient * b + remainder == a
        assert remainder.degree < b.degree


@pytest.mark.parametrize("b, coeffs", [(1, (-1, 1)),
                                       (2, (1, 1)),
                                       (6, (1, -1, 1)),
                                       (12, (1, 0, -1, 0, 1))])
def test_cyclotomic_examples(b, coeffs):
    assert cyclotomic(b).coeffs == coeffs


def test_cyclotomic_rejects_zero():
    with pytest.raises(ParameterError):
        cyclotomic(0)


def test_cyclotomic_matches_sympy():
    x = symbols("x")
    for b in (5, 15, 30, 36, 105):
        expected = Poly(cyclotomic_poly(b, x), x).all_coeffs()[::-1]
        assert cyclotomic(b).coeffs == tuple(int(c) for c in expected)


def test_product_of_cyclotomics_is_x_power_minus_one():
    for b in range(1, 61):
        product = DensePoly([1])
        for d in divisors(b):
            product = product * cyclotomic(int(d))
        assert product == xPowerMinusOne(b)


def test_cyclotomic_degree_is_totient():
    for b in range(1, 61):
        assert cyclotomic(b).degree == eulerPhi(b)
        assert cyclotomic(b).isMonic()


def test_cyclotomic_of_non_square_free_index():
    for b in range(2, 201):
        for p in primefactors(b):
            p = int(p)
            if b % (p * p) == 0:
                assert cyclotomic(b).toSparse() == cyclotomic(b // p).toSparse().substitute(p)


@pytest.mark.parametrize("b, phi", [(1, 1), (2, 1), (30, 8), (7, 6)])
def test_euler_phi(b, phi):
    assert eulerPhi(b) == phi


def test_reduce_mod_xb_examples():
    assert reduceModXb(Q3, 3) == SparsePoly({2: 3, 0: -3})
    assert reduceModXb(SparsePoly({7: 1}), 7) == SparsePoly({0: 1})
    assert reduceModXb(U2, 5) == SparsePoly({0: -3, 1: -2, 2: 2, 3: 3})


def test_reduce_mod_xb_is_congruent():
    rng = random.Random(11)
    for _ in range(100):
        p = randomSparse(rng)
        b = rng.randint(1, 30)
        assert isDivisible(reduceModXb(p, b) - p, xPowerMinusOne(b))


def test_reduce_mod_signed_examples():
    assert reduceModSigned(SparsePoly({7: 1}), 7) == SparsePoly({0: -1})
    assert reduceModSigned(SparsePoly({13: 2, 0: 1}), 7) == SparsePoly({0: 1, 6: -2})
    assert reduceModSigned(Q3, 7) == Q3


def test_reduce_mod_signed_is_congruent():
    rng = random.Random(5)
    for _ in range(100):
        p = randomSparse(rng)
        q = rng.randint(1, 20)
        assert isDivisible(reduceModSigned(p, q) - p, SparsePoly({q: 1, 0: 1}))


def test_residue_classes():
    parts = residueClasses(SparsePoly({4: 1, 1: 1, 0: 1}), 2)
    assert parts == {0: SparsePoly({4: 1, 0: 1}), 1: SparsePoly({1: 1})}


def test_human_form():
    assert Q3.toHuman() == "-2-x+x^2-x^3+x^4+2 x^5"
    assert SparsePoly().toHuman() == "0"
    assert DensePoly([-6, -3]).toHuman() == "-6-3 x"
