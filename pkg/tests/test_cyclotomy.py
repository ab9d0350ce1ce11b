import numpy as np
import pytest
from sympy import primefactors, primerange

from nutcirc.cyclotomy import ACCELERATED, ORACLE, ROOT_FREE_POLYNOMIALS, CycloDivisorReport, ReductionStep, \
                              cycloDivisorsAccelerated, cycloDivisorsOracle, filasetaStep, hasRootOfUnity, \
                              largePrimeExclusion, residueClassExclusion, substitutionRoots
from nutcirc.errors import ParameterError
from nutcirc.families import FamilyPolyId, PolyKind, familyPoly
from nutcirc.polynomial import SparsePoly, cyclotomic, eulerPhi, isDivisible

Q3 = SparsePoly({5: 2, 4: 1, 3: -1, 2: 1, 1: -1, 0: -2})
U2 = SparsePoly({8: 1, 7: 2, 5: -2, 3: 2, 1: -2, 0: -1})


def familyGrid():
    polys = []
    for t in range(3, 16, 2):
        polys.append(familyPoly(FamilyPolyId(PolyKind.Q, t)))
        polys.append(familyPoly(FamilyPolyId(PolyKind.R, t)))
    for t in range(2, 11):
        polys.append(familyPoly(FamilyPolyId(PolyKind.U, t)))
        polys.append(familyPoly(FamilyPolyId(PolyKind.W, t)))
    return polys


GRID = familyGrid()


def test_oracle_examples():
    assert cycloDivisorsOracle(SparsePoly({2: 1, 0: -1})).divisors == (1, 2)
    assert cycloDivisorsOracle(ROOT_FREE_POLYNOMIALS["Z'"]).divisors == ()
    assert cycloDivisorsOracle(Q3).divisors == (1, 2)
    assert cycloDivisorsOracle(U2).divisors == (1, 2)
    r3 = familyPoly(FamilyPolyId(PolyKind.R, 3))
    assert cycloDivisorsOracle(r3).divisors == (1, 2)


def test_oracle_report_fields():
    report = cycloDivisorsOracle(Q3)
    assert report.method == ORACLE
    assert report.degree == 5
    assert report.searchBound == 50
    for b in report.divisors:
        assert eulerPhi(b) <= report.degree
        assert isDivisible(Q3, cyclotomic(b))


def test_zero_polynomial_is_rejected():
    with pytest.raises(ParameterError):
        cycloDivisorsOracle(SparsePoly())
    with pytest.raises(ParameterError):
        cycloDivisorsAccelerated(SparsePoly())


def test_root_of_unity():
    assert not hasRootOfUnity(ROOT_FREE_POLYNOMIALS["Z1"])
    assert not hasRootOfUnity(ROOT_FREE_POLYNOMIALS["Z4"])
    assert hasRootOfUnity(SparsePoly({4: 1, 3: 1, 2: 1, 1: 1, 0: 1}))


def test_root_free_polynomials_have_no_cyclotomic_factor():
    for name, p in ROOT_FREE_POLYNOMIALS.items():
        assert cycloDivisorsOracle(p).isEmpty(), name


def test_substitution_roots():
    assert substitutionRoots() == {"Z1": True, "Z2": True, "Z3": True, "Z4": True}


def test_filaseta_step_examples():
    assert filasetaStep(6, 21) == [ReductionStep(21, 7, 1, 3, 6, 5)]
    assert filasetaStep(6, 15) == []
    assert filasetaStep(3, 7) == [ReductionStep(7, 7, 1, 1, 3, 5)]


def test_filaseta_step_takes_prime_powers_out():
    steps = filasetaStep(3, 49 * 3)
    assert steps == [ReductionStep(147, 7, 2, 3, 3, 5)]
    assert all(step.applicable for step in steps)


def test_filaseta_step_returns_every_contributing_prime():
    steps = filasetaStep(8, 5 * 7)
    assert [step.prime for step in steps] == [7, 5]
    assert [step.reduced for step in steps] == [5, 7]
    assert steps[0].conditionSum == 8


def test_filaseta_step_rejects_bad_input():
    with pytest.raises(ParameterError):
        filasetaStep(0, 7)
    with pytest.raises(ParameterError):
        filasetaStep(3, 1)


def test_filaseta_consistency_on_family_grid():
    for p in GRID:
        divisors = cycloDivisorsOracle(p).divisors
        for b in divisors:
            if b >= 2 and max(primefactors(b)) >= 7:
                steps = filasetaStep(p.termCount, b)
                assert not steps or any(step.reduced in divisors for step in steps)


def test_large_prime_exclusion_examples():
    assert largePrimeExclusion(Q3, 7)
    assert not largePrimeExclusion(cyclotomic(7).toSparse(), 7)
    assert largePrimeExclusion(U2, 7)


@pytest.mark.parametrize("q", [5, 9, 2, 1])
def test_large_prime_exclusion_rejects_small_or_composite(q):
    with pytest.raises(ParameterError):
        largePrimeExclusion(Q3, q)


def test_large_prime_exclusion_is_sound():
    for p in GRID:
        divisors = cycloDivisorsOracle(p).divisors
        for q in primerange(7, 60):
            if largePrimeExclusion(p, int(q)):
                assert q not in divisors and 2 * q not in divisors


def test_residue_class_exclusion():
    p = SparsePoly({4: 1, 1: 1, 0: 1})
    assert residueClassExclusion(p, 2)
    assert 4 not in cycloDivisorsOracle(p)
    assert not residueClassExclusion(Q3, 2)


def test_engines_agree_on_family_grid():
    for p in GRID:
        oracle = cycloDivisorsOracle(p)
        accelerated = cycloDivisorsAccelerated(p)
        assert accelerated.divisors == oracle.divisors, p
        assert accelerated.method == ACCELERATED
        assert accelerated.divisionsPerformed <= oracle.divisionsPerformed


def test_engines_agree_on_cyclotomic_products():
    p = (cyclotomic(7) * cyclotomic(9) * cyclotomic(1)).toSparse()
    assert cycloDivisorsAccelerated(p).divisors == cycloDivisorsOracle(p).divisors == (1, 7, 9)


def randomSparse(rng, termCount, maxExponent):
    exponents = rng.choice(maxExponent + 1, size=termCount, replace=False)
    coeffs = rng.choice([-3, -2, -1, 1, 2, 3], size=termCount)
    return SparsePoly(zip(exponents.tolist(), coeffs.tolist()))


def test_engines_agree_on_random_sparse_polynomials():
    rng = np.random.default_rng(20240611)
    for _ in range(60):
        p = randomSparse(rng, int(rng.integers(2, 7)), int(rng.integers(6, 40)))
        assert cycloDivisorsAccelerated(p).divisors == cycloDivisorsOracle(p).divisors, p


@pytest.mark.parametrize("b", [7, 9, 11, 14, 18, 22, 25, 27, 49])
def test_engines_agree_on_cyclotomic_multiples(b):
    rng = np.random.default_rng(b)
    for _ in range(4):
        p = (cyclotomic(b) * randomSparse(rng, int(rng.integers(1, 4)), 8)).toSparse()
        oracle = cycloDivisorsOracle(p)
        accelerated = cycloDivisorsAccelerated(p)
        assert b in oracle
        assert accelerated.divisors == oracle.divisors, p
        assert accelerated.divisionsPerformed <= oracle.divisionsPerformed


def test_family_polynomials_only_have_small_cyclotomic_factors():
    for t in range(3, 16, 2):
        for kind in (PolyKind.Q, PolyKind.R):
            assert cycloDivisorsOracle(familyPoly(FamilyPolyId(kind, t))).divisors == (1, 2)
    for t in range(2, 11):
        for kind in (PolyKind.U, PolyKind.W):
            assert set(cycloDivisorsOracle(familyPoly(FamilyPolyId(kind, t))).divisors) <= {1, 2, 4, 8}


def test_report_json_round_trip():
    report = cycloDivisorsAccelerated(U2)
    assert CycloDivisorReport.fromJSON(report.toJSON()) == report
    assert report.toJSON()["engine"] == ACCELERATED
    step = filasetaStep(6, 21)[0]
    assert ReductionStep.fromJSON(step.toJSON()) == step


def test_reports_are_read_only():
    report = cycloDivisorsOracle(U2)
    with pytest.raises(AttributeError):
        report.divisors = ()
    step = filasetaStep(6, 21)[0]
    with pytest.raises(AttributeError):
        step.reduced = 21
    assert len({step, ReductionStep.fromJSON(step.toJSON())}) == 1
