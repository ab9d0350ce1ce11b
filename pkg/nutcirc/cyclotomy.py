# -*- coding: utf-8 -*-
"""
Which cyclotomic polynomials divide a given integer polynomial.

The oracle tests every index b with phi(b) <= deg P by exact division. The
accelerated engine returns the same set but skips indices that the
Filaseta-Schinzel reduction, the term-count argument for prime b and the
residue-class argument for non square-free b rule out beforehand.
"""

import logging

from sympy import factorint, isprime, primefactors

from .errors import ParameterError
from .polynomial import SparsePoly, asSparse, cyclotomic, eulerPhi, isDivisible, \
                        reduceModSigned, reduceModXb, residueClasses

logger = logging.getLogger(__name__)

ORACLE = "oracle"
ACCELERATED = "accelerated"


class ReductionStep:
    """
     One prime of b taken by the Filaseta-Schinzel reduction: b is replaced
     by b / prime^exponent once the summed (prime - 2) of the primes taken
     so far exceeds termCount - 2.
    """

    def __init__(self, b, prime, exponent, reduced, termCount, conditionSum):
        self.__b            = b
        self.__prime        = prime
        self.__exponent     = exponent
        self.__reduced      = reduced
        self.__termCount    = termCount
        self.__conditionSum = conditionSum

    @property
    def b(self):
        return self.__b

    @property
    def prime(self):
        return self.__prime

    @property
    def exponent(self):
        return self.__exponent

    @property
    def reduced(self):
        return self.__reduced

    @property
    def termCount(self):
        return self.__termCount

    @property
    def conditionSum(self):
        return self.__conditionSum

    @property
    def applicable(self):
        return self.__conditionSum > self.__termCount - 2

    def __eq__(self, other):
        if not isinstance(other, ReductionStep):
            return NotImplemented
        return self.toJSON() == other.toJSON()

    def __hash__(self):
        return hash((self.__b, self.__prime, self.__exponent, self.__reduced, self.__termCount, self.__conditionSum))

    def __repr__(self):
        return "ReductionStep(b=" + str(self.__b) + ", prime=" + str(self.__prime) + ", reduced=" \
               + str(self.__reduced) + ")"

    def toJSON(self):
        return {"b": self.__b,
                "prime": self.__prime,
                "exponent": self.__exponent,
                "reduced": self.__reduced,
                "term_count": self.__termCount,
                "condition_sum": self.__conditionSum}

    @staticmethod
    def fromJSON(jsonReport):
        return ReductionStep(jsonReport["b"], jsonReport["prime"], jsonReport["exponent"],
                             jsonReport["reduced"], jsonReport["term_count"], jsonReport["condition_sum"])


class CycloDivisorReport:

    def __init__(self, divisors, searchBound, method, degree, divisionsPerformed=0):
        self.__divisors           = tuple(divisors)
        self.__searchBound        = searchBound
        self.__method             = method
        self.__degree             = degree
        self.__divisionsPerformed = divisionsPerformed

    @property
    def divisors(self):
        return self.__divisors

    @property
    def searchBound(self):
        return self.__searchBound

    @property
    def method(self):
        return self.__method

    @property
    def degree(self):
        return self.__degree

    @property
    def divisionsPerformed(self):
        return self.__divisionsPerformed

    def __contains__(self, b):
        return b in self.__divisors

    def __eq__(self, other):
        if not isinstance(other, CycloDivisorReport):
            return NotImplemented
        return self.toJSON() == other.toJSON()

    def __hash__(self):
        return hash((self.__divisors, self.__searchBound, self.__method, self.__degree, self.__divisionsPerformed))

    def __repr__(self):
        return "CycloDivisorReport(" + self.__method + ": " + str(list(self.__divisors)) + ")"

    def isEmpty(self):
        return len(self.__divisors) == 0

    def toJSON(self):
        return {"divisors": list(self.__divisors),
                "degree": self.__degree,
                "engine": self.__method,
                "search_bound": self.__searchBound,
                "divisions_performed": self.__divisionsPerformed}

    @staticmethod
    def fromJSON(jsonReport):
        return CycloDivisorReport(jsonReport["divisors"], jsonReport["search_bound"],
                                  jsonReport["engine"], jsonReport["degree"],
                                  jsonReport.get("divisions_performed", 0))


def searchBound(degree):
    # phi(b) >= sqrt(b/2), so phi(b) <= d implies b <= 2 d^2
    return max(2 * degree * degree, 2)


def candidateIndices(degree):
    return [b for b in range(1, searchBound(degree) + 1) if eulerPhi(b) <= degree]


def requireNonZero(p):
    p = asSparse(p)
    if p.isZero():
        raise ParameterError("the zero polynomial is divisible by every cyclotomic polynomial")
    return p


def cycloDivisorsOracle(p):
    p = requireNonZero(p)
    dense = p.toDense()
    found = []
    candidates = candidateIndices(p.degree)
    for b in candidates:
        if isDivisible(dense, cyclotomic(b)):
            found.append(b)
    return CycloDivisorReport(tuple(found), searchBound(p.degree), ORACLE, p.degree, len(candidates))


def hasRootOfUnity(p):
    return not cycloDivisorsOracle(p).isEmpty()


def filasetaStep(termCount, b):
    """
     Takes the distinct primes of b from the largest down until
     sum(p - 2) exceeds termCount - 2. Returns one step per contributing
     prime, or [] when all primes of b together do not satisfy the condition.
    """
    if termCount < 1:
        raise ParameterError("term count must be at least 1, received " + str(termCount))
    if b < 2:
        raise ParameterError("b must be at least 2, received " + str(b))

    factors = factorint(b)
    primes = sorted((int(q) for q in factors), reverse=True)
    conditionSum = 0
    for k, prime in enumerate(primes, 1):
        conditionSum += prime - 2
        if conditionSum > termCount - 2:
            steps = []
            for q in primes[:k]:
                e = int(factors[q])
                steps.append(ReductionStep(b, q, e, b // q ** e, termCount, conditionSum))
            return steps
    return []


def largePrimeExclusion(p, q):
    """
     True when both Phi_q and Phi_2q are certified not to divide p. A nonzero
     multiple of Phi_q of degree < q has exactly q terms (likewise Phi_2q in
     the signed reduction), so a nonzero reduction with fewer terms settles it.
    """
    if isinstance(q, bool) or not isinstance(q, int) or q < 7 or not isprime(q):
        raise ParameterError("q must be a prime of at least 7, received " + str(q))
    p = asSparse(p)
    for reduction in (reduceModXb(p, q), reduceModSigned(p, q)):
        if reduction.isZero() or reduction.termCount >= q:
            return False
    return True


def residueClassExclusion(p, prime):
    """
     For b with prime^2 | b, Phi_b(x) = Phi_{b/prime}(x^prime), so Phi_b | p
     forces Phi_b to divide every part of p collecting the exponents of one
     residue class mod prime. A part that is a single monomial cannot be
     divisible, which excludes every such b.
    """
    p = asSparse(p)
    return any(part.termCount == 1 for part in residueClasses(p, prime).values())


def cycloDivisorsAccelerated(p):
    p = requireNonZero(p)
    dense = p.toDense()
    termCount = p.termCount

    largePrime = {}
    squareClass = {}
    found = []
    divisions = 0
    pruned = 0

    for b in candidateIndices(p.degree):
        if b >= 2:
            steps = filasetaStep(termCount, b)
            if steps and not any(step.reduced in found for step in steps):
                pruned += 1
                continue

            q = b if b % 2 else b // 2
            if q >= 7 and isprime(q):
                if q not in largePrime:
                    largePrime[q] = largePrimeExclusion(p, q)
                if largePrime[q]:
                    pruned += 1
                    continue

            excluded = False
            for prime in primefactors(b):
                prime = int(prime)
                if b % (prime * prime) == 0:
                    if prime not in squareClass:
                        squareClass[prime] = residueClassExclusion(p, prime)
                    if squareClass[prime]:
                        excluded = True
                        break
            if excluded:
                pruned += 1
                continue

        divisions += 1
        if isDivisible(dense, cyclotomic(b)):
            found.append(b)

    logger.debug("accelerated engine: degree %d, %d divisions, %d indices pruned", p.degree, divisions, pruned)
    return CycloDivisorReport(tuple(found), searchBound(p.degree), ACCELERATED, p.degree, divisions)


def cycloDivisors(p, engine=ORACLE):
    if engine == ORACLE:
        return cycloDivisorsOracle(p)
    if engine == ACCELERATED:
        return cycloDivisorsAccelerated(p)
    raise ParameterError("unknown engine '" + str(engine) + "'")


# Polynomials whose lack of roots of unity closes the b = 5 and b = 3
# branches of the U/W divisibility arguments.
ROOT_FREE_POLYNOMIALS = {"Z1":  SparsePoly({10: 2, 5: 1, 0: 2}),
                         "Z2":  SparsePoly({10: 2, 5: -1, 0: 2}),
                         "Z3":  SparsePoly({6: 2, 3: 1, 0: 2}),
                         "Z4":  SparsePoly({6: 2, 3: -1, 0: 2}),
                         "Z'":  SparsePoly({2: 2, 1: 1, 0: 2}),
                         "Z''": SparsePoly({2: 2, 1: -1, 0: 2})}

SUBSTITUTIONS = {"Z1": ("Z'", 5),
                 "Z2": ("Z''", 5),
                 "Z3": ("Z'", 3),
                 "Z4": ("Z''", 3)}


def substitutionRoots():
    """
     For each of Z1..Z4, whether it equals Z' or Z'' evaluated at x^k. When it
     does, its roots are the k-th roots of the base roots, and a root of unity
     among them would give one for the base polynomial.
    """
    return {name: ROOT_FREE_POLYNOMIALS[name] == ROOT_FREE_POLYNOMIALS[base].substitute(power)
            for name, (base, power) in SUBSTITUTIONS.items()}
