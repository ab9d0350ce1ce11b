# -*- coding: utf-8 -*-
"""
Circulant graphs Circ(n, S) and two exact nut graph decisions.

The spectral decision works on the eigenvalue polynomial
P(x) = sum over s in S of (x^s + x^(n-s)): the eigenvalues are P at the n-th
roots of unity, and Circ(n, S) is a nut graph iff n is even, S holds as many
odd as even generators, and no cyclotomic Phi_b with b | n, b >= 3 divides P.

The kernel oracle ignores all of that and computes the null space of the
adjacency matrix by fraction-free elimination.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache

import networkx as nx
import numpy as np
from sympy import divisors

from .errors import CapacityError, ParameterError
from .polynomial import SparsePoly, cyclotomic, isDivisible
from .settings import getSettings
from .utils import numberFromJSON, numberToJSON

logger = logging.getLogger(__name__)

SPECTRAL = "spectral"
KERNEL   = "kernel"
FAMILY   = "family"

ODD_ORDER        = "odd-order"
PARITY_IMBALANCE = "parity-imbalance"
SPECTRAL_FAILURE = "spectral-failure"
NULLITY_NOT_ONE  = "nullity-not-one"
KERNEL_HAS_ZERO  = "kernel-has-zero"
OK               = "ok"

REASONS = (ODD_ORDER, PARITY_IMBALANCE, SPECTRAL_FAILURE, NULLITY_NOT_ONE, KERNEL_HAS_ZERO, OK)


class GeneratorSet:
    # The generator set S of Circ(n, S). Generators are kept strictly below
    # n/2 so that every s contributes the two distinct terms x^s and x^(n-s)
    # to the eigenvalue polynomial. Odd orders are representable; the
    # spectral decision rejects them with reason odd-order.

    def __init__(self, n, elements):
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError("The order must be an integer, received '" + str(type(n)) + "'")
        if n < 3:
            raise ParameterError("the order must be at least 3, received " + str(n))

        elements = list(elements)
        for s in elements:
            if isinstance(s, bool) or not isinstance(s, int):
                raise TypeError("Generators must be integers, received '" + str(type(s)) + "'")
        if not elements:
            raise ParameterError("the generator set must not be empty")
        if len(set(elements)) != len(elements):
            raise ParameterError("generators must be distinct, received " + str(elements))
        for s in elements:
            if s < 1 or 2 * s >= n:
                raise ParameterError("every generator s must satisfy 1 <= s < n/2 (n = " + str(n)
                                     + "), received " + str(s))

        self.__n        = n
        self.__elements = tuple(sorted(elements))

    @property
    def n(self):
        return self.__n

    @property
    def elements(self):
        return self.__elements

    @property
    def degree(self):
        return 2 * len(self.__elements)

    def __len__(self):
        return len(self.__elements)

    def __iter__(self):
        return iter(self.__elements)

    def __eq__(self, other):
        if not isinstance(other, GeneratorSet):
            return NotImplemented
        return self.__n == other.n and self.__elements == other.elements

    def __hash__(self):
        return hash((self.__n, self.__elements))

    def __repr__(self):
        return "Circ(" + str(self.__n) + ", {" + ", ".join(str(s) for s in self.__elements) + "})"

    def toJSON(self):
        return {"n": self.__n, "elements": list(self.__elements)}

    @staticmethod
    def fromJSON(jsonSet):
        return GeneratorSet(jsonSet["n"], jsonSet["elements"])


class KernelReport:

    def __init__(self, nullity, kernelVector=None, fullSupport=False):
        if kernelVector is not None:
            kernelVector = tuple(kernelVector)
            if nullity != 1:
                raise ParameterError("a kernel vector is only reported for nullity one")
        elif nullity == 1:
            raise ParameterError("nullity one requires a kernel vector")
        self.nullity      = nullity
        self.kernelVector = kernelVector
        self.fullSupport  = kernelVector is not None and all(v != 0 for v in kernelVector)
        if fullSupport and not self.fullSupport:
            raise ParameterError("full support claimed for a vector with zero entries")

    def __eq__(self, other):
        if not isinstance(other, KernelReport):
            return NotImplemented
        return (self.nullity, self.kernelVector, self.fullSupport) == \
               (other.nullity, other.kernelVector, other.fullSupport)

    def __repr__(self):
        return "KernelReport(nullity=" + str(self.nullity) + ", fullSupport=" + str(self.fullSupport) + ")"

    def toJSON(self):
        vector = None if self.kernelVector is None else [numberToJSON(v) for v in self.kernelVector]
        return {"nullity": self.nullity, "kernel_vector": vector, "full_support": self.fullSupport}

    @staticmethod
    def fromJSON(jsonReport):
        vector = jsonReport["kernel_vector"]
        if vector is not None:
            vector = [numberFromJSON(v) for v in vector]
        return KernelReport(jsonReport["nullity"], vector, jsonReport["full_support"])


class NutVerdict:
    """
     Outcome of a nut graph decision. The witness is the smallest failing
     divisor b for spectral-failure, the kernel vector for kernel-has-zero
     and for a positive kernel verdict, and None otherwise.
    """

    def __init__(self, isNut, reason, witness=None, method=SPECTRAL):
        if reason not in REASONS:
            raise ParameterError("unknown verdict reason '" + str(reason) + "'")
        if (reason == OK) != bool(isNut):
            raise ParameterError("reason 'ok' goes with a positive verdict and only with it")
        if isinstance(witness, list):
            witness = tuple(witness)
        self.isNut   = bool(isNut)
        self.reason  = reason
        self.witness = witness
        self.method  = method

    def __bool__(self):
        return self.isNut

    def __eq__(self, other):
        if not isinstance(other, NutVerdict):
            return NotImplemented
        return (self.isNut, self.reason, self.witness, self.method) == \
               (other.isNut, other.reason, other.witness, other.method)

    def __repr__(self):
        return "NutVerdict(" + self.method + ": " + self.reason + ")"

    def toJSON(self):
        if isinstance(self.witness, tuple):
            witness = [numberToJSON(v) for v in self.witness]
        else:
            witness = self.witness
        return {"is_nut": self.isNut, "reason": self.reason, "witness": witness, "method": self.method}

    @staticmethod
    def fromJSON(jsonVerdict):
        witness = jsonVerdict["witness"]
        if isinstance(witness, list):
            witness = tuple(numberFromJSON(v) for v in witness)
        return NutVerdict(jsonVerdict["is_nut"], jsonVerdict["reason"], witness, jsonVerdict["method"])


def eigenPoly(g):
    return SparsePoly([(s, 1) for s in g] + [(g.n - s, 1) for s in g])


def parityBalanced(g):
    odd = sum(1 for s in g if s % 2)
    return 2 * odd == len(g)


@lru_cache(maxsize=None)
def spectralDivisors(n):
    # (b, Phi_b) for every divisor b >= 3 of n, ascending
    return tuple((int(b), cyclotomic(int(b))) for b in divisors(n) if b >= 3)


def isNutSpectral(g):
    if g.n % 2:
        return NutVerdict(False, ODD_ORDER)
    if not parityBalanced(g):
        return NutVerdict(False, PARITY_IMBALANCE)

    p = eigenPoly(g).toDense()
    for b, phi in spectralDivisors(g.n):
        if isDivisible(p, phi):
            return NutVerdict(False, SPECTRAL_FAILURE, witness=b)
    return NutVerdict(True, OK)


def adjacencyMatrix(g):
    graph = nx.circulant_graph(g.n, g.elements)
    matrix = nx.to_numpy_array(graph, nodelist=range(g.n), dtype=np.int64)
    if not np.all(matrix.sum(axis=1) == g.degree):
        raise ArithmeticError("adjacency rows of " + repr(g) + " do not all sum to " + str(g.degree))
    return matrix


def bareissEchelon(rows):
    """
     Fraction-free row echelon form. Columns without a pivot are skipped; every
     division by the previous pivot is exact. Returns the echelon rows and
     the pivot columns.
    """
    m = [list(row) for row in rows]
    nRows = len(m)
    nCols = len(m[0]) if nRows else 0

    pivotCols = []
    previous = 1
    r = 0
    for c in range(nCols):
        if r == nRows:
            break
        pivot = next((i for i in range(r, nRows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]

        rowR = m[r]
        head = rowR[c]
        for i in range(r + 1, nRows):
            rowI = m[i]
            lead = rowI[c]
            for j in range(c + 1, nCols):
                rowI[j] = (head * rowI[j] - lead * rowR[j]) // previous
            rowI[c] = 0
        previous = head
        pivotCols.append(c)
        r += 1

    return m, pivotCols


def primitiveIntegerVector(vector):
    denominator = 1
    for v in vector:
        denominator = math.lcm(denominator, Fraction(v).denominator)
    integers = [int(Fraction(v) * denominator) for v in vector]
    divisor = 0
    for v in integers:
        divisor = math.gcd(divisor, v)
    if divisor == 0:
        return tuple(integers)
    integers = [v // divisor for v in integers]
    first = next(v for v in integers if v != 0)
    if first < 0:
        integers = [-v for v in integers]
    return tuple(integers)


def kernelVector(echelon, pivotCols, nCols):
    # Back substitution with the single free column set to 1.
    pivots = set(pivotCols)
    free = [c for c in range(nCols) if c not in pivots]
    if len(free) != 1:
        raise ParameterError("a unique kernel direction needs exactly one free column, found " + str(len(free)))

    solution = [Fraction(0)] * nCols
    solution[free[0]] = Fraction(1)
    for r in range(len(pivotCols) - 1, -1, -1):
        pc = pivotCols[r]
        row = echelon[r]
        s = sum((row[c] * solution[c] for c in range(pc + 1, nCols) if row[c]), Fraction(0))
        solution[pc] = -s / row[pc]
    return primitiveIntegerVector(solution)


def kernelOracle(g, limit=None):
    if limit is None:
        limit = getSettings().oracleLimit
    if g.n > limit:
        raise CapacityError("the kernel oracle is limited to n <= " + str(limit) + ", received n = " + str(g.n)
                            + " (raise NUTCIRC_ORACLE_LIMIT to allow it)")

    matrix = adjacencyMatrix(g)
    rows = matrix.tolist()
    echelon, pivotCols = bareissEchelon(rows)
    nullity = g.n - len(pivotCols)
    logger.debug("kernel oracle on %r: rank %d, nullity %d", g, len(pivotCols), nullity)
    if nullity != 1:
        return KernelReport(nullity)

    vector = kernelVector(echelon, pivotCols, g.n)
    if np.any(matrix.astype(object) @ np.array(vector, dtype=object) != 0):
        raise ArithmeticError("kernel vector of " + repr(g) + " is not annihilated by the adjacency matrix")
    return KernelReport(1, vector)


def kernelVerdict(report):
    if report.nullity != 1:
        return NutVerdict(False, NULLITY_NOT_ONE, method=KERNEL)
    if not report.fullSupport:
        return NutVerdict(False, KERNEL_HAS_ZERO, witness=report.kernelVector, method=KERNEL)
    return NutVerdict(True, OK, witness=report.kernelVector, method=KERNEL)


def isNutKernel(g, limit=None):
    return kernelVerdict(kernelOracle(g, limit))
