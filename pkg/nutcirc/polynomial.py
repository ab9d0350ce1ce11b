# -*- coding: utf-8 -*-
"""
Exact integer polynomial arithmetic.

Two representations are used side by side:

 - DensePoly: ascending coefficient tuple, trailing zeros trimmed. Used for
   cyclotomic polynomials and for division remainders.
 - SparsePoly: exponent -> coefficient map without zero entries. Used for the
   six-term family polynomials and for the circulant eigenvalue polynomial.

Coefficients are Python integers (arbitrary precision). Rational
coefficients only appear as quotients of a division by a non-monic divisor.
"""

import threading
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from sympy import divisors, totient

from .errors import ParameterError


def normalizeNumber(value):
    if isinstance(value, bool):
        raise TypeError("Polynomial coefficients must be integers or fractions, received a bool.")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return value
    # numpy and sympy integers
    if hasattr(value, "__index__"):
        return int(value)
    raise TypeError("Polynomial coefficients must be integers or fractions, received '" + str(type(value)) + "'")


def exactQuotient(numerator, denominator):
    if isinstance(numerator, int) and isinstance(denominator, int) and numerator % denominator == 0:
        return numerator // denominator
    return normalizeNumber(Fraction(numerator) / denominator)


def formatTerm(coeff, exp, first):
    sign = "-" if coeff < 0 else ("" if first else "+")
    magnitude = abs(coeff)
    if exp == 0:
        return sign + str(magnitude)
    power = "x" if exp == 1 else "x^" + str(exp)
    if magnitude == 1:
        return sign + power
    return sign + str(magnitude) + " " + power


def formatAscending(pairs):
    pairs = list(pairs)
    if not pairs:
        return "0"
    return "".join(formatTerm(c, e, i == 0) for i, (e, c) in enumerate(pairs))


class DensePoly:

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [normalizeNumber(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        # -1 for the zero polynomial
        return len(self._coeffs) - 1

    def isZero(self):
        return len(self._coeffs) == 0

    def isMonic(self):
        return not self.isZero() and self._coeffs[-1] == 1

    @property
    def leadingCoefficient(self):
        if self.isZero():
            return 0
        return self._coeffs[-1]

    def evaluate(self, x):
        result = 0
        for c in reversed(self._coeffs):
            result = result * x + c
        return result

    def toSparse(self):
        return SparsePoly({e: c for e, c in enumerate(self._coeffs) if c != 0})

    def toText(self):
        return ",".join(str(c) for c in self._coeffs)

    def toHuman(self):
        return formatAscending((e, c) for e, c in enumerate(self._coeffs) if c != 0)

    def __add__(self, other):
        other = asDense(other)
        size = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (0,) * (size - len(self._coeffs))
        b = other._coeffs + (0,) * (size - len(other._coeffs))
        return DensePoly(x + y for x, y in zip(a, b))

    def __neg__(self):
        return DensePoly(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-asDense(other))

    def __mul__(self, other):
        other = asDense(other)
        if self.isZero() or other.isZero():
            return DensePoly()
        product = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        support = [(j, c) for j, c in enumerate(other._coeffs) if c != 0]
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, c in support:
                product[i + j] += a * c
        return DensePoly(product)

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            other = other.toDense()
        if not isinstance(other, DensePoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("DensePoly", self._coeffs))

    def __repr__(self):
        return "DensePoly(" + self.toHuman() + ")"

    __str__ = toHuman


class SparsePoly:

    __slots__ = ("_items",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        pairs = terms.items() if isinstance(terms, dict) else terms

        accumulated = defaultdict(int)
        for exp, coeff in pairs:
            if isinstance(exp, bool) or not isinstance(exp, int) and not hasattr(exp, "__index__"):
                raise TypeError("Exponents must be integers, received '" + str(type(exp)) + "'")
            exp = int(exp)
            if exp < 0:
                raise ParameterError("exponents must be non-negative, received " + str(exp))
            accumulated[exp] += normalizeNumber(coeff)

        self._items = tuple(sorted(((e, c) for e, c in accumulated.items() if c != 0), reverse=True))

    @staticmethod
    def monomial(exp, coeff=1):
        return SparsePoly({exp: coeff})

    @property
    def terms(self):
        return dict(self._items)

    def items(self):
        # (exponent, coefficient) pairs, exponents strictly descending
        return self._items

    @property
    def exponents(self):
        return frozenset(e for e, _ in self._items)

    @property
    def termCount(self):
        return len(self._items)

    @property
    def degree(self):
        if not self._items:
            return -1
        return self._items[0][0]

    def isZero(self):
        return len(self._items) == 0

    def coefficient(self, exp):
        for e, c in self._items:
            if e == exp:
                return c
        return 0

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self._items)

    def toDense(self):
        if not self._items:
            return DensePoly()
        coeffs = [0] * (self.degree + 1)
        for e, c in self._items:
            coeffs[e] = c
        return DensePoly(coeffs)

    def toText(self):
        return ",".join(str(e) + ":" + str(c) for e, c in self._items)

    def toHuman(self):
        return formatAscending(reversed(self._items))

    def substitute(self, power):
        """ Returns p(x^power). """
        if power < 1:
            raise ParameterError("substitution power must be positive, received " + str(power))
        return SparsePoly({e * power: c for e, c in self._items})

    def __add__(self, other):
        other = asSparse(other)
        return SparsePoly(self._items + other._items)

    def __neg__(self):
        return SparsePoly((e, -c) for e, c in self._items)

    def __sub__(self, other):
        return self + (-asSparse(other))

    def __mul__(self, other):
        other = asSparse(other)
        return SparsePoly((e1 + e2, c1 * c2) for e1, c1 in self._items for e2, c2 in other._items)

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.toDense() == other
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(("SparsePoly", self._items))

    def __repr__(self):
        return "SparsePoly(" + self.toHuman() + ")"

    __str__ = toHuman


def asDense(p):
    if isinstance(p, DensePoly):
        return p
    if isinstance(p, SparsePoly):
        return p.toDense()
    raise TypeError("Expected a polynomial, received '" + str(type(p)) + "'")


def asSparse(p):
    if isinstance(p, SparsePoly):
        return p
    if isinstance(p, DensePoly):
        return p.toSparse()
    raise TypeError("Expected a polynomial, received '" + str(type(p)) + "'")


def requirePositive(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(name + " must be an integer, received '" + str(type(value)) + "'")
    if value < 1:
        raise ParameterError(name + " must be a positive integer, received " + str(value))
    return value


def denseDivRem(a, b):
    """
     Schoolbook long division a = quotient*b + remainder with
     deg(remainder) < deg(b). Exact: quotient coefficients become Fractions
     only when the leading coefficient of b does not divide them.
    """
    a = asDense(a)
    b = asDense(b)
    if b.isZero():
        raise ParameterError("division by the zero polynomial")

    remainder = list(a.coeffs)
    db = b.degree
    if len(remainder) - 1 < db:
        return DensePoly(), a

    lead = b.leadingCoefficient
    support = [(j, c) for j, c in enumerate(b.coeffs) if c != 0]
    quotient = [0] * (len(remainder) - db)
    for k in range(len(remainder) - 1 - db, -1, -1):
        c = remainder[k + db]
        if c == 0:
            continue
        if lead == 1:
            q = c
        elif lead == -1:
            q = -c
        else:
            q = exactQuotient(c, lead)
        quotient[k] = q
        for j, bj in support:
            remainder[k + j] -= q * bj

    return DensePoly(quotient), DensePoly(remainder[:db])


def isDivisible(p, divisor):
    return denseDivRem(p, divisor)[1].isZero()


def xPowerMinusOne(b):
    requirePositive(b, "b")
    return DensePoly([-1] + [0] * (b - 1) + [1])


@lru_cache(maxsize=None)
def eulerPhi(b):
    requirePositive(b, "b")
    return int(totient(b))


_cyclotomicCache = {}
_cyclotomicLock = threading.Lock()


def cyclotomic(b):
    """
     Phi_b, obtained by dividing x^b - 1 by the product of Phi_d over the
     proper divisors d of b. Results are memoized for the whole process.
    """
    requirePositive(b, "b")
    with _cyclotomicLock:
        cached = _cyclotomicCache.get(b)
    if cached is not None:
        return cached

    product = DensePoly((1,))
    for d in divisors(b)[:-1]:
        product = product * cyclotomic(int(d))

    phi, remainder = denseDivRem(xPowerMinusOne(b), product)
    if not remainder.isZero() or not phi.isMonic():
        raise ArithmeticError("x^" + str(b) + " - 1 is not divisible by its proper cyclotomic factors")

    with _cyclotomicLock:
        return _cyclotomicCache.setdefault(b, phi)


def reduceModXb(p, b):
    """ Replaces every exponent a by a mod b; the result is p modulo x^b - 1. """
    p = asSparse(p)
    requirePositive(b, "b")
    return SparsePoly((e % b, c) for e, c in p.items())


def reduceModSigned(p, q):
    """ c x^a -> c (-1)^(a div q) x^(a mod q); the result is p modulo x^q + 1. """
    p = asSparse(p)
    requirePositive(q, "q")
    return SparsePoly((e % q, -c if (e // q) % 2 else c) for e, c in p.items())


def residueClasses(p, m):
    """ Splits p into the parts whose exponents share a residue modulo m. """
    p = asSparse(p)
    requirePositive(m, "m")
    parts = defaultdict(list)
    for e, c in p.items():
        parts[e % m].append((e, c))
    return {j: SparsePoly(items) for j, items in sorted(parts.items())}
