# -*- coding: utf-8 -*-
"""
The circulant nut graph families D'(t, n), D''(t, n) and the prior family
Circ(n, {1, ..., 2t+1} minus {t}), together with the six-term polynomials
Q_t, R_t (for D') and U_t, W_t (for D'') that their nut property reduces to.

A family polynomial is stored symbolically as (coeff, a, c) triples meaning
coeff * x^(a*t + c). Reducing modulo x^b - 1 then only depends on t mod b,
which is what the residue tables are keyed by.
"""

import logging
from enum import Enum

from sympy import divisors, isprime

from .circulant import FAMILY, OK, SPECTRAL_FAILURE, GeneratorSet, NutVerdict
from .errors import ParameterError, UnsupportedError
from .polynomial import SparsePoly, cyclotomic, denseDivRem, isDivisible, reduceModXb

logger = logging.getLogger(__name__)


class Variant(Enum):
    DPRIME       = "dprime"
    DDOUBLEPRIME = "ddprime"
    DS_PRIOR     = "ds"


class PolyKind(Enum):
    Q = "q"
    R = "r"
    U = "u"
    W = "w"


TERMS = {PolyKind.Q: ((2, 2, -1), (1, 1, 1), (-1, 1, 0), (1, 1, -1), (-1, 1, -2), (-2, 0, 0)),
         PolyKind.R: ((2, 2, -1), (-1, 1, 1), (-3, 1, 0), (3, 1, -1), (1, 1, -2), (-2, 0, 0)),
         PolyKind.U: ((2, 4, -1), (1, 2, 4), (-2, 2, 1), (2, 2, -1), (-1, 2, -4), (-2, 0, 1)),
         PolyKind.W: ((2, 4, -1), (-1, 2, 4), (-2, 2, 1), (2, 2, -1), (1, 2, -4), (-2, 0, 1))}

# Smallest t for which the six exponents are distinct and non-negative.
MIN_T = {PolyKind.Q: 3, PolyKind.R: 3, PolyKind.U: 2, PolyKind.W: 2}

# Smallest prime for which the unique-residue argument is made.
MIN_PRIME = {PolyKind.Q: 5, PolyKind.R: 5, PolyKind.U: 7, PolyKind.W: 7}

TABLE_MODULI = (3, 5, 6, 10, 15, 30)


def asVariant(variant):
    if isinstance(variant, Variant):
        return variant
    try:
        return Variant(str(variant).lower())
    except ValueError:
        raise ParameterError("unknown family variant '" + str(variant) + "' (expected dprime, ddprime or ds)")


def asKind(kind):
    if isinstance(kind, PolyKind):
        return kind
    try:
        return PolyKind(str(kind).lower())
    except ValueError:
        raise ParameterError("unknown polynomial kind '" + str(kind) + "' (expected q, r, u or w)")


class FamilyId:

    def __init__(self, variant, t, n):
        variant = asVariant(variant)
        for name, value in (("t", t), ("n", n)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(name + " must be an integer, received '" + str(type(value)) + "'")
        if t < 1:
            raise ParameterError("t must be positive, received " + str(t))

        if variant == Variant.DPRIME:
            if t % 2 == 0:
                raise ParameterError("D' needs an odd t, received t = " + str(t))
            if n % 4:
                raise ParameterError("D' needs 4 | n, received n = " + str(n))
            if n < 4 * t + 4:
                raise ParameterError("D' needs n >= 4t + 4 = " + str(4 * t + 4) + ", received n = " + str(n))
        elif variant == Variant.DDOUBLEPRIME:
            if n % 4 != 2:
                raise ParameterError("D'' needs n = 2 (mod 4), received n = " + str(n))
            if n < 4 * t + 6:
                raise ParameterError("D'' needs n >= 4t + 6 = " + str(4 * t + 6) + ", received n = " + str(n))
        else:
            if t < 3 or t % 2 == 0:
                raise ParameterError("the prior family needs an odd t >= 3, received t = " + str(t))
            if t % 10 == 1:
                raise ParameterError("the prior family excludes t = 1 (mod 10), received t = " + str(t))
            if t % 18 == 15:
                raise ParameterError("the prior family excludes t = 15 (mod 18), received t = " + str(t))
            if n % 2:
                raise ParameterError("the prior family needs an even n, received n = " + str(n))
            if n < 4 * t + 4:
                raise ParameterError("the prior family needs n >= 4t + 4 = " + str(4 * t + 4)
                                     + ", received n = " + str(n))

        self.variant = variant
        self.t = t
        self.n = n

    def __eq__(self, other):
        if not isinstance(other, FamilyId):
            return NotImplemented
        return (self.variant, self.t, self.n) == (other.variant, other.t, other.n)

    def __hash__(self):
        return hash((self.variant, self.t, self.n))

    def __repr__(self):
        return "FamilyId(" + self.variant.value + ", t=" + str(self.t) + ", n=" + str(self.n) + ")"

    def toJSON(self):
        return {"variant": self.variant.value, "t": self.t, "n": self.n}

    @staticmethod
    def fromJSON(jsonId):
        return FamilyId(jsonId["variant"], jsonId["t"], jsonId["n"])


class FamilyPolyId:

    def __init__(self, kind, t):
        kind = asKind(kind)
        if isinstance(t, bool) or not isinstance(t, int):
            raise TypeError("t must be an integer, received '" + str(type(t)) + "'")
        if kind in (PolyKind.Q, PolyKind.R):
            if t < 3 or t % 2 == 0:
                raise ParameterError(kind.name + "_t is defined for odd t >= 3, received t = " + str(t))
        elif t < 2:
            raise ParameterError(kind.name + "_t is defined for t >= 2, received t = " + str(t))
        self.kind = kind
        self.t = t

    def __eq__(self, other):
        if not isinstance(other, FamilyPolyId):
            return NotImplemented
        return (self.kind, self.t) == (other.kind, other.t)

    def __hash__(self):
        return hash((self.kind, self.t))

    def __repr__(self):
        return self.kind.name + "_" + str(self.t)


def buildFamily(familyId):
    n, t = familyId.n, familyId.t
    if familyId.variant == Variant.DS_PRIOR:
        return GeneratorSet(n, [s for s in range(1, 2 * t + 2) if s != t])

    if familyId.variant == Variant.DPRIME:
        middle = [n // 4, n // 4 + 1]
    else:
        middle = [(n + 2) // 4, (n + 6) // 4]
    head = list(range(1, t))
    tail = list(range(n // 2 - t + 1, n // 2))
    return GeneratorSet(n, head + middle + tail)


def formalPoly(kind, t):
    # No domain check: the residue tables instantiate at any t.
    return SparsePoly((a * t + c, coeff) for coeff, a, c in TERMS[asKind(kind)])


def familyPoly(polyId):
    return formalPoly(polyId.kind, polyId.t)


def exponentSet(polyId):
    return frozenset(a * polyId.t + c for _, a, c in TERMS[polyId.kind])


def uniqueRemainderExists(polyId, p):
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise ParameterError("p must be a prime, received " + str(p))
    if p < MIN_PRIME[polyId.kind]:
        raise ParameterError("the unique remainder argument for " + polyId.kind.name + " needs p >= "
                             + str(MIN_PRIME[polyId.kind]) + ", received p = " + str(p))

    residues = [e % p for e in exponentSet(polyId)]
    return any(residues.count(r) == 1 for r in residues)


def closedFormFactor(variant, n):
    """
     For t = 1 the eigenvalue at zeta factors as a unit times
     (zeta + 1)(zeta^k + 1), with k = n/2 + 1 for D' and k = n/2 + 2 for D''.
     Returns x^k + 1.
    """
    variant = asVariant(variant)
    if variant == Variant.DPRIME:
        return SparsePoly({n // 2 + 1: 1, 0: 1})
    if variant == Variant.DDOUBLEPRIME:
        return SparsePoly({n // 2 + 2: 1, 0: 1})
    raise UnsupportedError("no closed form is known for the prior family")


def _firstFailure(checks):
    # checks: (witness b, polynomial, index whose cyclotomic must not divide it)
    failures = [witness for witness, poly, index in checks if isDivisible(poly, cyclotomic(index))]
    return min(failures) if failures else None


def familyNutCheck(familyId):
    """
     Decides the nut property of a D' or D'' graph without forming its
     eigenvalue polynomial. Every divisor b >= 3 of n is routed to the
     polynomial the corresponding branch of the existence proof reduces to.
    """
    variant, t, n = familyId.variant, familyId.t, familyId.n
    if variant == Variant.DS_PRIOR:
        raise UnsupportedError("the prior family has no branch reduction; use the spectral decision")

    checks = []
    if t == 1:
        factor = closedFormFactor(variant, n)
        for b in divisors(n):
            if b >= 3:
                checks.append((int(b), reduceModXb(factor, int(b)), int(b)))

    elif variant == Variant.DPRIME:
        q = familyPoly(FamilyPolyId(PolyKind.Q, t))
        r = familyPoly(FamilyPolyId(PolyKind.R, t))
        for b in divisors(n):
            b = int(b)
            if b < 3:
                continue
            if (n // 4) % b == 0:
                checks.append((b, q, b))
            elif (n // 2) % b == 0:
                checks.append((b, r, b))
            # b not dividing n/2: zeta^(n/2) = -1, the eigenvalue cannot vanish

    else:
        # With zeta = psi^2: psi^(n/2) = 1 leads to U_t, psi^(n/2) = -1 to W_t.
        # An even order beta of psi corresponds to zeta of order beta/2.
        u = familyPoly(FamilyPolyId(PolyKind.U, t))
        w = familyPoly(FamilyPolyId(PolyKind.W, t))
        for beta in divisors(n):
            beta = int(beta)
            if beta in (1, 2):
                continue
            if beta % 2:
                checks.append((beta, u, beta))
            else:
                checks.append((beta // 2, w, beta))

    failure = _firstFailure(checks)
    logger.debug("family check %r: %d divisibility tests", familyId, len(checks))
    if failure is not None:
        return NutVerdict(False, SPECTRAL_FAILURE, witness=failure, method=FAMILY)
    return NutVerdict(True, OK, method=FAMILY)


class TableRow:

    def __init__(self, residue, representative, reduced, remainder):
        self.residue        = residue
        self.representative = representative
        self.reduced        = reduced
        self.remainder      = remainder

    def __eq__(self, other):
        if not isinstance(other, TableRow):
            return NotImplemented
        return (self.residue, self.reduced, self.remainder) == (other.residue, other.reduced, other.remainder)

    def __repr__(self):
        return "TableRow(" + str(self.residue) + ": " + self.reduced.toHuman() + " -> " + self.remainder.toHuman() + ")"

    def toJSON(self):
        return {"residue": self.residue,
                "representative": self.representative,
                "reduced": self.reduced.toText(),
                "remainder": self.remainder.toText()}


def requireTableModulus(b):
    if b not in TABLE_MODULI:
        raise ParameterError("tables exist for the moduli " + ", ".join(str(m) for m in TABLE_MODULI)
                             + ", received " + str(b))


def representativeT(kind, residue, b):
    t = residue
    while t < MIN_T[kind]:
        t += b
    return t


def generateTable(kind, b):
    """
     One row per residue r = t mod b: the family polynomial reduced modulo
     x^b - 1 and its remainder modulo Phi_b. Rows exist for every r, including
     residues whose t has the wrong parity for Q and R.
    """
    kind = asKind(kind)
    requireTableModulus(b)
    phi = cyclotomic(b)
    rows = []
    for residue in range(b):
        t = representativeT(kind, residue, b)
        reduced = reduceModXb(formalPoly(kind, t), b)
        remainder = denseDivRem(reduced, phi)[1].toSparse()
        rows.append(TableRow(residue, t, reduced, remainder))
    return rows


class ResidueRow:

    def __init__(self, residue, exponents, residues):
        self.residue   = residue
        self.exponents = exponents
        self.residues  = residues

    @property
    def uniqueResidues(self):
        return tuple(r for r in self.residues if self.residues.count(r) == 1)

    def toJSON(self):
        return {"residue": self.residue,
                "exponents": list(self.exponents),
                "residues": list(self.residues),
                "unique_residues": list(self.uniqueResidues)}


def residueTable(kind, prime):
    """
     For each class t mod prime, the residues mod prime of the six exponents
     (in the order of their defining terms) and which of them are unique.
    """
    kind = asKind(kind)
    if isinstance(prime, bool) or not isinstance(prime, int) or not isprime(prime):
        raise ParameterError("residue tables are taken modulo a prime, received " + str(prime))
    labels = tuple(exponentLabel(a, c) for _, a, c in TERMS[kind])
    return [ResidueRow(r, labels, tuple((a * r + c) % prime for _, a, c in TERMS[kind]))
            for r in range(prime)]


def exponentLabel(a, c):
    if a == 0:
        return str(c)
    head = "t" if a == 1 else str(a) + "t"
    if c == 0:
        return head
    return head + ("+" if c > 0 else "-") + str(abs(c))
