# -*- coding: utf-8 -*-
"""
Textual polynomial formats.

Sparse form: exp:coeff pairs joined by commas, exponents strictly
descending (Q_3 is "5:2,4:1,3:-1,2:1,1:-1,0:-2"). The empty string is the
zero polynomial.
Dense form: comma-separated coefficients ascending from x^0.
"""

import re

from .errors import ParameterError
from .polynomial import DensePoly, SparsePoly, asDense, asSparse


class PolyParser:

    reInteger      = r'[+-]?[0-9]+'
    reExponent     = r'[0-9]+'
    sparseTerm     = '(' + reExponent + r')\s*:\s*(' + reInteger + ')'
    sparseTermNC   = reExponent + r'\s*:\s*' + reInteger
    sparseREStr    = r'^\s*(?:' + sparseTermNC + r'(?:\s*,\s*' + sparseTermNC + r')*)?\s*$'
    denseREStr     = r'^\s*' + reInteger + r'(?:\s*,\s*' + reInteger + r')*\s*$'

    pSparse = re.compile(sparseREStr)
    pDense  = re.compile(denseREStr)
    pTerm   = re.compile(sparseTerm)

    def isSparse(self, text):
        return PolyParser.pSparse.match(text) is not None

    def isDense(self, text):
        return PolyParser.pDense.match(text) is not None

    def parseSparse(self, text):
        if not self.isSparse(text):
            raise ParameterError("'" + text + "' is not a sparse polynomial (expected exp:coeff pairs joined by commas)")

        terms = [(int(e), int(c)) for e, c in PolyParser.pTerm.findall(text)]
        for (e1, _), (e2, _) in zip(terms, terms[1:]):
            if e2 >= e1:
                raise ParameterError("exponents of a sparse polynomial must be strictly descending, found "
                                     + str(e1) + " before " + str(e2))
        for e, c in terms:
            if c == 0:
                raise ParameterError("sparse polynomials store no zero coefficient (exponent " + str(e) + ")")
        return SparsePoly(terms)

    def parseDense(self, text):
        if not self.isDense(text):
            raise ParameterError("'" + text + "' is not a dense polynomial (expected comma-separated integers)")
        return DensePoly(int(c) for c in text.split(","))

    def parse(self, text):
        """
         Accepts either form. A text containing ':' is read as sparse, any
         other text as dense. Always returns a SparsePoly.
        """
        if ":" in text or not text.strip():
            return self.parseSparse(text)
        return self.parseDense(text).toSparse()

    def parseIntegerList(self, text):
        if not PolyParser.pDense.match(text):
            raise ParameterError("'" + text + "' is not a comma-separated list of integers")
        return [int(v) for v in text.split(",")]

    def formatSparse(self, p):
        return asSparse(p).toText()

    def formatDense(self, p):
        return asDense(p).toText()

    def formatHuman(self, p):
        return asSparse(p).toHuman()
