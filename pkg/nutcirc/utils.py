# -*- coding: utf-8 -*-
"""
JSON helpers shared by the value classes and the command line.
"""

import json
from fractions import Fraction


def prettyPrintJSON(jsonRepr):
    return json.dumps(jsonRepr, sort_keys=True, indent=4, separators=(',', ': '))


def numberToJSON(value):
    # Coefficients and kernel entries are arbitrary precision; always emit
    # them as decimal strings.
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return str(value.numerator) + "/" + str(value.denominator)
    return str(int(value))


def numberFromJSON(text):
    value = Fraction(text)
    if value.denominator == 1:
        return int(value)
    return value
