# -*- coding: utf-8 -*-
"""
Exact decisions on circulant nut graphs: cyclotomic divisibility of sparse
integer polynomials, the D' and D'' families and an exhaustive order/degree
catalog.
"""

__version__ = "0.3.0"
