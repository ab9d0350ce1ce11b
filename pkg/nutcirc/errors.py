# -*- coding: utf-8 -*-
"""
Exceptions raised by the nutcirc package.
"""


class NutCircError(Exception):
    pass


class ParameterError(NutCircError, ValueError):
    # An input violates a precondition. The message names the constraint.
    pass


class CapacityError(NutCircError):
    pass


class ConfigurationError(NutCircError):
    pass


class UnsupportedError(NutCircError):
    pass
