# -*- coding: utf-8 -*-
"""
Runtime settings. The configuration is kept in a ConfigParser so that
every knob is addressed as config[SECTION][key]. Values come from the
built-in defaults below, overridden by environment variables.
"""

import os
import sys
import configparser

from .errors import ConfigurationError


def defaultAppendixPath():
    # Checkout layout first, then the data_files location of an installed copy.
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    path = os.path.join(root, "data", "appendix")
    if not os.path.isdir(path) and os.path.isdir(os.path.join(sys.prefix, "data", "appendix")):
        return os.path.join(sys.prefix, "data", "appendix")
    return path


# (section, key) -> (environment variable, default value)
OVERRIDES = {("ORACLE",   "limit"):   ("NUTCIRC_ORACLE_LIMIT",   "256"),
             ("SEARCH",   "ceiling"): ("NUTCIRC_SEARCH_CEILING", "10000000"),
             ("SEARCH",   "jobs"):    ("NUTCIRC_JOBS",           "1"),
             ("APPENDIX", "path"):    ("NUTCIRC_APPENDIX_DIR",   None)}


def getSettings(environ=None):
    return Settings(os.environ if environ is None else environ)


class Settings:
    def __init__(self, environ=None):
        if environ is None:
            environ = {}

        self.config = configparser.ConfigParser(interpolation=None)
        for (section, key), (envName, default) in OVERRIDES.items():
            if not self.config.has_section(section):
                self.config[section] = {}
            if default is None:
                default = defaultAppendixPath()
            self.config[section][key] = environ.get(envName, default)

    def getPositiveInt(self, section, key):
        value = self.config[section][key]
        try:
            number = int(value)
        except ValueError:
            raise ConfigurationError(section + "." + key + " must be an integer, got '" + value + "'")
        if number <= 0:
            raise ConfigurationError(section + "." + key + " must be positive, got " + str(number))
        return number

    @property
    def oracleLimit(self):
        return self.getPositiveInt("ORACLE", "limit")

    @property
    def searchCeiling(self):
        return self.getPositiveInt("SEARCH", "ceiling")

    @property
    def jobs(self):
        return self.getPositiveInt("SEARCH", "jobs")

    @property
    def appendixPath(self):
        return self.config["APPENDIX"]["path"]

    def toJSON(self):
        return {section: dict(self.config[section]) for section in self.config.sections()}
