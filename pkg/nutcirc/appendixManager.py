# -*- coding: utf-8 -*-
"""
Golden files for the residue tables of Q_t, R_t, U_t and W_t.

One file per (kind, modulus) named <kind>_<modulus>.txt, '#' lines are
comments and every other line is

    residue;reduced;remainder

with both polynomials in the sparse textual form.
"""

import logging
import os
import re

from .errors import ConfigurationError, ParameterError
from .families import TABLE_MODULI, PolyKind, asKind, generateTable
from .polyParser import PolyParser
from .settings import getSettings

logger = logging.getLogger(__name__)


class RowMismatch:

    def __init__(self, kind, modulus, residue, expected, actual):
        # expected / actual: (reduced, remainder) or None for a missing row
        self.kind     = kind
        self.modulus  = modulus
        self.residue  = residue
        self.expected = expected
        self.actual   = actual

    def toJSON(self):
        def side(pair):
            if pair is None:
                return None
            return {"reduced": pair[0].toText(), "remainder": pair[1].toText()}

        return {"kind": self.kind.value,
                "modulus": self.modulus,
                "residue": self.residue,
                "expected": side(self.expected),
                "actual": side(self.actual)}


class GoldenReport:

    def __init__(self):
        self.rowsChecked = 0
        self.tablesChecked = []
        self.mismatches = []

    @property
    def passed(self):
        return len(self.mismatches) == 0

    def toJSON(self):
        return {"passed": self.passed,
                "rows_checked": self.rowsChecked,
                "tables_checked": [kind.value + "_" + str(b) for kind, b in self.tablesChecked],
                "mismatches": [m.toJSON() for m in self.mismatches]}


class AppendixManager:

    reRow = re.compile(r'^\s*([0-9]+)\s*;([^;]*);([^;]*)$')

    def __init__(self, path=None):
        if path is None:
            path = getSettings().appendixPath
        self.path = path
        self.parser = PolyParser()

    def fileName(self, kind, modulus):
        return os.path.join(self.path, asKind(kind).value + "_" + str(modulus) + ".txt")

    def readGolden(self, kind, modulus):
        """
         Returns {residue: (reduced, remainder)}. A missing or malformed file
         is a configuration problem, not a table mismatch.
        """
        fileName = self.fileName(kind, modulus)
        try:
            with open(fileName, "r") as goldenFile:
                lines = goldenFile.readlines()
        except OSError as error:
            raise ConfigurationError("cannot read golden file " + fileName + ": " + str(error))

        rows = {}
        for lineNo, line in enumerate(lines, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            match = AppendixManager.reRow.match(line)
            if match is None:
                raise ConfigurationError(fileName + ":" + str(lineNo) + ": expected 'residue;reduced;remainder'")
            try:
                reduced = self.parser.parseSparse(match.group(2))
                remainder = self.parser.parseSparse(match.group(3))
            except ParameterError as error:
                raise ConfigurationError(fileName + ":" + str(lineNo) + ": " + str(error))
            rows[int(match.group(1))] = (reduced, remainder)
        return rows

    def formatGolden(self, kind, modulus, rows):
        kind = asKind(kind)
        lines = ["# residue;reduced;remainder  (kind " + kind.name + ", modulus " + str(modulus) + ")"]
        for row in rows:
            lines.append(str(row.residue) + ";" + row.reduced.toText() + ";" + row.remainder.toText())
        return "\n".join(lines) + "\n"

    def checkTable(self, kind, modulus, report):
        kind = asKind(kind)
        golden = self.readGolden(kind, modulus)
        generated = {row.residue: (row.reduced, row.remainder) for row in generateTable(kind, modulus)}

        for residue in sorted(set(golden) | set(generated)):
            expected = golden.get(residue)
            actual = generated.get(residue)
            report.rowsChecked += 1
            if expected != actual:
                report.mismatches.append(RowMismatch(kind, modulus, residue, expected, actual))
        report.tablesChecked.append((kind, modulus))

    def check(self, kinds=None, moduli=None):
        kinds = list(PolyKind) if kinds is None else [asKind(k) for k in kinds]
        moduli = TABLE_MODULI if moduli is None else moduli

        report = GoldenReport()
        for kind in kinds:
            for modulus in moduli:
                self.checkTable(kind, modulus, report)
        logger.info("golden check: %d tables, %d rows, %d mismatches",
                    len(report.tablesChecked), report.rowsChecked, len(report.mismatches))
        return report


def appendixGoldenCheck(path=None):
    return AppendixManager(path).check()
