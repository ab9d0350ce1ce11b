# -*- coding: utf-8 -*-
"""
Exhaustive existence search for circulant nut graphs by order and degree.

Generator sets of size d/2 drawn from {1, ..., n/2 - 1} are scanned in
lexicographic order. Work is cut into blocks sharing the smallest
generator. A block reports how many sets it saw, how many passed the
spectral decision and its lexicographically least passing set, so blocks
merge by summing counters and taking the minimum witness whatever order
they finish in.
"""

import csv
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .circulant import GeneratorSet, isNutKernel, isNutSpectral
from .errors import ParameterError
from .settings import getSettings

logger = logging.getLogger(__name__)


def isBalanced(elements):
    return 2 * sum(1 for s in elements if s % 2) == len(elements)


def checkOrderDegree(n, d):
    for name, value in (("n", n), ("d", d)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(name + " must be an integer, received '" + str(type(value)) + "'")
    if n < 4 or n % 2:
        raise ParameterError("the order must be even and at least 4, received n = " + str(n))
    if d < 2 or d % 2:
        raise ParameterError("the degree must be even and positive, received d = " + str(d))
    if d // 2 > n // 2 - 1:
        raise ParameterError("degree " + str(d) + " needs " + str(d // 2) + " generators but only "
                             + str(n // 2 - 1) + " are available for n = " + str(n))


def enumerateSets(n, d, balancedOnly=False, first=None):
    """
     Generator sets of Circ(n, S) with |S| = d/2, in lexicographic order.
     With first, only the sets whose smallest generator is first.
    """
    checkOrderDegree(n, d)
    k = d // 2
    if first is None:
        candidates = combinations(range(1, n // 2), k)
    else:
        if first < 1 or 2 * first >= n:
            raise ParameterError("the smallest generator must satisfy 1 <= s < n/2, received " + str(first))
        candidates = ((first,) + rest for rest in combinations(range(first + 1, n // 2), k - 1))
    for elements in candidates:
        if balancedOnly and not isBalanced(elements):
            continue
        yield GeneratorSet(n, elements)


def countSets(n, d):
    if d // 2 > n // 2 - 1:
        return 0
    return math.comb(n // 2 - 1, d // 2)


def searchBlock(block):
    # block: (n, d, first generator, balancedOnly)
    n, d, first, balancedOnly = block
    enumerated = 0
    passing = 0
    witness = None
    for g in enumerateSets(n, d, balancedOnly, first):
        enumerated += 1
        if isNutSpectral(g).isNut:
            passing += 1
            if witness is None:
                witness = g.elements
    return n, enumerated, passing, witness


class CatalogEntry:

    def __init__(self, n, d, exists, witness=None, setsEnumerated=0, setsPassing=0,
                 skipped=False, kernelConfirmed=None):
        if witness is not None and not isinstance(witness, GeneratorSet):
            witness = GeneratorSet(n, witness)
        if skipped:
            if exists is not None or witness is not None:
                raise ParameterError("a skipped entry carries no verdict")
        elif bool(exists) != (witness is not None):
            raise ParameterError("an entry exists exactly when it has a witness")
        self.n               = n
        self.d               = d
        self.exists          = exists
        self.witness         = witness
        self.setsEnumerated  = setsEnumerated
        self.setsPassing     = setsPassing
        self.skipped         = skipped
        self.kernelConfirmed = kernelConfirmed

    def __eq__(self, other):
        if not isinstance(other, CatalogEntry):
            return NotImplemented
        return self.toJSON() == other.toJSON() and self.d == other.d

    def __repr__(self):
        state = "skipped" if self.skipped else ("witness " + repr(self.witness) if self.exists else "none")
        return "CatalogEntry(n=" + str(self.n) + ", d=" + str(self.d) + ", " + state + ")"

    def toJSON(self):
        return {"n": self.n,
                "exists": self.exists,
                "witness": None if self.witness is None else list(self.witness.elements),
                "sets_enumerated": str(self.setsEnumerated),
                "sets_passing": str(self.setsPassing),
                "skipped": self.skipped,
                "kernel_confirmed": self.kernelConfirmed}

    @staticmethod
    def fromJSON(jsonEntry, d):
        return CatalogEntry(jsonEntry["n"], d, jsonEntry["exists"], jsonEntry["witness"],
                            int(jsonEntry["sets_enumerated"]), int(jsonEntry["sets_passing"]),
                            jsonEntry["skipped"], jsonEntry["kernel_confirmed"])


CSV_COLUMNS = ["n", "exists", "witness", "sets_enumerated", "sets_passing", "skipped", "kernel_confirmed"]


def writeCatalogCSV(entries, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for entry in entries:
        row = entry.toJSON()
        row["witness"] = "" if row["witness"] is None else " ".join(str(s) for s in row["witness"])
        writer.writerow(["" if row[column] is None else row[column] for column in CSV_COLUMNS])


def catalogToJSON(d, entries):
    return {"degree": d, "entries": [entry.toJSON() for entry in entries]}


def _runBlocks(blocks, jobs):
    if jobs > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(searchBlock, blocks, chunksize=max(1, len(blocks) // (4 * jobs))))
    return [searchBlock(block) for block in blocks]


def searchOrders(d, orders, jobs, balancedOnly, ceiling, revalidate):
    blocks = []
    entries = {}
    for n in orders:
        total = countSets(n, d)
        if total > ceiling:
            logger.warning("n = %d, d = %d: %d generator sets exceed the ceiling %d, skipped", n, d, total, ceiling)
            entries[n] = CatalogEntry(n, d, None, skipped=True)
            continue
        k = d // 2
        if total == 0:
            entries[n] = CatalogEntry(n, d, False)
            continue
        blocks.extend((n, d, first, balancedOnly) for first in range(1, n // 2 - k + 1))

    oracleLimit = getSettings().oracleLimit
    merged = {}
    for n, enumerated, passing, witness in _runBlocks(blocks, jobs):
        counts = merged.setdefault(n, [0, 0, None])
        counts[0] += enumerated
        counts[1] += passing
        if witness is not None and (counts[2] is None or witness < counts[2]):
            counts[2] = witness

    for n, (enumerated, passing, witness) in merged.items():
        kernelConfirmed = None
        if witness is not None and revalidate and n > oracleLimit:
            logger.warning("witness %s for n = %d, d = %d is beyond the kernel oracle limit %d, not revalidated",
                           witness, n, d, oracleLimit)
        elif witness is not None and revalidate:
            kernelConfirmed = isNutKernel(GeneratorSet(n, witness)).isNut
            if not kernelConfirmed:
                logger.error("witness %s for n = %d, d = %d is rejected by the kernel oracle", witness, n, d)
        entries[n] = CatalogEntry(n, d, witness is not None, witness, enumerated, passing,
                                  kernelConfirmed=kernelConfirmed)
        logger.info("n = %d, d = %d: %d sets, %d nut graphs", n, d, enumerated, passing)

    return [entries[n] for n in orders]


def catalog(d, nMin, nMax, jobs=None, balancedOnly=False, ceiling=None, revalidate=True):
    """
     One entry per even order n in [nMin, nMax]: whether a d-regular circulant
     nut graph of order n exists, with the lexicographically least generator
     set as witness. Witnesses are confirmed by the kernel oracle unless
     revalidate is False. The result does not depend on jobs.
    """
    if nMin > nMax:
        raise ParameterError("n-min must not exceed n-max, received " + str(nMin) + " > " + str(nMax))
    if isinstance(d, bool) or not isinstance(d, int) or d < 2 or d % 2:
        raise ParameterError("the degree must be even and positive, received d = " + str(d))
    settings = getSettings()
    jobs = settings.jobs if jobs is None else jobs
    ceiling = settings.searchCeiling if ceiling is None else ceiling
    if jobs < 1:
        raise ParameterError("jobs must be positive, received " + str(jobs))

    orders = [n for n in range(max(nMin, 4), nMax + 1) if n % 2 == 0]
    return searchOrders(d, orders, jobs, balancedOnly, ceiling, revalidate)


class ProbeEntry:

    def __init__(self, t, control, entry):
        self.t       = t
        self.control = control
        self.entry   = entry

    @property
    def n(self):
        return self.entry.n

    @property
    def found(self):
        return self.entry.exists

    def toJSON(self):
        jsonEntry = self.entry.toJSON()
        jsonEntry.update({"t": self.t, "degree": self.entry.d, "control": self.control})
        return jsonEntry


def conjectureProbe(tValues, nMaxOffset, jobs=None, ceiling=None, includeControl=False):
    """
     For every even t >= 4, looks for any 4t-regular circulant nut graph of
     each order n divisible by 4 with 4t + 8 <= n <= 4t + nMaxOffset. With
     includeControl the order 4t + 6, where D'' always provides one, is
     searched as well.
    """
    settings = getSettings()
    jobs = settings.jobs if jobs is None else jobs
    ceiling = settings.searchCeiling if ceiling is None else ceiling

    report = []
    for t in tValues:
        if isinstance(t, bool) or not isinstance(t, int) or t < 4 or t % 2:
            raise ParameterError("probe values of t must be even and at least 4, received " + str(t))
        d = 4 * t
        orders = list(range(4 * t + 8, 4 * t + nMaxOffset + 1, 4))
        if includeControl:
            orders.insert(0, 4 * t + 6)
        for entry in searchOrders(d, orders, jobs, True, ceiling, False):
            report.append(ProbeEntry(t, entry.n == 4 * t + 6, entry))
    return report
