#!/usr/bin/python3

"""
nutcirc: exact decisions on circulant nut graphs.

Every subcommand prints a human readable answer, or with --json an envelope
{command, status, payload, elapsed_ms}. A negative verdict is a successful
answer (exit 0); invalid input exits with 2 and other failures with 1.
"""

import argparse
import csv
import io
import logging
import sys
import time

from .appendixManager import AppendixManager
from .circulant import GeneratorSet, isNutKernel, isNutSpectral, kernelOracle, kernelVerdict
from .cyclotomy import ACCELERATED, ORACLE, cycloDivisors
from .errors import NutCircError, ParameterError
from .families import TABLE_MODULI, FamilyId, Variant, asKind, buildFamily, familyNutCheck, generateTable
from .polyParser import PolyParser
from .search import catalog, catalogToJSON, conjectureProbe, writeCatalogCSV
from .utils import prettyPrintJSON

logger = logging.getLogger(__name__)

ENGINES = {"oracle": ORACLE, "fast": ACCELERATED}


def describeVerdict(verdict):
    if verdict.isNut:
        return verdict.method + ": nut graph"
    text = verdict.method + ": not a nut graph (" + verdict.reason
    if isinstance(verdict.witness, int):
        text += ", b = " + str(verdict.witness)
    return text + ")"


def commandVerify(args):
    elements = PolyParser().parseIntegerList(args.set)
    g = GeneratorSet(args.n, elements)
    payload = {"set": g.toJSON()}
    lines = [repr(g)]

    if args.method in ("spectral", "both"):
        verdict = isNutSpectral(g)
        payload["spectral"] = verdict.toJSON()
        lines.append(describeVerdict(verdict))
    if args.method in ("kernel", "both"):
        report = kernelOracle(g)
        verdict = kernelVerdict(report)
        payload["kernel"] = verdict.toJSON()
        payload["kernel_report"] = report.toJSON()
        lines.append(describeVerdict(verdict) + ", nullity " + str(report.nullity))
    if args.method == "both":
        payload["agree"] = payload["spectral"]["is_nut"] == payload["kernel"]["is_nut"]
        if not payload["agree"]:
            logger.error("spectral and kernel decisions disagree on %r", g)

    return "ok", payload, "\n".join(lines)


def commandFamily(args):
    familyId = FamilyId(args.variant, args.t, args.n)
    g = buildFamily(familyId)
    payload = {"family": familyId.toJSON(), "set": g.toJSON()}
    lines = [repr(g)]

    if args.check:
        verdicts = []
        if familyId.variant != Variant.DS_PRIOR:
            verdicts.append(familyNutCheck(familyId))
        verdicts.append(isNutSpectral(g))
        verdicts.append(isNutKernel(g))
        payload["checks"] = {v.method: v.toJSON() for v in verdicts}
        payload["agree"] = len({v.isNut for v in verdicts}) == 1
        lines.extend(describeVerdict(v) for v in verdicts)

    return "ok", payload, "\n".join(lines)


def formatTableCSV(rows):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["residue", "reduced", "remainder"])
    for row in rows:
        writer.writerow([row.residue, row.reduced.toText(), row.remainder.toText()])
    return stream.getvalue().rstrip("\n")


def formatTableMarkdown(kind, modulus, rows):
    name = kind.name
    lines = ["| t mod " + str(modulus) + " | " + name + " mod x^" + str(modulus) + " - 1 | remainder mod Phi_"
             + str(modulus) + " |",
             "|---|---|---|"]
    for row in rows:
        lines.append("| " + str(row.residue) + " | " + row.reduced.toHuman() + " | " + row.remainder.toHuman() + " |")
    return "\n".join(lines)


def commandTables(args):
    kind = asKind(args.kind)
    rows = generateTable(kind, args.modulus)
    payload = {"kind": kind.value, "modulus": args.modulus, "rows": [row.toJSON() for row in rows]}
    if args.format == "csv":
        text = formatTableCSV(rows)
    elif args.format == "md":
        text = formatTableMarkdown(kind, args.modulus, rows)
    else:
        text = AppendixManager().formatGolden(kind, args.modulus, rows).rstrip("\n")
    return "ok", payload, text


def commandSearch(args):
    entries = catalog(args.degree, args.n_min, args.n_max, jobs=args.jobs, balancedOnly=args.balanced_only,
                      revalidate=not args.no_revalidate)
    payload = catalogToJSON(args.degree, entries)

    if args.out is not None:
        with open(args.out, "w", newline="") as outFile:
            if args.format == "csv":
                writeCatalogCSV(entries, outFile)
            else:
                outFile.write(prettyPrintJSON(payload) + "\n")

    lines = ["degree " + str(args.degree)]
    for entry in entries:
        if entry.skipped:
            state = "skipped"
        elif entry.exists:
            state = "exists " + repr(entry.witness)
        else:
            state = "none"
        lines.append("n = " + str(entry.n) + ": " + state + " (" + str(entry.setsPassing) + " of "
                     + str(entry.setsEnumerated) + " sets)")
    return "ok", payload, "\n".join(lines)


def commandCyclodiv(args):
    p = PolyParser().parse(args.poly)
    report = cycloDivisors(p, ENGINES[args.engine])
    payload = report.toJSON()
    payload["poly"] = p.toText()
    text = p.toHuman() + "\ndivisors: " + (", ".join(str(b) for b in report.divisors) or "none")
    return "ok", payload, text


def commandGolden(args):
    report = AppendixManager(args.path).check()
    lines = [str(report.rowsChecked) + " rows in " + str(len(report.tablesChecked)) + " tables, "
             + str(len(report.mismatches)) + " mismatches"]
    for mismatch in report.mismatches:
        lines.append("  " + mismatch.kind.name + " mod " + str(mismatch.modulus) + ", residue " + str(mismatch.residue))
    return ("ok" if report.passed else "error"), report.toJSON(), "\n".join(lines)


def commandProbe(args):
    tValues = PolyParser().parseIntegerList(args.t)
    report = conjectureProbe(tValues, args.offset, jobs=args.jobs, includeControl=args.control)
    payload = {"entries": [entry.toJSON() for entry in report]}
    lines = []
    for entry in report:
        if entry.entry.skipped:
            state = "skipped"
        else:
            state = ("found " + repr(entry.entry.witness)) if entry.found else "not found"
        lines.append("t = " + str(entry.t) + ", n = " + str(entry.n) + (" (control)" if entry.control else "")
                     + ": " + state)
    return "ok", payload, "\n".join(lines)


def buildParser():
    # The output flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a JSON envelope instead of text")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="log progress on stderr")
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                        help="report elapsed_ms as 0 for byte-identical output")

    parser = argparse.ArgumentParser(prog="nutcirc", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--verbose", action="store_true", default=False)
    parser.add_argument("--no-timing", action="store_true", default=False)
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    verify = commands.add_parser("verify", parents=[common], help="decide whether Circ(n, S) is a nut graph")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--set", required=True, help="comma-separated generators, each below n/2")
    verify.add_argument("--method", choices=["spectral", "kernel", "both"], default="spectral")
    verify.set_defaults(handler=commandVerify)

    family = commands.add_parser("family", parents=[common], help="build a family member")
    family.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    family.add_argument("--t", type=int, required=True)
    family.add_argument("--n", type=int, required=True)
    family.add_argument("--check", action="store_true", help="run every applicable nut decision")
    family.set_defaults(handler=commandFamily)

    tables = commands.add_parser("tables", parents=[common], help="residue tables of Q, R, U, W")
    tables.add_argument("--kind", choices=["q", "r", "u", "w"], required=True)
    tables.add_argument("--modulus", type=int, choices=TABLE_MODULI, required=True)
    tables.add_argument("--format", choices=["csv", "md", "txt"], default="csv")
    tables.set_defaults(handler=commandTables)

    search = commands.add_parser("search", parents=[common], help="catalog nut graphs by order")
    search.add_argument("--degree", type=int, required=True)
    search.add_argument("--n-min", type=int, required=True)
    search.add_argument("--n-max", type=int, required=True)
    search.add_argument("--jobs", type=int, default=None)
    search.add_argument("--out", default=None, help="also write the catalog to this file")
    search.add_argument("--format", choices=["json", "csv"], default="json", help="format of --out")
    search.add_argument("--balanced-only", action="store_true",
                        help="skip generator sets with unequal numbers of odd and even members")
    search.add_argument("--no-revalidate", action="store_true",
                        help="skip confirming witnesses with the kernel oracle")
    search.set_defaults(handler=commandSearch)

    cyclodiv = commands.add_parser("cyclodiv", parents=[common], help="cyclotomic divisors of a polynomial")
    cyclodiv.add_argument("--poly", required=True, help="sparse exp:coeff form or dense coefficient list")
    cyclodiv.add_argument("--engine", choices=sorted(ENGINES), default="oracle")
    cyclodiv.set_defaults(handler=commandCyclodiv)

    golden = commands.add_parser("golden", parents=[common], help="compare the residue tables to the golden files")
    golden.add_argument("--path", default=None, help="directory of the golden files")
    golden.set_defaults(handler=commandGolden)

    probe = commands.add_parser("probe", parents=[common], help="search 4t-regular nut graphs for orders 4t+8, ...")
    probe.add_argument("--t", required=True, help="comma-separated even values of t, each at least 4")
    probe.add_argument("--offset", type=int, required=True, help="largest order searched is 4t + offset")
    probe.add_argument("--jobs", type=int, default=None)
    probe.add_argument("--control", action="store_true", help="also search the order 4t + 6")
    probe.set_defaults(handler=commandProbe)

    return parser


def emit(args, command, status, payload, text, elapsed):
    if args.json:
        envelope = {"command": command,
                    "status": status,
                    "payload": payload,
                    "elapsed_ms": 0 if args.no_timing else elapsed}
        print(prettyPrintJSON(envelope))
    elif status == "ok":
        print(text)
    else:
        print(text, file=sys.stderr)


def run(argv=None):
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return 0 if error.code is None else error.code

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s", force=True)

    start = time.perf_counter()
    try:
        status, payload, text = args.handler(args)
        code = 0 if status == "ok" else 1
    except ParameterError as error:
        status, payload, text, code = "error", {"message": str(error)}, "error: " + str(error), 2
    except NutCircError as error:
        status, payload, text, code = "error", {"message": str(error)}, "error: " + str(error), 1
    elapsed = int(round((time.perf_counter() - start) * 1000))

    emit(args, args.command, status, payload, text, elapsed)
    return code


def main():
    sys.exit(run(sys.argv[1:]))
