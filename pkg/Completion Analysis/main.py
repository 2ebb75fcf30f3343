import argparse
import logging
import os
import sys

from settings.settings import *
from errors import CompletionError, InputError
from factories import DocumentJSONFactory, load_json
from feasibility import CHECKERS, run_checker
from oracle import GridSpec, run_oracle
from polymatrix import eigenstructure
from realize import SearchBudget, TargetMatches, realize_by_search, realize_low_degree, search_completion
from renderer import (
    EigenstructureJSONRenderer,
    FeasibilityReportJSONRenderer,
    OracleCSVRenderer,
    OracleReportJSONRenderer,
    SearchResultJSONRenderer,
)

logger = logging.getLogger(__name__)

THEOREM_CHOICES = sorted(CHECKERS)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eigencomplete",
        description="Eigenstructure of polynomial matrices and feasibility of row completions.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr (-vv for debug)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    eig = subparsers.add_parser("eig", help="print the eigenstructure of a matrix")
    eig.add_argument("matrix", help="matrix JSON file")
    eig.add_argument("--field", default=None, help="field of files without a 'field' key (Q, gf2, GF(3))")

    check = subparsers.add_parser("check", help="decide whether a completion with a prescribed structure exists")
    check.add_argument("--matrix", help="matrix JSON file for P (not needed for --theorem exists)")
    check.add_argument("--target", required=True, help="target JSON file; absent keys are unprescribed")
    check.add_argument("--add-rows", type=int, default=DEFAULT_ADD_ROWS, dest="add_rows", help="number z of rows added")
    check.add_argument("--theorem", choices=THEOREM_CHOICES, default=DEFAULT_THEOREM)
    check.add_argument("--field", default=None)
    check.add_argument("--columns", action="store_true",
                       help="column completion: prescribed indices refer to [P W] instead of [P; W]")

    realize = subparsers.add_parser("realize", help="build a matrix (or a completion) with a prescribed structure")
    realize.add_argument("--target", required=True, help="eigenstructure JSON, or a partial target with --matrix")
    realize.add_argument("--search", action="store_true", help="exhaustive search over a finite field")
    realize.add_argument("--matrix", help="with --search: complete this matrix instead of building one")
    realize.add_argument("--add-rows", type=int, default=DEFAULT_ADD_ROWS, dest="add_rows")
    realize.add_argument("--field", default=None)
    realize.add_argument("--max-deg", type=int, default=None, dest="max_deg", help="degree bound for searched rows")
    realize.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    oracle = subparsers.add_parser("oracle", help="compare the checkers with exhaustive search on a grid")
    oracle.add_argument("grid", help="grid spec, e.g. 'gf2 m=1 n=1 z=1 d=1'")
    oracle.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    oracle.add_argument("--jobs", type=int, default=DEFAULT_JOBS)
    oracle.add_argument("--report-dir", default=None, dest="report_dir",
                        help="also write the outcome table as CSV (default directory: {})".format(REPORT_DIRECTORY))
    oracle.add_argument("--no-linearization", action="store_false", dest="linearization",
                        help="skip the companion form cross-check")
    return parser


def configure_logging(verbosity):
    level = {0: os.environ.get(ENV_LOG_LEVEL, LOG_LEVEL).upper(), 1: "INFO"}.get(verbosity, "DEBUG")
    if not isinstance(logging.getLevelName(level), int):
        level = LOG_LEVEL
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def resolve_document(path):
    """Paths that do not exist are looked up under the bundled target settings."""
    if os.path.isfile(path):
        return path
    candidate = os.path.join(TARGET_SETTINGS_LOCATION, path)
    return candidate if os.path.isfile(candidate) else path


def read_document(path):
    return load_json(resolve_document(path))


def emit(document):
    print(document)


#------------------------------ Commands ----------------------------------

def cmd_eig(args):
    P = DocumentJSONFactory(read_document(args.matrix), "matrix", field=args.field).create()
    emit(EigenstructureJSONRenderer(eigenstructure(P)).render_text())
    return EXIT_OK


def cmd_check(args):
    target_data = read_document(args.target)
    p_inv = None
    if not CHECKERS[args.theorem].needs_matrix:
        target = DocumentJSONFactory(target_data, "eigenstructure", field=args.field).create()
    else:
        if args.matrix is None:
            raise InputError("--matrix is required for --theorem {}".format(args.theorem))
        P = DocumentJSONFactory(read_document(args.matrix), "matrix", field=args.field).create()
        target = DocumentJSONFactory(target_data, "target", z=args.add_rows, field=P.field).create()
        if args.columns:
            P, target = P.transpose(), target.transposed()
        p_inv = eigenstructure(P)
    report = run_checker(args.theorem, p_inv, target)
    emit(FeasibilityReportJSONRenderer(report).render_text())
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_realize(args):
    target_data = read_document(args.target)
    if args.matrix is not None:
        if not args.search:
            raise InputError("completing a given matrix needs --search")
        P = DocumentJSONFactory(read_document(args.matrix), "matrix", field=args.field).create()
        target = DocumentJSONFactory(target_data, "target", z=args.add_rows, field=P.field).create()
        budget = SearchBudget(P.field, args.budget)
        max_deg = args.max_deg if args.max_deg is not None else eigenstructure(P).degree
        W = search_completion(P, args.add_rows, max_deg, TargetMatches(target), budget)
        return _emit_search_result(W)
    target = DocumentJSONFactory(target_data, "eigenstructure", field=args.field).create()
    existence = run_checker("exists", None, target)
    if not existence.feasible:
        emit(SearchResultJSONRenderer(None, "infeasible", existence.violations).render_text())
        return EXIT_INFEASIBLE
    if not args.search:
        emit(SearchResultJSONRenderer(realize_low_degree(target), "realized").render_text())
        return EXIT_OK
    budget = SearchBudget(target.field, args.budget)
    return _emit_search_result(realize_by_search(target, budget))


def _emit_search_result(matrix):
    if matrix is None:
        emit(SearchResultJSONRenderer(None, "not found within budget").render_text())
        return EXIT_INFEASIBLE
    emit(SearchResultJSONRenderer(matrix, "found").render_text())
    return EXIT_OK


def cmd_oracle(args):
    report = run_oracle(GridSpec.parse(args.grid), args.budget, jobs=args.jobs, linearization=args.linearization)
    if args.report_dir is not None:
        OracleCSVRenderer(report, args.report_dir, ORACLE_CSV_FILE_NAME).render()
    emit(OracleReportJSONRenderer(report, MAX_REPORTED_MISMATCHES).render_text())
    return EXIT_OK if report.mismatch_count == 0 else EXIT_INFEASIBLE


COMMANDS = {
    "eig": cmd_eig,
    "check": cmd_check,
    "realize": cmd_realize,
    "oracle": cmd_oracle,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except CompletionError as error:
        logger.debug("%s raised", type(error).__name__)
        print("error: {}".format(error), file=sys.stderr)
        return error.exit_code


if __name__ == "__main__":
    sys.exit(main())
