"""Command line front end.

Every subcommand reads one job file in the statement format documented in
textio, runs the matching computation, and emits a RunRecord document as
JSON (to --json or stdout). Tabular commands can additionally write a CSV
view with --csv. All diagnostics go to stderr; stdout carries results only.

Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 budget
exhausted, 5 capacity limit, 6 precision loss. Failures still emit a
machine-readable error document on the JSON channel.
"""

from __future__ import annotations

import logging
import sys
import time

import click

from .curves import Branch, BranchCurve, TameReport, tame_report
from .engine import Budget, Ideal
from .errors import (BudgetExceededError, CapacityError, KunzError,
                     ParseError, PrecisionLossError, PreconditionError)
from .fsplit import fedder_test, fpurity_exponent, fsplit_report
from .hk import BoundConstants, hk_sequence, verify_pair_bounds
from .localring import LocalRingPresentation
from .records import SCHEMA_VERSION, RunRecord, canonical_json, csv_text
from .scan import Subvariety, scan_points
from .textio import JobSpec, parse_job

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4
EXIT_CAPACITY = 5
EXIT_PRECISION = 6

_EXIT_CODES = (
    (ParseError, EXIT_PARSE),
    (PreconditionError, EXIT_PRECONDITION),
    (BudgetExceededError, EXIT_BUDGET),
    (CapacityError, EXIT_CAPACITY),
    (PrecisionLossError, EXIT_PRECISION),
)

logger = logging.getLogger("kunz")


def exit_code_for(err: KunzError) -> int:
    for cls, code in _EXIT_CODES:
        if isinstance(err, cls):
            return code
    return 1


# -- payload builders --------------------------------------------------------


def _interval(interval) -> dict:
    return {"low": interval.low, "high": interval.high}


def _presentation(job: JobSpec) -> LocalRingPresentation:
    if not job.variables:
        raise PreconditionError("the job needs a `vars = ...;` statement")
    return LocalRingPresentation.from_texts(
        job.p, list(job.variables), list(job.ideal), point=job.point)


def _budget(job: JobSpec) -> Budget | None:
    if job.budget_pairs is None:
        return None
    return Budget(max_pairs=job.budget_pairs)


def run_hk(job: JobSpec) -> dict:
    presentation = _presentation(job)
    report = hk_sequence(presentation, job.e_max or 3, _budget(job))
    return {
        "p": report.p,
        "presentation": report.presentation_id,
        "dimension": report.dimension,
        "samples": [
            {"e": s.e, "q": s.q, "colength": s.colength,
             "lambda": s.normalized}
            for s in report.samples
        ],
        "empirical_gap_constant": report.empirical_C,
        "interval": _interval(report.interval),
        "stabilization_index": report.stabilization_index,
        "truncated": report.truncated,
    }


def run_fsig(job: JobSpec) -> dict:
    presentation = _presentation(job)
    report = fsplit_report(presentation, job.e_max or 3, _budget(job))
    return {
        "p": report.p,
        "presentation": report.presentation_id,
        "dimension": report.dimension,
        "samples": [
            {"e": s.e, "q": s.q, "colength": s.colength, "s": s.s}
            for s in report.samples
        ],
        "empirical_gap_constant": report.empirical_C,
        "interval": _interval(report.interval),
        "is_F_pure": report.verdict.is_F_pure,
        "purity_witness": (None if report.verdict.witness is None
                           else str(report.verdict.witness)),
        "purity_detail": report.verdict.detail,
    }


def run_fedder(job: JobSpec) -> dict:
    presentation = _presentation(job)
    budget = _budget(job)
    verdict = fedder_test(presentation, budget)
    payload = {
        "p": presentation.p,
        "is_F_pure": verdict.is_F_pure,
        "witness": None if verdict.witness is None else str(verdict.witness),
        "detail": verdict.detail,
    }
    if job.element is not None:
        element = presentation.ring.parse(job.element)
        cap = job.e_cap or 4
        exponent = fpurity_exponent(presentation, element, cap, budget)
        payload["element"] = str(element)
        payload["exponent_cap"] = cap
        payload["purity_exponent"] = exponent
        payload["cap_exhausted"] = exponent is None
    return payload


def _curve(job: JobSpec) -> BranchCurve:
    if not job.branches:
        raise PreconditionError(
            "the job needs at least one `branch = ...;` statement")
    branches = tuple(
        Branch(gens, cross) for gens, cross in zip(job.branches, job.cross))
    return BranchCurve(job.p, branches)


def _tame_payload(curve: BranchCurve, report: TameReport) -> dict:
    return {
        "p": report.p,
        "branches": [
            {
                "semigroup": list(report.semigroups[i]),
                "cross": list(branch.cross_valuations),
                "conductor": branch.conductor,
                "gamma0": inv.gamma0,
                "beta": inv.beta,
                "gamma": inv.gamma,
            }
            for i, (branch, inv) in enumerate(
                zip(curve.branches, report.invariants.per_branch))
        ],
        "delta": report.invariants.delta,
        "Delta": report.invariants.Delta,
        "parameter_valuations": list(report.parameter_valuations),
        "discriminant_valuation": report.discriminant_valuation,
        "extension_degree": report.extension_degree,
        "generator_count": report.generator_count,
        "generator_bound": {
            "count": report.generator_bound.count,
            "delta": report.generator_bound.delta,
            "mu": report.generator_bound.mu,
            "bound": report.generator_bound.bound,
            "passed": report.generator_bound.passed,
        },
        "precision": report.precision,
        "seed": report.seed,
    }


def run_tame(job: JobSpec) -> dict:
    curve = _curve(job)
    report = tame_report(curve, precision=job.precision, seed=job.seed,
                         mu=job.mu)
    return _tame_payload(curve, report)


def run_scan(job: JobSpec) -> dict:
    if not job.variables:
        raise PreconditionError("the job needs a `vars = ...;` statement")
    subvarieties = tuple(
        Subvariety(spec.ideal, spec.witnesses, spec.params)
        for spec in job.subvarieties)
    points = None if job.points is None else list(job.points)
    report = scan_points(job.p, job.variables, list(job.ideal),
                         points=points, e_max=job.e_max or 2,
                         subvarieties=subvarieties, budget=_budget(job))
    return {
        "p": report.p,
        "variables": list(report.variables),
        "ideal": list(report.ideal_generators),
        "e_values": list(report.e_values),
        "points": [
            {
                "point": list(record.point),
                "dimension": record.dimension,
                "smooth": record.smooth,
                "lambda": list(record.lambda_values),
                "s": list(record.s_values),
            }
            for record in report.points
        ],
        "subvarieties": [
            {
                "generators": list(record.generators),
                "height": record.height,
                "parameter_count": record.parameter_count,
                "witnesses": [
                    {"point": list(w.witness), "lambda": list(w.values)}
                    for w in record.witness_values
                ],
                "agreement": record.agreement,
            }
            for record in report.subvarieties
        ],
        "verdicts": {
            "upper_semicontinuous_lambda":
                report.verdicts.upper_semicontinuous_lambda,
            "lower_semicontinuous_s": report.verdicts.lower_semicontinuous_s,
            "generic_constancy": report.verdicts.generic_constancy,
            "violations": list(report.verdicts.violations),
        },
    }


def run_verify_bounds(job: JobSpec) -> dict:
    presentation = _presentation(job)
    if not job.inner:
        raise PreconditionError(
            "verify-bounds needs an `inner = ...;` statement with the "
            "generators of the inner ideal")
    ring = presentation.ring
    inner = Ideal(ring, [ring.parse(text) for text in job.inner])
    socle = ring.parse(job.socle if job.socle is not None else "1")
    if job.branches:
        if job.m_constant is not None or job.delta_constant is not None:
            raise PreconditionError(
                "give either branch lines or explicit m/Delta, not both")
        report = tame_report(_curve(job), precision=job.precision,
                             seed=job.seed, mu=job.mu)
        constants = BoundConstants(m=report.invariants.delta,
                                   Delta=report.invariants.Delta)
        conditional = False
    else:
        if job.m_constant is None or job.delta_constant is None:
            raise PreconditionError(
                "verify-bounds needs `m = ...;` and `Delta = ...;` "
                "statements, or branch lines to derive them from")
        constants = BoundConstants(m=job.m_constant, Delta=job.delta_constant)
        conditional = True
    check = verify_pair_bounds(presentation, inner, socle,
                               job.e_max or 3, constants, _budget(job))
    return {
        "p": presentation.p,
        "inner": [str(g) for g in inner.generators],
        "socle": str(socle),
        "constants": {"m": constants.m, "Delta": constants.Delta,
                      "b": constants.b, "e0": constants.e0},
        "conditional": conditional,
        "entries": [
            {"e": entry.e, "e_prime": entry.e_prime, "lhs": entry.lhs,
             "rhs": entry.rhs, "passed": entry.passed}
            for entry in check.entries
        ],
        "all_passed": check.all_passed,
    }


_RUNNERS = {
    "hk": run_hk,
    "fsig": run_fsig,
    "fedder": run_fedder,
    "tame": run_tame,
    "scan": run_scan,
    "verify-bounds": run_verify_bounds,
}


# -- command wiring ----------------------------------------------------------


def _emit(text: str, path: str | None) -> None:
    if path is None:
        click.echo(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")


def _fail(err: KunzError, json_path: str | None) -> None:
    code = exit_code_for(err)
    detail = {"type": type(err).__name__, "message": str(err),
              "exit_code": code}
    if isinstance(err, ParseError) and err.position is not None:
        detail["position"] = err.position
    if isinstance(err, PrecisionLossError) and err.required is not None:
        detail["required_precision"] = err.required
    document = {"schema_version": SCHEMA_VERSION, "error": detail}
    _emit(canonical_json(document), json_path)
    logger.error("%s: %s", type(err).__name__, err)
    sys.exit(code)


def _execute(command: str, input_path: str, emax: int | None,
             json_path: str | None, csv_path: str | None,
             budget_pairs: int | None, precision: int | None,
             threads: int | None) -> None:
    timings: dict[str, float] = {}
    started = time.perf_counter()
    try:
        try:
            with open(input_path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ParseError(f"cannot read input file: {exc}") from exc
        job = parse_job(text, command=command, e_max=emax,
                        budget_pairs=budget_pairs, precision=precision,
                        threads=threads)
        timings["parse"] = time.perf_counter() - started
        if job.threads != 1:
            raise PreconditionError(
                "this build runs single-threaded; use one process per job")
        compute_start = time.perf_counter()
        payload = _RUNNERS[command](job)
        timings[command] = time.perf_counter() - compute_start
        timings["total"] = time.perf_counter() - started
        record = RunRecord(job=job, payload=payload, timings=timings)
        csv_view = None if csv_path is None else csv_text(command, payload)
        _emit(record.to_json(), json_path)
        if csv_view is not None:
            _emit(csv_view, csv_path)
        logger.info("%s finished in %.3fs", command, timings["total"])
    except KunzError as err:
        _fail(err, json_path)


def _shared_options(func):
    decorators = [
        click.option("--input", "input_path", required=True,
                     type=click.Path(dir_okay=False),
                     help="Job file in the statement format."),
        click.option("--emax", type=int, default=None,
                     help="Largest Frobenius exponent e to sample."),
        click.option("--json", "json_path", type=click.Path(dir_okay=False),
                     default=None,
                     help="Write the result document here instead of stdout."),
        click.option("--csv", "csv_path", type=click.Path(dir_okay=False),
                     default=None,
                     help="Also write the tabular view as CSV."),
        click.option("--budget-pairs", type=int, default=None,
                     help="Cap on critical pairs per basis computation."),
        click.option("--precision", type=int, default=None,
                     help="Series truncation order for curve commands."),
        click.option("--threads", type=int, default=None,
                     help="Worker count; this build accepts only 1."),
    ]
    for decorator in reversed(decorators):
        func = decorator(func)
    return func


@click.group()
@click.version_option(package_name="kunz", prog_name="kunz")
def main() -> None:
    """Exact positive-characteristic singularity measurements."""
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s",
                        force=True)


def _register(name: str, help_text: str) -> None:
    @main.command(name=name, help=help_text)
    @_shared_options
    def _command(input_path, emax, json_path, csv_path, budget_pairs,
                 precision, threads):
        _execute(name, input_path, emax, json_path, csv_path, budget_pairs,
                 precision, threads)


_register("hk", "Normalized Frobenius colengths of a local ring.")
_register("fsig", "Splitting numbers with the same tail analysis.")
_register("fedder", "F-purity verdict, optionally with a purity exponent.")
_register("tame", "Invariants and discriminant of a tame branch curve.")
_register("scan", "Pointwise invariants and semicontinuity verdicts.")
_register("verify-bounds", "Pair bounds for relative colengths.")


if __name__ == "__main__":
    main()
