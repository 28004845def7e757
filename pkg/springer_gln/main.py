#!/usr/bin/env python3
"""
springer-gln - Main Entry Point

Command-line access to the unipotent H-orbits of GL_N/O_N, their local
systems, the cuspidal series and the generalized Springer correspondence.
"""

import os
import sys
import json
import logging
import argparse

from springer_gln.core.config import load_settings
from springer_gln.core.exceptions import LabelError, LabelSyntaxError, SpringerError, VerificationError
from springer_gln.core.partitions import dominance_leq, format_partition, hook_dimension, n_invariant, parse_partition
from springer_gln.correspondence.appendix import APPENDIX_SIZES, verify_appendix
from springer_gln.correspondence.table import (
    correspondence_table,
    induced_orbit,
    sign_rep_orbit,
    unit_rep_orbit,
    verify_round_trips,
)
from springer_gln.numerics.counting import count_table, partition_count, split_count_identities, total_count_identity
from springer_gln.numerics.dims import (
    LeviShape,
    d0,
    d_O,
    delta_P,
    dim_X_uni,
    dim_Y_stratum,
    nu_H,
    open_orbit_check,
    s_and_delta,
)
from springer_gln.numerics.signed_permutations import bound_sweep
from springer_gln.oracle.checks import run_oracle_checks
from springer_gln.orbits.catalog import (
    GroupContext,
    closure_contains,
    component_groups,
    enumerate_orbits,
    enumerate_pairs,
    orbit_dimension,
    valid_sign_vectors,
)
from springer_gln.orbits.labels import (
    GRAMMAR_HELP,
    format_label,
    pair_from_json,
    pair_to_json,
    parse_label,
    parse_orbit,
)
from springer_gln.reporting.formatters import OUTPUT_FORMATS, render_mapping, render_table
from springer_gln.restriction.branching import branching_sweep, restriction_row_sum
from springer_gln.restriction.procedures import (
    ProcedureKind,
    apply_procedure,
    available_moves,
    d_member,
    epsilon_multiplicity,
    procedures,
    restriction_case,
    restriction_targets,
    split_compatible,
    springer_fiber_half_dimensional,
    springer_fiber_half_dimensional_by_induction,
    y_dimension,
)
from springer_gln.series.cuspidal import (
    all_cuspidal_supports,
    cuspidal_support,
    enumerate_cuspidal,
    enumerate_series,
    format_series,
    gamma,
    is_cuspidal,
    parse_series,
    series_from_json,
    series_partition,
    series_to_json,
)

# Configure logging
logger = logging.getLogger(__name__)


class UsageError(SpringerError):
    """Arguments are individually valid but do not form a request."""


def setup_logging(log_level=logging.WARNING, log_file=None):
    """Set up logging configuration.

    Args:
        log_level: Logging level (default: WARNING, keeps stdout data-only)
        log_file: Path to log file (default: None, log to stderr only)
    """
    handlers = [logging.StreamHandler(sys.stderr)]

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )


def _json_argument(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise LabelSyntaxError(e.msg, text, e.pos) from e


def load_pair(text):
    """Read a pair given as a text label or as its JSON object."""
    if text.lstrip().startswith("{"):
        return pair_from_json(_json_argument(text))
    return parse_label(text)


def load_series(text):
    """Read a series given as ``N0=.. nu=.. sigma=..`` or as its JSON object."""
    if text.lstrip().startswith("{"):
        return series_from_json(_json_argument(text))
    return parse_series(text)


def _closure_records(N):
    orbits = enumerate_orbits(N)
    records = []
    for big in orbits:
        for small in orbits:
            contained = closure_contains(big, small)
            records.append({
                "big": str(big),
                "small": str(small),
                "dominated": dominance_leq(small.lam, big.lam),
                "closure": "unknown" if contained is None else contained,
            })
    return records


def cmd_orbits(args, settings):
    if args.closure:
        columns = ("big", "small", "dominated", "closure")
        inputs = {"N": args.n, "closure": True}
        return render_table("orbits", inputs, _closure_records(args.n), columns, args.format), 0

    ctx = GroupContext(args.n)
    records = []
    for orbit in enumerate_orbits(args.n):
        lam = orbit.lam
        records.append({
            "orbit": str(orbit),
            "dim": orbit_dimension(ctx, lam),
            "n_lambda": n_invariant(lam),
            "A_H": component_groups(lam).order_A_H if lam else 1,
            "local_systems": len(valid_sign_vectors(lam)),
        })
    columns = ("orbit", "dim", "n_lambda", "A_H", "local_systems")
    return render_table("orbits", {"N": args.n}, records, columns, args.format), 0


def cmd_pairs(args, settings):
    records = [
        {"pair": format_label(pair), **pair_to_json(pair), "cuspidal": is_cuspidal(pair)}
        for pair in enumerate_pairs(args.n)
    ]
    return render_table("pairs", {"N": args.n}, records, ("pair", "cuspidal"), args.format), 0


def cmd_cuspidal(args, settings):
    records = [{"pair": format_label(pair), **pair_to_json(pair)} for pair in enumerate_cuspidal(args.n)]
    return render_table("cuspidal", {"N": args.n}, records, ("pair",), args.format), 0


def cmd_series(args, settings):
    records = []
    for datum, members in series_partition(args.n).items():
        a = datum.rank(args.n)
        records.append({
            "series": format_series(datum),
            "datum": series_to_json(datum),
            "N0": datum.N0,
            "a": a,
            "members": partition_count(a, settings.series_degree),
            "pairs": " ".join(format_label(pair) for pair in members),
        })
    columns = ("series", "N0", "a", "members", "pairs")
    return render_table("series", {"N": args.n}, records, columns, args.format), 0


def cmd_table(args, settings):
    records = [
        {"pair": format_label(row.pair), "series": format_series(row.series), "mu": format_partition(row.mu)}
        for row in correspondence_table(args.n)
    ]
    return render_table("table", {"N": args.n}, records, ("pair", "series", "mu"), args.format), 0


def cmd_support(args, settings):
    pair = load_pair(args.label)
    datum, mu = cuspidal_support(pair)
    result = {
        "pair": format_label(pair),
        "series": format_series(datum),
        "N0": datum.N0,
        "a": datum.rank(pair.N),
        "mu": format_partition(mu),
        "cuspidal": is_cuspidal(pair),
        "round_trip": gamma(datum, mu, pair.N) == pair,
    }
    if args.all_orders:
        result["orders_agree"] = len(all_cuspidal_supports(pair)) == 1
    return render_mapping("support", {"label": args.label}, result, args.format), 0


def cmd_correspond(args, settings):
    datum = load_series(args.series)
    mu = parse_partition(args.mu)
    N = datum.N0 + 2 * mu.size
    pair = gamma(datum, mu, N)
    result = {
        "N": N,
        "series": format_series(datum),
        "mu": format_partition(mu),
        "pair": format_label(pair),
        "induced_orbit": str(induced_orbit(datum, mu, N)),
        "unit_rep_pair": format_label(unit_rep_orbit(datum, N)),
        "sign_rep_pair": format_label(sign_rep_orbit(datum, N)),
    }
    inputs = {"series": args.series, "mu": args.mu}
    return render_mapping("correspond", inputs, result, args.format), 0


def _restriction_details(pair, pair_p):
    result = {"pair": format_label(pair), "target": format_label(pair_p)}
    found = procedures(pair.lam, pair_p.lam)
    result["procedures"] = [str(proc) for proc in found]
    for proc in found:
        dims = y_dimension(pair.lam, pair_p.lam, proc)
        result[f"{proc}.dim_Y"] = dims.dim_Y
        result[f"{proc}.s"] = dims.s
        result[f"{proc}.full"] = dims.full
        if proc.kind is ProcedureKind.A_PRIME:
            result[f"{proc}.case"] = restriction_case(pair.lam, proc.block_index)
            result[f"{proc}.d_member"] = d_member(pair.tau, pair_p.tau, proc.block_index, pair.lam, pair_p.lam)
    result["split_compatible"] = split_compatible(pair, pair_p)
    result["multiplicity"] = epsilon_multiplicity(pair, pair_p)
    return result


def _restriction_summary(pair):
    closed_form = springer_fiber_half_dimensional(pair.lam)
    by_induction = springer_fiber_half_dimensional_by_induction(pair.lam)
    result = {
        "pair": format_label(pair),
        "moves": [
            f"{proc} -> {format_partition(apply_procedure(pair.lam, proc))}"
            for proc in available_moves(pair.lam)
        ],
        "targets": [format_label(p) for p in restriction_targets(pair)],
        "springer_fiber_half_dimensional": closed_form,
        "springer_fiber_by_induction_agrees": closed_form == by_induction,
    }
    datum, mu = cuspidal_support(pair)
    if mu.size:
        result["dim_mu"] = hook_dimension(mu)
        result["restriction_row_sum"] = restriction_row_sum(datum, mu, pair.N)
    return result


def cmd_restrict(args, settings):
    if args.sweep:
        settings = settings.override(sweep_max_n=args.max_n)
        max_n = settings.sweep_max_n
        report = branching_sweep(max_n, progress=args.verbose)
        result = {"max_n": max_n, "checked": report.checked, "failures": report.failures, "ok": report.ok}
        return render_mapping("restrict", {"sweep": True, "max_n": max_n}, result, args.format), 0 if report.ok else 1

    if not args.label:
        raise UsageError("restrict needs --label (with an optional --target) or --sweep")
    pair = load_pair(args.label)
    if args.target:
        result = _restriction_details(pair, load_pair(args.target))
    else:
        result = _restriction_summary(pair)
    inputs = {"label": args.label, "target": args.target}
    return render_mapping("restrict", inputs, result, args.format), 0


def _dims_sweep(args, settings):
    settings = settings.override(sweep_max_n=args.max_n, random_permutations=args.samples, seed=args.seed)
    max_n = settings.sweep_max_n
    open_failures = [
        f"N={N} {datum}"
        for N in range(max_n + 1)
        for datum in enumerate_series(N)
        if not open_orbit_check(datum, N).ok
    ]
    full = bound_sweep(settings.random_permutations, settings.max_permutation_n, settings.seed)
    even = bound_sweep(settings.random_permutations, settings.max_permutation_n, settings.seed, even_signs=True)
    result = {
        "max_n": max_n,
        "open_orbit_failures": open_failures,
        "bound_samples": full.samples,
        "bound_boundary_cases": full.boundary_cases + even.boundary_cases,
        "bound_violations": full.violations,
        "bound_equalities": full.equalities,
        "even_bound_violations": even.violations,
        "even_bound_equalities": even.equalities,
    }
    ok = not open_failures and full.ok and even.ok and full.equalities > 0
    return render_mapping("dims", {"sweep": True, "max_n": max_n}, result, args.format), 0 if ok else 1


def cmd_dims(args, settings):
    if args.sweep:
        return _dims_sweep(args, settings)
    if args.n is None or args.n0 is None:
        raise UsageError("dims needs --n and --n0, or --sweep")
    if args.orbit and not args.levi_orbit:
        raise UsageError("dims --orbit also needs --levi-orbit")

    shape = LeviShape(args.n, args.n0)
    result = {
        "N": shape.N,
        "N0": shape.N0,
        "a": shape.a,
        "nu_H": nu_H(shape.N),
        "nu_L": shape.nu_L,
        "delta_P": delta_P(shape),
    }
    if args.levi_orbit:
        orbit_L = parse_orbit(args.levi_orbit)
        dim_O_L = orbit_dimension(GroupContext(shape.N0), orbit_L.lam)
        result["dim_O_L"] = dim_O_L
        result["dim_X_uni"] = dim_X_uni(shape, dim_O_L)
        result["dim_Y"] = dim_Y_stratum(shape, dim_O_L)
        result["d0"] = d0(nu_H(shape.N), shape.nu_L, shape.nu_L, dim_O_L, dim_O_L, shape.a, shape.a)
        if args.orbit:
            orbit = parse_orbit(args.orbit)
            dim_O = orbit_dimension(GroupContext(shape.N), orbit.lam)
            values = s_and_delta(
                n_invariant(orbit.lam), shape.a + n_invariant(orbit_L.lam), delta_P(shape), dim_O, dim_O_L
            )
            result["dim_O"] = dim_O
            result["d_O"] = d_O(shape, dim_O, dim_O_L)
            result["s"] = values.s
            result["delta"] = values.delta
    inputs = {"N": args.n, "N0": args.n0, "orbit": args.orbit, "levi_orbit": args.levi_orbit}
    return render_mapping("dims", inputs, result, args.format), 0


def cmd_count(args, settings):
    settings = settings.override(sweep_max_n=args.max_n)
    max_n = settings.sweep_max_n
    degree = settings.series_degree
    records = []
    ok = True
    for row in count_table(max_n, degree, progress=args.verbose):
        total = total_count_identity(row.N, degree)
        split_ok = split_count_identities(row.N, degree).ok if row.N >= 1 else None
        ok = ok and row.match and total.ok and split_ok is not False
        records.append({
            "N": row.N,
            "pairs": row.pairs,
            "cuspidal": row.cuspidal,
            "formula": row.formula,
            "match": row.match,
            "by_series": total.by_series,
            "split_identities": split_ok,
        })
    columns = ("N", "pairs", "cuspidal", "formula", "match", "by_series", "split_identities")
    return render_table("count", {"max_n": max_n}, records, columns, args.format), 0 if ok else 1


def cmd_verify_appendix(args, settings):
    reports = [verify_appendix(N) for N in APPENDIX_SIZES]
    matched = sum(1 for report in reports if report.ok)
    round_trip_failures = []
    if args.round_trips is not None:
        for N in range(args.round_trips + 1):
            round_trip_failures.extend(verify_round_trips(N))
    ok = matched == len(reports) and not round_trip_failures
    inputs = {"round_trips": args.round_trips}

    if args.format == "json":
        results = {
            "matched": matched,
            "total": len(reports),
            "tables": [report.to_dict() for report in reports],
            "round_trip_failures": round_trip_failures,
        }
        return render_mapping("verify-appendix", inputs, results, "json"), 0 if ok else 1
    if args.format == "csv":
        records = [report.to_dict() for report in reports]
        columns = ("N", "ok", "expected_rows", "computed_rows")
        return render_table("verify-appendix", inputs, records, columns, "csv"), 0 if ok else 1

    lines = [f"{matched}/{len(reports)} tables match"]
    for report in reports:
        lines.extend(f"N={report.N} missing: {row}" for row in report.missing)
        lines.extend(f"N={report.N} unexpected: {row}" for row in report.unexpected)
    if args.round_trips is not None:
        lines.append(f"round trips up to N={args.round_trips}: {len(round_trip_failures)} failures")
        lines.extend(round_trip_failures)
    return "\n".join(lines) + "\n", 0 if ok else 1


def cmd_oracle_check(args, settings):
    settings = settings.override(oracle_max_n=args.max_n, seed=args.seed, oracle_trials=args.trials)
    report = run_oracle_checks(
        settings.oracle_max_n, seed=settings.seed, trials=settings.oracle_trials, progress=args.verbose
    )
    inputs = {"max_n": settings.oracle_max_n, "seed": settings.seed, "trials": settings.oracle_trials}
    code = 0 if report.ok else 1
    if args.format == "json":
        return render_mapping("oracle-check", inputs, report.to_dict(), "json"), code

    records = [check.to_dict() for check in report.orbits]
    columns = ("N", "orbit", "jordan_type", "centralizer", "expected_centralizer", "ok")
    output = render_table("oracle-check", inputs, records, columns, args.format)
    if args.format == "text":
        output += f"{len(report.orbits) - sum(1 for c in report.orbits if not c.ok)}/{len(report.orbits)} orbits pass\n"
        for split_check in report.regular_splits:
            output += (
                f"regular N={split_check.N}: t_n conjugate={split_check.t_conjugate}, "
                f"{split_check.collisions}/{split_check.trials} random collisions\n"
            )
    return output, code


COMMANDS = {
    "orbits": cmd_orbits,
    "pairs": cmd_pairs,
    "cuspidal": cmd_cuspidal,
    "series": cmd_series,
    "table": cmd_table,
    "support": cmd_support,
    "correspond": cmd_correspond,
    "restrict": cmd_restrict,
    "dims": cmd_dims,
    "count": cmd_count,
    "verify-appendix": cmd_verify_appendix,
    "oracle-check": cmd_oracle_check,
}


def build_parser():
    """Build the argument parser with one subcommand per entry of COMMANDS."""
    parser = argparse.ArgumentParser(
        prog='springer-gln',
        description='Generalized Springer correspondence for GL_N/O_N'
    )

    # Configuration options
    config_group = parser.add_argument_group('Configuration')
    config_group.add_argument('--config', type=str, help='Path to a JSON settings file')

    # Logging options
    log_group = parser.add_argument_group('Logging')
    log_group.add_argument('--log-file', type=str, help='Path to log file')
    log_group.add_argument('--verbose', action='store_true', help='Enable verbose logging and progress bars')

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--format', choices=OUTPUT_FORMATS, default='text', help='Output format')

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')

    orbits = subparsers.add_parser('orbits', parents=[output], help='List the H-orbits for N')
    orbits.add_argument('--n', type=int, required=True, help='N')
    orbits.add_argument('--closure', action='store_true', help='Tabulate closure containment between orbits')

    for name, help_text in (
        ('pairs', 'List Psi_N, every (orbit, local system) pair'),
        ('cuspidal', 'List the cuspidal pairs for N'),
        ('series', 'List the series C_N'),
        ('table', 'Print the correspondence table for N'),
    ):
        sub = subparsers.add_parser(name, parents=[output], help=help_text)
        sub.add_argument('--n', type=int, required=True, help='N')

    support = subparsers.add_parser('support', parents=[output], help='Cuspidal support of a pair')
    support.add_argument('--label', required=True, help='Pair label, e.g. "[4,2,1];--+", or its JSON object')
    support.add_argument('--all-orders', action='store_true', help='Check every stripping order')

    correspond = subparsers.add_parser('correspond', parents=[output], help='Pair attached to a series and mu')
    correspond.add_argument('--series', required=True, help='Series, e.g. "N0=1 nu=[1] sigma=+", or its JSON object')
    correspond.add_argument('--mu', required=True, help='Partition of a, e.g. "[2]"')

    restrict = subparsers.add_parser('restrict', parents=[output], help='Restriction to GL_1 x SO_{N-2}')
    restrict.add_argument('--label', help='Pair label over N, text or JSON')
    restrict.add_argument('--target', help='Pair label over N-2, text or JSON')
    restrict.add_argument('--sweep', action='store_true', help='Run the branching consistency sweep')
    restrict.add_argument('--max-n', type=int, help='Largest N for --sweep')

    dims = subparsers.add_parser('dims', parents=[output], help='Dimension formulas')
    dims.add_argument('--n', type=int, help='N')
    dims.add_argument('--n0', type=int, help='N0 of the Levi')
    dims.add_argument('--orbit', help='Orbit label over N')
    dims.add_argument('--levi-orbit', help='Orbit label over N0')
    dims.add_argument('--sweep', action='store_true', help='Check open orbits and the Delta_Q bound')
    dims.add_argument('--max-n', type=int, help='Largest N for --sweep')
    dims.add_argument('--samples', type=int, help='Random signed permutations for --sweep')
    dims.add_argument('--seed', type=int, help='Random seed for --sweep')

    count = subparsers.add_parser('count', parents=[output], help='Cuspidal counts against the closed form')
    count.add_argument('--max-n', type=int, help='Largest N')

    verify = subparsers.add_parser('verify-appendix', parents=[output], help='Compare with the golden tables')
    verify.add_argument('--round-trips', type=int, metavar='MAX_N', help='Also check support/gamma round trips')

    oracle = subparsers.add_parser('oracle-check', parents=[output], help='Exact matrix checks')
    oracle.add_argument('--max-n', type=int, help='Largest N')
    oracle.add_argument('--seed', type=int, help='Random seed')
    oracle.add_argument('--trials', type=int, help='Random H-elements per regular split check')

    return parser


def main(argv=None):
    """Main entry point.

    Returns:
        int: 0 on success, 1 on a verification mismatch, 2 on a usage error
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    # Set up logging
    log_level = logging.DEBUG if args.verbose else logging.WARNING
    setup_logging(log_level=log_level, log_file=args.log_file)

    if not args.command:
        parser.print_help(sys.stderr)
        return 2

    try:
        settings = load_settings(args.config)
        output, code = COMMANDS[args.command](args, settings)
    except (LabelError, UsageError) as e:
        logger.debug(f"{type(e).__name__} in {args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        print(GRAMMAR_HELP, file=sys.stderr, end="")
        return 2
    except VerificationError as e:
        logger.error(f"Verification failed in {args.command}: {e}")
        print(f"verification failed: {e}", file=sys.stderr)
        return 1
    except SpringerError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    sys.stdout.write(output)
    return code


if __name__ == '__main__':
    sys.exit(main())
