import argparse
import logging
import sys
from typing import List, Optional

from k3invariants.io import DEFAULT_FORMAT, FORMATS, emit_report, write_report
from k3invariants.moduli import fibre_breakdown
from k3invariants.registry import ManifestError, UnknownClaimError, load_manifest, run_claims, select_claims
from k3invariants.series import series_ratio
from k3invariants.version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2


def _int_list(text: str) -> List[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _prefix_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(',') if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='k3invariants',
                                     description='Exact invariants of K3 curve sections and verification of '
                                                 'the numeric claims they support.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='increase logging verbosity (-v info, -vv debug)')
    parser.add_argument('-q', '--quiet', action='store_true', help='only log errors')
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', help='recompute the claims and report the outcome')
    verify.add_argument('--claims', type=_prefix_list, default=None, metavar='PREFIX[,PREFIX...]',
                        help='only verify claims whose id starts with one of the prefixes')
    verify.add_argument('--format', choices=FORMATS, default=DEFAULT_FORMAT)
    verify.add_argument('--out', metavar='FILE', help='write the report to FILE instead of stdout')
    verify.add_argument('--manifest', metavar='FILE', help='use another claims manifest')
    verify.add_argument('--sequential', action='store_true', help='evaluate claims in a single thread')
    verify.set_defaults(handler=_verify)

    claims = commands.add_parser('claims', help='list claim ids with their location')
    claims.add_argument('prefixes', nargs='*', metavar='PREFIX')
    claims.add_argument('--manifest', metavar='FILE', help='use another claims manifest')
    claims.add_argument('--quote', action='store_true', help='print the quoted text and note under each claim')
    claims.set_defaults(handler=_list_claims)

    hilbert = commands.add_parser('hilbert', help='print the Hilbert function of a weighted complete intersection')
    hilbert.add_argument('--weights', type=_int_list, required=True, metavar='W0,W1,...')
    hilbert.add_argument('--degrees', type=_int_list, default=[], metavar='D0,...')
    hilbert.add_argument('--upto', type=int, required=True, metavar='N')
    hilbert.set_defaults(handler=_hilbert)

    fibre = commands.add_parser('fibre', help='print the dimension of the general fibre over the moduli of curves')
    fibre.add_argument('--g1', type=int, required=True)
    fibre.add_argument('--k', type=int, required=True)
    fibre.add_argument('--explain', action='store_true', help='print the labeled terms of the count')
    fibre.set_defaults(handler=_fibre)
    return parser


def _verify(args: argparse.Namespace) -> int:
    manifest = load_manifest(args.manifest) if args.manifest else None
    report = run_claims(args.claims, manifest=manifest, parallel=not args.sequential)
    write_report(report, args.out if args.out else sys.stdout, args.format)
    return EXIT_FAILURES if report.has_failures() else EXIT_OK


def _list_claims(args: argparse.Namespace) -> int:
    claims = select_claims(load_manifest(args.manifest), args.prefixes or None)
    for claim in sorted(claims, key=lambda c: c.id):
        status = f"  [{claim.status_override.value}]" if claim.status_override else ''
        print(f"{claim.id}\t{claim.paper_ref}{status}")
        if args.quote:
            for text in (claim.quote, claim.note):
                if text:
                    print(f"    {text}")
    return EXIT_OK


def _hilbert(args: argparse.Namespace) -> int:
    if args.upto < 0:
        raise ValueError(f"--upto must be non-negative, got {args.upto}")
    hilbert_series = series_ratio(args.degrees, args.weights, args.upto)
    for d, value in enumerate(hilbert_series.coefficients()):
        print(f"{d}\t{value}")
    return EXIT_OK


def _fibre(args: argparse.Namespace) -> int:
    summands = fibre_breakdown(args.g1, args.k)
    print(sum(s.value for s in summands))
    if args.explain:
        for summand in summands:
            print(f"  {summand}")
    return EXIT_OK


def _configure_logging(verbose: int, quiet: bool):
    if quiet:
        level = logging.ERROR
    else:
        level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(name)s:%(levelname)s:%(message)s')


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs the command line interface.

    :param argv: the arguments, defaults to sys.argv[1:]
    :return: 0 when no claim fails, 1 when some claim fails, 2 on usage errors
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose, args.quiet)
    try:
        return args.handler(args)
    except (UnknownClaimError, ManifestError, ValueError, OSError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
