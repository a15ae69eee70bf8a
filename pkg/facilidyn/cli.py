import os
import sys
from argparse import ArgumentParser, Namespace
from functools import partial
from typing import List, Optional

import numpy as np

from facilidyn.checks import run_suite, suite
from facilidyn.localform import bt_curves, nondegeneracy_report
from facilidyn.model import Params, State, thresholds
from facilidyn.polyalg import to_rat
from facilidyn.regions import classify, equilibria, verify_census
from facilidyn.simulate import Axis, classify_orbit, find_limit_cycle, integrate, sweep, to_json, write_curves_csv, \
    write_equilibria_csv, write_json, write_orbit_csv, write_phase_portrait_svg, write_sweep_csv
from facilidyn.utils import ParameterError, logger, seed_everything, set_verbosity

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2
FORMATS = ('json', 'csv', 'svg')


def _add_params(ap: ArgumentParser, alpha: bool = True, sigma: bool = True):
    ap.add_argument('--h', type=float, required=True, help='Handling time')
    ap.add_argument('--k', type=float, required=True, help='Prey carrying capacity')
    if sigma:
        ap.add_argument('--sigma', type=float, required=True, help='Relative prey growth rate')
    if alpha:
        ap.add_argument('--alpha', type=float, required=True, help='Cooperation intensity')


def _params(args: Namespace) -> Params:
    return Params(args.h, args.k, args.sigma, args.alpha).validate()


def _format(args: Namespace, default: str = 'json') -> str:
    if args.format is not None:
        return args.format
    if args.out:
        suffix = os.path.splitext(args.out)[1].lstrip('.').lower()
        if suffix in FORMATS:
            return suffix
    return default


def _require_out(args: Namespace, fmt: str):
    if not args.out:
        raise ParameterError(f'--out is required for {fmt} output')


def _emit_json(args: Namespace, obj):
    if args.out:
        write_json(obj, args.out)
        logger.info(f'wrote {args.out}')
    else:
        print(to_json(obj))


def cmd_classify(args: Namespace) -> int:
    p = _params(args)
    label = classify(p)
    census = verify_census(p)
    report = {
        'params': p.to_dict(),
        'label': label.name,
        'boundary': label.boundary,
        'interior_equilibria': sum(e['role'] not in ('E0', 'Ek') for e in census['computed']),
        'census_match': census['match'],
        'thresholds': thresholds(p.h, p.k, p.sigma).to_dict() if p.h < 1 else None,
    }
    _emit_json(args, report)
    return EXIT_OK


def cmd_equilibria(args: Namespace) -> int:
    p = _params(args)
    eqs = equilibria(p)
    fmt = _format(args)
    if fmt == 'csv':
        _require_out(args, fmt)
        write_equilibria_csv(eqs, args.out)
    else:
        _emit_json(args, {'params': p.to_dict(), 'equilibria': [e.to_dict() for e in eqs]})
    return EXIT_OK


def cmd_thresholds(args: Namespace) -> int:
    _emit_json(args, thresholds(args.h, args.k, args.sigma).to_dict())
    return EXIT_OK


def cmd_nondegeneracy(args: Namespace) -> int:
    try:
        h = to_rat(args.h)
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f'h must be a rational number, got {args.h!r}')
    _emit_json(args, nondegeneracy_report(h))
    return EXIT_OK


def cmd_simulate(args: Namespace) -> int:
    p = _params(args)
    s0 = State(args.x0, args.y0).validate()
    orbit = integrate(p, s0, args.t, dense=True)
    eqs = equilibria(p)
    fmt = _format(args, default='csv')
    if fmt == 'csv':
        _require_out(args, fmt)
        write_orbit_csv(orbit, args.out)
    elif fmt == 'svg':
        _require_out(args, fmt)
        cycle = find_limit_cycle(p) if args.cycle else None
        write_phase_portrait_svg(args.out, [orbit.states], eqs, [] if cycle is None else [cycle.points],
                                 title=f'h={p.h:g}, k={p.k:g}, sigma={p.sigma:g}, alpha={p.alpha:g}')
    else:
        _emit_json(args, {
            'params': p.to_dict(),
            'classification': str(classify_orbit(orbit, eqs)),
            't': orbit.times, 'x': orbit.states[:, 0], 'y': orbit.states[:, 1],
        })
    logger.debug(f'orbit of {len(orbit)} points, {orbit.message}')
    return EXIT_OK


def cmd_sweep(args: Namespace) -> int:
    base = Params(args.h, args.k, args.sigma_min, args.alpha_min).validate()
    records = sweep(base, Axis('sigma', args.sigma_min, args.sigma_max, args.n_sigma),
                    Axis('alpha', args.alpha_min, args.alpha_max, args.n_alpha),
                    cycles=not args.no_cycles, transient=args.transient, workers=args.workers)
    fmt = _format(args, default='csv')
    if fmt == 'csv':
        _require_out(args, fmt)
        write_sweep_csv(records, args.out)
    else:
        _emit_json(args, [r.row() for r in records])
    return EXIT_OK


def cmd_curves(args: Namespace) -> int:
    curves = bt_curves(args.h, args.k, (args.sigma_min, args.sigma_max), args.n)
    fmt = _format(args, default='csv')
    if fmt == 'csv':
        _require_out(args, fmt)
        write_curves_csv(curves, args.out)
    else:
        _emit_json(args, {
            'sigma2': curves.sigma2, 'alpha_star': curves.alpha_star,
            'rows': [dict(zip(('sigma', 'alpha_sn', 'alpha_h', 'alpha_hl'),
                              (None if np.isnan(c) else c for c in row))) for row in curves.rows()],
        })
    return EXIT_OK


def cmd_verify(args: Namespace) -> int:
    reports = run_suite(suite(quick=args.quick, seed=args.seed))
    for r in reports:
        status = 'PASS' if r['passed'] else 'FAIL'
        print(f'{status} {r["name"]:<22} {r["seconds"]:8.2f}s  measured={to_json(r["measured"], indent=None)}')
        if not r['passed']:
            print(f'     expected={to_json(r["expected"], indent=None)}')
    if args.out:
        write_json(reports, args.out)
    return EXIT_OK if all(r['passed'] for r in reports) else EXIT_FAILED


def build_parser() -> ArgumentParser:
    ap = ArgumentParser(prog='facilidyn', description='Dynamics of a predator-prey model with cooperative hunting')

    # Runtime options, accepted after any subcommand
    common = ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', default=False, action='store_true', help='Increase verbosity')
    common.add_argument('--seed', type=int, default=0, help='Random seed')
    common.add_argument('--tol', type=float, default=None, help='Boundary band and classification tolerance')
    common.add_argument('--out', type=str, default=None, help='Output file')
    common.add_argument('--format', type=str, choices=FORMATS, default=None, help='Output format')
    sub = ap.add_subparsers(dest='command', required=True)
    add = partial(sub.add_parser, parents=[common])

    sp = add('classify', help='Partition cell and equilibrium census')
    _add_params(sp)
    sp.set_defaults(func=cmd_classify)

    sp = add('equilibria', help='Equilibria and their linear types')
    _add_params(sp)
    sp.set_defaults(func=cmd_equilibria)

    sp = add('thresholds', help='Closed-form thresholds at fixed (h, k, sigma)')
    _add_params(sp, alpha=False)
    sp.set_defaults(func=cmd_thresholds)

    sp = add('nondegeneracy', help='Root-count certificates at a rational h')
    sp.add_argument('--h', type=str, required=True, help='Handling time, e.g. 1/2')
    sp.set_defaults(func=cmd_nondegeneracy)

    sp = add('simulate', help='Integrate one orbit')
    _add_params(sp)
    sp.add_argument('--x0', type=float, required=True, help='Initial prey density')
    sp.add_argument('--y0', type=float, required=True, help='Initial predator density')
    sp.add_argument('--t', type=float, default=500.0, help='Final time')
    sp.add_argument('--cycle', default=False, action='store_true', help='Overlay the limit cycle (svg)')
    sp.set_defaults(func=cmd_simulate)

    sp = add('sweep', help='Census and cycles on a (sigma, alpha) grid')
    _add_params(sp, alpha=False, sigma=False)
    sp.add_argument('--sigma-min', type=float, required=True)
    sp.add_argument('--sigma-max', type=float, required=True)
    sp.add_argument('--alpha-min', type=float, required=True)
    sp.add_argument('--alpha-max', type=float, required=True)
    sp.add_argument('--n-sigma', type=int, default=5)
    sp.add_argument('--n-alpha', type=int, default=5)
    sp.add_argument('--transient', type=float, default=500.0)
    sp.add_argument('--no-cycles', default=False, action='store_true', help='Skip cycle detection')
    sp.add_argument('--workers', type=int, default=1, help='Processes for the grid points, 0 for every core')
    sp.set_defaults(func=cmd_sweep)

    sp = add('curves', help='Saddle-node, Hopf and homoclinic curves near the cusp')
    _add_params(sp, alpha=False, sigma=False)
    sp.add_argument('--sigma-min', type=float, required=True)
    sp.add_argument('--sigma-max', type=float, required=True)
    sp.add_argument('--n', type=int, default=100)
    sp.set_defaults(func=cmd_curves)

    sp = add('verify', help='Run the reproduction suite')
    sp.add_argument('--quick', default=False, action='store_true', help='Census property on 100 draws only')
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    set_verbosity(args.verbose)
    seed_everything(args.seed)
    if args.tol is not None:
        if not args.tol > 0:
            logger.error(f'--tol must be positive, got {args.tol}')
            return EXIT_INVALID
        os.environ['FACILIDYN_TOL'] = repr(args.tol)
    try:
        return args.func(args)
    except ParameterError as e:
        logger.error(e)
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
