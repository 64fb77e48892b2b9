#!/usr/bin/env python
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
hpck command line.

Data (CSV, JSON, plot series) goes to stdout or --out, everything else to
stderr. Exit codes: 0 success, 1 validation checks failed, 2 usage or input
error, 3 property data error.
"""
import argparse
import logging
import os
import sys
from dataclasses import replace

import hpck
from hpck import config as hpck_config
from hpck.common.errors import (EXIT_DATA, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION_FAILED, HpckError, InputError,
                                exit_code_for)
from hpck.common.utils import merge_conf, parse_range, read_config, write_config
from hpck.cycle.conditions import DEFAULTS
from hpck.environment import tewi as tewi_model
from hpck.environment.metadata import refrigerant_metadata, use_metadata_csv
from hpck.properties.generate import generate_tables
from hpck.properties.property_set import (latent_heat, load_property_set, saturated_state, saturation_pressure,
                                          superheated_state)
from hpck.properties.refrigerants import ALL_REFRIGERANTS, RefrigerantId, parse_refrigerants
from hpck.scenario.runner import load_property_sets, run_scenario
from hpck.scenario.scenario import load_scenario, scenario_from_dict
from hpck.scenario.validate import CHECK_COLUMNS, module_defaults, validate_against_reference
from hpck.storage.plot_data import SERIES, normalized_series
from hpck.storage.storage import emit_report, storage_defaults

logger = logging.getLogger(__name__)

DEFAULTCONF = {
    'prop-data': None,
    'metadata-csv': None,
    'workers': 4,
    'format': 'csv',
    'T0': DEFAULTS['T0'],
    'P0': DEFAULTS['P0'],
    'htf_cp': DEFAULTS['htf_cp'],
    'htf_rho': DEFAULTS['htf_rho'],
    'drive_efficiency': DEFAULTS['drive_efficiency'],
}

# [main] keys passed to the operating conditions
CONDITION_KEYS = ('T0', 'P0', 'htf_cp', 'htf_rho', 'drive_efficiency')

PROPS_COLUMNS = ['refrigerant', 'T_C', 'P_kPa', 'hf_kJkg', 'hg_kJkg', 'hfg_kJkg', 'sf_kJkgK', 'sg_kJkgK',
                 'rhof_kgm3', 'rhog_kgm3']
SUPERHEAT_COLUMNS = ['refrigerant', 'P_kPa', 'T_C', 'h_kJkg', 's_kJkgK', 'rho_kgm3', 'phase']
TEWI_COLUMNS = ['refrigerant', 'gwp', 'charge_m', 'leak_rate_L', 'life_n', 'recovery_alpha', 'annual_energy_E',
                'emission_factor_beta', 'TEWI_direct_kg', 'TEWI_indirect_kg', 'TEWI_total_kg']


class UsageError(InputError):
    pass


class _Run(object):
    """Resolved configuration of one invocation."""

    def __init__(self, args, stdout):
        self.args = args
        self.stdout = stdout
        self.config_path = hpck_config.determine_configuration_path(args.config)
        self.config = read_config(self.config_path)
        self.main = merge_conf(DEFAULTCONF, self.config.get('main'))
        self.tewi = merge_conf(tewi_model.DEFAULTCONF, self.config.get('tewi'))
        self.workers = args.workers or int(self.main['workers'])
        self.format = args.format or self.main['format']
        self.out = args.out or '-'
        if self.main.get('metadata-csv'):
            use_metadata_csv(self.main['metadata-csv'])

    @property
    def data_dir(self):
        return hpck_config.determine_prop_data_dir(self.args.prop_data, self.main)

    def overrides(self, document=None):
        """Condition overrides: [main] values, then the scenario document's, then --set and the mode flags."""
        overrides = {k: float(self.main[k]) for k in CONDITION_KEYS if float(self.main[k]) != DEFAULTS[k]}
        overrides.update(document or {})
        for item in getattr(self.args, 'set', None) or []:
            key, sep, value = item.partition('=')
            if not sep:
                raise UsageError('--set expects KEY=VALUE, got {!r}'.format(item))
            try:
                overrides[key.strip()] = float(value)
            except ValueError:
                raise UsageError('--set {} needs a number, got {!r}'.format(key.strip(), value))
        if getattr(self.args, 'q_cond', None) is not None:
            overrides['Q_cond'] = self.args.q_cond
        if getattr(self.args, 'w_elec', None) is not None:
            overrides['W_elec_comp'] = self.args.w_elec
        return overrides

    def emit(self, results, columns=None, series=None, baseline=None, format=None, path=None):
        emit_report(results, format=format or self.format, path=path or self.out, columns=columns, series=series,
                    baseline=baseline, config=self.config, stream=self.stdout)


def _report_failures(series):
    """Logs failed points; returns the exit code they imply."""
    code = EXIT_OK
    for failure in series.failures:
        logger.error('%s at T_sink = %s C: %s', failure.refrigerant, failure.T_sink, failure.error)
        code = max(code, failure.exit_code)
    return code


def _run_document(run, document):
    scenario = scenario_from_dict(document)
    return run_scenario(scenario, run.data_dir, workers=run.workers)


def _emit_series(run, series, plot=None, baseline=None):
    if not series.rows:
        return _report_failures(series) or EXIT_USAGE
    if plot:
        run.emit(series, format='plot-data', series=plot, baseline=baseline)
    elif baseline:
        rows, columns = normalized_series(series.metrics(), baseline)
        run.emit(rows, columns=columns)
    else:
        run.emit(series)
    return _report_failures(series)


def _simulate(run):
    args = run.args
    mode = 'regression_sweep' if args.regressions else 'design_point'
    document = {
        'refrigerants': [args.refrigerant],
        'mode': mode,
        't_sink': args.t_sink,
        'overrides': run.overrides(),
        'tewi': run.tewi,
    }
    return _emit_series(run, _run_document(run, document))


def _sweep(run):
    args = run.args
    document = {
        'refrigerants': args.refrigerant or [RefrigerantId.R134A.value],
        'mode': 'regression_sweep',
        't_sink': args.t_sink,
        'overrides': run.overrides(),
        'tewi': run.tewi,
    }
    return _emit_series(run, _run_document(run, document), plot=args.plot)


def _compare(run):
    args = run.args
    if args.all and args.refrigerant:
        raise UsageError('Give either --all or --refrigerant')
    refrigerants = [r.value for r in ALL_REFRIGERANTS] if (args.all or not args.refrigerant) else args.refrigerant
    document = {
        'refrigerants': refrigerants,
        'mode': 'regression_sweep' if args.regressions else 'design_point',
        'overrides': run.overrides(),
        'tewi': run.tewi,
    }
    if args.t_sink is not None:
        document['t_sink'] = args.t_sink
    return _emit_series(run, _run_document(run, document), plot=args.plot, baseline=args.baseline)


def _tewi(run):
    args = run.args
    params = dict(run.tewi)
    for key, value in (('charge_m', args.charge), ('leak_rate_L', args.leak_rate), ('life_n', args.life),
                       ('recovery_alpha', args.recovery), ('emission_factor_beta', args.beta)):
        if value is not None:
            params[key] = value
    if args.gwp is not None:
        name, gwp = '', args.gwp
    elif args.refrigerant:
        rid = RefrigerantId.parse(args.refrigerant)
        name, gwp = rid.value, refrigerant_metadata(rid).gwp_100yr
    else:
        raise UsageError('tewi needs --refrigerant or --gwp')
    params = {k: float(v) for k, v in params.items()}
    inputs = tewi_model.TewiInputs(
        gwp=gwp, charge_m=params['charge_m'], leak_rate_L=params['leak_rate_L'], life_n=params['life_n'],
        recovery_alpha=params['recovery_alpha'], annual_energy_E=args.energy,
        emission_factor_beta=params['emission_factor_beta'])
    result = tewi_model.tewi(inputs)
    record = dict(zip(TEWI_COLUMNS, [
        name, inputs.gwp, inputs.charge_m, inputs.leak_rate_L, inputs.life_n, inputs.recovery_alpha,
        inputs.annual_energy_E, inputs.emission_factor_beta, result.direct, result.indirect, result.total]))
    run.emit([record], columns=TEWI_COLUMNS)
    return EXIT_OK


def _validate(run):
    property_sets, errors = load_property_sets(ALL_REFRIGERANTS, run.data_dir)
    if errors:
        raise next(iter(errors.values()))
    sweep_refrigerant = run.config.get('validation_bands', {}).get('refrigerant', RefrigerantId.R134A.value)
    results = []
    for document in ({'refrigerants': [r.value for r in ALL_REFRIGERANTS], 'mode': 'design_point'},
                     {'refrigerants': [sweep_refrigerant], 'mode': 'regression_sweep'}):
        document['tewi'] = run.tewi
        series = run_scenario(scenario_from_dict(document), run.data_dir, workers=run.workers,
                              property_sets=property_sets)
        if series.failures:
            _report_failures(series)
        results.append(series)
    report = validate_against_reference(results, tolerances=run.config, property_sets=property_sets,
                                        workers=run.workers)
    run.emit(report.records(), columns=CHECK_COLUMNS)
    for check in report.failures():
        logger.error('Check failed: %s (expected %s, computed %s)', check.name, check.expected, check.computed)
    if report.passed:
        print('all checks passed')
        return EXIT_OK
    print('{failed} of {total} checks failed'.format(**report.summary))
    return EXIT_VALIDATION_FAILED


def _props(run):
    args = run.args
    rid = RefrigerantId.parse(args.refrigerant)
    ps = load_property_set(rid, run.data_dir)
    if args.p is not None:
        state = superheated_state(ps, args.p, args.t)
        record = dict(zip(SUPERHEAT_COLUMNS, [
            rid.value, state.P, state.T, state.h, state.s, state.rho, state.phase.name.lower()]))
        run.emit([record], columns=SUPERHEAT_COLUMNS)
        return EXIT_OK
    liquid = saturated_state(ps, args.t, 'liquid')
    vapor = saturated_state(ps, args.t, 'vapor')
    record = dict(zip(PROPS_COLUMNS, [
        rid.value, args.t, saturation_pressure(ps, args.t), liquid.h, vapor.h, latent_heat(ps, args.t),
        liquid.s, vapor.s, liquid.rho, vapor.rho]))
    run.emit([record], columns=PROPS_COLUMNS)
    return EXIT_OK


def _run(run):
    args = run.args
    scenario = load_scenario(args.scenario)
    scenario = replace(scenario, overrides=run.overrides(scenario.overrides), tewi=merge_conf(run.tewi, scenario.tewi))
    series = run_scenario(scenario, run.data_dir, workers=run.workers)
    output = scenario.output
    format = args.format or output.format
    path = args.out or output.path
    if not series.rows:
        return _report_failures(series) or EXIT_USAGE
    if format == 'plot-data':
        run.emit(series, format=format, path=path, series=output.series, baseline=output.baseline)
    elif output.baseline:
        rows, columns = normalized_series(series.metrics(), output.baseline)
        run.emit(rows, columns=columns, format=format, path=path)
    else:
        run.emit(series, format=format, path=path)
    return _report_failures(series)


def _init(run):
    path = run.config_path
    sections = {}
    if os.path.isfile(path) and not run.args.force:
        logger.warning('%s already exists, only missing sections are added (use --force to overwrite)', path)
        sections.update(run.config)
    defaults = {'main': dict(DEFAULTCONF), 'tewi': dict(tewi_model.DEFAULTCONF)}
    defaults.update(storage_defaults())
    defaults.update(module_defaults())
    for name, conf in defaults.items():
        if name not in sections:
            sections[name] = conf
    write_config(path, sections)
    print('Configuration file initialized at', path)
    return EXIT_OK


def _tables(run):
    args = run.args
    refrigerants = parse_refrigerants(args.refrigerant) if args.refrigerant else ALL_REFRIGERANTS
    out_dir = args.out or run.data_dir
    result = generate_tables(refrigerants, out_dir, step=args.step, superheat_step=args.superheat_step)
    for path in result.paths:
        logger.info('Wrote %s', path)
    names = ', '.join(rid.value for rid in result.refrigerants) or 'no refrigerant'
    print('Wrote tables for {} to {}'.format(names, out_dir))
    if result.failures:
        for rid, error in result.failures.items():
            logger.error('%s: %s', rid, error)
        return EXIT_DATA
    return EXIT_OK


COMMANDS = {
    'simulate': _simulate,
    'sweep': _sweep,
    'compare': _compare,
    'tewi': _tewi,
    'validate': _validate,
    'props': _props,
    'run': _run,
    'init': _init,
    'tables': _tables,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '{}: error: {}\n'.format(self.prog, message))


def _common_args(default=None):
    """Flags every subcommand takes. Subcommands pass SUPPRESS so they do not reset flags given before them."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-c', '--config', default=default, help='The config file to use')
    common.add_argument('-f', '--format', choices=('csv', 'json', 'plot-data'), default=default,
                        help='Output format (default from the config, csv)')
    common.add_argument('-o', '--out', metavar='PATH', default=default, help="Output file, '-' for stdout")
    common.add_argument('--prop-data', metavar='DIR', default=default,
                        help='Property table directory (else ${}, then the config)'.format(
                            hpck_config.PROP_DATA_ENV))
    common.add_argument('-w', '--workers', type=int, default=default, help='Concurrent points')
    common.add_argument('-v', '--verbose', action='store_true',
                        default=False if default is None else default)
    return common


def _conditions_args(parser):
    parser.add_argument('--set', action='append', metavar='KEY=VALUE',
                        help='Override an operating condition, e.g. T_SH=5')
    parser.add_argument('--q-cond', type=float, default=None, help='Fixed condenser capacity, kW')
    parser.add_argument('--w-elec', type=float, default=None, help='Given compressor electrical power, kW')


def _t_sink_range(text):
    try:
        parse_range(text)
    except HpckError as e:
        raise argparse.ArgumentTypeError(str(e))
    return text


def _parse_args(argv=None):
    desc = 'hpck v{} - Heat pump cycle, exergy and TEWI analysis'
    parser = _Parser(description=desc.format(hpck.__version__), parents=[_common_args()])
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True
    common = _common_args(argparse.SUPPRESS)

    p = sub.add_parser('simulate', parents=[common], help='Single operating point')
    p.add_argument('-r', '--refrigerant', required=True)
    p.add_argument('--t-sink', type=float, default=50.0, help='Sink temperature, C')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--design-point', action='store_true', help='Screening design point (default)')
    group.add_argument('--regressions', action='store_true', help='Conditions from the measured-data regressions')
    _conditions_args(p)

    p = sub.add_parser('sweep', parents=[common], help='Regression sweep over sink temperatures')
    p.add_argument('-r', '--refrigerant', action='append')
    p.add_argument('--t-sink', type=_t_sink_range, default='40:50:1', help='start:stop:step, C')
    p.add_argument('--plot', choices=sorted(SERIES), default=None, help='Emit a plot series instead')
    _conditions_args(p)

    p = sub.add_parser('compare', parents=[common], help='Compare refrigerants')
    p.add_argument('-a', '--all', action='store_true', help='All six refrigerants')
    p.add_argument('-r', '--refrigerant', action='append')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--design-point', action='store_true', help='Screening design point (default)')
    group.add_argument('--regressions', action='store_true', help='Conditions from the measured-data regressions')
    p.add_argument('--t-sink', type=_t_sink_range, default=None, help='Sink temperature or start:stop:step, C')
    p.add_argument('--baseline', default=None, help='Emit metrics relative to this refrigerant')
    p.add_argument('--plot', choices=sorted(SERIES), default=None, help='Emit a plot series instead')
    _conditions_args(p)

    p = sub.add_parser('tewi', parents=[common], help='Total equivalent warming impact')
    p.add_argument('-r', '--refrigerant', default=None)
    p.add_argument('--gwp', type=float, default=None, help='GWP instead of a refrigerant')
    p.add_argument('--charge', type=float, default=None, help='Refrigerant charge, kg')
    p.add_argument('--leak-rate', type=float, default=None, help='Annual leakage, %%')
    p.add_argument('--life', type=float, default=None, help='Operating life, years')
    p.add_argument('--recovery', type=float, default=None, help='Recovery at end of life, %%')
    p.add_argument('--energy', type=float, default=0.0, help='Annual energy consumption, kWh')
    p.add_argument('--beta', type=float, default=None, help='Emission factor, kg CO2/kWh')

    sub.add_parser('validate', parents=[common], help='Run the reference checks')

    p = sub.add_parser('props', parents=[common], help='Saturation or superheated properties')
    p.add_argument('-r', '--refrigerant', required=True)
    p.add_argument('-t', '--t', type=float, required=True, help='Temperature, C')
    p.add_argument('-p', '--p', type=float, default=None, help='Pressure, kPa (superheated state)')

    p = sub.add_parser('run', parents=[common], help='Execute a scenario file')
    p.add_argument('-s', '--scenario', required=True)
    _conditions_args(p)

    p = sub.add_parser('init', parents=[common], help='Write the default config file')
    p.add_argument('--force', action='store_true', help='Overwrite an existing config file')

    p = sub.add_parser('tables', parents=[common], help='Generate property tables with CoolProp into --out')
    p.add_argument('-r', '--refrigerant', action='append')
    p.add_argument('--step', type=float, default=0.5, help='Saturation table spacing, K')
    p.add_argument('--superheat-step', type=float, default=2.0, help='Superheat pressure spacing, K of T_sat')

    return parser.parse_args(argv)


def main(argv=None):
    # Force all prints to go to stderr
    stdout = sys.stdout
    sys.stdout = sys.stderr
    try:
        try:
            args = _parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE
        logging.basicConfig(stream=sys.stderr, format='%(levelname)s: %(message)s',
                            level=logging.INFO if args.verbose else logging.WARNING, force=True)
        logging.captureWarnings(True)
        try:
            return COMMANDS[args.command](_Run(args, stdout))
        except HpckError as e:
            logger.error('%s', e)
            return exit_code_for(e)
        except Exception as e:
            logger.error('Unexpected error: %s: %s', type(e).__name__, e)
            logger.debug('Traceback', exc_info=True)
            return EXIT_DATA
    finally:
        # Return stdout to previous state
        sys.stdout = stdout


def _main():
    sys.exit(main())


if __name__ == '__main__':
    _main()
