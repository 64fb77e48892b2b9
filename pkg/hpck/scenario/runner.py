# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from hpck.common.errors import HpckError, exit_code_for
from hpck.common.threads import run_threads
from hpck.cycle.conditions import FixedCapacity
from hpck.cycle.solver import simulate
from hpck.environment.tewi import tewi, tewi_inputs_for
from hpck.exergy.analyzer import analyze_exergy
from hpck.properties.property_set import load_property_set

logger = logging.getLogger(__name__)

REPORT_COLUMNS = [
    'refrigerant', 'T_sink_C', 'T_source_C', 'T_evap_C', 'T_cond_C', 'm_ref_gs', 'Q_evap_kW', 'Q_cond_kW',
    'W_comp_kW', 'W_elec_comp_kW', 'W_elec_total_kW', 'VRC_kJm3', 'COP_cycle', 'COP_system', 'COP_carnot',
    'eta_2nd_pct', 'eta_cycle_ex_pct', 'eta_system_ex_pct', 'eta_evap_ex_pct', 'eta_comp_ex_pct',
    'eta_cond_ex_pct', 'eta_tev_ex_pct', 'Edest_evap_W', 'Edest_comp_W', 'Edest_cond_W', 'Edest_tev_W',
    'Edest_cycle_W', 'TEWI_direct_kg', 'TEWI_indirect_kg', 'TEWI_total_kg',
]

FAILURE_COLUMNS = ['refrigerant', 'T_sink_C', 'error', 'message']


@dataclass(frozen=True)
class ResultRow:
    refrigerant: object
    T_sink: float
    mode: str
    conditions: object
    solution: object
    exergy: object
    tewi: object

    def as_record(self):
        """The report columns, in order."""
        cond, sol, ex, tw = self.conditions, self.solution, self.exergy, self.tewi
        eff, dest = ex.efficiencies, ex.destruction
        return dict(zip(REPORT_COLUMNS, [
            self.refrigerant.value, cond.T_sink, cond.T_source, sol.points.T_evap, sol.points.T_cond,
            sol.m_ref * 1000.0, sol.Q_evap, sol.Q_cond, sol.W_comp, sol.W_elec_comp, sol.W_elec_total, sol.VRC,
            sol.COP_cycle, sol.COP_system, sol.COP_carnot,
            eff['second_law'] * 100.0, eff['cycle'] * 100.0, eff['system'] * 100.0,
            eff['evaporator'] * 100.0, eff['compressor'] * 100.0, eff['condenser'] * 100.0, eff['TEV'] * 100.0,
            dest['evaporator'], dest['compressor'], dest['condenser'], dest['TEV'], ex.cycle_destruction,
            tw.direct, tw.indirect, tw.total,
        ]))

    def metrics(self):
        """Report columns plus the quantities used by plot series and reference checks."""
        record = self.as_record()
        sol = self.solution
        record.update({
            'mode': self.mode,
            'T2_C': sol.T2,
            'T8_C': sol.T8,
            'T4_C': sol.points.state4.T,
            'T4s_C': sol.points.state4s.T,
            'P_evap_kPa': sol.points.P_evap,
            'P_cond_kPa': sol.points.P_cond,
            'h_fg_evap_kJkg': sol.points.latent_heat_evap,
            'eta_isen': sol.eta_isen,
            'eta_comp': sol.eta_comp,
            'fixed_capacity': isinstance(self.conditions.mode, FixedCapacity),
        })
        return record


@dataclass(frozen=True)
class PointFailure:
    refrigerant: object
    T_sink: float
    error: BaseException

    @property
    def exit_code(self):
        return exit_code_for(self.error)

    def as_record(self):
        return dict(zip(FAILURE_COLUMNS, [
            self.refrigerant.value, self.T_sink, type(self.error).__name__, str(self.error)]))


@dataclass
class ResultSeries:
    rows: List[ResultRow] = field(default_factory=list)
    failures: List[PointFailure] = field(default_factory=list)
    scenario: Optional[object] = None

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def records(self):
        return [row.as_record() for row in self.rows]

    def metrics(self):
        return [row.metrics() for row in self.rows]

    def solutions(self):
        return {(row.refrigerant, row.T_sink): row.solution for row in self.rows}


def evaluate_point(scenario, refrigerant, T_sink, props):
    """Cycle, exergy and TEWI of one (refrigerant, T_sink) point."""
    cond = scenario.conditions_for(T_sink)
    sol = simulate(cond, props)
    report = analyze_exergy(sol, cond, props)
    impact = tewi(tewi_inputs_for(refrigerant, sol, scenario.tewi))
    return ResultRow(refrigerant, T_sink, scenario.mode, cond, sol, report, impact)


def load_property_sets(refrigerants, data_dir):
    """Returns ({id: PropertySet}, {id: error}) for the refrigerants that loaded and those that did not."""
    loaded, errors = {}, {}
    for rid in refrigerants:
        try:
            loaded[rid] = load_property_set(rid, data_dir)
        except HpckError as e:
            logger.error('%s: %s', rid, e)
            errors[rid] = e
    return loaded, errors


def run_scenario(scenario, data_dir, workers=4, property_sets=None):
    """
    Evaluates every (refrigerant, T_sink) point of a scenario. Points run
    concurrently; the rows come back in refrigerant order, then ascending
    T_sink. A failing point is recorded and does not stop the others.

    property_sets - Already loaded {id: PropertySet}, skips loading from data_dir
    """
    if property_sets is None:
        property_sets, load_errors = load_property_sets(scenario.refrigerants, data_dir)
    else:
        load_errors = {}

    series = ResultSeries(scenario=scenario)
    jobs = []
    slots = []
    for rid, T_sink in scenario.points():
        if rid in load_errors or rid not in property_sets:
            error = load_errors.get(rid) or KeyError('No property set for {}'.format(rid))
            slots.append(PointFailure(rid, T_sink, error))
            continue
        name = '{}@{}'.format(rid.value, T_sink)
        jobs.append((name, evaluate_point, (scenario, rid, T_sink, property_sets[rid])))
        slots.append((rid, T_sink))

    threads = iter(run_threads(jobs, workers))
    for slot in slots:
        if isinstance(slot, PointFailure):
            series.failures.append(slot)
            continue
        thread = next(threads)
        rid, T_sink = slot
        if thread.exc is not None:
            logger.error('%s at T_sink = %s C failed: %s', rid, T_sink, thread.exc)
            series.failures.append(PointFailure(rid, T_sink, thread.exc))
        else:
            series.rows.append(thread.ret)
    logger.info('Evaluated %d point(s), %d failure(s)', len(series.rows), len(series.failures))
    return series
