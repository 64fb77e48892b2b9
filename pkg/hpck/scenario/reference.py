# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Published reference results the model is checked against.

design-point screening: T_sink 50, T_source 13, T_SH 8, T_SC 2, T_EAP 2,
T_CAP 2 C with Q_cond = 5 kW. Validation bands: regression conditions over
T_sink 40..50 C with the measured compressor power.
"""
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Tuple

from hpck.properties.refrigerants import ALL_REFRIGERANTS, RefrigerantId as R


@dataclass(frozen=True)
class DesignResultRow:
    COP_cycle: float
    COP_system: float
    eta_2nd_pct: float
    eta_cycle_ex_pct: float
    eta_system_ex_pct: float
    eta_evap_ex_pct: float
    eta_comp_ex_pct: float
    eta_cond_ex_pct: float
    eta_tev_ex_pct: float


@dataclass(frozen=True)
class ReferenceDataset:
    design_results: Mapping[R, DesignResultRow]
    # Model results over the sweep, [low, high]
    validation_bands: Mapping[str, Tuple[float, float]]
    # Measurements over the same sweep
    measured_ranges: Mapping[str, Tuple[float, float]]
    measured_model_difference_pct: float
    screening: Mapping[str, float]
    component_ranges: Mapping[str, Tuple[float, float]]
    system_ranges: Mapping[str, Tuple[float, float]]
    tev_share_pct: Tuple[float, float]
    tewi_indirect_t: Mapping[R, float]
    tewi_direct_t: Mapping[R, float]
    cop_order: Tuple[R, ...] = ALL_REFRIGERANTS
    destruction_order: Tuple[str, ...] = ('compressor', 'TEV', 'evaporator', 'condenser')
    COP_carnot: float = 8.734
    emission_factor_beta: float = 0.8
    sweep_range: Tuple[float, float] = field(default=(40.0, 50.0))


REFERENCE = ReferenceDataset(
    design_results=MappingProxyType({
        R.R152A: DesignResultRow(3.09, 2.91, 35.3, 32.1, 30.2, 53.6, 58.8, 94.9, 85.7),
        R.R134A: DesignResultRow(2.97, 2.80, 34.0, 30.9, 29.1, 53.6, 58.5, 97.3, 83.5),
        R.R1234ZE_E: DesignResultRow(2.96, 2.79, 33.8, 30.7, 29.0, 52.5, 58.3, 99.1, 79.7),
        R.R450A: DesignResultRow(2.89, 2.73, 33.1, 30.0, 28.4, 50.4, 58.4, 97.6, 81.3),
        R.R513A: DesignResultRow(2.88, 2.72, 32.9, 29.9, 28.3, 53.6, 58.4, 98.3, 83.1),
        R.R1234YF: DesignResultRow(2.83, 2.67, 32.3, 29.4, 27.8, 53.2, 58.3, 99.3, 82.1),
    }),
    validation_bands=MappingProxyType({
        'Q_cond_kW': (3.88, 4.26),
        'Q_evap_kW': (2.86, 3.37),
        'COP_cycle': (2.42, 3.20),
        'COP_system': (2.28, 2.98),
    }),
    measured_ranges=MappingProxyType({
        'Q_cond_kW': (3.59, 3.96),
        'Q_evap_kW': (2.73, 3.31),
        'COP_cycle': (2.24, 2.97),
        'COP_system': (2.11, 2.76),
        'W_elec_comp_kW': (1.33, 1.61),
        'T_source_C': (12.45, 13.83),
    }),
    measured_model_difference_pct=6.2,
    screening=MappingProxyType({
        'R152a_m_ref_gs': 17.5,
        'R152a_VRC_kJm3': 1949.0,
        'R450A_m_ref_gs': 31.4,
        'R1234ze(E)_m_ref_gs': 32.0,
        'Edest_cycle_min_W': 965.0,
        'Edest_cycle_max_W': 1119.0,
    }),
    component_ranges=MappingProxyType({
        'eta_cond_ex_pct': (94.9, 99.3),
        'eta_evap_ex_pct': (50.4, 53.6),
        'eta_comp_ex_pct': (58.3, 58.8),
        'eta_tev_ex_pct': (79.7, 85.7),
    }),
    system_ranges=MappingProxyType({
        'eta_2nd_pct': (32.3, 35.3),
        'eta_cycle_ex_pct': (29.4, 32.1),
        'eta_system_ex_pct': (27.8, 30.2),
    }),
    tev_share_pct=(16.0, 23.0),
    tewi_indirect_t=MappingProxyType({R.R152A: 31.64, R.R1234YF: 34.32}),
    tewi_direct_t=MappingProxyType({R.R513A: 1.14, R.R450A: 0.84, R.R152A: 0.12, R.R1234YF: 0.01, R.R1234ZE_E: 0.01}),
)
