# Copyright 2026 The spinrsc Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Remote mixed-state creation maps for short XY spin chains."""

from ._core import (
    ChainSpec,
    DensityGrid,
    ReceiverState,
    ScanConfig,
    absolutely_unavailable,
    analytic_boundary,
    boundary,
    choose_t0,
    combined_z,
    creatable_area,
    density,
    density_max,
    evaluate,
    receiver_params,
    scan3,
    scan4,
    spectral_period,
    su2,
    su4_full,
    su4_reduced,
    transfer_map,
    xy_hamiltonian,
)

__all__ = [
    "ChainSpec",
    "DensityGrid",
    "ReceiverState",
    "ScanConfig",
    "absolutely_unavailable",
    "analytic_boundary",
    "boundary",
    "choose_t0",
    "combined_z",
    "creatable_area",
    "density",
    "density_max",
    "evaluate",
    "receiver_params",
    "scan3",
    "scan4",
    "spectral_period",
    "su2",
    "su4_full",
    "su4_reduced",
    "transfer_map",
    "xy_hamiltonian",
]

__version__ = "0.1.0"
