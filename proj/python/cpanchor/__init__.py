# Copyright 2026 The cpanchor Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python bindings for the cpanchor C++ library."""

from cpanchor._core import (
    Channel,
    CpanchorError,
    Tolerance,
    anchor_projections,
    apply,
    choi,
    choi_to_kraus,
    classify_qubit,
    commutant,
    compress_filter_bank,
    dual_apply,
    filter_unitarity_defect,
    find_intertwiner,
    fixed_point_space,
    liouville,
    map_properties,
    phi_infinity,
    random_channel,
    run_cli,
    top_eigenspace_check,
)

__all__ = [
    "Channel",
    "CpanchorError",
    "Tolerance",
    "anchor_projections",
    "apply",
    "choi",
    "choi_to_kraus",
    "classify_qubit",
    "commutant",
    "compress_filter_bank",
    "dual_apply",
    "filter_unitarity_defect",
    "find_intertwiner",
    "fixed_point_space",
    "liouville",
    "map_properties",
    "phi_infinity",
    "random_channel",
    "run_cli",
    "top_eigenspace_check",
]
