# Copyright 2026 The cuntzsys Authors
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
"""Row and dual row contractions on truncated Fock space."""

from ._core import (
    CapacityError,
    ConvergenceError,
    DomainError,
    Error,
    InputError,
    SolveError,
    ando_complete,
    band_min_eigenvalue,
    band_operator,
    bunce_dilate,
    cuntz_isometries,
    depth_sweep,
    dual_positive,
    en_decompose,
    is_dual_row_contraction,
    is_row_contraction,
    joint_numerical_radius,
    lift_tuple,
    numerical_radius,
    phi_apply,
    short_operator,
    theta_embed,
    verify_ando_certificate,
)

__all__ = [
    "CapacityError",
    "ConvergenceError",
    "DomainError",
    "Error",
    "InputError",
    "SolveError",
    "ando_complete",
    "band_min_eigenvalue",
    "band_operator",
    "bunce_dilate",
    "cuntz_isometries",
    "depth_sweep",
    "dual_positive",
    "en_decompose",
    "is_dual_row_contraction",
    "is_row_contraction",
    "joint_numerical_radius",
    "lift_tuple",
    "numerical_radius",
    "phi_apply",
    "short_operator",
    "theta_embed",
    "verify_ando_certificate",
]
