# Copyright 2026 The lqc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Measures and enhancement regions for locally catalysed two-mode squeezed vacuum."""

from ._lqc import (
    ConvergenceError,
    ValidationError,
    cf_fidelity,
    entropy,
    epr,
    measure,
    oracle_spectrum,
    schmidt_spectrum,
    success_probability,
    sweep,
    t_range,
    threshold,
    tmsvs_entropy,
    tmsvs_epr,
    tmsvs_fidelity,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "ValidationError",
    "cf_fidelity",
    "entropy",
    "epr",
    "measure",
    "oracle_spectrum",
    "schmidt_spectrum",
    "success_probability",
    "sweep",
    "t_range",
    "threshold",
    "tmsvs_entropy",
    "tmsvs_epr",
    "tmsvs_fidelity",
]
