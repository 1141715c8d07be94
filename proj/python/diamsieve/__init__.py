# Copyright 2026 The diamsieve Authors
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
"""Diameter probabilities of random graphs."""

from ._diamsieve import (
    DomainError,
    GraphFamily,
    PreconditionError,
    ResourceError,
    applicable_bounds,
    bipartite_bounds,
    brute_incidence_stats,
    estimate,
    exact_diameter_prob,
    gnp_asymptotic_bounds,
    gnp_bounds,
    gnp_half_lower,
    graph_diameter,
    incidence_stats,
    kpartite_bounds,
    make_shape,
    meets_target_diameter,
    run_cli,
    sample_edges,
    sieve_bounds,
    solve_threshold_p,
    theorem_bounds,
    threshold_c,
    turan_shape,
    wilson_interval,
)

__all__ = [
    "DomainError",
    "GraphFamily",
    "PreconditionError",
    "ResourceError",
    "applicable_bounds",
    "bipartite_bounds",
    "brute_incidence_stats",
    "estimate",
    "exact_diameter_prob",
    "gnp_asymptotic_bounds",
    "gnp_bounds",
    "gnp_half_lower",
    "graph_diameter",
    "incidence_stats",
    "kpartite_bounds",
    "make_shape",
    "meets_target_diameter",
    "run_cli",
    "sample_edges",
    "sieve_bounds",
    "solve_threshold_p",
    "theorem_bounds",
    "threshold_c",
    "turan_shape",
    "wilson_interval",
]
