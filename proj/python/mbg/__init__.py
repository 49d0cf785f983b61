# Copyright 2026 The Authors.
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


"""Matroid basis graph toolkit."""

from mbg._mbg import (
    AggregateReport,
    ConditionReport,
    CoverVerdict,
    Error,
    Graph,
    ReconstructionError,
    SetSystem,
    antipodal_quotient,
    basis_graph,
    check_link_condition,
    check_positioning,
    complete_matroid,
    even_subsets,
    format_bases,
    format_graph,
    graphic_matroid,
    is_connected,
    maurer_check,
    parse_bases,
    parse_graph,
    reconstruct_matroid,
    uniform_matroid,
    universal_cover,
    verify_even_delta_matroid,
    verify_matroid,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateReport",
    "ConditionReport",
    "CoverVerdict",
    "Error",
    "Graph",
    "ReconstructionError",
    "SetSystem",
    "antipodal_quotient",
    "basis_graph",
    "check_link_condition",
    "check_positioning",
    "complete_matroid",
    "even_subsets",
    "format_bases",
    "format_graph",
    "graphic_matroid",
    "is_connected",
    "maurer_check",
    "parse_bases",
    "parse_graph",
    "reconstruct_matroid",
    "uniform_matroid",
    "universal_cover",
    "verify_even_delta_matroid",
    "verify_matroid",
]
