# Copyright 2026 The pstlab Authors
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

"""Perfect state transfer analysis for continuous-time quantum walks."""

from ._pstlab import (
    AnalysisRefusal,
    CriticalFailure,
    Graph,
    ParseError,
    PreconditionError,
    SpectralGraph,
    Tolerances,
    __version__,
    pst_time,
    scan_line,
)


def analyze(text, fmt="auto", verify_oracle=False, tolerances=None):
    """Parse a graph and return its JSON report as a dict."""
    graph = Graph.parse(text, fmt)
    sg = SpectralGraph(graph, tolerances if tolerances is not None else Tolerances())
    return sg.report(verify_oracle)


__all__ = [
    "AnalysisRefusal",
    "CriticalFailure",
    "Graph",
    "ParseError",
    "PreconditionError",
    "SpectralGraph",
    "Tolerances",
    "__version__",
    "analyze",
    "pst_time",
    "scan_line",
]
