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

import math

import numpy as np
import pytest

import pstlab

Q3 = "Gr`HOk"
PETERSEN = "IheA@GUAo"


def walk_fidelity(adjacency, u, v, t):
    # Independent reference: U(t) = exp(itA) from numpy's symmetric eigensolver.
    w, q = np.linalg.eigh(adjacency)
    u_t = q @ np.diag(np.exp(1j * t * w)) @ q.T
    return abs(u_t[v, u])


def test_parse_and_encode_round_trip():
    g = pstlab.Graph.parse(Q3)
    assert g.order == 8
    assert g.edge_count == 12
    assert g.graph6() == Q3
    assert pstlab.Graph.parse(g.graph6()).edges() == g.edges()


def test_edge_list_labels():
    g = pstlab.Graph.parse("a b\nb c\n", "edges")
    assert g.labels == ["a", "b", "c"]
    assert g.find_label("c") == 2
    assert g.find_label("z") is None


def test_parse_error_is_value_error():
    with pytest.raises(pstlab.ParseError):
        pstlab.Graph.parse("B`", "graph6")
    with pytest.raises(ValueError):
        pstlab.Graph.parse("a b c", "edges")


def test_disconnected_graph_refused():
    g = pstlab.Graph.parse("Cc")
    assert not g.is_connected()
    with pytest.raises(pstlab.PreconditionError):
        pstlab.SpectralGraph(g)


def test_spectrum_matches_numpy():
    g = pstlab.Graph.parse(PETERSEN)
    sg = pstlab.SpectralGraph(g)
    reference = np.linalg.eigvalsh(g.adjacency_matrix())
    expanded = sorted(
        x for x, m in zip(sg.eigenvalues, sg.multiplicities) for _ in range(m)
    )
    assert np.allclose(expanded, reference, atol=1e-10)
    assert sg.spectrum_kind == "exact-integer"


def test_characteristic_polynomial_of_c4():
    sg = pstlab.SpectralGraph(pstlab.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert sg.characteristic_polynomial() == [0, 0, -4, 0, 1]


def test_projectors_sum_to_identity():
    sg = pstlab.SpectralGraph(pstlab.Graph.parse(Q3))
    total = sum(sg.projector(r) for r in range(len(sg.eigenvalues)))
    assert np.allclose(total, np.eye(8), atol=1e-12)
    with pytest.raises(IndexError):
        sg.projector(len(sg.eigenvalues))


def test_fidelity_matches_reference():
    g = pstlab.Graph.parse(PETERSEN)
    sg = pstlab.SpectralGraph(g)
    a = g.adjacency_matrix()
    for t in (0.0, 0.3, 1.7, 5.0):
        assert sg.fidelity(0, 4, t) == pytest.approx(walk_fidelity(a, 0, 4, t), abs=1e-12)
    amp = sg.evolve(0, 1.1)
    assert np.linalg.norm(amp) == pytest.approx(1.0, abs=1e-12)


def test_q3_pst_certificate():
    sg = pstlab.SpectralGraph(pstlab.Graph.parse(Q3))
    assert sg.is_extremal_graph()
    verdict = sg.pst_pair(0, 7)
    assert verdict["pst"] is True
    tau = verdict["tau"]
    assert tau == pytest.approx(math.pi / 2, abs=1e-12)
    assert walk_fidelity(sg.graph.adjacency_matrix(), 0, 7, tau) == pytest.approx(1.0, abs=1e-9)
    assert sg.antipodal(0, 7)["definitional"] is True
    assert sg.sign_pattern(0, 7) == [1, -1, 1, -1]


def test_petersen_has_no_pst():
    sg = pstlab.SpectralGraph(pstlab.Graph.parse(PETERSEN))
    report = sg.report()
    assert report["summary"]["pst_pairs"] == 0
    best = sg.oracle_search(0, 4)
    assert best["hit"] is None
    assert best["best"][1] < 1 - 1e-6


def test_path_three_pst_time():
    sg = pstlab.SpectralGraph(pstlab.Graph.parse("a b\nb c\n"))
    verdict = sg.pst_pair(0, 2)
    assert verdict["pst"] is True
    assert verdict["tau"] == pytest.approx(math.pi / math.sqrt(2), abs=1e-12)
    assert pstlab.pst_time(0, 2) == pytest.approx(2 * math.pi / math.sqrt(2))


def test_fidelity_series_and_argument_checks():
    sg = pstlab.SpectralGraph(pstlab.Graph(2, [(0, 1)]))
    series = sg.fidelity_series(0, 1, math.pi, 5)
    assert [t for t, _ in series] == pytest.approx([k * math.pi / 4 for k in range(5)])
    for t, f in series:
        assert f == pytest.approx(abs(math.sin(t)), abs=1e-12)
    with pytest.raises(ValueError):
        sg.fidelity_series(0, 1, 1.0, 1)
    with pytest.raises(IndexError):
        sg.fidelity(0, 5, 1.0)


def test_analyze_and_scan_line():
    report = pstlab.analyze(Q3, verify_oracle=True)
    assert report["critical"] == []
    row = pstlab.scan_line("not-a-graph")
    assert "error" in row
    row = pstlab.scan_line("Cl")
    assert row["pst_pairs"] == 2
