// Copyright 2026 The pstlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pstlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "pstlab/errors.hpp"

#ifndef PSTLAB_VERSION
#define PSTLAB_VERSION "0.0.0"
#endif

namespace pstlab {

using nlohmann::ordered_json;

namespace {

ordered_json eigenvalue_json(const Spectrum& spec, std::size_t r) {
  switch (spec.kind) {
    case SpectrumKind::ExactInteger:
      return spec.integer_values[r].convert_to<long long>();
    case SpectrumKind::Quadratic:
      return ordered_json{{"a", spec.quadratic->a}, {"b", spec.quadratic->b[r]}, {"delta", spec.quadratic->delta}};
    case SpectrumKind::Floating:
      break;
  }
  return round15(spec.eigenvalues[r]);
}

ordered_json rational_json(const Rational& q) { return to_string(q); }

std::string fmt15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace

double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(fmt15(x).c_str(), nullptr);
}

std::size_t GraphReport::strongly_cospectral_pairs() const {
  std::size_t k = 0;
  for (const auto& p : pairs) k += p.strong ? 1 : 0;
  return k;
}

std::size_t GraphReport::antipodal_pairs() const {
  std::size_t k = 0;
  for (const auto& p : pairs) k += p.antipodal.holds() ? 1 : 0;
  return k;
}

std::size_t GraphReport::pst_pairs() const {
  std::size_t k = 0;
  for (const auto& p : pairs) k += p.verdict && p.verdict->pst() ? 1 : 0;
  return k;
}

std::vector<PstCertificate> GraphReport::certificates() const {
  std::vector<PstCertificate> out;
  for (const auto& p : pairs)
    if (p.verdict && p.verdict->pst()) out.push_back(*p.verdict->certificate);
  return out;
}

GraphReport classify_graph(const SpectralGraph& sg, const ClassifyOptions& options) {
  const Graph& g = sg.graph();
  const auto& dist = sg.distances();
  const int n = g.order();
  GraphReport rep;
  if (n <= 62) rep.graph6 = encode_graph6(g);
  rep.labels = g.labels();
  rep.edge_count = g.edge_count();
  rep.tolerances = sg.tolerances();
  rep.spectrum = sg.spectrum();
  rep.char_poly = sg.characteristic_polynomial();
  rep.decomposition = verify_decomposition(sg.decomposition(), g, 1e-8);
  if (!rep.decomposition.passed) rep.critical.push_back("spectral decomposition fails " + rep.decomposition.failed_identity);
  rep.regular_degree = regular_degree(g);
  rep.diameter = dist.diameter;
  rep.spectrally_extremal = is_spectrally_extremal_graph(sg);

  for (Vertex u = 0; u < n; ++u) {
    VertexReport vr;
    vr.vertex = u;
    vr.eccentricity = dist.ecc[u];
    vr.support = eigenvalue_support(sg, u);
    vr.extremal = vr.eccentricity == vr.support.dual_degree();
    if (vr.eccentricity > vr.support.dual_degree())
      rep.critical.push_back("eccentricity exceeds dual degree at " + g.label(u));
    rep.vertices.push_back(std::move(vr));
  }

  auto critical = [&](const std::string& what, Vertex u, Vertex v) {
    rep.critical.push_back(what + " for pair (" + g.label(u) + ", " + g.label(v) + ")");
  };

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      PairReport pr;
      pr.u = u;
      pr.v = v;
      pr.distance = dist(u, v);
      pr.cospectral = are_cospectral(sg, u, v);
      pr.strong = are_strongly_cospectral(sg, u, v);
      if (pr.strong && !pr.cospectral) critical("strongly cospectral but not cospectral", u, v);
      pr.antipodal = are_antipodal(sg, u, v);
      if (!pr.antipodal.agree()) critical("antipodality tests disagree", u, v);

      const bool u_eligible = rep.vertices[u].extremal && pr.distance == dist.ecc[u];
      const bool v_eligible = rep.vertices[v].extremal && pr.distance == dist.ecc[v];
      if (u_eligible) {
        pr.verdict = pst_decide_pair(sg, u, v);
      } else if (v_eligible) {
        pr.verdict = pst_decide_pair(sg, v, u);
      }
      if (pr.verdict && pr.verdict->pst() && !pr.verdict->certificate->oracle_confirmed())
        critical("certified PST time not confirmed by the simulator", u, v);
      if (options.verify_oracle && pr.verdict) {
        pr.oracle = pst_oracle_search(sg, pr.verdict->u, pr.verdict->v, options.t_max, options.coarse_steps,
                                      kRefuteFidelity);
        if (pr.verdict->pst() != pr.oracle->hit.has_value()) critical("PST verdict and oracle scan disagree", u, v);
        if (pr.oracle->hit && !pr.strong) critical("oracle finds transfer between non strongly cospectral vertices", u, v);
      }

      if (pr.strong) {
        const Vertex a = rep.vertices[u].extremal ? u : v;
        const Vertex b = a == u ? v : u;
        if (rep.vertices[a].extremal) {
          try {
            if (!unique_at_distance_check(sg, a, b).holds) critical("another vertex shares the partner's distance", u, v);
            if (!walk_maximality_scan(sg, a, b).violations.empty()) critical("walk-count maximality violated", u, v);
            const auto p = transfer_polynomial(sg, a, b);
            if (!p) {
              critical("no transfer polynomial for a strongly cospectral pair", u, v);
            } else if (!minimal_poly_in_deleted_graph(sg, a, b, *p)) {
              critical("transfer polynomial is not minimal in the vertex-deleted graph", u, v);
            }
            if (rep.vertices[b].extremal && !sign_pattern_sanity(sg, *pr.strong))
              critical("three consecutive equal signs", u, v);
          } catch (const CriticalFailure& e) {
            critical(e.what(), u, v);
          }
          if (pr.distance != dist.ecc[a])
            rep.notes.push_back("extremal strongly cospectral pair (" + g.label(u) + ", " + g.label(v) +
                                ") is not at maximal distance");
        }
      }
      if (pr.cospectral || pr.verdict) rep.pairs.push_back(std::move(pr));
    }
  }

  const int d = dist.diameter;
  if (rep.regular_degree && rep.spectrally_extremal && n > 1) {
    rep.identity = antipodal_spectral_identity(sg);
    rep.graph_verdict = pst_decide_graph(sg);
    bool all_pst = true;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (dist(u, v) != d) continue;
        const bool anti = are_antipodal(sg, u, v).holds();
        if (anti != rep.identity->equal) critical("spectral identity disagrees with antipodality", u, v);
        const PairVerdict pv = pst_decide_pair(sg, u, v);
        all_pst = all_pst && pv.pst();
      }
    if (all_pst != rep.graph_verdict->pass)
      rep.critical.push_back("graph-level PST criterion disagrees with the pairwise verdicts");
  }

  rep.distance_regularity = is_distance_regular(g);
  if (rep.distance_regularity.distance_regular) rep.antipodal_drg = is_antipodal_drg(g);

  if (rep.regular_degree && rep.spectrally_extremal && n > 1) {
    bool all_ecc = true;
    for (const auto& vr : rep.vertices) all_ecc = all_ecc && vr.eccentricity == d;
    std::vector<char> covered(n, 0);
    for (const auto& pr : rep.pairs)
      if (pr.distance == d && pr.verdict && pr.verdict->pst()) covered[pr.u] = covered[pr.v] = 1;
    bool all_covered = true;
    for (char c : covered) all_covered = all_covered && c;
    rep.pst_partition_hypotheses = all_ecc && all_covered;
    if (rep.pst_partition_hypotheses && !rep.distance_regularity.distance_regular)
      rep.critical.push_back("PST on a distance-d matching of an extremal regular graph without distance-regularity");
  }
  return rep;
}

ordered_json certificate_json(const PstCertificate& cert, const Graph& g) {
  ordered_json j;
  j["u"] = g.label(cert.u);
  j["v"] = g.label(cert.v);
  j["alpha"] = cert.alpha;
  j["delta"] = cert.delta;
  j["tau"] = round15(cert.tau);
  j["sigma"] = cert.sigmas;
  j["fidelity"] = round15(cert.fidelity);
  return j;
}

ordered_json verdict_json(const PairVerdict& verdict, const Graph& g) {
  if (verdict.pst()) {
    ordered_json j = certificate_json(*verdict.certificate, g);
    j["pst"] = true;
    return j;
  }
  ordered_json j;
  j["u"] = g.label(verdict.u);
  j["v"] = g.label(verdict.v);
  j["pst"] = false;
  j["reason"] = verdict.detail;
  return j;
}

ordered_json report_json(const GraphReport& rep) {
  ordered_json j;
  j["tool"] = "pstlab";
  j["version"] = PSTLAB_VERSION;
  j["tolerances"] = {{"cluster", rep.tolerances.cluster},
                     {"snap", rep.tolerances.snap},
                     {"support", rep.tolerances.support},
                     {"pseudo_equitable", rep.tolerances.pseudo_equitable},
                     {"membership", rep.tolerances.membership},
                     {"confirm_fidelity", kConfirmFidelity},
                     {"refute_fidelity", kRefuteFidelity}};

  const int n = static_cast<int>(rep.labels.size());
  ordered_json graph;
  graph["n"] = n;
  graph["edges"] = rep.edge_count;
  graph["graph6"] = rep.graph6;
  graph["labels"] = rep.labels;
  j["graph"] = graph;

  ordered_json spec;
  spec["kind"] = to_string(rep.spectrum.kind);
  ordered_json values = ordered_json::array();
  for (std::size_t r = 0; r < rep.spectrum.size(); ++r) values.push_back(eigenvalue_json(rep.spectrum, r));
  spec["eigenvalues"] = values;
  spec["multiplicities"] = rep.spectrum.multiplicities;
  ordered_json poly = ordered_json::array();
  for (const auto& c : rep.char_poly) poly.push_back(c.str());
  spec["char_poly_ascending"] = poly;
  j["spectrum"] = spec;

  j["decomposition_check"] = {{"passed", rep.decomposition.passed},
                              {"exact", rep.decomposition.exact},
                              {"failed_identity", rep.decomposition.failed_identity},
                              {"max_residual", round15(rep.decomposition.max_residual)}};
  j["regular_degree"] = rep.regular_degree ? ordered_json(*rep.regular_degree) : ordered_json(nullptr);
  j["diameter"] = rep.diameter;
  j["spectrally_extremal"] = rep.spectrally_extremal;

  ordered_json verts = ordered_json::array();
  for (const auto& vr : rep.vertices) {
    verts.push_back({{"vertex", rep.labels[vr.vertex]},
                     {"eccentricity", vr.eccentricity},
                     {"support", vr.support.support},
                     {"dual_degree", vr.support.dual_degree()},
                     {"extremal", vr.extremal}});
  }
  j["vertices"] = verts;

  // Rebuild a label-only graph view for the verdict serializers.
  std::vector<std::pair<Vertex, Vertex>> none;
  const Graph labelled(n, none, rep.labels);
  ordered_json pairs = ordered_json::array();
  for (const auto& pr : rep.pairs) {
    ordered_json p;
    p["u"] = rep.labels[pr.u];
    p["v"] = rep.labels[pr.v];
    p["distance"] = pr.distance;
    p["cospectral"] = pr.cospectral;
    p["strongly_cospectral"] = pr.strong.has_value();
    p["sigma"] = pr.strong ? ordered_json(pr.strong->sigmas) : ordered_json(nullptr);
    p["antipodal"] = {{"definitional", pr.antipodal.definitional}, {"spectral", pr.antipodal.spectral}};
    p["pst"] = pr.verdict ? verdict_json(*pr.verdict, labelled) : ordered_json(nullptr);
    if (pr.oracle) {
      p["oracle"] = {{"hit", pr.oracle->hit.has_value()},
                     {"t", round15(pr.oracle->hit ? pr.oracle->hit->t : pr.oracle->best.t)},
                     {"fidelity", round15(pr.oracle->hit ? pr.oracle->hit->fidelity : pr.oracle->best.fidelity)}};
    }
    pairs.push_back(p);
  }
  j["pairs"] = pairs;

  ordered_json certs = ordered_json::array();
  for (const auto& c : rep.certificates()) certs.push_back(certificate_json(c, labelled));
  j["certificates"] = certs;

  if (rep.identity) {
    ordered_json id;
    id["lhs"] = rep.identity->exact_lhs ? rational_json(*rep.identity->exact_lhs) : ordered_json(round15(rep.identity->lhs));
    id["rhs"] = rep.identity->exact_rhs ? rational_json(*rep.identity->exact_rhs) : ordered_json(round15(rep.identity->rhs));
    id["equal"] = rep.identity->equal;
    id["exact"] = rep.identity->exact_lhs.has_value();
    j["antipodal_identity"] = id;
  } else {
    j["antipodal_identity"] = nullptr;
  }

  if (rep.graph_verdict) {
    const auto& gv = *rep.graph_verdict;
    ordered_json v;
    v["pass"] = gv.pass;
    v["first_failed_condition"] = gv.first_failed;
    v["failed_conditions"] = gv.failed;
    v["detail"] = gv.detail;
    ordered_json gaps = ordered_json::array();
    for (const auto& g : gv.theta_gaps) gaps.push_back(g.convert_to<long long>());
    v["theta_gaps"] = gaps;
    v["valuations"] = gv.valuations;
    v["alpha"] = gv.alpha;
    v["tau"] = gv.pass ? ordered_json(round15(gv.tau)) : ordered_json(nullptr);
    j["graph_pst"] = v;
  } else {
    j["graph_pst"] = nullptr;
  }

  ordered_json drg;
  drg["distance_regular"] = rep.distance_regularity.distance_regular;
  drg["reason"] = rep.distance_regularity.reason;
  drg["intersection_array"] = {{"b", rep.distance_regularity.b}, {"c", rep.distance_regularity.c}};
  drg["parameters"] = rep.distance_regularity.parameters;
  drg["antipodal"] = rep.antipodal_drg ? ordered_json(*rep.antipodal_drg) : ordered_json(nullptr);
  j["distance_regularity"] = drg;
  j["pst_partition_hypotheses"] = rep.pst_partition_hypotheses;

  j["summary"] = {{"strongly_cospectral_pairs", rep.strongly_cospectral_pairs()},
                  {"antipodal_pairs", rep.antipodal_pairs()},
                  {"pst_pairs", rep.pst_pairs()}};
  j["critical"] = rep.critical;
  j["notes"] = rep.notes;
  return j;
}

std::string render_table(const GraphReport& rep) {
  std::ostringstream out;
  const auto& spec = rep.spectrum;
  out << "graph6           " << rep.graph6 << "\n";
  out << "vertices/edges   " << rep.labels.size() << " / " << rep.edge_count << "\n";
  out << "spectrum (" << to_string(spec.kind) << ")";
  for (std::size_t r = 0; r < spec.size(); ++r) {
    out << (r == 0 ? "  " : ", ");
    if (spec.kind == SpectrumKind::Quadratic) {
      out << "(" << spec.quadratic->a << (spec.quadratic->b[r] < 0 ? "-" : "+") << std::abs(spec.quadratic->b[r])
          << "*sqrt(" << spec.quadratic->delta << "))/2";
    } else {
      out << fmt15(spec.eigenvalues[r]);
    }
    out << "^" << spec.multiplicities[r];
  }
  out << "\n";
  out << "regular          " << (rep.regular_degree ? "yes, degree " + std::to_string(*rep.regular_degree) : "no")
      << "\n";
  out << "diameter         " << rep.diameter << "\n";
  out << "extremal graph   " << (rep.spectrally_extremal ? "yes" : "no") << "\n";
  out << "distance-regular " << (rep.distance_regularity.distance_regular ? "yes" : "no");
  if (rep.antipodal_drg) out << (*rep.antipodal_drg ? " (antipodal)" : " (not antipodal)");
  out << "\n";
  if (rep.identity) {
    out << "identity         lhs " << (rep.identity->exact_lhs ? to_string(*rep.identity->exact_lhs) : fmt15(rep.identity->lhs))
        << ", rhs " << (rep.identity->exact_rhs ? to_string(*rep.identity->exact_rhs) : fmt15(rep.identity->rhs))
        << (rep.identity->equal ? " (equal)" : " (differ)") << "\n";
  }
  if (rep.graph_verdict) {
    out << "graph PST        " << (rep.graph_verdict->pass ? "pass, tau = " + fmt15(rep.graph_verdict->tau)
                                                             : "fail at condition " + std::to_string(rep.graph_verdict->first_failed))
        << "\n";
  }
  out << "\nvertex  ecc  d*  extremal\n";
  for (const auto& vr : rep.vertices) {
    char line[128];
    std::snprintf(line, sizeof line, "%-6s  %3d  %2d  %s\n", rep.labels[vr.vertex].c_str(), vr.eccentricity,
                  vr.support.dual_degree(), vr.extremal ? "yes" : "no");
    out << line;
  }
  out << "\npair        dist  strong  antipodal  PST\n";
  for (const auto& pr : rep.pairs) {
    std::string sigma;
    if (pr.strong)
      for (int s : pr.strong->sigmas) sigma += s > 0 ? '+' : '-';
    std::string pst = "-";
    if (pr.verdict) pst = pr.verdict->pst() ? "yes, tau = " + fmt15(pr.verdict->certificate->tau) : "no: " + pr.verdict->detail;
    char line[256];
    std::snprintf(line, sizeof line, "%-5s %-5s %4d  %-6s  %-9s  %s\n", rep.labels[pr.u].c_str(),
                  rep.labels[pr.v].c_str(), pr.distance, pr.strong ? sigma.c_str() : "no",
                  pr.antipodal.holds() ? "yes" : "no", pst.c_str());
    out << line;
  }
  if (!rep.critical.empty()) {
    out << "\nCRITICAL\n";
    for (const auto& c : rep.critical) out << "  " << c << "\n";
  }
  for (const auto& note : rep.notes) out << "note: " << note << "\n";
  return out.str();
}

ScanRow scan_graph6_line(std::size_t line, const std::string& text, const Tolerances& tol,
                         const ClassifyOptions& options) {
  ScanRow row;
  row.line = line;
  row.input = text;
  try {
    SpectralGraph sg(parse_graph6(text), tol);
    const GraphReport rep = classify_graph(sg, options);
    row.n = sg.order();
    row.kind = to_string(rep.spectrum.kind);
    row.extremal = rep.spectrally_extremal;
    row.strong_pairs = rep.strongly_cospectral_pairs();
    row.antipodal_pairs = rep.antipodal_pairs();
    row.pst_pairs = rep.pst_pairs();
    row.distance_regular = rep.distance_regularity.distance_regular;
    if (rep.identity) row.identity = rep.identity->equal;
    row.critical = rep.critical.size();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::string scan_header() {
  return "line\tgraph6\tn\tkind\textremal\tstrong\tantipodal\tpst\tdrg\tidentity\tcritical";
}

std::string render_scan_row(const ScanRow& row) {
  std::ostringstream out;
  out << row.line << '\t' << row.input << '\t';
  if (!row.error.empty()) {
    out << "ERROR\t" << row.error;
    return out.str();
  }
  out << row.n << '\t' << row.kind << '\t' << (row.extremal ? "yes" : "no") << '\t' << row.strong_pairs << '\t'
      << row.antipodal_pairs << '\t' << row.pst_pairs << '\t' << (row.distance_regular ? "yes" : "no") << '\t'
      << (row.identity ? (*row.identity ? "holds" : "fails") : "-") << '\t' << row.critical;
  return out.str();
}

ordered_json scan_row_json(const ScanRow& row) {
  ordered_json j;
  j["line"] = row.line;
  j["graph6"] = row.input;
  if (!row.error.empty()) {
    j["error"] = row.error;
    return j;
  }
  j["n"] = row.n;
  j["kind"] = row.kind;
  j["extremal"] = row.extremal;
  j["strongly_cospectral_pairs"] = row.strong_pairs;
  j["antipodal_pairs"] = row.antipodal_pairs;
  j["pst_pairs"] = row.pst_pairs;
  j["distance_regular"] = row.distance_regular;
  j["identity"] = row.identity ? ordered_json(*row.identity) : ordered_json(nullptr);
  j["critical"] = row.critical;
  return j;
}

}  // namespace pstlab
