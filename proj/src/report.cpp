#include "cgspec/report.hpp"

#include <cmath>

namespace cgspec {

namespace {

const char* source_name(SpectrumReport::Source source) {
  switch (source) {
    case SpectrumReport::Source::closed_form: return "closed_form";
    case SpectrumReport::Source::numeric: return "numeric";
    case SpectrumReport::Source::certificate: return "certificate";
  }
  return "unknown";
}

}  // namespace

Json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

Json subset_json(const Subset& s) { return s.members(); }

Json spectrum_report_json(const SpectrumReport& report, const std::vector<EigenBasis>* bases) {
  Json pairs = Json::array();
  for (const auto& [value, mult] : report.pairs) pairs.push_back({rational_json(value), mult});
  Json out{{"source", source_name(report.source)}, {"pairs", pairs}};
  if (bases != nullptr) {
    Json basis_obj = Json::object();
    for (const auto& basis : *bases) {
      Json vectors = Json::array();
      for (const auto& y : basis.vectors)
        vectors.push_back(std::vector<int>(y.data(), y.data() + y.size()));
      basis_obj[std::to_string(basis.eigenvalue)] = vectors;
    }
    out["bases"] = basis_obj;
  }
  return out;
}

Json certificates_json(const CertificateSet& certs, const std::vector<std::string>& names) {
  Json list = Json::array();
  for (const auto& cert : certs.certificates) {
    Json vectors = Json::array();
    for (const auto& y : cert.basis.vectors)
      vectors.push_back(std::vector<int>(y.data(), y.data() + y.size()));
    list.push_back({{"eigenvalue", cert.eigenvalue},
                    {"min_multiplicity", cert.min_multiplicity},
                    {"provenance", cert.provenance},
                    {"basis", vectors}});
  }
  Json inconclusive = Json::array();
  for (int u : certs.inconclusive_classes) inconclusive.push_back(names[u]);
  return Json{{"certificates", list}, {"inconclusive_classes", inconclusive}};
}

Json graph_json(const CommutingGraph& g) {
  Json edges = Json::array();
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adjacency[u].members())
      if (u < v) edges.push_back({u, v});
  Json components = Json::array();
  for (const auto& comp : g.component_partition) components.push_back(subset_json(comp));
  return Json{{"n", g.n},
              {"names", g.names},
              {"edges", edges},
              {"center", subset_json(g.center)},
              {"components", components}};
}

std::string claim_status_name(Claim::Status status) {
  switch (status) {
    case Claim::Status::pass: return "pass";
    case Claim::Status::fail: return "fail";
    case Claim::Status::not_applicable: return "not_applicable";
    case Claim::Status::cap_exceeded: return "cap_exceeded";
  }
  return "unknown";
}

namespace {

Claim::Status claim_status(const InvariantReport& report, const std::string& name) {
  for (const auto& claim : report.claims)
    if (claim.name == name) return claim.status;
  return Claim::Status::not_applicable;
}

Json status_json(const InvariantReport& report, const std::string& claim_name) {
  return claim_status_name(claim_status(report, claim_name));
}

}  // namespace

Json invariant_report_json(const InvariantReport& report) {
  Json inv = Json::object();

  inv["diameter"] = Json{{"exact", report.diameter_value},
                         {"status", status_json(report, "diameter")}};

  Json mean{{"exact", rational_json(report.mean.direct)},
            {"formula", report.mean.formula ? rational_json(*report.mean.formula) : Json()},
            {"status", status_json(report, "mean-distance-formula")}};
  inv["mean_distance"] = mean;

  Json clique{{"exact", report.clique.exact ? Json(*report.clique.exact) : Json()},
              {"formula", report.clique.formula ? Json(*report.clique.formula) : Json()},
              {"witness", report.clique.witness ? subset_json(*report.clique.witness) : Json()},
              {"status", status_json(report, "clique-formula")}};
  inv["clique_number"] = clique;

  Json indep{{"exact", report.independence.exact ? Json(*report.independence.exact) : Json()},
             {"bounds", Json::array({1, report.independence.upper_c})},
             {"lambda3",
              report.independence.lambda3 ? Json(*report.independence.lambda3) : Json()},
             {"witness",
              report.independence.witness ? subset_json(*report.independence.witness) : Json()},
             {"status", status_json(report, "independence-interval")}};
  inv["independence_number"] = indep;

  Json iso = Json::object();
  iso["exact"] = report.iso_exact ? rational_json(report.iso_exact->value) : Json();
  iso["witness"] = report.iso_exact ? subset_json(report.iso_exact->argmin) : Json();
  switch (report.iso_theorem.kind) {
    case IsoTheorem::Kind::exact:
      iso["formula"] = rational_json(report.iso_theorem.exact);
      iso["bounds"] = Json();
      break;
    case IsoTheorem::Kind::bounds:
      iso["formula"] = Json();
      iso["bounds"] = Json::array({rational_json(report.iso_theorem.lower),
                                   std::sqrt(static_cast<double>(report.iso_theorem.upper_squared))});
      break;
    default:
      iso["formula"] = Json();
      iso["bounds"] = Json();
  }
  iso["status"] = report.iso_cap_exceeded ? "cap_exceeded"
                                          : status_json(report, "isoperimetric-theorem");
  inv["isoperimetric"] = iso;

  Json bw{{"exact", report.bipartition.exact ? Json(*report.bipartition.exact) : Json()},
          {"bounds", report.bipartition.lower_bound
                         ? Json::array({rational_json(*report.bipartition.lower_bound), Json()})
                         : Json()},
          {"witness",
           report.bipartition.argmin ? subset_json(*report.bipartition.argmin) : Json()},
          {"status", status_json(report, "bipartition-lower-bound")}};
  inv["bipartition_width"] = bw;

  Json conn{{"exact", report.algebraic_connectivity
                          ? rational_json(*report.algebraic_connectivity)
                          : Json()},
            {"source", report.algebraic_connectivity_source},
            {"status", status_json(report, "algebraic-connectivity-center-order")}};
  inv["algebraic_connectivity"] = conn;

  inv["c_min"] = Json{{"exact", report.c_min}};
  inv["big_C"] = Json{{"witness", subset_json(report.big_c)}};

  Json claims = Json::array();
  for (const auto& claim : report.claims)
    claims.push_back({{"name", claim.name},
                      {"status", claim_status_name(claim.status)},
                      {"detail", claim.detail}});

  return Json{{"order", report.order},
              {"center_size", report.center_size},
              {"abelian", report.abelian},
              {"condition_holds", report.condition_holds},
              {"invariants", inv},
              {"claims", claims}};
}

std::string spectrum_pairs_text(const SpectrumReport& report) {
  std::string out;
  for (const auto& [value, mult] : report.pairs) {
    if (!out.empty()) out += ' ';
    out += value.str() + "^" + std::to_string(mult);
  }
  return out;
}

std::string invariant_report_text(const InvariantReport& report) {
  std::string out;
  out += "order " + std::to_string(report.order) + "  |Z| = " +
         std::to_string(report.center_size) + "  " +
         (report.abelian ? "abelian" : "non-abelian") + "  condition: " +
         (report.condition_holds ? "holds" : "fails") + "\n";
  out += "diameter: " + std::to_string(report.diameter_value) + "\n";
  out += "mean distance: " + report.mean.direct.str();
  if (report.mean.formula) out += " (formula " + report.mean.formula->str() + ")";
  out += "\n";
  out += "clique number: ";
  out += report.clique.exact ? std::to_string(*report.clique.exact) : "cap exceeded";
  if (report.clique.formula) out += " (formula " + std::to_string(*report.clique.formula) + ")";
  out += "\n";
  out += "independence number: ";
  out += report.independence.exact ? std::to_string(*report.independence.exact) : "cap exceeded";
  out += " (bounds [1, " + std::to_string(report.independence.upper_c) + "])\n";
  out += "isoperimetric number: ";
  if (report.iso_exact)
    out += report.iso_exact->value.str();
  else
    out += report.iso_cap_exceeded ? "cap exceeded" : "n/a";
  if (report.iso_theorem.kind == IsoTheorem::Kind::exact)
    out += " (theorem " + report.iso_theorem.exact.str() + ")";
  else if (report.iso_theorem.kind == IsoTheorem::Kind::bounds)
    out += " (bounds [" + report.iso_theorem.lower.str() + ", sqrt(" +
           std::to_string(report.iso_theorem.upper_squared) + ")])";
  out += "\n";
  out += "bipartition width: ";
  out += report.bipartition.exact ? std::to_string(*report.bipartition.exact) : "cap exceeded";
  if (report.bipartition.lower_bound)
    out += " (lower bound " + report.bipartition.lower_bound->str() + ")";
  out += "\n";
  if (report.algebraic_connectivity)
    out += "algebraic connectivity: " + report.algebraic_connectivity->str() + " (" +
           report.algebraic_connectivity_source + ")\n";
  out += "min centralizer size: " + std::to_string(report.c_min) + "\n";
  out += "claims:\n";
  for (const auto& claim : report.claims) {
    out += "  [" + claim_status_name(claim.status) + "] " + claim.name;
    if (!claim.detail.empty()) out += " - " + claim.detail;
    out += "\n";
  }
  return out;
}

}  // namespace cgspec
