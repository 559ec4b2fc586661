#pragma once

#include <json.hpp>
#include <string>

#include "cgspec/graph.hpp"
#include "cgspec/invariants.hpp"
#include "cgspec/spectrum.hpp"

namespace cgspec {

using Json = nlohmann::json;

/// Integers serialise as JSON numbers, non-integers as "p/q" strings.
Json rational_json(const Rational& r);

Json subset_json(const Subset& s);

/// {"source": ..., "pairs": [[value, mult], ...], "bases": {"<value>": [[...], ...]}}
/// The bases key appears only when bases are supplied.
Json spectrum_report_json(const SpectrumReport& report,
                          const std::vector<EigenBasis>* bases = nullptr);

Json certificates_json(const CertificateSet& certs, const std::vector<std::string>& names);

/// {"n": ..., "names": [...], "edges": [[u, v], ...], "center": [...],
///  "components": [[...], ...]}
Json graph_json(const CommutingGraph& g);

Json invariant_report_json(const InvariantReport& report);

std::string claim_status_name(Claim::Status status);

/// "0^1 2^2 4^3 8^2"
std::string spectrum_pairs_text(const SpectrumReport& report);

std::string invariant_report_text(const InvariantReport& report);

}  // namespace cgspec
