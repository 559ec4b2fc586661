#pragma once

#include <string>
#include <vector>

#include "cgspec/invariants.hpp"
#include "cgspec/spectrum.hpp"

namespace cgspec {

struct CheckResult {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct VerifyOptions {
  int cap = kDefaultExhaustiveCap;
  double tol = kDefaultJacobiTol;
  /// Test hook: corrupt one adjacency bit of the dihedral:8 graph so the
  /// consistency checks demonstrably catch it.
  bool inject_adjacency_fault = false;
};

const char* check_status_name(CheckResult::Status status);

/// Run the whole verification checklist over the built-in catalog:
/// closed-form vs numeric spectra, eigenbasis soundness, boundary lemmas
/// (exhaustively, below the cap), isoperimetric values, and the graph
/// structure facts. Checks needing scans above the cap report skip.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace cgspec
