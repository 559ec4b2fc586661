#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgspec/graph.hpp"
#include "cgspec/group.hpp"
#include "cgspec/rational.hpp"
#include "cgspec/subset.hpp"

namespace cgspec {

/// Default and hard caps on the 2^n exhaustive subset scans.
inline constexpr int kDefaultExhaustiveCap = 16;
inline constexpr int kHardExhaustiveCap = 24;
/// Largest order at which full_report cross-checks spectral claims with the
/// numeric eigensolver.
inline constexpr int kNumericCheckCap = 128;

/// A vertex subset with its edge-boundary size and the exact ratio |dS|/|S|.
struct SubsetBoundary {
  Subset subset;
  long long boundary_size = 0;
  Rational ratio;
};

/// Count the edges leaving S by popcount of adjacency rows against S.
/// Throws EmptyOrFullSubset unless 0 < |S| < n.
SubsetBoundary edge_boundary(const CommutingGraph& g, const Subset& s);

/// The closed-form boundary count for subsets meeting the center partially
/// (S & Z != {} and Z \ S != {}); must equal edge_boundary on the same S.
/// Throws HypothesisViolated when the hypothesis on S (or non-abelianness)
/// fails.
long long boundary_formula(const GroupTable& g, const Subset& s);

/// Check |dS|/|S| >= |Z(G)| for subsets satisfying one of: S & Z = {};
/// Z <= S with |S| <= |G|/2; S <= Z. Throws HypothesisViolated otherwise.
bool boundary_lower_bounds_check(const GroupTable& g, const Subset& s);

struct IsoExact {
  Rational value;
  Subset argmin;  // smallest minimizing subset in mask order (bit i = element i)
};

/// Exhaustive isoperimetric number: min |dS|/|S| over nonempty S with
/// |S| <= floor(n/2) (strict variant: |S| < n/2), compared in exact rational
/// arithmetic. Throws SizeCapExceeded above the cap, EmptyOrFullSubset for
/// the trivial group.
IsoExact isoperimetric_exact(const CommutingGraph& g, int cap = kDefaultExhaustiveCap,
                             bool strict = false);

/// What the closed-form results say about the isoperimetric number: an exact
/// value when one of the theorem cases applies, a bound interval
/// [lower, sqrt(upper_squared)] for trichotomy groups otherwise, unknown
/// when the trichotomy fails.
struct IsoTheorem {
  enum class Kind { exact, bounds, unknown, not_applicable };
  Kind kind = Kind::unknown;
  Rational exact;
  Rational lower;
  long long upper_squared = 0;
};
IsoTheorem isoperimetric_theorem(const GroupTable& g);

/// Check |Z|/|G| <= |dS| / (|S| |S^c|) <= 1 for a proper nonempty subset of
/// a non-abelian trichotomy group.
bool subset_ratio_bounds_check(const CommutingGraph& g, const Subset& s);
bool subset_ratio_bounds_check(const GroupTable& g, const Subset& s);

struct BipartitionWidth {
  std::optional<long long> exact;  // min |dS| over |S| = floor(n/2); absent above cap
  std::optional<Subset> argmin;
  std::optional<Rational> lower_bound;  // trichotomy corollary; absent otherwise
};
BipartitionWidth bipartition_width(const CommutingGraph& g, int cap = kDefaultExhaustiveCap);

struct CliqueNumber {
  std::optional<int> exact;  // branch-and-bound search; absent above cap
  std::optional<Subset> witness;
  std::optional<long long> formula;  // abelian or trichotomy groups only
};
CliqueNumber clique_number(const CommutingGraph& g, int cap = kDefaultExhaustiveCap);

struct IndependenceNumber {
  std::optional<int> exact;  // complement-clique search; absent above cap
  std::optional<Subset> witness;
  long long upper_c = 0;  // interval is [1, |G| - c + 1] with c = min |C(v)|
  std::optional<long long> lambda3;  // third least eigenvalue, when C(G) = G
};
IndependenceNumber independence_number(const CommutingGraph& g, int cap = kDefaultExhaustiveCap);

/// Mean of all n^2 pairwise distances (diagonal included), plus the group
/// formula value when the group is abelian or satisfies the trichotomy.
struct MeanDistance {
  Rational direct;
  std::optional<Rational> formula;
};
MeanDistance mean_distance(const CommutingGraph& g, const GroupTable& group);

/// The set C(G) = {v : d(v) - |Z(G)| > 0}.
Subset big_c_set(const GroupTable& g);

struct Claim {
  enum class Status { pass, fail, not_applicable, cap_exceeded };
  std::string name;
  Status status = Status::not_applicable;
  std::string detail;
};

struct ReportOptions {
  int cap = kDefaultExhaustiveCap;
  bool iso_strict = false;
  double tol = 1e-9;
};

/// Everything the report carries for one group: exact values, formula
/// values, bound intervals, and a pass/fail ledger of the claims that apply.
struct InvariantReport {
  int order = 0;
  long long center_size = 0;
  bool abelian = false;
  bool condition_holds = false;
  int diameter_value = 0;
  MeanDistance mean;
  CliqueNumber clique;
  IndependenceNumber independence;
  std::optional<IsoExact> iso_exact;
  bool iso_cap_exceeded = false;
  IsoTheorem iso_theorem;
  BipartitionWidth bipartition;
  std::optional<Rational> algebraic_connectivity;
  std::string algebraic_connectivity_source;  // "closed-form" or "numeric"
  long long c_min = 0;
  Subset big_c;
  std::vector<Claim> claims;
};

/// Run every applicable invariant computation and record the exact/formula/
/// bound triples plus the per-claim ledger. Cap overruns are recorded per
/// field without aborting the rest.
InvariantReport full_report(const GroupTable& g, const ReportOptions& options = {});

}  // namespace cgspec
