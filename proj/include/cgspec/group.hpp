#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgspec/permutation.hpp"
#include "cgspec/subset.hpp"

namespace cgspec {

/// Largest permutation closure the generator constructor will enumerate.
inline constexpr int kClosureCap = 1024;
/// Orders up to this bound get the full O(n^3) associativity check; above it
/// construction spot-checks random triples instead.
inline constexpr int kFullAssociativityCap = 256;
inline constexpr int kAssociativitySpotChecks = 100000;
/// `symmetric:n` is capped here because the downstream exhaustive invariant
/// scans are exponential in the order.
inline constexpr int kSymmetricCap = 6;
/// Any catalog group, including products, must fit this order.
inline constexpr int kCatalogOrderCap = 1024;

/// A finite group as a validated Cayley table: cayley(i, j) is the index of
/// g_i * g_j. Immutable after construction and safe to share across threads.
struct GroupTable {
  Eigen::MatrixXi cayley;
  std::vector<std::string> names;
  int identity = 0;

  int order() const { return static_cast<int>(cayley.rows()); }
  int mul(int i, int j) const { return cayley(i, j); }
  bool commutes(int i, int j) const { return cayley(i, j) == cayley(j, i); }

  int inverse(int i) const {
    for (int j = 0; j < order(); ++j)
      if (cayley(i, j) == identity) return j;
    return -1;  // unreachable on a validated table
  }
};

/// Result of the centralizer-trichotomy check: either the condition holds
/// for every pair of non-central elements, or `witness` names a violating
/// pair (u, v) with C(u) != C(v) and C(u) & C(v) != Z(G).
struct ConCheckResult {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;
};

/// Validate a raw table against the four group axioms (Latin square,
/// identity, associativity, inverses). The identity index is discovered.
/// Throws NotAGroup with the offending indices on any failure.
GroupTable from_cayley(const Eigen::MatrixXi& raw, std::vector<std::string> names);

/// Close a generating set of permutations under composition by breadth-first
/// enumeration. Element 0 is the identity; names are cycle notations.
/// `degree` is only consulted when `gens` is empty (the trivial group).
GroupTable from_generators(const std::vector<Permutation>& gens, int degree = 1,
                           int closure_cap = kClosureCap);

/// Named constructors: `cyclic:n`, `dihedral:2m` (order 2m, m >= 2),
/// `symmetric:n` (n <= 6), `quaternion:8`, `elementary_abelian:p^k`,
/// `product:<spec>x<spec>`. Element order is canonical: identity first,
/// remaining central elements next, then the non-central elements grouped
/// by commuting component.
GroupTable catalog(const std::string& spec);

/// Z(G): the elements commuting with everything. Always contains the identity.
Subset center(const GroupTable& g);

/// C(v): the elements commuting with v. A subgroup containing v and Z(G).
Subset centralizer(const GroupTable& g, int v);

/// All n centralizers at once (row v = C(v)).
std::vector<Subset> all_centralizers(const GroupTable& g);

bool is_abelian(const GroupTable& g);

/// Check the trichotomy "C(u) = C(v) or C(u) & C(v) = Z(G)" over all pairs
/// of non-central elements. Abelian groups hold vacuously (the condition
/// quantifies over an empty set).
ConCheckResult satisfies_con(const GroupTable& g);

/// True iff every non-identity element has an abelian centralizer.
bool is_centralizer_abelian(const GroupTable& g);

/// The non-central elements u for which the trichotomy holds against every
/// non-central v. Empty for abelian groups (no non-central elements).
std::vector<int> condi_elements(const GroupTable& g);

}  // namespace cgspec
