#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgspec/group.hpp"
#include "cgspec/subset.hpp"

namespace cgspec {

/// The commuting graph of a finite group: vertices are the group elements,
/// u ~ v iff uv = vu and u != v. Always connected (the identity is adjacent
/// to everything). Immutable after build; safe for shared concurrent reads.
struct CommutingGraph {
  int n = 0;
  std::vector<Subset> adjacency;  // row u = neighbours of u
  std::vector<int> degrees;
  std::vector<std::string> names;
  Subset center;
  /// Connected components of the subgraph induced on the non-central part,
  /// ordered by smallest member; empty for abelian groups.
  std::vector<Subset> component_partition;
  /// A pair of non-central elements violating the centralizer trichotomy,
  /// or nullopt when the condition holds (vacuously so for abelian groups).
  std::optional<std::pair<int, int>> trichotomy_witness;

  bool abelian() const { return center.count() == n; }
  bool condition_holds() const { return !trichotomy_witness.has_value(); }
  /// Closed neighbourhood of v, i.e. C(v) read off the graph.
  Subset closed_neighborhood(int v) const {
    Subset s = adjacency[v];
    s.add(v);
    return s;
  }
};

CommutingGraph build(const GroupTable& g);

/// Connected components of the induced subgraph on the non-central part,
/// ordered by smallest member index. Throws EmptyNoncentralPart for abelian
/// groups.
std::vector<Subset> components_noncentral(const CommutingGraph& g);

/// Exact single-source shortest-path distances (all finite; the graph is
/// connected).
std::vector<int> bfs_distances(const CommutingGraph& g, int source);

/// Max pairwise distance: 0 for the trivial group, 1 for abelian groups,
/// 2 for every non-abelian group.
int diameter(const CommutingGraph& g);

/// Graphviz text with element names as labels; for non-abelian groups the
/// central vertices carry style=filled. Node order by index, edge order
/// (u, v) with u < v, ascending.
std::string export_dot(const CommutingGraph& g);

}  // namespace cgspec
