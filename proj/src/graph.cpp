#include "cgspec/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "cgspec/errors.hpp"

namespace cgspec {

namespace {

/// Trichotomy check on closed neighbourhoods: every pair of non-central
/// vertices must share either their whole centralizer or exactly the center.
std::optional<std::pair<int, int>> trichotomy_witness_of(const std::vector<Subset>& closed,
                                                         const Subset& center) {
  const int n = static_cast<int>(closed.size());
  for (int u = 0; u < n; ++u) {
    if (center.contains(u)) continue;
    for (int v = u + 1; v < n; ++v) {
      if (center.contains(v)) continue;
      if (closed[u] == closed[v]) continue;
      if (closed[u].intersect_equals(closed[v], center)) continue;
      return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

}  // namespace

CommutingGraph build(const GroupTable& g) {
  const int n = g.order();
  CommutingGraph out;
  out.n = n;
  out.names = g.names;
  out.center = center(g);
  out.adjacency.assign(n, Subset(n));
  out.degrees.assign(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.commutes(u, v)) {
        out.adjacency[u].add(v);
        out.adjacency[v].add(u);
      }
  for (int u = 0; u < n; ++u) out.degrees[u] = out.adjacency[u].count();

  if (!out.abelian()) {
    out.component_partition = components_noncentral(out);
    std::vector<Subset> closed(n, Subset(n));
    for (int v = 0; v < n; ++v) closed[v] = out.closed_neighborhood(v);
    out.trichotomy_witness = trichotomy_witness_of(closed, out.center);
  }
  return out;
}

std::vector<Subset> components_noncentral(const CommutingGraph& g) {
  if (g.abelian()) throw EmptyNoncentralPart("abelian group: G \\ Z(G) is empty");
  std::vector<Subset> comps;
  std::vector<bool> visited(g.n, false);
  for (int start = 0; start < g.n; ++start) {
    if (g.center.contains(start) || visited[start]) continue;
    Subset comp(g.n);
    std::queue<int> q;
    q.push(start);
    visited[start] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.add(u);
      for (int v : (g.adjacency[u] - g.center).members())
        if (!visited[v]) {
          visited[v] = true;
          q.push(v);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;  // discovery from ascending start = order by smallest member
}

std::vector<int> bfs_distances(const CommutingGraph& g, int source) {
  if (source < 0 || source >= g.n) throw std::out_of_range("bfs_distances: bad source");
  std::vector<int> dist(g.n, -1);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adjacency[u].members())
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

int diameter(const CommutingGraph& g) {
  int best = 0;
  for (int src = 0; src < g.n; ++src) {
    auto dist = bfs_distances(g, src);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::string export_dot(const CommutingGraph& g) {
  const bool mark_center = !g.abelian();
  std::string out = "graph {\n";
  for (int v = 0; v < g.n; ++v) {
    out += "  \"" + g.names[v] + "\"";
    if (mark_center && g.center.contains(v)) out += " [style=filled]";
    out += ";\n";
  }
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adjacency[u].members())
      if (u < v) out += "  \"" + g.names[u] + "\" -- \"" + g.names[v] + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace cgspec
