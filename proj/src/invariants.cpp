#include "cgspec/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "cgspec/errors.hpp"
#include "cgspec/spectrum.hpp"

namespace cgspec {

namespace {

struct CentralizerContext {
  Subset z;
  std::vector<Subset> cents;
  explicit CentralizerContext(const GroupTable& g)
      : z(center(g)), cents(all_centralizers(g)) {}
};

long long direct_boundary(const CentralizerContext& ctx, const Subset& s) {
  long long b = 0;
  for (int u : s.members()) b += ctx.cents[u].count_difference(s);
  return b;
}

long long boundary_formula_with(const CentralizerContext& ctx, int n, const Subset& s) {
  const long long size = s.count();
  const long long z_size = ctx.z.count();
  const long long m = ctx.z.count_intersection(s);
  const long long z_minus_s = z_size - m;
  if (m == 0 || z_minus_s == 0)
    throw HypothesisViolated("boundary_formula: need S & Z != {} and Z \\ S != {}");
  long long total = size * z_size + m * (n - 2 * size - z_minus_s);
  const Subset z_or_s = ctx.z | s;
  for (int u : s.members())
    if (!ctx.z.contains(u)) total += ctx.cents[u].count_difference(z_or_s);
  return total;
}

int effective_cap(int cap) { return std::min(cap, kHardExhaustiveCap); }

std::vector<std::uint64_t> adjacency_masks(const CommutingGraph& g) {
  std::vector<std::uint64_t> masks(g.n);
  for (int u = 0; u < g.n; ++u) masks[u] = g.adjacency[u].mask();
  return masks;
}

long long mask_boundary(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  long long b = 0;
  std::uint64_t rest = mask;
  while (rest) {
    const int u = std::countr_zero(rest);
    rest &= rest - 1;
    b += std::popcount(adj[u] & ~mask);
  }
  return b;
}

/// Branch-and-bound maximum clique with a greedy colouring bound.
struct CliqueSearch {
  const std::vector<std::uint64_t>& adj;
  int best_size = 0;
  std::uint64_t best_set = 0;

  void expand(std::uint64_t clique, std::uint64_t candidates) {
    const int size = std::popcount(clique);
    if (size > best_size) {
      best_size = size;
      best_set = clique;
    }
    if (!candidates) return;

    // Greedy colouring; vertices recorded with ascending colour numbers.
    std::vector<std::pair<int, int>> colored;
    std::uint64_t rest = candidates;
    int color = 0;
    while (rest) {
      ++color;
      std::uint64_t avail = rest;
      while (avail) {
        const int v = std::countr_zero(avail);
        colored.emplace_back(v, color);
        rest &= ~(1ull << v);
        avail &= ~(1ull << v);
        avail &= ~adj[v];
      }
    }
    std::uint64_t p = candidates;
    for (int i = static_cast<int>(colored.size()) - 1; i >= 0; --i) {
      const auto [v, col] = colored[i];
      if (size + col <= best_size) return;
      expand(clique | (1ull << v), p & adj[v]);
      p &= ~(1ull << v);
    }
  }
};

std::pair<int, std::uint64_t> max_clique(const std::vector<std::uint64_t>& adj, int n) {
  CliqueSearch search{adj};
  const std::uint64_t all = n == 64 ? ~0ull : ((1ull << n) - 1);
  search.expand(0, all);
  return {search.best_size, search.best_set};
}

/// Distinct eigenvalues of the closed-form spectrum, read off the graph:
/// 0, |Z|, the |C(u)| of components of size >= 2, and |G|.
std::vector<long long> distinct_closed_form_values(const CommutingGraph& g) {
  std::vector<long long> values{0, g.center.count()};
  for (const auto& comp : g.component_partition)
    if (comp.count() >= 2) values.push_back(g.degrees[comp.smallest()] + 1);
  values.push_back(g.n);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Subset big_c_of_graph(const CommutingGraph& g) {
  Subset out(g.n);
  const long long z = g.center.count();
  for (int v = 0; v < g.n; ++v)
    if (g.degrees[v] - z > 0) out.add(v);
  return out;
}

}  // namespace

SubsetBoundary edge_boundary(const CommutingGraph& g, const Subset& s) {
  if (s.count() == 0 || s.count() == g.n)
    throw EmptyOrFullSubset("edge_boundary: subset must be nonempty and proper");
  long long b = 0;
  for (int u : s.members()) b += g.adjacency[u].count_difference(s);
  return SubsetBoundary{s, b, Rational(b, s.count())};
}

long long boundary_formula(const GroupTable& g, const Subset& s) {
  if (is_abelian(g)) throw HypothesisViolated("boundary_formula: group must be non-abelian");
  CentralizerContext ctx(g);
  return boundary_formula_with(ctx, g.order(), s);
}

bool boundary_lower_bounds_check(const GroupTable& g, const Subset& s) {
  if (is_abelian(g))
    throw HypothesisViolated("boundary_lower_bounds_check: group must be non-abelian");
  if (s.count() == 0) throw HypothesisViolated("boundary_lower_bounds_check: subset is empty");
  CentralizerContext ctx(g);
  const int n = g.order();
  const bool case_disjoint = !s.intersects(ctx.z);
  const bool case_contains = ctx.z.is_subset_of(s) && 2 * s.count() <= n;
  const bool case_inside = s.is_subset_of(ctx.z);
  if (!case_disjoint && !case_contains && !case_inside)
    throw HypothesisViolated("boundary_lower_bounds_check: subset fits none of the three cases");
  return direct_boundary(ctx, s) >= static_cast<long long>(s.count()) * ctx.z.count();
}

IsoExact isoperimetric_exact(const CommutingGraph& g, int cap, bool strict) {
  const int n = g.n;
  if (n < 2) throw EmptyOrFullSubset("isoperimetric_exact: need at least 2 vertices");
  if (n > effective_cap(cap))
    throw SizeCapExceeded("isoperimetric_exact: order " + std::to_string(n) +
                          " exceeds the exhaustive cap " + std::to_string(effective_cap(cap)));
  const int max_size = strict ? (n - 1) / 2 : n / 2;
  if (max_size < 1)
    throw EmptyOrFullSubset("isoperimetric_exact: no subsets satisfy the strict size bound");

  const auto adj = adjacency_masks(g);
  long long best_b = -1, best_s = 1;
  std::uint64_t best_mask = 0;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size > max_size) continue;
    const long long b = mask_boundary(adj, mask);
    if (best_b < 0 || b * best_s < best_b * size) {
      best_b = b;
      best_s = size;
      best_mask = mask;
    }
  }
  return IsoExact{Rational(best_b, best_s), Subset::from_mask(n, best_mask)};
}

IsoTheorem isoperimetric_theorem(const GroupTable& g) {
  IsoTheorem out;
  const int n = g.order();
  if (is_abelian(g)) {
    if (n < 2) {
      out.kind = IsoTheorem::Kind::not_applicable;
      return out;
    }
    out.kind = IsoTheorem::Kind::exact;
    out.exact = Rational((n + 1) / 2);
    return out;
  }
  if (!satisfies_con(g).holds) {
    out.kind = IsoTheorem::Kind::unknown;
    return out;
  }
  const Subset z = center(g);
  const long long z_size = z.count();
  if (z_size == 1) {
    out.kind = IsoTheorem::Kind::exact;
    out.exact = Rational(1);
    return out;
  }
  if (z_size == 2) {
    // Uniform component size l with l < |G|/2 and l not dividing |G|/2 - 1.
    long long l = -1;
    bool uniform = true;
    for (int v = 0; v < n && uniform; ++v) {
      if (z.contains(v)) continue;
      const long long lv = centralizer(g, v).count() - z_size;
      if (l < 0) l = lv;
      uniform = lv == l;
    }
    if (uniform && 2 * l < n && (n / 2 - 1) % l != 0) {
      out.kind = IsoTheorem::Kind::exact;
      out.exact = Rational(2);
      return out;
    }
  }
  out.kind = IsoTheorem::Kind::bounds;
  out.lower = Rational(z_size, 2);
  out.upper_squared = z_size * (2 * (n - 1) - z_size);
  return out;
}

bool subset_ratio_bounds_check(const CommutingGraph& g, const Subset& s) {
  if (g.abelian() || !g.condition_holds())
    throw HypothesisViolated(
        "subset_ratio_bounds_check: group must be non-abelian with the trichotomy");
  if (s.count() == 0 || s.count() == g.n)
    throw EmptyOrFullSubset("subset_ratio_bounds_check: subset must be nonempty and proper");
  long long b = 0;
  for (int u : s.members()) b += g.adjacency[u].count_difference(s);
  const long long size = s.count();
  const long long co_size = g.n - size;
  const long long z = g.center.count();
  return z * size * co_size <= b * g.n && b <= size * co_size;
}

bool subset_ratio_bounds_check(const GroupTable& g, const Subset& s) {
  return subset_ratio_bounds_check(build(g), s);
}

BipartitionWidth bipartition_width(const CommutingGraph& g, int cap) {
  BipartitionWidth out;
  const int n = g.n;
  const long long z = g.center.count();
  if (!g.abelian() && g.condition_holds())
    out.lower_bound = n % 2 == 0 ? Rational(static_cast<long long>(n) * z, 4)
                                 : Rational((static_cast<long long>(n) * n - 1) * z, 4LL * n);
  if (n == 1) {
    out.exact = 0;
    out.argmin = Subset(1);
    return out;
  }
  if (n > effective_cap(cap)) return out;

  const auto adj = adjacency_masks(g);
  const int half = n / 2;
  long long best = std::numeric_limits<long long>::max();
  std::uint64_t best_mask = 0;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (std::popcount(mask) != half) continue;
    const long long b = mask_boundary(adj, mask);
    if (b < best) {
      best = b;
      best_mask = mask;
    }
  }
  out.exact = best;
  out.argmin = Subset::from_mask(n, best_mask);
  return out;
}

CliqueNumber clique_number(const CommutingGraph& g, int cap) {
  CliqueNumber out;
  const long long z = g.center.count();
  if (g.abelian()) {
    out.formula = g.n;
  } else if (g.condition_holds()) {
    const Subset big_c = big_c_of_graph(g);
    if (big_c == g.center) {
      out.formula = z + 1;
    } else {
      const auto values = distinct_closed_form_values(g);
      out.formula = values[values.size() - 2];  // second largest eigenvalue
    }
  }
  if (g.n <= effective_cap(cap)) {
    const auto adj = adjacency_masks(g);
    auto [size, mask] = max_clique(adj, g.n);
    out.exact = size;
    out.witness = Subset::from_mask(g.n, mask);
  }
  return out;
}

IndependenceNumber independence_number(const CommutingGraph& g, int cap) {
  IndependenceNumber out;
  long long c_min = g.n;
  for (int v = 0; v < g.n; ++v) c_min = std::min<long long>(c_min, g.degrees[v] + 1);
  out.upper_c = g.n - c_min + 1;

  if (!g.abelian() && g.condition_holds() && big_c_of_graph(g) == Subset::full(g.n)) {
    const auto values = distinct_closed_form_values(g);
    if (values.size() >= 3) out.lambda3 = values[2];
  }

  if (g.n <= effective_cap(cap)) {
    auto adj = adjacency_masks(g);
    const std::uint64_t all = g.n == 64 ? ~0ull : ((1ull << g.n) - 1);
    std::vector<std::uint64_t> complement(g.n);
    for (int v = 0; v < g.n; ++v) complement[v] = ~adj[v] & all & ~(1ull << v);
    auto [size, mask] = max_clique(complement, g.n);
    out.exact = size;
    out.witness = Subset::from_mask(g.n, mask);
  }
  return out;
}

MeanDistance mean_distance(const CommutingGraph& g, const GroupTable& group) {
  MeanDistance out;
  const long long n = group.order();
  long long total = 0;
  for (int src = 0; src < g.n; ++src)
    for (int d : bfs_distances(g, src)) total += d;
  out.direct = Rational(total, n * n);

  long long degree_sum = 0;
  for (int v = 0; v < g.n; ++v) degree_sum += g.degrees[v];
  if (g.abelian())
    out.formula = Rational(n - 1, n);
  else if (g.condition_holds())
    out.formula = Rational(2 * n * n - 2 * n - degree_sum, n * n);
  return out;
}

Subset big_c_set(const GroupTable& g) {
  const int n = g.order();
  const long long z = center(g).count();
  Subset out(n);
  for (int v = 0; v < n; ++v)
    if (centralizer(g, v).count() - 1 - z > 0) out.add(v);
  return out;
}

namespace {

Claim make_claim(std::string name, Claim::Status status, std::string detail = "") {
  return Claim{std::move(name), status, std::move(detail)};
}

Claim pass_fail(std::string name, bool ok, std::string detail = "") {
  return Claim{std::move(name), ok ? Claim::Status::pass : Claim::Status::fail,
               std::move(detail)};
}

/// One pass over all subsets of a small group checking the boundary formula,
/// the three-case lower bound, and the ratio bounds.
struct ExhaustiveScan {
  bool formula_ok = true;
  bool inequality_ok = true;
  bool ratio_ok = true;
  long long formula_checked = 0;
  long long inequality_checked = 0;
  long long ratio_checked = 0;
};

ExhaustiveScan scan_all_subsets(const GroupTable& group, const CommutingGraph& g) {
  ExhaustiveScan scan;
  const int n = g.n;
  const auto adj = adjacency_masks(g);
  const std::uint64_t z_mask = g.center.mask();
  const long long z = g.center.count();
  std::vector<std::uint64_t> cent_masks(n);
  for (int v = 0; v < n; ++v) cent_masks[v] = adj[v] | (1ull << v);
  const bool con = g.condition_holds();

  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 1; mask + 1 < limit; ++mask) {
    const long long size = std::popcount(mask);
    const long long b = mask_boundary(adj, mask);
    const long long m = std::popcount(mask & z_mask);

    if (m >= 1 && z - m >= 1) {
      long long formula = size * z + m * (n - 2 * size - (z - m));
      std::uint64_t rest = mask & ~z_mask;
      while (rest) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        formula += std::popcount(cent_masks[u] & ~z_mask & ~mask);
      }
      ++scan.formula_checked;
      if (formula != b) scan.formula_ok = false;
    }

    const bool case_a = m == 0;
    const bool case_b = m == z && 2 * size <= n;
    const bool case_c = (mask & ~z_mask) == 0;
    if (case_a || case_b || case_c) {
      ++scan.inequality_checked;
      if (b < size * z) scan.inequality_ok = false;
    }

    if (con) {
      ++scan.ratio_checked;
      const long long co_size = n - size;
      if (!(z * size * co_size <= b * n && b <= size * co_size)) scan.ratio_ok = false;
    }
  }
  return scan;
}

}  // namespace

InvariantReport full_report(const GroupTable& group, const ReportOptions& options) {
  const CommutingGraph g = build(group);
  const int n = g.n;
  const long long z = g.center.count();
  const int cap = effective_cap(options.cap);

  InvariantReport report;
  report.order = n;
  report.center_size = z;
  report.abelian = g.abelian();
  report.condition_holds = g.condition_holds();
  report.diameter_value = diameter(g);
  report.mean = mean_distance(g, group);
  report.clique = clique_number(g, cap);
  report.independence = independence_number(g, cap);
  report.iso_theorem = isoperimetric_theorem(group);
  report.bipartition = bipartition_width(g, cap);
  report.big_c = big_c_of_graph(g);
  report.c_min = n;
  for (int v = 0; v < n; ++v) report.c_min = std::min<long long>(report.c_min, g.degrees[v] + 1);

  try {
    report.iso_exact = isoperimetric_exact(g, cap, options.iso_strict);
  } catch (const SizeCapExceeded&) {
    report.iso_cap_exceeded = true;
  } catch (const EmptyOrFullSubset&) {
    // trivial group, or the strict bound admits no subsets: leave empty
  }

  // Algebraic connectivity: |Z(G)| in closed form; numeric second-smallest
  // as a fallback for groups without the trichotomy.
  if (report.abelian || report.condition_holds) {
    if (n >= 2) {
      report.algebraic_connectivity = Rational(z);
      report.algebraic_connectivity_source = "closed-form";
    }
  } else if (n <= kNumericCheckCap) {
    const auto clustered = cluster_multiplicities(numeric_spectrum(laplacian(g), options.tol));
    if (clustered.pairs.size() >= 2) {
      report.algebraic_connectivity = clustered.pairs[1].first;
      report.algebraic_connectivity_source = "numeric";
    }
  }

  auto& claims = report.claims;

  // diameter: 1 for abelian groups (n >= 2), 2 for trichotomy groups.
  if (n == 1)
    claims.push_back(pass_fail("diameter", report.diameter_value == 0, "single vertex"));
  else if (report.abelian)
    claims.push_back(pass_fail("diameter", report.diameter_value == 1,
                               "complete graph, diameter " + std::to_string(report.diameter_value)));
  else if (report.condition_holds)
    claims.push_back(pass_fail("diameter", report.diameter_value == 2,
                               "diameter " + std::to_string(report.diameter_value)));
  else
    claims.push_back(make_claim("diameter", Claim::Status::not_applicable,
                                "no closed-form value without the trichotomy"));

  if (report.mean.formula)
    claims.push_back(pass_fail("mean-distance-formula", report.mean.direct == *report.mean.formula,
                               "direct " + report.mean.direct.str() + ", formula " +
                                   report.mean.formula->str()));
  else
    claims.push_back(make_claim("mean-distance-formula", Claim::Status::not_applicable));

  if (report.clique.exact && report.clique.formula)
    claims.push_back(pass_fail(
        "clique-formula", static_cast<long long>(*report.clique.exact) == *report.clique.formula,
        "search " + std::to_string(*report.clique.exact) + ", formula " +
            std::to_string(*report.clique.formula)));
  else if (!report.clique.formula)
    claims.push_back(make_claim("clique-formula", Claim::Status::not_applicable));
  else
    claims.push_back(make_claim("clique-formula", Claim::Status::cap_exceeded));

  if (report.independence.exact) {
    const long long alpha = *report.independence.exact;
    claims.push_back(pass_fail("independence-interval",
                               1 <= alpha && alpha <= report.independence.upper_c,
                               "alpha " + std::to_string(alpha) + " in [1, " +
                                   std::to_string(report.independence.upper_c) + "]"));
  } else {
    claims.push_back(make_claim("independence-interval", Claim::Status::cap_exceeded));
  }

  if (report.independence.lambda3) {
    bool ok = *report.independence.lambda3 == report.c_min;
    if (report.independence.exact)
      ok = ok && *report.independence.exact <= n - *report.independence.lambda3 + 1;
    claims.push_back(pass_fail("independence-third-eigenvalue", ok,
                               "lambda3 " + std::to_string(*report.independence.lambda3) +
                                   ", min |C(v)| " + std::to_string(report.c_min)));
  } else {
    claims.push_back(make_claim("independence-third-eigenvalue", Claim::Status::not_applicable));
  }

  switch (report.iso_theorem.kind) {
    case IsoTheorem::Kind::exact:
      if (report.iso_exact)
        claims.push_back(pass_fail("isoperimetric-theorem",
                                   report.iso_exact->value == report.iso_theorem.exact,
                                   "scan " + report.iso_exact->value.str() + ", theorem " +
                                       report.iso_theorem.exact.str()));
      else
        claims.push_back(make_claim("isoperimetric-theorem", Claim::Status::cap_exceeded));
      break;
    case IsoTheorem::Kind::bounds:
      if (report.iso_exact) {
        const Rational i = report.iso_exact->value;
        const bool ok = report.iso_theorem.lower <= i &&
                        i * i <= Rational(report.iso_theorem.upper_squared);
        claims.push_back(pass_fail("isoperimetric-theorem", ok,
                                   "scan " + i.str() + " within the bound interval"));
      } else {
        claims.push_back(make_claim("isoperimetric-theorem", Claim::Status::cap_exceeded));
      }
      break;
    default:
      claims.push_back(make_claim("isoperimetric-theorem", Claim::Status::not_applicable));
  }

  if (!report.abelian && report.condition_holds && report.iso_exact) {
    const Rational i = report.iso_exact->value;
    const bool ok = Rational(z, 2) <= i && i * i <= Rational(z * (2 * (n - 1) - z));
    claims.push_back(pass_fail("isoperimetric-spectral-bounds", ok,
                               "i " + i.str() + ", |Z| " + std::to_string(z)));
  } else if (!report.abelian && report.condition_holds) {
    claims.push_back(make_claim("isoperimetric-spectral-bounds", Claim::Status::cap_exceeded));
  } else {
    claims.push_back(make_claim("isoperimetric-spectral-bounds", Claim::Status::not_applicable));
  }

  if (!report.abelian && report.condition_holds) {
    const auto& comps = g.component_partition;
    const Subset* smallest = &comps.front();
    for (const auto& comp : comps)
      if (comp.count() < smallest->count()) smallest = &comp;
    const auto boundary = edge_boundary(g, *smallest);
    bool ok = boundary.ratio == Rational(z);
    if (report.iso_exact) ok = ok && report.iso_exact->value <= boundary.ratio;
    claims.push_back(pass_fail("smallest-component-ratio", ok,
                               "ratio at the smallest component " + boundary.ratio.str()));
  } else {
    claims.push_back(make_claim("smallest-component-ratio", Claim::Status::not_applicable));
  }

  if (report.bipartition.lower_bound) {
    if (report.bipartition.exact)
      claims.push_back(
          pass_fail("bipartition-lower-bound",
                    Rational(*report.bipartition.exact) >= *report.bipartition.lower_bound,
                    "bw " + std::to_string(*report.bipartition.exact) + " >= " +
                        report.bipartition.lower_bound->str()));
    else
      claims.push_back(make_claim("bipartition-lower-bound", Claim::Status::cap_exceeded));
  } else {
    claims.push_back(make_claim("bipartition-lower-bound", Claim::Status::not_applicable));
  }

  if ((report.abelian && n >= 2) || (!report.abelian && report.condition_holds)) {
    if (n <= kNumericCheckCap) {
      const auto clustered =
          cluster_multiplicities(numeric_spectrum(laplacian(g), options.tol));
      const bool ok = clustered.pairs.size() >= 2 && clustered.pairs[1].first == Rational(z);
      claims.push_back(pass_fail("algebraic-connectivity-center-order", ok,
                                 "second-smallest eigenvalue vs |Z| = " + std::to_string(z)));
    } else {
      claims.push_back(
          make_claim("algebraic-connectivity-center-order", Claim::Status::cap_exceeded,
                     "numeric check skipped above order " + std::to_string(kNumericCheckCap)));
    }
  } else {
    claims.push_back(make_claim("algebraic-connectivity-center-order",
                                Claim::Status::not_applicable));
  }

  if (!report.abelian && report.condition_holds) {
    bool ok = true;
    for (const auto& comp : g.component_partition) {
      for (int u : comp.members()) {
        Subset others = comp;
        others.remove(u);
        ok = ok && others.is_subset_of(g.adjacency[u]);
        ok = ok && g.closed_neighborhood(u) == (comp | g.center);
      }
    }
    claims.push_back(pass_fail("component-clique-structure", ok,
                               std::to_string(g.component_partition.size()) + " components"));
  } else {
    claims.push_back(make_claim("component-clique-structure", Claim::Status::not_applicable));
  }

  if (!report.abelian && n <= cap) {
    const auto scan = scan_all_subsets(group, g);
    claims.push_back(pass_fail("boundary-formula-exhaustive", scan.formula_ok,
                               std::to_string(scan.formula_checked) + " qualifying subsets"));
    claims.push_back(pass_fail("boundary-inequality-exhaustive", scan.inequality_ok,
                               std::to_string(scan.inequality_checked) + " qualifying subsets"));
    if (report.condition_holds)
      claims.push_back(pass_fail("subset-ratio-bounds-exhaustive", scan.ratio_ok,
                                 std::to_string(scan.ratio_checked) + " proper subsets"));
    else
      claims.push_back(make_claim("subset-ratio-bounds-exhaustive",
                                  Claim::Status::not_applicable));
  } else if (!report.abelian) {
    claims.push_back(make_claim("boundary-formula-exhaustive", Claim::Status::cap_exceeded));
    claims.push_back(make_claim("boundary-inequality-exhaustive", Claim::Status::cap_exceeded));
    claims.push_back(make_claim("subset-ratio-bounds-exhaustive", Claim::Status::cap_exceeded));
  } else {
    claims.push_back(make_claim("boundary-formula-exhaustive", Claim::Status::not_applicable));
    claims.push_back(make_claim("boundary-inequality-exhaustive", Claim::Status::not_applicable));
    claims.push_back(make_claim("subset-ratio-bounds-exhaustive", Claim::Status::not_applicable));
  }

  return report;
}

}  // namespace cgspec
