#include "cgspec/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cgspec/errors.hpp"
#include "cgspec/graph.hpp"
#include "cgspec/group.hpp"

namespace cgspec {

namespace {

const std::vector<std::string> kAbelianSpecs = {
    "cyclic:1", "cyclic:2", "cyclic:5", "cyclic:8", "cyclic:12",
    "elementary_abelian:2^3", "elementary_abelian:3^2", "product:cyclic:2xcyclic:4",
};

const std::vector<std::string> kConSpecs = {
    "symmetric:3", "dihedral:6",  "dihedral:8",  "dihedral:10",
    "dihedral:12", "dihedral:16", "quaternion:8", "product:cyclic:2xdihedral:8",
};

const std::vector<std::string> kNonConSpecs = {"symmetric:4"};

const std::vector<std::string> kExhaustiveSpecs = {
    "symmetric:3", "dihedral:8", "quaternion:8", "dihedral:12", "dihedral:16",
    "product:cyclic:2xdihedral:8",
};

struct Session {
  VerifyOptions options;
  std::vector<CheckResult> results;
  std::map<std::string, GroupTable> groups;
  std::map<std::string, CommutingGraph> graphs;

  const GroupTable& group(const std::string& spec) {
    auto it = groups.find(spec);
    if (it == groups.end()) it = groups.emplace(spec, catalog(spec)).first;
    return it->second;
  }

  const CommutingGraph& graph(const std::string& spec) {
    auto it = graphs.find(spec);
    if (it == graphs.end()) {
      CommutingGraph g = build(group(spec));
      if (options.inject_adjacency_fault && spec == "dihedral:8" && g.n >= 4) {
        g.adjacency[2].remove(3);
        g.adjacency[3].remove(2);
      }
      it = graphs.emplace(spec, std::move(g)).first;
    }
    return it->second;
  }

  std::vector<std::string> all_specs() const {
    std::vector<std::string> out(kAbelianSpecs);
    out.insert(out.end(), kConSpecs.begin(), kConSpecs.end());
    out.insert(out.end(), kNonConSpecs.begin(), kNonConSpecs.end());
    return out;
  }

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok ? CheckResult::Status::pass : CheckResult::Status::fail, detail});
  }

  void skip(const std::string& name, const std::string& detail) {
    results.push_back({name, CheckResult::Status::skip, detail});
  }
};

std::string join_failures(const std::vector<std::string>& failures) {
  std::string out;
  for (const auto& f : failures) {
    if (!out.empty()) out += "; ";
    out += f;
  }
  return out;
}

void group_axiom_checks(Session& s) {
  std::vector<std::string> bad;
  for (const auto& spec : s.all_specs()) {
    try {
      const GroupTable& g = s.group(spec);
      from_cayley(g.cayley, g.names);  // revalidates all four axioms
      if (g.identity != 0) bad.push_back(spec + ": identity not at index 0");
    } catch (const std::exception& e) {
      bad.push_back(spec + ": " + e.what());
    }
  }
  s.check("catalog-construction", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const GroupTable& g = s.group(spec);
    for (int v = 0; v < g.order(); ++v)
      if (g.order() % centralizer(g, v).count() != 0) {
        bad.push_back(spec + ": |C(" + g.names[v] + ")| does not divide |G|");
        break;
      }
  }
  s.check("lagrange-centralizers", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const GroupTable& g = s.group(spec);
    Subset meet = Subset::full(g.order());
    for (int v = 0; v < g.order(); ++v) meet = meet & centralizer(g, v);
    if (meet != center(g)) bad.push_back(spec);
  }
  s.check("center-centralizer-intersection", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const GroupTable& g = s.group(spec);
    if (is_centralizer_abelian(g) && !satisfies_con(g).holds) bad.push_back(spec);
  }
  s.check("centralizer-abelian-implies-trichotomy", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const GroupTable& g = s.group(spec);
    if (!satisfies_con(g).holds || is_abelian(g)) continue;
    const Subset z = center(g);
    bool group_ok = true;
    for (int u = 0; u < g.order() && group_ok; ++u) {
      if (z.contains(u)) continue;
      const auto members = centralizer(g, u).members();
      for (std::size_t a = 0; a < members.size() && group_ok; ++a)
        for (std::size_t b = a + 1; b < members.size() && group_ok; ++b)
          group_ok = g.commutes(members[a], members[b]);
    }
    if (!group_ok) bad.push_back(spec + ": some non-central centralizer is not abelian");
  }
  s.check("trichotomy-centralizers-abelian", bad.empty(), join_failures(bad));

  // Closure construction round trip: rebuilding from the produced table
  // reproduces it.
  bool roundtrip = true;
  std::string roundtrip_detail;
  try {
    const GroupTable s3 = from_generators(
        {Permutation::parse_cycles("(1 2)"), Permutation::parse_cycles("(1 2 3)")});
    const GroupTable again = from_cayley(s3.cayley, s3.names);
    roundtrip = s3.order() == 6 && again.cayley == s3.cayley && again.identity == s3.identity;
    const GroupTable z4 = from_generators({Permutation::parse_cycles("(1 2 3 4)")});
    roundtrip = roundtrip && z4.order() == 4 && is_abelian(z4);
    const GroupTable trivial = from_generators({}, 4);
    roundtrip = roundtrip && trivial.order() == 1;
  } catch (const std::exception& e) {
    roundtrip = false;
    roundtrip_detail = e.what();
  }
  s.check("generator-closure-roundtrip", roundtrip, roundtrip_detail);

  const GroupTable& s3 = s.group("symmetric:3");
  bool s3_ok = center(s3) == Subset::of(6, {0}) &&
               centralizer(s3, 1) == Subset::of(6, {0, 1, 2}) && !is_abelian(s3) &&
               is_centralizer_abelian(s3) && satisfies_con(s3).holds &&
               condi_elements(s3).size() == 5;
  s.check("s3-centralizer-structure", s3_ok);

  const GroupTable& s4 = s.group("symmetric:4");
  const auto con4 = satisfies_con(s4);
  bool witness_ok = !con4.holds && con4.witness.has_value();
  if (witness_ok) {
    const auto [u, v] = *con4.witness;
    const Subset z = center(s4);
    const Subset cu = centralizer(s4, u), cv = centralizer(s4, v);
    witness_ok = !(cu == cv) && !((cu & cv) == z) && !z.contains(u) && !z.contains(v);
  }
  s.check("s4-trichotomy-witness", witness_ok);

  const auto condi = condi_elements(s4);
  bool condi_ok = condi.size() == 8;
  for (int u : condi) {
    // exactly the order-3 elements (the 3-cycles)
    condi_ok = condi_ok && s4.mul(u, s4.mul(u, u)) == s4.identity && u != s4.identity;
  }
  s.check("s4-condi-three-cycles", condi_ok,
          "found " + std::to_string(condi.size()) + " elements");
}

void graph_checks(Session& s) {
  std::vector<std::string> bad;
  for (const auto& spec : s.all_specs()) {
    const GroupTable& g = s.group(spec);
    const CommutingGraph& graph = s.graph(spec);
    long long twice_edges = 0;
    for (int v = 0; v < graph.n; ++v) twice_edges += graph.adjacency[v].count();
    long long degree_sum = 0;
    for (int v = 0; v < graph.n; ++v) degree_sum += centralizer(g, v).count() - 1;
    if (twice_edges != degree_sum) bad.push_back(spec);
  }
  s.check("edge-count-degree-sum", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const CommutingGraph& graph = s.graph(spec);
    const auto dist = bfs_distances(graph, 0);
    for (int v = 0; v < graph.n; ++v)
      if (dist[v] < 0 || dist[v] > 1) {
        bad.push_back(spec);
        break;
      }
  }
  s.check("identity-bfs-connectivity", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : kConSpecs) {
    const GroupTable& g = s.group(spec);
    const CommutingGraph& graph = s.graph(spec);
    for (const auto& comp : graph.component_partition)
      for (int u : comp.members())
        if (!(centralizer(g, u) == (comp | graph.center))) {
          bad.push_back(spec);
          break;
        }
  }
  s.check("component-centralizer-identity", bad.empty(), join_failures(bad));

  const CommutingGraph& s3 = s.graph("symmetric:3");
  bool s3_comp = s3.component_partition.size() == 4 &&
                 s3.component_partition[0] == Subset::of(6, {1, 2}) &&
                 s3.component_partition[1] == Subset::of(6, {3}) &&
                 s3.component_partition[2] == Subset::of(6, {4}) &&
                 s3.component_partition[3] == Subset::of(6, {5});
  const CommutingGraph& d8 = s.graph("dihedral:8");
  bool d8_comp = d8.component_partition.size() == 3 &&
                 d8.component_partition[0] == Subset::of(8, {2, 3}) &&
                 d8.component_partition[1] == Subset::of(8, {4, 5}) &&
                 d8.component_partition[2] == Subset::of(8, {6, 7});
  s.check("component-counts", s3_comp && d8_comp);

  bool identical = d8.n == s.graph("quaternion:8").n;
  for (int v = 0; identical && v < d8.n; ++v)
    identical = d8.adjacency[v] == s.graph("quaternion:8").adjacency[v];
  s.check("d8-q8-adjacency-identical", identical);

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const CommutingGraph& graph = s.graph(spec);
    const int expected = graph.n == 1 ? 0 : (graph.abelian() ? 1 : 2);
    if (diameter(graph) != expected) bad.push_back(spec);
  }
  s.check("diameter-values", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const CommutingGraph& graph = s.graph(spec);
    const LaplacianMatrix l = laplacian(graph);
    bool ok = l == LaplacianMatrix(l.transpose());
    for (int i = 0; i < graph.n && ok; ++i) {
      ok = l.row(i).sum() == 0 && l(i, i) == graph.degrees[i];
      for (int j = 0; j < graph.n && ok; ++j)
        if (i != j) ok = l(i, j) == 0 || l(i, j) == -1;
    }
    if (!ok) bad.push_back(spec);
  }
  s.check("laplacian-structure", bad.empty(), join_failures(bad));

  Eigen::MatrixXi l8(8, 8);
  l8 << 7, -1, -1, -1, -1, -1, -1, -1,
      -1, 7, -1, -1, -1, -1, -1, -1,
      -1, -1, 3, -1, 0, 0, 0, 0,
      -1, -1, -1, 3, 0, 0, 0, 0,
      -1, -1, 0, 0, 3, -1, 0, 0,
      -1, -1, 0, 0, -1, 3, 0, 0,
      -1, -1, 0, 0, 0, 0, 3, -1,
      -1, -1, 0, 0, 0, 0, -1, 3;
  s.check("d8-laplacian-matrix", laplacian(d8) == l8);

  const std::string trivial_dot = export_dot(s.graph("cyclic:1"));
  bool dot_ok = trivial_dot == "graph {\n  \"id\";\n}\n";
  auto count_lines = [](const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + 1))
      ++count;
    return count;
  };
  const std::string s3_dot = export_dot(s3);
  dot_ok = dot_ok && count_lines(s3_dot, " -- ") == 6;
  const CommutingGraph c3 = build(s.group("cyclic:5"));
  dot_ok = dot_ok && count_lines(export_dot(c3), " -- ") == 10;  // K5
  s.check("dot-export-shape", dot_ok);
}

SpectrumReport expected_pairs(std::vector<std::pair<long long, int>> pairs) {
  SpectrumReport r;
  for (auto [v, m] : pairs) r.pairs.emplace_back(Rational(v), m);
  return r;
}

void spectrum_checks(Session& s) {
  bool s3_ok = closed_form_spectrum(s.group("symmetric:3")).report ==
               expected_pairs({{0, 1}, {1, 3}, {3, 1}, {6, 1}});
  s.check("s3-closed-form-spectrum", s3_ok);

  const auto order8 = expected_pairs({{0, 1}, {2, 2}, {4, 3}, {8, 2}});
  bool d8_ok = closed_form_spectrum(s.group("dihedral:8")).report == order8;
  bool q8_ok = closed_form_spectrum(s.group("quaternion:8")).report == order8;
  bool c8_ok = closed_form_spectrum(s.group("cyclic:8")).report ==
               expected_pairs({{0, 1}, {8, 7}});
  s.check("order8-closed-form-spectra", d8_ok && q8_ok && c8_ok);

  std::vector<std::string> bad;
  for (const auto& spec : kAbelianSpecs) {
    const int n = s.group(spec).order();
    const auto expected = n == 1 ? expected_pairs({{0, 1}})
                                 : expected_pairs({{0, 1}, {n, n - 1}});
    if (!(closed_form_spectrum(s.group(spec)).report == expected)) bad.push_back(spec);
  }
  s.check("abelian-closed-form-family", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& specs : {kAbelianSpecs, kConSpecs})
    for (const auto& spec : specs) {
      const auto closed = closed_form_spectrum(s.group(spec));
      const auto clustered =
          cluster_multiplicities(numeric_spectrum(laplacian(s.graph(spec)), s.options.tol));
      if (!(clustered.pairs == closed.report.pairs)) bad.push_back(spec);
    }
  s.check("closed-numeric-agreement", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const auto clustered =
        cluster_multiplicities(numeric_spectrum(laplacian(s.graph(spec)), s.options.tol));
    if (!(clustered.pairs.front() == std::make_pair(Rational(0), 1))) bad.push_back(spec);
  }
  s.check("zero-eigenvalue-multiplicity", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const CommutingGraph& graph = s.graph(spec);
    long long degree_sum = 0;
    for (int v = 0; v < graph.n; ++v) degree_sum += graph.degrees[v];
    try {
      const auto closed = closed_form_spectrum(s.group(spec));
      if (!(closed.report.weighted_sum() == Rational(degree_sum))) bad.push_back(spec);
    } catch (const ConditionNotSatisfied&) {
      // numeric path: cluster means are rational approximations within the
      // cluster gap, so the trace only matches to ~n * gap
      const auto clustered =
          cluster_multiplicities(numeric_spectrum(laplacian(graph), s.options.tol));
      const double sum = clustered.weighted_sum().to_double();
      if (std::abs(sum - static_cast<double>(degree_sum)) > 1e-4) bad.push_back(spec);
    }
  }
  s.check("trace-identity", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : kConSpecs) {
    const long long z = s.graph(spec).center.count();
    const auto clustered =
        cluster_multiplicities(numeric_spectrum(laplacian(s.graph(spec)), s.options.tol));
    if (clustered.pairs.size() < 2 || !(clustered.pairs[1].first == Rational(z)))
      bad.push_back(spec);
  }
  s.check("algebraic-connectivity-center-order", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& specs : {kAbelianSpecs, kConSpecs})
    for (const auto& spec : specs) {
      const auto closed = closed_form_spectrum(s.group(spec));
      const LaplacianMatrix l = laplacian(s.graph(spec));
      for (const auto& basis : closed.bases) {
        for (const auto& y : basis.vectors)
          if (!verify_eigenpair(l, basis.eigenvalue, y)) {
            bad.push_back(spec);
            break;
          }
        if (integer_rank(basis.vectors) != static_cast<int>(basis.vectors.size()))
          bad.push_back(spec + " (rank)");
      }
    }
  s.check("eigenbasis-exactness", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& specs : {kConSpecs, kNonConSpecs})
    for (const auto& spec : specs) {
      const auto certs = spectrum_certificates(s.group(spec));
      const LaplacianMatrix l = laplacian(s.graph(spec));
      const auto clustered =
          cluster_multiplicities(numeric_spectrum(l, s.options.tol));
      for (const auto& cert : certs.certificates) {
        bool sound = static_cast<int>(cert.basis.vectors.size()) == cert.min_multiplicity &&
                     integer_rank(cert.basis.vectors) == cert.min_multiplicity;
        for (const auto& y : cert.basis.vectors)
          sound = sound && verify_eigenpair(l, cert.eigenvalue, y);
        int numeric_mult = 0;
        for (const auto& [value, mult] : clustered.pairs)
          if (value == Rational(cert.eigenvalue)) numeric_mult = mult;
        sound = sound && numeric_mult >= cert.min_multiplicity;
        if (!sound) {
          bad.push_back(spec + " (eigenvalue " + std::to_string(cert.eigenvalue) + ")");
          break;
        }
      }
    }
  s.check("certificate-soundness", bad.empty(), join_failures(bad));

  const auto s4_certs = spectrum_certificates(s.group("symmetric:4"));
  bool found = false;
  for (const auto& cert : s4_certs.certificates)
    if (cert.eigenvalue == 3 && cert.min_multiplicity == 4) found = true;
  s.check("s4-certificate-three-multiplicity", found);
}

void invariant_checks(Session& s) {
  const int cap = std::min(s.options.cap, kHardExhaustiveCap);

  for (const auto& spec : kExhaustiveSpecs) {
    const GroupTable& g = s.group(spec);
    const CommutingGraph& graph = s.graph(spec);
    const std::string suffix = ":" + spec;
    if (g.order() > cap) {
      s.skip("boundary-formula-exhaustive" + suffix,
             "order " + std::to_string(g.order()) + " above cap " + std::to_string(cap));
      s.skip("boundary-inequality-exhaustive" + suffix, "above cap");
      continue;
    }
    const int n = g.order();
    bool formula_ok = true, inequality_ok = true;
    long long formula_count = 0, inequality_count = 0;
    const Subset z = center(g);
    for (std::uint64_t mask = 1; mask + 1 < (1ull << n); ++mask) {
      const Subset subset = Subset::from_mask(n, mask);
      const long long direct = edge_boundary(graph, subset).boundary_size;
      if (z.count_intersection(subset) >= 1 && z.count_difference(subset) >= 1) {
        ++formula_count;
        if (boundary_formula(g, subset) != direct) formula_ok = false;
      }
      const bool a1 = !subset.intersects(z);
      const bool a2 = z.is_subset_of(subset) && 2 * subset.count() <= n;
      const bool a3 = subset.is_subset_of(z);
      if (a1 || a2 || a3) {
        ++inequality_count;
        if (!boundary_lower_bounds_check(g, subset)) inequality_ok = false;
      }
    }
    s.check("boundary-formula-exhaustive" + suffix, formula_ok,
            std::to_string(formula_count) + " qualifying subsets");
    s.check("boundary-inequality-exhaustive" + suffix, inequality_ok,
            std::to_string(inequality_count) + " qualifying subsets");
  }

  for (const std::string spec : {"dihedral:8", "quaternion:8"}) {
    const std::string name = "subset-ratio-bounds-exhaustive:" + spec;
    const CommutingGraph& graph = s.graph(spec);
    if (graph.n > cap) {
      s.skip(name, "above cap");
      continue;
    }
    bool ok = true;
    long long count = 0;
    for (std::uint64_t mask = 1; mask + 1 < (1ull << graph.n); ++mask) {
      ++count;
      if (!subset_ratio_bounds_check(graph, Subset::from_mask(graph.n, mask))) ok = false;
    }
    s.check(name, ok, std::to_string(count) + " proper subsets");
  }

  if (cap >= 8) {
    bool ok = isoperimetric_exact(s.graph("symmetric:3"), cap).value == Rational(1) &&
              isoperimetric_exact(s.graph("dihedral:8"), cap).value == Rational(2) &&
              isoperimetric_exact(s.graph("quaternion:8"), cap).value == Rational(2);
    s.check("isoperimetric-exact-values", ok);
  } else {
    s.skip("isoperimetric-exact-values", "above cap");
  }

  std::vector<std::string> bad;
  int compared = 0;
  for (const auto& spec : s.all_specs()) {
    const GroupTable& g = s.group(spec);
    if (g.order() > cap || g.order() < 2) continue;
    const auto theorem = isoperimetric_theorem(g);
    const auto exact = isoperimetric_exact(s.graph(spec), cap);
    ++compared;
    if (theorem.kind == IsoTheorem::Kind::exact && !(exact.value == theorem.exact))
      bad.push_back(spec);
    if (theorem.kind == IsoTheorem::Kind::bounds &&
        !(theorem.lower <= exact.value &&
          exact.value * exact.value <= Rational(theorem.upper_squared)))
      bad.push_back(spec);
  }
  s.check("isoperimetric-theorem-consistency", bad.empty(),
          bad.empty() ? std::to_string(compared) + " groups" : join_failures(bad));

  bad.clear();
  for (const auto& spec : kConSpecs) {
    const CommutingGraph& graph = s.graph(spec);
    const Subset* smallest = &graph.component_partition.front();
    for (const auto& comp : graph.component_partition)
      if (comp.count() < smallest->count()) smallest = &comp;
    const auto boundary = edge_boundary(graph, *smallest);
    if (!(boundary.ratio == Rational(graph.center.count()))) bad.push_back(spec);
    if (graph.n <= cap &&
        !(isoperimetric_exact(graph, cap).value <= boundary.ratio))
      bad.push_back(spec + " (scan exceeds witness)");
  }
  s.check("smallest-component-witness", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const CommutingGraph& graph = s.graph(spec);
    if (graph.n > cap) continue;
    const auto bw = bipartition_width(graph, cap);
    if (bw.exact && bw.lower_bound && !(Rational(*bw.exact) >= *bw.lower_bound))
      bad.push_back(spec);
  }
  const auto k4 = bipartition_width(build(catalog("cyclic:4")), cap);
  if (!(k4.exact && *k4.exact == 4)) bad.push_back("cyclic:4 (bw != 4)");
  s.check("bipartition-width-bound", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const GroupTable& g = s.group(spec);
    const CommutingGraph& graph = s.graph(spec);
    const auto mean = mean_distance(graph, g);
    if (mean.formula && !(mean.direct == *mean.formula)) bad.push_back(spec);
  }
  if (!(mean_distance(s.graph("symmetric:3"), s.group("symmetric:3")).direct == Rational(4, 3)))
    bad.push_back("symmetric:3 (mean != 4/3)");
  if (!(mean_distance(s.graph("dihedral:8"), s.group("dihedral:8")).direct == Rational(5, 4)))
    bad.push_back("dihedral:8 (mean != 5/4)");
  s.check("mean-distance-formula-agreement", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const CommutingGraph& graph = s.graph(spec);
    if (graph.n > cap) continue;
    const auto clique = clique_number(graph, cap);
    if (clique.exact && clique.formula &&
        static_cast<long long>(*clique.exact) != *clique.formula)
      bad.push_back(spec);
  }
  s.check("clique-number-agreement", bad.empty(), join_failures(bad));

  bad.clear();
  for (const auto& spec : s.all_specs()) {
    const CommutingGraph& graph = s.graph(spec);
    if (graph.n > cap) continue;
    const auto indep = independence_number(graph, cap);
    if (!indep.exact || *indep.exact < 1 || *indep.exact > indep.upper_c) bad.push_back(spec);
    long long c_min = graph.n;
    for (int v = 0; v < graph.n; ++v) c_min = std::min<long long>(c_min, graph.degrees[v] + 1);
    if (indep.lambda3 && *indep.lambda3 != c_min) bad.push_back(spec + " (lambda3)");
  }
  s.check("independence-number-bounds", bad.empty(), join_failures(bad));

  bool big_c_ok = big_c_set(s.group("symmetric:3")) == Subset::of(6, {0, 1, 2}) &&
                  big_c_set(s.group("dihedral:8")) == Subset::full(8) &&
                  big_c_set(s.group("cyclic:8")) == Subset(8);
  s.check("big-c-set-examples", big_c_ok);
}

}  // namespace

const char* check_status_name(CheckResult::Status status) {
  switch (status) {
    case CheckResult::Status::pass: return "pass";
    case CheckResult::Status::fail: return "fail";
    case CheckResult::Status::skip: return "skip";
  }
  return "unknown";
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Session session;
  session.options = options;
  group_axiom_checks(session);
  graph_checks(session);
  spectrum_checks(session);
  invariant_checks(session);
  return session.results;
}

}  // namespace cgspec
