#include "cgspec/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "cgspec/errors.hpp"

namespace cgspec {

namespace {

void check_latin(const Eigen::MatrixXi& t) {
  const int n = static_cast<int>(t.rows());
  std::vector<bool> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      int v = t(i, j);
      if (v < 0 || v >= n)
        throw NotAGroup("entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + std::to_string(v) + " is out of range");
      if (seen[v])
        throw NotAGroup("row " + std::to_string(i) + " is not a permutation of 0.." +
                        std::to_string(n - 1));
      seen[v] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n; ++i) {
      if (seen[t(i, j)])
        throw NotAGroup("column " + std::to_string(j) + " is not a permutation of 0.." +
                        std::to_string(n - 1));
      seen[t(i, j)] = true;
    }
  }
}

int find_identity(const Eigen::MatrixXi& t) {
  const int n = static_cast<int>(t.rows());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = t(e, j) == j && t(j, e) == j;
    if (ok) return e;
  }
  throw NotAGroup("no two-sided identity element");
}

void check_associativity(const Eigen::MatrixXi& t) {
  const int n = static_cast<int>(t.rows());
  auto check_triple = [&](int i, int j, int k) {
    if (t(t(i, j), k) != t(i, t(j, k)))
      throw NotAGroup("associativity fails at (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")");
  };
  if (n <= kFullAssociativityCap) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) check_triple(i, j, k);
  } else {
    std::mt19937_64 rng(0x636773706563ull);  // fixed seed, reproducible spot check
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < kAssociativitySpotChecks; ++s)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
}

void check_inverses(const Eigen::MatrixXi& t, int identity) {
  const int n = static_cast<int>(t.rows());
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = 0; j < n && !found; ++j) found = t(i, j) == identity;
    if (!found) throw NotAGroup("element " + std::to_string(i) + " has no inverse");
  }
}

bool commutes_raw(const Eigen::MatrixXi& t, int a, int b) { return t(a, b) == t(b, a); }

/// Connected components of the commuting relation restricted to the
/// non-central elements, each listed ascending, in discovery order of the
/// smallest member.
std::vector<std::vector<int>> noncentral_components(const Eigen::MatrixXi& t,
                                                    const std::vector<bool>& central) {
  const int n = static_cast<int>(t.rows());
  std::vector<std::vector<int>> comps;
  std::vector<bool> visited(n, false);
  for (int start = 0; start < n; ++start) {
    if (central[start] || visited[start]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(start);
    visited[start] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (central[v] || visited[v] || v == u) continue;
        if (commutes_raw(t, u, v)) {
          visited[v] = true;
          q.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Reorder a freshly built table into the canonical catalog order: identity,
/// remaining central elements, then non-central elements grouped by
/// commuting component (largest component first, ties by smallest member).
GroupTable canonicalize(const Eigen::MatrixXi& t, const std::vector<std::string>& names,
                        int identity) {
  const int n = static_cast<int>(t.rows());
  std::vector<bool> central(n, false);
  for (int v = 0; v < n; ++v) {
    bool c = true;
    for (int a = 0; a < n && c; ++a) c = commutes_raw(t, v, a);
    central[v] = c;
  }

  std::vector<int> order;
  order.reserve(n);
  order.push_back(identity);
  for (int v = 0; v < n; ++v)
    if (central[v] && v != identity) order.push_back(v);

  auto comps = noncentral_components(t, central);
  std::stable_sort(comps.begin(), comps.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  for (const auto& comp : comps)
    for (int v : comp) order.push_back(v);

  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  Eigen::MatrixXi out(n, n);
  std::vector<std::string> out_names(n);
  for (int i = 0; i < n; ++i) {
    out_names[position[i]] = names[i];
    for (int j = 0; j < n; ++j) out(position[i], position[j]) = position[t(i, j)];
  }
  return from_cayley(out, std::move(out_names));
}

// --- catalog constructors (natural element order, canonicalized at the end) ---

GroupTable make_cyclic(int n) {
  Eigen::MatrixXi t(n, n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "id" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (int j = 0; j < n; ++j) t(i, j) = (i + j) % n;
  }
  return canonicalize(t, names, 0);
}

GroupTable make_dihedral(int order) {
  const int m = order / 2;  // rotation subgroup size; x^m = y^2 = id, yx = x^{m-1}y
  const int n = 2 * m;
  auto rot_name = [](int k) {
    return k == 0 ? std::string("id") : (k == 1 ? std::string("x") : "x^" + std::to_string(k));
  };
  auto refl_name = [](int k) {
    return k == 0 ? std::string("y") : (k == 1 ? std::string("xy") : "x^" + std::to_string(k) + "y");
  };
  Eigen::MatrixXi t(n, n);
  std::vector<std::string> names(n);
  for (int k = 0; k < m; ++k) {
    names[k] = rot_name(k);
    names[m + k] = refl_name(k);
  }
  auto idx = [&](bool refl, int k) { return (refl ? m : 0) + ((k % m) + m) % m; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool ri = i >= m, rj = j >= m;
      int a = ri ? i - m : i, b = rj ? j - m : j;
      // x^a y^e * x^b y^f with y x^b = x^{-b} y
      if (!ri && !rj) t(i, j) = idx(false, a + b);
      else if (!ri && rj) t(i, j) = idx(true, a + b);
      else if (ri && !rj) t(i, j) = idx(true, a - b);
      else t(i, j) = idx(false, a - b);
    }
  }
  return canonicalize(t, names, 0);
}

GroupTable make_quaternion() {
  // Elements as signed quaternion units: index 2s + u with u in {1=0, i=1, j=2, k=3}.
  // Names follow the presentation a^2 = id, b^2 = c^2 = d^2 = bcd = a.
  const std::vector<std::string> names = {"id", "a", "b", "ab", "c", "ac", "d", "ad"};
  // unit multiplication: (sign, unit) for 1,i,j,k
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_prod[4][4] = {{+1, +1, +1, +1},
                                      {+1, -1, +1, -1},
                                      {+1, -1, -1, +1},
                                      {+1, +1, -1, -1}};
  // index 2u+s encodes (unit u, sign s): id,a,b,ab,c,ac,d,ad = +-1, +-i, +-j, +-k
  Eigen::MatrixXi t(8, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      int si = (i % 2 == 0) ? +1 : -1, ui = i / 2;
      int sj = (j % 2 == 0) ? +1 : -1, uj = j / 2;
      int s = si * sj * sign_prod[ui][uj];
      t(i, j) = 2 * unit_prod[ui][uj] + (s == +1 ? 0 : 1);
    }
  }
  return canonicalize(t, names, 0);
}

GroupTable make_symmetric(int n) {
  if (n > kSymmetricCap)
    throw SizeCapExceeded("symmetric:" + std::to_string(n) + " exceeds the cap n <= " +
                          std::to_string(kSymmetricCap));
  std::vector<Permutation> elems;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  do {
    elems.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].images()] = static_cast<int>(i);

  const int order = static_cast<int>(elems.size());
  Eigen::MatrixXi t(order, order);
  std::vector<std::string> names(order);
  for (int i = 0; i < order; ++i) {
    names[i] = elems[i].cycle_notation();
    for (int j = 0; j < order; ++j) t(i, j) = index.at((elems[i] * elems[j]).images());
  }
  return canonicalize(t, names, 0);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroupTable make_elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw UnknownSpec("elementary_abelian: " + std::to_string(p) + " is not prime");
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > kCatalogOrderCap)
      throw SizeCapExceeded("elementary_abelian order exceeds " + std::to_string(kCatalogOrderCap));
  }
  const int n = static_cast<int>(order);
  auto digits = [&](int v) {
    std::vector<int> d(k);
    for (int i = k - 1; i >= 0; --i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  Eigen::MatrixXi t(n, n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    auto di = digits(i);
    std::string name = "(";
    for (int c = 0; c < k; ++c) name += (c ? "," : "") + std::to_string(di[c]);
    names[i] = name + ")";
    for (int j = 0; j < n; ++j) {
      auto dj = digits(j);
      int v = 0;
      for (int c = 0; c < k; ++c) v = v * p + (di[c] + dj[c]) % p;
      t(i, j) = v;
    }
  }
  return canonicalize(t, names, 0);
}

GroupTable make_product(const GroupTable& a, const GroupTable& b) {
  long long order = static_cast<long long>(a.order()) * b.order();
  if (order > kCatalogOrderCap)
    throw SizeCapExceeded("product order exceeds " + std::to_string(kCatalogOrderCap));
  const int n = static_cast<int>(order);
  const int nb = b.order();
  Eigen::MatrixXi t(n, n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = "(" + a.names[i / nb] + "," + b.names[i % nb] + ")";
    for (int j = 0; j < n; ++j)
      t(i, j) = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  }
  return canonicalize(t, names, a.identity * nb + b.identity);
}

int parse_positive(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UnknownSpec("bad " + what + " '" + text + "'");
  long long v = std::stoll(text);
  if (v < 1 || v > kCatalogOrderCap) throw UnknownSpec("bad " + what + " '" + text + "'");
  return static_cast<int>(v);
}

}  // namespace

GroupTable from_cayley(const Eigen::MatrixXi& raw, std::vector<std::string> names) {
  if (raw.rows() != raw.cols()) throw NotAGroup("table is not square");
  const int n = static_cast<int>(raw.rows());
  if (n == 0) throw NotAGroup("table is empty");
  if (names.empty()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
  }
  if (static_cast<int>(names.size()) != n) throw NotAGroup("names/table size mismatch");

  check_latin(raw);
  int identity = find_identity(raw);
  check_associativity(raw);
  check_inverses(raw, identity);

  GroupTable g;
  g.cayley = raw;
  g.names = std::move(names);
  g.identity = identity;
  return g;
}

GroupTable from_generators(const std::vector<Permutation>& gens, int degree, int closure_cap) {
  int d = std::max(degree, 1);
  if (!gens.empty()) {
    d = gens.front().degree();
    for (const auto& p : gens)
      if (p.degree() != d)
        throw std::invalid_argument("from_generators: generators have mismatched degrees");
  }

  std::vector<Permutation> elems{Permutation::identity(d)};
  std::map<std::vector<int>, int> index{{elems[0].images(), 0}};
  // breadth-first orbit of the identity under right multiplication
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens) {
      Permutation next = elems[head] * gen;
      if (index.emplace(next.images(), static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > closure_cap)
          throw ClosureCapExceeded("closure exceeds cap of " + std::to_string(closure_cap) +
                                   " elements");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  Eigen::MatrixXi t(n, n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = elems[i].cycle_notation();
    for (int j = 0; j < n; ++j) t(i, j) = index.at((elems[i] * elems[j]).images());
  }
  return from_cayley(t, std::move(names));
}

GroupTable catalog(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UnknownSpec("catalog spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);

  if (kind == "cyclic") return make_cyclic(parse_positive(rest, "cyclic order"));
  if (kind == "dihedral") {
    int order = parse_positive(rest, "dihedral order");
    if (order % 2 != 0 || order < 4)
      throw UnknownSpec("dihedral:" + rest + " (order must be even and >= 4)");
    return make_dihedral(order);
  }
  if (kind == "symmetric") return make_symmetric(parse_positive(rest, "symmetric degree"));
  if (kind == "quaternion") {
    if (rest != "8") throw UnknownSpec("quaternion:" + rest + " (only quaternion:8 exists)");
    return make_quaternion();
  }
  if (kind == "elementary_abelian") {
    auto caret = rest.find('^');
    if (caret == std::string::npos)
      throw UnknownSpec("elementary_abelian:" + rest + " (expected p^k)");
    int p = parse_positive(rest.substr(0, caret), "prime");
    int k = parse_positive(rest.substr(caret + 1), "exponent");
    return make_elementary_abelian(p, k);
  }
  if (kind == "product") {
    for (std::size_t pos = rest.find('x'); pos != std::string::npos;
         pos = rest.find('x', pos + 1)) {
      try {
        GroupTable left = catalog(rest.substr(0, pos));
        GroupTable right = catalog(rest.substr(pos + 1));
        return make_product(left, right);
      } catch (const UnknownSpec&) {
        continue;  // try the next candidate separator
      }
    }
    throw UnknownSpec("product spec '" + rest + "'");
  }
  throw UnknownSpec("catalog spec '" + spec + "'");
}

Subset center(const GroupTable& g) {
  const int n = g.order();
  Subset z(n);
  for (int v = 0; v < n; ++v) {
    bool central = true;
    for (int a = 0; a < n && central; ++a) central = g.commutes(v, a);
    if (central) z.add(v);
  }
  return z;
}

Subset centralizer(const GroupTable& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::out_of_range("centralizer: element index out of range");
  Subset c(n);
  for (int u = 0; u < n; ++u)
    if (g.commutes(u, v)) c.add(u);
  return c;
}

std::vector<Subset> all_centralizers(const GroupTable& g) {
  std::vector<Subset> out;
  out.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) out.push_back(centralizer(g, v));
  return out;
}

bool is_abelian(const GroupTable& g) { return g.cayley == g.cayley.transpose().eval(); }

ConCheckResult satisfies_con(const GroupTable& g) {
  ConCheckResult result;
  if (is_abelian(g)) return result;  // vacuous: no non-central elements

  const Subset z = center(g);
  const auto cents = all_centralizers(g);
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    if (z.contains(u)) continue;
    for (int v = u + 1; v < n; ++v) {
      if (z.contains(v)) continue;
      if (cents[u] == cents[v]) continue;
      if (cents[u].intersect_equals(cents[v], z)) continue;
      result.holds = false;
      result.witness = std::make_pair(u, v);
      return result;
    }
  }
  return result;
}

bool is_centralizer_abelian(const GroupTable& g) {
  const auto cents = all_centralizers(g);
  for (int v = 0; v < g.order(); ++v) {
    if (v == g.identity) continue;
    const auto members = cents[v].members();
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (!g.commutes(members[a], members[b])) return false;
  }
  return true;
}

std::vector<int> condi_elements(const GroupTable& g) {
  const Subset z = center(g);
  const auto cents = all_centralizers(g);
  const int n = g.order();
  std::vector<int> out;
  for (int u = 0; u < n; ++u) {
    if (z.contains(u)) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (v == u || z.contains(v)) continue;
      ok = cents[u] == cents[v] || cents[u].intersect_equals(cents[v], z);
    }
    if (ok) out.push_back(u);
  }
  return out;
}

}  // namespace cgspec
