#include "cgspec/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace cgspec {

namespace {

Eigen::VectorXi ones(int n) { return Eigen::VectorXi::Ones(n); }

/// y = |G| e_v - 1, the eigenvector attached to a central element v.
Eigen::VectorXi center_shift_vector(int n, int v) {
  Eigen::VectorXi y = -ones(n);
  y(v) = n - 1;
  return y;
}

long long checked_narrow(__int128 v) {
  if (v > static_cast<__int128>(1) << 62 || v < -(static_cast<__int128>(1) << 62))
    throw std::overflow_error("integer_rank: entry overflow");
  return static_cast<long long>(v);
}

}  // namespace

LaplacianMatrix laplacian(const CommutingGraph& g) {
  LaplacianMatrix l = LaplacianMatrix::Zero(g.n, g.n);
  for (int u = 0; u < g.n; ++u) {
    l(u, u) = g.degrees[u];
    for (int v : g.adjacency[u].members()) l(u, v) = -1;
  }
  return l;
}

ClosedFormSpectrum closed_form_spectrum(const GroupTable& g) {
  const int n = g.order();
  ClosedFormSpectrum out;
  out.report.source = SpectrumReport::Source::closed_form;

  if (is_abelian(g)) {
    EigenBasis kernel{0, {ones(n)}};
    out.report.pairs.emplace_back(Rational(0), 1);
    out.bases.push_back(std::move(kernel));
    if (n >= 2) {
      EigenBasis top{n, {}};
      for (int v = 0; v < n - 1; ++v) top.vectors.push_back(center_shift_vector(n, v));
      out.report.pairs.emplace_back(Rational(n), n - 1);
      out.bases.push_back(std::move(top));
    }
    return out;
  }

  const CommutingGraph graph = build(g);
  if (graph.trichotomy_witness) {
    auto [u, v] = *graph.trichotomy_witness;
    throw ConditionNotSatisfied("centralizer trichotomy fails at (" + g.names[u] + ", " +
                                    g.names[v] + ")",
                                *graph.trichotomy_witness);
  }

  const long long z = graph.center.count();
  const auto& comps = graph.component_partition;
  const int r = static_cast<int>(comps.size());

  std::map<long long, EigenBasis> by_value;
  auto basis_for = [&](long long value) -> EigenBasis& {
    auto [it, inserted] = by_value.try_emplace(value);
    if (inserted) it->second.eigenvalue = value;
    return it->second;
  };

  basis_for(0).vectors.push_back(ones(n));

  for (int v : graph.center.members())
    basis_for(n).vectors.push_back(center_shift_vector(n, v));

  for (const auto& comp : comps) {
    const auto members = comp.members();
    const long long value = graph.degrees[members[0]] + 1;  // |C(u)| for u in the component
    if (value <= z)
      throw std::logic_error("closed_form_spectrum: component eigenvalue not above |Z(G)|");
    for (std::size_t j = 0; j + 1 < members.size(); ++j) {
      Eigen::VectorXi y = Eigen::VectorXi::Zero(n);
      y(members[j]) = 1;
      y(members.back()) = -1;
      basis_for(value).vectors.push_back(std::move(y));
    }
  }

  const auto first_members = comps.front().members();
  for (int i = 1; i < r; ++i) {
    Eigen::VectorXi y = Eigen::VectorXi::Zero(n);
    for (int v : comps[i].members()) y(v) = comps.front().count();
    for (int v : first_members) y(v) = -comps[i].count();
    basis_for(z).vectors.push_back(std::move(y));
  }

  for (auto& [value, basis] : by_value) {
    if (basis.vectors.empty()) continue;
    out.report.pairs.emplace_back(Rational(value), static_cast<int>(basis.vectors.size()));
    out.bases.push_back(std::move(basis));
  }
  if (out.report.total() != n)
    throw std::logic_error("closed_form_spectrum: multiplicities do not sum to |G|");
  return out;
}

CertificateSet spectrum_certificates(const GroupTable& g) {
  if (is_abelian(g))
    throw std::invalid_argument("spectrum_certificates: group is abelian; the closed form applies");

  const int n = g.order();
  const CommutingGraph graph = build(g);
  const long long z = graph.center.count();
  const auto cents = all_centralizers(g);

  CertificateSet out;

  Certificate kernel;
  kernel.eigenvalue = 0;
  kernel.min_multiplicity = 1;
  kernel.basis = {0, {ones(n)}};
  kernel.provenance = "kernel";
  out.certificates.push_back(std::move(kernel));

  Certificate top;
  top.eigenvalue = n;
  top.min_multiplicity = static_cast<int>(z);
  top.basis.eigenvalue = n;
  for (int v : graph.center.members()) top.basis.vectors.push_back(center_shift_vector(n, v));
  top.provenance = "center-difference";
  out.certificates.push_back(std::move(top));

  // One certificate per centralizer-equality class of condi elements
  // (classes sharing |C(u)| merge: their supports are disjoint).
  std::map<long long, Certificate> class_certs;
  std::vector<bool> claimed(n, false);
  for (int u : condi_elements(g)) {
    if (claimed[u]) continue;
    const Subset noncentral_part = cents[u] - graph.center;
    for (int v : noncentral_part.members()) claimed[v] = true;
    const auto members = noncentral_part.members();
    if (members.size() < 2) {
      out.inconclusive_classes.push_back(u);
      continue;
    }
    const long long value = cents[u].count();
    auto [it, inserted] = class_certs.try_emplace(value);
    Certificate& cert = it->second;
    if (inserted) {
      cert.eigenvalue = value;
      cert.basis.eigenvalue = value;
      cert.provenance = "centralizer-class";
    }
    cert.min_multiplicity += static_cast<int>(members.size()) - 1;
    for (std::size_t j = 0; j + 1 < members.size(); ++j) {
      Eigen::VectorXi y = Eigen::VectorXi::Zero(n);
      y(members[j]) = 1;
      y(members.back()) = -1;
      cert.basis.vectors.push_back(std::move(y));
    }
  }
  for (auto& [value, cert] : class_certs) out.certificates.push_back(std::move(cert));

  if (graph.condition_holds()) {
    const auto& comps = graph.component_partition;
    const int r = static_cast<int>(comps.size());
    Certificate balance;
    balance.eigenvalue = z;
    balance.min_multiplicity = r - 1;
    balance.basis.eigenvalue = z;
    const auto first_members = comps.front().members();
    for (int i = 1; i < r; ++i) {
      Eigen::VectorXi y = Eigen::VectorXi::Zero(n);
      for (int v : comps[i].members()) y(v) = comps.front().count();
      for (int v : first_members) y(v) = -comps[i].count();
      balance.basis.vectors.push_back(std::move(y));
    }
    balance.provenance = "component-balance";
    out.certificates.push_back(std::move(balance));
  }

  std::sort(out.certificates.begin(), out.certificates.end(),
            [](const Certificate& a, const Certificate& b) { return a.eigenvalue < b.eigenvalue; });
  return out;
}

bool verify_eigenpair(const LaplacianMatrix& l, long long eigenvalue, const Eigen::VectorXi& y) {
  if (l.rows() != l.cols() || l.rows() != y.size())
    throw std::invalid_argument("verify_eigenpair: dimension mismatch");
  if (y.isZero()) return false;
  using Vec64 = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
  Vec64 lhs = l.cast<long long>() * y.cast<long long>();
  Vec64 rhs = eigenvalue * y.cast<long long>();
  return lhs == rhs;
}

int integer_rank(const std::vector<Eigen::VectorXi>& vectors) {
  if (vectors.empty()) return 0;
  const int dim = static_cast<int>(vectors.front().size());
  std::vector<std::vector<long long>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("integer_rank: dimension mismatch");
    rows.emplace_back(v.data(), v.data() + dim);
  }

  auto normalize = [](std::vector<long long>& row) {
    long long g = 0;
    for (long long x : row) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
      for (long long& x : row) x /= g;
  };

  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0 &&
          (pivot < 0 || std::abs(rows[i][col]) < std::abs(rows[pivot][col])))
        pivot = i;
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const long long p = rows[rank][col];
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] == 0) continue;
      const long long c = rows[i][col];
      for (int j = 0; j < dim; ++j)
        rows[i][j] = checked_narrow(static_cast<__int128>(p) * rows[i][j] -
                                    static_cast<__int128>(c) * rows[rank][j]);
      normalize(rows[i]);
    }
    ++rank;
  }
  return rank;
}

std::vector<double> numeric_spectrum(const LaplacianMatrix& l, double tol) {
  if (l != LaplacianMatrix(l.transpose()))
    throw std::invalid_argument("numeric_spectrum: matrix not symmetric");
  if (!(tol > 0)) throw std::invalid_argument("numeric_spectrum: tol must be positive");
  return jacobi_eigenvalues(l, tol);
}

SpectrumReport cluster_multiplicities(const std::vector<double>& eigs, double gap) {
  if (!(gap > 0)) throw std::invalid_argument("cluster_multiplicities: gap must be positive");
  for (std::size_t i = 1; i < eigs.size(); ++i) {
    if (eigs[i] < eigs[i - 1])
      throw std::invalid_argument("cluster_multiplicities: input not sorted");
    const double d = eigs[i] - eigs[i - 1];
    if (d >= gap && d < 10.0 * gap)
      throw AmbiguousClustering("adjacent eigenvalue gap " + std::to_string(d) +
                                " lies in the grey zone [gap, 10*gap); tighten tol");
  }

  SpectrumReport report;
  report.source = SpectrumReport::Source::numeric;
  std::size_t i = 0;
  while (i < eigs.size()) {
    std::size_t j = i + 1;
    double sum = eigs[i];
    while (j < eigs.size() && eigs[j] - eigs[j - 1] < gap) {
      sum += eigs[j];
      ++j;
    }
    const int mult = static_cast<int>(j - i);
    const double mean = sum / mult;
    const double nearest = std::llround(mean);
    Rational value = std::abs(mean - nearest) <= gap
                         ? Rational(static_cast<long long>(nearest))
                         : Rational::approximate(mean, gap);
    report.pairs.emplace_back(value, mult);
    i = j;
  }
  return report;
}

}  // namespace cgspec
