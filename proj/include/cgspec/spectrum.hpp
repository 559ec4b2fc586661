#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cgspec/errors.hpp"
#include "cgspec/graph.hpp"
#include "cgspec/group.hpp"
#include "cgspec/rational.hpp"

namespace cgspec {

inline constexpr double kDefaultJacobiTol = 1e-9;
inline constexpr int kDefaultJacobiSweeps = 100;
inline constexpr double kDefaultClusterGap = 1e-6;

/// Integer Laplacian D - A of a commuting graph: symmetric, zero row sums,
/// degree diagonal, off-diagonal entries in {0, -1}.
using LaplacianMatrix = Eigen::MatrixXi;

LaplacianMatrix laplacian(const CommutingGraph& g);

/// A multiset of (eigenvalue, multiplicity) pairs, sorted by value.
struct SpectrumReport {
  enum class Source { closed_form, numeric, certificate };
  Source source = Source::closed_form;
  std::vector<std::pair<Rational, int>> pairs;

  int total() const {
    int t = 0;
    for (const auto& [value, mult] : pairs) t += mult;
    return t;
  }
  Rational weighted_sum() const {
    Rational s;
    for (const auto& [value, mult] : pairs) s = s + value * Rational(mult);
    return s;
  }
  bool operator==(const SpectrumReport& o) const { return pairs == o.pairs; }
};

/// Integer eigenvectors for one eigenvalue; every vector satisfies
/// L y = lambda y exactly and the list is linearly independent.
struct EigenBasis {
  long long eigenvalue = 0;
  std::vector<Eigen::VectorXi> vectors;
};

struct ClosedFormSpectrum {
  SpectrumReport report;
  std::vector<EigenBasis> bases;  // one basis per distinct eigenvalue
};

/// The complete spectrum with explicit eigenvector bases, available for
/// abelian groups and for non-abelian groups satisfying the centralizer
/// trichotomy. Throws ConditionNotSatisfied (with a witness pair) otherwise.
ClosedFormSpectrum closed_form_spectrum(const GroupTable& g);

/// An eigenvalue with a proven lower bound on its multiplicity and the
/// explicit basis establishing it. `provenance` names the construction:
/// "kernel", "center-difference", "centralizer-class", "component-balance".
struct Certificate {
  long long eigenvalue = 0;
  int min_multiplicity = 0;
  EigenBasis basis;
  std::string provenance;
};

struct CertificateSet {
  std::vector<Certificate> certificates;  // sorted by eigenvalue
  /// Representatives of centralizer classes with |C(u) \ Z| = 1, where the
  /// class argument proves nothing about |C(u)| being an eigenvalue.
  std::vector<int> inconclusive_classes;
};

/// Partial spectrum certificates for any non-abelian group, whether or not
/// the trichotomy holds globally. Classes sharing an eigenvalue are merged
/// (their bases have disjoint supports, so the bound is the sum).
CertificateSet spectrum_certificates(const GroupTable& g);

/// Exact integer check of L y = lambda y with y != 0.
bool verify_eigenpair(const LaplacianMatrix& l, long long eigenvalue, const Eigen::VectorXi& y);

/// Exact rank of the matrix whose columns are `vectors`, by integer row
/// elimination with gcd normalisation.
int integer_rank(const std::vector<Eigen::VectorXi>& vectors);

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, swept
/// until every off-diagonal magnitude drops below `tol`. Sorted ascending.
/// Throws NoConvergence after `max_sweeps` sweeps.
template <typename Derived>
std::vector<double> jacobi_eigenvalues(const Eigen::MatrixBase<Derived>& matrix,
                                       double tol = kDefaultJacobiTol,
                                       int max_sweeps = kDefaultJacobiSweeps) {
  Eigen::MatrixXd a = matrix.template cast<double>();
  const int n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw std::invalid_argument("jacobi_eigenvalues: matrix not square");
  if (n > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + a.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("jacobi_eigenvalues: matrix not symmetric");

  auto max_off_diagonal = [&]() {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    return off;
  };

  int sweep = 0;
  while (max_off_diagonal() >= tol) {
    if (++sweep > max_sweeps)
      throw NoConvergence("jacobi_eigenvalues: no convergence after " +
                          std::to_string(max_sweeps) + " sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = a(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

/// Independent numeric oracle for the integer Laplacian spectrum.
std::vector<double> numeric_spectrum(const LaplacianMatrix& l, double tol = kDefaultJacobiTol);

/// Merge consecutive sorted values lying within `gap` into one eigenvalue
/// (cluster mean, snapped to the nearest integer when within `gap` of one).
/// Throws AmbiguousClustering when some adjacent gap falls in [gap, 10*gap).
SpectrumReport cluster_multiplicities(const std::vector<double>& eigs,
                                      double gap = kDefaultClusterGap);

}  // namespace cgspec
