#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cgspec {

/// Base class for every recoverable error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Cayley table failed one of the group axioms. The message names the
/// offending rows/columns/triples.
struct NotAGroup : Error {
  using Error::Error;
};

/// Permutation closure grew past the configured cap.
struct ClosureCapExceeded : Error {
  using Error::Error;
};

/// Catalog spec string not recognised.
struct UnknownSpec : Error {
  using Error::Error;
};

/// Requested computation exceeds a size cap (catalog order, exhaustive scan,
/// exact search).
struct SizeCapExceeded : Error {
  using Error::Error;
};

/// Asked for the non-central part of a commuting graph of an abelian group.
struct EmptyNoncentralPart : Error {
  using Error::Error;
};

/// The closed-form spectrum requires the centralizer trichotomy; `witness`
/// is a pair of non-central elements violating it.
struct ConditionNotSatisfied : Error {
  std::pair<int, int> witness;
  ConditionNotSatisfied(const std::string& msg, std::pair<int, int> w)
      : Error(msg), witness(w) {}
};

/// Jacobi iteration did not reach the off-diagonal tolerance within the
/// sweep cap. Indicates a bug, not a data condition.
struct NoConvergence : Error {
  using Error::Error;
};

/// Some adjacent eigenvalue gap falls in the grey zone [gap, 10*gap);
/// the caller must tighten the solver tolerance.
struct AmbiguousClustering : Error {
  using Error::Error;
};

/// A subset does not satisfy the hypothesis of the boundary lemma being
/// evaluated.
struct HypothesisViolated : Error {
  using Error::Error;
};

/// Boundary/ratio queries need a nonempty proper subset.
struct EmptyOrFullSubset : Error {
  using Error::Error;
};

/// File could not be read or written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace cgspec
