#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cgspec {

/// Exact rational number on int64, always in lowest terms with positive
/// denominator. Comparisons cross-multiply in 128-bit, so the boundary
/// ratios and mean distances handled here (numerators bounded by |G|^2)
/// never lose exactness.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Best rational approximation of `x` within `eps`, by walking the
  /// continued-fraction expansion until the convergent is close enough.
  static Rational approximate(double x, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("Rational::approximate: eps must be positive");
    long long integer_part = static_cast<long long>(std::llround(x));
    if (std::abs(x - static_cast<double>(integer_part)) <= eps) return Rational(integer_part);
    // Convergents p_k/q_k of the continued fraction of x.
    double frac = x;
    long long p0 = 1, q0 = 0;
    long long p1 = static_cast<long long>(std::floor(frac)), q1 = 1;
    for (int k = 0; k < 64; ++k) {
      double approx = static_cast<double>(p1) / static_cast<double>(q1);
      if (std::abs(approx - x) <= eps) break;
      frac = 1.0 / (frac - std::floor(frac));
      long long a = static_cast<long long>(std::floor(frac));
      long long p2 = a * p1 + p0;
      long long q2 = a * q1 + q0;
      p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return Rational(p1, q1);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace cgspec
