#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgspec {

/// A permutation of {0, ..., d-1} in image form. Cycle-notation I/O is
/// 1-based with fixed points omitted, e.g. "(1 2 3)(4 5)".
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  /// Composition `a * b` applies b first: (a*b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Permutation: degree mismatch in composition");
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = a.images_[b.images_[i]];
    return Permutation(std::move(img));
  }

  /// Parse 1-based cycle notation. The degree is the largest point mentioned,
  /// or `degree_hint` if that is larger; "()" and "" denote the identity.
  static Permutation parse_cycles(const std::string& text, int degree_hint = 1) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> current;
    int max_point = 0;
    bool in_cycle = false;
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == ' ' || c == '\t' || c == ',') {
        ++i;
      } else if (c == '(') {
        if (in_cycle) throw std::invalid_argument("cycle notation: nested '('");
        in_cycle = true;
        current.clear();
        ++i;
      } else if (c == ')') {
        if (!in_cycle) throw std::invalid_argument("cycle notation: unmatched ')'");
        in_cycle = false;
        if (!current.empty()) cycles.push_back(current);
        ++i;
      } else if (c >= '0' && c <= '9') {
        if (!in_cycle) throw std::invalid_argument("cycle notation: point outside parentheses");
        std::size_t end = i;
        while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
        int point = std::stoi(text.substr(i, end - i));
        if (point < 1) throw std::invalid_argument("cycle notation: points are 1-based");
        current.push_back(point - 1);
        max_point = std::max(max_point, point);
        i = end;
      } else {
        throw std::invalid_argument(std::string("cycle notation: unexpected character '") + c + "'");
      }
    }
    if (in_cycle) throw std::invalid_argument("cycle notation: missing ')'");

    int degree = std::max(max_point, std::max(degree_hint, 1));
    std::vector<int> img(degree);
    for (int p = 0; p < degree; ++p) img[p] = p;
    for (const auto& cyc : cycles) {
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        int from = cyc[k];
        int to = cyc[(k + 1) % cyc.size()];
        if (img[from] != from)
          throw std::invalid_argument("cycle notation: point repeated across cycles");
        img[from] = to;
      }
    }
    return Permutation(std::move(img));
  }

  /// Canonical cycle notation: cycles sorted by smallest point, each cycle
  /// started at its smallest point, fixed points omitted. Identity -> "()".
  std::string cycle_notation() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (int start = 0; start < degree(); ++start) {
      if (done[start] || images_[start] == start) continue;
      out += '(';
      int p = start;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(p + 1);
        done[p] = true;
        p = images_[p];
        first = false;
      } while (p != start);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<int> images_;
};

}  // namespace cgspec
