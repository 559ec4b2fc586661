#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cgspec {

/// A subset of the elements {0, ..., n-1} of a fixed group, stored as a
/// bitset with a cached cardinality. Boundary counting and the exhaustive
/// subset scans reduce to word-wise AND/ANDNOT plus popcount.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe_size)
      : n_(universe_size), words_((universe_size + 63) / 64, 0) {
    if (universe_size < 0) throw std::invalid_argument("Subset: negative universe");
  }

  static Subset full(int universe_size) {
    Subset s(universe_size);
    for (int i = 0; i < universe_size; ++i) s.add(i);
    return s;
  }

  static Subset of(int universe_size, std::initializer_list<int> members) {
    Subset s(universe_size);
    for (int m : members) s.add(m);
    return s;
  }

  /// Subset from the low `universe_size` bits of `mask` (bit i <-> element i).
  static Subset from_mask(int universe_size, std::uint64_t mask) {
    if (universe_size > 64) throw std::invalid_argument("Subset::from_mask: universe > 64");
    Subset s(universe_size);
    s.words_[0] = mask & (universe_size == 64 ? ~0ull : ((1ull << universe_size) - 1));
    s.count_ = std::popcount(s.words_[0]);
    return s;
  }

  int universe() const { return n_; }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void add(int i) {
    check_index(i);
    std::uint64_t bit = 1ull << (i & 63);
    if (!(words_[i >> 6] & bit)) { words_[i >> 6] |= bit; ++count_; }
  }

  void remove(int i) {
    check_index(i);
    std::uint64_t bit = 1ull << (i & 63);
    if (words_[i >> 6] & bit) { words_[i >> 6] &= ~bit; --count_; }
  }

  Subset operator&(const Subset& o) const { return combine(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
  Subset operator|(const Subset& o) const { return combine(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
  /// Set difference: elements of *this not in o.
  Subset operator-(const Subset& o) const { return combine(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

  Subset complement() const {
    Subset out(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    out.trim();
    out.count_ = out.popcount_all();
    return out;
  }

  bool operator==(const Subset& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  bool intersects(const Subset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  bool is_subset_of(const Subset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  /// |*this & o| without materialising the intersection.
  int count_intersection(const Subset& o) const {
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  /// |*this \ o| without materialising the difference.
  int count_difference(const Subset& o) const {
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & ~o.words_[w]);
    return c;
  }

  /// (*this & o) == expected, evaluated without allocating.
  bool intersect_equals(const Subset& o, const Subset& expected) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & o.words_[w]) != expected.words_[w]) return false;
    return true;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int bit = std::countr_zero(word);
        out.push_back(static_cast<int>(w * 64) + bit);
        word &= word - 1;
      }
    }
    return out;
  }

  int smallest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    throw std::logic_error("Subset::smallest: empty set");
  }

  /// Low-word mask, valid for universes of at most 64 elements.
  std::uint64_t mask() const {
    if (n_ > 64) throw std::logic_error("Subset::mask: universe > 64");
    return words_.empty() ? 0 : words_[0];
  }

 private:
  template <typename Op>
  Subset combine(const Subset& o, Op op) const {
    if (n_ != o.n_) throw std::invalid_argument("Subset: universe mismatch");
    Subset out(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = op(words_[w], o.words_[w]);
    out.count_ = out.popcount_all();
    return out;
  }

  int popcount_all() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ull << (n_ % 64)) - 1;
  }

  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("Subset: element index out of range");
  }

  int n_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cgspec
