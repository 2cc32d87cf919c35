#ifndef HTDECOMP_INDEX_SET_HPP
#define HTDECOMP_INDEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace htdecomp {

// Dense bitset over a fixed index universe. Iteration is always in ascending
// index order and equality is extensional, so enumeration results and cache
// keys derived from these sets are deterministic. The Tag parameter keeps the
// vertex and edge index spaces apart at compile time.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static IndexSet single(std::size_t universe, std::size_t index) {
    IndexSet s(universe);
    s.insert(index);
    return s;
  }

  std::size_t universe_size() const { return universe_; }

  bool contains(std::size_t i) const {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1) != 0;
  }

  void insert(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void erase(std::size_t i) {
    if (i < universe_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  IndexSet& operator|=(const IndexSet& o) {
    if (o.universe_ > universe_) {
      universe_ = o.universe_;
      words_.resize(o.words_.size(), 0);
    }
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
    return *this;
  }

  IndexSet& operator-=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.word(i);
    return *this;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  bool intersects(const IndexSet& o) const {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  bool is_subset_of(const IndexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.word(i)) != 0) return false;
    return true;
  }

  // Membership comparison only; the universe sizes may differ.
  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.word(i) != b.word(i)) return false;
    return true;
  }

  class const_iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;

    const_iterator(const std::vector<std::uint64_t>* words, std::size_t word_idx)
        : words_(words), word_idx_(word_idx) {
      if (word_idx_ < words_->size()) {
        bits_ = (*words_)[word_idx_];
        settle();
      }
    }

    std::size_t operator*() const {
      return word_idx_ * 64 + static_cast<std::size_t>(std::countr_zero(bits_));
    }

    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      settle();
      return *this;
    }

    bool operator==(const const_iterator& o) const {
      return word_idx_ == o.word_idx_ && bits_ == o.bits_;
    }

   private:
    void settle() {
      while (bits_ == 0) {
        ++word_idx_;
        if (word_idx_ >= words_->size()) {
          word_idx_ = words_->size();
          return;
        }
        bits_ = (*words_)[word_idx_];
      }
    }

    const std::vector<std::uint64_t>* words_;
    std::size_t word_idx_;
    std::uint64_t bits_ = 0;
  };

  const_iterator begin() const { return const_iterator(&words_, 0); }
  const_iterator end() const { return const_iterator(&words_, words_.size()); }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t i : *this) out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    std::size_t n = words_.size();
    while (n > 0 && words_[n - 1] == 0) --n;  // trailing zeros must not matter
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(words_[i]);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace htdecomp

#endif  // HTDECOMP_INDEX_SET_HPP
