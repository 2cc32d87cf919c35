#ifndef HTDECOMP_COVER_HPP
#define HTDECOMP_COVER_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include <htdecomp/hypergraph.hpp>

namespace htdecomp {

// Streams candidate cover separators: subsets of the pool with at most k
// edges whose vertex union covers conn. By default only irredundant covers
// come out (every member contributes a conn vertex no other member supplies);
// all_covers switches to every covering subset. Emission order is size
// ascending, then lexicographic on the sorted edge indices, and two runs over
// the same inputs always produce the same sequence. An uncoverable conn gives
// an empty stream; an empty conn gives exactly the empty set.
class CoverEnumerator {
 public:
  CoverEnumerator(const VertexSet& conn, const EdgeSet& pool, std::size_t k,
                  const Hypergraph& h, bool all_covers = false)
      : h_(&h), conn_(conn), pool_(pool.to_indices()), k_(k), all_covers_(all_covers) {
    assert(k >= 1);
  }

  std::optional<EdgeSet> next() {
    while (advance()) {
      EdgeSet candidate(h_->edge_count());
      for (std::size_t pos : comb_) candidate.insert(pool_[pos]);
      if (!conn_.is_subset_of(vertex_union(candidate, *h_))) continue;
      if (!all_covers_ && !irredundant(candidate)) continue;
      return candidate;
    }
    return std::nullopt;
  }

 private:
  // Moves to the next subset in (size, lex) order; false once exhausted.
  bool advance() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      comb_.clear();  // the empty subset
      return true;
    }
    if (next_combination()) return true;
    std::size_t size = comb_.size() + 1;
    if (size > k_ || size > pool_.size()) {
      done_ = true;
      return false;
    }
    comb_.resize(size);
    std::iota(comb_.begin(), comb_.end(), std::size_t{0});
    return true;
  }

  bool next_combination() {
    std::size_t n = pool_.size();
    std::size_t s = comb_.size();
    std::size_t i = s;
    while (i-- > 0) {
      if (comb_[i] != i + n - s) {
        ++comb_[i];
        for (std::size_t j = i + 1; j < s; ++j) comb_[j] = comb_[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  bool irredundant(const EdgeSet& candidate) const {
    for (std::size_t e : candidate) {
      VertexSet others(h_->vertex_count());
      for (std::size_t f : candidate)
        if (f != e) others |= h_->edge_vertices(f);
      if (((conn_ & h_->edge_vertices(e)) - others).empty()) return false;
    }
    return true;
  }

  const Hypergraph* h_;
  VertexSet conn_;
  std::vector<std::uint32_t> pool_;
  std::size_t k_;
  bool all_covers_;
  std::vector<std::size_t> comb_;
  bool started_ = false;
  bool done_ = false;
};

inline CoverEnumerator covers(const VertexSet& conn, const EdgeSet& pool, std::size_t k,
                              const Hypergraph& h, bool all_covers = false) {
  return CoverEnumerator(conn, pool, k, h, all_covers);
}

}  // namespace htdecomp

#endif  // HTDECOMP_COVER_HPP
