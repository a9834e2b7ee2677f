#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace jmodlab {

// Dense bit set over element indices 0..universe-1. The unit of all
// ideal/submodule computations: O(1) membership, cheap lattice ops.
class IndexSet {
public:
  IndexSet() = default;

  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  // true iff other is a subset of *this
  bool contains(const IndexSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (other.words_[k] & ~words_[k]) return false;
    return true;
  }

  bool intersects(const IndexSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

  bool operator==(const IndexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }

  // Ordering for canonical enumeration: by cardinality, then by member list.
  bool canonical_less(const IndexSet& o) const {
    std::size_t a = count(), b = o.count();
    if (a != b) return a < b;
    for (std::size_t i = 0; i < universe_; ++i) {
      bool x = test(i), y = o.test(i);
      if (x != y) return x;  // earlier member wins
    }
    return false;
  }

  // Plain lexicographic word order, used only for set/map keys.
  bool operator<(const IndexSet& o) const { return words_ < o.words_; }

  std::vector<std::uint16_t> members() const {
    std::vector<std::uint16_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < universe_; ++i)
      if (test(i)) out.push_back(static_cast<std::uint16_t>(i));
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        f(static_cast<std::size_t>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace jmodlab
