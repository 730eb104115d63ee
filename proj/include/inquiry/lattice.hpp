#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "inquiry/errors.hpp"
#include "inquiry/poset.hpp"

namespace inquiry {

// Finite lattice: a poset in which every pair has a unique greatest lower
// bound and least upper bound, materialized as dense meet/join tables.
class FiniteLattice {
 public:
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(std::size_t i) const { return poset_.label(i); }
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }

  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }

  // Every finite lattice is bounded; fold the tables to find the ends.
  std::size_t bottom() const {
    std::size_t b = 0;
    for (std::size_t i = 1; i < size(); ++i) b = meet(b, i);
    return b;
  }
  std::size_t top() const {
    std::size_t t = 0;
    for (std::size_t i = 1; i < size(); ++i) t = join(t, i);
    return t;
  }

 private:
  friend FiniteLattice lattice_from_poset(Poset);

  Poset poset_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
};

// Populates meet/join tables by exhaustive bound computation: the meet of
// (a, b) is the greatest element of down(a) & down(b), and dually for the
// join. Throws invalid_input naming the first pair for which no such
// element exists (the poset is not a lattice).
inline FiniteLattice lattice_from_poset(Poset p) {
  const std::size_t n = p.size();
  if (n == 0) throw invalid_input("lattice: empty poset");
  FiniteLattice l;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);

  const auto greatest_of = [&](const Bitset& candidates) -> std::size_t {
    for (std::size_t c = candidates.find_first(); c != Bitset::npos;
         c = candidates.find_next(c)) {
      if (candidates.is_subset_of(p.down(c))) return c;
    }
    return Bitset::npos;
  };
  const auto least_of = [&](const Bitset& candidates) -> std::size_t {
    for (std::size_t c = candidates.find_first(); c != Bitset::npos;
         c = candidates.find_next(c)) {
      if (candidates.is_subset_of(p.up(c))) return c;
    }
    return Bitset::npos;
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t m = greatest_of(p.down(a) & p.down(b));
      if (m == Bitset::npos)
        throw invalid_input("lattice: no meet for '" + p.label(a) + "' and '" + p.label(b) + "'");
      const std::size_t j = least_of(p.up(a) & p.up(b));
      if (j == Bitset::npos)
        throw invalid_input("lattice: no join for '" + p.label(a) + "' and '" + p.label(b) + "'");
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint16_t>(m);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint16_t>(j);
    }
  }
  l.poset_ = std::move(p);
  return l;
}

}  // namespace inquiry
