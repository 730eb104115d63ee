#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inquiry/errors.hpp"

namespace inquiry {

using Bitset = boost::dynamic_bitset<>;

// Hard cap on poset/lattice size. Everything downstream uses dense order
// tables and exhaustive O(n^2)..O(n^3) sweeps, which stay desk-scale only
// for small n.
inline constexpr std::size_t kMaxElements = 4096;

// Finite partially ordered set over explicitly listed elements. The order
// relation is stored as dense bit rows in both directions; element indices
// follow insertion order and govern all iteration and serialization.
// Immutable after construction (see build_poset).
class Poset {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) throw invalid_input("poset: unknown element '" + label + "'");
    return it->second;
  }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }

  // {j : i <= j} and {j : j <= i} as bit rows.
  const Bitset& up(std::size_t i) const { return up_[i]; }
  const Bitset& down(std::size_t i) const { return down_[i]; }

 private:
  friend Poset build_poset(const std::vector<std::string>&,
                           const std::vector<std::pair<std::string, std::string>>&);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

// Builds a poset from generating relations: the result is the
// reflexive-transitive closure of leq_pairs. Throws invalid_input on
// duplicate elements, unknown endpoints, or a closure that violates
// antisymmetry (a cycle), and capacity_error above kMaxElements.
inline Poset build_poset(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  if (elements.size() > kMaxElements)
    throw capacity_error("poset: element count " + std::to_string(elements.size()) +
                         " exceeds cap " + std::to_string(kMaxElements));
  Poset p;
  p.labels_ = elements;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!p.index_.emplace(elements[i], i).second)
      throw invalid_input("poset: duplicate element '" + elements[i] + "'");
  }

  const std::size_t n = elements.size();
  p.up_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
  for (const auto& [lo, hi] : leq_pairs) p.up_[p.index_of(lo)].set(p.index_of(hi));

  // Reflexive-transitive closure, Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        throw invalid_input("poset: antisymmetry violated, cycle through '" + elements[i] +
                            "' and '" + elements[j] + "'");

  p.down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.up_[i].test(j)) p.down_[j].set(i);
  return p;
}

// Covering pairs (a, b): a < b with nothing strictly between. Sorted by
// (lower index, upper index).
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      Bitset between = p.up(a) & p.down(b);
      between.reset(a);
      between.reset(b);
      if (between.none()) covers.emplace_back(a, b);
    }
  }
  return covers;
}

}  // namespace inquiry
