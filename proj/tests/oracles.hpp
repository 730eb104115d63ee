#pragma once

// Reference computations for the test suite. These deliberately avoid the
// library's enumeration and table machinery: brute-force filters and
// pairwise definitions, different algorithm, same answers.

#include <bit>
#include <cstdint>
#include <vector>

namespace oracles {

// Downward-closed sets of the nonempty statements over n atoms, found by
// filtering every subset of the statement set (feasible for n <= 4).
// Statements are atom masks 1..2^n-1; answer sets are bit sets indexed by
// statement mask. When all_atoms is set, only sets containing every
// single-atom statement survive.
inline std::vector<std::uint64_t> downsets(int n, bool all_atoms) {
  const unsigned top = (1u << n) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t candidate = 0; candidate < (std::uint64_t(1) << top); ++candidate) {
    const std::uint64_t bits = candidate << 1;  // statement masks start at 1
    if (bits == 0) continue;
    bool ok = true;
    for (unsigned s = 1; s <= top && ok; ++s) {
      if (!(bits >> s & 1u)) continue;
      for (unsigned sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s)
        if (!(bits >> sub & 1u)) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    if (all_atoms) {
      for (int a = 0; a < n && ok; ++a)
        if (!(bits >> (1u << a) & 1u)) ok = false;
    }
    if (ok) out.push_back(bits);
  }
  return out;
}

// Covering pairs among the given answer sets, by the definition: a strictly
// below b with nothing strictly between.
inline std::size_t cover_count(const std::vector<std::uint64_t>& sets) {
  std::size_t covers = 0;
  for (const std::uint64_t a : sets) {
    for (const std::uint64_t b : sets) {
      if (a == b || (a & ~b) != 0) continue;
      bool between = false;
      for (const std::uint64_t c : sets) {
        if (c == a || c == b) continue;
        if ((a & ~c) == 0 && (c & ~b) == 0) {
          between = true;
          break;
        }
      }
      if (!between) ++covers;
    }
  }
  return covers;
}

// Edges of the n-cube: pairs of subsets differing in exactly one atom.
inline std::size_t hypercube_edges(int n) {
  std::size_t count = 0;
  for (unsigned a = 0; a < (1u << n); ++a)
    for (unsigned b = 0; b < (1u << n); ++b)
      if ((a & ~b) == 0 && std::popcount(b & ~a) == 1) ++count;
  return count;
}

}  // namespace oracles
