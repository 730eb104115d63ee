#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "inquiry/lattice.hpp"
#include "inquiry/rational.hpp"
#include "inquiry/valuations.hpp"

namespace inquiry {

inline constexpr std::size_t kViolationReportCap = 1000;

// One failed instance of a rule: the witness tuple (as element labels,
// empty when the slot is unused), both sides, and the absolute gap.
struct Violation {
  std::string rule;
  std::string x, y, z, t;
  std::string lhs, rhs;
  double gap = 0.0;
};

// Result of sweeping one rule over a lattice. The sample keeps the first
// kViolationReportCap violations in sweep order; violation_count keeps
// counting past the cap. Sweeps are deterministic, so identical inputs
// produce identical reports.
struct RuleReport {
  std::string rule;
  std::uint64_t tuples_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> sample;

  bool passed() const { return violation_count == 0; }
};

namespace detail {

inline constexpr std::size_t knone = static_cast<std::size_t>(-1);

struct Witness {
  std::size_t x = knone, y = knone, z = knone, t = knone;
};

inline void record(RuleReport& rep, const FiniteLattice& l, const std::string& rule,
                   const std::string& lhs, const std::string& rhs, double gap,
                   const Witness& w) {
  ++rep.violation_count;
  if (rep.sample.size() >= kViolationReportCap) return;
  Violation v;
  v.rule = rule;
  if (w.x != knone) v.x = l.label(w.x);
  if (w.y != knone) v.y = l.label(w.y);
  if (w.z != knone) v.z = l.label(w.z);
  if (w.t != knone) v.t = l.label(w.t);
  v.lhs = lhs;
  v.rhs = rhs;
  v.gap = gap;
  rep.sample.push_back(std::move(v));
}

inline std::string decimal_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// lhs = a, rhs = b. Exact when the subtraction stays in range, otherwise
// the gap is settled in doubles against the same tolerance.
inline void expect_equal(RuleReport& rep, const FiniteLattice& l, const std::string& rule,
                         const Rational& a, const Rational& b, const Rational& tol,
                         const Witness& w) {
  ++rep.tuples_checked;
  if (a == b) return;
  try {
    const Rational gap = (a - b).abs();
    if (gap > tol) record(rep, l, rule, a.str(), b.str(), gap.to_double(), w);
  } catch (const std::overflow_error&) {
    const double gap = std::abs(a.to_double() - b.to_double());
    if (gap > tol.to_double())
      record(rep, l, rule, decimal_str(a.to_double()), decimal_str(b.to_double()), gap, w);
  }
}

// lhs = a, rhs = b * c.
inline void expect_product(RuleReport& rep, const FiniteLattice& l, const std::string& rule,
                           const Rational& a, const Rational& b, const Rational& c,
                           const Rational& tol, const Witness& w) {
  ++rep.tuples_checked;
  try {
    const Rational rhs = b * c;
    if (a == rhs) return;
    const Rational gap = (a - rhs).abs();
    if (gap > tol) record(rep, l, rule, a.str(), rhs.str(), gap.to_double(), w);
  } catch (const std::overflow_error&) {
    const double rhs = b.to_double() * c.to_double();
    const double gap = std::abs(a.to_double() - rhs);
    if (gap > tol.to_double())
      record(rep, l, rule, decimal_str(a.to_double()), decimal_str(rhs), gap, w);
  }
}

// lhs = a + b, rhs = c + d.
inline void expect_sums_equal(RuleReport& rep, const FiniteLattice& l, const std::string& rule,
                              const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const Rational& tol, const Witness& w) {
  ++rep.tuples_checked;
  try {
    const Rational lhs = a + b;
    const Rational rhs = c + d;
    if (lhs == rhs) return;
    const Rational gap = (lhs - rhs).abs();
    if (gap > tol) record(rep, l, rule, lhs.str(), rhs.str(), gap.to_double(), w);
  } catch (const std::overflow_error&) {
    const double lhs = a.to_double() + b.to_double();
    const double rhs = c.to_double() + d.to_double();
    const double gap = std::abs(lhs - rhs);
    if (gap > tol.to_double())
      record(rep, l, rule, decimal_str(lhs), decimal_str(rhs), gap, w);
  }
}

// The two lattice operations as interchangeable function objects. The
// statement-side rules and the question-side rules are the same sweeps
// instantiated with the operation swapped.
struct MeetOp {
  const FiniteLattice& l;
  std::size_t operator()(std::size_t a, std::size_t b) const { return l.meet(a, b); }
};
struct JoinOp {
  const FiniteLattice& l;
  std::size_t operator()(std::size_t a, std::size_t b) const { return l.join(a, b); }
};

// w(op(y,z) | x) = w(z | op(x,y)) * w(y | x) over all triples whose
// entries are defined.
template <class Op>
RuleReport product_rule_sweep(const BiValuation& w, const FiniteLattice& l, Op op,
                              const std::string& rule, const Rational& tol) {
  RuleReport rep;
  rep.rule = rule;
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!w.defined(y, x)) continue;
      const std::size_t xy = op(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t yz = op(y, z);
        if (!w.defined(yz, x) || !w.defined(z, xy)) continue;
        expect_product(rep, l, rule, w.at(yz, x), w.at(z, xy), w.at(y, x), tol,
                       Witness{x, y, z, knone});
      }
    }
  }
  return rep;
}

// The three identities that carry the product-rule derivation, in one
// sweep parameterized over the lattice operation:
//   context_absorption            w(op(x,y) | x)         = w(y | x)
//   combined_context_absorption   w(op(op(x,y),z) | op(x,y)) = w(z | op(x,y))
//   context_projection            w(op(op(x,y),z) | x)   = w(op(y,z) | x)
template <class Op>
RuleReport derivation_sweep(const BiValuation& w, const FiniteLattice& l, Op op,
                            const Rational& tol) {
  RuleReport rep;
  rep.rule = "derivation_steps";
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = op(x, y);
      if (w.defined(xy, x) && w.defined(y, x))
        expect_equal(rep, l, "context_absorption", w.at(xy, x), w.at(y, x), tol,
                     Witness{x, y, knone, knone});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = op(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t xyz = op(xy, z);
        if (w.defined(xyz, xy) && w.defined(z, xy))
          expect_equal(rep, l, "combined_context_absorption", w.at(xyz, xy), w.at(z, xy), tol,
                       Witness{x, y, z, knone});
        const std::size_t yz = op(y, z);
        if (w.defined(xyz, x) && w.defined(yz, x))
          expect_equal(rep, l, "context_projection", w.at(xyz, x), w.at(yz, x), tol,
                       Witness{x, y, z, knone});
      }
    }
  }
  return rep;
}

}  // namespace detail

// w(x v y | t) + w(x ^ y | t) = w(x | t) + w(y | t), for every context and
// every unordered pair (the rule is symmetric in x and y).
inline RuleReport check_sum_rule(const BiValuation& w, const FiniteLattice& l,
                                 const Rational& tolerance = Rational(0)) {
  RuleReport rep;
  rep.rule = "sum_rule";
  const std::size_t n = l.size();
  for (std::size_t t = 0; t < n; ++t) {
    const bool full = w.context_fully_defined(t);
    for (std::size_t x = 0; x < n; ++x) {
      if (!full && !w.defined(x, t)) continue;
      for (std::size_t y = x; y < n; ++y) {
        const std::size_t j = l.join(x, y);
        const std::size_t m = l.meet(x, y);
        if (!full && (!w.defined(y, t) || !w.defined(j, t) || !w.defined(m, t))) continue;
        detail::expect_sums_equal(rep, l, "sum_rule", w.at(j, t), w.at(m, t), w.at(x, t),
                                  w.at(y, t), tolerance, detail::Witness{x, y, detail::knone, t});
      }
    }
  }
  return rep;
}

// w(x | z) = w(x | y) * w(y | z) over all chains x <= y <= z: the context
// sits at the upper end and is consulted in parts.
inline RuleReport check_chain_upper(const BiValuation& w, const FiniteLattice& l,
                                    const Rational& tolerance = Rational(0)) {
  RuleReport rep;
  rep.rule = "chain_upper";
  const Poset& p = l.poset();
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = p.up(x).find_first(); y != Bitset::npos; y = p.up(x).find_next(y)) {
      if (!w.defined(x, y)) continue;
      for (std::size_t z = p.up(y).find_first(); z != Bitset::npos; z = p.up(y).find_next(z)) {
        if (!w.defined(x, z) || !w.defined(y, z)) continue;
        detail::expect_product(rep, l, "chain_upper", w.at(x, z), w.at(x, y), w.at(y, z),
                               tolerance, detail::Witness{x, y, z, detail::knone});
      }
    }
  }
  return rep;
}

// w(z | x) = w(y | x) * w(z | y) over all chains x <= y <= z: the dual
// chain rule, with the context at the lower end.
inline RuleReport check_chain_lower(const BiValuation& w, const FiniteLattice& l,
                                    const Rational& tolerance = Rational(0)) {
  RuleReport rep;
  rep.rule = "chain_lower";
  const Poset& p = l.poset();
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = p.up(x).find_first(); y != Bitset::npos; y = p.up(x).find_next(y)) {
      if (!w.defined(y, x)) continue;
      for (std::size_t z = p.up(y).find_first(); z != Bitset::npos; z = p.up(y).find_next(z)) {
        if (!w.defined(z, x) || !w.defined(z, y)) continue;
        detail::expect_product(rep, l, "chain_lower", w.at(z, x), w.at(y, x), w.at(z, y),
                               tolerance, detail::Witness{x, y, z, detail::knone});
      }
    }
  }
  return rep;
}

// w(y ^ z | x) = w(z | x ^ y) * w(y | x): the specific product rule of the
// statement lattice, where the ordering is implication.
inline RuleReport check_product_statements(const BiValuation& w, const FiniteLattice& l,
                                           const Rational& tolerance = Rational(0)) {
  return detail::product_rule_sweep(w, l, detail::MeetOp{l}, "product_statements", tolerance);
}

// w(y v z | x) = w(z | x v y) * w(y | x): the specific product rule of the
// question lattice. Identical to the statement rule with the meet swapped
// for the join, because the ordering is reversed (relevance, not
// implication).
inline RuleReport check_product_questions(const BiValuation& w, const FiniteLattice& l,
                                          const Rational& tolerance = Rational(0)) {
  return detail::product_rule_sweep(w, l, detail::JoinOp{l}, "product_questions", tolerance);
}

// The intermediate identities of the product-rule derivations. One
// implementation serves both sides: statements instantiate it with the
// meet, questions with the join.
inline RuleReport check_derivation_steps(const BiValuation& w, const FiniteLattice& l,
                                         LatticeSide side,
                                         const Rational& tolerance = Rational(0)) {
  return side == LatticeSide::statements
             ? detail::derivation_sweep(w, l, detail::MeetOp{l}, tolerance)
             : detail::derivation_sweep(w, l, detail::JoinOp{l}, tolerance);
}

}  // namespace inquiry
