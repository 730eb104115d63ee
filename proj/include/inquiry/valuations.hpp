#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "inquiry/errors.hpp"
#include "inquiry/lattice.hpp"
#include "inquiry/questions.hpp"
#include "inquiry/rational.hpp"
#include "inquiry/statements.hpp"

namespace inquiry {

// Which way a valuation runs with the order: statement measures grow
// upward, question measures grow downward.
enum class Orientation { monotone, antitone };

// Element -> positive rational, indexed like the lattice it belongs to.
struct Valuation {
  Orientation orientation = Orientation::monotone;
  std::vector<Rational> value;

  const Rational& operator[](std::size_t i) const { return value[i]; }
};

// u(Q) = 2^n - |answers(Q)|: the number of statements (absurdity included)
// outside the answer set. Antitone, strictly positive, and modular, since
// set cardinality is modular under union/intersection.
inline Valuation cocardinality_valuation(const QuestionSystem& sys) {
  Valuation u{Orientation::antitone, {}};
  const std::int64_t full = std::int64_t(1) << sys.space.atom_count();
  u.value.reserve(sys.questions.size());
  for (const auto& q : sys.questions) u.value.emplace_back(full - q.answer_count());
  return u;
}

// u(Q) = offset + sum of the weights of the statements NOT answering Q.
// Generalizes cocardinality_valuation (all weights 1, offset 1) to a family
// of antitone modular valuations. statement_weights is indexed by atom
// mask; entry 0 (the absurdity) is ignored.
inline Valuation weighted_covaluation(const QuestionSystem& sys,
                                      const std::vector<Rational>& statement_weights,
                                      const Rational& offset) {
  const unsigned top = sys.space.top_mask();
  if (statement_weights.size() != static_cast<std::size_t>(top) + 1)
    throw invalid_input("covaluation: need one weight per statement");
  if (!(offset > Rational(0))) throw invalid_input("covaluation: offset must be positive");
  for (unsigned s = 1; s <= top; ++s)
    if (!(statement_weights[s] > Rational(0)))
      throw invalid_input("covaluation: weights must be positive");

  Valuation u{Orientation::antitone, {}};
  u.value.reserve(sys.questions.size());
  for (const auto& q : sys.questions) {
    Rational sum = offset;
    for (unsigned s = 1; s <= top; ++s)
      if (!(q.bits() >> s & 1u)) sum += statement_weights[s];
    u.value.push_back(sum);
  }
  return u;
}

// Degree w(element | context) on a finite lattice. Entries may be left
// undefined (masked); every defined value is an exact rational. Storage is
// context-major so a fixed-context sweep walks contiguous memory.
class BiValuation {
 public:
  explicit BiValuation(std::size_t element_count)
      : n_(element_count), value_(element_count * element_count), defined_(element_count * element_count) {}

  std::size_t size() const { return n_; }
  bool defined(std::size_t element, std::size_t context) const {
    return defined_.test(context * n_ + element);
  }
  const Rational& at(std::size_t element, std::size_t context) const {
    return value_[context * n_ + element];
  }
  void set(std::size_t element, std::size_t context, const Rational& v) {
    value_[context * n_ + element] = v;
    defined_.set(context * n_ + element);
  }
  // True when every entry of the context's row is defined.
  bool context_fully_defined(std::size_t context) const {
    for (std::size_t e = 0; e < n_; ++e)
      if (!defined_.test(context * n_ + e)) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Rational> value_;
  Bitset defined_;
};

// w(x | t) = m(x ^ t) / m(t) over the Boolean statement lattice (element
// index = atom mask). Contexts of measure zero - only the absurdity, since
// atom weights are positive - are left undefined.
inline BiValuation probability_bivaluation(const ProbabilityMeasure& m,
                                           const FiniteLattice& statements) {
  const std::size_t n = statements.size();
  if (n != (std::size_t(1) << m.space().atom_count()))
    throw invalid_input("bivaluation: lattice does not match the measure's space");
  std::vector<Rational> mass(n);
  for (std::size_t s = 0; s < n; ++s) mass[s] = m.of_mask(static_cast<unsigned>(s));
  BiValuation w(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (mass[t].is_zero()) continue;
    for (std::size_t x = 0; x < n; ++x) w.set(x, t, mass[x & t] / mass[t]);
  }
  return w;
}

// d(a | t) = u(a v t) / u(t) for an antitone positive valuation u on a
// question lattice. Total: every pair is defined, d lies in (0, 1], and
// d(a | t) = 1 exactly when a <= t.
inline BiValuation relevance_bivaluation(const Valuation& u, const FiniteLattice& questions) {
  const std::size_t n = questions.size();
  if (u.value.size() != n) throw invalid_input("bivaluation: valuation does not match lattice");
  for (const auto& v : u.value)
    if (!(v > Rational(0))) throw invalid_input("bivaluation: valuation must be positive");
  BiValuation w(n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t a = 0; a < n; ++a) w.set(a, t, u.value[questions.join(a, t)] / u.value[t]);
  return w;
}

// Copy with one defined entry shifted by delta. The negative-control
// helper: a passing table stops passing.
inline BiValuation perturbed(const BiValuation& w, std::size_t element, std::size_t context,
                             const Rational& delta = Rational(1, 100)) {
  if (!w.defined(element, context))
    throw invalid_input("perturb: entry is undefined");
  BiValuation out = w;
  out.set(element, context, w.at(element, context) + delta);
  return out;
}

enum class LatticeSide { statements, questions };

inline const char* to_string(LatticeSide side) {
  return side == LatticeSide::statements ? "statements" : "questions";
}

// {"kind": ..., "atoms": [...], "elements": [...], "entries":
//  [{"x": "AB v C", "t": "A v B v C", "value": [4, 5]}, ...]}
// Entries are emitted context-major in element order; undefined pairs are
// omitted.
inline nlohmann::ordered_json bivaluation_to_json(const BiValuation& w, const FiniteLattice& l,
                                                  LatticeSide kind,
                                                  const HypothesisSpace& space) {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(kind);
  doc["atoms"] = space.atoms();
  doc["elements"] = l.poset().labels();
  auto& entries = doc["entries"] = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < w.size(); ++t) {
    for (std::size_t x = 0; x < w.size(); ++x) {
      if (!w.defined(x, t)) continue;
      const Rational& v = w.at(x, t);
      entries.push_back({{"x", l.label(x)}, {"t", l.label(t)}, {"value", {v.num(), v.den()}}});
    }
  }
  return doc;
}

// A bivaluation loaded from JSON together with the lattice it lives on,
// rebuilt from the recorded atoms.
struct LoadedBiValuation {
  LatticeSide kind;
  HypothesisSpace space;
  FiniteLattice lattice;
  BiValuation bivaluation;
  bool had_float_values = false;
};

inline LoadedBiValuation load_bivaluation(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("atoms") ||
      !doc.contains("entries"))
    throw invalid_input("bivaluation: expected object with kind, atoms and entries");
  const std::string kind_name = doc["kind"].get<std::string>();
  LatticeSide kind;
  if (kind_name == "statements")
    kind = LatticeSide::statements;
  else if (kind_name == "questions")
    kind = LatticeSide::questions;
  else
    throw invalid_input("bivaluation: unknown kind '" + kind_name + "'");

  HypothesisSpace space(doc["atoms"].get<std::vector<std::string>>());
  FiniteLattice lattice = kind == LatticeSide::statements
                              ? boolean_lattice(space)
                              : build_question_system(space).lattice;

  LoadedBiValuation out{kind, space, std::move(lattice), BiValuation(0), false};
  out.bivaluation = BiValuation(out.lattice.size());
  for (const auto& entry : doc["entries"]) {
    const std::size_t x = out.lattice.poset().index_of(entry.at("x").get<std::string>());
    const std::size_t t = out.lattice.poset().index_of(entry.at("t").get<std::string>());
    const auto& value = entry.at("value");
    Rational v;
    if (value.is_array() && value.size() == 2) {
      v = Rational(value[0].get<std::int64_t>(), value[1].get<std::int64_t>());
    } else if (value.is_number()) {
      v = Rational::from_decimal(value.get<double>());
      out.had_float_values = true;
    } else {
      throw invalid_input("bivaluation: entry value must be [num, den] or a number");
    }
    out.bivaluation.set(x, t, v);
  }
  return out;
}

}  // namespace inquiry
