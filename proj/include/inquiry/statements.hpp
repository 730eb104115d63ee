#pragma once

#include <bit>
#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "inquiry/errors.hpp"
#include "inquiry/lattice.hpp"
#include "inquiry/rational.hpp"

namespace inquiry {

inline constexpr int kMaxAtoms = 6;

// The hypothesis space: an ordered set of mutually exclusive atomic states.
// Atom names are single letters ('v' is reserved as the join separator in
// question expressions). Cheap to copy; two spaces compare equal iff their
// atom lists are identical.
class HypothesisSpace {
 public:
  explicit HypothesisSpace(const std::vector<std::string>& atom_names) {
    if (atom_names.empty()) throw invalid_input("space: no atoms given");
    if (atom_names.size() > static_cast<std::size_t>(kMaxAtoms))
      throw capacity_error("space: " + std::to_string(atom_names.size()) +
                           " atoms exceeds cap " + std::to_string(kMaxAtoms));
    std::vector<std::string> atoms;
    atoms.reserve(atom_names.size());
    for (const auto& name : atom_names) {
      if (name.size() != 1 || !std::isalpha(static_cast<unsigned char>(name[0])))
        throw invalid_input("space: atom name '" + name + "' must be a single letter");
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
      if (c == 'v')
        throw invalid_input("space: atom name 'v' is reserved for the join symbol");
      for (const auto& seen : atoms)
        if (seen[0] == c) throw invalid_input("space: duplicate atom '" + name + "'");
      atoms.push_back(std::string(1, c));
    }
    atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
  }

  int atom_count() const { return static_cast<int>(atoms_->size()); }
  unsigned top_mask() const { return (1u << atom_count()) - 1; }
  const std::vector<std::string>& atoms() const { return *atoms_; }

  // -1 when the letter names no atom. Case-insensitive.
  int atom_index_of_letter(char letter) const {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
    for (int i = 0; i < atom_count(); ++i)
      if ((*atoms_)[i][0] == c) return i;
    return -1;
  }

  friend bool operator==(const HypothesisSpace& a, const HypothesisSpace& b) {
    return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
  }
  friend bool operator!=(const HypothesisSpace& a, const HypothesisSpace& b) {
    return !(a == b);
  }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

inline HypothesisSpace make_space(const std::vector<std::string>& atom_names) {
  return HypothesisSpace(atom_names);
}

// A statement is a disjunction of atomic states, encoded as the subset of
// atoms it covers. The empty subset is the absurdity: representable, and
// the bottom of the statement lattice, but never a member of any answer
// set. Ordering is implication = subset inclusion of atom sets.
class Statement {
 public:
  Statement(HypothesisSpace space, unsigned atom_mask)
      : space_(std::move(space)), mask_(atom_mask) {
    if (mask_ > space_.top_mask()) throw invalid_input("statement: atom mask out of range");
  }

  const HypothesisSpace& space() const { return space_; }
  unsigned mask() const { return mask_; }
  bool is_absurdity() const { return mask_ == 0; }
  int atom_count() const { return std::popcount(mask_); }

  // "AB" for a+b, "0" for the absurdity.
  std::string name() const {
    if (mask_ == 0) return "0";
    std::string out;
    for (int i = 0; i < space_.atom_count(); ++i)
      if (mask_ >> i & 1u)
        out.push_back(
            static_cast<char>(std::toupper(static_cast<unsigned char>(space_.atoms()[i][0]))));
    return out;
  }

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.space_ == b.space_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const Statement& a, const Statement& b) { return !(a == b); }

 private:
  HypothesisSpace space_;
  unsigned mask_;
};

namespace detail {
inline void require_same_space(const HypothesisSpace& a, const HypothesisSpace& b,
                               const char* what) {
  if (a != b) throw invalid_input(std::string(what) + ": operands from different spaces");
}
}  // namespace detail

inline Statement statement(const HypothesisSpace& space,
                           const std::vector<std::string>& atom_subset) {
  unsigned mask = 0;
  for (const auto& name : atom_subset) {
    if (name.size() != 1) throw invalid_input("statement: unknown atom '" + name + "'");
    const int idx = space.atom_index_of_letter(name[0]);
    if (idx < 0) throw invalid_input("statement: unknown atom '" + name + "'");
    mask |= 1u << idx;
  }
  return Statement(space, mask);
}

// Inverse of Statement::name().
inline Statement statement_from_name(const HypothesisSpace& space, std::string_view name) {
  if (name == "0") return Statement(space, 0);
  unsigned mask = 0;
  for (char c : name) {
    const int idx = space.atom_index_of_letter(c);
    if (idx < 0)
      throw invalid_input("statement: unknown atom letter '" + std::string(1, c) + "'");
    mask |= 1u << idx;
  }
  if (name.empty()) throw invalid_input("statement: empty name");
  return Statement(space, mask);
}

// s1 implies s2 iff every atom of s1 is an atom of s2.
inline bool implies(const Statement& s1, const Statement& s2) {
  detail::require_same_space(s1.space(), s2.space(), "implies");
  return (s1.mask() & ~s2.mask()) == 0;
}

inline Statement meet_s(const Statement& a, const Statement& b) {
  detail::require_same_space(a.space(), b.space(), "meet");
  return Statement(a.space(), a.mask() & b.mask());
}

inline Statement join_s(const Statement& a, const Statement& b) {
  detail::require_same_space(a.space(), b.space(), "join");
  return Statement(a.space(), a.mask() | b.mask());
}

// The Boolean lattice of all 2^n statements ordered by implication.
// Element index i is the statement with atom mask i, so index 0 is the
// absurdity and index 2^n - 1 the truism.
inline FiniteLattice boolean_lattice(const HypothesisSpace& space) {
  const unsigned count = space.top_mask() + 1;
  std::vector<std::string> labels;
  labels.reserve(count);
  for (unsigned m = 0; m < count; ++m) labels.push_back(Statement(space, m).name());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (unsigned a = 0; a < count; ++a)
    for (unsigned b = 0; b < count; ++b)
      if (a != b && (a & ~b) == 0) pairs.emplace_back(labels[a], labels[b]);
  return lattice_from_poset(build_poset(labels, pairs));
}

// Strictly additive measure on statements: each atom carries a positive
// weight and a statement weighs the sum of its atoms. Not necessarily
// normalized; the truism weighs the normalization constant.
class ProbabilityMeasure {
 public:
  ProbabilityMeasure(HypothesisSpace space, std::vector<Rational> atom_weights)
      : space_(std::move(space)), weights_(std::move(atom_weights)) {
    if (weights_.size() != static_cast<std::size_t>(space_.atom_count()))
      throw invalid_input("measure: need exactly one weight per atom");
    for (const auto& w : weights_)
      if (!(w > Rational(0))) throw invalid_input("measure: atom weights must be positive");
  }

  static ProbabilityMeasure uniform(const HypothesisSpace& space) {
    return ProbabilityMeasure(
        space, std::vector<Rational>(space.atom_count(), Rational(1, space.atom_count())));
  }

  const HypothesisSpace& space() const { return space_; }
  const Rational& weight(int atom) const { return weights_[atom]; }

  Rational of_mask(unsigned mask) const {
    Rational sum = 0;
    for (int i = 0; i < space_.atom_count(); ++i)
      if (mask >> i & 1u) sum += weights_[i];
    return sum;
  }

  Rational total() const { return of_mask(space_.top_mask()); }

 private:
  HypothesisSpace space_;
  std::vector<Rational> weights_;
};

inline Rational measure(const ProbabilityMeasure& m, const Statement& s) {
  detail::require_same_space(m.space(), s.space(), "measure");
  return m.of_mask(s.mask());
}

// p(x | t) = m(x and t) / m(t). Undefined (throws) when the context has
// measure zero.
inline Rational conditional_probability(const ProbabilityMeasure& m, const Statement& x,
                                        const Statement& t) {
  detail::require_same_space(x.space(), t.space(), "conditional");
  detail::require_same_space(m.space(), t.space(), "conditional");
  const Rational mt = m.of_mask(t.mask());
  if (mt.is_zero()) throw invalid_input("conditional: context has measure zero");
  return m.of_mask(x.mask() & t.mask()) / mt;
}

// {"a": [1, 3], "b": [1, 3], ...}
inline nlohmann::ordered_json measure_to_json(const ProbabilityMeasure& m) {
  nlohmann::ordered_json doc;
  for (int i = 0; i < m.space().atom_count(); ++i)
    doc[m.space().atoms()[i]] = {m.weight(i).num(), m.weight(i).den()};
  return doc;
}

inline ProbabilityMeasure measure_from_json(const HypothesisSpace& space,
                                            const nlohmann::json& doc) {
  if (!doc.is_object()) throw invalid_input("measure: expected a JSON object");
  std::vector<Rational> weights(space.atom_count(), Rational(0));
  std::vector<bool> seen(space.atom_count(), false);
  for (const auto& [key, value] : doc.items()) {
    if (key.size() != 1) throw invalid_input("measure: unknown atom '" + key + "'");
    const int idx = space.atom_index_of_letter(key[0]);
    if (idx < 0) throw invalid_input("measure: unknown atom '" + key + "'");
    if (!value.is_array() || value.size() != 2)
      throw invalid_input("measure: weight for '" + key + "' must be [num, den]");
    weights[idx] = Rational(value[0].get<std::int64_t>(), value[1].get<std::int64_t>());
    seen[idx] = true;
  }
  for (int i = 0; i < space.atom_count(); ++i)
    if (!seen[i]) throw invalid_input("measure: missing weight for atom '" + space.atoms()[i] + "'");
  return ProbabilityMeasure(space, std::move(weights));
}

}  // namespace inquiry
